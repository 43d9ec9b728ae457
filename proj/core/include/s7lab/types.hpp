#pragma once

#include <Eigen/Dense>
#include <gmpxx.h>

namespace s7lab {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Vec7 = Eigen::Matrix<double, 7, 1>;
using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat7 = Eigen::Matrix<double, 7, 7>;
using Mat8 = Eigen::Matrix<double, 8, 8>;

using Mat4i = Eigen::Matrix<int, 4, 4>;
using Mat8i = Eigen::Matrix<int, 8, 8>;

using Rational = mpq_class;

}  // namespace s7lab
