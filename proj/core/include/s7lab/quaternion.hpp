#pragma once

#include "s7lab/types.hpp"

namespace s7lab {

// w + x i + y j + z k, identified with (w, x, y, z) in R^4.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    static Quaternion from_vector(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }
    Vec4 to_vector() const { return {w, x, y, z}; }

    Quaternion conj() const { return {w, -x, -y, -z}; }
    double norm_sq() const { return w * w + x * x + y * y + z * z; }

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend Quaternion operator*(double s, const Quaternion& q) { return {s * q.w, s * q.x, s * q.y, s * q.z}; }
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
    friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

enum class Unit { I, J, K };

// 4x4 integer matrices of q -> u q and q -> q u for a unit u in {i, j, k}.
Mat4i left_unit_matrix(Unit u);
Mat4i right_unit_matrix(Unit u);

// Real matrices of q -> p q and q -> q p.
Mat4 left_mult_matrix(const Quaternion& p);
Mat4 right_mult_matrix(const Quaternion& p);

}  // namespace s7lab
