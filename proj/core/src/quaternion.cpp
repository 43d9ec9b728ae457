#include "s7lab/quaternion.hpp"

namespace s7lab {

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Mat4 left_mult_matrix(const Quaternion& p) {
    Mat4 m;
    m << p.w, -p.x, -p.y, -p.z,
         p.x,  p.w, -p.z,  p.y,
         p.y,  p.z,  p.w, -p.x,
         p.z, -p.y,  p.x,  p.w;
    return m;
}

Mat4 right_mult_matrix(const Quaternion& p) {
    Mat4 m;
    m << p.w, -p.x, -p.y, -p.z,
         p.x,  p.w,  p.z, -p.y,
         p.y, -p.z,  p.w,  p.x,
         p.z,  p.y, -p.x,  p.w;
    return m;
}

namespace {

Quaternion unit_quaternion(Unit u) {
    switch (u) {
        case Unit::I: return {0, 1, 0, 0};
        case Unit::J: return {0, 0, 1, 0};
        case Unit::K: return {0, 0, 0, 1};
    }
    return {};
}

}  // namespace

Mat4i left_unit_matrix(Unit u) { return left_mult_matrix(unit_quaternion(u)).cast<int>(); }
Mat4i right_unit_matrix(Unit u) { return right_mult_matrix(unit_quaternion(u)).cast<int>(); }

}  // namespace s7lab
