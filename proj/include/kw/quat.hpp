#pragma once

// Quaternion algebra over doubles. Points of R^4 are identified with
// quaternions x = w + xI + yJ + zK; su(2) is identified with the imaginary
// part. Everything here is a plain value type with pure operations.

#include <array>
#include <cmath>

namespace kw {

struct Quaternion;

// Imaginary quaternion, i.e. an su(2) element xI + yJ + zK.
struct ImQuaternion {
    double x = 0.0, y = 0.0, z = 0.0;

    constexpr ImQuaternion operator+(const ImQuaternion& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr ImQuaternion operator-(const ImQuaternion& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr ImQuaternion operator-() const { return {-x, -y, -z}; }
    constexpr ImQuaternion operator*(double s) const { return {x * s, y * s, z * s}; }
    ImQuaternion& operator+=(const ImQuaternion& o) { x += o.x; y += o.y; z += o.z; return *this; }

    constexpr double norm_sq() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }

    constexpr Quaternion embed() const;
};

constexpr ImQuaternion operator*(double s, const ImQuaternion& q) { return q * s; }

constexpr double dot(const ImQuaternion& a, const ImQuaternion& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

struct Quaternion {
    // Coefficients in (1, I, J, K) order; this order is also the
    // serialization contract.
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    constexpr Quaternion operator+(const Quaternion& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
    constexpr Quaternion operator-(const Quaternion& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
    constexpr Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }

    // Hamilton product, I^2=J^2=K^2=-1, IJ=K, JK=I, KI=J.
    constexpr Quaternion operator*(const Quaternion& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }

    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
    constexpr ImQuaternion im() const { return {x, y, z}; }
    constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }

    constexpr std::array<double, 4> coords() const { return {w, x, y, z}; }
    // Coordinate basis e_1=1, e_2=I, e_3=J, e_4=K.
    static constexpr Quaternion unit(int i) {
        return {i == 0 ? 1.0 : 0.0, i == 1 ? 1.0 : 0.0, i == 2 ? 1.0 : 0.0, i == 3 ? 1.0 : 0.0};
    }
};

constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

constexpr Quaternion ImQuaternion::embed() const { return {0.0, x, y, z}; }

constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) { return a * b; }
constexpr Quaternion conj(const Quaternion& q) { return q.conj(); }
constexpr ImQuaternion im(const Quaternion& q) { return q.im(); }

// [a,b] = ab - ba, imaginary again (twice the cross product).
constexpr ImQuaternion commutator(const ImQuaternion& a, const ImQuaternion& b) {
    return {2.0 * (a.y * b.z - a.z * b.y),
            2.0 * (a.z * b.x - a.x * b.z),
            2.0 * (a.x * b.y - a.y * b.x)};
}

}  // namespace kw
