#include "spinframe/rotations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace spinframe {

Vec3 unit(const Vec3& v) {
    const double n = v.norm();
    if (!(n > EPS_GEOM)) {
        throw GeometryError("cannot normalize a vector of norm <= EPS_GEOM");
    }
    return v / n;
}

UnitQuaternion::UnitQuaternion(double w, double x, double y, double z)
    : w_(w), x_(x), y_(y), z_(z) {
    const double n2 = w * w + x * x + y * y + z * z;
    if (!(std::abs(n2 - 1.0) <= EPS)) {
        throw GeometryError("quaternion is not unit within EPS");
    }
}

UnitQuaternion UnitQuaternion::normalized(double w, double x, double y, double z) {
    const double n = std::sqrt(w * w + x * x + y * y + z * z);
    if (!(n > EPS_GEOM)) {
        throw GeometryError("cannot normalize a zero quaternion");
    }
    return {Raw{}, w / n, x / n, y / n, z / n};
}

UnitQuaternion UnitQuaternion::operator-() const noexcept {
    return {Raw{}, -w_, -x_, -y_, -z_};
}

double UnitQuaternion::distance(const UnitQuaternion& other) const noexcept {
    return std::max({std::abs(w_ - other.w_), std::abs(x_ - other.x_), std::abs(y_ - other.y_),
                     std::abs(z_ - other.z_)});
}

bool UnitQuaternion::approx_equal(const UnitQuaternion& other, double tol) const noexcept {
    return distance(other) <= tol;
}

UnitQuaternion from_axis_angle(const Vec3& axis, double angle) {
    constexpr double kLimit = 4.0 * std::numbers::pi;
    if (!(std::abs(angle) <= kLimit * (1.0 + 1e-15))) {
        throw BoundExceeded("rotation angle outside [-4pi, 4pi]");
    }
    const Vec3 n = unit(axis);
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    return UnitQuaternion::normalized(c, s * n.x(), s * n.y(), s * n.z());
}

UnitQuaternion compose(const UnitQuaternion& a, const UnitQuaternion& b) {
    const double w = a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ - a.z_ * b.z_;
    const double x = a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ - a.z_ * b.y_;
    const double y = a.w_ * b.y_ - a.x_ * b.z_ + a.y_ * b.w_ + a.z_ * b.x_;
    const double z = a.w_ * b.z_ + a.x_ * b.y_ - a.y_ * b.x_ + a.z_ * b.w_;
    return UnitQuaternion::normalized(w, x, y, z);
}

UnitQuaternion inverse(const UnitQuaternion& q) noexcept {
    return {UnitQuaternion::Raw{}, q.w_, -q.x_, -q.y_, -q.z_};
}

Mat3 to_matrix3(const UnitQuaternion& q) {
    const double w = q.w(), x = q.x(), y = q.y(), z = q.z();
    Mat3 m;
    m << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
        2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
        2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
    return m;
}

Vec3 rotate(const UnitQuaternion& q, const Vec3& v) {
    return to_matrix3(q) * v;
}

UnitQuaternion frame_to_quaternion(const Vec3& x_axis, const Vec3& y_axis, const Vec3& z_axis) {
    Mat3 r;
    r.col(0) = x_axis;
    r.col(1) = y_axis;
    r.col(2) = z_axis;
    if ((r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff() > EPS_GEOM) {
        throw GeometryError("frame triad is not orthonormal");
    }
    if (r.determinant() < 0.0) {
        throw GeometryError("frame triad is left-handed");
    }

    // Shepperd: pivot on the largest of 4w^2, 4x^2, 4y^2, 4z^2.
    const double tr = r.trace();
    const std::array<double, 4> diag{tr, r(0, 0), r(1, 1), r(2, 2)};
    const auto pivot = static_cast<int>(std::max_element(diag.begin(), diag.end()) - diag.begin());
    double w = 0, x = 0, y = 0, z = 0;
    switch (pivot) {
        case 0: {
            const double s = 2.0 * std::sqrt(1.0 + tr);
            w = 0.25 * s;
            x = (r(2, 1) - r(1, 2)) / s;
            y = (r(0, 2) - r(2, 0)) / s;
            z = (r(1, 0) - r(0, 1)) / s;
            break;
        }
        case 1: {
            const double s = 2.0 * std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2));
            w = (r(2, 1) - r(1, 2)) / s;
            x = 0.25 * s;
            y = (r(0, 1) + r(1, 0)) / s;
            z = (r(0, 2) + r(2, 0)) / s;
            break;
        }
        case 2: {
            const double s = 2.0 * std::sqrt(1.0 - r(0, 0) + r(1, 1) - r(2, 2));
            w = (r(0, 2) - r(2, 0)) / s;
            x = (r(0, 1) + r(1, 0)) / s;
            y = 0.25 * s;
            z = (r(1, 2) + r(2, 1)) / s;
            break;
        }
        default: {
            const double s = 2.0 * std::sqrt(1.0 - r(0, 0) - r(1, 1) + r(2, 2));
            w = (r(1, 0) - r(0, 1)) / s;
            x = (r(0, 2) + r(2, 0)) / s;
            y = (r(1, 2) + r(2, 1)) / s;
            z = 0.25 * s;
            break;
        }
    }

    // Branch rule: first component among (w, z, y, x) that is not ~0 is positive.
    for (const double c : {w, z, y, x}) {
        if (std::abs(c) > EPS) {
            if (c < 0.0) {
                w = -w;
                x = -x;
                y = -y;
                z = -z;
            }
            break;
        }
    }
    if (std::abs(w) <= EPS) {
        w = 0.0;
    }
    return UnitQuaternion::normalized(w, x, y, z);
}

}  // namespace spinframe
