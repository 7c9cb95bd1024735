#pragma once

// Rotations as elements of the double cover SU(2) of SO(3).
//
// A UnitQuaternion q and its negation -q project onto the same 3x3 rotation
// but differ by a 2pi rotation, which flips the sign of half-integer spin
// states. Nothing in this module ever canonicalizes the sign of q.

#include <Eigen/Dense>

#include "spinframe/exactnum.hpp"

namespace spinframe {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Tolerance for geometric degeneracy (zero vectors, collinearity).
inline constexpr double EPS_GEOM = 1e-9;

/// Degenerate or inconsistent geometric input.
class GeometryError : public SpinframeError {
public:
    using SpinframeError::SpinframeError;
};

/// v / |v|. Throws GeometryError when |v| <= EPS_GEOM.
[[nodiscard]] Vec3 unit(const Vec3& v);

class UnitQuaternion {
public:
    /// The identity (null rotation).
    constexpr UnitQuaternion() = default;

    /// Checks w^2+x^2+y^2+z^2 = 1 within EPS; does not rescale.
    UnitQuaternion(double w, double x, double y, double z);

    /// Rescales an arbitrary non-zero 4-vector onto the unit sphere.
    [[nodiscard]] static UnitQuaternion normalized(double w, double x, double y, double z);

    [[nodiscard]] static constexpr UnitQuaternion identity() { return {}; }

    [[nodiscard]] constexpr double w() const noexcept { return w_; }
    [[nodiscard]] constexpr double x() const noexcept { return x_; }
    [[nodiscard]] constexpr double y() const noexcept { return y_; }
    [[nodiscard]] constexpr double z() const noexcept { return z_; }
    [[nodiscard]] Vec3 vec() const { return {x_, y_, z_}; }

    /// The other sheet: same SO(3) rotation, composed with a 2pi turn.
    [[nodiscard]] UnitQuaternion operator-() const noexcept;

    /// Component-wise comparison; q and -q are never approximately equal.
    [[nodiscard]] bool approx_equal(const UnitQuaternion& other, double tol = EPS) const noexcept;

    /// Largest component-wise difference.
    [[nodiscard]] double distance(const UnitQuaternion& other) const noexcept;

private:
    struct Raw {};
    constexpr UnitQuaternion(Raw, double w, double x, double y, double z) noexcept
        : w_(w), x_(x), y_(y), z_(z) {}

    double w_ = 1.0;
    double x_ = 0.0;
    double y_ = 0.0;
    double z_ = 0.0;

    friend UnitQuaternion compose(const UnitQuaternion&, const UnitQuaternion&);
    friend UnitQuaternion inverse(const UnitQuaternion&) noexcept;
};

/// (cos(angle/2), sin(angle/2) * axis-hat). Period 4pi; angle = 2pi gives -identity.
///
/// Accepts angle in [-4pi, 4pi]; throws GeometryError for a zero axis and
/// BoundExceeded for an angle outside that range.
[[nodiscard]] UnitQuaternion from_axis_angle(const Vec3& axis, double angle);

/// Hamilton product q1*q2: the rotation that applies q2 first, then q1.
/// The result is renormalized; its sign is whatever the algebra gives.
[[nodiscard]] UnitQuaternion compose(const UnitQuaternion& q1, const UnitQuaternion& q2);

/// Conjugate. compose(q, inverse(q)) is +identity, never -identity.
[[nodiscard]] UnitQuaternion inverse(const UnitQuaternion& q) noexcept;

/// Projection onto SO(3). to_matrix3(q) == to_matrix3(-q).
[[nodiscard]] Mat3 to_matrix3(const UnitQuaternion& q);

/// Rotates v by q (through the SO(3) projection).
[[nodiscard]] Vec3 rotate(const UnitQuaternion& q, const Vec3& v);

/// Representative rotation taking the standard basis onto the given triad.
///
/// Axes alone cannot select a sheet of the double cover. The representative
/// returned has w > 0; when w vanishes (within EPS) the first non-vanishing
/// component among z, y, x is made positive. Callers wanting the other sheet
/// negate the result. Throws GeometryError when the triad is not orthonormal
/// and right-handed within EPS_GEOM.
[[nodiscard]] UnitQuaternion frame_to_quaternion(const Vec3& x_axis, const Vec3& y_axis,
                                                 const Vec3& z_axis);

}  // namespace spinframe
