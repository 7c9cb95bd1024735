#pragma once

// Helicity frames of a momentum pair and the relative rotation between them.

#include <string>
#include <utility>

#include "spinframe/rotations.hpp"

namespace spinframe {

/// Orthonormal right-handed triad; z is along the particle's momentum.
struct HelicityFrame {
    std::string tag;
    Vec3 x;
    Vec3 y;
    Vec3 z;

    /// Representative rotation carrying this frame onto the canonical axes
    /// (the inverse of frame_to_quaternion's branch choice).
    [[nodiscard]] UnitQuaternion to_canonical() const;
};

/// Sheet selector for a +pi or -pi turn about the bisector. Never defaulted.
enum class Sheet : int { Plus = 1, Minus = -1 };

[[nodiscard]] constexpr int sign_of(Sheet s) noexcept { return static_cast<int>(s); }

/// z = p_current-hat, y = p_current-hat x p_other-hat normalized, x = y cross z.
///
/// Throws GeometryError("helicity frame undefined for collinear momenta")
/// when the two momenta are parallel or antiparallel within EPS_GEOM, and a
/// GeometryError for a zero momentum.
[[nodiscard]] HelicityFrame helicity_frame(const Vec3& p_current, const Vec3& p_other,
                                           std::string tag);

/// Unit vector along p_a-hat + p_b-hat. Throws GeometryError when antiparallel.
[[nodiscard]] Vec3 bisector_axis(const Vec3& p_a, const Vec3& p_b);

/// (pi - theta_a, (pi + phi_a) mod 2pi): polar angles of the partner
/// momentum in the centre-of-mass frame.
[[nodiscard]] std::pair<double, double> cm_polar_relation(double theta_a, double phi_a);

/// R_ba = rotation by sheet*pi about the bisector of the two frames' z axes.
///
/// Both sheets carry frame_b's triad onto frame_a's; they differ by the
/// quaternion sign. Throws GeometryError on a frame mismatch (the two frames
/// were not built from the same momentum pair).
[[nodiscard]] UnitQuaternion relative_rotation(const HelicityFrame& frame_b,
                                               const HelicityFrame& frame_a, Sheet sheet);

/// Largest component error of R applied to `from`'s axes against `to`'s axes.
[[nodiscard]] double triad_residual(const UnitQuaternion& r, const HelicityFrame& from,
                                    const HelicityFrame& to);

/// Largest deviation of the triad from orthonormal right-handedness.
[[nodiscard]] double orthonormality_residual(const HelicityFrame& f);

}  // namespace spinframe
