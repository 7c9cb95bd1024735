#include "spinframe/frames.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace spinframe {

UnitQuaternion HelicityFrame::to_canonical() const {
    return inverse(frame_to_quaternion(x, y, z));
}

HelicityFrame helicity_frame(const Vec3& p_current, const Vec3& p_other, std::string tag) {
    const Vec3 zc = unit(p_current);
    const Vec3 zo = unit(p_other);
    const Vec3 cross = zc.cross(zo);
    if (!(cross.norm() > EPS_GEOM)) {
        throw GeometryError("helicity frame undefined for collinear momenta");
    }
    const Vec3 y = cross.normalized();
    return {std::move(tag), y.cross(zc), y, zc};
}

Vec3 bisector_axis(const Vec3& p_a, const Vec3& p_b) {
    const Vec3 sum = unit(p_a) + unit(p_b);
    if (!(sum.norm() > EPS_GEOM)) {
        throw GeometryError("bisector undefined for antiparallel momenta");
    }
    return sum.normalized();
}

std::pair<double, double> cm_polar_relation(double theta_a, double phi_a) {
    constexpr double pi = std::numbers::pi;
    double phi_b = std::fmod(pi + phi_a, 2.0 * pi);
    if (phi_b < 0.0) {
        phi_b += 2.0 * pi;
    }
    return {pi - theta_a, phi_b};
}

double triad_residual(const UnitQuaternion& r, const HelicityFrame& from, const HelicityFrame& to) {
    const Mat3 m = to_matrix3(r);
    return std::max({(m * from.x - to.x).cwiseAbs().maxCoeff(),
                     (m * from.y - to.y).cwiseAbs().maxCoeff(),
                     (m * from.z - to.z).cwiseAbs().maxCoeff()});
}

double orthonormality_residual(const HelicityFrame& f) {
    Mat3 r;
    r.col(0) = f.x;
    r.col(1) = f.y;
    r.col(2) = f.z;
    const double ortho = (r.transpose() * r - Mat3::Identity()).cwiseAbs().maxCoeff();
    return std::max(ortho, std::abs(r.determinant() - 1.0));
}

UnitQuaternion relative_rotation(const HelicityFrame& frame_b, const HelicityFrame& frame_a,
                                 Sheet sheet) {
    const Vec3 k = bisector_axis(frame_b.z, frame_a.z);
    // exact half turn, w = 0
    const double sg = sign_of(sheet);
    const UnitQuaternion r = UnitQuaternion::normalized(0.0, sg * k.x(), sg * k.y(), sg * k.z());
    if (triad_residual(r, frame_b, frame_a) > EPS_GEOM) {
        throw GeometryError("pi rotation about the bisector does not map frame " + frame_b.tag +
                            " onto frame " + frame_a.tag);
    }
    return r;
}

}  // namespace spinframe
