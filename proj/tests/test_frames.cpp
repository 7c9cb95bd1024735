#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "spinframe/frames.hpp"

using namespace spinframe;
using std::numbers::pi;

namespace {

double vdiff(const Vec3& a, const Vec3& b) { return (a - b).cwiseAbs().maxCoeff(); }

Vec3 random_momentum(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> mag(0.1, 10.0);
    return mag(rng) * Vec3{g(rng), g(rng), g(rng)}.normalized();
}

const double r2 = std::sqrt(0.5);

}  // namespace

TEST_CASE("helicity_frame symmetric pair in the xz plane") {
    const Vec3 pa{r2, 0, r2}, pb{-r2, 0, r2};
    const auto ha = helicity_frame(pa, pb, "a");
    const auto hb = helicity_frame(pb, pa, "b");
    CHECK(vdiff(ha.z, pa) < 1e-15);
    CHECK(vdiff(ha.y, {0, -1, 0}) < 1e-15);
    CHECK(vdiff(hb.y, {0, 1, 0}) < 1e-15);
    CHECK(vdiff(ha.x, {-r2, 0, r2}) < 1e-15);
    CHECK(vdiff(hb.x, {r2, 0, r2}) < 1e-15);
    CHECK(ha.tag == "a");
    CHECK(orthonormality_residual(ha) < 1e-15);
}

TEST_CASE("helicity_frame orthogonal axes") {
    const auto ha = helicity_frame({1, 0, 0}, {0, 1, 0}, "a");
    CHECK(vdiff(ha.z, {1, 0, 0}) < 1e-15);
    CHECK(vdiff(ha.y, {0, 0, 1}) < 1e-15);
    CHECK(vdiff(ha.x, {0, 1, 0}) < 1e-15);
    // magnitudes do not matter
    const auto hb = helicity_frame({5, 0, 0}, {0, 0.1, 0}, "a");
    CHECK(vdiff(hb.y, ha.y) < 1e-15);
}

TEST_CASE("helicity_frame collinear and degenerate input") {
    CHECK_THROWS_WITH_AS((void)helicity_frame({0, 0, 1}, {0, 0, 2}, "a"),
                         "helicity frame undefined for collinear momenta", GeometryError);
    CHECK_THROWS_WITH_AS((void)helicity_frame({0, 0, 1}, {0, 0, -3}, "a"),
                         "helicity frame undefined for collinear momenta", GeometryError);
    CHECK_THROWS_AS((void)helicity_frame({0, 0, 0}, {0, 0, 1}, "a"), GeometryError);
    CHECK_THROWS_AS((void)helicity_frame({1, 0, 0}, {1, 1e-12, 0}, "a"), GeometryError);
}

TEST_CASE("bisector_axis") {
    CHECK(vdiff(bisector_axis({r2, 0, r2}, {-r2, 0, r2}), {0, 0, 1}) < 1e-15);
    CHECK(vdiff(bisector_axis({2, 0, 0}, {0, 1, 0}), {r2, r2, 0}) < 1e-15);
    CHECK_THROWS_AS((void)bisector_axis({1, 0, 0}, {-2, 0, 0}), GeometryError);
}

TEST_CASE("cm_polar_relation") {
    auto [t, p] = cm_polar_relation(pi / 4, 0.0);
    CHECK(t == doctest::Approx(3 * pi / 4));
    CHECK(p == doctest::Approx(pi));
    std::tie(t, p) = cm_polar_relation(pi / 3, 3 * pi / 2);
    CHECK(t == doctest::Approx(2 * pi / 3));
    CHECK(p == doctest::Approx(pi / 2));
    std::tie(t, p) = cm_polar_relation(0.0, -pi);
    CHECK(t == doctest::Approx(pi));
    CHECK(p == doctest::Approx(0.0));
}

TEST_CASE("cm_polar_relation reproduces the back-to-back momentum") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> th(0.0, pi), ph(-2 * pi, 4 * pi);
    const auto dir = [](double t, double p) {
        return Vec3{std::sin(t) * std::cos(p), std::sin(t) * std::sin(p), std::cos(t)};
    };
    for (int trial = 0; trial < 500; ++trial) {
        const double t = th(rng), p = ph(rng);
        const auto [tb, pb] = cm_polar_relation(t, p);
        CHECK(pb >= 0.0);
        CHECK(pb < 2 * pi);
        CHECK(vdiff(dir(tb, pb), -dir(t, p)) < 1e-12);
    }
}

TEST_CASE("relative_rotation on the symmetric pair") {
    const Vec3 pa{r2, 0, r2}, pb{-r2, 0, r2};
    const auto ha = helicity_frame(pa, pb, "a");
    const auto hb = helicity_frame(pb, pa, "b");
    const auto plus = relative_rotation(hb, ha, Sheet::Plus);
    const auto minus = relative_rotation(hb, ha, Sheet::Minus);
    CHECK(plus.approx_equal(UnitQuaternion{0, 0, 0, 1}));
    CHECK(minus.approx_equal(UnitQuaternion{0, 0, 0, -1}));
    CHECK(vdiff(rotate(plus, hb.y), ha.y) < 1e-15);
    CHECK(vdiff(rotate(plus, hb.z), ha.z) < 1e-15);
    CHECK(triad_residual(plus, hb, ha) < 1e-15);

    HelicityFrame wrong = hb;
    wrong.y = -wrong.y;
    wrong.x = -wrong.x;
    CHECK_THROWS_AS((void)relative_rotation(wrong, ha, Sheet::Plus), GeometryError);
}

TEST_CASE("relative_rotation random momentum pairs") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 1000; ++trial) {
        const Vec3 pa = random_momentum(rng), pb = random_momentum(rng);
        const auto ha = helicity_frame(pa, pb, "a");
        const auto hb = helicity_frame(pb, pa, "b");
        CHECK(orthonormality_residual(ha) < 1e-12);
        CHECK(orthonormality_residual(hb) < 1e-12);
        CHECK(vdiff(ha.y, -hb.y) < 1e-12);

        const auto plus = relative_rotation(hb, ha, Sheet::Plus);
        const auto minus = relative_rotation(hb, ha, Sheet::Minus);
        CHECK(triad_residual(plus, hb, ha) < 1e-9);
        CHECK(triad_residual(minus, hb, ha) < 1e-9);
        CHECK(minus.approx_equal(-plus));
        CHECK(std::abs(plus.w()) < 1e-12);

        // the turn back is the same half turn; the round trip lands on -1
        const auto back = relative_rotation(ha, hb, Sheet::Plus);
        CHECK(back.approx_equal(plus));
        CHECK(compose(back, plus).approx_equal(-UnitQuaternion::identity()));

        // R_ba equals H_a^T-side composition of the frame rotations up to sign
        const auto via_frames = compose(inverse(ha.to_canonical()), hb.to_canonical());
        CHECK((via_frames.approx_equal(plus) || via_frames.approx_equal(minus)));
    }
}
