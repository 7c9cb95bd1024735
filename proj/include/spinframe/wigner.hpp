#pragma once

// Wigner D-matrices over the double cover, and Clebsch-Gordan coefficients.

#include <map>
#include <tuple>

#include <Eigen/Dense>

#include "spinframe/exactnum.hpp"
#include "spinframe/rotations.hpp"

namespace spinframe {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Largest 2s accepted by wigner_D.
inline constexpr int MAX_TWICE_SPIN = 12;

/// D^s(q) with rows m' and columns m, both in m_range(s) order (descending).
///
/// D_{m'm}(q) = <s m'| U(q) |s m>. For spin 1/2 this is the SU(2) matrix of
/// q itself.
class WignerMatrix {
public:
    WignerMatrix(TwiceSpin s, CMatrix entries);

    [[nodiscard]] TwiceSpin spin() const noexcept { return s_; }
    [[nodiscard]] const CMatrix& matrix() const noexcept { return entries_; }
    [[nodiscard]] Complex operator()(TwiceM row, TwiceM col) const;
    /// Column m: the image of |s m> in the |s m'> basis.
    [[nodiscard]] CVector column(TwiceM m) const;

    [[nodiscard]] bool is_unitary(double tol = 1e-10) const;

private:
    TwiceSpin s_;
    CMatrix entries_;
};

/// Cayley-Klein parameters a = w - iz, b = -y - ix of q; U(q) = [[a, b], [-b*, a*]].
[[nodiscard]] std::pair<Complex, Complex> cayley_klein(const UnitQuaternion& q) noexcept;

/// Every entry is a homogeneous polynomial of degree 2s in (a, a*, b, b*), so
/// wigner_D(s, -q) = (-1)^{2s} wigner_D(s, q) holds structurally.
/// Throws BoundExceeded for 2s > max_twice.
[[nodiscard]] WignerMatrix wigner_D(TwiceSpin s, const UnitQuaternion& q,
                                    int max_twice = MAX_TWICE_SPIN);

/// Condon-Shortley <s1 m1; s2 m2 | S M>, returned as a double.
///
/// Zero when |m| > s, M != m1+m2 or the triangle rule fails. Throws
/// InvalidLabel when a component's parity disagrees with its spin or when
/// 2S and 2s1+2s2 have different parity.
[[nodiscard]] double clebsch_gordan(TwiceSpin s1, TwiceSpin s2, TwiceM m1, TwiceM m2, TwiceSpin S,
                                    TwiceM M);

/// Squared coefficient as an exact rational, with the coefficient's sign.
struct ExactClebschGordan {
    Rational squared;
    int sign = 0;  // -1, 0 or +1
};
[[nodiscard]] ExactClebschGordan clebsch_gordan_exact(TwiceSpin s1, TwiceSpin s2, int m1_twice,
                                                      int m2_twice, TwiceSpin S, int M_twice);

/// All coefficients for fixed s1, s2, keyed by (2m1, 2m2, 2S, 2M); only
/// non-zero entries are stored.
class CGTable {
public:
    using Key = std::tuple<int, int, int, int>;

    CGTable(TwiceSpin s1, TwiceSpin s2);

    [[nodiscard]] TwiceSpin s1() const noexcept { return s1_; }
    [[nodiscard]] TwiceSpin s2() const noexcept { return s2_; }
    [[nodiscard]] double at(int m1_twice, int m2_twice, int S_twice, int M_twice) const;
    [[nodiscard]] const std::map<Key, double>& entries() const noexcept { return entries_; }
    /// Allowed 2S values, ascending.
    [[nodiscard]] std::vector<TwiceSpin> couplings() const;

private:
    TwiceSpin s1_;
    TwiceSpin s2_;
    std::map<Key, double> entries_;
};

/// Sign sigma with CG(s,s; m2,m1 | S,M) = sigma * CG(s,s; m1,m2 | S,M),
/// which is (-1)^{2s - S}. S must be an integer in [0, 2s].
[[nodiscard]] int exchange_symmetry_sign(TwiceSpin s, TwiceSpin S);

}  // namespace spinframe
