#include "spinframe/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace spinframe {

namespace {

Complex ipow(Complex base, int e) {
    Complex r{1.0, 0.0};
    for (int k = 0; k < e; ++k) {
        r *= base;
    }
    return r;
}

// Factorial of a twice-value sum; the argument is always an even integer >= 0.
BigInt fact_half(int twice_value) {
    return factorial_exact(twice_value / 2);
}

}  // namespace

WignerMatrix::WignerMatrix(TwiceSpin s, CMatrix entries) : s_(s), entries_(std::move(entries)) {
    if (entries_.rows() != s.dim() || entries_.cols() != s.dim()) {
        throw InvalidLabel("Wigner matrix dimension does not match 2s+1");
    }
}

Complex WignerMatrix::operator()(TwiceM row, TwiceM col) const {
    return entries_(m_index(s_, row), m_index(s_, col));
}

CVector WignerMatrix::column(TwiceM m) const {
    return entries_.col(m_index(s_, m));
}

bool WignerMatrix::is_unitary(double tol) const {
    const auto n = entries_.rows();
    return ((entries_.adjoint() * entries_) - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() <= tol;
}

std::pair<Complex, Complex> cayley_klein(const UnitQuaternion& q) noexcept {
    return {Complex{q.w(), -q.z()}, Complex{-q.y(), -q.x()}};
}

WignerMatrix wigner_D(TwiceSpin s, const UnitQuaternion& q, int max_twice) {
    if (s.twice() > max_twice) {
        throw BoundExceeded("Wigner D requested for 2s=" + std::to_string(s.twice()) +
                            " above bound " + std::to_string(max_twice));
    }
    const auto [a, b] = cayley_klein(q);
    const Complex ac = std::conj(a);
    const Complex mbc = -std::conj(b);
    const int J = s.twice();
    const int n = s.dim();

    // With |m> ~ x^{j+m} y^{j-m} / sqrt((j+m)!(j-m)!) and x -> a x - b* y,
    // y -> b x + a* y:
    //   D_{m'm} = sum_r sqrt((j+m')!(j-m')!(j+m)!(j-m)!)
    //             / (r! (j+m-r)! (j-m'-r)! (m'-m+r)!)
    //             * a^{j+m-r} (-b*)^r b^{m'-m+r} (a*)^{j-m'-r}
    CMatrix d = CMatrix::Zero(n, n);
    for (int row = 0; row < n; ++row) {
        const int mp = J - 2 * row;  // 2m'
        for (int col = 0; col < n; ++col) {
            const int m = J - 2 * col;  // 2m
            const int jpm = (J + m) / 2, jmm = (J - m) / 2;
            const int jpmp = (J + mp) / 2, jmmp = (J - mp) / 2;
            const int shift = (mp - m) / 2;
            const BigInt radicand = factorial_exact(jpmp) * factorial_exact(jmmp) *
                                    factorial_exact(jpm) * factorial_exact(jmm);
            const double root = std::sqrt(radicand.convert_to<double>());
            Complex sum{0.0, 0.0};
            const int r_lo = std::max(0, -shift);
            const int r_hi = std::min(jpm, jmmp);
            for (int r = r_lo; r <= r_hi; ++r) {
                const BigInt denom = factorial_exact(r) * factorial_exact(jpm - r) *
                                     factorial_exact(jmmp - r) * factorial_exact(shift + r);
                const double coef = root / denom.convert_to<double>();
                sum += coef * ipow(a, jpm - r) * ipow(mbc, r) * ipow(b, shift + r) *
                       ipow(ac, jmmp - r);
            }
            d(row, col) = sum;
        }
    }
    return {s, std::move(d)};
}

ExactClebschGordan clebsch_gordan_exact(TwiceSpin s1, TwiceSpin s2, int m1, int m2, TwiceSpin S,
                                        int M) {
    const int j1 = s1.twice(), j2 = s2.twice(), J = S.twice();
    if ((j1 - m1) % 2 != 0 || (j2 - m2) % 2 != 0 || (J - M) % 2 != 0) {
        throw InvalidLabel("Clebsch-Gordan component parity does not match its spin");
    }
    if ((j1 + j2 - J) % 2 != 0) {
        throw InvalidLabel("Clebsch-Gordan coupling 2S=" + std::to_string(J) +
                           " has the wrong parity for 2s1+2s2=" + std::to_string(j1 + j2));
    }
    if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(M) > J || M != m1 + m2 ||
        J < std::abs(j1 - j2) || J > j1 + j2) {
        return {Rational{0}, 0};
    }

    // Racah's closed form; every factorial argument below is (sum of twice-values)/2.
    const Rational prefactor =
        Rational{BigInt{J + 1} * fact_half(J + j1 - j2) * fact_half(J - j1 + j2) *
                     fact_half(j1 + j2 - J),
                 fact_half(j1 + j2 + J + 2)} *
        Rational{fact_half(J + M) * fact_half(J - M) * fact_half(j1 - m1) * fact_half(j1 + m1) *
                 fact_half(j2 - m2) * fact_half(j2 + m2)};

    const int k_lo = std::max({0, (j2 - J - m1) / 2, (j1 - J + m2) / 2});
    const int k_hi = std::min({(j1 + j2 - J) / 2, (j1 - m1) / 2, (j2 + m2) / 2});
    Rational sum{0};
    for (int k = k_lo; k <= k_hi; ++k) {
        const BigInt denom = factorial_exact(k) * factorial_exact((j1 + j2 - J) / 2 - k) *
                             factorial_exact((j1 - m1) / 2 - k) *
                             factorial_exact((j2 + m2) / 2 - k) *
                             factorial_exact((J - j2 + m1) / 2 + k) *
                             factorial_exact((J - j1 - m2) / 2 + k);
        const Rational term{BigInt{1}, denom};
        sum += (k % 2 == 0) ? term : Rational{-term};
    }
    const int sign = sum > 0 ? 1 : (sum < 0 ? -1 : 0);
    return {prefactor * sum * sum, sign};
}

double clebsch_gordan(TwiceSpin s1, TwiceSpin s2, TwiceM m1, TwiceM m2, TwiceSpin S, TwiceM M) {
    const auto exact = clebsch_gordan_exact(s1, s2, m1.twice(), m2.twice(), S, M.twice());
    if (exact.sign == 0) {
        return 0.0;
    }
    return exact.sign * std::sqrt(to_double(exact.squared));
}

CGTable::CGTable(TwiceSpin s1, TwiceSpin s2) : s1_(s1), s2_(s2) {
    for (const TwiceSpin S : couplings()) {
        for (const TwiceM M : m_range(S)) {
            for (const TwiceM m1 : m_range(s1)) {
                const int m2 = M.twice() - m1.twice();
                if (!is_valid_component(s2, m2)) {
                    continue;
                }
                const double c = clebsch_gordan(s1, s2, m1, TwiceM{s2, m2}, S, M);
                if (c != 0.0) {
                    entries_.emplace(Key{m1.twice(), m2, S.twice(), M.twice()}, c);
                }
            }
        }
    }
}

double CGTable::at(int m1, int m2, int S, int M) const {
    const auto it = entries_.find(Key{m1, m2, S, M});
    return it == entries_.end() ? 0.0 : it->second;
}

std::vector<TwiceSpin> CGTable::couplings() const {
    std::vector<TwiceSpin> out;
    for (int J = std::abs(s1_.twice() - s2_.twice()); J <= s1_.twice() + s2_.twice(); J += 2) {
        out.emplace_back(J);
    }
    return out;
}

int exchange_symmetry_sign(TwiceSpin s, TwiceSpin S) {
    if (S.twice() % 2 != 0 || S.twice() > 2 * s.twice()) {
        throw InvalidLabel("two equal spins 2s=" + std::to_string(s.twice()) +
                           " cannot couple to 2S=" + std::to_string(S.twice()));
    }
    return neg_one_pow(s.twice() - S.twice() / 2);
}

}  // namespace spinframe
