#include "spinframe/exactnum.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace spinframe {

TwiceSpin::TwiceSpin(int twice) : twice_(twice) {
    if (twice < 0) {
        throw InvalidLabel("spin must be non-negative, got 2s=" + std::to_string(twice));
    }
}

bool is_valid_component(TwiceSpin s, int twice_m) noexcept {
    return std::abs(twice_m) <= s.twice() && (s.twice() - twice_m) % 2 == 0;
}

TwiceM::TwiceM(TwiceSpin parent, int twice) : twice_(twice) {
    if (!is_valid_component(parent, twice)) {
        throw InvalidLabel("2m=" + std::to_string(twice) + " is not a component of 2s=" +
                           std::to_string(parent.twice()));
    }
}

BigInt factorial_exact(int n) {
    if (n < 0 || n > N_FACT) {
        throw BoundExceeded("factorial argument " + std::to_string(n) + " outside [0, " +
                            std::to_string(N_FACT) + "]");
    }
    BigInt result = 1;
    for (int k = 2; k <= n; ++k) {
        result *= k;
    }
    return result;
}

std::vector<TwiceM> m_range(TwiceSpin s) {
    std::vector<TwiceM> out;
    out.reserve(static_cast<std::size_t>(s.dim()));
    for (int m = s.twice(); m >= -s.twice(); m -= 2) {
        out.emplace_back(s, m);
    }
    return out;
}

int m_index(TwiceSpin s, TwiceM m) {
    if (!is_valid_component(s, m.twice())) {
        throw InvalidLabel("component 2m=" + std::to_string(m.twice()) + " does not belong to 2s=" +
                           std::to_string(s.twice()));
    }
    return (s.twice() - m.twice()) / 2;
}

bool approx_equal(Complex a, Complex b, double tol) noexcept {
    return std::abs(a.real() - b.real()) <= tol && std::abs(a.imag() - b.imag()) <= tol;
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

}  // namespace spinframe
