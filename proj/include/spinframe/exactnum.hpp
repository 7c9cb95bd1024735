#pragma once

// Exact spin labels and the scalar conventions shared by every other module.
//
// Spins and magnetic components are carried as doubled integers (2s, 2m), so
// half-integers never touch floating point. All exchange phases in this
// library depend only on the parity of 2s.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace spinframe {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

/// Global comparison tolerance for complex/real values.
inline constexpr double EPS = 1e-12;

/// Largest argument accepted by factorial_exact.
inline constexpr int N_FACT = 40;

/// Base class of every error raised by the library.
class SpinframeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument is outside a documented size bound.
class BoundExceeded : public SpinframeError {
public:
    using SpinframeError::SpinframeError;
};

/// A spin, component or coupling label is inconsistent.
class InvalidLabel : public SpinframeError {
public:
    using SpinframeError::SpinframeError;
};

/// Value of 2s for a spin s.
class TwiceSpin {
public:
    constexpr TwiceSpin() = default;
    explicit TwiceSpin(int twice);

    [[nodiscard]] constexpr int twice() const noexcept { return twice_; }
    [[nodiscard]] constexpr bool is_halfon() const noexcept { return twice_ % 2 != 0; }
    [[nodiscard]] constexpr bool is_fullon() const noexcept { return twice_ % 2 == 0; }
    /// Multiplet dimension 2s+1.
    [[nodiscard]] constexpr int dim() const noexcept { return twice_ + 1; }

    friend constexpr bool operator==(TwiceSpin, TwiceSpin) = default;
    friend constexpr auto operator<=>(TwiceSpin, TwiceSpin) = default;

private:
    int twice_ = 0;
};

/// Value of 2m for a component m of some parent spin.
///
/// Construction checks |2m| <= 2s and 2m = 2s (mod 2) against the parent.
class TwiceM {
public:
    TwiceM(TwiceSpin parent, int twice);

    [[nodiscard]] constexpr int twice() const noexcept { return twice_; }

    friend constexpr bool operator==(TwiceM, TwiceM) = default;
    friend constexpr auto operator<=>(TwiceM, TwiceM) = default;

private:
    int twice_;
};

/// True when `twice_m` is a legal component of `s`.
[[nodiscard]] bool is_valid_component(TwiceSpin s, int twice_m) noexcept;

/// n! exactly. Throws BoundExceeded for n > N_FACT or n < 0.
[[nodiscard]] BigInt factorial_exact(int n);

/// Components of s in descending order: +2s, 2s-2, ..., -2s.
///
/// This order is the row/column order of every matrix and vector indexed by
/// m in the library.
[[nodiscard]] std::vector<TwiceM> m_range(TwiceSpin s);

/// Row/column position of `m` in m_range(s).
[[nodiscard]] int m_index(TwiceSpin s, TwiceM m);

/// (-1)^k from the parity of k.
[[nodiscard]] constexpr int neg_one_pow(long long k) noexcept {
    return (k % 2 == 0) ? 1 : -1;
}

[[nodiscard]] bool approx_equal(Complex a, Complex b, double tol = EPS) noexcept;

/// Exact rational to nearest double.
[[nodiscard]] double to_double(const Rational& r);

}  // namespace spinframe
