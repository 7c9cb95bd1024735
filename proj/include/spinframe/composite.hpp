#pragma once

// Composite spin of pair states, the exclusion rule for identical particles,
// and commuting families of subset total-spin operators on N spins.

#include <iosfwd>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "spinframe/states.hpp"
#include "spinframe/wigner.hpp"

namespace spinframe {

/// c(S, M) keyed by (2S, 2M), coupling first() then second() of the source state.
class CompositeProjection {
public:
    using Key = std::pair<int, int>;

    CompositeProjection(TwiceSpin s1, TwiceSpin s2, std::map<Key, Complex> amps);

    [[nodiscard]] TwiceSpin s1() const noexcept { return s1_; }
    [[nodiscard]] TwiceSpin s2() const noexcept { return s2_; }
    [[nodiscard]] const std::map<Key, Complex>& amplitudes() const noexcept { return amps_; }
    [[nodiscard]] Complex amplitude(int S_twice, int M_twice) const;

    [[nodiscard]] double total_weight() const;
    /// Sum of |c|^2 over entries with the given 2S.
    [[nodiscard]] double weight_at(int S_twice) const;
    /// Weight on odd integer S (2S = 2 mod 4).
    [[nodiscard]] double odd_S_weight() const;

private:
    TwiceSpin s1_;
    TwiceSpin s2_;
    std::map<Key, Complex> amps_;
};

/// Both particles' SQFs supplied explicitly (first(), second() order).
struct ExplicitRoute {
    UnitQuaternion r_first;
    UnitQuaternion r_second;
};

/// first() is slot 1 with its own R_BS; second() follows as R_1 . R_21.
struct OrderedRoute {
    Sheet sheet;
};

using CommonSqfRoute = std::variant<ExplicitRoute, OrderedRoute>;

/// State amplitudes as a dim_first x dim_second tensor (undoing the
/// symmetric-basis packing when both particles share a basis).
[[nodiscard]] CMatrix tensor_amplitudes(const PairState& state);

/// Coefficients <m_first m_second| psi> in the common SQF reached by the route.
[[nodiscard]] CMatrix common_sqf_amplitudes(const PairState& state, const CommonSqfRoute& route);

[[nodiscard]] CompositeProjection project_composite(const PairState& state,
                                                    const CommonSqfRoute& route);

/// x_coef * x + y_coef * y, renormalized. Both states must live on the same
/// basis, i.e. pairwise equal (Q, p, s). The result keeps x's descriptors.
[[nodiscard]] PairState superpose(const PairState& x, Complex x_coef, const PairState& y,
                                  Complex y_coef);

/// Sum over both slot assignments of the m labels between two identical
/// particles, each ordering with its own order-dependent convention:
///   |(a, m_a)^1; (b, m_b)^2> + |(b, m_a)^1; (a, m_b)^2>,
/// the second with R_b = R_a . R_21. In a common SQF this is antisymmetric
/// in the spin labels for halfons and symmetric for fullons. Throws when the
/// particles are not identical in (Q, s), and when the sum vanishes (equal m
/// for halfons).
[[nodiscard]] PairState pseudo_antisymmetrized(const ParticleDescriptor& a,
                                               const ParticleDescriptor& b,
                                               Sheet sheet = Sheet::Plus);

/// Route matching pseudo_antisymmetrized: the rotations its descriptors carry,
/// R_a and R_b = R_a . R_21.
[[nodiscard]] ExplicitRoute pseudo_antisymmetrized_route(const PairState& state);

/// exchange_symmetry_sign(s, S) * (-1)^{2s}.
[[nodiscard]] int pseudo_antisymmetry_sign(TwiceSpin s, TwiceSpin S);

/// Composite spins allowed for two identical particles with all other
/// quantum numbers equal, ascending in 2S.
[[nodiscard]] std::vector<TwiceSpin> exclusion_check(TwiceSpin s);

/// Spin matrices (Sx, Sy, Sz) in m_range order.
struct SpinMatrices {
    CMatrix x;
    CMatrix y;
    CMatrix z;
};
[[nodiscard]] SpinMatrices spin_matrices(TwiceSpin s);

/// (sum_{i in subset} S_i)^2 on the N-fold product space. Particles are
/// labelled 1..N; particle 1 is the slowest-varying tensor factor.
class PairSpinOperator {
public:
    PairSpinOperator(int n, TwiceSpin s, std::vector<int> subset, CMatrix matrix);

    [[nodiscard]] int particle_count() const noexcept { return n_; }
    [[nodiscard]] TwiceSpin spin() const noexcept { return s_; }
    [[nodiscard]] const std::vector<int>& subset() const noexcept { return subset_; }
    [[nodiscard]] const CMatrix& matrix() const noexcept { return matrix_; }

    [[nodiscard]] bool is_hermitian(double tol = EPS) const;
    /// Ascending eigenvalues.
    [[nodiscard]] Eigen::VectorXd spectrum() const;
    /// 2S values reachable by coupling |subset| spins s, ascending.
    [[nodiscard]] std::vector<int> allowed_couplings() const;
    /// Every eigenvalue equals S(S+1) for an allowed S within tol.
    [[nodiscard]] bool spectrum_is_valid(double tol = 1e-9) const;

private:
    int n_;
    TwiceSpin s_;
    std::vector<int> subset_;
    CMatrix matrix_;
};

inline constexpr int MAX_OPERATOR_PARTICLES = 5;
inline constexpr int MAX_OPERATOR_TWICE_SPIN = 2;
inline constexpr int MAX_PAIRSET_PARTICLES = 4;
inline constexpr int MAX_PAIRSET_TWICE_SPIN = 1;

/// Throws BoundExceeded beyond N = 5 or 2s = 2, InvalidLabel for a subset of
/// fewer than two distinct labels within 1..N.
[[nodiscard]] PairSpinOperator build_pair_spin_operator(int n, TwiceSpin s,
                                                        std::vector<int> subset);

/// Frobenius norm of AB - BA.
[[nodiscard]] double commutator_norm(const CMatrix& a, const CMatrix& b);

struct CommutingFamily {
    std::vector<std::vector<int>> members;
    [[nodiscard]] int size() const noexcept { return static_cast<int>(members.size()); }
};

/// Largest family of distinct subsets (each of size >= 2) whose operators
/// commute pairwise within EPS, by exhaustive search. The first maximal
/// family in enumeration order is returned.
[[nodiscard]] CommutingFamily largest_commuting_family(int n, TwiceSpin s);

/// Size of largest_commuting_family. Throws BoundExceeded beyond N = 4 or 2s = 1.
[[nodiscard]] int max_commuting_pairset(int n, TwiceSpin s);

/// One `S_twice M_twice re im` line per entry, descending S then M.
void write_projection(std::ostream& out, const CompositeProjection& proj);

}  // namespace spinframe
