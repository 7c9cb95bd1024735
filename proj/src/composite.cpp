#include "spinframe/composite.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <set>
#include <string>

#include <Eigen/Eigenvalues>

#include "spinframe/format.hpp"

namespace spinframe {

CompositeProjection::CompositeProjection(TwiceSpin s1, TwiceSpin s2, std::map<Key, Complex> amps)
    : s1_(s1), s2_(s2), amps_(std::move(amps)) {}

Complex CompositeProjection::amplitude(int S_twice, int M_twice) const {
    const auto it = amps_.find({S_twice, M_twice});
    return it == amps_.end() ? Complex{} : it->second;
}

double CompositeProjection::total_weight() const {
    double w = 0.0;
    for (const auto& [key, c] : amps_) {
        w += std::norm(c);
    }
    return w;
}

double CompositeProjection::weight_at(int S_twice) const {
    double w = 0.0;
    for (const auto& [key, c] : amps_) {
        if (key.first == S_twice) {
            w += std::norm(c);
        }
    }
    return w;
}

double CompositeProjection::odd_S_weight() const {
    double w = 0.0;
    for (const auto& [key, c] : amps_) {
        if (key.first % 4 == 2) {
            w += std::norm(c);
        }
    }
    return w;
}

CMatrix tensor_amplitudes(const PairState& state) {
    const TwiceSpin sf = state.first().s;
    const TwiceSpin ss = state.second().s;
    CMatrix a = CMatrix::Zero(sf.dim(), ss.dim());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (const auto& [key, c] : state.amplitudes()) {
        const int i = (sf.twice() - key.first) / 2;
        const int j = (ss.twice() - key.second) / 2;
        if (!state.symmetric_basis() || key.first == key.second) {
            a(i, j) = c;
        } else {
            a(i, j) = c * inv_sqrt2;
            a(j, i) = c * inv_sqrt2;
        }
    }
    return a;
}

namespace {

ExplicitRoute resolve(const PairState& state, const CommonSqfRoute& route) {
    if (const auto* explicit_route = std::get_if<ExplicitRoute>(&route)) {
        return *explicit_route;
    }
    const auto& ordered = std::get<OrderedRoute>(route);
    const OrderedDescription d{{state.first(), state.second()}, ordered.sheet};
    const auto rots = slot_rotations(d);
    return {rots[0], rots[1]};
}

}  // namespace

CMatrix common_sqf_amplitudes(const PairState& state, const CommonSqfRoute& route) {
    const ExplicitRoute r = resolve(state, route);
    const CMatrix df = wigner_D(state.first().s, r.r_first).matrix();
    const CMatrix ds = wigner_D(state.second().s, r.r_second).matrix();
    // c(m, n) = sum_{l, k} conj(D_f(l, m)) conj(D_s(k, n)) A(l, k)
    return df.adjoint() * tensor_amplitudes(state) * ds.conjugate();
}

CompositeProjection project_composite(const PairState& state, const CommonSqfRoute& route) {
    const TwiceSpin s1 = state.first().s;
    const TwiceSpin s2 = state.second().s;
    const CMatrix c = common_sqf_amplitudes(state, route);
    const CGTable cg(s1, s2);
    std::map<CompositeProjection::Key, Complex> out;
    for (const TwiceSpin S : cg.couplings()) {
        for (const TwiceM M : m_range(S)) {
            out[{S.twice(), M.twice()}] = Complex{};
        }
    }
    for (const auto& [key, coef] : cg.entries()) {
        const auto [m1, m2, S, M] = key;
        out[{S, M}] += coef * c((s1.twice() - m1) / 2, (s2.twice() - m2) / 2);
    }
    return {s1, s2, std::move(out)};
}

PairState superpose(const PairState& x, Complex x_coef, const PairState& y, Complex y_coef) {
    if (!same_species_and_momentum(x.first(), y.first()) ||
        !same_species_and_momentum(x.second(), y.second())) {
        throw SpinframeError("superposed states live on different bases");
    }
    std::map<PairState::Key, Complex> amps;
    for (const auto& [key, c] : x.amplitudes()) {
        amps[key] += x_coef * c;
    }
    for (const auto& [key, c] : y.amplitudes()) {
        amps[key] += y_coef * c;
    }
    return make_pair_state(x.first(), x.second(), std::move(amps), x.symmetric_basis());
}

PairState pseudo_antisymmetrized(const ParticleDescriptor& a, const ParticleDescriptor& b,
                                 Sheet sheet) {
    if (a.q != b.q || a.s != b.s) {
        throw InvalidLabel("pseudo-antisymmetrization needs identical particles");
    }
    const OrderedDescription direct = OrderedDescription::anchored(a, b, sheet);
    const PairState psi_direct = assemble_ordered(direct);

    // Same two momenta, spin labels swapped between slots.
    const ParticleDescriptor a_swapped(a.q, a.p, a.s, b.m.twice());
    const ParticleDescriptor b_swapped(b.q, b.p, b.s, a.m.twice());
    OrderedDescription swapped{{b_swapped, a_swapped}, sheet};
    const UnitQuaternion r_a = direct.slots[0].r_bs;
    swapped.slots[0].r_bs = compose(r_a, slot_relative_rotation(swapped, 1));
    const PairState psi_swapped = assemble_ordered(swapped);

    return superpose(psi_direct, 1.0, psi_swapped, 1.0);
}

ExplicitRoute pseudo_antisymmetrized_route(const PairState& state) {
    return {state.first().r_bs, state.second().r_bs};
}

int pseudo_antisymmetry_sign(TwiceSpin s, TwiceSpin S) {
    return exchange_symmetry_sign(s, S) * neg_one_pow(s.twice());
}

std::vector<TwiceSpin> exclusion_check(TwiceSpin s) {
    std::vector<TwiceSpin> allowed;
    for (int S = 0; S <= 2 * s.twice(); S += 2) {
        if (pseudo_antisymmetry_sign(s, TwiceSpin{S}) == 1) {
            allowed.emplace_back(S);
        }
    }
    return allowed;
}

SpinMatrices spin_matrices(TwiceSpin s) {
    const int n = s.dim();
    const int J = s.twice();
    CMatrix plus = CMatrix::Zero(n, n);
    CMatrix z = CMatrix::Zero(n, n);
    for (int col = 0; col < n; ++col) {
        const int m = J - 2 * col;
        z(col, col) = 0.5 * m;
        if (col > 0) {
            // <m+1| S+ |m> = sqrt(j(j+1) - m(m+1))
            plus(col - 1, col) = 0.5 * std::sqrt(static_cast<double>(J * (J + 2) - m * (m + 2)));
        }
    }
    const CMatrix minus = plus.adjoint();
    return {0.5 * (plus + minus), Complex{0.0, -0.5} * (plus - minus), z};
}

namespace {

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CMatrix embed(const CMatrix& op, int site, int n) {
    const auto d = op.rows();
    CMatrix out = CMatrix::Identity(1, 1);
    for (int k = 1; k <= n; ++k) {
        out = kron(out, k == site ? op : CMatrix::Identity(d, d));
    }
    return out;
}

}  // namespace

PairSpinOperator::PairSpinOperator(int n, TwiceSpin s, std::vector<int> subset, CMatrix matrix)
    : n_(n), s_(s), subset_(std::move(subset)), matrix_(std::move(matrix)) {}

bool PairSpinOperator::is_hermitian(double tol) const {
    return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Eigen::VectorXd PairSpinOperator::spectrum() const {
    return Eigen::SelfAdjointEigenSolver<CMatrix>(matrix_, Eigen::EigenvaluesOnly).eigenvalues();
}

std::vector<int> PairSpinOperator::allowed_couplings() const {
    std::set<int> totals{s_.twice()};
    for (std::size_t k = 1; k < subset_.size(); ++k) {
        std::set<int> next;
        for (const int t : totals) {
            for (int u = std::abs(t - s_.twice()); u <= t + s_.twice(); u += 2) {
                next.insert(u);
            }
        }
        totals = std::move(next);
    }
    return {totals.begin(), totals.end()};
}

bool PairSpinOperator::spectrum_is_valid(double tol) const {
    const auto allowed = allowed_couplings();
    const Eigen::VectorXd ev = spectrum();
    for (const double e : ev) {
        const bool hit = std::any_of(allowed.begin(), allowed.end(), [&](int S) {
            return std::abs(e - 0.25 * S * (S + 2)) <= tol;
        });
        if (!hit) {
            return false;
        }
    }
    return true;
}

PairSpinOperator build_pair_spin_operator(int n, TwiceSpin s, std::vector<int> subset) {
    if (n < 1 || n > MAX_OPERATOR_PARTICLES || s.twice() > MAX_OPERATOR_TWICE_SPIN) {
        throw BoundExceeded("pair spin operator limited to N <= 5 and 2s <= 2");
    }
    std::sort(subset.begin(), subset.end());
    if (subset.size() < 2 || std::adjacent_find(subset.begin(), subset.end()) != subset.end() ||
        subset.front() < 1 || subset.back() > n) {
        throw InvalidLabel("subset must hold at least two distinct labels in 1..N");
    }
    const SpinMatrices one = spin_matrices(s);
    const auto dim = static_cast<Eigen::Index>(std::pow(s.dim(), n));
    CMatrix total = CMatrix::Zero(dim, dim);
    for (const CMatrix* component : {&one.x, &one.y, &one.z}) {
        CMatrix sum = CMatrix::Zero(dim, dim);
        for (const int site : subset) {
            sum += embed(*component, site, n);
        }
        total += sum * sum;
    }
    return {n, s, std::move(subset), std::move(total)};
}

double commutator_norm(const CMatrix& a, const CMatrix& b) {
    return (a * b - b * a).norm();
}

CommutingFamily largest_commuting_family(int n, TwiceSpin s) {
    if (n < 2 || n > MAX_PAIRSET_PARTICLES || s.twice() > MAX_PAIRSET_TWICE_SPIN) {
        throw BoundExceeded("commuting-family search limited to 2 <= N <= 4 and 2s <= 1");
    }
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) < 2) {
            continue;
        }
        std::vector<int> sub;
        for (int k = 0; k < n; ++k) {
            if (mask & (1u << k)) {
                sub.push_back(k + 1);
            }
        }
        subsets.push_back(std::move(sub));
    }
    std::vector<CMatrix> ops;
    ops.reserve(subsets.size());
    for (const auto& sub : subsets) {
        ops.push_back(build_pair_spin_operator(n, s, sub).matrix());
    }

    const auto count = subsets.size();
    std::vector<unsigned> commutes_with(count, 0);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            if (i == j || (ops[i] * ops[j] - ops[j] * ops[i]).cwiseAbs().maxCoeff() <= EPS) {
                commutes_with[i] |= 1u << j;
            }
        }
    }

    unsigned best = 0;
    for (unsigned family = 1; family < (1u << count); ++family) {
        if (std::popcount(family) <= std::popcount(best)) {
            continue;
        }
        bool ok = true;
        for (std::size_t i = 0; i < count && ok; ++i) {
            if ((family & (1u << i)) && (family & ~commutes_with[i]) != 0) {
                ok = false;
            }
        }
        if (ok) {
            best = family;
        }
    }
    CommutingFamily out;
    for (std::size_t i = 0; i < count; ++i) {
        if (best & (1u << i)) {
            out.members.push_back(subsets[i]);
        }
    }
    return out;
}

int max_commuting_pairset(int n, TwiceSpin s) {
    return largest_commuting_family(n, s).size();
}

void write_projection(std::ostream& out, const CompositeProjection& proj) {
    for (auto it = proj.amplitudes().rbegin(); it != proj.amplitudes().rend(); ++it) {
        const auto& [key, c] = *it;
        out << key.first << ' ' << key.second << ' ' << format_real(c.real()) << ' '
            << format_real(c.imag()) << '\n';
    }
}

}  // namespace spinframe
