#include "spinframe/states.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <tuple>

#include "spinframe/format.hpp"

namespace spinframe {

namespace {

auto content_key(const ParticleDescriptor& d) {
    return std::make_tuple(std::cref(d.q), std::bit_cast<std::uint64_t>(d.p.x()),
                           std::bit_cast<std::uint64_t>(d.p.y()),
                           std::bit_cast<std::uint64_t>(d.p.z()), d.s.twice(), d.m.twice());
}

auto species_key(const ParticleDescriptor& d) {
    return std::make_tuple(std::cref(d.q), std::bit_cast<std::uint64_t>(d.p.x()),
                           std::bit_cast<std::uint64_t>(d.p.y()),
                           std::bit_cast<std::uint64_t>(d.p.z()), d.s.twice());
}

}  // namespace

const char* to_string(BaseFrame b) noexcept {
    return b == BaseFrame::Helicity ? "HELICITY" : "CANONICAL";
}

ParticleDescriptor::ParticleDescriptor(std::string q_, Vec3 p_, TwiceSpin s_, int m_twice,
                                       BaseFrame base_, UnitQuaternion r_bs_)
    : q(std::move(q_)), p(std::move(p_)), s(s_), m(s_, m_twice), base(base_), r_bs(r_bs_) {}

ParticleDescriptor ParticleDescriptor::with_rotation(const UnitQuaternion& r) const {
    ParticleDescriptor out = *this;
    out.r_bs = r;
    return out;
}

bool content_less(const ParticleDescriptor& a, const ParticleDescriptor& b) {
    return content_key(a) < content_key(b);
}

bool same_species_and_momentum(const ParticleDescriptor& a, const ParticleDescriptor& b) {
    return species_key(a) == species_key(b);
}

bool same_content(const ParticleDescriptor& a, const ParticleDescriptor& b) {
    return content_key(a) == content_key(b);
}

PairState::PairState(ParticleDescriptor first, ParticleDescriptor second,
                     std::map<Key, Complex> amps, bool symmetric)
    : first_(std::move(first)),
      second_(std::move(second)),
      amps_(std::move(amps)),
      symmetric_(symmetric) {}

Complex PairState::amplitude(int lambda_first, int lambda_second) const {
    if (symmetric_ && lambda_first < lambda_second) {
        std::swap(lambda_first, lambda_second);
    }
    const auto it = amps_.find({lambda_first, lambda_second});
    return it == amps_.end() ? Complex{} : it->second;
}

double PairState::norm() const {
    double n2 = 0.0;
    for (const auto& [key, c] : amps_) {
        n2 += std::norm(c);
    }
    return std::sqrt(n2);
}

double PairState::distance(const PairState& other) const {
    if (!same_content(first_, other.first_) || !same_content(second_, other.second_)) {
        return std::numeric_limits<double>::infinity();
    }
    double d = 0.0;
    for (const auto& [key, c] : amps_) {
        d = std::max(d, std::abs(c - other.amplitude(key.first, key.second)));
    }
    for (const auto& [key, c] : other.amps_) {
        d = std::max(d, std::abs(c - amplitude(key.first, key.second)));
    }
    return d;
}

PairState make_pair_state(const ParticleDescriptor& first, const ParticleDescriptor& second,
                          std::map<PairState::Key, Complex> amplitudes, bool symmetric) {
    double n2 = 0.0;
    for (const auto& [key, c] : amplitudes) {
        n2 += std::norm(c);
    }
    const double n = std::sqrt(n2);
    if (!(n > EPS)) {
        throw SpinframeError("pair state vanishes on the content-keyed basis");
    }
    for (auto& [key, c] : amplitudes) {
        c /= n;
    }
    return PairState{first, second, std::move(amplitudes), symmetric};
}

CVector rotate_sqf(const ParticleDescriptor& desc, const UnitQuaternion& q) {
    return wigner_D(desc.s, q).column(desc.m);
}

PairState assemble_pair_canonical_orderfree(const ParticleDescriptor& desc_a,
                                            const ParticleDescriptor& desc_b,
                                            const UnitQuaternion& r_a, const UnitQuaternion& r_b) {
    const bool a_first = !content_less(desc_b, desc_a);
    ParticleDescriptor first = (a_first ? desc_a : desc_b).with_rotation(a_first ? r_a : r_b);
    ParticleDescriptor second = (a_first ? desc_b : desc_a).with_rotation(a_first ? r_b : r_a);
    first.base = BaseFrame::Helicity;
    second.base = BaseFrame::Helicity;

    const CVector cf = rotate_sqf(first, first.r_bs);
    const CVector cs = rotate_sqf(second, second.r_bs);
    const bool symmetric = same_species_and_momentum(first, second);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    std::map<PairState::Key, Complex> amps;
    for (Eigen::Index i = 0; i < cf.size(); ++i) {
        const int lf = first.s.twice() - 2 * static_cast<int>(i);
        for (Eigen::Index j = 0; j < cs.size(); ++j) {
            const int ls = second.s.twice() - 2 * static_cast<int>(j);
            const Complex c = cf(i) * cs(j);
            if (!symmetric) {
                amps[{lf, ls}] = c;
            } else if (lf == ls) {
                amps[{lf, ls}] += c;
            } else {
                amps[{std::max(lf, ls), std::min(lf, ls)}] += c * inv_sqrt2;
            }
        }
    }
    return make_pair_state(first, second, std::move(amps), symmetric);
}

PairState pure_permute(const PairState& state) {
    return assemble_pair_canonical_orderfree(state.second(), state.first(), state.second().r_bs,
                                             state.first().r_bs);
}

int relative_sign(const PairState& a, const PairState& b, double tol) {
    if (!same_content(a.first(), b.first()) || !same_content(a.second(), b.second())) {
        throw SpinframeError("states have different particle content");
    }
    PairState::Key pivot{};
    double largest = -1.0;
    for (const auto& [key, c] : b.amplitudes()) {
        if (std::abs(c) > largest) {
            largest = std::abs(c);
            pivot = key;
        }
    }
    const Complex ratio = a.amplitude(pivot.first, pivot.second) / b.amplitude(pivot.first, pivot.second);
    const int sign = ratio.real() >= 0.0 ? 1 : -1;
    for (const auto& [key, c] : b.amplitudes()) {
        if (std::abs(a.amplitude(key.first, key.second) - static_cast<double>(sign) * c) > tol) {
            throw SpinframeError("states are not related by an overall sign");
        }
    }
    for (const auto& [key, c] : a.amplitudes()) {
        if (std::abs(c - static_cast<double>(sign) * b.amplitude(key.first, key.second)) > tol) {
            throw SpinframeError("states are not related by an overall sign");
        }
    }
    return sign;
}

OrderedDescription OrderedDescription::anchored(ParticleDescriptor first, ParticleDescriptor second,
                                                Sheet sheet) {
    const HelicityFrame h = helicity_frame(first.p, second.p, "1");
    first.r_bs = h.to_canonical();
    first.base = BaseFrame::Helicity;
    return {{std::move(first), std::move(second)}, sheet};
}

UnitQuaternion slot_relative_rotation(const OrderedDescription& d, std::size_t next) {
    if (next == 0 || next >= d.slots.size()) {
        throw InvalidLabel("slot index out of range for relative rotation");
    }
    const Vec3& p_prev = d.slots[next - 1].p;
    const Vec3& p_next = d.slots[next].p;
    const HelicityFrame h_prev = helicity_frame(p_prev, p_next, std::to_string(next));
    const HelicityFrame h_next = helicity_frame(p_next, p_prev, std::to_string(next + 1));
    return relative_rotation(h_next, h_prev, d.r21_sheet);
}

std::vector<UnitQuaternion> slot_rotations(const OrderedDescription& d) {
    if (d.slots.empty()) {
        throw InvalidLabel("ordered description needs at least one slot");
    }
    std::vector<UnitQuaternion> out{d.slots.front().r_bs};
    for (std::size_t r = 1; r < d.slots.size(); ++r) {
        out.push_back(compose(out.back(), slot_relative_rotation(d, r)));
    }
    return out;
}

PairState assemble_ordered(const OrderedDescription& d) {
    if (d.slots.size() != 2) {
        throw InvalidLabel("pair assembly needs exactly two slots");
    }
    const auto rots = slot_rotations(d);
    return assemble_pair_canonical_orderfree(d.slots[0], d.slots[1], rots[0], rots[1]);
}

ExchangeResult exchange_order_dependent(const OrderedDescription& d, ExchangeCase which) {
    if (d.slots.size() != 2) {
        throw InvalidLabel("exchange needs exactly two slots, got " + std::to_string(d.slots.size()));
    }
    const PairState original = assemble_ordered(d);
    const UnitQuaternion& r_a = d.slots[0].r_bs;

    OrderedDescription swapped{{d.slots[1], d.slots[0]}, d.r21_sheet};
    const UnitQuaternion r21 = slot_relative_rotation(swapped, 1);
    // First: R_b = R_a . R_21.  Second: R_a = R_b . R_21, so R_b = R_a . R_21^{-1}.
    swapped.slots[0].r_bs =
        which == ExchangeCase::First ? compose(r_a, r21) : compose(r_a, inverse(r21));

    PairState exchanged = assemble_ordered(swapped);
    const int phase = relative_sign(exchanged, original);
    return {std::move(exchanged), phase};
}

int case_discrepancy(const OrderedDescription& d) {
    const auto first = exchange_order_dependent(d, ExchangeCase::First);
    const auto second = exchange_order_dependent(d, ExchangeCase::Second);
    return relative_sign(first.exchanged, second.exchanged);
}

int order_dependence_phase(const std::vector<int>& n, const std::vector<TwiceSpin>& s) {
    if (n.size() != s.size()) {
        throw InvalidLabel("rotation counts and spins differ in length");
    }
    long long exponent = 0;
    for (std::size_t i = 0; i < n.size(); ++i) {
        exponent += static_cast<long long>(n[i]) * s[i].twice();
    }
    return neg_one_pow(exponent);
}

std::string describe(const ParticleDescriptor& d) {
    return fmt::format("Q={} p=({},{},{}) s2={} m2={} base={} R=({},{},{},{})", d.q,
                       format_real(d.p.x()), format_real(d.p.y()), format_real(d.p.z()),
                       d.s.twice(), d.m.twice(), to_string(d.base), format_real(d.r_bs.w()),
                       format_real(d.r_bs.x()), format_real(d.r_bs.y()), format_real(d.r_bs.z()));
}

void write_state_dump(std::ostream& out, const PairState& state) {
    out << "# a: " << describe(state.first()) << " ; b: " << describe(state.second()) << '\n';
    // Descending lambda order, matching m_range.
    for (auto it = state.amplitudes().rbegin(); it != state.amplitudes().rend(); ++it) {
        const auto& [key, c] = *it;
        out << '(' << key.first << ", " << key.second << ") " << format_real(c.real()) << ' '
            << format_real(c.imag()) << '\n';
    }
}

}  // namespace spinframe
