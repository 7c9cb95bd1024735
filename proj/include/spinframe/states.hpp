#pragma once

// Physically complete particle descriptors and two-particle state vectors.
//
// A descriptor carries, in addition to (Q, p, s, m), the base frame it is
// quantized against and the sign-carrying rotation R_BS from that base to its
// spin quantization frame. Pair states are stored on a basis keyed by
// particle content, so the order in which two descriptors are supplied never
// affects the stored vector.

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spinframe/exactnum.hpp"
#include "spinframe/frames.hpp"
#include "spinframe/rotations.hpp"
#include "spinframe/wigner.hpp"

namespace spinframe {

enum class BaseFrame { Helicity, Canonical };

[[nodiscard]] const char* to_string(BaseFrame b) noexcept;

struct ParticleDescriptor {
    ParticleDescriptor(std::string q, Vec3 p, TwiceSpin s, int m_twice,
                       BaseFrame base = BaseFrame::Helicity,
                       UnitQuaternion r_bs = UnitQuaternion::identity());

    std::string q;  ///< intrinsic quantum numbers, compared bytewise
    Vec3 p;         ///< momentum label
    TwiceSpin s;
    TwiceM m;
    BaseFrame base;
    UnitQuaternion r_bs;  ///< base frame -> spin quantization frame

    [[nodiscard]] ParticleDescriptor with_rotation(const UnitQuaternion& r) const;
};

/// Total order on (Q, p bit pattern, s, m). Rotations are not part of content.
[[nodiscard]] bool content_less(const ParticleDescriptor& a, const ParticleDescriptor& b);
/// Same (Q, p, s): the two particles share one single-particle basis.
[[nodiscard]] bool same_species_and_momentum(const ParticleDescriptor& a,
                                             const ParticleDescriptor& b);
[[nodiscard]] bool same_content(const ParticleDescriptor& a, const ParticleDescriptor& b);

/// Two-particle state on the order-independent helicity basis.
///
/// `first()` is the content-smaller descriptor; amplitude keys are
/// (2 lambda_first, 2 lambda_second). When both particles share (Q, p, s)
/// the basis is the symmetric one: keys have lambda_first >= lambda_second
/// and off-diagonal keys denote (|l1 l2> + |l2 l1>)/sqrt(2).
class PairState {
public:
    using Key = std::pair<int, int>;

    [[nodiscard]] const ParticleDescriptor& first() const noexcept { return first_; }
    [[nodiscard]] const ParticleDescriptor& second() const noexcept { return second_; }
    [[nodiscard]] const std::map<Key, Complex>& amplitudes() const noexcept { return amps_; }
    [[nodiscard]] Complex amplitude(int lambda_first, int lambda_second) const;
    [[nodiscard]] double norm() const;
    [[nodiscard]] bool symmetric_basis() const noexcept { return symmetric_; }

    /// Largest amplitude difference; infinite when contents differ.
    [[nodiscard]] double distance(const PairState& other) const;

private:
    PairState(ParticleDescriptor first, ParticleDescriptor second, std::map<Key, Complex> amps,
              bool symmetric);

    ParticleDescriptor first_;
    ParticleDescriptor second_;
    std::map<Key, Complex> amps_;
    bool symmetric_;

    friend PairState make_pair_state(const ParticleDescriptor&, const ParticleDescriptor&,
                                     std::map<Key, Complex>, bool);
};

/// Builds a state from raw amplitudes on the content-keyed basis, normalizing
/// them. Throws SpinframeError if the vector vanishes.
[[nodiscard]] PairState make_pair_state(const ParticleDescriptor& first,
                                        const ParticleDescriptor& second,
                                        std::map<PairState::Key, Complex> amplitudes,
                                        bool symmetric);

/// Column m of D^s(q): the descriptor's state re-expressed over m' in the
/// base frame, in m_range order.
[[nodiscard]] CVector rotate_sqf(const ParticleDescriptor& desc, const UnitQuaternion& q);

/// amplitude(lambda_a, lambda_b) = D^{s_a}_{lambda_a m_a}(R_a) D^{s_b}_{lambda_b m_b}(R_b),
/// stored on the content-keyed basis. The descriptors in the result carry
/// R_a, R_b as their R_BS. When both particles share (Q, p, s) the basis
/// keys coincide, amplitudes add, and the result is renormalized (throws if
/// it vanishes).
[[nodiscard]] PairState assemble_pair_canonical_orderfree(const ParticleDescriptor& desc_a,
                                                          const ParticleDescriptor& desc_b,
                                                          const UnitQuaternion& r_a,
                                                          const UnitQuaternion& r_b);

/// Re-assembles the state with its two descriptors supplied in swapped order.
[[nodiscard]] PairState pure_permute(const PairState& state);

/// +1 or -1 with a = sign * b amplitude-wise within tol. Throws SpinframeError
/// when the contents differ or no such sign exists.
[[nodiscard]] int relative_sign(const PairState& a, const PairState& b, double tol = 1e-10);

/// Order-dependent description: the slot-1 descriptor's R_BS anchors the
/// chain R_{r+1} = R_r . R_{r+1,r}, each R_{r+1,r} a sheet*pi turn about the
/// bisector of the two slot momenta.
struct OrderedDescription {
    std::vector<ParticleDescriptor> slots;
    Sheet r21_sheet = Sheet::Plus;

    /// Slots in the given order with slot 1 anchored at its helicity frame's
    /// rotation onto the canonical axes.
    [[nodiscard]] static OrderedDescription anchored(ParticleDescriptor first,
                                                     ParticleDescriptor second,
                                                     Sheet sheet = Sheet::Plus);
};

/// R_{r+1,r}: the slot-(r+1) helicity frame onto the slot-r frame, on the
/// description's sheet. Slots are 0-based here.
[[nodiscard]] UnitQuaternion slot_relative_rotation(const OrderedDescription& d, std::size_t next);

/// R_BS for every slot under the chain convention.
[[nodiscard]] std::vector<UnitQuaternion> slot_rotations(const OrderedDescription& d);

/// The canonical-SQF state of a two-slot description.
[[nodiscard]] PairState assemble_ordered(const OrderedDescription& d);

enum class ExchangeCase { First, Second };

struct ExchangeResult {
    PairState exchanged;
    int phase;  ///< exchanged = phase * original
};

/// Swaps the two slots. First: the new slot-1 rotation is R_b = R_a . R_21;
/// Second: R_a = R_b . R_21. The phase is measured by comparing the
/// exchanged and original amplitude vectors; it comes out (-1)^{2 s_a} and
/// (-1)^{2 s_b} respectively. Throws InvalidLabel unless there are 2 slots.
[[nodiscard]] ExchangeResult exchange_order_dependent(const OrderedDescription& d,
                                                      ExchangeCase which);

/// Factor between the First- and Second-case exchanged vectors, measured;
/// equals (-1)^{2 s_a + 2 s_b}.
[[nodiscard]] int case_discrepancy(const OrderedDescription& d);

/// (-1)^{sum_i n_i * 2 s_i}. Throws InvalidLabel on length mismatch.
[[nodiscard]] int order_dependence_phase(const std::vector<int>& n,
                                         const std::vector<TwiceSpin>& s);

/// Header line plus one `(lambda_a_twice, lambda_b_twice) re im` line per amplitude.
void write_state_dump(std::ostream& out, const PairState& state);

[[nodiscard]] std::string describe(const ParticleDescriptor& d);

}  // namespace spinframe
