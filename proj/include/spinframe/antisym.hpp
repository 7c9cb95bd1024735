#pragma once

// Parity bookkeeping of order-dependent 2pi rotations, and the exhaustive
// check that all pairs of N >= 3 identical halfons cannot be antisymmetrized
// at once.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "spinframe/exactnum.hpp"

namespace spinframe {

/// Integers n[r][i]: the number of 2pi turns an order-dependent description
/// puts on particle i when it occupies order slot r. Slots and particles are
/// labelled 1..N in the accessors.
class ParityLedger {
public:
    explicit ParityLedger(int n);
    /// Rows are slots, columns particles. Throws InvalidLabel unless N x N.
    explicit ParityLedger(std::vector<std::vector<int>> table);

    [[nodiscard]] int size() const noexcept { return n_; }
    [[nodiscard]] int at(int slot, int particle) const;
    void set(int slot, int particle, int value);

    /// Sum over slots for one particle.
    [[nodiscard]] long long particle_total(int particle) const;
    /// The same table with every entry reduced to {0, 1}.
    [[nodiscard]] ParityLedger reduced() const;

    /// Ledger of one concrete ordering: only the entry (r, order[r-1]) of each
    /// slot is kept. `order` lists particle labels by slot.
    [[nodiscard]] ParityLedger for_ordering(const std::vector<int>& order) const;

    friend bool operator==(const ParityLedger&, const ParityLedger&) = default;

private:
    int n_;
    std::vector<int> table_;  // row-major, slot-major
};

/// (-1)^{sum_i (n'_i - n_i) * 2 s_i} with n_i the per-particle slot totals.
/// Throws InvalidLabel on dimension mismatch.
[[nodiscard]] int exchange_sign(const ParityLedger& before, const ParityLedger& after,
                                const std::vector<TwiceSpin>& s);

/// True iff every particle outside `exchanged` keeps its total parity.
[[nodiscard]] bool check_noninterference(const ParityLedger& before, const ParityLedger& after,
                                         std::pair<int, int> exchanged);

/// A bystander's parity changed under a pair exchange.
class NonInterferenceViolation : public SpinframeError {
public:
    using SpinframeError::SpinframeError;
};

/// Exchange sign after the non-interference check; throws
/// NonInterferenceViolation when a bystander is involved.
[[nodiscard]] int pair_exchange_sign(const ParityLedger& before, const ParityLedger& after,
                                     std::pair<int, int> exchanged,
                                     const std::vector<TwiceSpin>& s);

/// Sign picked up by swapping the particles in two slots of an ordering.
[[nodiscard]] int slot_swap_sign(const ParityLedger& ledger, const std::vector<int>& order,
                                 int slot_r, int slot_t, const std::vector<TwiceSpin>& s);

/// For N identical halfons: does swapping slots 1 and 2 flip the sign for
/// every pair placed in those slots? Bystanders sit in slots 3..N.
[[nodiscard]] bool antisymmetric_for_all_pairs(const ParityLedger& ledger, TwiceSpin s);

/// x_i XOR x_j = 1 for an unordered pair {i, j}, with x_i the parity of
/// n^1_i - n^2_i.
struct XorConstraint {
    int i;
    int j;
};

struct ExchangeConstraintSystem {
    int n = 0;
    std::vector<XorConstraint> constraints;

    /// Bit k-1 of `assignment` is x_k.
    [[nodiscard]] bool satisfied_by(std::uint32_t assignment) const noexcept;
};

/// x_i = (n^1_i - n^2_i) mod 2 for each particle.
[[nodiscard]] std::uint32_t constraint_variables(const ParityLedger& ledger);

/// One constraint per unordered pair, in lexicographic order. N >= 2.
[[nodiscard]] ExchangeConstraintSystem build_constraints(int n);

inline constexpr int MAX_ENUMERATION_PARTICLES = 20;

struct SatisfiabilityResult {
    bool satisfiable = false;
    std::optional<std::uint32_t> witness;  ///< lowest satisfying assignment
    std::uint64_t count = 0;
};

/// Enumerates all 2^N assignments. Throws BoundExceeded for N > 20.
[[nodiscard]] SatisfiabilityResult exhaustive_satisfiable(const ExchangeConstraintSystem& system);

struct ImpossibilityRow {
    int n;
    bool satisfiable;
    std::uint64_t witnesses;
};

struct ImpossibilityReport {
    std::vector<ImpossibilityRow> rows;
    /// satisfiable exactly when N = 2
    bool claims_hold = false;
};

/// Rows for N = 2..n_max. Throws BoundExceeded outside [2, 20].
[[nodiscard]] ImpossibilityReport impossibility_report(int n_max);

/// `N=<n> satisfiable=<bool> witnesses=<count>` per row.
void write_report(std::ostream& out, const ImpossibilityReport& report);

}  // namespace spinframe
