#include "spinframe/antisym.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace spinframe {

namespace {

int parity(long long v) {
    return static_cast<int>(((v % 2) + 2) % 2);
}

}  // namespace

ParityLedger::ParityLedger(int n) : n_(n), table_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 1) {
        throw InvalidLabel("ledger needs at least one particle");
    }
}

ParityLedger::ParityLedger(std::vector<std::vector<int>> table)
    : n_(static_cast<int>(table.size())) {
    if (n_ < 1) {
        throw InvalidLabel("ledger needs at least one particle");
    }
    table_.reserve(static_cast<std::size_t>(n_) * n_);
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n_) {
            throw InvalidLabel("ledger table must be N x N");
        }
        table_.insert(table_.end(), row.begin(), row.end());
    }
}

int ParityLedger::at(int slot, int particle) const {
    if (slot < 1 || slot > n_ || particle < 1 || particle > n_) {
        throw InvalidLabel("ledger index out of range");
    }
    return table_[static_cast<std::size_t>(slot - 1) * n_ + (particle - 1)];
}

void ParityLedger::set(int slot, int particle, int value) {
    if (slot < 1 || slot > n_ || particle < 1 || particle > n_) {
        throw InvalidLabel("ledger index out of range");
    }
    table_[static_cast<std::size_t>(slot - 1) * n_ + (particle - 1)] = value;
}

long long ParityLedger::particle_total(int particle) const {
    long long total = 0;
    for (int r = 1; r <= n_; ++r) {
        total += at(r, particle);
    }
    return total;
}

ParityLedger ParityLedger::reduced() const {
    ParityLedger out = *this;
    for (int& v : out.table_) {
        v = parity(v);
    }
    return out;
}

ParityLedger ParityLedger::for_ordering(const std::vector<int>& order) const {
    if (static_cast<int>(order.size()) != n_) {
        throw InvalidLabel("ordering must place every particle");
    }
    std::vector<int> seen = order;
    std::sort(seen.begin(), seen.end());
    for (int k = 0; k < n_; ++k) {
        if (seen[k] != k + 1) {
            throw InvalidLabel("ordering is not a permutation of 1..N");
        }
    }
    ParityLedger out(n_);
    for (int r = 1; r <= n_; ++r) {
        out.set(r, order[r - 1], at(r, order[r - 1]));
    }
    return out;
}

int exchange_sign(const ParityLedger& before, const ParityLedger& after,
                  const std::vector<TwiceSpin>& s) {
    if (before.size() != after.size() || static_cast<int>(s.size()) != before.size()) {
        throw InvalidLabel("ledgers and spin list disagree in particle count");
    }
    long long exponent = 0;
    for (int i = 1; i <= before.size(); ++i) {
        exponent += (after.particle_total(i) - before.particle_total(i)) * s[i - 1].twice();
    }
    return neg_one_pow(exponent);
}

bool check_noninterference(const ParityLedger& before, const ParityLedger& after,
                           std::pair<int, int> exchanged) {
    for (int k = 1; k <= before.size(); ++k) {
        if (k == exchanged.first || k == exchanged.second) {
            continue;
        }
        if (parity(before.particle_total(k)) != parity(after.particle_total(k))) {
            return false;
        }
    }
    return true;
}

int pair_exchange_sign(const ParityLedger& before, const ParityLedger& after,
                       std::pair<int, int> exchanged, const std::vector<TwiceSpin>& s) {
    if (before.size() != after.size()) {
        throw InvalidLabel("ledgers disagree in particle count");
    }
    if (!check_noninterference(before, after, exchanged)) {
        throw NonInterferenceViolation("exchange of " + std::to_string(exchanged.first) + "<->" +
                                       std::to_string(exchanged.second) +
                                       " changes a bystander's rotation parity");
    }
    return exchange_sign(before, after, s);
}

int slot_swap_sign(const ParityLedger& ledger, const std::vector<int>& order, int slot_r,
                   int slot_t, const std::vector<TwiceSpin>& s) {
    const int n = ledger.size();
    if (slot_r < 1 || slot_r > n || slot_t < 1 || slot_t > n || slot_r == slot_t) {
        throw InvalidLabel("slot swap needs two distinct slots in 1..N");
    }
    std::vector<int> swapped = order;
    std::swap(swapped[slot_r - 1], swapped[slot_t - 1]);
    return pair_exchange_sign(ledger.for_ordering(order), ledger.for_ordering(swapped),
                              {order[slot_r - 1], order[slot_t - 1]}, s);
}

bool antisymmetric_for_all_pairs(const ParityLedger& ledger, TwiceSpin s) {
    const int n = ledger.size();
    const std::vector<TwiceSpin> spins(static_cast<std::size_t>(n), s);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            std::vector<int> order{i, j};
            for (int k = 1; k <= n; ++k) {
                if (k != i && k != j) {
                    order.push_back(k);
                }
            }
            if (slot_swap_sign(ledger, order, 1, 2, spins) != -1) {
                return false;
            }
        }
    }
    return true;
}

bool ExchangeConstraintSystem::satisfied_by(std::uint32_t assignment) const noexcept {
    return std::all_of(constraints.begin(), constraints.end(), [&](const XorConstraint& c) {
        return (((assignment >> (c.i - 1)) ^ (assignment >> (c.j - 1))) & 1u) == 1u;
    });
}

std::uint32_t constraint_variables(const ParityLedger& ledger) {
    if (ledger.size() < 2) {
        throw InvalidLabel("constraint variables need at least two slots");
    }
    std::uint32_t x = 0;
    for (int i = 1; i <= ledger.size(); ++i) {
        if (parity(static_cast<long long>(ledger.at(1, i)) - ledger.at(2, i)) == 1) {
            x |= 1u << (i - 1);
        }
    }
    return x;
}

ExchangeConstraintSystem build_constraints(int n) {
    if (n < 2) {
        throw InvalidLabel("constraint system needs N >= 2");
    }
    ExchangeConstraintSystem system{n, {}};
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            system.constraints.push_back({i, j});
        }
    }
    return system;
}

SatisfiabilityResult exhaustive_satisfiable(const ExchangeConstraintSystem& system) {
    if (system.n < 1 || system.n > MAX_ENUMERATION_PARTICLES) {
        throw BoundExceeded("exhaustive enumeration limited to N <= 20");
    }
    SatisfiabilityResult result;
    const std::uint32_t end = 1u << system.n;
    for (std::uint32_t assignment = 0; assignment < end; ++assignment) {
        if (system.satisfied_by(assignment)) {
            if (!result.witness) {
                result.witness = assignment;
            }
            ++result.count;
        }
    }
    result.satisfiable = result.count > 0;
    return result;
}

ImpossibilityReport impossibility_report(int n_max) {
    if (n_max < 2 || n_max > MAX_ENUMERATION_PARTICLES) {
        throw BoundExceeded("impossibility report needs 2 <= N_max <= 20");
    }
    ImpossibilityReport report;
    report.claims_hold = true;
    for (int n = 2; n <= n_max; ++n) {
        const auto r = exhaustive_satisfiable(build_constraints(n));
        report.rows.push_back({n, r.satisfiable, r.count});
        if (r.satisfiable != (n == 2)) {
            report.claims_hold = false;
        }
    }
    return report;
}

void write_report(std::ostream& out, const ImpossibilityReport& report) {
    for (const auto& row : report.rows) {
        out << "N=" << row.n << " satisfiable=" << (row.satisfiable ? "true" : "false")
            << " witnesses=" << row.witnesses << '\n';
    }
}

}  // namespace spinframe
