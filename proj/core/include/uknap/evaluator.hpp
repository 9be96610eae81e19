#pragma once

#include "uknap/instance.hpp"
#include "uknap/policy.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uknap {

/// Outcome of simulating a policy for one capacity.
struct PackingResult {
    std::vector<std::string> packed; // in packing order
    Rational total_value;
    Rational total_size; // <= capacity
    Rational capacity;
};

/**
 * Packs a universal policy: scan the permutation once and take every item
 * that fits the remaining capacity. Throws PreconditionError when the
 * policy is not a permutation of the instance's ids or the capacity is
 * negative.
 */
PackingResult pack_universal(const Instance& instance, const UniversalPolicy& policy,
                             const Rational& capacity);

/**
 * Packs a decision-tree policy: try the root item, descend into `fit`
 * when it was packed and into `nofit` otherwise. The traversed path must
 * name every item exactly once; violations raise PreconditionError.
 */
PackingResult pack_tree(const Instance& instance, const DecisionTreePolicy& policy,
                        const Rational& capacity);

/// An instance with integer sizes plus the factor all sizes were scaled by.
/// Capacities map as C -> C*scale; packings and ratios are unaffected.
struct ScaledInstance {
    Instance instance;
    Rational scale;
};

/// Multiplies all sizes by the least common multiple of their denominators.
/// Values are left untouched.
ScaledInstance scale_to_integers(const Instance& instance);

/// Memory/state budgets for the exact evaluators. The defaults keep peak
/// memory in the low hundreds of MB; raise them explicitly for bigger runs.
struct EvaluatorLimits {
    std::uint64_t max_dp_cells = std::uint64_t(1) << 22;
    std::uint64_t max_sparse_states = std::uint64_t(1) << 22;
};

/**
 * Optimal packing values for every integer capacity in [0, max_capacity],
 * with reconstructible witness sets. Requires integer sizes (use
 * scale_to_integers first) and max_capacity <= l(I).
 */
class OptTable {
public:
    const Rational& value(std::uint64_t capacity) const;
    /// One optimal item set for the capacity, in instance order.
    std::vector<std::string> witness(std::uint64_t capacity) const;
    std::uint64_t max_capacity() const { return values_.empty() ? 0 : values_.size() - 1; }

private:
    friend OptTable opt_all_capacities(const Instance&, std::uint64_t, const EvaluatorLimits&);

    std::vector<Rational> values_;       // indexed by capacity
    std::vector<std::uint64_t> take_;    // n x (max_capacity+1) bit matrix
    std::vector<std::uint64_t> sizes_;   // integer item sizes
    std::vector<std::string> ids_;       // item ids, instance order
};

/// Classic dynamic program over integer sizes maximizing exact rational
/// value. Throws ResourceError when the table exceeds the cell budget.
OptTable opt_all_capacities(const Instance& instance, std::uint64_t max_capacity,
                            const EvaluatorLimits& limits = {});

/**
 * A worst-case ratio: either a finite rational or infinity (the policy
 * packed value 0 at a capacity where the optimum is positive).
 */
class RobustnessFactor {
public:
    RobustnessFactor() = default;
    RobustnessFactor(Rational value) : value_(std::move(value)) {} // NOLINT: implicit by design
    static RobustnessFactor infinite();

    bool is_finite() const { return finite_; }
    /// Finite value; throws PreconditionError for the infinite factor.
    const Rational& value() const;

    std::string str() const;
    double to_double() const;

    friend bool operator==(const RobustnessFactor& a, const RobustnessFactor& b);
    friend bool operator!=(const RobustnessFactor& a, const RobustnessFactor& b) { return !(a == b); }
    friend bool operator<(const RobustnessFactor& a, const RobustnessFactor& b);
    friend bool operator>(const RobustnessFactor& a, const RobustnessFactor& b) { return b < a; }
    friend bool operator<=(const RobustnessFactor& a, const RobustnessFactor& b) { return !(b < a); }
    friend bool operator>=(const RobustnessFactor& a, const RobustnessFactor& b) { return !(a < b); }

private:
    bool finite_ = true;
    Rational value_ = Rational(0);
};

std::ostream& operator<<(std::ostream& os, const RobustnessFactor& f);

/// One row of the optional per-capacity table (original capacity units).
struct CapacityRow {
    Rational capacity;
    Rational opt_value;
    Rational policy_value;
    RobustnessFactor ratio;
};

/**
 * Worst-case comparison of a policy against the optimum. The witness
 * capacity attains the factor: factor = v(witness_opt) / v(policy packing
 * at witness_capacity), and witness_opt is feasible there.
 */
struct RobustnessReport {
    RobustnessFactor factor;
    Rational witness_capacity;            // original capacity units
    std::vector<std::string> witness_opt; // optimal packing at the witness
    std::optional<std::vector<CapacityRow>> per_capacity;
};

/// Evaluation strategy for robustness_factor. Both produce identical
/// reports; the automatic choice picks by table size.
enum class RobustnessMethod {
    automatic,
    dense,  // DP table plus a scan over every integer capacity
    sparse, // evaluation only at subset-sum breakpoints of the step functions
};

struct RobustnessOptions {
    EvaluatorLimits limits;
    RobustnessMethod method = RobustnessMethod::automatic;
    bool per_capacity = false; // collect the full table (forces dense)
};

/**
 * Exact robustness factor of a universal policy: the maximum over all
 * integer capacities c in [0, l(I)] (after size scaling) of
 * v(Opt(I,c)) / v(policy packing at c), with 0/0 counted as 1 and
 * positive/0 as infinity. With integer sizes both step functions are
 * constant between consecutive integers, so this equals the supremum over
 * real capacities. Ties are broken toward the smallest witness capacity.
 */
RobustnessReport robustness_factor(const Instance& instance, const UniversalPolicy& policy,
                                   const RobustnessOptions& options = {});

struct AlphaCheck {
    bool robust;
    /// The report's witness is the violation certificate when not robust.
    RobustnessReport report;
};

/// Decides factor <= alpha exactly. Requires alpha >= 1.
AlphaCheck check_alpha_robust(const Instance& instance, const UniversalPolicy& policy,
                              const Rational& alpha, const RobustnessOptions& options = {});

/// True iff the worst ratio r is finite and satisfies r^2 <= r + 1, the
/// exact rational test for r <= golden ratio.
bool check_alpha_robust_phi(const Instance& instance, const UniversalPolicy& policy,
                            const RobustnessOptions& options = {});

struct BestSearchOptions {
    std::size_t max_items = 8; // n! permutations are enumerated
    EvaluatorLimits limits;
};

struct BestUniversal {
    UniversalPolicy policy;
    RobustnessFactor factor;
};

/**
 * Brute force over all n! universal policies; returns one minimizing the
 * robustness factor (the first in lexicographic instance order on ties).
 * Throws ResourceError when the instance exceeds max_items.
 */
BestUniversal best_universal_robustness(const Instance& instance,
                                        const BestSearchOptions& options = {});

/// Exact v(Opt(instance, capacity)) for an arbitrary rational capacity.
Rational opt_value(const Instance& instance, const Rational& capacity,
                   const EvaluatorLimits& limits = {});

/**
 * Ratio of the optimum at the capacity to the best value obtainable after
 * packing `first_id` first, i.e. v(first) plus the optimum of the
 * remaining items in the remaining capacity. When no second item fits,
 * the denominator is just v(first). Throws PreconditionError when the
 * first item does not fit the capacity.
 */
Rational first_item_bound(const Instance& instance, std::string_view first_id,
                          const Rational& capacity, const EvaluatorLimits& limits = {});

} // namespace uknap
