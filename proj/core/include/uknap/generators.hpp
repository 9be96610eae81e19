#pragma once

#include "uknap/instance.hpp"
#include "uknap/policy.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace uknap {

/**
 * Adversarial family indexed by Fibonacci numbers: n items with
 * size F_n + F_i - 1 and value 1 + i/n (F_1 = F_2 = 1). Whatever item a
 * policy tries first, some capacity forces a ratio approaching 2.
 * Requires n >= 3.
 */
Instance gen_fibonacci(int n);

/**
 * Five unit-density items realizing the golden-ratio lower bound up to a
 * rational approximation of phi. phi_hat is the Fibonacci convergent
 * F(k+1)/F(k) for k = phi_precision; the approximation error is below
 * 1/F(k)^2, recorded in phi_error_bound.
 */
struct GoldenInstance {
    Instance instance;
    Rational epsilon;
    Rational phi_hat;
    Rational phi_error_bound;
};

/// Requires 0 < epsilon <= 1/100 and phi_precision >= 10.
GoldenInstance gen_golden(const Rational& epsilon, int phi_precision);

/// A SubsetSum question: is some subset of the weights summing to target?
struct SubsetSumInstance {
    std::vector<std::uint64_t> weights;
    std::uint64_t target = 0;
};

/**
 * True iff the instance has the normalized form the hardness gadgets are
 * designed around: the target is a power of two at least 8, every weight
 * lies in [2, target/2), and every weight differs by at least 2 from the
 * closest power of two.
 */
bool has_normalized_form(const SubsetSumInstance& s);

/**
 * Rewrites an arbitrary SubsetSum instance into an equisolvable one with
 * the normalized form: weights and target are multiplied by 6, the target
 * is lifted to the next suitable power of two, and two filler weights
 * covering the lift are appended. Requires 0 < target <= sum of weights.
 */
SubsetSumInstance normalize_subsetsum(std::vector<std::uint64_t> weights, std::uint64_t target);

struct SubsetSumAnswer {
    bool solvable = false;
    std::vector<std::size_t> witness; // indices into weights, when solvable
};

/// Exact reachable-sums dynamic program. The weight sum must stay within
/// the given budget (ResourceError otherwise).
SubsetSumAnswer subsetsum_dp(const SubsetSumInstance& s,
                             std::uint64_t max_sum_budget = std::uint64_t(1) << 26);

enum class GadgetLabel { regular, auxiliary, dummy };

/**
 * A knapsack instance plus a universal policy whose alpha-robustness is
 * equivalent to the unsolvability of the underlying SubsetSum instance.
 * Items are labeled by their role in the construction.
 */
struct HardnessGadget {
    Instance instance;
    UniversalPolicy policy;
    Rational alpha;
    Rational epsilon;
    std::map<std::string, GadgetLabel> labels;
    SubsetSumInstance source;
};

/**
 * General-densities gadget: one regular item (value = size = w) per
 * weight, auxiliary items of size 2^k and value 2^k*(1-eps) covering all
 * capacities below the target, and one large dummy item absorbing all
 * capacities above it. The policy tries the dummy, then the auxiliary
 * items descending, then the regular items by decreasing weight. It is
 * alpha-robust iff the SubsetSum instance has no solution.
 *
 * Requires the target to be a power of two >= 8 and alpha > T/(T-1).
 */
HardnessGadget gen_hardness_general(const SubsetSumInstance& s, const Rational& alpha);

/**
 * Unit-density gadget with eps = 1/T^2 and alpha = (T-eps)/((1-eps)(T-1)),
 * using a ladder of dummy items instead of a single one. Same equivalence
 * as the general gadget. Requires the target to be a power of two >= 8
 * and all weights >= 2 (so no regular item can plug a sub-unit gap).
 */
HardnessGadget gen_hardness_unit(const SubsetSumInstance& s);

/**
 * Seeded reproducible instance: n items, integer sizes in [1, max_size],
 * integer values in [0, max_value] (or value = size when unit_density).
 * The stream is independent of the platform's distribution implementations.
 */
Instance gen_random(std::size_t n, std::uint64_t seed, std::uint64_t max_value,
                    std::uint64_t max_size, bool unit_density);

} // namespace uknap
