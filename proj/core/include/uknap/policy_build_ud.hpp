#pragma once

#include "uknap/instance.hpp"
#include "uknap/policy.hpp"

namespace uknap {

/**
 * Builds a universal policy for unit-density instances whose worst-case
 * ratio against the optimum is at most the golden ratio. Items are
 * processed from smallest to largest and inserted as far back as possible
 * such that no earlier item is more than a factor phi smaller; the
 * comparison is the exact lt_phi_times test.
 *
 * Quadratic reference implementation and differential-testing oracle for
 * universal_ud_fast. Throws PreconditionError on non-unit-density input,
 * naming the offending item.
 */
UniversalPolicy universal_ud_naive(const Instance& instance);

/**
 * Same output permutation as universal_ud_naive in time O(n log n),
 * searching for each insertion anchor only among the items that were ever
 * inserted at the front of the sequence (they appear in the sequence in
 * decreasing value order, so a binary search suffices).
 */
UniversalPolicy universal_ud_fast(const Instance& instance);

} // namespace uknap
