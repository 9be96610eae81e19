#pragma once

#include "uknap/instance.hpp"
#include "uknap/policy.hpp"

namespace uknap {

/**
 * Builds a universal policy whose packing is worth at least half the
 * optimum for every capacity. Items are processed by non-decreasing size
 * (ties by tiebreak index): swap items are prepended to the sequence,
 * every other item is inserted in front of the first item of lower
 * density order.
 *
 * Quadratic reference implementation; kept permanently as the
 * differential-testing oracle for universal_fast.
 */
UniversalPolicy universal_naive(const Instance& instance);

/**
 * Same output permutation as universal_naive in time O(n log n).
 *
 * After bulk swap-item classification, the partial sequence is kept as a
 * list of density-ordered search trees, one per swap item (holding the
 * items between it and the previous swap item) plus one tail tree behind
 * the last swap item. A density-ordered index over the trees that can
 * still receive items finds each insertion point in O(log n).
 */
UniversalPolicy universal_fast(const Instance& instance);

} // namespace uknap
