#pragma once

#include "uknap/instance.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uknap {

/**
 * Result of the modified greedy algorithm for one capacity. Either the
 * maximal density-ordered prefix fitting the capacity is packed
 * (prefix_set), or a single item worth more than that prefix
 * (swap_singleton).
 */
struct GreedyOutcome {
    enum class Kind { prefix_set, swap_singleton };

    Kind kind = Kind::prefix_set;
    std::vector<std::string> packed;     // the items actually packed
    std::vector<std::string> greedy_set; // the prefix P, in density order
    std::optional<std::string> swap_item;
};

/**
 * Modified greedy for a known capacity: discard items larger than the
 * capacity, sort the rest by decreasing density order, take the longest
 * prefix P that fits. If the first item s that no longer fits is worth
 * strictly more than P, pack {s} instead (ties go to P).
 *
 * The packed value is always at least half the optimum for this capacity.
 * Throws PreconditionError for negative capacities.
 */
GreedyOutcome mgreedy(const Instance& instance, const Rational& capacity);

/**
 * True iff the item is worth strictly more than all items of higher
 * density order and size at most its own combined. Equivalently, the item
 * is returned alone by mgreedy for some capacity (its own size, in
 * particular). Items of value zero are never swap items; the densest item
 * of an instance is one exactly when its value is positive.
 *
 * Throws PreconditionError when the item is not part of the instance.
 */
bool is_swap_item(const Instance& instance, std::string_view item_id);
bool is_swap_item(const Instance& instance, const Item& item);

/**
 * All swap items in time O(n log n): the items are scanned in decreasing
 * density order while a size-ordered search structure augmented with
 * value sums answers "is the new item worth more than everything at most
 * its size already seen".
 *
 * Returns one flag per item, aligned with instance.items().
 */
std::vector<bool> swap_item_mask(const Instance& instance);

/// Ids of all swap items, in instance order.
std::vector<std::string> swap_items(const Instance& instance);

} // namespace uknap
