#pragma once

#include "uknap/rational.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace uknap {

/**
 * A single knapsack item. The id is an opaque, instance-unique name; the
 * tiebreak indices of an instance form a bijection onto {1..n} and make
 * every ordering used by the algorithms a strict total order.
 */
struct Item {
    std::string id;
    Rational value; // >= 0
    Rational size;  // > 0
    int tiebreak = 0;
};

/**
 * An immutable set of items. Construction validates all invariants:
 * distinct ids, tiebreaks forming a bijection onto {1..n}, strictly
 * positive sizes and non-negative values.
 */
class Instance {
public:
    Instance() = default;
    explicit Instance(std::vector<Item> items);

    /// Builds an instance whose tiebreak indices are the 1-based positions
    /// in the given list, the convention used by all generators.
    static Instance with_positional_tiebreaks(std::vector<Item> items);

    const std::vector<Item>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const Item& item(std::size_t index) const { return items_[index]; }

    bool contains(std::string_view id) const;
    /// Index of the item with the given id; throws PreconditionError if absent.
    std::size_t index_of(std::string_view id) const;

    /// True iff value == size for every item.
    bool unit_density() const { return unit_density_; }

    Rational total_value() const;
    Rational total_size() const;

private:
    std::vector<Item> items_;
    std::unordered_map<std::string, std::size_t> index_;
    bool unit_density_ = true;
};

/// value/size in canonical form. The size is positive by instance invariant.
Rational density(const Item& item);

/**
 * The strict total density order: a is greater than b iff a is denser, or
 * both are equally dense and a has the larger tiebreak index.
 */
bool dtilde_greater(const Item& a, const Item& b);

/**
 * The strict total order used for unit-density instances: a precedes b iff
 * a has the smaller value, or equal values and the smaller tiebreak index.
 */
bool prec_unit(const Item& a, const Item& b);

} // namespace uknap
