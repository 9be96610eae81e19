#include "uknap/instance.hpp"

#include "uknap/errors.hpp"

#include <utility>

namespace uknap {

Instance::Instance(std::vector<Item> items) : items_(std::move(items)) {
    index_.reserve(items_.size());
    std::vector<bool> tiebreak_seen(items_.size(), false);
    const long n = static_cast<long>(items_.size());
    for (std::size_t i = 0; i < items_.size(); ++i) {
        const Item& it = items_[i];
        if (it.id.empty())
            throw PreconditionError("item at position " + std::to_string(i) + " has an empty id");
        if (!index_.emplace(it.id, i).second)
            throw PreconditionError("duplicate item id '" + it.id + "'");
        if (it.size.sign() <= 0)
            throw PreconditionError("item '" + it.id + "' has non-positive size " + it.size.str());
        if (it.value.sign() < 0)
            throw PreconditionError("item '" + it.id + "' has negative value " + it.value.str());
        if (it.tiebreak < 1 || it.tiebreak > n)
            throw PreconditionError("item '" + it.id + "' has tiebreak " +
                                    std::to_string(it.tiebreak) + " outside 1.." +
                                    std::to_string(n));
        if (tiebreak_seen[static_cast<std::size_t>(it.tiebreak - 1)])
            throw PreconditionError("duplicate tiebreak index " + std::to_string(it.tiebreak));
        tiebreak_seen[static_cast<std::size_t>(it.tiebreak - 1)] = true;
        if (it.value != it.size)
            unit_density_ = false;
    }
}

Instance Instance::with_positional_tiebreaks(std::vector<Item> items) {
    for (std::size_t i = 0; i < items.size(); ++i)
        items[i].tiebreak = static_cast<int>(i) + 1;
    return Instance(std::move(items));
}

bool Instance::contains(std::string_view id) const {
    return index_.find(std::string(id)) != index_.end();
}

std::size_t Instance::index_of(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end())
        throw PreconditionError("item '" + std::string(id) + "' is not part of the instance");
    return it->second;
}

Rational Instance::total_value() const {
    Rational sum;
    for (const Item& it : items_)
        sum += it.value;
    return sum;
}

Rational Instance::total_size() const {
    Rational sum;
    for (const Item& it : items_)
        sum += it.size;
    return sum;
}

Rational density(const Item& item) {
    return item.value / item.size;
}

bool dtilde_greater(const Item& a, const Item& b) {
    // Compare v(a)/l(a) with v(b)/l(b) by cross multiplication; sizes are positive.
    const Rational lhs = a.value * b.size;
    const Rational rhs = b.value * a.size;
    if (lhs != rhs)
        return lhs > rhs;
    return a.tiebreak > b.tiebreak;
}

bool prec_unit(const Item& a, const Item& b) {
    if (a.value != b.value)
        return a.value < b.value;
    return a.tiebreak < b.tiebreak;
}

} // namespace uknap
