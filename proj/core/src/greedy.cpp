#include "uknap/greedy.hpp"

#include "uknap/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace uknap {

namespace {

// Fenwick tree over item ranks holding exact prefix value sums.
class ValueSumTree {
public:
    explicit ValueSumTree(std::size_t n) : sums_(n + 1) {}

    void add(std::size_t rank_1based, const Rational& value) {
        for (std::size_t i = rank_1based; i < sums_.size(); i += i & (~i + 1))
            sums_[i] += value;
    }

    Rational prefix_sum(std::size_t rank_1based) const {
        Rational out;
        for (std::size_t i = rank_1based; i > 0; i &= i - 1)
            out += sums_[i];
        return out;
    }

private:
    std::vector<Rational> sums_;
};

std::vector<std::uint32_t> indices_by_decreasing_dtilde(const Instance& instance) {
    std::vector<std::uint32_t> order(instance.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return dtilde_greater(instance.item(a), instance.item(b));
    });
    return order;
}

} // namespace

GreedyOutcome mgreedy(const Instance& instance, const Rational& capacity) {
    if (capacity.sign() < 0)
        throw PreconditionError("mgreedy requires a non-negative capacity, got " + capacity.str());

    std::vector<std::uint32_t> fitting;
    for (std::uint32_t i = 0; i < instance.size(); ++i)
        if (instance.item(i).size <= capacity)
            fitting.push_back(i);
    std::sort(fitting.begin(), fitting.end(), [&](std::uint32_t a, std::uint32_t b) {
        return dtilde_greater(instance.item(a), instance.item(b));
    });

    GreedyOutcome out;
    Rational prefix_size;
    Rational prefix_value;
    std::size_t k = 0;
    while (k < fitting.size() && prefix_size + instance.item(fitting[k]).size <= capacity) {
        prefix_size += instance.item(fitting[k]).size;
        prefix_value += instance.item(fitting[k]).value;
        out.greedy_set.push_back(instance.item(fitting[k]).id);
        ++k;
    }

    if (k < fitting.size() && instance.item(fitting[k]).value > prefix_value) {
        out.kind = GreedyOutcome::Kind::swap_singleton;
        out.swap_item = instance.item(fitting[k]).id;
        out.packed = {*out.swap_item};
    } else {
        out.kind = GreedyOutcome::Kind::prefix_set;
        out.packed = out.greedy_set;
    }
    return out;
}

bool is_swap_item(const Instance& instance, std::string_view item_id) {
    const Item& item = instance.item(instance.index_of(item_id));
    Rational dominated_value;
    for (const Item& other : instance.items()) {
        if (other.size <= item.size && dtilde_greater(other, item))
            dominated_value += other.value;
    }
    return item.value > dominated_value;
}

bool is_swap_item(const Instance& instance, const Item& item) {
    return is_swap_item(instance, item.id);
}

std::vector<bool> swap_item_mask(const Instance& instance) {
    const std::size_t n = instance.size();

    // Rank items by (size, tiebreak); the tiebreak keeps ranks unique
    // without affecting the "size <= l(i)" prefix queried below.
    std::vector<std::uint32_t> by_size(n);
    std::iota(by_size.begin(), by_size.end(), 0);
    std::sort(by_size.begin(), by_size.end(), [&](std::uint32_t a, std::uint32_t b) {
        const Item& ia = instance.item(a);
        const Item& ib = instance.item(b);
        if (ia.size != ib.size)
            return ia.size < ib.size;
        return ia.tiebreak < ib.tiebreak;
    });
    std::vector<std::uint32_t> rank(n);
    for (std::uint32_t r = 0; r < n; ++r)
        rank[by_size[r]] = r + 1;

    // Number of items with size <= size(i): upper bound over the sorted sizes.
    auto count_not_larger = [&](const Rational& size) {
        std::size_t lo = 0;
        std::size_t hi = n;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (instance.item(by_size[mid]).size <= size)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    };

    std::vector<bool> mask(n, false);
    ValueSumTree seen(n);
    for (std::uint32_t i : indices_by_decreasing_dtilde(instance)) {
        const Item& item = instance.item(i);
        // Everything inserted so far has strictly higher density order.
        mask[i] = item.value > seen.prefix_sum(count_not_larger(item.size));
        seen.add(rank[i], item.value);
    }
    return mask;
}

std::vector<std::string> swap_items(const Instance& instance) {
    const std::vector<bool> mask = swap_item_mask(instance);
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i])
            ids.push_back(instance.item(i).id);
    return ids;
}

} // namespace uknap
