#include "uknap/policy_build_ud.hpp"

#include "uknap/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace uknap {

namespace {

void require_unit_density(const Instance& instance) {
    if (instance.unit_density())
        return;
    for (const Item& item : instance.items())
        if (item.value != item.size)
            throw PreconditionError("instance is not unit-density: item '" + item.id +
                                    "' has value " + item.value.str() + " but size " +
                                    item.size.str());
}

std::vector<std::uint32_t> indices_by_prec_unit(const Instance& instance) {
    std::vector<std::uint32_t> order(instance.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return prec_unit(instance.item(a), instance.item(b));
    });
    return order;
}

UniversalPolicy to_policy(const Instance& instance, const std::vector<std::uint32_t>& permutation) {
    std::vector<std::string> order;
    order.reserve(permutation.size());
    for (std::uint32_t i : permutation)
        order.push_back(instance.item(i).id);
    return UniversalPolicy(std::move(order));
}

} // namespace

UniversalPolicy universal_ud_naive(const Instance& instance) {
    require_unit_density(instance);
    std::vector<std::uint32_t> sequence;
    sequence.reserve(instance.size());
    for (std::uint32_t i : indices_by_prec_unit(instance)) {
        const Rational& value = instance.item(i).value;
        std::size_t j = 0;
        while (j < sequence.size() && lt_phi_times(value, instance.item(sequence[j]).value))
            ++j;
        sequence.insert(sequence.begin() + static_cast<std::ptrdiff_t>(j), i);
    }
    return to_policy(instance, sequence);
}

UniversalPolicy universal_ud_fast(const Instance& instance) {
    require_unit_density(instance);
    const std::size_t n = instance.size();

    // Intrusive doubly linked list over item indices; insertion in front of
    // a known node is O(1).
    constexpr std::uint32_t nil = UINT32_MAX;
    std::vector<std::uint32_t> next(n, nil);
    std::vector<std::uint32_t> prev(n, nil);
    std::uint32_t head = nil;
    std::uint32_t back = nil;

    auto push_back = [&](std::uint32_t x) {
        prev[x] = back;
        if (back != nil)
            next[back] = x;
        else
            head = x;
        back = x;
    };
    auto insert_before = [&](std::uint32_t x, std::uint32_t anchor) {
        prev[x] = prev[anchor];
        next[x] = anchor;
        if (prev[anchor] != nil)
            next[prev[anchor]] = x;
        else
            head = x;
        prev[anchor] = x;
    };

    // Items that were ever at the front, in insertion order. Each new front
    // item exceeds the previous one by more than a factor phi, so this is
    // sorted by increasing value and reverse-sorted by final position.
    std::vector<std::uint32_t> front_items;

    for (std::uint32_t i : indices_by_prec_unit(instance)) {
        const Rational& value = instance.item(i).value;
        // Last front item whose value is small enough to stop the scan;
        // if one exists, the first stop position overall belongs to it.
        auto split = std::partition_point(
            front_items.begin(), front_items.end(), [&](std::uint32_t f) {
                return !lt_phi_times(value, instance.item(f).value);
            });
        if (split == front_items.begin()) {
            push_back(i);
        } else {
            insert_before(i, *std::prev(split));
        }
        if (head == i)
            front_items.push_back(i);
    }

    std::vector<std::uint32_t> sequence;
    sequence.reserve(n);
    for (std::uint32_t i = head; i != nil; i = next[i])
        sequence.push_back(i);
    return to_policy(instance, sequence);
}

} // namespace uknap
