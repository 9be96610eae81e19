#include "uknap/policy_build.hpp"

#include "uknap/greedy.hpp"

#include <algorithm>
#include <cstdint>
#include <list>
#include <map>
#include <numeric>
#include <set>

namespace uknap {

namespace {

std::vector<std::uint32_t> indices_by_size(const Instance& instance) {
    std::vector<std::uint32_t> order(instance.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        const Item& ia = instance.item(a);
        const Item& ib = instance.item(b);
        if (ia.size != ib.size)
            return ia.size < ib.size;
        return ia.tiebreak < ib.tiebreak;
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

// (density, tiebreak) key of the strict density order.
struct DtildeKey {
    Rational density;
    int tiebreak;

    friend bool operator<(const DtildeKey& a, const DtildeKey& b) {
        if (a.density != b.density)
            return a.density < b.density;
        return a.tiebreak < b.tiebreak;
    }
    friend bool operator>(const DtildeKey& a, const DtildeKey& b) { return b < a; }
};

} // namespace

UniversalPolicy universal_naive(const Instance& instance) {
    std::vector<std::uint32_t> sequence;
    sequence.reserve(instance.size());
    for (std::uint32_t i : indices_by_size(instance)) {
        const Item& item = instance.item(i);
        if (is_swap_item(instance, item)) {
            sequence.insert(sequence.begin(), i);
            continue;
        }
        std::size_t j = 0;
        while (j < sequence.size() && dtilde_greater(instance.item(sequence[j]), item))
            ++j;
        sequence.insert(sequence.begin() + static_cast<std::ptrdiff_t>(j), i);
    }
    return to_policy(instance, sequence);
}

UniversalPolicy universal_fast(const Instance& instance) {
    const std::size_t n = instance.size();
    std::vector<Rational> densities;
    densities.reserve(n);
    for (const Item& item : instance.items())
        densities.push_back(density(item));
    auto key_of = [&](std::uint32_t i) {
        return DtildeKey{densities[i], instance.item(i).tiebreak};
    };

    // Trees ordered by decreasing density order; in-order traversal of a
    // tree is its stretch of the output sequence, so inserting an item at
    // its sorted position realizes the scan for the first lower-density
    // position.
    struct DensityGreater {
        const Instance* instance;
        const std::vector<Rational>* densities;
        bool operator()(std::uint32_t a, std::uint32_t b) const {
            const Rational& da = (*densities)[a];
            const Rational& db = (*densities)[b];
            if (da != db)
                return da > db;
            return instance->item(a).tiebreak > instance->item(b).tiebreak;
        }
    };
    using Tree = std::set<std::uint32_t, DensityGreater>;
    const DensityGreater cmp{&instance, &densities};

    // Front-to-back list of trees; each but the last holds exactly one swap
    // item as its minimum. The tail tree collects the non-swap items behind
    // the last swap item and is never displaced.
    std::list<Tree> trees;
    trees.emplace_back(cmp);
    const auto tail = trees.begin();

    // Index of the trees that can still receive items, ordered by the
    // density key of their swap item. Trees denser than a newly prepended
    // swap item can never receive items again and are dropped.
    std::map<DtildeKey, std::list<Tree>::iterator> live;

    const std::vector<bool> swap_mask = swap_item_mask(instance);
    for (std::uint32_t i : indices_by_size(instance)) {
        if (swap_mask[i]) {
            trees.emplace_front(cmp);
            trees.front().insert(i);
            const DtildeKey key = key_of(i);
            while (!live.empty() && live.rbegin()->first > key)
                live.erase(std::prev(live.end()));
            live.emplace(key, trees.begin());
        } else {
            // First tree whose swap item has lower density order than the
            // item; everything in earlier trees is denser.
            auto it = live.lower_bound(key_of(i));
            Tree& target = it == live.begin() ? *tail : *std::prev(it)->second;
            target.insert(i);
        }
    }

    std::vector<std::uint32_t> sequence;
    sequence.reserve(n);
    for (const Tree& tree : trees)
        for (std::uint32_t i : tree)
            sequence.push_back(i);
    return to_policy(instance, sequence);
}

} // namespace uknap
