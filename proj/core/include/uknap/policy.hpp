#pragma once

#include <memory>
#include <string>
#include <vector>

namespace uknap {

/// A fixed packing order: the items are tried in this sequence regardless
/// of which of them fit.
class UniversalPolicy {
public:
    UniversalPolicy() = default;
    explicit UniversalPolicy(std::vector<std::string> order) : order_(std::move(order)) {}

    const std::vector<std::string>& order() const { return order_; }
    std::size_t size() const { return order_.size(); }

    friend bool operator==(const UniversalPolicy& a, const UniversalPolicy& b) {
        return a.order_ == b.order_;
    }
    friend bool operator!=(const UniversalPolicy& a, const UniversalPolicy& b) {
        return !(a == b);
    }

private:
    std::vector<std::string> order_;
};

struct DecisionTreeNode;
using DecisionTreeRef = std::shared_ptr<const DecisionTreeNode>;

/// Node of an adaptive packing policy. `fit` is followed when the item was
/// packed, `nofit` when it was discarded. Subtrees may be shared.
struct DecisionTreeNode {
    std::string item;
    DecisionTreeRef fit;
    DecisionTreeRef nofit;
};

DecisionTreeRef tree_node(std::string item, DecisionTreeRef fit, DecisionTreeRef nofit);

/**
 * An adaptive policy: a binary decision tree holding one item per node.
 * Every root-to-leaf path must name every item of the instance exactly
 * once; this is validated along the traversed path when packing.
 */
class DecisionTreePolicy {
public:
    DecisionTreePolicy() = default;
    explicit DecisionTreePolicy(DecisionTreeRef root) : root_(std::move(root)) {}

    /// The degenerate tree that tries items in the given fixed order on
    /// every path. Subtrees are shared, so the tree has linear size.
    static DecisionTreePolicy from_universal(const UniversalPolicy& policy);

    const DecisionTreeRef& root() const { return root_; }

private:
    DecisionTreeRef root_;
};

} // namespace uknap
