#include "uknap/policy.hpp"

namespace uknap {

DecisionTreeRef tree_node(std::string item, DecisionTreeRef fit, DecisionTreeRef nofit) {
    return std::make_shared<const DecisionTreeNode>(
        DecisionTreeNode{std::move(item), std::move(fit), std::move(nofit)});
}

DecisionTreePolicy DecisionTreePolicy::from_universal(const UniversalPolicy& policy) {
    DecisionTreeRef next;
    const auto& order = policy.order();
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        next = tree_node(*it, next, next);
    return DecisionTreePolicy(next);
}

} // namespace uknap
