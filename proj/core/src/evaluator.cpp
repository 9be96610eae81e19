#include "uknap/evaluator.hpp"

#include "uknap/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <utility>

namespace uknap {

namespace {

std::vector<std::uint32_t> permutation_indices(const Instance& instance,
                                               const UniversalPolicy& policy) {
    if (policy.size() != instance.size())
        throw PreconditionError("policy lists " + std::to_string(policy.size()) +
                                " items but the instance has " + std::to_string(instance.size()));
    std::vector<std::uint32_t> indices;
    indices.reserve(policy.size());
    std::vector<bool> seen(instance.size(), false);
    for (const std::string& id : policy.order()) {
        const std::size_t i = instance.index_of(id);
        if (seen[i])
            throw PreconditionError("policy lists item '" + id + "' twice");
        seen[i] = true;
        indices.push_back(static_cast<std::uint32_t>(i));
    }
    return indices;
}

// Scaled instance plus its integer sizes and total, ready for evaluation
// over integer capacities.
struct ScaledView {
    Instance instance;
    Rational scale;
    std::vector<std::uint64_t> sizes;
    std::uint64_t total = 0;
};

ScaledView make_scaled_view(const Instance& instance) {
    ScaledInstance scaled = scale_to_integers(instance);
    ScaledView view{std::move(scaled.instance), std::move(scaled.scale), {}, 0};

    const mpz_class total = view.instance.total_size().numerator();
    if (!total.fits_ulong_p())
        throw ResourceError("scaled total size " + total.get_str() +
                            " exceeds the evaluable 64-bit capacity range");
    view.total = total.get_ui();
    view.sizes.reserve(view.instance.size());
    for (const Item& item : view.instance.items())
        view.sizes.push_back(item.size.numerator().get_ui());
    return view;
}

Rational pack_value_at(const ScaledView& view, const std::vector<std::uint32_t>& perm,
                       std::uint64_t capacity) {
    std::uint64_t residual = capacity;
    Rational value;
    for (std::uint32_t i : perm) {
        if (view.sizes[i] <= residual) {
            residual -= view.sizes[i];
            value += view.instance.item(i).value;
        }
    }
    return value;
}

RobustnessFactor make_ratio(const Rational& opt_value, const Rational& policy_value) {
    if (policy_value.is_zero())
        return opt_value.is_zero() ? RobustnessFactor(Rational(1)) : RobustnessFactor::infinite();
    return RobustnessFactor(opt_value / policy_value);
}

// One reachable subset-sum of item sizes together with the best value at
// exactly that sum and a subset achieving it.
struct SumState {
    std::uint64_t sum;
    Rational value;
    std::uint64_t subset;
};

std::vector<SumState> subset_sum_states(const ScaledView& view, std::uint64_t max_states) {
    const std::size_t n = view.instance.size();
    if (n > 64)
        throw ResourceError("breakpoint evaluation supports at most 64 items, got " +
                            std::to_string(n));
    std::vector<SumState> states{SumState{0, Rational(0), 0}};
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t item_size = view.sizes[i];
        const Rational& item_value = view.instance.item(i).value;
        const std::uint64_t bit = std::uint64_t(1) << i;

        std::vector<SumState> merged;
        merged.reserve(std::min<std::size_t>(states.size() * 2, max_states));
        std::size_t without = 0; // scans states as they are
        std::size_t with = 0;    // scans states shifted by the current item
        while (without < states.size() || with < states.size()) {
            const std::uint64_t sum_without =
                without < states.size() ? states[without].sum : std::numeric_limits<std::uint64_t>::max();
            const std::uint64_t sum_with =
                with < states.size() ? states[with].sum + item_size : std::numeric_limits<std::uint64_t>::max();
            if (sum_without < sum_with) {
                merged.push_back(states[without]);
                ++without;
            } else if (sum_with < sum_without) {
                merged.push_back(SumState{sum_with, states[with].value + item_value,
                                          states[with].subset | bit});
                ++with;
            } else {
                // Equal sums: keep the larger value, ties without the item.
                Rational with_value = states[with].value + item_value;
                if (with_value > states[without].value)
                    merged.push_back(SumState{sum_with, std::move(with_value),
                                              states[with].subset | bit});
                else
                    merged.push_back(states[without]);
                ++without;
                ++with;
            }
            if (merged.size() > max_states)
                throw ResourceError("subset-sum breakpoint count exceeds the state budget of " +
                                    std::to_string(max_states) +
                                    "; raise EvaluatorLimits::max_sparse_states");
        }
        states = std::move(merged);
    }
    return states;
}

// Turns per-sum best values into prefix maxima, so states[k] describes the
// optimum over all capacities in [states[k].sum, states[k+1].sum).
void prefix_best_in_place(std::vector<SumState>& states) {
    for (std::size_t k = 1; k < states.size(); ++k) {
        if (states[k].value < states[k - 1].value) {
            states[k].value = states[k - 1].value;
            states[k].subset = states[k - 1].subset;
        }
    }
}

std::vector<std::string> subset_ids(const Instance& instance, std::uint64_t subset) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < instance.size(); ++i)
        if (subset >> i & 1)
            ids.push_back(instance.item(i).id);
    return ids;
}

Rational unscale_capacity(std::uint64_t capacity, const Rational& scale) {
    return Rational(mpz_class(capacity)) / scale;
}

RobustnessReport dense_report(const ScaledView& view, const std::vector<std::uint32_t>& perm,
                              const RobustnessOptions& options) {
    const OptTable table = opt_all_capacities(view.instance, view.total, options.limits);

    RobustnessReport report;
    std::vector<CapacityRow> rows;
    bool have = false;
    std::uint64_t witness = 0;
    for (std::uint64_t c = 0; c <= view.total; ++c) {
        const Rational policy_value = pack_value_at(view, perm, c);
        RobustnessFactor ratio = make_ratio(table.value(c), policy_value);
        if (!have || ratio > report.factor) {
            report.factor = ratio;
            witness = c;
            have = true;
        }
        if (options.per_capacity)
            rows.push_back(CapacityRow{unscale_capacity(c, view.scale), table.value(c),
                                       policy_value, std::move(ratio)});
    }
    report.witness_capacity = unscale_capacity(witness, view.scale);
    report.witness_opt = table.witness(witness);
    if (options.per_capacity)
        report.per_capacity = std::move(rows);
    return report;
}

RobustnessReport sparse_report(const ScaledView& view, const std::vector<std::uint32_t>& perm,
                               const RobustnessOptions& options) {
    std::vector<SumState> states = subset_sum_states(view, options.limits.max_sparse_states);
    prefix_best_in_place(states);

    RobustnessReport report;
    bool have = false;
    std::uint64_t witness = 0;
    std::uint64_t witness_subset = 0;
    for (const SumState& state : states) {
        const Rational policy_value = pack_value_at(view, perm, state.sum);
        RobustnessFactor ratio = make_ratio(state.value, policy_value);
        if (!have || ratio > report.factor) {
            report.factor = std::move(ratio);
            witness = state.sum;
            witness_subset = state.subset;
            have = true;
        }
    }
    report.witness_capacity = unscale_capacity(witness, view.scale);
    report.witness_opt = subset_ids(view.instance, witness_subset);
    return report;
}

} // namespace

PackingResult pack_universal(const Instance& instance, const UniversalPolicy& policy,
                             const Rational& capacity) {
    if (capacity.sign() < 0)
        throw PreconditionError("packing capacity must be non-negative, got " + capacity.str());
    const std::vector<std::uint32_t> perm = permutation_indices(instance, policy);

    PackingResult result;
    result.capacity = capacity;
    Rational residual = capacity;
    for (std::uint32_t i : perm) {
        const Item& item = instance.item(i);
        if (item.size <= residual) {
            residual -= item.size;
            result.packed.push_back(item.id);
            result.total_value += item.value;
            result.total_size += item.size;
        }
    }
    return result;
}

PackingResult pack_tree(const Instance& instance, const DecisionTreePolicy& policy,
                        const Rational& capacity) {
    if (capacity.sign() < 0)
        throw PreconditionError("packing capacity must be non-negative, got " + capacity.str());

    PackingResult result;
    result.capacity = capacity;
    Rational residual = capacity;
    std::vector<bool> seen(instance.size(), false);
    std::size_t tried = 0;
    for (const DecisionTreeNode* node = policy.root().get(); node != nullptr;) {
        const std::size_t i = instance.index_of(node->item);
        if (seen[i])
            throw PreconditionError("decision tree tries item '" + node->item +
                                    "' twice on one path");
        seen[i] = true;
        ++tried;
        const Item& item = instance.item(i);
        if (item.size <= residual) {
            residual -= item.size;
            result.packed.push_back(item.id);
            result.total_value += item.value;
            result.total_size += item.size;
            node = node->fit.get();
        } else {
            node = node->nofit.get();
        }
    }
    if (tried != instance.size())
        throw PreconditionError("decision tree path covers " + std::to_string(tried) + " of " +
                                std::to_string(instance.size()) + " items");
    return result;
}

ScaledInstance scale_to_integers(const Instance& instance) {
    mpz_class lcm(1);
    for (const Item& item : instance.items())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), item.size.denominator().get_mpz_t());
    const Rational scale{Rational(lcm)};

    std::vector<Item> items = instance.items();
    for (Item& item : items)
        item.size *= scale;
    return ScaledInstance{Instance(std::move(items)), scale};
}

const Rational& OptTable::value(std::uint64_t capacity) const {
    if (capacity >= values_.size())
        throw PreconditionError("capacity " + std::to_string(capacity) +
                                " is outside the computed table");
    return values_[capacity];
}

std::vector<std::string> OptTable::witness(std::uint64_t capacity) const {
    if (capacity >= values_.size())
        throw PreconditionError("capacity " + std::to_string(capacity) +
                                " is outside the computed table");
    const std::uint64_t cells = values_.size();
    std::vector<std::string> out;
    std::uint64_t c = capacity;
    for (std::size_t i = ids_.size(); i-- > 0;) {
        if (take_[(i * cells + c) / 64] >> ((i * cells + c) % 64) & 1) {
            out.push_back(ids_[i]);
            c -= sizes_[i];
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

OptTable opt_all_capacities(const Instance& instance, std::uint64_t max_capacity,
                            const EvaluatorLimits& limits) {
    for (const Item& item : instance.items())
        if (!item.size.is_integer())
            throw PreconditionError("item '" + item.id + "' has non-integer size " +
                                    item.size.str() + "; apply scale_to_integers first");
    if (Rational(mpz_class(max_capacity)) > instance.total_size())
        throw PreconditionError("max_capacity " + std::to_string(max_capacity) +
                                " exceeds the total item size " + instance.total_size().str());

    const std::uint64_t cells = max_capacity + 1;
    const std::uint64_t n = instance.size();
    if (cells > limits.max_dp_cells || (n * cells + 63) / 64 > limits.max_dp_cells)
        throw ResourceError("optimum table needs " + std::to_string(cells) + " cells for " +
                            std::to_string(n) + " items, over the budget of " +
                            std::to_string(limits.max_dp_cells) +
                            " cells; raise EvaluatorLimits::max_dp_cells");

    OptTable table;
    table.values_.assign(cells, Rational(0));
    table.take_.assign((n * cells + 63) / 64, 0);
    table.sizes_.assign(n, 0);
    for (const Item& item : instance.items())
        table.ids_.push_back(item.id);

    for (std::size_t i = 0; i < n; ++i) {
        const Item& item = instance.item(i);
        const mpz_class size = item.size.numerator();
        if (!size.fits_ulong_p() || size.get_ui() > max_capacity)
            continue; // never fits any considered capacity
        const std::uint64_t l = size.get_ui();
        table.sizes_[i] = l;
        for (std::uint64_t c = max_capacity; c >= l; --c) {
            Rational candidate = table.values_[c - l] + item.value;
            if (candidate > table.values_[c]) {
                table.values_[c] = std::move(candidate);
                table.take_[(i * cells + c) / 64] |= std::uint64_t(1) << ((i * cells + c) % 64);
            }
            if (c == l)
                break; // unsigned loop variable
        }
    }
    return table;
}

RobustnessFactor RobustnessFactor::infinite() {
    RobustnessFactor f;
    f.finite_ = false;
    return f;
}

const Rational& RobustnessFactor::value() const {
    if (!finite_)
        throw PreconditionError("the infinite robustness factor has no rational value");
    return value_;
}

std::string RobustnessFactor::str() const {
    return finite_ ? value_.str() : "inf";
}

double RobustnessFactor::to_double() const {
    return finite_ ? value_.to_double() : std::numeric_limits<double>::infinity();
}

bool operator==(const RobustnessFactor& a, const RobustnessFactor& b) {
    if (a.finite_ != b.finite_)
        return false;
    return !a.finite_ || a.value_ == b.value_;
}

bool operator<(const RobustnessFactor& a, const RobustnessFactor& b) {
    if (!a.finite_)
        return false;
    if (!b.finite_)
        return true;
    return a.value_ < b.value_;
}

std::ostream& operator<<(std::ostream& os, const RobustnessFactor& f) {
    return os << f.str();
}

RobustnessReport robustness_factor(const Instance& instance, const UniversalPolicy& policy,
                                   const RobustnessOptions& options) {
    const std::vector<std::uint32_t> perm = permutation_indices(instance, policy);
    const ScaledView view = make_scaled_view(instance);

    RobustnessMethod method = options.method;
    if (options.per_capacity)
        method = RobustnessMethod::dense; // the table wants every capacity
    else if (method == RobustnessMethod::automatic)
        method = view.total < (std::uint64_t(1) << 16) ? RobustnessMethod::dense
                                                       : RobustnessMethod::sparse;
    return method == RobustnessMethod::dense ? dense_report(view, perm, options)
                                             : sparse_report(view, perm, options);
}

AlphaCheck check_alpha_robust(const Instance& instance, const UniversalPolicy& policy,
                              const Rational& alpha, const RobustnessOptions& options) {
    if (alpha < Rational(1))
        throw PreconditionError("alpha must be at least 1, got " + alpha.str());
    AlphaCheck check{false, robustness_factor(instance, policy, options)};
    check.robust = check.report.factor <= RobustnessFactor(alpha);
    return check;
}

bool check_alpha_robust_phi(const Instance& instance, const UniversalPolicy& policy,
                            const RobustnessOptions& options) {
    const RobustnessFactor factor = robustness_factor(instance, policy, options).factor;
    if (!factor.is_finite())
        return false;
    const Rational& r = factor.value();
    return r * r <= r + Rational(1);
}

BestUniversal best_universal_robustness(const Instance& instance,
                                        const BestSearchOptions& options) {
    if (instance.size() > options.max_items)
        throw ResourceError("best_universal_robustness enumerates n! policies and is capped at n = " +
                            std::to_string(options.max_items) + ", got n = " +
                            std::to_string(instance.size()));

    const ScaledView view = make_scaled_view(instance);
    std::vector<SumState> states = subset_sum_states(view, options.limits.max_sparse_states);
    prefix_best_in_place(states);

    std::vector<std::uint32_t> perm(instance.size());
    std::iota(perm.begin(), perm.end(), 0);

    bool have_best = false;
    RobustnessFactor best;
    std::vector<std::uint32_t> best_perm = perm;
    do {
        bool have_run = false;
        bool aborted = false;
        RobustnessFactor run;
        for (const SumState& state : states) {
            const RobustnessFactor ratio =
                make_ratio(state.value, pack_value_at(view, perm, state.sum));
            if (!have_run || ratio > run) {
                run = ratio;
                have_run = true;
            }
            if (have_best && run >= best) {
                aborted = true; // cannot beat the incumbent anymore
                break;
            }
        }
        if (!aborted && (!have_best || run < best)) {
            best = run;
            best_perm = perm;
            have_best = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::string> order;
    order.reserve(best_perm.size());
    for (std::uint32_t i : best_perm)
        order.push_back(instance.item(i).id);
    return BestUniversal{UniversalPolicy(std::move(order)), best};
}

Rational opt_value(const Instance& instance, const Rational& capacity,
                   const EvaluatorLimits& limits) {
    if (capacity.sign() < 0)
        throw PreconditionError("capacity must be non-negative, got " + capacity.str());
    if (instance.empty())
        return Rational(0);

    const ScaledView view = make_scaled_view(instance);
    const mpz_class scaled_floor = (capacity * view.scale).floor();
    std::uint64_t c = view.total;
    if (scaled_floor < mpz_class(view.total))
        c = scaled_floor.get_ui();

    std::vector<SumState> states = subset_sum_states(view, limits.max_sparse_states);
    prefix_best_in_place(states);
    // Last reachable sum <= c; sums start at 0, so one always exists.
    auto it = std::upper_bound(states.begin(), states.end(), c,
                               [](std::uint64_t cap, const SumState& s) { return cap < s.sum; });
    return std::prev(it)->value;
}

Rational first_item_bound(const Instance& instance, std::string_view first_id,
                          const Rational& capacity, const EvaluatorLimits& limits) {
    const std::size_t first_index = instance.index_of(first_id);
    const Item& first = instance.item(first_index);
    if (first.size > capacity)
        throw PreconditionError("item '" + std::string(first_id) + "' of size " +
                                first.size.str() + " does not fit capacity " + capacity.str());

    const Rational best = opt_value(instance, capacity, limits);

    std::vector<Item> rest;
    rest.reserve(instance.size() - 1);
    for (std::size_t i = 0; i < instance.size(); ++i)
        if (i != first_index)
            rest.push_back(instance.item(i));
    const Rational completion =
        first.value + opt_value(Instance::with_positional_tiebreaks(std::move(rest)),
                                capacity - first.size, limits);

    if (completion.is_zero()) {
        if (best.is_zero())
            return Rational(1);
        throw PreconditionError("ratio undefined: packing '" + std::string(first_id) +
                                "' first yields value 0 while the optimum is positive");
    }
    return best / completion;
}

} // namespace uknap
