#include "uknap/generators.hpp"

#include "uknap/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace uknap {

namespace {

std::vector<mpz_class> fibonacci_numbers(int n) {
    std::vector<mpz_class> fib(static_cast<std::size_t>(n) + 1);
    fib[1] = 1;
    if (n >= 2)
        fib[2] = 1;
    for (int i = 3; i <= n; ++i)
        fib[static_cast<std::size_t>(i)] =
            fib[static_cast<std::size_t>(i - 1)] + fib[static_cast<std::size_t>(i - 2)];
    return fib;
}

bool is_power_of_two(std::uint64_t v) {
    return v != 0 && (v & (v - 1)) == 0;
}

/// floor(log2(v)) for v >= 1.
unsigned log2_floor(std::uint64_t v) {
    unsigned out = 0;
    while (v >>= 1)
        ++out;
    return out;
}

void require_gadget_target(std::uint64_t target) {
    if (!is_power_of_two(target) || target < 8)
        throw PreconditionError("gadget target must be a power of two >= 8, got " +
                                std::to_string(target));
}

/// Weights sorted ascending, paired with their original positions.
std::vector<std::uint64_t> sorted_weights(const SubsetSumInstance& s) {
    std::vector<std::uint64_t> weights = s.weights;
    std::sort(weights.begin(), weights.end());
    return weights;
}

// Regular items by decreasing weight (ties by ascending position), as the
// gadget policies try heavy regular items first.
std::vector<std::string> regular_ids_by_decreasing_weight(const std::vector<std::uint64_t>& ascending) {
    std::vector<std::string> ids;
    for (std::size_t i = ascending.size(); i-- > 0;)
        ids.push_back("reg" + std::to_string(i + 1));
    return ids;
}

} // namespace

Instance gen_fibonacci(int n) {
    if (n < 3)
        throw PreconditionError("gen_fibonacci requires n >= 3, got " + std::to_string(n));
    const std::vector<mpz_class> fib = fibonacci_numbers(n);
    std::vector<Item> items;
    items.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        Item item;
        item.id = "f" + std::to_string(i);
        item.size = Rational(fib[static_cast<std::size_t>(n)] + fib[static_cast<std::size_t>(i)] - 1);
        item.value = Rational(1) + Rational(i, n);
        items.push_back(std::move(item));
    }
    return Instance::with_positional_tiebreaks(std::move(items));
}

GoldenInstance gen_golden(const Rational& epsilon, int phi_precision) {
    if (epsilon.sign() <= 0 || epsilon > Rational(1, 100))
        throw PreconditionError("gen_golden requires 0 < epsilon <= 1/100, got " + epsilon.str());
    if (phi_precision < 10)
        throw PreconditionError("gen_golden requires phi_precision >= 10, got " +
                                std::to_string(phi_precision));

    const std::vector<mpz_class> fib = fibonacci_numbers(phi_precision + 1);
    const Rational phi_hat(fib[static_cast<std::size_t>(phi_precision + 1)],
                           fib[static_cast<std::size_t>(phi_precision)]);

    const Rational one(1);
    const std::vector<Rational> values = {
        one + epsilon,
        one + epsilon,
        Rational(2) / phi_hat,
        one + one / (phi_hat * phi_hat),
        phi_hat,
    };
    std::vector<Item> items;
    for (std::size_t i = 0; i < values.size(); ++i)
        items.push_back(Item{"g" + std::to_string(i + 1), values[i], values[i], 0});

    GoldenInstance out;
    out.instance = Instance::with_positional_tiebreaks(std::move(items));
    out.epsilon = epsilon;
    out.phi_hat = phi_hat;
    out.phi_error_bound =
        Rational(1) / Rational(fib[static_cast<std::size_t>(phi_precision)] *
                               fib[static_cast<std::size_t>(phi_precision)]);
    return out;
}

bool has_normalized_form(const SubsetSumInstance& s) {
    if (!is_power_of_two(s.target) || s.target < 8)
        return false;
    for (std::uint64_t w : s.weights) {
        if (w < 2 || w >= s.target / 2)
            return false;
        const std::uint64_t below = std::uint64_t(1) << log2_floor(w);
        const std::uint64_t above = below << 1;
        if (w - below < 2 || above - w < 2)
            return false;
    }
    return true;
}

SubsetSumInstance normalize_subsetsum(std::vector<std::uint64_t> weights, std::uint64_t target) {
    if (target == 0)
        throw PreconditionError("normalize_subsetsum requires a positive target");
    constexpr std::uint64_t magnitude_guard = std::uint64_t(1) << 56;
    if (target > magnitude_guard)
        throw ResourceError("normalize_subsetsum input exceeds the 2^56 magnitude guard");
    std::uint64_t weight_sum = 0;
    for (std::uint64_t w : weights) {
        if (w == 0)
            throw PreconditionError("normalize_subsetsum requires positive weights");
        if (w > magnitude_guard || weight_sum + w > magnitude_guard)
            throw ResourceError("normalize_subsetsum input exceeds the 2^56 magnitude guard");
        weight_sum += w;
    }
    if (target > weight_sum)
        throw PreconditionError("normalize_subsetsum requires target <= sum of weights (" +
                                std::to_string(target) + " > " + std::to_string(weight_sum) + ")");

    SubsetSumInstance out;
    out.weights.reserve(weights.size() + 2);
    for (std::uint64_t w : weights)
        out.weights.push_back(6 * w);
    const std::uint64_t scaled_target = 6 * target;
    const std::uint64_t scaled_sum = 6 * weight_sum;

    // Smallest power of two at least 4 * (scaled target + scaled weight sum).
    unsigned sigma = log2_floor(scaled_target + scaled_sum);
    if ((std::uint64_t(1) << sigma) < scaled_target + scaled_sum)
        ++sigma;
    sigma += 2;
    const std::uint64_t lifted_target = std::uint64_t(1) << sigma;

    // Two filler weights covering the lift; any solution must contain both.
    const std::uint64_t gap = lifted_target - scaled_target;
    out.weights.push_back(gap / 2);
    out.weights.push_back(gap - gap / 2);
    out.target = lifted_target;
    return out;
}

SubsetSumAnswer subsetsum_dp(const SubsetSumInstance& s, std::uint64_t max_sum_budget) {
    std::uint64_t weight_sum = 0;
    for (std::uint64_t w : s.weights) {
        if (w == 0)
            throw PreconditionError("subsetsum_dp requires positive weights");
        if (w > max_sum_budget || weight_sum + w > max_sum_budget)
            throw ResourceError("subsetsum_dp weight sum exceeds the budget of " +
                                std::to_string(max_sum_budget));
        weight_sum += w;
    }
    if (s.target > weight_sum)
        return SubsetSumAnswer{false, {}};

    // reached_by[v] = index of the item that first reached sum v (-1: unreached).
    constexpr std::size_t unreached = SIZE_MAX;
    std::vector<std::size_t> reached_by(s.target + 1, unreached);
    std::vector<bool> reached(s.target + 1, false);
    reached[0] = true;
    for (std::size_t i = 0; i < s.weights.size(); ++i) {
        const std::uint64_t w = s.weights[i];
        if (w > s.target)
            continue;
        for (std::uint64_t v = s.target; v >= w; --v) {
            if (!reached[v] && reached[v - w]) {
                reached[v] = true;
                reached_by[v] = i;
            }
            if (v == w)
                break;
        }
    }
    if (!reached[s.target])
        return SubsetSumAnswer{false, {}};

    SubsetSumAnswer answer{true, {}};
    for (std::uint64_t v = s.target; v > 0;) {
        const std::size_t i = reached_by[v];
        answer.witness.push_back(i);
        v -= s.weights[i];
    }
    std::reverse(answer.witness.begin(), answer.witness.end());
    return answer;
}

HardnessGadget gen_hardness_general(const SubsetSumInstance& s, const Rational& alpha) {
    require_gadget_target(s.target);
    for (std::uint64_t w : s.weights)
        if (w == 0)
            throw PreconditionError("gadget weights must be positive");
    const Rational target(mpz_class(s.target));
    if (alpha <= target / (target - 1))
        throw PreconditionError("gen_hardness_general requires alpha > T/(T-1) = " +
                                (target / (target - 1)).str() + ", got " + alpha.str());

    HardnessGadget gadget;
    gadget.source = s;
    gadget.source.weights = sorted_weights(s);
    gadget.alpha = alpha;
    // Solves alpha = (T - eps) / ((T-1)(1-eps)) for eps; in (0,1) by the
    // precondition on alpha.
    gadget.epsilon = (alpha * (target - 1) - target) / (alpha * (target - 1) - 1);

    const Rational one_minus_eps = Rational(1) - gadget.epsilon;
    std::vector<Item> items;

    Rational regular_value;
    for (std::size_t i = 0; i < gadget.source.weights.size(); ++i) {
        const Rational w(mpz_class(gadget.source.weights[i]));
        const std::string id = "reg" + std::to_string(i + 1);
        items.push_back(Item{id, w, w, 0});
        gadget.labels[id] = GadgetLabel::regular;
        regular_value += w;
    }

    const unsigned m = log2_floor(s.target) - 1;
    Rational auxiliary_value;
    for (unsigned k = 0; k <= m; ++k) {
        const Rational pow2(mpz_class(std::uint64_t(1) << k));
        const std::string id = "aux" + std::to_string(k);
        items.push_back(Item{id, pow2 * one_minus_eps, pow2, 0});
        gadget.labels[id] = GadgetLabel::auxiliary;
        auxiliary_value += pow2 * one_minus_eps;
    }

    // The dummy absorbs every capacity above the target: packing it alone
    // already keeps the ratio at 1/(1-eps).
    items.push_back(Item{"dum", (one_minus_eps / gadget.epsilon) * (auxiliary_value + regular_value),
                         target + 1, 0});
    gadget.labels["dum"] = GadgetLabel::dummy;

    gadget.instance = Instance::with_positional_tiebreaks(std::move(items));

    std::vector<std::string> order{"dum"};
    for (unsigned k = m + 1; k-- > 0;)
        order.push_back("aux" + std::to_string(k));
    for (std::string& id : regular_ids_by_decreasing_weight(gadget.source.weights))
        order.push_back(std::move(id));
    gadget.policy = UniversalPolicy(std::move(order));
    return gadget;
}

HardnessGadget gen_hardness_unit(const SubsetSumInstance& s) {
    require_gadget_target(s.target);
    for (std::uint64_t w : s.weights)
        if (w < 2)
            throw PreconditionError("gen_hardness_unit requires weights >= 2, got " +
                                    std::to_string(w));

    HardnessGadget gadget;
    gadget.source = s;
    gadget.source.weights = sorted_weights(s);

    const Rational target(mpz_class(s.target));
    gadget.epsilon = Rational(1) / (target * target);
    gadget.alpha = (target - gadget.epsilon) / ((Rational(1) - gadget.epsilon) * (target - 1));
    const Rational one_minus_eps = Rational(1) - gadget.epsilon;

    std::vector<Item> items;
    auto push_unit = [&](const std::string& id, const Rational& value, GadgetLabel label) {
        items.push_back(Item{id, value, value, 0});
        gadget.labels[id] = label;
    };

    for (std::size_t i = 0; i < gadget.source.weights.size(); ++i)
        push_unit("reg" + std::to_string(i + 1),
                  Rational(mpz_class(gadget.source.weights[i])), GadgetLabel::regular);

    const unsigned m = log2_floor(s.target) - 1;
    for (unsigned k = 0; k <= m; ++k)
        push_unit("aux" + std::to_string(k),
                  Rational(mpz_class(std::uint64_t(1) << k)) * one_minus_eps,
                  GadgetLabel::auxiliary);

    const std::uint64_t largest_weight = gadget.source.weights.back();
    unsigned m_dummy = log2_floor(largest_weight);
    if ((std::uint64_t(1) << m_dummy) < largest_weight)
        ++m_dummy; // ceil(log2(largest weight))
    push_unit("dum0", target + gadget.epsilon, GadgetLabel::dummy);
    for (unsigned k = 1; k <= m_dummy; ++k)
        push_unit("dum" + std::to_string(k), target * Rational(mpz_class(std::uint64_t(1) << k)),
                  GadgetLabel::dummy);

    gadget.instance = Instance::with_positional_tiebreaks(std::move(items));

    std::vector<std::string> order;
    for (unsigned k = m_dummy + 1; k-- > 0;)
        order.push_back("dum" + std::to_string(k));
    for (unsigned k = m + 1; k-- > 0;)
        order.push_back("aux" + std::to_string(k));
    for (std::string& id : regular_ids_by_decreasing_weight(gadget.source.weights))
        order.push_back(std::move(id));
    gadget.policy = UniversalPolicy(std::move(order));
    return gadget;
}

Instance gen_random(std::size_t n, std::uint64_t seed, std::uint64_t max_value,
                    std::uint64_t max_size, bool unit_density) {
    if (n < 1)
        throw PreconditionError("gen_random requires n >= 1");
    if (max_value < 1 || max_size < 1)
        throw PreconditionError("gen_random requires positive value and size bounds");

    // Plain modulo keeps the stream identical across standard libraries;
    // the slight bias is irrelevant for test instances.
    std::mt19937_64 rng(seed);
    std::vector<Item> items;
    items.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Item item;
        item.id = "i" + std::to_string(i + 1);
        item.size = Rational(mpz_class(rng() % max_size + 1));
        item.value = unit_density ? item.size : Rational(mpz_class(rng() % (max_value + 1)));
        items.push_back(std::move(item));
    }
    return Instance::with_positional_tiebreaks(std::move(items));
}

} // namespace uknap
