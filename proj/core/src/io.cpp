#include "uknap/io.hpp"

#include "uknap/errors.hpp"

#include <json.hpp>

#include <utility>

namespace uknap {

namespace {

using nlohmann::json;

json parse_json(std::string_view text, const char* what) {
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded())
        throw FormatError(std::string("invalid JSON in ") + what);
    return parsed;
}

Rational rational_field(const json& j, const char* key, const char* what) {
    if (!j.contains(key) || !j.at(key).is_string())
        throw FormatError(std::string(what) + " needs a string field '" + key + "'");
    return Rational::parse(j.at(key).get<std::string>());
}

json items_to_json(const Instance& instance) {
    json items = json::array();
    for (const Item& item : instance.items()) {
        items.push_back(json{{"id", item.id},
                             {"value", item.value.str()},
                             {"size", item.size.str()},
                             {"tiebreak", item.tiebreak}});
    }
    return items;
}

Instance items_from_json(const json& root) {
    if (!root.is_object() || !root.contains("items") || !root.at("items").is_array())
        throw FormatError("instance JSON needs an 'items' array");
    std::vector<Item> items;
    for (const json& j : root.at("items")) {
        if (!j.is_object())
            throw FormatError("instance items must be objects");
        Item item;
        if (!j.contains("id") || !j.at("id").is_string())
            throw FormatError("instance item needs a string 'id'");
        item.id = j.at("id").get<std::string>();
        item.value = rational_field(j, "value", "instance item");
        item.size = rational_field(j, "size", "instance item");
        if (!j.contains("tiebreak") || !j.at("tiebreak").is_number_integer())
            throw FormatError("instance item needs an integer 'tiebreak'");
        item.tiebreak = j.at("tiebreak").get<int>();
        items.push_back(std::move(item));
    }
    try {
        return Instance(std::move(items));
    } catch (const PreconditionError& e) {
        throw FormatError(std::string("invalid instance: ") + e.what());
    }
}

json policy_to_json_object(const UniversalPolicy& policy) {
    return json{{"order", policy.order()}};
}

UniversalPolicy policy_from_json_object(const json& root) {
    const json* obj = &root;
    if (root.is_object() && root.contains("policy"))
        obj = &root.at("policy");
    if (!obj->is_object() || !obj->contains("order") || !obj->at("order").is_array())
        throw FormatError("policy JSON needs an 'order' array");
    std::vector<std::string> order;
    for (const json& id : obj->at("order")) {
        if (!id.is_string())
            throw FormatError("policy order entries must be item id strings");
        order.push_back(id.get<std::string>());
    }
    return UniversalPolicy(std::move(order));
}

json subsetsum_to_json_object(const SubsetSumInstance& s) {
    return json{{"weights", s.weights}, {"target", s.target}};
}

SubsetSumInstance subsetsum_from_json_object(const json& root) {
    const json* obj = &root;
    if (root.is_object() && root.contains("subsetsum"))
        obj = &root.at("subsetsum");
    if (!obj->is_object() || !obj->contains("weights") || !obj->at("weights").is_array() ||
        !obj->contains("target") || !obj->at("target").is_number_unsigned())
        throw FormatError("subsetsum JSON needs a 'weights' array and an unsigned 'target'");
    SubsetSumInstance s;
    for (const json& w : obj->at("weights")) {
        if (!w.is_number_unsigned() || w.get<std::uint64_t>() == 0)
            throw FormatError("subsetsum weights must be positive integers");
        s.weights.push_back(w.get<std::uint64_t>());
    }
    s.target = obj->at("target").get<std::uint64_t>();
    return s;
}

std::string_view label_name(GadgetLabel label) {
    switch (label) {
    case GadgetLabel::regular: return "regular";
    case GadgetLabel::auxiliary: return "auxiliary";
    case GadgetLabel::dummy: return "dummy";
    }
    return "regular";
}

GadgetLabel label_from_name(std::string_view name) {
    if (name == "regular")
        return GadgetLabel::regular;
    if (name == "auxiliary")
        return GadgetLabel::auxiliary;
    if (name == "dummy")
        return GadgetLabel::dummy;
    throw FormatError("unknown gadget label '" + std::string(name) + "'");
}

} // namespace

std::string instance_to_json(const Instance& instance) {
    return json{{"items", items_to_json(instance)}}.dump(2) + "\n";
}

Instance instance_from_json(std::string_view text) {
    return items_from_json(parse_json(text, "instance"));
}

std::string policy_to_json(const UniversalPolicy& policy) {
    return policy_to_json_object(policy).dump(2) + "\n";
}

UniversalPolicy policy_from_json(std::string_view text) {
    return policy_from_json_object(parse_json(text, "policy"));
}

std::string subsetsum_to_json(const SubsetSumInstance& s) {
    return subsetsum_to_json_object(s).dump(2) + "\n";
}

SubsetSumInstance subsetsum_from_json(std::string_view text) {
    return subsetsum_from_json_object(parse_json(text, "subsetsum"));
}

std::string gadget_to_json(const HardnessGadget& gadget) {
    json labels = json::object();
    for (const auto& [id, label] : gadget.labels)
        labels[id] = label_name(label);
    return json{{"items", items_to_json(gadget.instance)},
                {"policy", policy_to_json_object(gadget.policy)},
                {"alpha", gadget.alpha.str()},
                {"epsilon", gadget.epsilon.str()},
                {"labels", std::move(labels)},
                {"subsetsum", subsetsum_to_json_object(gadget.source)}}
               .dump(2) +
           "\n";
}

HardnessGadget gadget_from_json(std::string_view text) {
    const json root = parse_json(text, "gadget");
    HardnessGadget gadget;
    gadget.instance = items_from_json(root);
    gadget.policy = policy_from_json_object(root);
    gadget.alpha = rational_field(root, "alpha", "gadget");
    gadget.epsilon = rational_field(root, "epsilon", "gadget");
    gadget.source = subsetsum_from_json_object(root);
    if (!root.contains("labels") || !root.at("labels").is_object())
        throw FormatError("gadget JSON needs a 'labels' object");
    for (const auto& [id, label] : root.at("labels").items()) {
        if (!label.is_string())
            throw FormatError("gadget labels must be strings");
        if (!gadget.instance.contains(id))
            throw FormatError("gadget label names unknown item '" + id + "'");
        gadget.labels[id] = label_from_name(label.get<std::string>());
    }
    if (gadget.labels.size() != gadget.instance.size())
        throw FormatError("gadget labels must cover every item");
    return gadget;
}

std::string golden_to_json(const GoldenInstance& golden) {
    return json{{"items", items_to_json(golden.instance)},
                {"epsilon", golden.epsilon.str()},
                {"phi_hat", golden.phi_hat.str()},
                {"phi_error_bound", golden.phi_error_bound.str()}}
               .dump(2) +
           "\n";
}

std::string report_to_json(const RobustnessReport& report) {
    return json{{"factor", report.factor.str()},
                {"witness_capacity", report.witness_capacity.str()},
                {"witness_opt", report.witness_opt}}
               .dump(2) +
           "\n";
}

std::string report_to_csv(const RobustnessReport& report) {
    if (!report.per_capacity)
        throw PreconditionError("report was computed without the per-capacity table");
    std::string out = "capacity,opt_value,policy_value,ratio\n";
    for (const CapacityRow& row : *report.per_capacity) {
        out += row.capacity.str();
        out += ',';
        out += row.opt_value.str();
        out += ',';
        out += row.policy_value.str();
        out += ',';
        out += row.ratio.str();
        out += '\n';
    }
    return out;
}

} // namespace uknap
