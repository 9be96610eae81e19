#pragma once

#include "uknap/evaluator.hpp"
#include "uknap/generators.hpp"
#include "uknap/instance.hpp"
#include "uknap/policy.hpp"

#include <string>
#include <string_view>

namespace uknap {

// JSON text formats. Rationals are serialized as exact "num/den" strings
// (denominator omitted for integers), never as floating point.
//
// instance: {"items":[{"id":"a","value":"4/3","size":"2","tiebreak":1},...]}
// policy:   {"order":["y","z","x"]}
// gadget:   instance fields plus "alpha", "epsilon", "labels", "policy",
//           "subsetsum" (gadget files parse as instances and as policies)
// subsetsum:{"weights":[6,12],"target":256}
//
// Parsers ignore unknown keys, so annotated files round-trip. All parse
// failures raise FormatError.

std::string instance_to_json(const Instance& instance);
Instance instance_from_json(std::string_view text);

std::string policy_to_json(const UniversalPolicy& policy);
/// Accepts both a policy object and any object with a "policy" field,
/// so a gadget file can be used directly where a policy is expected.
UniversalPolicy policy_from_json(std::string_view text);

std::string subsetsum_to_json(const SubsetSumInstance& s);
SubsetSumInstance subsetsum_from_json(std::string_view text);

std::string gadget_to_json(const HardnessGadget& gadget);
HardnessGadget gadget_from_json(std::string_view text);

/// Instance JSON with the approximation metadata alongside the items.
std::string golden_to_json(const GoldenInstance& golden);

std::string report_to_json(const RobustnessReport& report);

/// "capacity,opt_value,policy_value,ratio" rows, exact rationals.
/// Requires a report computed with per_capacity set.
std::string report_to_csv(const RobustnessReport& report);

} // namespace uknap
