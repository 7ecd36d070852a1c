#pragma once

#include "liechar/lifting.hpp"
#include "liechar/rank1.hpp"

#include <json.hpp>

namespace liechar {

using Json = nlohmann::json;  // std::map-backed: object keys serialize sorted

// Weight <-> array of lowest-terms rational strings ("p" or "p/q").
Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j);

// FormalCharacter <-> [{"weight": [...], "mult": n}, ...], sorted by weight
// lexicographically. Golden files depend on this order.
Json character_to_json(const FormalCharacter& chi);
FormalCharacter character_from_json(const Json& j);

// [{"coefficient": c, "highest_weight": [...]}, ...] sorted by weight.
Json decomposition_to_json(const VirtualDecomposition& dec);
VirtualDecomposition decomposition_from_json(const Json& j);

// [{"det": d, "length": l, "word": [1-based indices]}, ...]
Json weyl_to_json(const std::vector<WeylElement>& elements);

Json root_system_to_json(const RootSystem& rs);
Json spin_to_json(const RootSystem& rs, const SpinPair& sp);
Json kostant_to_json(const std::vector<KostantComponent>& comps);
Json spectrum_to_json(const std::vector<SpectrumEntry>& entries);

// [{"parameter": [...], "sign": s}, ...] sorted by parameter lexicographically.
Json lift_to_json(const std::vector<LiftTerm>& terms);
std::vector<LiftTerm> lift_from_json(const Json& j);

Json lift_report_to_json(const LiftIdentityReport& rep);
Json endoscopic_to_json(const EndoscopicDatum& datum);
Json rank1_to_json(const Rank1Report& rep);

// {pair, lambda, index, kostant, kernel, agreements}.
Json dirac_consistency_to_json(const std::string& pair_label, const DiracConsistency& c);

// Canonical byte form: compact separators, keys already sorted.
std::string dump_json(const Json& j);

}  // namespace liechar
