#include "liechar/jsonio.hpp"

#include <algorithm>

namespace liechar {

Json weight_to_json(const Weight& w) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < w.size(); ++i) arr.push_back(format_rational(w[i]));
    return arr;
}

Weight weight_from_json(const Json& j) {
    if (!j.is_array()) throw validation_error("weight must be a JSON array of rational strings");
    std::vector<Rat> coords;
    for (const Json& e : j) {
        if (!e.is_string()) throw validation_error("weight coordinate must be a string");
        coords.push_back(parse_rational(e.get<std::string>()));
    }
    return Weight(std::move(coords));
}

Json character_to_json(const FormalCharacter& chi) {
    Json arr = Json::array();
    for (const auto& [w, m] : chi.terms()) {  // map order = lexicographic
        Json term;
        term["weight"] = weight_to_json(w);
        term["mult"] = m;
        arr.push_back(std::move(term));
    }
    return arr;
}

FormalCharacter character_from_json(const Json& j) {
    if (!j.is_array()) throw validation_error("character must be a JSON array");
    FormalCharacter chi;
    for (const Json& term : j) {
        if (!term.is_object() || !term.contains("weight") || !term.contains("mult"))
            throw validation_error("character term must carry weight and mult");
        chi.add_term(weight_from_json(term.at("weight")), term.at("mult").get<long long>());
    }
    return chi;
}

Json decomposition_to_json(const VirtualDecomposition& dec) {
    std::vector<const VirtualComponent*> order;
    for (const auto& c : dec.components) order.push_back(&c);
    std::sort(order.begin(), order.end(), [](const VirtualComponent* a, const VirtualComponent* b) {
        return a->highest_weight < b->highest_weight;
    });
    Json arr = Json::array();
    for (const VirtualComponent* c : order) {
        Json comp;
        comp["highest_weight"] = weight_to_json(c->highest_weight);
        comp["coefficient"] = c->coefficient;
        arr.push_back(std::move(comp));
    }
    return arr;
}

VirtualDecomposition decomposition_from_json(const Json& j) {
    if (!j.is_array()) throw validation_error("decomposition must be a JSON array");
    VirtualDecomposition dec;
    for (const Json& comp : j)
        dec.components.push_back({weight_from_json(comp.at("highest_weight")),
                                  comp.at("coefficient").get<long long>()});
    return dec;
}

Json weyl_to_json(const std::vector<WeylElement>& elements) {
    Json arr = Json::array();
    for (const WeylElement& w : elements) {
        Json e;
        Json word = Json::array();
        for (int i : w.word) word.push_back(i + 1);  // 1-based simple reflections
        e["word"] = std::move(word);
        e["length"] = w.length;
        e["det"] = w.det;
        arr.push_back(std::move(e));
    }
    return arr;
}

Json root_system_to_json(const RootSystem& rs) {
    Json j;
    j["type"] = rs.type().str();
    j["rank"] = rs.rank();
    j["cartan_matrix"] = rs.cartan_matrix();
    j["positive_roots"] = rs.positive_roots_rc();
    j["positive_root_count"] = rs.positive_roots().size();
    Json lengths = Json::array();
    for (const Rat& d : rs.root_lengths()) lengths.push_back(format_rational(d));
    j["root_lengths"] = std::move(lengths);
    j["rho"] = weight_to_json(rs.rho());
    j["weyl_order"] = rs.weyl_order().str();
    return j;
}

Json spin_to_json(const RootSystem& rs, const SpinPair& sp) {
    Json j;
    j["s_plus"] = character_to_json(sp.s_plus);
    j["s_minus"] = character_to_json(sp.s_minus);
    j["rho_n"] = weight_to_json(sp.rho_n);
    Json nc = Json::array();
    for (const Weight& alpha : sp.pos_noncompact) nc.push_back(rs.root_coords(alpha));
    j["pos_noncompact"] = std::move(nc);
    return j;
}

Json kostant_to_json(const std::vector<KostantComponent>& comps) {
    Json arr = Json::array();
    for (const KostantComponent& k : comps) {
        Json e;
        Json word = Json::array();
        for (int i : k.w.word) word.push_back(i + 1);
        e["word"] = std::move(word);
        e["det"] = k.parity;
        e["mu"] = weight_to_json(k.mu);
        arr.push_back(std::move(e));
    }
    return arr;
}

Json spectrum_to_json(const std::vector<SpectrumEntry>& entries) {
    Json arr = Json::array();
    for (const SpectrumEntry& e : entries) {
        Json x;
        x["mu"] = weight_to_json(e.mu);
        x["mult"] = e.mult;
        x["eigenvalue"] = format_rational(e.eigenvalue);
        arr.push_back(std::move(x));
    }
    return arr;
}

Json lift_to_json(const std::vector<LiftTerm>& terms) {
    std::vector<const LiftTerm*> order;
    for (const auto& t : terms) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](const LiftTerm* a, const LiftTerm* b) { return a->parameter < b->parameter; });
    Json arr = Json::array();
    for (const LiftTerm* t : order) {
        Json e;
        e["sign"] = t->sign;
        e["parameter"] = weight_to_json(t->parameter);
        arr.push_back(std::move(e));
    }
    return arr;
}

std::vector<LiftTerm> lift_from_json(const Json& j) {
    std::vector<LiftTerm> out;
    for (const Json& e : j)
        out.push_back({e.at("sign").get<int>(), weight_from_json(e.at("parameter"))});
    return out;
}

Json lift_report_to_json(const LiftIdentityReport& rep) {
    Json j;
    j["equal"] = rep.equal;
    j["lhs_terms"] = rep.lhs_terms;
    j["rhs_terms"] = rep.rhs_terms;
    j["sign_q"] = rep.sign_q;
    return j;
}

Json endoscopic_to_json(const EndoscopicDatum& datum) {
    Json j;
    j["type"] = datum.g.type().str();
    j["k_positive_roots"] = datum.k.positive_roots_rc();
    j["h_positive_roots"] = datum.h.positive_roots_rc();
    j["kh_positive_roots"] = datum.kh.positive_roots_rc();
    j["w_k_order"] = datum.k.weyl_order().str();
    j["w_h_order"] = datum.h.weyl_order().str();
    j["w_kh_order"] = datum.kh.weyl_order().str();
    j["sign_q"] = datum.sign_q;
    return j;
}

Json rank1_to_json(const Rank1Report& rep) {
    Json j;
    j["n"] = rep.n;
    j["kernel_dimension"] = rep.kernel_dimension;
    Json kw = Json::array();
    for (const Weight& w : rep.kernel_weights) kw.push_back(weight_to_json(w));
    j["kernel_weights"] = std::move(kw);
    j["d2_weight_block_scalar"] = rep.d2_weight_block_scalar;
    j["d2_matches_spectrum"] = rep.d2_matches_spectrum;
    j["kernel_matches_kostant"] = rep.kernel_matches_kostant;
    j["kernel_inside_d2_kernel"] = rep.kernel_inside_d2_kernel;
    j["ok"] = rep.ok();
    return j;
}

Json dirac_consistency_to_json(const std::string& pair_label, const DiracConsistency& c) {
    Json j;
    j["pair"] = pair_label;
    j["lambda"] = weight_to_json(c.lambda);
    j["index"] = decomposition_to_json(c.index.decomposition);
    j["kostant"] = kostant_to_json(c.kostant);
    j["kernel"] = spectrum_to_json(c.kernel);
    Json agree;
    agree["index_matches_kostant"] = c.index_matches_kostant;
    agree["kernel_contains_kostant"] = c.kernel_contains_kostant;
    agree["index_inside_kernel"] = c.index_inside_kernel;
    agree["infinitesimal_ok"] = c.infinitesimal.all_ok;
    agree["multiplicity_one"] = c.multiplicity_one;
    j["agreements"] = std::move(agree);
    return j;
}

std::string dump_json(const Json& j) { return j.dump(); }

}  // namespace liechar
