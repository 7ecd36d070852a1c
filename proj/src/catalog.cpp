#include "liechar/catalog.hpp"

#include <fstream>
#include <sstream>

namespace liechar {

namespace {

void reject_unknown_keys(const Json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items())
        if (!allowed.count(key))
            throw validation_error("catalog: unknown key '" + key + "' in " + where);
}

std::vector<std::vector<long long>> int_vectors(const Json& j, const std::string& where) {
    if (!j.is_array()) throw validation_error("catalog: " + where + " must be an array");
    std::vector<std::vector<long long>> out;
    for (const Json& row : j) {
        if (!row.is_array()) throw validation_error("catalog: " + where + " entries must be arrays");
        std::vector<long long> v;
        for (const Json& x : row) {
            if (!x.is_number_integer())
                throw validation_error("catalog: " + where + " coordinates must be integers");
            v.push_back(x.get<long long>());
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::string vectors_label(const std::vector<std::vector<long long>>& vs) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ';';
        for (std::size_t j = 0; j < vs[i].size(); ++j) {
            if (j) os << ',';
            os << vs[i][j];
        }
    }
    os << '}';
    return os.str();
}

}  // namespace

CatalogFile parse_catalog(const std::string& json_text) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        throw validation_error(std::string("catalog: malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw validation_error("catalog: top level must be a JSON object");
    reject_unknown_keys(j, {"pairs", "endoscopy", "caps", "seed"}, "catalog");

    CatalogFile out;
    if (j.contains("caps")) {
        const Json& caps = j.at("caps");
        reject_unknown_keys(caps, {"max_rank", "max_weyl_order", "max_terms"}, "caps");
        if (caps.contains("max_rank")) out.caps.max_rank = caps.at("max_rank").get<int>();
        if (caps.contains("max_weyl_order"))
            out.caps.max_weyl_order = caps.at("max_weyl_order").get<long long>();
        if (caps.contains("max_terms")) out.caps.max_terms = caps.at("max_terms").get<long long>();
    }
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer())
            throw validation_error("catalog: seed must be an integer");
        out.seed = j.at("seed").get<std::uint64_t>();
    }
    if (j.contains("pairs")) {
        if (!j.at("pairs").is_array()) throw validation_error("catalog: pairs must be an array");
        for (const Json& p : j.at("pairs")) {
            reject_unknown_keys(p, {"type", "subsystem"}, "pairs entry");
            if (!p.contains("type")) throw validation_error("catalog: pairs entry missing type");
            CatalogPair pair;
            pair.type = CartanType::parse(p.at("type").get<std::string>());
            if (p.contains("subsystem"))
                pair.subsystem = int_vectors(p.at("subsystem"), "subsystem");
            pair.label = pair.type.str() + "/" + vectors_label(pair.subsystem);
            out.pairs.push_back(std::move(pair));
        }
    }
    if (j.contains("endoscopy")) {
        if (!j.at("endoscopy").is_array())
            throw validation_error("catalog: endoscopy must be an array");
        for (const Json& e : j.at("endoscopy")) {
            reject_unknown_keys(e, {"type", "k_simple", "h_simple", "sign_q"}, "endoscopy entry");
            if (!e.contains("type")) throw validation_error("catalog: endoscopy entry missing type");
            CatalogEndo endo;
            endo.type = CartanType::parse(e.at("type").get<std::string>());
            if (e.contains("k_simple")) endo.k_simple = int_vectors(e.at("k_simple"), "k_simple");
            if (e.contains("h_simple")) endo.h_simple = int_vectors(e.at("h_simple"), "h_simple");
            if (e.contains("sign_q")) {
                endo.sign_q = e.at("sign_q").get<int>();
                if (endo.sign_q != 1 && endo.sign_q != -1)
                    throw validation_error("catalog: sign_q must be +1 or -1");
            }
            endo.label = endo.type.str() + "/k=" + vectors_label(endo.k_simple) +
                         "/h=" + vectors_label(endo.h_simple);
            out.endoscopy.push_back(std::move(endo));
        }
    }
    return out;
}

CatalogFile load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open catalog file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str());
}

}  // namespace liechar
