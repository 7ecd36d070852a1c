#include "liechar/liechar.h"

#include "liechar/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

using namespace liechar;

struct lc_context {
    Caps caps;
    bool rank_set = false;
    bool weyl_set = false;
    bool terms_set = false;
};

struct lc_root_system {
    RootSystem rs;
};

struct lc_subsystem {
    RootSubsystem sub;
};

struct lc_endoscopic_datum {
    EndoscopicDatum datum;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

lc_status status_of(const std::exception& e) {
    if (dynamic_cast<const usage_error*>(&e)) return LC_ERR_USAGE;
    if (dynamic_cast<const validation_error*>(&e)) return LC_ERR_VALIDATION;
    if (dynamic_cast<const resource_error*>(&e)) return LC_ERR_RESOURCE;
    return LC_ERR_INTERNAL;
}

template <typename Fn>
lc_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return LC_OK;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (...) {
        g_last_error = "unknown error";
        return LC_ERR_INTERNAL;
    }
}

void emit(const Json& j, char** json_out) {
    if (!json_out) throw usage_error("null output pointer");
    *json_out = dup_string(dump_json(j));
    if (!*json_out) throw internal_error("out of memory");
}

SystemRef view(const lc_root_system* rs, const lc_subsystem* sub) {
    if (sub) return SystemRef(sub->sub);
    return SystemRef(rs->rs);
}

Weight parse_weight_arg(const lc_root_system* rs, const char* text) {
    if (!text) throw usage_error("null weight argument");
    std::vector<Rat> coords = parse_rational_csv(text);
    if (coords.size() != static_cast<std::size_t>(rs->rs.rank()))
        throw usage_error("weight '" + std::string(text) + "' has " +
                          std::to_string(coords.size()) + " coordinates, expected " +
                          std::to_string(rs->rs.rank()));
    return Weight(std::move(coords));
}

}  // namespace

extern "C" {

lc_context* lc_context_new(void) { return new lc_context{}; }

void lc_context_free(lc_context* ctx) { delete ctx; }

lc_status lc_context_set_cap(lc_context* ctx, const char* name, long long value) {
    return guarded([&] {
        if (!ctx || !name) throw usage_error("null context or cap name");
        if (value <= 0) throw usage_error("cap value must be positive");
        std::string key(name);
        if (key == "max_rank") {
            ctx->caps.max_rank = static_cast<int>(value);
            ctx->rank_set = true;
        } else if (key == "max_weyl_order") {
            ctx->caps.max_weyl_order = value;
            ctx->weyl_set = true;
        } else if (key == "max_terms") {
            ctx->caps.max_terms = value;
            ctx->terms_set = true;
        } else {
            throw usage_error("unknown cap '" + key + "'");
        }
    });
}

const char* lc_last_error(void) { return g_last_error.c_str(); }

void lc_string_free(char* s) { std::free(s); }

lc_status lc_root_system_new(const lc_context* ctx, const char* cartan_type,
                             lc_root_system** out) {
    return guarded([&] {
        if (!cartan_type || !out) throw usage_error("null argument");
        Caps caps = ctx ? ctx->caps : Caps{};
        *out = new lc_root_system{build_root_system(CartanType::parse(cartan_type), caps)};
    });
}

void lc_root_system_free(lc_root_system* rs) { delete rs; }

lc_status lc_root_system_describe(const lc_root_system* rs, char** json_out) {
    return guarded([&] {
        if (!rs) throw usage_error("null root system");
        emit(root_system_to_json(rs->rs), json_out);
    });
}

lc_status lc_subsystem_new(const lc_root_system* rs, const char* simple_roots,
                           lc_subsystem** out) {
    return guarded([&] {
        if (!rs || !simple_roots || !out) throw usage_error("null argument");
        *out = new lc_subsystem{
            validate_subsystem(rs->rs, parse_int_vectors(simple_roots))};
    });
}

void lc_subsystem_free(lc_subsystem* sub) { delete sub; }

lc_status lc_weyl_elements(const lc_root_system* rs, const lc_subsystem* sub, char** json_out) {
    return guarded([&] {
        if (!rs) throw usage_error("null root system");
        emit(weyl_to_json(enumerate_weyl(view(rs, sub))), json_out);
    });
}

lc_status lc_irreducible_character(const lc_root_system* rs, const lc_subsystem* sub,
                                   const char* weight, char** json_out) {
    return guarded([&] {
        if (!rs) throw usage_error("null root system");
        Weight lam = parse_weight_arg(rs, weight);
        emit(character_to_json(irreducible_character(view(rs, sub), lam)), json_out);
    });
}

lc_status lc_spin_characters(const lc_root_system* rs, const lc_subsystem* sub, char** json_out) {
    return guarded([&] {
        if (!rs || !sub) throw usage_error("null argument");
        emit(spin_to_json(rs->rs, spin_characters(rs->rs, sub->sub)), json_out);
    });
}

lc_status lc_dirac_index(const lc_root_system* rs, const lc_subsystem* sub, const char* lambda,
                         char** json_out) {
    return guarded([&] {
        if (!rs || !sub) throw usage_error("null argument");
        Weight lam = parse_weight_arg(rs, lambda);
        emit(decomposition_to_json(dirac_index(rs->rs, sub->sub, lam).decomposition), json_out);
    });
}

lc_status lc_kostant_hd(const lc_root_system* rs, const lc_subsystem* sub, const char* lambda,
                        char** json_out) {
    return guarded([&] {
        if (!rs || !sub) throw usage_error("null argument");
        Weight lam = parse_weight_arg(rs, lambda);
        emit(kostant_to_json(kostant_hd(rs->rs, sub->sub, lam)), json_out);
    });
}

lc_status lc_dsquared_spectrum(const lc_root_system* rs, const lc_subsystem* sub,
                               const char* lambda, char** json_out) {
    return guarded([&] {
        if (!rs || !sub) throw usage_error("null argument");
        Weight lam = parse_weight_arg(rs, lambda);
        emit(spectrum_to_json(dsquared_spectrum(rs->rs, sub->sub, lam)), json_out);
    });
}

lc_status lc_endoscopic_new(const lc_root_system* rs, const char* k_simple, const char* h_simple,
                            int sign_q, lc_endoscopic_datum** out) {
    return guarded([&] {
        if (!rs || !k_simple || !h_simple || !out) throw usage_error("null argument");
        *out = new lc_endoscopic_datum{build_endoscopic_datum(
            rs->rs.type(), parse_int_vectors(k_simple), parse_int_vectors(h_simple), sign_q,
            rs->rs.caps())};
    });
}

void lc_endoscopic_free(lc_endoscopic_datum* datum) { delete datum; }

lc_status lc_endoscopic_describe(const lc_endoscopic_datum* datum, char** json_out) {
    return guarded([&] {
        if (!datum) throw usage_error("null datum");
        emit(endoscopic_to_json(datum->datum), json_out);
    });
}

lc_status lc_lift_discrete_series(const lc_endoscopic_datum* datum, const char* parameter,
                                  char** json_out) {
    return guarded([&] {
        if (!datum || !parameter) throw usage_error("null argument");
        std::vector<Rat> coords = parse_rational_csv(parameter);
        if (coords.size() != static_cast<std::size_t>(datum->datum.g.rank()))
            throw usage_error("parameter arity mismatch");
        HCParameter param{Weight(std::move(coords))};
        emit(lift_to_json(lift_discrete_series(datum->datum, param)), json_out);
    });
}

lc_status lc_verify_lift_identity(const lc_endoscopic_datum* datum, const char* parameter,
                                  char** json_out) {
    return guarded([&] {
        if (!datum || !parameter) throw usage_error("null argument");
        std::vector<Rat> coords = parse_rational_csv(parameter);
        if (coords.size() != static_cast<std::size_t>(datum->datum.g.rank()))
            throw usage_error("parameter arity mismatch");
        HCParameter param{Weight(std::move(coords))};
        emit(lift_report_to_json(verify_lift_identity(datum->datum, param)), json_out);
    });
}

lc_status lc_rank1_oracle(int n, char** json_out) {
    return guarded([&] { emit(rank1_to_json(rank1_matrix_oracle(n)), json_out); });
}

lc_status lc_verify_catalog(const lc_context* ctx, const char* catalog_json, const char* suite,
                            unsigned long long seed, int use_seed, char** report_json_out,
                            int* all_passed) {
    lc_status st = guarded([&] {
        if (!catalog_json || !suite || !report_json_out || !all_passed)
            throw usage_error("null argument");
        CatalogFile catalog = parse_catalog(catalog_json);
        // Explicitly configured context caps override the catalog's.
        if (ctx) {
            if (ctx->rank_set) catalog.caps.max_rank = ctx->caps.max_rank;
            if (ctx->weyl_set) catalog.caps.max_weyl_order = ctx->caps.max_weyl_order;
            if (ctx->terms_set) catalog.caps.max_terms = ctx->caps.max_terms;
        }
        std::uint64_t effective = use_seed ? seed : catalog.seed;
        SuiteReport report = run_suite(catalog, suite, effective);
        *all_passed = report.all_passed() ? 1 : 0;
        emit(suite_report_to_json(report), report_json_out);
    });
    return st;
}

}  // extern "C"
