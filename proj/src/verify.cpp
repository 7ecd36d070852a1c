#include "liechar/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace liechar {

namespace {

struct BuiltPair {
    const CatalogPair* entry;
    RootSystem rs;
    RootSubsystem sub;
};

std::vector<BuiltPair> build_pairs(const CatalogFile& catalog) {
    std::vector<BuiltPair> out;
    for (const CatalogPair& p : catalog.pairs) {
        RootSystem rs = build_root_system(p.type, catalog.caps);
        RootSubsystem sub = validate_subsystem(rs, p.subsystem);
        out.push_back({&p, std::move(rs), std::move(sub)});
    }
    return out;
}

std::vector<Weight> lambda_samples(const RootSystem& rs) {
    std::vector<Weight> out;
    out.push_back(Weight(rs.rank()));
    for (int i = 0; i < rs.rank(); ++i) {
        Weight f(rs.rank());
        f[i] = 1;
        out.push_back(f);
    }
    out.push_back(rs.rho());
    return out;
}

long long draw(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

Weight random_parameter(std::mt19937_64& rng, int rank) {
    std::vector<Rat> v(rank);
    for (int i = 0; i < rank; ++i) {
        long long num = 0;
        while (num == 0) num = draw(rng, -12, 12);
        v[i] = Rat(num, draw(rng, 1, 4));
    }
    return Weight(std::move(v));
}

bool wk_regular(const EndoscopicDatum& d, const Weight& p) {
    for (const Weight& beta : d.k.positive_roots())
        if (dot(p, d.g.coroot_covector(beta)) == 0) return false;
    return true;
}

}  // namespace

std::vector<CheckResult> check_denominator_quotient(const CatalogFile& catalog) {
    std::vector<CheckResult> out;
    for (const BuiltPair& bp : build_pairs(catalog)) {
        CheckResult r;
        r.name = "denominator-quotient/" + bp.entry->label;
        FormalCharacter lhs = multiply(transfer_factor(bp.rs, bp.sub),
                                       weyl_numerator(bp.sub, bp.sub.rho_r()),
                                       catalog.caps.max_terms);
        FormalCharacter rhs = weyl_numerator(bp.rs, bp.rs.rho());
        r.passed = lhs == rhs;
        r.detail = "lhs terms " + std::to_string(lhs.support_size()) + ", rhs terms " +
                   std::to_string(rhs.support_size());
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> check_index_identity(const CatalogFile& catalog) {
    std::vector<CheckResult> out;
    for (const BuiltPair& bp : build_pairs(catalog)) {
        for (const Weight& lam : lambda_samples(bp.rs)) {
            DiracConsistency c = dirac_consistency(bp.rs, bp.sub, lam);
            CheckResult r;
            r.name = "index-identity/" + bp.entry->label + "/lambda=" + lam.str();
            r.passed = c.index_matches_kostant;
            r.detail = std::to_string(c.kostant.size()) + " multiplet members";
            r.data = dirac_consistency_to_json(bp.entry->label, c);
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<CheckResult> check_kernel_agreement(const CatalogFile& catalog) {
    std::vector<CheckResult> out;
    for (const BuiltPair& bp : build_pairs(catalog)) {
        bool mult_one = true;
        for (const Weight& lam : lambda_samples(bp.rs)) {
            DiracConsistency c = dirac_consistency(bp.rs, bp.sub, lam);
            CheckResult r;
            r.name = "kernel-agreement/" + bp.entry->label + "/lambda=" + lam.str();
            r.passed = c.kernel_contains_kostant && c.index_inside_kernel;
            r.detail = "kernel types " + std::to_string(c.kernel.size());
            out.push_back(std::move(r));
            mult_one = mult_one && c.multiplicity_one;
        }
        CheckResult adv;
        adv.name = "multiplicity-one/" + bp.entry->label;
        adv.passed = mult_one;
        adv.advisory = true;
        adv.detail = mult_one ? "each Kostant type occurs once in V(x)S"
                              : "a Kostant type occurs with multiplicity > 1";
        out.push_back(std::move(adv));
    }
    return out;
}

std::vector<CheckResult> check_infinitesimal_conjugacy(const CatalogFile& catalog) {
    std::vector<CheckResult> out;
    for (const BuiltPair& bp : build_pairs(catalog)) {
        for (const Weight& lam : lambda_samples(bp.rs)) {
            DiracConsistency c = dirac_consistency(bp.rs, bp.sub, lam);
            CheckResult r;
            r.name = "infinitesimal/" + bp.entry->label + "/lambda=" + lam.str();
            r.passed = c.infinitesimal.all_ok;
            std::ostringstream os;
            os << c.infinitesimal.entries.size() << " kernel types";
            for (const auto& e : c.infinitesimal.entries)
                if (!e.ok) os << "; offending mu=" << e.mu.str();
            r.detail = os.str();
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<CheckResult> check_coset_counts(const CatalogFile& catalog) {
    // Pinned |W^1| values for the shipped pairs (order quotients |W|/|W_r|).
    const std::map<std::string, long long> expected = {
        {"A1/{}", 2},          {"A2/{}", 6},          {"A2/{1,0}", 3},
        {"B2/{1,0;1,2}", 2},   {"G2/{0,1;3,1}", 2},   {"G2/{1,0;3,2}", 3},
    };
    std::vector<CheckResult> out;
    for (const BuiltPair& bp : build_pairs(catalog)) {
        std::vector<WeylElement> reps = coset_representatives(bp.rs, bp.sub);
        CheckResult r;
        r.name = "coset-count/" + bp.entry->label;
        bool product_ok = Int(reps.size()) * bp.sub.weyl_order() == bp.rs.weyl_order();
        auto it = expected.find(bp.entry->label);
        if (it != expected.end()) {
            r.passed = product_ok && static_cast<long long>(reps.size()) == it->second;
            r.detail = "|W1| = " + std::to_string(reps.size()) + ", pinned " +
                       std::to_string(it->second);
        } else {
            r.passed = product_ok;
            r.detail = "|W1| = " + std::to_string(reps.size()) + " (product rule only)";
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> check_lifting(const CatalogFile& catalog, std::uint64_t seed,
                                       int regular_trials, int limit_trials) {
    std::vector<CheckResult> out;
    for (const CatalogEndo& e : catalog.endoscopy) {
        EndoscopicDatum datum =
            build_endoscopic_datum(e.type, e.k_simple, e.h_simple, e.sign_q, catalog.caps);
        std::mt19937_64 rng(seed);

        CheckResult reg;
        reg.name = "lifting-regular/" + e.label;
        reg.passed = true;
        int done = 0, guard = 0;
        while (done < regular_trials && ++guard < 100000) {
            Weight p = random_parameter(rng, datum.g.rank());
            if (!wk_regular(datum, p)) continue;
            LiftIdentityReport rep = verify_lift_identity(datum, {p});
            if (!rep.equal) {
                reg.passed = false;
                reg.detail = "failed at parameter " + p.str();
                break;
            }
            // Cross-check the lift terms themselves against the identity run.
            if (static_cast<Int>(lift_discrete_series(datum, {p}).size()) * datum.kh.weyl_order() !=
                datum.k.weyl_order()) {
                reg.passed = false;
                reg.detail = "term count off at " + p.str();
                break;
            }
            ++done;
        }
        if (reg.passed) reg.detail = std::to_string(done) + " regular trials";
        out.push_back(std::move(reg));

        CheckResult lim;
        lim.name = "lifting-limits/" + e.label;
        lim.passed = true;
        std::vector<Weight> noncompact;
        for (const Weight& alpha : datum.g.positive_roots())
            if (!datum.k.is_positive_root(alpha)) noncompact.push_back(alpha);
        done = 0;
        guard = 0;
        while (done < limit_trials && !noncompact.empty() && ++guard < 100000) {
            Weight p = random_parameter(rng, datum.g.rank());
            const Weight& gamma = noncompact[rng() % noncompact.size()];
            Weight proj = p - (dot(p, datum.g.coroot_covector(gamma)) / 2) * gamma;
            if (!wk_regular(datum, proj)) continue;
            int singular = 0;
            for (const Weight& alpha : datum.g.positive_roots())
                if (dot(proj, datum.g.coroot_covector(alpha)) == 0) ++singular;
            if (singular != 1) continue;
            LiftIdentityReport rep = verify_lift_identity(datum, {proj});
            if (!rep.equal) {
                lim.passed = false;
                lim.detail = "failed at limit parameter " + proj.str();
                break;
            }
            ++done;
        }
        if (lim.passed) lim.detail = std::to_string(done) + " limit trials";
        if (done < limit_trials && lim.passed) {
            lim.passed = false;
            lim.detail = "could not draw enough limit parameters";
        }
        out.push_back(std::move(lim));
    }
    return out;
}

std::vector<CheckResult> check_rank1_oracle() {
    std::vector<CheckResult> out;
    for (int n = 0; n <= 5; ++n) {
        Rank1Report rep = rank1_matrix_oracle(n);
        CheckResult r;
        r.name = "rank1-oracle/n=" + std::to_string(n);
        r.passed = rep.ok();
        std::ostringstream os;
        os << "dim ker D = " << rep.kernel_dimension << ", weights {";
        for (std::size_t i = 0; i < rep.kernel_weights.size(); ++i)
            os << (i ? ", " : "") << rep.kernel_weights[i].str();
        os << "}";
        r.detail = os.str();
        r.data = rank1_to_json(rep);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> check_character_ring(const CatalogFile& catalog, std::uint64_t seed,
                                              int reconstruct_trials) {
    std::vector<CheckResult> out;
    std::set<std::string> seen_types;
    std::vector<RootSystem> systems;
    for (const CatalogPair& p : catalog.pairs)
        if (seen_types.insert(p.type.str()).second)
            systems.push_back(build_root_system(p.type, catalog.caps));

    for (const RootSystem& rs : systems) {
        CheckResult r;
        r.name = "weyl-formula/" + rs.type().str();
        r.passed = true;
        FormalCharacter denom = weyl_numerator(rs, rs.rho());
        for (const Weight& lam : lambda_samples(rs)) {
            FormalCharacter lhs =
                multiply(irreducible_character(rs, lam), denom, catalog.caps.max_terms);
            bool ok = lhs == weyl_numerator(rs, lam + rs.rho()) &&
                      irreducible_character(rs, lam).mass() == weyl_dimension(rs, lam);
            if (!ok) {
                r.passed = false;
                r.detail = "failed at lambda " + lam.str();
                break;
            }
        }
        if (r.passed) r.detail = "cross-multiplied identity and mass = dimension";
        out.push_back(std::move(r));
    }

    {
        CheckResult r;
        r.name = "adjoint-dimensions";
        struct Spot {
            const char* type;
            std::vector<long long> hw;
            long long dim;
        };
        r.passed = true;
        for (const Spot& s : {Spot{"A2", {1, 1}, 8}, Spot{"B2", {0, 2}, 10}, Spot{"G2", {0, 1}, 14}}) {
            RootSystem rs = build_root_system(CartanType::parse(s.type), catalog.caps);
            if (weyl_dimension(rs, Weight::from_ints(s.hw)) != s.dim) {
                r.passed = false;
                r.detail = std::string("adjoint dimension wrong for ") + s.type;
            }
        }
        if (r.passed) r.detail = "dim = 8 (A2), 10 (B2), 14 (G2)";
        out.push_back(std::move(r));
    }

    {
        CheckResult r;
        r.name = "decompose-reconstruct";
        r.passed = true;
        std::mt19937_64 rng(seed);
        int done = 0;
        while (done < reconstruct_trials) {
            const BuiltPair bp = [&] {
                const CatalogPair& p = catalog.pairs[done % catalog.pairs.size()];
                RootSystem rs = build_root_system(p.type, catalog.caps);
                RootSubsystem sub = validate_subsystem(rs, p.subsystem);
                return BuiltPair{&p, std::move(rs), std::move(sub)};
            }();
            // Random virtual character over the pair's subsystem.
            std::map<Weight, long long> picked;
            int comps = static_cast<int>(draw(rng, 1, 5));
            for (int c = 0; c < comps; ++c) {
                Weight hw(bp.rs.rank());
                for (int i = 0; i < bp.rs.rank(); ++i) hw[i] = draw(rng, -3, 3);
                hw = dominant_conjugate(bp.sub, hw).first;
                long long coeff = 0;
                while (coeff == 0) coeff = draw(rng, -3, 3);
                picked[hw] = coeff;
            }
            FormalCharacter chi;
            for (const auto& [hw, coeff] : picked) {
                FormalCharacter c = irreducible_character(bp.sub, hw);
                c *= coeff;
                chi += c;
            }
            VirtualDecomposition dec = decompose(chi, bp.sub);
            std::map<Weight, long long> got;
            for (const auto& comp : dec.components) got[comp.highest_weight] = comp.coefficient;
            if (got != picked || !(reconstruct(bp.sub, dec) == chi)) {
                r.passed = false;
                r.detail = "round trip failed on " + bp.entry->label;
                break;
            }
            ++done;
        }
        if (r.passed) r.detail = std::to_string(done) + " seeded round trips";
        out.push_back(std::move(r));
    }
    return out;
}

SuiteReport run_suite(const CatalogFile& catalog, const std::string& suite, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite = suite;
    report.seed = seed;

    auto append = [&](std::vector<CheckResult> more) {
        for (auto& c : more) report.checks.push_back(std::move(c));
    };
    const bool identities = suite == "identities" || suite == "all";
    const bool lifting = suite == "lifting" || suite == "all";
    const bool oracle = suite == "oracle" || suite == "all";
    if (!identities && !lifting && !oracle)
        throw usage_error("unknown suite '" + suite + "'; expected identities, lifting, oracle or all");

    if (identities) {
        append(check_denominator_quotient(catalog));
        append(check_index_identity(catalog));
        append(check_kernel_agreement(catalog));
        append(check_infinitesimal_conjugacy(catalog));
        append(check_coset_counts(catalog));
        append(check_character_ring(catalog, seed));
    }
    if (lifting) append(check_lifting(catalog, seed));
    if (oracle) append(check_rank1_oracle());

    report.counters["pairs"] = static_cast<long long>(catalog.pairs.size());
    report.counters["endoscopy_data"] = static_cast<long long>(catalog.endoscopy.size());
    report.counters["checks"] = static_cast<long long>(report.checks.size());
    long long failed = 0;
    for (const auto& c : report.checks)
        if (!c.advisory && !c.passed) ++failed;
    report.counters["failed"] = failed;
    report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    return report;
}

Json suite_report_to_json(const SuiteReport& report) {
    Json j;
    j["suite"] = report.suite;
    j["seed"] = report.seed;
    Json checks = Json::array();
    for (const CheckResult& c : report.checks) {
        Json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        e["advisory"] = c.advisory;
        e["detail"] = c.detail;
        if (!c.data.is_null()) e["data"] = c.data;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["counters"] = report.counters;
    j["wall_time_ms"] = report.wall_time_ms;
    j["all_passed"] = report.all_passed();
    return j;
}

}  // namespace liechar
