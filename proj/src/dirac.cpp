#include "liechar/dirac.hpp"

#include <algorithm>
#include <map>

namespace liechar {

namespace {

void require_g_dominant(const RootSystem& rs, const Weight& lam) {
    for (int i = 0; i < rs.rank(); ++i) {
        Rat p = dot(lam, rs.coroot_covector(rs.simple_roots()[i]));
        if (!is_integer(p) || p < 0)
            throw validation_error("lambda " + lam.str() + " is not dominant-integral for " +
                                   rs.type().str());
    }
}

}  // namespace

DiracIndex dirac_index(const RootSystem& rs, const RootSubsystem& sub, const Weight& lam) {
    require_g_dominant(rs, lam);
    FormalCharacter chi = irreducible_character(rs, lam);
    FormalCharacter product = multiply(chi, transfer_factor(rs, sub), rs.caps().max_terms);
    return DiracIndex{decompose(product, sub)};
}

std::vector<KostantComponent> kostant_hd(const RootSystem& rs, const RootSubsystem& sub,
                                         const Weight& lam) {
    require_g_dominant(rs, lam);
    Weight top = lam + rs.rho();
    std::vector<KostantComponent> out;
    std::set<Weight> seen;
    for (const WeylElement& w : coset_representatives(rs, sub)) {
        KostantComponent comp;
        comp.mu = w.apply(top) - sub.rho_r();
        comp.parity = w.det;
        comp.w = w;
        for (const Weight& beta : sub.simple_roots())
            if (dot(comp.mu, rs.coroot_covector(beta)) < 0)
                throw internal_error("Kostant component is not subsystem-dominant");
        if (!seen.insert(comp.mu).second) throw internal_error("repeated Kostant weight");
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<SpectrumEntry> dsquared_spectrum(const RootSystem& rs, const RootSubsystem& sub,
                                             const Weight& lam) {
    require_g_dominant(rs, lam);
    SpinPair sp = spin_characters(rs, sub);
    FormalCharacter chi = irreducible_character(rs, lam);
    FormalCharacter full = multiply(chi, sp.s_plus + sp.s_minus, rs.caps().max_terms);
    VirtualDecomposition dec = decompose(full, sub);

    const Rat casimir = rs.bilinear(lam + rs.rho(), lam + rs.rho());
    std::vector<SpectrumEntry> out;
    for (const auto& comp : dec.components) {
        if (comp.coefficient <= 0)
            throw internal_error("V (x) S decomposed with a non-positive multiplicity");
        Weight shifted = comp.highest_weight + sub.rho_r();
        out.push_back({comp.highest_weight, comp.coefficient,
                       rs.bilinear(shifted, shifted) - casimir});
    }
    std::sort(out.begin(), out.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.mu < b.mu; });
    return out;
}

InfinitesimalReport check_infinitesimal_character(const RootSystem& rs, const RootSubsystem& sub,
                                                  const Weight& lam,
                                                  const std::vector<Weight>& mus) {
    InfinitesimalReport report;
    Weight target = lam + rs.rho();
    for (const Weight& mu : mus) {
        InfinitesimalWitness entry;
        entry.mu = mu;
        auto [dom, u] = dominant_conjugate(rs, mu + sub.rho_r());
        entry.ok = dom == target;
        if (entry.ok) entry.witness = weyl_inverse(rs, u);
        report.all_ok = report.all_ok && entry.ok;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

InfinitesimalReport check_infinitesimal_character(const RootSystem& rs, const RootSubsystem& sub,
                                                  const Weight& lam,
                                                  const std::vector<KostantComponent>& comps) {
    std::vector<Weight> mus;
    mus.reserve(comps.size());
    for (const auto& c : comps) mus.push_back(c.mu);
    return check_infinitesimal_character(rs, sub, lam, mus);
}

DiracConsistency dirac_consistency(const RootSystem& rs, const RootSubsystem& sub,
                                   const Weight& lam) {
    DiracConsistency c;
    c.lambda = lam;
    c.index = dirac_index(rs, sub, lam);
    c.kostant = kostant_hd(rs, sub, lam);
    c.spectrum = dsquared_spectrum(rs, sub, lam);
    for (const auto& e : c.spectrum)
        if (e.eigenvalue == 0) c.kernel.push_back(e);

    // Index = sum of det(w) E_{mu_w} as multisets.
    std::map<Weight, long long> index_map, kostant_map;
    for (const auto& comp : c.index.decomposition.components)
        index_map[comp.highest_weight] = comp.coefficient;
    for (const auto& k : c.kostant) kostant_map[k.mu] += k.parity;
    c.index_matches_kostant = index_map == kostant_map;

    std::set<Weight> kernel_set;
    for (const auto& e : c.kernel) kernel_set.insert(e.mu);
    c.kernel_contains_kostant = true;
    for (const auto& k : c.kostant)
        if (!kernel_set.count(k.mu)) c.kernel_contains_kostant = false;
    c.index_inside_kernel = true;
    for (const auto& comp : c.index.decomposition.components)
        if (!kernel_set.count(comp.highest_weight)) c.index_inside_kernel = false;

    std::map<Weight, long long> spectrum_mult;
    for (const auto& e : c.spectrum) spectrum_mult[e.mu] = e.mult;
    c.multiplicity_one = true;
    for (const auto& k : c.kostant)
        if (spectrum_mult[k.mu] != 1) c.multiplicity_one = false;

    std::vector<Weight> kernel_mus;
    for (const auto& e : c.kernel) kernel_mus.push_back(e.mu);
    c.infinitesimal = check_infinitesimal_character(rs, sub, lam, kernel_mus);
    return c;
}

}  // namespace liechar
