#pragma once

#include "liechar/spinmod.hpp"

namespace liechar {

// One member of the Kostant multiplet: w in W^1 contributes the r-type
// E_{w(lam+rho)-rho_r} with parity det(w).
struct KostantComponent {
    WeylElement w;
    Weight mu;       // w(lam+rho) - rho_r, Delta+(r)-dominant
    int parity = 1;  // det(w)
};

// One r-type of V_lam (x) S with its D^2 scalar.
struct SpectrumEntry {
    Weight mu;
    long long mult = 0;
    Rat eigenvalue;  // B(mu+rho_r, mu+rho_r) - B(lam+rho, lam+rho)
};

// Virtual r-module V_lam (x) S+ - V_lam (x) S-.
struct DiracIndex {
    VirtualDecomposition decomposition;
};

DiracIndex dirac_index(const RootSystem& rs, const RootSubsystem& sub, const Weight& lam);

// Kostant's closed-form Dirac cohomology: one component per w in W^1.
std::vector<KostantComponent> kostant_hd(const RootSystem& rs, const RootSubsystem& sub,
                                         const Weight& lam);

// Decomposition of the genuine module V_lam (x) (S+ + S-) over r with the
// D^2 eigenvalue attached to each r-type; kernel candidates are the
// eigenvalue-0 entries.
std::vector<SpectrumEntry> dsquared_spectrum(const RootSystem& rs, const RootSubsystem& sub,
                                             const Weight& lam);

struct InfinitesimalWitness {
    Weight mu;
    bool ok = false;
    WeylElement witness;  // w with mu + rho_r = w(lam + rho), when ok
};

struct InfinitesimalReport {
    bool all_ok = true;
    std::vector<InfinitesimalWitness> entries;
};

// Verifies mu + rho_r lies in the W(g)-orbit of lam + rho for each given
// r-type, by explicit conjugation to the dominant chamber.
InfinitesimalReport check_infinitesimal_character(const RootSystem& rs, const RootSubsystem& sub,
                                                  const Weight& lam, const std::vector<Weight>& mus);
InfinitesimalReport check_infinitesimal_character(const RootSystem& rs, const RootSubsystem& sub,
                                                  const Weight& lam,
                                                  const std::vector<KostantComponent>& comps);

// Cross-checks between all of the above for one (pair, lambda); the booleans
// feed the verification suites.
struct DiracConsistency {
    Weight lambda;
    DiracIndex index;
    std::vector<KostantComponent> kostant;
    std::vector<SpectrumEntry> spectrum;
    std::vector<SpectrumEntry> kernel;  // eigenvalue-0 part of spectrum
    InfinitesimalReport infinitesimal;  // over the kernel types
    bool index_matches_kostant = false;
    bool kernel_contains_kostant = false;
    bool index_inside_kernel = false;
    bool multiplicity_one = false;  // advisory: each Kostant type once in V(x)S

    bool required_ok() const {
        return index_matches_kostant && kernel_contains_kostant && index_inside_kernel &&
               infinitesimal.all_ok;
    }
};

DiracConsistency dirac_consistency(const RootSystem& rs, const RootSubsystem& sub,
                                   const Weight& lam);

}  // namespace liechar
