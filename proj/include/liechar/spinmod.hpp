#pragma once

#include "liechar/charring.hpp"

namespace liechar {

// Characters of the even/odd halves of the spin module for s = g (-) r.
// Support lies in rho_n - {subset sums of Delta+(s)}.
struct SpinPair {
    FormalCharacter s_plus;
    FormalCharacter s_minus;
    Weight rho_n;                       // half sum of Delta+(s)
    std::vector<Weight> pos_noncompact;  // Delta+(s) = Delta+(g) \ Delta+(r)
};

// Builds S+- from the two incremental binomial products
// prod(e^{a/2} + e^{-a/2}) and prod(e^{a/2} - e^{-a/2}); the subset of size 0
// (highest weight rho_n) lies in S+. Requires a quadratic subsystem.
SpinPair spin_characters(const RootSystem& rs, const RootSubsystem& sub);

// ch S+ - ch S-: the endoscopic transfer factor, equal to the alternating
// product prod_{a in Delta+(s)}(e^{a/2} - e^{-a/2}).
FormalCharacter transfer_factor(const RootSystem& rs, const RootSubsystem& sub);

}  // namespace liechar
