#pragma once

#include "liechar/dirac.hpp"

namespace liechar {

// Endoscopic datum inside a fixed root system sharing the Cartan:
// a compact subsystem k (additively closed), an endoscopic subsystem h
// (reflection-closed; additive closedness not required), and their
// intersection kh. sign_q stands in for the real-form sign (-1)^{q(G)-q(H)};
// it scales reports and is never asserted.
struct EndoscopicDatum {
    RootSystem g;
    RootSubsystem k;
    RootSubsystem h;
    RootSubsystem kh;
    int sign_q = 1;
};

// Harish-Chandra parameter: a rational weight, W_K-regular where lifting
// requires it; g-regularity is not required (limits of discrete series).
struct HCParameter {
    Weight lam;
};

struct LiftTerm {
    int sign = 1;  // det(w)
    Weight parameter;
};

struct LiftIdentityReport {
    bool equal = false;
    std::size_t lhs_terms = 0;  // support of the W_K-numerator of the parameter
    std::size_t rhs_terms = 0;  // support of the signed sum of W_{H&K}-numerators
    int sign_q = 1;             // echoed, scales both sides identically
};

EndoscopicDatum build_endoscopic_datum(const CartanType& type,
                                       const std::vector<std::vector<long long>>& k_simple,
                                       const std::vector<std::vector<long long>>& h_simple,
                                       int sign_q = 1, const Caps& caps = Caps{});

// One term (det(w), w param) per w in W_K^1, the minimal representatives of
// W_{H&K} \ W_K. Rejects W_K-singular parameters naming the vanishing pairing.
std::vector<LiftTerm> lift_discrete_series(const EndoscopicDatum& datum, const HCParameter& param);

// Exact division-free form of the character lifting identity:
// Num_{W_K}(param) = sum_{w in W_K^1} det(w) Num_{W_{H&K}}(w param).
LiftIdentityReport verify_lift_identity(const EndoscopicDatum& datum, const HCParameter& param);

// Lift of a finite-dimensional character: its Dirac index over the subalgebra.
VirtualDecomposition finite_dim_lift(const RootSystem& rs, const RootSubsystem& sub,
                                     const Weight& lam);

}  // namespace liechar
