#include "liechar/lifting.hpp"

#include <algorithm>

namespace liechar {

EndoscopicDatum build_endoscopic_datum(const CartanType& type,
                                       const std::vector<std::vector<long long>>& k_simple,
                                       const std::vector<std::vector<long long>>& h_simple,
                                       int sign_q, const Caps& caps) {
    if (sign_q != 1 && sign_q != -1) throw validation_error("sign_q must be +1 or -1");
    EndoscopicDatum datum;
    datum.sign_q = sign_q;
    datum.g = build_root_system(type, caps);
    datum.k = validate_subsystem(datum.g, k_simple, SubsystemKind::quadratic);
    datum.h = validate_subsystem(datum.g, h_simple, SubsystemKind::reflection);

    // kh = Delta(k) & Delta(h), elementwise on the positive halves.
    std::set<Weight> intersection;
    for (const Weight& beta : datum.k.positive_roots())
        if (datum.h.is_positive_root(beta)) intersection.insert(beta);
    std::vector<std::vector<long long>> kh_simple;
    for (const Weight& beta : intersection) {
        bool decomposable = false;
        for (const Weight& a : intersection)
            if (intersection.count(beta - a) && !(beta - a).is_zero()) {
                decomposable = true;
                break;
            }
        if (!decomposable) kh_simple.push_back(datum.g.root_coords(beta));
    }
    datum.kh = validate_subsystem(datum.g, kh_simple, SubsystemKind::reflection);
    // Root intersections regenerate exactly; anything else is a bug.
    std::set<Weight> regenerated(datum.kh.positive_roots().begin(),
                                 datum.kh.positive_roots().end());
    if (regenerated != intersection)
        throw internal_error("intersection subsystem did not regenerate from its simple roots");
    return datum;
}

std::vector<LiftTerm> lift_discrete_series(const EndoscopicDatum& datum, const HCParameter& param) {
    if (param.lam.size() != static_cast<std::size_t>(datum.g.rank()))
        throw validation_error("parameter rank mismatch");
    for (std::size_t i = 0; i < datum.k.positive_roots().size(); ++i) {
        const Weight& beta = datum.k.positive_roots()[i];
        if (dot(param.lam, datum.g.coroot_covector(beta)) == 0)
            throw validation_error(
                "parameter " + param.lam.str() + " is W_K-singular: vanishing pairing with " +
                Weight::from_ints(datum.k.positive_roots_rc()[i]).str() +
                " (root coordinates)");
    }
    std::vector<LiftTerm> out;
    std::set<Weight> seen;
    for (const WeylElement& w : coset_representatives(datum.k, datum.kh)) {
        LiftTerm term{w.det, w.apply(param.lam)};
        if (!seen.insert(term.parameter).second)
            throw internal_error("lift of a regular parameter produced a repeated term");
        out.push_back(std::move(term));
    }
    return out;
}

LiftIdentityReport verify_lift_identity(const EndoscopicDatum& datum, const HCParameter& param) {
    if (param.lam.size() != static_cast<std::size_t>(datum.g.rank()))
        throw validation_error("parameter rank mismatch");
    FormalCharacter lhs = weyl_numerator(datum.k, param.lam);
    FormalCharacter rhs;
    for (const WeylElement& w : coset_representatives(datum.k, datum.kh)) {
        FormalCharacter part = weyl_numerator(datum.kh, w.apply(param.lam));
        part *= w.det;
        rhs += part;
    }
    LiftIdentityReport report;
    report.equal = lhs == rhs;
    report.lhs_terms = lhs.support_size();
    report.rhs_terms = rhs.support_size();
    report.sign_q = datum.sign_q;
    return report;
}

VirtualDecomposition finite_dim_lift(const RootSystem& rs, const RootSubsystem& sub,
                                     const Weight& lam) {
    return dirac_index(rs, sub, lam).decomposition;
}

}  // namespace liechar
