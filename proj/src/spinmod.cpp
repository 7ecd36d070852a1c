#include "liechar/spinmod.hpp"

namespace liechar {

namespace {

std::vector<Weight> noncompact_positive_roots(const RootSystem& rs, const RootSubsystem& sub) {
    if (sub.ambient().cartan_matrix() != rs.cartan_matrix())
        throw validation_error("subsystem was built for a different root system");
    if (!sub.is_quadratic())
        throw validation_error(
            "spin module requires an additively closed (quadratic) subsystem");
    std::vector<Weight> out;
    for (const Weight& alpha : rs.positive_roots())
        if (!sub.is_positive_root(alpha)) out.push_back(alpha);
    return out;
}

FormalCharacter binomial_product(int rank, const std::vector<Weight>& roots, int minus_sign,
                                 long long max_terms) {
    FormalCharacter acc = FormalCharacter::exponential(Weight(static_cast<std::size_t>(rank)));
    for (const Weight& alpha : roots) {
        Weight half = Rat(1, 2) * alpha;
        FormalCharacter factor;
        factor.add_term(half, 1);
        factor.add_term(-half, minus_sign);
        acc = multiply(acc, factor, max_terms);
    }
    return acc;
}

}  // namespace

SpinPair spin_characters(const RootSystem& rs, const RootSubsystem& sub) {
    SpinPair out;
    out.pos_noncompact = noncompact_positive_roots(rs, sub);
    out.rho_n = rs.rho() - sub.rho_r();

    Weight half_sum(rs.rank());
    for (const Weight& alpha : out.pos_noncompact) half_sum += alpha;
    if (!(Rat(1, 2) * half_sum == out.rho_n))
        throw internal_error("rho_n differs from the half sum of noncompact positive roots");

    const long long cap = rs.caps().max_terms;
    FormalCharacter sum = binomial_product(rs.rank(), out.pos_noncompact, +1, cap);
    FormalCharacter diff = binomial_product(rs.rank(), out.pos_noncompact, -1, cap);
    // Even-size subsets land in S+, odd ones in S-.
    for (const auto& [mu, m] : sum.terms()) {
        long long d = diff.multiplicity(mu);
        if ((m + d) % 2 != 0 || (m - d) % 2 != 0)
            throw internal_error("spin halves are not integral");
        out.s_plus.add_term(mu, (m + d) / 2);
        out.s_minus.add_term(mu, (m - d) / 2);
    }
    // diff may cancel where sum does not, never the other way around.
    for (const auto& [mu, d] : diff.terms())
        if (sum.multiplicity(mu) == 0) throw internal_error("spin parity split out of balance");
    return out;
}

FormalCharacter transfer_factor(const RootSystem& rs, const RootSubsystem& sub) {
    return binomial_product(rs.rank(), noncompact_positive_roots(rs, sub), -1, rs.caps().max_terms);
}

}  // namespace liechar
