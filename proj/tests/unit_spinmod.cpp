#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liechar/spinmod.hpp"

using namespace liechar;

namespace {

struct Pair {
    const char* type;
    std::vector<std::vector<long long>> sub;
};

const std::vector<Pair> kCatalogPairs = {
    {"A1", {}},
    {"A2", {}},
    {"A2", {{1, 0}}},
    {"B2", {{1, 0}}},
    {"B2", {{0, 1}}},
    {"B2", {{1, 0}, {1, 2}}},
    {"C2", {{1, 0}}},
    {"G2", {{0, 1}, {3, 1}}},
    {"G2", {{1, 0}, {3, 2}}},
};

// Independent oracle: expand S+ and S- literally as sums over even/odd
// subsets of Delta+(s), weights rho_n - (subset sum).
std::pair<FormalCharacter, FormalCharacter> subset_oracle(const RootSystem& rs,
                                                          const std::vector<Weight>& noncompact,
                                                          const Weight& rho_n) {
    FormalCharacter plus, minus;
    const std::size_t k = noncompact.size();
    REQUIRE(k <= 20);
    for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
        Weight sum(rs.rank());
        int bits = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t(1) << i)) {
                sum += noncompact[i];
                ++bits;
            }
        (bits % 2 == 0 ? plus : minus).add_term(rho_n - sum, 1);
    }
    return {plus, minus};
}

}  // namespace

TEST_CASE("A1 over the Cartan: S+ = e^[1], S- = e^[-1]") {
    RootSystem a1 = build_root_system(CartanType::parse("A1"));
    RootSubsystem torus = validate_subsystem(a1, {});
    SpinPair sp = spin_characters(a1, torus);
    CHECK(sp.rho_n == Weight::from_ints({1}));
    CHECK(sp.s_plus == FormalCharacter::exponential(Weight::from_ints({1})));
    CHECK(sp.s_minus == FormalCharacter::exponential(Weight::from_ints({-1})));
    CHECK(sp.pos_noncompact.size() == 1);
}

TEST_CASE("A2 over {alpha1}: mass 2 each side, rho_n = (alpha2 + alpha1+alpha2)/2") {
    RootSystem a2 = build_root_system(CartanType::parse("A2"));
    RootSubsystem sub = validate_subsystem(a2, {{1, 0}});
    SpinPair sp = spin_characters(a2, sub);
    CHECK(sp.pos_noncompact.size() == 2);
    CHECK(sp.s_plus.mass() == 2);
    CHECK(sp.s_minus.mass() == 2);
    CHECK(sp.rho_n == Weight({Rat(0), Rat(3, 2)}));
}

TEST_CASE("B2 over long A1xA1: the two short roots are noncompact") {
    RootSystem b2 = build_root_system(CartanType::parse("B2"));
    RootSubsystem sub = validate_subsystem(b2, {{1, 0}, {1, 2}});
    SpinPair sp = spin_characters(b2, sub);
    CHECK(sp.pos_noncompact.size() == 2);
    for (const Weight& alpha : sp.pos_noncompact) CHECK(b2.bilinear(alpha, alpha) == 1);
    CHECK(sp.s_plus.mass() == 2);
    CHECK(sp.s_minus.mass() == 2);
}

TEST_CASE("incremental products agree with the brute-force subset expansion") {
    for (const Pair& p : kCatalogPairs) {
        CAPTURE(p.type);
        RootSystem rs = build_root_system(CartanType::parse(p.type));
        RootSubsystem sub = validate_subsystem(rs, p.sub);
        SpinPair sp = spin_characters(rs, sub);
        auto [plus, minus] = subset_oracle(rs, sp.pos_noncompact, sp.rho_n);
        CHECK(sp.s_plus == plus);
        CHECK(sp.s_minus == minus);
        CHECK(sp.s_plus.mass() + sp.s_minus.mass() == Int(1) << sp.pos_noncompact.size());
        CHECK(transfer_factor(rs, sub) == sp.s_plus - sp.s_minus);
    }
}

TEST_CASE("transfer factor examples") {
    RootSystem a1 = build_root_system(CartanType::parse("A1"));
    FormalCharacter t1 = transfer_factor(a1, validate_subsystem(a1, {}));
    CHECK(t1.multiplicity(Weight::from_ints({1})) == 1);
    CHECK(t1.multiplicity(Weight::from_ints({-1})) == -1);
    CHECK(t1.support_size() == 2);

    // Over the Cartan the transfer factor is the Weyl denominator, whose
    // numerator form is the rho-numerator.
    RootSystem a2 = build_root_system(CartanType::parse("A2"));
    FormalCharacter t2 = transfer_factor(a2, validate_subsystem(a2, {}));
    CHECK(t2 == weyl_numerator(a2, a2.rho()));

    RootSystem g2 = build_root_system(CartanType::parse("G2"));
    FormalCharacter t3 = transfer_factor(g2, validate_subsystem(g2, {{0, 1}, {3, 1}}));
    // 8 signed subset terms; only the two weight-0 terms cancel.
    CHECK(t3.support_size() == 6);
    for (const auto& [mu, m] : t3.terms()) CHECK((m == 1 || m == -1));
    CHECK(t3.multiplicity(Weight::from_ints({0, 0})) == 0);
}

TEST_CASE("denominator-quotient identity on the full pair catalog") {
    for (const Pair& p : kCatalogPairs) {
        CAPTURE(p.type);
        RootSystem rs = build_root_system(CartanType::parse(p.type));
        RootSubsystem sub = validate_subsystem(rs, p.sub);
        FormalCharacter lhs =
            multiply(transfer_factor(rs, sub), weyl_numerator(sub, sub.rho_r()), 1000000);
        CHECK(lhs == weyl_numerator(rs, rs.rho()));
    }
}

TEST_CASE("weight negation scales the transfer factor by (-1)^{|Delta+(s)|}") {
    for (const Pair& p : kCatalogPairs) {
        CAPTURE(p.type);
        RootSystem rs = build_root_system(CartanType::parse(p.type));
        RootSubsystem sub = validate_subsystem(rs, p.sub);
        SpinPair sp = spin_characters(rs, sub);
        FormalCharacter t = sp.s_plus - sp.s_minus;
        FormalCharacter flipped = t.negated_weights();
        FormalCharacter expect = t;
        if (sp.pos_noncompact.size() % 2 == 1) expect *= -1;
        CHECK(flipped == expect);
    }
}

TEST_CASE("S+ and S- are separately W_r-invariant") {
    for (const Pair& p : kCatalogPairs) {
        CAPTURE(p.type);
        RootSystem rs = build_root_system(CartanType::parse(p.type));
        RootSubsystem sub = validate_subsystem(rs, p.sub);
        SpinPair sp = spin_characters(rs, sub);
        for (const WeylElement& u : enumerate_weyl(sub)) {
            for (const auto& [mu, m] : sp.s_plus.terms())
                CHECK(sp.s_plus.multiplicity(u.apply(mu)) == m);
            for (const auto& [mu, m] : sp.s_minus.terms())
                CHECK(sp.s_minus.multiplicity(u.apply(mu)) == m);
        }
    }
}

TEST_CASE("spin characters require a quadratic subsystem") {
    RootSystem c2 = build_root_system(CartanType::parse("C2"));
    RootSubsystem refl = validate_subsystem(c2, {{1, 0}, {1, 1}}, SubsystemKind::reflection);
    CHECK_THROWS_AS(spin_characters(c2, refl), validation_error);
    CHECK_THROWS_AS(transfer_factor(c2, refl), validation_error);
}

TEST_CASE("supports live in rho_n + root lattice") {
    RootSystem g2 = build_root_system(CartanType::parse("G2"));
    RootSubsystem sub = validate_subsystem(g2, {{1, 0}, {3, 2}});
    SpinPair sp = spin_characters(g2, sub);
    for (const FormalCharacter* side : {&sp.s_plus, &sp.s_minus})
        for (const auto& [mu, m] : side->terms()) {
            Weight diff = mu - sp.rho_n;
            // diff must be an integer combination of simple roots.
            CHECK(diff.is_integral());
        }
}
