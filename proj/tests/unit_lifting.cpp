#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liechar/lifting.hpp"

#include <random>

using namespace liechar;

namespace {

EndoscopicDatum c2_datum1() {
    return build_endoscopic_datum(CartanType::parse("C2"), {{1, 0}}, {{0, 1}, {2, 1}});
}
EndoscopicDatum c2_datum2() {
    return build_endoscopic_datum(CartanType::parse("C2"), {{1, 0}}, {{1, 0}, {1, 1}});
}
EndoscopicDatum a1_torus_datum() {
    return build_endoscopic_datum(CartanType::parse("A1"), {}, {});
}

Weight rational_weight(std::vector<Rat> v) { return Weight(std::move(v)); }

// Deterministic cross-platform draws.
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

bool is_wk_regular(const EndoscopicDatum& d, const Weight& p) {
    for (const Weight& beta : d.k.positive_roots())
        if (dot(p, d.g.coroot_covector(beta)) == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("C2 datum 1: long A1xA1 endoscopic group, trivial intersection") {
    EndoscopicDatum d = c2_datum1();
    CHECK(d.k.weyl_order() == 2);
    CHECK(d.h.weyl_order() == 4);
    CHECK(d.kh.weyl_order() == 1);
    CHECK(d.kh.positive_roots().empty());
    CHECK(d.h.is_quadratic());  // {2e1, 2e2} is additively closed
    CHECK(coset_representatives(d.k, d.kh).size() == 2);
}

TEST_CASE("C2 datum 2: Delta(k) inside Delta(h), singleton coset") {
    EndoscopicDatum d = c2_datum2();
    CHECK(d.k.weyl_order() == 2);
    CHECK(d.h.weyl_order() == 4);
    CHECK(!d.h.is_quadratic());  // short A1xA1 is reflection-closed only
    CHECK(d.kh.weyl_order() == 2);
    CHECK(d.kh.positive_roots() == d.k.positive_roots());
    auto reps = coset_representatives(d.k, d.kh);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].is_identity());
}

TEST_CASE("A1 torus datum: everything trivial") {
    EndoscopicDatum d = a1_torus_datum();
    CHECK(d.k.weyl_order() == 1);
    CHECK(d.h.weyl_order() == 1);
    CHECK(d.kh.weyl_order() == 1);
    auto terms = lift_discrete_series(d, {Weight::from_ints({1})});
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].sign == 1);
    CHECK(terms[0].parameter == Weight::from_ints({1}));
}

TEST_CASE("lift_discrete_series on C2 datum 1") {
    EndoscopicDatum d = c2_datum1();
    Weight lam = rational_weight({Rat(3), Rat(1, 2)});
    auto terms = lift_discrete_series(d, {lam});
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].sign == 1);
    CHECK(terms[0].parameter == lam);
    CHECK(terms[1].sign == -1);
    // Second parameter is s_{alpha1} lam.
    Weight reflected = lam - dot(lam, d.g.coroot_covector(d.k.simple_roots()[0])) *
                                 d.k.simple_roots()[0];
    CHECK(terms[1].parameter == reflected);
}

TEST_CASE("lift_discrete_series on C2 datum 2 is a singleton") {
    EndoscopicDatum d = c2_datum2();
    Weight lam = rational_weight({Rat(2), Rat(5, 3)});
    auto terms = lift_discrete_series(d, {lam});
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].sign == 1);
    CHECK(terms[0].parameter == lam);
}

TEST_CASE("singular parameters are rejected naming the pairing") {
    EndoscopicDatum d = c2_datum1();
    // <lam, alpha1^vee> = 0 for lam = c*(omega1+... ): alpha1-coordinate zero.
    Weight lam = rational_weight({Rat(0), Rat(2)});
    CHECK_THROWS_WITH_AS(lift_discrete_series(d, {lam}), doctest::Contains("W_K-singular"),
                         validation_error);
}

TEST_CASE("|lift terms| = |W_K| / |W_{H&K}|") {
    for (EndoscopicDatum d : {c2_datum1(), c2_datum2(), a1_torus_datum()}) {
        Weight lam(d.g.rank());
        for (int i = 0; i < d.g.rank(); ++i) lam[i] = Rat(2 * i + 1, 2);
        if (!is_wk_regular(d, lam)) continue;
        auto terms = lift_discrete_series(d, {lam});
        CHECK(Int(terms.size()) * d.kh.weyl_order() == d.k.weyl_order());
    }
}

TEST_CASE("verify_lift_identity: catalog examples") {
    EndoscopicDatum d1 = c2_datum1();
    LiftIdentityReport r1 = verify_lift_identity(d1, {rational_weight({Rat(1), Rat(1, 3)})});
    CHECK(r1.equal);
    CHECK(r1.lhs_terms == 2);
    CHECK(r1.rhs_terms == 2);

    EndoscopicDatum d2 = c2_datum2();
    LiftIdentityReport r2 = verify_lift_identity(d2, {rational_weight({Rat(2), Rat(7, 2)})});
    CHECK(r2.equal);
    CHECK(r2.lhs_terms == r2.rhs_terms);

    // Singular parameter: both sides vanish.
    LiftIdentityReport r3 = verify_lift_identity(d1, {rational_weight({Rat(0), Rat(1)})});
    CHECK(r3.equal);
    CHECK(r3.lhs_terms == 0);
    CHECK(r3.rhs_terms == 0);
}

TEST_CASE("verify_lift_identity on seeded random regular parameters") {
    std::mt19937_64 rng(7);
    for (EndoscopicDatum d : {c2_datum1(), c2_datum2(), a1_torus_datum()}) {
        int done = 0;
        while (done < 25) {
            Weight p = random_parameter(rng, d.g.rank());
            if (!is_wk_regular(d, p)) continue;
            LiftIdentityReport rep = verify_lift_identity(d, {p});
            CHECK(rep.equal);
            ++done;
        }
    }
}

TEST_CASE("limits case: K-regular, g-singular at exactly one noncompact pairing") {
    std::mt19937_64 rng(19);
    for (EndoscopicDatum d : {c2_datum1(), c2_datum2(), a1_torus_datum()}) {
        // Noncompact positive roots of g relative to k.
        std::vector<Weight> noncompact;
        for (const Weight& alpha : d.g.positive_roots())
            if (!d.k.is_positive_root(alpha)) noncompact.push_back(alpha);
        if (noncompact.empty()) continue;
        int done = 0;
        int guard = 0;
        while (done < 5 && ++guard < 4000) {
            Weight p = random_parameter(rng, d.g.rank());
            const Weight& gamma = noncompact[rng() % noncompact.size()];
            Weight proj = p - (dot(p, d.g.coroot_covector(gamma)) / 2) * gamma;
            if (!is_wk_regular(d, proj) && !d.k.positive_roots().empty()) continue;
            int singular = 0;
            for (const Weight& alpha : d.g.positive_roots())
                if (dot(proj, d.g.coroot_covector(alpha)) == 0) ++singular;
            if (singular != 1) continue;
            LiftIdentityReport rep = verify_lift_identity(d, {proj});
            CHECK(rep.equal);
            ++done;
        }
        CHECK(done == 5);
    }
}

TEST_CASE("finite_dim_lift equals the Dirac index and reconstructs exactly") {
    struct Pair {
        const char* type;
        std::vector<std::vector<long long>> sub;
        std::vector<long long> lam;
    };
    for (const Pair& p : {Pair{"A1", {}, {0}}, Pair{"A2", {{1, 0}}, {0, 0}},
                          Pair{"B2", {{1, 0}, {1, 2}}, {1, 0}}, Pair{"G2", {{0, 1}, {3, 1}}, {0, 1}}}) {
        CAPTURE(p.type);
        RootSystem rs = build_root_system(CartanType::parse(p.type));
        RootSubsystem sub = validate_subsystem(rs, p.sub);
        Weight lam = Weight::from_ints(p.lam);
        VirtualDecomposition lift = finite_dim_lift(rs, sub, lam);

        // Sum of sign * ch E over the subsystem equals ch V_lam * (ch S+ - ch S-).
        FormalCharacter rebuilt = reconstruct(sub, lift);
        FormalCharacter expect = multiply(irreducible_character(rs, lam),
                                          transfer_factor(rs, sub), 1000000);
        CHECK(rebuilt == expect);
    }
    // A1 over the Cartan with lam = 0 is the transfer factor itself.
    RootSystem a1 = build_root_system(CartanType::parse("A1"));
    RootSubsystem torus = validate_subsystem(a1, {});
    VirtualDecomposition lift = finite_dim_lift(a1, torus, Weight(1));
    REQUIRE(lift.components.size() == 2);
    std::map<Weight, long long> got;
    for (const auto& c : lift.components) got[c.highest_weight] = c.coefficient;
    CHECK(got[Weight::from_ints({1})] == 1);
    CHECK(got[Weight::from_ints({-1})] == -1);

    // B2 example carries mixed signs.
    RootSystem b2 = build_root_system(CartanType::parse("B2"));
    RootSubsystem a1a1 = validate_subsystem(b2, {{1, 0}, {1, 2}});
    VirtualDecomposition vb = finite_dim_lift(b2, a1a1, Weight::from_ints({1, 0}));
    bool has_plus = false, has_minus = false;
    for (const auto& c : vb.components) (c.coefficient > 0 ? has_plus : has_minus) = true;
    CHECK(has_plus);
    CHECK(has_minus);
}

TEST_CASE("parameter regularity propagation: lifted parameters pairwise distinct") {
    std::mt19937_64 rng(101);
    EndoscopicDatum d = c2_datum1();
    int done = 0;
    while (done < 20) {
        Weight p = random_parameter(rng, 2);
        if (!is_wk_regular(d, p)) continue;
        auto terms = lift_discrete_series(d, {p});
        std::set<Weight> params;
        for (const auto& t : terms) params.insert(t.parameter);
        CHECK(params.size() == terms.size());
        ++done;
    }
}

TEST_CASE("sign_q is validated and echoed") {
    CHECK_THROWS_AS(build_endoscopic_datum(CartanType::parse("A1"), {}, {}, 2), validation_error);
    EndoscopicDatum d = build_endoscopic_datum(CartanType::parse("C2"), {{1, 0}},
                                               {{0, 1}, {2, 1}}, -1);
    CHECK(d.sign_q == -1);
    LiftIdentityReport rep = verify_lift_identity(d, {rational_weight({Rat(1), Rat(1)})});
    CHECK(rep.sign_q == -1);
    CHECK(rep.equal);
}
