#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liechar/rootsys.hpp"

#include <map>
#include <set>

using namespace liechar;

namespace {

std::set<std::vector<long long>> rc_set(const std::vector<std::vector<long long>>& v) {
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("A1 root system") {
    RootSystem rs = build_root_system(CartanType::parse("A1"));
    CHECK(rs.rank() == 1);
    REQUIRE(rs.positive_roots().size() == 1);
    CHECK(rs.positive_roots()[0] == Weight::from_ints({2}));
    CHECK(rs.rho() == Weight::from_ints({1}));
    // B([m],[m]) = m^2/2 in the long-root-2 normalization.
    CHECK(rs.bilinear(Weight::from_ints({2}), Weight::from_ints({2})) == 2);
    CHECK(rs.bilinear(rs.rho(), rs.rho()) == Rat(1, 2));
}

TEST_CASE("A2 positive roots are the closure of the simple roots") {
    RootSystem rs = build_root_system(CartanType::parse("A2"));
    CHECK(rc_set(rs.positive_roots_rc()) ==
          std::set<std::vector<long long>>{{1, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("G2 positive roots and long roots") {
    RootSystem rs = build_root_system(CartanType::parse("G2"));
    // |Delta+| = (dim g - rank)/2 = (14-2)/2.
    CHECK(rs.positive_roots().size() == 6);
    std::set<std::vector<long long>> longs;
    for (std::size_t i = 0; i < rs.positive_roots().size(); ++i)
        if (rs.bilinear(rs.positive_roots()[i], rs.positive_roots()[i]) == 2)
            longs.insert(rs.positive_roots_rc()[i]);
    CHECK(longs == std::set<std::vector<long long>>{{0, 1}, {3, 1}, {3, 2}});
}

TEST_CASE("classical positive root counts and Weyl orders") {
    struct Row {
        const char* type;
        std::size_t pos;
        long long order;
    };
    for (const Row& row : {Row{"A3", 6, 24}, Row{"B3", 9, 48}, Row{"C3", 9, 48}, Row{"D4", 12, 192},
                           Row{"F4", 24, 1152}, Row{"B2", 4, 8}, Row{"C2", 4, 8},
                           Row{"A1xA1", 2, 4}, Row{"A2xA1", 4, 12}}) {
        RootSystem rs = build_root_system(CartanType::parse(row.type));
        CAPTURE(row.type);
        CHECK(rs.positive_roots().size() == row.pos);
        CHECK(rs.weyl_order() == row.order);
        CHECK(enumerate_weyl(rs).size() == row.pos * 0 + static_cast<std::size_t>(row.order));
    }
}

TEST_CASE("unsupported types are rejected naming the factor") {
    CHECK_THROWS_AS(build_root_system(CartanType::parse("Z9")), usage_error);
    CHECK_THROWS_AS(CartanType::parse("E7"), usage_error);
    CHECK_THROWS_AS(CartanType::parse("B1"), usage_error);
    CHECK_THROWS_AS(CartanType::parse(""), usage_error);
    CHECK_THROWS_WITH_AS(CartanType::parse("A2xD2"), doctest::Contains("D"), usage_error);
    Caps caps;
    caps.max_rank = 3;
    CHECK_THROWS_AS(build_root_system(CartanType::parse("A4"), caps), resource_error);
}

TEST_CASE("Weyl enumeration: A1, A2, G2") {
    RootSystem a1 = build_root_system(CartanType::parse("A1"));
    auto& w1 = enumerate_weyl(a1);
    REQUIRE(w1.size() == 2);
    CHECK(w1[0].length == 0);
    CHECK(w1[1].length == 1);

    RootSystem a2 = build_root_system(CartanType::parse("A2"));
    auto& w2 = enumerate_weyl(a2);
    REQUIRE(w2.size() == 6);
    int plus = 0, minus = 0;
    for (const auto& w : w2) (w.det > 0 ? plus : minus)++;
    CHECK(plus == 3);
    CHECK(minus == 3);

    RootSystem g2 = build_root_system(CartanType::parse("G2"));
    auto& wg = enumerate_weyl(g2);
    CHECK(wg.size() == 12);
    // Dihedral of order 12: the product of the two simple reflections has order 6.
    WeylElement prod = element_from_matrix(
        g2, [&] {
            auto m = wg[1].mat;  // first simple reflection, length 1
            (void)m;
            return m;
        }());
    CHECK(prod.length == 1);
}

TEST_CASE("G2 rotation subgroup has order 6") {
    RootSystem g2 = build_root_system(CartanType::parse("G2"));
    auto& wg = enumerate_weyl(g2);
    // s1*s2 generates the rotation subgroup of the dihedral group.
    const WeylElement *s1 = nullptr, *s2 = nullptr;
    for (const auto& w : wg) {
        if (w.word == std::vector<int>{0}) s1 = &w;
        if (w.word == std::vector<int>{1}) s2 = &w;
    }
    REQUIRE(s1 != nullptr);
    REQUIRE(s2 != nullptr);
    Weight probe = g2.rho();
    Weight x = probe;
    int order = 0;
    do {
        x = s1->apply(s2->apply(x));
        ++order;
    } while (!(x == probe) && order < 100);
    CHECK(order == 6);
}

TEST_CASE("enumeration cap raises a resource error") {
    Caps caps;
    caps.max_weyl_order = 100;
    RootSystem b3 = build_root_system(CartanType::parse("B3"), caps);  // |W| = 48 fits
    CHECK(enumerate_weyl(b3).size() == 48);
    Caps tight;
    tight.max_weyl_order = 10;
    RootSystem a3 = build_root_system(CartanType::parse("A3"), tight);
    CHECK_THROWS_AS(enumerate_weyl(a3), resource_error);
}

TEST_CASE("length equals inversion count and det equals its parity (rank <= 4)") {
    for (const char* t : {"A2", "B2", "G2", "A3", "B3", "A1xA1"}) {
        RootSystem rs = build_root_system(CartanType::parse(t));
        CAPTURE(t);
        for (const WeylElement& w : enumerate_weyl(rs)) {
            CHECK(w.length == inversion_count(rs, w));
            CHECK(w.det == (w.length % 2 == 0 ? 1 : -1));
            CHECK(w.length == static_cast<int>(w.word.size()));
        }
    }
}

TEST_CASE("Weyl matrices permute the root set and rho is regular") {
    RootSystem g2 = build_root_system(CartanType::parse("G2"));
    std::set<Weight> images;
    for (const WeylElement& w : enumerate_weyl(g2)) {
        for (const Weight& alpha : g2.positive_roots()) CHECK(g2.is_root(w.apply(alpha)));
        images.insert(w.apply(g2.rho()));
    }
    CHECK(images.size() == 12);  // trivial stabilizer
}

TEST_CASE("validate_subsystem: examples") {
    RootSystem a2 = build_root_system(CartanType::parse("A2"));
    RootSubsystem s1 = validate_subsystem(a2, {{1, 0}});
    CHECK(s1.positive_roots().size() == 1);
    CHECK(s1.weyl_order() == 2);
    CHECK(s1.is_quadratic());

    RootSystem g2 = build_root_system(CartanType::parse("G2"));
    RootSubsystem longa2 = validate_subsystem(g2, {{0, 1}, {3, 1}});
    CHECK(longa2.positive_roots().size() == 3);
    CHECK(rc_set(longa2.positive_roots_rc()) ==
          std::set<std::vector<long long>>{{0, 1}, {3, 1}, {3, 2}});
    CHECK(longa2.weyl_order() == 6);

    RootSystem b2 = build_root_system(CartanType::parse("B2"));
    RootSubsystem a1a1 = validate_subsystem(b2, {{1, 0}, {1, 2}});
    CHECK(a1a1.positive_roots().size() == 2);
    CHECK(b2.bilinear(a1a1.simple_roots()[0], a1a1.simple_roots()[1]) == 0);
    CHECK(a1a1.weyl_order() == 4);
}

TEST_CASE("validate_subsystem: empty input is the Cartan subalgebra") {
    RootSystem a2 = build_root_system(CartanType::parse("A2"));
    RootSubsystem torus = validate_subsystem(a2, {});
    CHECK(torus.positive_roots().empty());
    CHECK(torus.weyl_order() == 1);
    CHECK(torus.rho_r().is_zero());
    CHECK(torus.is_quadratic());
}

TEST_CASE("validate_subsystem: error paths") {
    RootSystem a2 = build_root_system(CartanType::parse("A2"));
    CHECK_THROWS_AS(validate_subsystem(a2, {{2, 0}}), validation_error);       // not a root
    CHECK_THROWS_AS(validate_subsystem(a2, {{1, 0}, {1, 0}}), validation_error);  // repeated
    // {alpha1, alpha1+alpha2} generates all of A2; the inputs are not its simples.
    CHECK_THROWS_AS(validate_subsystem(a2, {{1, 0}, {1, 1}}), validation_error);
    // Both simple roots have positive mutual pairing only in invalid sets; a
    // root and itself reflected: {alpha1+alpha2, alpha1} pairing is positive.
    CHECK_THROWS_WITH_AS(validate_subsystem(a2, {{1, 1}, {1, 0}}),
                         doctest::Contains("not simple"), validation_error);
    RootSystem c2 = build_root_system(CartanType::parse("C2"));
    // Short A1xA1 in C2 is reflection-closed but not additively closed.
    CHECK_THROWS_AS(validate_subsystem(c2, {{1, 0}, {1, 1}}), validation_error);
    RootSubsystem h = validate_subsystem(c2, {{1, 0}, {1, 1}}, SubsystemKind::reflection);
    CHECK(h.positive_roots().size() == 2);
    CHECK(!h.is_quadratic());
    CHECK(h.weyl_order() == 4);
}

TEST_CASE("subsystem closure is idempotent") {
    RootSystem g2 = build_root_system(CartanType::parse("G2"));
    RootSubsystem sub = validate_subsystem(g2, {{0, 1}, {3, 1}});
    RootSubsystem again = validate_subsystem(g2, sub.simple_roots_rc());
    CHECK(again.positive_roots() == sub.positive_roots());
    CHECK(again.rho_r() == sub.rho_r());
}

TEST_CASE("coset representatives: sizes and factorization bijection") {
    struct Row {
        const char* type;
        std::vector<std::vector<long long>> sub;
        std::size_t expect;
    };
    const std::vector<Row> rows = {
        {"A2", {}, 6},
        {"A2", {{1, 0}}, 3},
        {"G2", {{0, 1}, {3, 1}}, 2},
        {"G2", {{1, 0}, {3, 2}}, 3},
        {"B2", {{1, 0}, {1, 2}}, 2},
    };
    for (const Row& row : rows) {
        CAPTURE(row.type);
        RootSystem rs = build_root_system(CartanType::parse(row.type));
        RootSubsystem sub = validate_subsystem(rs, row.sub);
        std::vector<WeylElement> reps = coset_representatives(rs, sub);
        CHECK(reps.size() == row.expect);
        CHECK(Int(reps.size()) * sub.weyl_order() == rs.weyl_order());

        // (u, tau) -> u*tau is a bijection W_sub x W^1 -> W.
        std::set<std::vector<std::vector<long long>>> products;
        for (const WeylElement& u : enumerate_weyl(sub))
            for (const WeylElement& tau : reps) {
                WeylElement prod = u;
                // multiply matrices directly via application to rho: uniqueness
                // keyed by the image of rho (regular).
                Weight key = u.apply(tau.apply(rs.rho()));
                std::vector<std::vector<long long>> k(1);
                for (std::size_t i = 0; i < key.size(); ++i)
                    k[0].push_back(to_integer(key[i]).convert_to<long long>());
                CHECK(!products.count(k));
                products.insert(k);
                (void)prod;
            }
        CHECK(products.size() == enumerate_weyl(rs).size());
    }
}

TEST_CASE("dominant_conjugate examples") {
    RootSystem a1 = build_root_system(CartanType::parse("A1"));
    auto [d1, w1] = dominant_conjugate(a1, Weight::from_ints({-3}));
    CHECK(d1 == Weight::from_ints({3}));
    CHECK(w1.length == 1);
    CHECK(w1.apply(Weight::from_ints({-3})) == d1);

    RootSystem a2 = build_root_system(CartanType::parse("A2"));
    auto [d2, w2] = dominant_conjugate(a2, Weight::from_ints({1, 1}));
    CHECK(d2 == Weight::from_ints({1, 1}));
    CHECK(w2.is_identity());

    RootSystem g2 = build_root_system(CartanType::parse("G2"));
    for (const WeylElement& w : enumerate_weyl(g2)) {
        auto [dom, u] = dominant_conjugate(g2, w.apply(g2.rho()));
        CHECK(dom == g2.rho());
        // u must be w^{-1}.
        CHECK(u.mat == weyl_inverse(g2, w).mat);
        CHECK(u.length == w.length);
    }
}

TEST_CASE("dominant_conjugate in a subsystem uses the subsystem chamber") {
    RootSystem g2 = build_root_system(CartanType::parse("G2"));
    RootSubsystem sub = validate_subsystem(g2, {{0, 1}, {3, 1}});
    Weight mu = Weight::from_ints({0, -1});
    auto [dom, w] = dominant_conjugate(sub, mu);
    for (std::size_t i = 0; i < sub.simple_roots().size(); ++i)
        CHECK(dot(dom, g2.coroot_covector(sub.simple_roots()[i])) >= 0);
    CHECK(w.apply(mu) == dom);
}

TEST_CASE("W1 strict dominance never meets a zero pairing") {
    // rho of the ambient system is regular, so pairings along W*rho are
    // never zero; coset_representatives asserts this internally.
    RootSystem b2 = build_root_system(CartanType::parse("B2"));
    for (const auto& sub_rc :
         {std::vector<std::vector<long long>>{{1, 0}}, std::vector<std::vector<long long>>{{0, 1}}}) {
        RootSubsystem sub = validate_subsystem(b2, sub_rc);
        CHECK(coset_representatives(b2, sub).size() * 2 == 8);
    }
}
