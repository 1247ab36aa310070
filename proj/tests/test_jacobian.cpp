#include "doctest.h"
#include "torcur/builtins.hpp"
#include "torcur/integrate.hpp"
#include "torcur/rng.hpp"

using namespace torcur;

namespace {

LocalizationEngine engine_for(const Fan& fan, int g, const std::vector<long long>& dfree) {
    return LocalizationEngine(fan, derive_degree_data(fan, relation_matrix(fan), g, dfree));
}

}  // namespace

TEST_CASE("theta images under the embedding") {
    SUBCASE("line fan: the distinguished theta maps to the free one") {
        JacobianEmbedding emb(relation_matrix(fan_line()), 1, 1);
        CHECK(emb.theta_image(1) == ExteriorElement::theta(1, 1, 0));
    }
    SUBCASE("blowup fan: cross terms with the hand-checked signs") {
        JacobianEmbedding emb(relation_matrix(fan_blowup_plane()), 2, 1);
        // column nu=2 of the relation matrix is (-1, 1); bits are
        // a^1 = 0, b^1 = 1, a^2 = 2, b^2 = 3
        ExteriorElement expected(1, 2);
        expected.add_term(0b0011, Rat(1));   // theta_1
        expected.add_term(0b1100, Rat(1));   // theta_2
        expected.add_term(0b1001, Rat(-1));  // -a^1 b^2
        expected.add_term(0b0110, Rat(1));   // -a^2 b^1 reordered
        CHECK(emb.theta_image(3) == expected);
    }
    SUBCASE("the unit pulls back to the unit") {
        JacobianEmbedding emb(relation_matrix(fan_blowup_plane()), 2, 2);
        CHECK(emb.pullback(ThetaPoly::constant(4, 2, Rat(7))) ==
              ExteriorElement::constant(2, 2, Rat(7)));
    }
}

TEST_CASE("integration of the exterior model") {
    SUBCASE("theta squared at genus two integrates to two") {
        ExteriorElement theta = ExteriorElement::theta(2, 1, 0);
        CHECK((theta * theta).integral() == Rat(2));
    }
    SUBCASE("product of top classes across two factors") {
        ExteriorElement t1 = ExteriorElement::theta(1, 2, 0);
        ExteriorElement t2 = ExteriorElement::theta(1, 2, 1);
        CHECK((t1 * t2).integral() == Rat(1));
    }
    SUBCASE("squared image of the blowup cross-term class vanishes") {
        JacobianEmbedding emb(relation_matrix(fan_blowup_plane()), 2, 1);
        ExteriorElement image = emb.theta_image(3);
        CHECK((image * image).integral().is_zero());
        CHECK((image * image).is_zero());  // forced: the source class squares to zero
    }
    SUBCASE("lower-degree elements integrate to zero") {
        CHECK(ExteriorElement::theta(2, 1, 0).integral().is_zero());
        CHECK(ExteriorElement::constant(1, 1, Rat(5)).integral().is_zero());
    }
    SUBCASE("genus zero: integration is evaluation of the constant") {
        CHECK(ExteriorElement::constant(0, 2, Rat(5)).integral() == Rat(5));
    }
}

TEST_CASE("pullback is a ring map and preserves nilpotency") {
    Fan fan = fan_blowup_plane();
    auto rel = relation_matrix(fan);
    Rng rng(77);
    for (int g : {1, 2}) {
        JacobianEmbedding emb(rel, fan.n, g);
        for (int trial = 0; trial < 5; ++trial) {
            ThetaPoly p(fan.r, g), q(fan.r, g);
            for (int i = 0; i < 3; ++i) {
                std::vector<int> e1(fan.r), e2(fan.r);
                for (int j = 0; j < fan.r; ++j) {
                    e1[j] = static_cast<int>(rng.below(g + 1));
                    e2[j] = static_cast<int>(rng.below(g + 1));
                }
                p.add_term(e1, Rat(rng.below(9) - 4));
                q.add_term(e2, Rat(rng.below(9) - 4));
            }
            CHECK(emb.pullback(p * q) == emb.pullback(p) * emb.pullback(q));
        }
        for (int nu = 0; nu < fan.n; ++nu) {
            ExteriorElement power = ExteriorElement::constant(g, fan.l, Rat(1));
            for (int i = 0; i <= g; ++i) power = power * emb.theta_image(fan.l + nu);
            CHECK(power.is_zero());
        }
    }
}

TEST_CASE("integration over the compactified morphism space") {
    SUBCASE("genus zero line fan: a point class on projective three-space") {
        LocalizationEngine engine = engine_for(fan_line(), 0, {1});
        CHECK(integrate_morphism_space(engine, {3, 0}).value == Rat(1));
    }
    SUBCASE("genus one line fan") {
        LocalizationEngine engine = engine_for(fan_line(), 1, {2});
        CHECK(integrate_morphism_space(engine, {2, 2}).value == Rat(2));
    }
    SUBCASE("genus two line fan") {
        LocalizationEngine engine = engine_for(fan_line(), 2, {4});
        CHECK(integrate_morphism_space(engine, {4, 3}).value == Rat(4));
    }
    SUBCASE("degree mismatch is rejected") {
        LocalizationEngine engine = engine_for(fan_line(), 1, {2});
        CHECK_THROWS_AS(integrate_morphism_space(engine, {2, 1}), Error);
    }
}

TEST_CASE("split invariance across linearly equal classes") {
    LocalizationEngine engine = engine_for(fan_line(), 1, {2});
    const long long top = engine.degree_data().dim_V;
    Rat expected = integrate_morphism_space(engine, {top, 0}).value;
    CHECK(expected == Rat(2));
    for (long long k = 0; k <= top; ++k)
        CHECK(integrate_morphism_space(engine, {top - k, k}).value == expected);
}

TEST_CASE("projective family through the full pipeline") {
    struct Case {
        int n, g;
        long long d, expected;
    };
    for (const auto& tc : std::vector<Case>{{1, 1, 2, 2}, {2, 1, 2, 3}, {3, 1, 2, 4}, {2, 2, 4, 9}}) {
        Fan fan = fan_projective_space(tc.n);
        LocalizationEngine engine = engine_for(fan, tc.g, {tc.d});
        std::vector<long long> m(fan.r, 0);
        m[0] = engine.degree_data().dim_V;
        CHECK(integrate_morphism_space(engine, m).value == Rat(tc.expected));
    }
}

TEST_CASE("product fan against the product-geometry oracle") {
    // For the product of two lines the compactified space is a product of
    // two projectivized rank-2N bundles over one Jacobian each, with total
    // Chern class exp(-2 theta); the integral of a top product is the
    // product of one Segre value per factor: (2 theta)^k / k! integrated.
    Fan fan = fan_product_lines();
    SUBCASE("genus zero: a product of projective spaces") {
        LocalizationEngine engine = engine_for(fan, 0, {2, 3});  // P^5 x P^7
        CHECK(integrate_morphism_space(engine, {5, 7, 0, 0}).value == Rat(1));
        CHECK(integrate_morphism_space(engine, {4, 6, 1, 1}).value == Rat(1));
        CHECK(integrate_morphism_space(engine, {0, 0, 5, 7}).value == Rat(1));
        CHECK(integrate_morphism_space(engine, {6, 6, 0, 0}).value == Rat(0));
    }
    SUBCASE("genus one: nonzero only when both Segre indices are one") {
        LocalizationEngine engine = engine_for(fan, 1, {2, 3});
        CHECK(integrate_morphism_space(engine, {4, 6, 0, 0}).value == Rat(4));
        CHECK(integrate_morphism_space(engine, {2, 6, 2, 0}).value == Rat(4));
        CHECK(integrate_morphism_space(engine, {3, 3, 1, 3}).value == Rat(4));
        CHECK(integrate_morphism_space(engine, {5, 5, 0, 0}).value == Rat(0));
        CHECK(integrate_morphism_space(engine, {3, 7, 0, 0}).value == Rat(0));
    }
    SUBCASE("genus two: nonzero only when both Segre indices are two") {
        LocalizationEngine engine = engine_for(fan, 2, {5, 6});
        CHECK(integrate_morphism_space(engine, {9, 11, 0, 0}).value == Rat(16));
        CHECK(integrate_morphism_space(engine, {5, 11, 4, 0}).value == Rat(16));
        CHECK(integrate_morphism_space(engine, {10, 10, 0, 0}).value == Rat(0));
        CHECK(integrate_morphism_space(engine, {11, 9, 0, 0}).value == Rat(0));
    }
}

TEST_CASE("product of three lines behaves like a triple product") {
    Fan fan = make_fan({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                       {{4, 5, 6}, {1, 5, 6}, {4, 2, 6}, {4, 5, 3}, {1, 2, 6}, {1, 5, 3}, {4, 2, 3}, {1, 2, 3}},
                       1);
    CHECK(fan.l == 3);
    DegreeData dd = derive_degree_data(fan, relation_matrix(fan), 1, {2, 2, 3});
    CHECK(euler_char_fibre(fan, dd) == Int(96));  // (2+2)(2+2)(3+3)
    LocalizationEngine engine(fan, dd);
    CHECK(integrate_morphism_space(engine, {4, 4, 6, 0, 0, 0}).value == Rat(8));
    CHECK(integrate_morphism_space(engine, {2, 4, 3, 2, 0, 3}).value == Rat(8));
    CHECK(integrate_morphism_space(engine, {5, 3, 6, 0, 0, 0}).value == Rat(0));
}

TEST_CASE("oversized exterior algebras are rejected") {
    CHECK_THROWS_AS(ExteriorElement(8, 4), Error);  // 64 generators
}
