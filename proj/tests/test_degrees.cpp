#include "doctest.h"
#include "torcur/builtins.hpp"
#include "torcur/degrees.hpp"

using namespace torcur;

namespace {

DegreeData derive(const Fan& fan, int g, const std::vector<long long>& dfree) {
    return derive_degree_data(fan, relation_matrix(fan), g, dfree);
}

}  // namespace

TEST_CASE("line fan degree data at genus one") {
    Fan fan = fan_line();
    DegreeData dd = derive(fan, 1, {2});
    CHECK(dd.d == std::vector<long long>{2, 2});
    CHECK(dd.N == std::vector<long long>{2, 2});
    CHECK(dd.dim_V == 4);
    CHECK(dd.dim_W == 5);
    CHECK(dd.dim_mor == 4);
}

TEST_CASE("blowup fan degree completion") {
    Fan fan = fan_blowup_plane();
    DegreeData dd = derive(fan, 1, {4, 8});
    CHECK(dd.d == std::vector<long long>{4, 8, 4, 4});
    CHECK(dd.N == std::vector<long long>{4, 8, 4, 4});
    CHECK(dd.dim_V == 20);
}

TEST_CASE("degree bound violation names the ray") {
    Fan fan = fan_blowup_plane();
    // d_4 = -4 + 4 = 0 <= 2g-1 = 1
    CHECK_THROWS_WITH_AS(derive(fan, 1, {4, 4}),
                         "degrees: degree bound violated: d = 0 <= 2g-1 at ray 4", Error);
}

TEST_CASE("genus zero admits degree zero rays") {
    Fan fan = fan_line();
    DegreeData dd = derive(fan, 0, {0});
    CHECK(dd.N == std::vector<long long>{1, 1});
    CHECK(dd.dim_V == 1);
}

TEST_CASE("wrong number of free degrees is rejected") {
    Fan fan = fan_blowup_plane();
    CHECK_THROWS_AS(derive(fan, 1, {4, 8, 4, 4}), Error);  // all four: rejected
    CHECK_THROWS_AS(derive(fan, 1, {4}), Error);
}

TEST_CASE("fibre Euler characteristic on the worked examples") {
    {
        Fan fan = fan_line();
        DegreeData dd = derive(fan, 0, {1});
        CHECK(euler_char_fibre(fan, dd) == Int(4));
    }
    {
        Fan fan = fan_blowup_plane();
        DegreeData dd = derive(fan, 0, {1, 3});
        CHECK(dd.d == std::vector<long long>{1, 3, 1, 2});
        CHECK(dd.N == std::vector<long long>{2, 4, 2, 3});
        CHECK(euler_char_fibre(fan, dd) == Int(28));
    }
}

TEST_CASE("line fan Euler characteristic is 2(d-g+1)") {
    Fan fan = fan_line();
    for (int g : {0, 1, 2, 3}) {
        for (long long d = 2 * g + 1; d <= 2 * g + 5; ++d) {
            DegreeData dd = derive(fan, g, {d});
            CHECK(euler_char_fibre(fan, dd) == Int(2 * (d - g + 1)));
        }
    }
}

TEST_CASE("dimension identities hold across a parameter grid") {
    for (int g : {0, 1, 2}) {
        for (long long d1 = 2 * g; d1 <= 2 * g + 3; ++d1) {
            Fan fan = fan_product_lines();
            DegreeData dd = derive(fan, g, {d1 + 1, d1 + 2});
            CHECK(dd.dim_V == dd.dim_mor);
            CHECK(dd.dim_Y == dd.dim_W - fan.r * g);
        }
    }
}
