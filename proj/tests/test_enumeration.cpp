#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symrel/enumeration.hpp"

#include <algorithm>
#include <set>

using namespace symrel;

TEST_CASE("monomial order matches the table column headers") {
    // q=2, n=2: 1, e1, e2, e1e2
    auto m22 = monomials(2, 2);
    std::vector<ExponentTuple> want22 = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    CHECK(m22 == want22);

    // q=2, n=3: degree-2 block ordered e1e2, e1e3, e2e3
    auto m23 = monomials(2, 3);
    std::vector<ExponentTuple> want23 = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                         {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
    CHECK(m23 == want23);

    auto m31 = monomials(3, 1);
    std::vector<ExponentTuple> want31 = {{0}, {1}, {2}};
    CHECK(m31 == want31);
}

TEST_CASE("monomials are distinct, complete and strictly increasing") {
    for (auto [q, n] : std::vector<std::pair<std::uint32_t, unsigned>>{
             {2, 6}, {3, 4}, {4, 3}, {5, 2}, {9, 2}, {7, 3}}) {
        auto ms = monomials(q, n);
        CHECK(ms.size() == q_pow_n(q, n));
        MonomialOrder less;
        for (std::size_t i = 0; i + 1 < ms.size(); ++i) CHECK(less(ms[i], ms[i + 1]));
        std::set<ExponentTuple> distinct(ms.begin(), ms.end());
        CHECK(distinct.size() == ms.size());
    }
}

TEST_CASE("weakly monotone tuples match the paper row labels") {
    Field f2(2);
    auto w22 = weakly_monotone_tuples(f2, 2);
    REQUIRE(w22.size() == 3);
    auto idx = [](const PointTuple& t) {
        std::vector<int> v;
        for (auto e : t) v.push_back(e.index());
        return v;
    };
    CHECK(idx(w22[0]) == std::vector<int>{0, 0});
    CHECK(idx(w22[1]) == std::vector<int>{0, 1});
    CHECK(idx(w22[2]) == std::vector<int>{1, 1});

    auto w23 = weakly_monotone_tuples(f2, 3);
    REQUIRE(w23.size() == 4);
    CHECK(idx(w23[0]) == std::vector<int>{0, 0, 0});
    CHECK(idx(w23[1]) == std::vector<int>{0, 0, 1});
    CHECK(idx(w23[2]) == std::vector<int>{0, 1, 1});
    CHECK(idx(w23[3]) == std::vector<int>{1, 1, 1});

    Field f3(3);
    auto w31 = weakly_monotone_tuples(f3, 1);
    REQUIRE(w31.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(w31[i][0].index() == i);
}

TEST_CASE("wm_count fixtures") {
    CHECK(wm_count(2, 2) == 3);
    CHECK(wm_count(2, 3) == 4);
    CHECK(wm_count(5, 5) == 126);
    CHECK(wm_count(7, 4) == 210);
    CHECK(wm_count(3, 3) == 10);
    CHECK(wm_count(4, 2) == 10);
}

TEST_CASE("kernel_dim fixtures") {
    CHECK(kernel_dim(2, 3) == 4);
    CHECK(kernel_dim(3, 3) == 17);
    CHECK(kernel_dim(5, 5) == 2999);
    CHECK(kernel_dim(7, 4) == 2191);
    for (std::uint32_t q : {2, 3, 4, 5, 7, 8, 9}) CHECK(kernel_dim(q, 1) == 0);
}

TEST_CASE("overflow is detected, not wrapped") {
    CHECK_THROWS_AS(q_pow_n(81, 50), error);
    CHECK_THROWS_AS(wm_count(1021, 40), error);
    CHECK_THROWS_AS(kernel_dim(2, 200), error);
    CHECK_NOTHROW(wm_count(81, 10));
}

TEST_CASE("counts agree with a brute-force scan") {
    for (auto [p, k, n] : std::vector<std::array<unsigned, 3>>{
             {2, 1, 10}, {3, 1, 6}, {2, 2, 5}, {5, 1, 4}, {3, 2, 3}, {7, 1, 3}}) {
        Field f(p, k);
        std::uint64_t monotone = 0, points = 0;
        for_each_point(f, n, [&](const PointTuple& a) {
            ++points;
            bool mono = true;
            for (std::size_t i = 0; i + 1 < a.size(); ++i)
                if (a[i].index() > a[i + 1].index()) mono = false;
            if (mono) ++monotone;
        });
        CHECK(points == q_pow_n(f.q(), n));
        CHECK(monotone == wm_count(f.q(), n));
        CHECK(monotone + (points - monotone) == q_pow_n(f.q(), n));
        CHECK(weakly_monotone_tuples(f, n).size() == monotone);
    }
}

TEST_CASE("weakly monotone tuples are ascending in index-vector order") {
    Field f9(3, 2);
    auto w = weakly_monotone_tuples(f9, 3);
    CHECK(w.size() == wm_count(9, 3));
    auto key = [](const PointTuple& t) {
        std::vector<elem_index> v;
        for (auto e : t) v.push_back(e.index());
        return v;
    };
    for (std::size_t i = 0; i + 1 < w.size(); ++i) CHECK(key(w[i]) < key(w[i + 1]));
}

TEST_CASE("reduce_exponent") {
    CHECK(reduce_exponent(3, 2) == 1);
    CHECK(reduce_exponent(4, 4) == 1);
    CHECK(reduce_exponent(0, 7) == 0);
    CHECK(reduce_exponent(6, 7) == 6);
    CHECK(reduce_exponent(7, 7) == 1);
    CHECK(reduce_exponent(12, 7) == 6);

    // pow(x, e) = pow(x, reduce_exponent(e, q)) for every x, including 0.
    for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
        Field f(p, k);
        for (std::uint64_t e = 0; e < 40; ++e)
            for (std::uint32_t x = 0; x < f.q(); ++x)
                CHECK(f.pow(f.element(x), e) == f.pow(f.element(x), reduce_exponent(e, f.q())));
    }
}
