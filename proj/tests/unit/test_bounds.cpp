#include "coded_caching/bounds.hpp"
#include "coded_caching/errors.hpp"
#include "doctest.h"

using namespace coded_caching;

TEST_CASE("rate_coded_corner values") {
    CHECK(rate_coded_corner(3, 3, 1) == Rational{1});
    CHECK(rate_coded_corner(3, 3, 2) == Rational{1, 3});
    CHECK(rate_coded_corner(2, 2, 1) == Rational{1, 2});
    CHECK(rate_coded_corner(4, 6, 0) == Rational{4});
    CHECK(rate_coded_corner(4, 6, 6) == Rational{0});
}

TEST_CASE("achievable envelope vertices") {
    const auto env = achievable_envelope(2, 2);
    const std::vector<RatePoint> expected = {
        {Rational{0}, Rational{2}}, {Rational{1}, Rational{1, 2}}, {Rational{2}, Rational{0}}};
    CHECK(env.curve().vertices() == expected);
    CHECK(env.vertices()[0].scheme == VertexScheme::broadcast);
    CHECK(env.vertices()[1].scheme == VertexScheme::coded);
    CHECK(env.vertices()[2].scheme == VertexScheme::uncoded);

    CHECK(achievable_rate(30, 30, Rational{30}) == Rational{0});
    CHECK(achievable_rate(30, 30, Rational{10}) == Rational{20, 11});
    CHECK(achievable_rate(2, 2, Rational{1, 2}) == Rational{5, 4});
}

TEST_CASE("envelope is convex, nonincreasing and below the uncoded rate") {
    for (int n = 1; n <= 16; ++n) {
        for (int k = 1; k <= 16; ++k) {
            const auto env = achievable_envelope(n, k);
            const auto& v = env.curve().vertices();
            for (std::size_t i = 2; i < v.size(); ++i) {
                const Rational s1 = (v[i - 1].rate - v[i - 2].rate) / (v[i - 1].memory - v[i - 2].memory);
                const Rational s2 = (v[i].rate - v[i - 1].rate) / (v[i].memory - v[i - 1].memory);
                CHECK(s1 < s2);
            }
            Rational prev = env.evaluate(Rational{0});
            for (int i = 0; i <= 4 * k; ++i) {
                const Rational m{std::int64_t{i} * n, 4 * k};
                const Rational r = env.evaluate(m);
                CHECK(r <= prev);
                CHECK(r <= rate_uncoded(n, k, m));
                CHECK(cutset_bound(n, k, m) <= r);
                prev = r;
            }
        }
    }
}

TEST_CASE("rate_uncoded values") {
    CHECK(rate_uncoded(30, 30, Rational{10}) == Rational{20});
    CHECK(rate_uncoded(5, 3, Rational{5}) == Rational{0});
    CHECK(rate_uncoded(2, 4, Rational{1}) == Rational{1});
    CHECK_THROWS_AS((void)rate_uncoded(2, 4, Rational{3}), InvalidParameter);
}

TEST_CASE("cutset_bound values") {
    CHECK(cutset_bound(2, 2, Rational{1}) == Rational{1, 2});
    CHECK(cutset_bound(3, 3, Rational{0}) == Rational{3});
    CHECK(cutset_bound(4, 2, Rational{2}) == Rational{1, 2});
    CHECK(cutset_bound(3, 3, Rational{3}) == Rational{0});
}

TEST_CASE("cutset_bound is nonincreasing in M") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= 12; ++k)
            for (int i = 1; i <= 4 * k; ++i)
                CHECK(cutset_bound(n, k, Rational{std::int64_t{i} * n, 4 * k}) <=
                      cutset_bound(n, k, Rational{std::int64_t{i - 1} * n, 4 * k}));
}

TEST_CASE("exact 2x2 tradeoff") {
    CHECK(exact_tradeoff_2x2(Rational{1, 2}) == Rational{1});
    CHECK(exact_tradeoff_2x2(Rational{1}) == Rational{1, 2});
    CHECK(exact_tradeoff_2x2(Rational{3, 4}) == Rational{3, 4});
    CHECK(exact_tradeoff_2x2(Rational{2}) == Rational{0});
}

TEST_CASE("gap_ratio") {
    CHECK(gap_ratio(2, 2, Rational{1}) == Rational{1});
    CHECK(gap_ratio(5, 3, Rational{0}) == Rational{1});
    CHECK_FALSE(gap_ratio(4, 4, Rational{4}).has_value());
    const auto r = gap_ratio(30, 30, Rational{10});
    REQUIRE(r.has_value());
    CHECK(*r == Rational{30, 11});
    CHECK(*r <= Rational{12});
}

TEST_CASE("lower_convex_hull drops interior and collinear points") {
    const std::vector<RatePoint> points = {{Rational{0}, Rational{2}},
                                           {Rational{1}, Rational{1}},
                                           {Rational{2}, Rational{0}},
                                           {Rational{1, 2}, Rational{2}}};
    const auto hull = lower_convex_hull(points);
    REQUIRE(hull.vertices().size() == 2);
    CHECK(hull.evaluate(Rational{1, 2}) == Rational{3, 2});
    CHECK_THROWS_AS((void)hull.evaluate(Rational{3}), InvalidParameter);
}
