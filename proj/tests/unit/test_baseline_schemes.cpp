#include "coded_caching/caching_scheme.hpp"
#include "coded_caching/errors.hpp"
#include "doctest.h"

using namespace coded_caching;

TEST_CASE("broadcast at M = 0") {
    const auto lib = generate_library(3, 16, 1);

    const auto all = broadcast_delivery_m0(lib, DemandVector{{1, 2, 3}, 3});
    CHECK(all.blocks.size() == 3);
    CHECK(all.total_bits() == 3 * 16);

    const auto one = broadcast_delivery_m0(lib, DemandVector{{1, 1, 1}, 3});
    REQUIRE(one.blocks.size() == 1);
    CHECK(one.total_bits() == 16);
    CHECK(one.blocks[0].label.str() == "file=1");

    const auto two = generate_library(2, 8, 2);
    for (int i = 0; i < 16; ++i) {
        std::vector<int> d(4);
        for (int k = 0; k < 4; ++k) d[k] = ((i >> k) & 1) + 1;
        const auto x = broadcast_delivery_m0(two, DemandVector{d, 2});
        CHECK(x.total_bits() <= 2 * 8);
    }
}

TEST_CASE("broadcast decode") {
    const BroadcastScheme scheme{3, 2};
    const auto lib = generate_library(3, 5, 3);
    const DemandVector d{{3, 1}, 3};
    const auto caches = scheme.place(lib);
    CHECK(caches[0].payload.empty());
    const auto x = scheme.deliver(lib, d);
    CHECK(x.blocks[0].label.str() == "file=1");  // ascending file index
    CHECK(scheme.decode(1, caches[0], x, d, 5) == lib.file(3));
    CHECK(scheme.decode(2, caches[1], x, d, 5) == lib.file(1));
}

TEST_CASE("uncoded scheme") {
    SUBCASE("M = N sends nothing") {
        const auto lib = generate_library(3, 9, 1);
        const auto run = uncoded_scheme(lib, DemandVector{{1, 2, 3}, 3}, Rational{3});
        CHECK(run.signal.blocks.empty());
        for (const auto& c : run.caches) CHECK(c.payload.size() == 27);
    }
    SUBCASE("N = K = 30, M = 10, distinct demands send 20 files") {
        const std::size_t bits = 30;
        const auto lib = generate_library(30, bits, 2);
        std::vector<int> d(30);
        for (int k = 0; k < 30; ++k) d[k] = k + 1;
        const auto run = uncoded_scheme(lib, DemandVector{d, 30}, Rational{10});
        CHECK(run.signal.total_bits() == 20 * bits);
    }
    SUBCASE("N = 2, K = 4, M = 1 sends one file") {
        const auto lib = generate_library(2, 8, 3);
        const auto run = uncoded_scheme(lib, DemandVector{{1, 2, 1, 2}, 2}, Rational{1});
        CHECK(run.signal.total_bits() == 8);
        CHECK(rate_uncoded(2, 4, Rational{1}) * Rational{8} == Rational{8});
    }
    SUBCASE("granularity") {
        const auto lib = generate_library(2, 7, 3);
        CHECK_THROWS_AS((void)uncoded_scheme(lib, DemandVector{{1, 2}, 2}, Rational{1}), GranularityError);
    }
}

TEST_CASE("uncoded decode over all demands") {
    const UncodedScheme scheme{3, 2, Rational{3, 2}};
    CHECK(scheme.granularity() == 2);
    const auto lib = generate_library(3, 10, 4);
    const auto caches = scheme.place(lib);
    for (const auto& c : caches) CHECK(c.payload.size() == 15);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            const DemandVector d{{a, b}, 3};
            const auto x = scheme.deliver(lib, d);
            CHECK(scheme.decode(1, caches[0], x, d, 10) == lib.file(a));
            CHECK(scheme.decode(2, caches[1], x, d, 10) == lib.file(b));
        }
}
