#include "coded_caching/caching_scheme.hpp"
#include "coded_caching/errors.hpp"
#include "doctest.h"

using namespace coded_caching;

TEST_CASE("a vertex memory selects the pure corner scheme") {
    const auto scheme = make_scheme({3, 3, Rational{2}});
    const auto* coded = dynamic_cast<const CodedScheme*>(scheme.get());
    REQUIRE(coded != nullptr);
    CHECK(coded->t() == 2);
    CHECK(dynamic_cast<const BroadcastScheme*>(make_scheme({3, 3, Rational{0}}).get()) != nullptr);
    CHECK(dynamic_cast<const UncodedScheme*>(make_scheme({3, 3, Rational{3}}).get()) != nullptr);
}

TEST_CASE("two files, two users, M = 1/2 shares (0,2) and (1,1/2)") {
    const auto scheme = make_scheme({2, 2, Rational{1, 2}});
    const auto* shared = dynamic_cast<const MemorySharingScheme*>(scheme.get());
    REQUIRE(shared != nullptr);
    CHECK(shared->alpha() == Rational{1, 2});
    CHECK(shared->worst_case_rate() == Rational{5, 4});
    CHECK(shared->granularity() == 4);

    const std::size_t bits = 8;
    const auto lib = generate_library(2, bits, 1);
    const auto run = memory_sharing_scheme(lib, DemandVector{{1, 2}, 2}, Rational{1, 2});
    CHECK(run.signal.total_bits() == 10);  // 5/4 F
    for (const auto& c : run.caches) CHECK(c.payload.size() == 4);  // M F
    CHECK(run.signal.blocks.front().label.str() == "seg0:file=1");
    CHECK(run.signal.blocks.back().label.str() == "seg1:S={1,2}");
}

TEST_CASE("memory sharing names a feasible length on granularity errors") {
    const auto lib = generate_library(2, 6, 1);
    try {
        (void)memory_sharing_scheme(lib, DemandVector{{1, 2}, 2}, Rational{1, 2});
        FAIL("expected GranularityError");
    } catch (const GranularityError& e) {
        CHECK(e.required_multiple() == 4);
        CHECK(std::string(e.what()).find("F=4") != std::string::npos);
    }
}

TEST_CASE("memory sharing decodes N = K = 3, M = 1/2 for all 27 demands") {
    const auto scheme = make_scheme({3, 3, Rational{1, 2}});
    const std::size_t bits = scheme->granularity() * 2;
    const auto lib = generate_library(3, bits, 5);
    const auto caches = scheme->place(lib);
    for (const auto& c : caches) CHECK(c.payload.size() == bits / 2);
    for (int i = 0; i < 27; ++i) {
        const DemandVector d{{i / 9 + 1, i / 3 % 3 + 1, i % 3 + 1}, 3};
        const auto x = scheme->deliver(lib, d);
        CHECK(Rational{static_cast<std::int64_t>(x.total_bits())} <=
              scheme->worst_case_rate() * Rational{static_cast<std::int64_t>(bits)});
        for (int k = 1; k <= 3; ++k) CHECK(scheme->decode(k, caches[k - 1], x, d, bits) == lib.file(d.of(k)));
    }
}

TEST_CASE("memory sharing rejects vertex memories") {
    const auto env = achievable_envelope(2, 2);
    CHECK_THROWS_AS(MemorySharingScheme(env, Rational{1}), InvalidParameter);
    CHECK_THROWS_AS(MemorySharingScheme(env, Rational{3}), InvalidParameter);
}

TEST_CASE("constructive load equals the envelope rate at every vertex") {
    for (int n = 1; n <= 5; ++n) {
        for (int k = 1; k <= 5; ++k) {
            const auto env = achievable_envelope(n, k);
            for (const auto& v : env.vertices()) {
                const auto scheme = make_vertex_scheme(n, k, v);
                CHECK(scheme->worst_case_rate() == v.point.rate);
                CHECK(scheme->memory() == v.point.memory);
                const std::size_t bits = scheme->granularity() * 3;
                const auto lib = generate_library(n, bits, 17);
                // Worst case is attained at the most-distinct demand.
                std::vector<int> d(k);
                for (int u = 0; u < k; ++u) d[u] = u % n + 1;
                const auto x = scheme->deliver(lib, DemandVector{d, n});
                CHECK(Rational{static_cast<std::int64_t>(x.total_bits())} ==
                      v.point.rate * Rational{static_cast<std::int64_t>(bits)});
            }
        }
    }
}
