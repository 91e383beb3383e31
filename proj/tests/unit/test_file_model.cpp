#include <random>
#include <sstream>

#include "coded_caching/errors.hpp"
#include "coded_caching/file_model.hpp"
#include "doctest.h"

using namespace coded_caching;

TEST_CASE("generate_library is deterministic and shaped") {
    CHECK(generate_library(2, 8, 42) == generate_library(2, 8, 42));
    CHECK_FALSE(generate_library(2, 64, 42) == generate_library(2, 64, 43));

    const auto lib = generate_library(3, 16, 5);
    CHECK(lib.file_count() == 3);
    CHECK(lib.file_bits() == 16);
    for (const auto& f : lib.files()) CHECK(f.size() == 16);

    const auto big = generate_library(2, 1024, 9);
    CHECK_FALSE(big.file(1) == big.file(2));
    CHECK_THROWS_AS((void)big.file(3), InvalidParameter);
}

TEST_CASE("pad_for_split rounds up to a multiple of parts") {
    const auto lib = generate_library(2, 10, 1);
    CHECK(pad_for_split(lib, 5).file_bits() == 10);

    const auto padded = pad_for_split(lib, 3);
    CHECK(padded.file_bits() == 12);
    CHECK(padded.original_bits() == 10);
    for (int n = 1; n <= 2; ++n) {
        CHECK_FALSE(padded.file(n).bit(10));
        CHECK_FALSE(padded.file(n).bit(11));
        CHECK(padded.file(n).slice(0, 10) == lib.file(n));
    }

    CHECK(pad_for_split(generate_library(1, 1, 3), binomial(4, 2)).file_bits() == 6);
}

TEST_CASE("split_file labels and sizes") {
    const auto lib = generate_library(3, 12, 11);
    const auto parts = split_file(lib, 1, 2, 3);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].subset == SubsetIndex{{1, 2}});
    CHECK(parts[1].subset == SubsetIndex{{1, 3}});
    CHECK(parts[2].subset == SubsetIndex{{2, 3}});
    for (const auto& p : parts) CHECK(p.bits.size() == 4);
    CHECK(reassemble(parts) == lib.file(1));
    CHECK(parts[1].bits == lib.file(1).slice(4, 4));
    CHECK(subfile(lib, {1, SubsetIndex{{1, 3}}}, 3) == parts[1].bits);

    const auto whole = split_file(lib, 2, 0, 3);
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].bits == lib.file(2));

    const auto lib24 = generate_library(1, 24, 2);
    const auto six = split_file(lib24, 1, 2, 4);
    CHECK(six.size() == 6);
    CHECK(six[0].bits.size() == 4);
    CHECK(reassemble(six) == lib24.file(1));
}

TEST_CASE("split_file reports the required granularity") {
    const auto lib = generate_library(1, 10, 2);
    try {
        (void)split_file(lib, 1, 2, 4);
        FAIL("expected GranularityError");
    } catch (const GranularityError& e) {
        CHECK(e.required_multiple() == 6);
    }
}

TEST_CASE("split then reassemble is the identity for K <= 8") {
    std::mt19937_64 rng(3);
    for (int users = 1; users <= 8; ++users) {
        for (int t = 0; t <= users; ++t) {
            const std::size_t bits = binomial(users, t) * (1 + rng() % 3);
            const auto lib = generate_library(2, bits, rng());
            for (int n = 1; n <= 2; ++n) {
                const auto parts = split_file(lib, n, t, users);
                std::size_t total = 0;
                for (const auto& p : parts) total += p.bits.size();
                CHECK(total == bits);
                CHECK(reassemble(parts) == lib.file(n));
            }
        }
    }
}

TEST_CASE("CCF1 round trip and header layout") {
    const auto lib = generate_library(3, 20, 8);
    std::stringstream buf;
    write_library(lib, buf);
    const std::string raw = buf.str();
    REQUIRE(raw.size() == 4 + 8 + 8 + 3 * 3);
    CHECK(raw.substr(0, 4) == "CCF1");
    CHECK(static_cast<unsigned char>(raw[4]) == 3);
    CHECK(static_cast<unsigned char>(raw[12]) == 20);
    CHECK(read_library(buf) == lib);

    std::stringstream bad("XXXX");
    CHECK_THROWS_AS((void)read_library(bad), InvalidParameter);
    std::stringstream truncated(raw.substr(0, raw.size() - 1));
    CHECK_THROWS_AS((void)read_library(truncated), InvalidParameter);
}
