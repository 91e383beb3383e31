#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coded_caching/caching_scheme.hpp"

namespace coded_caching {

/// Largest demand space the exhaustive verifier will walk.
inline constexpr std::uint64_t kExhaustiveLimit = 100000;

enum class VerifyMode { exhaustive, sampled };

struct VerifyOptions {
    SchemeParameters params;
    std::size_t file_bits = 0;  ///< 0 selects the scheme's granularity
    std::uint64_t seed = 1;
    VerifyMode mode = VerifyMode::exhaustive;
    std::uint64_t samples = 10000;
    SchemeChoice scheme = SchemeChoice::automatic;
    unsigned threads = 0;  ///< 0 = hardware concurrency
    std::optional<FileLibrary> library;  ///< replaces the generated library
};

struct DemandFailure {
    DemandVector demand;
    int user = 0;
    std::string reason;
};

struct VerifyReport {
    SchemeParameters params;
    std::string scheme;
    std::size_t requested_bits = 0;
    std::size_t file_bits = 0;  ///< after padding
    std::uint64_t seed = 0;
    bool exhaustive = true;
    std::uint64_t demands_checked = 0;
    std::uint64_t failures = 0;  ///< failing (demand, user) pairs
    std::optional<DemandFailure> first_failure;
    std::size_t achieved_bits = 0;  ///< worst signal over checked demands
    Rational analytic_rate;         ///< the scheme's worst-case rate
    Rational achievable_rate;       ///< R_C(M)
    Rational analytic_bits;         ///< analytic_rate * file_bits
    Rational padding_overhead;      ///< (file_bits - requested_bits) / requested_bits
    std::size_t max_cache_bits = 0;
    std::size_t cache_budget_bits = 0;  ///< floor(M F)

    [[nodiscard]] bool passed() const noexcept {
        return failures == 0 && max_cache_bits <= cache_budget_bits;
    }
};

/// Demand number `index` in lexicographic order over [N]^K (user 1 most significant).
[[nodiscard]] DemandVector demand_from_index(std::uint64_t index, int files, int users);

/// Places once, then delivers and decodes every checked demand for every user.
/// Throws InvalidParameter when exhaustive mode exceeds kExhaustiveLimit.
[[nodiscard]] VerifyReport run_verify(const VerifyOptions& options);
[[nodiscard]] std::string format_report(const VerifyReport& report);

// ---------------------------------------------------------------------------

struct CurveRow {
    Rational memory;
    Rational coded;
    Rational uncoded;
    Rational cutset;
    std::optional<Rational> exact;
};

/// Rows at M = i N / (grid_points - 1), i = 0..grid_points-1.
[[nodiscard]] std::vector<CurveRow> tradeoff_rows(int files, int users, int grid_points, bool exact_2x2);

/// 12 significant digits.
[[nodiscard]] std::string format_decimal(const Rational& value);

/// Header `M,R_coded,R_uncoded,R_cutset[,R_exact]`, LF line endings.
void write_tradeoff_csv(std::ostream& out, const std::vector<CurveRow>& rows);

// ---------------------------------------------------------------------------

inline constexpr int kGapBound = 12;

struct GapScanReport {
    int max_files = 0;
    int max_users = 0;
    std::uint64_t points = 0;     ///< points with a defined ratio
    std::uint64_t undefined = 0;  ///< points where the cut-set bound is 0
    Rational max_ratio{0};
    int arg_files = 0;
    int arg_users = 0;
    Rational arg_memory;
    Rational min_ratio{0};
    /// Bucket i counts ratios in [i+1, i+2); the last bucket also holds 12.
    std::array<std::uint64_t, kGapBound - 1> histogram{};
    /// First point outside [1, 12], if any.
    std::optional<std::string> violation;
};

/// Scans every (N, K) up to the limits on M = i N / (grid - 1), i < grid - 1.
/// grid_per_pair = 0 uses 4K + 1 points.
[[nodiscard]] GapScanReport gap_scan(int max_files, int max_users, int grid_per_pair = 0);
[[nodiscard]] std::string format_gap_report(const GapScanReport& report);

// ---------------------------------------------------------------------------

inline constexpr std::uint64_t kTraceSplitLimit = 64;

/// Human-readable caches and signal for one demand. Refuses splits into
/// more than kTraceSplitLimit subfiles.
[[nodiscard]] std::string render_trace(const SchemeParameters& params, const DemandVector& demand,
                                       std::size_t file_bits, std::uint64_t seed,
                                       SchemeChoice choice = SchemeChoice::automatic,
                                       const FileLibrary* library = nullptr);

}  // namespace coded_caching
