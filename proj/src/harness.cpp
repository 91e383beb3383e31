#include "coded_caching/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <limits>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "coded_caching/errors.hpp"

namespace coded_caching {

namespace {

// N^K, saturating just above `cap`.
std::uint64_t demand_space(int files, int users, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (int k = 0; k < users; ++k) {
        total *= static_cast<std::uint64_t>(files);
        if (total > cap) return cap + 1;
    }
    return total;
}

std::vector<DemandVector> sampled_demands(int files, int users, std::uint64_t count, std::uint64_t seed) {
    std::vector<DemandVector> out;
    out.emplace_back(std::vector<int>(users, 1), files);
    if (files >= users) {
        std::vector<int> distinct(users);
        for (int k = 0; k < users; ++k) distinct[k] = k + 1;
        if (users > 1) out.emplace_back(std::move(distinct), files);
    }
    std::mt19937_64 engine(seed ^ 0x9e3779b97f4a7c15ULL);
    while (out.size() < count) {
        std::vector<int> d(users);
        for (auto& x : d) x = static_cast<int>(engine() % static_cast<std::uint64_t>(files)) + 1;
        out.emplace_back(std::move(d), files);
    }
    if (out.size() > count) out.erase(out.begin() + static_cast<std::ptrdiff_t>(std::max<std::uint64_t>(count, 1)), out.end());
    return out;
}

struct WorkerStats {
    std::uint64_t failures = 0;
    std::uint64_t first_position = std::numeric_limits<std::uint64_t>::max();
    std::optional<DemandFailure> first_failure;
    std::size_t max_bits = 0;

    void fail(std::uint64_t position, const DemandVector& d, int user, std::string reason) {
        ++failures;
        if (position < first_position) {
            first_position = position;
            first_failure = DemandFailure{d, user, std::move(reason)};
        }
    }
};

}  // namespace

DemandVector demand_from_index(std::uint64_t index, int files, int users) {
    std::vector<int> d(users);
    for (int k = users - 1; k >= 0; --k) {
        d[k] = static_cast<int>(index % static_cast<std::uint64_t>(files)) + 1;
        index /= static_cast<std::uint64_t>(files);
    }
    return DemandVector{std::move(d), files};
}

VerifyReport run_verify(const VerifyOptions& options) {
    const auto scheme = make_scheme(options.params, options.scheme);
    const int files = options.params.files;
    const int users = options.params.users;

    FileLibrary base = [&] {
        if (options.library) {
            if (options.library->file_count() != files)
                throw InvalidParameter("library has " + std::to_string(options.library->file_count()) +
                                       " files, expected " + std::to_string(files));
            return *options.library;
        }
        const std::size_t bits = options.file_bits == 0 ? scheme->granularity() : options.file_bits;
        return generate_library(files, bits, options.seed);
    }();
    const FileLibrary library = pad_for_split(base, scheme->granularity());

    VerifyReport report;
    report.params = options.params;
    report.scheme = scheme->name();
    report.requested_bits = base.file_bits();
    report.file_bits = library.file_bits();
    report.seed = options.seed;
    report.exhaustive = options.mode == VerifyMode::exhaustive;
    const auto file_bits = Rational{static_cast<std::int64_t>(report.file_bits)};
    report.analytic_rate = scheme->worst_case_rate();
    report.achievable_rate = achievable_rate(files, users, options.params.memory);
    report.analytic_bits = report.analytic_rate * file_bits;
    report.padding_overhead =
        Rational{static_cast<std::int64_t>(report.file_bits - report.requested_bits),
                 static_cast<std::int64_t>(report.requested_bits)};
    report.cache_budget_bits = static_cast<std::size_t>((options.params.memory * file_bits).floor());

    const auto caches = scheme->place(library);
    for (const auto& c : caches) report.max_cache_bits = std::max(report.max_cache_bits, c.payload.size());

    std::vector<DemandVector> samples;
    std::uint64_t total = 0;
    if (report.exhaustive) {
        total = demand_space(files, users, kExhaustiveLimit);
        if (total > kExhaustiveLimit)
            throw InvalidParameter("N^K exceeds " + std::to_string(kExhaustiveLimit) +
                                   " demand vectors; use sampled mode (--samples)");
    } else {
        samples = sampled_demands(files, users, options.samples, options.seed);
        total = samples.size();
    }

    auto check = [&](std::uint64_t position, WorkerStats& stats) {
        const DemandVector demand =
            report.exhaustive ? demand_from_index(position, files, users) : samples[position];
        DeliverySignal signal;
        try {
            signal = scheme->deliver(library, demand);
        } catch (const std::exception& e) {
            stats.fail(position, demand, 0, std::string("delivery: ") + e.what());
            return;
        }
        stats.max_bits = std::max(stats.max_bits, signal.total_bits());
        for (int k = 1; k <= users; ++k) {
            try {
                const BitBuffer estimate = scheme->decode(k, caches[k - 1], signal, demand, library.file_bits());
                if (!(estimate == library.file(demand.of(k))))
                    stats.fail(position, demand, k, "decoded file differs");
            } catch (const std::exception& e) {
                stats.fail(position, demand, k, e.what());
            }
        }
    };

    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total / 64, 1)));
    std::vector<WorkerStats> stats(threads);
    std::atomic<std::uint64_t> next{0};
    constexpr std::uint64_t chunk = 64;
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (std::uint64_t begin = next.fetch_add(chunk); begin < total; begin = next.fetch_add(chunk))
                    for (std::uint64_t i = begin; i < std::min(total, begin + chunk); ++i) check(i, stats[w]);
            });
    }

    std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
    for (auto& s : stats) {
        report.failures += s.failures;
        report.achieved_bits = std::max(report.achieved_bits, s.max_bits);
        if (s.first_position < first) {
            first = s.first_position;
            report.first_failure = s.first_failure;
        }
    }
    report.demands_checked = total;
    return report;
}

std::string format_report(const VerifyReport& r) {
    std::ostringstream out;
    out << "scheme: " << r.scheme << "\n"
        << "params: N=" << r.params.files << " K=" << r.params.users << " M=" << r.params.memory.str()
        << " F=" << r.file_bits << " seed=" << r.seed << "\n"
        << "padding: requested F=" << r.requested_bits << ", padded F=" << r.file_bits
        << ", overhead " << r.padding_overhead.str() << "\n"
        << "demands checked: " << r.demands_checked << (r.exhaustive ? " (exhaustive)" : " (sampled)") << "\n"
        << "failures: " << r.failures << "\n";
    if (r.first_failure)
        out << "first failure: d=" << r.first_failure->demand.str() << " user=" << r.first_failure->user << " ("
            << r.first_failure->reason << ")\n";
    out << "worst-case signal bits: " << r.achieved_bits << "\n"
        << "analytic bits: " << r.analytic_bits.str() << " (rate " << r.analytic_rate.str() << ")\n"
        << "R_C(M): " << r.achievable_rate.str() << "\n"
        << "cache bits: max " << r.max_cache_bits << ", budget " << r.cache_budget_bits << "\n"
        << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------

std::vector<CurveRow> tradeoff_rows(int files, int users, int grid_points, bool exact_2x2) {
    if (grid_points < 2) throw InvalidParameter("grid needs at least 2 points");
    if (exact_2x2 && (files != 2 || users != 2))
        throw InvalidParameter("the exact tradeoff column is only defined for N = K = 2");
    const auto envelope = achievable_envelope(files, users);
    std::vector<CurveRow> rows;
    rows.reserve(grid_points);
    for (int i = 0; i < grid_points; ++i) {
        const Rational m{std::int64_t{i} * files, grid_points - 1};
        CurveRow row{m, envelope.evaluate(m), rate_uncoded(files, users, m), cutset_bound(files, users, m),
                     std::nullopt};
        if (exact_2x2) row.exact = exact_tradeoff_2x2(m);
        rows.push_back(row);
    }
    return rows;
}

std::string format_decimal(const Rational& value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value.to_double());
    return buf;
}

void write_tradeoff_csv(std::ostream& out, const std::vector<CurveRow>& rows) {
    const bool exact = !rows.empty() && rows.front().exact.has_value();
    out << "M,R_coded,R_uncoded,R_cutset" << (exact ? ",R_exact" : "") << "\n";
    for (const auto& r : rows) {
        out << format_decimal(r.memory) << ',' << format_decimal(r.coded) << ',' << format_decimal(r.uncoded)
            << ',' << format_decimal(r.cutset);
        if (exact) out << ',' << format_decimal(*r.exact);
        out << "\n";
    }
}

// ---------------------------------------------------------------------------

GapScanReport gap_scan(int max_files, int max_users, int grid_per_pair) {
    if (max_files < 1 || max_users < 1 || max_files > 64 || max_users > 64)
        throw InvalidParameter("gap scan limits must lie in 1..64");
    if (grid_per_pair != 0 && grid_per_pair < 2) throw InvalidParameter("grid needs at least 2 points");

    GapScanReport report;
    report.max_files = max_files;
    report.max_users = max_users;
    bool first = true;
    for (int n = 1; n <= max_files; ++n) {
        for (int k = 1; k <= max_users; ++k) {
            const auto envelope = achievable_envelope(n, k);
            const int grid = grid_per_pair == 0 ? 4 * k + 1 : grid_per_pair;
            for (int i = 0; i < grid - 1; ++i) {
                const Rational m{std::int64_t{i} * n, grid - 1};
                const auto ratio = gap_ratio(envelope, m);
                if (!ratio) {
                    ++report.undefined;
                    continue;
                }
                ++report.points;
                if (first || *ratio > report.max_ratio) {
                    report.max_ratio = *ratio;
                    report.arg_files = n;
                    report.arg_users = k;
                    report.arg_memory = m;
                }
                if (first || *ratio < report.min_ratio) report.min_ratio = *ratio;
                first = false;
                if ((*ratio < Rational{1} || *ratio > Rational{kGapBound}) && !report.violation) {
                    report.violation = "ratio " + ratio->str() + " outside [1, 12] at N=" + std::to_string(n) +
                                       " K=" + std::to_string(k) + " M=" + m.str();
                }
                const auto bucket = std::clamp<std::int64_t>(ratio->floor() - 1, 0, kGapBound - 2);
                ++report.histogram[bucket];
            }
        }
    }
    return report;
}

std::string format_gap_report(const GapScanReport& r) {
    std::ostringstream out;
    out << "gap scan: N<=" << r.max_files << " K<=" << r.max_users << "\n"
        << "points: " << r.points << " (undefined: " << r.undefined << ")\n"
        << "max R_C/cutset: " << r.max_ratio.str() << " ~ " << format_decimal(r.max_ratio) << " at N="
        << r.arg_files << " K=" << r.arg_users << " M=" << r.arg_memory.str() << "\n"
        << "min R_C/cutset: " << r.min_ratio.str() << "\n"
        << "histogram:\n";
    for (std::size_t i = 0; i < r.histogram.size(); ++i) {
        out << "  [" << i + 1 << "," << i + 2 << (i + 1 == r.histogram.size() ? "]" : ")") << ": "
            << r.histogram[i] << "\n";
    }
    out << "bound 12: " << (r.violation ? "VIOLATED (" + *r.violation + ")" : std::string("holds")) << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t largest_split(const CachingScheme& scheme) {
    if (const auto* shared = dynamic_cast<const MemorySharingScheme*>(&scheme))
        return std::max(largest_split(shared->left()), largest_split(shared->right()));
    if (const auto* coded = dynamic_cast<const CodedScheme*>(&scheme)) return coded->granularity();
    return 2;
}

std::string segment_prefix(const std::optional<int>& segment) {
    return segment ? "seg" + std::to_string(*segment) + ":" : "";
}

std::string file_name(int file, int files) {
    return files <= 26 ? std::string(1, static_cast<char>('A' + file - 1)) : "W" + std::to_string(file);
}

std::string describe(const ManifestEntry& entry, int files, int users) {
    std::string out = segment_prefix(entry.segment);
    if (const auto* combo = std::get_if<CachedCombination>(&entry.content)) {
        for (std::size_t i = 0; i < combo->subfiles.size(); ++i) {
            if (i) out += "^";
            out += subfile_name(combo->subfiles[i], files, users);
        }
    } else {
        out += file_name(std::get<CachedPrefix>(entry.content).file, files) + "[:" + std::to_string(entry.bits) + "]";
    }
    return out;
}

std::string describe(const SignalBlock& block, const DemandVector& demand, int files, int users) {
    std::string out;
    if (const auto* m = std::get_if<MulticastLabel>(&block.label.kind)) {
        bool first = true;
        for (int s : m->users.members()) {
            if (!first) out += " ^ ";
            first = false;
            out += subfile_name({demand.of(s), m->users.without(s)}, files, users);
        }
    } else if (const auto* f = std::get_if<FileLabel>(&block.label.kind)) {
        out = file_name(f->file, files);
    } else {
        out = subfile_name(std::get<SubfileLabel>(block.label.kind).id, files, users);
    }
    return out;
}

}  // namespace

std::string render_trace(const SchemeParameters& params, const DemandVector& demand, std::size_t file_bits,
                         std::uint64_t seed, SchemeChoice choice, const FileLibrary* library) {
    const auto scheme = make_scheme(params, choice);
    if (largest_split(*scheme) > kTraceSplitLimit)
        throw InvalidParameter("trace limited to at most " + std::to_string(kTraceSplitLimit) +
                               " subfiles per file; got " + std::to_string(largest_split(*scheme)));
    if (demand.users() != params.users || demand.files() != params.files)
        throw InvalidParameter("demand " + demand.str() + " does not match N and K");

    const FileLibrary base = library != nullptr
                                 ? *library
                                 : generate_library(params.files, file_bits == 0 ? scheme->granularity() : file_bits, seed);
    const FileLibrary lib = pad_for_split(base, scheme->granularity());
    const auto caches = scheme->place(lib);
    const auto signal = scheme->deliver(lib, demand);
    const int n = params.files;
    const int k = params.users;

    std::ostringstream out;
    out << "scheme: " << scheme->name() << "\n"
        << "N=" << n << " K=" << k << " M=" << params.memory.str() << " F=" << lib.file_bits() << " seed=" << seed
        << "\n"
        << "demand: " << demand.str() << "\n"
        << "library:\n";
    for (int f = 1; f <= n; ++f) out << "  " << file_name(f, n) << " = " << lib.file(f).hex() << "\n";
    out << "caches:\n";
    for (const auto& cache : caches) {
        out << "  Z_" << cache.user << " = (";
        for (std::size_t i = 0; i < cache.manifest.size(); ++i)
            out << (i ? ", " : "") << describe(cache.manifest[i], n, k);
        out << ") [" << cache.payload.size() << " bits] " << cache.payload.hex() << "\n";
    }
    out << "signal: " << signal.blocks.size() << " blocks, " << signal.total_bits() << " bits\n"
        << signal.serialize() << "composition:\n";
    for (const auto& block : signal.blocks)
        out << "  " << block.label.str() << " = " << describe(block, demand, n, k) << "\n";
    out << "decoded:";
    for (int user = 1; user <= k; ++user) {
        const bool ok = scheme->decode(user, caches[user - 1], signal, demand, lib.file_bits()) ==
                        lib.file(demand.of(user));
        out << " user" << user << "=" << (ok ? "ok" : "MISMATCH");
    }
    out << "\n";
    return out.str();
}

}  // namespace coded_caching
