// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "../support/properties.hpp"
#include "coded_caching/harness.hpp"

using namespace coded_caching;

namespace {

struct Check {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

SubfileId w(int file, std::vector<int> subset) { return {file, SubsetIndex{std::move(subset)}}; }

VerifyReport verify(int n, int k, Rational m, std::size_t bits, std::uint64_t seed = 1,
                    SchemeChoice choice = SchemeChoice::automatic) {
    VerifyOptions o;
    o.params = {n, k, m};
    o.file_bits = bits;
    o.seed = seed;
    o.scheme = choice;
    return run_verify(o);
}

void two_by_two_golden(Check& c) {
    const auto start = Clock::now();
    const auto r = verify(2, 2, Rational{1}, 2);
    c.expect(r.demands_checked == 4 && r.exhaustive, "4 demands, exhaustive");
    c.expect(r.failures == 0, "0 failures");
    c.expect(r.achieved_bits == 1, "worst-case signal F/2 = 1 bit");

    const auto lib = generate_library(2, 2, 1);
    const auto x = coded_delivery(lib, DemandVector{{1, 2}, 2}, 1);
    c.expect(x.blocks.size() == 1 && x.blocks[0].payload == (subfile(lib, w(1, {2}), 2) ^ subfile(lib, w(2, {1}), 2)),
             "d=(1,2) sends A_2 xor B_1");
    c.expect(seconds_since(start) < 1.0, "runtime < 1 s");
}

void three_by_three_golden(Check& c) {
    const auto start = Clock::now();
    const std::size_t bits = 12;

    const auto r1 = verify(3, 3, Rational{1}, bits);
    c.expect(r1.demands_checked == 27 && r1.failures == 0, "M=1: 27 demands, 0 failures");
    c.expect(r1.analytic_rate == Rational{1} && r1.achieved_bits == bits, "M=1: rate exactly 1");

    const auto r2 = verify(3, 3, Rational{2}, bits);
    c.expect(r2.demands_checked == 27 && r2.failures == 0, "M=2: 27 demands, 0 failures");
    c.expect(r2.analytic_rate == Rational{1, 3} && r2.achieved_bits == bits / 3, "M=2: rate exactly 1/3");

    const auto lib = generate_library(3, bits, 1);
    const DemandVector d{{1, 2, 3}, 3};
    const auto x1 = coded_delivery(lib, d, 1);
    auto sub = [&](int n, std::vector<int> t) { return subfile(lib, w(n, std::move(t)), 3); };
    const std::vector<BitBuffer> expected = {sub(1, {2}) ^ sub(2, {1}), sub(1, {3}) ^ sub(3, {1}),
                                             sub(2, {3}) ^ sub(3, {2})};
    bool same = x1.blocks.size() == 3;
    for (std::size_t i = 0; same && i < 3; ++i) same = x1.blocks[i].payload == expected[i];
    c.expect(same, "M=1, d=(1,2,3): three XOR blocks W_{1,2}^W_{2,1}, W_{1,3}^W_{3,1}, W_{2,3}^W_{3,2}");

    const auto x2 = coded_delivery(lib, d, 2);
    c.expect(x2.blocks.size() == 1 && x2.blocks[0].payload == (sub(1, {2, 3}) ^ sub(2, {1, 3}) ^ sub(3, {1, 2})),
             "M=2, d=(1,2,3): single block A_23^B_13^C_12");
    c.expect(seconds_since(start) < 1.0, "runtime < 1 s");
}

void headline(Check& c) {
    const auto coded = achievable_envelope(30, 30).evaluate(Rational{10});
    const auto uncoded = rate_uncoded(30, 30, Rational{10});
    c.expect(coded == Rational{20, 11}, "R_C(30,30,10) = 20/11, got " + coded.str());
    c.expect(uncoded == Rational{20}, "R_U(30,30,10) = 20, got " + uncoded.str());
    c.expect(uncoded / coded == Rational{11}, "improvement factor 11");
}

void zero_error_at_scale(Check& c) {
    const auto start = Clock::now();
    int runs = 0;
    std::uint64_t demands = 0;
    for (int n = 1; n <= 5; ++n) {
        for (int k = 1; k <= 5; ++k) {
            struct Point {
                Rational m;
                SchemeChoice choice;
            };
            std::vector<Point> points;
            for (int t = 1; t <= k - 1; ++t) points.push_back({Rational{std::int64_t{t} * n, k}, SchemeChoice::coded});
            points.push_back({Rational{0}, SchemeChoice::automatic});
            points.push_back({Rational{n}, SchemeChoice::automatic});
            // xK is never an integer for these, so none is a corner.
            for (const Rational x : {Rational{1, 2 * k}, Rational{2 * k + 1, 4 * k}, Rational{3 * k - 1, 3 * k}})
                points.push_back({x * Rational{n}, SchemeChoice::automatic});

            for (const auto& p : points) {
                for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                    const auto r = verify(n, k, p.m, 0, seed, p.choice);
                    ++runs;
                    demands += r.demands_checked;
                    c.expect(r.passed(), "N=" + std::to_string(n) + " K=" + std::to_string(k) + " M=" + p.m.str() +
                                             " seed=" + std::to_string(seed));
                    c.expect(Rational{static_cast<std::int64_t>(r.achieved_bits)} <= r.analytic_bits,
                             "signal within analytic bits at N=" + std::to_string(n) + " K=" + std::to_string(k) +
                                 " M=" + p.m.str());
                }
            }
        }
    }
    const double secs = seconds_since(start);
    std::ostringstream s;
    s << runs << " verifications, " << demands << " demand vectors, " << secs << " s";
    c.note(s.str());
    c.expect(secs < 120.0, "runtime < 2 min");
}

void gap_bound(Check& c) {
    const auto start = Clock::now();
    const auto r = gap_scan(32, 32);
    c.expect(!r.violation, r.violation.value_or(""));
    c.expect(r.max_ratio <= Rational{kGapBound}, "max ratio <= 12");
    std::ostringstream s;
    s << "observed max R_C/cutset = " << r.max_ratio.str() << " ~ " << format_decimal(r.max_ratio) << " at N="
      << r.arg_files << " K=" << r.arg_users << " M=" << r.arg_memory.str() << " over " << r.points << " points, "
      << seconds_since(start) << " s";
    c.note(s.str());
    c.expect(seconds_since(start) < 120.0, "runtime < 2 min");
}

void exact_two_by_two(Check& c) {
    const std::vector<RatePoint> corners = {
        {Rational{0}, Rational{2}}, {Rational{1, 2}, Rational{1}}, {Rational{1}, Rational{1, 2}}, {Rational{2}, Rational{0}}};
    const auto curve = lower_convex_hull(corners);
    int mismatches = 0;
    for (int i = 0; i <= 200; ++i) {
        const Rational m{2 * i, 200};
        const Rational direct = max(max(Rational{2} - Rational{2} * m, Rational{3, 2} - m), Rational{1} - m / Rational{2});
        if (curve.evaluate(m) != direct || exact_tradeoff_2x2(m) != direct) ++mismatches;
    }
    c.expect(mismatches == 0, std::to_string(mismatches) + " of 201 grid points differ");

    for (std::size_t bits : {2u, 4u, 64u}) {
        const auto r = verify(2, 2, Rational{1, 2}, bits, 7, SchemeChoice::appendix_2x2);
        c.expect(r.passed() && r.demands_checked == 4, "appendix scheme verifies at F=" + std::to_string(bits));
        c.expect(r.achieved_bits == bits, "appendix signal exactly F bits at F=" + std::to_string(bits));
        c.expect(r.max_cache_bits == bits / 2, "appendix cache F/2 bits");
    }
}

void slope(Check& c) {
    for (int k : {10, 20, 30}) {
        const auto drop = achievable_rate(k, k, Rational{0}) - achievable_rate(k, k, Rational{1});
        c.expect(drop >= Rational{k, 2}, "K=" + std::to_string(k) + ": R_C(0)-R_C(1) = " + drop.str());
        c.note("K=" + std::to_string(k) + ": slope " + drop.str());
    }
}

void corner_curves(Check& c) {
    struct Case {
        int n;
        int k;
        std::vector<Rational> corner_rates;  // R_C at M = tN/K, t = 0..K, where listed
    };
    // Independent exact values; (30,30) only spot-checked.
    const std::vector<Case> cases = {
        {2, 2, {Rational{2}, Rational{1, 2}, Rational{0}}},
        {3, 3, {Rational{3}, Rational{1}, Rational{1, 3}, Rational{0}}},
        {20, 10,
         {Rational{10}, Rational{9, 2}, Rational{8, 3}, Rational{7, 4}, Rational{6, 5}, Rational{5, 6}, Rational{4, 7},
          Rational{3, 8}, Rational{2, 9}, Rational{1, 10}, Rational{0}}},
        {30, 30, {}},
    };
    for (const auto& row_case : cases) {
        const auto rows = tradeoff_rows(row_case.n, row_case.k, 4 * row_case.k + 1, false);
        std::ostringstream csv;
        write_tradeoff_csv(csv, rows);
        const std::string tag = "(" + std::to_string(row_case.n) + "," + std::to_string(row_case.k) + ")";

        std::istringstream lines(csv.str());
        std::string line;
        std::getline(lines, line);
        c.expect(line == "M,R_coded,R_uncoded,R_cutset", tag + " header");
        for (const auto& row : rows) {
            std::getline(lines, line);
            c.expect(line == format_decimal(row.memory) + "," + format_decimal(row.coded) + "," +
                                 format_decimal(row.uncoded) + "," + format_decimal(row.cutset),
                     tag + " CSV row at M=" + row.memory.str());
            c.expect(row.cutset <= row.coded && row.coded <= row.uncoded,
                     tag + " cutset <= coded <= uncoded at M=" + row.memory.str());
        }
        for (int t = 0; t <= row_case.k; ++t) {
            const auto& row = rows[4 * t];
            c.expect(row.memory == Rational{std::int64_t{t} * row_case.n, row_case.k}, tag + " corner grid point");
            c.expect(row.coded <= rate_coded_corner(row_case.n, row_case.k, t), tag + " envelope below corner t=" + std::to_string(t));
            if (!row_case.corner_rates.empty())
                c.expect(row.coded == row_case.corner_rates[t], tag + " R_C at t=" + std::to_string(t) + " is " + row.coded.str());
        }
    }
    const auto rows = tradeoff_rows(30, 30, 121, false);
    c.expect(rows[40].memory == Rational{10} && rows[40].coded == Rational{20, 11} && rows[40].uncoded == Rational{20},
             "(30,30) M=10: 20/11 and 20");
    c.expect(rows[0].coded == Rational{30} && rows[120].coded == Rational{0}, "(30,30) end points");
}

void property_suite(Check& c) {
    constexpr int kCases = 250;
    const std::vector<std::pair<std::string, std::function<props::Outcome()>>> suites = {
        {"placement demand-independence", [] { return props::placement_ignores_demand(kCases, 11); }},
        {"cache budget", [] { return props::cache_within_budget(kCases, 12); }},
        {"user-permutation symmetry", [] { return props::user_relabelling(kCases, 13); }},
        {"split/reassemble identity", [] { return props::split_reassemble(kCases, 14); }},
    };
    for (const auto& [name, run] : suites) {
        const auto r = run();
        c.expect(r.ok() && r.cases >= 200, name + " (" + std::to_string(r.failures) + "/" + std::to_string(r.cases) +
                                               " failing" + (r.first.empty() ? "" : ", first " + r.first) + ")");
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, void (*)(Check&)>> criteria = {
        {"2x2 golden fixture", two_by_two_golden},
        {"3x3 golden fixtures", three_by_three_golden},
        {"headline 20/11 at N=K=30, M=10", headline},
        {"zero-error verification, N,K <= 5", zero_error_at_scale},
        {"gap scan N,K <= 32 within factor 12", gap_bound},
        {"exact 2x2 tradeoff and appendix scheme", exact_two_by_two},
        {"initial slope >= K/2", slope},
        {"tradeoff curves at corner points", corner_curves},
        {"property suite", property_suite},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        std::printf("criterion %zu: %s - %s\n", i + 1, c.ok ? "PASS" : "FAIL", criteria[i].first.c_str());
        for (const auto& n : c.notes) std::printf("    %s\n", n.c_str());
        failed += c.ok ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
