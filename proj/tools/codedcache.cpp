// Command-line front end: verify, tradeoff, gap-scan, trace.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "coded_caching/errors.hpp"
#include "coded_caching/harness.hpp"

namespace cc = coded_caching;

namespace {

constexpr int kExitVerifyFailed = 2;
constexpr int kExitBadParameter = 3;

struct Common {
    int files = 2;
    int users = 2;
    std::string memory = "1";
    std::size_t file_bits = 0;
    std::uint64_t seed = 1;
    std::string scheme = "auto";
    std::string library;
};

void add_system_flags(CLI::App* cmd, Common& c) {
    cmd->add_option("-N,--files", c.files, "number of files")->required()->check(CLI::PositiveNumber);
    cmd->add_option("-K,--users", c.users, "number of users")->required()->check(CLI::PositiveNumber);
}

void add_run_flags(CLI::App* cmd, Common& c) {
    cmd->add_option("-M,--memory", c.memory, "cache size in files, e.g. 3/2")->required();
    cmd->add_option("-F,--file-bits", c.file_bits, "bits per file (padded to the scheme granularity)");
    cmd->add_option("--seed", c.seed, "library generator seed");
    cmd->add_option("--scheme", c.scheme, "auto | coded | uncoded | appendix")
        ->check(CLI::IsMember({"auto", "coded", "uncoded", "appendix"}));
    cmd->add_option("--library", c.library, "CCF1 library file to use instead of generated content");
}

cc::SchemeChoice parse_choice(const std::string& name) {
    static const std::map<std::string, cc::SchemeChoice> choices = {
        {"auto", cc::SchemeChoice::automatic},
        {"coded", cc::SchemeChoice::coded},
        {"uncoded", cc::SchemeChoice::uncoded},
        {"appendix", cc::SchemeChoice::appendix_2x2},
    };
    return choices.at(name);
}

cc::SchemeParameters parse_params(const Common& c) {
    cc::Rational memory;
    try {
        memory = cc::Rational::parse(c.memory);
    } catch (const std::exception& e) {
        throw cc::InvalidParameter(std::string("bad --memory: ") + e.what());
    }
    return {c.files, c.users, memory};
}

std::vector<int> parse_demand(const std::string& text) {
    std::vector<int> out;
    std::string cleaned;
    for (char ch : text) cleaned += (ch == ',' || ch == '(' || ch == ')') ? ' ' : ch;
    std::istringstream in(cleaned);
    for (int d; in >> d;) out.push_back(d);
    if (!in.eof()) throw cc::InvalidParameter("bad --demand '" + text + "'");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coded caching placement/delivery verifier and memory-rate calculators"};
    app.require_subcommand(1);

    Common verify_args;
    std::uint64_t samples = 0;
    unsigned threads = 0;
    auto* verify = app.add_subcommand("verify", "check zero-error delivery over demand vectors");
    add_system_flags(verify, verify_args);
    add_run_flags(verify, verify_args);
    verify->add_option("--samples", samples, "sample this many demands instead of all N^K")
        ->check(CLI::PositiveNumber);
    verify->add_option("--threads", threads, "worker threads (0 = all cores)");

    Common curve_args;
    int grid = 0;
    bool exact = false;
    std::string csv_path;
    auto* tradeoff = app.add_subcommand("tradeoff", "emit R_coded, R_uncoded, R_cutset as CSV");
    add_system_flags(tradeoff, curve_args);
    tradeoff->add_option("--grid", grid, "number of M grid points (default 4K+1)");
    tradeoff->add_flag("--exact-2x2", exact, "add the exact N=K=2 tradeoff column");
    tradeoff->add_option("--csv", csv_path, "write CSV here instead of stdout");

    int max_files = 0;
    int max_users = 0;
    int gap_grid = 0;
    auto* gap = app.add_subcommand("gap-scan", "check R_C/cutset <= 12 over all (N, K) up to the limits");
    gap->add_option("-N,--files", max_files, "largest N")->required()->check(CLI::Range(1, 64));
    gap->add_option("-K,--users", max_users, "largest K")->required()->check(CLI::Range(1, 64));
    gap->add_option("--grid", gap_grid, "M grid points per pair (default 4K+1)");

    Common trace_args;
    std::string demand_text;
    auto* trace = app.add_subcommand("trace", "print caches and signal for one demand");
    add_system_flags(trace, trace_args);
    add_run_flags(trace, trace_args);
    trace->add_option("-d,--demand", demand_text, "demand vector, e.g. 1,2,3")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            cc::VerifyOptions options;
            options.params = parse_params(verify_args);
            options.file_bits = verify_args.file_bits;
            options.seed = verify_args.seed;
            options.scheme = parse_choice(verify_args.scheme);
            options.threads = threads;
            if (samples > 0) {
                options.mode = cc::VerifyMode::sampled;
                options.samples = samples;
            }
            if (!verify_args.library.empty()) options.library = cc::load_library(verify_args.library);
            const auto report = cc::run_verify(options);
            std::cout << cc::format_report(report);
            return report.passed() ? 0 : kExitVerifyFailed;
        }
        if (*tradeoff) {
            const int points = grid == 0 ? 4 * curve_args.users + 1 : grid;
            const auto rows = cc::tradeoff_rows(curve_args.files, curve_args.users, points, exact);
            if (csv_path.empty()) {
                cc::write_tradeoff_csv(std::cout, rows);
            } else {
                std::ofstream out(csv_path, std::ios::binary);
                if (!out) throw cc::InvalidParameter("cannot write " + csv_path);
                cc::write_tradeoff_csv(out, rows);
            }
            return 0;
        }
        if (*gap) {
            const auto report = cc::gap_scan(max_files, max_users, gap_grid);
            std::cout << cc::format_gap_report(report);
            return report.violation ? kExitVerifyFailed : 0;
        }
        if (*trace) {
            const auto params = parse_params(trace_args);
            const cc::DemandVector demand{parse_demand(demand_text), params.files};
            std::optional<cc::FileLibrary> library;
            if (!trace_args.library.empty()) library = cc::load_library(trace_args.library);
            std::cout << cc::render_trace(params, demand, trace_args.file_bits, trace_args.seed,
                                          parse_choice(trace_args.scheme), library ? &*library : nullptr);
            return 0;
        }
    } catch (const cc::DecodeIntegrityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParameter;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParameter;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return 0;
}
