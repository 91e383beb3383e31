#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coded_caching/errors.hpp"
#include "coded_caching/harness.hpp"

namespace py = pybind11;
namespace cc = coded_caching;

namespace {

using Pair = std::pair<std::int64_t, std::int64_t>;

cc::Rational rational(const Pair& p) { return cc::Rational{p.first, p.second}; }
Pair pair(const cc::Rational& r) { return {r.num(), r.den()}; }

cc::SchemeChoice choice(const std::string& name) {
    if (name == "auto") return cc::SchemeChoice::automatic;
    if (name == "coded") return cc::SchemeChoice::coded;
    if (name == "uncoded") return cc::SchemeChoice::uncoded;
    if (name == "appendix") return cc::SchemeChoice::appendix_2x2;
    throw cc::InvalidParameter("unknown scheme '" + name + "'");
}

py::bytes to_bytes(const cc::BitBuffer& b) {
    return py::bytes(reinterpret_cast<const char*>(b.bytes().data()), b.bytes().size());
}

cc::BitBuffer from_bytes(const py::bytes& data, std::size_t bits) {
    const std::string raw = data;
    return cc::BitBuffer::from_bytes(
        std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()), bits);
}

cc::FileLibrary library_from(const std::vector<py::bytes>& files, std::size_t bits) {
    std::vector<cc::BitBuffer> out;
    for (const auto& f : files) out.push_back(from_bytes(f, bits));
    return cc::FileLibrary{std::move(out), bits};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "coded caching core";

    py::register_exception<cc::GranularityError>(m, "GranularityError", PyExc_ValueError);
    py::register_exception<cc::InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
    py::register_exception<cc::DecodeIntegrityError>(m, "DecodeIntegrityError", PyExc_RuntimeError);

    m.def("binomial", &cc::binomial, py::arg("n"), py::arg("k"));
    m.def(
        "subsets",
        [](int users, int size) {
            std::vector<std::vector<int>> out;
            for (const auto& s : cc::enumerate_subsets(users, size)) out.push_back(s.members());
            return out;
        },
        py::arg("users"), py::arg("size"));

    m.def("achievable_rate", [](int n, int k, Pair mem) { return pair(cc::achievable_rate(n, k, rational(mem))); });
    m.def("rate_uncoded", [](int n, int k, Pair mem) { return pair(cc::rate_uncoded(n, k, rational(mem))); });
    m.def("cutset_bound", [](int n, int k, Pair mem) { return pair(cc::cutset_bound(n, k, rational(mem))); });
    m.def("exact_tradeoff_2x2", [](Pair mem) { return pair(cc::exact_tradeoff_2x2(rational(mem))); });
    m.def("gap_ratio", [](int n, int k, Pair mem) -> std::optional<Pair> {
        const auto r = cc::gap_ratio(n, k, rational(mem));
        if (!r) return std::nullopt;
        return pair(*r);
    });

    m.def(
        "generate_library",
        [](int files, std::size_t bits, std::uint64_t seed) {
            const auto lib = cc::generate_library(files, bits, seed);
            std::vector<py::bytes> out;
            for (const auto& f : lib.files()) out.push_back(to_bytes(f));
            return out;
        },
        py::arg("files"), py::arg("file_bits"), py::arg("seed"));

    // Caches are returned as raw payload bytes; the manifest is rebuilt by
    // placing again on decode, so placement stays demand-free.
    m.def(
        "coded_placement",
        [](const std::vector<py::bytes>& files, std::size_t bits, int users, int t) {
            std::vector<py::bytes> out;
            for (const auto& z : cc::coded_placement(library_from(files, bits), users, t)) out.push_back(to_bytes(z.payload));
            return out;
        },
        py::arg("files"), py::arg("file_bits"), py::arg("users"), py::arg("t"));
    m.def(
        "coded_delivery",
        [](const std::vector<py::bytes>& files, std::size_t bits, std::vector<int> demand, int t) {
            const auto lib = library_from(files, bits);
            std::vector<std::pair<std::string, py::bytes>> out;
            for (const auto& b : cc::coded_delivery(lib, cc::DemandVector{std::move(demand), lib.file_count()}, t).blocks)
                out.emplace_back(b.label.str(), to_bytes(b.payload));
            return out;
        },
        py::arg("files"), py::arg("file_bits"), py::arg("demand"), py::arg("t"));
    m.def(
        "coded_decode",
        [](int user, const py::bytes& cache, const std::vector<py::bytes>& blocks, std::vector<int> demand,
           int files, std::size_t bits, int t) {
            const int users = static_cast<int>(demand.size());
            const cc::DemandVector d{std::move(demand), files};
            // Rebuild the manifest from an all-zero library of the same shape.
            std::vector<cc::BitBuffer> zeros(files, cc::BitBuffer(bits));
            auto z = cc::coded_placement(cc::FileLibrary{zeros, bits}, users, t).at(user - 1);
            z.payload = from_bytes(cache, z.payload.size());
            auto x = cc::coded_delivery(cc::FileLibrary{zeros, bits}, d, t);
            if (blocks.size() != x.blocks.size()) throw cc::DecodeIntegrityError("wrong number of blocks");
            for (std::size_t i = 0; i < blocks.size(); ++i)
                x.blocks[i].payload = from_bytes(blocks[i], x.blocks[i].payload.size());
            cc::SchemeParameters params{files, users, cc::Rational{std::int64_t{t} * files, users}};
            return to_bytes(cc::coded_decode(user, z, x, d, params));
        },
        py::arg("user"), py::arg("cache"), py::arg("blocks"), py::arg("demand"), py::arg("files"),
        py::arg("file_bits"), py::arg("t"));

    m.def(
        "verify",
        [](int n, int k, Pair mem, std::size_t bits, std::uint64_t seed, std::uint64_t samples,
           const std::string& scheme, unsigned threads) {
            cc::VerifyOptions o;
            o.params = {n, k, rational(mem)};
            o.file_bits = bits;
            o.seed = seed;
            o.scheme = choice(scheme);
            o.threads = threads;
            if (samples > 0) {
                o.mode = cc::VerifyMode::sampled;
                o.samples = samples;
            }
            cc::VerifyReport r;
            {
                py::gil_scoped_release release;
                r = cc::run_verify(o);
            }
            py::dict out;
            out["scheme"] = r.scheme;
            out["passed"] = r.passed();
            out["requested_bits"] = r.requested_bits;
            out["file_bits"] = r.file_bits;
            out["exhaustive"] = r.exhaustive;
            out["demands_checked"] = r.demands_checked;
            out["failures"] = r.failures;
            out["achieved_bits"] = r.achieved_bits;
            out["analytic_rate"] = pair(r.analytic_rate);
            out["achievable_rate"] = pair(r.achievable_rate);
            out["analytic_bits"] = pair(r.analytic_bits);
            out["padding_overhead"] = pair(r.padding_overhead);
            out["max_cache_bits"] = r.max_cache_bits;
            out["cache_budget_bits"] = r.cache_budget_bits;
            out["text"] = cc::format_report(r);
            return out;
        });

    m.def("tradeoff", [](int n, int k, int grid, bool exact) {
        std::vector<std::vector<Pair>> out;
        for (const auto& r : cc::tradeoff_rows(n, k, grid, exact)) {
            std::vector<Pair> row = {pair(r.memory), pair(r.coded), pair(r.uncoded), pair(r.cutset)};
            if (r.exact) row.push_back(pair(*r.exact));
            out.push_back(std::move(row));
        }
        return out;
    });

    m.def("gap_scan", [](int n, int k, int grid) {
        const auto r = cc::gap_scan(n, k, grid);
        py::dict out;
        out["points"] = r.points;
        out["undefined"] = r.undefined;
        out["max_ratio"] = pair(r.max_ratio);
        out["arg_files"] = r.arg_files;
        out["arg_users"] = r.arg_users;
        out["arg_memory"] = pair(r.arg_memory);
        out["violation"] = r.violation;
        out["text"] = cc::format_gap_report(r);
        return out;
    });

    m.def(
        "trace",
        [](int n, int k, const std::string& memory, std::vector<int> demand, std::size_t bits, std::uint64_t seed,
           const std::string& scheme) {
            return cc::render_trace({n, k, cc::Rational::parse(memory)}, cc::DemandVector{std::move(demand), n}, bits,
                                    seed, choice(scheme));
        },
        py::arg("files"), py::arg("users"), py::arg("memory"), py::arg("demand"), py::arg("file_bits") = 0,
        py::arg("seed") = 1, py::arg("scheme") = "auto");
}
