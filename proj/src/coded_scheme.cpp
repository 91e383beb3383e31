#include <map>

#include "coded_caching/caching_scheme.hpp"
#include "coded_caching/errors.hpp"

namespace coded_caching {

CachingScheme::CachingScheme(int files, int users) : files_(files), users_(users) {
    if (files < 1 || users < 1) throw InvalidParameter("N and K must be positive");
}

void CachingScheme::check_library(const FileLibrary& library) const {
    if (library.file_count() != files_)
        throw InvalidParameter("scheme expects " + std::to_string(files_) + " files, library has " +
                               std::to_string(library.file_count()));
    if (library.file_bits() == 0 || library.file_bits() % granularity() != 0)
        throw GranularityError(name() + ": file length " + std::to_string(library.file_bits()) +
                                   " is not a positive multiple of the split granularity",
                               granularity());
}

void CachingScheme::check_demand(const DemandVector& demand) const {
    if (demand.users() != users_ || demand.files() != files_)
        throw InvalidParameter("demand " + demand.str() + " does not match N=" + std::to_string(files_) +
                               ", K=" + std::to_string(users_));
}

namespace {

struct Span {
    std::size_t offset;
    std::size_t bits;
};

// Uncoded subfiles held in a cache, keyed by id.
std::map<SubfileId, Span> index_subfiles(const CacheContent& cache, std::size_t subfile_bits) {
    std::map<SubfileId, Span> out;
    for (const auto& entry : cache.manifest) {
        const auto* combo = std::get_if<CachedCombination>(&entry.content);
        if (combo == nullptr || combo->subfiles.size() != 1)
            throw DecodeIntegrityError("coded cache holds a non-subfile manifest entry");
        if (entry.bits != subfile_bits)
            throw DecodeIntegrityError("cached subfile has " + std::to_string(entry.bits) +
                                       " bits, expected " + std::to_string(subfile_bits));
        out.emplace(combo->subfiles.front(), Span{entry.offset, entry.bits});
    }
    return out;
}

BitBuffer decode_coded(int user, const CacheContent& cache, const DeliverySignal& signal,
                       const DemandVector& demand, int users, int t, std::size_t subfile_bits) {
    if (cache.user != user) throw DecodeIntegrityError("cache belongs to another user");
    const auto cached = index_subfiles(cache, subfile_bits);
    auto from_cache = [&](const SubfileId& id) {
        auto it = cached.find(id);
        if (it == cached.end())
            throw DecodeIntegrityError("user " + std::to_string(user) + " lacks subfile W(" +
                                       std::to_string(id.file) + "," + id.subset.str() + ")");
        return cache.payload.slice(it->second.offset, it->second.bits);
    };

    const int wanted = demand.of(user);
    std::vector<std::optional<BitBuffer>> recovered(binomial(users, t));
    for (const auto& block : signal.blocks) {
        const auto* label = std::get_if<MulticastLabel>(&block.label.kind);
        if (label == nullptr || label->users.cardinality() != t + 1 || !label->users.fits_universe(users))
            throw DecodeIntegrityError("unexpected block " + block.label.str() + " in coded signal");
        if (block.payload.size() != subfile_bits)
            throw DecodeIntegrityError("block " + block.label.str() + " has wrong length");
        if (!label->users.contains(user)) continue;
        BitBuffer missing = block.payload;
        for (int s : label->users.members())
            if (s != user) missing ^= from_cache({demand.of(s), label->users.without(s)});
        recovered[subset_rank(label->users.without(user), users)] = std::move(missing);
    }

    BitBuffer out;
    for (const auto& subset : enumerate_subsets(users, t)) {
        if (subset.contains(user)) {
            out.append(from_cache({wanted, subset}));
        } else {
            auto& piece = recovered[subset_rank(subset, users)];
            if (!piece) throw DecodeIntegrityError("no block delivers W(" + std::to_string(wanted) + "," +
                                                   subset.str() + ") to user " + std::to_string(user));
            out.append(*piece);
        }
    }
    return out;
}

}  // namespace

CodedScheme::CodedScheme(int files, int users, int t) : CachingScheme(files, users), t_(t) {
    if (t < 1 || t > users - 1)
        throw InvalidParameter("coded scheme needs 1 <= t <= K-1, got t=" + std::to_string(t) +
                               ", K=" + std::to_string(users));
}

std::string CodedScheme::name() const { return "coded(t=" + std::to_string(t_) + ")"; }

Rational CodedScheme::memory() const { return Rational{std::int64_t{t_} * files(), users()}; }

Rational CodedScheme::worst_case_rate() const { return Rational{users() - t_, t_ + 1}; }

std::uint64_t CodedScheme::granularity() const { return binomial(users(), t_); }

std::vector<CacheContent> CodedScheme::place(const FileLibrary& library) const {
    check_library(library);
    std::vector<std::vector<Subfile>> split;
    for (int n = 1; n <= files(); ++n) split.push_back(split_file(library, n, t_, users()));

    std::vector<CacheContent> caches(users());
    for (int k = 1; k <= users(); ++k) {
        caches[k - 1].user = k;
        for (int n = 1; n <= files(); ++n)
            for (const auto& piece : split[n - 1])
                if (piece.subset.contains(k))
                    caches[k - 1].add(CachedCombination{{SubfileId{n, piece.subset}}}, piece.bits);
    }
    return caches;
}

DeliverySignal CodedScheme::deliver(const FileLibrary& library, const DemandVector& demand) const {
    check_library(library);
    check_demand(demand);
    std::map<int, std::vector<Subfile>> split;
    for (int n : demand.distinct()) split.emplace(n, split_file(library, n, t_, users()));

    DeliverySignal signal;
    for (auto& group : enumerate_subsets(users(), t_ + 1)) {
        BitBuffer block(library.file_bits() / granularity());
        for (int s : group.members())
            block ^= split.at(demand.of(s))[subset_rank(group.without(s), users())].bits;
        signal.blocks.push_back({BlockLabel{MulticastLabel{std::move(group)}, std::nullopt}, std::move(block)});
    }
    return signal;
}

BitBuffer CodedScheme::decode(int user, const CacheContent& cache, const DeliverySignal& signal,
                              const DemandVector& demand, std::size_t file_bits) const {
    check_demand(demand);
    if (file_bits % granularity() != 0) throw GranularityError("coded decode", granularity());
    return decode_coded(user, cache, signal, demand, users(), t_, file_bits / granularity());
}

std::vector<CacheContent> coded_placement(const FileLibrary& library, int users, int t) {
    return CodedScheme{library.file_count(), users, t}.place(library);
}

DeliverySignal coded_delivery(const FileLibrary& library, const DemandVector& demand, int t) {
    return CodedScheme{library.file_count(), demand.users(), t}.deliver(library, demand);
}

BitBuffer coded_decode(int user, const CacheContent& cache, const DeliverySignal& signal,
                       const DemandVector& demand, const SchemeParameters& params) {
    const auto t = params.t();
    if (!t) throw InvalidParameter("MK/N is not an integer for M=" + params.memory.str());
    const CodedScheme scheme{params.files, params.users, *t};
    if (cache.manifest.empty()) throw DecodeIntegrityError("empty cache manifest");
    const std::size_t subfile_bits = cache.manifest.front().bits;
    return scheme.decode(user, cache, signal, demand, subfile_bits * scheme.granularity());
}

}  // namespace coded_caching
