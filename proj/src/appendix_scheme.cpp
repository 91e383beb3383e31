#include <map>

#include "coded_caching/caching_scheme.hpp"
#include "coded_caching/errors.hpp"

namespace coded_caching {

namespace {

SubfileId half(int file, int which) { return {file, SubsetIndex{{which}}}; }

}  // namespace

Appendix2x2Scheme::Appendix2x2Scheme() : CachingScheme(2, 2) {}

std::vector<CacheContent> Appendix2x2Scheme::place(const FileLibrary& library) const {
    check_library(library);
    std::vector<CacheContent> caches(2);
    for (int k = 1; k <= 2; ++k) {
        caches[k - 1].user = k;
        const BitBuffer coded = subfile(library, half(1, k), 2) ^ subfile(library, half(2, k), 2);
        caches[k - 1].add(CachedCombination{{half(1, k), half(2, k)}}, coded);
    }
    return caches;
}

DeliverySignal Appendix2x2Scheme::deliver(const FileLibrary& library, const DemandVector& demand) const {
    check_library(library);
    check_demand(demand);
    const int d1 = demand.of(1);
    const int d2 = demand.of(2);
    const std::vector<SubfileId> pieces =
        d1 != d2 ? std::vector<SubfileId>{half(d2, 1), half(d1, 2)} : std::vector<SubfileId>{half(d1, 1), half(d1, 2)};
    DeliverySignal signal;
    for (const auto& id : pieces)
        signal.blocks.push_back({BlockLabel{SubfileLabel{id}, std::nullopt}, subfile(library, id, 2)});
    return signal;
}

BitBuffer Appendix2x2Scheme::decode(int user, const CacheContent& cache, const DeliverySignal& signal,
                                    const DemandVector& demand, std::size_t file_bits) const {
    check_demand(demand);
    if (cache.user != user) throw DecodeIntegrityError("cache belongs to another user");
    if (file_bits % 2 != 0) throw GranularityError("appendix decode", 2);

    std::map<SubfileId, BitBuffer> known;
    for (const auto& block : signal.blocks) {
        const auto* label = std::get_if<SubfileLabel>(&block.label.kind);
        if (label == nullptr || block.payload.size() != file_bits / 2)
            throw DecodeIntegrityError("unexpected block " + block.label.str());
        known.emplace(label->id, block.payload);
    }

    // Peel: any cached XOR with exactly one unknown term yields that term.
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& entry : cache.manifest) {
            const auto* combo = std::get_if<CachedCombination>(&entry.content);
            if (combo == nullptr) throw DecodeIntegrityError("appendix cache holds a prefix entry");
            const SubfileId* unknown = nullptr;
            int unknown_count = 0;
            BitBuffer value = cache.entry_bits(entry);
            for (const auto& id : combo->subfiles) {
                if (auto it = known.find(id); it != known.end()) {
                    value ^= it->second;
                } else {
                    unknown = &id;
                    ++unknown_count;
                }
            }
            if (unknown_count == 1) {
                known.emplace(*unknown, std::move(value));
                progress = true;
            }
        }
    }

    const int wanted = demand.of(user);
    BitBuffer out;
    for (int which = 1; which <= 2; ++which) {
        auto it = known.find(half(wanted, which));
        if (it == known.end())
            throw DecodeIntegrityError("user " + std::to_string(user) + " cannot resolve half " +
                                       std::to_string(which) + " of file " + std::to_string(wanted));
        out.append(it->second);
    }
    return out;
}

SchemeRun appendix_2x2_scheme(const FileLibrary& library, const DemandVector& demand) {
    if (library.file_count() != 2 || demand.users() != 2)
        throw InvalidParameter("appendix scheme is defined for N = K = 2 only");
    const Appendix2x2Scheme scheme;
    return {scheme.place(library), scheme.deliver(library, demand)};
}

}  // namespace coded_caching
