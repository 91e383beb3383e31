#include "coded_caching/caching_scheme.hpp"
#include "coded_caching/errors.hpp"

namespace coded_caching {

namespace {

const SignalBlock& file_block(const DeliverySignal& signal, int file) {
    for (const auto& block : signal.blocks) {
        const auto* label = std::get_if<FileLabel>(&block.label.kind);
        if (label == nullptr) throw DecodeIntegrityError("unexpected block " + block.label.str());
        if (label->file == file) return block;
    }
    throw DecodeIntegrityError("signal carries no block for file " + std::to_string(file));
}

}  // namespace

// ---------------------------------------------------------------------------

BroadcastScheme::BroadcastScheme(int files, int users) : CachingScheme(files, users) {}

Rational BroadcastScheme::worst_case_rate() const { return Rational{std::min(files(), users())}; }

std::vector<CacheContent> BroadcastScheme::place(const FileLibrary& library) const {
    check_library(library);
    std::vector<CacheContent> caches(users());
    for (int k = 1; k <= users(); ++k) caches[k - 1].user = k;
    return caches;
}

DeliverySignal BroadcastScheme::deliver(const FileLibrary& library, const DemandVector& demand) const {
    check_library(library);
    check_demand(demand);
    DeliverySignal signal;
    for (int n : demand.distinct())
        signal.blocks.push_back({BlockLabel{FileLabel{n}, std::nullopt}, library.file(n)});
    return signal;
}

BitBuffer BroadcastScheme::decode(int user, const CacheContent& cache, const DeliverySignal& signal,
                                  const DemandVector& demand, std::size_t file_bits) const {
    check_demand(demand);
    if (cache.user != user) throw DecodeIntegrityError("cache belongs to another user");
    const auto& block = file_block(signal, demand.of(user));
    if (block.payload.size() != file_bits) throw DecodeIntegrityError("broadcast block has wrong length");
    return block.payload;
}

DeliverySignal broadcast_delivery_m0(const FileLibrary& library, const DemandVector& demand) {
    return BroadcastScheme{library.file_count(), demand.users()}.deliver(library, demand);
}

// ---------------------------------------------------------------------------

UncodedScheme::UncodedScheme(int files, int users, Rational memory)
    : CachingScheme(files, users), memory_(memory) {
    if (memory_ < Rational{0} || memory_ > Rational{files})
        throw InvalidParameter("memory " + memory_.str() + " outside [0, N]");
}

std::string UncodedScheme::name() const { return "uncoded(M=" + memory_.str() + ")"; }

Rational UncodedScheme::worst_case_rate() const { return rate_uncoded(files(), users(), memory_); }

std::uint64_t UncodedScheme::granularity() const {
    return static_cast<std::uint64_t>((memory_ / Rational{files()}).den());
}

std::size_t UncodedScheme::prefix_bits(std::size_t file_bits) const {
    const Rational bits = memory_ / Rational{files()} * Rational{static_cast<std::int64_t>(file_bits)};
    if (!bits.is_integer()) throw GranularityError("uncoded cache split", granularity());
    return static_cast<std::size_t>(bits.num());
}

std::vector<CacheContent> UncodedScheme::place(const FileLibrary& library) const {
    check_library(library);
    const std::size_t prefix = prefix_bits(library.file_bits());
    std::vector<CacheContent> caches(users());
    for (int k = 1; k <= users(); ++k) {
        caches[k - 1].user = k;
        if (prefix == 0) continue;
        for (int n = 1; n <= files(); ++n) caches[k - 1].add(CachedPrefix{n}, library.file(n).slice(0, prefix));
    }
    return caches;
}

DeliverySignal UncodedScheme::deliver(const FileLibrary& library, const DemandVector& demand) const {
    check_library(library);
    check_demand(demand);
    const std::size_t prefix = prefix_bits(library.file_bits());
    const std::size_t rest = library.file_bits() - prefix;
    DeliverySignal signal;
    if (rest == 0) return signal;
    for (int n : demand.distinct())
        signal.blocks.push_back({BlockLabel{FileLabel{n}, std::nullopt}, library.file(n).slice(prefix, rest)});
    return signal;
}

BitBuffer UncodedScheme::decode(int user, const CacheContent& cache, const DeliverySignal& signal,
                                const DemandVector& demand, std::size_t file_bits) const {
    check_demand(demand);
    if (cache.user != user) throw DecodeIntegrityError("cache belongs to another user");
    const int wanted = demand.of(user);
    const std::size_t prefix = prefix_bits(file_bits);

    BitBuffer out;
    if (prefix > 0) {
        const ManifestEntry* entry = nullptr;
        for (const auto& e : cache.manifest) {
            const auto* p = std::get_if<CachedPrefix>(&e.content);
            if (p != nullptr && p->file == wanted) entry = &e;
        }
        if (entry == nullptr || entry->bits != prefix)
            throw DecodeIntegrityError("cache lacks the prefix of file " + std::to_string(wanted));
        out = cache.entry_bits(*entry);
    }
    if (prefix < file_bits) {
        const auto& block = file_block(signal, wanted);
        if (block.payload.size() != file_bits - prefix)
            throw DecodeIntegrityError("remainder block has wrong length");
        out.append(block.payload);
    }
    return out;
}

SchemeRun uncoded_scheme(const FileLibrary& library, const DemandVector& demand, const Rational& memory) {
    const UncodedScheme scheme{library.file_count(), demand.users(), memory};
    return {scheme.place(library), scheme.deliver(library, demand)};
}

}  // namespace coded_caching
