#include <algorithm>
#include <numeric>

#include "coded_caching/caching_scheme.hpp"
#include "coded_caching/errors.hpp"

namespace coded_caching {

namespace {

constexpr int kLeft = 0;
constexpr int kRight = 1;

CacheContent segment_of(const CacheContent& cache, int segment) {
    CacheContent out;
    out.user = cache.user;
    for (const auto& entry : cache.manifest) {
        if (entry.segment != segment) continue;
        out.add(entry.content, cache.entry_bits(entry));
    }
    return out;
}

DeliverySignal segment_of(const DeliverySignal& signal, int segment) {
    DeliverySignal out;
    for (const auto& block : signal.blocks) {
        if (!block.label.segment) throw DecodeIntegrityError("unsegmented block " + block.label.str());
        if (*block.label.segment != segment) continue;
        out.blocks.push_back({BlockLabel{block.label.kind, std::nullopt}, block.payload});
    }
    return out;
}

}  // namespace

MemorySharingScheme::MemorySharingScheme(const AchievableEnvelope& envelope, Rational memory)
    : CachingScheme(envelope.files(), envelope.users()), memory_(memory) {
    const auto& v = envelope.vertices();
    auto upper = std::find_if(v.begin(), v.end(), [&](const EnvelopeVertex& x) { return !(x.point.memory < memory); });
    if (upper == v.begin() || upper == v.end() || upper->point.memory == memory)
        throw InvalidParameter("memory " + memory.str() + " is not strictly between two envelope vertices");
    const auto& lo = *std::prev(upper);
    const auto& hi = *upper;
    alpha_ = (hi.point.memory - memory) / (hi.point.memory - lo.point.memory);
    left_ = make_vertex_scheme(files(), users(), lo);
    right_ = make_vertex_scheme(files(), users(), hi);

    // F = q m with alpha = p/q; the portions p m and (q - p) m must meet each
    // vertex scheme's granularity.
    const auto p = static_cast<std::uint64_t>(alpha_.num());
    const auto q = static_cast<std::uint64_t>(alpha_.den());
    const std::uint64_t g1 = left_->granularity();
    const std::uint64_t g2 = right_->granularity();
    const std::uint64_t m = std::lcm(g1 / std::gcd(p, g1), g2 / std::gcd(q - p, g2));
    granularity_ = q * m;
}

std::string MemorySharingScheme::name() const {
    return "memory-sharing(alpha=" + alpha_.str() + ": " + left_->name() + " | " + right_->name() + ")";
}

Rational MemorySharingScheme::worst_case_rate() const {
    return alpha_ * left_->worst_case_rate() + (Rational{1} - alpha_) * right_->worst_case_rate();
}

std::size_t MemorySharingScheme::left_bits(std::size_t file_bits) const {
    const Rational bits = alpha_ * Rational{static_cast<std::int64_t>(file_bits)};
    if (!bits.is_integer()) throw GranularityError("memory-sharing split", granularity_);
    return static_cast<std::size_t>(bits.num());
}

std::vector<CacheContent> MemorySharingScheme::place(const FileLibrary& library) const {
    check_library(library);
    const std::size_t split = left_bits(library.file_bits());
    const auto left = left_->place(slice_library(library, 0, split));
    const auto right = right_->place(slice_library(library, split, library.file_bits() - split));

    std::vector<CacheContent> caches(users());
    for (int k = 0; k < users(); ++k) {
        caches[k].user = k + 1;
        for (const auto* part : {&left[k], &right[k]})
            for (const auto& entry : part->manifest)
                caches[k].add(entry.content, part->entry_bits(entry), part == &left[k] ? kLeft : kRight);
    }
    return caches;
}

DeliverySignal MemorySharingScheme::deliver(const FileLibrary& library, const DemandVector& demand) const {
    check_library(library);
    check_demand(demand);
    const std::size_t split = left_bits(library.file_bits());
    DeliverySignal signal;
    auto append = [&](const DeliverySignal& part, int segment) {
        for (const auto& block : part.blocks)
            signal.blocks.push_back({BlockLabel{block.label.kind, segment}, block.payload});
    };
    append(left_->deliver(slice_library(library, 0, split), demand), kLeft);
    append(right_->deliver(slice_library(library, split, library.file_bits() - split), demand), kRight);
    return signal;
}

BitBuffer MemorySharingScheme::decode(int user, const CacheContent& cache, const DeliverySignal& signal,
                                      const DemandVector& demand, std::size_t file_bits) const {
    check_demand(demand);
    const std::size_t split = left_bits(file_bits);
    BitBuffer out = left_->decode(user, segment_of(cache, kLeft), segment_of(signal, kLeft), demand, split);
    out.append(right_->decode(user, segment_of(cache, kRight), segment_of(signal, kRight), demand,
                              file_bits - split));
    return out;
}

// ---------------------------------------------------------------------------

std::unique_ptr<CachingScheme> make_vertex_scheme(int files, int users, const EnvelopeVertex& vertex) {
    switch (vertex.scheme) {
        case VertexScheme::broadcast:
            return std::make_unique<BroadcastScheme>(files, users);
        case VertexScheme::coded:
            return std::make_unique<CodedScheme>(files, users, vertex.t);
        case VertexScheme::uncoded:
            return std::make_unique<UncodedScheme>(files, users, vertex.point.memory);
    }
    throw InvalidParameter("unknown vertex scheme");
}

std::unique_ptr<CachingScheme> make_scheme(const SchemeParameters& params, SchemeChoice choice) {
    const int n = params.files;
    const int k = params.users;
    if (n < 1 || k < 1) throw InvalidParameter("N and K must be positive");
    if (params.memory < Rational{0} || params.memory > Rational{n})
        throw InvalidParameter("memory " + params.memory.str() + " outside [0, " + std::to_string(n) + "]");

    switch (choice) {
        case SchemeChoice::coded: {
            const auto t = params.t();
            if (!t) throw InvalidParameter("coded scheme needs MK/N integral, M=" + params.memory.str());
            return std::make_unique<CodedScheme>(n, k, *t);
        }
        case SchemeChoice::uncoded:
            return std::make_unique<UncodedScheme>(n, k, params.memory);
        case SchemeChoice::appendix_2x2:
            if (n != 2 || k != 2 || params.memory != Rational{1, 2})
                throw InvalidParameter("appendix scheme requires N = K = 2 and M = 1/2");
            return std::make_unique<Appendix2x2Scheme>();
        case SchemeChoice::automatic:
            break;
    }

    const auto envelope = achievable_envelope(n, k);
    for (const auto& v : envelope.vertices())
        if (v.point.memory == params.memory) return make_vertex_scheme(n, k, v);
    return std::make_unique<MemorySharingScheme>(envelope, params.memory);
}

SchemeRun memory_sharing_scheme(const FileLibrary& library, const DemandVector& demand, const Rational& memory) {
    const auto scheme = make_scheme({library.file_count(), demand.users(), memory});
    return {scheme->place(library), scheme->deliver(library, demand)};
}

}  // namespace coded_caching
