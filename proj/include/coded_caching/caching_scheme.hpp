#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "coded_caching/bounds.hpp"
#include "coded_caching/file_model.hpp"
#include "coded_caching/scheme_types.hpp"

namespace coded_caching {

/// Placement, delivery and decoding for one (N, K, M) operating point.
///
/// place() sees only the library, never the demand. Every user decodes its
/// requested file bit-for-bit from its own cache and the shared signal.
class CachingScheme {
public:
    virtual ~CachingScheme() = default;

    [[nodiscard]] int files() const noexcept { return files_; }
    [[nodiscard]] int users() const noexcept { return users_; }

    [[nodiscard]] virtual std::string name() const = 0;
    /// Cache size per user, in files.
    [[nodiscard]] virtual Rational memory() const = 0;
    /// Signal length over the worst demand, in files.
    [[nodiscard]] virtual Rational worst_case_rate() const = 0;
    /// File lengths must be a multiple of this many bits.
    [[nodiscard]] virtual std::uint64_t granularity() const = 0;

    [[nodiscard]] virtual std::vector<CacheContent> place(const FileLibrary& library) const = 0;
    [[nodiscard]] virtual DeliverySignal deliver(const FileLibrary& library,
                                                 const DemandVector& demand) const = 0;
    [[nodiscard]] virtual BitBuffer decode(int user, const CacheContent& cache,
                                           const DeliverySignal& signal, const DemandVector& demand,
                                           std::size_t file_bits) const = 0;

protected:
    CachingScheme(int files, int users);

    /// Throws on file-count mismatch or a length that violates granularity().
    void check_library(const FileLibrary& library) const;
    void check_demand(const DemandVector& demand) const;

private:
    int files_;
    int users_;
};

/// Subset placement with XOR multicast delivery at M = tN/K, 1 <= t <= K-1.
class CodedScheme final : public CachingScheme {
public:
    CodedScheme(int files, int users, int t);

    [[nodiscard]] int t() const noexcept { return t_; }
    [[nodiscard]] std::string name() const override;
    [[nodiscard]] Rational memory() const override;
    [[nodiscard]] Rational worst_case_rate() const override;
    [[nodiscard]] std::uint64_t granularity() const override;
    [[nodiscard]] std::vector<CacheContent> place(const FileLibrary& library) const override;
    [[nodiscard]] DeliverySignal deliver(const FileLibrary& library, const DemandVector& demand) const override;
    [[nodiscard]] BitBuffer decode(int user, const CacheContent& cache, const DeliverySignal& signal,
                                   const DemandVector& demand, std::size_t file_bits) const override;

private:
    int t_;
};

/// M = 0: empty caches, every distinct requested file sent in full.
class BroadcastScheme final : public CachingScheme {
public:
    BroadcastScheme(int files, int users);

    [[nodiscard]] std::string name() const override { return "broadcast"; }
    [[nodiscard]] Rational memory() const override { return Rational{0}; }
    [[nodiscard]] Rational worst_case_rate() const override;
    [[nodiscard]] std::uint64_t granularity() const override { return 1; }
    [[nodiscard]] std::vector<CacheContent> place(const FileLibrary& library) const override;
    [[nodiscard]] DeliverySignal deliver(const FileLibrary& library, const DemandVector& demand) const override;
    [[nodiscard]] BitBuffer decode(int user, const CacheContent& cache, const DeliverySignal& signal,
                                   const DemandVector& demand, std::size_t file_bits) const override;
};

/// Every user caches the same leading M/N of each file; the server sends
/// the remainder of each distinct requested file.
class UncodedScheme final : public CachingScheme {
public:
    UncodedScheme(int files, int users, Rational memory);

    [[nodiscard]] std::string name() const override;
    [[nodiscard]] Rational memory() const override { return memory_; }
    [[nodiscard]] Rational worst_case_rate() const override;
    [[nodiscard]] std::uint64_t granularity() const override;
    [[nodiscard]] std::vector<CacheContent> place(const FileLibrary& library) const override;
    [[nodiscard]] DeliverySignal deliver(const FileLibrary& library, const DemandVector& demand) const override;
    [[nodiscard]] BitBuffer decode(int user, const CacheContent& cache, const DeliverySignal& signal,
                                   const DemandVector& demand, std::size_t file_bits) const override;

private:
    [[nodiscard]] std::size_t prefix_bits(std::size_t file_bits) const;

    Rational memory_;
};

/// Coded placement for two files and two users at M = 1/2, rate 1.
///
/// Halves A = (A_1, A_2), B = (B_1, B_2); Z_1 = A_1^B_1, Z_2 = A_2^B_2.
/// Distinct demands (d_1, d_2) are served with (W_{d_2,1}, W_{d_1,2}),
/// i.e. (B_1, A_2) for (1,2); equal demands (n, n) with (W_{n,1}, W_{n,2}).
class Appendix2x2Scheme final : public CachingScheme {
public:
    Appendix2x2Scheme();

    [[nodiscard]] std::string name() const override { return "appendix-2x2"; }
    [[nodiscard]] Rational memory() const override { return Rational{1, 2}; }
    [[nodiscard]] Rational worst_case_rate() const override { return Rational{1}; }
    [[nodiscard]] std::uint64_t granularity() const override { return 2; }
    [[nodiscard]] std::vector<CacheContent> place(const FileLibrary& library) const override;
    [[nodiscard]] DeliverySignal deliver(const FileLibrary& library, const DemandVector& demand) const override;
    [[nodiscard]] BitBuffer decode(int user, const CacheContent& cache, const DeliverySignal& signal,
                                   const DemandVector& demand, std::size_t file_bits) const override;
};

/// Splits every file into an alpha portion served by the left envelope
/// vertex's scheme and a (1 - alpha) portion served by the right one.
class MemorySharingScheme final : public CachingScheme {
public:
    /// `memory` must lie strictly between two adjacent vertices of `envelope`.
    MemorySharingScheme(const AchievableEnvelope& envelope, Rational memory);

    [[nodiscard]] const Rational& alpha() const noexcept { return alpha_; }
    [[nodiscard]] const CachingScheme& left() const noexcept { return *left_; }
    [[nodiscard]] const CachingScheme& right() const noexcept { return *right_; }

    [[nodiscard]] std::string name() const override;
    [[nodiscard]] Rational memory() const override { return memory_; }
    [[nodiscard]] Rational worst_case_rate() const override;
    [[nodiscard]] std::uint64_t granularity() const override { return granularity_; }
    [[nodiscard]] std::vector<CacheContent> place(const FileLibrary& library) const override;
    [[nodiscard]] DeliverySignal deliver(const FileLibrary& library, const DemandVector& demand) const override;
    [[nodiscard]] BitBuffer decode(int user, const CacheContent& cache, const DeliverySignal& signal,
                                   const DemandVector& demand, std::size_t file_bits) const override;

    /// Bits of each file handled by the left vertex's scheme.
    [[nodiscard]] std::size_t left_bits(std::size_t file_bits) const;

private:
    Rational memory_;
    Rational alpha_;
    std::unique_ptr<CachingScheme> left_;
    std::unique_ptr<CachingScheme> right_;
    std::uint64_t granularity_ = 1;
};

enum class SchemeChoice {
    automatic,     ///< envelope vertex scheme, or memory sharing between vertices
    coded,         ///< CodedScheme; requires MK/N integral in 1..K-1
    uncoded,       ///< UncodedScheme at M
    appendix_2x2,  ///< Appendix2x2Scheme; requires N = K = 2, M = 1/2
};

[[nodiscard]] std::unique_ptr<CachingScheme> make_vertex_scheme(int files, int users,
                                                                const EnvelopeVertex& vertex);
[[nodiscard]] std::unique_ptr<CachingScheme> make_scheme(const SchemeParameters& params,
                                                         SchemeChoice choice = SchemeChoice::automatic);

// ---------------------------------------------------------------------------
// Direct entry points

[[nodiscard]] std::vector<CacheContent> coded_placement(const FileLibrary& library, int users, int t);
[[nodiscard]] DeliverySignal coded_delivery(const FileLibrary& library, const DemandVector& demand, int t);
/// Decodes with the subfile size taken from the cache manifest.
[[nodiscard]] BitBuffer coded_decode(int user, const CacheContent& cache, const DeliverySignal& signal,
                                     const DemandVector& demand, const SchemeParameters& params);

[[nodiscard]] DeliverySignal broadcast_delivery_m0(const FileLibrary& library, const DemandVector& demand);
[[nodiscard]] SchemeRun uncoded_scheme(const FileLibrary& library, const DemandVector& demand,
                                       const Rational& memory);
[[nodiscard]] SchemeRun memory_sharing_scheme(const FileLibrary& library, const DemandVector& demand,
                                              const Rational& memory);
[[nodiscard]] SchemeRun appendix_2x2_scheme(const FileLibrary& library, const DemandVector& demand);

}  // namespace coded_caching
