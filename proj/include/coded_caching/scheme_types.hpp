#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "coded_caching/bit_buffer.hpp"
#include "coded_caching/file_model.hpp"
#include "coded_caching/rational.hpp"

namespace coded_caching {

/// (N, K, M) for one run. M is in units of files.
struct SchemeParameters {
    int files = 1;
    int users = 1;
    Rational memory;

    /// MK/N when it is an integer.
    [[nodiscard]] std::optional<int> t() const;
};

/// File requested by each user; repeats allowed.
class DemandVector {
public:
    DemandVector(std::vector<int> demands, int files);

    [[nodiscard]] const std::vector<int>& demands() const noexcept { return demands_; }
    [[nodiscard]] int users() const noexcept { return static_cast<int>(demands_.size()); }
    [[nodiscard]] int files() const noexcept { return files_; }

    /// File requested by 1-based `user`.
    [[nodiscard]] int of(int user) const;

    /// Distinct requested files, ascending.
    [[nodiscard]] std::vector<int> distinct() const;

    /// "(1,2,3)".
    [[nodiscard]] std::string str() const;

    friend bool operator==(const DemandVector&, const DemandVector&) = default;

private:
    std::vector<int> demands_;
    int files_;
};

// ---------------------------------------------------------------------------
// Delivery signal

/// XOR of W_{d_s, S\{s}} over s in S.
struct MulticastLabel {
    SubsetIndex users;
    friend bool operator==(const MulticastLabel&, const MulticastLabel&) = default;
};

/// An uncached file, or its uncached remainder.
struct FileLabel {
    int file = 1;
    friend bool operator==(const FileLabel&, const FileLabel&) = default;
};

/// One plain subfile.
struct SubfileLabel {
    SubfileId id;
    friend bool operator==(const SubfileLabel&, const SubfileLabel&) = default;
};

struct BlockLabel {
    std::variant<MulticastLabel, FileLabel, SubfileLabel> kind;
    /// Set when the block belongs to one portion of a memory-shared run.
    std::optional<int> segment;

    /// `S={1,2}`, `file=3` or `W(1,{2})`, prefixed with `seg0:` when segmented.
    [[nodiscard]] std::string str() const;

    friend bool operator==(const BlockLabel&, const BlockLabel&) = default;
};

struct SignalBlock {
    BlockLabel label;
    BitBuffer payload;

    friend bool operator==(const SignalBlock&, const SignalBlock&) = default;
};

/// X_{(d_1..d_K)}: the ordered blocks sent over the shared link.
struct DeliverySignal {
    std::vector<SignalBlock> blocks;

    [[nodiscard]] std::size_t total_bits() const noexcept;

    /// One line per block: `label<TAB>hex`.
    [[nodiscard]] std::string serialize() const;

    friend bool operator==(const DeliverySignal&, const DeliverySignal&) = default;
};

// ---------------------------------------------------------------------------
// Cache contents

/// XOR of the listed subfiles; a single entry is an uncoded subfile.
struct CachedCombination {
    std::vector<SubfileId> subfiles;
    friend bool operator==(const CachedCombination&, const CachedCombination&) = default;
};

/// The leading `bits` of a file.
struct CachedPrefix {
    int file = 1;
    friend bool operator==(const CachedPrefix&, const CachedPrefix&) = default;
};

struct ManifestEntry {
    std::variant<CachedCombination, CachedPrefix> content;
    std::size_t offset = 0;  ///< into CacheContent::payload
    std::size_t bits = 0;
    std::optional<int> segment;

    friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

/// Z_k with a manifest describing every bit range of the payload.
struct CacheContent {
    int user = 1;
    BitBuffer payload;
    std::vector<ManifestEntry> manifest;

    /// Appends `bits` to the payload and records it in the manifest.
    void add(std::variant<CachedCombination, CachedPrefix> content, const BitBuffer& bits,
             std::optional<int> segment = std::nullopt);

    [[nodiscard]] BitBuffer entry_bits(const ManifestEntry& entry) const {
        return payload.slice(entry.offset, entry.bits);
    }

    friend bool operator==(const CacheContent&, const CacheContent&) = default;
};

/// Caches and signal of one complete run.
struct SchemeRun {
    std::vector<CacheContent> caches;
    DeliverySignal signal;
};

/// Short subfile name: `A_{12}` for small N and K, `W3_{1,10}` otherwise.
[[nodiscard]] std::string subfile_name(const SubfileId& id, int files, int users);

}  // namespace coded_caching
