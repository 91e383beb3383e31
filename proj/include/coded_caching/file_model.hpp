#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "coded_caching/bit_buffer.hpp"
#include "coded_caching/combinatorics.hpp"

namespace coded_caching {

/// Subfile W_{n,T}: the piece of file n cached at exactly the users in T.
struct SubfileId {
    int file = 1;
    SubsetIndex subset;

    friend bool operator==(const SubfileId&, const SubfileId&) = default;
    friend auto operator<=>(const SubfileId&, const SubfileId&) = default;
};

/// The server database: N files of identical bit length.
///
/// Immutable after construction. `original_bits` records the length before
/// zero padding; every bit past it is zero.
class FileLibrary {
public:
    FileLibrary(std::vector<BitBuffer> files, std::size_t original_bits);

    [[nodiscard]] int file_count() const noexcept { return static_cast<int>(files_.size()); }
    [[nodiscard]] std::size_t file_bits() const noexcept { return file_bits_; }
    [[nodiscard]] std::size_t original_bits() const noexcept { return original_bits_; }

    /// 1-based file access.
    [[nodiscard]] const BitBuffer& file(int n) const;
    [[nodiscard]] const std::vector<BitBuffer>& files() const noexcept { return files_; }

    friend bool operator==(const FileLibrary&, const FileLibrary&) = default;

private:
    std::vector<BitBuffer> files_;
    std::size_t file_bits_ = 0;
    std::size_t original_bits_ = 0;
};

/// N files of pseudorandom bits, fully determined by `seed` (mt19937_64).
[[nodiscard]] FileLibrary generate_library(int files, std::size_t file_bits, std::uint64_t seed);

/// Zero-pads every file to the smallest multiple of `parts`.
[[nodiscard]] FileLibrary pad_for_split(const FileLibrary& library, std::uint64_t parts);

/// Bit range [offset, offset + bits) of every file, as a library of its own.
[[nodiscard]] FileLibrary slice_library(const FileLibrary& library, std::size_t offset, std::size_t bits);

struct Subfile {
    SubsetIndex subset;
    BitBuffer bits;
};

/// Splits file n into C(K,t) equal contiguous blocks, in subset rank order.
/// Throws GranularityError unless C(K,t) divides the file length.
[[nodiscard]] std::vector<Subfile> split_file(const FileLibrary& library, int file, int subset_size,
                                              int users);

/// The single block W_{n,T} of split_file, without materialising the rest.
[[nodiscard]] BitBuffer subfile(const FileLibrary& library, const SubfileId& id, int users);

/// Concatenation of subfiles in the order given.
[[nodiscard]] BitBuffer reassemble(const std::vector<Subfile>& parts);

/// CCF1 container: "CCF1", N and F as little-endian u64, then each file as
/// ceil(F/8) bytes, most significant bit first.
void write_library(const FileLibrary& library, std::ostream& out);
[[nodiscard]] FileLibrary read_library(std::istream& in);

void save_library(const FileLibrary& library, const std::string& path);
[[nodiscard]] FileLibrary load_library(const std::string& path);

}  // namespace coded_caching
