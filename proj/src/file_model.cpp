#include "coded_caching/file_model.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <stdexcept>

#include "coded_caching/errors.hpp"

namespace coded_caching {

namespace {

constexpr std::array<char, 4> kMagic = {'C', 'C', 'F', '1'};

void put_u64(std::ostream& out, std::uint64_t value) {
    std::array<char, 8> buf{};
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((value >> (8 * i)) & 0xFF);
    out.write(buf.data(), buf.size());
}

std::uint64_t get_u64(std::istream& in) {
    std::array<unsigned char, 8> buf{};
    if (!in.read(reinterpret_cast<char*>(buf.data()), buf.size()))
        throw InvalidParameter("CCF1: truncated header");
    std::uint64_t value = 0;
    for (int i = 7; i >= 0; --i) value = (value << 8) | buf[i];
    return value;
}

}  // namespace

FileLibrary::FileLibrary(std::vector<BitBuffer> files, std::size_t original_bits)
    : files_(std::move(files)), original_bits_(original_bits) {
    if (files_.empty()) throw InvalidParameter("library needs at least one file");
    file_bits_ = files_.front().size();
    for (const auto& f : files_)
        if (f.size() != file_bits_) throw InvalidParameter("library files differ in length");
    if (original_bits_ > file_bits_) throw InvalidParameter("original_bits exceeds file length");
}

const BitBuffer& FileLibrary::file(int n) const {
    if (n < 1 || n > file_count())
        throw InvalidParameter("file index " + std::to_string(n) + " outside 1.." +
                               std::to_string(file_count()));
    return files_[n - 1];
}

FileLibrary generate_library(int files, std::size_t file_bits, std::uint64_t seed) {
    if (files < 1) throw InvalidParameter("file count must be positive");
    std::mt19937_64 engine(seed);
    std::vector<BitBuffer> out;
    out.reserve(files);
    std::vector<std::uint8_t> bytes((file_bits + 7) / 8);
    for (int n = 0; n < files; ++n) {
        for (std::size_t i = 0; i < bytes.size(); i += 8) {
            std::uint64_t word = engine();
            for (std::size_t j = 0; j < 8 && i + j < bytes.size(); ++j)
                bytes[i + j] = static_cast<std::uint8_t>(word >> (8 * j));
        }
        out.push_back(BitBuffer::from_bytes(bytes, file_bits));
    }
    return FileLibrary{std::move(out), file_bits};
}

FileLibrary pad_for_split(const FileLibrary& library, std::uint64_t parts) {
    if (parts == 0) throw InvalidParameter("parts must be positive");
    const std::size_t bits = library.file_bits();
    const std::size_t padded = (bits + parts - 1) / parts * parts;
    if (padded == bits) return library;
    std::vector<BitBuffer> files;
    files.reserve(library.file_count());
    for (const auto& f : library.files()) files.push_back(f.resized(padded));
    return FileLibrary{std::move(files), library.original_bits()};
}

FileLibrary slice_library(const FileLibrary& library, std::size_t offset, std::size_t bits) {
    std::vector<BitBuffer> files;
    files.reserve(library.file_count());
    for (const auto& f : library.files()) files.push_back(f.slice(offset, bits));
    return FileLibrary{std::move(files), bits};
}

namespace {

std::size_t subfile_bits(const FileLibrary& library, int subset_size, int users) {
    if (subset_size < 0 || subset_size > users) throw InvalidParameter("subset size outside 0..K");
    const std::uint64_t parts = binomial(users, subset_size);
    if (library.file_bits() % parts != 0)
        throw GranularityError("file length " + std::to_string(library.file_bits()) +
                                   " not divisible into " + std::to_string(parts) + " subfiles",
                               parts);
    return library.file_bits() / parts;
}

}  // namespace

std::vector<Subfile> split_file(const FileLibrary& library, int file, int subset_size, int users) {
    const std::size_t block = subfile_bits(library, subset_size, users);
    const BitBuffer& whole = library.file(file);
    std::vector<Subfile> out;
    std::size_t offset = 0;
    for (auto& subset : enumerate_subsets(users, subset_size)) {
        out.push_back({std::move(subset), whole.slice(offset, block)});
        offset += block;
    }
    return out;
}

BitBuffer subfile(const FileLibrary& library, const SubfileId& id, int users) {
    const std::size_t block = subfile_bits(library, id.subset.cardinality(), users);
    return library.file(id.file).slice(subset_rank(id.subset, users) * block, block);
}

BitBuffer reassemble(const std::vector<Subfile>& parts) {
    BitBuffer out;
    for (const auto& p : parts) out.append(p.bits);
    return out;
}

void write_library(const FileLibrary& library, std::ostream& out) {
    out.write(kMagic.data(), kMagic.size());
    put_u64(out, static_cast<std::uint64_t>(library.file_count()));
    put_u64(out, library.file_bits());
    for (const auto& f : library.files()) {
        auto bytes = f.bytes();
        out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    }
    if (!out) throw std::runtime_error("CCF1: write failed");
}

FileLibrary read_library(std::istream& in) {
    std::array<char, 4> magic{};
    if (!in.read(magic.data(), magic.size()) || magic != kMagic)
        throw InvalidParameter("CCF1: bad magic");
    const std::uint64_t files = get_u64(in);
    const std::uint64_t bits = get_u64(in);
    if (files == 0 || files > (1u << 20)) throw InvalidParameter("CCF1: implausible file count");
    std::vector<BitBuffer> out;
    std::vector<std::uint8_t> bytes((bits + 7) / 8);
    for (std::uint64_t n = 0; n < files; ++n) {
        if (!in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size())))
            throw InvalidParameter("CCF1: truncated payload");
        out.push_back(BitBuffer::from_bytes(bytes, bits));
    }
    return FileLibrary{std::move(out), bits};
}

void save_library(const FileLibrary& library, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_library(library, out);
}

FileLibrary load_library(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidParameter("cannot open " + path);
    return read_library(in);
}

}  // namespace coded_caching
