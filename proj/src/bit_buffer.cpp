#include "coded_caching/bit_buffer.hpp"

#include <algorithm>
#include <stdexcept>

namespace coded_caching {

namespace {

std::size_t bytes_for(std::size_t bits) { return (bits + 7) / 8; }

}  // namespace

BitBuffer::BitBuffer(std::size_t bits) : bytes_(bytes_for(bits), 0), bits_(bits) {}

BitBuffer BitBuffer::from_bytes(std::span<const std::uint8_t> bytes, std::size_t bits) {
    if (bytes.size() < bytes_for(bits)) throw std::invalid_argument("not enough bytes for bit length");
    BitBuffer out;
    out.bits_ = bits;
    out.bytes_.assign(bytes.begin(), bytes.begin() + bytes_for(bits));
    out.clear_tail();
    return out;
}

void BitBuffer::clear_tail() noexcept {
    if (bits_ % 8 != 0) bytes_.back() &= static_cast<std::uint8_t>(0xFF00u >> (bits_ % 8));
}

bool BitBuffer::bit(std::size_t index) const {
    if (index >= bits_) throw std::out_of_range("bit index out of range");
    return (bytes_[index / 8] >> (7 - index % 8)) & 1u;
}

void BitBuffer::set_bit(std::size_t index, bool value) {
    if (index >= bits_) throw std::out_of_range("bit index out of range");
    const auto mask = static_cast<std::uint8_t>(0x80u >> (index % 8));
    if (value)
        bytes_[index / 8] |= mask;
    else
        bytes_[index / 8] &= static_cast<std::uint8_t>(~mask);
}

BitBuffer BitBuffer::slice(std::size_t offset, std::size_t length) const {
    if (offset > bits_ || length > bits_ - offset) throw std::out_of_range("slice out of range");
    BitBuffer out(length);
    const std::size_t first = offset / 8;
    const unsigned shift = offset % 8;
    for (std::size_t j = 0; j < out.bytes_.size(); ++j) {
        unsigned value = static_cast<unsigned>(bytes_[first + j]) << shift;
        if (shift != 0 && first + j + 1 < bytes_.size()) value |= bytes_[first + j + 1] >> (8 - shift);
        out.bytes_[j] = static_cast<std::uint8_t>(value);
    }
    out.clear_tail();
    return out;
}

void BitBuffer::append(const BitBuffer& tail) {
    const unsigned shift = bits_ % 8;
    if (shift == 0) {
        bytes_.insert(bytes_.end(), tail.bytes_.begin(), tail.bytes_.end());
    } else {
        bytes_.reserve(bytes_for(bits_ + tail.bits_));
        for (std::uint8_t b : tail.bytes_) {
            bytes_.back() |= static_cast<std::uint8_t>(b >> shift);
            bytes_.push_back(static_cast<std::uint8_t>(b << (8 - shift)));
        }
    }
    bits_ += tail.bits_;
    bytes_.resize(bytes_for(bits_));
    clear_tail();
}

BitBuffer BitBuffer::resized(std::size_t bits) const {
    BitBuffer out = *this;
    out.bits_ = bits;
    out.bytes_.resize(bytes_for(bits), 0);
    out.clear_tail();
    return out;
}

BitBuffer& BitBuffer::operator^=(const BitBuffer& rhs) {
    if (rhs.bits_ != bits_) throw std::invalid_argument("XOR of buffers with different lengths");
    std::transform(bytes_.begin(), bytes_.end(), rhs.bytes_.begin(), bytes_.begin(),
                   [](std::uint8_t a, std::uint8_t b) { return static_cast<std::uint8_t>(a ^ b); });
    return *this;
}

std::string BitBuffer::hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (std::uint8_t b : bytes_) {
        out += digits[b >> 4];
        out += digits[b & 0xF];
    }
    return out;
}

BitBuffer concatenate(std::span<const BitBuffer> parts) {
    BitBuffer out;
    for (const auto& part : parts) out.append(part);
    return out;
}

}  // namespace coded_caching
