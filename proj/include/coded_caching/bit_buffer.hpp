#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace coded_caching {

/// Bit-exact buffer. Bit i lives in byte i/8 at position 7 - i%8
/// (most significant bit first); bits past size() in the last byte are zero.
class BitBuffer {
public:
    BitBuffer() = default;
    explicit BitBuffer(std::size_t bits);

    /// Takes the first `bits` bits of `bytes`; trailing bits are cleared.
    static BitBuffer from_bytes(std::span<const std::uint8_t> bytes, std::size_t bits);

    [[nodiscard]] std::size_t size() const noexcept { return bits_; }
    [[nodiscard]] bool empty() const noexcept { return bits_ == 0; }
    [[nodiscard]] std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }

    [[nodiscard]] bool bit(std::size_t index) const;
    void set_bit(std::size_t index, bool value);

    [[nodiscard]] BitBuffer slice(std::size_t offset, std::size_t length) const;
    void append(const BitBuffer& tail);

    /// Copy extended with zero bits (or truncated) to `bits`.
    [[nodiscard]] BitBuffer resized(std::size_t bits) const;

    /// Bitwise XOR; both operands must have the same length.
    BitBuffer& operator^=(const BitBuffer& rhs);
    friend BitBuffer operator^(BitBuffer lhs, const BitBuffer& rhs) { return lhs ^= rhs; }

    /// Lowercase hex of the byte storage, zero-padded to a whole byte.
    [[nodiscard]] std::string hex() const;

    friend bool operator==(const BitBuffer&, const BitBuffer&) = default;

private:
    void clear_tail() noexcept;

    std::vector<std::uint8_t> bytes_;
    std::size_t bits_ = 0;
};

/// Concatenation of `parts` in order.
[[nodiscard]] BitBuffer concatenate(std::span<const BitBuffer> parts);

}  // namespace coded_caching
