#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coded_caching {

/// A caller-supplied argument lies outside the documented domain.
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The file length cannot be split as the scheme requires.
class GranularityError : public std::invalid_argument {
public:
    GranularityError(const std::string& what, std::uint64_t required_multiple)
        : std::invalid_argument(what + " (file_bits must be a multiple of " +
                                std::to_string(required_multiple) + ", e.g. F=" +
                                std::to_string(required_multiple) + ")"),
          required_multiple_(required_multiple) {}

    [[nodiscard]] std::uint64_t required_multiple() const noexcept { return required_multiple_; }

private:
    std::uint64_t required_multiple_;
};

/// A cache manifest or signal label does not match what the decoder expects.
/// The link is error-free, so this always indicates a bug upstream.
class DecodeIntegrityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace coded_caching
