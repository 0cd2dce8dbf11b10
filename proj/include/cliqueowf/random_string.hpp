#pragma once

#include "cliqueowf/bigint.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cliqueowf {

/// Caller-supplied input bits. Bits are consumed MSB-first within each byte,
/// bytes in order; multi-bit reads are big-endian integers.
class RandomString {
public:
    RandomString() = default;
    explicit RandomString(std::vector<std::uint8_t> bytes);
    RandomString(std::vector<std::uint8_t> bytes, std::size_t bit_length);

    static RandomString from_hex(std::string_view hex);

    /// Concatenates `words`, each contributing its low `width` bits MSB-first.
    static RandomString from_words(std::span<const std::uint64_t> words, unsigned width);

    [[nodiscard]] std::size_t size() const noexcept { return bit_length_; }
    [[nodiscard]] std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }
    [[nodiscard]] std::string to_hex() const;

    [[nodiscard]] bool bit(std::size_t index) const;
    [[nodiscard]] std::uint64_t read_u64(std::size_t offset, unsigned count) const;
    [[nodiscard]] BigInt read_big(std::size_t offset, std::size_t count) const;

    friend bool operator==(const RandomString&, const RandomString&) = default;

private:
    void require(std::size_t offset, std::size_t count) const;

    std::vector<std::uint8_t> bytes_;
    std::size_t bit_length_ = 0;
};

}  // namespace cliqueowf
