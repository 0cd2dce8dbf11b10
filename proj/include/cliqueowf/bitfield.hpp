#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cliqueowf {

/// Exact ratio popcount / m.
struct Density {
    std::uint64_t ones = 0;
    std::uint64_t total = 1;

    [[nodiscard]] double value() const noexcept {
        return static_cast<double>(ones) / static_cast<double>(total);
    }
};

/// Fixed-length Bloom filter storage. Bits are 1-based; bit j lives in byte
/// (j-1)/8 at position (j-1)%8, least significant first. Pad bits stay zero.
class BitArray {
public:
    static BitArray zeroed(std::uint64_t m);

    /// Parses the lowercase hex payload of an m-bit array; rejects set pad bits.
    static BitArray from_hex(std::uint64_t m, std::string_view hex);

    [[nodiscard]] std::uint64_t size() const noexcept { return m_; }
    [[nodiscard]] std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }

    [[nodiscard]] bool test(std::uint64_t j) const;
    BitArray& set(std::uint64_t j);
    [[nodiscard]] BitArray with_bit(std::uint64_t j) const;

    [[nodiscard]] std::uint64_t popcount() const noexcept;
    [[nodiscard]] Density density() const noexcept { return {popcount(), m_}; }

    [[nodiscard]] std::string to_hex() const;

    BitArray& operator^=(const BitArray& other);
    friend BitArray operator^(BitArray lhs, const BitArray& rhs) { return lhs ^= rhs; }

    friend bool operator==(const BitArray&, const BitArray&) = default;

private:
    explicit BitArray(std::uint64_t m) : m_(m), bytes_((m + 7) / 8, 0) {}

    void check_index(std::uint64_t j) const;

    std::uint64_t m_ = 0;
    std::vector<std::uint8_t> bytes_;
};

}  // namespace cliqueowf
