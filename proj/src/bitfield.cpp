#include "cliqueowf/bitfield.hpp"

#include "cliqueowf/error.hpp"

#include <array>
#include <bit>

namespace cliqueowf {

namespace {

int hex_value(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    return -1;
}

std::uint8_t pad_mask(std::uint64_t m) {
    const unsigned used = static_cast<unsigned>(m % 8);
    return used == 0 ? std::uint8_t{0} : static_cast<std::uint8_t>(0xFFU << used);
}

}  // namespace

BitArray BitArray::zeroed(std::uint64_t m) {
    if (m < 1) {
        throw Error(ErrorCode::InvalidArgument, "bit array length must be at least 1");
    }
    return BitArray(m);
}

BitArray BitArray::from_hex(std::uint64_t m, std::string_view hex) {
    BitArray arr = zeroed(m);
    if (hex.size() != arr.bytes_.size() * 2) {
        throw Error(ErrorCode::ParseError, "hex payload length does not match m");
    }
    for (std::size_t i = 0; i < arr.bytes_.size(); ++i) {
        const int hi = hex_value(hex[2 * i]);
        const int lo = hex_value(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) {
            throw Error(ErrorCode::ParseError, "bit payload must be lowercase hex");
        }
        arr.bytes_[i] = static_cast<std::uint8_t>(hi * 16 + lo);
    }
    if ((arr.bytes_.back() & pad_mask(m)) != 0) {
        throw Error(ErrorCode::ParseError, "pad bits beyond m are set");
    }
    return arr;
}

void BitArray::check_index(std::uint64_t j) const {
    if (j < 1 || j > m_) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "bit " + std::to_string(j) + " outside [1, " + std::to_string(m_) + "]");
    }
}

bool BitArray::test(std::uint64_t j) const {
    check_index(j);
    return ((bytes_[(j - 1) / 8] >> ((j - 1) % 8)) & 1U) != 0;
}

BitArray& BitArray::set(std::uint64_t j) {
    check_index(j);
    bytes_[(j - 1) / 8] |= static_cast<std::uint8_t>(1U << ((j - 1) % 8));
    return *this;
}

BitArray BitArray::with_bit(std::uint64_t j) const {
    BitArray copy = *this;
    copy.set(j);
    return copy;
}

std::uint64_t BitArray::popcount() const noexcept {
    std::uint64_t total = 0;
    for (const std::uint8_t byte : bytes_) {
        total += static_cast<std::uint64_t>(std::popcount(byte));
    }
    return total;
}

std::string BitArray::to_hex() const {
    static constexpr std::array<char, 16> digits{'0', '1', '2', '3', '4', '5', '6', '7',
                                                 '8', '9', 'a', 'b', 'c', 'd', 'e', 'f'};
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (const std::uint8_t byte : bytes_) {
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 0x0F]);
    }
    return out;
}

BitArray& BitArray::operator^=(const BitArray& other) {
    if (other.m_ != m_) {
        throw Error(ErrorCode::LengthMismatch, "xor of arrays with different lengths");
    }
    for (std::size_t i = 0; i < bytes_.size(); ++i) {
        bytes_[i] ^= other.bytes_[i];
    }
    return *this;
}

}  // namespace cliqueowf
