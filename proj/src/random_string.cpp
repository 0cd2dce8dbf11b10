#include "cliqueowf/random_string.hpp"

#include "cliqueowf/error.hpp"

#include <array>
#include <string>

namespace cliqueowf {

namespace {

int hex_digit(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    return -1;
}

}  // namespace

RandomString::RandomString(std::vector<std::uint8_t> bytes)
    : bytes_(std::move(bytes)), bit_length_(bytes_.size() * 8) {}

RandomString::RandomString(std::vector<std::uint8_t> bytes, std::size_t bit_length)
    : bytes_(std::move(bytes)), bit_length_(bit_length) {
    if (bit_length_ > bytes_.size() * 8) {
        throw Error(ErrorCode::InvalidArgument, "bit length exceeds byte payload");
    }
}

RandomString RandomString::from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) {
        throw Error(ErrorCode::ParseError, "hex string must have an even number of digits");
    }
    std::vector<std::uint8_t> bytes;
    bytes.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        const int hi = hex_digit(hex[i]);
        const int lo = hex_digit(hex[i + 1]);
        if (hi < 0 || lo < 0) {
            throw Error(ErrorCode::ParseError, "invalid hex digit");
        }
        bytes.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
    }
    return RandomString(std::move(bytes));
}

RandomString RandomString::from_words(std::span<const std::uint64_t> words, unsigned width) {
    if (width == 0 || width > 64) {
        throw Error(ErrorCode::InvalidArgument, "word width must be in [1, 64]");
    }
    const std::size_t total = words.size() * width;
    std::vector<std::uint8_t> bytes((total + 7) / 8, 0);
    std::size_t pos = 0;
    for (const std::uint64_t word : words) {
        for (unsigned i = width; i-- > 0; ++pos) {
            if ((word >> i) & 1U) {
                bytes[pos / 8] |= static_cast<std::uint8_t>(0x80U >> (pos % 8));
            }
        }
    }
    return RandomString(std::move(bytes), total);
}

std::string RandomString::to_hex() const {
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

void RandomString::require(std::size_t offset, std::size_t count) const {
    if (offset > bit_length_ || count > bit_length_ - offset) {
        throw Error(ErrorCode::StringTooShort,
                    "need " + std::to_string(offset + count) + " bits, have " +
                        std::to_string(bit_length_));
    }
}

bool RandomString::bit(std::size_t index) const {
    require(index, 1);
    return ((bytes_[index / 8] >> (7 - index % 8)) & 1U) != 0;
}

std::uint64_t RandomString::read_u64(std::size_t offset, unsigned count) const {
    if (count > 64) {
        throw Error(ErrorCode::InvalidArgument, "read_u64 reads at most 64 bits");
    }
    require(offset, count);
    std::uint64_t value = 0;
    for (unsigned i = 0; i < count; ++i) {
        const std::size_t pos = offset + i;
        value = (value << 1) | ((bytes_[pos / 8] >> (7 - pos % 8)) & 1U);
    }
    return value;
}

BigInt RandomString::read_big(std::size_t offset, std::size_t count) const {
    require(offset, count);
    BigInt value = 0;
    std::size_t pos = offset;
    std::size_t remaining = count;
    while (remaining > 0) {
        const unsigned chunk = remaining >= 64 ? 64U : static_cast<unsigned>(remaining);
        value <<= chunk;
        value |= read_u64(pos, chunk);
        pos += chunk;
        remaining -= chunk;
    }
    return value;
}

}  // namespace cliqueowf
