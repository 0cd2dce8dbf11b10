#include "cliqueowf/instance_format.hpp"

#include "cliqueowf/error.hpp"

#include <fmt/format.h>

#include <charconv>
#include <string>
#include <vector>

namespace cliqueowf {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t end = text.find(sep, start);
        if (end == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, end - start));
        start = end + 1;
    }
}

std::vector<std::string_view> lines_of(std::string_view text) {
    std::vector<std::string_view> lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    return lines;
}

std::uint64_t parse_uint(std::string_view token, int base = 10) {
    std::uint64_t value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value, base);
    if (token.empty() || ec != std::errc{} || ptr != end) {
        fail("expected an unsigned integer, got '" + std::string(token) + "'");
    }
    return value;
}

std::string_view field(std::string_view token, std::string_view key) {
    if (token.size() <= key.size() || token.substr(0, key.size()) != key || token[key.size()] != '=') {
        fail("expected '" + std::string(key) + "=...', got '" + std::string(token) + "'");
    }
    return token.substr(key.size() + 1);
}

void expect_tokens(const std::vector<std::string_view>& tokens, std::size_t count, std::string_view line) {
    if (tokens.size() != count) {
        fail("malformed line '" + std::string(line) + "'");
    }
}

void expect_index(std::string_view token, std::size_t expected) {
    if (parse_uint(token) != expected) {
        fail("expected index " + std::to_string(expected) + ", got '" + std::string(token) + "'");
    }
}

std::string spec_line(std::size_t idx, const HashSpec& spec) {
    return std::visit(
        [idx](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CWHashSpec>) {
                return fmt::format("H {} CW a={} b={} p={} m={}\n", idx, s.a, s.b, s.p, s.m);
            } else if constexpr (std::is_same_v<T, ToeplitzHashSpec>) {
                const unsigned digits = (2 * s.c + 3) / 4;
                return fmt::format("H {} TP r1={:0{}x} c={} m={}\n", idx, s.r1, digits, s.c, s.m);
            } else {
                return fmt::format("H {} PL k={} p={} m={} coeffs={}\n", idx, s.k(), s.p, s.m,
                                   fmt::join(s.coeffs, ","));
            }
        },
        spec);
}

HashSpec parse_spec(const std::vector<std::string_view>& t, std::string_view line) {
    if (t.size() < 3) {
        fail("malformed hash line '" + std::string(line) + "'");
    }
    if (t[2] == "CW") {
        expect_tokens(t, 7, line);
        return make_cw(parse_uint(field(t[3], "a")), parse_uint(field(t[4], "b")),
                       parse_uint(field(t[5], "p")), parse_uint(field(t[6], "m")));
    }
    if (t[2] == "TP") {
        expect_tokens(t, 6, line);
        const std::string_view r1 = field(t[3], "r1");
        const auto c = static_cast<unsigned>(parse_uint(field(t[4], "c")));
        if (r1.size() != (2 * c + 3) / 4) {
            fail("r1 must have ceil(2c/4) hex digits");
        }
        for (const char ch : r1) {
            if (!((ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'f'))) {
                fail("r1 must be lowercase hex");
            }
        }
        return make_toeplitz(parse_uint(r1, 16), c, parse_uint(field(t[5], "m")));
    }
    if (t[2] == "PL") {
        expect_tokens(t, 7, line);
        const std::uint64_t k = parse_uint(field(t[3], "k"));
        std::vector<std::uint64_t> coeffs;
        for (const std::string_view part : split(field(t[6], "coeffs"), ',')) {
            coeffs.push_back(parse_uint(part));
        }
        if (coeffs.size() != k) {
            fail("coefficient count differs from k");
        }
        return make_poly(std::move(coeffs), parse_uint(field(t[4], "p")), parse_uint(field(t[5], "m")));
    }
    fail("unknown hash family '" + std::string(t[2]) + "'");
}

Instance parse_instance_unchecked(std::string_view text) {
    const std::vector<std::string_view> lines = lines_of(text);
    if (lines.empty()) {
        fail("empty instance file");
    }
    std::size_t at = 0;

    Instance inst;
    {
        const auto t = split(lines[at++], ' ');
        expect_tokens(t, 4, lines[0]);
        if (t[0] != "OWF1") {
            fail("missing OWF1 header");
        }
        inst.variant = parse_variant(field(t[1], "v"));
        inst.n = parse_uint(field(t[2], "n"));
        inst.kind = parse_hash_kind(field(t[3], "kind"));
    }
    while (at < lines.size() && lines[at].starts_with("H ")) {
        const auto t = split(lines[at], ' ');
        expect_index(t[1], inst.specs.size() + 1);
        inst.specs.push_back(parse_spec(t, lines[at]));
        ++at;
    }
    while (at < lines.size() && lines[at].starts_with("A ")) {
        const auto t = split(lines[at], ' ');
        expect_tokens(t, 4, lines[at]);
        expect_index(t[1], inst.arrays.size() + 1);
        inst.arrays.push_back(BitArray::from_hex(parse_uint(field(t[2], "m")), field(t[3], "bits")));
        ++at;
    }
    if (at >= lines.size() || !lines[at].starts_with("P")) {
        fail("missing P line");
    }
    {
        const auto t = split(lines[at], ' ');
        if (t[0] != "P" || t.size() < 2) {
            fail("malformed perm line '" + std::string(lines[at]) + "'");
        }
        for (std::size_t i = 1; i < t.size(); ++i) {
            inst.perm.push_back(static_cast<unsigned>(parse_uint(t[i])));
        }
        ++at;
    }
    if (at != lines.size()) {
        fail("unexpected trailing content");
    }
    validate_instance(inst);
    return inst;
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
    std::string out = fmt::format("OWF1 v={} n={} kind={}\n", to_string(inst.variant), inst.n,
                                  to_string(inst.kind));
    for (std::size_t i = 0; i < inst.specs.size(); ++i) {
        out += spec_line(i + 1, inst.specs[i]);
    }
    for (std::size_t i = 0; i < inst.arrays.size(); ++i) {
        out += fmt::format("A {} m={} bits={}\n", i + 1, inst.arrays[i].size(), inst.arrays[i].to_hex());
    }
    out += fmt::format("P {}\n", fmt::join(inst.perm, " "));
    return out;
}

Instance parse_instance(std::string_view text) {
    try {
        return parse_instance_unchecked(text);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError) {
            throw;
        }
        fail(e.what());
    }
}

std::string serialize_solution(const Solution& sol) {
    return fmt::format("S {}\n", fmt::join(sol.vertices, " "));
}

Solution parse_solution(std::string_view text) {
    const std::vector<std::string_view> lines = lines_of(text);
    if (lines.size() != 1) {
        fail("solution file must hold exactly one line");
    }
    const auto t = split(lines[0], ' ');
    if (t[0] != "S" || t.size() < 2) {
        fail("malformed solution line");
    }
    Solution sol;
    for (std::size_t i = 1; i < t.size(); ++i) {
        sol.vertices.push_back(parse_uint(t[i]));
        if (i > 1 && sol.vertices[i - 2] >= sol.vertices[i - 1]) {
            fail("solution vertices must be strictly ascending");
        }
    }
    return sol;
}

}  // namespace cliqueowf
