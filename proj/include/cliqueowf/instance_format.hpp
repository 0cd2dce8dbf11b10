#pragma once

#include "cliqueowf/owf.hpp"

#include <string>
#include <string_view>

namespace cliqueowf {

// Line-oriented text format, every line LF-terminated:
//
//   OWF1 v=<basic|multi|derived|masked> n=<int> kind=<cw|tp|poly>
//   H <idx> CW a=<int> b=<int> p=<int> m=<int>
//   H <idx> TP r1=<hex> c=<int> m=<int>
//   H <idx> PL k=<int> p=<int> m=<int> coeffs=<int>,<int>,...
//   A <idx> m=<int> bits=<hex>
//   P <r1> <r2> ... <rc>
//
// H and A indices start at 1. r1 is written with ceil(2c/4) lowercase hex
// digits; array payloads follow BitArray::to_hex. derived/masked files carry
// no H lines.
std::string serialize_instance(const Instance& inst);

/// Throws Error(ParseError) on any syntax or consistency problem.
Instance parse_instance(std::string_view text);

// S <v1> <v2> ... <vc>
std::string serialize_solution(const Solution& sol);
Solution parse_solution(std::string_view text);

}  // namespace cliqueowf
