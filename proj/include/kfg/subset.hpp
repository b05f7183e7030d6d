#pragma once

#include <bit>
#include <cstdint>
#include <string>

namespace kfg {

// A subset of an n-point universe is its characteristic bit vector: point i
// is present iff bit i is set. Universes are capped at 16 points so that
// whole operator tables (2^n entries) stay in memory.
using Code = uint32_t;

constexpr int kMaxPoints = 16;

constexpr Code universe_mask(int n) { return (Code(1) << n) - 1; }

constexpr Code complement(Code s, int n) { return universe_mask(n) & ~s; }

constexpr int popcount(Code s) { return std::popcount(s); }

constexpr bool subset_of(Code a, Code b) { return (a & ~b) == 0; }

// "{0,2,3}" style rendering, mostly for error messages and reports.
std::string subset_to_string(Code s, int n);

}  // namespace kfg
