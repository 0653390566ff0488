/*
Copyright 2026, the twinforge authors

twinforge is free source code, under the MIT license (see LICENSE). You can redistribute, use and/or modify it.
Please give feedback to the authors if improvement is realized. It is distributed in the hope that it will be useful.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "twinforge/modmath.hpp"

namespace twinforge::twin
{

// The three sequences 2^(2^n) + offset: base +1, minus -3, plus +3.
enum class Family { base, minus, plus };

int family_offset(const Family family);
const char * family_name(const Family family);
std::optional<Family> parse_family(const std::string_view name);

// Smallest index the family is defined for (minus starts at n = 1).
uint64_t family_start(const Family family);

// Largest n whose value is materialized by default (2^n-bit numbers).
inline constexpr unsigned default_value_budget = 24;

struct TwinNumber
{
	uint64_t n;
	Family family;
	mpz_class value;
};

// Exact value 2^(2^n) + offset(family).
TwinNumber twin_value(const uint64_t n, const Family family, const unsigned budget = default_value_budget);

// Residue of the value mod m without materializing it: with t = mult_order(2, m),
// 2^(2^n) = 2^(2^n mod t) (mod m), and 2^n mod t is one word-sized powmod.
uint64_t twin_residue(const uint64_t n, const Family family, const modmath::OddModulus & m);

enum class GapStatus { composite, prime, unknown };

struct GapEntry
{
	int offset;				// -5 .. +3 relative to 2^(2^n) + 1
	std::string label;		// e.g. "f_14 - 5"
	std::string expression;	// e.g. "2^(2^14) - 4"
	GapStatus status;
	std::string reason;
	std::optional<uint64_t> divisor;
};

struct GapReport
{
	uint64_t n;
	std::vector<GapEntry> entries;	// 9 entries, offsets -5 .. +3
};

// The window of 9 consecutive integers centered on 2^(2^n) + 1, for n in a
// simultaneous-composite class (n mod 12 in {2, 3, 7, 8, 11}), n >= 2.
GapReport gap_report(const uint64_t n);

}
