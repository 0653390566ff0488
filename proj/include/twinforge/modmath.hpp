/*
Copyright 2026, the twinforge authors

twinforge is free source code, under the MIT license (see LICENSE). You can redistribute, use and/or modify it.
Please give feedback to the authors if improvement is realized. It is distributed in the hope that it will be useful.
*/

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "twinforge/errors.hpp"

namespace twinforge::modmath
{

// An odd modulus >= 3; every congruence in the toolkit is taken against one of these.
class OddModulus
{
private:
	uint64_t _value;

public:
	explicit OddModulus(const uint64_t value);

	uint64_t value() const { return _value; }
};

// Complete factorization of a word-sized integer, (prime, exponent) pairs sorted ascending by prime.
struct Factorization
{
	std::vector<std::pair<uint64_t, unsigned>> factors;

	uint64_t reconstruct() const;
};

inline constexpr uint64_t default_factor_bound = uint64_t(1) << 63;

uint64_t mulmod(const uint64_t a, const uint64_t b, const uint64_t m);

// base^exp mod m in O(log exp) multiplications; m >= 2.
uint64_t powmod(const uint64_t base, const uint64_t exp, const uint64_t m);

// Deterministic for the full 64-bit range (fixed strong-probable-prime base set).
bool is_prime(const uint64_t n);

// Single-base strong probable-prime test; n odd >= 3. False means base witnesses n composite.
bool strong_probable_prime(const uint64_t n, const uint64_t base);

// x >= 2, x < bound. Trial division with a deterministic fallback split for large cofactors.
Factorization factorize_small(const uint64_t x, const uint64_t bound = default_factor_bound);

uint64_t euler_phi(const uint64_t m);

// Smallest t >= 1 with base^t = 1 (mod m); requires gcd(base, m) = 1.
// Found by stripping prime factors from phi(m), not by linear scan.
uint64_t mult_order(const uint64_t base, const OddModulus & m);

// t = 2^s * u with u odd; returns (s, u).
std::pair<unsigned, uint64_t> two_adic_split(const uint64_t t);

}
