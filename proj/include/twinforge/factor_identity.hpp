/*
Copyright 2026, the twinforge authors

twinforge is free source code, under the MIT license (see LICENSE). You can redistribute, use and/or modify it.
Please give feedback to the authors if improvement is realized. It is distributed in the hope that it will be useful.
*/

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <tuple>
#include <vector>

namespace twinforge::identity
{

// Parameters of the quadratic factor family
//   A = a + a·m·n·k + (n²/4)(a·m² + n²)k²
//   B = 1 − m·n·k + (m²/4)(a·m² + n²)k²
//   X = ½(a·m² − n²)k + (m·n/4)(a·m² + n²)k²
// with a + X² = A·B as an identity over the rationals. Denominators divide 4;
// the integral flag tells whether all three values clear to integers.
struct IdentityParams
{
	int64_t a, m, n, k;
	mpq_class A, B, X;

	bool integral() const;
};

struct IdentityHit
{
	IdentityParams params;
	mpz_class lhs;	// a + X²
	mpz_class factor_a, factor_b, x;
	bool nontrivial = false;	// both factors strictly between 1 and |lhs| in absolute value
	bool negative_factor = false;
	bool power_of_two_x = false;	// X = 2^j
	bool fermat_exponent_x = false;	// X = 2^(2^j)
};

// 1 + (L²+L+1)² = (L²+1)·(L²+2L+2), exact for every L >= 1.
std::tuple<mpz_class, mpz_class, mpz_class> identity_one(const mpz_class & L);

// 1 + (2L²)² = (2L²−2L+1)·(2L²+2L+1); L = 1 degenerates to a factor of 1 and is rejected.
std::tuple<mpz_class, mpz_class, mpz_class> identity_two(const mpz_class & L);

// Evaluate the family at one parameter point. The rational identity is asserted
// unconditionally; a non-integral A, B or X raises integrality_error carrying the
// reduced denominators.
IdentityHit eval_identity(int64_t a, int64_t m, int64_t n, int64_t k);

// Inclusive parameter interval; empty when lo > hi.
struct SearchRange
{
	int64_t lo, hi;

	uint64_t size() const
	{
		if (lo > hi) return 0;
		const uint64_t span = uint64_t(hi) - uint64_t(lo);	// exact for any int64 pair
		return (span == UINT64_MAX) ? UINT64_MAX : (span + 1);	// the full range saturates
	}
};

inline constexpr uint64_t max_search_volume = 100000000;	// 10^8 candidate points

// All integral, nontrivial hits in the box, deduplicated by (lhs, {A, B}) keeping
// the lexicographically smallest (m, n, k), sorted by lhs then A. The scan runs in
// parallel; the output is canonical regardless of the schedule.
std::vector<IdentityHit> search_identities(int64_t a, SearchRange m_range, SearchRange n_range, SearchRange k_range,
	unsigned threads = 0);

}
