/*
Copyright 2026, the twinforge authors

twinforge is free source code, under the MIT license (see LICENSE). You can redistribute, use and/or modify it.
Please give feedback to the authors if improvement is realized. It is distributed in the hope that it will be useful.
*/

#include "twinforge/modmath.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

namespace twinforge::modmath
{

OddModulus::OddModulus(const uint64_t value) : _value(value)
{
	if ((value < 3) || (value % 2 == 0))
	{
		std::ostringstream ss; ss << "modulus must be odd and >= 3, got " << value;
		throw std::domain_error(ss.str());
	}
}

uint64_t Factorization::reconstruct() const
{
	uint64_t x = 1;
	for (const auto & [p, e] : factors) for (unsigned i = 0; i < e; ++i) x *= p;
	return x;
}

uint64_t mulmod(const uint64_t a, const uint64_t b, const uint64_t m)
{
	return uint64_t((a * __uint128_t(b)) % m);
}

uint64_t powmod(const uint64_t base, const uint64_t exp, const uint64_t m)
{
	if (m < 2)
	{
		std::ostringstream ss; ss << "powmod modulus must be >= 2, got " << m;
		throw std::domain_error(ss.str());
	}

	uint64_t r = 1, b = base % m;
	for (uint64_t e = exp; e != 0; e >>= 1)
	{
		if ((e & 1) != 0) r = mulmod(r, b, m);
		b = mulmod(b, b, m);
	}
	return r;
}

// Strong probable-prime test to the given base; n odd, n > 2.
static bool spsp(const uint64_t n, const uint64_t base)
{
	const uint64_t b = base % n;
	if (b == 0) return true;

	// n - 1 = 2^k * r, r odd
	uint64_t r = n - 1;
	int k = 0;
	for (; r % 2 == 0; r /= 2) ++k;

	uint64_t x = powmod(b, r, n);
	if (x == 1) return true;

	for (; k > 0; --k)
	{
		if (x == n - 1) return true;
		x = mulmod(x, x, n);
	}

	return false;
}

bool strong_probable_prime(const uint64_t n, const uint64_t base)
{
	if ((n < 3) || (n % 2 == 0)) throw std::domain_error("strong probable-prime test requires odd n >= 3");
	return spsp(n, base);
}

bool is_prime(const uint64_t n)
{
	if (n < 2) return false;
	if (n % 2 == 0) return (n == 2);
	if (n < 9) return true;
	if (n % 3 == 0) return false;

	// see https://oeis.org/A014233
	if (!spsp(n, 2)) return false;
	if (n < 2047ull) return true;

	if (!spsp(n, 3)) return false;
	if (n < 1373653ull) return true;

	if (!spsp(n, 5)) return false;
	if (n < 25326001ull) return true;

	if (!spsp(n, 7)) return false;
	if (n < 3215031751ull) return true;

	if (!spsp(n, 11)) return false;
	if (n < 2152302898747ull) return true;

	if (!spsp(n, 13)) return false;
	if (n < 3474749660383ull) return true;

	if (!spsp(n, 17)) return false;
	if (n < 341550071728321ull) return true;

	if (!spsp(n, 19)) return false;
	if (!spsp(n, 23)) return false;
	if (n < 3825123056546413051ull) return true;

	if (!spsp(n, 29)) return false;
	if (!spsp(n, 31)) return false;
	return spsp(n, 37);	// covers the rest of the 64-bit range
}

// Brent's cycle variant of Pollard's rho; n odd composite with no tiny factors.
// Deterministic: x0 = 2 and increments c = 1, 2, 3, ... are tried in order.
static uint64_t pollard_brent(const uint64_t n)
{
	for (uint64_t c = 1; ; ++c)
	{
		const auto f = [n, c](const uint64_t v) { const uint64_t s = mulmod(v, v, n); return (s >= n - c) ? s + c - n : s + c; };
		const uint64_t batch = 128;

		uint64_t x = 2, y = 2, ys = 2, d = 1, q = 1, r = 1;
		while (d == 1)
		{
			x = y;
			for (uint64_t i = 0; i < r; ++i) y = f(y);
			for (uint64_t k = 0; (k < r) && (d == 1); k += batch)
			{
				ys = y;
				const uint64_t lim = std::min(batch, r - k);
				for (uint64_t i = 0; i < lim; ++i)
				{
					y = f(y);
					q = mulmod(q, (x > y) ? x - y : y - x, n);
				}
				d = std::gcd(q, n);
			}
			r *= 2;
		}
		if (d == n)
		{
			// the batched gcd overshot; replay one step at a time
			d = 1;
			while (d == 1)
			{
				ys = f(ys);
				d = std::gcd((x > ys) ? x - ys : ys - x, n);
			}
		}
		if (d != n) return d;
	}
}

static void factor_into(uint64_t x, std::map<uint64_t, unsigned> & out)
{
	while (x > 1)
	{
		if (is_prime(x)) { ++out[x]; return; }
		const uint64_t d = pollard_brent(x);
		factor_into(d, out);
		x /= d;
	}
}

Factorization factorize_small(const uint64_t x, const uint64_t bound)
{
	if (x < 2)
	{
		std::ostringstream ss; ss << "factorize_small requires x >= 2, got " << x;
		throw std::domain_error(ss.str());
	}
	if (x >= bound)
	{
		std::ostringstream ss; ss << "factorize_small input " << x << " exceeds the capacity bound " << bound;
		throw capacity_error(ss.str());
	}

	std::map<uint64_t, unsigned> out;
	uint64_t rem = x;

	while (rem % 2 == 0) { ++out[2]; rem /= 2; }
	while (rem % 3 == 0) { ++out[3]; rem /= 3; }

	const uint64_t trial_limit = uint64_t(1) << 21;
	for (uint64_t p = 5, step = 2; (p <= trial_limit) && (p * p <= rem); p += step, step = 6 - step)
	{
		while (rem % p == 0) { ++out[p]; rem /= p; }
	}

	if (rem > 1) factor_into(rem, out);

	Factorization f;
	f.factors.assign(out.begin(), out.end());
	return f;
}

uint64_t euler_phi(const uint64_t m)
{
	if (m == 1) return 1;
	uint64_t phi = 1;
	for (const auto & [p, e] : factorize_small(m).factors)
	{
		phi *= p - 1;
		for (unsigned i = 1; i < e; ++i) phi *= p;
	}
	return phi;
}

uint64_t mult_order(const uint64_t base, const OddModulus & m)
{
	const uint64_t mv = m.value();
	if (std::gcd(base % mv, mv) != 1)
	{
		std::ostringstream ss; ss << "mult_order requires gcd(base, m) = 1, got base " << base << ", m " << mv;
		throw std::domain_error(ss.str());
	}

	// the order divides phi(m); strip primes while the power still fixes 1
	uint64_t t = euler_phi(mv);
	for (const auto & [p, e] : factorize_small(t).factors)
	{
		(void)e;
		while ((t % p == 0) && (powmod(base, t / p, mv) == 1)) t /= p;
	}
	return t;
}

std::pair<unsigned, uint64_t> two_adic_split(const uint64_t t)
{
	if (t == 0) throw std::domain_error("two_adic_split requires t >= 1");
	const unsigned s = unsigned(std::countr_zero(t));
	return { s, t >> s };
}

}
