/*
Copyright 2026, the twinforge authors

twinforge is free source code, under the MIT license (see LICENSE). You can redistribute, use and/or modify it.
Please give feedback to the authors if improvement is realized. It is distributed in the hope that it will be useful.
*/

#include "twinforge/twin_core.hpp"

#include <array>
#include <sstream>

namespace twinforge::twin
{

int family_offset(const Family family)
{
	switch (family)
	{
		case Family::base: return 1;
		case Family::minus: return -3;
		default: return 3;
	}
}

const char * family_name(const Family family)
{
	switch (family)
	{
		case Family::base: return "base";
		case Family::minus: return "minus";
		default: return "plus";
	}
}

std::optional<Family> parse_family(const std::string_view name)
{
	if (name == "base") return Family::base;
	if (name == "minus") return Family::minus;
	if (name == "plus") return Family::plus;
	return std::nullopt;
}

uint64_t family_start(const Family family)
{
	return (family == Family::minus) ? 1 : 0;
}

static void check_index(const uint64_t n, const Family family)
{
	if (n < family_start(family))
	{
		std::ostringstream ss;
		ss << "f_n^" << family_name(family) << " is defined for n >= " << family_start(family) << ", got n = " << n;
		throw std::domain_error(ss.str());
	}
}

TwinNumber twin_value(const uint64_t n, const Family family, const unsigned budget)
{
	check_index(n, family);
	if (n > budget)
	{
		std::ostringstream ss;
		ss << "materializing 2^(2^" << n << ") exceeds the value budget n <= " << budget;
		throw capacity_error(ss.str());
	}

	mpz_class value = 1;
	mpz_mul_2exp(value.get_mpz_t(), value.get_mpz_t(), mp_bitcnt_t(uint64_t(1) << n));
	value += family_offset(family);
	return TwinNumber{ n, family, value };
}

uint64_t twin_residue(const uint64_t n, const Family family, const modmath::OddModulus & m)
{
	check_index(n, family);

	const uint64_t mv = m.value();
	const uint64_t t = modmath::mult_order(2, m);	// t >= 2 since m >= 3
	const uint64_t e = modmath::powmod(2, n, t);	// 2^n mod t
	const uint64_t pow2 = modmath::powmod(2, e, mv);
	const int off = family_offset(family);

	if (off >= 0)
	{
		uint64_t r = pow2 + uint64_t(off) % mv;	// both terms < mv; wraps only past 2^64
		if ((r < pow2) || (r >= mv)) r -= mv;
		return r;
	}
	const uint64_t sub = uint64_t(-off) % mv;
	return (pow2 >= sub) ? (pow2 - sub) : ((mv - sub) + pow2);
}

static bool in_simultaneous_class(const uint64_t n)
{
	const uint64_t r = n % 12;
	return (r == 2) || (r == 3) || (r == 7) || (r == 8) || (r == 11);
}

// Smallest pool prime dividing f_n^family; the pool carries exactly the divisors
// the simultaneous-composite classes are built from.
static std::optional<uint64_t> forced_pool_divisor(const uint64_t n, const Family family)
{
	static const std::array<uint64_t, 4> pool = { 7, 11, 13, 19 };
	for (const uint64_t p : pool)
	{
		if (twin_residue(n, family, modmath::OddModulus(p)) == 0) return p;
	}
	return std::nullopt;
}

// True iff the twin value is the candidate divisor itself (possible only for tiny n).
static bool value_equals(const uint64_t n, const Family family, const uint64_t p)
{
	if (n > 6) return false;
	return mpz_cmp_ui(twin_value(n, family).value.get_mpz_t(), static_cast<unsigned long>(p)) == 0;
}

GapReport gap_report(const uint64_t n)
{
	if ((n < 2) || !in_simultaneous_class(n))
	{
		std::ostringstream ss;
		ss << "gap report requires n >= 2 with n mod 12 in {2, 3, 7, 8, 11}, got n = " << n
			<< " (n mod 12 = " << (n % 12) << ")";
		throw std::domain_error(ss.str());
	}

	GapReport report;
	report.n = n;

	const auto expression = [n](const int off_from_pow) {
		std::ostringstream ss;
		ss << "2^(2^" << n << ")";
		if (off_from_pow > 0) ss << " + " << off_from_pow;
		else if (off_from_pow < 0) ss << " - " << -off_from_pow;
		return ss.str();
	};
	const auto label = [n](const int off) {
		std::ostringstream ss;
		ss << "f_" << n;
		if (off > 0) ss << " + " << off;
		else if (off < 0) ss << " - " << -off;
		return ss.str();
	};

	for (int off = -5; off <= 3; ++off)
	{
		GapEntry entry;
		entry.offset = off;
		entry.label = label(off);
		entry.expression = expression(off + 1);	// f_n = 2^(2^n) + 1

		const int pow_off = off + 1;	// value = 2^(2^n) + pow_off
		if (pow_off % 2 == 0)
		{
			entry.status = GapStatus::composite;
			entry.divisor = 2;
			entry.reason = (pow_off == 0) ? "power of two" : "even";
		}
		else if (off == 0)
		{
			entry.status = GapStatus::unknown;
			entry.reason = "status unknown; the gap is all-composite iff f_n is composite";
		}
		else if (off == -2)
		{
			// 2^(2^n) - 1 with composite exponent 2^n
			entry.status = GapStatus::composite;
			entry.divisor = 3;
			std::ostringstream ss;
			ss << "Mersenne number with composite exponent 2^" << n
				<< "; algebraic factor 2^(2^" << (n - 1) << ") - 1 (and 3 = 2^2 - 1 divides it)";
			entry.reason = ss.str();
		}
		else
		{
			// off = -4 or +2: the twin families, forced by a pool divisor
			const Family family = (off == -4) ? Family::minus : Family::plus;
			const auto p = forced_pool_divisor(n, family);
			if (!p.has_value())
			{
				std::ostringstream ss;
				ss << "no pool divisor for f_" << n << "^" << family_name(family) << " in a simultaneous class";
				throw std::logic_error(ss.str());
			}
			entry.divisor = *p;
			if (value_equals(n, family, *p))
			{
				entry.status = GapStatus::prime;
				std::ostringstream ss;
				ss << "equals its own divisor " << *p << " and is prime";
				entry.reason = ss.str();
			}
			else
			{
				entry.status = GapStatus::composite;
				std::ostringstream ss;
				ss << "divisible by " << *p;
				entry.reason = ss.str();
			}
		}

		report.entries.push_back(std::move(entry));
	}

	return report;
}

}
