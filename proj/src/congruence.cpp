/*
Copyright 2026, the twinforge authors

twinforge is free source code, under the MIT license (see LICENSE). You can redistribute, use and/or modify it.
Please give feedback to the authors if improvement is realized. It is distributed in the hope that it will be useful.
*/

#include "twinforge/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace twinforge::congruence
{

bool CongruencePattern::divides(const uint64_t n) const
{
	const uint64_t start = twin::family_start(family);
	if (n < start)
	{
		std::ostringstream ss;
		ss << "f_n^" << twin::family_name(family) << " is defined for n >= " << start << ", got n = " << n;
		throw std::domain_error(ss.str());
	}
	if (n < preperiod)
	{
		for (const auto & [en, div] : exceptions) if (en == n) return div;
		throw std::logic_error("pattern exception list is incomplete");
	}
	return residues.count(n % period) != 0;
}

CongruencePattern discover_pattern(const modmath::OddModulus & m, const twin::Family family)
{
	const uint64_t t = modmath::mult_order(2, m);
	const auto [s, u] = modmath::two_adic_split(t);
	const uint64_t d = (u > 1) ? modmath::mult_order(2, modmath::OddModulus(u)) : 1;
	const uint64_t start = twin::family_start(family);
	const uint64_t base = std::max<uint64_t>(s, start);

	CongruencePattern pattern;
	pattern.modulus = m.value();
	pattern.family = family;
	pattern.preperiod = s;
	pattern.period = d;

	// Membership of a residue class is decided by any representative n >= max(s, start):
	// 2^n mod t depends only on n mod d there.
	for (uint64_t c = 0; c < d; ++c)
	{
		uint64_t n = base - (base % d) + c;
		if (n < base) n += d;
		if (twin::twin_residue(n, family, m) == 0) pattern.residues.insert(c);
	}

	for (uint64_t n = start; n < s; ++n)
	{
		pattern.exceptions.emplace_back(n, twin::twin_residue(n, family, m) == 0);
	}

	// The periodicity argument makes this window a complete check; a mismatch would
	// mean a defect in the reduction itself.
	for (uint64_t n = base; n < s + 3 * d; ++n)
	{
		if (pattern.divides(n) != (twin::twin_residue(n, family, m) == 0))
		{
			std::ostringstream ss;
			ss << "pattern verification failed for modulus " << m.value() << ", family "
				<< twin::family_name(family) << " at n = " << n;
			throw std::logic_error(ss.str());
		}
	}

	return pattern;
}

VerificationResult verify_claim(const TheoremClaim & claim)
{
	if (claim.class_modulus < 1) throw std::domain_error("claim class modulus must be >= 1");
	if (claim.class_residue >= claim.class_modulus) throw std::domain_error("claim class residue must lie in [0, class modulus)");

	const CongruencePattern pattern = discover_pattern(modmath::OddModulus(claim.modulus), claim.family);
	const uint64_t M = claim.class_modulus;
	const uint64_t start = std::max(claim.n_min, twin::family_start(claim.family));

	// First progression member >= start.
	uint64_t n = claim.class_residue;
	if (n < start) n += ((start - n) + M - 1) / M * M;

	// Members below the preperiod are individual exceptions; above it the check is
	// periodic with period lcm(M, d), so lcm(M, d) / M further members settle the claim.
	while (n < pattern.preperiod)
	{
		if (!pattern.divides(n)) return { ClaimStatus::refuted, std::nullopt, n };
		n += M;
	}
	const uint64_t window = std::lcm(M, pattern.period) / M;
	for (uint64_t k = 0; k < window; ++k, n += M)
	{
		if (!pattern.divides(n)) return { ClaimStatus::refuted, std::nullopt, n };
	}

	return { ClaimStatus::proved, pattern, std::nullopt };
}

std::pair<uint64_t, std::set<uint64_t>> exponent_residues(const modmath::OddModulus & m, const uint64_t target)
{
	const uint64_t mv = m.value();
	const uint64_t ord = modmath::mult_order(2, m);
	const uint64_t goal = target % mv;

	std::set<uint64_t> solutions;
	if (std::gcd(goal, mv) != 1) return { ord, solutions };	// outside the unit group, a fortiori outside <2>

	uint64_t acc = 1;
	for (uint64_t e = 0; e < ord; ++e)
	{
		if (acc == goal) solutions.insert(e);
		acc = modmath::mulmod(acc, 2, mv);
	}
	return { ord, solutions };
}

std::set<uint64_t> ClassTable::open_classes() const
{
	std::set<uint64_t> open;
	for (uint64_t r = 0; r < entries.size(); ++r)
	{
		if (!entries[r].has_value()) open.insert(r);
	}
	return open;
}

// Does the pattern force every large n ≡ r (mod M)? The positions n mod d cycle
// through lcm(M, d) / M values; all must lie in the residue set.
static bool covers_class(const CongruencePattern & pattern, const uint64_t r, const uint64_t M)
{
	const uint64_t d = pattern.period;
	const uint64_t window = std::lcm(M, d) / M;
	for (uint64_t k = 0; k < window; ++k)
	{
		if (pattern.residues.count((r + k * M) % d) == 0) return false;
	}
	return true;
}

ClassTable candidate_classes(const twin::Family family, const uint64_t class_modulus, const std::vector<uint64_t> & pool)
{
	if (class_modulus < 1) throw std::domain_error("class modulus must be >= 1");

	std::vector<uint64_t> sorted_pool(pool);
	std::sort(sorted_pool.begin(), sorted_pool.end());
	sorted_pool.erase(std::unique(sorted_pool.begin(), sorted_pool.end()), sorted_pool.end());

	std::vector<CongruencePattern> patterns;
	patterns.reserve(sorted_pool.size());
	for (const uint64_t p : sorted_pool) patterns.push_back(discover_pattern(modmath::OddModulus(p), family));

	ClassTable table;
	table.family = family;
	table.class_modulus = class_modulus;
	table.pool = sorted_pool;
	table.entries.assign(class_modulus, std::nullopt);

	for (uint64_t r = 0; r < class_modulus; ++r)
	{
		for (const CongruencePattern & pattern : patterns)	// ascending moduli: smallest forcing divisor wins
		{
			if (covers_class(pattern, r, class_modulus))
			{
				table.entries[r] = pattern.modulus;
				break;
			}
		}
	}

	uint64_t max_preperiod = 0;
	for (const CongruencePattern & pattern : patterns) max_preperiod = std::max(max_preperiod, pattern.preperiod);

	for (uint64_t n = twin::family_start(family); n < max_preperiod; ++n)
	{
		ClassException exception;
		exception.n = n;
		exception.equals_value = false;
		for (const uint64_t p : sorted_pool)
		{
			if (twin::twin_residue(n, family, modmath::OddModulus(p)) == 0)
			{
				exception.divisor = p;
				// f_n^family fits a machine word only for tiny n; beyond that it cannot equal p.
				if (n <= 6) exception.equals_value =
					(mpz_cmp_ui(twin::twin_value(n, family).value.get_mpz_t(), static_cast<unsigned long>(p)) == 0);
				break;
			}
		}
		table.exceptions.push_back(std::move(exception));
	}

	return table;
}

std::set<uint64_t> simultaneous_composite_classes(const uint64_t class_modulus, const std::vector<uint64_t> & pool)
{
	const ClassTable minus_table = candidate_classes(twin::Family::minus, class_modulus, pool);
	const ClassTable plus_table = candidate_classes(twin::Family::plus, class_modulus, pool);

	std::set<uint64_t> classes;
	for (uint64_t r = 0; r < class_modulus; ++r)
	{
		if (minus_table.entries[r].has_value() && plus_table.entries[r].has_value()) classes.insert(r);
	}
	return classes;
}

}
