/*
Copyright 2026, the twinforge authors

twinforge is free source code, under the MIT license (see LICENSE). You can redistribute, use and/or modify it.
Please give feedback to the authors if improvement is realized. It is distributed in the hope that it will be useful.
*/

#pragma once

#include "twinforge/modmath.hpp"
#include "twinforge/twin_core.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace twinforge::congruence
{

// Divisibility of f_n^family by a fixed odd modulus is eventually periodic in n:
// with t = ord_m(2), s = v2(t) and d = ord_u(2) for u the odd part of t (d = 1 if u = 1),
// the exponent 2^n mod t depends only on n mod d once n >= s. A pattern therefore
// consists of a preperiod, a period, the residue classes that divide, and the finitely
// many n < s handled one by one.
struct CongruencePattern
{
	uint64_t modulus;
	twin::Family family;
	uint64_t preperiod;	// s
	uint64_t period;	// d >= 1
	std::set<uint64_t> residues;	// subset of [0, d): classes n mod d with modulus | f_n^family (n >= s)
	std::vector<std::pair<uint64_t, bool>> exceptions;	// (n, divides) for family_start <= n < s

	// Does the modulus divide f_n^family? Exact for every n in the family's domain.
	bool divides(uint64_t n) const;
};

// Compute the pattern for (m, family), then check it against twin_residue on
// [s, s+3d) and on the exceptions before returning it.
CongruencePattern discover_pattern(const modmath::OddModulus & m, twin::Family family);

// "modulus divides f_n^family for all n >= n_min with n ≡ class_residue (mod class_modulus)"
struct TheoremClaim
{
	uint64_t modulus;
	twin::Family family;
	uint64_t class_modulus;	// M >= 1
	uint64_t class_residue;	// in [0, M)
	uint64_t n_min;
	std::string name;	// optional human-readable label
};

enum class ClaimStatus { proved, refuted, insufficient };

struct VerificationResult
{
	ClaimStatus status;
	std::optional<CongruencePattern> pattern;	// present when proved
	std::optional<uint64_t> counterexample;	// smallest refuting n when refuted
};

// Decide a claim by checking its progression against the discovered pattern over
// one lcm(class_modulus, period) window plus the finitely many exceptional n.
// The window argument makes the finite check complete.
VerificationResult verify_claim(const TheoremClaim & claim);

// All t (mod ord_m(2)) with 2^t ≡ target (mod m); the set is empty when target
// lies outside the subgroup generated by 2.
std::pair<uint64_t, std::set<uint64_t>> exponent_residues(const modmath::OddModulus & m, uint64_t target);

// Per-n record for indices below the largest pool preperiod, where the periodic
// tables do not apply yet.
struct ClassException
{
	uint64_t n;
	std::optional<uint64_t> divisor;	// smallest pool prime dividing f_n^family, if any
	bool equals_value;	// divisor present and f_n^family is that prime itself
};

// Residue classes mod class_modulus, each either forced composite by a pool prime
// or open. A forced entry stores the smallest pool prime whose pattern covers the
// entire class for large n.
struct ClassTable
{
	twin::Family family;
	uint64_t class_modulus;
	std::vector<uint64_t> pool;
	std::vector<std::optional<uint64_t>> entries;	// index = residue class; nullopt = open
	std::vector<ClassException> exceptions;

	std::set<uint64_t> open_classes() const;
};

ClassTable candidate_classes(twin::Family family, uint64_t class_modulus, const std::vector<uint64_t> & pool);

// Residue classes mod class_modulus where both twin families are forced composite.
std::set<uint64_t> simultaneous_composite_classes(uint64_t class_modulus, const std::vector<uint64_t> & pool);

}
