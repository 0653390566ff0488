/*
Copyright 2026, the twinforge authors

twinforge is free source code, under the MIT license (see LICENSE). You can redistribute, use and/or modify it.
Please give feedback to the authors if improvement is realized. It is distributed in the hope that it will be useful.
*/

#pragma once

#include "twinforge/congruence.hpp"
#include "twinforge/twin_core.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace twinforge::primality
{

enum class Verdict { unit, proven_prime, probable_prime, composite };

const char * verdict_name(Verdict verdict);

enum class EvidenceType { none, divisor, miller_rabin_witness, forced_divisor };

struct Evidence
{
	EvidenceType type = EvidenceType::none;
	uint64_t value = 0;	// the divisor, or the witnessing base
	std::optional<congruence::CongruencePattern> pattern;	// justifies a forced divisor
};

struct PrpResult
{
	Verdict verdict;
	Evidence evidence;	// set for composite verdicts (and for self-divisor proven primes)
	std::vector<uint64_t> bases;	// bases actually used when the verdict is probable_prime
};

// Bases for values beyond the deterministic 64-bit range. Fixed by default so
// identical inputs always give identical verdicts and witnesses.
struct BasePolicy
{
	std::vector<uint64_t> bases = { 2, 3, 5, 7, 11, 13 };
};

// N = 1 -> unit. N < 2^64 -> exact (proven_prime / composite with a witness or
// divisor). Larger N -> strong probable-prime test over the policy bases, with
// shift-and-small-multiply reduction when N = 2^m +- 3.
PrpResult is_prp(const mpz_class & value, const BasePolicy & policy = {});

// Smallest odd prime p <= bound with p | f_n^family and p != f_n^family, via
// twin_residue only - the big value is never formed.
std::optional<uint64_t> small_divisor(uint64_t n, twin::Family family, uint64_t bound);

enum class Stage { unit_check, forced_divisor, small_divisor, prp_test };

const char * stage_name(Stage stage);

struct ClassifyOptions
{
	uint64_t sieve_bound = 100000;
	std::vector<uint64_t> divisor_pool = { 7, 11, 13, 19, 79 };
	BasePolicy policy;
	unsigned value_budget = twin::default_value_budget;
};

struct ClassificationResult
{
	uint64_t n;
	twin::Family family;
	Stage stage;	// the pipeline stage that decided
	PrpResult result;
};

// Pipeline: unit check, forced divisor from the congruence pool (divisor equal to
// the value itself is a proof of primality), small-divisor sieve, then a PRP test
// on the materialized value. Only the last stage needs the big value.
ClassificationResult classify(uint64_t n, twin::Family family, const ClassifyOptions & options = {});

struct SurveyRow
{
	uint64_t n;
	twin::Family family;
	std::optional<ClassificationResult> outcome;	// empty when the row failed
	std::string error;	// failure reason when outcome is empty
	double elapsed_ms = 0;
};

struct SurveyOptions
{
	ClassifyOptions classify;
	std::vector<twin::Family> families = { twin::Family::minus, twin::Family::plus };
	unsigned threads = 0;	// 0 = hardware concurrency
};

// One row per (n, family) with family_start <= n <= n_max, in (n, family) order.
// Rows run in parallel; content is deterministic regardless of the schedule, and
// per-row capacity errors are recorded without aborting the rest.
std::vector<SurveyRow> survey(uint64_t n_max, const SurveyOptions & options = {});

}
