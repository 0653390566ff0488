/*
Copyright 2026, the twinforge authors

twinforge is free source code, under the MIT license (see LICENSE). You can redistribute, use and/or modify it.
Please give feedback to the authors if improvement is realized. It is distributed in the hope that it will be useful.
*/

#include "twinforge/primality.hpp"
#include "twinforge/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace twinforge::primality
{

const char * verdict_name(const Verdict verdict)
{
	switch (verdict)
	{
		case Verdict::unit: return "unit";
		case Verdict::proven_prime: return "prime";
		case Verdict::probable_prime: return "probable-prime";
		default: return "composite";
	}
}

const char * stage_name(const Stage stage)
{
	switch (stage)
	{
		case Stage::unit_check: return "unit-check";
		case Stage::forced_divisor: return "forced-divisor";
		case Stage::small_divisor: return "small-divisor";
		default: return "prp-test";
	}
}

namespace
{

// Reduction modulo N = 2^m + c, c in {-3, +3}: since 2^m ≡ -c (mod N), the bits
// above position m fold back as x = hi·2^m + lo ≡ lo - c·hi. Shift and one small
// multiply replace the general division; a few passes bring a product of two
// residues into [0, N).
class TwinReducer
{
private:
	const mp_bitcnt_t _m;
	const int _c;
	mpz_class _n;
	mutable mpz_class _hi;	// scratch; one reducer per test, never shared

public:
	TwinReducer(const mp_bitcnt_t m, const int c) : _m(m), _c(c)
	{
		_n = 1;
		mpz_mul_2exp(_n.get_mpz_t(), _n.get_mpz_t(), m);
		_n += c;
	}

	const mpz_class & modulus() const { return _n; }

	void reduce(mpz_class & x) const
	{
		while ((sgn(x) < 0) || (cmp(x, _n) >= 0))
		{
			if (sgn(x) < 0)
			{
				// x += (floor(-x / 2^m) + 1)·N > 0 up to a tail the next pass absorbs
				mpz_neg(_hi.get_mpz_t(), x.get_mpz_t());
				mpz_fdiv_q_2exp(_hi.get_mpz_t(), _hi.get_mpz_t(), _m);
				_hi += 1;
				mpz_addmul(x.get_mpz_t(), _hi.get_mpz_t(), _n.get_mpz_t());
			}
			else if (mpz_sizeinbase(x.get_mpz_t(), 2) > size_t(_m))
			{
				mpz_fdiv_q_2exp(_hi.get_mpz_t(), x.get_mpz_t(), _m);	// hi
				mpz_fdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), _m);	// lo
				if (_c > 0) mpz_submul_ui(x.get_mpz_t(), _hi.get_mpz_t(), 3);
				else mpz_addmul_ui(x.get_mpz_t(), _hi.get_mpz_t(), 3);
			}
			else x -= _n;	// N <= x < 2^m, only reachable for c = -3
		}
	}
};

// base^exp into [0, N) by square-and-multiply over the folding reduction.
mpz_class powmod_reduced(const uint64_t base, const mpz_class & exp, const TwinReducer & reducer)
{
	mpz_class r = 1;
	for (size_t i = mpz_sizeinbase(exp.get_mpz_t(), 2); i-- > 0; )
	{
		r *= r;
		reducer.reduce(r);
		if (mpz_tstbit(exp.get_mpz_t(), i) != 0)
		{
			r *= static_cast<unsigned long>(base);
			reducer.reduce(r);
		}
	}
	return r;
}

// Strong probable-prime test for odd value > 2^64, value - 1 = 2^s·d with d odd.
bool spsp_big(const mpz_class & value, const mpz_class & nm1, const mpz_class & d, const unsigned long s,
	const uint64_t base, const TwinReducer * reducer)
{
	mpz_class x;
	if (reducer != nullptr) x = powmod_reduced(base, d, *reducer);
	else
	{
		const mpz_class b = base;
		mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), value.get_mpz_t());
	}
	if ((x == 1) || (x == nm1)) return true;

	for (unsigned long i = 1; i < s; ++i)
	{
		x *= x;
		if (reducer != nullptr) reducer->reduce(x);
		else mpz_mod(x.get_mpz_t(), x.get_mpz_t(), value.get_mpz_t());
		if (x == nm1) return true;
	}
	return false;
}

}

PrpResult is_prp(const mpz_class & value, const BasePolicy & policy)
{
	if (sgn(value) <= 0) throw std::domain_error("probable-prime test requires a positive integer");
	if (value == 1) return { Verdict::unit, {}, {} };

	if (value.fits_ulong_p())
	{
		const uint64_t n = value.get_ui();
		if (modmath::is_prime(n)) return { Verdict::proven_prime, {}, {} };

		Evidence evidence;
		if (n % 2 == 0)
		{
			evidence.type = EvidenceType::divisor;
			evidence.value = 2;
		}
		else
		{
			// composite below 2^64: some base of the deterministic set witnesses it
			for (const uint64_t base : { 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37 })
			{
				if (!modmath::strong_probable_prime(n, base))
				{
					evidence.type = EvidenceType::miller_rabin_witness;
					evidence.value = base;
					break;
				}
			}
			if (evidence.type == EvidenceType::none) throw std::logic_error("no witness for a 64-bit composite");
		}
		return { Verdict::composite, evidence, {} };
	}

	// beyond the deterministic range
	if (mpz_even_p(value.get_mpz_t()))
		return { Verdict::composite, { EvidenceType::divisor, 2, std::nullopt }, {} };
	if (policy.bases.empty()) throw std::domain_error("probable-prime policy needs at least one base");
	for (const uint64_t base : policy.bases)
		if (base < 2) throw std::domain_error("probable-prime bases must be >= 2");

	const mpz_class nm1 = value - 1;
	const unsigned long s = static_cast<unsigned long>(mpz_scan1(nm1.get_mpz_t(), 0));
	const mpz_class d = nm1 >> s;

	// shift-and-small-multiply reduction when the value is 2^m +- 3
	std::optional<TwinReducer> twin_reducer;
	{
		const mpz_class pow_minus = value - 3, pow_plus = value + 3;
		if (mpz_popcount(pow_minus.get_mpz_t()) == 1)
			twin_reducer.emplace(mp_bitcnt_t(mpz_sizeinbase(pow_minus.get_mpz_t(), 2) - 1), 3);
		else if (mpz_popcount(pow_plus.get_mpz_t()) == 1)
			twin_reducer.emplace(mp_bitcnt_t(mpz_sizeinbase(pow_plus.get_mpz_t(), 2) - 1), -3);
	}
	const TwinReducer * reducer = twin_reducer.has_value() ? &*twin_reducer : nullptr;

	std::vector<uint64_t> used;
	for (const uint64_t base : policy.bases)
	{
		used.push_back(base);
		if (!spsp_big(value, nm1, d, s, base, reducer))
			return { Verdict::composite, { EvidenceType::miller_rabin_witness, base, std::nullopt }, used };
	}
	return { Verdict::probable_prime, {}, used };
}

std::optional<uint64_t> small_divisor(const uint64_t n, const twin::Family family, const uint64_t bound)
{
	if (bound < 3) throw std::domain_error("sieve bound must be >= 3");

	// the value fits a machine word only for n <= 6; past that it cannot equal a sieve prime
	mpz_class small_value;
	if (n <= 6) small_value = twin::twin_value(n, family).value;

	for (uint64_t p = 3; p <= bound; p += 2)
	{
		if (!modmath::is_prime(p)) continue;
		if (twin::twin_residue(n, family, modmath::OddModulus(p)) != 0) continue;
		if ((n <= 6) && (mpz_cmp_ui(small_value.get_mpz_t(), static_cast<unsigned long>(p)) == 0)) continue;
		return p;
	}
	return std::nullopt;
}

ClassificationResult classify(const uint64_t n, const twin::Family family, const ClassifyOptions & options)
{
	if (n < twin::family_start(family))
	{
		std::ostringstream ss;
		ss << "f_n^" << twin::family_name(family) << " is defined for n >= " << twin::family_start(family)
			<< ", got n = " << n;
		throw std::domain_error(ss.str());
	}

	// stage 1: f_1^- = 1 is the lone unit
	if ((family == twin::Family::minus) && (n == 1))
		return { n, family, Stage::unit_check, { Verdict::unit, {}, {} } };

	// stage 2: forced divisor from the congruence pool
	std::vector<uint64_t> pool = options.divisor_pool;
	std::sort(pool.begin(), pool.end());
	pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
	for (const uint64_t p : pool)
	{
		if (!modmath::is_prime(p) || (p == 2)) throw std::domain_error("divisor pool entries must be odd primes");
	}
	for (const uint64_t p : pool)
	{
		congruence::CongruencePattern pattern = congruence::discover_pattern(modmath::OddModulus(p), family);
		if (!pattern.divides(n)) continue;
		if (twin::twin_residue(n, family, modmath::OddModulus(p)) != 0)
			throw std::logic_error("forced divisor failed the residue recheck");

		Evidence evidence;
		evidence.type = EvidenceType::forced_divisor;
		evidence.value = p;
		evidence.pattern = std::move(pattern);

		// a forced divisor equal to the value itself proves primality
		const bool self = (n <= 6) &&
			(mpz_cmp_ui(twin::twin_value(n, family).value.get_mpz_t(), static_cast<unsigned long>(p)) == 0);
		const Verdict verdict = self ? Verdict::proven_prime : Verdict::composite;
		return { n, family, Stage::forced_divisor, { verdict, std::move(evidence), {} } };
	}

	// stage 3: sieve for a small divisor without materializing the value
	if (const auto p = small_divisor(n, family, options.sieve_bound); p.has_value())
		return { n, family, Stage::small_divisor, { Verdict::composite, { EvidenceType::divisor, *p, std::nullopt }, {} } };

	// stage 4: probable-prime test on the materialized value
	const twin::TwinNumber number = twin::twin_value(n, family, options.value_budget);
	return { n, family, Stage::prp_test, is_prp(number.value, options.policy) };
}

std::vector<SurveyRow> survey(const uint64_t n_max, const SurveyOptions & options)
{
	struct Task { uint64_t n; twin::Family family; };
	std::vector<Task> tasks;
	for (uint64_t n = 0; n <= n_max; ++n)
	{
		for (const twin::Family family : options.families)
		{
			if (n >= twin::family_start(family)) tasks.push_back({ n, family });
		}
	}
	std::sort(tasks.begin(), tasks.end(), [](const Task & a, const Task & b) {
		return (a.n != b.n) ? (a.n < b.n) : (int(a.family) < int(b.family)); });

	std::vector<SurveyRow> rows(tasks.size());

	std::atomic<size_t> next(0);
	const auto worker = [&tasks, &rows, &options, &next]() {
		for (;;)
		{
			const size_t i = next.fetch_add(1);
			if (i >= tasks.size()) return;
			SurveyRow & row = rows[i];
			row.n = tasks[i].n;
			row.family = tasks[i].family;
			const auto t0 = std::chrono::steady_clock::now();
			try
			{
				row.outcome = classify(tasks[i].n, tasks[i].family, options.classify);
			}
			catch (const std::exception & e)
			{
				row.error = e.what();	// typically a capacity error; the survey carries on
			}
			row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
		}
	};

	unsigned thread_count = (options.threads != 0) ? options.threads : std::thread::hardware_concurrency();
	if (thread_count == 0) thread_count = 1;
	thread_count = unsigned(std::min<size_t>(thread_count, std::max<size_t>(tasks.size(), 1)));

	if (thread_count <= 1) worker();
	else
	{
		std::vector<std::thread> threads;
		threads.reserve(thread_count);
		for (unsigned i = 0; i < thread_count; ++i) threads.emplace_back(worker);
		for (std::thread & thread : threads) thread.join();
	}

	return rows;
}

}
