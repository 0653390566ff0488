/*
Copyright 2026, the twinforge authors

twinforge is free source code, under the MIT license (see LICENSE). You can redistribute, use and/or modify it.
Please give feedback to the authors if improvement is realized. It is distributed in the hope that it will be useful.
*/

#include "twinforge/factor_identity.hpp"
#include "twinforge/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace twinforge::identity
{

bool IdentityParams::integral() const
{
	return (A.get_den() == 1) && (B.get_den() == 1) && (X.get_den() == 1);
}

std::tuple<mpz_class, mpz_class, mpz_class> identity_one(const mpz_class & L)
{
	if (L < 1) throw std::domain_error("identity 1 + (L^2+L+1)^2 requires L >= 1");

	const mpz_class t = L * L + L + 1;
	const mpz_class lhs = 1 + t * t;
	const mpz_class factor_a = L * L + 1, factor_b = L * L + 2 * L + 2;
	if (lhs != factor_a * factor_b) throw std::logic_error("factor identity violated");
	return { lhs, factor_a, factor_b };
}

std::tuple<mpz_class, mpz_class, mpz_class> identity_two(const mpz_class & L)
{
	if (L <= 1) throw std::domain_error("identity 1 + (2L^2)^2 requires L > 1 (at L = 1 a factor degenerates to 1)");

	const mpz_class t = 2 * L * L;
	const mpz_class lhs = 1 + t * t;
	const mpz_class factor_a = t - 2 * L + 1, factor_b = t + 2 * L + 1;
	if (lhs != factor_a * factor_b) throw std::logic_error("factor identity violated");
	return { lhs, factor_a, factor_b };
}

IdentityHit eval_identity(const int64_t a, const int64_t m, const int64_t n, const int64_t k)
{
	const mpz_class za(a), zm(m), zn(n), zk(k);
	const mpz_class core = za * zm * zm + zn * zn;	// a·m² + n²
	const mpz_class kk = zk * zk;

	const mpq_class A = mpq_class(za + za * zm * zn * zk) + mpq_class(zn * zn * core * kk) / 4;
	const mpq_class B = mpq_class(1 - zm * zn * zk) + mpq_class(zm * zm * core * kk) / 4;
	const mpq_class X = mpq_class((za * zm * zm - zn * zn) * zk) / 2 + mpq_class(zm * zn * core * kk) / 4;

	// the identity holds over the rationals for arbitrary integer parameters
	if (mpq_class(za) + X * X != A * B) throw std::logic_error("rational identity violated");

	IdentityParams params{ a, m, n, k, A, B, X };
	if (!params.integral())
	{
		std::ostringstream ss;
		ss << "non-integral identity values at (a=" << a << ", m=" << m << ", n=" << n << ", k=" << k
			<< "): denominators A:" << A.get_den() << " B:" << B.get_den() << " X:" << X.get_den();
		throw integrality_error(ss.str(), unsigned(A.get_den().get_ui()), unsigned(B.get_den().get_ui()),
			unsigned(X.get_den().get_ui()));
	}

	IdentityHit hit;
	hit.factor_a = A.get_num();
	hit.factor_b = B.get_num();
	hit.x = X.get_num();
	hit.lhs = za + hit.x * hit.x;
	hit.params = std::move(params);
	if (hit.lhs != hit.factor_a * hit.factor_b) throw std::logic_error("integer factor recheck failed");

	hit.negative_factor = (sgn(hit.factor_a) < 0) || (sgn(hit.factor_b) < 0);
	const mpz_class abs_lhs = abs(hit.lhs), abs_a = abs(hit.factor_a), abs_b = abs(hit.factor_b);
	hit.nontrivial = (abs_a > 1) && (abs_a < abs_lhs) && (abs_b > 1) && (abs_b < abs_lhs);
	hit.power_of_two_x = (sgn(hit.x) > 0) && (mpz_popcount(hit.x.get_mpz_t()) == 1);
	if (hit.power_of_two_x)
	{
		const size_t e = mpz_sizeinbase(hit.x.get_mpz_t(), 2) - 1;	// x = 2^e
		hit.fermat_exponent_x = (e >= 1) && ((e & (e - 1)) == 0);
	}
	return hit;
}

std::vector<IdentityHit> search_identities(const int64_t a, const SearchRange m_range, const SearchRange n_range,
	const SearchRange k_range, const unsigned threads)
{
	const uint64_t m_count = m_range.size(), n_count = n_range.size(), k_count = k_range.size();
	const uint64_t volume = m_count * n_count * k_count;
	if ((m_count != 0) && (n_count != 0) && ((volume / m_count) / n_count != k_count || volume > max_search_volume))
	{
		std::ostringstream ss;
		ss << "search box exceeds " << max_search_volume << " candidate points";
		throw capacity_error(ss.str());
	}
	if (volume == 0) return {};

	const auto scan = [a, &m_range, &n_range, &k_range](const uint64_t begin, const uint64_t end,
		std::vector<IdentityHit> & out) {
		const uint64_t n_count = n_range.size(), k_count = k_range.size();
		for (uint64_t index = begin; index < end; ++index)
		{
			const int64_t m = m_range.lo + int64_t(index / (n_count * k_count));
			const int64_t n = n_range.lo + int64_t((index / k_count) % n_count);
			const int64_t k = k_range.lo + int64_t(index % k_count);
			try
			{
				IdentityHit hit = eval_identity(a, m, n, k);
				if (hit.nontrivial) out.push_back(std::move(hit));
			}
			catch (const integrality_error &)
			{
				// fractional point: not a hit
			}
		}
	};

	unsigned thread_count = (threads != 0) ? threads : std::thread::hardware_concurrency();
	if (thread_count == 0) thread_count = 1;
	thread_count = unsigned(std::min<uint64_t>({ uint64_t(thread_count), volume, 64 }));
	if (volume < 4096) thread_count = 1;	// not worth spawning for small boxes

	std::vector<std::vector<IdentityHit>> partial(thread_count);
	if (thread_count == 1) scan(0, volume, partial[0]);
	else
	{
		std::vector<std::thread> workers;
		workers.reserve(thread_count);
		const uint64_t chunk = (volume + thread_count - 1) / thread_count;
		for (unsigned i = 0; i < thread_count; ++i)
		{
			const uint64_t begin = uint64_t(i) * chunk, end = std::min(volume, begin + chunk);
			workers.emplace_back([&scan, begin, end, &partial, i]() { scan(begin, end, partial[i]); });
		}
		for (std::thread & worker : workers) worker.join();
	}

	// canonical order and (lhs, {A, B}) dedup keeping the lexicographically smallest (m, n, k)
	using Key = std::tuple<mpz_class, mpz_class, mpz_class>;	// lhs, min factor, max factor
	std::map<Key, IdentityHit> unique;
	for (std::vector<IdentityHit> & bucket : partial)
	{
		for (IdentityHit & hit : bucket)
		{
			Key key{ hit.lhs, std::min(hit.factor_a, hit.factor_b), std::max(hit.factor_a, hit.factor_b) };
			const auto it = unique.find(key);
			if (it == unique.end())
			{
				unique.emplace(std::move(key), std::move(hit));
				continue;
			}
			const IdentityParams & held = it->second.params;
			const auto order = [](const IdentityParams & p) { return std::tuple(p.m, p.n, p.k); };
			if (order(hit.params) < order(held)) it->second = std::move(hit);
		}
	}

	std::vector<IdentityHit> hits;
	hits.reserve(unique.size());
	for (auto & [key, hit] : unique) hits.push_back(std::move(hit));
	std::sort(hits.begin(), hits.end(), [](const IdentityHit & p, const IdentityHit & q) {
		if (p.lhs != q.lhs) return p.lhs < q.lhs;
		if (p.factor_a != q.factor_a) return p.factor_a < q.factor_a;
		return std::tuple(p.params.m, p.params.n, p.params.k) < std::tuple(q.params.m, q.params.n, q.params.k);
	});
	return hits;
}

}
