/*
Copyright 2026, the twinforge authors

twinforge is free source code, under the MIT license (see LICENSE). You can redistribute, use and/or modify it.
Please give feedback to the authors if improvement is realized. It is distributed in the hope that it will be useful.
*/

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "twinforge/factor_identity.hpp"
#include "twinforge/errors.hpp"

using namespace twinforge;

TEST_CASE("identity_one splits 1 + (L^2+L+1)^2 for every L up to 10^3")
{
	const auto [lhs1, a1, b1] = identity::identity_one(1);
	CHECK(lhs1 == 10);
	CHECK(a1 == 2);
	CHECK(b1 == 5);

	const auto [lhs2, a2, b2] = identity::identity_two(2);
	CHECK(lhs2 == 65);
	CHECK(a2 == 5);
	CHECK(b2 == 13);

	for (mpz_class L = 1; L <= 1000; ++L)
	{
		const auto [lhs, fa, fb] = identity::identity_one(L);
		REQUIRE(lhs == fa * fb);
		REQUIRE(fa > 1);
		REQUIRE(fb > fa);	// L^2+1 < L^2+2L+2 for L >= 1
	}
	CHECK_THROWS_AS(identity::identity_one(0), std::domain_error);
	CHECK_THROWS_AS(identity::identity_one(-3), std::domain_error);
}

TEST_CASE("identity_two splits 1 + 4L^4 for every L in [2, 10^3]")
{
	for (mpz_class L = 2; L <= 1000; ++L)
	{
		const auto [lhs, fa, fb] = identity::identity_two(L);
		REQUIRE(lhs == fa * fb);
		REQUIRE(fa > 1);
		REQUIRE(fb > fa);
	}
	CHECK_THROWS_AS(identity::identity_two(1), std::domain_error);	// factor degenerates to 1
	CHECK_THROWS_AS(identity::identity_two(0), std::domain_error);
	CHECK(std::get<0>(identity::identity_two(3)) == 325);
}

TEST_CASE("eval_identity at the flagship point 65 = 13 * 5")
{
	const auto hit = identity::eval_identity(1, 2, 2, 1);
	CHECK(hit.lhs == 65);
	CHECK(hit.factor_a == 13);
	CHECK(hit.factor_b == 5);
	CHECK(hit.x == 8);
	CHECK(hit.nontrivial);
	CHECK(!hit.negative_factor);
	CHECK(hit.power_of_two_x);		// 8 = 2^3
	CHECK(!hit.fermat_exponent_x);	// 3 is not a power of two
	CHECK(hit.params.integral());
	CHECK(hit.params.a == 1);
	CHECK(hit.params.m == 2);
}

TEST_CASE("eval_identity trivial and special points")
{
	const auto k0 = identity::eval_identity(7, 1, 1, 0);
	CHECK(k0.lhs == 7);
	CHECK(k0.factor_a == 7);
	CHECK(k0.factor_b == 1);
	CHECK(k0.x == 0);
	CHECK(!k0.nontrivial);
	CHECK(!k0.power_of_two_x);

	// X = 2 = 2^(2^0): the smallest Fermat-shaped X
	const auto small = identity::eval_identity(1, 2, 0, 1);
	CHECK(small.factor_a == 1);
	CHECK(small.factor_b == 5);
	CHECK(small.x == 2);
	CHECK(small.lhs == 5);
	CHECK(!small.nontrivial);	// factor 1, and 5 equals the lhs
	CHECK(small.power_of_two_x);
	CHECK(small.fermat_exponent_x);

	// X = 4 = 2^(2^1)
	const auto four = identity::eval_identity(1, 2, 0, 2);
	CHECK(four.factor_a == 1);
	CHECK(four.factor_b == 17);
	CHECK(four.x == 4);
	CHECK(four.fermat_exponent_x);

	const auto odd = identity::eval_identity(1, 1, 2, 2);
	CHECK(odd.lhs == 50);
	CHECK(odd.factor_a == 25);
	CHECK(odd.factor_b == 2);
	CHECK(odd.x == 7);
	CHECK(odd.nontrivial);
	CHECK(!odd.power_of_two_x);
}

TEST_CASE("eval_identity flags negative factors")
{
	const auto hit = identity::eval_identity(-5, 1, 1, 2);
	CHECK(hit.lhs == 95);
	CHECK(hit.factor_a == -19);
	CHECK(hit.factor_b == -5);
	CHECK(hit.x == -10);
	CHECK(hit.negative_factor);
	CHECK(hit.nontrivial);		// |±19|, |±5| lie strictly between 1 and 95
	CHECK(!hit.power_of_two_x);	// sign matters
}

TEST_CASE("eval_identity reports reduced denominators on fractional points")
{
	try
	{
		identity::eval_identity(1, 1, 1, 1);
		FAIL("expected integrality_error");
	}
	catch (const integrality_error & e)
	{
		CHECK(e.den_a() == 2);
		CHECK(e.den_b() == 2);
		CHECK(e.den_x() == 2);
		CHECK(std::string(e.what()).find("denominators") != std::string::npos);
	}
	// core = a·m² + n² = 6 leaves a reduced denominator of 2 at (5, 1, 1, 1) ...
	CHECK_THROWS_AS(identity::eval_identity(5, 1, 1, 1), integrality_error);
	// ... while core = 4 at (3, 1, 1, 1) clears completely
	CHECK_NOTHROW(identity::eval_identity(3, 1, 1, 1));
	CHECK_NOTHROW(identity::eval_identity(1, 2, 2, 3));
}

TEST_CASE("the rational identity holds on a large random box")
{
	std::mt19937_64 rng(65537);
	std::uniform_int_distribution<int64_t> dist(-50, 50);
	size_t integral_points = 0;
	for (int i = 0; i < 10000; ++i)
	{
		const int64_t a = dist(rng), m = dist(rng), n = dist(rng), k = dist(rng);
		try
		{
			// eval_identity asserts a + X^2 = A·B internally and rechecks it in
			// integer arithmetic; any violation throws logic_error and fails here.
			const auto hit = identity::eval_identity(a, m, n, k);
			REQUIRE(mpz_class(hit.params.a) + hit.x * hit.x == hit.factor_a * hit.factor_b);
			++integral_points;
		}
		catch (const integrality_error &)
		{
			// fractional point: the rational identity was still asserted before the throw
		}
	}
	CHECK(integral_points > 1000);	// the box is not degenerate
}

TEST_CASE("search_identities finds exactly the nontrivial point in the demo box")
{
	const auto hits = identity::search_identities(1, { 1, 2 }, { 0, 2 }, { 0, 1 });
	REQUIRE(hits.size() == 1);
	CHECK(hits[0].lhs == 65);
	CHECK(hits[0].factor_a == 13);
	CHECK(hits[0].factor_b == 5);
	CHECK(hits[0].x == 8);
	CHECK(hits[0].params.m == 2);
	CHECK(hits[0].params.n == 2);
	CHECK(hits[0].params.k == 1);
}

TEST_CASE("search_identities deduplicates symmetric parameter points")
{
	// (m, n, k) and (-m, -n, k) evaluate identically; four box points share one key
	const auto hits = identity::search_identities(1, { -2, 2 }, { -2, 2 }, { 1, 1 });
	REQUIRE(hits.size() == 1);
	CHECK(hits[0].lhs == 65);
	CHECK(hits[0].factor_a == 13);
	CHECK(hits[0].factor_b == 5);
	CHECK(hits[0].params.m == -2);	// lexicographically smallest representative
	CHECK(hits[0].params.n == -2);
	CHECK(hits[0].params.k == 1);
}

TEST_CASE("search_identities over a denser box rechecks every hit")
{
	const auto hits = identity::search_identities(2, { 1, 3 }, { 1, 3 }, { 1, 3 });
	REQUIRE(hits.size() == 11);
	CHECK(hits[0].lhs == 18);
	CHECK(hits[0].factor_a == 9);
	CHECK(hits[0].factor_b == 2);
	CHECK(hits[0].params.m == 1);
	CHECK(hits[0].params.n == 1);
	CHECK(hits[0].params.k == 2);
	for (const auto & hit : hits)
	{
		REQUIRE(mpz_class(2) + hit.x * hit.x == hit.factor_a * hit.factor_b);
		REQUIRE(hit.nontrivial);
		REQUIRE(abs(hit.factor_a) > 1);
	}
	// ascending, duplicate-free lhs-major order
	for (size_t i = 1; i < hits.size(); ++i) REQUIRE(hits[i - 1].lhs <= hits[i].lhs);
}

TEST_CASE("search_identities is deterministic across thread counts")
{
	// 21^3 = 9261 points, past the single-thread cutoff
	const auto serial = identity::search_identities(1, { -10, 10 }, { -10, 10 }, { -10, 10 }, 1);
	const auto parallel = identity::search_identities(1, { -10, 10 }, { -10, 10 }, { -10, 10 }, 8);
	REQUIRE(serial.size() == parallel.size());
	for (size_t i = 0; i < serial.size(); ++i)
	{
		REQUIRE(serial[i].lhs == parallel[i].lhs);
		REQUIRE(serial[i].factor_a == parallel[i].factor_a);
		REQUIRE(serial[i].factor_b == parallel[i].factor_b);
		REQUIRE(serial[i].params.m == parallel[i].params.m);
		REQUIRE(serial[i].params.n == parallel[i].params.n);
		REQUIRE(serial[i].params.k == parallel[i].params.k);
	}
}

TEST_CASE("search_identities handles empty and oversized boxes")
{
	CHECK(identity::search_identities(1, { 2, 1 }, { 0, 2 }, { 0, 1 }).empty());
	CHECK(identity::search_identities(1, { 1, 2 }, { 0, 2 }, { 1, 0 }).empty());
	CHECK_THROWS_AS(identity::search_identities(1, { 1, 100000 }, { 1, 100000 }, { 1, 100 }), capacity_error);
	CHECK_THROWS_AS(
		identity::search_identities(1, { INT64_MIN, INT64_MAX }, { 1, 1 }, { 1, 1 }), capacity_error);
}

TEST_CASE("SearchRange size covers the extremes")
{
	CHECK(identity::SearchRange{ 1, 1 }.size() == 1);
	CHECK(identity::SearchRange{ -3, 3 }.size() == 7);
	CHECK(identity::SearchRange{ 5, 4 }.size() == 0);
	CHECK(identity::SearchRange{ INT64_MIN, INT64_MAX }.size() == UINT64_MAX);
}

TEST_CASE("the parameter family specializes to the even-L quadratic splitting")
{
	// eval(1, 2, 2, L) gives X = 8L^2 = 2(2L)^2 with factors 8L^2 ± 4L + 1: exactly
	// the second splitting at 2L.
	for (int64_t L = 1; L <= 50; ++L)
	{
		const auto hit = identity::eval_identity(1, 2, 2, L);
		const auto [lhs, fa, fb] = identity::identity_two(mpz_class(2 * L));
		REQUIRE(hit.lhs == lhs);
		REQUIRE(hit.x == 2 * mpz_class(2 * L) * mpz_class(2 * L));
		REQUIRE(hit.factor_a == fb);	// A carries the larger factor
		REQUIRE(hit.factor_b == fa);
		REQUIRE(hit.nontrivial);
	}
}
