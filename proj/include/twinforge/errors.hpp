/*
Copyright 2026, the twinforge authors

twinforge is free source code, under the MIT license (see LICENSE). You can redistribute, use and/or modify it.
Please give feedback to the authors if improvement is realized. It is distributed in the hope that it will be useful.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace twinforge
{

// An input exceeds a configured capacity bound (memory budget, factorization bound, search box size).
class capacity_error : public std::runtime_error
{
public:
	explicit capacity_error(const std::string & msg) : std::runtime_error(msg) {}
};

// Identity parameters whose quarter-integer coefficients do not clear to integers.
// Denominators are reduced (1 means integral) and reported per component.
class integrality_error : public std::runtime_error
{
private:
	const unsigned _den_a, _den_b, _den_x;

public:
	integrality_error(const std::string & msg, const unsigned den_a, const unsigned den_b, const unsigned den_x)
		: std::runtime_error(msg), _den_a(den_a), _den_b(den_b), _den_x(den_x) {}

	unsigned den_a() const { return _den_a; }
	unsigned den_b() const { return _den_b; }
	unsigned den_x() const { return _den_x; }
};

}
