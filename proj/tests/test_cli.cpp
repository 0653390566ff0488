/*
Copyright 2026, the twinforge authors

twinforge is free source code, under the MIT license (see LICENSE). You can redistribute, use and/or modify it.
Please give feedback to the authors if improvement is realized. It is distributed in the hope that it will be useful.
*/

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include <json.hpp>

#include "twinforge/json_io.hpp"

namespace
{

struct CliResult
{
	int code;
	std::string out;
};

// Run a raw shell command, capturing exit code and combined output.
CliResult run_shell(const std::string & command)
{
	static int counter = 0;
	std::ostringstream path;
	path << "/tmp/twinforge_cli_" << ::getpid() << "_" << counter++ << ".txt";
	const std::string out_path = path.str();

	const int status = std::system((command + " > " + out_path + " 2>&1").c_str());

	std::ifstream in(out_path);
	std::stringstream buffer;
	buffer << in.rdbuf();
	std::remove(out_path.c_str());

	const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	return { code, buffer.str() };
}

// Run the twinforge binary with the given arguments.
CliResult run_cli(const std::string & args)
{
	return run_shell(std::string(TWINFORGE_BIN) + " " + args);
}

std::vector<std::string> lines_of(const std::string & text)
{
	std::vector<std::string> lines;
	std::istringstream in(text);
	std::string line;
	while (std::getline(in, line))
		if (!line.empty()) lines.push_back(line);
	return lines;
}

std::string strip_elapsed(const std::string & jsonl)
{
	std::ostringstream out;
	for (const std::string & line : lines_of(jsonl))
	{
		nlohmann::json j = nlohmann::json::parse(line);
		j.erase("elapsed_ms");
		out << j.dump() << "\n";
	}
	return out.str();
}

}

TEST_CASE("classify reports the prime twins with their values")
{
	const auto r = run_cli("classify 2 --family minus");
	CHECK(r.code == 0);
	CHECK(r.out.find("f_2^-") != std::string::npos);
	CHECK(r.out.find("prime (value 13)") != std::string::npos);
	CHECK(r.out.find("forced-divisor") != std::string::npos);

	const auto p = run_cli("classify 1 --family plus");
	CHECK(p.code == 0);
	CHECK(p.out.find("prime (value 7)") != std::string::npos);

	const auto u = run_cli("classify 1 --family minus");
	CHECK(u.code == 0);
	CHECK(u.out.find("unit (value 1)") != std::string::npos);
}

TEST_CASE("classify reports composites with their evidence")
{
	const auto r = run_cli("classify 9 --family minus");
	CHECK(r.code == 0);
	CHECK(r.out.find("composite") != std::string::npos);
	CHECK(r.out.find("72623") != std::string::npos);

	const auto w = run_cli("classify 6 --family plus");
	CHECK(w.code == 0);
	CHECK(w.out.find("witness 2") != std::string::npos);
}

TEST_CASE("classify without --family covers every family defined at n")
{
	const auto r = run_cli("classify 2");
	CHECK(r.code == 0);
	const auto lines = lines_of(r.out);
	REQUIRE(lines.size() == 3);
	CHECK(lines[0].find("f_2:") == 0);	// base
	CHECK(lines[1].find("f_2^-") == 0);
	CHECK(lines[2].find("f_2^+") == 0);

	const auto zero = run_cli("classify 0");
	CHECK(zero.code == 0);
	CHECK(lines_of(zero.out).size() == 2);	// minus starts at n = 1
}

TEST_CASE("classify exit codes for domain and capacity errors")
{
	const auto domain = run_cli("classify 0 --family minus");
	CHECK(domain.code == 2);
	CHECK(domain.out.find("domain error") != std::string::npos);

	const auto capacity = run_cli("classify 25 --family minus --sieve-bound 3");
	CHECK(capacity.code == 3);
	CHECK(capacity.out.find("capacity error") != std::string::npos);
}

TEST_CASE("classify emits machine-readable JSON on request")
{
	const auto r = run_cli("classify 3 --family minus --format json");
	CHECK(r.code == 0);
	const auto parsed = nlohmann::json::parse(r.out);
	const auto result = parsed.get<twinforge::primality::ClassificationResult>();
	CHECK(result.n == 3);
	CHECK(result.stage == twinforge::primality::Stage::forced_divisor);
	CHECK(result.result.evidence.value == 11);
}

TEST_CASE("discover prints the pattern summary")
{
	const auto r = run_cli("discover 79 plus");
	CHECK(r.code == 0);
	CHECK(r.out.find("period 12") != std::string::npos);
	CHECK(r.out.find("{10}") != std::string::npos);

	const auto with_exceptions = run_cli("discover 19 plus");
	CHECK(with_exceptions.out.find("preperiod 1") != std::string::npos);
	CHECK(with_exceptions.out.find("(n=0 does not divide)") != std::string::npos);

	const auto even = run_cli("discover 4 plus");
	CHECK(even.code == 2);

	const auto bad_family = run_cli("discover 7 quux");
	CHECK(bad_family.code == 2);
}

TEST_CASE("verify accepts the bundled claims")
{
	const auto r = run_cli(std::string("verify ") + TWINFORGE_CLAIMS);
	CHECK(r.code == 0);
	CHECK(r.out.find("5 proved, 0 refuted") != std::string::npos);
}

TEST_CASE("verify exits 1 on a refuted claim")
{
	const std::string path = "/tmp/twinforge_refuted_claims.json";
	{
		std::ofstream out(path);
		out << R"([{ "modulus": 13, "family": "minus", "class_modulus": 2, "class_residue": 1, "n_min": 1 }])";
	}
	const auto r = run_cli("verify " + path);
	std::remove(path.c_str());
	CHECK(r.code == 1);
	CHECK(r.out.find("refuted (counterexample n = 1)") != std::string::npos);

	const auto missing = run_cli("verify /nonexistent/claims.json");
	CHECK(missing.code == 2);
}

TEST_CASE("survey emits one JSON line per row")
{
	const auto r = run_cli("survey --n-max 4");
	CHECK(r.code == 0);
	const auto lines = lines_of(r.out);
	REQUIRE(lines.size() == 9);

	size_t primes = 0;
	for (const std::string & line : lines)
	{
		const auto row = nlohmann::json::parse(line).get<twinforge::primality::SurveyRow>();
		REQUIRE(row.outcome.has_value());
		if (row.outcome->result.verdict == twinforge::primality::Verdict::proven_prime) ++primes;
	}
	CHECK(primes == 5);
}

TEST_CASE("survey table format is human-readable")
{
	const auto r = run_cli("survey --n-max 2 --format table");
	CHECK(r.code == 0);
	CHECK(r.out.find("f_1^-: unit") != std::string::npos);
	CHECK(r.out.find("f_2^-: prime") != std::string::npos);
}

TEST_CASE("survey past n = 14 needs --long")
{
	const auto blocked = run_cli("survey --n-max 15");
	CHECK(blocked.code == 2);
	CHECK(blocked.out.find("--long") != std::string::npos);
}

TEST_CASE("survey output is stable across runs and thread counts")
{
	const auto a = run_cli("survey --n-max 6 --threads 4");
	const auto b = run_shell("TWIN_FORGE_THREADS=1 " + std::string(TWINFORGE_BIN) + " survey --n-max 6");
	CHECK(a.code == 0);
	CHECK(b.code == 0);
	CHECK(strip_elapsed(a.out) == strip_elapsed(b.out));
}

TEST_CASE("gap prints nine rows with the center unknown")
{
	const auto r = run_cli("gap 14");
	CHECK(r.code == 0);
	const auto lines = lines_of(r.out);
	REQUIRE(lines.size() == 9);
	CHECK(lines[5].find("f_14 = 2^(2^14) + 1: unknown") == 0);
	CHECK(lines[1].find("divisible by 13") != std::string::npos);
	CHECK(lines[7].find("divisible by 19") != std::string::npos);

	const auto outside = run_cli("gap 13");
	CHECK(outside.code == 2);

	const auto json_form = run_cli("gap 14 --format json");
	CHECK(json_form.code == 0);
	const auto report = nlohmann::json::parse(json_form.out).get<twinforge::twin::GapReport>();
	CHECK(report.entries.size() == 9);
}

TEST_CASE("identity eval prints the factorization")
{
	const auto r = run_cli("identity eval -a 1 -m 2 -n 2 -k 1");
	CHECK(r.code == 0);
	CHECK(r.out.find("1 + 8^2 = 65 = 13 · 5") != std::string::npos);
	CHECK(r.out.find("(X = 2^j)") != std::string::npos);

	const auto fractional = run_cli("identity eval -a 1 -m 1 -n 1 -k 1");
	CHECK(fractional.code == 2);
	CHECK(fractional.out.find("domain error") != std::string::npos);

	const auto trivial = run_cli("identity eval -a 7 -m 1 -n 1 -k 0");
	CHECK(trivial.code == 0);
	CHECK(trivial.out.find("(trivial)") != std::string::npos);
}

TEST_CASE("identity search scans the demo box")
{
	const auto r = run_cli("identity search -a 1 --m-range 1 2 --n-range 0 2 --k-range 0 1");
	CHECK(r.code == 0);
	CHECK(r.out.find("65 = 13 · 5") != std::string::npos);
	CHECK(r.out.find("(m=2, n=2, k=1, X=8)") != std::string::npos);
	CHECK(r.out.find("1 hit") != std::string::npos);

	const auto oversized = run_cli("identity search -a 1 --m-range 1 100000 --n-range 1 100000 --k-range 1 100");
	CHECK(oversized.code == 3);
	CHECK(oversized.out.find("capacity error") != std::string::npos);
}

TEST_CASE("bad invocations exit through the CLI parser")
{
	CHECK(run_cli("").code != 0);
	CHECK(run_cli("frobnicate 5").code != 0);
	CHECK(run_cli("classify").code != 0);				// missing n
	CHECK(run_cli("survey --n-max 4 --format yaml").code != 0);
	CHECK(run_cli("identity").code != 0);				// missing subcommand
	CHECK(run_cli("--help").code == 0);
}
