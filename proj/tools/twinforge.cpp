/*
Copyright 2026, the twinforge authors

twinforge is free source code, under the MIT license (see LICENSE). You can redistribute, use and/or modify it.
Please give feedback to the authors if improvement is realized. It is distributed in the hope that it will be useful.
*/

#include "twinforge/errors.hpp"
#include "twinforge/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

using namespace twinforge;

// TWIN_FORGE_THREADS caps parallelism for every parallel subcommand.
static unsigned effective_threads(const unsigned requested)
{
	unsigned threads = requested;
	if (const char * env = std::getenv("TWIN_FORGE_THREADS"); env != nullptr)
	{
		const unsigned long cap = std::strtoul(env, nullptr, 10);
		if (cap > 0)
		{
			const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
			threads = unsigned(std::min<unsigned long>((threads != 0) ? threads : hw, cap));
		}
	}
	return threads;
}

static std::string twin_label(const uint64_t n, const twin::Family family)
{
	std::ostringstream ss;
	ss << "f_" << n;
	if (family == twin::Family::minus) ss << "^-";
	else if (family == twin::Family::plus) ss << "^+";
	return ss.str();
}

static twin::Family parse_family_arg(const std::string & name)
{
	const auto family = twin::parse_family(name);
	if (!family.has_value()) throw std::domain_error("family must be one of base, minus, plus");
	return *family;
}

static void print_json(const nlohmann::json & j, const std::string & format)
{
	if (format == "jsonl" && j.is_array())
	{
		for (const nlohmann::json & item : j) std::cout << item.dump() << "\n";
	}
	else std::cout << j.dump(format == "json" ? 2 : -1) << "\n";
}

static std::string describe_result(const primality::ClassificationResult & result)
{
	std::ostringstream ss;
	ss << primality::verdict_name(result.result.verdict);
	if ((result.result.verdict == primality::Verdict::proven_prime
			|| result.result.verdict == primality::Verdict::unit) && (result.n <= 6))
		ss << " (value " << twin::twin_value(result.n, result.family).value.get_str() << ")";

	const primality::Evidence & evidence = result.result.evidence;
	switch (evidence.type)
	{
		case primality::EvidenceType::divisor:
			ss << " (divisor " << evidence.value << ")";
			break;
		case primality::EvidenceType::forced_divisor:
			ss << " (forced divisor " << evidence.value;
			if (evidence.pattern.has_value())
				ss << ", period " << evidence.pattern->period << " preperiod " << evidence.pattern->preperiod;
			ss << ")";
			break;
		case primality::EvidenceType::miller_rabin_witness:
			ss << " (witness " << evidence.value << ")";
			break;
		default: break;
	}
	if (result.result.verdict == primality::Verdict::probable_prime)
	{
		ss << " (bases";
		for (const uint64_t b : result.result.bases) ss << " " << b;
		ss << ")";
	}
	ss << ", decided by " << primality::stage_name(result.stage);
	return ss.str();
}

static int run_classify(const uint64_t n, const std::string & family_name, const uint64_t sieve_bound,
	const std::string & format)
{
	primality::ClassifyOptions options;
	options.sieve_bound = sieve_bound;

	std::vector<twin::Family> families;
	if (!family_name.empty()) families.push_back(parse_family_arg(family_name));
	else
	{
		for (const twin::Family family : { twin::Family::base, twin::Family::minus, twin::Family::plus })
			if (n >= twin::family_start(family)) families.push_back(family);
	}

	std::vector<primality::ClassificationResult> results;
	results.reserve(families.size());
	for (const twin::Family family : families) results.push_back(primality::classify(n, family, options));

	if (format == "table")
	{
		for (const primality::ClassificationResult & result : results)
			std::cout << twin_label(result.n, result.family) << ": " << describe_result(result) << "\n";
	}
	else if (results.size() == 1) print_json(results.front(), format);
	else print_json(results, format);
	return 0;
}

static int run_discover(const uint64_t modulus, const std::string & family_name, const std::string & format)
{
	const congruence::CongruencePattern pattern =
		congruence::discover_pattern(modmath::OddModulus(modulus), parse_family_arg(family_name));

	if (format == "table")
	{
		std::cout << "modulus " << pattern.modulus << ", family " << twin::family_name(pattern.family)
			<< ": preperiod " << pattern.preperiod << ", period " << pattern.period << ", residues {";
		bool first = true;
		for (const uint64_t r : pattern.residues)
		{
			if (!first) std::cout << ", ";
			std::cout << r;
			first = false;
		}
		std::cout << "}";
		if (!pattern.exceptions.empty())
		{
			std::cout << ", exceptions";
			for (const auto & [n, divides] : pattern.exceptions)
				std::cout << " (n=" << n << (divides ? " divides)" : " does not divide)");
		}
		std::cout << "\n";
	}
	else print_json(pattern, format);
	return 0;
}

static int run_verify(const std::string & path, const std::string & format)
{
	const std::vector<congruence::TheoremClaim> claims = jsonio::load_claims(path);

	unsigned refuted = 0;
	nlohmann::json report = nlohmann::json::array();
	for (const congruence::TheoremClaim & claim : claims)
	{
		const congruence::VerificationResult result = congruence::verify_claim(claim);
		if (result.status == congruence::ClaimStatus::refuted) ++refuted;

		if (format == "table")
		{
			std::cout << (claim.name.empty() ? std::string("claim") : claim.name) << ": " << claim.modulus << " | f_n^"
				<< twin::family_name(claim.family) << " for n ≡ " << claim.class_residue << " (mod "
				<< claim.class_modulus << "), n >= " << claim.n_min << " -> ";
			if (result.status == congruence::ClaimStatus::proved) std::cout << "proved";
			else if (result.status == congruence::ClaimStatus::refuted)
				std::cout << "refuted (counterexample n = " << *result.counterexample << ")";
			else std::cout << "insufficient";
			std::cout << "\n";
		}
		else
		{
			nlohmann::json entry{ { "claim", claim }, { "result", result } };
			report.push_back(std::move(entry));
		}
	}

	if (format == "table")
		std::cout << claims.size() - refuted << " proved, " << refuted << " refuted\n";
	else print_json(report, format);
	return (refuted != 0) ? 1 : 0;
}

static int run_survey(const uint64_t n_max, const bool long_run, const uint64_t sieve_bound, const unsigned threads,
	const std::string & format)
{
	if ((n_max > 14) && !long_run)
	{
		std::ostringstream ss;
		ss << "surveys past n = 14 take a while; pass --long to unlock n_max = " << n_max;
		throw std::domain_error(ss.str());
	}

	primality::SurveyOptions options;
	options.classify.sieve_bound = sieve_bound;
	options.threads = effective_threads(threads);
	const std::vector<primality::SurveyRow> rows = primality::survey(n_max, options);

	if (format == "table")
	{
		for (const primality::SurveyRow & row : rows)
		{
			std::cout << twin_label(row.n, row.family) << ": ";
			if (row.outcome.has_value()) std::cout << describe_result(*row.outcome);
			else std::cout << "error: " << row.error;
			std::cout << "\n";
		}
	}
	else print_json(rows, format);
	return 0;
}

static int run_gap(const uint64_t n, const std::string & format)
{
	const twin::GapReport report = twin::gap_report(n);

	if (format == "table")
	{
		for (const twin::GapEntry & entry : report.entries)
		{
			std::cout << entry.label << " = " << entry.expression << ": ";
			switch (entry.status)
			{
				case twin::GapStatus::composite: std::cout << "composite"; break;
				case twin::GapStatus::prime: std::cout << "prime"; break;
				default: std::cout << "unknown"; break;
			}
			std::cout << " — " << entry.reason << "\n";
		}
	}
	else print_json(report, format);
	return 0;
}

static int run_identity_eval(const int64_t a, const int64_t m, const int64_t n, const int64_t k,
	const std::string & format)
{
	const identity::IdentityHit hit = identity::eval_identity(a, m, n, k);

	if (format == "table")
	{
		std::cout << a << " + " << hit.x.get_str() << "^2 = " << hit.lhs.get_str() << " = " << hit.factor_a.get_str()
			<< " · " << hit.factor_b.get_str();
		if (!hit.nontrivial) std::cout << " (trivial)";
		if (hit.negative_factor) std::cout << " (negative factor)";
		if (hit.fermat_exponent_x) std::cout << " (X = 2^(2^j))";
		else if (hit.power_of_two_x) std::cout << " (X = 2^j)";
		std::cout << "\n";
	}
	else print_json(hit, format);
	return 0;
}

static int run_identity_search(const int64_t a, const std::vector<int64_t> & m_range,
	const std::vector<int64_t> & n_range, const std::vector<int64_t> & k_range, const unsigned threads,
	const std::string & format)
{
	const std::vector<identity::IdentityHit> hits = identity::search_identities(a,
		{ m_range[0], m_range[1] }, { n_range[0], n_range[1] }, { k_range[0], k_range[1] },
		effective_threads(threads));

	if (format == "table")
	{
		for (const identity::IdentityHit & hit : hits)
		{
			std::cout << hit.lhs.get_str() << " = " << hit.factor_a.get_str() << " · " << hit.factor_b.get_str()
				<< "  (m=" << hit.params.m << ", n=" << hit.params.n << ", k=" << hit.params.k
				<< ", X=" << hit.x.get_str() << ")";
			if (hit.negative_factor) std::cout << " [negative factor]";
			if (hit.fermat_exponent_x) std::cout << " [X = 2^(2^j)]";
			else if (hit.power_of_two_x) std::cout << " [X = 2^j]";
			std::cout << "\n";
		}
		std::cout << hits.size() << " hit" << (hits.size() == 1 ? "" : "s") << "\n";
	}
	else print_json(hits, format);
	return 0;
}

int main(int argc, char ** argv)
{
	CLI::App app{ "twinforge — congruences, divisors and primality for 2^(2^n) +- 3" };
	app.require_subcommand(1);

	const std::vector<std::string> formats = { "table", "json", "jsonl" };

	uint64_t classify_n = 0, discover_modulus = 0, gap_n = 0, survey_n_max = 0;
	uint64_t classify_bound = 100000, survey_bound = 100000;
	std::string classify_family, discover_family, classify_format = "table", discover_format = "table";
	std::string verify_path, verify_format = "table", survey_format = "jsonl", gap_format = "table";
	std::string eval_format = "table", search_format = "table";
	bool survey_long = false;
	unsigned survey_threads = 0, search_threads = 0;
	int64_t eval_a = 0, eval_m = 0, eval_n = 0, eval_k = 0, search_a = 0;
	std::vector<int64_t> search_m, search_n, search_k;

	CLI::App * classify_cmd = app.add_subcommand("classify", "Classify f_n^family as unit/prime/probable-prime/composite");
	classify_cmd->add_option("n", classify_n, "Twin index n")->required();
	classify_cmd->add_option("--family", classify_family, "base, minus or plus (default: every family defined at n)");
	classify_cmd->add_option("--sieve-bound", classify_bound, "Upper bound for the small-divisor sieve");
	classify_cmd->add_option("--format", classify_format)->check(CLI::IsMember(formats));

	CLI::App * discover_cmd = app.add_subcommand("discover", "Divisibility pattern of f_n^family modulo an odd m");
	discover_cmd->add_option("modulus", discover_modulus, "Odd modulus >= 3")->required();
	discover_cmd->add_option("family", discover_family, "base, minus or plus")->required();
	discover_cmd->add_option("--format", discover_format)->check(CLI::IsMember(formats));

	CLI::App * verify_cmd = app.add_subcommand("verify", "Verify a JSON file of congruence claims");
	verify_cmd->add_option("claims", verify_path, "Path to the claims file")->required();
	verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember(formats));

	CLI::App * survey_cmd = app.add_subcommand("survey", "Classify both twin families for every n up to n-max");
	survey_cmd->add_option("--n-max", survey_n_max, "Largest twin index")->required();
	survey_cmd->add_flag("--long", survey_long, "Allow n-max beyond 14");
	survey_cmd->add_option("--sieve-bound", survey_bound, "Upper bound for the small-divisor sieve");
	survey_cmd->add_option("--threads", survey_threads, "Worker threads (0 = hardware)");
	survey_cmd->add_option("--format", survey_format)->check(CLI::IsMember(formats));

	CLI::App * gap_cmd = app.add_subcommand("gap", "Report the nine integers f_n - 5 ... f_n + 3");
	gap_cmd->add_option("n", gap_n, "Twin index in a simultaneous-composite class")->required();
	gap_cmd->add_option("--format", gap_format)->check(CLI::IsMember(formats));

	CLI::App * identity_cmd = app.add_subcommand("identity", "Quadratic factor identities for a + X^2");
	identity_cmd->require_subcommand(1);
	CLI::App * eval_cmd = identity_cmd->add_subcommand("eval", "Evaluate the identity at one (a, m, n, k)");
	eval_cmd->add_option("-a", eval_a, "Parameter a")->required();
	eval_cmd->add_option("-m", eval_m, "Parameter m")->required();
	eval_cmd->add_option("-n", eval_n, "Parameter n")->required();
	eval_cmd->add_option("-k", eval_k, "Parameter k")->required();
	eval_cmd->add_option("--format", eval_format)->check(CLI::IsMember(formats));
	CLI::App * search_cmd = identity_cmd->add_subcommand("search", "Scan a parameter box for nontrivial hits");
	search_cmd->add_option("-a", search_a, "Parameter a")->required();
	search_cmd->add_option("--m-range", search_m, "Inclusive m interval")->expected(2)->required();
	search_cmd->add_option("--n-range", search_n, "Inclusive n interval")->expected(2)->required();
	search_cmd->add_option("--k-range", search_k, "Inclusive k interval")->expected(2)->required();
	search_cmd->add_option("--threads", search_threads, "Worker threads (0 = hardware)");
	search_cmd->add_option("--format", search_format)->check(CLI::IsMember(formats));

	CLI11_PARSE(app, argc, argv);

	try
	{
		if (classify_cmd->parsed()) return run_classify(classify_n, classify_family, classify_bound, classify_format);
		if (discover_cmd->parsed()) return run_discover(discover_modulus, discover_family, discover_format);
		if (verify_cmd->parsed()) return run_verify(verify_path, verify_format);
		if (survey_cmd->parsed()) return run_survey(survey_n_max, survey_long, survey_bound, survey_threads, survey_format);
		if (gap_cmd->parsed()) return run_gap(gap_n, gap_format);
		if (identity_cmd->parsed())
		{
			if (eval_cmd->parsed()) return run_identity_eval(eval_a, eval_m, eval_n, eval_k, eval_format);
			if (search_cmd->parsed())
				return run_identity_search(search_a, search_m, search_n, search_k, search_threads, search_format);
		}
	}
	catch (const capacity_error & e)
	{
		std::cerr << "capacity error: " << e.what() << "\n";
		return 3;
	}
	catch (const integrality_error & e)
	{
		std::cerr << "domain error: " << e.what() << "\n";
		return 2;
	}
	catch (const std::domain_error & e)
	{
		std::cerr << "domain error: " << e.what() << "\n";
		return 2;
	}
	catch (const std::exception & e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return 0;
}
