/*
Copyright 2026, the twinforge authors

twinforge is free source code, under the MIT license (see LICENSE). You can redistribute, use and/or modify it.
Please give feedback to the authors if improvement is realized. It is distributed in the hope that it will be useful.
*/

#include "twinforge/json_io.hpp"

#include <fstream>
#include <sstream>

namespace twinforge::jsonio
{

static constexpr uint64_t json_safe_max = uint64_t(1) << 53;	// exact in a double

nlohmann::json encode_u64(const uint64_t value)
{
	if (value <= json_safe_max) return value;
	return std::to_string(value);
}

uint64_t decode_u64(const nlohmann::json & j)
{
	if (j.is_string()) return std::stoull(j.get<std::string>());
	return j.get<uint64_t>();
}

nlohmann::json encode_i64(const int64_t value)
{
	if ((value >= -int64_t(json_safe_max)) && (value <= int64_t(json_safe_max))) return value;
	return std::to_string(value);
}

int64_t decode_i64(const nlohmann::json & j)
{
	if (j.is_string()) return std::stoll(j.get<std::string>());
	return j.get<int64_t>();
}

nlohmann::json encode_mpz(const mpz_class & value)
{
	return value.get_str();
}

mpz_class decode_mpz(const nlohmann::json & j)
{
	if (j.is_string()) return mpz_class(j.get<std::string>(), 10);
	return mpz_class(j.get<int64_t>());
}

nlohmann::json encode_mpq(const mpq_class & value)
{
	return value.get_str();	// "num" or "num/den"
}

mpq_class decode_mpq(const nlohmann::json & j)
{
	mpq_class value(j.get<std::string>(), 10);
	value.canonicalize();
	return value;
}

std::vector<congruence::TheoremClaim> load_claims(const std::string & path)
{
	std::ifstream in(path);
	if (!in)
	{
		std::ostringstream ss;
		ss << "cannot open claims file: " << path;
		throw std::runtime_error(ss.str());
	}
	nlohmann::json j;
	in >> j;
	if (!j.is_array()) throw std::runtime_error("claims file must hold a JSON array");
	return j.get<std::vector<congruence::TheoremClaim>>();
}

}

namespace twinforge::twin
{

using twinforge::jsonio::decode_u64;
using twinforge::jsonio::encode_u64;

void to_json(nlohmann::json & j, const Family & family)
{
	j = family_name(family);
}

void from_json(const nlohmann::json & j, Family & family)
{
	const auto parsed = parse_family(j.get<std::string>());
	if (!parsed.has_value()) throw std::domain_error("family must be one of base/minus/plus");
	family = *parsed;
}

void to_json(nlohmann::json & j, const TwinNumber & number)
{
	j = nlohmann::json{ { "n", encode_u64(number.n) }, { "family", number.family },
		{ "value", jsonio::encode_mpz(number.value) } };
}

void from_json(const nlohmann::json & j, TwinNumber & number)
{
	number.n = decode_u64(j.at("n"));
	j.at("family").get_to(number.family);
	number.value = jsonio::decode_mpz(j.at("value"));
}

static const char * gap_status_name(const GapStatus status)
{
	switch (status)
	{
		case GapStatus::composite: return "composite";
		case GapStatus::prime: return "prime";
		default: return "unknown";
	}
}

void to_json(nlohmann::json & j, const GapEntry & entry)
{
	j = nlohmann::json{ { "offset", entry.offset }, { "label", entry.label }, { "expression", entry.expression },
		{ "status", gap_status_name(entry.status) }, { "reason", entry.reason } };
	if (entry.divisor.has_value()) j["divisor"] = encode_u64(*entry.divisor);
}

void from_json(const nlohmann::json & j, GapEntry & entry)
{
	entry.offset = j.at("offset").get<int>();
	entry.label = j.at("label").get<std::string>();
	entry.expression = j.at("expression").get<std::string>();
	const std::string status = j.at("status").get<std::string>();
	if (status == "composite") entry.status = GapStatus::composite;
	else if (status == "prime") entry.status = GapStatus::prime;
	else if (status == "unknown") entry.status = GapStatus::unknown;
	else throw std::domain_error("gap status must be composite/prime/unknown");
	entry.reason = j.at("reason").get<std::string>();
	entry.divisor.reset();
	if (j.contains("divisor")) entry.divisor = decode_u64(j.at("divisor"));
}

void to_json(nlohmann::json & j, const GapReport & report)
{
	j = nlohmann::json{ { "n", encode_u64(report.n) }, { "entries", report.entries } };
}

void from_json(const nlohmann::json & j, GapReport & report)
{
	report.n = decode_u64(j.at("n"));
	j.at("entries").get_to(report.entries);
}

}

namespace twinforge::congruence
{

using twinforge::jsonio::decode_u64;
using twinforge::jsonio::encode_u64;

void to_json(nlohmann::json & j, const CongruencePattern & pattern)
{
	nlohmann::json residues = nlohmann::json::array();
	for (const uint64_t r : pattern.residues) residues.push_back(encode_u64(r));
	nlohmann::json exceptions = nlohmann::json::array();
	for (const auto & [n, divides] : pattern.exceptions)
		exceptions.push_back(nlohmann::json{ { "n", encode_u64(n) }, { "divides", divides } });
	j = nlohmann::json{ { "modulus", encode_u64(pattern.modulus) }, { "family", pattern.family },
		{ "preperiod", encode_u64(pattern.preperiod) }, { "period", encode_u64(pattern.period) },
		{ "residues", residues }, { "exceptions", exceptions } };
}

void from_json(const nlohmann::json & j, CongruencePattern & pattern)
{
	pattern.modulus = decode_u64(j.at("modulus"));
	j.at("family").get_to(pattern.family);
	pattern.preperiod = decode_u64(j.at("preperiod"));
	pattern.period = decode_u64(j.at("period"));
	pattern.residues.clear();
	for (const nlohmann::json & r : j.at("residues")) pattern.residues.insert(decode_u64(r));
	pattern.exceptions.clear();
	for (const nlohmann::json & e : j.at("exceptions"))
		pattern.exceptions.emplace_back(decode_u64(e.at("n")), e.at("divides").get<bool>());
}

void to_json(nlohmann::json & j, const TheoremClaim & claim)
{
	j = nlohmann::json{ { "modulus", encode_u64(claim.modulus) }, { "family", claim.family },
		{ "class_modulus", encode_u64(claim.class_modulus) }, { "class_residue", encode_u64(claim.class_residue) },
		{ "n_min", encode_u64(claim.n_min) } };
	if (!claim.name.empty()) j["name"] = claim.name;
}

void from_json(const nlohmann::json & j, TheoremClaim & claim)
{
	claim.modulus = decode_u64(j.at("modulus"));
	j.at("family").get_to(claim.family);
	claim.class_modulus = decode_u64(j.at("class_modulus"));
	claim.class_residue = decode_u64(j.at("class_residue"));
	claim.n_min = decode_u64(j.at("n_min"));
	claim.name = j.value("name", std::string());
}

static const char * claim_status_name(const ClaimStatus status)
{
	switch (status)
	{
		case ClaimStatus::proved: return "proved";
		case ClaimStatus::refuted: return "refuted";
		default: return "insufficient";
	}
}

void to_json(nlohmann::json & j, const VerificationResult & result)
{
	j = nlohmann::json{ { "status", claim_status_name(result.status) } };
	if (result.pattern.has_value()) j["pattern"] = *result.pattern;
	if (result.counterexample.has_value()) j["counterexample"] = encode_u64(*result.counterexample);
}

void from_json(const nlohmann::json & j, VerificationResult & result)
{
	const std::string status = j.at("status").get<std::string>();
	if (status == "proved") result.status = ClaimStatus::proved;
	else if (status == "refuted") result.status = ClaimStatus::refuted;
	else if (status == "insufficient") result.status = ClaimStatus::insufficient;
	else throw std::domain_error("claim status must be proved/refuted/insufficient");
	result.pattern.reset();
	if (j.contains("pattern")) result.pattern = j.at("pattern").get<CongruencePattern>();
	result.counterexample.reset();
	if (j.contains("counterexample")) result.counterexample = decode_u64(j.at("counterexample"));
}

void to_json(nlohmann::json & j, const ClassException & exception)
{
	j = nlohmann::json{ { "n", encode_u64(exception.n) }, { "equals_value", exception.equals_value } };
	j["divisor"] = exception.divisor.has_value() ? encode_u64(*exception.divisor) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json & j, ClassException & exception)
{
	exception.n = decode_u64(j.at("n"));
	exception.equals_value = j.at("equals_value").get<bool>();
	exception.divisor.reset();
	if (!j.at("divisor").is_null()) exception.divisor = decode_u64(j.at("divisor"));
}

void to_json(nlohmann::json & j, const ClassTable & table)
{
	nlohmann::json pool = nlohmann::json::array();
	for (const uint64_t p : table.pool) pool.push_back(encode_u64(p));
	nlohmann::json entries = nlohmann::json::array();
	for (uint64_t r = 0; r < table.entries.size(); ++r)
	{
		nlohmann::json entry{ { "residue", encode_u64(r) } };
		if (table.entries[r].has_value())
		{
			entry["status"] = "forced";
			entry["divisor"] = encode_u64(*table.entries[r]);
		}
		else entry["status"] = "open";
		entries.push_back(std::move(entry));
	}
	j = nlohmann::json{ { "family", table.family }, { "class_modulus", encode_u64(table.class_modulus) },
		{ "pool", pool }, { "entries", entries }, { "exceptions", table.exceptions } };
}

void from_json(const nlohmann::json & j, ClassTable & table)
{
	j.at("family").get_to(table.family);
	table.class_modulus = decode_u64(j.at("class_modulus"));
	table.pool.clear();
	for (const nlohmann::json & p : j.at("pool")) table.pool.push_back(decode_u64(p));
	table.entries.assign(table.class_modulus, std::nullopt);
	for (const nlohmann::json & entry : j.at("entries"))
	{
		const uint64_t r = decode_u64(entry.at("residue"));
		if (r >= table.entries.size()) throw std::domain_error("class table residue out of range");
		if (entry.at("status").get<std::string>() == "forced") table.entries[r] = decode_u64(entry.at("divisor"));
	}
	j.at("exceptions").get_to(table.exceptions);
}

}

namespace twinforge::primality
{

using twinforge::jsonio::decode_u64;
using twinforge::jsonio::encode_u64;

static const char * evidence_type_name(const EvidenceType type)
{
	switch (type)
	{
		case EvidenceType::none: return "none";
		case EvidenceType::divisor: return "divisor";
		case EvidenceType::miller_rabin_witness: return "miller-rabin-witness";
		default: return "forced-divisor";
	}
}

void to_json(nlohmann::json & j, const Evidence & evidence)
{
	j = nlohmann::json{ { "type", evidence_type_name(evidence.type) } };
	if (evidence.type != EvidenceType::none) j["value"] = encode_u64(evidence.value);
	if (evidence.pattern.has_value()) j["pattern"] = *evidence.pattern;
}

void from_json(const nlohmann::json & j, Evidence & evidence)
{
	const std::string type = j.at("type").get<std::string>();
	if (type == "none") evidence.type = EvidenceType::none;
	else if (type == "divisor") evidence.type = EvidenceType::divisor;
	else if (type == "miller-rabin-witness") evidence.type = EvidenceType::miller_rabin_witness;
	else if (type == "forced-divisor") evidence.type = EvidenceType::forced_divisor;
	else throw std::domain_error("unknown evidence type");
	evidence.value = j.contains("value") ? decode_u64(j.at("value")) : 0;
	evidence.pattern.reset();
	if (j.contains("pattern")) evidence.pattern = j.at("pattern").get<congruence::CongruencePattern>();
}

void to_json(nlohmann::json & j, const PrpResult & result)
{
	j = nlohmann::json{ { "verdict", verdict_name(result.verdict) } };
	if (result.evidence.type != EvidenceType::none) j["evidence"] = result.evidence;
	if (!result.bases.empty())
	{
		nlohmann::json bases = nlohmann::json::array();
		for (const uint64_t b : result.bases) bases.push_back(encode_u64(b));
		j["bases"] = std::move(bases);
	}
}

void from_json(const nlohmann::json & j, PrpResult & result)
{
	const std::string verdict = j.at("verdict").get<std::string>();
	if (verdict == "unit") result.verdict = Verdict::unit;
	else if (verdict == "prime") result.verdict = Verdict::proven_prime;
	else if (verdict == "probable-prime") result.verdict = Verdict::probable_prime;
	else if (verdict == "composite") result.verdict = Verdict::composite;
	else throw std::domain_error("unknown verdict");
	result.evidence = Evidence{};
	if (j.contains("evidence")) j.at("evidence").get_to(result.evidence);
	result.bases.clear();
	if (j.contains("bases"))
		for (const nlohmann::json & b : j.at("bases")) result.bases.push_back(decode_u64(b));
}

void to_json(nlohmann::json & j, const ClassificationResult & result)
{
	j = nlohmann::json{ { "n", encode_u64(result.n) }, { "family", result.family },
		{ "stage", stage_name(result.stage) }, { "result", result.result } };
}

void from_json(const nlohmann::json & j, ClassificationResult & result)
{
	result.n = decode_u64(j.at("n"));
	j.at("family").get_to(result.family);
	const std::string stage = j.at("stage").get<std::string>();
	if (stage == "unit-check") result.stage = Stage::unit_check;
	else if (stage == "forced-divisor") result.stage = Stage::forced_divisor;
	else if (stage == "small-divisor") result.stage = Stage::small_divisor;
	else if (stage == "prp-test") result.stage = Stage::prp_test;
	else throw std::domain_error("unknown classification stage");
	j.at("result").get_to(result.result);
}

void to_json(nlohmann::json & j, const SurveyRow & row)
{
	j = nlohmann::json{ { "n", encode_u64(row.n) }, { "family", row.family }, { "elapsed_ms", row.elapsed_ms } };
	if (row.outcome.has_value()) j["outcome"] = *row.outcome;
	if (!row.error.empty()) j["error"] = row.error;
}

void from_json(const nlohmann::json & j, SurveyRow & row)
{
	row.n = decode_u64(j.at("n"));
	j.at("family").get_to(row.family);
	row.elapsed_ms = j.value("elapsed_ms", 0.0);
	row.outcome.reset();
	if (j.contains("outcome")) row.outcome = j.at("outcome").get<ClassificationResult>();
	row.error = j.value("error", std::string());
}

}

namespace twinforge::identity
{

using twinforge::jsonio::decode_i64;
using twinforge::jsonio::encode_i64;

void to_json(nlohmann::json & j, const IdentityParams & params)
{
	j = nlohmann::json{ { "a", encode_i64(params.a) }, { "m", encode_i64(params.m) }, { "n", encode_i64(params.n) },
		{ "k", encode_i64(params.k) }, { "A", jsonio::encode_mpq(params.A) }, { "B", jsonio::encode_mpq(params.B) },
		{ "X", jsonio::encode_mpq(params.X) } };
}

void from_json(const nlohmann::json & j, IdentityParams & params)
{
	params.a = decode_i64(j.at("a"));
	params.m = decode_i64(j.at("m"));
	params.n = decode_i64(j.at("n"));
	params.k = decode_i64(j.at("k"));
	params.A = jsonio::decode_mpq(j.at("A"));
	params.B = jsonio::decode_mpq(j.at("B"));
	params.X = jsonio::decode_mpq(j.at("X"));
}

void to_json(nlohmann::json & j, const IdentityHit & hit)
{
	j = nlohmann::json{ { "params", hit.params }, { "lhs", jsonio::encode_mpz(hit.lhs) },
		{ "factor_a", jsonio::encode_mpz(hit.factor_a) }, { "factor_b", jsonio::encode_mpz(hit.factor_b) },
		{ "x", jsonio::encode_mpz(hit.x) }, { "nontrivial", hit.nontrivial },
		{ "negative_factor", hit.negative_factor }, { "power_of_two_x", hit.power_of_two_x },
		{ "fermat_exponent_x", hit.fermat_exponent_x } };
}

void from_json(const nlohmann::json & j, IdentityHit & hit)
{
	j.at("params").get_to(hit.params);
	hit.lhs = jsonio::decode_mpz(j.at("lhs"));
	hit.factor_a = jsonio::decode_mpz(j.at("factor_a"));
	hit.factor_b = jsonio::decode_mpz(j.at("factor_b"));
	hit.x = jsonio::decode_mpz(j.at("x"));
	hit.nontrivial = j.at("nontrivial").get<bool>();
	hit.negative_factor = j.at("negative_factor").get<bool>();
	hit.power_of_two_x = j.at("power_of_two_x").get<bool>();
	hit.fermat_exponent_x = j.at("fermat_exponent_x").get<bool>();
}

}
