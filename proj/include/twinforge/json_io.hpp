/*
Copyright 2026, the twinforge authors

twinforge is free source code, under the MIT license (see LICENSE). You can redistribute, use and/or modify it.
Please give feedback to the authors if improvement is realized. It is distributed in the hope that it will be useful.
*/

#pragma once

#include "twinforge/congruence.hpp"
#include "twinforge/factor_identity.hpp"
#include "twinforge/primality.hpp"
#include "twinforge/twin_core.hpp"

#include <json.hpp>

#include <string>
#include <vector>

// JSON encoding conventions: every arbitrary-precision integer is a decimal
// string; 64-bit fields are JSON numbers up to 2^53 and decimal strings past
// that, and the decoders accept either form. Object keys are emitted in sorted
// order, so identical inputs serialize identically.

namespace twinforge::jsonio
{

nlohmann::json encode_u64(uint64_t value);
uint64_t decode_u64(const nlohmann::json & j);

nlohmann::json encode_i64(int64_t value);
int64_t decode_i64(const nlohmann::json & j);

nlohmann::json encode_mpz(const mpz_class & value);
mpz_class decode_mpz(const nlohmann::json & j);

nlohmann::json encode_mpq(const mpq_class & value);
mpq_class decode_mpq(const nlohmann::json & j);

// Claims file: a JSON array of TheoremClaim objects.
std::vector<congruence::TheoremClaim> load_claims(const std::string & path);

}

namespace twinforge::twin
{

void to_json(nlohmann::json & j, const Family & family);
void from_json(const nlohmann::json & j, Family & family);
void to_json(nlohmann::json & j, const TwinNumber & number);
void from_json(const nlohmann::json & j, TwinNumber & number);
void to_json(nlohmann::json & j, const GapEntry & entry);
void from_json(const nlohmann::json & j, GapEntry & entry);
void to_json(nlohmann::json & j, const GapReport & report);
void from_json(const nlohmann::json & j, GapReport & report);

}

namespace twinforge::congruence
{

void to_json(nlohmann::json & j, const CongruencePattern & pattern);
void from_json(const nlohmann::json & j, CongruencePattern & pattern);
void to_json(nlohmann::json & j, const TheoremClaim & claim);
void from_json(const nlohmann::json & j, TheoremClaim & claim);
void to_json(nlohmann::json & j, const VerificationResult & result);
void from_json(const nlohmann::json & j, VerificationResult & result);
void to_json(nlohmann::json & j, const ClassException & exception);
void from_json(const nlohmann::json & j, ClassException & exception);
void to_json(nlohmann::json & j, const ClassTable & table);
void from_json(const nlohmann::json & j, ClassTable & table);

}

namespace twinforge::primality
{

void to_json(nlohmann::json & j, const Evidence & evidence);
void from_json(const nlohmann::json & j, Evidence & evidence);
void to_json(nlohmann::json & j, const PrpResult & result);
void from_json(const nlohmann::json & j, PrpResult & result);
void to_json(nlohmann::json & j, const ClassificationResult & result);
void from_json(const nlohmann::json & j, ClassificationResult & result);
void to_json(nlohmann::json & j, const SurveyRow & row);
void from_json(const nlohmann::json & j, SurveyRow & row);

}

namespace twinforge::identity
{

void to_json(nlohmann::json & j, const IdentityParams & params);
void from_json(const nlohmann::json & j, IdentityParams & params);
void to_json(nlohmann::json & j, const IdentityHit & hit);
void from_json(const nlohmann::json & j, IdentityHit & hit);

}
