#pragma once

// JSON encodings of the library's value types. Every encoder has a matching
// decoder, and decode(encode(x)) == x.

#include "vvmf/denominators.hpp"
#include "vvmf/mlde.hpp"
#include "vvmf/reproduction.hpp"
#include "vvmf/series.hpp"
#include "vvmf/verdict.hpp"

#include <nlohmann/json.hpp>

namespace vvmf {

using Json = nlohmann::json;

Json to_json(const PrimeFactorization& f);
PrimeFactorization factorization_from_json(const Json& j);

/// { "leading_exponent": "h", "order": N, "coefficients": ["c0", ...] } (+ "ramification" when not 1).
Json to_json(const QExpansion& f);
QExpansion series_from_json(const Json& j);

Json to_json(const MLDEParams& p);
MLDEParams params_from_json(const Json& j);

Json to_json(const DenominatorReport& r);
DenominatorReport report_from_json(const Json& j);

Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

Json to_json(const Classification& c);
Json to_json(const BoundedResult& b);
Json to_json(const ReproductionReport& r);

}  // namespace vvmf
