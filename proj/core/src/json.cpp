#include "vvmf/json.hpp"

namespace vvmf {

Json to_json(const PrimeFactorization& f) {
    Json out = Json::array();
    for (const auto& pp : f.factors()) out.push_back({pp.prime, pp.exponent});
    return out;
}

PrimeFactorization factorization_from_json(const Json& j) {
    std::vector<PrimePower> parts;
    for (const auto& pair : j) parts.push_back({pair.at(0).get<std::uint64_t>(), pair.at(1).get<long>()});
    return PrimeFactorization(std::move(parts));
}

Json to_json(const QExpansion& f) {
    Json out;
    if (f.is_zero()) {
        out["order"] = -1;
        out["coefficients"] = Json::array();
        out["precision"] = f.precision().to_string();
        return out;
    }
    out["leading_exponent"] = f.leading_exponent().to_string();
    out["order"] = f.order();
    Json coeffs = Json::array();
    for (const auto& c : f.coefficients()) coeffs.push_back(c.to_string());
    out["coefficients"] = std::move(coeffs);
    if (f.ramification() != 1) out["ramification"] = f.ramification();
    return out;
}

QExpansion series_from_json(const Json& j) {
    const auto& coeffs = j.at("coefficients");
    if (coeffs.empty()) return QExpansion::zero(Rational::parse(j.at("precision").get<std::string>()));
    std::vector<Rational> c;
    for (const auto& s : coeffs) c.push_back(Rational::parse(s.get<std::string>()));
    if (static_cast<long>(c.size()) != j.at("order").get<long>() + 1)
        throw ParameterError("series JSON: order does not match coefficient count");
    long e = j.contains("ramification") ? j.at("ramification").get<long>() : 1;
    return QExpansion::from_coefficients(Rational::parse(j.at("leading_exponent").get<std::string>()), c, e);
}

Json to_json(const MLDEParams& p) {
    return {{"m1", p.m1.to_string()}, {"m2", p.m2.to_string()}, {"P", p.P},
            {"Q", p.Q},               {"k0", p.k0},              {"k1", p.k1.to_string()},
            {"a", p.a.to_string()},   {"b", p.b.to_string()},    {"c", p.c.to_string()}};
}

MLDEParams params_from_json(const Json& j) {
    MLDEParams p = derive_params(Rational::parse(j.at("m1").get<std::string>()),
                                 Rational::parse(j.at("m2").get<std::string>()));
    if (j.at("P").get<long>() != p.P || j.at("Q").get<long>() != p.Q || j.at("k0").get<long>() != p.k0 ||
        Rational::parse(j.at("k1").get<std::string>()) != p.k1)
        throw ParameterError("params JSON is inconsistent with its exponents");
    return p;
}

Json to_json(const DenominatorReport& r) {
    Json out;
    out["params"] = r.params ? to_json(*r.params) : Json(nullptr);
    out["component"] = r.component ? Json(std::string(to_string(*r.component))) : Json(nullptr);
    out["order"] = r.order;
    out["modulus"] = r.modulus;
    out["residues"] = r.residues;
    Json per = Json::array();
    for (const auto& e : r.per_index) {
        Json item = {{"n", e.n}, {"denominator_factors", to_json(e.denominator)}};
        Json hits = Json::array();
        for (const auto& h : e.progression_hits) hits.push_back({h.prime, h.valuation});
        item["progression_hits"] = std::move(hits);
        if (e.unfactored_residue) item["unfactored_residue"] = e.unfactored_residue->get_str();
        per.push_back(std::move(item));
    }
    out["per_index"] = std::move(per);
    Json first = Json::object();
    for (const auto& [p, occ] : r.first_occurrence) first[std::to_string(p)] = {occ.index, occ.valuation};
    out["first_occurrence"] = std::move(first);
    Json lcm = Json::array();
    for (const auto& c : r.lcm_prefix) lcm.push_back({{"n", c.n}, {"factors", to_json(c.lcm)}});
    out["lcm_prefix"] = std::move(lcm);
    return out;
}

DenominatorReport report_from_json(const Json& j) {
    DenominatorReport r;
    if (!j.at("params").is_null()) r.params = params_from_json(j.at("params"));
    if (!j.at("component").is_null()) r.component = parse_component(j.at("component").get<std::string>());
    r.order = j.at("order").get<long>();
    r.modulus = j.at("modulus").get<long>();
    r.residues = j.at("residues").get<std::vector<long>>();
    for (const auto& item : j.at("per_index")) {
        IndexDenominator e;
        e.n = item.at("n").get<long>();
        e.denominator = factorization_from_json(item.at("denominator_factors"));
        for (const auto& h : item.at("progression_hits"))
            e.progression_hits.push_back({h.at(0).get<std::uint64_t>(), h.at(1).get<long>()});
        if (item.contains("unfactored_residue"))
            e.unfactored_residue = Integer(item.at("unfactored_residue").get<std::string>());
        r.per_index.push_back(std::move(e));
    }
    for (const auto& [key, value] : j.at("first_occurrence").items())
        r.first_occurrence[std::stoull(key)] = {value.at(0).get<long>(), value.at(1).get<long>()};
    for (const auto& c : j.at("lcm_prefix"))
        r.lcm_prefix.push_back({c.at("n").get<long>(), factorization_from_json(c.at("factors"))});
    return r;
}

Json to_json(const Verdict& v) {
    Json cases = Json::array();
    for (const auto& c : v.cases())
        cases.push_back({{"description", c.description},
                         {"expected", c.expected},
                         {"actual", c.actual},
                         {"status", std::string(to_string(c.status))}});
    return {{"suite", v.suite()}, {"pass", v.pass()}, {"inconclusive", v.inconclusive()}, {"cases", cases}};
}

Verdict verdict_from_json(const Json& j) {
    Verdict v(j.at("suite").get<std::string>());
    for (const auto& c : j.at("cases"))
        v.add({c.at("description").get<std::string>(), c.at("expected").get<std::string>(),
               c.at("actual").get<std::string>(), parse_case_status(c.at("status").get<std::string>())});
    if (j.at("pass").get<bool>() != v.pass()) throw ParameterError("verdict JSON: pass flag disagrees with cases");
    return v;
}

Json to_json(const Classification& c) {
    Json out = {{"Q", c.Q}, {"bounded_expected", c.bounded_expected}, {"description", c.description}};
    if (!c.bounded_expected) {
        out["residue"] = c.residue;
        out["component"] = std::string(to_string(c.component));
    }
    return out;
}

Json to_json(const BoundedResult& b) {
    Json growth = Json::array();
    for (const auto& [n, lcm] : b.growth) growth.push_back({n, lcm.get_str()});
    return {{"stabilized", b.stabilized},
            {"clearing", b.stabilized ? Json(b.clearing.get_str()) : Json(nullptr)},
            {"window_start", b.window_start},
            {"growth", growth}};
}

namespace {

Json comparisons_to_json(const std::vector<ClaimComparison>& list) {
    Json out = Json::array();
    for (const auto& c : list)
        out.push_back({{"label", c.label},
                       {"index", c.index},
                       {"exact", c.exact},
                       {"expected_over_observed", to_json(c.discrepancy)},
                       {"observed_off_progression", [&] {
                            Json off = Json::array();
                            for (const auto& f : c.observed.factors())
                                if (f.prime % 10 != 9) off.push_back({f.prime, f.exponent});
                            return off;
                        }()}});
    return out;
}

}  // namespace

Json to_json(const ReproductionReport& r) {
    Json assignments = Json::array();
    for (const auto& a : r.assignments) {
        Json item = {{"component", std::string(to_string(a.component))},
                     {"offset", a.offset},
                     {"strict_match", a.strict_match},
                     {"strict", comparisons_to_json(a.strict)},
                     {"rescaled_match", a.rescaled_match}};
        if (a.rescaling) {
            item["rescaling_factors"] = to_json(*a.rescaling);
            item["rescaling"] = a.rescaling->value().to_string();
            item["rescaled"] = comparisons_to_json(a.rescaled);
        } else {
            item["rescaling"] = nullptr;
        }
        assignments.push_back(std::move(item));
    }
    Json claims = Json::array();
    for (const auto& c : published_claims()) claims.push_back({{"label", c.label}, {"claim", c.text}});
    Json out = {{"params", to_json(r.params)},
                {"order", r.order},
                {"claims", claims},
                {"assignments", assignments},
                {"pass", r.pass()}};
    if (r.chosen) {
        const auto& a = r.assignments[*r.chosen];
        out["chosen"] = {{"component", std::string(to_string(a.component))},
                         {"offset", a.offset},
                         {"mode", a.strict_match ? "strict" : "rescaled"}};
    } else {
        out["chosen"] = nullptr;
    }
    return out;
}

}  // namespace vvmf
