#include "vvmf/verdict.hpp"

#include "vvmf/rational.hpp"

#include <algorithm>

namespace vvmf {

std::string_view to_string(CaseStatus s) {
    switch (s) {
        case CaseStatus::pass: return "pass";
        case CaseStatus::fail: return "fail";
        case CaseStatus::inconclusive: return "inconclusive";
    }
    return "fail";
}

CaseStatus parse_case_status(std::string_view text) {
    if (text == "pass") return CaseStatus::pass;
    if (text == "fail") return CaseStatus::fail;
    if (text == "inconclusive") return CaseStatus::inconclusive;
    throw ParameterError("unknown case status '" + std::string(text) + "'");
}

bool Verdict::pass() const {
    return std::all_of(cases_.begin(), cases_.end(), [](const VerdictCase& c) { return c.passed(); });
}

bool Verdict::inconclusive() const {
    bool any_fail = std::any_of(cases_.begin(), cases_.end(),
                                [](const VerdictCase& c) { return c.status == CaseStatus::fail; });
    bool any_open = std::any_of(cases_.begin(), cases_.end(),
                                [](const VerdictCase& c) { return c.status == CaseStatus::inconclusive; });
    return any_open && !any_fail;
}

}  // namespace vvmf
