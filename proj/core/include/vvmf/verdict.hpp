#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vvmf {

enum class CaseStatus { pass, fail, inconclusive };

std::string_view to_string(CaseStatus s);
CaseStatus parse_case_status(std::string_view text);

struct VerdictCase {
    std::string description;
    std::string expected;
    std::string actual;
    CaseStatus status = CaseStatus::pass;

    bool passed() const { return status == CaseStatus::pass; }
    friend bool operator==(const VerdictCase&, const VerdictCase&) = default;
};

/// Outcome of one verification suite; passes iff every case passes.
class Verdict {
public:
    explicit Verdict(std::string suite) : suite_(std::move(suite)) {}

    void add(VerdictCase c) { cases_.push_back(std::move(c)); }
    void add(std::string description, std::string expected, std::string actual, bool ok) {
        cases_.push_back({std::move(description), std::move(expected), std::move(actual),
                          ok ? CaseStatus::pass : CaseStatus::fail});
    }

    const std::string& suite() const { return suite_; }
    const std::vector<VerdictCase>& cases() const { return cases_; }
    bool pass() const;
    /// No failures, but at least one case could not be decided.
    bool inconclusive() const;

    friend bool operator==(const Verdict&, const Verdict&) = default;

private:
    std::string suite_;
    std::vector<VerdictCase> cases_;
};

}  // namespace vvmf
