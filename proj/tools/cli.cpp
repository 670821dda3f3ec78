#include "cli.hpp"

#include "vvmf/classical_forms.hpp"
#include "vvmf/denominators.hpp"
#include "vvmf/hypergeom.hpp"
#include "vvmf/json.hpp"
#include "vvmf/reproduction.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace vvmf::cli {

namespace {

struct RunConfig {
    std::string m1 = "3/10", m2 = "2/10";
    long order = -1;  // per-command default when negative
    std::string component = "both";
    std::string method = "frobenius";
    std::uint64_t prime_bound = 0;  // per-command default when 0
    std::string format = "json";
    std::string out;
    long progress = 0;
    std::string suite;
    std::optional<long> p, q;
    long stride = 1;
    bool strict = false;
};

struct Output {
    Json json;
    std::string text;
    std::string csv;
    int code = kPass;
};

long order_or(const RunConfig& c, long fallback) { return c.order < 0 ? fallback : c.order; }

MLDEParams params_of(const RunConfig& c) { return derive_params(Rational::parse(c.m1), Rational::parse(c.m2)); }

std::vector<Component> components_of(const RunConfig& c) {
    if (c.component == "both") return {Component::f1, Component::f2};
    return {parse_component(c.component)};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

std::string series_text(const QExpansion& f, long terms = 8) {
    if (f.is_zero()) return "O(q^" + f.precision().to_string() + ")";
    std::ostringstream os;
    os << "q^(" << f.leading_exponent() << ") * (";
    const long shown = std::min(terms, f.order() + 1);
    for (long n = 0; n < shown; ++n) {
        Rational c = f.coefficient(n);
        if (n == 0) {
            os << c;
            continue;
        }
        os << (c.sign() < 0 ? " - " : " + ") << abs(c);
        Rational x(n, f.ramification());
        os << " q" << (x == 1 ? std::string() : "^" + x.to_string());
    }
    if (shown <= f.order()) os << " + ...";
    os << ") + O(q^" << f.precision() << ")";
    return os.str();
}

std::string verdict_text(const Verdict& v) {
    std::ostringstream os;
    for (const auto& c : v.cases())
        os << "[" << to_string(c.status) << "] " << c.description << ": expected " << c.expected << ", got " << c.actual
           << "\n";
    os << v.suite() << ": " << (v.pass() ? "PASS" : v.inconclusive() ? "INCONCLUSIVE" : "FAIL") << " (" << v.cases().size()
       << " cases)\n";
    return os.str();
}

std::string verdict_csv(const Verdict& v) {
    std::string s = "description,expected,actual,status\n";
    for (const auto& c : v.cases())
        s += csv_field(c.description) + "," + csv_field(c.expected) + "," + csv_field(c.actual) + "," +
             std::string(to_string(c.status)) + "\n";
    return s;
}

int verdict_code(const Verdict& v) { return v.pass() ? kPass : v.inconclusive() ? kInconclusive : kFail; }

Output verdict_output(const Verdict& v) { return {to_json(v), verdict_text(v), verdict_csv(v), verdict_code(v)}; }

SolveOptions progress_options(const RunConfig& c, std::ostream& err, const std::string& label) {
    SolveOptions opt;
    if (c.progress > 0) {
        opt.progress_interval = c.progress;
        opt.progress = [&err, label](long n) { err << label << ": n = " << n << "\n" << std::flush; };
    }
    return opt;
}

QExpansion solve_with(const MLDEParams& p, Component w, long order, const std::string& method, const SolveOptions& opt) {
    return method == "hypergeometric" ? closed_form_solution(p, w, order) : frobenius_solve(p, w, order, opt);
}

// ---- commands -------------------------------------------------------------

Output cmd_derive(const RunConfig& c) {
    const MLDEParams p = params_of(c);
    Output o;
    o.json = to_json(p);
    std::ostringstream text, csv;
    csv << "key,value\n";
    for (const auto& key : {"m1", "m2", "P", "Q", "k0", "k1", "a", "b", "c"}) {
        const auto& v = o.json.at(key);
        const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
        text << key << " = " << s << "\n";
        csv << key << "," << s << "\n";
    }
    o.text = text.str();
    o.csv = csv.str();
    return o;
}

Output cmd_expand(const RunConfig& c, std::ostream& err) {
    const MLDEParams p = params_of(c);
    const long order = order_or(c, 20);
    Output o;
    o.json = {{"params", to_json(p)}, {"order", order}, {"method", c.method}};
    Json results = Json::array();
    std::ostringstream text, csv;
    csv << "component,method,index,numerator,denominator\n";
    bool all_agree = true;
    std::vector<std::string> methods =
        c.method == "both" ? std::vector<std::string>{"frobenius", "hypergeometric"} : std::vector<std::string>{c.method};
    for (Component w : components_of(c)) {
        const std::string name(to_string(w));
        Json item = {{"component", name}};
        std::vector<QExpansion> series;
        for (const auto& m : methods) {
            series.push_back(solve_with(p, w, order, m, progress_options(c, err, "expand " + name)));
            item[m] = to_json(series.back());
            text << name << " [" << m << "]: " << series_text(series.back()) << "\n";
            for (long n = 0; n <= series.back().order(); ++n) {
                Rational v = series.back().coefficient(n);
                csv << name << "," << m << "," << n << "," << v.num().get_str() << "," << v.den().get_str() << "\n";
            }
        }
        if (series.size() == 2) {
            const bool agree = series[0] == series[1];
            item["agree"] = agree;
            all_agree = all_agree && agree;
            text << name << ": methods " << (agree ? "agree" : "DISAGREE") << "\n";
        }
        results.push_back(std::move(item));
    }
    o.json["results"] = std::move(results);
    if (methods.size() == 2) o.json["agree"] = all_agree;
    o.text = text.str();
    o.csv = csv.str();
    o.code = all_agree ? kPass : kFail;
    return o;
}

Output cmd_analyze(const RunConfig& c, std::ostream& err) {
    const MLDEParams p = params_of(c);
    if (c.method == "both") throw ParameterError("analyze takes a single --method");
    const long order = order_or(c, 100);
    const PrimeTable table(c.prime_bound ? c.prime_bound : kDefaultSieveBound);
    const Classification cls = classify(p);
    const long residue = ((p.P % p.Q) + p.Q) % p.Q;

    Output o;
    Json reports = Json::array(), bounded = Json::array();
    std::ostringstream text, csv;
    text << cls.description << "\n";
    csv << "component,n,denominator_factors,progression_hits,unfactored_residue\n";
    bool unfactored = false;
    for (Component w : components_of(c)) {
        const std::string name(to_string(w));
        const QExpansion f = solve_with(p, w, order, c.method, progress_options(c, err, "analyze " + name));
        DenominatorReport r = analyze(f, p.Q, {residue, p.Q - residue}, {&table, c.stride});
        r.params = p;
        r.component = w;
        const BoundedResult b = bounded_check(f);
        reports.push_back(to_json(r));
        Json bj = to_json(b);
        bj["component"] = name;
        bounded.push_back(std::move(bj));

        long hits = 0;
        for (const auto& e : r.per_index) {
            std::string hit_text;
            for (const auto& h : e.progression_hits)
                hit_text += (hit_text.empty() ? "" : " ") + std::to_string(h.prime) + ":" + std::to_string(h.valuation);
            hits += static_cast<long>(e.progression_hits.size());
            unfactored = unfactored || e.unfactored_residue.has_value();
            csv << name << "," << e.n << "," << csv_field(e.denominator.to_string()) << "," << csv_field(hit_text) << ","
                << (e.unfactored_residue ? e.unfactored_residue->get_str() : std::string()) << "\n";
        }
        text << name << ": " << r.first_occurrence.size() << " denominator primes up to index " << r.order
             << ", progression hits " << hits << ", lcm " << (b.stabilized ? "stable, M = " + b.clearing.get_str()
                                                                            : std::string("growing"))
             << "\n";
        std::string firsts;
        for (const auto& [prime, occ] : r.first_occurrence) {
            const long cls_r = static_cast<long>(prime % static_cast<std::uint64_t>(p.Q));
            if (cls_r != residue && cls_r != p.Q - residue) continue;
            firsts += " " + std::to_string(prime) + "@" + std::to_string(occ.index);
        }
        if (!firsts.empty()) text << "  progression primes (prime@index):" << firsts << "\n";
    }
    o.json = {{"classification", to_json(cls)}, {"reports", reports}, {"bounded_check", bounded}};
    o.text = text.str();
    o.csv = csv.str();
    if (unfactored) {
        err << "warning: some denominators were only partially factored; raise --prime-bound\n";
        o.code = kInconclusive;
    }
    return o;
}

Verdict identities_suite(long order) {
    Verdict v("identities");
    const QExpansion e4 = eisenstein(4, order), e6 = eisenstein(6, order), delta = discriminant(order);
    const QExpansion e4cubed = e4 * e4 * e4;
    auto zero = [&](const std::string& name, const QExpansion& f) {
        v.add(name, "0 + O(q^" + f.precision().to_string() + ")", f.is_zero() ? "0" : "nonzero at index " +
              std::to_string(f.order()), f.is_zero());
    };
    zero("D_1(eta^2)", serre_derivative(eta_power(2, order), Rational(1)));
    zero("D_12(Delta)", serre_derivative(delta, Rational(12)));
    zero("E4^3 - E6^2 - 1728 Delta", e4cubed - e6 * e6 - Rational(1728) * delta);
    zero("j Delta - E4^3", j_series(order) * delta - e4cubed);
    zero("j (1/j) - 1", j_series(order) * j_inverse(order) - QExpansion::one(order));
    return v;
}

Verdict cross_oracle_suite(const MLDEParams& p, long order, const RunConfig& c, std::ostream& err) {
    Verdict v("cross-oracle");
    for (Component w : components_of(c)) {
        const std::string name(to_string(w));
        const QExpansion a = frobenius_solve(p, w, order, progress_options(c, err, "frobenius " + name));
        const QExpansion b = closed_form_solution(p, w, order);
        std::string actual;
        if (a == b) {
            actual = std::to_string(a.order() + 1) + " coefficients equal";
        } else {
            long n = 0;
            const long top = std::min(a.order(), b.order());
            while (n <= top && a.coefficient(n) == b.coefficient(n)) ++n;
            actual = "first difference at index " + std::to_string(n);
        }
        v.add(name + ": frobenius vs hypergeometric", std::to_string(order + 1) + " coefficients equal", actual, a == b);
    }
    return v;
}

Output cmd_verify(const RunConfig& c, std::ostream& err) {
    if (c.suite == "identities") return verdict_output(identities_suite(order_or(c, 500)));
    if (c.suite == "cross-oracle") return verdict_output(cross_oracle_suite(params_of(c), order_or(c, 300), c, err));
    if (c.suite == "lemma") {
        if (!c.p || !c.q) throw ParameterError("suite lemma needs --p and --q");
        return verdict_output(lemma_valuation_check(*c.p, *c.q, c.prime_bound ? c.prime_bound : 2000));
    }
    if (c.suite == "prop2") {
        const MLDEParams p = params_of(c);
        const std::uint64_t bound = c.prime_bound ? c.prime_bound : 101;
        if (c.order < 0) return verdict_output(verify_prop2(p, bound));
        if (p.Q < 6) throw ParameterError("verify_prop2 needs Q >= 6 (got Q = " + std::to_string(p.Q) + ")");
        const Component w = p.P > 0 ? Component::f1 : Component::f2;
        return verdict_output(verify_prop2(p, frobenius_solve(p, w, c.order, progress_options(c, err, "prop2")), bound));
    }
    throw ParameterError("unknown suite '" + c.suite + "'");
}

Output cmd_reproduce(const RunConfig& c, std::ostream& err) {
    const long order = order_or(c, 1002);
    const PrimeTable table(c.prime_bound ? c.prime_bound : kDefaultSieveBound);
    const MLDEParams p = derive_params(Rational(3, 10), Rational(2, 10));
    const QExpansion f1 = frobenius_solve(p, Component::f1, order, progress_options(c, err, "reproduce f1"));
    const QExpansion f2 = frobenius_solve(p, Component::f2, order, progress_options(c, err, "reproduce f2"));
    const ReproductionReport r = check_published_claims(p, f1, f2, table);

    Output o;
    o.json = to_json(r);
    std::ostringstream text, csv;
    csv << "component,offset,mode,label,index,exact,expected_over_observed\n";
    for (const auto& a : r.assignments) {
        const std::string name(to_string(a.component));
        text << name << " offset " << a.offset << ": strict " << (a.strict_match ? "match" : "no match");
        if (a.strict.size() < 3) text << " (order too small)";
        if (a.rescaling)
            text << ", rescaled by " << a.rescaling->to_string() << ": " << (a.rescaled_match ? "match" : "no match");
        else if (a.strict.size() == 3)
            text << ", no consistent rescaling";
        text << "\n";
        auto rows = [&](const std::vector<ClaimComparison>& list, const char* mode) {
            for (const auto& cmp : list)
                csv << name << "," << a.offset << "," << mode << "," << cmp.label << "," << cmp.index << ","
                    << (cmp.exact ? "true" : "false") << "," << csv_field(cmp.discrepancy.to_string()) << "\n";
        };
        rows(a.strict, "strict");
        rows(a.rescaled, "rescaled");
    }
    if (r.chosen) {
        const auto& a = r.assignments[*r.chosen];
        text << "chosen: " << to_string(a.component) << ", offset " << a.offset << ", "
             << (a.strict_match ? "strict" : "rescaled by " + a.rescaling->value().to_string()) << "\n";
    } else {
        text << "no consistent assignment matches all three claims\n";
    }
    o.text = text.str();
    o.csv = csv.str();
    const bool matched = c.strict ? r.chosen && r.assignments[*r.chosen].strict_match : r.pass();
    o.code = matched ? kPass : (order < 1002 ? kInconclusive : kFail);
    return o;
}

void emit(const RunConfig& c, const Output& o, std::ostream& out) {
    std::string body = c.format == "json" ? o.json.dump(2) + "\n" : c.format == "csv" ? o.csv : o.text;
    if (c.out.empty()) {
        out << body;
        return;
    }
    std::ofstream file(c.out, std::ios::binary);
    if (!file) throw ParameterError("cannot open output file '" + c.out + "'");
    file << body;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Exact q-expansions of second-order modular differential equation solutions", "vvmf"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto common = [&c](CLI::App* sub) {
        sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", c.out, "Write output to this file instead of stdout");
    };
    auto exponents = [&c](CLI::App* sub) {
        sub->add_option("--m1", c.m1, "First exponent (rational)");
        sub->add_option("--m2", c.m2, "Second exponent (rational)");
    };
    auto solve_opts = [&c](CLI::App* sub) {
        sub->add_option("--order", c.order, "Relative order of the expansions")->check(CLI::NonNegativeNumber);
        sub->add_option("--component", c.component)->check(CLI::IsMember({"f1", "f2", "both"}));
        sub->add_option("--progress", c.progress, "Report progress to stderr every N coefficients")
            ->check(CLI::NonNegativeNumber);
    };

    auto* derive = app.add_subcommand("derive", "Print the equation parameters for an exponent pair");
    exponents(derive);
    common(derive);

    auto* expand = app.add_subcommand("expand", "Expand one or both solutions");
    exponents(expand);
    solve_opts(expand);
    expand->add_option("--method", c.method)->check(CLI::IsMember({"frobenius", "hypergeometric", "both"}));
    common(expand);

    auto* analyze_cmd = app.add_subcommand("analyze", "Factor the coefficient denominators");
    exponents(analyze_cmd);
    solve_opts(analyze_cmd);
    analyze_cmd->add_option("--method", c.method)->check(CLI::IsMember({"frobenius", "hypergeometric", "both"}));
    analyze_cmd->add_option("--prime-bound", c.prime_bound, "Sieve bound for trial division")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));
    analyze_cmd->add_option("--stride", c.stride, "Spacing of lcm checkpoints")->check(CLI::PositiveNumber);
    common(analyze_cmd);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", c.suite)
        ->required()
        ->check(CLI::IsMember({"identities", "cross-oracle", "lemma", "prop2"}));
    exponents(verify);
    solve_opts(verify);
    verify->add_option("--p", c.p, "Numerator P of m1 - m2 (lemma suite)");
    verify->add_option("--q", c.q, "Denominator Q of m1 - m2 (lemma suite)");
    verify->add_option("--prime-bound", c.prime_bound, "Largest progression prime to check")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));
    common(verify);

    auto* reproduce = app.add_subcommand("reproduce-paper", "Check the published denominators for (3/10, 2/10)");
    reproduce->add_option("--order", c.order, "Relative order (default 1002)")->check(CLI::NonNegativeNumber);
    reproduce->add_option("--prime-bound", c.prime_bound, "Sieve bound for trial division")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));
    reproduce->add_flag("--strict", c.strict, "Require a match without rescaling");
    reproduce->add_option("--progress", c.progress, "Report progress to stderr every N coefficients")
        ->check(CLI::NonNegativeNumber);
    common(reproduce);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    try {
        Output o;
        if (*derive) o = cmd_derive(c);
        else if (*expand) o = cmd_expand(c, err);
        else if (*analyze_cmd) o = cmd_analyze(c, err);
        else if (*verify) o = cmd_verify(c, err);
        else o = cmd_reproduce(c, err);
        emit(c, o, out);
        return o.code;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnfactoredResidue& e) {
        err << "error: " << e.what() << "\n";
        return kInconclusive;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFail;
    }
}

}  // namespace vvmf::cli
