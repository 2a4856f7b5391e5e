// Command-line driver for the avoidance library.
//
// Exit codes: 0 success, 1 usage error, 2 enumeration budget exceeded,
// 3 verification failure (method disagreement, repro mismatch, internal
// cross-check failure).

#include <charconv>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "avoidance/bijection.hpp"
#include "avoidance/census.hpp"
#include "avoidance/counting.hpp"
#include "avoidance/errors.hpp"
#include "avoidance/pattern.hpp"
#include "avoidance/word.hpp"

namespace av = avoidance;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerification = 3;

std::uint64_t budget_from_env() {
    const char* raw = std::getenv("AVOID_ENUM_BUDGET");
    if (raw == nullptr) return av::EnumerationBudget{}.max_words;
    std::uint64_t value = 0;
    const char* end = raw + std::string_view(raw).size();
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc{} || ptr != end || value == 0)
        throw std::invalid_argument("AVOID_ENUM_BUDGET must be a positive integer");
    return value;
}

json fraction_json(const av::Fraction& f) {
    return json{{"numerator", f.num}, {"denominator", f.den}, {"decimal", f.decimal()}};
}

json words_json(const std::vector<av::Word>& words, int k) {
    json out = json::array();
    for (const auto& w : words) out.push_back(w.str(k));
    return out;
}

json pairs_json(const std::vector<std::pair<av::Word, av::Word>>& pairs, int k) {
    json out = json::array();
    for (const auto& [a, b] : pairs) out.push_back(json::array({a.str(k), b.str(k)}));
    return out;
}

json counts_json(const av::CountSeries& series) {
    json out = json::array();
    for (const auto& c : series.counts) out.push_back(c.str());
    return out;
}

json steps_json(const av::ReplacementTrace& trace, int k) {
    json out = json::array();
    for (const auto& step : trace.steps)
        out.push_back(json{{"dir", step.dir == av::ScanDirection::left ? "L" : "R"},
                           {"index", step.start},
                           {"before", step.before.str(k)},
                           {"after", step.after.str(k)}});
    return out;
}

json coefficients_json(const av::IntPolynomial& poly) {
    json out = json::array();
    for (int i = 0; i <= std::max(poly.degree(), 0); ++i)
        out.push_back(poly.coeff(i).convert_to<long long>());
    return out;
}

json bijection_report_json(const av::BijectionReport& report, const av::PatternPair& pair) {
    const int k = pair.alphabet_size();
    json collisions = json::array();
    for (const auto& c : report.collisions)
        collisions.push_back(
            json{{"image", c.image.str(k)}, {"preimages", words_json(c.preimages, k)}});
    return json{{"p", pair.p().word().str(k)},
                {"q", pair.q().word().str(k)},
                {"n", report.n},
                {"domainSize", report.domain_size},
                {"codomainSize", report.codomain_size},
                {"bijection", report.bijective},
                {"collisions", collisions},
                {"imageGaps", words_json(report.image_gaps, k)},
                {"roundtripFailures", words_json(report.round_trip_failures, k)}};
}

json census_report_json(const av::CensusReport& report) {
    return json{{"length", report.pattern_length},
                {"k", report.alphabet_size},
                {"phiL_pairs", report.phi_l_pairs},
                {"composition_pairs", report.composition_pairs},
                {"equivalent_pairs", report.equivalent_pairs},
                {"unexplained", pairs_json(report.unexplained, report.alphabet_size)},
                {"borderless_fraction", fraction_json(report.borderless_fraction)},
                {"profile_one_l_fraction", fraction_json(report.profile_one_l_fraction)}};
}

void print_json(const json& value) { std::cout << value.dump(2) << "\n"; }

std::pair<int, int> parse_sweep(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("sweep must have the form A..B, e.g. 1..10");
    int lo = 0;
    int hi = 0;
    const char* begin = text.data();
    auto lo_result = std::from_chars(begin, begin + dots, lo);
    auto hi_result = std::from_chars(begin + dots + 2, begin + text.size(), hi);
    if (lo_result.ec != std::errc{} || lo_result.ptr != begin + dots ||
        hi_result.ec != std::errc{} || hi_result.ptr != begin + text.size() || lo < 1 || hi < lo)
        throw std::invalid_argument("sweep must have the form A..B with 1 <= A <= B");
    return {lo, hi};
}

std::vector<int> step_starts(const av::ReplacementTrace& trace) {
    std::vector<int> out;
    out.reserve(trace.steps.size());
    for (const auto& step : trace.steps) out.push_back(step.start);
    return out;
}

// ---- repro: bundled worked examples as executable checks ----------------

struct ReproCheck {
    std::string name;
    std::function<std::string()> run;  // empty string on success, detail on failure
};

std::string check_equal_series(const av::CountSeries& a, const av::CountSeries& b) {
    if (a.same_counts(b)) return {};
    return "series disagree: " + std::string(av::to_string(a.method)) + " vs " +
           std::string(av::to_string(b.method));
}

std::vector<ReproCheck> repro_checks(int max_census_length, std::uint64_t budget_words,
                                     av::Exec mode) {
    const av::EnumerationBudget budget{budget_words};
    auto pat = [](std::string_view text) {
        return av::Pattern::compile(av::Word::parse(text, 2), 2);
    };
    auto word = [](std::string_view text) { return av::Word::parse(text, 2); };

    std::vector<ReproCheck> checks;

    checks.push_back({"borders.0110.1011", [=] {
        const auto p = pat("0110");
        const auto q = pat("1011");
        if (p.border_lengths() != std::vector<int>{1, 4}) return std::string("b(0110) != {1,4}");
        if (q.border_lengths() != std::vector<int>{1, 4}) return std::string("b(1011) != {1,4}");
        if (p.proper_borders() != std::vector<av::Word>{word("0")})
            return std::string("proper borders of 0110 != {0}");
        return std::string{};
    }});

    checks.push_back({"borders.0010010", [=] {
        if (pat("0010010").border_lengths() != std::vector<int>{1, 4, 7})
            return std::string("b(0010010) != {1,4,7}");
        if (pat("0110110").border_lengths() != std::vector<int>{1, 4, 7})
            return std::string("b(0110110) != {1,4,7}");
        return std::string{};
    }});

    checks.push_back({"gf.0110", [=] {
        const av::RationalGF gf = av::avoidance_gf(pat("0110"));
        const av::IntPolynomial num({1, 0, 0, 1});
        const av::IntPolynomial den({1, -2, 0, 1, -1});
        if (!(gf.numerator == num)) return std::string("numerator != 1 + x^3");
        if (!(gf.denominator == den)) return std::string("denominator != 1 - 2x + x^3 - x^4");
        return std::string{};
    }});

    checks.push_back({"series.0110.four.methods", [=] {
        const auto p = pat("0110");
        const auto gf = av::gf_series(av::avoidance_gf(p), 12);
        const auto rec = av::recurrence_counts(p, 12);
        const auto aut = av::automaton_counts(p, 12);
        const auto brute = av::brute_force_counts(p, 12, budget, mode);
        for (const auto* other : {&rec, &aut, &brute})
            if (auto msg = check_equal_series(gf, *other); !msg.empty()) return msg;
        const std::vector<av::BigInt> head{1, 2, 4, 8, 15, 28};
        for (std::size_t i = 0; i < head.size(); ++i)
            if (gf.counts[i] != head[i]) return std::string("series head != 1,2,4,8,15,28");
        return std::string{};
    }});

    checks.push_back({"equivalent.0110.1011", [=] {
        const auto p = pat("0110");
        const auto q = pat("1011");
        if (!av::are_avoidant_equivalent(p, q)) return std::string("not equivalent");
        if (av::first_difference_index(p, q)) return std::string("difference index not none");
        return check_equal_series(av::automaton_counts(p, 20), av::automaton_counts(q, 20));
    }});

    checks.push_back({"bijection.1001.1101", [=] {
        av::PatternPair pair(pat("1001"), pat("1101"));
        if (!pair.same_proper_borders()) return std::string("proper borders differ");
        const auto report = av::verify_bijection(pair, 6, budget, mode);
        if (!report.bijective) return std::string("phi_L not bijective at n=6");
        return std::string{};
    }});

    checks.push_back({"composition.0110.1101", [=] {
        const auto c = av::classify_pair(pat("0110"), pat("1101"), budget, mode);
        if (!c.equivalent) return std::string("not equivalent");
        if (c.phi_l_bijective) return std::string("phi_L unexpectedly bijective");
        if (!c.composition_bijective) return std::string("no composition bijection");
        return std::string{};
    }});

    checks.push_back({"phiL.0001001", [=] {
        av::PatternPair pair(pat("011"), pat("001"));
        if (av::single_scan_l(word("0001001"), pair) != word("0011001"))
            return std::string("first L step != 0011001");
        const auto result = av::phi_l(word("0001001"), pair);
        if (result.word != word("0111011")) return std::string("phi_L != 0111011");
        if (step_starts(result.trace) != std::vector<int>{1, 0, 4})
            return std::string("trace starts != 1,0,4");
        return std::string{};
    }});

    checks.push_back({"phiR.0111011", [=] {
        av::PatternPair pair(pat("011"), pat("001"));
        const auto result = av::phi_r(word("0111011"), pair);
        if (result.word != word("0001001")) return std::string("phi_R != 0001001");
        if (step_starts(result.trace) != std::vector<int>{4, 0, 1})
            return std::string("trace starts != 4,0,1");
        return std::string{};
    }});

    checks.push_back({"phiRbar.1001000", [=] {
        av::PatternPair pair(pat("011"), pat("001"));
        const auto result = av::phi_r_bar(word("1001000"), pair);
        if (result.word != word("1101110")) return std::string("phi_R_bar != 1101110");
        if (step_starts(result.trace) != std::vector<int>{3, 4, 0})
            return std::string("trace starts != 3,4,0");
        const auto conjugated = av::reverse(av::phi_r_bar(av::reverse(word("0001001")), pair).word);
        if (conjugated != word("0111011"))
            return std::string("reverse(phi_R_bar(reverse(w))) != phi_L(w)");
        return std::string{};
    }});

    checks.push_back({"conjugation.011.001.n7", [=] {
        av::PatternPair pair(pat("011"), pat("001"));
        const auto report = av::verify_conjugation(pair, 7, budget, mode);
        if (!report.ok()) return std::string("conjugation identity violated");
        return std::string{};
    }});

    checks.push_back({"phiL.1001001011", [=] {
        av::PatternPair pair(pat("0110"), pat("0010"));
        const auto forward = av::phi_l(word("1001001011"), pair);
        if (forward.word != word("1011011011")) return std::string("phi_L != 1011011011");
        if (step_starts(forward.trace) != std::vector<int>{1, 4})
            return std::string("forward trace starts != 1,4");
        const auto back = av::phi_r(forward.word, pair);
        if (back.word != word("1001001011")) return std::string("phi_R round trip failed");
        if (step_starts(back.trace) != std::vector<int>{4, 1})
            return std::string("backward trace starts != 4,1");
        return std::string{};
    }});

    // The collision example replaces the leftmost 1011 by 0100, i.e. the
    // scanned pattern q is 1011 and the replacement p is 0100.
    checks.push_back({"collision.0101011.1011100", [=] {
        av::PatternPair pair(pat("0100"), pat("1011"));
        const auto a = av::phi_l(word("0101011"), pair).word;
        const auto b = av::phi_l(word("1011100"), pair).word;
        if (a != word("0100100") || b != word("0100100"))
            return std::string("collision images != 0100100");
        const auto report = av::verify_bijection(pair, 7, budget, mode);
        if (report.bijective) return std::string("pair unexpectedly bijective at n=7");
        if (report.collisions.empty()) return std::string("no collision reported");
        return std::string{};
    }});

    checks.push_back({"balance.1101110", [=] {
        av::PatternPair pair(pat("001"), pat("110"));
        const auto result = av::phi_l(word("1101110"), pair);
        if (result.word != word("0000101")) return std::string("phi_L != 0000101");
        if (result.trace.step_count() != 3) return std::string("step count != 3");
        const auto balance = av::occurrence_balance(word("1101110"), pair);
        if (balance.q_in_input != 2 || balance.p_in_image != 1)
            return std::string("occurrence balance != (2,1)");
        return std::string{};
    }});

    struct Row {
        int length;
        std::uint64_t phi_l, composition, equivalent;
    };
    static constexpr Row kTable[] = {
        {1, 1, 1, 1},
        {2, 1, 2, 2},
        {3, 6, 8, 8},
        {4, 21, 32, 32},
        {5, 88, 120, 120},
        {6, 312, 460, 460},
        {7, 1212, 1708, 1716},
        {8, 4649, 6764, 6780},
        {9, 18264, 26072, 26168},
        {10, 71058, 103460, 103764},
        {11, 279946, 403836, 405404},
        {12, 1107836, 1613132, 1618556},
    };
    for (const Row& row : kTable) {
        if (row.length > max_census_length) break;
        checks.push_back({"census.length." + std::to_string(row.length), [=] {
            const auto report = av::census(row.length, 2, budget, mode);
            std::ostringstream got;
            got << report.phi_l_pairs << "/" << report.composition_pairs << "/"
                << report.equivalent_pairs;
            std::ostringstream want;
            want << row.phi_l << "/" << row.composition << "/" << row.equivalent;
            if (got.str() != want.str()) return "got " + got.str() + ", want " + want.str();
            return std::string{};
        }});
    }

    checks.push_back({"densities.l20", [=] {
        const auto [borderless, one_l] = av::borderless_stats(20, 2, budget, mode);
        const double b = borderless.value();
        const double o = one_l.value();
        if (b < 0.25 || b > 0.29) return "borderless fraction " + borderless.decimal() + " outside [0.25,0.29]";
        if (o < 0.28 || o > 0.32) return "{1,l} fraction " + one_l.decimal() + " outside [0.28,0.32]";
        return std::string{};
    }});

    return checks;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"avoidant-equivalence toolkit: borders, counting, replacement bijections, census"};
    app.require_subcommand(1);

    std::uint64_t budget_words = 0;  // resolved after parse: flag > env > default
    bool serial = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--budget", budget_words,
                        "enumeration budget in words (overrides AVOID_ENUM_BUDGET)");
        sub->add_flag("--serial", serial, "disable parallel kernels");
    };

    // borders
    std::string borders_word;
    int borders_k = 2;
    std::string borders_format = "json";
    auto* cmd_borders = app.add_subcommand("borders", "border structure of a word");
    cmd_borders->add_option("word", borders_word, "the word to analyze")->required();
    cmd_borders->add_option("--alphabet,-k", borders_k, "alphabet size")->capture_default_str();
    cmd_borders->add_option("--format", borders_format, "json|plain")
        ->check(CLI::IsMember({"json", "plain"}));

    // count
    std::string count_pattern;
    int count_k = 2;
    int count_n = 0;
    std::string count_method = "all";
    std::string count_format = "json";
    auto* cmd_count = app.add_subcommand("count", "avoidance counts |A_n(p)|");
    cmd_count->add_option("pattern", count_pattern, "the pattern")->required();
    cmd_count->add_option("--n", count_n, "maximum word length")->required();
    cmd_count->add_option("--method", count_method, "gf|recurrence|automaton|brute|all")
        ->capture_default_str()
        ->check(CLI::IsMember({"gf", "recurrence", "automaton", "brute", "all"}));
    cmd_count->add_option("--alphabet,-k", count_k, "alphabet size")->capture_default_str();
    cmd_count->add_option("--format", count_format, "json|plain")
        ->check(CLI::IsMember({"json", "plain"}));
    add_common(cmd_count);

    // gf
    std::string gf_pattern;
    int gf_k = 2;
    auto* cmd_gf = app.add_subcommand("gf", "rational generating function of the avoidance series");
    cmd_gf->add_option("pattern", gf_pattern, "the pattern")->required();
    cmd_gf->add_option("--alphabet,-k", gf_k, "alphabet size")->capture_default_str();

    // bijection apply | verify | conjugation
    auto* cmd_bijection = app.add_subcommand("bijection", "replacement bijections phi_L / phi_R");
    cmd_bijection->require_subcommand(1);

    std::string bij_p, bij_q, bij_word, bij_direction = "L";
    int bij_k = 2;
    bool bij_trace = false;
    std::uint64_t bij_max_steps = 0;
    auto* cmd_apply = cmd_bijection->add_subcommand("apply", "apply one replacement fixpoint");
    cmd_apply->add_option("--p", bij_p, "pattern p")->required();
    cmd_apply->add_option("--q", bij_q, "pattern q")->required();
    cmd_apply->add_option("--word", bij_word, "input word")->required();
    cmd_apply->add_option("--direction", bij_direction, "L|R|Lbar|Rbar")
        ->capture_default_str()
        ->check(CLI::IsMember({"L", "R", "Lbar", "Rbar"}));
    cmd_apply->add_flag("--trace", bij_trace, "include the replacement steps");
    cmd_apply->add_option("--max-steps", bij_max_steps, "step limit (0 = k^n bound)");
    cmd_apply->add_option("--alphabet,-k", bij_k, "alphabet size")->capture_default_str();

    std::string verify_p, verify_q;
    int verify_k = 2, verify_n = 0;
    auto* cmd_verify = cmd_bijection->add_subcommand("verify", "exhaustively verify phi_L at one n");
    cmd_verify->add_option("--p", verify_p, "pattern p")->required();
    cmd_verify->add_option("--q", verify_q, "pattern q")->required();
    cmd_verify->add_option("--n", verify_n, "word length")->required();
    cmd_verify->add_option("--alphabet,-k", verify_k, "alphabet size")->capture_default_str();
    add_common(cmd_verify);

    std::string conj_p, conj_q;
    int conj_k = 2, conj_n = 0;
    auto* cmd_conj =
        cmd_bijection->add_subcommand("conjugation", "verify the reversal conjugation identities");
    cmd_conj->add_option("--p", conj_p, "pattern p")->required();
    cmd_conj->add_option("--q", conj_q, "pattern q")->required();
    cmd_conj->add_option("--n", conj_n, "word length")->required();
    cmd_conj->add_option("--alphabet,-k", conj_k, "alphabet size")->capture_default_str();
    add_common(cmd_conj);

    // census
    int census_length = 0;
    std::string census_sweep;
    int census_k = 2;
    std::string census_format = "csv";
    auto* cmd_census = app.add_subcommand("census", "pair census over all patterns of a length");
    auto* census_length_opt = cmd_census->add_option("--length", census_length, "single length");
    cmd_census->add_option("--sweep", census_sweep, "length range A..B")->excludes(census_length_opt);
    cmd_census->add_option("--alphabet,-k", census_k, "alphabet size")->capture_default_str();
    cmd_census->add_option("--format", census_format, "csv|json")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));
    add_common(cmd_census);

    // unexplained
    int unex_length = 0;
    int unex_k = 2;
    auto* cmd_unexplained =
        app.add_subcommand("unexplained", "equivalent pairs with no composition bijection");
    cmd_unexplained->add_option("--length", unex_length, "pattern length")->required();
    cmd_unexplained->add_option("--alphabet,-k", unex_k, "alphabet size")->capture_default_str();
    add_common(cmd_unexplained);

    // stats
    int stats_length = 0;
    int stats_k = 2;
    auto* cmd_stats = app.add_subcommand("stats", "borderless and {1,l} profile fractions");
    cmd_stats->add_option("--length", stats_length, "pattern length")->required();
    cmd_stats->add_option("--alphabet,-k", stats_k, "alphabet size")->capture_default_str();
    add_common(cmd_stats);

    // classify
    std::string classify_p, classify_q;
    int classify_k = 2;
    int classify_verify_n = -1;
    auto* cmd_classify = app.add_subcommand("classify", "classify one pattern pair");
    cmd_classify->add_option("--p", classify_p, "pattern p")->required();
    cmd_classify->add_option("--q", classify_q, "pattern q")->required();
    cmd_classify->add_option("--verify-n", classify_verify_n,
                             "also run verify_bijection at this word length");
    cmd_classify->add_option("--alphabet,-k", classify_k, "alphabet size")->capture_default_str();
    add_common(cmd_classify);

    // repro
    int repro_max_census = 10;
    auto* cmd_repro = app.add_subcommand("repro", "re-run the bundled worked examples");
    cmd_repro->add_option("--max-census-length", repro_max_census,
                          "largest census table row to reproduce (<= 12)")
        ->capture_default_str();
    add_common(cmd_repro);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (budget_words == 0) budget_words = budget_from_env();
        const av::EnumerationBudget budget{budget_words};
        const av::Exec mode = serial ? av::Exec::serial : av::Exec::parallel;

        if (*cmd_borders) {
            const auto p = av::Pattern::compile(av::Word::parse(borders_word, borders_k), borders_k);
            if (borders_format == "plain") {
                std::cout << "word: " << p.word().str(borders_k) << "\n";
                std::cout << "border_lengths:";
                for (int b : p.border_lengths()) std::cout << " " << b;
                std::cout << "\nproper_borders:";
                for (const auto& w : p.proper_borders()) std::cout << " " << w.str(borders_k);
                std::cout << "\nborderless: " << (p.is_borderless() ? "true" : "false") << "\n";
            } else {
                json proper = json::array();
                for (const auto& w : p.proper_borders()) proper.push_back(w.str(borders_k));
                print_json(json{{"word", p.word().str(borders_k)},
                                {"k", borders_k},
                                {"border_lengths", p.border_lengths()},
                                {"proper_borders", proper},
                                {"borderless", p.is_borderless()}});
            }
            return kExitOk;
        }

        if (*cmd_count) {
            const auto p = av::Pattern::compile(av::Word::parse(count_pattern, count_k), count_k);
            if (count_n < 0) throw std::invalid_argument("--n must be nonnegative");
            json out{{"pattern", count_pattern}, {"k", count_k}, {"method", count_method},
                     {"n", count_n}};
            int exit_code = kExitOk;
            std::vector<av::BigInt> printed;
            if (count_method == "all") {
                std::vector<av::CountSeries> series;
                series.push_back(av::gf_series(av::avoidance_gf(p), count_n));
                series.push_back(av::recurrence_counts(p, count_n));
                series.push_back(av::automaton_counts(p, count_n));
                const auto total = av::checked_pow(static_cast<std::uint64_t>(count_k),
                                                   static_cast<unsigned>(count_n));
                const bool brute_feasible = total && *total <= budget.max_words;
                if (brute_feasible)
                    series.push_back(av::brute_force_counts(p, count_n, budget, mode));
                bool agree = true;
                json methods = json::array();
                json per_method = json::object();
                for (const auto& s : series) {
                    methods.push_back(std::string(av::to_string(s.method)));
                    per_method[std::string(av::to_string(s.method))] = counts_json(s);
                    agree = agree && s.same_counts(series.front());
                }
                out["methods"] = methods;
                out["agreement"] = agree;
                if (agree) {
                    out["counts"] = counts_json(series.front());
                } else {
                    out["series"] = per_method;
                    exit_code = kExitVerification;
                }
            } else {
                const av::CountMethod method = *av::parse_count_method(count_method);
                av::CountSeries series;
                switch (method) {
                    case av::CountMethod::gf:
                        series = av::gf_series(av::avoidance_gf(p), count_n);
                        break;
                    case av::CountMethod::recurrence:
                        series = av::recurrence_counts(p, count_n);
                        break;
                    case av::CountMethod::automaton:
                        series = av::automaton_counts(p, count_n);
                        break;
                    case av::CountMethod::brute:
                        series = av::brute_force_counts(p, count_n, budget, mode);
                        break;
                }
                out["counts"] = counts_json(series);
            }
            if (count_format == "plain") {
                if (out.contains("counts")) {
                    std::string line;
                    for (const auto& c : out["counts"]) {
                        if (!line.empty()) line += ",";
                        line += c.get<std::string>();
                    }
                    std::cout << line << "\n";
                } else {
                    std::cout << "disagreement\n";
                }
            } else {
                print_json(out);
            }
            return exit_code;
        }

        if (*cmd_gf) {
            const auto p = av::Pattern::compile(av::Word::parse(gf_pattern, gf_k), gf_k);
            const av::RationalGF gf = av::avoidance_gf(p);
            print_json(json{{"pattern", gf_pattern},
                            {"k", gf_k},
                            {"numerator", coefficients_json(gf.numerator)},
                            {"denominator", coefficients_json(gf.denominator)}});
            return kExitOk;
        }

        if (*cmd_apply) {
            const av::PatternPair pair(av::Pattern::compile(av::Word::parse(bij_p, bij_k), bij_k),
                                       av::Pattern::compile(av::Word::parse(bij_q, bij_k), bij_k));
            const av::Word input = av::Word::parse(bij_word, bij_k);
            av::PhiResult result;
            if (bij_direction == "L")
                result = av::phi_l(input, pair, bij_max_steps);
            else if (bij_direction == "R")
                result = av::phi_r(input, pair, bij_max_steps);
            else if (bij_direction == "Lbar")
                result = av::phi_l_bar(input, pair, bij_max_steps);
            else
                result = av::phi_r_bar(input, pair, bij_max_steps);
            json out{{"p", bij_p},
                     {"q", bij_q},
                     {"k", bij_k},
                     {"direction", bij_direction},
                     {"input", input.str(bij_k)},
                     {"output", result.word.str(bij_k)},
                     {"stepCount", result.trace.step_count()}};
            if (bij_trace) out["steps"] = steps_json(result.trace, bij_k);
            print_json(out);
            return kExitOk;
        }

        if (*cmd_verify) {
            const av::PatternPair pair(
                av::Pattern::compile(av::Word::parse(verify_p, verify_k), verify_k),
                av::Pattern::compile(av::Word::parse(verify_q, verify_k), verify_k));
            if (verify_n < 0) throw std::invalid_argument("--n must be nonnegative");
            const auto report = av::verify_bijection(pair, verify_n, budget, mode);
            print_json(bijection_report_json(report, pair));
            return kExitOk;
        }

        if (*cmd_conj) {
            const av::PatternPair pair(
                av::Pattern::compile(av::Word::parse(conj_p, conj_k), conj_k),
                av::Pattern::compile(av::Word::parse(conj_q, conj_k), conj_k));
            if (conj_n < 0) throw std::invalid_argument("--n must be nonnegative");
            const auto report = av::verify_conjugation(pair, conj_n, budget, mode);
            print_json(json{{"p", conj_p},
                            {"q", conj_q},
                            {"n", report.n},
                            {"checkedQAvoiders", report.checked_q_avoiders},
                            {"checkedPAvoiders", report.checked_p_avoiders},
                            {"phiRViolations", words_json(report.phi_r_violations, conj_k)},
                            {"phiLViolations", words_json(report.phi_l_violations, conj_k)},
                            {"ok", report.ok()}});
            return kExitOk;
        }

        if (*cmd_census) {
            int lo = census_length;
            int hi = census_length;
            if (!census_sweep.empty()) {
                std::tie(lo, hi) = parse_sweep(census_sweep);
            } else if (census_length < 1) {
                throw std::invalid_argument("census requires --length or --sweep");
            }
            std::vector<av::CensusReport> reports;
            for (int l = lo; l <= hi; ++l) reports.push_back(av::census(l, census_k, budget, mode));
            if (census_format == "csv") {
                std::cout << "length,phiL_pairs,composition_pairs,equivalent_pairs\n";
                for (const auto& r : reports)
                    std::cout << r.pattern_length << "," << r.phi_l_pairs << ","
                              << r.composition_pairs << "," << r.equivalent_pairs << "\n";
            } else {
                if (census_sweep.empty()) {
                    print_json(census_report_json(reports.front()));
                } else {
                    json out = json::array();
                    for (const auto& r : reports) out.push_back(census_report_json(r));
                    print_json(out);
                }
            }
            return kExitOk;
        }

        if (*cmd_unexplained) {
            const auto pairs = av::unexplained_pairs(unex_length, unex_k, budget, mode);
            print_json(json{{"length", unex_length},
                            {"k", unex_k},
                            {"pairs", pairs_json(pairs, unex_k)}});
            return kExitOk;
        }

        if (*cmd_stats) {
            const auto [borderless, one_l] = av::borderless_stats(stats_length, stats_k, budget, mode);
            print_json(json{{"length", stats_length},
                            {"k", stats_k},
                            {"borderless_fraction", fraction_json(borderless)},
                            {"profile_one_l_fraction", fraction_json(one_l)}});
            return kExitOk;
        }

        if (*cmd_classify) {
            const auto p = av::Pattern::compile(av::Word::parse(classify_p, classify_k), classify_k);
            const auto q = av::Pattern::compile(av::Word::parse(classify_q, classify_k), classify_k);
            const auto classification = av::classify_pair(p, q, budget, mode);
            json out{{"p", classify_p},
                     {"q", classify_q},
                     {"k", classify_k},
                     {"equivalent", classification.equivalent},
                     {"phiL_bijective", classification.phi_l_bijective},
                     {"composition_bijective", classification.composition_bijective}};
            const auto first_diff = av::first_difference_index(p, q);
            out["first_difference_index"] = first_diff ? json(*first_diff) : json(nullptr);
            if (classify_verify_n >= 0) {
                av::PatternPair pair(p, q);
                out["verify"] =
                    bijection_report_json(av::verify_bijection(pair, classify_verify_n, budget, mode),
                                          pair);
            }
            print_json(out);
            return kExitOk;
        }

        if (*cmd_repro) {
            if (repro_max_census < 1 || repro_max_census > 12)
                throw std::invalid_argument("--max-census-length must be between 1 and 12");
            const auto checks = repro_checks(repro_max_census, budget_words, mode);
            int failed = 0;
            for (const auto& check : checks) {
                const std::string detail = check.run();
                if (detail.empty()) {
                    std::cout << "PASS  " << check.name << "\n";
                } else {
                    ++failed;
                    std::cout << "FAIL  " << check.name << ": " << detail << "\n";
                }
            }
            std::cout << "repro: " << (checks.size() - static_cast<std::size_t>(failed)) << "/"
                      << checks.size() << " checks passed\n";
            return failed == 0 ? kExitOk : kExitVerification;
        }

        std::cerr << "error: no subcommand selected\n";
        return kExitUsage;
    } catch (const av::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const av::StepLimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitVerification;
    }
}
