// Command-line front end for the two algebraic lambda calculi: parsing,
// reduction, CPS translation, inverse translation, classification, and the
// property-check suite.

#include "alc/harness.hpp"
#include "alc/syntax.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace alc;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitTimeout = 4;

struct TermInput {
    std::string inline_text;
    std::string file;
    std::string ring = "rational";

    void attach(CLI::App* cmd) {
        cmd->add_option("term", inline_text, "term in concrete syntax");
        cmd->add_option("--file", file, "read the term from a file instead");
        cmd->add_option("--ring", ring, "rational|gaussian");
    }

    TermPtr parse() const {
        std::string text = inline_text;
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw ParseError("cannot open file: " + file, 0);
            text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        }
        if (text.empty()) throw ParseError("no term given", 0);
        RingMode mode = ring == "gaussian" ? RingMode::Gaussian : RingMode::Rational;
        return parse_term(text, mode);
    }
};

Relation relation_of(const std::string& s) {
    if (s == "lin") return Relation::Lin;
    if (s == "alg") return Relation::Alg;
    throw ParseError("unknown calculus: " + s, 0);
}

Direction direction_of(const std::string& s) {
    if (s == "v2n") return Direction::V2N;
    if (s == "n2v") return Direction::N2V;
    throw ParseError("unknown direction: " + s, 0);
}

json trace_json(const Trace& t) {
    json steps = json::array();
    for (const auto& s : t.steps)
        steps.push_back({{"rule", rule_name(s.rule)},
                         {"path", s.position},
                         {"term", print_term(s.target)}});
    return {{"initial", print_term(t.initial)}, {"steps", steps}};
}

json report_json(const CheckReport& r) {
    json fails = json::array();
    for (const auto& f : r.failures) fails.push_back({{"detail", f.detail}, {"replay", f.replay}});
    return {{"name", r.name},
            {"instances", r.attempted},
            {"inconclusive", r.inconclusive},
            {"failures", fails},
            {"passed", r.passed()}};
}

int run_check(const std::string& lemma, uint64_t seed, int instances, int depth,
              size_t budget, const std::string& format) {
    GenConfig cfg = GenConfig::defaults();
    cfg.seed = seed;
    cfg.max_depth = depth;
    Budgets budgets;
    budgets.search_states = budget;

    std::vector<std::string> ids;
    if (lemma == "all") {
        ids = lemma_ids();
    } else {
        if (!is_lemma_id(lemma)) {
            std::cerr << "unknown lemma id '" << lemma << "'; known ids:\n";
            for (const auto& id : lemma_ids()) std::cerr << "  " << id << "\n";
            return kExitUsage;
        }
        ids.push_back(lemma);
    }

    Coverage cov;
    std::vector<CheckReport> reports;
    bool any_failed = false;
    for (const auto& id : ids) {
        CheckReport r = check_lemma(id, cfg, instances, budgets, cov);
        any_failed = any_failed || !r.passed();
        reports.push_back(std::move(r));
    }

    if (format == "structured") {
        json out;
        out["reports"] = json::array();
        for (const auto& r : reports) out["reports"].push_back(report_json(r));
        json cover;
        for (size_t i = 0; i < cov.counts.size(); i++)
            cover[rule_name(static_cast<RuleLabel>(i))] = cov.counts[i];
        out["rule_coverage"] = cover;
        out["all_rules_covered"] = cov.all_covered();
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << report_line(r) << "\n";
            size_t shown = 0;
            for (const auto& f : r.failures) {
                if (shown++ >= 3) {
                    std::cout << "  ... " << r.failures.size() - shown + 1 << " more failures\n";
                    break;
                }
                std::cout << "  FAIL " << f.replay << "\n       " << f.detail << "\n";
            }
        }
        std::cout << "rule coverage: " << cov.summary() << "\n";
        if (!cov.all_covered()) {
            std::cout << "uncovered rule lines:";
            for (const auto& m : cov.missing()) std::cout << " " << m;
            std::cout << "\n";
        }
        std::cout << "note: these checks test universally quantified statements on random "
                     "instances; they can refute a property but never prove it.\n";
    }
    return any_failed ? kExitCheckFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App cli{"algebraic lambda calculi: reduction, CPS simulations, inverses"};
    cli.require_subcommand(1);

    TermInput in_parse, in_reduce, in_trace, in_translate, in_invert, in_classify;
    std::string calculus = "lin", dir_s = "v2n", format = "text";
    size_t steps = 1000;
    bool apply_k = false;

    auto* cmd_parse = cli.add_subcommand("parse", "parse and pretty-print a term");
    in_parse.attach(cmd_parse);

    auto* cmd_reduce = cli.add_subcommand("reduce", "normalize a term");
    in_reduce.attach(cmd_reduce);
    cmd_reduce->add_option("--calculus", calculus, "lin|alg")->required();
    cmd_reduce->add_option("--steps", steps, "step budget");

    auto* cmd_trace = cli.add_subcommand("trace", "normalize and print every step");
    in_trace.attach(cmd_trace);
    cmd_trace->add_option("--calculus", calculus, "lin|alg")->required();
    cmd_trace->add_option("--steps", steps, "step budget");
    cmd_trace->add_option("--format", format, "text|structured");

    auto* cmd_translate = cli.add_subcommand("translate", "CPS-translate a source term");
    in_translate.attach(cmd_translate);
    cmd_translate->add_option("--dir", dir_s, "v2n|n2v")->required();
    cmd_translate->add_flag("--apply-k", apply_k, "apply the image to the free continuation k");

    auto* cmd_invert = cli.add_subcommand("invert", "decompile a CPS-image term");
    in_invert.attach(cmd_invert);
    cmd_invert->add_option("--dir", dir_s, "v2n|n2v")->required();

    auto* cmd_classify = cli.add_subcommand("classify", "grammar class of a CPS-image term");
    in_classify.attach(cmd_classify);
    cmd_classify->add_option("--dir", dir_s, "v2n|n2v")->required();

    std::string lemma = "all";
    uint64_t seed = 1;
    int instances = 500;
    int depth = 5;
    size_t budget = 20000;
    auto* cmd_check = cli.add_subcommand("check", "run the property suite");
    cmd_check->add_option("--lemma", lemma, "lemma id or 'all'");
    cmd_check->add_option("--seed", seed, "generator seed");
    cmd_check->add_option("--instances", instances, "instances per lemma");
    cmd_check->add_option("--depth", depth, "maximum generated term depth");
    cmd_check->add_option("--budget", budget, "state budget per reachability search");
    cmd_check->add_option("--format", format, "text|structured");

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = cli.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_parse->parsed()) {
            std::cout << print_term(in_parse.parse()) << "\n";
            return kExitOk;
        }
        if (cmd_reduce->parsed()) {
            auto out = normalize(in_reduce.parse(), relation_of(calculus), steps, false);
            if (out.status == NormalizeOutcome::Status::Timeout) {
                std::cout << "TIMEOUT\n";
                std::cerr << "no value within " << steps
                          << " steps; stopped at: " << print_term(out.term) << "\n";
                return kExitTimeout;
            }
            if (out.status == NormalizeOutcome::Status::Stuck)
                std::cerr << "normal form is not a value (stuck term)\n";
            std::cout << print_term(out.term) << "\n";
            return kExitOk;
        }
        if (cmd_trace->parsed()) {
            auto out = normalize(in_trace.parse(), relation_of(calculus), steps, true);
            if (format == "structured") {
                json j = trace_json(out.trace);
                j["status"] = out.status == NormalizeOutcome::Status::Value    ? "value"
                              : out.status == NormalizeOutcome::Status::Stuck ? "stuck"
                                                                              : "timeout";
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << trace_to_text(out.trace);
                if (out.status == NormalizeOutcome::Status::Timeout) std::cout << "TIMEOUT\n";
            }
            return out.status == NormalizeOutcome::Status::Timeout ? kExitTimeout : kExitOk;
        }
        if (cmd_translate->parsed()) {
            TermPtr img = cps(in_translate.parse(), direction_of(dir_s));
            if (apply_k) img = app(img, var(cont_k()));
            std::cout << print_term(img) << "\n";
            return kExitOk;
        }
        if (cmd_invert->parsed()) {
            TermPtr t = in_invert.parse();
            Direction dir = direction_of(dir_s);
            switch (classify(t, dir)) {
                case GrammarClass::BaseComputation:
                case GrammarClass::Computation:
                    std::cout << print_term(inv_computation(t, dir)) << "\n";
                    return kExitOk;
                case GrammarClass::BaseSuspension:
                case GrammarClass::Suspension:
                    std::cout << print_term(inv_suspension(t, dir)) << "\n";
                    return kExitOk;
                case GrammarClass::CpsValue:
                    std::cout << print_term(inv_value(t, dir)) << "\n";
                    return kExitOk;
                case GrammarClass::Continuation:
                    std::cerr << "a continuation has a hole; fill it before inverting\n";
                    return kExitPrecondition;
                case GrammarClass::None:
                    std::cerr << "term is outside the CPS-image grammar for " << dir_s << "\n";
                    return kExitPrecondition;
            }
            return kExitPrecondition;
        }
        if (cmd_classify->parsed()) {
            std::cout << grammar_class_name(classify(in_classify.parse(), direction_of(dir_s)))
                      << "\n";
            return kExitOk;
        }
        if (cmd_check->parsed())
            return run_check(lemma, seed, instances, depth, budget, format);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const TermError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitUsage;
}
