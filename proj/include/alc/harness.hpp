#pragma once

#include "alc/cps.hpp"
#include "alc/inverse.hpp"
#include "alc/rewrite.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace alc {

struct GenWeights {
    int var = 3, lam = 2, app = 3, zero = 1, scale = 2, sum = 3;
};

struct GenConfig {
    uint64_t seed = 1;
    int max_depth = 5;
    std::vector<Scalar> scalar_pool;
    std::vector<VarName> var_pool;
    GenWeights weights;
    bool value_only = false;

    static GenConfig defaults();
};

class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}
    uint64_t below(uint64_t n) { return n ? eng_() % n : 0; }
    bool chance(unsigned num, unsigned den) { return below(den) < num; }
    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }

private:
    std::mt19937_64 eng_;
};

// Random source term, deterministic in the engine state; value_only keeps
// the linear structure inside the value grammar (abstraction bodies are
// still arbitrary).
TermPtr gen_term(const GenConfig& cfg, Rng& rng);
TermPtr gen_term_depth(const GenConfig& cfg, Rng& rng, int depth, bool value_only);

// Generators for the CPS-image grammar classes of a direction; they emit
// the reserved names literally, matching the translation output.
TermPtr gen_cps_value(const GenConfig& cfg, Rng& rng, Direction dir, int depth);
TermPtr gen_base_suspension(const GenConfig& cfg, Rng& rng, Direction dir, int depth);
TermPtr gen_suspension(const GenConfig& cfg, Rng& rng, Direction dir, int depth);
TermPtr gen_continuation(const GenConfig& cfg, Rng& rng, Direction dir, int depth);
TermPtr gen_base_computation(const GenConfig& cfg, Rng& rng, Direction dir, int depth);

// Per-rule-line fire counters across a suite run. A step counts its base
// rule plus one context line per path component it sits under.
struct Coverage {
    std::array<long, kRuleLineCount> counts{};

    void note(const Step& s);
    void note_all(const std::vector<Step>& steps);
    bool all_covered() const;
    std::vector<std::string> missing() const;
    std::string summary() const;
};

struct Failure {
    std::string detail;  // what failed, with every term involved
    std::string replay;  // instance coordinates (check, direction, index, seed)
};

struct CheckReport {
    std::string name;
    int attempted = 0;
    int inconclusive = 0;  // budget exhausted, neither pass nor fail
    std::vector<Failure> failures;
    std::string note;

    bool passed() const { return failures.empty(); }
};

struct Budgets {
    size_t search_states = 20000;
    size_t normalize_steps = 1000;
};

// Identifiers accepted by check_lemma (and the CLI `check --lemma`).
const std::vector<std::string>& lemma_ids();
bool is_lemma_id(const std::string& id);

// Runs one named property check on `instances` random instances (split
// across both directions where the property is directional). Throws
// PreconditionError for unknown ids.
CheckReport check_lemma(const std::string& id, const GenConfig& cfg, int instances,
                        const Budgets& budgets, Coverage& cov);

// Simulation checks over generated normalizing source terms.
CheckReport check_soundness(const GenConfig& cfg, int instances, const Budgets& budgets,
                            Coverage& cov);
CheckReport check_completeness(const GenConfig& cfg, int instances, const Budgets& budgets,
                               Coverage& cov);

std::string report_line(const CheckReport& r);

}  // namespace alc
