#pragma once

// Decides whether the word coding the orbit of 0 under a normalized 3iet is
// a fixed point of a primitive substitution, and builds that substitution
// from the first return map to J = L'[c, c+l).

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "iet3/iet.hpp"
#include "iet3/quadunit.hpp"
#include "iet3/substitution.hpp"

namespace iet3 {

enum class Verdict { Invariant, NotInvariant, Degenerate };
std::string verdict_name(Verdict v);

/// e in (0,1) and e' not in (0,1).
bool is_sturm(const QuadNum& eps);

/// The exact inputs of the decision, with witnesses for each inequality.
struct ConditionReport {
    bool non_degenerate = false;
    bool sturm = false;
    bool in_field = true;      // c, l in Q(e) holds by construction
    QuadNum lower, upper;      // min(e', 1-e'), max(e', 1-e')
    QuadNum neg_c_conj;        // -c'
    QuadNum end_conj;          // c' + l'
    bool neg_c_in_range = false;
    bool end_in_range = false;

    bool holds() const { return non_degenerate && sturm && in_field && neg_c_in_range && end_in_range; }
};

ConditionReport evaluate_conditions(const IetSpec& spec);
Verdict verdict_of(const ConditionReport& cond);

struct ReturnSystem {
    Interval J;
    std::array<Interval, 3> K;        // L' I_A, L' I_B, L' I_C
    std::array<Word, 3> names;        // return names w_A, w_B, w_C
    std::array<Interval, 3> landing;  // T^{r_i}(K_i)

    std::array<std::int64_t, 3> times() const {
        return {static_cast<std::int64_t>(names[0].size()), static_cast<std::int64_t>(names[1].size()),
                static_cast<std::int64_t>(names[2].size())};
    }
};

/// Walks each K_i as a whole interval until it returns to J. Throws
/// StraddlesDiscontinuity when an interval would have to be split, and
/// StepBudgetExceeded past `budget` steps for one walk.
ReturnSystem return_system(const IetSpec& spec, const QuadNum& lambda, std::int64_t budget);

/// T^{r_i}(K_i) == L' T(I_i) for every i.
bool check_homothety(const IetSpec& spec, const QuadNum& lambda, const ReturnSystem& rs);

/// Over n in [-window, window): phi-blocks of u start exactly where T^n(0) is
/// in J, and a block phi(X) starts only where T^n(0) is in L' I_X.
bool check_block_starts(const IetSpec& spec, const Substitution& sub, const QuadNum& lambda, std::int64_t window);

/// The unique z in J whose return block contains z0 (backward iteration).
QuadNum ancestor(const IetSpec& spec, const Interval& J, const QuadNum& z0, std::int64_t budget);

/// anc_J(z0) == L' z0 agrees with z0' <= 0 <= T(z0)' for J = L'[c, c+l).
bool check_lemma_ancestor(const IetSpec& spec, const QuadNum& lambda, const QuadNum& z0, std::int64_t budget = 1'000'000);

/// Parameters (1-e, l, c): the exchange T^{-1}, whose coded word is the
/// mirror image of the original with A and C swapped. An involution.
IetSpec reversed(const IetSpec& spec);
/// reversed(), restricted to e' > 1 (NotApplicable otherwise).
IetSpec reduce_by_reversal(const IetSpec& spec);

/// phi(x) = mirror(swap(psi(swap(x)))) with swap exchanging A and C: carries a
/// substitution fixing the reversed word back to the original word.
Substitution unreverse(const Substitution& psi);

struct SynthesisOptions {
    std::int64_t step_budget = 1'000'000;
    std::int64_t verify_radius = 10'000;
    std::int64_t block_window = 1'000;
};

struct SynthesisChecks {
    bool fixed_point = false;
    std::int64_t fixed_point_radius = 0;
    bool eigenvector = false;
    bool homothety = false;
    bool block_starts = false;
    bool primitive = false;

    bool all() const { return fixed_point && eigenvector && homothety && block_starts && primitive; }
};

struct Synthesis {
    ScalingUnit unit;
    ReturnSystem returns;      // of the exchange actually walked (the reduced one when reversed)
    Substitution substitution; // fixes the word of the original spec
    bool reversed = false;
    std::string ladder;        // which rung produced the unit: "d'", "d' x2^k", "d"
    SynthesisChecks checks;
};

/// Requires e' < 0 (NotApplicable otherwise). Tries the class-fixing power
/// first, then doubled powers up to q^2, then the all-class order. Throws
/// SynthesisFailed if no rung verifies.
Synthesis synthesize(const IetSpec& spec, const SynthesisOptions& opts = {});

/// synthesize() for either kind of Sturm slope; e' > 1 goes through reversal.
Synthesis synthesize_any(const IetSpec& spec, const SynthesisOptions& opts = {});

struct DecisionReport {
    Verdict verdict = Verdict::NotInvariant;
    ConditionReport conditions;
    std::optional<Synthesis> witness;
};

/// Verdict from the exact inequalities; on Invariant, also a synthesized and
/// verified substitution (when `with_witness`).
DecisionReport decide(const IetSpec& spec, const SynthesisOptions& opts = {}, bool with_witness = true);

}  // namespace iet3
