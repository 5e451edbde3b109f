#include "iet3/invariance.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace iet3 {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Invariant: return "Invariant";
        case Verdict::NotInvariant: return "NotInvariant";
        case Verdict::Degenerate: return "Degenerate";
    }
    return "?";
}

bool is_sturm(const QuadNum& eps) {
    if (eps.is_rational()) return false;
    const QuadNum one(eps.field(), 1);
    const QuadNum zero(eps.field(), 0);
    if (!(eps > zero && eps < one)) return false;
    QuadNum ec = eps.conjugate();
    return !(ec > zero && ec < one);
}

ConditionReport evaluate_conditions(const IetSpec& spec) {
    ConditionReport r;
    r.non_degenerate = non_degenerate(spec);
    r.sturm = is_sturm(spec.eps());
    QuadNum ec = spec.eps().conjugate();
    QuadNum other = Rational(1) - ec;
    r.lower = std::min(ec, other);
    r.upper = std::max(ec, other);
    r.neg_c_conj = -spec.c().conjugate();
    r.end_conj = (spec.c() + spec.l()).conjugate();
    r.neg_c_in_range = r.lower <= r.neg_c_conj && r.neg_c_conj <= r.upper;
    r.end_in_range = r.lower <= r.end_conj && r.end_conj <= r.upper;
    return r;
}

Verdict verdict_of(const ConditionReport& cond) {
    if (!cond.non_degenerate) return Verdict::Degenerate;
    return cond.holds() ? Verdict::Invariant : Verdict::NotInvariant;
}

ReturnSystem return_system(const IetSpec& spec, const QuadNum& lambda, std::int64_t budget) {
    const QuadNum lc = lambda.conjugate();
    ReturnSystem rs;
    rs.J = scale(lc, spec.domain());
    for (std::size_t i = 0; i < 3; ++i) {
        const char letter = kLetters[i];
        Interval iv = scale(lc, spec.subinterval(letter));
        rs.K[i] = iv;
        Word name;
        for (;;) {
            if (static_cast<std::int64_t>(name.size()) >= budget)
                throw Error(Errc::StepBudgetExceeded,
                            std::string("return walk of K_") + letter + " exceeds " + std::to_string(budget) + " steps");
            if (!spec.domain().contains(iv))
                throw Error(Errc::StraddlesDiscontinuity, "tracked interval left the domain");
            char x = spec.letter_of(iv.lo);
            if (iv.hi > spec.subinterval(x).hi)
                throw Error(Errc::StraddlesDiscontinuity,
                            std::string("walk of K_") + letter + " crosses the right end of I_" + x + " after " +
                                std::to_string(name.size()) + " steps");
            name.push_back(x);
            iv = translate(iv, spec.shift(x));
            if (rs.J.contains(iv)) break;
            if (iv.lo < rs.J.hi && rs.J.lo < iv.hi)
                throw Error(Errc::StraddlesDiscontinuity,
                            std::string("walk of K_") + letter + " partially overlaps J after " +
                                std::to_string(name.size()) + " steps");
        }
        rs.names[i] = std::move(name);
        rs.landing[i] = iv;
    }
    return rs;
}

bool check_homothety(const IetSpec& spec, const QuadNum& lambda, const ReturnSystem& rs) {
    const QuadNum lc = lambda.conjugate();
    for (std::size_t i = 0; i < 3; ++i) {
        const char letter = kLetters[i];
        Interval expected = scale(lc, translate(spec.subinterval(letter), spec.shift(letter)));
        if (!(rs.landing[i] == expected)) return false;
    }
    return true;
}

bool check_block_starts(const IetSpec& spec, const Substitution& sub, const QuadNum& lambda, std::int64_t window) {
    std::int64_t pad = 0;
    for (const auto& img : sub.images()) pad = std::max<std::int64_t>(pad, static_cast<std::int64_t>(img.size()));
    const std::int64_t lo = -window - pad, hi = window + pad;
    const std::vector<QuadNum> pts = orbit_points(spec, lo, hi);
    auto point = [&](std::int64_t n) -> const QuadNum& { return pts[static_cast<std::size_t>(n - lo)]; };
    auto letter = [&](std::int64_t n) { return spec.letter_of(point(n)); };

    std::map<std::int64_t, char> starts;
    std::int64_t p = 0;
    for (std::int64_t m = 0; p < window; ++m) {
        char x = letter(m);
        if (!sub.has_letter(x)) return false;
        starts[p] = x;
        p += static_cast<std::int64_t>(sub.image(x).size());
    }
    p = 0;
    for (std::int64_t m = -1;; --m) {
        char x = letter(m);
        if (!sub.has_letter(x)) return false;
        p -= static_cast<std::int64_t>(sub.image(x).size());
        if (p < -window) break;
        starts[p] = x;
    }

    const QuadNum lc = lambda.conjugate();
    const Interval J = scale(lc, spec.domain());
    std::array<Interval, 3> K;
    for (std::size_t i = 0; i < 3; ++i) K[i] = scale(lc, spec.subinterval(kLetters[i]));

    for (std::int64_t n = -window; n < window; ++n) {
        auto it = starts.find(n);
        bool in_j = J.contains(point(n));
        if (in_j != (it != starts.end())) return false;
        if (in_j && !K[static_cast<std::size_t>(letter_index(it->second))].contains(point(n))) return false;
    }
    return true;
}

QuadNum ancestor(const IetSpec& spec, const Interval& J, const QuadNum& z0, std::int64_t budget) {
    if (!spec.domain().contains(z0)) throw Error(Errc::OutOfDomain, "z0 = " + z0.str() + " is outside the domain");
    QuadNum z = z0;
    for (std::int64_t k = 0; !J.contains(z); ++k) {
        if (k >= budget)
            throw Error(Errc::StepBudgetExceeded, "no ancestor within " + std::to_string(budget) + " backward steps");
        z = inverse_step(spec, z).point;
    }
    return z;
}

bool check_lemma_ancestor(const IetSpec& spec, const QuadNum& lambda, const QuadNum& z0, std::int64_t budget) {
    const QuadNum lc = lambda.conjugate();
    const Interval J = scale(lc, spec.domain());
    bool left = ancestor(spec, J, z0, budget) == lc * z0;
    const QuadNum zero(spec.field(), 0);
    bool right = z0.conjugate() <= zero && zero <= step(spec, z0).point.conjugate();
    return left == right;
}

IetSpec reversed(const IetSpec& spec) { return IetSpec::make(Rational(1) - spec.eps(), spec.l(), spec.c()); }

IetSpec reduce_by_reversal(const IetSpec& spec) {
    if (!(spec.eps().conjugate() > QuadNum(spec.field(), 1)))
        throw Error(Errc::NotApplicable, "reversal reduction needs e' > 1, got e' = " + spec.eps().conjugate().decimal(6));
    return reversed(spec);
}

Substitution unreverse(const Substitution& psi) {
    auto swap = [](char x) { return x == 'A' ? 'C' : x == 'C' ? 'A' : x; };
    std::vector<Word> images;
    for (char x : psi.alphabet()) {
        Word w = psi.image(swap(x));
        std::reverse(w.begin(), w.end());
        std::transform(w.begin(), w.end(), w.begin(), swap);
        images.push_back(std::move(w));
    }
    return Substitution(psi.alphabet(), std::move(images));
}

namespace {

// One rung: walk `walk` with `unit`, build the substitution for `target`
// (the same spec, or the original of a reversal) and run every check.
Synthesis attempt(const IetSpec& walk, const IetSpec& target, bool rev, const ScalingUnit& unit,
                  const SynthesisOptions& opts) {
    ScalingUnit reported = unit;
    if (rev) {
        // walked in the basis {1, 1-e}; report and check in the original basis
        Rebase back = rebase_on(Rational(1) - walk.eps());
        reported = {back(unit.lambda), unit.s, back(unit.gamma)};
    }
    Synthesis syn{reported, return_system(walk, unit.lambda, opts.step_budget), Substitution::identity("ABC"), rev, "", {}};
    Substitution psi("ABC", {syn.returns.names[0], syn.returns.names[1], syn.returns.names[2]});
    syn.substitution = rev ? unreverse(psi) : psi;

    auto& ck = syn.checks;
    ck.homothety = check_homothety(walk, unit.lambda, syn.returns);
    ck.primitive = is_primitive(syn.substitution);
    ck.eigenvector = check_eigenvector(syn.substitution, target, reported.lambda);

    std::int64_t longest = 0;
    for (const auto& img : syn.substitution.images())
        longest = std::max<std::int64_t>(longest, static_cast<std::int64_t>(img.size()));
    ck.fixed_point_radius = std::max(opts.verify_radius, 4 * longest);
    if (ck.homothety && ck.eigenvector) {
        PointedWord u = orbit_window(target, -ck.fixed_point_radius, ck.fixed_point_radius);
        ck.fixed_point = verify_fixed_point(syn.substitution, u, ck.fixed_point_radius);
    }
    if (ck.fixed_point) ck.block_starts = check_block_starts(target, syn.substitution, reported.lambda, opts.block_window);
    return syn;
}

Synthesis run_ladder(const IetSpec& walk, const IetSpec& target, bool rev, const SynthesisOptions& opts) {
    const std::vector<QuadNum> coords{walk.c(), walk.l()};
    const Integer q = denominator(coords);
    const QuadNum gamma = minimal_unit(walk.field());
    const std::vector<QuadNum> anchors{walk.c(), walk.c() + walk.l()};
    const ScalingUnit base = class_fixing_power(gamma, q, anchors);

    std::vector<std::pair<unsigned long, std::string>> rungs{{base.s, "d'"}};
    const Integer q2 = q * q;
    std::string label = "d'";
    for (unsigned long s = 2 * base.s; Integer(static_cast<unsigned long>(s)) <= q2; s *= 2) {
        label += " x2";
        rungs.emplace_back(s, label);
    }
    unsigned long full = full_class_order(gamma, q);
    if (std::none_of(rungs.begin(), rungs.end(), [&](const auto& r) { return r.first == full; }))
        rungs.emplace_back(full, "d");

    std::optional<Error> last_error;
    std::string failed;
    for (const auto& [s, name] : rungs) {
        ScalingUnit unit{s == base.s ? base.lambda : pow(gamma, s), s, gamma};
        try {
            Synthesis syn = attempt(walk, target, rev, unit, opts);
            syn.ladder = name;
            if (syn.checks.all()) return syn;
            failed += " s=" + std::to_string(s) + "(checks)";
        } catch (const Error& e) {
            if (e.code() != Errc::StraddlesDiscontinuity && e.code() != Errc::StepBudgetExceeded) throw;
            last_error = e;
            failed += " s=" + std::to_string(s) + "(" + std::string(errc_name(e.code())) + ")";
        }
    }
    if (last_error && rungs.size() == 1) throw *last_error;
    throw Error(Errc::SynthesisFailed, "no power of the unit verified:" + failed);
}

}  // namespace

Synthesis synthesize(const IetSpec& spec, const SynthesisOptions& opts) {
    if (!(spec.eps().conjugate() < QuadNum(spec.field(), 0)))
        throw Error(Errc::NotApplicable, "direct synthesis needs e' < 0");
    return run_ladder(spec, spec, false, opts);
}

Synthesis synthesize_any(const IetSpec& spec, const SynthesisOptions& opts) {
    if (spec.eps().conjugate() < QuadNum(spec.field(), 0)) return run_ladder(spec, spec, false, opts);
    return run_ladder(reduce_by_reversal(spec), spec, true, opts);
}

DecisionReport decide(const IetSpec& spec, const SynthesisOptions& opts, bool with_witness) {
    DecisionReport report;
    report.conditions = evaluate_conditions(spec);
    report.verdict = verdict_of(report.conditions);
    if (report.verdict == Verdict::Invariant && with_witness) report.witness = synthesize_any(spec, opts);
    return report;
}

}  // namespace iet3
