#include "iet3/iet.hpp"

#include <algorithm>

namespace iet3 {

Interval scale(const QuadNum& factor, const Interval& iv) { return {factor * iv.lo, factor * iv.hi}; }

Interval translate(const Interval& iv, const QuadNum& shift) { return {iv.lo + shift, iv.hi + shift}; }

int letter_index(char letter) {
    switch (letter) {
        case 'A': return 0;
        case 'B': return 1;
        case 'C': return 2;
        default: throw Error(Errc::UnknownLetter, std::string("'") + letter + "' is not one of A, B, C");
    }
}

IetSpec IetSpec::make(const QuadNum& eps, const QuadNum& l, const QuadNum& c, std::optional<RawParams> raw) {
    Rebase rb = rebase_on(eps);
    IetSpec s;
    s.eps_ = rb(eps);
    s.l_ = rb(l);
    s.c_ = rb(c);
    s.raw_ = std::move(raw);

    const QuadNum one(rb.field, 1);
    const QuadNum zero(rb.field, 0);
    if (!(zero < s.eps_ && s.eps_ < one))
        throw Error(Errc::InvalidSpec, "eps = " + s.eps_.decimal(6) + " is not in (0,1)");
    if (!(s.l_ < one && s.l_ > s.eps_ && s.l_ > one - s.eps_))
        throw Error(Errc::InvalidSpec, "l = " + s.l_.decimal(6) + " violates 1 > l > max(eps, 1-eps)");
    if (!(s.c_ <= zero && zero < s.c_ + s.l_))
        throw Error(Errc::InvalidSpec, "0 is not in [c, c+l) for c = " + s.c_.decimal(6));

    s.d1_ = s.d1();
    s.d2_ = s.d2();
    s.end_ = s.c_ + s.l_;
    s.image_c_end_ = s.end_ - s.eps_;
    s.image_b_end_ = s.c_ + one - s.eps_;
    s.shifts_ = {one - s.eps_, one - s.eps_ - s.eps_, -s.eps_};
    return s;
}

Interval IetSpec::subinterval(char letter) const {
    switch (letter_index(letter)) {
        case 0: return {c_, d1_};
        case 1: return {d1_, d2_};
        default: return {d2_, end_};
    }
}

char IetSpec::letter_of(const QuadNum& x) const {
    if (x < d1_) return 'A';
    if (x < d2_) return 'B';
    return 'C';
}

char IetSpec::preimage_letter(const QuadNum& y) const {
    if (y < image_c_end_) return 'C';
    if (y < image_b_end_) return 'B';
    return 'A';
}

IetSpec normalize(const QuadNum& alpha1, const QuadNum& alpha2, const QuadNum& alpha3, const QuadNum& x0) {
    for (const QuadNum* a : {&alpha1, &alpha2, &alpha3})
        if (a->sign() != Sign::positive) throw Error(Errc::InvalidSpec, "interval lengths must be positive");
    QuadNum total = alpha1 + alpha2 + alpha3;
    if (x0.sign() == Sign::negative || !(x0 < total))
        throw Error(Errc::OutOfDomain, "x0 = " + x0.decimal(6) + " is outside [0, a1+a2+a3)");
    QuadNum mu = total + alpha2;
    QuadNum eps = (alpha1 + alpha2) / mu;
    if (eps.is_rational())
        throw Error(Errc::RationalSlope, "eps = " + eps.str() + " is rational; the exchange is not minimal");
    return IetSpec::make(eps, total / mu, -x0 / mu, RawParams{alpha1, alpha2, alpha3, x0});
}

StepResult step(const IetSpec& spec, const QuadNum& x) {
    if (!spec.domain().contains(x))
        throw Error(Errc::OutOfDomain, x.str() + " is outside [c, c+l)");
    char letter = spec.letter_of(x);
    return {x + spec.shift(letter), letter};
}

StepResult inverse_step(const IetSpec& spec, const QuadNum& y) {
    if (!spec.domain().contains(y))
        throw Error(Errc::OutOfDomain, y.str() + " is outside [c, c+l)");
    char letter = spec.preimage_letter(y);
    return {y - spec.shift(letter), letter};
}

namespace {

// Visits T^n(0) for n in [from, to) in increasing n, passing (n, point, letter).
template <typename Visit>
void walk_orbit(const IetSpec& spec, std::int64_t from, std::int64_t to, Visit&& visit) {
    if (to <= from) return;
    QuadNum zero(spec.field(), 0);
    if (from < 0) {
        // collect the negative part backwards, then replay in order
        std::int64_t neg_end = std::min<std::int64_t>(to, 0);
        std::vector<std::pair<QuadNum, char>> back;
        back.reserve(static_cast<std::size_t>(-from));
        QuadNum y = zero;
        for (std::int64_t n = -1; n >= from; --n) {
            char letter = spec.preimage_letter(y);
            y -= spec.shift(letter);
            if (n < neg_end) back.emplace_back(y, letter);
        }
        for (auto it = back.rbegin(); it != back.rend(); ++it) {
            std::int64_t n = from + (it - back.rbegin());
            visit(n, it->first, it->second);
        }
    }
    if (to <= 0) return;
    QuadNum x = zero;
    for (std::int64_t n = 0; n < to; ++n) {
        char letter = spec.letter_of(x);
        if (n >= from) visit(n, x, letter);
        x += spec.shift(letter);
    }
}

}  // namespace

Word code_orbit(const IetSpec& spec, std::int64_t from, std::int64_t to) {
    Word w;
    if (to > from) w.reserve(static_cast<std::size_t>(to - from));
    walk_orbit(spec, from, to, [&](std::int64_t, const QuadNum&, char letter) { w.push_back(letter); });
    return w;
}

PointedWord orbit_window(const IetSpec& spec, std::int64_t from, std::int64_t to) {
    return {from, code_orbit(spec, from, to)};
}

std::vector<QuadNum> orbit_points(const IetSpec& spec, std::int64_t from, std::int64_t to) {
    std::vector<QuadNum> pts;
    if (to > from) pts.reserve(static_cast<std::size_t>(to - from));
    walk_orbit(spec, from, to, [&](std::int64_t, const QuadNum& p, char) { pts.push_back(p); });
    return pts;
}

bool non_degenerate(const IetSpec& spec) { return !in_z_eps(spec.l()); }

}  // namespace iet3
