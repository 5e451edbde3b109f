#include "iet3/sturmian.hpp"

#include <algorithm>

#include "iet3/invariance.hpp"

namespace iet3 {

std::string sturmian_word(const SturmianSpec& spec, std::int64_t n) {
    const QuadNum one(spec.alpha.field(), 1);
    const QuadNum zero(spec.alpha.field(), 0);
    if (spec.alpha.is_rational() || !(spec.alpha > zero && spec.alpha < one))
        throw Error(Errc::InvalidSpec, "slope must be an irrational number in (0, 1)");
    if (!(spec.x0 >= zero && spec.x0 < one)) throw Error(Errc::OutOfDomain, "intercept must lie in [0, 1)");

    std::string out;
    if (n <= 0) return out;
    out.reserve(static_cast<std::size_t>(n));
    // f = n a + x0 - floor(n a + x0) in [0, 1); for the ceiling form
    // f = n a + x0 - ceil(n a + x0) + 1 in (0, 1]
    QuadNum f = spec.x0;
    const QuadNum threshold = one - spec.alpha;
    const bool ceiling = spec.rounding == Rounding::ceiling;
    if (ceiling && spec.x0.is_zero()) f = one;
    for (std::int64_t k = 0; k < n; ++k) {
        bool carry = ceiling ? f > threshold : f >= threshold;
        if (carry) {
            f -= threshold;
            out.push_back('1');
        } else {
            f += spec.alpha;
            out.push_back('0');
        }
    }
    return out;
}

std::string sigma(SigmaVariant variant, std::string_view w) {
    std::string out;
    out.reserve(w.size() * 2);
    for (char x : w) {
        switch (x) {
            case 'A': out.push_back('0'); break;
            case 'B': out += variant == SigmaVariant::s01 ? "01" : "10"; break;
            case 'C': out.push_back('1'); break;
            default: throw Error(Errc::UnknownLetter, std::string("'") + x + "' is not in {A,B,C}");
        }
    }
    return out;
}

QuadNum frac(const QuadNum& x) { return x - Rational(x.floor()); }

bool sturmian_images_match(const IetSpec& spec, std::int64_t radius) {
    if (radius <= 0) return true;
    const Word u = code_orbit(spec, 0, radius);
    const QuadNum slope = Rational(1) - spec.eps();
    auto n = static_cast<std::size_t>(radius);

    std::string s01 = sigma(SigmaVariant::s01, u).substr(0, n);
    if (s01 != sturmian_word({slope, frac(-spec.c())}, radius)) return false;
    std::string s10 = sigma(SigmaVariant::s10, u).substr(0, n);
    return s10 == sturmian_word({slope, frac(Rational(1) - spec.l() - spec.c())}, radius);
}

bool yasutomi(const QuadNum& alpha, const QuadNum& x0) {
    if (!is_sturm(alpha)) return false;
    QuadNum ac = alpha.conjugate();
    QuadNum other = Rational(1) - ac;
    QuadNum xc = x0.conjugate();
    return std::min(ac, other) <= xc && xc <= std::max(ac, other);
}

CorollaryCheck corollary_check(const IetSpec& spec) {
    CorollaryCheck r;
    r.invariant = decide(spec, {}, false).verdict == Verdict::Invariant;
    r.yasutomi01 = yasutomi(spec.eps(), frac(-spec.c()));
    r.yasutomi10 = yasutomi(Rational(1) - spec.eps(), frac(spec.l() + spec.c()));
    return r;
}

}  // namespace iet3
