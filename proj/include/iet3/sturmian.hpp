#pragma once

// Mechanical (Sturmian) words u_n = floor((n+1)a + x0) - floor(n a + x0), the
// projections sigma01 / sigma10 of 3iet words onto {0,1}, and Yasutomi's
// criterion for substitution invariance.

#include <cstdint>
#include <string>
#include <string_view>

#include "iet3/iet.hpp"

namespace iet3 {

enum class Rounding { floor, ceiling };

struct SturmianSpec {
    QuadNum alpha;  // irrational, in (0, 1)
    QuadNum x0;     // in [0, 1)
    Rounding rounding = Rounding::floor;
};

/// First n letters. InvalidSpec for a rational or out-of-range slope,
/// OutOfDomain for x0 outside [0, 1).
std::string sturmian_word(const SturmianSpec& spec, std::int64_t n);

enum class SigmaVariant { s01, s10 };

/// A -> 0, B -> 01 (or 10), C -> 1.
std::string sigma(SigmaVariant variant, std::string_view w);

/// x - floor(x), in [0, 1).
QuadNum frac(const QuadNum& x);

/// The first `radius` letters of sigma01(u) and sigma10(u) agree with the
/// floor-form words of slope 1-e and intercepts -c and 1-l-c respectively.
bool sturmian_images_match(const IetSpec& spec, std::int64_t radius);

/// alpha is a Sturm number and min(a', 1-a') <= x0' <= max(a', 1-a').
bool yasutomi(const QuadNum& alpha, const QuadNum& x0);

struct CorollaryCheck {
    bool invariant = false;    // decide() verdict is Invariant
    bool yasutomi01 = false;   // yasutomi(e, frac(-c))
    bool yasutomi10 = false;   // yasutomi(1-e, frac(l+c))
    bool agrees() const { return invariant == (yasutomi01 && yasutomi10); }
};

/// Evaluates the decision (without synthesis) against the two Sturmian
/// criteria.
CorollaryCheck corollary_check(const IetSpec& spec);
inline bool corollary_crosscheck(const IetSpec& spec) { return corollary_check(spec).agrees(); }

}  // namespace iet3
