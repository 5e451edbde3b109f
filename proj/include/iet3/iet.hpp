#pragma once

// The normalized exchange of three intervals with permutation (321):
//
//   T(x) = x + 1 - e    on I1 = [c, c+l-1+e)      letter A
//   T(x) = x + 1 - 2e   on I2 = [c+l-1+e, c+e)    letter B
//   T(x) = x - e        on I3 = [c+e, c+l)        letter C
//
// with 0 < e < 1, 1 > l > max(e, 1-e) and 0 in [c, c+l). The coded point is
// always 0.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "iet3/qfield.hpp"
#include "iet3/word.hpp"

namespace iet3 {

struct RawParams {
    QuadNum alpha1, alpha2, alpha3, x0;
};

struct Interval {
    QuadNum lo;  // closed
    QuadNum hi;  // open

    bool contains(const QuadNum& x) const { return lo <= x && x < hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
    bool operator==(const Interval&) const = default;
};

Interval scale(const QuadNum& factor, const Interval& iv);  // factor > 0
Interval translate(const Interval& iv, const QuadNum& shift);

constexpr std::array<char, 3> kLetters{'A', 'B', 'C'};
int letter_index(char letter);  // A->0, B->1, C->2; UnknownLetter otherwise

class IetSpec {
public:
    /// Re-expresses all parameters in the basis {1, eps} of their field and
    /// validates the normalization constraints (InvalidSpec on violation).
    static IetSpec make(const QuadNum& eps, const QuadNum& l, const QuadNum& c,
                        std::optional<RawParams> raw = std::nullopt);

    const FieldPtr& field() const noexcept { return eps_.field(); }
    const QuadNum& eps() const noexcept { return eps_; }
    const QuadNum& l() const noexcept { return l_; }
    const QuadNum& c() const noexcept { return c_; }
    const std::optional<RawParams>& raw() const noexcept { return raw_; }

    QuadNum d1() const { return c_ + l_ - Rational(1) + eps_; }
    QuadNum d2() const { return c_ + eps_; }
    Interval domain() const { return {c_, c_ + l_}; }
    Interval subinterval(char letter) const;
    const QuadNum& shift(char letter) const { return shifts_[static_cast<std::size_t>(letter_index(letter))]; }

    /// Letter of the subinterval containing x (x assumed in the domain).
    char letter_of(const QuadNum& x) const;
    /// Letter of the preimage of y, i.e. of T^{-1}(y).
    char preimage_letter(const QuadNum& y) const;

private:
    IetSpec() = default;

    QuadNum eps_, l_, c_;
    QuadNum d1_, d2_, end_;
    QuadNum image_c_end_, image_b_end_;  // T(I3) = [c, c+l-e), T(I2) = [c+l-e, c+1-e)
    std::array<QuadNum, 3> shifts_;
    std::optional<RawParams> raw_;
};

/// eps = (a1+a2)/mu, l = (a1+a2+a3)/mu, c = -x0/mu with mu = a1+2a2+a3.
IetSpec normalize(const QuadNum& alpha1, const QuadNum& alpha2, const QuadNum& alpha3, const QuadNum& x0);

struct StepResult {
    QuadNum point;
    char letter;
};

StepResult step(const IetSpec& spec, const QuadNum& x);          // (T(x), letter of x)
StepResult inverse_step(const IetSpec& spec, const QuadNum& y);  // (T^{-1}(y), its letter)

/// u_from ... u_{to-1} of the word coding the orbit of 0.
Word code_orbit(const IetSpec& spec, std::int64_t from, std::int64_t to);
PointedWord orbit_window(const IetSpec& spec, std::int64_t from, std::int64_t to);

/// T^n(0) for n in [from, to).
std::vector<QuadNum> orbit_points(const IetSpec& spec, std::int64_t from, std::int64_t to);

/// True iff l is not in Z[e].
bool non_degenerate(const IetSpec& spec);

}  // namespace iet3
