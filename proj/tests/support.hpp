#pragma once

// Deterministic generators for the property tests.

#include <cstdint>
#include <random>
#include <tuple>
#include <vector>

#include "iet3/qfield.hpp"

namespace iet3::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }
    bool coin() { return integer(0, 1) == 1; }

    Rational rational(std::int64_t max_num = 50, std::int64_t max_den = 12) {
        Rational r(integer(-max_num, max_num), integer(1, max_den));
        r.canonicalize();
        return r;
    }

    QuadNum quad(const FieldPtr& f, std::int64_t max_num = 50, std::int64_t max_den = 12) {
        return QuadNum(f, rational(max_num, max_den), rational(max_num, max_den));
    }

    QuadNum nonzero_quad(const FieldPtr& f) {
        for (;;) {
            QuadNum x = quad(f);
            if (!x.is_zero()) return x;
        }
    }

    /// Random real quadratic field with small coefficients.
    FieldPtr field() {
        for (;;) {
            Integer A = integer(1, 6), B = integer(-9, 9), C = integer(-9, 9);
            Integer D = B * B - 4 * A * C;
            if (D <= 0 || mpz_perfect_square_p(D.get_mpz_t())) continue;
            return make_field(A, B, C, coin() ? Branch::plus : Branch::minus);
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline FieldPtr sqrt2_field() { return make_field(1, 2, -1, Branch::plus); }  // e = sqrt2 - 1

}  // namespace iet3::testing
