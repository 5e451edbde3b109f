#pragma once

// Exact arithmetic in a real quadratic field Q(e), where e is one root of an
// integer quadratic A x^2 + B x + C = 0. Elements are stored as a + b*e with
// a, b arbitrary-precision rationals.

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "iet3/error.hpp"

namespace iet3 {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Branch { plus, minus };

std::string_view branch_name(Branch b) noexcept;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Minimal equation A e^2 + B e + C = 0 (A > 0, gcd(A,B,C) = 1) plus the root
/// selector: e = (-B + s*sqrt(D)) / (2A), D = B^2 - 4AC, s = +1 for the plus
/// branch.
class Field {
public:
    const Integer& A() const noexcept { return a_; }
    const Integer& B() const noexcept { return b_; }
    const Integer& C() const noexcept { return c_; }
    Branch branch() const noexcept { return branch_; }
    const Integer& discriminant() const noexcept { return disc_; }
    int root_sign() const noexcept { return branch_ == Branch::plus ? 1 : -1; }

    // e^2 = -(B/A) e - (C/A)
    const Rational& b_over_a() const noexcept { return b_over_a_; }
    const Rational& c_over_a() const noexcept { return c_over_a_; }

    bool operator==(const Field& other) const noexcept {
        return a_ == other.a_ && b_ == other.b_ && c_ == other.c_ && branch_ == other.branch_;
    }

    std::string str() const;

private:
    friend FieldPtr make_field(Integer A, Integer B, Integer C, Branch branch);
    Field() = default;

    Integer a_, b_, c_, disc_;
    Branch branch_ = Branch::plus;
    Rational b_over_a_, c_over_a_;
};

/// Normalizes sign and content of (A,B,C). Throws DegenerateField when the
/// discriminant is not a positive non-square.
FieldPtr make_field(Integer A, Integer B, Integer C, Branch branch);

bool same_field(const FieldPtr& x, const FieldPtr& y) noexcept;

enum class Sign { negative = -1, zero = 0, positive = 1 };

class QuadNum {
public:
    /// Zero not bound to any field; adopts the field of the other operand.
    QuadNum() = default;
    QuadNum(FieldPtr field, Rational a, Rational b = 0);

    static QuadNum generator(FieldPtr field) { return QuadNum(std::move(field), 0, 1); }

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    const FieldPtr& field() const noexcept { return field_; }

    bool is_rational() const noexcept { return sgn(b_) == 0; }
    bool is_zero() const noexcept { return sgn(a_) == 0 && sgn(b_) == 0; }

    QuadNum conjugate() const;
    Rational norm() const;
    Rational trace() const;
    Sign sign() const;
    Integer floor() const;
    Integer ceil() const;

    /// Canonical exact form "p/q+r/s*e"; parse_quad() reads it back.
    std::string str() const;
    /// Truncated decimal expansion with `digits` fractional digits.
    std::string decimal(int digits = 20) const;
    double to_double() const;

    QuadNum operator-() const;
    QuadNum& operator+=(const QuadNum& rhs);
    QuadNum& operator-=(const QuadNum& rhs);
    QuadNum& operator*=(const QuadNum& rhs);
    QuadNum& operator/=(const QuadNum& rhs);
    QuadNum& operator+=(const Rational& rhs) { a_ += rhs; return *this; }
    QuadNum& operator-=(const Rational& rhs) { a_ -= rhs; return *this; }
    QuadNum& operator*=(const Rational& rhs) { a_ *= rhs; b_ *= rhs; return *this; }

    friend QuadNum operator+(QuadNum x, const QuadNum& y) { return x += y; }
    friend QuadNum operator-(QuadNum x, const QuadNum& y) { return x -= y; }
    friend QuadNum operator*(QuadNum x, const QuadNum& y) { return x *= y; }
    friend QuadNum operator/(QuadNum x, const QuadNum& y) { return x /= y; }
    friend QuadNum operator+(QuadNum x, const Rational& y) { return x += y; }
    friend QuadNum operator-(QuadNum x, const Rational& y) { return x -= y; }
    friend QuadNum operator*(QuadNum x, const Rational& y) { return x *= y; }
    friend QuadNum operator+(const Rational& y, QuadNum x) { return x += y; }
    friend QuadNum operator-(const Rational& y, const QuadNum& x) { return -x + y; }
    friend QuadNum operator*(const Rational& y, QuadNum x) { return x *= y; }

    /// Coordinate equality (values in one field are equal iff coordinates are).
    friend bool operator==(const QuadNum& x, const QuadNum& y);
    /// Exact real order; throws FieldMismatch across fields.
    friend std::strong_ordering operator<=>(const QuadNum& x, const QuadNum& y);

private:
    void adopt_field(const QuadNum& other);

    FieldPtr field_;
    Rational a_{0};
    Rational b_{0};
};

QuadNum conjugate(const QuadNum& x);
Sign sign(const QuadNum& x);
std::strong_ordering compare(const QuadNum& x, const QuadNum& y);
QuadNum pow(QuadNum base, unsigned long exponent);

/// True iff both coordinates are integers, i.e. x lies in Z + eZ.
bool in_z_eps(const QuadNum& x);

/// Least q >= 1 with q*x in Z[e] for every x.
Integer denominator(std::span<const QuadNum> xs);

struct LatticeClass {
    Integer i;
    Integer j;
    bool operator==(const LatticeClass&) const = default;
};

/// Indices (i, j), 0 <= i,j < q, with x - (i + j e)/q in Z[e].
LatticeClass class_of(const QuadNum& x, const Integer& q);

/// Parses sums/products/quotients of rational literals, "e" and "sqrt(D)".
QuadNum parse_quad(const FieldPtr& field, std::string_view text);

/// Re-expression of Q(e) in the basis {1, g} for an irrational g of the field.
struct Rebase {
    FieldPtr field;  // minimal equation of g, with g as the selected root
    QuadNum gen;     // g in the old basis

    QuadNum operator()(const QuadNum& y) const;
};

Rebase rebase_on(const QuadNum& gen);

}  // namespace iet3
