#include "iet3/qfield.hpp"

#include <cctype>
#include <cmath>
#include <utility>

namespace iet3 {

namespace {

Integer lcm(const Integer& x, const Integer& y) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return r;
}

Integer gcd(const Integer& x, const Integer& y) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return r;
}

Integer fdiv(const Integer& n, const Integer& d) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return r;
}

Integer fmod(const Integer& n, const Integer& d) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return r;
}

bool is_square(const Integer& n) { return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// x = (p + q*sqrt(D)) / den with integer p, q and den > 0.
struct Surd {
    Integer p, q, den;
};

Surd to_surd(const QuadNum& x) {
    const Field& f = *x.field();
    // a + b(-B + s sqrt D)/(2A) = ((2A a - B b) + s b sqrt D) / (2A)
    Rational p = 2 * f.A() * x.a() - f.B() * x.b();
    Rational q = f.root_sign() * x.b();
    Integer d = lcm(p.get_den(), q.get_den());
    Surd s;
    s.p = p.get_num() * (d / p.get_den());
    s.q = q.get_num() * (d / q.get_den());
    s.den = 2 * f.A() * d;
    return s;
}

int surd_sign(const Integer& p, const Integer& q, const Integer& disc) {
    int sp = sgn(p);
    int sq = sgn(q);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    // opposite signs: the larger magnitude wins; equality impossible (D non-square)
    Integer lhs = p * p;
    Integer rhs = q * q * disc;
    return lhs > rhs ? sp : sq;
}

void require_same(const FieldPtr& x, const FieldPtr& y) {
    if (x && y && !same_field(x, y))
        throw Error(Errc::FieldMismatch, "operands belong to " + x->str() + " and " + y->str());
}

}  // namespace

std::string_view branch_name(Branch b) noexcept { return b == Branch::plus ? "plus" : "minus"; }

std::string Field::str() const {
    return "field(" + a_.get_str() + "," + b_.get_str() + "," + c_.get_str() + "," +
           std::string(branch_name(branch_)) + ")";
}

FieldPtr make_field(Integer A, Integer B, Integer C, Branch branch) {
    if (A == 0) throw Error(Errc::DegenerateField, "leading coefficient A must be nonzero");
    if (A < 0) {
        // negating the equation swaps which root the branch selects
        A = -A;
        B = -B;
        C = -C;
        branch = branch == Branch::plus ? Branch::minus : Branch::plus;
    }
    Integer g = gcd(gcd(A, B), C);
    A /= g;
    B /= g;
    C /= g;
    Integer disc = B * B - 4 * A * C;
    if (disc <= 0) throw Error(Errc::DegenerateField, "discriminant " + disc.get_str() + " is not positive");
    if (is_square(disc))
        throw Error(Errc::DegenerateField, "discriminant " + disc.get_str() + " is a perfect square");

    auto f = std::shared_ptr<Field>(new Field());
    f->a_ = A;
    f->b_ = B;
    f->c_ = C;
    f->disc_ = disc;
    f->branch_ = branch;
    f->b_over_a_ = Rational(B, A);
    f->b_over_a_.canonicalize();
    f->c_over_a_ = Rational(C, A);
    f->c_over_a_.canonicalize();
    return f;
}

bool same_field(const FieldPtr& x, const FieldPtr& y) noexcept {
    if (x == y) return true;
    if (!x || !y) return false;
    return *x == *y;
}

QuadNum::QuadNum(FieldPtr field, Rational a, Rational b)
    : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)) {}

void QuadNum::adopt_field(const QuadNum& other) {
    require_same(field_, other.field_);
    if (!field_) field_ = other.field_;
}

QuadNum QuadNum::conjugate() const {
    if (!field_) return *this;
    // e' = -B/A - e
    return QuadNum(field_, a_ - b_ * field_->b_over_a(), -b_);
}

Rational QuadNum::norm() const {
    if (!field_) return a_ * a_;
    // (a + b e)(a + b e') = a^2 + ab(e + e') + b^2 e e'
    return a_ * a_ - a_ * b_ * field_->b_over_a() + b_ * b_ * field_->c_over_a();
}

Rational QuadNum::trace() const {
    if (!field_) return 2 * a_;
    return 2 * a_ - b_ * field_->b_over_a();
}

Sign QuadNum::sign() const {
    if (sgn(b_) == 0 || !field_) return static_cast<Sign>(sgn(a_));
    Surd s = to_surd(*this);
    return static_cast<Sign>(surd_sign(s.p, s.q, field_->discriminant()));
}

Integer QuadNum::floor() const {
    if (sgn(b_) == 0 || !field_) return fdiv(a_.get_num(), a_.get_den());
    Surd s = to_surd(*this);
    // sqrt(q^2 D) lies strictly between r and r + 1
    Integer r = isqrt(s.q * s.q * field_->discriminant());
    if (sgn(s.q) > 0) return fdiv(s.p + r, s.den);
    return fdiv(s.p - r - 1, s.den);
}

Integer QuadNum::ceil() const { return -(-*this).floor(); }

std::string QuadNum::str() const {
    std::string out = rational_str(a_);
    if (sgn(b_) < 0)
        out += "-" + rational_str(-b_);
    else
        out += "+" + rational_str(b_);
    return out + "*e";
}

std::string QuadNum::decimal(int digits) const {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    bool negative = sign() == Sign::negative;
    QuadNum magnitude = negative ? -*this : *this;
    magnitude *= Rational(scale);
    std::string body = magnitude.floor().get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    return negative ? "-" + body : body;
}

double QuadNum::to_double() const {
    if (!field_) return a_.get_d();
    Surd s = to_surd(*this);
    double root = std::sqrt(field_->discriminant().get_d());
    return (s.p.get_d() + s.q.get_d() * root) / s.den.get_d();
}

QuadNum QuadNum::operator-() const { return QuadNum(field_, -a_, -b_); }

QuadNum& QuadNum::operator+=(const QuadNum& rhs) {
    adopt_field(rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& rhs) {
    adopt_field(rhs);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& rhs) {
    adopt_field(rhs);
    if (!field_) {
        a_ *= rhs.a_;
        return *this;
    }
    // (a + b e)(c + d e) = ac - bd C/A + (ad + bc - bd B/A) e
    Rational bd = b_ * rhs.b_;
    Rational na = a_ * rhs.a_ - bd * field_->c_over_a();
    Rational nb = a_ * rhs.b_ + b_ * rhs.a_ - bd * field_->b_over_a();
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& rhs) {
    adopt_field(rhs);
    if (rhs.is_zero()) throw Error(Errc::DivisionByZero, "division by zero in " + (field_ ? field_->str() : "Q"));
    Rational n = rhs.norm();
    *this *= rhs.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
}

bool operator==(const QuadNum& x, const QuadNum& y) {
    if (x.field_ && y.field_ && !same_field(x.field_, y.field_)) return false;
    return x.a_ == y.a_ && x.b_ == y.b_;
}

std::strong_ordering operator<=>(const QuadNum& x, const QuadNum& y) {
    require_same(x.field_, y.field_);
    Sign s = (x - y).sign();
    if (s == Sign::negative) return std::strong_ordering::less;
    if (s == Sign::positive) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

QuadNum conjugate(const QuadNum& x) { return x.conjugate(); }
Sign sign(const QuadNum& x) { return x.sign(); }
std::strong_ordering compare(const QuadNum& x, const QuadNum& y) { return x <=> y; }

QuadNum pow(QuadNum base, unsigned long exponent) {
    QuadNum result(base.field(), 1);
    while (exponent > 0) {
        if (exponent & 1UL) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

bool in_z_eps(const QuadNum& x) { return x.a().get_den() == 1 && x.b().get_den() == 1; }

Integer denominator(std::span<const QuadNum> xs) {
    Integer q = 1;
    for (const auto& x : xs) {
        q = lcm(q, x.a().get_den());
        q = lcm(q, x.b().get_den());
    }
    return q;
}

LatticeClass class_of(const QuadNum& x, const Integer& q) {
    if (q <= 0) throw Error(Errc::NotInLattice, "class modulus must be positive");
    Rational qa = x.a() * q;
    Rational qb = x.b() * q;
    if (qa.get_den() != 1 || qb.get_den() != 1)
        throw Error(Errc::NotInLattice, x.str() + " is not in (1/" + q.get_str() + ")Z[e]");
    return {fmod(qa.get_num(), q), fmod(qb.get_num(), q)};
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    Parser(const FieldPtr& field, std::string_view text) : field_(field), text_(text) {}

    QuadNum parse() {
        QuadNum v = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(Errc::ParseError, "\"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " + why);
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool eat_word(std::string_view w) {
        skip();
        if (text_.substr(pos_, w.size()) != w) return false;
        std::size_t end = pos_ + w.size();
        if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
        pos_ = end;
        return true;
    }

    QuadNum expr() {
        QuadNum v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    QuadNum term() {
        QuadNum v = unary();
        for (;;) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                QuadNum d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    QuadNum unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return primary();
    }

    Integer integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    QuadNum primary() {
        if (eat('(')) {
            QuadNum v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (eat_word("sqrt")) {
            if (!eat('(')) fail("expected '(' after sqrt");
            Integer d = integer();
            if (!eat(')')) fail("expected ')'");
            return sqrt_of(d);
        }
        if (eat_word("eps") || eat_word("e")) return QuadNum::generator(field_);
        skip();
        if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal literals are not exact; use p/q");
        Integer n = integer();
        if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal literals are not exact; use p/q");
        return QuadNum(field_, Rational(n));
    }

    QuadNum sqrt_of(const Integer& d) {
        if (is_square(d)) return QuadNum(field_, Rational(isqrt(d)));
        const Integer& disc = field_->discriminant();
        Integer prod = d * disc;
        if (!is_square(prod)) fail("sqrt(" + d.get_str() + ") is not in " + field_->str());
        // sqrt(d) = sqrt(d D)/D * sqrt(D), sqrt(D) = s (2A e + B)
        Rational coeff(isqrt(prod), disc);
        coeff.canonicalize();
        QuadNum root_disc(field_, Rational(field_->B()), Rational(2 * field_->A()));
        root_disc *= Rational(field_->root_sign());
        return root_disc * coeff;
    }

    const FieldPtr& field_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

QuadNum parse_quad(const FieldPtr& field, std::string_view text) {
    if (!field) throw Error(Errc::ParseError, "no field given for \"" + std::string(text) + "\"");
    return Parser(field, text).parse();
}

// ---------------------------------------------------------------- rebasing

Rebase rebase_on(const QuadNum& gen) {
    if (!gen.field() || gen.is_rational())
        throw Error(Errc::RationalSlope, gen.str() + " does not generate a quadratic field");
    // g^2 - t g + n = 0 with t, n rational; clear denominators
    Rational t = gen.trace();
    Rational n = gen.norm();
    Integer d = lcm(t.get_den(), n.get_den());
    Integer A = d;
    Integer B = -t.get_num() * (d / t.get_den());
    Integer C = n.get_num() * (d / n.get_den());
    // g is the plus root iff 2A g + B > 0
    QuadNum probe = gen * Rational(2 * A) + Rational(B);
    Branch br = probe.sign() == Sign::positive ? Branch::plus : Branch::minus;
    return Rebase{make_field(A, B, C, br), gen};
}

QuadNum Rebase::operator()(const QuadNum& y) const {
    require_same(y.field(), gen.field());
    // y = u + v e, g = p + r e  =>  e = (g - p)/r,  y = (u - v p / r) + (v / r) g
    Rational ratio = y.b() / gen.b();
    return QuadNum(field, y.a() - ratio * gen.a(), ratio);
}

}  // namespace iet3
