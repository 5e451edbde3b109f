#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include "iet3/qfield.hpp"
#include "support.hpp"

using namespace iet3;
using iet3::testing::Gen;
using iet3::testing::sqrt2_field;

namespace {

// Independent evaluation with ~120 significant digits.
constexpr unsigned kBits = 400;

mpf_class eps_value(const Field& f) {
    mpf_class d(f.discriminant(), kBits);
    mpf_class root = sqrt(d);
    mpf_class num(-f.B(), kBits);
    num += f.branch() == Branch::plus ? root : mpf_class(-root);
    return num / mpf_class(2 * f.A(), kBits);
}

mpf_class float_value(const QuadNum& x) {
    mpf_class a(x.a(), kBits), b(x.b(), kBits);
    return a + b * eps_value(*x.field());
}

int float_sign(const QuadNum& x) { return sgn(float_value(x)); }

}  // namespace

TEST_CASE("make_field normalizes and selects the branch") {
    auto f = make_field(1, 2, -1, Branch::plus);
    CHECK(f->discriminant() == 8);
    QuadNum e = QuadNum::generator(f);
    CHECK(e.decimal(4) == "0.4142");

    auto g = make_field(1, -3, 1, Branch::minus);
    CHECK(QuadNum::generator(g).decimal(4) == "0.3819");

    // content and sign normalization keep the same root
    auto h = make_field(-2, -4, 2, Branch::minus);
    CHECK(h->A() == 1);
    CHECK(h->B() == 2);
    CHECK(h->C() == -1);
    CHECK(QuadNum::generator(h).decimal(4) == "0.4142");
}

TEST_CASE("make_field rejects rational and complex roots") {
    CHECK_THROWS_AS(make_field(1, 0, -4, Branch::plus), Error);
    try {
        make_field(1, 0, -4, Branch::plus);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DegenerateField);
    }
    CHECK_THROWS_AS(make_field(1, 0, 1, Branch::plus), Error);
    CHECK_THROWS_AS(make_field(0, 1, 1, Branch::plus), Error);
}

TEST_CASE("conjugate examples") {
    auto f = sqrt2_field();
    QuadNum e = QuadNum::generator(f);
    CHECK(e.conjugate() == QuadNum(f, -2, -1));
    CHECK(QuadNum(f, Rational(7, 3)).conjugate() == QuadNum(f, Rational(7, 3)));
    QuadNum u(f, 5, 2);
    CHECK(u.conjugate() == QuadNum(f, 1, -2));
    CHECK(u * u.conjugate() == QuadNum(f, 1));
}

TEST_CASE("sign examples") {
    auto f = sqrt2_field();
    CHECK(QuadNum(f, 0, 0).sign() == Sign::zero);
    CHECK(QuadNum(f, 1, -2).sign() == Sign::positive);
    CHECK(QuadNum(f, -1, 1).sign() == Sign::negative);
}

TEST_CASE("compare examples") {
    auto f = sqrt2_field();
    QuadNum e = QuadNum::generator(f);
    CHECK(compare(e, QuadNum(f, 1)) == std::strong_ordering::less);
    CHECK(compare(e, e) == std::strong_ordering::equal);
    CHECK(compare(QuadNum(f, Rational(1, 2), Rational(1, 2)), e) == std::strong_ordering::greater);

    auto g = make_field(1, -3, 1, Branch::minus);
    CHECK_THROWS_AS((void)(e < QuadNum::generator(g)), Error);
}

TEST_CASE("in_z_eps, denominator and class_of examples") {
    auto f = sqrt2_field();
    CHECK(in_z_eps(QuadNum(f, 3, -2)));
    CHECK_FALSE(in_z_eps(QuadNum(f, Rational(1, 2), Rational(1, 2))));
    CHECK_FALSE(in_z_eps(QuadNum(f, 0, Rational(-1, 2))));

    std::vector<QuadNum> xs{QuadNum(f, 0, Rational(-1, 2)), QuadNum(f, Rational(1, 2), Rational(1, 2))};
    CHECK(denominator(xs) == 2);
    std::vector<QuadNum> ys{QuadNum(f, 1)};
    CHECK(denominator(ys) == 1);
    std::vector<QuadNum> zs{QuadNum(f, Rational(1, 3)), QuadNum(f, 0, Rational(1, 2))};
    CHECK(denominator(zs) == 6);

    auto k = class_of(QuadNum(f, 0, Rational(-1, 2)), 2);
    CHECK(k.i == 0);
    CHECK(k.j == 1);
    k = class_of(QuadNum(f, 1), 2);
    CHECK(k.i == 0);
    CHECK(k.j == 0);
    k = class_of(QuadNum(f, Rational(1, 2)), 2);
    CHECK(k.i == 1);
    CHECK(k.j == 0);
    try {
        class_of(QuadNum(f, Rational(1, 3)), 2);
        FAIL("expected NotInLattice");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotInLattice);
    }
}

TEST_CASE("parse and print round-trip") {
    auto f = sqrt2_field();
    CHECK(parse_quad(f, "sqrt(2)") == QuadNum(f, 1, 1));
    CHECK(parse_quad(f, "1/2+1/2*e") == QuadNum(f, Rational(1, 2), Rational(1, 2)));
    CHECK(parse_quad(f, "(1 - sqrt(2))/2") == QuadNum(f, 0, Rational(-1, 2)));
    CHECK(parse_quad(f, "-3/2+7/2*eps") == QuadNum(f, Rational(-3, 2), Rational(7, 2)));
    CHECK(parse_quad(f, "sqrt(8)") == QuadNum(f, 2, 2));

    Gen gen(11);
    for (int i = 0; i < 300; ++i) {
        auto g = gen.field();
        QuadNum x = gen.quad(g, 1000000, 1000);
        CHECK(parse_quad(g, x.str()) == x);
    }
}

TEST_CASE("parse errors") {
    auto f = sqrt2_field();
    for (const char* bad : {"0.5", "1/0", "e +", "sqrt(3)", "x", "", "(1"}) {
        try {
            parse_quad(f, bad);
            FAIL("accepted " << bad);
        } catch (const Error& e) {
            CHECK((e.code() == Errc::ParseError || e.code() == Errc::DivisionByZero));
        }
    }
}

TEST_CASE("division by zero") {
    auto f = sqrt2_field();
    try {
        (void)(QuadNum(f, 1) / QuadNum(f, 0));
        FAIL("expected DivisionByZero");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DivisionByZero);
    }
}

TEST_CASE("property: exact sign agrees with a 120-digit evaluation") {
    Gen gen(1);
    for (int i = 0; i < 2000; ++i) {
        auto f = gen.field();
        QuadNum x = gen.quad(f, 1000000, 1000);
        CHECK(static_cast<int>(x.sign()) == float_sign(x));
    }
    // near-cancellation: convergents of the generator
    auto f = sqrt2_field();
    QuadNum e = QuadNum::generator(f);
    QuadNum unit(f, 5, 2);
    QuadNum p = unit;
    for (int k = 0; k < 30; ++k) {
        QuadNum small = p.conjugate();  // (3-2sqrt2)^k, tiny and positive
        CHECK(small.sign() == Sign::positive);
        CHECK((-small).sign() == Sign::negative);
        CHECK(static_cast<int>((small - Rational(1, 1000000000)).sign()) == float_sign(small - Rational(1, 1000000000)));
        p *= unit;
    }
    (void)e;
}

TEST_CASE("property: floor and decimals agree with the float oracle") {
    Gen gen(2);
    for (int i = 0; i < 1000; ++i) {
        auto f = gen.field();
        QuadNum x = gen.quad(f, 100000, 97);
        mpf_class v = float_value(x);
        mpf_class fl = floor(v);
        CHECK(x.floor() == Integer(fl));
        CHECK(x.ceil() == Integer(ceil(v)));
    }
    auto f = sqrt2_field();
    CHECK(QuadNum(f, 1, 1).decimal(20) == "1.41421356237309504880");
    CHECK(QuadNum(f, -1, -1).decimal(20) == "-1.41421356237309504880");
}

TEST_CASE("property: conjugation is an involutive ring homomorphism") {
    Gen gen(3);
    for (int i = 0; i < 500; ++i) {
        auto f = gen.field();
        QuadNum x = gen.quad(f), y = gen.quad(f);
        CHECK(x.conjugate().conjugate() == x);
        CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
        CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
        CHECK(x.norm() == (x * x.conjugate()).a());
        CHECK((x * x.conjugate()).is_rational());
        CHECK(x.trace() == (x + x.conjugate()).a());
    }
}

TEST_CASE("property: field axioms on sampled triples") {
    Gen gen(4);
    for (int i = 0; i < 500; ++i) {
        auto f = gen.field();
        QuadNum x = gen.quad(f), y = gen.quad(f), z = gen.quad(f);
        CHECK((x + (-x)).is_zero());
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        if (!y.is_zero()) CHECK((x / y) * y == x);
    }
}

TEST_CASE("property: in_z_eps matches the trivial class") {
    Gen gen(5);
    auto f = sqrt2_field();
    for (int i = 0; i < 300; ++i) {
        QuadNum x(f, gen.rational(20, 2), gen.rational(20, 2));
        bool trivial = false;
        try {
            auto k = class_of(x, 1);
            trivial = k.i == 0 && k.j == 0;
        } catch (const Error&) {
        }
        CHECK(in_z_eps(x) == trivial);
    }
}

TEST_CASE("rebase expresses elements in the basis of a new generator") {
    auto f = sqrt2_field();
    QuadNum g = parse_quad(f, "sqrt(2)/2");
    Rebase rb = rebase_on(g);
    CHECK(rb.field->A() == 2);
    CHECK(rb.field->C() == -1);
    QuadNum x = parse_quad(f, "3 + 5*sqrt(2)");
    QuadNum y = rb(x);
    CHECK(y.field() == rb.field);
    CHECK(y.decimal(25) == x.decimal(25));
    CHECK(rb(g) == QuadNum::generator(rb.field));
    CHECK_THROWS_AS(rebase_on(QuadNum(f, 3)), Error);

    // a negative-branch generator
    QuadNum h = parse_quad(f, "1 - sqrt(2)");
    Rebase rh = rebase_on(h);
    CHECK(QuadNum::generator(rh.field).decimal(20) == h.decimal(20));
}

TEST_CASE("values from different fields do not mix") {
    auto f = sqrt2_field();
    auto g = make_field(1, -3, 1, Branch::minus);
    try {
        (void)(QuadNum::generator(f) + QuadNum::generator(g));
        FAIL("expected FieldMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::FieldMismatch);
    }
    // structurally equal descriptors are the same field
    auto f2 = make_field(1, 2, -1, Branch::plus);
    CHECK(QuadNum::generator(f) == QuadNum::generator(f2));
}
