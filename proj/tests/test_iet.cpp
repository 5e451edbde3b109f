#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "iet3/iet.hpp"
#include "support.hpp"

using namespace iet3;
using iet3::testing::sqrt2_field;

namespace {

IetSpec worked() {
    auto f = sqrt2_field();
    return IetSpec::make(parse_quad(f, "e"), parse_quad(f, "sqrt(2)/2"), parse_quad(f, "(1-sqrt(2))/2"));
}

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Errc::ParseError;
}

}  // namespace

TEST_CASE("normalize examples") {
    auto f = sqrt2_field();
    IetSpec s = normalize(parse_quad(f, "3*sqrt(2)/2 - 2"), parse_quad(f, "1 - sqrt(2)/2"), parse_quad(f, "1 - sqrt(2)/2"),
                          parse_quad(f, "(sqrt(2)-1)/2"));
    IetSpec w = worked();
    CHECK(s.eps() == w.eps());
    CHECK(s.l() == w.l());
    CHECK(s.c() == w.c());
    REQUIRE(s.raw().has_value());
    CHECK(s.raw()->x0 == parse_quad(f, "(sqrt(2)-1)/2"));

    CHECK(code_of([&] { normalize(QuadNum(f, 1), QuadNum(f, 1), QuadNum(f, 1), QuadNum(f, 0)); }) == Errc::RationalSlope);
    IetSpec z = normalize(parse_quad(f, "sqrt(2)"), QuadNum(f, 1), QuadNum(f, 1), QuadNum(f, 0));
    CHECK(z.c().is_zero());
    CHECK(code_of([&] { normalize(parse_quad(f, "sqrt(2)"), QuadNum(f, 1), QuadNum(f, 1), QuadNum(f, 5)); }) ==
          Errc::OutOfDomain);
    CHECK(code_of([&] { normalize(parse_quad(f, "-sqrt(2)"), QuadNum(f, 1), QuadNum(f, 1), QuadNum(f, 0)); }) ==
          Errc::InvalidSpec);
}

TEST_CASE("make validates the normalization constraints") {
    auto f = sqrt2_field();
    QuadNum e = QuadNum::generator(f);
    CHECK(code_of([&] { IetSpec::make(e, e, QuadNum(f, 0)); }) == Errc::InvalidSpec);  // l = e < 1-e
    CHECK(code_of([&] { IetSpec::make(e, QuadNum(f, 1), QuadNum(f, 0)); }) == Errc::InvalidSpec);
    CHECK(code_of([&] { IetSpec::make(e, parse_quad(f, "sqrt(2)/2"), QuadNum(f, Rational(1, 10))); }) == Errc::InvalidSpec);
    CHECK(code_of([&] { IetSpec::make(e, parse_quad(f, "sqrt(2)/2"), QuadNum(f, -1)); }) == Errc::InvalidSpec);
    CHECK(code_of([&] { IetSpec::make(e + Rational(1), parse_quad(f, "sqrt(2)/2"), QuadNum(f, 0)); }) == Errc::InvalidSpec);
    IetSpec edge = IetSpec::make(e, parse_quad(f, "sqrt(2)/2"), -parse_quad(f, "sqrt(2)/2") + Rational(1, 1000));
    CHECK(edge.domain().contains(QuadNum(f, 0)));
}

TEST_CASE("subintervals tile the domain") {
    IetSpec s = worked();
    CHECK(s.c() < s.d1());
    CHECK(s.d1() < s.d2());
    CHECK(s.d2() < s.c() + s.l());
    CHECK(s.subinterval('A') == Interval{s.c(), s.d1()});
    CHECK(s.subinterval('B') == Interval{s.d1(), s.d2()});
    CHECK(s.subinterval('C') == Interval{s.d2(), s.c() + s.l()});
    // images tile in the order C, B, A (permutation 321)
    Interval tc = translate(s.subinterval('C'), s.shift('C'));
    Interval tb = translate(s.subinterval('B'), s.shift('B'));
    Interval ta = translate(s.subinterval('A'), s.shift('A'));
    CHECK(tc.lo == s.c());
    CHECK(tc.hi == tb.lo);
    CHECK(tb.hi == ta.lo);
    CHECK(ta.hi == s.c() + s.l());
    CHECK(code_of([&] { s.subinterval('D'); }) == Errc::UnknownLetter);
}

TEST_CASE("step examples") {
    IetSpec s = worked();
    auto f = s.field();
    auto r = step(s, QuadNum(f, 0));
    CHECK(r.letter == 'B');
    CHECK(r.point == parse_quad(f, "3 - 2*sqrt(2)"));

    r = step(s, s.c() + s.eps());
    CHECK(r.letter == 'C');
    CHECK(r.point == s.c());

    r = step(s, s.d1());
    CHECK(r.letter == 'B');
    CHECK(r.point == s.c() + s.l() - s.eps());

    CHECK(code_of([&] { step(s, s.c() + s.l()); }) == Errc::OutOfDomain);
    CHECK(code_of([&] { step(s, s.c() - Rational(1, 100)); }) == Errc::OutOfDomain);
}

TEST_CASE("inverse_step examples") {
    IetSpec s = worked();
    auto f = s.field();
    auto r = inverse_step(s, step(s, QuadNum(f, 0)).point);
    CHECK(r.point == QuadNum(f, 0));
    CHECK(r.letter == 'B');
    r = inverse_step(s, s.c());
    CHECK(r.point == s.c() + s.eps());
    CHECK(r.letter == 'C');
    CHECK(code_of([&] { inverse_step(s, s.c() + s.l()); }) == Errc::OutOfDomain);

    auto pts = orbit_points(s, -50, 50);
    for (const auto& x : pts) {
        auto fw = step(s, x);
        auto bw = inverse_step(s, fw.point);
        CHECK(bw.point == x);
        CHECK(bw.letter == fw.letter);
    }
}

TEST_CASE("code_orbit examples") {
    IetSpec s = worked();
    CHECK(code_orbit(s, 0, 20) == "BBCBBCACBBCBBCACBCAC");
    CHECK(code_orbit(s, 0, 1) == "B");
    CHECK(code_orbit(s, 0, 0).empty());
    // the window agrees with separately coded pieces
    Word all = code_orbit(s, -30, 30);
    CHECK(all.substr(30) == code_orbit(s, 0, 30));
    CHECK(all.substr(0, 30) == code_orbit(s, -30, 0));
    CHECK(code_orbit(s, -30, -10) == all.substr(0, 20));
    CHECK(code_orbit(s, 5, 12) == all.substr(35, 7));
    PointedWord pw = orbit_window(s, -30, 30);
    CHECK(pw.at(0) == 'B');
    CHECK(pw.letters == all);
}

TEST_CASE("non_degenerate examples") {
    auto f = sqrt2_field();
    QuadNum e = QuadNum::generator(f);
    CHECK(non_degenerate(worked()));
    IetSpec d = IetSpec::make(e, e * Rational(2), -e);
    CHECK_FALSE(non_degenerate(d));
}

TEST_CASE("property: orbit points lie in Z[e], are distinct and letters match") {
    IetSpec s = worked();
    auto pts = orbit_points(s, -500, 500);
    std::set<std::string> seen;
    Word u = code_orbit(s, -500, 500);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(in_z_eps(pts[i]));
        CHECK(s.domain().contains(pts[i]));
        CHECK(s.letter_of(pts[i]) == u[i]);
        seen.insert(pts[i].str());
    }
    CHECK(seen.size() == pts.size());
}

TEST_CASE("property: letter frequencies approach the interval lengths") {
    IetSpec s = worked();
    const std::int64_t n = 100000;
    Word u = code_orbit(s, 0, n);
    for (char x : kLetters) {
        Interval iv = s.subinterval(x);
        double expected = ((iv.hi - iv.lo) / s.l()).to_double();
        double got = static_cast<double>(std::count(u.begin(), u.end(), x)) / static_cast<double>(n);
        CAPTURE(x);
        CHECK(std::abs(got - expected) < 0.01 * expected);
    }
}

TEST_CASE("specs over other fields are rebased onto e") {
    auto f = make_field(1, 0, -2, Branch::plus);  // e = sqrt2
    IetSpec s = IetSpec::make(parse_quad(f, "e - 1"), parse_quad(f, "e/2"), parse_quad(f, "(1-e)/2"));
    CHECK(s.eps() == QuadNum::generator(s.field()));
    CHECK(code_orbit(s, 0, 20) == "BBCBBCACBBCBBCACBCAC");
}
