#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "iet3/quadunit.hpp"
#include "support.hpp"

using namespace iet3;
using iet3::testing::sqrt2_field;

namespace {

bool is_square(long n) {
    if (n < 0) return false;
    Integer z(n);
    return mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

// Smallest Y >= 1 with 1 + D Y^2 a square.
std::pair<long, long> brute_pell(long D) {
    for (long y = 1;; ++y) {
        Integer x2 = 1 + Integer(D) * y * y;
        if (mpz_perfect_square_p(x2.get_mpz_t())) return {Integer(sqrt(x2)).get_si(), y};
    }
}

bool unit_properties(const QuadNum& lambda) {
    const QuadNum one(lambda.field(), 1);
    QuadNum lc = lambda.conjugate();
    if (!(lambda > one) || !(lc > QuadNum(lambda.field(), 0)) || !(lc < one)) return false;
    if (!(lambda * lc == one)) return false;
    // both directions: lambda Z[e] and lambda' Z[e] inside Z[e]
    QuadNum e = QuadNum::generator(lambda.field());
    for (const QuadNum& m : {lambda, lc})
        if (!in_z_eps(m) || !in_z_eps(m * e)) return false;
    Rational det = multiplication_matrix(lambda).det();
    return det == 1 || det == -1;
}

}  // namespace

TEST_CASE("solve_pell examples") {
    auto p = solve_pell(8);
    CHECK(p.X == 3);
    CHECK(p.Y == 1);
    p = solve_pell(5);
    CHECK(p.X == 9);
    CHECK(p.Y == 4);
    p = solve_pell(2);
    CHECK(p.X == 3);
    CHECK(p.Y == 2);
    // a long period
    p = solve_pell(61);
    CHECK(p.X == Integer("1766319049"));
    CHECK(p.Y == Integer("226153980"));
}

TEST_CASE("solve_pell matches brute force for D <= 50") {
    for (long D = 2; D <= 50; ++D) {
        if (is_square(D)) continue;
        auto [x, y] = brute_pell(D);
        auto p = solve_pell(D);
        CAPTURE(D);
        CHECK(p.X == x);
        CHECK(p.Y == y);
        CHECK(p.X * p.X - D * p.Y * p.Y == 1);
    }
}

TEST_CASE("solve_pell rejects squares") {
    for (long D : {0L, 1L, 4L, 9L, 49L}) {
        try {
            solve_pell(D);
            FAIL("accepted " << D);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::PerfectSquare);
        }
    }
}

TEST_CASE("lemma_unit examples") {
    auto f = sqrt2_field();
    QuadNum l0 = lemma_unit(f);
    CHECK(l0 == QuadNum(f, 5, 2));
    CHECK(l0.conjugate() == QuadNum(f, 1, -2));

    auto g = make_field(1, -3, 1, Branch::minus);
    QuadNum l1 = lemma_unit(g);
    // 9 + 4 sqrt5 with e = (3 - sqrt5)/2, i.e. sqrt5 = 3 - 2e
    CHECK(l1 == QuadNum(g, 21, -8));
    CHECK(l1 * l1.conjugate() == QuadNum(g, 1));
}

TEST_CASE("constructed units have the scaling properties") {
    // discriminants 5, 8, 12, 13, 17
    const std::vector<std::tuple<int, int, int>> fields{{1, -1, -1}, {1, 2, -1}, {1, 0, -3}, {1, -1, -3}, {1, -1, -4},
                                                        {2, 0, -1},  {1, -3, 1}, {3, 0, -1}};
    for (auto [A, B, C] : fields) {
        for (Branch br : {Branch::plus, Branch::minus}) {
            auto f = make_field(A, B, C, br);
            CAPTURE(f->str());
            CHECK(unit_properties(lemma_unit(f)));
            CHECK(is_scaling_unit(lemma_unit(f)));
            QuadNum m = minimal_unit(f);
            CHECK(unit_properties(m));
            // the Pell unit is a power of the minimal one
            QuadNum p = m;
            int k = 1;
            while (p < lemma_unit(f) && k < 20) {
                p *= m;
                ++k;
            }
            CHECK(p == lemma_unit(f));
        }
    }
    auto f = sqrt2_field();
    CHECK(minimal_unit(f) == QuadNum(f, 5, 2));
}

TEST_CASE("is_scaling_unit rejects non-units") {
    auto f = sqrt2_field();
    CHECK_FALSE(is_scaling_unit(QuadNum(f, 2)));
    CHECK_FALSE(is_scaling_unit(QuadNum(f, 1, -2)));  // conjugate > 1
    CHECK_FALSE(is_scaling_unit(QuadNum(f, 1)));
    CHECK_FALSE(is_scaling_unit(QuadNum(f, 1, 1)));   // sqrt2, norm -2
    CHECK(is_scaling_unit(QuadNum(f, 5, 2)));
}

TEST_CASE("class_fixing_power examples") {
    auto f = sqrt2_field();
    QuadNum l0(f, 5, 2);
    std::vector<QuadNum> anchors{QuadNum(f, 0, Rational(-1, 2)), QuadNum(f, Rational(1, 2), 0)};
    auto u = class_fixing_power(l0, 2, anchors);
    CHECK(u.s == 1);
    CHECK(u.lambda == l0);
    CHECK(u.gamma == l0);

    std::vector<QuadNum> integral{QuadNum(f, 3, -1), QuadNum(f, 0, 2)};
    CHECK(class_fixing_power(l0, 7, integral).s == 1);
    CHECK(class_fixing_power(l0, 1, integral).s == 1);

    // a class that moves: 1/3 under 3 - 2 sqrt2
    std::vector<QuadNum> third{QuadNum(f, Rational(1, 3))};
    auto v = class_fixing_power(l0, 3, third);
    CHECK(v.s > 1);
    QuadNum moved = v.lambda.conjugate() * third[0] - third[0];
    CHECK(in_z_eps(moved));
    CHECK(v.lambda == pow(l0, v.s));
}

TEST_CASE("property: multiplication by L0' permutes the q^2 classes") {
    const std::vector<std::tuple<int, int, int, Branch>> fields{
        {1, 2, -1, Branch::plus}, {1, -3, 1, Branch::minus}, {2, 0, -1, Branch::plus}, {1, -1, -3, Branch::plus}};
    for (auto [A, B, C, br] : fields) {
        auto f = make_field(A, B, C, br);
        QuadNum lc = lemma_unit(f).conjugate();
        QuadNum e = QuadNum::generator(f);
        for (long q = 1; q <= 12; ++q) {
            std::set<std::pair<long, long>> seen;
            for (long i = 0; i < q; ++i)
                for (long j = 0; j < q; ++j) {
                    QuadNum x = (QuadNum(f, i) + e * Rational(j)) * Rational(1, q);
                    auto k = class_of(lc * x, q);
                    seen.insert({k.i.get_si(), k.j.get_si()});
                }
            CAPTURE(f->str());
            CAPTURE(q);
            CHECK(seen.size() == static_cast<std::size_t>(q * q));
            unsigned long order = full_class_order(lemma_unit(f), q);
            QuadNum lo = pow(lc, order);
            for (long i = 0; i < q; ++i)
                for (long j = 0; j < q; ++j) {
                    QuadNum x = (QuadNum(f, i) + e * Rational(j)) * Rational(1, q);
                    CHECK(in_z_eps(lo * x - x));
                }
        }
    }
}
