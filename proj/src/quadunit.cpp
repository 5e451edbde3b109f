#include "iet3/quadunit.hpp"

#include <vector>

namespace iet3 {

namespace {

// Representative of y mod Z[e] with coordinates in [0, 1).
QuadNum reduce_mod_lattice(const QuadNum& y) {
    auto frac = [](const Rational& r) {
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
        return Rational(r - f);
    };
    return QuadNum(y.field(), frac(y.a()), frac(y.b()));
}

unsigned long smallest_fixing_power(const QuadNum& conj_unit, std::span<const QuadNum> anchors, const Integer& q) {
    std::vector<QuadNum> start;
    start.reserve(anchors.size());
    for (const auto& y : anchors) {
        class_of(y, q);  // precondition: y in (1/q)Z[e]
        start.push_back(reduce_mod_lattice(y));
    }
    std::vector<QuadNum> cur = start;
    // psi is a bijection on q^2 classes, so the orbit closes within q^2 steps
    Integer bound = q * q;
    for (unsigned long s = 1;; ++s) {
        bool fixed = true;
        for (std::size_t k = 0; k < cur.size(); ++k) {
            cur[k] = reduce_mod_lattice(cur[k] * conj_unit);
            if (!(cur[k] == start[k])) fixed = false;
        }
        if (fixed) return s;
        if (Integer(s) > bound)
            throw Error(Errc::NotInLattice, "multiplier does not permute the classes of (1/q)Z[e]");
    }
}

}  // namespace

PellSolution solve_pell(const Integer& D) {
    if (D < 2 || mpz_perfect_square_p(D.get_mpz_t()))
        throw Error(Errc::PerfectSquare, "Pell equation needs a non-square D >= 2, got " + D.get_str());
    Integer a0;
    mpz_sqrt(a0.get_mpz_t(), D.get_mpz_t());
    // sqrt(D) = [a0; a1, a2, ...] with m_{k+1} = d_k a_k - m_k, d_{k+1} = (D - m_{k+1}^2)/d_k
    Integer m = 0, d = 1, a = a0;
    Integer h_prev = 1, h = a0;
    Integer k_prev = 0, k = 1;
    while (h * h - D * k * k != 1) {
        m = d * a - m;
        d = (D - m * m) / d;
        a = (a0 + m) / d;
        Integer h_next = a * h + h_prev;
        Integer k_next = a * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    return {h, k, D};
}

QuadNum lemma_unit(const FieldPtr& field) {
    PellSolution p = solve_pell(field->discriminant());
    QuadNum gamma(field, Rational(p.X + field->B() * p.Y), Rational(2 * field->A() * p.Y));
    if (gamma.sign() == Sign::negative) gamma = -gamma;
    QuadNum other = gamma.conjugate();
    if (other.sign() == Sign::negative) other = -other;
    return gamma > other ? gamma : other;
}

QuadNum minimal_unit(const FieldPtr& field) {
    const Integer& D = field->discriminant();
    PellSolution p = solve_pell(D);
    const Integer limit = 2 * p.Y;
    if (limit > 10'000'000) return lemma_unit(field);
    // (X + Y sqrt(D))/2 with X^2 - D Y^2 = 4 lies in the multiplier ring of Z[e];
    // the smallest Y gives the smallest such unit
    for (Integer y = 1; y <= limit; ++y) {
        Integer x2 = 4 + D * y * y;
        if (!mpz_perfect_square_p(x2.get_mpz_t())) continue;
        Integer x = sqrt(x2);
        Rational a(x + field->B() * y, 2);
        a.canonicalize();
        QuadNum g(field, a, Rational(field->A() * y));
        QuadNum other = g.conjugate();
        return g > other ? g : other;
    }
    return lemma_unit(field);
}

bool MultiplicationMatrix::integral() const {
    return m11.get_den() == 1 && m12.get_den() == 1 && m21.get_den() == 1 && m22.get_den() == 1;
}

MultiplicationMatrix multiplication_matrix(const QuadNum& lambda) {
    QuadNum times_one = lambda;
    QuadNum times_e = lambda * QuadNum::generator(lambda.field());
    return {times_one.a(), times_e.a(), times_one.b(), times_e.b()};
}

bool is_scaling_unit(const QuadNum& lambda) {
    if (!lambda.field()) return false;
    QuadNum one(lambda.field(), 1);
    QuadNum conj = lambda.conjugate();
    if (!(lambda > one)) return false;
    if (conj.sign() != Sign::positive || !(conj < one)) return false;
    if (!(lambda * conj == one)) return false;
    MultiplicationMatrix m = multiplication_matrix(lambda);
    if (!m.integral()) return false;
    Rational det = m.det();
    return det == 1 || det == -1;
}

ScalingUnit class_fixing_power(const QuadNum& lambda0, const Integer& q, std::span<const QuadNum> anchors) {
    unsigned long s = smallest_fixing_power(lambda0.conjugate(), anchors, q);
    return {pow(lambda0, s), s, lambda0};
}

unsigned long full_class_order(const QuadNum& lambda0, const Integer& q) {
    // the map is Z-linear, so fixing the classes of 1/q and e/q fixes all
    Rational inv(1, q);
    inv.canonicalize();
    std::vector<QuadNum> basis{QuadNum(lambda0.field(), inv), QuadNum(lambda0.field(), 0, inv)};
    return smallest_fixing_power(lambda0.conjugate(), basis, q);
}

}  // namespace iet3
