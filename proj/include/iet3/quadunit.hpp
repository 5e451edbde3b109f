#pragma once

// Quadratic units L > 1 with 0 < L' < 1 and L Z[e] = Z[e], built from the
// fundamental solution of X^2 - D Y^2 = 1.

#include <span>

#include "iet3/qfield.hpp"

namespace iet3 {

struct PellSolution {
    Integer X;
    Integer Y;
    Integer D;
};

/// Fundamental solution via the periodic continued fraction of sqrt(D).
/// Throws PerfectSquare for square D (and for D < 2).
PellSolution solve_pell(const Integer& D);

/// max(g, 1/g) for g = X + B Y + 2 A Y e; always > 1 with conjugate in (0, 1).
QuadNum lemma_unit(const FieldPtr& field);

/// Smallest unit L > 1 with 0 < L' < 1 and L Z[e] = Z[e]; every such unit,
/// including lemma_unit(), is a power of it.
QuadNum minimal_unit(const FieldPtr& field);

struct ScalingUnit {
    QuadNum lambda;  // gamma^s
    unsigned long s = 1;
    QuadNum gamma;   // the unit before powering
};

/// Integer matrix of y -> lambda*y on Z[e] in the basis {1, e}: columns are
/// lambda*1 and lambda*e. Entries are only meaningful when integral.
struct MultiplicationMatrix {
    Rational m11, m12, m21, m22;

    bool integral() const;
    Rational det() const { return m11 * m22 - m12 * m21; }
};

MultiplicationMatrix multiplication_matrix(const QuadNum& lambda);

/// Exact check of L > 1, 0 < L' < 1, L L' = 1, L Z[e] = Z[e].
bool is_scaling_unit(const QuadNum& lambda);

/// Smallest s >= 1 with (L0')^s y == y mod Z[e] for every anchor y.
/// Anchors must lie in (1/q)Z[e].
ScalingUnit class_fixing_power(const QuadNum& lambda0, const Integer& q, std::span<const QuadNum> anchors);

/// Order of y -> L0' y on all q^2 classes of (1/q)Z[e] / Z[e].
unsigned long full_class_order(const QuadNum& lambda0, const Integer& q);

}  // namespace iet3
