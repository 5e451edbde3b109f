#pragma once

// Cut-and-project sequences Sigma_{e,eta}(Omega) = { a + b*eta : a - b*e in Omega }
// for a half-open window Omega = [c, c+l), generated point by point with the
// three-gap successor rule.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iet3/iet.hpp"
#include "iet3/quadunit.hpp"

namespace iet3 {

struct LatticePoint {
    std::int64_t a = 0;
    std::int64_t b = 0;
    bool operator==(const LatticePoint&) const = default;
    auto operator<=>(const LatticePoint&) const = default;
};

enum class Gap { d1, d2, d1_plus_d2 };
std::string gap_name(Gap g);

class CapSetConfig {
public:
    /// eta defaults to -e' (star map = Galois conjugation). Throws DangerousEta
    /// for eta in (-1, 0) and InvalidWindow unless 0 in [c, c+l) and
    /// 1 >= l > max(e, 1-e).
    static CapSetConfig make(const QuadNum& eps, const QuadNum& c, const QuadNum& l,
                             std::optional<QuadNum> eta = std::nullopt);
    static CapSetConfig from_spec(const IetSpec& spec) { return make(spec.eps(), spec.c(), spec.l()); }

    const FieldPtr& field() const noexcept { return eps_.field(); }
    const QuadNum& eps() const noexcept { return eps_; }
    const QuadNum& eta() const noexcept { return eta_; }
    const Interval& window() const noexcept { return window_; }
    QuadNum length() const { return window_.hi - window_.lo; }
    bool eta_is_conjugate() const;

    /// Gap vectors (a, b) of Delta1 and Delta2 in this config's coordinates.
    LatticePoint delta1() const noexcept { return delta1_; }
    LatticePoint delta2() const noexcept { return delta2_; }

private:
    CapSetConfig() = default;
    friend std::vector<LatticePoint> generate_range(const CapSetConfig&, std::int64_t, std::int64_t);

    QuadNum eps_, eta_;
    Interval window_;
    bool mirrored_ = false;  // eta < -1: generated through (1-e, -1-eta)
    LatticePoint delta1_{1, 1}, delta2_{0, 1};
};

/// a - b e
QuadNum star(const CapSetConfig& cfg, const LatticePoint& x);
/// a + b eta as a real number of the field
QuadNum point_value(const CapSetConfig& cfg, const LatticePoint& x);

/// s_0 = 0, s_1, ..., s_count in increasing order.
std::vector<LatticePoint> generate(const CapSetConfig& cfg, std::int64_t count);
/// s_from, ..., s_{to-1}; negative indices use the predecessor rule.
std::vector<LatticePoint> generate_range(const CapSetConfig& cfg, std::int64_t from, std::int64_t to);

/// Which of Delta1, Delta2, Delta1+Delta2 separates consecutive points;
/// std::nullopt if none does.
std::optional<Gap> classify_gap(const CapSetConfig& cfg, const LatticePoint& left, const LatticePoint& right);

/// All points of Sigma_{e,eta}(window) with value in [lo, hi], by direct
/// lattice enumeration (no successor rule), sorted by value.
std::vector<LatticePoint> lattice_points(const QuadNum& eps, const QuadNum& eta, const Interval& window,
                                         const QuadNum& lo, const QuadNum& hi);

/// lambda * Sigma(Omega) == Sigma(lambda' Omega) over the first `count` points
/// (requires eta = -e').
bool check_selfsimilarity(const CapSetConfig& cfg, const QuadNum& lambda, std::int64_t count);
inline bool check_selfsimilarity(const CapSetConfig& cfg, const ScalingUnit& unit, std::int64_t count) {
    return check_selfsimilarity(cfg, unit.lambda, count);
}

/// "a<TAB>b<TAB>decimal<TAB>gap" lines; gap is the gap to the previous point
/// ("-" for the first).
std::string capset_tsv(const CapSetConfig& cfg, const std::vector<LatticePoint>& pts, int digits = 20);

}  // namespace iet3
