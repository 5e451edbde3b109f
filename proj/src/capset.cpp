#include "iet3/capset.hpp"

#include <algorithm>

namespace iet3 {

std::string gap_name(Gap g) {
    switch (g) {
        case Gap::d1: return "D1";
        case Gap::d2: return "D2";
        case Gap::d1_plus_d2: return "D1+D2";
    }
    return "?";
}

CapSetConfig CapSetConfig::make(const QuadNum& eps, const QuadNum& c, const QuadNum& l, std::optional<QuadNum> eta) {
    Rebase rb = rebase_on(eps);
    CapSetConfig cfg;
    cfg.eps_ = rb(eps);
    cfg.eta_ = eta ? rb(*eta) : -cfg.eps_.conjugate();
    cfg.window_ = {rb(c), rb(c) + rb(l)};

    const QuadNum one(rb.field, 1);
    const QuadNum zero(rb.field, 0);
    if (cfg.eta_.is_rational()) throw Error(Errc::InvalidSpec, "eta must be irrational");
    if ((cfg.eps_ + cfg.eta_).is_zero()) throw Error(Errc::InvalidSpec, "eta must differ from -e");
    if (cfg.eta_ > -one && cfg.eta_ < zero)
        throw Error(Errc::DangerousEta, "eta = " + cfg.eta_.decimal(6) + " lies in (-1, 0)");
    if (!(zero < cfg.eps_ && cfg.eps_ < one)) throw Error(Errc::InvalidWindow, "e must lie in (0, 1)");
    QuadNum len = cfg.length();
    if (!(len <= one && len > cfg.eps_ && len > one - cfg.eps_))
        throw Error(Errc::InvalidWindow, "window length " + len.decimal(6) + " violates 1 >= l > max(e, 1-e)");
    if (!cfg.window_.contains(zero)) throw Error(Errc::InvalidWindow, "0 is not in the window");

    if (cfg.eta_ < zero) {
        // Sigma_{e,eta} = Sigma_{1-e,-1-eta} with (a, b) = (a'' - b'', -b'')
        cfg.mirrored_ = true;
        cfg.delta1_ = {0, -1};
        cfg.delta2_ = {-1, -1};
    }
    return cfg;
}

bool CapSetConfig::eta_is_conjugate() const { return eta_ == -eps_.conjugate(); }

QuadNum star(const CapSetConfig& cfg, const LatticePoint& x) {
    return QuadNum(cfg.field(), Rational(static_cast<long>(x.a))) - cfg.eps() * Rational(static_cast<long>(x.b));
}

QuadNum point_value(const CapSetConfig& cfg, const LatticePoint& x) {
    return QuadNum(cfg.field(), Rational(static_cast<long>(x.a))) + cfg.eta() * Rational(static_cast<long>(x.b));
}

std::vector<LatticePoint> generate(const CapSetConfig& cfg, std::int64_t count) {
    if (count < 1) throw Error(Errc::InvalidSpec, "count must be at least 1");
    return generate_range(cfg, 0, count + 1);
}

std::vector<LatticePoint> generate_range(const CapSetConfig& cfg, std::int64_t from, std::int64_t to) {
    std::vector<LatticePoint> out;
    if (to <= from) return out;

    // successor rule in (possibly mirrored) internal coordinates; the star
    // value is the same in both coordinate systems
    const QuadNum one(cfg.field(), 1);
    const QuadNum e = cfg.mirrored_ ? one - cfg.eps() : cfg.eps();
    const QuadNum& c = cfg.window().lo;
    const QuadNum& end = cfg.window().hi;
    const QuadNum l = end - c;
    const QuadNum b1 = c + l - one + e;  // [c, b1) -> +Delta1
    const QuadNum b2 = c + e;            // [b1, b2) -> +Delta1+Delta2, [b2, end) -> +Delta2
    const QuadNum p1 = end - e;          // predecessor boundaries
    const QuadNum p2 = c + one - e;
    const QuadNum shift_d1 = one - e, shift_d2 = -e;

    auto to_outer = [&](std::int64_t a, std::int64_t b) {
        return cfg.mirrored_ ? LatticePoint{a - b, -b} : LatticePoint{a, b};
    };

    std::vector<LatticePoint> negatives;
    if (from < 0) {
        std::int64_t a = 0, b = 0;
        QuadNum s(cfg.field(), 0);
        for (std::int64_t n = -1; n >= from; --n) {
            if (s < p1) {
                b -= 1;
                s -= shift_d2;
            } else if (s < p2) {
                a -= 1;
                b -= 2;
                s -= shift_d1 + shift_d2;
            } else {
                a -= 1;
                b -= 1;
                s -= shift_d1;
            }
            if (n < to) negatives.push_back(to_outer(a, b));
        }
        out.assign(negatives.rbegin(), negatives.rend());
    }
    std::int64_t a = 0, b = 0;
    QuadNum s(cfg.field(), 0);
    for (std::int64_t n = 0; n < to; ++n) {
        if (n >= from) out.push_back(to_outer(a, b));
        if (s < b1) {
            a += 1;
            b += 1;
            s += shift_d1;
        } else if (s < b2) {
            a += 1;
            b += 2;
            s += shift_d1 + shift_d2;
        } else {
            b += 1;
            s += shift_d2;
        }
    }
    return out;
}

std::optional<Gap> classify_gap(const CapSetConfig& cfg, const LatticePoint& left, const LatticePoint& right) {
    LatticePoint d{right.a - left.a, right.b - left.b};
    LatticePoint d1 = cfg.delta1(), d2 = cfg.delta2();
    if (d == d1) return Gap::d1;
    if (d == d2) return Gap::d2;
    if (d == LatticePoint{d1.a + d2.a, d1.b + d2.b}) return Gap::d1_plus_d2;
    return std::nullopt;
}

std::vector<LatticePoint> lattice_points(const QuadNum& eps, const QuadNum& eta, const Interval& window,
                                         const QuadNum& lo, const QuadNum& hi) {
    // x = a + b eta in [lo, hi] and a - b e in [w0, w1) give b (eta + e) in [lo - w1, hi - w0]
    QuadNum slope = eta + eps;
    if (slope.is_zero()) throw Error(Errc::InvalidSpec, "eta must differ from -e");
    QuadNum u = (lo - window.hi) / slope;
    QuadNum v = (hi - window.lo) / slope;
    if (u > v) std::swap(u, v);
    Integer bmin = u.floor() - 1, bmax = v.ceil() + 1;

    std::vector<std::pair<QuadNum, LatticePoint>> found;
    for (Integer b = bmin; b <= bmax; ++b) {
        QuadNum be = eps * Rational(b);
        Integer amin = (window.lo + be).ceil();
        Integer amax = (window.hi + be).ceil() - 1;
        for (Integer a = amin; a <= amax; ++a) {
            LatticePoint p{a.get_si(), b.get_si()};
            QuadNum x = QuadNum(eps.field(), Rational(a)) + eta * Rational(b);
            if (x >= lo && x <= hi) found.emplace_back(x, p);
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<LatticePoint> out;
    out.reserve(found.size());
    for (auto& f : found) out.push_back(f.second);
    return out;
}

bool check_selfsimilarity(const CapSetConfig& cfg, const QuadNum& lambda, std::int64_t count) {
    if (!cfg.eta_is_conjugate())
        throw Error(Errc::NotApplicable, "self-similarity needs eta = -e'");
    if (lambda.sign() != Sign::positive) return false;
    const QuadNum lambda_c = lambda.conjugate();
    const Interval scaled{lambda_c * cfg.window().lo, lambda_c * cfg.window().hi};
    if (!(scaled.lo < scaled.hi)) return false;

    std::vector<LatticePoint> pts = generate(cfg, count);
    // x = a + b eta = (a - b e)' so lambda x has conjugate lambda' x*
    std::vector<QuadNum> images;
    images.reserve(pts.size());
    for (const auto& p : pts) {
        QuadNum image_star = lambda_c * star(cfg, p);
        if (!in_z_eps(image_star) || !scaled.contains(image_star)) return false;
        images.push_back(image_star.conjugate());
    }

    const QuadNum zero(cfg.field(), 0);
    const QuadNum& top = images.back();
    std::vector<QuadNum> target;
    if (cfg.window().contains(scaled)) {
        // Sigma(lambda' Omega) is the part of Sigma(Omega) whose star lands in lambda' Omega
        std::int64_t chunk = count + 16;
        std::int64_t n = 0;
        for (;;) {
            auto more = generate_range(cfg, n, n + chunk);
            bool done = false;
            for (const auto& p : more) {
                QuadNum x = point_value(cfg, p);
                if (x > top) {
                    done = true;
                    break;
                }
                if (scaled.contains(star(cfg, p))) target.push_back(std::move(x));
            }
            if (done) break;
            n += chunk;
        }
    } else {
        for (const auto& p : lattice_points(cfg.eps(), cfg.eta(), scaled, zero, top))
            target.push_back(point_value(cfg, p));
    }
    return target == images;
}

std::string capset_tsv(const CapSetConfig& cfg, const std::vector<LatticePoint>& pts, int digits) {
    std::string out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::string gap = "-";
        if (i > 0) {
            auto g = classify_gap(cfg, pts[i - 1], pts[i]);
            gap = g ? gap_name(*g) : "?";
        }
        out += std::to_string(pts[i].a) + "\t" + std::to_string(pts[i].b) + "\t" +
               point_value(cfg, pts[i]).decimal(digits) + "\t" + gap + "\n";
    }
    return out;
}

}  // namespace iet3
