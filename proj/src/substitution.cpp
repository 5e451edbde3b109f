#include "iet3/substitution.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <unordered_set>

namespace iet3 {

Substitution::Substitution(std::string alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
    if (alphabet_.empty()) throw Error(Errc::InvalidSpec, "empty alphabet");
    if (images_.size() != alphabet_.size())
        throw Error(Errc::InvalidSpec, "need one image per letter of \"" + alphabet_ + "\"");
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        if (alphabet_.find(alphabet_[i], i + 1) != std::string::npos)
            throw Error(Errc::InvalidSpec, std::string("repeated letter '") + alphabet_[i] + "'");
        if (images_[i].empty())
            throw Error(Errc::InvalidSpec, std::string("empty image for '") + alphabet_[i] + "'");
        for (char x : images_[i])
            if (!has_letter(x))
                throw Error(Errc::UnknownLetter, std::string("image of '") + alphabet_[i] + "' uses '" + x + "'");
    }
}

Substitution Substitution::identity(std::string alphabet) {
    std::vector<Word> images;
    for (char x : alphabet) images.emplace_back(1, x);
    return Substitution(std::move(alphabet), std::move(images));
}

Substitution Substitution::parse(std::string_view text) {
    std::string alphabet;
    std::vector<Word> images;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::string letter, arrow, image, extra;
        ls >> letter >> arrow >> image;
        if (letter.size() != 1 || arrow != "->" || image.empty() || (ls >> extra))
            throw Error(Errc::ParseError, "expected \"X -> word\", got \"" + line + "\"");
        alphabet.push_back(letter[0]);
        images.push_back(image);
    }
    return Substitution(std::move(alphabet), std::move(images));
}

std::size_t Substitution::index_of(char letter) const {
    auto pos = alphabet_.find(letter);
    if (pos == std::string::npos)
        throw Error(Errc::UnknownLetter, std::string("'") + letter + "' is not in \"" + alphabet_ + "\"");
    return pos;
}

std::string Substitution::str() const {
    std::string out;
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        out += alphabet_[i];
        out += " -> ";
        out += images_[i];
        out += '\n';
    }
    return out;
}

Word apply(const Substitution& sub, std::string_view w) {
    Word out;
    for (char x : w) out += sub.image(x);
    return out;
}

Substitution compose(const Substitution& phi, const Substitution& psi) {
    std::vector<Word> images;
    for (const auto& img : psi.images()) images.push_back(iet3::apply(phi, img));
    return Substitution(psi.alphabet(), std::move(images));
}

std::vector<std::int64_t> IncidenceMatrix::row_sums() const {
    std::vector<std::int64_t> sums;
    for (const auto& row : n) {
        std::int64_t s = 0;
        for (auto v : row) s += v;
        sums.push_back(s);
    }
    return sums;
}

IncidenceMatrix incidence(const Substitution& sub) {
    const std::size_t k = sub.alphabet().size();
    IncidenceMatrix m{sub.alphabet(), std::vector<std::vector<std::int64_t>>(k, std::vector<std::int64_t>(k, 0))};
    for (std::size_t i = 0; i < k; ++i)
        for (char x : sub.images()[i]) ++m.n[i][sub.index_of(x)];
    return m;
}

IncidenceMatrix multiply(const IncidenceMatrix& x, const IncidenceMatrix& y) {
    const std::size_t k = x.size();
    IncidenceMatrix r{x.alphabet, std::vector<std::vector<std::int64_t>>(k, std::vector<std::int64_t>(k, 0))};
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t t = 0; t < k; ++t) r.n[i][j] += x.n[i][t] * y.n[t][j];
    return r;
}

bool is_primitive(const Substitution& sub) {
    const std::size_t k = sub.alphabet().size();
    IncidenceMatrix m = incidence(sub);
    std::vector<std::vector<bool>> base(k, std::vector<bool>(k)), cur;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) base[i][j] = m.n[i][j] > 0;
    cur = base;
    for (std::size_t power = 1; power <= k * k; ++power) {
        bool positive = true;
        for (const auto& row : cur)
            for (bool v : row) positive = positive && v;
        if (positive) return true;
        std::vector<std::vector<bool>> next(k, std::vector<bool>(k, false));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t t = 0; t < k && !next[i][j]; ++t) next[i][j] = cur[i][t] && base[t][j];
        cur = std::move(next);
    }
    return false;
}

namespace {

using Poly = std::vector<Integer>;  // highest degree first

Integer eval(const Poly& p, const Integer& x) {
    Integer v = 0;
    for (const auto& c : p) v = v * x + c;
    return v;
}

Poly divide_linear(const Poly& p, const Integer& root) {
    Poly q;
    Integer carry = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        carry = carry * root + p[i];
        q.push_back(carry);
    }
    return q;
}

}  // namespace

Spectrum spectrum(const IncidenceMatrix& m, const FieldPtr& field) {
    const std::size_t k = m.size();
    // Faddeev-LeVerrier: M_j = A M_{j-1} + c_{k-j+1} I, c_{k-j} = -tr(A M_j)/j
    std::vector<std::vector<Integer>> a(k, std::vector<Integer>(k)), mk(k, std::vector<Integer>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a[i][j] = Integer(static_cast<long>(m.n[i][j]));
    Poly poly{Integer(1)};
    for (std::size_t step = 1; step <= k; ++step) {
        std::vector<std::vector<Integer>> next(k, std::vector<Integer>(k, 0));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t t = 0; t < k; ++t) next[i][j] += a[i][t] * mk[t][j];
            next[i][i] += poly.back();
        }
        mk = std::move(next);
        Integer tr = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t t = 0; t < k; ++t) tr += a[i][t] * mk[t][i];
        poly.push_back(-tr / static_cast<long>(step));
    }

    Spectrum sp;
    sp.char_poly = poly;

    // every root is bounded by the largest row sum (nonnegative matrix)
    std::int64_t bound = 0;
    for (auto s : m.row_sums()) bound = std::max(bound, s);
    Poly rest = poly;
    for (std::int64_t r = -bound; r <= bound && rest.size() > 1; ++r) {
        Integer root(static_cast<long>(r));
        while (rest.size() > 1 && eval(rest, root) == 0) {
            sp.integer_roots.push_back(root);
            rest = divide_linear(rest, root);
        }
    }

    if (rest.size() == 3 && field) {
        // x^2 + p x + q with non-square discriminant
        const Integer& p = rest[1];
        const Integer& q = rest[2];
        Integer disc = p * p - 4 * q;
        Integer prod = disc * field->discriminant();
        if (sgn(disc) > 0 && mpz_perfect_square_p(prod.get_mpz_t())) {
            Integer t;
            mpz_sqrt(t.get_mpz_t(), prod.get_mpz_t());
            Rational coeff(t, field->discriminant());
            coeff.canonicalize();
            QuadNum root_disc(field, Rational(field->B()), Rational(2 * field->A()));
            root_disc *= Rational(field->root_sign());
            QuadNum sq = root_disc * coeff;  // sqrt(disc)
            Rational half(1, 2);
            QuadNum base(field, Rational(-p) * half);
            sp.field_roots.push_back(base + sq * half);
            sp.field_roots.push_back(base - sq * half);
        } else {
            sp.outside_field = true;
        }
    } else if (rest.size() > 1) {
        sp.outside_field = true;
    }

    if (!sp.outside_field) {
        std::optional<QuadNum> best;
        for (const auto& r : sp.integer_roots) {
            QuadNum v(field, Rational(r));
            if (!best || v > *best) best = v;
        }
        for (const auto& r : sp.field_roots)
            if (!best || r > *best) best = r;
        sp.dominant = best;
    }
    return sp;
}

bool check_eigenvector(const Substitution& sub, const IetSpec& spec, const QuadNum& lambda) {
    if (sub.alphabet() != "ABC") return false;
    IncidenceMatrix m = incidence(sub);
    const QuadNum& e = spec.eps();
    const QuadNum one(spec.field(), 1);
    const std::array<QuadNum, 3> v{one - e, one - e - e, -e};
    QuadNum conj = lambda.conjugate();
    for (std::size_t i = 0; i < 3; ++i) {
        QuadNum row(spec.field(), 0);
        for (std::size_t j = 0; j < 3; ++j) row += v[j] * Rational(static_cast<long>(m.n[i][j]));
        if (!(row == conj * v[i])) return false;
    }
    return true;
}

bool verify_fixed_point(const Substitution& sub, const PointedWord& u, std::int64_t radius) {
    const std::int64_t hi = std::min(radius, u.to());
    const std::int64_t lo = std::max(-radius, u.from);

    std::int64_t pos = 0;
    for (std::int64_t m = 0; m < hi && u.contains(m); ++m) {
        char x = u.at(m);
        if (!sub.has_letter(x)) return false;
        const Word& img = sub.image(x);
        auto len = static_cast<std::int64_t>(img.size());
        if (pos + len > hi) break;
        if (u.slice(pos, pos + len) != img) return false;
        pos += len;
    }
    pos = 0;
    for (std::int64_t m = -1; m >= lo && u.contains(m); --m) {
        char x = u.at(m);
        if (!sub.has_letter(x)) return false;
        const Word& img = sub.image(x);
        auto len = static_cast<std::int64_t>(img.size());
        if (pos - len < lo) break;
        if (u.slice(pos - len, pos) != img) return false;
        pos -= len;
    }
    return true;
}

std::vector<std::uint64_t> complexity(const PointedWord& u, int n_max, std::int64_t radius) {
    const std::int64_t lo = std::max(-radius, u.from);
    const std::int64_t hi = std::min(radius, u.to());
    std::string_view window = u.slice(lo, hi);

    // dense letter codes
    std::string alphabet;
    for (char x : window)
        if (alphabet.find(x) == std::string::npos) alphabet.push_back(x);
    std::sort(alphabet.begin(), alphabet.end());
    std::array<std::uint8_t, 256> code{};
    for (std::size_t i = 0; i < alphabet.size(); ++i) code[static_cast<unsigned char>(alphabet[i])] = static_cast<std::uint8_t>(i);
    unsigned bits = 1;
    while ((std::size_t{1} << bits) < alphabet.size()) ++bits;

    std::vector<std::uint64_t> counts(static_cast<std::size_t>(std::max(n_max, 0)) + 1, 0);
    counts[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        auto len = static_cast<std::size_t>(n);
        if (window.size() < len) break;
        if (len * bits <= 64) {
            const std::uint64_t mask = len * bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (len * bits)) - 1);
            std::vector<std::uint64_t> keys;
            keys.reserve(window.size());
            std::uint64_t h = 0;
            for (std::size_t i = 0; i < window.size(); ++i) {
                h = ((h << bits) | code[static_cast<unsigned char>(window[i])]) & mask;
                if (i + 1 >= len) keys.push_back(h);
            }
            std::sort(keys.begin(), keys.end());
            counts[len] = static_cast<std::uint64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
        } else {
            std::unordered_set<std::string_view> seen;
            for (std::size_t i = 0; i + len <= window.size(); ++i) seen.insert(window.substr(i, len));
            counts[len] = seen.size();
        }
    }
    return counts;
}

bool complexity_stable(const PointedWord& u, int n_max, std::int64_t radius, std::vector<std::uint64_t>* counts) {
    auto at_r = complexity(u, n_max, radius);
    auto at_2r = complexity(u, n_max, 2 * radius);
    if (counts) *counts = at_r;
    return at_r == at_2r;
}

}  // namespace iet3
