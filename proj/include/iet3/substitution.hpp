#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iet3/iet.hpp"
#include "iet3/word.hpp"

namespace iet3 {

/// Morphism of the free monoid over a small ordered alphabet, given by the
/// (nonempty) image of each letter.
class Substitution {
public:
    Substitution(std::string alphabet, std::vector<Word> images);

    static Substitution identity(std::string alphabet);
    /// One rule per line, "A -> BBCAC"; blank lines ignored.
    static Substitution parse(std::string_view text);

    const std::string& alphabet() const noexcept { return alphabet_; }
    const std::vector<Word>& images() const noexcept { return images_; }
    const Word& image(char letter) const { return images_[index_of(letter)]; }
    std::size_t index_of(char letter) const;
    bool has_letter(char letter) const noexcept { return alphabet_.find(letter) != std::string::npos; }

    /// Serialized rules, one "X -> w" line per letter in alphabet order.
    std::string str() const;

    bool operator==(const Substitution&) const = default;

private:
    std::string alphabet_;
    std::vector<Word> images_;
};

Word apply(const Substitution& sub, std::string_view w);

/// phi o psi, i.e. first psi then phi.
Substitution compose(const Substitution& phi, const Substitution& psi);

/// N[i][j] = occurrences of alphabet[j] in the image of alphabet[i].
struct IncidenceMatrix {
    std::string alphabet;
    std::vector<std::vector<std::int64_t>> n;

    std::size_t size() const noexcept { return alphabet.size(); }
    std::vector<std::int64_t> row_sums() const;
    bool operator==(const IncidenceMatrix&) const = default;
};

IncidenceMatrix incidence(const Substitution& sub);
IncidenceMatrix multiply(const IncidenceMatrix& x, const IncidenceMatrix& y);

bool is_primitive(const Substitution& sub);

struct Spectrum {
    std::vector<Integer> char_poly;      // monic, highest degree first
    std::vector<Integer> integer_roots;  // with multiplicity
    std::vector<QuadNum> field_roots;    // quadratic factor roots expressed in the field
    bool outside_field = false;          // a quadratic factor whose roots are not in the field
    std::optional<QuadNum> dominant;     // largest real root when known exactly
};

/// Characteristic polynomial and its exact roots in Q(e) where possible.
Spectrum spectrum(const IncidenceMatrix& m, const FieldPtr& field);

/// N v == L' v for v = (1-e, 1-2e, -e) in the field of `spec`.
bool check_eigenvector(const Substitution& sub, const IetSpec& spec, const QuadNum& lambda);

/// Compares phi(u_0) phi(u_1) ... with u_0 u_1 ... and ... phi(u_{-2}) phi(u_{-1})
/// with ... u_{-2} u_{-1}, using every block that fits in [-radius, radius).
bool verify_fixed_point(const Substitution& sub, const PointedWord& u, std::int64_t radius);

/// C(0..n_max) counted over factors lying in [-radius, radius) and in the window.
std::vector<std::uint64_t> complexity(const PointedWord& u, int n_max, std::int64_t radius);

/// complexity() at radius and 2*radius agrees; fills `counts` with the former.
bool complexity_stable(const PointedWord& u, int n_max, std::int64_t radius, std::vector<std::uint64_t>* counts = nullptr);

}  // namespace iet3
