#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace iet3 {

using Word = std::string;

/// Finite window u_from ... u_{to-1} of a pointed bidirectional word; the
/// pointing marker sits just before u_0.
struct PointedWord {
    std::int64_t from = 0;
    Word letters;

    std::int64_t to() const noexcept { return from + static_cast<std::int64_t>(letters.size()); }
    bool contains(std::int64_t n) const noexcept { return n >= from && n < to(); }
    char at(std::int64_t n) const { return letters.at(static_cast<std::size_t>(n - from)); }

    /// Letters with indices in [lo, hi), clipped to the window.
    std::string_view slice(std::int64_t lo, std::int64_t hi) const {
        if (lo < from) lo = from;
        if (hi > to()) hi = to();
        if (hi <= lo) return {};
        return std::string_view(letters).substr(static_cast<std::size_t>(lo - from), static_cast<std::size_t>(hi - lo));
    }
};

}  // namespace iet3
