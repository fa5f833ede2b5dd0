#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace pbv {

// Interned variable families ("B", "X", "Y", "v", "pair", "lam", ...).
// Registration is idempotent; ids are stable within a process. Families
// registered as scalar print without an index bracket.
namespace families {
uint32_t intern(const std::string& name, bool scalar = false);
const std::string& name(uint32_t id);
bool is_scalar(uint32_t id);
}  // namespace families

inline constexpr int32_t kNoIndex = std::numeric_limits<int32_t>::min();

// One generator of a coordinate ring: a family plus one index (two for the
// ordered-pair generators of the swapping ring). `relative` marks parser
// output indexed by the free cyclic symbol k; instantiation resolves it.
struct VarRef {
    uint32_t family = 0;
    int32_t i = 0;
    int32_t j = kNoIndex;
    bool relative = false;

    friend bool operator==(const VarRef&, const VarRef&) = default;
};

// Total order: family symbol (lexicographic), then indices. Used by the
// monomial order and by deterministic printing.
inline std::strong_ordering operator<=>(const VarRef& a, const VarRef& b) {
    if (a.family != b.family) {
        int c = families::name(a.family).compare(families::name(b.family));
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (a.i != b.i) return a.i <=> b.i;
    if (a.j != b.j) return a.j <=> b.j;
    return a.relative <=> b.relative;
}

inline bool operator<(const VarRef& a, const VarRef& b) { return (a <=> b) == std::strong_ordering::less; }

std::string to_string(const VarRef& v);

inline VarRef var_abs(const std::string& fam, int32_t i) {
    return VarRef{families::intern(fam), i, kNoIndex, false};
}
inline VarRef var_rel(const std::string& fam, int32_t offset) {
    return VarRef{families::intern(fam), offset, kNoIndex, true};
}
inline VarRef var_pair(int32_t a, int32_t b) {
    return VarRef{families::intern("pair"), a, b, false};
}
inline VarRef var_scalar(const std::string& fam) {
    return VarRef{families::intern(fam, true), 0, kNoIndex, false};
}

// Cyclic normalization into [1, N].
inline int32_t wrap_index(int64_t i, int32_t N) {
    int64_t m = (i - 1) % N;
    if (m < 0) m += N;
    return static_cast<int32_t>(m + 1);
}

}  // namespace pbv
