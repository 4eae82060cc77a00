#pragma once

#include <cstdint>
#include <vector>

namespace z2n {

// Shared normalization rule for products of monomials in graded symbols
// (Grassmann generators or formal coordinates). Symbols carry a fixed
// canonical order; a monomial is an exponent vector in that order.
//
// Multiplying u by v concatenates the words and sorts the result back into
// canonical order by adjacent transpositions, each contributing the Koszul
// sign of the two symbol degrees. A symbol whose self-pairing is odd squares
// to zero, so any combined exponent >= 2 on such a symbol kills the term.
//
// `odd[g]` is the self-pairing parity of symbol g; `pair[g][h]` is the
// parity of the scalar product of the degrees of symbols g and h.
//
// Returns +1 or -1 and fills `w = u + v`, or returns 0 when the product
// vanishes.
inline int graded_mono_mul(const std::vector<std::uint32_t>& u,
                           const std::vector<std::uint32_t>& v,
                           const std::vector<std::uint8_t>& odd,
                           const std::vector<std::vector<std::uint8_t>>& pair,
                           std::vector<std::uint32_t>& w) {
    const std::size_t g = u.size();
    w.assign(g, 0);
    int e = 0;
    for (std::size_t i = 0; i < g; ++i) {
        const std::uint32_t ui = u[i];
        const std::uint32_t vi = v[i];
        if (odd[i] && ui + vi > 1) return 0;
        w[i] = ui + vi;
        if (ui & 1u) {
            // Each letter of v with smaller canonical index must move left
            // past this letter of u.
            for (std::size_t j = 0; j < i; ++j)
                if ((v[j] & 1u) && pair[i][j]) e ^= 1;
        }
    }
    return e ? -1 : 1;
}

inline std::uint32_t mono_total(const std::vector<std::uint32_t>& u) {
    std::uint32_t t = 0;
    for (auto x : u) t += x;
    return t;
}

// (total degree, then lex on exponent vectors): the canonical print order.
inline bool mono_less(const std::vector<std::uint32_t>& a,
                      const std::vector<std::uint32_t>& b) {
    const std::uint32_t ta = mono_total(a), tb = mono_total(b);
    if (ta != tb) return ta < tb;
    return a < b;
}

struct MonoCmp {
    bool operator()(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) const {
        return mono_less(a, b);
    }
};

} // namespace z2n
