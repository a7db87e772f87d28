#pragma once

#include <vector>

#include "springer/polynomial.hpp"

namespace springer {

/// Leading exponent under grevlex (the largest term). Polynomial must be nonzero.
inline const Exp& leading_exp(const RatPoly& p) {
    check_internal(!p.is_zero(), "leading_exp of zero polynomial");
    return p.terms.rbegin()->first;
}

inline bool divides(const Exp& a, const Exp& b) {  // a | b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Remainder of p on division by the basis, fully reduced: no term of the
/// result is divisible by any leading term. Deterministic (leading reducible
/// term first, first matching divisor in basis order). Linear in p.
template <class C>
Poly<C> normal_form(Poly<C> p, const std::vector<RatPoly>& basis);

/// Buchberger's algorithm; input over Q, output a reduced Groebner basis
/// under grevlex (monic, pairwise fully reduced, sorted by leading term).
std::vector<RatPoly> groebner_basis(std::vector<RatPoly> gens);

// Implementation.

template <class C>
Poly<C> normal_form(Poly<C> p, const std::vector<RatPoly>& basis) {
    Poly<C> rem(p.nvars);
    while (!p.terms.empty()) {
        auto lead = std::prev(p.terms.end());
        const Exp& e = lead->first;
        const RatPoly* divisor = nullptr;
        for (const auto& g : basis)
            if (divides(leading_exp(g), e)) {
                divisor = &g;
                break;
            }
        if (!divisor) {
            rem.add_term(e, lead->second);
            p.terms.erase(lead);
            continue;
        }
        const Exp& ge = leading_exp(*divisor);
        Exp shift(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) shift[i] = e[i] - ge[i];
        C factor = lead->second * C(1 / divisor->terms.rbegin()->second);
        for (const auto& [ge2, gc] : divisor->terms) {
            Exp t = shift;
            for (std::size_t i = 0; i < t.size(); ++i) t[i] += ge2[i];
            p.add_term(t, -(factor * C(gc)));
        }
    }
    return rem;
}

}  // namespace springer
