#include "springer/groebner.hpp"

#include <algorithm>

namespace springer {

namespace {

Exp lcm_exp(const Exp& a, const Exp& b) {
    Exp l(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

bool equal_exp(const Exp& a, const Exp& b) { return a == b; }

RatPoly s_polynomial(const RatPoly& f, const RatPoly& g) {
    const Exp& lf = leading_exp(f);
    const Exp& lg = leading_exp(g);
    Exp l = lcm_exp(lf, lg);
    RatPoly sf(f.nvars), sg(g.nvars);
    Rational inv_f = 1 / f.terms.rbegin()->second;
    Rational inv_g = 1 / g.terms.rbegin()->second;
    for (const auto& [e, c] : f.terms) {
        Exp t(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) t[i] = e[i] + l[i] - lf[i];
        sf.add_term(t, c * inv_f);
    }
    for (const auto& [e, c] : g.terms) {
        Exp t(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) t[i] = e[i] + l[i] - lg[i];
        sg.add_term(t, c * inv_g);
    }
    return sf - sg;
}

RatPoly monic(RatPoly p) {
    if (p.is_zero()) return p;
    Rational inv = 1 / p.terms.rbegin()->second;
    for (auto& [e, c] : p.terms) c *= inv;
    return p;
}

}  // namespace

std::vector<RatPoly> groebner_basis(std::vector<RatPoly> gens) {
    std::vector<RatPoly> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(monic(std::move(g)));
    // Drop duplicates early; Tanisaki generator lists repeat a lot.
    std::sort(basis.begin(), basis.end(),
              [](const RatPoly& a, const RatPoly& b) { return a.terms < b.terms; });
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

    struct Pair {
        int i, j;
        Exp lcm;
        int deg;
    };
    auto pair_less = [](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        return GrevlexLess{}(a.lcm, b.lcm);
    };
    std::vector<Pair> queue;
    for (int j = 0; j < static_cast<int>(basis.size()); ++j)
        for (int i = 0; i < j; ++i) {
            Exp l = lcm_exp(leading_exp(basis[i]), leading_exp(basis[j]));
            queue.push_back({i, j, l, total_degree(l)});
        }
    std::make_heap(queue.begin(), queue.end(),
                   [&](const Pair& a, const Pair& b) { return pair_less(b, a); });

    auto heap_cmp = [&](const Pair& a, const Pair& b) { return pair_less(b, a); };
    while (!queue.empty()) {
        std::pop_heap(queue.begin(), queue.end(), heap_cmp);
        Pair pr = queue.back();
        queue.pop_back();
        const Exp& li = leading_exp(basis[pr.i]);
        const Exp& lj = leading_exp(basis[pr.j]);
        // Product criterion: coprime leading terms reduce to zero.
        Exp sum(li.size());
        for (std::size_t t = 0; t < li.size(); ++t) sum[t] = li[t] + lj[t];
        if (equal_exp(sum, pr.lcm)) continue;
        RatPoly s = normal_form(s_polynomial(basis[pr.i], basis[pr.j]), basis);
        if (s.is_zero()) continue;
        basis.push_back(monic(std::move(s)));
        int j = static_cast<int>(basis.size()) - 1;
        for (int i = 0; i < j; ++i) {
            Exp l = lcm_exp(leading_exp(basis[i]), leading_exp(basis[j]));
            queue.push_back({i, j, l, total_degree(l)});
            std::push_heap(queue.begin(), queue.end(), heap_cmp);
        }
    }

    // Minimalize: drop elements whose leading term another one divides.
    std::vector<RatPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (divides(leading_exp(basis[j]), leading_exp(basis[i]))) {
                if (!equal_exp(leading_exp(basis[j]), leading_exp(basis[i])) || j < i) {
                    redundant = true;
                    break;
                }
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // Interreduce tails.
    std::vector<RatPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<RatPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        RatPoly r = normal_form(minimal[i], others);
        check_internal(!r.is_zero(), "groebner: minimal element reduced to zero");
        reduced.push_back(monic(std::move(r)));
    }
    std::sort(reduced.begin(), reduced.end(), [](const RatPoly& a, const RatPoly& b) {
        return GrevlexLess{}(leading_exp(a), leading_exp(b));
    });
    return reduced;
}

}  // namespace springer
