#include "springer/springer.hpp"

#include <algorithm>
#include <functional>

#include "springer/errors.hpp"

namespace springer {

namespace {

// e_r over the variables indexed by subset (0-based).
RatPoly elementary_symmetric(int m, const std::vector<int>& subset, int r) {
    // Row of Pascal-style DP over polynomials: e_r of a growing variable set.
    std::vector<RatPoly> e(r + 1, RatPoly(m));
    e[0] = RatPoly::constant(m, Rational(1));
    for (int v : subset) {
        RatPoly xv = RatPoly::variable(m, v);
        for (int j = r; j >= 1; --j) e[j] += e[j - 1] * xv;
    }
    return e[r];
}

}  // namespace

std::vector<RatPoly> tanisaki_generators(const Partition& mu) {
    int m = mu.sum();
    Partition conj = mu.conjugate();
    std::vector<int> padded(m, 0);
    for (int i = 0; i < conj.length(); ++i) padded[i] = conj.parts[i];
    std::vector<int> d(m + 1, 0);
    for (int k = 1; k <= m; ++k) {
        int s = 0;
        for (int i = m - k; i < m; ++i) s += padded[i];
        d[k] = s;
    }
    std::vector<RatPoly> gens;
    std::vector<int> subset;
    std::function<void(int, int)> choose = [&](int start, int k) {
        if (static_cast<int>(subset.size()) == k) {
            for (int r = k - d[k] + 1; r <= k; ++r)
                if (r >= 1) gens.push_back(elementary_symmetric(m, subset, r));
            return;
        }
        for (int v = start; v < m; ++v) {
            subset.push_back(v);
            choose(v + 1, k);
            subset.pop_back();
        }
    };
    for (int k = 1; k <= m; ++k) {
        if (d[k] <= 0) continue;  // no r in range
        subset.clear();
        choose(0, k);
    }
    return gens;
}

GradedQuotient::GradedQuotient(Partition mu, bool allow_large) : mu_(std::move(mu)) {
    m_ = mu_.sum();
    if (m_ < 1) throw invalid_input("GradedQuotient: empty partition");
    if (m_ > 6 && !allow_large)
        throw guard_exceeded("GradedQuotient: m > 6 needs the large-size override");
    gb_ = groebner_basis(tanisaki_generators(mu_));

    std::vector<Exp> lts;
    for (const auto& g : gb_) lts.push_back(leading_exp(g));
    // Standard monomials degree by degree; the algebra is generated in
    // degree 1, so the first empty degree ends it.
    for (int deg = 0;; ++deg) {
        std::vector<Exp> mons;
        Exp cur(m_, 0);
        std::function<void(int, int)> enumerate = [&](int var, int rest) {
            if (var == m_ - 1) {
                cur[var] = rest;
                for (const auto& lt : lts)
                    if (divides(lt, cur)) {
                        cur[var] = 0;
                        return;
                    }
                mons.push_back(cur);
                cur[var] = 0;
                return;
            }
            for (int e = 0; e <= rest; ++e) {
                cur[var] = e;
                enumerate(var + 1, rest - e);
                cur[var] = 0;
            }
        };
        enumerate(0, deg);
        if (mons.empty() && deg > 0) break;
        std::sort(mons.begin(), mons.end(), GrevlexLess{});
        monomials_.push_back(std::move(mons));
    }
    index_.resize(monomials_.size());
    for (std::size_t d = 0; d < monomials_.size(); ++d)
        for (std::size_t i = 0; i < monomials_[d].size(); ++i)
            index_[d].emplace(monomials_[d][i], static_cast<int>(i));
    adjacent_cache_.resize(static_cast<std::size_t>(std::max(0, m_ - 1)));
    for (auto& per_degree : adjacent_cache_) per_degree.resize(monomials_.size());
}

std::shared_ptr<const GradedQuotient> GradedQuotient::of(const Partition& mu,
                                                         bool allow_large) {
    static std::map<Partition, std::shared_ptr<const GradedQuotient>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;
    auto q = std::make_shared<const GradedQuotient>(mu, allow_large);
    cache.emplace(mu, q);
    return q;
}

std::map<int, int> GradedQuotient::graded_dims() const {
    std::map<int, int> dims;
    for (int d = 0; d <= top_degree(); ++d) dims[d] = dim(d);
    return dims;
}

int GradedQuotient::total_dim() const {
    int t = 0;
    for (int d = 0; d <= top_degree(); ++d) t += dim(d);
    return t;
}

std::vector<Rational> GradedQuotient::coordinates(const RatPoly& p, int degree) const {
    RatPoly nf = normal_form(p);
    std::vector<Rational> coords(dim(degree));
    for (const auto& [e, c] : nf.terms) {
        if (total_degree(e) != degree) continue;
        auto it = index_[degree].find(e);
        check_internal(it != index_[degree].end(),
                       "coordinates: normal form outside the standard monomials");
        coords[it->second] = c;
    }
    return coords;
}

const Mat<Rational>& GradedQuotient::adjacent_action(int gen, int degree) const {
    check_internal(gen >= 0 && gen < m_ - 1 && degree >= 0 && degree <= top_degree(),
                   "adjacent_action: out of range");
    std::lock_guard<std::mutex> lock(cache_mtx_);
    auto& slot = adjacent_cache_[gen][degree];
    if (slot) return *slot;
    const auto& mons = monomials_[degree];
    int n = static_cast<int>(mons.size());
    auto mat = std::make_unique<Mat<Rational>>(n, n);
    Perm s = Perm::transposition(m_, gen, gen + 1);
    for (int j = 0; j < n; ++j) {
        // sigma . x^e has exponents e' with e'[sigma(i)] = e[i].
        Exp pe(m_, 0);
        for (int i = 0; i < m_; ++i) pe[s(i)] = mons[j][i];
        RatPoly p(m_);
        p.add_term(pe, Rational(1));
        std::vector<Rational> col = coordinates(p, degree);
        for (int i = 0; i < n; ++i) mat->at(i, j) = col[i];
    }
    slot = std::move(mat);
    return *slot;
}

Mat<Rational> GradedQuotient::perm_action(const Perm& sigma, int degree) const {
    Mat<Rational> m = Mat<Rational>::identity(dim(degree));
    for (int g : sigma.adjacent_word()) m = m * adjacent_action(g, degree);
    return m;
}

std::vector<Rational> SubmoduleBasis::coordinates(const RatPoly& p) const {
    RatPoly nf = quotient->normal_form(p);
    std::vector<Rational> coords(dim);
    std::map<int, int> deg_pos;
    for (std::size_t i = 0; i < degrees.size(); ++i) deg_pos[degrees[i]] = offsets[i];
    for (const auto& [e, c] : nf.terms) {
        int d = total_degree(e);
        auto it = deg_pos.find(d);
        check_internal(it != deg_pos.end(),
                       "SubmoduleBasis::coordinates: component outside selected degrees");
        // position within the degree
        const auto& mons = quotient->monomials(d);
        auto pos = std::lower_bound(mons.begin(), mons.end(), e, GrevlexLess{});
        check_internal(pos != mons.end() && *pos == e,
                       "SubmoduleBasis::coordinates: monomial not standard");
        coords[it->second + static_cast<int>(pos - mons.begin())] = c;
    }
    return coords;
}

SubmoduleBasis submodule_basis(std::shared_ptr<const GradedQuotient> q, int k, int l) {
    if (l < 1) throw invalid_input("submodule_basis: l must be >= 1");
    SubmoduleBasis b;
    b.k = ((k % l) + l) % l;
    b.l = l;
    int off = 0;
    for (int d = 0; d <= q->top_degree(); ++d) {
        if (d % l != b.k || q->dim(d) == 0) continue;
        b.degrees.push_back(d);
        b.offsets.push_back(off);
        off += q->dim(d);
    }
    b.offsets.push_back(off);
    b.dim = off;
    b.quotient = std::move(q);
    return b;
}

}  // namespace springer
