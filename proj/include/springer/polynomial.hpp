#pragma once

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "springer/cyclotomic.hpp"
#include "springer/errors.hpp"
#include "springer/group_algebra.hpp"
#include "springer/permutation.hpp"
#include "springer/rational.hpp"
#include "springer/tableau.hpp"

namespace springer {

/// Exponent vector, one entry per variable.
using Exp = std::vector<int>;

inline int total_degree(const Exp& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded reverse lexicographic order with x_1 > x_2 > ... > x_m:
/// higher total degree wins; at equal degree a is larger iff the last
/// nonzero entry of a - b is negative.
struct GrevlexLess {
    bool operator()(const Exp& a, const Exp& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        for (std::size_t i = a.size(); i-- > 0;) {
            int d = a[i] - b[i];
            if (d != 0) return d < 0 ? false : true;
        }
        return false;
    }
};

/// Multivariate polynomial over C (Rational or Cyclotomic) in a fixed
/// number of variables. Terms are grevlex-sorted; no zero coefficients.
template <class C>
struct Poly {
    int nvars = 0;
    std::map<Exp, C, GrevlexLess> terms;

    Poly() = default;
    explicit Poly(int n) : nvars(n) {}

    static Poly constant(int nvars, const C& c) {
        Poly p(nvars);
        p.add_term(Exp(nvars, 0), c);
        return p;
    }
    static Poly variable(int nvars, int i) {
        Poly p(nvars);
        Exp e(nvars, 0);
        e[i] = 1;
        p.add_term(e, C(1));
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const Exp& e, const C& c) {
        if (springer::is_zero(c)) return;
        auto [it, inserted] = terms.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (springer::is_zero(it->second)) terms.erase(it);
        }
    }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (const auto& [e, c] : o.terms) r.add_term(e, c);
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r = *this;
        for (const auto& [e, c] : o.terms) r.add_term(e, -c);
        return r;
    }
    Poly& operator+=(const Poly& o) {
        for (const auto& [e, c] : o.terms) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [e, c] : o.terms) add_term(e, -c);
        return *this;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& [e, c] : r.terms) c = -c;
        return r;
    }
    Poly operator*(const Poly& o) const {
        Poly r(nvars);
        for (const auto& [e1, c1] : terms)
            for (const auto& [e2, c2] : o.terms) {
                Exp e = e1;
                for (int i = 0; i < nvars; ++i) e[i] += e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    Poly scaled(const C& s) const {
        Poly r(nvars);
        for (const auto& [e, c] : terms) r.add_term(e, c * s);
        return r;
    }
    bool operator==(const Poly& o) const { return nvars == o.nvars && terms == o.terms; }

    int degree() const {  // of the leading term; -1 for zero
        return terms.empty() ? -1 : total_degree(terms.rbegin()->first);
    }
    bool is_homogeneous() const {
        if (terms.empty()) return true;
        int d = total_degree(terms.begin()->first);
        for (const auto& [e, c] : terms)
            if (total_degree(e) != d) return false;
        return true;
    }

    /// Left action determined by sigma . x_i = x_{sigma(i)}.
    Poly permuted(const Perm& sigma) const {
        check_internal(sigma.degree() == nvars, "permuted: degree mismatch");
        Poly r(nvars);
        for (const auto& [e, c] : terms) {
            Exp pe(nvars, 0);
            for (int i = 0; i < nvars; ++i) pe[sigma(i)] = e[i];
            r.add_term(pe, c);
        }
        return r;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        // Leading term first.
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            std::string cs = to_string(it->second);
            bool simple = cs.find(' ') == std::string::npos;
            if (simple && cs.size() > 1 && cs[0] == '-') {
                out << (first ? "-" : " - ");
                cs = cs.substr(1);
            } else if (!first) {
                out << " + ";
            }
            first = false;
            bool has_vars = total_degree(it->first) > 0;
            if (!has_vars) {
                out << (simple ? cs : "(" + cs + ")");
                continue;
            }
            if (!simple)
                out << "(" << cs << ")*";
            else if (cs != "1")
                out << cs << "*";
            bool firstv = true;
            for (int i = 0; i < nvars; ++i) {
                if (it->first[i] == 0) continue;
                if (!firstv) out << "*";
                firstv = false;
                out << "x" << (i + 1);
                if (it->first[i] > 1) out << "^" << it->first[i];
            }
        }
        return out.str();
    }
};

using RatPoly = Poly<Rational>;
using CycPoly = Poly<Cyclotomic>;

inline CycPoly to_cyclotomic(const RatPoly& p, unsigned order) {
    CycPoly q(p.nvars);
    for (const auto& [e, c] : p.terms)
        q.add_term(e, Cyclotomic::from_rational(order, c));
    return q;
}

/// Specht polynomial: product over columns of all pairwise differences
/// (x_{Q(i,c)} - x_{Q(j,c)}) with i above j.
RatPoly specht_polynomial(const Tableau& q);

/// The permutation w with w(t_lambda(cell)) = Q(cell) for every cell;
/// then w . Delta_{t_lambda} = Delta_Q exactly, no sign.
Perm relabel_permutation(const Tableau& q, const Partition& lambda);

/// Apply a group algebra element to a polynomial.
template <class C>
Poly<C> apply_group_algebra(const GroupAlgebraElement& a, const Poly<C>& p);

template <>
inline CycPoly apply_group_algebra<Cyclotomic>(const GroupAlgebraElement& a,
                                               const CycPoly& p) {
    CycPoly r(p.nvars);
    for (const auto& [perm, coeff] : a.terms) r += p.permuted(perm).scaled(coeff);
    return r;
}

template <>
inline RatPoly apply_group_algebra<Rational>(const GroupAlgebraElement& a,
                                             const RatPoly& p) {
    RatPoly r(p.nvars);
    for (const auto& [perm, coeff] : a.terms) {
        check_internal(coeff.is_rational(),
                       "apply_group_algebra: rational path needs rational coefficients");
        r += p.permuted(perm).scaled(coeff.rational_value());
    }
    return r;
}

/// Coefficient vectors of a family of polynomials in their joint monomial
/// support (grevlex order), for linear independence tests.
template <class C>
std::vector<std::vector<C>> coefficient_vectors(const std::vector<Poly<C>>& ps) {
    std::map<Exp, int, GrevlexLess> index;
    for (const auto& p : ps)
        for (const auto& [e, c] : p.terms) index.emplace(e, 0);
    int n = 0;
    for (auto& [e, i] : index) i = n++;
    std::vector<std::vector<C>> out;
    for (const auto& p : ps) {
        std::vector<C> v(n, C{});
        for (const auto& [e, c] : p.terms) v[index[e]] = c;
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace springer
