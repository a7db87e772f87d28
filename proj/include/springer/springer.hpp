#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "springer/groebner.hpp"
#include "springer/linalg.hpp"
#include "springer/partition.hpp"
#include "springer/permutation.hpp"
#include "springer/polynomial.hpp"

namespace springer {

/// Generators of the Tanisaki ideal of mu: with mu' the conjugate padded to
/// length m and d_k = sum of its last k entries, every elementary symmetric
/// e_r(x_S) over |S| = k with k - d_k < r <= k.
std::vector<RatPoly> tanisaki_generators(const Partition& mu);

/// The graded quotient Q[x_1..x_m] / Tanisaki ideal: reduced Groebner basis
/// (grevlex, x_1 > ... > x_m), standard monomial bases per degree, and exact
/// S_m action matrices. Degree guard m <= 6 unless allow_large.
class GradedQuotient {
  public:
    GradedQuotient(Partition mu, bool allow_large = false);

    /// Shared, cached by mu. Guard applies on first construction.
    static std::shared_ptr<const GradedQuotient> of(const Partition& mu,
                                                    bool allow_large = false);

    const Partition& mu() const { return mu_; }
    int m() const { return m_; }
    const std::vector<RatPoly>& groebner() const { return gb_; }
    int top_degree() const { return static_cast<int>(monomials_.size()) - 1; }
    const std::vector<Exp>& monomials(int degree) const { return monomials_[degree]; }
    int dim(int degree) const {
        return degree >= 0 && degree <= top_degree()
                   ? static_cast<int>(monomials_[degree].size())
                   : 0;
    }
    std::map<int, int> graded_dims() const;
    int total_dim() const;

    RatPoly normal_form(const RatPoly& p) const {
        return springer::normal_form(p, gb_);
    }

    /// Coordinates of the degree-d component of the normal form of p.
    std::vector<Rational> coordinates(const RatPoly& p, int degree) const;

    /// Matrix of v -> normal_form(sigma . v) on the degree-d basis.
    const Mat<Rational>& adjacent_action(int gen, int degree) const;
    Mat<Rational> perm_action(const Perm& sigma, int degree) const;

  private:
    Partition mu_;
    int m_;
    std::vector<RatPoly> gb_;
    std::vector<std::vector<Exp>> monomials_;            // per degree
    std::vector<std::map<Exp, int, GrevlexLess>> index_;  // per degree

    mutable std::mutex cache_mtx_;
    // adjacent_cache_[gen][degree]
    mutable std::vector<std::vector<std::unique_ptr<Mat<Rational>>>> adjacent_cache_;
};

/// Basis data of R_mu(k;l): the degrees congruent to k mod l that carry
/// nonzero graded pieces, concatenated.
struct SubmoduleBasis {
    std::shared_ptr<const GradedQuotient> quotient;
    int k = 0, l = 1;
    std::vector<int> degrees;
    std::vector<int> offsets;  // offsets[i] = start of degrees[i]; back() = dim
    int dim = 0;

    const Partition& mu() const { return quotient->mu(); }
    int m() const { return quotient->m(); }

    /// Module coordinates of a polynomial supported on the selected degrees
    /// (throws internal_check otherwise).
    std::vector<Rational> coordinates(const RatPoly& p) const;
};

SubmoduleBasis submodule_basis(std::shared_ptr<const GradedQuotient> q, int k, int l);

}  // namespace springer
