#pragma once

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "springer/characters.hpp"
#include "springer/group_algebra.hpp"
#include "springer/linalg.hpp"
#include "springer/polynomial.hpp"
#include "springer/springer.hpp"

namespace springer {

// ---------------------------------------------------------------------------
// Field dispatch. Module-level linear algebra runs over Q when phi(l) = 1
// (l = 1, 2) and over Q(zeta_l) otherwise; everything below is generic in F.

template <class F>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static Rational from_rational(const Rational& r, unsigned) { return r; }
    static Rational zeta_power(unsigned order, long e) {
        Cyclotomic z = Cyclotomic::zeta_power(order, e);
        return z.rational_value();  // throws via internal check unless phi(order)=1
    }
    static Cyclotomic to_cyclotomic(const Rational& v, unsigned) {
        return Cyclotomic(v);
    }
    static std::string str(const Rational& v) { return to_string(v); }
};

template <>
struct FieldOps<Cyclotomic> {
    static Cyclotomic from_rational(const Rational& r, unsigned order) {
        return Cyclotomic::from_rational(order, r);
    }
    static Cyclotomic zeta_power(unsigned order, long e) {
        return Cyclotomic::zeta_power(order, e);
    }
    static Cyclotomic to_cyclotomic(const Cyclotomic& v, unsigned) { return v; }
    static std::string str(const Cyclotomic& v) { return v.str(); }
};

/// True field for the given cyclotomic order: Q iff phi(order) == 1.
inline bool rational_field(int l) { return euler_phi(static_cast<unsigned>(l)) == 1; }

// ---------------------------------------------------------------------------
// An exact S_m-module given by block-diagonal rational matrices for the
// adjacent transpositions. Blocks are the graded pieces for Springer
// submodules, or plain direct summands for hand-built test modules.

struct ExactModule {
    int m = 0;
    std::vector<int> block_dims;
    std::vector<std::vector<Mat<Rational>>> adjacent;  // [generator][block]

    int dim() const {
        int d = 0;
        for (int b : block_dims) d += b;
        return d;
    }

    static ExactModule from_submodule(const SubmoduleBasis& basis);
    /// n copies of every block of a.
    static ExactModule direct_sum(const ExactModule& a, int copies);
};

// ---------------------------------------------------------------------------
// Breadth-first enumeration of S_m over the adjacent transpositions, with
// parent links, so that any per-element data can be filled in one generator
// application per element. Cached per m.

struct CayleyBfs {
    std::vector<Perm> order;  // order[0] = identity
    std::vector<int> parent;
    std::vector<int> gen;
    std::vector<int> class_index;  // into partitions_of(m)

    static const CayleyBfs& of(int m);
};

// ---------------------------------------------------------------------------
// Rational action cache: matrices of arbitrary permutations assembled from
// the adjacent generators, memoized; class traces for multiplicities.

class ActionCache {
  public:
    explicit ActionCache(ExactModule mod) : mod_(std::move(mod)) {}

    const ExactModule& mod() const { return mod_; }
    int dim() const { return mod_.dim(); }
    int m() const { return mod_.m; }

    const std::vector<Mat<Rational>>& perm_matrix(const Perm& p);
    Rational trace_of(const Perm& p);

    template <class F>
    std::vector<F> apply_adjacent(int g, const std::vector<F>& v) const {
        std::vector<F> out;
        out.reserve(v.size());
        int off = 0;
        for (std::size_t b = 0; b < mod_.block_dims.size(); ++b) {
            const auto& mat = mod_.adjacent[g][b];
            for (int i = 0; i < mat.rows; ++i) {
                F acc{};
                if constexpr (std::is_same_v<F, Cyclotomic>) {
                    for (int j = 0; j < mat.cols; ++j)
                        acc.add_scaled(mat.at(i, j), v[off + j]);
                } else {
                    for (int j = 0; j < mat.cols; ++j) {
                        if (is_zero(mat.at(i, j)) || is_zero(v[off + j])) continue;
                        acc += v[off + j] * mat.at(i, j);
                    }
                }
                out.push_back(std::move(acc));
            }
            off += mod_.block_dims[b];
        }
        return out;
    }

    template <class F>
    std::vector<F> apply_perm(const Perm& p, const std::vector<F>& v) const {
        std::vector<F> cur = v;
        auto word = p.adjacent_word();
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            cur = apply_adjacent(*it, cur);
        return cur;
    }

    template <class F>
    std::vector<F> apply_group_algebra(const GroupAlgebraElement& a,
                                       const std::vector<F>& v, unsigned order) const {
        std::vector<F> acc(v.size(), F{});
        for (const auto& [p, coeff] : a.terms) {
            std::vector<F> pv = apply_perm(p, v);
            F c = field_coeff<F>(coeff, order);
            for (std::size_t i = 0; i < acc.size(); ++i) {
                if (is_zero(pv[i])) continue;
                acc[i] += pv[i] * c;
            }
        }
        return acc;
    }

    /// All of {sigma . v}, indexed like CayleyBfs::of(m).order.
    template <class F>
    std::vector<std::vector<F>> orbit(const std::vector<F>& v) const {
        const CayleyBfs& bfs = CayleyBfs::of(mod_.m);
        std::vector<std::vector<F>> vs(bfs.order.size());
        vs[0] = v;
        for (std::size_t i = 1; i < bfs.order.size(); ++i)
            vs[i] = apply_adjacent(bfs.gen[i], vs[bfs.parent[i]]);
        return vs;
    }

  private:
    template <class F>
    static F field_coeff(const Cyclotomic& c, unsigned order);

    ExactModule mod_;
    std::map<Perm, std::vector<Mat<Rational>>> memo_;
};

template <>
inline Rational ActionCache::field_coeff<Rational>(const Cyclotomic& c, unsigned) {
    return c.rational_value();
}
template <>
inline Cyclotomic ActionCache::field_coeff<Cyclotomic>(const Cyclotomic& c,
                                                       unsigned order) {
    return c.promoted(order);
}

// ---------------------------------------------------------------------------
// Per-shape Specht data: the standard tableaux, relabeling permutations,
// row/column stabilizers of t_lambda, and the verified proportionality
// y_t . Delta_t = c Delta_t that makes the seed construction equivariant.

struct SpechtData {
    Partition lambda;
    std::vector<Tableau> syts;
    std::vector<Perm> wq;        // relabel permutation per standard tableau
    std::vector<Perm> row_stab;  // of t_lambda
    std::vector<Perm> col_stab;
    std::vector<int> col_sign;
    Rational y_eigenvalue;  // y_t Delta_t = c Delta_t, c != 0

    int specht_dim() const { return static_cast<int>(syts.size()); }

    static const SpechtData& of(const Partition& lambda);
};

// ---------------------------------------------------------------------------
// Isotypic decomposition of a module: multiplicities by characters, one seed
// vector per copy from the Young symmetrizer image, and solvers that express
// isotypic projections in the transported Specht bases.

struct GenericityComponent {
    Partition lambda;
    int multiplicity = 0;
    int specht_dim = 0;
    int rank = 0;
    bool full_rank = true;
};

struct GenericityReport {
    bool generic = true;
    std::vector<GenericityComponent> components;
};

template <class F>
class Decomposition {
  public:
    using Vec = std::vector<F>;

    Decomposition(std::shared_ptr<ActionCache> cache, unsigned order);

    const std::map<Partition, int>& multiplicities() const { return mult_; }
    unsigned order() const { return order_; }
    ActionCache& cache() const { return *cache_; }

    struct Component {
        Partition lambda;
        int d = 0;  // multiplicity
        int f = 0;  // dim of the Specht module
        std::vector<Vec> seeds;
        Mat<F> isotypic_basis;  // columns indexed (copy i, tableau q) = i*f + q
        std::unique_ptr<ColumnSolver<F>> solver;
    };
    const std::vector<Component>& components() const { return comps_; }

    /// One vector per conjugacy class: sum of sigma . f over the class.
    /// Every character projection is then a tiny linear combination.
    std::vector<Vec> class_sums(const std::vector<Vec>& orbit) const;

    /// Projection of f to the lambda-isotypic part, via orbit vectors.
    Vec project(const std::vector<Vec>& orbit, const Partition& lambda) const;
    Vec project_from_sums(const std::vector<Vec>& sums, const Partition& lambda) const;

    /// Coefficient matrix of f on component comp: row i = the component of f
    /// in copy i transported to the reference Specht copy.
    Mat<F> component_matrix(const Vec& f, const Component& comp) const;

    GenericityReport is_generic(const Vec& f) const;
    GenericityReport is_generic_from_orbit(const std::vector<Vec>& orbit) const;

  private:
    std::shared_ptr<ActionCache> cache_;
    unsigned order_;
    std::map<Partition, int> mult_;
    std::vector<Component> comps_;
};

/// The span of {sigma . f} reaches the whole module? Incremental rank with
/// early exit; independent of the decomposition machinery by construction.
template <class F>
bool generates(ActionCache& cache, const std::vector<F>& f);

/// Same, over an already computed orbit.
template <class F>
bool generates_from_orbit(int dim, const std::vector<std::vector<F>>& orbit);

// ---------------------------------------------------------------------------
// The Springer-side context: R_mu(k;l) with its polynomial realization.

struct ProcedurePairs {
    Partition lambda;
    std::vector<Tableau> chosen;  // Q_1..Q_d, paired with seeds in order
    int candidates = 0;
    int survivors_young = 0;  // after the e(S_mu) step
    int survivors_z = 0;      // after the z step
};

template <class F>
struct SpringerContext {
    Partition mu;
    int k = 0, l = 1;
    unsigned order = 1;
    SubmoduleBasis basis;
    std::shared_ptr<ActionCache> cache;
    std::unique_ptr<Decomposition<F>> decomp;
    GroupAlgebraElement z;

    using Vec = std::vector<F>;

    static SpringerContext build(const Partition& mu, int k, int l,
                                 bool allow_large = false);

    int dim() const { return basis.dim; }

    /// Module coordinates of a polynomial lying in the selected degrees.
    Vec coords(const Poly<F>& p) const;
    /// The polynomial with those coordinates (standard monomial combination).
    Poly<F> poly(const Vec& v) const;

    Vec apply_z(const Vec& v) const {
        return cache->apply_group_algebra(z, v, order);
    }
};

template <class F>
struct ProcedureOutcome {
    bool ok = false;
    std::string failure;  // set when the procedure could not pair enough tableaux
    std::vector<ProcedurePairs> pairs;
    std::vector<F> f, zf;
    GenericityReport genericity;  // of z f
    bool zf_generates = false;    // the independent oracle
};

/// The generic-element procedure: per irreducible, candidates are the
/// standardizations of the semi-standard tableaux of weight mu; a maximal
/// subset with independent e(S_mu) Delta_Q, then with independent z Delta_Q,
/// is paired with the seed copies in order.
template <class F>
ProcedureOutcome<F> construct_generic(const SpringerContext<F>& ctx);

// ---------------------------------------------------------------------------
// Morphism verification.

struct MorphismChecks {
    std::string source, target;
    bool well_defined = false;
    bool injective = false;
    bool surjective = false;
    bool equivariant = false;
    int rank = 0;
    int index = 0;  // [S_m : H]
    std::vector<std::vector<std::string>> matrix;  // map on coset representatives
    std::optional<GenericityReport> diagnosis;     // attached when not bijective
    bool all() const { return well_defined && injective && surjective && equivariant; }
};

/// tau H |-> tau . (z f) from the induced module into R_mu(k;l).
template <class F>
MorphismChecks verify_morphism(const SpringerContext<F>& ctx, const std::vector<F>& f);

/// The group-ring model: tau H |-> tau z in K[S_m] z (no f involved).
MorphismChecks verify_group_ring_model(const Partition& mu, int k, int l);

// ---------------------------------------------------------------------------
// Characters of the submodules and the presentation check.

ClassFunction character_of_submodule(const Partition& mu, int k, int l,
                                     bool allow_large = false);

struct PresentationReport {
    Partition mu;
    int l = 1;
    bool dims_constant = false;
    std::vector<int> dims;  // per k
    bool characters_match = true;
    std::vector<std::string> mismatches;  // "k=1 class (2,1): lhs != rhs"
};

PresentationReport verify_presentation(const Partition& mu, int l,
                                       bool allow_large = false);

// ---------------------------------------------------------------------------
// Two-row closed form.

struct TwoRowsOutcome {
    int n = 0;
    int i = 0;
    bool sign_law = true;          // a . Delta_{t'} = (-1)^k Delta_{t'} for all k
    bool unique_ssyt = true;       // one SSYT of weight (n,n) per shape
    RatPoly f;                     // e(S_{(n,n)}) sum Delta_{t'}
    bool quotient_checked = false; // genericity ran (m = 2n within the guard)
    bool zf_generic = false;
    bool zf_generates = false;
};

TwoRowsOutcome two_rows_generic(int n, int i, bool with_quotient_checks = true);

}  // namespace springer
