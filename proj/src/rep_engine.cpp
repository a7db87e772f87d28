#include "springer/rep_engine.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

#include "springer/errors.hpp"

namespace springer {

// ---------------------------------------------------------------------------
// ExactModule

ExactModule ExactModule::from_submodule(const SubmoduleBasis& basis) {
    ExactModule mod;
    mod.m = basis.m();
    mod.block_dims.reserve(basis.degrees.size());
    for (int d : basis.degrees) mod.block_dims.push_back(basis.quotient->dim(d));
    mod.adjacent.resize(std::max(0, mod.m - 1));
    for (int g = 0; g + 1 < mod.m; ++g)
        for (int d : basis.degrees)
            mod.adjacent[g].push_back(basis.quotient->adjacent_action(g, d));
    return mod;
}

ExactModule ExactModule::direct_sum(const ExactModule& a, int copies) {
    ExactModule mod;
    mod.m = a.m;
    mod.adjacent.resize(a.adjacent.size());
    for (int c = 0; c < copies; ++c) {
        for (int b : a.block_dims) mod.block_dims.push_back(b);
        for (std::size_t g = 0; g < a.adjacent.size(); ++g)
            for (const auto& mat : a.adjacent[g]) mod.adjacent[g].push_back(mat);
    }
    return mod;
}

// ---------------------------------------------------------------------------
// CayleyBfs

const CayleyBfs& CayleyBfs::of(int m) {
    static std::map<int, CayleyBfs> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    CayleyBfs bfs;
    long size = 1;
    for (int i = 2; i <= m; ++i) size *= i;
    std::vector<int> index_of(size, -1);
    bfs.order.push_back(Perm(m));
    bfs.parent.push_back(-1);
    bfs.gen.push_back(-1);
    index_of[bfs.order[0].lex_rank()] = 0;
    for (std::size_t head = 0; head < bfs.order.size(); ++head) {
        for (int g = 0; g + 1 < m; ++g) {
            Perm next = Perm::transposition(m, g, g + 1) * bfs.order[head];
            long r = next.lex_rank();
            if (index_of[r] >= 0) continue;
            index_of[r] = static_cast<int>(bfs.order.size());
            bfs.order.push_back(next);
            bfs.parent.push_back(static_cast<int>(head));
            bfs.gen.push_back(g);
        }
    }
    check_internal(static_cast<long>(bfs.order.size()) == size, "CayleyBfs incomplete");

    auto parts = partitions_of(m);
    std::map<Partition, int> part_index;
    for (std::size_t i = 0; i < parts.size(); ++i)
        part_index[parts[i]] = static_cast<int>(i);
    bfs.class_index.reserve(bfs.order.size());
    for (const auto& p : bfs.order) bfs.class_index.push_back(part_index[p.cycle_type()]);

    return cache.emplace(m, std::move(bfs)).first->second;
}

// ---------------------------------------------------------------------------
// ActionCache

const std::vector<Mat<Rational>>& ActionCache::perm_matrix(const Perm& p) {
    auto it = memo_.find(p);
    if (it != memo_.end()) return it->second;
    std::vector<Mat<Rational>> mats;
    if (p.is_identity()) {
        for (int b : mod_.block_dims) mats.push_back(Mat<Rational>::identity(b));
    } else {
        auto word = p.adjacent_word();
        for (std::size_t b = 0; b < mod_.block_dims.size(); ++b) {
            Mat<Rational> acc = mod_.adjacent[word[0]][b];
            for (std::size_t t = 1; t < word.size(); ++t)
                acc = acc * mod_.adjacent[word[t]][b];
            mats.push_back(std::move(acc));
        }
    }
    return memo_.emplace(p, std::move(mats)).first->second;
}

Rational ActionCache::trace_of(const Perm& p) {
    Rational t(0);
    for (const auto& mat : perm_matrix(p)) t += mat.trace();
    return t;
}

// ---------------------------------------------------------------------------
// SpechtData

namespace {

// All permutations fixing each listed block of points setwise.
std::vector<Perm> block_permutations(int m, const std::vector<std::vector<int>>& blocks) {
    std::vector<Perm> elems{Perm(m)};
    for (const auto& block : blocks) {
        std::vector<int> assign = block;
        std::sort(assign.begin(), assign.end());
        std::vector<Perm> next;
        do {
            std::vector<int> img(m);
            for (int i = 0; i < m; ++i) img[i] = i;
            for (std::size_t i = 0; i < block.size(); ++i) img[block[i]] = assign[i];
            Perm blockperm = Perm::from_images(img);
            for (const auto& e : elems) next.push_back(blockperm * e);
        } while (std::next_permutation(assign.begin(), assign.end()));
        elems = std::move(next);
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

}  // namespace

const SpechtData& SpechtData::of(const Partition& lambda) {
    static std::map<Partition, std::unique_ptr<SpechtData>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(lambda);
    if (it != cache.end()) return *it->second;

    auto sd = std::make_unique<SpechtData>();
    sd->lambda = lambda;
    sd->syts = standard_tableaux(lambda);
    for (const auto& q : sd->syts) sd->wq.push_back(relabel_permutation(q, lambda));

    int m = lambda.sum();
    Tableau t = row_reading_numbering(lambda);
    std::vector<std::vector<int>> row_blocks, col_blocks;
    for (int r = 0; r < lambda.length(); ++r) {
        std::vector<int> block;
        for (int c = 0; c < lambda.parts[r]; ++c) block.push_back(t.at(r, c) - 1);
        row_blocks.push_back(std::move(block));
    }
    Partition conj = lambda.conjugate();
    for (int c = 0; c < (lambda.empty() ? 0 : lambda.parts[0]); ++c) {
        std::vector<int> block;
        for (int r = 0; r < conj.parts[c]; ++r) block.push_back(t.at(r, c) - 1);
        col_blocks.push_back(std::move(block));
    }
    sd->row_stab = block_permutations(m, row_blocks);
    sd->col_stab = block_permutations(m, col_blocks);
    for (const auto& p : sd->col_stab) sd->col_sign.push_back(p.sign());

    // y_t Delta_t must be a nonzero multiple of Delta_t; this is what makes
    // Delta_{t_lambda} |-> v extend to a module map for v in the image of y_t.
    GroupAlgebraElement a = GroupAlgebraElement::zero(m, 1);
    for (const auto& r : sd->row_stab) a.add_term(r, Cyclotomic(Rational(1)));
    GroupAlgebraElement b = GroupAlgebraElement::zero(m, 1);
    for (std::size_t i = 0; i < sd->col_stab.size(); ++i)
        b.add_term(sd->col_stab[i], Cyclotomic(Rational(sd->col_sign[i])));
    RatPoly delta = specht_polynomial(t);
    RatPoly image = apply_group_algebra(b * a, delta);
    check_internal(!image.is_zero(), "young symmetrizer annihilated Delta_t");
    const auto& lead = *delta.terms.rbegin();
    auto lt = image.terms.find(lead.first);
    check_internal(lt != image.terms.end(), "y Delta_t not proportional to Delta_t");
    Rational ratio = lt->second / lead.second;
    check_internal(!ratio.is_zero() && image == delta.scaled(ratio),
                   "y Delta_t not proportional to Delta_t");
    sd->y_eigenvalue = ratio;

    return *cache.emplace(lambda, std::move(sd)).first->second;
}

// ---------------------------------------------------------------------------
// Decomposition

template <class F>
Decomposition<F>::Decomposition(std::shared_ptr<ActionCache> cache, unsigned order)
    : cache_(std::move(cache)), order_(order) {
    int m = cache_->m();
    int dim = cache_->dim();
    auto parts = partitions_of(m);
    std::vector<Rational> traces;
    traces.reserve(parts.size());
    for (const auto& ct : parts)
        traces.push_back(cache_->trace_of(class_representative(ct)));

    Rational inv_fact = Rational(1) / Rational(factorial(m));
    Int dim_check = 0;
    for (const auto& lambda : parts) {
        Rational acc(0);
        for (std::size_t i = 0; i < parts.size(); ++i)
            acc += Rational(class_size(parts[i])) *
                   Rational(mn_character(lambda, parts[i])) * traces[i];
        acc *= inv_fact;
        check_internal(denominator(acc) == 1 && acc >= 0,
                       "multiplicity is not a non-negative integer");
        int d = acc.convert_to<int>();
        mult_[lambda] = d;
        dim_check += Int(d) * lambda.syt_count();
    }
    check_internal(dim_check == dim, "multiplicities do not account for the dimension");

    const auto& blocks = cache_->mod().block_dims;
    for (const auto& lambda : parts) {
        int d = mult_[lambda];
        if (d == 0) continue;
        const SpechtData& sd = SpechtData::of(lambda);
        Component comp;
        comp.lambda = lambda;
        comp.d = d;
        comp.f = sd.specht_dim();

        // Young symmetrizer, block by block: Y = (signed column sum)(row sum).
        std::vector<Mat<Rational>> y;
        for (std::size_t bidx = 0; bidx < blocks.size(); ++bidx) {
            Mat<Rational> rowsum(blocks[bidx], blocks[bidx]);
            Mat<Rational> colsum(blocks[bidx], blocks[bidx]);
            for (const auto& r : sd.row_stab) rowsum += cache_->perm_matrix(r)[bidx];
            for (std::size_t i = 0; i < sd.col_stab.size(); ++i)
                colsum += cache_->perm_matrix(sd.col_stab[i])[bidx].scaled(
                    Rational(sd.col_sign[i]));
            y.push_back(colsum * rowsum);
        }
        // Greedy independent columns of Y are the seeds v_1..v_d.
        IncrementalSpan<F> span;
        int off = 0;
        for (std::size_t bidx = 0; bidx < blocks.size(); ++bidx) {
            for (int j = 0; j < blocks[bidx]; ++j) {
                std::vector<F> col(dim, F{});
                bool nonzero = false;
                for (int i = 0; i < blocks[bidx]; ++i) {
                    const Rational& v = y[bidx].at(i, j);
                    if (v.is_zero()) continue;
                    col[off + i] = FieldOps<F>::from_rational(v, order_);
                    nonzero = true;
                }
                if (nonzero && span.add(col)) comp.seeds.push_back(std::move(col));
            }
            off += blocks[bidx];
        }
        check_internal(static_cast<int>(comp.seeds.size()) == d,
                       "young symmetrizer image has the wrong dimension for " +
                           lambda.str());

        comp.isotypic_basis = Mat<F>(dim, d * comp.f);
        for (int i = 0; i < d; ++i)
            for (int q = 0; q < comp.f; ++q) {
                std::vector<F> v = cache_->apply_perm(sd.wq[q], comp.seeds[i]);
                for (int r = 0; r < dim; ++r)
                    comp.isotypic_basis.at(r, i * comp.f + q) = v[r];
            }
        comp.solver = std::make_unique<ColumnSolver<F>>(comp.isotypic_basis);
        check_internal(comp.solver->full_column_rank(),
                       "transported Specht copies are not independent for " +
                           lambda.str());
        comps_.push_back(std::move(comp));
    }
}

template <class F>
std::vector<std::vector<F>> Decomposition<F>::class_sums(
    const std::vector<Vec>& orbit) const {
    int m = cache_->m();
    const CayleyBfs& bfs = CayleyBfs::of(m);
    std::vector<Vec> sums(partitions_of(m).size(), Vec(cache_->dim(), F{}));
    for (std::size_t t = 0; t < orbit.size(); ++t) {
        Vec& acc = sums[bfs.class_index[t]];
        for (std::size_t r = 0; r < acc.size(); ++r) {
            if (is_zero(orbit[t][r])) continue;
            acc[r] += orbit[t][r];
        }
    }
    return sums;
}

template <class F>
std::vector<F> Decomposition<F>::project(const std::vector<Vec>& orbit,
                                         const Partition& lambda) const {
    return project_from_sums(class_sums(orbit), lambda);
}

template <class F>
std::vector<F> Decomposition<F>::project_from_sums(const std::vector<Vec>& sums,
                                                   const Partition& lambda) const {
    int m = cache_->m();
    auto parts = partitions_of(m);
    Rational scale =
        Rational(SpechtData::of(lambda).specht_dim()) / Rational(factorial(m));
    Vec acc(cache_->dim(), F{});
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Rational c = Rational(mn_character(lambda, parts[i])) * scale;
        if (c.is_zero()) continue;
        if constexpr (std::is_same_v<F, Cyclotomic>) {
            for (std::size_t r = 0; r < acc.size(); ++r)
                acc[r].add_scaled(c, sums[i][r]);
        } else {
            for (std::size_t r = 0; r < acc.size(); ++r) {
                if (is_zero(sums[i][r])) continue;
                acc[r] += sums[i][r] * c;
            }
        }
    }
    return acc;
}

template <class F>
Mat<F> Decomposition<F>::component_matrix(const Vec& f, const Component& comp) const {
    Vec proj = project(cache_->orbit(f), comp.lambda);
    auto coords = comp.solver->solve(proj);
    check_internal(coords.has_value(),
                   "isotypic projection escaped the transported Specht span");
    Mat<F> mat(comp.d, comp.f);
    for (int i = 0; i < comp.d; ++i)
        for (int q = 0; q < comp.f; ++q) mat.at(i, q) = (*coords)[i * comp.f + q];
    return mat;
}

template <class F>
GenericityReport Decomposition<F>::is_generic(const Vec& f) const {
    return is_generic_from_orbit(cache_->orbit(f));
}

template <class F>
GenericityReport Decomposition<F>::is_generic_from_orbit(
    const std::vector<Vec>& orbit) const {
    GenericityReport report;
    auto sums = class_sums(orbit);
    for (const auto& comp : comps_) {
        Vec proj = project_from_sums(sums, comp.lambda);
        auto coords = comp.solver->solve(proj);
        check_internal(coords.has_value(),
                       "isotypic projection escaped the transported Specht span");
        Mat<F> mat(comp.d, comp.f);
        for (int i = 0; i < comp.d; ++i)
            for (int q = 0; q < comp.f; ++q) mat.at(i, q) = (*coords)[i * comp.f + q];
        GenericityComponent line;
        line.lambda = comp.lambda;
        line.multiplicity = comp.d;
        line.specht_dim = comp.f;
        line.rank = rank(mat);
        line.full_rank = (line.rank == comp.d);
        report.generic = report.generic && line.full_rank;
        report.components.push_back(std::move(line));
    }
    return report;
}

template <class F>
bool generates(ActionCache& cache, const std::vector<F>& f) {
    const CayleyBfs& bfs = CayleyBfs::of(cache.m());
    int dim = cache.dim();
    std::vector<std::vector<F>> vs(bfs.order.size());
    IncrementalSpan<F> span;
    vs[0] = f;
    span.add(f);
    for (std::size_t i = 1; i < vs.size() && span.rank() < dim; ++i) {
        vs[i] = cache.apply_adjacent(bfs.gen[i], vs[bfs.parent[i]]);
        span.add(vs[i]);
    }
    return span.rank() == dim;
}

template <class F>
bool generates_from_orbit(int dim, const std::vector<std::vector<F>>& orbit) {
    IncrementalSpan<F> span;
    for (const auto& v : orbit) {
        span.add(v);
        if (span.rank() == dim) return true;
    }
    return span.rank() == dim;
}

// ---------------------------------------------------------------------------
// SpringerContext

template <class F>
SpringerContext<F> SpringerContext<F>::build(const Partition& mu, int k, int l,
                                             bool allow_large) {
    if (l < 1) throw invalid_input("l must be >= 1");
    if (!mu.is_l_partition(l))
        throw invalid_input(mu.str() + " is not a " + std::to_string(l) + "-partition");
    check_internal(rational_field(l) == (std::is_same_v<F, Rational>),
                   "field dispatch mismatch for l = " + std::to_string(l));
    SpringerContext ctx;
    ctx.mu = mu;
    ctx.l = l;
    ctx.k = ((k % l) + l) % l;
    ctx.order = static_cast<unsigned>(l);
    ctx.basis = submodule_basis(GradedQuotient::of(mu, allow_large), ctx.k, l);
    ctx.cache = std::make_shared<ActionCache>(ExactModule::from_submodule(ctx.basis));
    ctx.decomp = std::make_unique<Decomposition<F>>(ctx.cache, ctx.order);
    ctx.z = z_element(mu, ctx.k, l);
    return ctx;
}

template <class F>
std::vector<F> SpringerContext<F>::coords(const Poly<F>& p) const {
    Poly<F> nf = normal_form(p, basis.quotient->groebner());
    Vec out(basis.dim, F{});
    std::map<int, int> deg_pos;
    for (std::size_t i = 0; i < basis.degrees.size(); ++i)
        deg_pos[basis.degrees[i]] = basis.offsets[i];
    for (const auto& [e, c] : nf.terms) {
        int d = total_degree(e);
        auto it = deg_pos.find(d);
        check_internal(it != deg_pos.end(),
                       "polynomial has a component outside the selected degrees");
        const auto& mons = basis.quotient->monomials(d);
        auto pos = std::lower_bound(mons.begin(), mons.end(), e, GrevlexLess{});
        check_internal(pos != mons.end() && *pos == e, "monomial not standard");
        out[it->second + static_cast<int>(pos - mons.begin())] = c;
    }
    return out;
}

template <class F>
Poly<F> SpringerContext<F>::poly(const Vec& v) const {
    Poly<F> p(basis.m());
    for (std::size_t i = 0; i < basis.degrees.size(); ++i) {
        const auto& mons = basis.quotient->monomials(basis.degrees[i]);
        for (std::size_t j = 0; j < mons.size(); ++j) {
            const F& c = v[basis.offsets[i] + j];
            if (!is_zero(c)) p.add_term(mons[j], c);
        }
    }
    return p;
}

// ---------------------------------------------------------------------------
// The generic-element procedure.

template <class F>
ProcedureOutcome<F> construct_generic(const SpringerContext<F>& ctx) {
    ProcedureOutcome<F> out;
    int m = ctx.basis.m();
    GroupAlgebraElement e_young = young_average(ctx.mu);
    out.f.assign(ctx.dim(), F{});

    for (const auto& comp : ctx.decomp->components()) {
        ProcedurePairs pairs;
        pairs.lambda = comp.lambda;

        // Candidates: standardizations of the semi-standard tableaux of
        // weight mu, in enumeration order.
        std::vector<Tableau> candidates;
        for (const auto& t : semistandard_tableaux(comp.lambda, ctx.mu))
            candidates.push_back(standardize(t, ctx.mu));
        pairs.candidates = static_cast<int>(candidates.size());

        // Keep a maximal subset with independent e(S_mu) Delta_Q.
        std::vector<RatPoly> young_images;
        for (const auto& q : candidates)
            young_images.push_back(apply_group_algebra(e_young, specht_polynomial(q)));
        std::vector<int> kept1 =
            greedy_independent_subset(coefficient_vectors(young_images));
        pairs.survivors_young = static_cast<int>(kept1.size());

        // Then a maximal subset with independent z Delta_Q.
        std::vector<Poly<F>> z_images;
        for (int idx : kept1) {
            Poly<F> delta(m);
            for (const auto& [e, c] : specht_polynomial(candidates[idx]).terms)
                delta.add_term(e, FieldOps<F>::from_rational(c, ctx.order));
            z_images.push_back(apply_group_algebra(ctx.z, delta));
        }
        std::vector<int> kept2 =
            greedy_independent_subset(coefficient_vectors(z_images));
        pairs.survivors_z = static_cast<int>(kept2.size());

        if (static_cast<int>(kept2.size()) < comp.d) {
            std::ostringstream msg;
            msg << "component " << comp.lambda.str() << " needs " << comp.d
                << " independent tableaux, found " << kept2.size();
            out.failure = msg.str();
            out.pairs.push_back(std::move(pairs));
            return out;
        }
        for (int i = 0; i < comp.d; ++i) {
            const Tableau& q = candidates[kept1[kept2[i]]];
            pairs.chosen.push_back(q);
            Perm w = relabel_permutation(q, comp.lambda);
            std::vector<F> img = ctx.cache->apply_perm(w, comp.seeds[i]);
            for (int r = 0; r < ctx.dim(); ++r)
                if (!is_zero(img[r])) out.f[r] += img[r];
        }
        out.pairs.push_back(std::move(pairs));
    }

    out.zf = ctx.apply_z(out.f);
    out.genericity = ctx.decomp->is_generic(out.zf);
    out.zf_generates = generates(*ctx.cache, out.zf);
    check_internal(out.genericity.generic,
                   "procedure output failed the genericity test");
    out.ok = true;
    return out;
}

// ---------------------------------------------------------------------------
// Morphism verification.

namespace {

int find_coset(const std::vector<Perm>& reps, const std::set<Perm>& in_h,
               const Perm& s) {
    for (std::size_t t = 0; t < reps.size(); ++t)
        if (in_h.count(reps[t].inverse() * s)) return static_cast<int>(t);
    throw internal_check("coset decomposition failed");
}

}  // namespace

template <class F>
MorphismChecks verify_morphism(const SpringerContext<F>& ctx, const std::vector<F>& f) {
    MorphismChecks mc;
    std::ostringstream src, tgt;
    src << "induced" << ctx.mu.str() << ":k=" << ctx.k << ":l=" << ctx.l;
    tgt << "springer" << ctx.mu.str() << ":k=" << ctx.k << ":l=" << ctx.l;
    mc.source = src.str();
    mc.target = tgt.str();

    std::vector<F> zf = ctx.apply_z(f);
    std::vector<F> zzf = ctx.apply_z(zf);
    mc.well_defined = (zzf == zf);

    SubgroupEnum h = semidirect_subgroup(ctx.mu, ctx.l);
    std::vector<Perm> reps = coset_reps(h, ctx.basis.m());
    mc.index = static_cast<int>(reps.size());

    std::vector<std::vector<F>> cols;
    for (const auto& rep : reps) cols.push_back(ctx.cache->apply_perm(rep, zf));
    Mat<F> phi(ctx.dim(), mc.index);
    for (int j = 0; j < mc.index; ++j)
        for (int i = 0; i < ctx.dim(); ++i) phi.at(i, j) = cols[j][i];
    mc.rank = rank(phi);
    mc.injective = (mc.rank == mc.index);
    mc.surjective = (mc.rank == ctx.dim());

    mc.matrix.resize(phi.rows);
    for (int i = 0; i < phi.rows; ++i)
        for (int j = 0; j < phi.cols; ++j)
            mc.matrix[i].push_back(FieldOps<F>::str(phi.at(i, j)));

    // Equivariance spot checks: the map must intertwine the induced action
    // (coset permutation with the zeta cocycle) and the module action.
    std::set<Perm> in_h(h.elements.begin(), h.elements.end());
    std::mt19937_64 rng(0x5eed);
    auto group = symmetric_group(ctx.basis.m());
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    mc.equivariant = true;
    for (int trial = 0; trial < 5; ++trial) {
        Perm sigma = group[pick(rng)];
        for (int j = 0; j < mc.index; ++j) {
            Perm s = sigma * reps[j];
            int jprime = find_coset(reps, in_h, s);
            Perm hh = reps[jprime].inverse() * s;
            Cyclotomic zc = zeta_value(ctx.mu, ctx.k, ctx.l, hh);
            F zv = FieldOps<F>::from_rational(Rational(0), ctx.order);
            if constexpr (std::is_same_v<F, Rational>)
                zv = zc.rational_value();
            else
                zv = zc.promoted(ctx.order);
            std::vector<F> lhs = ctx.cache->apply_perm(sigma, cols[j]);
            std::vector<F> rhs = cols[jprime];
            for (auto& x : rhs) x *= zv;
            if (lhs != rhs) mc.equivariant = false;
        }
    }

    if (!(mc.injective && mc.surjective)) mc.diagnosis = ctx.decomp->is_generic(zf);
    return mc;
}

MorphismChecks verify_group_ring_model(const Partition& mu, int k, int l) {
    MorphismChecks mc;
    int m = mu.sum();
    unsigned order = static_cast<unsigned>(l);
    std::ostringstream src, tgt;
    src << "induced" << mu.str() << ":k=" << k << ":l=" << l;
    tgt << "groupring" << mu.str() << ":k=" << k << ":l=" << l;
    mc.source = src.str();
    mc.target = tgt.str();

    GroupAlgebraElement z = z_element(mu, k, l);
    mc.well_defined = (z * z == z);

    SubgroupEnum h = semidirect_subgroup(mu, l);
    std::vector<Perm> reps = coset_reps(h, m);
    mc.index = static_cast<int>(reps.size());

    auto group = symmetric_group(m);
    std::map<Perm, int> position;
    for (std::size_t i = 0; i < group.size(); ++i)
        position[group[i]] = static_cast<int>(i);

    auto vector_of = [&](const GroupAlgebraElement& a) {
        std::vector<Cyclotomic> v(group.size(), Cyclotomic::zero(order));
        for (const auto& [p, c] : a.terms) v[position[p]] = c.promoted(order);
        return v;
    };
    auto times_z = [&](const Perm& p) {
        GroupAlgebraElement t = GroupAlgebraElement::zero(m, order);
        t.add_term(p, Cyclotomic::one(order));
        return t * z;
    };

    std::vector<std::vector<Cyclotomic>> cols;
    for (const auto& rep : reps) cols.push_back(vector_of(times_z(rep)));
    Mat<Cyclotomic> phi(static_cast<int>(group.size()), mc.index);
    for (int j = 0; j < mc.index; ++j)
        for (std::size_t i = 0; i < group.size(); ++i)
            phi.at(static_cast<int>(i), j) = cols[j][i];
    mc.rank = rank(phi);
    mc.injective = (mc.rank == mc.index);

    // Surjectivity onto K[S_m] z: the full orbit {sigma z} spans no more
    // than the coset representatives already do.
    IncrementalSpan<Cyclotomic> span;
    for (const auto& c : cols) span.add(c);
    int rep_span = span.rank();
    for (const auto& sigma : group) span.add(vector_of(times_z(sigma)));
    mc.surjective = mc.injective && (span.rank() == rep_span);

    mc.matrix.resize(phi.rows);
    for (int i = 0; i < phi.rows; ++i)
        for (int j = 0; j < phi.cols; ++j)
            mc.matrix[i].push_back(phi.at(i, j).str());

    std::set<Perm> in_h(h.elements.begin(), h.elements.end());
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    mc.equivariant = true;
    for (int trial = 0; trial < 5; ++trial) {
        Perm sigma = group[pick(rng)];
        for (int j = 0; j < mc.index; ++j) {
            Perm s = sigma * reps[j];
            int jprime = find_coset(reps, in_h, s);
            Perm hh = reps[jprime].inverse() * s;
            GroupAlgebraElement rhs = times_z(reps[jprime]).scaled(
                zeta_value(mu, k, l, hh).promoted(order));
            if (!(times_z(s) == rhs)) mc.equivariant = false;
        }
    }
    return mc;
}

// ---------------------------------------------------------------------------
// Characters of submodules.

ClassFunction character_of_submodule(const Partition& mu, int k, int l,
                                     bool allow_large) {
    if (l < 1) throw invalid_input("l must be >= 1");
    auto basis = submodule_basis(GradedQuotient::of(mu, allow_large), k, l);
    ActionCache cache(ExactModule::from_submodule(basis));
    ClassFunction chi;
    chi.m = mu.sum();
    for (const auto& ct : partitions_of(mu.sum())) {
        Rational tr = cache.trace_of(class_representative(ct));
        chi.values[ct] = Cyclotomic::from_rational(static_cast<unsigned>(l), tr);
    }
    return chi;
}

PresentationReport verify_presentation(const Partition& mu, int l, bool allow_large) {
    if (!mu.is_l_partition(l))
        throw invalid_input(mu.str() + " is not a " + std::to_string(l) + "-partition");
    PresentationReport report;
    report.mu = mu;
    report.l = l;
    for (int k = 0; k < l; ++k) {
        auto basis = submodule_basis(GradedQuotient::of(mu, allow_large), k, l);
        report.dims.push_back(basis.dim);
        ClassFunction lhs = induced_character(mu, k, l);
        ClassFunction rhs = character_of_submodule(mu, k, l, allow_large);
        for (const auto& [ct, lv] : lhs.values) {
            const Cyclotomic& rv = rhs.values.at(ct);
            if (!(lv == rv)) {
                report.characters_match = false;
                std::ostringstream msg;
                msg << "k=" << k << " class " << ct.str() << ": induced " << lv.str()
                    << " != trace " << rv.str();
                report.mismatches.push_back(msg.str());
            }
        }
    }
    report.dims_constant = true;
    for (int d : report.dims) report.dims_constant = report.dims_constant && d == report.dims[0];
    return report;
}

// ---------------------------------------------------------------------------
// Two rows.

TwoRowsOutcome two_rows_generic(int n, int i, bool with_quotient_checks) {
    if (n < 1 || i < 0 || i > 1)
        throw invalid_input("two_rows: need n >= 1 and i in {0,1}");
    TwoRowsOutcome out;
    out.n = n;
    out.i = i;
    int m = 2 * n;
    Partition mu({n, n});
    Perm a = a_mu(mu, 2);

    RatPoly sum(m);
    for (int k = 0; k <= n; ++k) {
        RatPoly delta = specht_polynomial(two_row_tableau(n, k));
        RatPoly image = delta.permuted(a);
        bool sign_ok = (k % 2 == 0) ? (image == delta) : (image == -delta);
        out.sign_law = out.sign_law && sign_ok;
        std::vector<int> shape{2 * n - k};
        if (k > 0) shape.push_back(k);
        out.unique_ssyt =
            out.unique_ssyt && semistandard_tableaux(Partition(shape), mu).size() == 1;
        if (k % 2 == i) sum += delta;
    }
    out.f = apply_group_algebra(young_average(mu), sum);

    if (with_quotient_checks && m <= 6) {
        auto ctx = SpringerContext<Rational>::build(mu, i, 2);
        std::vector<Rational> coords = ctx.coords(out.f);
        std::vector<Rational> zf = ctx.apply_z(coords);
        out.zf_generic = ctx.decomp->is_generic(zf).generic;
        out.zf_generates = generates(*ctx.cache, zf);
        out.quotient_checked = true;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Explicit instantiations.

template class Decomposition<Rational>;
template class Decomposition<Cyclotomic>;
template bool generates<Rational>(ActionCache&, const std::vector<Rational>&);
template bool generates<Cyclotomic>(ActionCache&, const std::vector<Cyclotomic>&);
template bool generates_from_orbit<Rational>(int,
                                             const std::vector<std::vector<Rational>>&);
template bool generates_from_orbit<Cyclotomic>(
    int, const std::vector<std::vector<Cyclotomic>>&);
template struct SpringerContext<Rational>;
template struct SpringerContext<Cyclotomic>;
template ProcedureOutcome<Rational> construct_generic<Rational>(
    const SpringerContext<Rational>&);
template ProcedureOutcome<Cyclotomic> construct_generic<Cyclotomic>(
    const SpringerContext<Cyclotomic>&);
template MorphismChecks verify_morphism<Rational>(const SpringerContext<Rational>&,
                                                  const std::vector<Rational>&);
template MorphismChecks verify_morphism<Cyclotomic>(const SpringerContext<Cyclotomic>&,
                                                    const std::vector<Cyclotomic>&);

}  // namespace springer
