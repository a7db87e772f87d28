#include "springer/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "springer/errors.hpp"
#include "springer/rep_engine.hpp"

namespace springer {

namespace {

using Clock = std::chrono::steady_clock;

struct Tally {
    int checks = 0;
    int failures = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            if (first_failure.empty()) first_failure = what;
        }
    }
    std::string summary() const {
        std::ostringstream out;
        out << checks << " checks";
        if (failures) out << ", " << failures << " FAILED (first: " << first_failure << ")";
        return out.str();
    }
};

CriterionResult finish(const std::string& name, const Tally& tally,
                       Clock::time_point start) {
    CriterionResult r;
    r.name = name;
    r.pass = tally.failures == 0 && tally.checks > 0;
    r.detail = tally.summary();
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

// All (mu, l) with l >= 1 an admissible cyclic order for mu, |mu| = m.
std::vector<std::pair<Partition, int>> presentations_of(int m) {
    std::vector<std::pair<Partition, int>> out;
    for (const auto& mu : partitions_of(m))
        for (int l : mu.admissible_l()) out.emplace_back(mu, l);
    return out;
}

// 1. Graded dimensions of the S_3 coinvariant algebra and its three
//    cyclic submodules.
CriterionResult coinvariant_hilbert() {
    auto start = Clock::now();
    Tally t;
    auto q = GradedQuotient::of(Partition({1, 1, 1}));
    t.expect(q->graded_dims() == std::map<int, int>{{0, 1}, {1, 2}, {2, 2}, {3, 1}},
             "hilbert of (1,1,1)");
    for (int k = 0; k < 3; ++k)
        t.expect(submodule_basis(q, k, 3).dim == 2,
                 "dim R(k;3) at k=" + std::to_string(k));
    return finish("coinvariant hilbert function", t, start);
}

// 2. The displayed coefficients of z Delta: exact cyclotomic equality at one
//    of the two complementary labels, mirrored at the other.
CriterionResult example_coefficients() {
    auto start = Clock::now();
    Tally t;
    Partition mu{1, 1, 1};
    auto da = to_cyclotomic(
        specht_polynomial(Tableau(Partition({2, 1}), {{1, 2}, {3}})), 3);
    auto db = to_cyclotomic(
        specht_polynomial(Tableau(Partition({2, 1}), {{1, 3}, {2}})), 3);
    auto w = Cyclotomic::zeta_power(3, 1);
    auto third = Cyclotomic(Rational(1, 3));
    auto two_plus_w = Cyclotomic(Rational(2)) + w;
    auto one_plus_2w = Cyclotomic(Rational(1)) + Cyclotomic(Rational(2)) * w;

    auto displayed = (da.scaled(two_plus_w) - db.scaled(one_plus_2w)).scaled(third);
    auto mirrored = (db.scaled(two_plus_w) - da.scaled(one_plus_2w)).scaled(third);

    bool found = false;
    for (int khat : {1, 2}) {
        int other = 3 - khat;
        bool direct =
            apply_group_algebra(z_element(mu, khat, 3), da) == displayed;
        bool mirror =
            apply_group_algebra(z_element(mu, other, 3), db) == mirrored;
        if (direct && mirror) found = true;
    }
    t.expect(found, "no labeling in {1,2} reproduces the displayed coefficients");
    return finish("example coefficients", t, start);
}

// 3. z(0;3) fixes the row and column Specht polynomials exactly.
CriterionResult z_fixed_points() {
    auto start = Clock::now();
    Tally t;
    Partition mu{1, 1, 1};
    auto z0 = z_element(mu, 0, 3);
    auto row = to_cyclotomic(specht_polynomial(Tableau(Partition({3}), {{1, 2, 3}})), 3);
    auto col = to_cyclotomic(
        specht_polynomial(Tableau(Partition({1, 1, 1}), {{1}, {2}, {3}})), 3);
    t.expect(apply_group_algebra(z0, row) == row, "z Delta_row");
    t.expect(apply_group_algebra(z0, col) == col, "z Delta_col");
    return finish("z fixed points", t, start);
}

// 4. dim R_mu = m!/prod mu_i! and the coincidence of dimensions.
CriterionResult dimension_law(bool allow_large) {
    auto start = Clock::now();
    Tally t;
    int max_m = allow_large ? 6 : 5;
    for (int m = 1; m <= max_m; ++m)
        for (const auto& mu : partitions_of(m)) {
            auto q = GradedQuotient::of(mu, allow_large);
            Int expected = factorial(m);
            for (int p : mu.parts) expected /= factorial(p);
            t.expect(Int(q->total_dim()) == expected, "total dim of " + mu.str());
            for (int l : mu.admissible_l()) {
                int d0 = submodule_basis(q, 0, l).dim;
                int sum = 0;
                for (int k = 0; k < l; ++k) {
                    int dk = submodule_basis(q, k, l).dim;
                    sum += dk;
                    t.expect(dk == d0, "coincidence for " + mu.str() + " l=" +
                                           std::to_string(l) + " k=" + std::to_string(k));
                }
                t.expect(sum == q->total_dim(),
                         "submodules partition " + mu.str() + " l=" + std::to_string(l));
            }
        }
    return finish("dimension law", t, start);
}

// 5. Induced characters equal submodule characters, both sides computed
//    independently (Frobenius sum vs quotient-action traces).
CriterionResult character_equality() {
    auto start = Clock::now();
    Tally t;
    for (int m = 1; m <= 5; ++m)
        for (const auto& [mu, l] : presentations_of(m)) {
            auto rep = verify_presentation(mu, l);
            t.expect(rep.characters_match,
                     "characters of " + mu.str() + " l=" + std::to_string(l) +
                         (rep.mismatches.empty() ? "" : ": " + rep.mismatches.front()));
            t.expect(rep.dims_constant, "dims of " + mu.str());
        }
    return finish("character equality", t, start);
}

// 6. generates(f) iff is_generic(f), randomized plus the exhaustive
//    classical-Schur cases.
template <class F>
void equivalence_sweep(const Partition& mu, int k, int l, Tally& t) {
    auto ctx = SpringerContext<F>::build(mu, k, l);
    std::ostringstream tag;
    tag << mu.str() << " k=" << k << " l=" << l;
    std::seed_seq seq{mu.sum(), k, l};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> pos(0, ctx.dim() - 1);
    std::uniform_int_distribution<long> zexp(0, std::max(0, l - 1));

    auto random_scalar = [&]() {
        return FieldOps<F>::zeta_power(ctx.order, zexp(rng)) *
               Rational(coeff(rng));
    };
    std::vector<std::vector<F>> cases;
    for (int i = 0; i < 20; ++i) {  // dense
        std::vector<F> f(ctx.dim());
        for (auto& x : f) x = random_scalar();
        cases.push_back(std::move(f));
    }
    for (int i = 0; i < 55; ++i) {  // sparse
        std::vector<F> f(ctx.dim(), F{});
        for (int s = 0; s < std::min(5, ctx.dim()); ++s) f[pos(rng)] = random_scalar();
        cases.push_back(std::move(f));
    }
    {   // structured: zero, unit vectors, seeds, aligned and transported pairs
        cases.emplace_back(ctx.dim(), F{});
        for (int j = 0; j < ctx.dim() && cases.size() < 85; ++j) {
            std::vector<F> f(ctx.dim(), F{});
            f[j] = F(1);
            cases.push_back(std::move(f));
        }
        for (const auto& comp : ctx.decomp->components()) {
            for (const auto& seed : comp.seeds) cases.push_back(seed);
            if (comp.d >= 2) {
                std::vector<F> aligned = comp.seeds[0];
                for (int r = 0; r < ctx.dim(); ++r) aligned[r] += comp.seeds[1][r];
                cases.push_back(std::move(aligned));  // proportional rows
                const SpechtData& sd = SpechtData::of(comp.lambda);
                auto moved = ctx.cache->apply_perm(sd.wq.back(), comp.seeds[1]);
                for (int r = 0; r < ctx.dim(); ++r) moved[r] += comp.seeds[0][r];
                cases.push_back(std::move(moved));
            }
        }
    }
    while (cases.size() < 100) {  // pad with more sparse draws
        std::vector<F> f(ctx.dim(), F{});
        for (int s = 0; s < std::min(4, ctx.dim()); ++s) f[pos(rng)] = random_scalar();
        cases.push_back(std::move(f));
    }

    for (const auto& f : cases) {
        auto orbit = ctx.cache->template orbit<F>(f);
        bool gen = generates_from_orbit(ctx.dim(), orbit);
        bool is_gen = ctx.decomp->is_generic_from_orbit(orbit).generic;
        t.expect(gen == is_gen, "equivalence mismatch in " + tag.str());
    }
}

CriterionResult extended_schur_equivalence() {
    auto start = Clock::now();
    Tally t;
    for (int m = 1; m <= 5; ++m)
        for (const auto& [mu, l] : presentations_of(m))
            for (int k = 0; k < l; ++k) {
                if (rational_field(l))
                    equivalence_sweep<Rational>(mu, k, l, t);
                else
                    equivalence_sweep<Cyclotomic>(mu, k, l, t);
            }

    // Exhaustive direct sums of the 2-dimensional irreducible: generation
    // iff the component tuple is linearly independent.
    auto block = ExactModule::from_submodule(
        submodule_basis(GradedQuotient::of(Partition({1, 1, 1})), 1, 3));
    for (int copies : {2, 3}) {
        auto cache = std::make_shared<ActionCache>(ExactModule::direct_sum(block, copies));
        Decomposition<Rational> decomp(cache, 1);
        std::vector<int> levels = copies == 2 ? std::vector<int>{-1, 0, 1}
                                              : std::vector<int>{0, 1};
        std::vector<Rational> f(2 * copies);
        std::function<void(int)> sweep = [&](int idx) {
            if (idx == 2 * copies) {
                Mat<Rational> stack(copies, 2);
                for (int i = 0; i < copies; ++i)
                    for (int j = 0; j < 2; ++j) stack.at(i, j) = f[2 * i + j];
                bool independent = rank(stack) == copies;
                t.expect(generates(*cache, f) == independent,
                         "S+S generates vs independence");
                t.expect(decomp.is_generic(f).generic == independent,
                         "S+S genericity vs independence");
                return;
            }
            for (int v : levels) {
                f[idx] = Rational(v);
                sweep(idx + 1);
            }
        };
        sweep(0);
    }
    return finish("extended schur equivalence", t, start);
}

// 7. The procedure always succeeds at desk scale and its morphisms verify,
//    including the group-ring model.
template <class F>
void procedure_case(const Partition& mu, int k, int l, Tally& t) {
    std::ostringstream tag;
    tag << mu.str() << " k=" << k << " l=" << l;
    auto ctx = SpringerContext<F>::build(mu, k, l);
    auto out = construct_generic(ctx);
    t.expect(out.ok, "procedure failed for " + tag.str() + ": " + out.failure);
    if (!out.ok) return;
    t.expect(out.genericity.generic, "z f not generic for " + tag.str());
    t.expect(out.zf_generates, "z f does not generate for " + tag.str());
    auto mc = verify_morphism(ctx, out.f);
    t.expect(mc.well_defined && mc.injective && mc.surjective && mc.equivariant,
             "morphism checks failed for " + tag.str());
    t.expect(mc.rank == mc.index && mc.rank == ctx.dim(),
             "rank != index for " + tag.str());
}

CriterionResult procedure_soundness() {
    auto start = Clock::now();
    Tally t;
    for (int m = 1; m <= 5; ++m)
        for (const auto& [mu, l] : presentations_of(m)) {
            for (int k = 0; k < l; ++k) {
                if (rational_field(l))
                    procedure_case<Rational>(mu, k, l, t);
                else
                    procedure_case<Cyclotomic>(mu, k, l, t);
            }
            // the group-ring model depends only on the symmetrizer
            for (int k = 0; k < l; ++k) {
                auto gr = verify_group_ring_model(mu, k, l);
                std::ostringstream tag;
                tag << mu.str() << " k=" << k << " l=" << l;
                t.expect(gr.well_defined && gr.injective && gr.surjective &&
                             gr.equivariant,
                         "group-ring model failed for " + tag.str());
                Int index = factorial(m);
                index /= Int(static_cast<long>(young_subgroup(mu).size()) * l);
                t.expect(Int(gr.rank) == index, "group-ring rank for " + tag.str());
            }
        }
    return finish("procedure soundness", t, start);
}

// 8. The two-row theorem: sign law and SSYT uniqueness for n <= 4,
//    genericity of z f^{(i)} in the quotient for n <= 3.
CriterionResult two_row_theorem() {
    auto start = Clock::now();
    Tally t;
    for (int n = 1; n <= 4; ++n) {
        bool quotient = n <= 3;
        for (int i = 0; i < 2; ++i) {
            auto out = two_rows_generic(n, i, quotient);
            std::string tag = " n=" + std::to_string(n) + " i=" + std::to_string(i);
            t.expect(out.sign_law, "sign law" + tag);
            t.expect(out.unique_ssyt, "unique SSYT" + tag);
            t.expect(out.quotient_checked == quotient, "quotient scope" + tag);
            if (quotient) {
                t.expect(out.zf_generic, "z f generic" + tag);
                t.expect(out.zf_generates, "z f generates" + tag);
            }
        }
    }
    return finish("two-row theorem", t, start);
}

// 9. Symmetrizer algebra: idempotence and the fixed-subspace
//    characterization, degree by degree on R_mu.
CriterionResult symmetrizer_algebra() {
    auto start = Clock::now();
    Tally t;
    for (int m = 1; m <= 5; ++m)
        for (const auto& [mu, l] : presentations_of(m)) {
            auto q = GradedQuotient::of(mu);
            Perm a = a_mu(mu, l);
            // generators of H: adjacent transpositions inside the Young
            // blocks, plus the cyclic element
            std::vector<std::pair<Perm, Cyclotomic>> gens;
            int startv = 0;
            for (int part : mu.parts) {
                for (int i = startv; i + 1 < startv + part; ++i)
                    gens.emplace_back(Perm::transposition(m, i, i + 1),
                                      Cyclotomic::one(static_cast<unsigned>(l)));
                startv += part;
            }
            for (int k = 0; k < l; ++k) {
                std::ostringstream tag;
                tag << mu.str() << " k=" << k << " l=" << l;
                auto z = z_element(mu, k, l);
                t.expect(z * z == z, "z^2 = z for " + tag.str());

                auto gens_k = gens;
                gens_k.emplace_back(
                    a, Cyclotomic::zeta_power(static_cast<unsigned>(l), k));
                for (int d = 0; d <= q->top_degree(); ++d) {
                    int dim = q->dim(d);
                    // Z on the degree-d piece
                    Mat<Cyclotomic> zmat(dim, dim);
                    for (const auto& [p, c] : z.terms) {
                        Mat<Rational> pm = q->perm_action(p, d);
                        for (int i = 0; i < dim; ++i)
                            for (int j = 0; j < dim; ++j)
                                zmat.at(i, j).add_scaled(pm.at(i, j), c);
                    }
                    // fixed space: kernel of the stacked (M(g) - zeta(g) I)
                    Mat<Cyclotomic> stacked(static_cast<int>(gens_k.size()) * dim, dim);
                    int row = 0;
                    for (const auto& [g, zeta] : gens_k) {
                        Mat<Rational> gm = q->perm_action(g, d);
                        for (int i = 0; i < dim; ++i, ++row)
                            for (int j = 0; j < dim; ++j) {
                                stacked.at(row, j) =
                                    Cyclotomic::from_rational(
                                        static_cast<unsigned>(l), gm.at(i, j));
                                if (i == j) stacked.at(row, j) -= zeta;
                            }
                    }
                    auto kernel = kernel_basis(stacked);
                    t.expect(rank(zmat) == static_cast<int>(kernel.size()),
                             "rank of z vs fixed space, " + tag.str() + " deg " +
                                 std::to_string(d));
                    IncrementalSpan<Cyclotomic> span;
                    for (auto& u : kernel) {
                        // z acts as the identity on the fixed space
                        std::vector<Cyclotomic> zu = zmat.apply(u);
                        t.expect(zu == u, "z fixes the fixed space, " + tag.str());
                        span.add(u);
                    }
                    int fixed_rank = span.rank();
                    for (int j = 0; j < dim; ++j) {
                        std::vector<Cyclotomic> col(dim);
                        for (int i = 0; i < dim; ++i) col[i] = zmat.at(i, j);
                        span.add(std::move(col));
                    }
                    t.expect(span.rank() == fixed_rank,
                             "image of z inside the fixed space, " + tag.str());
                }
            }
        }
    return finish("symmetrizer algebra", t, start);
}

}  // namespace

std::vector<CriterionResult> run_acceptance(bool allow_large) {
    std::vector<CriterionResult> results;
    results.push_back(coinvariant_hilbert());
    results.push_back(example_coefficients());
    results.push_back(z_fixed_points());
    results.push_back(dimension_law(allow_large));
    results.push_back(character_equality());
    results.push_back(extended_schur_equivalence());
    results.push_back(procedure_soundness());
    results.push_back(two_row_theorem());
    results.push_back(symmetrizer_algebra());
    return results;
}

}  // namespace springer
