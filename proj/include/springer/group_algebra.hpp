#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "springer/characters.hpp"
#include "springer/cyclotomic.hpp"
#include "springer/partition.hpp"
#include "springer/permutation.hpp"
#include "springer/tableau.hpp"

namespace springer {

/// Finite formal sum of permutations with Q(zeta_l) coefficients.
/// Canonical: zero coefficients are never stored.
struct GroupAlgebraElement {
    int m = 0;
    unsigned order = 1;
    std::map<Perm, Cyclotomic> terms;

    static GroupAlgebraElement zero(int m, unsigned order) { return {m, order, {}}; }
    static GroupAlgebraElement unit(int m, unsigned order);

    void add_term(const Perm& p, const Cyclotomic& c);
    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
    /// Convolution product.
    GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
    GroupAlgebraElement scaled(const Cyclotomic& c) const;
    bool operator==(const GroupAlgebraElement& o) const;

    /// Term list "coeff * cycles", e.g. "1/3*() + 1/3*(1 2 3)".
    std::string str() const;
};

/// A subgroup of S_m held by explicit enumeration.
struct SubgroupEnum {
    std::string label;
    std::vector<Perm> elements;

    int size() const { return static_cast<int>(elements.size()); }
    bool contains(const Perm& p) const;
};

/// Membership in the Young subgroup (block check, no enumeration).
bool in_young_subgroup(const Perm& p, const Partition& mu);

/// The Young subgroup S_mu; guard m <= 8.
SubgroupEnum young_subgroup(const Partition& mu);

/// a_{T,l}: product of m/l disjoint l-cycles grouping each block of l
/// consecutive rows of T columnwise. Requires mu to be an l-partition.
Perm a_cycle(const Tableau& t, int l);

/// a_{mu,l} = a_{t_mu,l}.
Perm a_mu(const Partition& mu, int l);

/// H_mu(l) = S_mu x| <a_{mu,l}>; verifies closure, normalization and
/// unique factorization sigma * a^j at construction.
SubgroupEnum semidirect_subgroup(const Partition& mu, int l);

/// Z_mu(k;l)(g) = zeta_l^{k j} for g = sigma * a^j; throws if g is not in H.
Cyclotomic zeta_value(const Partition& mu, int k, int l, const Perm& g);

/// e_zeta = (1/|H|) sum_{s in H} zeta(s^{-1}) s.
GroupAlgebraElement symmetrizer(const SubgroupEnum& h, unsigned order,
                                const std::function<Cyclotomic(const Perm&)>& zeta);

/// e(S_mu): averaging over the Young subgroup.
GroupAlgebraElement young_average(const Partition& mu);

/// c_mu(k;l) = (1/l) sum_j zeta_l^{-kj} a^j.
GroupAlgebraElement c_element(const Partition& mu, int k, int l);

/// z_mu(k;l) = c_mu(k;l) * e(S_mu) = e_{Z_mu(k;l)}.
GroupAlgebraElement z_element(const Partition& mu, int k, int l);

/// Exactly [S_m : H] coset representatives, each minimal in its coset in
/// the lex order of S_m.
std::vector<Perm> coset_reps(const SubgroupEnum& h, int m);

/// Frobenius induction of Z_mu(k;l) from H_mu(l) to S_m, one value per
/// cycle type: (1/|H|) sum over x in S_m with x g x^{-1} in H.
ClassFunction induced_character(const Partition& mu, int k, int l);

}  // namespace springer
