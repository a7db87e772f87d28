#include "springer/group_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "springer/errors.hpp"

namespace springer {

GroupAlgebraElement GroupAlgebraElement::unit(int m, unsigned order) {
    GroupAlgebraElement e{m, order, {}};
    e.terms.emplace(Perm(m), Cyclotomic::one(order));
    return e;
}

void GroupAlgebraElement::add_term(const Perm& p, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(p, c.promoted(order));
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
    check_internal(m == o.m, "group algebra degree mismatch");
    GroupAlgebraElement r = zero(m, std::max(order, o.order));
    for (const auto& [p, c] : terms) r.add_term(p, c);
    for (const auto& [p, c] : o.terms) r.add_term(p, c);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
    check_internal(m == o.m, "group algebra degree mismatch");
    GroupAlgebraElement r = zero(m, std::max(order, o.order));
    for (const auto& [p, c] : terms) r.add_term(p, c);
    for (const auto& [p, c] : o.terms) r.add_term(p, -c);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
    check_internal(m == o.m, "group algebra degree mismatch");
    GroupAlgebraElement r = zero(m, std::max(order, o.order));
    for (const auto& [p, c] : terms)
        for (const auto& [q, d] : o.terms) r.add_term(p * q, c * d);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Cyclotomic& c) const {
    GroupAlgebraElement r = zero(m, order);
    for (const auto& [p, coeff] : terms) r.add_term(p, coeff * c);
    return r;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& o) const {
    if (m != o.m || terms.size() != o.terms.size()) return false;
    for (auto it = terms.begin(), jt = o.terms.begin(); it != terms.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

std::string GroupAlgebraElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, c] : terms) {
        if (!first) out << " + ";
        first = false;
        std::string cs = c.str();
        if (cs.find(' ') != std::string::npos)
            out << "(" << cs << ")";
        else
            out << cs;
        out << "*" << p.cycle_str();
    }
    return out.str();
}

bool SubgroupEnum::contains(const Perm& p) const {
    return std::find(elements.begin(), elements.end(), p) != elements.end();
}

bool in_young_subgroup(const Perm& p, const Partition& mu) {
    int start = 0;
    for (int part : mu.parts) {
        for (int i = start; i < start + part; ++i)
            if (p(i) < start || p(i) >= start + part) return false;
        start += part;
    }
    return true;
}

SubgroupEnum young_subgroup(const Partition& mu) {
    int m = mu.sum();
    if (m > 8) throw guard_exceeded("young_subgroup: m <= 8 required");
    std::vector<Perm> elems{Perm(m)};
    int start = 0;
    for (int part : mu.parts) {
        std::vector<int> block(part);
        for (int i = 0; i < part; ++i) block[i] = start + i;
        std::vector<Perm> next;
        std::vector<int> assign = block;
        do {
            Perm b(m);
            std::vector<int> img = b.images();
            for (int i = 0; i < part; ++i) img[block[i]] = assign[i];
            Perm blockperm = Perm::from_images(img);
            for (const auto& e : elems) next.push_back(blockperm * e);
        } while (std::next_permutation(assign.begin(), assign.end()));
        elems = std::move(next);
        start += part;
    }
    std::sort(elems.begin(), elems.end());
    return SubgroupEnum{"young" + mu.str(), std::move(elems)};
}

Perm a_cycle(const Tableau& t, int l) {
    const Partition& mu = t.shape;
    if (l < 1) throw invalid_input("a_cycle: l must be >= 1");
    if (!mu.is_l_partition(l))
        throw invalid_input("a_cycle: " + mu.str() + " is not a " +
                            std::to_string(l) + "-partition");
    if (!t.is_numbering()) throw invalid_input("a_cycle: T must be a numbering");
    int m = mu.sum();
    Perm p(m);
    std::vector<int> img = p.images();
    for (int top = 0; top < mu.length(); top += l) {
        for (int c = 0; c < mu.parts[top]; ++c) {
            // (T_{top+1,c}, ..., T_{top+l,c}) as a cycle, 0-based entries.
            for (int r = 0; r < l; ++r) {
                int from = t.at(top + r, c) - 1;
                int to = t.at(top + (r + 1) % l, c) - 1;
                img[from] = to;
            }
        }
    }
    return Perm::from_images(img);
}

Perm a_mu(const Partition& mu, int l) { return a_cycle(row_reading_numbering(mu), l); }

SubgroupEnum semidirect_subgroup(const Partition& mu, int l) {
    int m = mu.sum();
    SubgroupEnum s = young_subgroup(mu);
    Perm a = a_mu(mu, l);
    // a normalizes S_mu.
    for (const auto& g : s.elements)
        check_internal(in_young_subgroup(a * g * a.inverse(), mu),
                       "semidirect_subgroup: a does not normalize S_mu");
    std::set<Perm> seen;
    std::vector<Perm> elems;
    Perm aj(m);
    for (int j = 0; j < l; ++j) {
        for (const auto& g : s.elements) {
            Perm h = g * aj;
            check_internal(seen.insert(h).second,
                           "semidirect_subgroup: factorization sigma*a^j not unique");
            elems.push_back(h);
        }
        aj = aj * a;
    }
    check_internal(aj == Perm(m), "semidirect_subgroup: a^l != identity");
    check_internal(static_cast<int>(elems.size()) == s.size() * l,
                   "semidirect_subgroup: |H| != |S_mu| * l");
    for (const auto& g : elems)
        for (const auto& h : elems)
            check_internal(seen.count(g * h) == 1, "semidirect_subgroup: not closed");
    std::sort(elems.begin(), elems.end());
    std::ostringstream label;
    label << "semidirect" << mu.str() << ":" << l;
    return SubgroupEnum{label.str(), std::move(elems)};
}

Cyclotomic zeta_value(const Partition& mu, int k, int l, const Perm& g) {
    Perm a = a_mu(mu, l);
    Perm aj(mu.sum());
    for (int j = 0; j < l; ++j) {
        if (in_young_subgroup(g * aj.inverse(), mu))
            return Cyclotomic::zeta_power(static_cast<unsigned>(l),
                                          static_cast<long>(k) * j);
        aj = aj * a;
    }
    throw invalid_input("zeta_value: element is not in H_mu(l)");
}

GroupAlgebraElement symmetrizer(const SubgroupEnum& h, unsigned order,
                                const std::function<Cyclotomic(const Perm&)>& zeta) {
    check_internal(!h.elements.empty(), "symmetrizer: empty subgroup");
    int m = h.elements.front().degree();
    GroupAlgebraElement e = GroupAlgebraElement::zero(m, order);
    Rational inv_h = Rational(1) / Rational(static_cast<long>(h.size()));
    for (const auto& s : h.elements)
        e.add_term(s, zeta(s.inverse()) * inv_h);
    return e;
}

GroupAlgebraElement young_average(const Partition& mu) {
    SubgroupEnum s = young_subgroup(mu);
    return symmetrizer(s, 1, [](const Perm&) { return Cyclotomic(Rational(1)); });
}

GroupAlgebraElement c_element(const Partition& mu, int k, int l) {
    int m = mu.sum();
    Perm a = a_mu(mu, l);
    GroupAlgebraElement c = GroupAlgebraElement::zero(m, static_cast<unsigned>(l));
    Rational inv_l = Rational(1) / Rational(l);
    Perm aj(m);
    for (int j = 0; j < l; ++j) {
        c.add_term(aj, Cyclotomic::zeta_power(static_cast<unsigned>(l),
                                              -static_cast<long>(k) * j) *
                           inv_l);
        aj = aj * a;
    }
    return c;
}

GroupAlgebraElement z_element(const Partition& mu, int k, int l) {
    return c_element(mu, k, l) * young_average(mu);
}

std::vector<Perm> coset_reps(const SubgroupEnum& h, int m) {
    std::set<Perm> covered;
    std::vector<Perm> reps;
    for (const auto& g : symmetric_group(m)) {
        if (covered.count(g)) continue;
        reps.push_back(g);
        for (const auto& s : h.elements) covered.insert(g * s);
    }
    return reps;
}

ClassFunction induced_character(const Partition& mu, int k, int l) {
    int m = mu.sum();
    SubgroupEnum h = semidirect_subgroup(mu, l);
    std::set<Perm> in_h(h.elements.begin(), h.elements.end());
    auto group = symmetric_group(m);
    ClassFunction chi;
    chi.m = m;
    Rational inv_h = Rational(1) / Rational(h.size());
    for (const auto& ct : partitions_of(m)) {
        Perm g = class_representative(ct);
        Cyclotomic total = Cyclotomic::zero(static_cast<unsigned>(l));
        for (const auto& x : group) {
            Perm conj = x * g * x.inverse();
            if (in_h.count(conj)) total += zeta_value(mu, k, l, conj);
        }
        chi.values[ct] = total * inv_h;
    }
    return chi;
}

}  // namespace springer
