#include "springer/permutation.hpp"

#include <algorithm>
#include <sstream>

#include "springer/errors.hpp"

namespace springer {

Perm Perm::from_images(std::vector<int> images) {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 0 || v >= static_cast<int>(images.size()) || seen[v])
            throw invalid_input("permutation images are not a bijection");
        seen[v] = true;
    }
    Perm p;
    p.img_ = std::move(images);
    return p;
}

Perm Perm::transposition(int m, int i, int j) {
    Perm p(m);
    std::swap(p.img_[i], p.img_[j]);
    return p;
}

Perm Perm::from_cycle(int m, const std::vector<int>& cycle) {
    Perm p(m);
    for (std::size_t i = 0; i < cycle.size(); ++i)
        p.img_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    return from_images(p.img_);  // validates
}

Perm Perm::operator*(const Perm& o) const {
    check_internal(degree() == o.degree(), "permutation degree mismatch");
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = img_[o.img_[i]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<int>(i);
    return r;
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

int Perm::sign() const {
    int s = 1;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = static_cast<int>(i);
        while (!seen[j]) {
            seen[j] = true;
            j = img_[j];
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

Partition Perm::cycle_type() const {
    std::vector<int> lens;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = static_cast<int>(i);
        while (!seen[j]) {
            seen[j] = true;
            j = img_[j];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

std::vector<int> Perm::adjacent_word() const {
    // Peel adjacent swaps off the right until the identity remains:
    // cur -> cur * s_i removes one inversion, so
    // *this = s_{i_k} * ... * s_{i_1} with the i's pushed in discovery order.
    std::vector<int> word;
    std::vector<int> cur = img_;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i] > cur[i + 1]) {
                std::swap(cur[i], cur[i + 1]);
                word.push_back(static_cast<int>(i));
                changed = true;
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::string Perm::cycle_str() const {
    std::ostringstream out;
    std::vector<bool> seen(img_.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == static_cast<int>(i)) {
            seen[i] = true;
            continue;
        }
        out << "(";
        int j = static_cast<int>(i);
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out << " ";
            out << (j + 1);
            first = false;
            j = img_[j];
        }
        out << ")";
        any = true;
    }
    return any ? out.str() : "()";
}

long Perm::lex_rank() const {
    long r = 0;
    int n = degree();
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (int i = 0; i < n; ++i) {
        fact /= (n - i);
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (img_[j] < img_[i]) ++smaller;
        r += smaller * fact;
    }
    return r;
}

std::vector<Perm> symmetric_group(int m) {
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) img[i] = i;
    std::vector<Perm> out;
    do {
        out.push_back(Perm::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace springer
