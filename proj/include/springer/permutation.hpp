#pragma once

#include <compare>
#include <string>
#include <vector>

#include "springer/partition.hpp"

namespace springer {

/// A permutation of {0..m-1} in one-line notation. Composition is function
/// composition: (s*t)(i) = s(t(i)). Ordering is lex on the image vector,
/// which fixes the total order used for coset representatives.
class Perm {
  public:
    Perm() = default;
    explicit Perm(int m) : img_(m) {
        for (int i = 0; i < m; ++i) img_[i] = i;
    }
    static Perm from_images(std::vector<int> images);
    static Perm transposition(int m, int i, int j);
    /// Cycle (c_0 c_1 ... c_{k-1}): c_0 -> c_1 -> ... -> c_0, 0-based.
    static Perm from_cycle(int m, const std::vector<int>& cycle);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    Perm operator*(const Perm& o) const;
    Perm inverse() const;
    bool is_identity() const;
    int sign() const;
    Partition cycle_type() const;

    /// Word in adjacent transpositions s_i = (i, i+1) with
    /// *this = s_{w[0]} * s_{w[1]} * ... * s_{w.back()}.
    std::vector<int> adjacent_word() const;

    /// Cycle notation, 1-based: "(1 3)(2 4)"; identity prints "()".
    std::string cycle_str() const;

    /// Rank in lex order of all one-line notations (Lehmer code).
    long lex_rank() const;

    auto operator<=>(const Perm&) const = default;

  private:
    std::vector<int> img_;
};

/// All of S_m in lex order on one-line notation (the fixed total order).
std::vector<Perm> symmetric_group(int m);

}  // namespace springer
