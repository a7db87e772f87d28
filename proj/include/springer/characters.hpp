#pragma once

#include <map>
#include <vector>

#include "springer/cyclotomic.hpp"
#include "springer/partition.hpp"
#include "springer/permutation.hpp"

namespace springer {

/// A class function on S_m, one exact value per cycle type.
struct ClassFunction {
    int m = 0;
    std::map<Partition, Cyclotomic> values;

    bool operator==(const ClassFunction&) const = default;
};

/// Size of the conjugacy class with the given cycle type.
Int class_size(const Partition& cycle_type);

/// A canonical representative: consecutive cycles (1..p1)(p1+1..p1+p2)...
Perm class_representative(const Partition& cycle_type);

/// Irreducible character of S_m: chi_lambda at the given cycle type, by the
/// Murnaghan-Nakayama rim-hook recursion (beta-set form). Memoized.
Int mn_character(const Partition& lambda, const Partition& cycle_type);

/// Inner product of two class functions given as maps cycle type -> value
/// (values may be rational-valued cyclotomics); result must be exact.
Cyclotomic class_inner_product(int m, const std::map<Partition, Cyclotomic>& a,
                               const std::map<Partition, Cyclotomic>& b);

}  // namespace springer
