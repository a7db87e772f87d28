#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "springer/errors.hpp"
#include "springer/rational.hpp"

namespace springer {

/// A partition of m: weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) throw invalid_input("partition parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1])
                throw invalid_input("partition parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

    int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }

    Partition conjugate() const {
        std::vector<int> c;
        if (parts.empty()) return Partition{};
        for (int i = 1; i <= parts[0]; ++i) {
            int cnt = 0;
            for (int p : parts)
                if (p >= i) ++cnt;
            c.push_back(cnt);
        }
        return Partition(std::move(c));
    }

    /// True iff every part-multiplicity is divisible by l.
    bool is_l_partition(int l) const {
        if (l < 1) throw invalid_input("l must be >= 1");
        std::size_t i = 0;
        while (i < parts.size()) {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) ++j;
            if ((j - i) % static_cast<std::size_t>(l) != 0) return false;
            i = j;
        }
        return true;
    }

    /// All l >= 1 for which this is an l-partition (divisors of the
    /// gcd of the part multiplicities).
    std::vector<int> admissible_l() const {
        int g = 0;
        std::size_t i = 0;
        while (i < parts.size()) {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) ++j;
            g = std::gcd(g, static_cast<int>(j - i));
            i = j;
        }
        std::vector<int> ls;
        for (int l = 1; l <= g; ++l)
            if (g % l == 0) ls.push_back(l);
        if (ls.empty()) ls.push_back(1);
        return ls;
    }

    /// n(lambda) = sum (i-1) * lambda_i, the top degree of the Springer module.
    int n_value() const {
        int n = 0;
        for (std::size_t i = 0; i < parts.size(); ++i)
            n += static_cast<int>(i) * parts[i];
        return n;
    }

    /// Number of standard tableaux, by the hook length formula.
    Int syt_count() const;

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }

    auto operator<=>(const Partition&) const = default;
};

/// All partitions of m, descending lex: (m), (m-1,1), ..., (1^m).
std::vector<Partition> partitions_of(int m);

inline Int Partition::syt_count() const {
    int m = sum();
    if (m == 0) return 1;
    Partition conj = conjugate();
    Int denom = 1;
    for (int i = 0; i < length(); ++i)
        for (int j = 0; j < parts[i]; ++j) {
            int hook = (parts[i] - j) + (conj.parts[j] - i) - 1;
            denom *= hook;
        }
    return factorial(m) / denom;
}

}  // namespace springer
