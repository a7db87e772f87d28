#include "springer/characters.hpp"

#include <algorithm>
#include <mutex>

#include "springer/errors.hpp"

namespace springer {

Int class_size(const Partition& ct) {
    // m! / z, z = prod i^{m_i} m_i!
    int m = ct.sum();
    Int z = 1;
    std::size_t i = 0;
    while (i < ct.parts.size()) {
        std::size_t j = i;
        while (j < ct.parts.size() && ct.parts[j] == ct.parts[i]) ++j;
        for (std::size_t t = i; t < j; ++t) z *= ct.parts[i];
        z *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return factorial(m) / z;
}

Perm class_representative(const Partition& ct) {
    int m = ct.sum();
    Perm p(m);
    std::vector<int> img(m);
    int start = 0;
    for (int len : ct.parts) {
        for (int i = 0; i < len; ++i) img[start + i] = start + (i + 1) % len;
        start += len;
    }
    return Perm::from_images(img);
}

namespace {

// chi via beta-sets: B = {lambda_i + (L - i)} for i = 1..L. Removing a rim
// hook of length r means replacing some b in B by b - r >= 0 not already in
// B; the sign is (-1)^{#elements of B strictly between b-r and b}.
Int mn_rec(std::vector<int> beta, std::vector<int> rho,
           std::map<std::pair<std::vector<int>, std::vector<int>>, Int>& memo) {
    if (rho.empty()) return 1;
    auto key = std::make_pair(beta, rho);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int r = rho.front();
    std::vector<int> rest(rho.begin() + 1, rho.end());
    Int total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i];
        if (b < r) continue;
        int target = b - r;
        bool occupied = false;
        int between = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < b) ++between;
        }
        if (occupied) continue;
        std::vector<int> next = beta;
        next[i] = target;
        std::sort(next.rbegin(), next.rend());
        // Normalize: drop a full trailing run 0,1,..,k-1 only if it encodes
        // empty rows; beta-sets are equivalent up to shifting, keep as-is.
        Int term = mn_rec(next, rest, memo);
        if (between % 2 == 1) term = -term;
        total += term;
    }
    memo[key] = total;
    return total;
}

}  // namespace

Int mn_character(const Partition& lambda, const Partition& ct) {
    if (lambda.sum() != ct.sum())
        throw invalid_input("mn_character: |lambda| != |cycle type|");
    static std::map<std::pair<std::vector<int>, std::vector<int>>, Int> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    int len = lambda.length();
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda.parts[i] + (len - 1 - i);
    // Hooks are removed in descending cycle-length order; the order does not
    // change the result, fixing it helps memoization.
    return mn_rec(beta, ct.parts, memo);
}

Cyclotomic class_inner_product(int m, const std::map<Partition, Cyclotomic>& a,
                               const std::map<Partition, Cyclotomic>& b) {
    Cyclotomic acc;
    for (const auto& [ct, va] : a) {
        auto it = b.find(ct);
        check_internal(it != b.end(), "class_inner_product: missing class");
        acc += va * it->second * Cyclotomic(Rational(class_size(ct)));
    }
    return acc * Cyclotomic(Rational(1) / Rational(factorial(m)));
}

}  // namespace springer
