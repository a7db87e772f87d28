#include "springer/polynomial.hpp"

namespace springer {

RatPoly specht_polynomial(const Tableau& q) {
    if (!q.is_numbering()) throw invalid_input("specht_polynomial: Q must be a numbering");
    int m = q.size();
    RatPoly prod = RatPoly::constant(m, Rational(1));
    if (q.shape.empty()) return prod;
    Partition conj = q.shape.conjugate();
    int width = q.shape.parts[0];
    for (int c = 0; c < width; ++c) {
        int height = conj.parts[c];
        for (int i = 0; i < height; ++i)
            for (int j = i + 1; j < height; ++j) {
                // x_{Q(i,c)} - x_{Q(j,c)}, the upper entry first.
                RatPoly diff(m);
                Exp top(m, 0), bot(m, 0);
                top[q.at(i, c) - 1] = 1;
                bot[q.at(j, c) - 1] = 1;
                diff.add_term(top, Rational(1));
                diff.add_term(bot, Rational(-1));
                prod = prod * diff;
            }
    }
    return prod;
}

Perm relabel_permutation(const Tableau& q, const Partition& lambda) {
    if (q.shape != lambda) throw invalid_input("relabel_permutation: shape mismatch");
    if (!q.is_numbering())
        throw invalid_input("relabel_permutation: Q must be a numbering");
    Tableau t = row_reading_numbering(lambda);
    int m = lambda.sum();
    std::vector<int> img(m);
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda.parts[r]; ++c)
            img[t.at(r, c) - 1] = q.at(r, c) - 1;
    return Perm::from_images(img);
}

}  // namespace springer
