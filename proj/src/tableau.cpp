#include "springer/tableau.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "springer/errors.hpp"

namespace springer {

std::vector<Partition> partitions_of(int m) {
    std::vector<Partition> out;
    std::vector<int> cur;
    // Descending lex, largest first part first.
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

Tableau::Tableau(Partition s, std::vector<std::vector<int>> r)
    : shape(std::move(s)), rows(std::move(r)) {
    if (static_cast<int>(rows.size()) != shape.length())
        throw invalid_input("tableau rows do not match shape");
    for (int i = 0; i < shape.length(); ++i)
        if (static_cast<int>(rows[i].size()) != shape.parts[i])
            throw invalid_input("tableau row length does not match shape");
}

bool Tableau::is_numbering() const {
    int m = size();
    std::vector<bool> seen(m + 1, false);
    for (const auto& row : rows)
        for (int v : row) {
            if (v < 1 || v > m || seen[v]) return false;
            seen[v] = true;
        }
    return true;
}

bool Tableau::is_standard() const {
    if (!is_numbering()) return false;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c + 1 < rows[r].size() && rows[r][c] > rows[r][c + 1]) return false;
            if (r + 1 < rows.size() && c < rows[r + 1].size() &&
                rows[r][c] >= rows[r + 1][c])
                return false;
        }
    return true;
}

bool Tableau::is_semistandard_with_weight(const std::vector<int>& w) const {
    std::vector<int> count(w.size() + 1, 0);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            int v = rows[r][c];
            if (v < 1 || v > static_cast<int>(w.size())) return false;
            ++count[v];
            if (c + 1 < rows[r].size() && rows[r][c] > rows[r][c + 1]) return false;
            if (r + 1 < rows.size() && c < rows[r + 1].size() &&
                rows[r][c] >= rows[r + 1][c])
                return false;
        }
    for (std::size_t k = 0; k < w.size(); ++k)
        if (count[k + 1] != w[k]) return false;
    return true;
}

std::vector<int> Tableau::row_reading_word() const {
    std::vector<int> w;
    for (const auto& row : rows) w.insert(w.end(), row.begin(), row.end());
    return w;
}

std::string Tableau::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) out << ",";
        out << "[";
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c) out << ",";
            out << rows[r][c];
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

Tableau row_reading_numbering(const Partition& mu) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int p : mu.parts) {
        std::vector<int> row(p);
        for (int j = 0; j < p; ++j) row[j] = next++;
        rows.push_back(std::move(row));
    }
    return Tableau(mu, std::move(rows));
}

namespace {

// Cells in row-reading order with their (row, col).
std::vector<std::pair<int, int>> cells_of(const Partition& shape) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < shape.length(); ++r)
        for (int c = 0; c < shape.parts[r]; ++c) cells.emplace_back(r, c);
    return cells;
}

bool reading_less(const Tableau& a, const Tableau& b) {
    return a.row_reading_word() < b.row_reading_word();
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
    int m = lambda.sum();
    std::vector<std::vector<int>> grid(lambda.length());
    for (int r = 0; r < lambda.length(); ++r) grid[r].assign(lambda.parts[r], 0);
    std::vector<Tableau> out;
    // Place 1..m one at a time; a value may go into any cell whose left and
    // upper neighbours are already filled (they hold smaller values).
    std::function<void(int)> rec = [&](int v) {
        if (v > m) {
            out.emplace_back(lambda, grid);
            return;
        }
        for (int r = 0; r < lambda.length(); ++r)
            for (int c = 0; c < lambda.parts[r]; ++c) {
                if (grid[r][c] != 0) continue;
                if (c > 0 && grid[r][c - 1] == 0) continue;
                if (r > 0 && grid[r - 1][c] == 0) continue;
                grid[r][c] = v;
                rec(v + 1);
                grid[r][c] = 0;
            }
    };
    rec(1);
    std::sort(out.begin(), out.end(), reading_less);
    return out;
}

std::vector<Tableau> semistandard_tableaux(const Partition& lambda,
                                           const Partition& weight) {
    if (lambda.sum() != weight.sum())
        throw invalid_input("semistandard_tableaux: |lambda| != |weight|");
    auto cells = cells_of(lambda);
    std::vector<std::vector<int>> grid(lambda.length());
    for (int r = 0; r < lambda.length(); ++r) grid[r].assign(lambda.parts[r], 0);
    std::vector<int> remaining(weight.parts.begin(), weight.parts.end());
    std::vector<Tableau> out;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            out.emplace_back(lambda, grid);
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 1;
        if (c > 0) lo = std::max(lo, grid[r][c - 1]);
        if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
        for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
            if (remaining[v - 1] == 0) continue;
            --remaining[v - 1];
            grid[r][c] = v;
            rec(idx + 1);
            grid[r][c] = 0;
            ++remaining[v - 1];
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), reading_less);
    return out;
}

namespace {

// row_of[i] = 1-based row of entry i in t_mu.
std::vector<int> rows_in_t_mu(const Partition& mu) {
    std::vector<int> row_of(mu.sum() + 1, 0);
    int next = 1;
    for (int r = 0; r < mu.length(); ++r)
        for (int j = 0; j < mu.parts[r]; ++j) row_of[next++] = r + 1;
    return row_of;
}

}  // namespace

Tableau nu_compose(const Tableau& q, const Partition& mu) {
    if (q.size() != mu.sum()) throw invalid_input("nu_compose: size mismatch");
    auto row_of = rows_in_t_mu(mu);
    auto rows = q.rows;
    for (auto& row : rows)
        for (auto& v : row) {
            if (v < 1 || v > mu.sum()) throw invalid_input("nu_compose: not a numbering");
            v = row_of[v];
        }
    return Tableau(q.shape, std::move(rows));
}

Tableau standardize(const Tableau& t, const Partition& mu) {
    if (!t.is_semistandard_with_weight(
            std::vector<int>(mu.parts.begin(), mu.parts.end())))
        throw invalid_input("standardize: input is not semi-standard of weight mu");
    // Numbers of row v of t_mu, in order.
    std::vector<int> next_number(mu.length() + 1);
    int acc = 1;
    for (int r = 0; r < mu.length(); ++r) {
        next_number[r + 1] = acc;
        acc += mu.parts[r];
    }
    auto rows = t.rows;
    // Equal entries occupy distinct columns; number them left to right.
    for (int v = 1; v <= mu.length(); ++v) {
        std::vector<std::pair<int, int>> spots;  // (col, row)
        for (std::size_t r = 0; r < t.rows.size(); ++r)
            for (std::size_t c = 0; c < t.rows[r].size(); ++c)
                if (t.rows[r][c] == v)
                    spots.emplace_back(static_cast<int>(c), static_cast<int>(r));
        std::sort(spots.begin(), spots.end());
        for (auto [c, r] : spots) rows[r][c] = next_number[v]++;
    }
    Tableau q(t.shape, std::move(rows));
    check_internal(q.is_standard() && nu_compose(q, mu) == t,
                   "standardize post-check failed");
    return q;
}

Tableau two_row_tableau(int n, int k) {
    if (n < 1 || k < 0 || k > n) throw invalid_input("two_row_tableau: need 0 <= k <= n");
    std::vector<int> second;
    for (int v = n + 1; v <= n + k; ++v) second.push_back(v);
    std::vector<int> first;
    for (int v = 1; v <= 2 * n; ++v)
        if (v <= n || v > n + k) first.push_back(v);
    std::vector<std::vector<int>> rows{first};
    std::vector<int> shape{2 * n - k};
    if (k > 0) {
        rows.push_back(second);
        shape.push_back(k);
    }
    Tableau t(Partition(shape), std::move(rows));
    check_internal(t.is_standard(), "two_row_tableau: result not standard");
    return t;
}

}  // namespace springer
