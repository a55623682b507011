#include "horolat/matrix.hpp"

namespace horolat {

GMatrix to_gaussian(const RMatrix& m) {
    GMatrix g(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) g.at(i, j) = GaussianRational(m.at(i, j));
    return g;
}

GMatrix gmatrix_from_key(const std::string& key) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= key.size(); ++i)
        if (i == key.size() || key[i] == ';') {
            parts.emplace_back(key.data() + start, i - start);
            start = i + 1;
        }
    if (parts.empty()) throw std::invalid_argument("matrix key: empty");
    int n = std::stoi(std::string(parts[0]));
    if (static_cast<int>(parts.size()) != n * n + 1)
        throw std::invalid_argument("matrix key: wrong entry count");
    GMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::string_view s = parts[1 + static_cast<std::size_t>(i) * n + j];
            std::size_t comma = s.find(',');
            if (comma == std::string_view::npos)
                throw std::invalid_argument("matrix key: bad scalar");
            m.at(i, j) = GaussianRational(parse_rational(s.substr(0, comma)),
                                          parse_rational(s.substr(comma + 1)));
        }
    return m;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<int> echelon(RatRows& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        Rational p = rows[r][c];
        for (std::size_t j = c; j < cols; ++j) rows[r][j] /= p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][c]) == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

}  // namespace

int rank_rows(RatRows rows) {
    return static_cast<int>(echelon(rows).size());
}

RatRows nullspace_rows(const RatRows& rows_in, std::size_t cols) {
    RatRows rows = rows_in;
    for (auto& r : rows)
        if (r.size() != cols) throw std::invalid_argument("nullspace: ragged rows");
    std::vector<int> pivots = echelon(rows);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    RatRows basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_c] = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
            std::size_t pc = static_cast<std::size_t>(pivots[pr]);
            if (pc < rows[pr].size()) v[pc] = -rows[pr][free_c];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace horolat
