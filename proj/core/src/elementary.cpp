#include "horolat/elementary.hpp"

#include <stdexcept>

namespace horolat {

namespace {

// Row operation R_i += r * R_j, recorded as the left factor E_{ij}(r).
struct RowOp {
    int i, j;
    GaussianRational r;
};

void apply(GMatrix& m, const RowOp& op) {
    for (int k = 0; k < m.dim(); ++k) m.at(op.i, k) += op.r * m.at(op.j, k);
}

}  // namespace

// Reduces a to I by row additions only (valid since det = 1), then inverts
// the op list. Column by column: force the pivot to 1 using a row below
// (creating one when the column has no lower support), clear the column.
std::vector<ElementaryFactor> elementary_decomposition(const GMatrix& a) {
    const int n = a.dim();
    if (n < 2) throw std::invalid_argument("elementary_decomposition: need dimension >= 2");
    if (a.det() != GaussianRational(1))
        throw std::invalid_argument("elementary_decomposition: determinant is not 1");

    GMatrix m(a);
    std::vector<RowOp> ops;
    auto do_op = [&](int i, int j, const GaussianRational& r) {
        if (r.is_zero()) return;
        RowOp op{i, j, r};
        apply(m, op);
        ops.push_back(op);
    };

    for (int col = 0; col < n; ++col) {
        if (m.at(col, col) != GaussianRational(1)) {
            int support = -1;
            for (int i = col + 1; i < n; ++i)
                if (!m.at(i, col).is_zero()) { support = i; break; }
            if (support < 0) {
                // Lower column empty: det of the trailing block forces a
                // nonzero pivot, and the last pivot is already 1.
                if (m.at(col, col).is_zero())
                    throw std::logic_error("elementary_decomposition: lost rank");
                do_op(col + 1, col, GaussianRational(1));
                support = col + 1;
            }
            do_op(col, support, (GaussianRational(1) - m.at(col, col)) / m.at(support, col));
        }
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            do_op(i, col, -m.at(i, col));
        }
    }
    if (!m.is_identity()) throw std::logic_error("elementary_decomposition: reduction failed");

    // I = L_k ... L_1 a, so a = L_1^-1 L_2^-1 ... L_k^-1 with E_{ij}(r)^-1 = E_{ij}(-r):
    // the inverted ops in original order.
    std::vector<ElementaryFactor> factors;
    factors.reserve(ops.size());
    for (const RowOp& op : ops) factors.push_back(ElementaryFactor{op.i, op.j, -op.r});
    return factors;
}

GMatrix elementary_product(int n, const std::vector<ElementaryFactor>& factors) {
    GMatrix p = GMatrix::identity(n);
    for (const auto& f : factors) p = p * elementary_matrix(n, f.row, f.col, f.r);
    return p;
}

}  // namespace horolat
