#include "horolat/iwasawa.hpp"

#include <cmath>
#include <stdexcept>

namespace horolat {

DMatrix DMatrix::identity(int n) {
    DMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

DMatrix operator*(const DMatrix& a, const DMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("dmatrix: dimension mismatch");
    DMatrix c(a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int k = 0; k < a.n_; ++k) {
            double aik = a.at(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < a.n_; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

DMatrix DMatrix::transpose() const {
    DMatrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
    return t;
}

double DMatrix::det() const {
    DMatrix m(*this);
    double d = 1.0;
    for (int col = 0; col < n_; ++col) {
        int piv = col;
        for (int r = col + 1; r < n_; ++r)
            if (std::fabs(m.at(r, col)) > std::fabs(m.at(piv, col))) piv = r;
        if (m.at(piv, col) == 0.0) return 0.0;
        if (piv != col) {
            for (int j = 0; j < n_; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        for (int r = col + 1; r < n_; ++r) {
            double f = m.at(r, col) / m.at(col, col);
            if (f == 0.0) continue;
            for (int j = col; j < n_; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return d;
}

double DMatrix::frob_dist(const DMatrix& other) const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            double d = at(i, j) - other.at(i, j);
            s += d * d;
        }
    return std::sqrt(s);
}

// Modified Gram-Schmidt on columns with one reorthogonalization pass,
// so K^T K - I stays well below the 1e-9 tolerance for mildly
// ill-conditioned inputs.
KanDecomposition iwasawa(const DMatrix& g, double tol) {
    const int n = g.dim();
    if (std::fabs(g.det()) <= tol) throw std::runtime_error("iwasawa: near-singular input");

    std::vector<std::vector<double>> q(n, std::vector<double>(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) q[j][i] = g.at(i, j);
    DMatrix r(n);

    for (int j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass)
            for (int k = 0; k < j; ++k) {
                double proj = 0.0;
                for (int i = 0; i < n; ++i) proj += q[j][i] * q[k][i];
                r.at(k, j) += proj;
                for (int i = 0; i < n; ++i) q[j][i] -= proj * q[k][i];
            }
        double norm = 0.0;
        for (int i = 0; i < n; ++i) norm += q[j][i] * q[j][i];
        norm = std::sqrt(norm);
        if (norm <= tol) throw std::runtime_error("iwasawa: column collapse");
        r.at(j, j) = norm;
        for (int i = 0; i < n; ++i) q[j][i] /= norm;
    }

    KanDecomposition out;
    out.k = DMatrix(n);
    out.a = DMatrix(n);
    out.n = DMatrix::identity(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) out.k.at(i, j) = q[j][i];
    for (int i = 0; i < n; ++i) out.a.at(i, i) = r.at(i, i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.n.at(i, j) = r.at(i, j) / r.at(i, i);
    return out;
}

SiegelParams SiegelParams::canonical() { return {2.0 / std::sqrt(3.0), 0.5}; }

bool siegel_member(const DMatrix& g, const SiegelParams& p, double tol) {
    KanDecomposition kan = iwasawa(g, tol);
    const int n = g.dim();
    for (int i = 0; i + 1 < n; ++i)
        if (kan.a.at(i, i) > p.t * kan.a.at(i + 1, i + 1) + tol) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::fabs(kan.n.at(i, j)) > p.u + tol) return false;
    return true;
}

// Lagrange-Gauss reduction on the column pair: shear to |mu| <= 1/2, swap
// while the second column is strictly shorter. A size-reduced basis with
// ||c1|| <= ||c2|| lies in the (2/sqrt(3), 1/2) Siegel set.
std::array<std::array<long long, 2>, 2> siegel_reduce2(const DMatrix& g, double tol) {
    if (g.dim() != 2) throw std::invalid_argument("siegel_reduce2: need a 2x2 matrix");
    if (std::fabs(std::fabs(g.det()) - 1.0) > 1e-6)
        throw std::invalid_argument("siegel_reduce2: determinant must be 1");

    double c1[2] = {g.at(0, 0), g.at(1, 0)};
    double c2[2] = {g.at(0, 1), g.at(1, 1)};
    long long gm[2][2] = {{1, 0}, {0, 1}};  // gamma, columns track (c1, c2)

    auto dot = [](const double* x, const double* y) { return x[0] * y[0] + x[1] * y[1]; };

    for (int iter = 0; iter < 256; ++iter) {
        double n1 = dot(c1, c1);
        if (n1 <= tol * tol) throw std::runtime_error("siegel_reduce2: column collapse");
        double mu = dot(c2, c1) / n1;
        long long m = static_cast<long long>(std::llround(mu));
        if (m != 0) {  // c2 -= m * c1, i.e. gamma *= [[1,-m],[0,1]]
            c2[0] -= m * c1[0];
            c2[1] -= m * c1[1];
            gm[0][1] -= m * gm[0][0];
            gm[1][1] -= m * gm[1][0];
        }
        double n2 = dot(c2, c2);
        if (n2 < n1 * (1.0 - 1e-12)) {  // swap with sign: (c1, c2) <- (c2, -c1)
            double t0 = c1[0], t1 = c1[1];
            c1[0] = c2[0];
            c1[1] = c2[1];
            c2[0] = -t0;
            c2[1] = -t1;
            long long s0 = gm[0][0], s1 = gm[1][0];
            gm[0][0] = gm[0][1];
            gm[1][0] = gm[1][1];
            gm[0][1] = -s0;
            gm[1][1] = -s1;
        } else {
            return {{{gm[0][0], gm[0][1]}, {gm[1][0], gm[1][1]}}};
        }
    }
    throw std::runtime_error("siegel_reduce2: iteration cap exceeded");
}

}  // namespace horolat
