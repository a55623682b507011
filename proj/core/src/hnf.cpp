#include "horolat/hnf.hpp"

#include <stdexcept>

namespace horolat {

namespace {

Integer fdiv(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

IntRows hnf_rows(IntRows m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("hnf: matrix must be square");

    for (std::size_t j = 0; j < n; ++j) {
        // Euclid on column j over rows j..n-1 until one nonzero entry remains.
        for (;;) {
            std::size_t best = n;
            for (std::size_t i = j; i < n; ++i) {
                if (sgn(m[i][j]) == 0) continue;
                if (best == n || cmp(abs(m[i][j]), abs(m[best][j])) < 0) best = i;
            }
            if (best == n) throw std::invalid_argument("hnf: matrix is singular");
            if (best != j) std::swap(m[best], m[j]);
            bool done = true;
            for (std::size_t i = j + 1; i < n; ++i) {
                if (sgn(m[i][j]) == 0) continue;
                Integer q = fdiv(m[i][j], m[j][j]);
                for (std::size_t k = 0; k < n; ++k) m[i][k] -= q * m[j][k];
                if (sgn(m[i][j]) != 0) done = false;
            }
            if (done) break;
        }
        if (sgn(m[j][j]) < 0)
            for (std::size_t k = 0; k < n; ++k) m[j][k] = -m[j][k];
        for (std::size_t i = 0; i < j; ++i) {
            Integer q = fdiv(m[i][j], m[j][j]);
            if (sgn(q) == 0) continue;
            for (std::size_t k = 0; k < n; ++k) m[i][k] -= q * m[j][k];
        }
    }
    return m;
}

LatticeCanonical lattice_canonical_rows(const RMatrix& basis_rows) {
    const int n = basis_rows.dim();
    // The minimal d with d*L integral equals the lcm of all entry
    // denominators and does not depend on the basis choice.
    Integer d(1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), basis_rows.at(i, j).get_den().get_mpz_t());

    IntRows scaled(n, std::vector<Integer>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational e = basis_rows.at(i, j) * Rational(d);
            if (e.get_den() != 1) throw std::logic_error("lattice_canonical: clearing failed");
            scaled[i][j] = e.get_num();
        }
    return LatticeCanonical{d, hnf_rows(std::move(scaled))};
}

}  // namespace horolat
