#pragma once

#include <array>
#include <vector>

namespace horolat {

/// Small dense double matrix for the numeric decompositions. Everything
/// exact lives elsewhere; this type is deliberately plain.
class DMatrix {
  public:
    DMatrix() : n_(0) {}
    explicit DMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, 0.0) {}

    static DMatrix identity(int n);

    int dim() const { return n_; }
    double& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    double at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    friend DMatrix operator*(const DMatrix& a, const DMatrix& b);
    DMatrix transpose() const;
    double det() const;  // LU with partial pivoting

    double frob_dist(const DMatrix& other) const;

  private:
    int n_;
    std::vector<double> e_;
};

struct KanDecomposition {
    DMatrix k, a, n;
};

/// g = K * A * N with K orthogonal, A positive diagonal, N unit upper
/// triangular; Gram-Schmidt on the columns of g. Throws std::runtime_error
/// when |det g| <= tol (near-singular input).
KanDecomposition iwasawa(const DMatrix& g, double tol = 1e-9);

struct SiegelParams {
    double t = 0.0;
    double u = 0.0;
    /// The classical covering instance (2/sqrt(3), 1/2).
    static SiegelParams canonical();
};

/// Membership in the Siegel set K A_t N_u: a_ii <= t*a_{i+1,i+1} + tol for
/// consecutive diagonal ratios and |n_ij| <= u + tol.
bool siegel_member(const DMatrix& g, const SiegelParams& p, double tol = 1e-9);

/// Gauss reduction for n = 2: returns an integer gamma with det 1 such that
/// g * gamma lies in the Siegel set with parameters (2/sqrt(3), 1/2).
/// Iteration-capped; throws std::runtime_error on numeric failure.
std::array<std::array<long long, 2>, 2> siegel_reduce2(const DMatrix& g, double tol = 1e-9);

}  // namespace horolat
