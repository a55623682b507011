#pragma once

#include <optional>
#include <vector>

#include "horolat/matrix.hpp"

namespace horolat {

/// The fixed 4x4 integer matrix with 2x2 blocks [[0,-1],[1,0]] on the
/// diagonal; T^2 = -I. Its centralizer in SL(4,R) is the realified copy
/// of SL(2,C).
RMatrix t_matrix();

/// Realification of a 2x2 complex matrix with det 1: each entry z expands
/// to [[re z, -im z], [im z, re z]]. A homomorphism into SL(4,R) commuting
/// with T. Throws when det != 1.
RMatrix phi2(const GMatrix& a);

/// The same block rule applied to an n x n matrix, giving 2n x 2n; a ring
/// homomorphism with no determinant constraint.
RMatrix realify(const GMatrix& m);

/// m T = T m, exactly (4x4 only).
bool centralizes_T(const RMatrix& m);

/// Recovers a complex 2x2 matrix from a 4x4 matrix following the phi2 block
/// pattern; nullopt when the pattern does not hold (equivalently, when the
/// matrix does not centralize T).
std::optional<GMatrix> extract_phi2(const RMatrix& m);

struct BilinearFormReport {
    int dim_sym = 0;
    int dim_alt = 0;
    std::vector<RMatrix> sym_basis;
    std::vector<RMatrix> alt_basis;
};

/// Solves phi2(g)^T S phi2(g) = S over Q for all g in the sample, split
/// into symmetric and antisymmetric S. Reports dimensions and bases of the
/// solution spaces; it asserts nothing about them. Default sample: the two
/// standard unipotents and diag(i, -i).
BilinearFormReport invariant_bilinear_forms(const std::vector<GMatrix>& sample);

std::vector<GMatrix> default_form_sample();

/// Matrix of x -> a x a^-1 on trace-zero 2x2 matrices in the basis
/// E1 = [[1,0],[0,-1]], E2 = [[0,1],[1,0]], E3 = [[0,1],[-1,0]].
/// Preserves the trace form Gram matrix diag(2,2,-2) exactly; kernel {+-I}.
GMatrix adjoint_so3(const GMatrix& a);

/// diag(2, 2, -2), the Gram matrix of tr(xy) on the E-basis.
GMatrix adjoint_gram();

}  // namespace horolat
