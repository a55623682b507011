#pragma once

#include <vector>

#include "horolat/matrix.hpp"

namespace horolat {

/// One factor I + r*E_{row,col} of an elementary-matrix factorization (0-based).
struct ElementaryFactor {
    int row = 0;
    int col = 0;
    GaussianRational r;
};

/// Factors a matrix with det = 1 into elementary matrices: the product of
/// I + r*E_{ij} in list order equals the input exactly. The factorization is
/// finite but not canonical. Throws std::invalid_argument when det != 1.
std::vector<ElementaryFactor> elementary_decomposition(const GMatrix& a);

GMatrix elementary_product(int n, const std::vector<ElementaryFactor>& factors);

}  // namespace horolat
