#pragma once

#include <vector>

#include "horolat/matrix.hpp"

namespace horolat {

using IntRows = std::vector<std::vector<Integer>>;

/// Row-style Hermite normal form of a full-rank square integer matrix:
/// upper triangular, positive diagonal, 0 <= h[i][j] < h[j][j] above the
/// pivot. Unique, so it canonically represents the Z-row-span.
IntRows hnf_rows(IntRows m);

/// Canonical form of the Z-lattice spanned by the rows of a rational matrix:
/// the minimal d with d*L integral together with hnf(d * rows). Two bases
/// generate the same lattice iff their canonical forms agree.
struct LatticeCanonical {
    Integer denom;
    IntRows hnf;
    friend bool operator==(const LatticeCanonical& a, const LatticeCanonical& b) {
        return a.denom == b.denom && a.hnf == b.hnf;
    }
};

LatticeCanonical lattice_canonical_rows(const RMatrix& basis_rows);

}  // namespace horolat
