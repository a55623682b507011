#pragma once

#include <vector>

#include "horolat/iwasawa.hpp"
#include "horolat/matrix.hpp"

namespace horolat {

enum class PathKind { Diagonal, UnipotentReal, UnipotentImag };

/// One-parameter family in SL(2,C): Diagonal = diag(e^{t/2}, e^{-t/2}),
/// UnipotentReal = [[1,t],[0,1]], UnipotentImag = [[1,it],[0,1]].
struct OrbitPath {
    PathKind kind = PathKind::UnipotentReal;
    double t_min = 0.0;
    double t_max = 1.0;
    int steps = 2;  // >= 2

    void validate() const;
};

/// Which slot of the double orbit the trace samples: TransposeInverse
/// multiplies by the transpose-inverse of the realified path element,
/// Left multiplies by the element itself.
enum class OrbitSide { Left, TransposeInverse };

struct OrbitSample {
    double t = 0.0;
    double systole2 = 0.0;
    double covol = 0.0;
    bool ok = true;
};

struct OrbitTrace {
    std::vector<OrbitSample> samples;
};

/// Systole trace of the translated lattice basis L(t) in floating point.
/// The base point g1 must have |det| = 1 exactly. Per-sample numeric
/// failures are flagged, the trace is still returned.
OrbitTrace orbit_trace(const RMatrix& g1, const OrbitPath& path, OrbitSide side);

/// Exact coset test: true iff g1^-1 (phi2(a)^T)^-1 g1 has integer entries
/// and determinant 1. g1 must be invertible (any rational entries),
/// a must have det 1.
bool stabilizer_probe(const RMatrix& g1, const GMatrix& a);

/// Numeric shortest nonzero squared vector norm of the column lattice.
double systole2_numeric(const DMatrix& basis_columns);

}  // namespace horolat
