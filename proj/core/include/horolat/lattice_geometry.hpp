#pragma once

#include <array>
#include <optional>
#include <vector>

#include "horolat/hnf.hpp"
#include "horolat/matrix.hpp"

namespace horolat {

/// Rank-4 lattice in R^4 with exact rational basis. Columns of `basis`
/// generate the lattice; `gram` = basis^T basis and `covol` = |det basis|
/// are cached at construction.
class ZLattice4 {
  public:
    explicit ZLattice4(RMatrix basis_columns);

    const RMatrix& basis() const { return basis_; }
    const RMatrix& gram() const { return gram_; }
    const Rational& covol() const { return covol_; }

    /// Value of the Gram quadratic form at an integer coefficient vector.
    Rational norm2_of(const std::array<long long, 4>& coeffs) const;

    /// Canonical identity of the column span as a Z-module.
    LatticeCanonical canonical() const;

    static ZLattice4 standard();  // Z^4
    static ZLattice4 diagonal(const std::array<Rational, 4>& d);

  private:
    RMatrix basis_;
    RMatrix gram_;
    Rational covol_;
};

struct SvpResult {
    std::array<long long, 4> coeffs{};  // w.r.t. the input basis columns
    Rational norm2;
};

/// Exact shortest nonzero vector: Fincke-Pohst enumeration seeded by an
/// LLL-reduced basis, with all pruning bounds computed in exact rational
/// arithmetic. Ties go to the lexicographically smallest coefficient vector
/// with positive leading entry.
SvpResult shortest_vector(const ZLattice4& L);

/// Cross-check of the rank-4 Hermite inequality, with both sides raised to
/// the 4th power to stay rational: 27 * norm2(L)^2 <= 64 * covol(L).
bool hermite_check(const ZLattice4& L);
bool hermite_check(const ZLattice4& L, const Rational& norm2);

struct MahlerViolation {
    std::size_t index = 0;
    char condition = 'a';  // 'a' covolume bound, 'b' short vector
    Rational value;        // the offending covolume or norm2
    std::optional<SvpResult> witness;
};

struct MahlerReport {
    bool pass = true;
    std::vector<MahlerViolation> violations;
};

/// Checks the two compactness conditions on a family: (a) covol <= det_bound
/// and (b) shortest norm2 >= eps2. Reports every violator with a witness.
MahlerReport mahler_certificate(const std::vector<ZLattice4>& family,
                                const Rational& det_bound, const Rational& eps2);

/// LLL-reduced basis of the same lattice, exact with delta = 3/4.
/// Idempotent: reducing a reduced lattice returns it unchanged.
ZLattice4 reduced_basis(const ZLattice4& L);

/// Size-reduced and Lovasz-stable at delta = 3/4, checked exactly.
bool is_lll_reduced(const ZLattice4& L);

}  // namespace horolat
