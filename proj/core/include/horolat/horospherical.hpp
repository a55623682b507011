#pragma once

#include <array>
#include <vector>

#include "horolat/hnf.hpp"
#include "horolat/matrix.hpp"

namespace horolat {

/// Vector in C^2 with exact Q(i) coordinates.
using Complex2 = std::array<GaussianRational, 2>;

enum class HoroTag { U, Uminus };

/// Which of the two conjugacy representatives of the opposite minimal pair
/// is in play. OneTwo is the pair worked with throughout; TwoOne is its
/// mirror, obtained by placing the blocks against the last coordinate.
enum class PairShape { OneTwo, TwoOne };

struct HoroSide {
    HoroTag tag = HoroTag::U;
    PairShape shape = PairShape::OneTwo;

    friend bool operator==(const HoroSide& a, const HoroSide& b) {
        return a.tag == b.tag && a.shape == b.shape;
    }
};

/// Unipotent 3x3 matrix carrying v in the side's block. A homomorphism:
/// embed_u(v) * embed_u(w) = embed_u(v + w), inverse embed_u(-v).
GMatrix embed_u(const Complex2& v, const HoroSide& side);

/// (re v1, im v1, re v2, im v2), the realification used everywhere.
std::array<Rational, 4> realify_vec(const Complex2& v);

/// Rank-4 Z-lattice inside U or Uminus, given by an exact basis of C^2
/// vectors that are R-linearly independent after realification.
class HoroLattice {
  public:
    HoroLattice(HoroSide side, std::array<Complex2, 4> basis);

    const HoroSide& side() const { return side_; }
    const std::array<Complex2, 4>& basis() const { return basis_; }

    /// 4x4 rational matrix whose rows are the realified basis vectors.
    RMatrix realified_rows() const;

    /// Covolume of the realified lattice, |det| of the realified basis.
    Rational covolume() const;

    /// The canonical identity of the Z-module, independent of the basis.
    LatticeCanonical canonical() const;

    /// The standard lattice Z[i]^2 on the given side.
    static HoroLattice gaussian_integers(HoroSide side);

    HoroLattice scaled(const GaussianRational& rho) const;

  private:
    HoroSide side_;
    std::array<Complex2, 4> basis_;
};

/// Element diag(1, a) (shape OneTwo) or diag(a, 1) (shape TwoOne) of the
/// Levi commutator, with det a = 1.
struct LeviElement {
    GMatrix a;  // 2x2, det 1

    explicit LeviElement(GMatrix m);
    GMatrix embedded(PairShape shape) const;  // 3x3
};

/// Conjugation action of the Levi commutator: for the OneTwo pair, a row
/// x in U maps to x*a^-1 and a column y in Uminus maps to a*y (roles swap
/// for the TwoOne pair).
HoroLattice conjugate_lattice(const LeviElement& h, const HoroLattice& f);

/// True iff the two bases generate the same Z-module. Throws on side mismatch.
bool lattice_equal(const HoroLattice& f, const HoroLattice& g);

/// The 16 generators {embed_u(+-b)} over the two 4-element bases, ordered
/// [f1 basis, f2 basis, then their inverses]; closed under inverse.
std::vector<GMatrix> generator_set(const HoroLattice& f1, const HoroLattice& f2);

}  // namespace horolat
