#include "horolat/horospherical.hpp"

#include <stdexcept>

namespace horolat {

GMatrix embed_u(const Complex2& v, const HoroSide& side) {
    GMatrix m = GMatrix::identity(3);
    if (side.shape == PairShape::OneTwo) {
        if (side.tag == HoroTag::U) {  // row (v1, v2) in the first row
            m.at(0, 1) = v[0];
            m.at(0, 2) = v[1];
        } else {  // column (v1, v2) in the first column
            m.at(1, 0) = v[0];
            m.at(2, 0) = v[1];
        }
    } else {
        if (side.tag == HoroTag::U) {  // column (v1, v2) in the last column
            m.at(0, 2) = v[0];
            m.at(1, 2) = v[1];
        } else {  // row (v1, v2) in the last row
            m.at(2, 0) = v[0];
            m.at(2, 1) = v[1];
        }
    }
    return m;
}

std::array<Rational, 4> realify_vec(const Complex2& v) {
    return {v[0].re, v[0].im, v[1].re, v[1].im};
}

HoroLattice::HoroLattice(HoroSide side, std::array<Complex2, 4> basis)
    : side_(side), basis_(std::move(basis)) {
    if (sgn(realified_rows().det()) == 0)
        throw std::invalid_argument("horo lattice: basis is not R-linearly independent");
}

RMatrix HoroLattice::realified_rows() const {
    RMatrix m(4);
    for (int i = 0; i < 4; ++i) {
        auto row = realify_vec(basis_[i]);
        for (int j = 0; j < 4; ++j) m.at(i, j) = row[j];
    }
    return m;
}

Rational HoroLattice::covolume() const {
    Rational d = realified_rows().det();
    return sgn(d) < 0 ? -d : d;
}

LatticeCanonical HoroLattice::canonical() const {
    return lattice_canonical_rows(realified_rows());
}

HoroLattice HoroLattice::gaussian_integers(HoroSide side) {
    GaussianRational one(1), i = GaussianRational::unit_i(), zero;
    return HoroLattice(side, {Complex2{one, zero}, Complex2{i, zero},
                              Complex2{zero, one}, Complex2{zero, i}});
}

HoroLattice HoroLattice::scaled(const GaussianRational& rho) const {
    if (rho.is_zero()) throw std::invalid_argument("horo lattice: zero scale");
    std::array<Complex2, 4> b = basis_;
    for (auto& v : b) {
        v[0] = rho * v[0];
        v[1] = rho * v[1];
    }
    return HoroLattice(side_, b);
}

LeviElement::LeviElement(GMatrix m) : a(std::move(m)) {
    if (a.dim() != 2) throw std::invalid_argument("levi element: need a 2x2 matrix");
    if (a.det() != GaussianRational(1))
        throw std::invalid_argument("levi element: determinant is not 1");
}

GMatrix LeviElement::embedded(PairShape shape) const {
    GMatrix m = GMatrix::identity(3);
    int off = shape == PairShape::OneTwo ? 1 : 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.at(i + off, j + off) = a.at(i, j);
    return m;
}

HoroLattice conjugate_lattice(const LeviElement& h, const HoroLattice& f) {
    GMatrix act = h.a;
    // Row vectors act on the right by a^-1, column vectors on the left by a.
    bool row_side = (f.side().tag == HoroTag::U) == (f.side().shape == PairShape::OneTwo);
    if (row_side) act = act.inverse();

    std::array<Complex2, 4> b;
    for (int k = 0; k < 4; ++k) {
        const Complex2& v = f.basis()[k];
        if (row_side)
            b[k] = {v[0] * act.at(0, 0) + v[1] * act.at(1, 0),
                    v[0] * act.at(0, 1) + v[1] * act.at(1, 1)};
        else
            b[k] = {act.at(0, 0) * v[0] + act.at(0, 1) * v[1],
                    act.at(1, 0) * v[0] + act.at(1, 1) * v[1]};
    }
    return HoroLattice(f.side(), b);
}

bool lattice_equal(const HoroLattice& f, const HoroLattice& g) {
    if (!(f.side() == g.side()))
        throw std::invalid_argument("lattice_equal: side mismatch");
    return f.canonical() == g.canonical();
}

std::vector<GMatrix> generator_set(const HoroLattice& f1, const HoroLattice& f2) {
    if (f1.side().tag != HoroTag::U || f2.side().tag != HoroTag::Uminus ||
        f1.side().shape != f2.side().shape)
        throw std::invalid_argument("generator_set: need a U / Uminus pair of one shape");
    std::vector<GMatrix> gens;
    gens.reserve(16);
    for (const Complex2& v : f1.basis()) gens.push_back(embed_u(v, f1.side()));
    for (const Complex2& v : f2.basis()) gens.push_back(embed_u(v, f2.side()));
    for (int k = 0; k < 8; ++k) gens.push_back(gens[k].inverse());
    return gens;
}

}  // namespace horolat
