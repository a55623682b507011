#include "horolat/realification.hpp"

#include <stdexcept>

namespace horolat {

RMatrix t_matrix() {
    RMatrix t(4);
    t.at(0, 1) = -1;
    t.at(1, 0) = 1;
    t.at(2, 3) = -1;
    t.at(3, 2) = 1;
    return t;
}

RMatrix realify(const GMatrix& m) {
    const int n = m.dim();
    RMatrix r(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const GaussianRational& z = m.at(i, j);
            r.at(2 * i, 2 * j) = z.re;
            r.at(2 * i, 2 * j + 1) = -z.im;
            r.at(2 * i + 1, 2 * j) = z.im;
            r.at(2 * i + 1, 2 * j + 1) = z.re;
        }
    return r;
}

RMatrix phi2(const GMatrix& a) {
    if (a.dim() != 2) throw std::invalid_argument("phi2: need a 2x2 matrix");
    if (a.det() != GaussianRational(1))
        throw std::invalid_argument("phi2: determinant is not 1");
    return realify(a);
}

bool centralizes_T(const RMatrix& m) {
    if (m.dim() != 4) throw std::invalid_argument("centralizes_T: need a 4x4 matrix");
    RMatrix t = t_matrix();
    return m * t == t * m;
}

std::optional<GMatrix> extract_phi2(const RMatrix& m) {
    if (m.dim() != 4) return std::nullopt;
    GMatrix a(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Rational re = m.at(2 * i, 2 * j);
            Rational im = m.at(2 * i + 1, 2 * j);
            if (m.at(2 * i + 1, 2 * j + 1) != re || m.at(2 * i, 2 * j + 1) != -im)
                return std::nullopt;
            a.at(i, j) = GaussianRational(re, im);
        }
    return a;
}

std::vector<GMatrix> default_form_sample() {
    GMatrix upper = GMatrix::identity(2);
    upper.at(0, 1) = GaussianRational(1);
    GMatrix lower = GMatrix::identity(2);
    lower.at(1, 0) = GaussianRational(1);
    GMatrix diag_i(2);
    diag_i.at(0, 0) = GaussianRational::unit_i();
    diag_i.at(1, 1) = -GaussianRational::unit_i();
    return {upper, lower, diag_i};
}

namespace {

// Basis of the symmetric (i <= j) or antisymmetric (i < j) 4x4 forms.
std::vector<RMatrix> form_basis(bool symmetric) {
    std::vector<RMatrix> basis;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            if (!symmetric && i == j) continue;
            RMatrix b(4);
            b.at(i, j) = 1;
            if (i != j) b.at(j, i) = symmetric ? 1 : -1;
            basis.push_back(b);
        }
    return basis;
}

// Entries of M^T B M - B read along the independent positions (upper
// triangle incl. or excl. the diagonal); the residual inherits the symmetry
// type of B, so these positions carry all constraints.
void append_constraints(RatRows& rows, const RMatrix& m, const std::vector<RMatrix>& basis,
                        bool symmetric) {
    std::vector<RMatrix> images;
    images.reserve(basis.size());
    RMatrix mt = m.transpose();
    for (const RMatrix& b : basis) images.push_back(mt * b * m - b);
    for (int i = 0; i < 4; ++i)
        for (int j = symmetric ? i : i + 1; j < 4; ++j) {
            std::vector<Rational> row(basis.size());
            for (std::size_t k = 0; k < basis.size(); ++k) row[k] = images[k].at(i, j);
            rows.push_back(std::move(row));
        }
}

std::vector<RMatrix> combine(const std::vector<RMatrix>& basis, const RatRows& coeffs) {
    std::vector<RMatrix> out;
    for (const auto& c : coeffs) {
        RMatrix s(4);
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (sgn(c[k]) != 0) s = s + basis[k].scaled(c[k]);
        out.push_back(s);
    }
    return out;
}

}  // namespace

BilinearFormReport invariant_bilinear_forms(const std::vector<GMatrix>& sample) {
    BilinearFormReport report;
    for (bool symmetric : {true, false}) {
        std::vector<RMatrix> basis = form_basis(symmetric);
        RatRows rows;
        for (const GMatrix& g : sample) append_constraints(rows, phi2(g), basis, symmetric);
        if (rows.empty()) rows.push_back(std::vector<Rational>(basis.size(), Rational(0)));
        RatRows null = nullspace_rows(rows, basis.size());
        if (symmetric) {
            report.dim_sym = static_cast<int>(null.size());
            report.sym_basis = combine(basis, null);
        } else {
            report.dim_alt = static_cast<int>(null.size());
            report.alt_basis = combine(basis, null);
        }
    }
    return report;
}

GMatrix adjoint_gram() {
    GMatrix g(3);
    g.at(0, 0) = GaussianRational(2);
    g.at(1, 1) = GaussianRational(2);
    g.at(2, 2) = GaussianRational(-2);
    return g;
}

GMatrix adjoint_so3(const GMatrix& a) {
    if (a.dim() != 2) throw std::invalid_argument("adjoint_so3: need a 2x2 matrix");
    if (a.det() != GaussianRational(1))
        throw std::invalid_argument("adjoint_so3: determinant is not 1");

    auto basis_mat = [](int k) {
        GMatrix e(2);
        switch (k) {
            case 0:
                e.at(0, 0) = GaussianRational(1);
                e.at(1, 1) = GaussianRational(-1);
                break;
            case 1:
                e.at(0, 1) = GaussianRational(1);
                e.at(1, 0) = GaussianRational(1);
                break;
            default:
                e.at(0, 1) = GaussianRational(1);
                e.at(1, 0) = GaussianRational(-1);
                break;
        }
        return e;
    };

    GMatrix ainv = a.inverse();
    GMatrix out(3);
    for (int k = 0; k < 3; ++k) {
        GMatrix x = a * basis_mat(k) * ainv;  // trace-free again
        // x = c1 E1 + c2 E2 + c3 E3: c1 = x11, c2 = (x12+x21)/2, c3 = (x12-x21)/2
        GaussianRational half(Rational(1, 2));
        out.at(0, k) = x.at(0, 0);
        out.at(1, k) = (x.at(0, 1) + x.at(1, 0)) * half;
        out.at(2, k) = (x.at(0, 1) - x.at(1, 0)) * half;
    }
    return out;
}

}  // namespace horolat
