#include "horolat/orbit.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "horolat/realification.hpp"

namespace horolat {

namespace {

constexpr int kDim = 4;

// Floating-point LLL (delta = 0.99) on the column lattice, then exhaustive
// enumeration below the shortest reduced vector. Plenty for rank 4.
struct NumBasis {
    double b[kDim][kDim];  // b[i] = i-th vector
};

double dot(const double* x, const double* y) {
    double s = 0.0;
    for (int i = 0; i < kDim; ++i) s += x[i] * y[i];
    return s;
}

void lll_double(NumBasis& nb) {
    double star[kDim][kDim], norm2[kDim], mu[kDim][kDim];
    auto gram_schmidt = [&]() {
        for (int i = 0; i < kDim; ++i) {
            for (int c = 0; c < kDim; ++c) star[i][c] = nb.b[i][c];
            for (int j = 0; j < i; ++j) {
                mu[i][j] = dot(nb.b[i], star[j]) / norm2[j];
                for (int c = 0; c < kDim; ++c) star[i][c] -= mu[i][j] * star[j][c];
            }
            norm2[i] = dot(star[i], star[i]);
            if (!(norm2[i] > 0.0)) throw std::runtime_error("numeric lll: rank collapse");
        }
    };

    int k = 1;
    int guard = 0;
    while (k < kDim) {
        if (++guard > 10000) throw std::runtime_error("numeric lll: no convergence");
        gram_schmidt();
        for (int j = k - 1; j >= 0; --j) {
            double r = std::round(mu[k][j]);
            if (r != 0.0)
                for (int c = 0; c < kDim; ++c) nb.b[k][c] -= r * nb.b[j][c];
            gram_schmidt();
        }
        if (norm2[k] >= (0.99 - mu[k][k - 1] * mu[k][k - 1]) * norm2[k - 1]) {
            ++k;
        } else {
            for (int c = 0; c < kDim; ++c) std::swap(nb.b[k][c], nb.b[k - 1][c]);
            k = k > 1 ? k - 1 : 1;
        }
    }
}

struct NumEnum {
    double d[kDim];
    double m[kDim][kDim];
    double best;

    void descend(int i, double used, double* x) {
        if (i < 0) {
            bool zero = true;
            for (int j = 0; j < kDim; ++j) zero &= x[j] == 0.0;
            if (!zero && used < best) best = used;
            return;
        }
        double c = 0.0;
        for (int j = i + 1; j < kDim; ++j) c += m[i][j] * x[j];
        double budget = (best * (1.0 + 1e-12) - used) / d[i];
        if (budget < 0.0) return;
        double r = std::sqrt(budget);
        long long lo = static_cast<long long>(std::ceil(-c - r - 1e-12));
        long long hi = static_cast<long long>(std::floor(-c + r + 1e-12));
        for (long long xi = lo; xi <= hi; ++xi) {
            x[i] = static_cast<double>(xi);
            double t = x[i] + c;
            double next = used + d[i] * t * t;
            if (next <= best * (1.0 + 1e-12)) descend(i - 1, next, x);
        }
        x[i] = 0.0;
    }
};

DMatrix phi2_double(const std::complex<double> a[2][2]) {
    DMatrix r(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            r.at(2 * i, 2 * j) = a[i][j].real();
            r.at(2 * i, 2 * j + 1) = -a[i][j].imag();
            r.at(2 * i + 1, 2 * j) = a[i][j].imag();
            r.at(2 * i + 1, 2 * j + 1) = a[i][j].real();
        }
    return r;
}

DMatrix path_element(const OrbitPath& path, double t, OrbitSide side) {
    std::complex<double> a[2][2] = {{1.0, 0.0}, {0.0, 1.0}};
    // For the transpose-inverse slot phi(A)^-T = phi(A^-1)^T: realify the
    // inverse path element, then transpose.
    double tt = side == OrbitSide::TransposeInverse ? -t : t;
    switch (path.kind) {
        case PathKind::Diagonal:
            a[0][0] = std::exp(tt / 2.0);
            a[1][1] = std::exp(-tt / 2.0);
            break;
        case PathKind::UnipotentReal:
            a[0][1] = tt;
            break;
        case PathKind::UnipotentImag:
            a[0][1] = std::complex<double>(0.0, tt);
            break;
    }
    DMatrix m = phi2_double(a);
    return side == OrbitSide::TransposeInverse ? m.transpose() : m;
}

}  // namespace

void OrbitPath::validate() const {
    if (steps < 2) throw std::invalid_argument("orbit path: steps must be >= 2");
    if (!(t_max >= t_min)) throw std::invalid_argument("orbit path: empty range");
}

double systole2_numeric(const DMatrix& basis_columns) {
    if (basis_columns.dim() != kDim) throw std::invalid_argument("systole2: need 4x4");
    NumBasis nb;
    for (int i = 0; i < kDim; ++i)
        for (int r = 0; r < kDim; ++r) nb.b[i][r] = basis_columns.at(r, i);
    lll_double(nb);

    // Cholesky-free LDL of the reduced Gram matrix.
    double g[kDim][kDim];
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) g[i][j] = dot(nb.b[i], nb.b[j]);
    NumEnum en{};
    for (int i = 0; i < kDim; ++i) {
        double di = g[i][i];
        for (int k = 0; k < i; ++k) di -= en.d[k] * en.m[k][i] * en.m[k][i];
        if (!(di > 0.0)) throw std::runtime_error("systole2: gram not positive definite");
        en.d[i] = di;
        for (int j = i + 1; j < kDim; ++j) {
            double v = g[i][j];
            for (int k = 0; k < i; ++k) v -= en.d[k] * en.m[k][i] * en.m[k][j];
            en.m[i][j] = v / di;
        }
    }
    en.best = g[0][0];
    for (int i = 1; i < kDim; ++i) en.best = std::min(en.best, g[i][i]);
    double x[kDim] = {0, 0, 0, 0};
    en.descend(kDim - 1, 0.0, x);
    return en.best;
}

OrbitTrace orbit_trace(const RMatrix& g1, const OrbitPath& path, OrbitSide side) {
    path.validate();
    if (g1.dim() != kDim) throw std::invalid_argument("orbit_trace: g1 must be 4x4");
    Rational det = g1.det();
    if (det != 1 && det != -1)
        throw std::invalid_argument("orbit_trace: |det g1| must be 1");

    DMatrix base(kDim);
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) base.at(i, j) = to_double(g1.at(i, j));

    OrbitTrace trace;
    trace.samples.reserve(path.steps);
    for (int k = 0; k < path.steps; ++k) {
        double t = path.t_min + (path.t_max - path.t_min) * k / (path.steps - 1);
        OrbitSample s;
        s.t = t;
        try {
            DMatrix lat = path_element(path, t, side) * base;
            s.covol = std::fabs(lat.det());
            s.systole2 = systole2_numeric(lat);
        } catch (const std::exception&) {
            s.ok = false;
        }
        trace.samples.push_back(s);
    }
    return trace;
}

bool stabilizer_probe(const RMatrix& g1, const GMatrix& a) {
    if (g1.dim() != kDim) throw std::invalid_argument("stabilizer_probe: g1 must be 4x4");
    RMatrix p = phi2(a);
    RMatrix gamma = g1.inverse() * p.transpose().inverse() * g1;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            if (gamma.at(i, j).get_den() != 1) return false;
    return gamma.det() == 1;
}

}  // namespace horolat
