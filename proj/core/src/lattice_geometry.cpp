#include "horolat/lattice_geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace horolat {

namespace {

constexpr int kDim = 4;

// Internal LLL state: basis vectors as rows plus the unimodular transform
// taking input columns to reduced columns (reduced = input * U).
struct LLLState {
    std::vector<std::vector<Rational>> b;  // b[i] = i-th lattice vector
    IntRows u;                             // 4x4, columns track the vectors

    explicit LLLState(const RMatrix& basis_columns) {
        b.assign(kDim, std::vector<Rational>(kDim));
        for (int i = 0; i < kDim; ++i)
            for (int r = 0; r < kDim; ++r) b[i][r] = basis_columns.at(r, i);
        u.assign(kDim, std::vector<Integer>(kDim, Integer(0)));
        for (int i = 0; i < kDim; ++i) u[i][i] = 1;
    }

    void translate(int k, int j, const Integer& r) {  // b_k -= r * b_j
        Rational rq(r);
        for (int c = 0; c < kDim; ++c) b[k][c] -= rq * b[j][c];
        for (int c = 0; c < kDim; ++c) u[c][k] -= r * u[c][j];
    }

    void swap_vectors(int k, int j) {
        std::swap(b[k], b[j]);
        for (int c = 0; c < kDim; ++c) std::swap(u[c][k], u[c][j]);
    }

    RMatrix columns() const {
        RMatrix m(kDim);
        for (int i = 0; i < kDim; ++i)
            for (int r = 0; r < kDim; ++r) m.at(r, i) = b[i][r];
        return m;
    }
};

Rational dot(const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Rational s(0);
    for (int i = 0; i < kDim; ++i) s += x[i] * y[i];
    return s;
}

struct GramSchmidt {
    std::array<Rational, kDim> norm2;                   // ||b*_i||^2
    std::array<std::array<Rational, kDim>, kDim> mu;    // mu[i][j], j < i

    explicit GramSchmidt(const std::vector<std::vector<Rational>>& b) {
        std::vector<std::vector<Rational>> star(b);
        for (int i = 0; i < kDim; ++i) {
            for (int j = 0; j < i; ++j) {
                mu[i][j] = dot(b[i], star[j]) / norm2[j];
                for (int c = 0; c < kDim; ++c) star[i][c] -= mu[i][j] * star[j][c];
            }
            norm2[i] = dot(star[i], star[i]);
            if (sgn(norm2[i]) == 0)
                throw std::invalid_argument("lll: rank-deficient basis");
        }
    }
};

const Rational kDelta(3, 4);

// Exact LLL, delta = 3/4. n = 4 is small enough to recompute the
// Gram-Schmidt data from scratch whenever it is consumed.
void lll_reduce(LLLState& s) {
    int k = 1;
    while (k < kDim) {
        GramSchmidt gs(s.b);
        for (int j = k - 1; j >= 0; --j) {
            Integer r = round_rat(gs.mu[k][j]);
            if (sgn(r) != 0) {
                s.translate(k, j, r);
                for (int l = 0; l < j; ++l) gs.mu[k][l] -= Rational(r) * gs.mu[j][l];
                gs.mu[k][j] -= Rational(r);
            }
        }
        if (gs.norm2[k] >= (kDelta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.norm2[k - 1]) {
            ++k;
        } else {
            s.swap_vectors(k, k - 1);
            k = std::max(k - 1, 1);
        }
    }
}

// Unit-upper-triangular LDL^T of a positive definite Gram matrix:
// G = M^T D M with M unit upper triangular, all rational, no square roots.
struct LdlData {
    std::array<Rational, kDim> d;
    std::array<std::array<Rational, kDim>, kDim> m;  // m[i][j], j > i
};

LdlData ldl(const RMatrix& gram) {
    LdlData out;
    std::array<std::array<Rational, kDim>, kDim> g;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) g[i][j] = gram.at(i, j);
    for (int i = 0; i < kDim; ++i) {
        Rational di = g[i][i];
        for (int k = 0; k < i; ++k) di -= out.d[k] * out.m[k][i] * out.m[k][i];
        if (sgn(di) <= 0) throw std::invalid_argument("ldl: gram not positive definite");
        out.d[i] = di;
        for (int j = i + 1; j < kDim; ++j) {
            Rational v = g[i][j];
            for (int k = 0; k < i; ++k) v -= out.d[k] * out.m[k][i] * out.m[k][j];
            out.m[i][j] = v / di;
        }
    }
    return out;
}

long long to_ll(const Integer& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("svp: coefficient out of range");
    return z.get_si();
}

// Depth-first enumeration of Q(x) <= bound in the LDL coordinates. Keeps
// every coefficient vector attaining the running minimum so ties can be
// broken deterministically afterwards.
struct Enumerator {
    LdlData l;
    Rational best;
    std::vector<std::array<long long, kDim>> argmins;
    std::array<long long, kDim> x{};
    std::array<Rational, kDim> center{};  // c_i = sum_{j>i} m[i][j] x_j

    explicit Enumerator(LdlData ld, Rational bound) : l(std::move(ld)), best(std::move(bound)) {}

    void run() { descend(kDim - 1, Rational(0)); }

    void descend(int i, const Rational& used) {
        if (i < 0) {
            if (x == std::array<long long, kDim>{}) return;
            if (used < best) {
                best = used;
                argmins.assign(1, x);
            } else if (used == best) {
                argmins.push_back(x);
            }
            return;
        }
        Rational c(0);
        for (int j = i + 1; j < kDim; ++j)
            if (x[j] != 0) c += l.m[i][j] * Rational(static_cast<long>(x[j]));
        center[i] = c;
        Rational budget = (best - used) / l.d[i];
        if (sgn(budget) < 0) return;
        long long lo = to_ll(ceil_sub_sqrt(-c, budget));
        long long hi = to_ll(floor_add_sqrt(-c, budget));
        for (long long xi = lo; xi <= hi; ++xi) {
            x[i] = xi;
            Rational t = Rational(static_cast<long>(xi)) + c;
            Rational next = used + l.d[i] * t * t;
            if (next <= best) descend(i - 1, next);
        }
        x[i] = 0;
    }
};

std::array<long long, kDim> map_coeffs(const IntRows& u, const std::array<long long, kDim>& xr) {
    std::array<long long, kDim> out{};
    for (int r = 0; r < kDim; ++r) {
        Integer s(0);
        for (int c = 0; c < kDim; ++c) s += u[r][c] * Integer(static_cast<long>(xr[c]));
        out[r] = to_ll(s);
    }
    return out;
}

void normalize_sign(std::array<long long, kDim>& v) {
    for (long long c : v) {
        if (c > 0) return;
        if (c < 0) {
            for (auto& e : v) e = -e;
            return;
        }
    }
}

}  // namespace

ZLattice4 ::ZLattice4(RMatrix basis_columns) : basis_(std::move(basis_columns)) {
    if (basis_.dim() != kDim) throw std::invalid_argument("zlattice4: need a 4x4 basis");
    gram_ = basis_.transpose() * basis_;
    Rational d = basis_.det();
    if (sgn(d) == 0) throw std::invalid_argument("zlattice4: singular basis");
    covol_ = sgn(d) < 0 ? -d : d;
}

Rational ZLattice4::norm2_of(const std::array<long long, 4>& coeffs) const {
    Rational s(0);
    for (int i = 0; i < kDim; ++i) {
        if (coeffs[i] == 0) continue;
        for (int j = 0; j < kDim; ++j) {
            if (coeffs[j] == 0) continue;
            s += gram_.at(i, j) * Rational(static_cast<long>(coeffs[i])) * Rational(static_cast<long>(coeffs[j]));
        }
    }
    return s;
}

LatticeCanonical ZLattice4::canonical() const {
    return lattice_canonical_rows(basis_.transpose());
}

ZLattice4 ZLattice4::standard() { return ZLattice4(RMatrix::identity(kDim)); }

ZLattice4 ZLattice4::diagonal(const std::array<Rational, 4>& d) {
    RMatrix m(kDim);
    for (int i = 0; i < kDim; ++i) m.at(i, i) = d[i];
    return ZLattice4(m);
}

SvpResult shortest_vector(const ZLattice4& L) {
    LLLState state(L.basis());
    lll_reduce(state);
    RMatrix reduced = state.columns();
    RMatrix gram = reduced.transpose() * reduced;

    Rational bound = gram.at(0, 0);
    for (int i = 1; i < kDim; ++i) bound = std::min(bound, gram.at(i, i));

    Enumerator en(ldl(gram), bound);
    en.run();
    if (en.argmins.empty()) throw std::logic_error("svp: enumeration found nothing");

    std::vector<std::array<long long, kDim>> cands;
    cands.reserve(en.argmins.size());
    for (const auto& xr : en.argmins) {
        auto x = map_coeffs(state.u, xr);
        normalize_sign(x);
        cands.push_back(x);
    }
    auto bestit = std::min_element(cands.begin(), cands.end());
    return SvpResult{*bestit, en.best};
}

bool hermite_check(const ZLattice4& L) { return hermite_check(L, shortest_vector(L).norm2); }

bool hermite_check(const ZLattice4& L, const Rational& norm2) {
    // min||v|| <= (2/sqrt3)^{3/2} covol^{1/4}, fourth power: 27 s^2 <= 64 covol.
    return Rational(27) * norm2 * norm2 <= Rational(64) * L.covol();
}

MahlerReport mahler_certificate(const std::vector<ZLattice4>& family,
                                const Rational& det_bound, const Rational& eps2) {
    if (sgn(eps2) <= 0) throw std::invalid_argument("mahler: eps2 must be positive");
    MahlerReport report;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const ZLattice4& L = family[i];
        if (L.covol() > det_bound) {
            report.pass = false;
            report.violations.push_back({i, 'a', L.covol(), std::nullopt});
        }
        SvpResult sv = shortest_vector(L);
        if (sv.norm2 < eps2) {
            report.pass = false;
            report.violations.push_back({i, 'b', sv.norm2, sv});
        }
    }
    return report;
}

ZLattice4 reduced_basis(const ZLattice4& L) {
    LLLState state(L.basis());
    lll_reduce(state);
    return ZLattice4(state.columns());
}

bool is_lll_reduced(const ZLattice4& L) {
    LLLState state(L.basis());
    GramSchmidt gs(state.b);
    for (int i = 1; i < kDim; ++i)
        for (int j = 0; j < i; ++j) {
            Rational two_mu = Rational(2) * gs.mu[i][j];
            if (two_mu > 1 || two_mu < -1) return false;
        }
    for (int k = 1; k < kDim; ++k)
        if (gs.norm2[k] < (kDelta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.norm2[k - 1])
            return false;
    return true;
}

}  // namespace horolat
