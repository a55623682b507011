#include "horolat/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "horolat/discreteness.hpp"
#include "horolat/iwasawa.hpp"
#include "horolat/realification.hpp"

namespace horolat {

Rational random_rational(Rng& rng, long max_num, long max_den) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return make_rational(num(rng), den(rng));
}

GaussianRational random_gaussian(Rng& rng, long max_num, long max_den) {
    return {random_rational(rng, max_num, max_den), random_rational(rng, max_num, max_den)};
}

GMatrix random_sln(Rng& rng, int n, int factors, long max_num, long max_den) {
    std::uniform_int_distribution<int> pos(0, n - 1);
    GMatrix m = GMatrix::identity(n);
    for (int k = 0; k < factors; ++k) {
        int i = pos(rng), j = pos(rng);
        if (i == j) j = (j + 1) % n;
        m = m * elementary_matrix(n, i, j, random_gaussian(rng, max_num, max_den));
    }
    return m;
}

ZLattice4 random_integer_lattice(Rng& rng) {
    std::uniform_int_distribution<long> entry(-5, 5);
    for (;;) {
        RMatrix m(4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = Rational(entry(rng));
        if (sgn(m.det()) != 0) return ZLattice4(std::move(m));
    }
}

GMatrix random_ball_element(Rng& rng) {
    const Rational& c2 = EngineConfig::ball_sigma2();
    std::uniform_int_distribution<int> pos(0, 2);
    std::uniform_int_distribution<long> num(-2, 2);
    std::uniform_int_distribution<long> den(60, 300);
    for (;;) {
        GMatrix m = GMatrix::identity(3);
        for (int k = 0; k < 2; ++k) {
            int i = pos(rng), j = pos(rng);
            if (i == j) continue;
            long p = num(rng);
            if (p == 0) p = 1;
            GaussianRational r(make_rational(p, den(rng)), make_rational(num(rng), den(rng)));
            m = m * elementary_matrix(3, i, j, r);
        }
        if (m.is_identity()) continue;
        if (sigma2(m) < c2) return m;
    }
}

SuiteReport verify_contraction(std::size_t n, std::uint64_t seed) {
    SuiteReport rep{"contraction"};
    rep.total = n;
    Rng rng(seed);
    for (std::size_t k = 0; k < n; ++k) {
        GMatrix a = random_ball_element(rng);
        GMatrix b = random_ball_element(rng);
        ContractionResult r = contraction_check(a, b);
        if (r.ok) {
            ++rep.passed;
        } else if (rep.first_failure.empty()) {
            rep.first_failure = "pair #" + std::to_string(k) +
                                ": sigma2([a,b]) = " + rational_str(r.s_ab);
        }
    }
    return rep;
}

namespace {

// Independent box search used as the in-product cross-check: coefficient
// bounds |x_i|^2 <= bound * (G^-1)_ii, exact floor square roots. Runs in
// reduced-basis coordinates so the box stays small; the minimum itself is
// basis-independent.
Rational box_min_norm2(const ZLattice4& L_in) {
    ZLattice4 L = reduced_basis(L_in);
    const RMatrix& g = L.gram();
    RMatrix ginv = g.inverse();
    Rational bound = g.at(0, 0);
    for (int i = 1; i < 4; ++i) bound = std::min(bound, g.at(i, i));
    long long b[4];
    for (int i = 0; i < 4; ++i) {
        Integer bi = floor_add_sqrt(Rational(0), bound * ginv.at(i, i));
        if (!bi.fits_slong_p()) throw std::overflow_error("box search too large");
        b[i] = bi.get_si();
    }
    bool integral = true;
    for (int i = 0; i < 4 && integral; ++i)
        for (int j = 0; j < 4 && integral; ++j) integral = g.at(i, j).get_den() == 1;

    if (integral) {
        long long gi[4][4];
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) gi[i][j] = g.at(i, j).get_num().get_si();
        long long best = bound.get_num().get_si();
        std::array<long long, 4> x{};
        for (x[0] = -b[0]; x[0] <= b[0]; ++x[0])
            for (x[1] = -b[1]; x[1] <= b[1]; ++x[1])
                for (x[2] = -b[2]; x[2] <= b[2]; ++x[2]) {
                    long long a = 0, bb = 0;
                    for (int i = 0; i < 3; ++i)
                        for (int j = 0; j < 3; ++j) a += gi[i][j] * x[i] * x[j];
                    for (int j = 0; j < 3; ++j) bb += 2 * gi[3][j] * x[j];
                    for (x[3] = -b[3]; x[3] <= b[3]; ++x[3]) {
                        if (x == std::array<long long, 4>{}) continue;
                        long long q = a + bb * x[3] + gi[3][3] * x[3] * x[3];
                        if (q < best) best = q;
                    }
                    x[3] = 0;
                }
        return Rational(static_cast<long>(best));
    }

    Rational best = bound;
    std::array<long long, 4> x{};
    for (x[0] = -b[0]; x[0] <= b[0]; ++x[0])
        for (x[1] = -b[1]; x[1] <= b[1]; ++x[1])
            for (x[2] = -b[2]; x[2] <= b[2]; ++x[2])
                for (x[3] = -b[3]; x[3] <= b[3]; ++x[3]) {
                    if (x == std::array<long long, 4>{}) continue;
                    Rational q = L.norm2_of(x);
                    if (q < best) best = q;
                }
    return best;
}

}  // namespace

SuiteReport verify_hermite(std::size_t n, std::uint64_t seed) {
    SuiteReport rep{"hermite"};
    rep.total = n;
    Rng rng(seed);
    for (std::size_t k = 0; k < n; ++k) {
        ZLattice4 L = random_integer_lattice(rng);
        SvpResult sv = shortest_vector(L);
        bool ok = hermite_check(L, sv.norm2) && sv.norm2 == box_min_norm2(L) &&
                  sv.norm2 == L.norm2_of(sv.coeffs);
        if (ok) {
            ++rep.passed;
        } else if (rep.first_failure.empty()) {
            rep.first_failure =
                "lattice #" + std::to_string(k) + ": norm2 = " + rational_str(sv.norm2);
        }
    }
    return rep;
}

SuiteReport verify_phi(std::size_t n, std::uint64_t seed) {
    SuiteReport rep{"phi"};
    rep.total = n;
    Rng rng(seed);
    for (std::size_t k = 0; k < n; ++k) {
        GMatrix a = random_sln(rng, 2, 4, 6, 6);
        GMatrix b = random_sln(rng, 2, 4, 6, 6);
        RMatrix pa = phi2(a), pb = phi2(b);
        bool ok = phi2(a * b) == pa * pb && pa.det() == 1 && centralizes_T(pa);
        if (ok) {
            ++rep.passed;
        } else if (rep.first_failure.empty()) {
            rep.first_failure = "pair #" + std::to_string(k);
        }
    }
    return rep;
}

SuiteReport verify_iwasawa(std::size_t n, std::uint64_t seed) {
    SuiteReport rep{"iwasawa"};
    rep.total = n;
    Rng rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> diag(0.5, 10.0);
    auto random_orthogonal = [&](int dim) {
        for (;;) {
            DMatrix m(dim);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) m.at(i, j) = unit(rng);
            try {
                return iwasawa(m, 1e-6).k;
            } catch (const std::runtime_error&) {
            }
        }
    };
    for (std::size_t k = 0; k < n; ++k) {
        int dim = 2 + static_cast<int>(k % 3);  // dims 2..4
        DMatrix a(dim);
        for (int i = 0; i < dim; ++i) a.at(i, i) = diag(rng);
        DMatrix g = random_orthogonal(dim) * a * random_orthogonal(dim);
        KanDecomposition kan = iwasawa(g);
        double recon = (kan.k * kan.a * kan.n).frob_dist(g);
        double ortho = (kan.k.transpose() * kan.k).frob_dist(DMatrix::identity(dim));
        bool shape_ok = true;
        for (int i = 0; i < dim && shape_ok; ++i) shape_ok = kan.a.at(i, i) > 0.0;
        if (recon <= 1e-9 && ortho <= 1e-9 && shape_ok) {
            ++rep.passed;
        } else if (rep.first_failure.empty()) {
            rep.first_failure = "matrix #" + std::to_string(k) +
                                ": recon = " + std::to_string(recon);
        }
    }
    return rep;
}

SuiteReport verify_siegel(std::size_t n, std::uint64_t seed) {
    SuiteReport rep{"siegel"};
    rep.total = n;
    Rng rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    std::uniform_real_distribution<double> stretch(0.2, 5.0);
    std::uniform_real_distribution<double> shear(-3.0, 3.0);
    for (std::size_t k = 0; k < n; ++k) {
        double th = angle(rng), r = stretch(rng), x = shear(rng);
        DMatrix g(2);
        g.at(0, 0) = std::cos(th) * r;
        g.at(0, 1) = std::cos(th) * r * x - std::sin(th) / r;
        g.at(1, 0) = std::sin(th) * r;
        g.at(1, 1) = std::sin(th) * r * x + std::cos(th) / r;
        auto gamma = siegel_reduce2(g);
        DMatrix gm(2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) gm.at(i, j) = static_cast<double>(gamma[i][j]);
        long long det = gamma[0][0] * gamma[1][1] - gamma[0][1] * gamma[1][0];
        if (det == 1 && siegel_member(g * gm, SiegelParams::canonical())) {
            ++rep.passed;
        } else if (rep.first_failure.empty()) {
            rep.first_failure = "sample #" + std::to_string(k);
        }
    }
    return rep;
}

SuiteReport verify_adjoint(std::size_t n, std::uint64_t seed) {
    SuiteReport rep{"adjoint"};
    rep.total = n;
    Rng rng(seed);
    GMatrix gram = adjoint_gram();
    for (std::size_t k = 0; k < n; ++k) {
        GMatrix a = random_sln(rng, 2, 4, 6, 6);
        GMatrix ad = adjoint_so3(a);
        bool ok = ad.transpose() * gram * ad == gram;
        if (k == 0) {
            GMatrix minus_i = GMatrix::identity(2).scaled(GaussianRational(-1));
            ok = ok && adjoint_so3(minus_i).is_identity() &&
                 adjoint_so3(GMatrix::identity(2)).is_identity();
        }
        if (ok) {
            ++rep.passed;
        } else if (rep.first_failure.empty()) {
            rep.first_failure = "matrix #" + std::to_string(k);
        }
    }
    return rep;
}

std::vector<SuiteReport> run_suites(const std::string& name, std::uint64_t seed) {
    std::vector<SuiteReport> out;
    bool all = name == "all";
    bool known = all;
    auto want = [&](const char* suite) { return all || name == suite; };
    if (want("contraction")) { out.push_back(verify_contraction(1000, seed)); known = true; }
    if (want("hermite")) { out.push_back(verify_hermite(200, seed)); known = true; }
    if (want("phi")) { out.push_back(verify_phi(500, seed)); known = true; }
    if (want("iwasawa")) { out.push_back(verify_iwasawa(100, seed)); known = true; }
    if (want("siegel")) { out.push_back(verify_siegel(100, seed)); known = true; }
    if (want("adjoint")) { out.push_back(verify_adjoint(200, seed)); known = true; }
    if (!known)
        throw std::invalid_argument(
            "unknown suite '" + name +
            "' (expected contraction|hermite|phi|iwasawa|siegel|adjoint|all)");
    return out;
}

}  // namespace horolat
