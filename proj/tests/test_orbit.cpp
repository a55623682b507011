#include <doctest.h>

#include <cmath>

#include "horolat/lattice_geometry.hpp"
#include "horolat/orbit.hpp"
#include "horolat/realification.hpp"
#include "horolat/verify.hpp"

using namespace horolat;

namespace {

RMatrix random_unimodular4(Rng& rng) {
    std::uniform_int_distribution<int> pos(0, 3);
    std::uniform_int_distribution<long> num(-2, 2);
    std::uniform_int_distribution<long> den(1, 3);
    RMatrix m = RMatrix::identity(4);
    for (int k = 0; k < 5; ++k) {
        int i = pos(rng), j = pos(rng);
        if (i == j) continue;
        RMatrix e = RMatrix::identity(4);
        e.at(i, j) = make_rational(num(rng), den(rng));
        m = m * e;
    }
    return m;
}

DMatrix to_dmatrix(const RMatrix& m) {
    DMatrix d(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) d.at(i, j) = to_double(m.at(i, j));
    return d;
}

}  // namespace

TEST_CASE("path validation") {
    OrbitPath p;
    p.steps = 1;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.steps = 2;
    p.t_max = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);

    RMatrix g = RMatrix::identity(4).scaled(Rational(2));
    CHECK_THROWS_AS(orbit_trace(g, OrbitPath{}, OrbitSide::Left), std::invalid_argument);
}

TEST_CASE("t = 0 systole matches the exact shortest vector") {
    Rng rng(113);
    for (int k = 0; k < 20; ++k) {
        RMatrix g1 = random_unimodular4(rng);
        OrbitPath p{PathKind::UnipotentReal, 0.0, 1.0, 2};
        OrbitTrace tr = orbit_trace(g1, p, OrbitSide::Left);
        REQUIRE(tr.samples.size() == 2);
        REQUIRE(tr.samples[0].ok);
        Rational exact = shortest_vector(ZLattice4(g1)).norm2;
        double e = to_double(exact);
        CHECK(std::fabs(tr.samples[0].systole2 - e) <= 1e-6 * std::max(1.0, e));
    }
}

TEST_CASE("unipotent path at the standard point is flat at 1") {
    OrbitPath p{PathKind::UnipotentReal, 0.0, 10.0, 41};
    OrbitTrace tr = orbit_trace(RMatrix::identity(4), p, OrbitSide::Left);
    for (const OrbitSample& s : tr.samples) {
        REQUIRE(s.ok);
        CHECK(std::fabs(s.systole2 - 1.0) <= 1e-6);
        CHECK(std::fabs(s.covol - 1.0) <= 1e-6);
    }
    OrbitTrace ti = orbit_trace(RMatrix::identity(4),
                                OrbitPath{PathKind::UnipotentImag, 0.0, 10.0, 21},
                                OrbitSide::Left);
    for (const OrbitSample& s : ti.samples) CHECK(std::fabs(s.systole2 - 1.0) <= 1e-6);
}

TEST_CASE("diagonal path decays like e^{-t}") {
    OrbitPath p{PathKind::Diagonal, 0.0, 10.0, 26};
    for (OrbitSide side : {OrbitSide::Left, OrbitSide::TransposeInverse}) {
        OrbitTrace tr = orbit_trace(RMatrix::identity(4), p, side);
        double prev = 1.0;
        for (const OrbitSample& s : tr.samples) {
            REQUIRE(s.ok);
            CHECK(std::fabs(std::log(s.systole2) + s.t) <= std::log(2.0));
            CHECK(s.systole2 <= prev * 2.0);  // monotone up to factor 2
            CHECK(std::fabs(s.covol - 1.0) <= 1e-6);
            prev = s.systole2;
        }
    }
}

TEST_CASE("covolume invariance along a generic trace") {
    Rng rng(127);
    RMatrix g1 = random_unimodular4(rng);
    OrbitPath p{PathKind::Diagonal, 0.0, 6.0, 13};
    OrbitTrace tr = orbit_trace(g1, p, OrbitSide::TransposeInverse);
    double c0 = tr.samples[0].covol;
    REQUIRE(c0 > 0.0);
    for (const OrbitSample& s : tr.samples)
        CHECK(std::fabs(s.covol - c0) / c0 <= 1e-6);
}

TEST_CASE("stabilizer probe examples") {
    RMatrix id = RMatrix::identity(4);
    Rng rng(131);
    for (int k = 0; k < 50; ++k) {
        // words in SL(2,Z[i]) probe true at the standard point
        std::uniform_int_distribution<long> c(-3, 3);
        GMatrix a = GMatrix::identity(2);
        for (int f = 0; f < 3; ++f) {
            int i = f % 2, j = 1 - i;
            a = a * elementary_matrix(2, i, j, GaussianRational(c(rng), c(rng)));
        }
        CHECK(stabilizer_probe(id, a));
    }

    GMatrix half = GMatrix::identity(2);
    half.at(0, 1) = GaussianRational(make_rational(1, 2));
    CHECK_FALSE(stabilizer_probe(id, half));

    RMatrix d = RMatrix::identity(4);
    d.at(0, 0) = 2;
    d.at(3, 3) = make_rational(1, 2);
    GMatrix u = GMatrix::identity(2);
    u.at(0, 1) = GaussianRational(1);
    CHECK(stabilizer_probe(d, u));  // entries rescale by d1/d3 = d2/d4 = 2

    CHECK_THROWS_AS(stabilizer_probe(RMatrix(4), u), std::invalid_argument);
}

TEST_CASE("stabilizer probes form a group") {
    Rng rng(137);
    RMatrix d = RMatrix::identity(4);
    d.at(0, 0) = 2;
    d.at(3, 3) = make_rational(1, 2);
    std::uniform_int_distribution<long> c(-2, 2);
    for (int k = 0; k < 50; ++k) {
        GMatrix a = GMatrix::identity(2), b = GMatrix::identity(2);
        for (int f = 0; f < 2; ++f) {
            a = a * elementary_matrix(2, f % 2, 1 - f % 2, GaussianRational(c(rng), c(rng)));
            b = b * elementary_matrix(2, 1 - f % 2, f % 2, GaussianRational(c(rng), c(rng)));
        }
        for (const RMatrix& g1 : {RMatrix::identity(4), d}) {
            if (stabilizer_probe(g1, a) && stabilizer_probe(g1, b)) {
                CHECK(stabilizer_probe(g1, a * b));
                CHECK(stabilizer_probe(g1, a.inverse()));
            }
        }
    }
}

TEST_CASE("numeric systole agrees with plain expectations") {
    DMatrix two = DMatrix::identity(4);
    for (int i = 0; i < 4; ++i) two.at(i, i) = 2.0;
    CHECK(systole2_numeric(two) == doctest::Approx(4.0));
    CHECK(systole2_numeric(to_dmatrix(RMatrix::identity(4))) == doctest::Approx(1.0));
}
