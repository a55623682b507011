#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "horolat/lattice_geometry.hpp"
#include "horolat/matrix.hpp"

namespace horolat {

struct SuiteReport {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
    std::string first_failure;  // empty when clean
    bool ok() const { return passed == total; }
};

// Randomized property suites. Deterministic for a fixed seed.
SuiteReport verify_contraction(std::size_t n, std::uint64_t seed);
SuiteReport verify_hermite(std::size_t n, std::uint64_t seed);
SuiteReport verify_phi(std::size_t n, std::uint64_t seed);
SuiteReport verify_iwasawa(std::size_t n, std::uint64_t seed);
SuiteReport verify_siegel(std::size_t n, std::uint64_t seed);
SuiteReport verify_adjoint(std::size_t n, std::uint64_t seed);

/// Runs one named suite ("contraction", "hermite", "phi", "iwasawa",
/// "siegel", "adjoint") at its standard size, or all of them for "all".
/// Throws std::invalid_argument for an unknown name.
std::vector<SuiteReport> run_suites(const std::string& name, std::uint64_t seed);

// Random exact objects used by the suites (and handy in tests).
using Rng = std::mt19937_64;
Rational random_rational(Rng& rng, long max_num, long max_den);
GaussianRational random_gaussian(Rng& rng, long max_num, long max_den);
/// Product of `factors` random elementary matrices; always det 1.
GMatrix random_sln(Rng& rng, int n, int factors, long max_num, long max_den);
/// Random 4x4 integer-entry lattice, entries in [-5, 5], nonsingular.
ZLattice4 random_integer_lattice(Rng& rng);
/// Random element of SL(3,Q(i)) with sigma2 < (1/16)^2, built from small
/// elementary factors (rejection sampled, exact check).
GMatrix random_ball_element(Rng& rng);

}  // namespace horolat
