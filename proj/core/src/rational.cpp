#include "horolat/rational.hpp"

#include <stdexcept>

namespace horolat {

Rational make_rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    std::string buf(s);
    Rational q;
    if (q.set_str(buf, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + buf + "'");
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("rational: zero denominator");
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor_rat(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Integer ceil_rat(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Integer round_rat(const Rational& q) {
    return floor_rat(q + Rational(1, 2));
}

Integer isqrt_floor(const Integer& n) {
    if (sgn(n) < 0) throw std::invalid_argument("isqrt of negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// floor(a + sqrt(b)): with a = p/q and b = m/n,
//   a + sqrt(b) = (p*n + sqrt(q^2*m*n)) / (q*n),
// and floor((A + x)/B) = floor((A + floor(x))/B) for integers A, B > 0.
Integer floor_add_sqrt(const Rational& a, const Rational& b) {
    if (sgn(b) < 0) throw std::invalid_argument("floor_add_sqrt: negative radicand");
    const Integer& p = a.get_num();
    const Integer& q = a.get_den();
    const Integer& m = b.get_num();
    const Integer& n = b.get_den();
    Integer s = isqrt_floor(q * q * m * n);
    Integer num = p * n + s;
    Integer den = q * n;
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

Integer ceil_sub_sqrt(const Rational& a, const Rational& b) {
    return -floor_add_sqrt(-a, b);
}

std::size_t digit_height(const Rational& q) {
    std::size_t dn = mpz_sizeinbase(q.get_num().get_mpz_t(), 10);
    std::size_t dd = mpz_sizeinbase(q.get_den().get_mpz_t(), 10);
    return dn > dd ? dn : dd;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace horolat
