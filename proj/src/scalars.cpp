#include <cctype>

#include "qmod/error.hpp"
#include "qmod/gaussian.hpp"
#include "qmod/rational.hpp"

namespace qmod {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) fail("rational literal is empty");
  size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_digit = false, seen_slash = false;
  for (size_t i = start; i < s.size(); ++i) {
    if (s[i] == '/') {
      if (seen_slash || !seen_digit || i + 1 == s.size()) fail("malformed rational '" + s + "'");
      seen_slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail("malformed rational '" + s + "'");
    seen_digit = true;
  }
  if (!seen_digit) fail("malformed rational '" + s + "'");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) fail("malformed rational '" + s + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) fail("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return mpq_get_d(q.get_mpq_t()); }

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  if (x == 0) return Rational(0);
  Integer num = x.get_num(), den = x.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn) / Rational(rd);
}

Rational ceil_sqrt(const Rational& x, unsigned k) {
  if (x < 0) fail("ceil_sqrt of a negative rational");
  if (x == 0) return Rational(0);
  // Smallest m with (m/2^k)^2 >= x, i.e. m^2 * den >= num * 4^k.
  Integer num = x.get_num(), den = x.get_den();
  Integer target = num << (2 * k);
  Integer q, m;
  mpz_cdiv_q(q.get_mpz_t(), target.get_mpz_t(), den.get_mpz_t());
  mpz_sqrt(m.get_mpz_t(), q.get_mpz_t());
  while (m * m * den < target) m += 1;
  Rational r = Rational(m) / Rational(Integer(1) << k);
  r.canonicalize();
  return r;
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  Rational n2 = b.norm2();
  if (n2 == 0) fail("division by zero Gaussian rational");
  GaussianRational num = a * b.conj();
  return {num.re / n2, num.im / n2};
}

std::string gaussian_to_string(const GaussianRational& z) {
  if (z.is_zero()) return "0";
  std::string out;
  if (z.re != 0) out += rational_to_string(z.re);
  if (z.im != 0) {
    if (!out.empty()) out += (z.im > 0) ? " + " : " - ";
    else if (z.im < 0) out += "-";
    Rational m = abs(z.im);
    if (m != 1) out += rational_to_string(m) + "*";
    out += "i";
  }
  return out;
}

}  // namespace qmod
