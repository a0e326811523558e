#include "schroalg/rational.hpp"

#include <cctype>

namespace schroalg {

Rational Rational::from_string(std::string_view s) {
  auto valid = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num, den = "1";
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    num = std::string(s);
  } else {
    num = std::string(s.substr(0, slash));
    den = std::string(s.substr(slash + 1));
  }
  if (!valid(num) || !valid(den))
    throw std::invalid_argument("Rational: malformed value '" + std::string(s) + "'");
  mpq_class q{mpz_class(num), mpz_class(den)};
  if (q.get_den() == 0)
    throw std::invalid_argument("Rational: zero denominator in '" + std::string(s) + "'");
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw std::domain_error("Rational: negative power of zero");
    return (Rational(1) / *this).pow(-e);
  }
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(std::move(r));
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

Rational factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(z));
}

Rational binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(z));
}

Rational rising_factorial(const Rational& c, long n) {
  Rational r(1);
  for (long i = 0; i < n; ++i) r *= c + Rational(i);
  return r;
}

Rational falling_factorial(long n, long k) {
  if (k > n) return Rational(0);
  Rational r(1);
  for (long i = 0; i < k; ++i) r *= Rational(n - i);
  return r;
}

Rational double_factorial(long n) {
  if (n < -1 || n % 2 == 0) throw std::domain_error("double_factorial: expects odd n >= -1");
  Rational r(1);
  for (long i = n; i >= 1; i -= 2) r *= Rational(i);
  return r;
}

}  // namespace schroalg
