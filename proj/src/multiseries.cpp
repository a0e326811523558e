#include "schroalg/multiseries.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schroalg {

int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

MultiSeries::MultiSeries(int num_vars, int cap) : num_vars_(num_vars), cap_(cap) {
  if (num_vars < 1) throw std::invalid_argument("MultiSeries: need at least one variable");
  if (cap < 0) throw std::invalid_argument("MultiSeries: negative cap");
}

MultiSeries MultiSeries::constant(int num_vars, int cap, const Rational& value) {
  MultiSeries s(num_vars, cap);
  s.insert(Exponents(num_vars, 0), value);
  return s;
}

MultiSeries MultiSeries::variable(int num_vars, int cap, int var) {
  Exponents e(num_vars, 0);
  e.at(var) = 1;
  return monomial(num_vars, cap, std::move(e), Rational(1));
}

MultiSeries MultiSeries::monomial(int num_vars, int cap, const Exponents& exps,
                                  const Rational& coeff) {
  if (static_cast<int>(exps.size()) != num_vars)
    throw std::invalid_argument("MultiSeries: exponent arity mismatch");
  MultiSeries s(num_vars, cap);
  s.insert(exps, coeff);
  return s;
}

Rational MultiSeries::constant_term() const {
  auto it = terms_.find(Exponents(num_vars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiSeries::coeff(const Exponents& exps) const {
  if (static_cast<int>(exps.size()) != num_vars_)
    throw std::invalid_argument("MultiSeries::coeff: exponent arity mismatch");
  if (total_degree(exps) > cap_)
    throw std::out_of_range("MultiSeries::coeff: exponent beyond truncation cap");
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiSeries::insert(const Exponents& exps, const Rational& coeff) {
  if (coeff.is_zero() || total_degree(exps) > cap_) return;
  auto [it, fresh] = terms_.emplace(exps, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiSeries::check_shape(const MultiSeries& o) const {
  if (num_vars_ != o.num_vars_ || cap_ != o.cap_)
    throw std::invalid_argument("MultiSeries: mismatched variable count or cap");
}

MultiSeries MultiSeries::operator-() const {
  MultiSeries out(num_vars_, cap_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
  check_shape(o);
  for (const auto& [e, c] : o.terms_) insert(e, c);
  return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) {
  check_shape(o);
  for (const auto& [e, c] : o.terms_) insert(e, -c);
  return *this;
}

MultiSeries MultiSeries::operator*(const MultiSeries& o) const {
  check_shape(o);
  MultiSeries out(num_vars_, cap_);
  // Cauchy product, truncated: pairs whose degrees sum past the cap are
  // skipped up front.
  struct Entry { const Exponents* e; const Rational* c; int deg; };
  std::vector<Entry> rhs;
  rhs.reserve(o.terms_.size());
  for (const auto& [e, c] : o.terms_) rhs.push_back({&e, &c, total_degree(e)});
  Exponents key(num_vars_);
  for (const auto& [ea, ca] : terms_) {
    const int da = total_degree(ea);
    for (const auto& b : rhs) {
      if (da + b.deg > cap_) continue;
      for (int i = 0; i < num_vars_; ++i) key[i] = ea[i] + (*b.e)[i];
      auto [it, fresh] = out.terms_.try_emplace(key, Rational(0));
      it->second += ca * *b.c;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

MultiSeries MultiSeries::scaled(const Rational& s) const {
  MultiSeries out(num_vars_, cap_);
  if (s.is_zero()) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
  return out;
}

MultiSeries MultiSeries::exp() const {
  if (!constant_term().is_zero())
    throw std::domain_error("MultiSeries::exp: nonzero constant term");
  MultiSeries acc = constant(num_vars_, cap_, Rational(1));
  MultiSeries term = acc;
  for (int n = 1; n <= cap_; ++n) {
    term = (term * *this).scaled(Rational(1, n));
    if (term.is_zero()) break;
    acc += term;
  }
  return acc;
}

MultiSeries MultiSeries::invert_unit() const {
  const Rational c0 = constant_term();
  if (c0.is_zero())
    throw std::domain_error("MultiSeries::invert_unit: zero constant term");
  // a = c0 (1 - u) with val(u) >= 1, so 1/a = (1/c0) sum u^n.
  const Rational inv_c0 = Rational(1) / c0;
  MultiSeries u = constant(num_vars_, cap_, Rational(1)) - scaled(inv_c0);
  MultiSeries acc = constant(num_vars_, cap_, Rational(1));
  MultiSeries term = acc;
  for (int n = 1; n <= cap_; ++n) {
    term *= u;
    if (term.is_zero()) break;
    acc += term;
  }
  return acc.scaled(inv_c0);
}

MultiSeries MultiSeries::substitute(
    const std::vector<std::pair<int, MultiSeries>>& assignments) const {
  std::vector<const MultiSeries*> repl(num_vars_, nullptr);
  for (const auto& [var, s] : assignments) {
    check_shape(s);
    if (var < 0 || var >= num_vars_)
      throw std::invalid_argument("MultiSeries::substitute: bad variable index");
    if (!s.constant_term().is_zero())
      throw std::domain_error(
          "MultiSeries::substitute: substituted series has nonzero constant term");
    repl.at(var) = &s;
  }
  // Memoized powers of each replacement.
  std::vector<std::vector<MultiSeries>> powers(num_vars_);
  auto power = [&](int var, int e) -> const MultiSeries& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(constant(num_vars_, cap_, Rational(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * *repl[var]);
    return cache[e];
  };
  MultiSeries out(num_vars_, cap_);
  for (const auto& [e, c] : terms_) {
    Exponents kept(num_vars_, 0);
    bool any = false;
    for (int i = 0; i < num_vars_; ++i)
      if (repl[i] == nullptr) kept[i] = e[i];
      else if (e[i] > 0) any = true;
    MultiSeries term = monomial(num_vars_, cap_, kept, c);
    if (any)
      for (int i = 0; i < num_vars_; ++i)
        if (repl[i] != nullptr && e[i] > 0) {
          term *= power(i, e[i]);
          if (term.is_zero()) break;
        }
    out += term;
  }
  return out;
}

MultiSeries MultiSeries::derivative(int var) const {
  if (var < 0 || var >= num_vars_)
    throw std::invalid_argument("MultiSeries::derivative: bad variable index");
  MultiSeries out(num_vars_, cap_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    out.terms_.emplace(std::move(d), c * Rational(e[var]));
  }
  return out;
}

MultiSeries MultiSeries::truncated(int new_cap) const {
  MultiSeries out(num_vars_, new_cap);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) <= new_cap) out.terms_.emplace(e, c);
  return out;
}

Rational MultiSeries::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != num_vars_)
    throw std::invalid_argument("MultiSeries::eval: arity mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < num_vars_; ++i)
      if (e[i] > 0) t *= point[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

std::string MultiSeries::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    for (int i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      os << "*" << names.at(i);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

MultiSeries binom_series(int num_vars, int cap, int var, const Rational& c) {
  return binom_of(MultiSeries::variable(num_vars, cap, var), c);
}

MultiSeries binom_of(const MultiSeries& u, const Rational& c) {
  if (!u.constant_term().is_zero())
    throw std::domain_error("binom_of: series must have zero constant term");
  MultiSeries acc = MultiSeries::constant(u.num_vars(), u.cap(), Rational(1));
  MultiSeries term = acc;
  for (int n = 1; n <= u.cap(); ++n) {
    // term_n = term_{n-1} * u * (c + n - 1) / n, i.e. (c)_n / n! u^n.
    term = (term * u).scaled((c + Rational(n - 1)) / Rational(n));
    if (term.is_zero()) break;
    acc += term;
  }
  return acc;
}

}  // namespace schroalg
