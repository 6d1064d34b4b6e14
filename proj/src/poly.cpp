#include "kring/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kring {

Monomial Monomial::of_variable(int vars, int i, int power) {
  Monomial m(vars);
  m.exp.at(size_t(i)) = power;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exp) d += e;
  return d;
}

uint64_t Monomial::support_mask() const {
  uint64_t m = 0;
  for (size_t i = 0; i < exp.size(); ++i)
    if (exp[i] > 0) m |= uint64_t(1) << i;
  return m;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exp > b.exp;  // earlier-variable powers first within a degree
}

IntPolynomial IntPolynomial::constant(int vars, Int c) {
  IntPolynomial p(vars);
  p.add_term(Monomial(vars), c);
  return p;
}

IntPolynomial IntPolynomial::variable(int vars, int i) {
  IntPolynomial p(vars);
  p.add_term(Monomial::of_variable(vars, i), 1);
  return p;
}

IntPolynomial IntPolynomial::monomial(Monomial m, Int c) {
  IntPolynomial p(int(m.exp.size()));
  p.add_term(std::move(m), c);
  return p;
}

Int IntPolynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

void IntPolynomial::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

IntPolynomial operator*(const Int& c, IntPolynomial p) {
  if (c == 0) return IntPolynomial(p.vars());
  for (auto& [m, k] : p.terms_) k *= c;
  return p;
}

IntPolynomial reduce(const IntPolynomial& p, const TruncatedRing& ring) {
  IntPolynomial out(p.vars());
  for (const auto& [m, c] : p.terms())
    if (ring.admits(m)) out.add_term(m, c);
  return out;
}

IntPolynomial multiply(const IntPolynomial& p, const IntPolynomial& q, const TruncatedRing& ring) {
  if (p.vars() != q.vars()) throw std::invalid_argument("multiply: variable count mismatch");
  IntPolynomial out(p.vars());
  Monomial prod(p.vars());
  for (const auto& [mp, cp] : p.terms()) {
    const int dp = mp.degree();
    for (const auto& [mq, cq] : q.terms()) {
      if (dp + mq.degree() > ring.degree_bound) continue;
      for (size_t i = 0; i < prod.exp.size(); ++i) prod.exp[i] = mp.exp[i] + mq.exp[i];
      if (!ring.is_face(prod.support_mask())) continue;
      out.add_term(prod, cp * cq);
    }
  }
  return out;
}

IntPolynomial power_product(const std::vector<std::pair<int, int>>& bases,
                            const TruncatedRing& ring) {
  IntPolynomial acc = IntPolynomial::constant(ring.vars, 1);
  Int binom;
  for (const auto& [var, power] : bases) {
    if (power < 1) throw std::invalid_argument("power_product: exponents must be positive");
    if (var < 0 || var >= ring.vars) throw std::invalid_argument("power_product: bad variable");
    IntPolynomial factor(ring.vars);
    for (int k = 0; k <= std::min(power, ring.degree_bound); ++k) {
      mpz_bin_uiui(binom.get_mpz_t(), unsigned(power), unsigned(k));
      if (k % 2) binom = -binom;
      factor.add_term(Monomial::of_variable(ring.vars, var, k), binom);
    }
    acc = multiply(acc, reduce(factor, ring), ring);
  }
  return acc;
}

IntPolynomial initial_form(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("initial_form: zero polynomial");
  IntPolynomial out(p.vars());
  const int d0 = p.terms().begin()->first.degree();
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != d0) break;  // terms are ordered by degree
    out.add_term(m, c);
  }
  return out;
}

std::string to_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!first) os << '*';
    os << 'y' << i;
    if (m.exp[i] > 1) os << '^' << m.exp[i];
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Int a = abs(c);
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (m.degree() == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << '*';
      os << to_string(m);
    }
  }
  return os.str();
}

}  // namespace kring
