#ifndef KRING_POLY_HPP
#define KRING_POLY_HPP

#include "kring/lattice.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace kring {

struct Monomial {
  std::vector<int> exp;  // one exponent per variable

  Monomial() = default;
  explicit Monomial(int vars) : exp(size_t(vars), 0) {}
  static Monomial of_variable(int vars, int i, int power = 1);

  int degree() const;
  uint64_t support_mask() const;
  bool operator==(const Monomial&) const = default;
};

// Graded lexicographic term order: lower total degree first, ties broken so
// that powers of earlier variables come first within a degree.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// The ambient ring of every computation: Z[y_0..y_{d-1}] with all monomials
// killed whose support is not a face of the nerve or whose total degree
// exceeds the bound.
struct TruncatedRing {
  int vars = 0;
  int degree_bound = 0;
  std::unordered_set<uint64_t> face_masks;  // downward closed, contains 0

  bool is_face(uint64_t mask) const { return face_masks.count(mask) != 0; }
  bool admits(const Monomial& m) const {
    return m.degree() <= degree_bound && is_face(m.support_mask());
  }
};

class IntPolynomial {
 public:
  using TermMap = std::map<Monomial, Int, GrlexLess>;

  IntPolynomial() = default;
  explicit IntPolynomial(int vars) : vars_(vars) {}
  static IntPolynomial constant(int vars, Int c);
  static IntPolynomial variable(int vars, int i);
  static IntPolynomial monomial(Monomial m, Int c);

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Int coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Int& c);  // accumulates; drops zeros

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator-(IntPolynomial a);
  friend IntPolynomial operator*(const Int& c, IntPolynomial p);
  bool operator==(const IntPolynomial&) const = default;

 private:
  int vars_ = 0;
  TermMap terms_;
};

// Canonical representative in the truncated quotient: terms of excessive
// degree or with non-face support are deleted.
IntPolynomial reduce(const IntPolynomial& p, const TruncatedRing& ring);

// reduce(p*q); products falling outside the ring are never materialized.
IntPolynomial multiply(const IntPolynomial& p, const IntPolynomial& q, const TruncatedRing& ring);

// prod_i (1 - y_{v_i})^{a_i}, fully reduced.  Binomial powers are expanded
// with exact coefficients; reduction is interleaved after every factor, so
// intermediates stay inside the finite monomial universe.
IntPolynomial power_product(const std::vector<std::pair<int, int>>& bases,
                            const TruncatedRing& ring);

// Sum of the terms of minimal total degree.  Throws std::invalid_argument on
// the zero polynomial.
IntPolynomial initial_form(const IntPolynomial& p);

// Deterministic rendering: terms in canonical order with explicit signs,
// e.g. "1 - 2*y0 + y0^2".
std::string to_string(const IntPolynomial& p);
std::string to_string(const Monomial& m);

}  // namespace kring

#endif
