#ifndef CURVELAB_INTPOLY_HPP
#define CURVELAB_INTPOLY_HPP

#include <vector>

#include "curvelab/dyadic.hpp"

namespace curvelab {

// Dense univariate polynomial over Z. Coefficient i is the coefficient of
// x^i; empty vector is the zero polynomial; otherwise the top coefficient is
// nonzero.
class IntPoly1 {
 public:
  IntPoly1() = default;
  explicit IntPoly1(std::vector<mpz_class> c) : c_(std::move(c)) { trim(); }
  IntPoly1(std::initializer_list<long> c);
  static IntPoly1 constant(const mpz_class& v);
  static IntPoly1 monomial(int power, const mpz_class& v);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return (int)c_.size() - 1; }  // -1 for zero
  const mpz_class& lc() const { return c_.back(); }
  mpz_class coeff(int i) const {
    return (i >= 0 && i < (int)c_.size()) ? c_[i] : mpz_class(0);
  }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  IntPoly1 operator+(const IntPoly1& o) const;
  IntPoly1 operator-(const IntPoly1& o) const;
  IntPoly1 operator*(const IntPoly1& o) const;
  IntPoly1 operator-() const;
  bool operator==(const IntPoly1& o) const { return c_ == o.c_; }

  IntPoly1 scaled(const mpz_class& s) const;
  IntPoly1 shifted_powers(int k) const;  // multiply by x^k
  IntPoly1 derivative() const;

  mpz_class eval(const mpz_class& x) const;
  Dyadic eval(const Dyadic& x) const;              // exact
  DyadicComplex eval(const DyadicComplex& x) const;  // exact
  int sign_at(const Dyadic& x) const { return eval(x).sign(); }

  mpz_class content() const;  // nonnegative; 0 for zero polynomial
  IntPoly1 primitive_part() const;
  // primitive and with positive leading coefficient
  IntPoly1 normalized() const;

  mpz_class norm_one() const;
  mpz_class norm_inf() const;
  // smallest t >= 1 with norm_inf <= 2^t
  long magnitude_exp() const;

  // Exact division; throws Internal if the division leaves a remainder.
  IntPoly1 divexact(const IntPoly1& d) const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// gcd over Z[x], normalized (primitive, positive leading coefficient),
// computed by a primitive pseudo-remainder sequence. gcd(0, g) = g.
IntPoly1 gcd_1(const IntPoly1& f, const IntPoly1& g);

// f / gcd(f, f'), normalized: same distinct roots, all simple.
IntPoly1 squarefree_part_1(const IntPoly1& f);

// Dyadic B with every complex root of f strictly inside |z| < B.
// B = 1 + max_i |f_i| / |f_d| rounded up slightly.
Dyadic cauchy_root_bound_1(const IntPoly1& f);

// Convolution with a Karatsuba split for longer operands; exposed for reuse
// by the approximate layer.
std::vector<mpz_class> conv_mpz(const std::vector<mpz_class>& a,
                                const std::vector<mpz_class>& b);

// Sparse bivariate polynomial over Z. Terms are kept sorted by (i, j)
// ascending with distinct exponent pairs and nonzero coefficients.
class IntPoly2 {
 public:
  struct Term {
    int i, j;  // x-power, y-power
    mpz_class c;
  };

  IntPoly2() = default;
  explicit IntPoly2(std::vector<Term> terms);
  static IntPoly2 constant(const mpz_class& v);
  static IntPoly2 from_coeffs_y(const std::vector<IntPoly1>& cy);
  static IntPoly2 from_univariate(const IntPoly1& f, bool in_x);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return total_degree() <= 0; }
  const std::vector<Term>& terms() const { return t_; }
  mpz_class coeff(int i, int j) const;

  int degree_x() const;
  int degree_y() const;
  int total_degree() const;  // -1 for zero

  IntPoly2 operator+(const IntPoly2& o) const;
  IntPoly2 operator-(const IntPoly2& o) const;
  IntPoly2 operator*(const IntPoly2& o) const;
  IntPoly2 operator-() const;
  bool operator==(const IntPoly2& o) const;

  IntPoly2 derivative_x() const;
  IntPoly2 derivative_y() const;
  IntPoly2 swap_vars() const;

  // f(x + s*y, y), exact.
  IntPoly2 shear_x(const mpz_class& s) const;

  // Coefficients of y^j as polynomials in x (index j), and vice versa.
  std::vector<IntPoly1> coeffs_in_y() const;
  std::vector<IntPoly1> coeffs_in_x() const;
  IntPoly1 lc_y() const;

  // Exact substitution of one variable, keeping the other.
  IntPoly1 eval_x(const mpz_class& x) const;
  IntPoly1 eval_y(const mpz_class& y) const;
  mpz_class eval(const mpz_class& x, const mpz_class& y) const;
  Dyadic eval(const Dyadic& x, const Dyadic& y) const;  // exact

  mpz_class content() const;
  IntPoly2 primitive_part() const;
  // primitive with positive graded-lex leading coefficient
  IntPoly2 normalized() const;

  long magnitude_exp() const;
  mpz_class norm_one() const;

  // Exact division; throws Internal if not exact.
  IntPoly2 divexact(const IntPoly2& d) const;

 private:
  void canonicalize();
  std::vector<Term> t_;
};

}  // namespace curvelab

#endif
