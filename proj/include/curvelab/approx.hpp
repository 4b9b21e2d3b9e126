#pragma once

#include <memory>
#include <vector>

#include "curvelab/dyadic.hpp"
#include "curvelab/intpoly.hpp"

namespace curvelab {

// A polynomial with dyadic complex coefficients plus one global error bound:
// the object stands for every polynomial P with ||P - center||_1 <= err.
class ApproxPoly {
 public:
  ApproxPoly() = default;
  explicit ApproxPoly(std::vector<DyadicComplex> coeffs, Dyadic err = Dyadic())
      : c_(std::move(coeffs)), err_(std::move(err)) {}
  static ApproxPoly from_exact(const IntPoly1& f);
  static ApproxPoly one();

  // structural length; leading coefficients may be (approximately) zero
  size_t size() const { return c_.size(); }
  int degree() const { return (int)c_.size() - 1; }
  bool empty() const { return c_.empty(); }
  const DyadicComplex& operator[](size_t i) const { return c_[i]; }
  DyadicComplex& operator[](size_t i) { return c_[i]; }
  const std::vector<DyadicComplex>& coeffs() const { return c_; }
  const Dyadic& err() const { return err_; }
  void set_err(Dyadic e) { err_ = std::move(e); }

  // upper bound on ||center||_1
  Dyadic norm_one_upper() const;
  // upper bound on ||P||_1 over all members
  Dyadic member_norm_upper() const { return norm_one_upper() + err_; }
  // smallest t >= 1 with all member coefficient magnitudes <= 2^t
  long magnitude_exp() const;

  bool is_exactly_monic() const;

 private:
  std::vector<DyadicComplex> c_;
  Dyadic err_;
};

// Abstract provider of coefficient approximations. request(bits) returns a
// ball polynomial with err <= 2^-bits around the true coefficient vector;
// all returned balls intersect (they share the true polynomial).
class CoeffOracle {
 public:
  virtual ~CoeffOracle() = default;
  virtual ApproxPoly request(long bits) const = 0;
  virtual int degree() const = 0;
  virtual long magnitude_exp() const = 0;
};

// Oracle view of an exact integer polynomial (err is always zero).
class ExactIntOracle final : public CoeffOracle {
 public:
  explicit ExactIntOracle(IntPoly1 f) : f_(std::move(f)) {}
  ApproxPoly request(long) const override { return ApproxPoly::from_exact(f_); }
  int degree() const override { return f_.degree(); }
  long magnitude_exp() const override { return f_.magnitude_exp(); }
  const IntPoly1& poly() const { return f_; }

 private:
  IntPoly1 f_;
};

// exact operations (errors combine, centers never round)
ApproxPoly add(const ApproxPoly& a, const ApproxPoly& b);
ApproxPoly sub(const ApproxPoly& a, const ApproxPoly& b);
ApproxPoly scale_2exp(const ApproxPoly& a, long e);

// rounds every coefficient component onto the grid 2^-(bits+1), folding the
// exact rounding slack into err
ApproxPoly compress(const ApproxPoly& a, long bits);

// keeps coefficients of power < m (the algebraic "mod x^m")
ApproxPoly truncate_mod(const ApproxPoly& a, size_t m);

// coefficient sequence reversed as a degree-d polynomial; d >= a.degree()
ApproxPoly reverse(const ApproxPoly& a, int d);
IntPoly1 reverse(const IntPoly1& a, int d);

// exact convolution of the two coefficient vectors (no rounding)
std::vector<DyadicComplex> conv_exact(const std::vector<DyadicComplex>& a,
                                      const std::vector<DyadicComplex>& b);

// best-effort product at working precision: inputs and output compressed at
// `bits`, the exact error transcript folded into the result's err
ApproxPoly mul_raw(const ApproxPoly& a, const ApproxPoly& b, long bits);

// strict contract: ||result - a*b||_1 <= 2^-ell for any members of the input
// balls; throws InsufficientPrecision when the inputs' own errors already
// exceed the budget
ApproxPoly mul_approx(const ApproxPoly& a, const ApproxPoly& b, long ell);

// ball Horner evaluation; the result disk contains P(z) for every member P
// and every z in the argument disk
Disk eval_disk(const ApproxPoly& p, const Disk& z, long sig_bits);
Disk eval_disk(const IntPoly1& p, const Disk& z, long sig_bits);

// certified bound B with |root| < B for every member; throws ZeroLeadingBall
// when the leading ball does not exclude zero
Dyadic cauchy_root_bound(const ApproxPoly& f);

// quotient/remainder norm bounds for division by a monic divisor of degree n
// whose roots have magnitude <= rho (rho >= 1):
//   ||Q||_1 <= 2^(2n) rho^n ||F||_1,  ||R||_1 <= 2^(4n) rho^(4n) ||F||_1
struct DivNormBounds {
  Dyadic quotient;
  Dyadic remainder;
};
DivNormBounds remainder_norm_bound(const Dyadic& norm_f, int n,
                                   const Dyadic& rho);

// power-series inverse h with h*g == 1 (mod x^(n+1)), ||h - inv(g)||_1 <= 2^-ell
// for every member g; requires g(0) exactly 1
ApproxPoly newton_inverse(const ApproxPoly& g, int n, long ell);

// division with remainder by an exactly monic divisor; deg F <= 2*deg G.
// Guarantees ||R - (F mod G)||_1 <= 2^-ell and
// ||Q - (F div G)||_1 * ||G||_1 <= 2^(-ell+1) for every member pair.
struct DivRemResult {
  ApproxPoly quotient;
  ApproxPoly remainder;
};
DivRemResult div_rem_approx(const ApproxPoly& F, const ApproxPoly& G,
                            long gamma_bits, long ell);

// subproduct tree over the given points: level[0] holds the linear factors
// x - x_j, level[i][j] = level[i-1][2j] * level[i-1][2j+1]
struct SubproductTree {
  std::vector<DyadicComplex> points;        // padded to a power of two
  std::vector<std::vector<ApproxPoly>> level;
  const ApproxPoly& root() const { return level.back()[0]; }
};
SubproductTree build_subproduct_tree(const std::vector<DyadicComplex>& points,
                                     long ell);

// certified multipoint evaluation: |result[j] - F(x_j)| <= 2^-L for the true
// polynomial behind the oracle
std::vector<DyadicComplex> multipoint_eval(const CoeffOracle& F,
                                           const std::vector<DyadicComplex>& points,
                                           long L);

// univariate view of a bivariate polynomial along one axis, coefficients
// evaluated at the disk center with per-coefficient error <= 2^-ell
ApproxPoly eval_coeff_views(const IntPoly2& f, bool eliminate_x,
                            const Disk& value, long ell);

}  // namespace curvelab
