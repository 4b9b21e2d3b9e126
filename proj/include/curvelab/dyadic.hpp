#ifndef CURVELAB_DYADIC_HPP
#define CURVELAB_DYADIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace curvelab {

enum class ErrorCode {
  Parse,
  NonMonicDivisor,
  InsufficientPrecision,
  CommonFactor,
  ZeroLeadingBall,
  InconsistentRootCount,
  DegenerateInput,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

#define CL_CHECK(cond, code, msg) \
  do {                            \
    if (!(cond)) throw ::curvelab::Error(code, msg); \
  } while (0)

enum class RoundMode { Down, Up, Nearest };

// Binary rational m * 2^e with arbitrary-size mantissa and machine exponent.
// Canonical form: mantissa is zero (with e == 0) or odd, so representation
// equality coincides with value equality.
class Dyadic {
 public:
  Dyadic() : mant_(0), exp_(0) {}
  Dyadic(long v) : mant_(v), exp_(0) { normalize(); }
  Dyadic(const mpz_class& m) : mant_(m), exp_(0) { normalize(); }
  Dyadic(mpz_class m, long e) : mant_(std::move(m)), exp_(e) { normalize(); }

  static Dyadic pow2(long e) { return Dyadic(mpz_class(1), e); }

  const mpz_class& mantissa() const { return mant_; }
  long exponent() const { return exp_; }
  bool is_zero() const { return mant_ == 0; }
  int sign() const { return sgn(mant_); }

  Dyadic operator-() const { return Dyadic(-mant_, exp_); }
  Dyadic abs() const { return Dyadic(::abs(mant_), exp_); }

  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const { return *this + (-o); }
  Dyadic operator*(const Dyadic& o) const {
    return Dyadic(mant_ * o.mant_, exp_ + o.exp_);
  }
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
  Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

  Dyadic mul_2exp(long e) const {
    if (is_zero()) return Dyadic();
    return Dyadic(mant_, exp_ + e);
  }

  // Exact three-way comparison.
  int cmp(const Dyadic& o) const;
  bool operator==(const Dyadic& o) const {
    return mant_ == o.mant_ && exp_ == o.exp_;
  }
  bool operator!=(const Dyadic& o) const { return !(*this == o); }
  bool operator<(const Dyadic& o) const { return cmp(o) < 0; }
  bool operator<=(const Dyadic& o) const { return cmp(o) <= 0; }
  bool operator>(const Dyadic& o) const { return cmp(o) > 0; }
  bool operator>=(const Dyadic& o) const { return cmp(o) >= 0; }

  // floor(log2 |x|), exact; requires x != 0.
  long floor_log2() const;
  // ceil(log2 |x|), exact; requires x != 0.
  long ceil_log2() const;

  size_t mantissa_bits() const { return mpz_sizeinbase(mant_.get_mpz_t(), 2); }

  double to_double() const;
  std::string to_string() const;  // "m*2^e"
  static Dyadic from_string(const std::string& s);

 private:
  void normalize();

  mpz_class mant_;
  long exp_;
};

// Rounds onto the grid 2^{-(bits+1)}; |result - x| <= 2^{-bits} and the
// result is representable with exponent >= -(bits+1).
Dyadic round_to_precision(const Dyadic& x, long bits, RoundMode mode);

// Rounds keeping roughly sig_bits significant bits (grid relative to the
// magnitude of x). Returns x unchanged when already that short.
Dyadic round_to_significant(const Dyadic& x, long sig_bits, RoundMode mode);

// Upper/lower dyadic bounds for sqrt(v), v >= 0, tight to sig_bits.
Dyadic sqrt_upper(const Dyadic& v, long sig_bits = 16);
Dyadic sqrt_lower(const Dyadic& v, long sig_bits = 16);

struct DyadicComplex {
  Dyadic re, im;

  DyadicComplex() = default;
  DyadicComplex(Dyadic r) : re(std::move(r)) {}
  DyadicComplex(Dyadic r, Dyadic i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  DyadicComplex operator+(const DyadicComplex& o) const {
    return {re + o.re, im + o.im};
  }
  DyadicComplex operator-(const DyadicComplex& o) const {
    return {re - o.re, im - o.im};
  }
  DyadicComplex operator-() const { return {-re, -im}; }
  DyadicComplex operator*(const DyadicComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  DyadicComplex conj() const { return {re, -im}; }

  bool operator==(const DyadicComplex& o) const {
    return re == o.re && im == o.im;
  }

  // |z|^2, exact.
  Dyadic mag_sq() const { return re * re + im * im; }
  // Dyadic bounds on |z|.
  Dyadic mag_upper() const;
  Dyadic mag_lower() const;
};

// ceil(log2 max{1, |z|}), exact in the sense that the result never falls
// below the true value and coincides with it (the magnitude square is exact).
long log_bar(const DyadicComplex& z);
long log_bar(const Dyadic& x);

// Closed real interval [lo, hi] with exact dyadic endpoints.
struct Interval {
  Dyadic lo, hi;

  Interval() = default;
  Interval(Dyadic point) : lo(point), hi(point) {}
  Interval(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {}

  Dyadic width() const { return hi - lo; }
  Dyadic mid() const { return (lo + hi).mul_2exp(-1); }
  bool contains(const Dyadic& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }

  Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
  Interval operator-(const Interval& o) const { return {lo - o.hi, hi - o.lo}; }
  Interval operator-() const { return {-hi, -lo}; }
  Interval operator*(const Interval& o) const;
  Interval abs() const;
};

// Disk in the complex plane: center plus radius. Zero radius is legal and
// then represents the exact point.
struct Disk {
  DyadicComplex center;
  Dyadic radius;

  Disk() = default;
  Disk(DyadicComplex c, Dyadic r) : center(std::move(c)), radius(std::move(r)) {}

  bool is_point() const { return radius.is_zero(); }
  // true iff 0 certainly lies outside the closed disk (exact test).
  bool excludes_zero() const { return center.mag_sq() > radius * radius; }
  Dyadic mag_upper() const { return center.mag_upper() + radius; }
  Dyadic mag_lower() const {
    Dyadic lo = center.mag_lower() - radius;
    return lo.sign() > 0 ? lo : Dyadic();
  }
  Disk conj() const { return {center.conj(), radius}; }
};

// Exact disk arithmetic: result contains {x op y : x in a, y in b}.
Disk disk_add(const Disk& a, const Disk& b);
Disk disk_sub(const Disk& a, const Disk& b);
Disk disk_mul(const Disk& a, const Disk& b);
Disk disk_neg(const Disk& a);
// Same, but center components rounded to sig_bits significant bits with the
// rounding error folded into the radius.
Disk disk_add(const Disk& a, const Disk& b, long sig_bits);
Disk disk_mul(const Disk& a, const Disk& b, long sig_bits);
// Division; requires b to exclude zero.
Disk disk_div(const Disk& a, const Disk& b, long sig_bits);
Disk disk_scale(const Disk& a, const Dyadic& s);
Disk disk_round(const Disk& a, long sig_bits);

// Exact separation tests between closed disks.
bool disks_disjoint(const Disk& a, const Disk& b);
// |center(a) - center(b)|^2 exactly.
Dyadic disk_center_dist_sq(const Disk& a, const Disk& b);
// Dyadic lower/upper bounds on the distance of the two centers.
Dyadic disk_center_dist_lower(const Disk& a, const Disk& b);
Dyadic disk_center_dist_upper(const Disk& a, const Disk& b);

struct Polydisk {
  Disk x, y;
};

}  // namespace curvelab

#endif
