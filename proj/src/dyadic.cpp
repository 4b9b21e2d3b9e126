#include "curvelab/dyadic.hpp"

#include <cmath>

namespace curvelab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "parse";
    case ErrorCode::NonMonicDivisor: return "non_monic_divisor";
    case ErrorCode::InsufficientPrecision: return "insufficient_precision";
    case ErrorCode::CommonFactor: return "common_factor";
    case ErrorCode::ZeroLeadingBall: return "zero_leading_ball";
    case ErrorCode::InconsistentRootCount: return "inconsistent_root_count";
    case ErrorCode::DegenerateInput: return "degenerate_input";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

void Dyadic::normalize() {
  if (mant_ == 0) {
    exp_ = 0;
    return;
  }
  // Strip trailing zero bits so the mantissa is odd.
  unsigned long tz = mpz_scan1(mant_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_tdiv_q_2exp(mant_.get_mpz_t(), mant_.get_mpz_t(), tz);
    exp_ += (long)tz;
  }
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  long e = std::min(exp_, o.exp_);
  mpz_class a = mant_, b = o.mant_;
  if (exp_ > e) mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), exp_ - e);
  if (o.exp_ > e) mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), o.exp_ - e);
  return Dyadic(a + b, e);
}

int Dyadic::cmp(const Dyadic& o) const {
  int sa = sign(), sb = o.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  // Same sign: compare magnitudes via exponent ranges first.
  long la = floor_log2(), lb = o.floor_log2();
  if (la != lb) {
    int mag = la < lb ? -1 : 1;
    return sa > 0 ? mag : -mag;
  }
  Dyadic d = *this - o;
  return d.sign();
}

long Dyadic::floor_log2() const {
  CL_CHECK(!is_zero(), ErrorCode::Internal, "floor_log2 of zero");
  return (long)mantissa_bits() - 1 + exp_;
}

long Dyadic::ceil_log2() const {
  CL_CHECK(!is_zero(), ErrorCode::Internal, "ceil_log2 of zero");
  // Canonical mantissa is odd: it is a power of two iff it is +-1.
  size_t bits = mantissa_bits();
  if (bits == 1) return exp_;
  return (long)bits + exp_;
}

double Dyadic::to_double() const {
  if (is_zero()) return 0.0;
  Dyadic r = round_to_significant(*this, 60, RoundMode::Nearest);
  return r.mant_.get_d() * std::ldexp(1.0, (int)r.exp_);
}

std::string Dyadic::to_string() const {
  return mant_.get_str() + "*2^" + std::to_string(exp_);
}

Dyadic Dyadic::from_string(const std::string& s) {
  size_t star = s.find("*2^");
  try {
    if (star == std::string::npos) {
      // Plain integer form is accepted.
      return Dyadic(mpz_class(s));
    }
    mpz_class m(s.substr(0, star));
    long e = std::stol(s.substr(star + 3));
    return Dyadic(m, e);
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "bad dyadic literal: " + s);
  }
}

Dyadic round_to_precision(const Dyadic& x, long bits, RoundMode mode) {
  if (x.is_zero()) return x;
  long grid = -(bits + 1);
  if (x.exponent() >= grid) return x;  // already on the grid
  unsigned long shift = (unsigned long)(grid - x.exponent());
  mpz_class q;
  const mpz_class& m = x.mantissa();
  switch (mode) {
    case RoundMode::Down:
      mpz_fdiv_q_2exp(q.get_mpz_t(), m.get_mpz_t(), shift);
      break;
    case RoundMode::Up:
      mpz_cdiv_q_2exp(q.get_mpz_t(), m.get_mpz_t(), shift);
      break;
    case RoundMode::Nearest: {
      mpz_class r;
      mpz_fdiv_q_2exp(q.get_mpz_t(), m.get_mpz_t(), shift);
      mpz_fdiv_r_2exp(r.get_mpz_t(), m.get_mpz_t(), shift);
      mpz_class half(1);
      mpz_mul_2exp(half.get_mpz_t(), half.get_mpz_t(), shift - 1);
      int c = cmp(r, half);
      if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
      break;
    }
  }
  return Dyadic(q, grid);
}

Dyadic round_to_significant(const Dyadic& x, long sig_bits, RoundMode mode) {
  if (x.is_zero()) return x;
  if ((long)x.mantissa_bits() <= sig_bits) return x;
  long grid = x.floor_log2() - sig_bits;
  // Reuse the absolute rounding with bits = -grid - 1.
  return round_to_precision(x, -grid - 1, mode);
}

namespace {

// sqrt bound helpers working on v = m * 2^e with even e.
Dyadic sqrt_bound(const Dyadic& v, long sig_bits, bool upper) {
  CL_CHECK(v.sign() >= 0, ErrorCode::Internal, "sqrt of negative");
  if (v.is_zero()) return Dyadic();
  mpz_class m = v.mantissa();
  long e = v.exponent();
  // Scale mantissa up so the square root carries ~sig_bits bits.
  long want = 2 * sig_bits + 2;
  long extra = want - (long)mpz_sizeinbase(m.get_mpz_t(), 2);
  if (extra < 0) extra = 0;
  if ((e - extra) % 2 != 0) extra += 1;
  mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), extra);
  e -= extra;
  mpz_class s, rem;
  mpz_sqrtrem(s.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t());
  if (upper && rem != 0) s += 1;
  return Dyadic(s, e / 2);
}

}  // namespace

Dyadic sqrt_upper(const Dyadic& v, long sig_bits) {
  return sqrt_bound(v, sig_bits, true);
}

Dyadic sqrt_lower(const Dyadic& v, long sig_bits) {
  return sqrt_bound(v, sig_bits, false);
}

Dyadic DyadicComplex::mag_upper() const {
  if (im.is_zero()) return re.abs();
  if (re.is_zero()) return im.abs();
  return sqrt_upper(mag_sq());
}

Dyadic DyadicComplex::mag_lower() const {
  if (im.is_zero()) return re.abs();
  if (re.is_zero()) return im.abs();
  return sqrt_lower(mag_sq());
}

long log_bar(const DyadicComplex& z) {
  Dyadic v = z.mag_sq();
  if (v <= Dyadic(4)) return 1;
  // ceil(log2 sqrt(v)) from the exact square.
  long a = v.floor_log2();
  if (v.mantissa() == 1) {  // v is an exact power of two
    return a >= 0 ? (a + 1) / 2 : a / 2;
  }
  long fl = a >= 0 ? a / 2 : (a - 1) / 2;  // floor(a/2)
  return fl + 1;
}

long log_bar(const Dyadic& x) { return log_bar(DyadicComplex(x)); }

Interval Interval::operator*(const Interval& o) const {
  Dyadic p1 = lo * o.lo, p2 = lo * o.hi, p3 = hi * o.lo, p4 = hi * o.hi;
  Dyadic mn = p1, mx = p1;
  for (const Dyadic* p : {&p2, &p3, &p4}) {
    if (*p < mn) mn = *p;
    if (*p > mx) mx = *p;
  }
  return {mn, mx};
}

Interval Interval::abs() const {
  if (lo.sign() >= 0) return *this;
  if (hi.sign() <= 0) return {-hi, -lo};
  Dyadic m = -lo > hi ? -lo : hi;
  return {Dyadic(), m};
}

Disk disk_add(const Disk& a, const Disk& b) {
  return {a.center + b.center, a.radius + b.radius};
}

Disk disk_sub(const Disk& a, const Disk& b) {
  return {a.center - b.center, a.radius + b.radius};
}

Disk disk_neg(const Disk& a) { return {-a.center, a.radius}; }

Disk disk_mul(const Disk& a, const Disk& b) {
  DyadicComplex c = a.center * b.center;
  Dyadic ma = a.center.mag_upper(), mb = b.center.mag_upper();
  Dyadic r = ma * b.radius + mb * a.radius + a.radius * b.radius;
  return {c, r};
}

Disk disk_round(const Disk& a, long sig_bits) {
  Dyadic re = round_to_significant(a.center.re, sig_bits, RoundMode::Nearest);
  Dyadic im = round_to_significant(a.center.im, sig_bits, RoundMode::Nearest);
  Dyadic slack = (re - a.center.re).abs() + (im - a.center.im).abs();
  Dyadic r = round_to_significant(a.radius + slack, sig_bits, RoundMode::Up);
  return {{re, im}, r};
}

Disk disk_add(const Disk& a, const Disk& b, long sig_bits) {
  return disk_round(disk_add(a, b), sig_bits);
}

Disk disk_mul(const Disk& a, const Disk& b, long sig_bits) {
  return disk_round(disk_mul(a, b), sig_bits);
}

Disk disk_scale(const Disk& a, const Dyadic& s) {
  return {{a.center.re * s, a.center.im * s}, a.radius * s.abs()};
}

namespace {

// a / d placed on the grid 2^g, |result - a/d| < 2^g. d > 0.
Dyadic div_to_grid(const Dyadic& a, const Dyadic& d, long g, RoundMode mode) {
  CL_CHECK(d.sign() > 0, ErrorCode::Internal, "div_to_grid by nonpositive");
  if (a.is_zero()) return Dyadic();
  long shift = a.exponent() - g - d.exponent();
  mpz_class n = a.mantissa(), den = d.mantissa(), q;
  if (shift >= 0) {
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), (unsigned long)shift);
  } else {
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), (unsigned long)(-shift));
  }
  switch (mode) {
    case RoundMode::Down: mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), den.get_mpz_t()); break;
    case RoundMode::Up: mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), den.get_mpz_t()); break;
    case RoundMode::Nearest: mpz_tdiv_q(q.get_mpz_t(), n.get_mpz_t(), den.get_mpz_t()); break;
  }
  return Dyadic(q, g);
}

}  // namespace

Disk disk_div(const Disk& a, const Disk& b, long sig_bits) {
  CL_CHECK(b.excludes_zero(), ErrorCode::Internal,
           "disk_div by disk containing 0");
  // The image of disk b under inversion is again a disk:
  //   center conj(m) / (|m|^2 - r^2),  radius r / (|m|^2 - r^2).
  Dyadic denom = b.center.mag_sq() - b.radius * b.radius;
  Dyadic num_mag = b.center.mag_upper() + Dyadic(1);
  long g = num_mag.ceil_log2() - denom.floor_log2() - sig_bits - 8;
  Dyadic cre = div_to_grid(b.center.re, denom, g, RoundMode::Nearest);
  Dyadic cim = div_to_grid(-b.center.im, denom, g, RoundMode::Nearest);
  Dyadic inv_r = div_to_grid(b.radius, denom, g, RoundMode::Up) + Dyadic(1, g);
  // each center component is off by < 2^g, so |center error| < 2^{g+1}
  Disk inv{{cre, cim}, inv_r + Dyadic(1, g + 1)};
  return disk_mul(a, inv, sig_bits + 8);
}

bool disks_disjoint(const Disk& a, const Disk& b) {
  Dyadic d2 = disk_center_dist_sq(a, b);
  Dyadic rr = a.radius + b.radius;
  return d2 > rr * rr;
}

Dyadic disk_center_dist_sq(const Disk& a, const Disk& b) {
  return (a.center - b.center).mag_sq();
}

Dyadic disk_center_dist_lower(const Disk& a, const Disk& b) {
  return sqrt_lower(disk_center_dist_sq(a, b));
}

Dyadic disk_center_dist_upper(const Disk& a, const Disk& b) {
  return sqrt_upper(disk_center_dist_sq(a, b));
}

}  // namespace curvelab
