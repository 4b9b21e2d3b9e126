#include "curvelab/approx.hpp"

#include <algorithm>
#include <utility>

namespace curvelab {

namespace {

// smallest k >= 0 with 2^k >= m
long clog2u(long m) {
  long k = 0;
  while ((1L << k) < m) ++k;
  return k;
}

Dyadic up8(const Dyadic& x) { return round_to_significant(x, 8, RoundMode::Up); }
Dyadic up16(const Dyadic& x) { return round_to_significant(x, 16, RoundMode::Up); }

// upper bound on x^k for x >= 0, mantissas kept short
Dyadic pow_up(const Dyadic& x, long k) {
  Dyadic r(1);
  for (long i = 0; i < k; ++i) r = up16(r * x);
  return r;
}

// exact x^k (used where the closed-form bound must not be inflated)
Dyadic pow_exact(const Dyadic& x, long k) {
  Dyadic r(1);
  for (long i = 0; i < k; ++i) r = r * x;
  return r;
}

// upper bound on a/b for a >= 0, b > 0
Dyadic div_up(const Dyadic& a, const Dyadic& b, long sig_bits) {
  if (a.is_zero()) return Dyadic();
  long shift = (long)b.mantissa_bits() + sig_bits + 2 - (long)a.mantissa_bits();
  if (shift < 0) shift = 0;
  mpz_class num = a.mantissa();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), (unsigned long)shift);
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.mantissa().get_mpz_t());
  Dyadic r(q, a.exponent() - b.exponent() - shift);
  return round_to_significant(r, sig_bits, RoundMode::Up);
}

Dyadic norm1_up(const std::vector<DyadicComplex>& v) {
  Dyadic s;
  for (const auto& z : v) s += z.mag_upper();
  return up16(s);
}

std::vector<DyadicComplex> compress_vec(const std::vector<DyadicComplex>& v,
                                        long bits, Dyadic* slack) {
  std::vector<DyadicComplex> out(v.size());
  Dyadic acc;
  for (size_t i = 0; i < v.size(); ++i) {
    Dyadic re = round_to_precision(v[i].re, bits, RoundMode::Nearest);
    Dyadic im = round_to_precision(v[i].im, bits, RoundMode::Nearest);
    acc += (v[i].re - re).abs() + (v[i].im - im).abs();
    out[i] = DyadicComplex(std::move(re), std::move(im));
  }
  if (slack) *slack = acc;
  return out;
}

// mantissas of a dyadic complex vector over a common exponent
struct AlignedVec {
  std::vector<mpz_class> re, im;
  long exp = 0;
};

AlignedVec align(const std::vector<DyadicComplex>& v) {
  AlignedVec a;
  bool found = false;
  for (const auto& z : v) {
    for (const Dyadic* d : {&z.re, &z.im}) {
      if (d->is_zero()) continue;
      a.exp = found ? std::min(a.exp, d->exponent()) : d->exponent();
      found = true;
    }
  }
  a.re.resize(v.size());
  a.im.resize(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    for (auto [src, dst] : {std::pair{&v[i].re, &a.re[i]}, std::pair{&v[i].im, &a.im[i]}}) {
      if (src->is_zero()) continue;
      mpz_mul_2exp(dst->get_mpz_t(), src->mantissa().get_mpz_t(),
                   (unsigned long)(src->exponent() - a.exp));
    }
  }
  return a;
}

std::vector<mpz_class> vec_add(const std::vector<mpz_class>& a,
                               const std::vector<mpz_class>& b) {
  std::vector<mpz_class> s(a.size());
  for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

}  // namespace

ApproxPoly ApproxPoly::from_exact(const IntPoly1& f) {
  std::vector<DyadicComplex> c(f.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = DyadicComplex(Dyadic(f.coeffs()[i]));
  return ApproxPoly(std::move(c));
}

ApproxPoly ApproxPoly::one() {
  return ApproxPoly({DyadicComplex(Dyadic(1))});
}

Dyadic ApproxPoly::norm_one_upper() const { return norm1_up(c_); }

long ApproxPoly::magnitude_exp() const {
  long t = 1;
  for (const auto& z : c_) t = std::max(t, log_bar(z.mag_upper() + err_));
  return t;
}

bool ApproxPoly::is_exactly_monic() const {
  return !c_.empty() && c_.back().im.is_zero() && c_.back().re == Dyadic(1);
}

ApproxPoly add(const ApproxPoly& a, const ApproxPoly& b) {
  std::vector<DyadicComplex> c(std::max(a.size(), b.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.size()) c[i] = c[i] + a[i];
    if (i < b.size()) c[i] = c[i] + b[i];
  }
  return ApproxPoly(std::move(c), a.err() + b.err());
}

ApproxPoly sub(const ApproxPoly& a, const ApproxPoly& b) {
  std::vector<DyadicComplex> c(std::max(a.size(), b.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.size()) c[i] = c[i] + a[i];
    if (i < b.size()) c[i] = c[i] - b[i];
  }
  return ApproxPoly(std::move(c), a.err() + b.err());
}

ApproxPoly scale_2exp(const ApproxPoly& a, long e) {
  std::vector<DyadicComplex> c(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    c[i] = DyadicComplex(a[i].re.mul_2exp(e), a[i].im.mul_2exp(e));
  return ApproxPoly(std::move(c), a.err().mul_2exp(e));
}

ApproxPoly compress(const ApproxPoly& a, long bits) {
  Dyadic slack;
  auto c = compress_vec(a.coeffs(), bits, &slack);
  return ApproxPoly(std::move(c), up8(a.err() + slack));
}

ApproxPoly truncate_mod(const ApproxPoly& a, size_t m) {
  std::vector<DyadicComplex> c(a.coeffs().begin(),
                               a.coeffs().begin() + std::min(m, a.size()));
  return ApproxPoly(std::move(c), a.err());
}

ApproxPoly reverse(const ApproxPoly& a, int d) {
  CL_CHECK(d >= a.degree(), ErrorCode::Internal, "reverse: degree too small");
  std::vector<DyadicComplex> c(d + 1);
  for (size_t i = 0; i < a.size(); ++i) c[d - i] = a[i];
  return ApproxPoly(std::move(c), a.err());
}

IntPoly1 reverse(const IntPoly1& a, int d) {
  CL_CHECK(d >= a.degree(), ErrorCode::Internal, "reverse: degree too small");
  std::vector<mpz_class> c(d + 1);
  for (int i = 0; i <= a.degree(); ++i) c[d - i] = a.coeffs()[i];
  return IntPoly1(std::move(c));
}

std::vector<DyadicComplex> conv_exact(const std::vector<DyadicComplex>& a,
                                      const std::vector<DyadicComplex>& b) {
  if (a.empty() || b.empty()) return {};
  AlignedVec A = align(a), B = align(b);
  // three real convolutions via the Karatsuba identity for complex products
  auto t1 = conv_mpz(A.re, B.re);
  auto t2 = conv_mpz(A.im, B.im);
  auto t3 = conv_mpz(vec_add(A.re, A.im), vec_add(B.re, B.im));
  long e = A.exp + B.exp;
  std::vector<DyadicComplex> out(t1.size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = DyadicComplex(Dyadic(t1[i] - t2[i], e),
                           Dyadic(t3[i] - t1[i] - t2[i], e));
  return out;
}

ApproxPoly mul_raw(const ApproxPoly& a, const ApproxPoly& b, long bits) {
  if (a.empty() || b.empty()) return ApproxPoly();
  ApproxPoly ac = compress(a, bits), bc = compress(b, bits);
  auto prod = conv_exact(ac.coeffs(), bc.coeffs());
  Dyadic na = norm1_up(ac.coeffs()), nb = norm1_up(bc.coeffs());
  Dyadic err = ac.err() * (nb + bc.err()) + na * bc.err();
  Dyadic slack;
  auto c = compress_vec(prod, bits, &slack);
  return ApproxPoly(std::move(c), up8(err + slack));
}

ApproxPoly mul_approx(const ApproxPoly& a, const ApproxPoly& b, long ell) {
  if (a.empty() || b.empty()) return ApproxPoly();
  const Dyadic target = Dyadic::pow2(-ell);
  Dyadic na = norm1_up(a.coeffs()), nb = norm1_up(b.coeffs());
  Dyadic e_in = a.err() * (nb + b.err()) + na * b.err();
  CL_CHECK(e_in <= Dyadic::pow2(-ell - 1), ErrorCode::InsufficientPrecision,
           "mul_approx: input errors exceed the output budget");
  long n = std::max(a.degree(), b.degree());
  long tau = std::max(a.magnitude_exp(), b.magnitude_exp());
  long s = ell + 1 + tau + 2 * clog2u(n + 1) + 4;
  Dyadic ta, tb;
  auto ac = compress_vec(a.coeffs(), s, &ta);
  auto bc = compress_vec(b.coeffs(), s, &tb);
  auto prod = conv_exact(ac, bc);
  Dyadic nac = norm1_up(ac), nbc = norm1_up(bc);
  Dyadic e_total = e_in + ta * (nbc + tb) + nac * tb;
  CL_CHECK(e_total <= target, ErrorCode::Internal,
           "mul_approx: truncation scale failed to meet the budget");
  Dyadic e_out = up8(e_total);
  if (e_out > target) e_out = target;
  return ApproxPoly(std::move(prod), std::move(e_out));
}

Disk eval_disk(const ApproxPoly& p, const Disk& z, long sig_bits) {
  if (p.empty()) return Disk();
  Disk acc(p[p.size() - 1], Dyadic());
  for (size_t i = p.size() - 1; i-- > 0;) {
    acc = disk_mul(acc, z, sig_bits);
    acc = disk_add(acc, Disk(p[i], Dyadic()), sig_bits);
  }
  if (p.err().sign() > 0) {
    Dyadic zb = z.mag_upper();
    if (zb < Dyadic(1)) zb = Dyadic(1);
    acc.radius += up8(p.err() * pow_up(zb, p.degree()));
  }
  return acc;
}

Disk eval_disk(const IntPoly1& p, const Disk& z, long sig_bits) {
  if (p.is_zero()) return Disk();
  Disk acc(DyadicComplex(Dyadic(p.lc())), Dyadic());
  for (int i = p.degree(); i-- > 0;) {
    acc = disk_mul(acc, z, sig_bits);
    acc = disk_add(acc, Disk(DyadicComplex(Dyadic(p.coeffs()[i])), Dyadic()),
                   sig_bits);
  }
  return acc;
}

Dyadic cauchy_root_bound(const ApproxPoly& f) {
  CL_CHECK(!f.empty(), ErrorCode::ZeroLeadingBall,
           "root bound of the empty polynomial");
  Dyadic lead_lo = f[f.size() - 1].mag_lower() - f.err();
  CL_CHECK(lead_lo.sign() > 0, ErrorCode::ZeroLeadingBall,
           "leading coefficient ball does not exclude zero");
  Dyadic max_up;
  for (size_t i = 0; i + 1 < f.size(); ++i) {
    Dyadic u = f[i].mag_upper() + f.err();
    if (u > max_up) max_up = u;
  }
  if (max_up.is_zero()) return Dyadic(1);
  return up16(Dyadic(1) + div_up(max_up, lead_lo, 16));
}

DivNormBounds remainder_norm_bound(const Dyadic& norm_f, int n,
                                   const Dyadic& rho) {
  CL_CHECK(n >= 0, ErrorCode::Internal, "negative divisor degree");
  CL_CHECK(rho >= Dyadic(1), ErrorCode::DegenerateInput,
           "root radius bound must be at least 1");
  DivNormBounds b;
  b.quotient = pow_exact(rho, n).mul_2exp(2 * n) * norm_f;
  b.remainder = pow_exact(rho, 4 * n).mul_2exp(4 * n) * norm_f;
  return b;
}

namespace {

// take the low t coefficients of the exact convolution, compressed
std::vector<DyadicComplex> conv_trunc(const std::vector<DyadicComplex>& a,
                                      const std::vector<DyadicComplex>& b,
                                      size_t t, long bits) {
  auto full = conv_exact(a, b);
  if (full.size() > t) full.resize(t);
  return compress_vec(full, bits, nullptr);
}

// Newton iteration for the power-series inverse of g (g[0] must be exactly 1),
// carried to m coefficients at the given working precision; centers only
std::vector<DyadicComplex> inverse_centers(const std::vector<DyadicComplex>& g,
                                           size_t m, long bits) {
  CL_CHECK(!g.empty() && g[0].im.is_zero() && g[0].re == Dyadic(1),
           ErrorCode::Internal, "inverse requires unit constant term");
  std::vector<DyadicComplex> h{DyadicComplex(Dyadic(1))};
  size_t t = 1;
  while (t < m) {
    t = std::min(2 * t, m);
    std::vector<DyadicComplex> gt(g.begin(), g.begin() + std::min(t, g.size()));
    auto h2 = conv_trunc(h, h, t, bits);
    auto gh2 = conv_trunc(gt, h2, t, bits);
    std::vector<DyadicComplex> hn(t);
    for (size_t i = 0; i < t; ++i) {
      DyadicComplex two_h = i < h.size()
                                ? DyadicComplex(h[i].re.mul_2exp(1), h[i].im.mul_2exp(1))
                                : DyadicComplex();
      hn[i] = i < gh2.size() ? two_h - gh2[i] : two_h;
    }
    h = compress_vec(hn, bits, nullptr);
  }
  return h;
}

struct RawDiv {
  std::vector<DyadicComplex> q, r;
  Dyadic residual;  // exact upper bound on the 1-norm of F - q*G - r
};

// division of the center polynomials at working precision; the divisor must
// be exactly monic. r is defined as the exact low part of F - q*G, so the
// residual (the discarded high part) certifies the computation a posteriori.
RawDiv div_centers(const std::vector<DyadicComplex>& F,
                   const std::vector<DyadicComplex>& G, long bits) {
  RawDiv out;
  if (F.empty()) return out;
  size_t N = F.size() - 1, n = G.size() - 1;
  if (N < n) {
    out.r = F;
    return out;
  }
  size_t m = N - n + 1;
  std::vector<DyadicComplex> f_rev(N + 1), g_rev(n + 1);
  for (size_t i = 0; i <= N; ++i) f_rev[N - i] = F[i];
  for (size_t i = 0; i <= n; ++i) g_rev[n - i] = G[i];
  auto h = inverse_centers(g_rev, m, bits);
  auto q_rev = conv_trunc(f_rev, h, m, bits);
  q_rev.resize(m);
  out.q.resize(m);
  for (size_t i = 0; i < m; ++i) out.q[i] = q_rev[m - 1 - i];
  auto prod = conv_exact(out.q, G);
  prod.resize(N + 1);
  out.r.resize(n);
  Dyadic res;
  for (size_t i = 0; i <= N; ++i) {
    DyadicComplex e = F[i] - prod[i];
    if (i < n)
      out.r[i] = std::move(e);
    else
      res += e.mag_upper();
  }
  out.residual = up16(res);
  return out;
}

// single-pass division with the error transcript folded in; rho bounds the
// root magnitudes of every member of the divisor ball
DivRemResult div_rem_tracked(const ApproxPoly& F, const ApproxPoly& G,
                             const Dyadic& rho, long bits) {
  RawDiv raw = div_centers(F.coeffs(), G.coeffs(), bits);
  Dyadic qnorm = norm1_up(raw.q);
  Dyadic e_up = raw.residual + F.err() + up8(qnorm * G.err());
  DivNormBounds nb = remainder_norm_bound(e_up, G.degree(), rho);
  DivRemResult res;
  res.quotient = ApproxPoly(std::move(raw.q), up8(nb.quotient));
  res.remainder = ApproxPoly(std::move(raw.r), up8(nb.remainder));
  return res;
}

// certified root-magnitude bound over the whole divisor ball (monic divisor)
Dyadic divisor_root_bound(const ApproxPoly& G) {
  Dyadic max_up;
  for (size_t i = 0; i + 1 < G.size(); ++i) {
    Dyadic u = G[i].mag_upper() + G.err();
    if (u > max_up) max_up = u;
  }
  return up16(Dyadic(1) + max_up);
}

}  // namespace

DivRemResult div_rem_approx(const ApproxPoly& F, const ApproxPoly& G,
                            long gamma_bits, long ell) {
  CL_CHECK(G.is_exactly_monic(), ErrorCode::NonMonicDivisor,
           "division requires an exactly monic divisor");
  int n = G.degree();
  CL_CHECK(F.degree() <= 2 * n, ErrorCode::DegenerateInput,
           "dividend degree exceeds twice the divisor degree");
  if (n == 0 || F.empty()) {
    DivRemResult res;
    res.quotient = F;
    return res;
  }
  const Dyadic r_target = Dyadic::pow2(-ell);
  const Dyadic q_target = Dyadic::pow2(-ell + 1);
  Dyadic rho = divisor_root_bound(G);
  Dyadic g_norm = G.member_norm_upper();
  long lg_rho = std::max(0L, rho.ceil_log2());
  long tau = std::max(F.magnitude_exp(), G.magnitude_exp());
  long P = ell + tau + 2 * gamma_bits + 6 * clog2u(n + 2) + 32;
  long cap = ell + 4 * tau + 8 * (long)(n + 1) * (lg_rho + 2) + 256;
  long comp_bits = ell + clog2u(n + 2) + 8;
  for (;;) {
    DivRemResult res = div_rem_tracked(F, G, rho, P);
    res.quotient = compress(res.quotient, comp_bits);
    res.remainder = compress(res.remainder, comp_bits);
    if (res.remainder.err() <= r_target &&
        up8(res.quotient.err() * g_norm) <= q_target)
      return res;
    P *= 2;
    if (P > cap) {
      Dyadic qb =
          remainder_norm_bound(F.member_norm_upper(), n, rho).quotient;
      DivNormBounds floor_b =
          remainder_norm_bound(F.err() + qb * G.err(), n, rho);
      CL_CHECK(floor_b.remainder <= r_target.mul_2exp(-1) &&
                   floor_b.quotient * g_norm <= q_target.mul_2exp(-1),
               ErrorCode::InsufficientPrecision,
               "input errors too large for the requested division accuracy");
      throw Error(ErrorCode::Internal, "division failed to converge");
    }
  }
}

ApproxPoly newton_inverse(const ApproxPoly& g, int n, long ell) {
  CL_CHECK(!g.empty() && g[0].im.is_zero() && g[0].re == Dyadic(1),
           ErrorCode::DegenerateInput,
           "series inverse requires constant term exactly 1");
  const Dyadic target = Dyadic::pow2(-ell);
  size_t m = (size_t)n + 1;
  // norm bound for the true inverse: reverse(g) is monic, so the inverse is
  // the quotient of x^(2n) by it and the quotient norm bound applies
  Dyadic rho;
  {
    Dyadic max_up;
    for (size_t i = 1; i < std::min(g.size(), m); ++i) {
      Dyadic u = g[i].mag_upper() + g.err();
      if (u > max_up) max_up = u;
    }
    rho = up16(Dyadic(1) + max_up);
  }
  Dyadic h_true_bound = remainder_norm_bound(Dyadic(1), n, rho).quotient;
  long lg_rho = std::max(0L, rho.ceil_log2());
  long P = ell + g.magnitude_exp() + 6 * clog2u(n + 2) + 32;
  long cap = ell + 4 * g.magnitude_exp() + 8 * (long)(n + 1) * (lg_rho + 2) + 256;
  std::vector<DyadicComplex> gt(g.coeffs().begin(),
                                g.coeffs().begin() + std::min(g.size(), m));
  for (;;) {
    auto h = inverse_centers(gt, m, P);
    // exact residual of the centers: || g*h - 1 mod x^(n+1) ||_1
    auto gh = conv_exact(gt, h);
    if (gh.size() > m) gh.resize(m);
    Dyadic res;
    for (size_t i = 0; i < gh.size(); ++i) {
      DyadicComplex d = i == 0 ? gh[i] - DyadicComplex(Dyadic(1)) : gh[i];
      res += d.mag_upper();
    }
    Dyadic h_norm = norm1_up(h);
    Dyadic err = up8(h_true_bound * (up16(res) + g.err() * h_norm));
    if (err <= target) return ApproxPoly(std::move(h), std::move(err));
    P *= 2;
    if (P > cap) {
      CL_CHECK(up8(h_true_bound * (g.err() * h_norm)) <= target.mul_2exp(-1),
               ErrorCode::InsufficientPrecision,
               "input errors too large for the requested inverse accuracy");
      throw Error(ErrorCode::Internal, "series inverse failed to converge");
    }
  }
}

SubproductTree build_subproduct_tree(const std::vector<DyadicComplex>& points,
                                     long ell) {
  CL_CHECK(!points.empty(), ErrorCode::Internal, "empty point set");
  SubproductTree t;
  t.points = points;
  size_t padded = 1;
  while (padded < points.size()) padded *= 2;
  t.points.resize(padded);  // padded slots evaluate at 0 and are discarded
  t.level.emplace_back();
  for (const auto& p : t.points)
    t.level[0].push_back(ApproxPoly({-p, DyadicComplex(Dyadic(1))}));
  while (t.level.back().size() > 1) {
    const auto& prev = t.level.back();
    std::vector<ApproxPoly> next;
    next.reserve(prev.size() / 2);
    for (size_t j = 0; j + 1 < prev.size(); j += 2)
      next.push_back(mul_raw(prev[j], prev[j + 1], ell));
    t.level.push_back(std::move(next));
  }
  return t;
}

namespace {

std::vector<DyadicComplex> multipoint_horner(const CoeffOracle& F,
                                             const std::vector<DyadicComplex>& pts,
                                             long L) {
  const Dyadic target = Dyadic::pow2(-L);
  long n = std::max(0, F.degree());
  long gamma = 0;
  for (const auto& p : pts) gamma = std::max(gamma, log_bar(p));
  long P = L + F.magnitude_exp() + 2 * gamma + 2 * clog2u(n + 2) + 16;
  long cap = L + 4 * F.magnitude_exp() + 4 * (n + 1) * (gamma + 1) + 256;
  for (;;) {
    ApproxPoly f = F.request(P);
    std::vector<DyadicComplex> out(pts.size());
    bool ok = true;
    for (size_t j = 0; j < pts.size() && ok; ++j) {
      Disk d = eval_disk(f, Disk(pts[j], Dyadic()), P);
      if (d.radius > target)
        ok = false;
      else
        out[j] = d.center;
    }
    if (ok) return out;
    P *= 2;
    CL_CHECK(P <= cap, ErrorCode::Internal,
             "point evaluation failed to converge");
  }
}

std::vector<DyadicComplex> multipoint_tree(const CoeffOracle& F,
                                           const std::vector<DyadicComplex>& pts,
                                           long L) {
  const Dyadic target = Dyadic::pow2(-L);
  long n = std::max(0, F.degree());
  Dyadic rho(1);
  for (const auto& p : pts) {
    Dyadic u = p.mag_upper();
    if (u > rho) rho = u;
  }
  rho = up16(rho + Dyadic(1));
  long lg_rho = std::max(0L, rho.ceil_log2());
  size_t padded = 1;
  while (padded < pts.size()) padded *= 2;
  long P = L + F.magnitude_exp() + (long)padded * lg_rho / 4 +
           6 * clog2u(n + 2) + 32;
  long cap = L + 8 * F.magnitude_exp() +
             32 * (long)(n + padded + 2) * (lg_rho + 2) + 1024;
  for (;;) {
    ApproxPoly f = F.request(P);
    SubproductTree tree = build_subproduct_tree(pts, P);
    size_t k = tree.level.size() - 1;
    // remainder cascade down the tree
    std::vector<ApproxPoly> rem{div_rem_tracked(f, tree.root(), rho, P).remainder};
    for (size_t i = k; i-- > 0;) {
      std::vector<ApproxPoly> next(tree.level[i].size());
      for (size_t j = 0; j < next.size(); ++j)
        next[j] =
            div_rem_tracked(rem[j / 2], tree.level[i][j], rho, P).remainder;
      rem = std::move(next);
    }
    bool ok = true;
    std::vector<DyadicComplex> out(pts.size());
    for (size_t j = 0; j < pts.size() && ok; ++j) {
      if (rem[j].err() > target)
        ok = false;
      else
        out[j] = rem[j].empty() ? DyadicComplex() : rem[j][0];
    }
    if (ok) return out;
    P *= 2;
    CL_CHECK(P <= cap, ErrorCode::Internal,
             "multipoint evaluation failed to converge");
  }
}

}  // namespace

std::vector<DyadicComplex> multipoint_eval(const CoeffOracle& F,
                                           const std::vector<DyadicComplex>& points,
                                           long L) {
  if (points.empty()) return {};
  size_t block = std::max(1, F.degree());
  std::vector<DyadicComplex> out;
  out.reserve(points.size());
  for (size_t start = 0; start < points.size(); start += block) {
    std::vector<DyadicComplex> pts(
        points.begin() + start,
        points.begin() + std::min(points.size(), start + block));
    size_t padded = 1;
    while (padded < pts.size()) padded *= 2;
    bool tree_pays = 2 * padded >= (size_t)std::max(1, F.degree()) &&
                     padded >= 8 && F.degree() >= 16;
    auto vals = tree_pays ? multipoint_tree(F, pts, L)
                          : multipoint_horner(F, pts, L);
    out.insert(out.end(), vals.begin(), vals.end());
  }
  return out;
}

ApproxPoly eval_coeff_views(const IntPoly2& f, bool eliminate_x,
                            const Disk& value, long ell) {
  std::vector<IntPoly1> views =
      eliminate_x ? f.coeffs_in_y() : f.coeffs_in_x();
  long d = (long)views.size() - 1;
  long bits = ell + clog2u(d + 2) + 1;
  std::vector<DyadicComplex> c(views.size());
  Dyadic slack;
  for (size_t j = 0; j < views.size(); ++j) {
    DyadicComplex v = views[j].eval(value.center);
    Dyadic re = round_to_precision(v.re, bits, RoundMode::Nearest);
    Dyadic im = round_to_precision(v.im, bits, RoundMode::Nearest);
    slack += (v.re - re).abs() + (v.im - im).abs();
    c[j] = DyadicComplex(std::move(re), std::move(im));
  }
  return ApproxPoly(std::move(c), std::move(slack));
}

}  // namespace curvelab
