#include "curvelab/intpoly.hpp"

#include <algorithm>
#include <map>

namespace curvelab {

// ---------------------------------------------------------------- IntPoly1

IntPoly1::IntPoly1(std::initializer_list<long> c) {
  for (long v : c) c_.emplace_back(v);
  trim();
}

IntPoly1 IntPoly1::constant(const mpz_class& v) {
  IntPoly1 p;
  if (v != 0) p.c_.push_back(v);
  return p;
}

IntPoly1 IntPoly1::monomial(int power, const mpz_class& v) {
  IntPoly1 p;
  if (v != 0) {
    p.c_.assign(power + 1, mpz_class(0));
    p.c_[power] = v;
  }
  return p;
}

void IntPoly1::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly1 IntPoly1::operator+(const IntPoly1& o) const {
  std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPoly1(std::move(r));
}

IntPoly1 IntPoly1::operator-(const IntPoly1& o) const {
  std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return IntPoly1(std::move(r));
}

IntPoly1 IntPoly1::operator-() const {
  std::vector<mpz_class> r = c_;
  for (auto& v : r) v = -v;
  return IntPoly1(std::move(r));
}

namespace {

void conv_school(const std::vector<mpz_class>& a,
                 const std::vector<mpz_class>& b, std::vector<mpz_class>& out) {
  out.assign(a.size() + b.size() - 1, mpz_class(0));
  mpz_class t;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      t = a[i] * b[j];
      out[i + j] += t;
    }
  }
}

constexpr size_t kKaratsubaMin = 24;

void conv_rec(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
              std::vector<mpz_class>& out) {
  if (a.empty() || b.empty()) {
    out.clear();
    return;
  }
  if (std::min(a.size(), b.size()) < kKaratsubaMin) {
    conv_school(a, b, out);
    return;
  }
  size_t h = std::max(a.size(), b.size()) / 2;
  auto split = [h](const std::vector<mpz_class>& v, std::vector<mpz_class>& lo,
                   std::vector<mpz_class>& hi) {
    size_t cut = std::min(h, v.size());
    lo.assign(v.begin(), v.begin() + cut);
    hi.assign(v.begin() + cut, v.end());
    while (!lo.empty() && lo.back() == 0) lo.pop_back();
  };
  std::vector<mpz_class> a0, a1, b0, b1;
  split(a, a0, a1);
  split(b, b0, b1);
  auto vadd = [](std::vector<mpz_class> x, const std::vector<mpz_class>& y) {
    if (x.size() < y.size()) x.resize(y.size(), mpz_class(0));
    for (size_t i = 0; i < y.size(); ++i) x[i] += y[i];
    while (!x.empty() && x.back() == 0) x.pop_back();
    return x;
  };
  std::vector<mpz_class> p0, p2, pm;
  conv_rec(a0, b0, p0);
  conv_rec(a1, b1, p2);
  conv_rec(vadd(a0, a1), vadd(b0, b1), pm);
  // pm - p0 - p2
  if (pm.size() < std::max(p0.size(), p2.size()))
    pm.resize(std::max(p0.size(), p2.size()), mpz_class(0));
  for (size_t i = 0; i < p0.size(); ++i) pm[i] -= p0[i];
  for (size_t i = 0; i < p2.size(); ++i) pm[i] -= p2[i];
  out.assign(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < p0.size(); ++i) out[i] += p0[i];
  for (size_t i = 0; i < pm.size(); ++i)
    if (pm[i] != 0) out[i + h] += pm[i];
  for (size_t i = 0; i < p2.size(); ++i)
    if (p2[i] != 0) out[i + 2 * h] += p2[i];
}

}  // namespace

std::vector<mpz_class> conv_mpz(const std::vector<mpz_class>& a,
                                const std::vector<mpz_class>& b) {
  std::vector<mpz_class> out;
  conv_rec(a, b, out);
  return out;
}

IntPoly1 IntPoly1::operator*(const IntPoly1& o) const {
  if (is_zero() || o.is_zero()) return IntPoly1();
  return IntPoly1(conv_mpz(c_, o.c_));
}

IntPoly1 IntPoly1::scaled(const mpz_class& s) const {
  if (s == 0) return IntPoly1();
  std::vector<mpz_class> r = c_;
  for (auto& v : r) v *= s;
  return IntPoly1(std::move(r));
}

IntPoly1 IntPoly1::shifted_powers(int k) const {
  if (is_zero()) return IntPoly1();
  std::vector<mpz_class> r(c_.size() + k, mpz_class(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
  return IntPoly1(std::move(r));
}

IntPoly1 IntPoly1::derivative() const {
  if (degree() <= 0) return IntPoly1();
  std::vector<mpz_class> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = mpz_class(i) * c_[i];
  return IntPoly1(std::move(r));
}

mpz_class IntPoly1::eval(const mpz_class& x) const {
  mpz_class acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Dyadic IntPoly1::eval(const Dyadic& x) const {
  Dyadic acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Dyadic(c_[i]);
  return acc;
}

DyadicComplex IntPoly1::eval(const DyadicComplex& x) const {
  DyadicComplex acc;
  for (size_t i = c_.size(); i-- > 0;)
    acc = acc * x + DyadicComplex(Dyadic(c_[i]));
  return acc;
}

mpz_class IntPoly1::content() const {
  mpz_class g(0);
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly1 IntPoly1::primitive_part() const {
  if (is_zero()) return *this;
  mpz_class g = content();
  std::vector<mpz_class> r = c_;
  for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return IntPoly1(std::move(r));
}

IntPoly1 IntPoly1::normalized() const {
  IntPoly1 p = primitive_part();
  if (!p.is_zero() && p.lc() < 0) p = -p;
  return p;
}

mpz_class IntPoly1::norm_one() const {
  mpz_class s(0);
  for (const auto& v : c_) s += abs(v);
  return s;
}

mpz_class IntPoly1::norm_inf() const {
  mpz_class m(0);
  for (const auto& v : c_) {
    mpz_class a = abs(v);
    if (a > m) m = a;
  }
  return m;
}

long IntPoly1::magnitude_exp() const {
  mpz_class m = norm_inf();
  if (m <= 1) return 1;
  return std::max<long>(1, Dyadic(m).ceil_log2());
}

IntPoly1 IntPoly1::divexact(const IntPoly1& d) const {
  CL_CHECK(!d.is_zero(), ErrorCode::Internal, "division by zero polynomial");
  if (is_zero()) return IntPoly1();
  CL_CHECK(degree() >= d.degree(), ErrorCode::Internal,
           "divexact: degree too small");
  std::vector<mpz_class> rem = c_;
  std::vector<mpz_class> q(degree() - d.degree() + 1, mpz_class(0));
  for (int k = (int)q.size() - 1; k >= 0; --k) {
    mpz_class& top = rem[k + d.degree()];
    if (top == 0) continue;
    mpz_class qc;
    mpz_class r;
    mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(),
                d.lc().get_mpz_t());
    CL_CHECK(r == 0, ErrorCode::Internal, "divexact: inexact leading step");
    q[k] = qc;
    for (int i = 0; i <= d.degree(); ++i) rem[k + i] -= qc * d.coeff(i);
  }
  for (const auto& v : rem)
    CL_CHECK(v == 0, ErrorCode::Internal, "divexact: nonzero remainder");
  return IntPoly1(std::move(q));
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b, exact in Z.
IntPoly1 pseudo_rem(IntPoly1 a, const IntPoly1& b) {
  int db = b.degree();
  mpz_class lb = b.lc();
  while (!a.is_zero() && a.degree() >= db) {
    int k = a.degree() - db;
    mpz_class la = a.lc();
    a = a.scaled(lb) - b.scaled(la).shifted_powers(k);
    // scale remaining steps uniformly so the result matches the classical
    // pseudo-remainder up to a positive factor (enough for gcd purposes)
  }
  return a;
}

}  // namespace

IntPoly1 gcd_1(const IntPoly1& f, const IntPoly1& g) {
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  mpz_class cont;
  mpz_gcd(cont.get_mpz_t(), f.content().get_mpz_t(),
          g.content().get_mpz_t());
  IntPoly1 a = f.primitive_part(), b = g.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly1 r = pseudo_rem(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  IntPoly1 res = a.normalized().scaled(cont);
  if (res.lc() < 0) res = -res;
  return res;
}

IntPoly1 squarefree_part_1(const IntPoly1& f) {
  CL_CHECK(!f.is_zero(), ErrorCode::DegenerateInput,
           "squarefree part of zero polynomial");
  if (f.degree() == 0) return IntPoly1({1});
  IntPoly1 g = gcd_1(f, f.derivative());
  return f.divexact(g).normalized();
}

Dyadic cauchy_root_bound_1(const IntPoly1& f) {
  CL_CHECK(f.degree() >= 1, ErrorCode::DegenerateInput,
           "root bound needs positive degree");
  mpz_class m(0);
  for (int i = 0; i < f.degree(); ++i) {
    mpz_class a = abs(f.coeff(i));
    if (a > m) m = a;
  }
  if (m == 0) return Dyadic(1);
  // ratio m / |lc| rounded up to 8 fractional bits
  mpz_class num = m;
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 8);
  mpz_class den = abs(f.lc()), q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Dyadic(1) + Dyadic(q, -8);
}

// ---------------------------------------------------------------- IntPoly2

IntPoly2::IntPoly2(std::vector<Term> terms) : t_(std::move(terms)) {
  canonicalize();
}

void IntPoly2::canonicalize() {
  std::map<std::pair<int, int>, mpz_class> acc;
  for (auto& t : t_) {
    CL_CHECK(t.i >= 0 && t.j >= 0, ErrorCode::Internal, "negative exponent");
    if (t.c != 0) acc[{t.i, t.j}] += t.c;
  }
  t_.clear();
  for (auto& [ij, c] : acc)
    if (c != 0) t_.push_back({ij.first, ij.second, c});
}

IntPoly2 IntPoly2::constant(const mpz_class& v) {
  IntPoly2 p;
  if (v != 0) p.t_.push_back({0, 0, v});
  return p;
}

IntPoly2 IntPoly2::from_coeffs_y(const std::vector<IntPoly1>& cy) {
  std::vector<Term> t;
  for (int j = 0; j < (int)cy.size(); ++j)
    for (int i = 0; i <= cy[j].degree(); ++i)
      if (cy[j].coeff(i) != 0) t.push_back({i, j, cy[j].coeff(i)});
  return IntPoly2(std::move(t));
}

IntPoly2 IntPoly2::from_univariate(const IntPoly1& f, bool in_x) {
  std::vector<Term> t;
  for (int i = 0; i <= f.degree(); ++i)
    if (f.coeff(i) != 0)
      t.push_back(in_x ? Term{i, 0, f.coeff(i)} : Term{0, i, f.coeff(i)});
  return IntPoly2(std::move(t));
}

mpz_class IntPoly2::coeff(int i, int j) const {
  for (const auto& t : t_)
    if (t.i == i && t.j == j) return t.c;
  return mpz_class(0);
}

int IntPoly2::degree_x() const {
  int d = -1;
  for (const auto& t : t_) d = std::max(d, t.i);
  return d;
}

int IntPoly2::degree_y() const {
  int d = -1;
  for (const auto& t : t_) d = std::max(d, t.j);
  return d;
}

int IntPoly2::total_degree() const {
  int d = -1;
  for (const auto& t : t_) d = std::max(d, t.i + t.j);
  return d;
}

IntPoly2 IntPoly2::operator+(const IntPoly2& o) const {
  std::vector<Term> t = t_;
  t.insert(t.end(), o.t_.begin(), o.t_.end());
  return IntPoly2(std::move(t));
}

IntPoly2 IntPoly2::operator-(const IntPoly2& o) const { return *this + (-o); }

IntPoly2 IntPoly2::operator-() const {
  std::vector<Term> t = t_;
  for (auto& x : t) x.c = -x.c;
  IntPoly2 p;
  p.t_ = std::move(t);
  return p;
}

IntPoly2 IntPoly2::operator*(const IntPoly2& o) const {
  std::vector<Term> t;
  t.reserve(t_.size() * o.t_.size());
  for (const auto& a : t_)
    for (const auto& b : o.t_) t.push_back({a.i + b.i, a.j + b.j, a.c * b.c});
  return IntPoly2(std::move(t));
}

bool IntPoly2::operator==(const IntPoly2& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t k = 0; k < t_.size(); ++k)
    if (t_[k].i != o.t_[k].i || t_[k].j != o.t_[k].j || t_[k].c != o.t_[k].c)
      return false;
  return true;
}

IntPoly2 IntPoly2::derivative_x() const {
  std::vector<Term> t;
  for (const auto& a : t_)
    if (a.i > 0) t.push_back({a.i - 1, a.j, a.c * a.i});
  return IntPoly2(std::move(t));
}

IntPoly2 IntPoly2::derivative_y() const {
  std::vector<Term> t;
  for (const auto& a : t_)
    if (a.j > 0) t.push_back({a.i, a.j - 1, a.c * a.j});
  return IntPoly2(std::move(t));
}

IntPoly2 IntPoly2::swap_vars() const {
  std::vector<Term> t;
  for (const auto& a : t_) t.push_back({a.j, a.i, a.c});
  return IntPoly2(std::move(t));
}

IntPoly2 IntPoly2::shear_x(const mpz_class& s) const {
  // c * x^i y^j  ->  c * sum_t binom(i,t) s^(i-t) x^t y^(j+i-t)
  std::vector<Term> t;
  for (const auto& a : t_) {
    mpz_class spow(1);
    for (int tt = a.i; tt >= 0; --tt) {
      // spow = s^(i - tt)
      mpz_class bin;
      mpz_bin_uiui(bin.get_mpz_t(), a.i, tt);
      mpz_class c = a.c * bin * spow;
      if (c != 0) t.push_back({tt, a.j + a.i - tt, c});
      spow *= s;
    }
  }
  return IntPoly2(std::move(t));
}

std::vector<IntPoly1> IntPoly2::coeffs_in_y() const {
  int dy = degree_y();
  std::vector<std::vector<mpz_class>> rows(dy + 1);
  int dx = degree_x();
  for (auto& r : rows) r.assign(dx + 1, mpz_class(0));
  for (const auto& t : t_) rows[t.j][t.i] = t.c;
  std::vector<IntPoly1> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(std::move(r));
  return out;
}

std::vector<IntPoly1> IntPoly2::coeffs_in_x() const {
  return swap_vars().coeffs_in_y();
}

IntPoly1 IntPoly2::lc_y() const {
  int dy = degree_y();
  std::vector<mpz_class> r(degree_x() + 1, mpz_class(0));
  for (const auto& t : t_)
    if (t.j == dy) r[t.i] = t.c;
  return IntPoly1(std::move(r));
}

IntPoly1 IntPoly2::eval_x(const mpz_class& x) const {
  std::vector<mpz_class> r(degree_y() + 1, mpz_class(0));
  if (is_zero()) return IntPoly1();
  for (const auto& t : t_) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), t.i);
    r[t.j] += t.c * p;
  }
  return IntPoly1(std::move(r));
}

IntPoly1 IntPoly2::eval_y(const mpz_class& y) const {
  return swap_vars().eval_x(y);
}

mpz_class IntPoly2::eval(const mpz_class& x, const mpz_class& y) const {
  return eval_x(x).eval(y);
}

Dyadic IntPoly2::eval(const Dyadic& x, const Dyadic& y) const {
  Dyadic acc;
  auto cy = coeffs_in_y();
  for (size_t j = cy.size(); j-- > 0;) acc = acc * y + cy[j].eval(x);
  return acc;
}

mpz_class IntPoly2::content() const {
  mpz_class g(0);
  for (const auto& t : t_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly2 IntPoly2::primitive_part() const {
  if (is_zero()) return *this;
  mpz_class g = content();
  std::vector<Term> t = t_;
  for (auto& x : t)
    mpz_divexact(x.c.get_mpz_t(), x.c.get_mpz_t(), g.get_mpz_t());
  IntPoly2 p;
  p.t_ = std::move(t);
  return p;
}

IntPoly2 IntPoly2::normalized() const {
  if (is_zero()) return *this;
  IntPoly2 p = primitive_part();
  // graded-lex leading term: max total degree, then max x-power
  const Term* lead = &p.t_[0];
  for (const auto& t : p.t_) {
    int dt = t.i + t.j, dl = lead->i + lead->j;
    if (dt > dl || (dt == dl && t.i > lead->i)) lead = &t;
  }
  if (lead->c < 0) p = -p;
  return p;
}

long IntPoly2::magnitude_exp() const {
  mpz_class m(0);
  for (const auto& t : t_) {
    mpz_class a = abs(t.c);
    if (a > m) m = a;
  }
  if (m <= 1) return 1;
  return std::max<long>(1, Dyadic(m).ceil_log2());
}

mpz_class IntPoly2::norm_one() const {
  mpz_class s(0);
  for (const auto& t : t_) s += abs(t.c);
  return s;
}

IntPoly2 IntPoly2::divexact(const IntPoly2& d) const {
  CL_CHECK(!d.is_zero(), ErrorCode::Internal, "division by zero polynomial");
  if (is_zero()) return IntPoly2();
  // long division in y with exact IntPoly1 coefficient division
  std::vector<IntPoly1> num = coeffs_in_y();
  std::vector<IntPoly1> den = d.coeffs_in_y();
  int dn = (int)num.size() - 1, dd = (int)den.size() - 1;
  CL_CHECK(dn >= dd, ErrorCode::Internal, "divexact: y-degree too small");
  std::vector<IntPoly1> q(dn - dd + 1);
  for (int k = dn - dd; k >= 0; --k) {
    if (num[k + dd].is_zero()) continue;
    IntPoly1 qc = num[k + dd].divexact(den[dd]);
    q[k] = qc;
    for (int i = 0; i <= dd; ++i) num[k + i] = num[k + i] - qc * den[i];
  }
  for (const auto& r : num)
    CL_CHECK(r.is_zero(), ErrorCode::Internal, "divexact: nonzero remainder");
  return IntPoly2::from_coeffs_y(q);
}

}  // namespace curvelab
