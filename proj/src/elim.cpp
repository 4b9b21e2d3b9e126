#include "curvelab/elim.hpp"

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace curvelab {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// descending word-size primes starting just below 2^62
std::vector<u64> first_primes(size_t count) {
  std::vector<u64> out;
  out.reserve(count);
  for (u64 c = (1ULL << 62) - 1; out.size() < count; c -= 2)
    if (is_prime_u64(c)) out.push_back(c);
  return out;
}

u64 mpz_mod_u64(const mpz_class& v, u64 p) {
  return mpz_fdiv_ui(v.get_mpz_t(), p);
}

// dense univariate polynomial over Z_p, trailing (high) zeros trimmed
using PolyP = std::vector<u64>;

void trim_p(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP reduce_poly(const IntPoly1& f, u64 p) {
  PolyP out(f.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = mpz_mod_u64(f.coeffs()[i], p);
  trim_p(out);
  return out;
}

u64 eval_p(const PolyP& f, u64 x, u64 p) {
  u64 acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = (mulmod(acc, x, p) + f[i]) % p;
  return acc;
}

// res(A, B) over Z_p by the Euclidean recurrence
// res(A, B) = (-1)^(deg A deg B) lc(B)^(deg A - deg C) res(B, C), C = A mod B
u64 resultant_p(PolyP a, PolyP b, u64 p) {
  trim_p(a);
  trim_p(b);
  if (a.empty() || b.empty()) return 0;
  u64 acc = 1;
  bool negate = false;
  if (a.size() < b.size()) {
    if (((a.size() - 1) & 1) && ((b.size() - 1) & 1)) negate = !negate;
    std::swap(a, b);
  }
  while (b.size() > 1) {
    size_t da = a.size() - 1, db = b.size() - 1;
    u64 lb = b.back();
    u64 lb_inv = powmod(lb, p - 2, p);
    // c = a mod b (monic reduction, undone through the lc powers below)
    PolyP c = a;
    for (size_t i = da + 1; i-- > db;) {
      size_t k = i - db;
      u64 q = mulmod(c[i], lb_inv, p);
      if (q == 0) continue;
      for (size_t j = 0; j <= db; ++j) {
        u64 sub = mulmod(q, b[j], p);
        c[k + j] = (c[k + j] + p - sub) % p;
      }
    }
    c.resize(db);
    trim_p(c);
    if (c.empty()) return 0;
    size_t dc = c.size() - 1;
    acc = mulmod(acc, powmod(lb, da - dc, p), p);
    if ((da & 1) && (db & 1)) negate = !negate;
    a = std::move(b);
    b = std::move(c);
  }
  acc = mulmod(acc, powmod(b[0], a.size() - 1, p), p);
  return negate ? (p - acc) % p : acc;
}

// Lagrange interpolation through (x_i, y_i), all x_i distinct mod p
PolyP interpolate_p(const std::vector<u64>& xs, const std::vector<u64>& ys,
                    u64 p) {
  size_t n = xs.size();
  // master = prod (x - x_i)
  PolyP master{1};
  for (u64 xi : xs) {
    PolyP next(master.size() + 1, 0);
    for (size_t j = 0; j < master.size(); ++j) {
      next[j + 1] = (next[j + 1] + master[j]) % p;
      next[j] = (next[j] + p - mulmod(master[j], xi % p, p)) % p;
    }
    master = std::move(next);
  }
  PolyP out(n, 0);
  PolyP quot(n, 0);
  for (size_t i = 0; i < n; ++i) {
    // quot = master / (x - x_i) by synthetic division
    u64 xi = xs[i] % p;
    u64 carry = master[n];
    for (size_t j = n; j-- > 0;) {
      quot[j] = carry;
      carry = (master[j] + mulmod(carry, xi, p)) % p;
    }
    u64 denom = eval_p(quot, xi, p);
    u64 scale = mulmod(ys[i] % p, powmod(denom, p - 2, p), p);
    for (size_t j = 0; j < n; ++j)
      out[j] = (out[j] + mulmod(scale, quot[j], p)) % p;
  }
  trim_p(out);
  return out;
}

long env_thread_cap() {
  static long cap = [] {
    const char* s = std::getenv("CURVELAB_THREADS");
    if (!s) return (long)0;
    long v = std::strtol(s, nullptr, 10);
    return v > 0 ? v : (long)1;
  }();
  return cap;
}

// content of the y-coefficient list, as a polynomial in x
IntPoly1 content_in_y(const IntPoly2& f) {
  IntPoly1 c;
  for (const auto& v : f.coeffs_in_y()) c = gcd_1(c, v);
  return c;
}

std::vector<IntPoly1> divide_rows(const std::vector<IntPoly1>& rows,
                                  const IntPoly1& d) {
  std::vector<IntPoly1> out(rows.size());
  for (size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].is_zero()) out[i] = rows[i].divexact(d);
  return out;
}

int deg_of_rows(const std::vector<IntPoly1>& a) {
  for (size_t i = a.size(); i-- > 0;)
    if (!a[i].is_zero()) return (int)i;
  return -1;
}

// pseudo-remainder of a by b in (Z[x])[y]; both given as y-coefficient rows
std::vector<IntPoly1> prem_rows(std::vector<IntPoly1> a,
                                const std::vector<IntPoly1>& b) {
  int db = deg_of_rows(b);
  const IntPoly1& lb = b[db];
  for (int da = deg_of_rows(a); da >= db; da = deg_of_rows(a)) {
    IntPoly1 la = a[da];
    int k = da - db;
    for (auto& r : a) r = r * lb;
    for (int j = 0; j <= db; ++j) a[j + k] = a[j + k] - la * b[j];
    if (deg_of_rows(a) == da) throw Error(ErrorCode::Internal, "prem stuck");
  }
  return a;
}

IntPoly1 rows_content(const std::vector<IntPoly1>& a) {
  IntPoly1 c;
  for (const auto& r : a) c = gcd_1(c, r);
  return c;
}

}  // namespace

void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
  if (count == 0) return;
  size_t budget = std::thread::hardware_concurrency();
  if (budget == 0) budget = 1;
  if (long cap = env_thread_cap(); cap > 0)
    budget = std::min(budget, (size_t)cap);
  budget = std::min(budget, count);
  if (budget <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex err_mutex;
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(budget);
  for (size_t t = 0; t < budget; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

SylvesterMatrix sylvester(const IntPoly2& f, const IntPoly2& g,
                          bool eliminate_y) {
  if (!eliminate_y) return sylvester(f.swap_vars(), g.swap_vars(), true);
  int mf = f.degree_y(), mg = g.degree_y();
  CL_CHECK(mf >= 1 && mg >= 1, ErrorCode::DegenerateInput,
           "sylvester requires positive degree in the eliminated variable");
  auto fc = f.coeffs_in_y(), gc = g.coeffs_in_y();
  size_t s = (size_t)(mf + mg);
  SylvesterMatrix out(s, std::vector<IntPoly1>(s));
  for (int row = 0; row < mg; ++row)
    for (int j = 0; j <= mf; ++j) out[row][row + j] = fc[mf - j];
  for (int row = 0; row < mf; ++row)
    for (int j = 0; j <= mg; ++j) out[mg + row][row + j] = gc[mg - j];
  return out;
}

mpz_class hadamard_bound_sq(const SylvesterMatrix& s) {
  mpz_class h = 1;
  for (const auto& row : s) {
    mpz_class acc = 0;
    for (const auto& e : row) {
      mpz_class n1 = e.norm_one();
      acc += n1 * n1;
    }
    h *= acc;
  }
  return h;
}

MagnitudeBound magnitude_bound(const IntPoly2& f, const IntPoly2& g) {
  long m = std::max(0, f.total_degree()), n = std::max(0, g.total_degree());
  long tf = f.magnitude_exp(), tg = g.magnitude_exp();
  auto axis_h2 = [&](int dyf, int dyg) {
    // ((dyf+1) ((m+1) 2^tf)^2)^dyg * ((dyg+1) ((n+1) 2^tg)^2)^dyf
    mpz_class ef = (m + 1), eg = (n + 1);
    ef <<= tf;
    eg <<= tg;
    mpz_class rowf = (dyf + 1) * ef * ef, rowg = (dyg + 1) * eg * eg;
    mpz_class h2 = 1;
    for (int i = 0; i < dyg; ++i) h2 *= rowf;
    for (int i = 0; i < dyf; ++i) h2 *= rowg;
    return h2;
  };
  mpz_class h2 = std::max(axis_h2(f.degree_y(), g.degree_y()),
                          axis_h2(f.degree_x(), g.degree_x()));
  long bits = (long)mpz_sizeinbase(h2.get_mpz_t(), 2);
  long t = (bits + 1) / 2;
  if (t > 0) {
    mpz_class cap = 1;
    cap <<= 2 * (t - 1);
    if (h2 <= cap) --t;
  }
  return {m * n, t};
}

IntPoly1 resultant_modular(const IntPoly2& f, const IntPoly2& g,
                           bool eliminate_y) {
  if (!eliminate_y) return resultant_modular(f.swap_vars(), g.swap_vars(), true);
  CL_CHECK(!f.is_zero() && !g.is_zero(), ErrorCode::DegenerateInput,
           "resultant of a zero polynomial");
  int mf = f.degree_y(), mg = g.degree_y();
  CL_CHECK(mf >= 1 && mg >= 1, ErrorCode::DegenerateInput,
           "resultant requires positive degree in the eliminated variable");
  auto fc = f.coeffs_in_y(), gc = g.coeffs_in_y();
  long npts = (long)mf * g.degree_x() + (long)mg * f.degree_x() + 1;
  MagnitudeBound mb = magnitude_bound(f, g);

  // enough primes for prod > 2^(T+1); a prime is skipped only when it divides
  // the content of a leading coefficient, so the allowance below covers every
  // possible skip
  size_t nprimes = (size_t)(mb.bitsize + 1) / 61 + 1;
  size_t allowance =
      (size_t)(f.magnitude_exp() + g.magnitude_exp()) / 61 + 2;
  std::vector<u64> primes = first_primes(nprimes + allowance);

  struct Image {
    u64 p = 0;
    PolyP r;
  };
  std::vector<Image> images(primes.size());
  parallel_for(primes.size(), [&](size_t pi) {
    u64 p = primes[pi];
    std::vector<PolyP> fp(fc.size()), gp(gc.size());
    for (size_t i = 0; i < fc.size(); ++i) fp[i] = reduce_poly(fc[i], p);
    for (size_t i = 0; i < gc.size(); ++i) gp[i] = reduce_poly(gc[i], p);
    if (fp.back().empty() || gp.back().empty()) return;  // degree drops: skip
    std::vector<u64> xs, ys;
    xs.reserve(npts);
    ys.reserve(npts);
    for (u64 x0 = 0; (long)xs.size() < npts; ++x0) {
      if (eval_p(fp.back(), x0, p) == 0 || eval_p(gp.back(), x0, p) == 0)
        continue;
      PolyP a(fp.size()), b(gp.size());
      for (size_t i = 0; i < fp.size(); ++i) a[i] = eval_p(fp[i], x0, p);
      for (size_t i = 0; i < gp.size(); ++i) b[i] = eval_p(gp[i], x0, p);
      xs.push_back(x0);
      ys.push_back(resultant_p(std::move(a), std::move(b), p));
    }
    images[pi] = {p, interpolate_p(xs, ys, p)};
  });

  // CRT lift in the symmetric range, deterministic order
  mpz_class modulus = 1;
  std::vector<mpz_class> coeffs((size_t)npts, mpz_class(0));
  mpz_class need = 1;
  need <<= (mb.bitsize + 1);
  for (const Image& im : images) {
    if (im.p == 0) continue;
    if (modulus > need) break;
    u64 m_mod_p = mpz_mod_u64(modulus, im.p);
    u64 m_inv = powmod(m_mod_p, im.p - 2, im.p);
    for (size_t i = 0; i < coeffs.size(); ++i) {
      u64 target = i < im.r.size() ? im.r[i] : 0;
      u64 cur = mpz_mod_u64(coeffs[i], im.p);
      u64 t = mulmod((target + im.p - cur) % im.p, m_inv, im.p);
      coeffs[i] += modulus * mpz_class(t);
    }
    modulus *= mpz_class(im.p);
  }
  CL_CHECK(modulus > need, ErrorCode::Internal,
           "not enough good primes for the CRT lift");
  for (auto& c : coeffs)
    if (2 * c > modulus) c -= modulus;
  return IntPoly1(std::move(coeffs));
}

ResultantArtifacts compute_resultants(const IntPoly2& f, const IntPoly2& g) {
  MagnitudeBound mb = magnitude_bound(f, g);
  ResultantArtifacts out;
  out.ry = resultant_modular(f, g, true);
  out.rx = resultant_modular(f, g, false);
  out.degree_bound = mb.degree_bound;
  out.bitsize = mb.bitsize;
  return out;
}

long cofactor_ub(const Disk& v, int m, int n, long tau_f, long tau_g) {
  Dyadic big = v.mag_upper();
  if (big < Dyadic(1)) big = Dyadic(1);
  Dyadic three_m = Dyadic(3) * big;
  auto pow_d = [](const Dyadic& x, long k) {
    Dyadic r(1);
    for (long i = 0; i < k; ++i) r = r * x;
    return r;
  };
  int nstar = std::max(m, n);
  Dyadic prod = pow_d(three_m, nstar);
  prod *= pow_d(Dyadic(m + 1).mul_2exp(tau_f) * pow_d(three_m, m), n);
  prod *= pow_d(Dyadic(n + 1).mul_2exp(tau_g) * pow_d(three_m, n), m);
  return log_bar(prod);
}

IntPoly2 gcd_2(const IntPoly2& f, const IntPoly2& g) {
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  // pure-x inputs reduce to a univariate gcd against the other's y-content
  if (f.degree_y() == 0 || g.degree_y() == 0) {
    IntPoly1 a = content_in_y(f), b = content_in_y(g);
    return IntPoly2::from_univariate(gcd_1(a, b), true).normalized();
  }
  IntPoly1 cont = gcd_1(content_in_y(f), content_in_y(g));
  auto a = divide_rows(f.coeffs_in_y(), content_in_y(f));
  auto b = divide_rows(g.coeffs_in_y(), content_in_y(g));
  if (deg_of_rows(a) < deg_of_rows(b)) std::swap(a, b);
  while (deg_of_rows(b) >= 0) {
    auto r = prem_rows(a, b);
    IntPoly1 rc = rows_content(r);
    if (!rc.is_zero()) r = divide_rows(r, rc);
    a = std::move(b);
    b = std::move(r);
  }
  a.resize((size_t)deg_of_rows(a) + 1);
  IntPoly2 pp = IntPoly2::from_coeffs_y(a);
  return (pp * IntPoly2::from_univariate(cont, true)).normalized();
}

IntPoly2 squarefree_part_2(const IntPoly2& f) {
  CL_CHECK(!f.is_zero(), ErrorCode::DegenerateInput,
           "square-free part of the zero polynomial");
  if (f.is_constant()) return IntPoly2::constant(1);
  IntPoly2 d = gcd_2(f.derivative_x(), f.derivative_y());
  IntPoly2 g = gcd_2(f, d);
  if (g.is_constant()) return f.primitive_part().normalized();
  return f.divexact(g).primitive_part().normalized();
}

}  // namespace curvelab
