#pragma once

#include <functional>
#include <vector>

#include "curvelab/dyadic.hpp"
#include "curvelab/intpoly.hpp"

namespace curvelab {

using SylvesterMatrix = std::vector<std::vector<IntPoly1>>;

// Sylvester matrix of f and g with respect to the eliminated variable; the
// entries are polynomials in the other variable. Standard layout: first
// deg(g) rows carry the coefficients of f in descending order, then deg(f)
// rows carry g. Both degrees in the eliminated variable must be positive.
SylvesterMatrix sylvester(const IntPoly2& f, const IntPoly2& g,
                          bool eliminate_y);

// degree and bitsize bounds for the resultants of f and g (both axes):
// degree <= m*n and ||R||_2 <= 2^bitsize, via the Hadamard bound with the
// coefficient 1-norms overestimated by (deg+1)*2^tau per entry
struct MagnitudeBound {
  long degree_bound;
  long bitsize;
};
MagnitudeBound magnitude_bound(const IntPoly2& f, const IntPoly2& g);

// exact squared Hadamard bound prod_rows sum_j ||S_ij||_1^2 of an actual
// Sylvester matrix; ||det||_2^2 never exceeds it
mpz_class hadamard_bound_sq(const SylvesterMatrix& s);

// exact resultant with respect to the eliminated variable, computed by
// modular images (word-size primes, per-prime evaluation/interpolation)
// lifted by CRT into the symmetric range. A zero result is legal and means
// the inputs share a factor.
IntPoly1 resultant_modular(const IntPoly2& f, const IntPoly2& g,
                           bool eliminate_y);

// both projections at once, with the shared degree/bitsize bounds attached
struct ResultantArtifacts {
  IntPoly1 ry;  // res(f, g; y), a polynomial in x
  IntPoly1 rx;  // res(f, g; x), a polynomial in y
  long degree_bound;
  long bitsize;
};
ResultantArtifacts compute_resultants(const IntPoly2& f, const IntPoly2& g);

// upper-bound exponent for the cofactor magnitudes over a polydisk whose
// projection is the given disk:
//   ub = logbar((3M)^(n*) ((m+1) 2^tau_f (3M)^m)^n ((n+1) 2^tau_g (3M)^n)^m)
// with M = max(1, |v|) over the disk and n* = max(m, n)
long cofactor_ub(const Disk& v, int m, int n, long tau_f, long tau_g);

// exact gcd over Z[x,y], primitive in neither sense removed: the full gcd
// including the integer content gcd, sign-normalized
IntPoly2 gcd_2(const IntPoly2& f, const IntPoly2& g);

// f / gcd(f, gcd(f_x, f_y)), primitive and normalized; same zero set as f
// with every factor simple
IntPoly2 squarefree_part_2(const IntPoly2& f);

// shared worker-pool helper: runs fn(0..count-1), possibly concurrently;
// the thread budget is capped by the CURVELAB_THREADS environment variable
void parallel_for(size_t count, const std::function<void(size_t)>& fn);

}  // namespace curvelab
