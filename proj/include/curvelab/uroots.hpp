#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "curvelab/approx.hpp"
#include "curvelab/dyadic.hpp"
#include "curvelab/intpoly.hpp"

namespace curvelab {

enum class Realness { Unknown, Real, NonReal };

// One distinct root: the closed disk contains exactly `multiplicity` roots
// counted with multiplicity, all coinciding.
struct IsolatedRoot {
  Disk disk;
  int multiplicity = 1;
  Realness realness = Realness::Unknown;
};

// A complete set of isolating disks for the (finite) roots of one polynomial,
// together with the handle needed to refine them later. Exactly one of
// poly/oracle is set. After well_isolate the set additionally satisfies:
//   (Isol 1) each root lies in the concentric half-radius disk;
//   (Isol 2) any two disks are separated by at least twice the larger radius;
//   (Isol 3) radius within [min(sep, M)/32, min(sep, M)/4], a power of two,
//            with the center on the grid radius/2.
// Explicit refinement keeps Isol 1-2 but deliberately relaxes the lower
// radius band; the flag records that.
struct RootSet {
  std::vector<IsolatedRoot> roots;
  IntPoly1 poly;         // exact source (zero polynomial when oracle-backed)
  IntPoly1 square_free;  // exact square-free part, exact-backed sets only
  std::shared_ptr<const CoeffOracle> oracle;
  int finite_degree = 0;  // number of finite roots with multiplicity
  bool well_isolated = false;
  bool explicitly_refined = false;
};

// Certified count of roots (with multiplicity) of every member of the input
// ball inside the closed disk, or nullopt when the test is indeterminate at
// this precision. A successful answer also certifies a root-free boundary.
std::optional<int> count_in_disk(const ApproxPoly& f, const Disk& d,
                                 long prec);

// Isolating disks with multiplicities for all complex roots of an exact
// integer polynomial; every radius is below sep/(64 deg), so well-isolation
// is always achievable afterwards.
RootSet isolate_int(const IntPoly1& f);

// Isolation driven by a coefficient oracle whose number of distinct roots k
// is known. finite_degree is the root count with multiplicity (defaults to
// the oracle degree); coefficients above it must be exactly zero.
// Finding more than k certified clusters reports InconsistentRootCount.
RootSet isolate_oracle(std::shared_ptr<const CoeffOracle> f, int k,
                       int finite_degree = -1);

// Post-processing establishing Isol 1-3 (idempotent).
RootSet well_isolate(const RootSet& rs);

// Shrinks every disk below 2^-bits, preserving containment, multiplicities,
// and Isol 1-2. Already-small disks are left untouched.
RootSet refine(const RootSet& rs, long bits);

// Same, for a single root (the others are untouched).
RootSet refine_root(const RootSet& rs, size_t index, long bits);

// Decides realness of every root of a conjugation-symmetric source (integer
// polynomial, or an oracle with real coefficients); real roots are
// re-centered onto the real axis.
RootSet classify_real(const RootSet& rs);

// Machine check of the well-isolation invariants from the disk data alone
// (the bands are verified against certified bounds on the true separations).
bool check_isolation_invariants(const RootSet& rs, std::string* why = nullptr);

// Test observation point: invoked with every root set that reaches or
// re-establishes the well-isolated state anywhere in the pipeline.
void set_rootset_observer(std::function<void(const RootSet&)> cb);

}  // namespace curvelab
