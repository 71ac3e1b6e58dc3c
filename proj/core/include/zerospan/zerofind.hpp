#ifndef ZEROSPAN_ZEROFIND_HPP
#define ZEROSPAN_ZEROFIND_HPP

#include "zerospan/finite_type.hpp"
#include "zerospan/subspace.hpp"
#include "zerospan/unipoly.hpp"

namespace zerospan {

// The univariate restriction t -> P(u + t v) with coefficients
// C(m,t') * Pcheck(u^{m-t'}, v^{t'}) computed through derived polynomials.
struct SliceReport {
  SparseVector u, v;
  UniPoly slice;
  std::optional<Scalar> root;
  bool exact = true;
};

SliceReport binary_slice(const HomPoly& P, const SparseVector& u,
                         const SparseVector& v);

// How a zero was produced; recorded per step in certificates.
struct ZeroWitness {
  enum class Kind { Direct, Slice, Kernel };
  Kind kind = Kind::Direct;
  SparseVector vector;
  bool exact = true;
  std::optional<SliceReport> slice;
};

struct ZeroFindOptions {
  int retry_budget = 8;          // distinct (u, v) pairs before degrading
  Tolerance tolerance{1e-9};     // residual bound for approximate roots
  RootSearchLimits root_limits{};
};

// Pulls stream vectors, slices, and roots. Exact roots are preferred across
// the retry budget; the approximate fallback on the first slice snaps its
// root to an exact dyadic Gaussian rational on exact backends so downstream
// arithmetic stays exact while the certificate is demoted to tolerance
// checks. Never concludes "no zero exists": over C a slice root always
// exists, so only numerical non-convergence can fail.
ZeroWitness find_zero_complex(const HomPoly& P, Subspace& S,
                              const ZeroFindOptions& opts = {});

// First yield of the kernel of all functionals of F inside S; bit-exact.
ZeroWitness find_zero_finite_type(const FiniteTypePoly& F, const Subspace& S);

// Best-effort real slice search; NoRealZero with slice diagnostics when no
// exact real root shows up within the budget.
ZeroWitness find_zero_real(const HomPoly& P, Subspace& S,
                           const ZeroFindOptions& opts = {});

struct SliceProbe {
  SparseVector u, v;
  UniPoly slice;
  std::optional<Rat> discriminant; // degree-2 slices only
  bool no_real_root_certified = false;
};

struct ProbeReport {
  enum class Kind { RootFound, NoRealRootOnProbedSlices };
  Kind kind = Kind::NoRealRootOnProbedSlices;
  std::optional<SparseVector> witness;
  std::vector<SliceProbe> slices;
};

// Examines binary slices of a real even-degree polynomial. Reporting
// NoRealRootOnProbedSlices is a diagnosis of failed slice search, not a
// proof of positive definiteness.
ProbeReport probe_real_definite(const HomPoly& P, Subspace& S, int pairs,
                                const RootSearchLimits& limits = {});

// Deterministic choice among candidate roots: smallest by numerator norm,
// then denominator, ties resolved toward the lexicographically largest
// (re, im) pair.
Scalar pick_exact_root(const std::vector<Scalar>& roots);

} // namespace zerospan

#endif
