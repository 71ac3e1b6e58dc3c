#ifndef ZEROSPAN_BUILDER_HPP
#define ZEROSPAN_BUILDER_HPP

#include <memory>

#include "zerospan/certificate.hpp"

namespace zerospan {

struct RunConfig {
  double epsilon = 1e-9;               // residual bound for approximate steps
  int retry_budget = 8;                // (u, v) pairs per zero search
  int root_iteration_budget = 200;     // approximate root sweeps
  unsigned long divisor_bound = 1000000;
  std::uint32_t max_ambient_index = 1000000;
  std::size_t full_table_threshold = 10000; // max table size verified in full
  int sample_count = 100;
  std::uint64_t sample_seed = 12345;
  int probe_pairs = 5;
  double pivot_eps = 1e-9; // approximate-backend rank threshold

  StreamConfig stream() const { return {max_ambient_index, pivot_eps}; }
  RootSearchLimits root_limits() const { return {divisor_bound, root_iteration_budget}; }
  ZeroFindOptions zero_find() const {
    return {retry_budget, Tolerance::approx(epsilon), root_limits()};
  }
};

// Every derived polynomial newly required at the next step: all fixed-argument
// multisets over the seed, witness multiplicities with a positive final entry
// (earlier members are inherited through stream nesting), for each target
// degree t in [1, m-1]. Identically-zero members are dropped.
DerivedFamily enumerate_derived(const HomPoly& P, const SeedSpace& seed,
                                const std::vector<SparseVector>& witnesses,
                                const RunConfig& cfg = {});

// A stream on which Q vanishes, inside S. Degree 1 maps to a kernel; degree
// 2 over the complex backends to an isotropic-span construction; real
// finite-type shapes to the kernel of their functionals; anything else to a
// recursive build running inside S. Depth decreases with the degree and
// bounds the recursion.
Subspace vanishing_subspace(const HomPoly& Q, Subspace S, int depth,
                            const RunConfig& cfg = {},
                            std::shared_ptr<bool> approx_taint = nullptr);

// The main construction: alternately refine the stream so every derived
// polynomial vanishes on it, exclude the previous witness, and pick the next
// zero; after L steps the produced vectors extend the seed to an
// independent family on whose span the polynomial vanishes.
Certificate build_zero_space(const PolyInput& poly, const SeedSpace& seed,
                             std::uint32_t count, const RunConfig& cfg = {});

// Sequential intersection: each polynomial is rebuilt inside the subspace
// stream produced for the previous ones; the certificate verifies every
// polynomial's table.
Certificate build_intersection(const std::vector<PolyInput>& polys,
                               const SeedSpace& seed, std::uint32_t count,
                               const RunConfig& cfg = {});

// Seed = span{x}.
Certificate build_through_point(const PolyInput& poly, const SparseVector& x,
                                std::uint32_t count, const RunConfig& cfg = {});

// Direct construction for an m-linear form: the kernel of every mode fiber
// of the coefficient table makes the whole produced span annihilate A on all
// argument tuples; no recursion is involved.
Certificate build_multilinear(const MultilinearForm& A,
                              std::vector<Subspace> slot_spaces,
                              std::uint32_t count, const RunConfig& cfg = {});

} // namespace zerospan

#endif
