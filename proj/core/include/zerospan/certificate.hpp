#ifndef ZEROSPAN_CERTIFICATE_HPP
#define ZEROSPAN_CERTIFICATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zerospan/multilinear.hpp"
#include "zerospan/zerofind.hpp"

namespace zerospan {

// A polynomial input in any of the three accepted shapes. The homogeneous
// expansion is kept alongside finite-type inputs so table checks share one
// code path.
struct PolyInput {
  enum class Kind { Hom, FiniteType, Multilinear };

  Kind kind = Kind::Hom;
  std::optional<HomPoly> hom;
  std::optional<FiniteTypePoly> finite;
  std::optional<MultilinearForm> multilinear;

  static PolyInput from_hom(HomPoly P);
  static PolyInput from_finite(FiniteTypePoly F);
  static PolyInput from_multilinear(MultilinearForm A);

  Field field() const;
};

// Identifies one derived polynomial: Pcheck(x_{i_1},...,x_{i_j},
// y_1^{a_1},...,y_K^{a_K}, x^t) with seed indices as a multiset and one
// multiplicity per existing witness.
struct DerivedDescriptor {
  std::uint32_t t = 0;
  std::vector<std::uint32_t> seed_indices;
  std::vector<std::uint32_t> alphas;

  friend bool operator==(const DerivedDescriptor&, const DerivedDescriptor&) = default;
  bool operator<(const DerivedDescriptor& o) const {
    if (t != o.t) return t < o.t;
    if (seed_indices != o.seed_indices) return seed_indices < o.seed_indices;
    return alphas < o.alphas;
  }
};

struct DerivedMember {
  DerivedDescriptor descriptor;
  HomPoly poly;
};

struct DerivedFamily {
  std::vector<DerivedMember> members; // sorted by (t, seed indices, alphas)
};

// One mixed-polarization condition verified at a witness.
struct CheckRecord {
  DerivedDescriptor descriptor;
  std::uint32_t step = 0; // witness the condition was evaluated at (1-based)
  bool exact = true;
};

// Conditions imposed on the stream at one step of the main loop. A stage
// applies to every witness from its step onward.
struct StageRecord {
  std::uint32_t step = 0;
  std::vector<std::pair<SparseVector, std::string>> kernels; // functional, origin
  std::vector<HomPoly> recursions; // degree >= 2 vanishing conditions
  std::optional<SparseVector> exclusion_functional;
  std::optional<std::uint32_t> excluded_step; // the witness that must fail it
};

struct Certificate {
  std::string kind = "zero_space"; // zero_space | intersection | through_point | multilinear
  Field field = Field::Rational;
  std::vector<PolyInput> polynomials;
  std::vector<SparseVector> seed;
  std::vector<SparseVector> produced;
  std::vector<ZeroWitness> witnesses;
  std::vector<CheckRecord> checks;
  std::vector<StageRecord> stages;
  bool exact = true;
  double epsilon = 1e-9; // residual bound used when not exact
  std::string verification_policy = "full"; // full | sampled | tuples
  std::uint64_t sample_seed = 0;
  int sample_count = 0;
};

struct VerifyFailure {
  std::string check;  // rank, vanishes_on_span, membership, exclusion,
                      // witness_replay, checks_incomplete, check_value, ...
  std::string detail;
};

struct VerifyReport {
  std::vector<std::string> passed;
  std::vector<VerifyFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Re-runs every certificate invariant from the file contents alone: rank,
// the polarization table (or the recorded sampling policy), witness replay,
// membership replay over the stages, exclusion discipline, and the derived
// check list compared against a fresh enumeration.
VerifyReport verify_certificate(const Certificate& cert);

} // namespace zerospan

#endif
