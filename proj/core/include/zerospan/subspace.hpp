#ifndef ZEROSPAN_SUBSPACE_HPP
#define ZEROSPAN_SUBSPACE_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "zerospan/hompoly.hpp"
#include "zerospan/linalg.hpp"

namespace zerospan {

struct StreamConfig {
  std::uint32_t max_ambient_index = 1000000;
  double pivot_eps = 1e-9;
};

// How a subspace was derived; serialized into certificates so a verifier can
// replay the membership conditions on every produced vector.
struct ProvenanceNode {
  enum class Kind { Full, Kernel, Exclude, Refine, VanishingRecursion };

  Kind kind = Kind::Full;
  std::string label;                    // "complement", "finite_type", ...
  std::vector<SparseVector> functionals; // Kernel / Exclude
  std::optional<SparseVector> excluded;  // Exclude
  std::vector<HomPoly> conditions;       // Refine / VanishingRecursion
  std::shared_ptr<const ProvenanceNode> parent;
};

const char* provenance_kind_name(ProvenanceNode::Kind k);

// Stateful generator behind a Subspace. Implementations must yield nonzero
// vectors, each linearly independent of the vectors they yielded before.
class SubspaceSource {
public:
  virtual ~SubspaceSource() = default;
  virtual SparseVector next() = 0;
  virtual std::unique_ptr<SubspaceSource> clone() const = 0;
};

// Lazy infinite-dimensional subspace of the space of finitely-supported
// sequences. Streams are single-owner; clone() snapshots the state into an
// independent stream.
class Subspace {
public:
  Subspace(Field field, StreamConfig config, std::unique_ptr<SubspaceSource> source,
           std::shared_ptr<const ProvenanceNode> provenance);
  Subspace(Subspace&&) = default;
  Subspace& operator=(Subspace&&) = default;

  SparseVector next();
  Field field() const { return field_; }
  const StreamConfig& config() const { return config_; }
  const std::vector<SparseVector>& history() const { return history_; }
  const std::shared_ptr<const ProvenanceNode>& provenance() const { return prov_; }
  Subspace clone() const;

  SubspaceSource* source() { return source_.get(); }
  std::unique_ptr<SubspaceSource> release_source() { return std::move(source_); }
  void set_provenance(std::shared_ptr<const ProvenanceNode> p) { prov_ = std::move(p); }

private:
  Field field_;
  StreamConfig config_;
  std::unique_ptr<SubspaceSource> source_;
  std::shared_ptr<const ProvenanceNode> prov_;
  std::vector<SparseVector> history_;
};

// Finite-dimensional seed: a basis for the subspace the construction must
// extend. n = 0 encodes the zero space.
struct SeedSpace {
  std::vector<SparseVector> basis;

  std::size_t dimension() const { return basis.size(); }
};

// The ambient space: yields the standard basis e1, e2, e3, ...
Subspace full_space(Field field, StreamConfig config = {});

// Vectors of S annihilated by every functional. Pull-and-eliminate: vectors
// are pulled from S and exact null combinations are emitted as soon as the
// pulled count exceeds the value matrix rank. Consecutive kernels over the
// same base collapse into one elimination state sharing the pulled pool (the
// yielded vectors depend on the elimination schedule; the stream contract
// does not).
Subspace kernel_within(Subspace S, std::vector<SparseVector> functionals,
                       std::string label = "");

// Kernel of one coordinate functional e_j with v_j != 0: v is excluded while
// the result sits inside S with codimension at most one.
Subspace exclude_vector(Subspace S, const SparseVector& v);

// Nests vanisher(f_i, .) over the conditions in order and wraps the chain in
// a refine node. The vanisher maps (condition, stream) to a stream on which
// the condition vanishes; the builder supplies kernels for degree 1 and
// recursive constructions for higher degree.
using Vanisher = std::function<Subspace(const HomPoly&, Subspace)>;
Subspace refine_vanishing(Subspace S, const std::vector<HomPoly>& conditions,
                          const Vanisher& vanisher);

// Constructive complement of span(seed): kernel of the dual functionals
// psi_i with <psi_i, x_j> = delta_ij obtained by exact elimination on the
// seed basis.
Subspace direct_complement(const SeedSpace& seed, Field field, StreamConfig config = {});

// Wraps a custom source (used by the builder's recursive constructions).
Subspace make_stream(Field field, StreamConfig config,
                     std::unique_ptr<SubspaceSource> source,
                     std::shared_ptr<const ProvenanceNode> provenance);

// Linear functional encoded by a tail-free degree-1 polynomial.
SparseVector degree1_functional(const HomPoly& P);

} // namespace zerospan

#endif
