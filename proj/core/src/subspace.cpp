#include "zerospan/subspace.hpp"

#include <algorithm>
#include <set>

namespace zerospan {

const char* provenance_kind_name(ProvenanceNode::Kind k) {
  switch (k) {
  case ProvenanceNode::Kind::Full: return "full";
  case ProvenanceNode::Kind::Kernel: return "kernel";
  case ProvenanceNode::Kind::Exclude: return "exclude";
  case ProvenanceNode::Kind::Refine: return "refine";
  case ProvenanceNode::Kind::VanishingRecursion: return "vanishing_recursion";
  }
  return "?";
}

Subspace::Subspace(Field field, StreamConfig config,
                   std::unique_ptr<SubspaceSource> source,
                   std::shared_ptr<const ProvenanceNode> provenance)
    : field_(field), config_(config), source_(std::move(source)),
      prov_(std::move(provenance)) {}

SparseVector Subspace::next() {
  SparseVector v = source_->next();
  history_.push_back(v);
  return v;
}

Subspace Subspace::clone() const {
  Subspace copy(field_, config_, source_->clone(), prov_);
  copy.history_ = history_;
  return copy;
}

namespace {

class FullSource final : public SubspaceSource {
public:
  FullSource(Field field, std::uint32_t max_index)
      : field_(field), max_index_(max_index) {}

  SparseVector next() override {
    if (next_index_ > max_index_)
      raise(Errc::StreamExhausted,
            "ambient index bound " + std::to_string(max_index_) + " reached");
    return SparseVector::unit(field_, next_index_++);
  }

  std::unique_ptr<SubspaceSource> clone() const override {
    return std::make_unique<FullSource>(*this);
  }

private:
  Field field_;
  std::uint32_t max_index_;
  std::uint32_t next_index_ = 1;
};

class KernelSource final : public SubspaceSource {
public:
  KernelSource(Subspace base, std::vector<SparseVector> funcs)
      : base_(std::move(base)), funcs_(std::move(funcs)),
        elim_(funcs_.size(), base_.field(), base_.config().pivot_eps) {}

  KernelSource(const KernelSource& o)
      : base_(o.base_.clone()), funcs_(o.funcs_), pool_(o.pool_),
        elim_(o.elim_), delivered_(o.delivered_) {}

  SparseVector next() override {
    while (elim_.free_count() <= delivered_) pull_one();
    auto coeffs = elim_.null_vector(delivered_);
    SparseVector y(base_.field());
    for (const auto& [idx, c] : coeffs) y = y.plus(pool_[idx].scaled(c));
    ++delivered_;
    if (y.is_zero()) raise(Errc::Internal, "kernel stream produced the zero vector");
    return y;
  }

  std::unique_ptr<SubspaceSource> clone() const override {
    return std::unique_ptr<SubspaceSource>(new KernelSource(*this));
  }

  const std::vector<SparseVector>& functionals() const { return funcs_; }
  Subspace take_base() { return std::move(base_); }
  std::vector<SparseVector> take_pool() { return std::move(pool_); }

private:
  void pull_one() {
    SparseVector u = base_.next();
    std::vector<Scalar> col;
    col.reserve(funcs_.size());
    for (const auto& phi : funcs_) col.push_back(phi.pair(u));
    pool_.push_back(std::move(u));
    elim_.append(std::move(col));
  }

  Subspace base_;
  std::vector<SparseVector> funcs_;
  std::vector<SparseVector> pool_;
  IncrementalRref elim_;
  std::size_t delivered_ = 0;

  friend Subspace zerospan::kernel_within(Subspace, std::vector<SparseVector>,
                                          std::string);
};

} // namespace

Subspace full_space(Field field, StreamConfig config) {
  auto node = std::make_shared<ProvenanceNode>();
  node->kind = ProvenanceNode::Kind::Full;
  return Subspace(field, config,
                  std::make_unique<FullSource>(field, config.max_ambient_index),
                  std::move(node));
}

Subspace make_stream(Field field, StreamConfig config,
                     std::unique_ptr<SubspaceSource> source,
                     std::shared_ptr<const ProvenanceNode> provenance) {
  return Subspace(field, config, std::move(source), std::move(provenance));
}

Subspace kernel_within(Subspace S, std::vector<SparseVector> functionals,
                       std::string label) {
  const Field f = S.field();
  const StreamConfig config = S.config();

  std::vector<SparseVector> wanted;
  for (auto& phi : functionals) {
    require_same_field(f, phi.field(), "kernel_within");
    if (phi.is_zero()) continue; // kernel of 0 is the whole space
    if (std::find(wanted.begin(), wanted.end(), phi) == wanted.end())
      wanted.push_back(std::move(phi));
  }

  auto node = std::make_shared<ProvenanceNode>();
  node->kind = ProvenanceNode::Kind::Kernel;
  node->label = std::move(label);
  node->functionals = wanted;
  node->parent = S.provenance();

  if (wanted.empty()) {
    S.set_provenance(std::move(node));
    return S;
  }

  // Collapse kernel-over-kernel: inherit the base stream, the pulled pool and
  // the functional list, then rebuild the elimination state.
  std::unique_ptr<SubspaceSource> src = S.release_source();
  if (auto* k = dynamic_cast<KernelSource*>(src.get())) {
    std::vector<SparseVector> funcs = k->functionals();
    for (const auto& phi : wanted)
      if (std::find(funcs.begin(), funcs.end(), phi) == funcs.end())
        funcs.push_back(phi);
    std::vector<SparseVector> pool = k->take_pool();
    auto merged = std::make_unique<KernelSource>(k->take_base(), std::move(funcs));
    for (const auto& u : pool) {
      std::vector<Scalar> col;
      col.reserve(merged->funcs_.size());
      for (const auto& phi : merged->funcs_) col.push_back(phi.pair(u));
      merged->pool_.push_back(u);
      merged->elim_.append(std::move(col));
    }
    return Subspace(f, config, std::move(merged), std::move(node));
  }

  Subspace base(f, config, std::move(src), S.provenance());
  return Subspace(f, config,
                  std::make_unique<KernelSource>(std::move(base), std::move(wanted)),
                  std::move(node));
}

Subspace exclude_vector(Subspace S, const SparseVector& v) {
  if (v.is_zero()) raise(Errc::ZeroVector, "exclude_vector of the zero vector");
  require_same_field(S.field(), v.field(), "exclude_vector");
  SparseVector psi = SparseVector::unit(S.field(), v.min_index());

  auto parent = S.provenance();
  Subspace out = kernel_within(std::move(S), {psi});
  auto node = std::make_shared<ProvenanceNode>();
  node->kind = ProvenanceNode::Kind::Exclude;
  node->functionals = {psi};
  node->excluded = v;
  node->parent = parent;
  out.set_provenance(std::move(node));
  return out;
}

Subspace refine_vanishing(Subspace S, const std::vector<HomPoly>& conditions,
                          const Vanisher& vanisher) {
  if (conditions.empty()) return S;
  auto parent = S.provenance();
  for (const auto& f : conditions) {
    if (f.degree() < 1)
      raise(Errc::InvalidInput, "refine_vanishing condition of degree 0");
    require_same_field(S.field(), f.field(), "refine_vanishing");
    S = vanisher(f, std::move(S));
  }
  auto node = std::make_shared<ProvenanceNode>();
  node->kind = ProvenanceNode::Kind::Refine;
  node->conditions = conditions;
  node->parent = S.provenance();
  S.set_provenance(std::move(node));
  return S;
}

Subspace direct_complement(const SeedSpace& seed, Field field, StreamConfig config) {
  if (seed.basis.empty()) return full_space(field, config);
  const std::size_t n = seed.basis.size();

  std::set<std::uint32_t> support;
  for (const auto& x : seed.basis) {
    require_same_field(field, x.field(), "direct_complement");
    for (const auto& [idx, val] : x.entries()) support.insert(idx);
  }
  std::vector<std::uint32_t> cols(support.begin(), support.end());
  DenseMatrix rows(n, std::vector<Scalar>(cols.size(), Scalar::zero(field)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      rows[i][j] = seed.basis[i].at(cols[j]);

  auto pivot_cols = rref_in_place(rows, field, config.pivot_eps);
  if (pivot_cols.size() < n)
    raise(Errc::DependentSeed, "seed basis is linearly dependent");

  // psi_i = sum_k A[i][k] e_{p_k} with A the inverse of D[k][j] = x_j[p_k],
  // so that <psi_i, x_j> = delta_ij.
  std::vector<std::uint32_t> pivot_vars;
  for (auto c : pivot_cols) pivot_vars.push_back(cols[c]);
  DenseMatrix D(n, std::vector<Scalar>(n, Scalar::zero(field)));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) D[k][j] = seed.basis[j].at(pivot_vars[k]);
  DenseMatrix A = matrix_inverse(D, field, config.pivot_eps);

  std::vector<SparseVector> duals;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<SparseVector::Entry> entries;
    for (std::size_t k = 0; k < n; ++k)
      if (!A[i][k].is_zero()) entries.push_back({pivot_vars[k], A[i][k]});
    duals.push_back(SparseVector(field, std::move(entries)));
  }
  return kernel_within(full_space(field, config), std::move(duals), "complement");
}

SparseVector degree1_functional(const HomPoly& P) {
  if (P.degree() != 1 || P.tail())
    raise(Errc::Internal, "degree1_functional needs a tail-free degree-1 polynomial");
  std::vector<SparseVector::Entry> entries;
  for (const auto& [mi, c] : P.terms())
    entries.push_back({mi.entries().front().first, c});
  return SparseVector(P.field(), std::move(entries));
}

} // namespace zerospan
