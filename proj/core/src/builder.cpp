#include "zerospan/builder.hpp"

#include <algorithm>
#include <sstream>

namespace zerospan {

PolyInput PolyInput::from_hom(HomPoly P) {
  PolyInput p;
  p.kind = Kind::Hom;
  p.hom = std::move(P);
  return p;
}

PolyInput PolyInput::from_finite(FiniteTypePoly F) {
  PolyInput p;
  p.kind = Kind::FiniteType;
  p.hom = finite_type_to_hompoly(F);
  p.finite = std::move(F);
  return p;
}

PolyInput PolyInput::from_multilinear(MultilinearForm A) {
  PolyInput p;
  p.kind = Kind::Multilinear;
  p.multilinear = std::move(A);
  return p;
}

Field PolyInput::field() const {
  switch (kind) {
  case Kind::Hom: return hom->field();
  case Kind::FiniteType: return finite->field();
  case Kind::Multilinear: return multilinear->field();
  }
  raise(Errc::Internal, "empty PolyInput");
}

namespace {

void enumerate_multisets(std::uint32_t n, std::uint32_t size,
                         std::vector<std::uint32_t>& cur,
                         const std::function<void(const std::vector<std::uint32_t>&)>& emit,
                         std::uint32_t start = 1) {
  if (cur.size() == size) { emit(cur); return; }
  for (std::uint32_t i = start; i <= n; ++i) {
    cur.push_back(i);
    enumerate_multisets(n, size, cur, emit, i);
    cur.pop_back();
  }
}

void enumerate_alphas(std::size_t K, std::uint32_t budget,
                      std::vector<std::uint32_t>& cur,
                      const std::function<void(const std::vector<std::uint32_t>&)>& emit) {
  if (cur.size() + 1 == K) {
    // Final multiplicity must be >= 1: earlier members are inherited.
    std::uint32_t used = 0;
    for (auto a : cur) used += a;
    for (std::uint32_t last = 1; used + last <= budget; ++last) {
      cur.push_back(last);
      emit(cur);
      cur.pop_back();
    }
    return;
  }
  std::uint32_t used = 0;
  for (auto a : cur) used += a;
  for (std::uint32_t a = 0; used + a + 1 <= budget; ++a) {
    cur.push_back(a);
    enumerate_alphas(K, budget, cur, emit);
    cur.pop_back();
  }
}

std::vector<std::pair<SparseVector, std::uint32_t>>
fixed_arguments(const DerivedDescriptor& d, const SeedSpace& seed,
                const std::vector<SparseVector>& witnesses) {
  std::vector<std::pair<SparseVector, std::uint32_t>> fixed;
  std::size_t i = 0;
  while (i < d.seed_indices.size()) {
    std::size_t j = i;
    while (j < d.seed_indices.size() && d.seed_indices[j] == d.seed_indices[i]) ++j;
    fixed.emplace_back(seed.basis.at(d.seed_indices[i] - 1), std::uint32_t(j - i));
    i = j;
  }
  for (std::size_t l = 0; l < d.alphas.size(); ++l)
    if (d.alphas[l] > 0) fixed.emplace_back(witnesses.at(l), d.alphas[l]);
  return fixed;
}

std::string descriptor_label(const DerivedDescriptor& d) {
  std::ostringstream os;
  os << "derived t=" << d.t << " i=[";
  for (std::size_t i = 0; i < d.seed_indices.size(); ++i)
    os << (i ? "," : "") << d.seed_indices[i];
  os << "] a=[";
  for (std::size_t i = 0; i < d.alphas.size(); ++i)
    os << (i ? "," : "") << d.alphas[i];
  os << "]";
  return os.str();
}

} // namespace

DerivedFamily enumerate_derived(const HomPoly& P, const SeedSpace& seed,
                                const std::vector<SparseVector>& witnesses,
                                const RunConfig& cfg) {
  const std::uint32_t m = P.degree();
  const std::uint32_t n = std::uint32_t(seed.dimension());
  if (n > 0) {
    Tolerance tol = field_is_exact(P.field()) ? Tolerance::exact()
                                              : Tolerance::approx(cfg.epsilon);
    auto chk = vanishes_on_span(P, seed.basis, tol);
    if (!chk.vanishes) {
      std::ostringstream detail;
      detail << "{\"witness_coefficient\":\"" << chk.witness->second.to_string() << "\"}";
      raise(Errc::SeedNotInZeroSet, "the polynomial does not vanish on the seed span",
            detail.str());
    }
  }

  DerivedFamily fam;
  if (m < 2) return fam;
  const std::size_t K = witnesses.size();

  auto emit = [&](std::uint32_t t, const std::vector<std::uint32_t>& idx,
                  const std::vector<std::uint32_t>& alphas) {
    DerivedDescriptor d{t, idx, alphas};
    HomPoly Q = derived_poly(P, fixed_arguments(d, seed, witnesses), t);
    if (Q.is_structurally_zero()) return;
    fam.members.push_back({std::move(d), std::move(Q)});
  };

  for (std::uint32_t t = 1; t + 1 <= m; ++t) {
    const std::uint32_t rem = m - t;
    std::vector<std::uint32_t> idx;
    if (K == 0) {
      if (n == 0) continue;
      enumerate_multisets(n, rem, idx,
                          [&](const std::vector<std::uint32_t>& is) { emit(t, is, {}); });
      continue;
    }
    std::vector<std::uint32_t> alphas;
    enumerate_alphas(K, rem, alphas, [&](const std::vector<std::uint32_t>& as) {
      std::uint32_t sum = 0;
      for (auto a : as) sum += a;
      const std::uint32_t j = rem - sum;
      if (j == 0) {
        emit(t, {}, as);
        return;
      }
      if (n == 0) return;
      std::vector<std::uint32_t> idx2;
      enumerate_multisets(n, j, idx2,
                          [&](const std::vector<std::uint32_t>& is) { emit(t, is, as); });
    });
  }
  std::sort(fam.members.begin(), fam.members.end(),
            [](const DerivedMember& a, const DerivedMember& b) {
              return a.descriptor < b.descriptor;
            });
  return fam;
}

namespace {

// ---------------------------------------------------------------------------
// Isotropic-span stream for a quadratic condition over the complex backends.
// Keeps one shared pool of upstream vectors; each yield costs one or two
// fresh pulls. New members must annihilate the polar functionals of all
// previous members, which keeps Q zero on the whole produced span.
class QuadraticIsotropicSource final : public SubspaceSource {
public:
  QuadraticIsotropicSource(HomPoly Q, Subspace base, RunConfig cfg,
                           std::shared_ptr<bool> taint)
      : Q_(std::move(Q)), base_(std::move(base)), cfg_(cfg),
        taint_(std::move(taint)) {}

  QuadraticIsotropicSource(const QuadraticIsotropicSource& o)
      : Q_(o.Q_), base_(o.base_.clone()), pool_(o.pool_), zs_(o.zs_),
        conds_(o.conds_), cfg_(o.cfg_), taint_(o.taint_) {}

  std::unique_ptr<SubspaceSource> clone() const override {
    return std::unique_ptr<SubspaceSource>(new QuadraticIsotropicSource(*this));
  }

  SparseVector next() override {
    const Field f = Q_.field();
    const bool exact_field = field_is_exact(f);
    std::vector<SparseVector> candidates;
    std::optional<SliceReport> first_slice;
    const int budget = std::max(2, cfg_.retry_budget);
    for (int attempt = 0; attempt < budget; ++attempt) {
      SparseVector a = fresh_direction(candidates);
      if (evaluate(Q_, a).is_zero()) return yield(std::move(a));
      for (const SparseVector& b : candidates) {
        SliceReport rep = binary_slice(Q_, b, a);
        if (rep.slice.is_zero()) return yield(b.plus(a)); // plane inside the quadric
        if (exact_field) {
          auto roots = find_exact_roots(rep.slice, cfg_.root_limits());
          std::vector<Scalar> nz;
          for (auto& r : roots)
            if (!r.is_zero()) nz.push_back(std::move(r));
          if (!nz.empty()) {
            Scalar t = pick_exact_root(nz);
            return yield(b.plus(a.scaled(t)));
          }
        }
        if (!first_slice) first_slice = std::move(rep);
      }
      candidates.push_back(std::move(a));
    }
    if (!first_slice)
      raise(Errc::Internal, "quadratic stream gathered no slice");
    // Approximate fallback, snapped into the exact field when applicable.
    std::vector<Scalar> roots;
    try {
      roots = find_approx_roots(first_slice->slice, Tolerance::approx(cfg_.epsilon),
                                cfg_.root_limits());
    } catch (const EngineError& e) {
      if (e.code() == Errc::NoConvergence)
        raise(Errc::BudgetExhausted,
              "quadratic refinement found no exact root and the fallback failed");
      throw;
    }
    Scalar best = roots.front();
    for (const auto& r : roots)
      if (std::norm(r.approx()) < std::norm(best.approx())) best = r;
    Scalar t = best;
    if (exact_field) {
      Rat re(best.approx().real()), im(best.approx().imag());
      re.canonicalize();
      im.canonicalize();
      t = f == Field::Rational ? Scalar::rational(re) : Scalar::gaussian(re, im);
    }
    Scalar residual = first_slice->slice.evaluate(t);
    if (residual.abs() > cfg_.epsilon * first_slice->slice.root_scale(t.approx()))
      raise(Errc::BudgetExhausted, "snapped quadratic root violates the residual bound");
    if (taint_) *taint_ = true;
    return yield(first_slice->u.plus(first_slice->v.scaled(t)));
  }

private:
  // A direction in span(pool) annihilating every polar functional and
  // independent of the produced vectors and candidates gathered so far.
  SparseVector fresh_direction(const std::vector<SparseVector>& candidates) {
    const Field f = Q_.field();
    for (;;) {
      const std::size_t p = pool_.size();
      if (p > 0) {
        DenseMatrix m(conds_.size(), std::vector<Scalar>(p, Scalar::zero(f)));
        for (std::size_t i = 0; i < conds_.size(); ++i)
          for (std::size_t j = 0; j < p; ++j) m[i][j] = conds_[i].pair(pool_[j]);
        DenseMatrix work = m;
        auto pivots = rref_in_place(work, f, cfg_.pivot_eps);
        std::vector<bool> is_pivot(p, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<SparseVector> taken = zs_;
        taken.insert(taken.end(), candidates.begin(), candidates.end());
        const int base_rank = exact_rank(taken, cfg_.pivot_eps);
        for (std::size_t fc = 0; fc < p; ++fc) {
          if (is_pivot[fc]) continue;
          SparseVector cand = pool_[fc];
          for (std::size_t r = 0; r < pivots.size(); ++r) {
            const Scalar& coeff = work[r][fc];
            if (!coeff.is_zero()) cand = cand.minus(pool_[pivots[r]].scaled(coeff));
          }
          if (cand.is_zero()) continue;
          taken.push_back(cand);
          if (exact_rank(taken, cfg_.pivot_eps) == base_rank + 1) return cand;
          taken.pop_back();
        }
      }
      pool_.push_back(base_.next());
    }
  }

  SparseVector yield(SparseVector z) {
    conds_.push_back(degree1_functional(derived_poly(Q_, {{z, 1}}, 1)));
    zs_.push_back(z);
    return z;
  }

  HomPoly Q_;
  Subspace base_;
  std::vector<SparseVector> pool_;
  std::vector<SparseVector> zs_;
  std::vector<SparseVector> conds_;
  RunConfig cfg_;
  std::shared_ptr<bool> taint_;
};

struct PolyContext {
  PolyInput input;
  HomPoly hom;
  std::optional<FiniteTypePoly> ft; // set when the kernel pathway drives zeros
  int poly_index = 0;

  static PolyContext make(const PolyInput& p, int index = 0) {
    if (p.kind == PolyInput::Kind::Multilinear)
      raise(Errc::InvalidInput, "multilinear forms use build_multilinear");
    PolyContext ctx;
    ctx.input = p;
    ctx.hom = *p.hom;
    ctx.poly_index = index;
    if (p.kind == PolyInput::Kind::FiniteType) {
      if (field_is_exact(p.finite->field())) ctx.ft = *p.finite;
    } else if (p.hom->field() == Field::Rational) {
      ctx.ft = try_finite_type(*p.hom);
    }
    return ctx;
  }
};

class BuildSession {
public:
  BuildSession(PolyContext ctx, SeedSpace seed, Subspace Y, RunConfig cfg, int depth,
               std::shared_ptr<bool> taint,
               std::vector<std::pair<SparseVector, std::string>> ambient_kernels = {})
      : ctx_(std::move(ctx)), seed_(std::move(seed)), cur_(std::move(Y)), cfg_(cfg),
        depth_(depth), taint_(std::move(taint)),
        ambient_kernels_(std::move(ambient_kernels)) {
    if (!taint_) taint_ = std::make_shared<bool>(false);
    if (ctx_.ft)
      cur_ = kernel_within(std::move(cur_), ctx_.ft->functionals(), "finite_type");
  }

  BuildSession(const BuildSession& o)
      : ctx_(o.ctx_), seed_(o.seed_), cur_(o.cur_.clone()), cfg_(o.cfg_),
        depth_(o.depth_), taint_(o.taint_), ambient_kernels_(o.ambient_kernels_),
        produced_(o.produced_), witnesses_(o.witnesses_), checks_(o.checks_),
        stages_(o.stages_) {}

  SparseVector step();
  Certificate finish(std::string kind, std::vector<PolyInput> polynomials) const;

  const std::vector<SparseVector>& produced() const { return produced_; }
  const std::shared_ptr<bool>& taint() const { return taint_; }

private:
  ZeroWitness find_zero();

  PolyContext ctx_;
  SeedSpace seed_;
  Subspace cur_;
  RunConfig cfg_;
  int depth_;
  std::shared_ptr<bool> taint_;
  std::vector<std::pair<SparseVector, std::string>> ambient_kernels_;
  std::vector<SparseVector> produced_;
  std::vector<ZeroWitness> witnesses_;
  std::vector<CheckRecord> checks_;
  std::vector<StageRecord> stages_;
};

// Yields the witnesses of a growing inner construction; used to realize
// vanishing subspaces of degree >= 3 conditions and intersection chains.
class SessionSource final : public SubspaceSource {
public:
  explicit SessionSource(BuildSession session) : session_(std::move(session)) {}

  SparseVector next() override { return session_.step(); }

  std::unique_ptr<SubspaceSource> clone() const override {
    return std::make_unique<SessionSource>(*this);
  }

private:
  BuildSession session_;
};

std::string step_detail(std::uint32_t step, int poly_index, const std::string& extra) {
  std::ostringstream os;
  os << "{\"step\":" << step << ",\"polynomial_index\":" << poly_index;
  if (!extra.empty() && extra != "{}") {
    std::string body = extra.substr(1, extra.size() - 2);
    if (!body.empty()) os << "," << body;
  }
  os << "}";
  return os.str();
}

SparseVector BuildSession::step() {
  const std::uint32_t k = std::uint32_t(produced_.size()) + 1;
  DerivedFamily family = enumerate_derived(ctx_.hom, seed_, produced_, cfg_);

  StageRecord stage;
  stage.step = k;
  if (k == 1) {
    stage.kernels = ambient_kernels_;
    if (ctx_.ft)
      for (const auto& phi : ctx_.ft->functionals())
        stage.kernels.emplace_back(phi, "finite_type");
  }

  std::vector<HomPoly> conditions;
  conditions.reserve(family.members.size());
  for (const auto& mem : family.members) conditions.push_back(mem.poly);

  std::size_t member_index = 0;
  Vanisher vanisher = [&](const HomPoly& Q, Subspace S) -> Subspace {
    const DerivedDescriptor& d = family.members[member_index++].descriptor;
    Subspace out = vanishing_subspace(Q, std::move(S), depth_ - 1, cfg_, taint_);
    const ProvenanceNode* node = out.provenance().get();
    if (node && node->kind == ProvenanceNode::Kind::Kernel) {
      for (const auto& phi : node->functionals)
        stage.kernels.emplace_back(phi, descriptor_label(d));
    } else {
      stage.recursions.push_back(Q);
    }
    return out;
  };
  try {
    cur_ = refine_vanishing(std::move(cur_), conditions, vanisher);
    if (k >= 2) {
      const SparseVector& prev = produced_.back();
      cur_ = exclude_vector(std::move(cur_), prev);
      stage.exclusion_functional = SparseVector::unit(cur_.field(), prev.min_index());
      stage.excluded_step = k - 1;
    }

    ZeroWitness w = find_zero();
    if (!w.exact) *taint_ = true;

    for (const auto& mem : family.members) {
      Scalar val = evaluate(mem.poly, w.vector);
      bool exact_zero = val.is_zero();
      if (!exact_zero) {
        const double bound = cfg_.epsilon * span_scale(mem.poly, {w.vector});
        const bool tolerated = (*taint_ || !field_is_exact(ctx_.hom.field())) &&
                               val.abs() <= bound;
        if (!tolerated)
          raise(Errc::Internal,
                "derived polynomial " + descriptor_label(mem.descriptor) +
                    " does not vanish at the step-" + std::to_string(k) + " witness");
      }
      checks_.push_back({mem.descriptor, k, exact_zero});
    }

    std::vector<SparseVector> all = seed_.basis;
    all.insert(all.end(), produced_.begin(), produced_.end());
    all.push_back(w.vector);
    if (exact_rank(all, cfg_.pivot_eps) != int(seed_.dimension() + k))
      raise(Errc::Internal, "independence lost at step " + std::to_string(k));

    produced_.push_back(w.vector);
    witnesses_.push_back(std::move(w));
    stages_.push_back(std::move(stage));
    return produced_.back();
  } catch (EngineError& e) {
    if (errc_is_mathematical(e.code()))
      throw EngineError(e.code(), e.what(), step_detail(k, ctx_.poly_index, e.detail()));
    throw;
  }
}

ZeroWitness BuildSession::find_zero() {
  if (ctx_.ft) return find_zero_finite_type(*ctx_.ft, cur_);
  if (ctx_.hom.field() == Field::Rational)
    return find_zero_real(ctx_.hom, cur_, cfg_.zero_find());
  return find_zero_complex(ctx_.hom, cur_, cfg_.zero_find());
}

mpz_class table_size(std::uint32_t dim, std::uint32_t m) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), dim + m - 1, m);
  return b;
}

Certificate BuildSession::finish(std::string kind,
                                 std::vector<PolyInput> polynomials) const {
  Certificate c;
  c.kind = std::move(kind);
  c.field = ctx_.hom.field();
  c.polynomials = std::move(polynomials);
  c.seed = seed_.basis;
  c.produced = produced_;
  c.witnesses = witnesses_;
  c.checks = checks_;
  c.stages = stages_;
  c.exact = field_is_exact(c.field) && !*taint_;
  c.epsilon = cfg_.epsilon;
  c.sample_seed = cfg_.sample_seed;
  c.sample_count = cfg_.sample_count;

  const std::uint32_t dim = std::uint32_t(c.seed.size() + c.produced.size());
  mpz_class largest = 0;
  for (const auto& p : c.polynomials)
    if (p.hom) largest = std::max(largest, table_size(dim, p.hom->degree()));
  c.verification_policy =
      largest <= mpz_class(static_cast<unsigned long>(cfg_.full_table_threshold))
          ? "full"
          : "sampled";

  auto rep = verify_certificate(c);
  if (!rep.ok())
    raise(Errc::Internal, "freshly built certificate failed verification: " +
                              rep.failures.front().check + " (" +
                              rep.failures.front().detail + ")");
  return c;
}

} // namespace

Subspace vanishing_subspace(const HomPoly& Q, Subspace S, int depth,
                            const RunConfig& cfg, std::shared_ptr<bool> taint) {
  if (depth <= 0)
    raise(Errc::DepthExceeded, "vanishing_subspace recursion exceeded the degree bound");
  if (Q.degree() < 1)
    raise(Errc::InvalidInput, "vanishing_subspace needs a condition of degree >= 1");
  require_same_field(Q.field(), S.field(), "vanishing_subspace");

  if (Q.degree() == 1 && !Q.tail())
    return kernel_within(std::move(S), {degree1_functional(Q)}, "derived");

  if (Q.field() == Field::Rational) {
    if (auto F = try_finite_type(Q))
      return kernel_within(std::move(S), F->functionals(), "finite_type");
  }

  auto node = std::make_shared<ProvenanceNode>();
  node->kind = ProvenanceNode::Kind::VanishingRecursion;
  node->conditions = {Q};
  node->parent = S.provenance();
  const Field f = S.field();
  const StreamConfig scfg = S.config();

  if (Q.degree() == 2 && Q.field() != Field::Rational) {
    auto src = std::make_unique<QuadraticIsotropicSource>(Q, std::move(S), cfg, taint);
    return make_stream(f, scfg, std::move(src), std::move(node));
  }

  PolyContext ctx = PolyContext::make(PolyInput::from_hom(Q));
  BuildSession inner(std::move(ctx), SeedSpace{}, std::move(S), cfg, depth - 1,
                     std::move(taint));
  return make_stream(f, scfg, std::make_unique<SessionSource>(std::move(inner)),
                     std::move(node));
}

namespace {

Certificate drive(BuildSession& session, std::uint32_t count, std::string kind,
                  std::vector<PolyInput> polys) {
  for (std::uint32_t k = 0; k < count; ++k) session.step();
  return session.finish(std::move(kind), std::move(polys));
}

// The dual functionals realizing the complement choice; recorded in the
// certificate so membership replay can check them.
std::vector<std::pair<SparseVector, std::string>>
complement_kernels(const Subspace& Y) {
  std::vector<std::pair<SparseVector, std::string>> out;
  const ProvenanceNode* node = Y.provenance().get();
  if (node && node->kind == ProvenanceNode::Kind::Kernel && node->label == "complement")
    for (const auto& phi : node->functionals) out.emplace_back(phi, "complement");
  return out;
}

} // namespace

Certificate build_zero_space(const PolyInput& poly, const SeedSpace& seed,
                             std::uint32_t count, const RunConfig& cfg) {
  PolyContext ctx = PolyContext::make(poly);
  const Field f = ctx.hom.field();
  const int depth = int(ctx.hom.degree()) + 1;
  Subspace Y = direct_complement(seed, f, cfg.stream());
  auto taint = std::make_shared<bool>(false);
  auto duals = complement_kernels(Y);
  BuildSession session(std::move(ctx), seed, std::move(Y), cfg, depth, taint,
                       std::move(duals));
  return drive(session, count, "zero_space", {poly});
}

Certificate build_intersection(const std::vector<PolyInput>& polys,
                               const SeedSpace& seed, std::uint32_t count,
                               const RunConfig& cfg) {
  if (polys.empty()) raise(Errc::InvalidInput, "build_intersection with no polynomials");
  const Field f = polys.front().field();
  for (const auto& p : polys) require_same_field(f, p.field(), "build_intersection");

  auto taint = std::make_shared<bool>(false);
  std::vector<std::pair<SparseVector, std::string>> duals;
  std::unique_ptr<BuildSession> session;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    PolyContext ctx = PolyContext::make(polys[i], int(i));
    const int depth = int(ctx.hom.degree()) + 1;
    Subspace Y = [&]() -> Subspace {
      if (i == 0) {
        Subspace Y0 = direct_complement(seed, f, cfg.stream());
        duals = complement_kernels(Y0);
        return Y0;
      }
      auto node = std::make_shared<ProvenanceNode>();
      node->kind = ProvenanceNode::Kind::VanishingRecursion;
      node->conditions = {*polys[i - 1].hom};
      node->label = "intersection_stage";
      return make_stream(f, cfg.stream(),
                         std::make_unique<SessionSource>(std::move(*session)),
                         std::move(node));
    }();
    // Everything later sessions produce stays inside the first complement,
    // so the dual functionals are valid stage-1 conditions for each of them.
    session = std::make_unique<BuildSession>(std::move(ctx), seed, std::move(Y), cfg,
                                             depth, taint, duals);
  }
  return drive(*session, count, "intersection", polys);
}

Certificate build_through_point(const PolyInput& poly, const SparseVector& x,
                                std::uint32_t count, const RunConfig& cfg) {
  if (x.is_zero())
    raise(Errc::InvalidInput, "build_through_point needs a nonzero point");
  const HomPoly& P = *poly.hom;
  require_same_field(P.field(), x.field(), "build_through_point");
  Scalar val = evaluate(P, x);
  bool ok = field_is_exact(P.field())
                ? val.is_zero()
                : val.abs() <= cfg.epsilon * span_scale(P, {x});
  if (!ok)
    raise(Errc::PointNotAZero, "the point is not in the zero set (P(x) = " +
                                   val.to_string() + ")");
  Certificate c = build_zero_space(poly, SeedSpace{{x}}, count, cfg);
  c.kind = "through_point";
  auto rep = verify_certificate(c);
  if (!rep.ok()) raise(Errc::Internal, "through-point certificate failed verification");
  return c;
}

Certificate build_multilinear(const MultilinearForm& A,
                              std::vector<Subspace> slot_spaces,
                              std::uint32_t count, const RunConfig& cfg) {
  if (A.arity() < 2)
    raise(Errc::ArityMismatch, "build_multilinear needs arity >= 2");
  const Field f = A.field();

  // Mode fibers of the coefficient table: killing every single-slot
  // contraction makes A vanish on all tuples from the produced span.
  std::vector<SparseVector> fibers;
  for (std::size_t slot = 0; slot < A.arity(); ++slot) {
    std::map<std::vector<std::uint32_t>, std::vector<SparseVector::Entry>> groups;
    for (const auto& [key, c] : A.entries()) {
      std::vector<std::uint32_t> rest;
      for (std::size_t j = 0; j < key.size(); ++j)
        if (j != slot) rest.push_back(key[j]);
      groups[rest].push_back({key[slot], c});
    }
    for (auto& [rest, entries] : groups) {
      SparseVector phi(f, entries);
      if (!phi.is_zero() &&
          std::find(fibers.begin(), fibers.end(), phi) == fibers.end())
        fibers.push_back(std::move(phi));
    }
  }

  Subspace Z = slot_spaces.empty() ? full_space(f, cfg.stream())
                                   : std::move(slot_spaces.front());
  Z = kernel_within(std::move(Z), fibers, "multilinear_fibers");

  Certificate c;
  c.kind = "multilinear";
  c.field = f;
  c.polynomials = {PolyInput::from_multilinear(A)};
  c.exact = field_is_exact(f);
  c.epsilon = cfg.epsilon;
  c.sample_seed = cfg.sample_seed;
  c.sample_count = cfg.sample_count;
  c.verification_policy = "tuples";

  for (std::uint32_t k = 1; k <= count; ++k) {
    StageRecord stage;
    stage.step = k;
    if (k == 1)
      for (const auto& phi : fibers) stage.kernels.emplace_back(phi, "multilinear_fiber");
    if (k >= 2) {
      const SparseVector& prev = c.produced.back();
      Z = exclude_vector(std::move(Z), prev);
      stage.exclusion_functional = SparseVector::unit(f, prev.min_index());
      stage.excluded_step = k - 1;
    }
    ZeroWitness w;
    w.kind = ZeroWitness::Kind::Kernel;
    w.vector = Z.next();
    w.exact = field_is_exact(f);
    c.produced.push_back(w.vector);
    c.witnesses.push_back(std::move(w));
    c.stages.push_back(std::move(stage));
  }

  auto rep = verify_certificate(c);
  if (!rep.ok())
    raise(Errc::Internal, "multilinear certificate failed verification: " +
                              rep.failures.front().check);
  return c;
}

} // namespace zerospan
