#include "zerospan/certificate.hpp"

#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "zerospan/builder.hpp"

namespace zerospan {

namespace {

struct Checker {
  const Certificate& cert;
  VerifyReport report;

  bool exact_level() const { return cert.exact; }

  void fail(std::string check, std::string detail) {
    report.failures.push_back({std::move(check), std::move(detail)});
  }
  void pass(std::string check) { report.passed.push_back(std::move(check)); }

  bool value_vanishes(const Scalar& v, double scale) const {
    if (exact_level()) return v.is_zero();
    return v.abs() <= cert.epsilon * (scale > 0 ? scale : 1.0);
  }

  // Kernel pairings stay bit-exact on exact fields even in tolerance-level
  // certificates: approximate roots are snapped into the field and linear
  // conditions are preserved by the stream algebra.
  bool pairing_vanishes(const Scalar& v, const SparseVector& phi,
                        const SparseVector& y) const {
    if (field_is_exact(cert.field)) return v.is_zero();
    double scale = (1.0 + phi.max_entry_abs()) * (1.0 + y.max_entry_abs());
    return v.abs() <= cert.epsilon * scale;
  }

  void check_structure() {
    bool ok = cert.witnesses.size() == cert.produced.size();
    for (const auto& y : cert.produced)
      if (y.is_zero()) ok = false;
    if (!cert.polynomials.empty())
      for (const auto& p : cert.polynomials)
        if (p.field() != cert.field) ok = false;
    if (cert.polynomials.empty()) ok = false;
    if (ok) pass("structure");
    else fail("structure", "inconsistent certificate shape");
  }

  void check_rank() {
    std::vector<SparseVector> all = cert.seed;
    all.insert(all.end(), cert.produced.begin(), cert.produced.end());
    int want = int(cert.seed.size() + cert.produced.size());
    if (exact_rank(all) == want) pass("rank");
    else fail("rank", "rank of seed + produced is not " + std::to_string(want));
  }

  void check_span_tables() {
    std::vector<SparseVector> all = cert.seed;
    all.insert(all.end(), cert.produced.begin(), cert.produced.end());
    for (std::size_t pi = 0; pi < cert.polynomials.size(); ++pi) {
      const PolyInput& p = cert.polynomials[pi];
      if (p.kind == PolyInput::Kind::Multilinear) {
        check_tuples(*p.multilinear);
        continue;
      }
      const HomPoly& P = *p.hom;
      if (all.empty()) { pass("vanishes_on_span"); continue; }
      if (cert.verification_policy == "sampled") {
        check_sampled(P, all, pi);
        continue;
      }
      Tolerance tol = exact_level() ? Tolerance::exact() : Tolerance::approx(cert.epsilon);
      auto chk = vanishes_on_span(P, all, tol);
      if (chk.vanishes) pass("vanishes_on_span");
      else {
        std::ostringstream os;
        os << "polynomial " << pi << ": nonzero restricted coefficient "
           << chk.witness->second.to_string();
        fail("vanishes_on_span", os.str());
      }
    }
  }

  void check_sampled(const HomPoly& P, const std::vector<SparseVector>& basis,
                     std::size_t pi) {
    std::mt19937_64 rng(cert.sample_seed);
    for (int s = 0; s < cert.sample_count; ++s) {
      SparseVector z(cert.field);
      for (const auto& b : basis) {
        long c = long(rng() % 7) - 3;
        if (c == 0) continue;
        z = z.plus(b.scaled(Scalar::integer(cert.field, c)));
      }
      if (z.is_zero()) continue;
      Scalar val = evaluate(P, z);
      double scale = P.max_coeff_abs() *
                     std::pow(1.0 + z.max_entry_abs(), double(P.degree()));
      if (!value_vanishes(val, scale)) {
        fail("vanishes_on_span", "polynomial " + std::to_string(pi) +
                                     ": sampled combination has value " +
                                     val.to_string());
        return;
      }
    }
    pass("vanishes_on_span");
  }

  void check_tuples(const MultilinearForm& A) {
    const std::size_t L = cert.produced.size();
    if (L == 0) { pass("vanishes_on_span"); return; }
    const std::uint32_t m = A.arity();
    std::vector<std::size_t> idx(m, 0);
    for (;;) {
      std::vector<SparseVector> args;
      args.reserve(m);
      for (auto i : idx) args.push_back(cert.produced[i]);
      Scalar val = multilinear_eval(A, args);
      double scale = 1.0;
      for (const auto& a : args) scale *= (1.0 + a.max_entry_abs());
      if (!value_vanishes(val, scale)) {
        std::ostringstream os;
        os << "tuple (";
        for (std::size_t j = 0; j < idx.size(); ++j) os << (j ? "," : "") << idx[j] + 1;
        os << ") evaluates to " << val.to_string();
        fail("vanishes_on_span", os.str());
        return;
      }
      std::size_t j = 0;
      while (j < m && ++idx[j] == L) idx[j++] = 0;
      if (j == m) break;
      if (L == 0) break;
    }
    pass("vanishes_on_span");
  }

  const HomPoly* driver_hom() const {
    // Intersection checks/witnesses belong to the last-built polynomial.
    for (auto it = cert.polynomials.rbegin(); it != cert.polynomials.rend(); ++it)
      if (it->hom) return &*it->hom;
    return nullptr;
  }

  void check_witnesses() {
    const HomPoly* P = driver_hom();
    bool ok = true;
    for (std::size_t k = 0; k < cert.witnesses.size(); ++k) {
      const ZeroWitness& w = cert.witnesses[k];
      if (!(w.vector == cert.produced[k])) {
        fail("witness_replay", "witness vector differs from produced[" +
                                   std::to_string(k + 1) + "]");
        ok = false;
        continue;
      }
      switch (w.kind) {
      case ZeroWitness::Kind::Direct: {
        if (!P) break;
        Scalar val = evaluate(*P, w.vector);
        if (!value_vanishes(val, span_scale(*P, {w.vector}))) {
          fail("witness_replay", "direct witness " + std::to_string(k + 1) +
                                     " is not a zero");
          ok = false;
        }
        break;
      }
      case ZeroWitness::Kind::Slice: {
        if (!P || !w.slice) {
          fail("witness_replay", "slice witness without slice data");
          ok = false;
          break;
        }
        SliceReport fresh = binary_slice(*P, w.slice->u, w.slice->v);
        if (!(fresh.slice.coefficients() == w.slice->slice.coefficients())) {
          fail("witness_replay", "slice coefficients do not replay at step " +
                                     std::to_string(k + 1));
          ok = false;
          break;
        }
        if (!w.slice->root) {
          fail("witness_replay", "slice witness without a root");
          ok = false;
          break;
        }
        const Scalar& t = *w.slice->root;
        Scalar residual = fresh.slice.evaluate(t);
        double scale = fresh.slice.root_scale(t.approx());
        bool root_ok = w.slice->exact ? residual.is_zero()
                                      : residual.abs() <= cert.epsilon * scale;
        if (!root_ok) {
          fail("witness_replay", "slice root residual too large at step " +
                                     std::to_string(k + 1));
          ok = false;
          break;
        }
        SparseVector y = w.slice->u.plus(w.slice->v.scaled(t));
        if (!(y == w.vector)) {
          fail("witness_replay", "u + t v does not match the witness at step " +
                                     std::to_string(k + 1));
          ok = false;
        }
        break;
      }
      case ZeroWitness::Kind::Kernel: {
        // Finite-type pathway: the witness annihilates every functional.
        const PolyInput& front = cert.polynomials.front();
        if (front.finite) {
          for (const auto& term : front.finite->terms()) {
            Scalar val = term.functional.pair(w.vector);
            if (!pairing_vanishes(val, term.functional, w.vector)) {
              fail("witness_replay", "kernel witness escapes a functional at step " +
                                         std::to_string(k + 1));
              ok = false;
            }
          }
        }
        break;
      }
      }
    }
    if (ok) pass("witness_replay");
  }

  void check_membership() {
    bool ok = true;
    for (const auto& stage : cert.stages) {
      if (stage.step < 1 || stage.step > cert.produced.size() + 1) {
        fail("membership", "stage step out of range");
        ok = false;
        continue;
      }
      for (std::size_t j = stage.step; j <= cert.produced.size(); ++j) {
        const SparseVector& y = cert.produced[j - 1];
        for (const auto& [phi, origin] : stage.kernels) {
          Scalar val = phi.pair(y);
          if (!pairing_vanishes(val, phi, y)) {
            fail("membership", "produced[" + std::to_string(j) +
                                   "] escapes a stage-" + std::to_string(stage.step) +
                                   " kernel (" + origin + ")");
            ok = false;
          }
        }
        for (const auto& Q : stage.recursions) {
          Scalar val = evaluate(Q, y);
          if (!value_vanishes(val, span_scale(Q, {y}))) {
            fail("membership", "produced[" + std::to_string(j) +
                                   "] escapes a stage-" + std::to_string(stage.step) +
                                   " vanishing condition");
            ok = false;
          }
        }
        if (stage.exclusion_functional) {
          Scalar val = stage.exclusion_functional->pair(y);
          if (!pairing_vanishes(val, *stage.exclusion_functional, y)) {
            fail("membership", "produced[" + std::to_string(j) +
                                   "] escapes the stage-" + std::to_string(stage.step) +
                                   " exclusion");
            ok = false;
          }
        }
      }
      if (stage.exclusion_functional && stage.excluded_step) {
        if (*stage.excluded_step < 1 || *stage.excluded_step > cert.produced.size()) {
          fail("exclusion", "excluded step out of range");
          ok = false;
        } else {
          const SparseVector& prev = cert.produced[*stage.excluded_step - 1];
          Scalar val = stage.exclusion_functional->pair(prev);
          bool nonzero = field_is_exact(cert.field)
                             ? !val.is_zero()
                             : val.abs() > cert.epsilon;
          if (!nonzero) {
            fail("exclusion", "witness " + std::to_string(*stage.excluded_step) +
                                  " does not fail its exclusion functional");
            ok = false;
          }
        }
      }
    }
    if (ok) { pass("membership"); pass("exclusion"); }
  }

  void check_derived() {
    if (cert.kind == "multilinear") return;
    const HomPoly* P = driver_hom();
    if (!P) { fail("checks_incomplete", "no polynomial to enumerate against"); return; }
    RunConfig cfg;
    cfg.epsilon = cert.epsilon;
    SeedSpace seed{cert.seed};
    bool complete = true, values_ok = true;
    for (std::size_t k = 1; k <= cert.produced.size(); ++k) {
      std::vector<SparseVector> prefix(cert.produced.begin(),
                                       cert.produced.begin() + long(k - 1));
      DerivedFamily family;
      try {
        family = enumerate_derived(*P, seed, prefix, cfg);
      } catch (const EngineError& e) {
        fail("seed_in_zero_set", e.what());
        return;
      }
      std::set<DerivedDescriptor> expected;
      for (const auto& mem : family.members) expected.insert(mem.descriptor);
      std::set<DerivedDescriptor> recorded;
      for (const auto& c : cert.checks)
        if (c.step == k) recorded.insert(c.descriptor);
      if (expected != recorded) {
        fail("checks_incomplete", "recorded checks at step " + std::to_string(k) +
                                      " do not match the derived family");
        complete = false;
        continue;
      }
      const SparseVector& y = cert.produced[k - 1];
      for (const auto& mem : family.members) {
        Scalar val = evaluate(mem.poly, y);
        if (!value_vanishes(val, span_scale(mem.poly, {y}))) {
          fail("check_value", "derived condition fails at step " + std::to_string(k));
          values_ok = false;
        }
      }
    }
    if (complete) pass("checks_complete");
    if (values_ok) pass("check_values");
  }
};

} // namespace

VerifyReport verify_certificate(const Certificate& cert) {
  Checker c{cert, {}};
  c.check_structure();
  if (!c.report.ok()) return std::move(c.report);
  c.check_rank();
  c.check_span_tables();
  c.check_witnesses();
  c.check_membership();
  c.check_derived();
  return std::move(c.report);
}

} // namespace zerospan
