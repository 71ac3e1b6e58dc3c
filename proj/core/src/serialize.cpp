#include "zerospan/serialize.hpp"

#include <json.hpp>

namespace zerospan {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) {
  raise(Errc::ParseError, what);
}

Json scalar_json(const Scalar& s) {
  Json j = Json::object();
  if (s.is_exact()) {
    j["re"] = rat_to_string(s.re());
    j["im"] = rat_to_string(s.im());
  } else {
    j["re"] = s.approx().real();
    j["im"] = s.approx().imag();
  }
  return j;
}

Scalar scalar_from(const Json& j, Field f) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    bad("coefficient must be an object with re/im");
  if (field_is_exact(f)) {
    if (!j["re"].is_string() || !j["im"].is_string())
      bad("exact coefficients are fraction strings");
    return Scalar::exact(f, rat_from_string(j["re"].get<std::string>()),
                         rat_from_string(j["im"].get<std::string>()));
  }
  if (!j["re"].is_number() || !j["im"].is_number())
    bad("complex64 coefficients are number pairs");
  return Scalar::complex64({j["re"].get<double>(), j["im"].get<double>()});
}

Json monomial_json(const MultiIndex& mi) {
  Json j = Json::object();
  for (const auto& [var, exp] : mi.entries()) j[std::to_string(var)] = exp;
  return j;
}

MultiIndex monomial_from(const Json& j) {
  if (!j.is_object()) bad("monomial must be an object of index -> exponent");
  std::vector<MultiIndex::Entry> entries;
  for (const auto& [key, val] : j.items()) {
    if (!val.is_number_unsigned()) bad("monomial exponent must be a nonnegative integer");
    entries.push_back({std::uint32_t(std::stoul(key)), val.get<std::uint32_t>()});
  }
  return MultiIndex::from_entries(std::move(entries));
}

Json vector_json(const SparseVector& v) {
  Json j = Json::object();
  for (const auto& [idx, val] : v.entries()) j[std::to_string(idx)] = scalar_json(val);
  return j;
}

SparseVector vector_from(const Json& j, Field f) {
  if (!j.is_object()) bad("vector must be an object of index -> coefficient");
  std::vector<SparseVector::Entry> entries;
  for (const auto& [key, val] : j.items())
    entries.push_back({std::uint32_t(std::stoul(key)), scalar_from(val, f)});
  return SparseVector(f, std::move(entries));
}

Json term_list_json(const std::map<MultiIndex, Scalar>& terms) {
  Json arr = Json::array();
  for (const auto& [mi, c] : terms) {
    Json t = Json::object();
    t["monomial"] = monomial_json(mi);
    t["coeff"] = scalar_json(c);
    arr.push_back(std::move(t));
  }
  return arr;
}

Json hompoly_json(const HomPoly& P) {
  Json j = Json::object();
  j["field"] = field_name(P.field());
  j["degree"] = P.degree();
  j["terms"] = term_list_json(P.terms());
  if (P.tail()) {
    Json t = Json::object();
    t["offset"] = P.tail()->offset;
    t["period"] = P.tail()->period;
    Json gens = Json::array();
    for (const auto& [mi, c] : P.tail()->generators) {
      Json g = Json::object();
      g["monomial"] = monomial_json(mi);
      g["coeff"] = scalar_json(c);
      gens.push_back(std::move(g));
    }
    t["generators"] = std::move(gens);
    j["tail"] = std::move(t);
  }
  return j;
}

HomPoly hompoly_from(const Json& j) {
  if (!j.contains("field") || !j.contains("degree") || !j.contains("terms"))
    bad("polynomial needs field, degree and terms");
  Field f = field_from_name(j["field"].get<std::string>());
  std::uint32_t m = j["degree"].get<std::uint32_t>();
  std::map<MultiIndex, Scalar> terms;
  for (const auto& t : j["terms"]) {
    if (!t.contains("monomial") || !t.contains("coeff")) bad("term needs monomial and coeff");
    MultiIndex mi = monomial_from(t["monomial"]);
    Scalar c = scalar_from(t["coeff"], f);
    auto it = terms.find(mi);
    if (it == terms.end()) terms.emplace(std::move(mi), std::move(c));
    else it->second += c;
  }
  std::optional<TailRule> tail;
  if (j.contains("tail") && !j["tail"].is_null()) {
    const Json& t = j["tail"];
    TailRule rule;
    rule.offset = t.value("offset", 0u);
    rule.period = t.value("period", 1u);
    if (!t.contains("generators")) bad("tail needs generators");
    for (const auto& g : t["generators"])
      rule.generators.emplace_back(monomial_from(g["monomial"]),
                                   scalar_from(g["coeff"], f));
    tail = std::move(rule);
  }
  try {
    return HomPoly(f, m, std::move(terms), std::move(tail));
  } catch (const EngineError& e) {
    bad(std::string("invalid polynomial: ") + e.what());
  }
}

Json finite_json(const FiniteTypePoly& F) {
  Json j = Json::object();
  j["kind"] = "finite_type";
  j["field"] = field_name(F.field());
  j["degree"] = F.degree();
  Json arr = Json::array();
  for (const auto& t : F.terms()) {
    Json term = Json::object();
    term["a"] = scalar_json(t.weight);
    term["phi"] = vector_json(t.functional);
    arr.push_back(std::move(term));
  }
  j["terms"] = std::move(arr);
  return j;
}

FiniteTypePoly finite_from(const Json& j) {
  Field f = field_from_name(j.at("field").get<std::string>());
  std::uint32_t m = j.at("degree").get<std::uint32_t>();
  std::vector<FiniteTypePoly::Term> terms;
  for (const auto& t : j.at("terms")) {
    if (!t.contains("a") || !t.contains("phi")) bad("finite-type term needs a and phi");
    terms.push_back({scalar_from(t["a"], f), vector_from(t["phi"], f)});
  }
  return FiniteTypePoly(f, m, std::move(terms));
}

Json multilinear_json(const MultilinearForm& A) {
  Json j = Json::object();
  j["kind"] = "multilinear";
  j["field"] = field_name(A.field());
  j["arity"] = A.arity();
  Json arr = Json::array();
  for (const auto& [key, c] : A.entries()) {
    Json e = Json::object();
    e["slots"] = key;
    e["coeff"] = scalar_json(c);
    arr.push_back(std::move(e));
  }
  j["entries"] = std::move(arr);
  return j;
}

MultilinearForm multilinear_from(const Json& j) {
  Field f = field_from_name(j.at("field").get<std::string>());
  std::uint32_t m = j.at("arity").get<std::uint32_t>();
  std::map<MultilinearForm::Key, Scalar> entries;
  for (const auto& e : j.at("entries")) {
    if (!e.contains("slots") || !e.contains("coeff")) bad("entry needs slots and coeff");
    MultilinearForm::Key key = e["slots"].get<MultilinearForm::Key>();
    Scalar c = scalar_from(e["coeff"], f);
    auto it = entries.find(key);
    if (it == entries.end()) entries.emplace(std::move(key), std::move(c));
    else it->second += c;
  }
  return MultilinearForm(f, m, std::move(entries));
}

Json poly_json(const PolyInput& p) {
  switch (p.kind) {
  case PolyInput::Kind::Hom: return hompoly_json(*p.hom);
  case PolyInput::Kind::FiniteType: return finite_json(*p.finite);
  case PolyInput::Kind::Multilinear: return multilinear_json(*p.multilinear);
  }
  bad("empty polynomial input");
}

PolyInput poly_from(const Json& j) {
  if (!j.is_object()) bad("polynomial file must hold a JSON object");
  std::string kind = j.value("kind", "");
  if (kind == "finite_type") return PolyInput::from_finite(finite_from(j));
  if (kind == "multilinear") return PolyInput::from_multilinear(multilinear_from(j));
  if (kind.empty() || kind == "hompoly") {
    if (j.contains("arity")) return PolyInput::from_multilinear(multilinear_from(j));
    return PolyInput::from_hom(hompoly_from(j));
  }
  bad("unknown polynomial kind '" + kind + "'");
}

Json parse_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("malformed JSON");
  return j;
}

Json witness_json(const ZeroWitness& w, std::size_t step) {
  Json j = Json::object();
  j["step"] = step;
  switch (w.kind) {
  case ZeroWitness::Kind::Direct: j["kind"] = "direct"; break;
  case ZeroWitness::Kind::Slice: j["kind"] = "slice"; break;
  case ZeroWitness::Kind::Kernel: j["kind"] = "kernel"; break;
  }
  j["exact"] = w.exact;
  j["vector"] = vector_json(w.vector);
  if (w.slice) {
    j["u"] = vector_json(w.slice->u);
    j["v"] = vector_json(w.slice->v);
    Json coeffs = Json::array();
    for (const auto& c : w.slice->slice.coefficients()) coeffs.push_back(scalar_json(c));
    j["slice"] = std::move(coeffs);
    if (w.slice->root) j["root"] = scalar_json(*w.slice->root);
    j["slice_exact"] = w.slice->exact;
  }
  return j;
}

ZeroWitness witness_from(const Json& j, Field f, const SparseVector& produced) {
  ZeroWitness w;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "direct") w.kind = ZeroWitness::Kind::Direct;
  else if (kind == "slice") w.kind = ZeroWitness::Kind::Slice;
  else if (kind == "kernel") w.kind = ZeroWitness::Kind::Kernel;
  else bad("unknown witness kind '" + kind + "'");
  w.exact = j.value("exact", true);
  w.vector = j.contains("vector") ? vector_from(j.at("vector"), f) : produced;
  if (j.contains("u")) {
    SliceReport rep;
    rep.u = vector_from(j.at("u"), f);
    rep.v = vector_from(j.at("v"), f);
    std::vector<Scalar> coeffs;
    for (const auto& c : j.at("slice")) coeffs.push_back(scalar_from(c, f));
    rep.slice = UniPoly(f, std::move(coeffs));
    if (j.contains("root")) rep.root = scalar_from(j.at("root"), f);
    rep.exact = j.value("slice_exact", true);
    w.slice = std::move(rep);
  }
  return w;
}

Json stage_json(const StageRecord& s) {
  Json j = Json::object();
  j["step"] = s.step;
  Json kernels = Json::array();
  for (const auto& [phi, origin] : s.kernels) {
    Json k = Json::object();
    k["functional"] = vector_json(phi);
    k["origin"] = origin;
    kernels.push_back(std::move(k));
  }
  j["kernels"] = std::move(kernels);
  Json recs = Json::array();
  for (const auto& Q : s.recursions) recs.push_back(hompoly_json(Q));
  j["recursions"] = std::move(recs);
  if (s.exclusion_functional) {
    Json e = Json::object();
    e["functional"] = vector_json(*s.exclusion_functional);
    e["excluded_step"] = *s.excluded_step;
    j["exclusion"] = std::move(e);
  } else {
    j["exclusion"] = nullptr;
  }
  return j;
}

StageRecord stage_from(const Json& j, Field f) {
  StageRecord s;
  s.step = j.at("step").get<std::uint32_t>();
  for (const auto& k : j.at("kernels"))
    s.kernels.emplace_back(vector_from(k.at("functional"), f),
                           k.value("origin", ""));
  for (const auto& r : j.at("recursions")) s.recursions.push_back(hompoly_from(r));
  if (j.contains("exclusion") && !j["exclusion"].is_null()) {
    s.exclusion_functional = vector_from(j["exclusion"].at("functional"), f);
    s.excluded_step = j["exclusion"].at("excluded_step").get<std::uint32_t>();
  }
  return s;
}

} // namespace

PolyInput parse_poly(const std::string& json_text) {
  return poly_from(parse_text(json_text));
}

std::string dump_poly(const PolyInput& poly) { return poly_json(poly).dump(2) + "\n"; }

SeedSpace parse_seed(const std::string& json_text, Field field) {
  Json j = parse_text(json_text);
  SeedSpace seed;
  Field f = j.contains("field") ? field_from_name(j["field"].get<std::string>()) : field;
  if (f != field) bad("seed field does not match the polynomial field");
  if (!j.contains("basis")) bad("seed file needs a basis array");
  for (const auto& v : j["basis"]) seed.basis.push_back(vector_from(v, field));
  return seed;
}

std::string dump_seed(const SeedSpace& seed, Field field) {
  Json j = Json::object();
  j["field"] = field_name(field);
  Json arr = Json::array();
  for (const auto& v : seed.basis) arr.push_back(vector_json(v));
  j["basis"] = std::move(arr);
  return j.dump(2) + "\n";
}

SparseVector parse_point(const std::string& json_text, Field field) {
  Json j = parse_text(json_text);
  if (j.contains("vector")) return vector_from(j["vector"], field);
  return vector_from(j, field);
}

std::string dump_point(const SparseVector& x) {
  Json j = Json::object();
  j["field"] = field_name(x.field());
  j["vector"] = vector_json(x);
  return j.dump(2) + "\n";
}

std::string dump_certificate(const Certificate& cert) {
  Json j = Json::object();
  j["version"] = 1;
  j["kind"] = cert.kind;
  j["field"] = field_name(cert.field);
  if (cert.polynomials.size() == 1) {
    j["polynomial"] = poly_json(cert.polynomials.front());
  } else {
    Json arr = Json::array();
    for (const auto& p : cert.polynomials) arr.push_back(poly_json(p));
    j["polynomial"] = std::move(arr);
  }
  Json seed = Json::array();
  for (const auto& v : cert.seed) seed.push_back(vector_json(v));
  j["seed"] = std::move(seed);
  Json produced = Json::array();
  for (const auto& v : cert.produced) produced.push_back(vector_json(v));
  j["produced"] = std::move(produced);
  Json wits = Json::array();
  for (std::size_t k = 0; k < cert.witnesses.size(); ++k)
    wits.push_back(witness_json(cert.witnesses[k], k + 1));
  j["zero_witnesses"] = std::move(wits);
  Json checks = Json::array();
  for (const auto& c : cert.checks) {
    Json e = Json::object();
    e["step"] = c.step;
    e["t"] = c.descriptor.t;
    e["seed_indices"] = c.descriptor.seed_indices;
    e["alphas"] = c.descriptor.alphas;
    e["exact"] = c.exact;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  Json stages = Json::array();
  for (const auto& s : cert.stages) stages.push_back(stage_json(s));
  j["provenance"] = Json::object();
  j["provenance"]["stages"] = std::move(stages);
  j["exact"] = cert.exact;
  j["epsilon"] = cert.epsilon;
  j["verification"] = Json::object();
  j["verification"]["policy"] = cert.verification_policy;
  j["verification"]["sample_seed"] = cert.sample_seed;
  j["verification"]["sample_count"] = cert.sample_count;
  return j.dump(2) + "\n";
}

Certificate parse_certificate(const std::string& json_text) {
  Json j = parse_text(json_text);
  Certificate cert;
  try {
    cert.kind = j.at("kind").get<std::string>();
    cert.field = field_from_name(j.at("field").get<std::string>());
    const Json& polys = j.at("polynomial");
    if (polys.is_array())
      for (const auto& p : polys) cert.polynomials.push_back(poly_from(p));
    else
      cert.polynomials.push_back(poly_from(polys));
    for (const auto& v : j.at("seed")) cert.seed.push_back(vector_from(v, cert.field));
    for (const auto& v : j.at("produced"))
      cert.produced.push_back(vector_from(v, cert.field));
    const Json& wits = j.at("zero_witnesses");
    if (wits.size() != cert.produced.size())
      bad("zero_witnesses must match produced");
    for (std::size_t k = 0; k < wits.size(); ++k)
      cert.witnesses.push_back(witness_from(wits[k], cert.field, cert.produced[k]));
    for (const auto& c : j.at("checks")) {
      CheckRecord rec;
      rec.step = c.at("step").get<std::uint32_t>();
      rec.descriptor.t = c.at("t").get<std::uint32_t>();
      rec.descriptor.seed_indices =
          c.at("seed_indices").get<std::vector<std::uint32_t>>();
      rec.descriptor.alphas = c.at("alphas").get<std::vector<std::uint32_t>>();
      rec.exact = c.value("exact", true);
      cert.checks.push_back(std::move(rec));
    }
    for (const auto& s : j.at("provenance").at("stages"))
      cert.stages.push_back(stage_from(s, cert.field));
    cert.exact = j.at("exact").get<bool>();
    cert.epsilon = j.value("epsilon", 1e-9);
    cert.verification_policy = j.at("verification").at("policy").get<std::string>();
    cert.sample_seed = j.at("verification").value("sample_seed", std::uint64_t(0));
    cert.sample_count = j.at("verification").value("sample_count", 0);
  } catch (const Json::exception& e) {
    bad(std::string("certificate: ") + e.what());
  }
  return cert;
}

std::string dump_slice_report(const SliceReport& rep) {
  Json j = Json::object();
  j["u"] = vector_json(rep.u);
  j["v"] = vector_json(rep.v);
  Json coeffs = Json::array();
  for (const auto& c : rep.slice.coefficients()) coeffs.push_back(scalar_json(c));
  j["slice"] = std::move(coeffs);
  if (rep.root) j["root"] = scalar_json(*rep.root);
  j["exact"] = rep.exact;
  return j.dump(2) + "\n";
}

RunConfig parse_config(const std::string& json_text) {
  Json j = parse_text(json_text);
  RunConfig cfg;
  if (!j.is_object()) bad("config must be a JSON object");
  cfg.epsilon = j.value("epsilon", cfg.epsilon);
  cfg.retry_budget = j.value("retry_budget", cfg.retry_budget);
  cfg.root_iteration_budget = j.value("root_iteration_budget", cfg.root_iteration_budget);
  cfg.divisor_bound = j.value("divisor_bound", cfg.divisor_bound);
  cfg.max_ambient_index = j.value("max_ambient_index", cfg.max_ambient_index);
  cfg.full_table_threshold = j.value("full_table_threshold", cfg.full_table_threshold);
  cfg.sample_count = j.value("sample_count", cfg.sample_count);
  cfg.sample_seed = j.value("sample_seed", cfg.sample_seed);
  cfg.probe_pairs = j.value("probe_pairs", cfg.probe_pairs);
  cfg.pivot_eps = j.value("pivot_eps", cfg.pivot_eps);
  if (cfg.epsilon < 0 || cfg.retry_budget < 1 || cfg.root_iteration_budget < 1)
    bad("config bounds must be positive");
  return cfg;
}

} // namespace zerospan
