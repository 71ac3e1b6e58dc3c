#include <doctest.h>

#include <json.hpp>

#include "zerospan/fixtures.hpp"
#include "zerospan/serialize.hpp"

#include "helpers.hpp"

using namespace zt;
using Json = nlohmann::ordered_json;

namespace {

Certificate campaign_cert(std::uint64_t rng, std::uint32_t n, std::uint32_t m,
                          std::uint32_t L) {
  zerospan::fixtures::GenParams p;
  p.kind = zerospan::fixtures::Kind::Seeded;
  p.n = n;
  p.m = m;
  p.vars = n + 4;
  p.rng = rng;
  PolyInput poly = zerospan::fixtures::generate(p);
  SeedSpace seed = zerospan::fixtures::standard_seed(poly.field(), n);
  return build_zero_space(poly, seed, L, RunConfig{});
}

// True when the mutated document is rejected, either at parse time or by a
// verification failure carrying the expected check name (empty = any).
bool rejected(const Json& doc, const std::string& expected = "") {
  Certificate cert;
  try {
    cert = parse_certificate(doc.dump());
  } catch (const EngineError&) {
    return true;
  }
  VerifyReport rep = verify_certificate(cert);
  if (rep.ok()) return false;
  if (expected.empty()) return true;
  for (const auto& f : rep.failures)
    if (f.check == expected) return true;
  return false;
}

} // namespace

TEST_CASE("complex64 pipeline builds tolerance-level certificates") {
  zerospan::fixtures::GenParams p;
  p.kind = zerospan::fixtures::Kind::Seeded;
  p.n = 1;
  p.m = 2;
  p.vars = 5;
  p.rng = 77;
  p.field = Field::Complex64;
  PolyInput poly = zerospan::fixtures::generate(p);
  SeedSpace seed = zerospan::fixtures::standard_seed(Field::Complex64, 1);
  Certificate cert = build_zero_space(poly, seed, 4, RunConfig{});
  CHECK_FALSE(cert.exact);
  CHECK(cert.produced.size() == 4);
  CHECK(verify_certificate(cert).ok());
  Certificate back = parse_certificate(dump_certificate(cert));
  CHECK(verify_certificate(back).ok());
}

TEST_CASE("sampled verification policy replays from the recorded seed") {
  Certificate cert = campaign_cert(303, 1, 2, 5);
  cert.verification_policy = "sampled";
  cert.sample_seed = 987654321;
  cert.sample_count = 100;
  CHECK(verify_certificate(cert).ok());

  // A corrupted vector that touches the polynomial's support is caught by
  // the sampling too.
  Json doc = Json::parse(dump_certificate(cert));
  std::string first_var = doc["polynomial"]["terms"][0]["monomial"].begin().key();
  Json entry = Json::object();
  entry["re"] = "7/1";
  entry["im"] = "0/1";
  doc["produced"][0][first_var] = entry;
  doc["zero_witnesses"][0]["vector"] = doc["produced"][0];
  if (doc["zero_witnesses"][0].contains("u"))
    doc["zero_witnesses"][0].erase("u"); // make the witness unverifiable-consistent
  CHECK(rejected(doc));
}

TEST_CASE("systematic single-field mutations are rejected") {
  Certificate cert = campaign_cert(404, 2, 3, 5);
  const std::string text = dump_certificate(cert);
  const Json base = Json::parse(text);
  CHECK(verify_certificate(parse_certificate(text)).ok());

  Json entry99 = Json::object();
  entry99["re"] = "1/1";
  entry99["im"] = "0/1";

  SUBCASE("perturbed produced entry") {
    Json doc = base;
    doc["produced"][2]["99"] = entry99;
    CHECK(rejected(doc, "witness_replay"));
  }
  SUBCASE("seed vector replaced by a produced vector") {
    Json doc = base;
    doc["seed"][0] = doc["produced"][0];
    CHECK(rejected(doc, "rank"));
  }
  SUBCASE("dropped check") {
    Json doc = base;
    REQUIRE_FALSE(doc["checks"].empty());
    doc["checks"].erase(doc["checks"].size() - 1);
    CHECK(rejected(doc, "checks_incomplete"));
  }
  SUBCASE("forged extra check") {
    Json doc = base;
    Json forged = doc["checks"][0];
    forged["t"] = forged["t"].get<int>() + 7;
    doc["checks"].push_back(forged);
    CHECK(rejected(doc, "checks_incomplete"));
  }
  SUBCASE("duplicated produced vector with its witness") {
    Json doc = base;
    doc["produced"].push_back(doc["produced"][0]);
    doc["zero_witnesses"].push_back(doc["zero_witnesses"][0]);
    CHECK(rejected(doc, "rank"));
  }
  SUBCASE("tampered slice root") {
    Json doc = base;
    for (auto& w : doc["zero_witnesses"]) {
      if (w["kind"] != "slice" || !w.contains("root")) continue;
      w["root"]["re"] = "5/1";
      CHECK(rejected(doc, "witness_replay"));
      return;
    }
  }
  SUBCASE("tampered slice coefficient") {
    Json doc = base;
    for (auto& w : doc["zero_witnesses"]) {
      if (w["kind"] != "slice") continue;
      w["slice"][0]["re"] = "123/1";
      CHECK(rejected(doc, "witness_replay"));
      return;
    }
  }
  SUBCASE("exclusion pointed at a conforming witness") {
    Json doc = base;
    for (auto& s : doc["provenance"]["stages"]) {
      if (s["exclusion"].is_null()) continue;
      s["exclusion"]["excluded_step"] = s["step"];
      CHECK(rejected(doc, "exclusion"));
      return;
    }
  }
  SUBCASE("mismatched witness vector") {
    Json doc = base;
    doc["zero_witnesses"][0]["vector"]["99"] = entry99;
    CHECK(rejected(doc, "witness_replay"));
  }
}

TEST_CASE("intersection certificates restrict every polynomial") {
  zerospan::fixtures::GenParams pa, pb;
  pa.kind = pb.kind = zerospan::fixtures::Kind::Seeded;
  pa.n = pb.n = 1;
  pa.m = 2;
  pb.m = 2;
  pa.vars = pb.vars = 5;
  pa.rng = 550;
  pb.rng = 551;
  PolyInput A = zerospan::fixtures::generate(pa);
  PolyInput B = zerospan::fixtures::generate(pb);
  SeedSpace seed = zerospan::fixtures::standard_seed(A.field(), 1);
  Certificate cert = build_intersection({A, B}, seed, 4, RunConfig{});

  // Corrupting the FIRST polynomial's vanishing must be caught even though
  // the derived checks replay against the last one.
  Json doc = Json::parse(dump_certificate(cert));
  Json term = Json::object();
  term["monomial"] = Json::object();
  term["monomial"]["1"] = 2;
  term["coeff"] = Json::object();
  term["coeff"]["re"] = "1/1";
  term["coeff"]["im"] = "0/1";
  doc["polynomial"][0]["terms"].push_back(term);
  CHECK(rejected(doc));
}
