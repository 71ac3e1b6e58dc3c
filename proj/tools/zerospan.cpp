// Command-line front end: build subspace certificates for zero sets of
// homogeneous polynomials, verify certificate files, generate fixtures and
// inspect binary slices. Exit codes: 0 success, 1 input error, 2 the
// construction is mathematically unavailable, 3 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zerospan/fixtures.hpp"
#include "zerospan/serialize.hpp"

namespace {

using namespace zerospan;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(Errc::InvalidInput, "cannot write '" + path + "'");
  out << text;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-")
    std::cout << text;
  else
    write_file(out_path, text);
}

int error_exit_code(const EngineError& e) {
  return errc_is_mathematical(e.code()) ? 2 : 1;
}

void print_error(const EngineError& e) {
  nlohmann::ordered_json j;
  j["error"] = e.name();
  j["message"] = e.what();
  auto detail = nlohmann::ordered_json::parse(e.detail(), nullptr, false);
  j["detail"] = detail.is_discarded() ? nlohmann::ordered_json::object()
                                      : detail;
  std::cerr << j.dump() << "\n";
}

struct BuildArgs {
  std::vector<std::string> poly_paths;
  std::string seed_path, point_path, config_path;
  std::string out_path = "certificate.json";
  std::uint32_t count = 5;
};

int cmd_build(const BuildArgs& args) {
  RunConfig cfg;
  if (!args.config_path.empty()) cfg = parse_config(read_file(args.config_path));

  std::vector<PolyInput> polys;
  for (const auto& p : args.poly_paths) polys.push_back(parse_poly(read_file(p)));
  const Field field = polys.front().field();

  Certificate cert;
  if (!args.point_path.empty()) {
    if (polys.size() != 1)
      raise(Errc::InvalidInput, "--point works with exactly one polynomial");
    SparseVector x = parse_point(read_file(args.point_path), field);
    cert = build_through_point(polys.front(), x, args.count, cfg);
  } else if (polys.size() > 1) {
    SeedSpace seed;
    if (!args.seed_path.empty()) seed = parse_seed(read_file(args.seed_path), field);
    cert = build_intersection(polys, seed, args.count, cfg);
  } else if (polys.front().kind == PolyInput::Kind::Multilinear) {
    cert = build_multilinear(*polys.front().multilinear, {}, args.count, cfg);
  } else {
    SeedSpace seed;
    if (!args.seed_path.empty()) seed = parse_seed(read_file(args.seed_path), field);
    cert = build_zero_space(polys.front(), seed, args.count, cfg);
  }

  emit(args.out_path, dump_certificate(cert));
  std::cout << "certificate " << args.out_path << ": produced=" << cert.produced.size()
            << " exact=" << (cert.exact ? "true" : "false")
            << " policy=" << cert.verification_policy << "\n";
  return 0;
}

int cmd_verify(const std::string& cert_path) {
  Certificate cert = parse_certificate(read_file(cert_path));
  VerifyReport rep = verify_certificate(cert);
  for (const auto& name : rep.passed) std::cout << "ok " << name << "\n";
  for (const auto& f : rep.failures)
    std::cout << "FAIL " << f.check << ": " << f.detail << "\n";
  if (!rep.ok()) {
    nlohmann::ordered_json j;
    j["error"] = "VerificationFailed";
    auto arr = nlohmann::ordered_json::array();
    for (const auto& f : rep.failures)
      arr.push_back({{"check", f.check}, {"detail", f.detail}});
    j["failures"] = std::move(arr);
    std::cerr << j.dump() << "\n";
    return 3;
  }
  return 0;
}

struct GenArgs {
  std::string kind = "seeded";
  std::uint32_t n = 0, m = 2, vars = 6, terms = 4;
  std::uint64_t rng = 1;
  std::string field;
  std::string out_path;
  std::string seed_out;
};

int cmd_gen(const GenArgs& args) {
  fixtures::GenParams p;
  p.kind = fixtures::kind_from_name(args.kind);
  p.n = args.n;
  p.m = args.m;
  p.vars = args.vars;
  p.terms = args.terms;
  p.rng = args.rng;
  if (!args.field.empty()) p.field = field_from_name(args.field);
  PolyInput poly = fixtures::generate(p);
  emit(args.out_path, dump_poly(poly));
  if (!args.seed_out.empty())
    write_file(args.seed_out, dump_seed(fixtures::standard_seed(poly.field(), p.n),
                                        poly.field()));
  return 0;
}

struct SliceArgs {
  std::string poly_path, u_path, v_path, out_path;
};

int cmd_slice(const SliceArgs& args) {
  PolyInput poly = parse_poly(read_file(args.poly_path));
  if (!poly.hom) raise(Errc::InvalidInput, "slice needs a homogeneous polynomial");
  SparseVector u = parse_point(read_file(args.u_path), poly.field());
  SparseVector v = parse_point(read_file(args.v_path), poly.field());
  emit(args.out_path, dump_slice_report(binary_slice(*poly.hom, u, v)));
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified infinite-dimensional subspaces in zero sets of "
               "homogeneous polynomials"};
  app.require_subcommand(1);

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "run a construction and emit a certificate");
  build->add_option("--poly", build_args.poly_paths, "polynomial JSON file (repeatable)")
      ->required();
  build->add_option("--seed", build_args.seed_path, "seed basis JSON file");
  build->add_option("--point", build_args.point_path, "point JSON file (pointwise mode)");
  build->add_option("--count", build_args.count, "number of produced vectors");
  build->add_option("--out", build_args.out_path, "certificate output path");
  build->add_option("--config", build_args.config_path, "run configuration JSON");

  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "re-check a certificate file");
  verify->add_option("--cert", cert_path, "certificate JSON file")->required();

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a deterministic fixture");
  gen->add_option("--kind", gen_args.kind,
                  "complex-sparse | seeded | finite-type-real | "
                  "positive-definite-real-tail | multilinear");
  gen->add_option("--n", gen_args.n, "seed dimension (seeded kind)");
  gen->add_option("--m", gen_args.m, "degree / arity");
  gen->add_option("--vars", gen_args.vars, "ambient variables");
  gen->add_option("--terms", gen_args.terms, "term count");
  gen->add_option("--rng", gen_args.rng, "generator seed");
  gen->add_option("--field", gen_args.field, "field override");
  gen->add_option("--out", gen_args.out_path, "polynomial output path");
  gen->add_option("--seed-out", gen_args.seed_out, "also write the standard seed file");

  SliceArgs slice_args;
  auto* slice = app.add_subcommand("slice", "print a binary slice report");
  slice->add_option("--poly", slice_args.poly_path)->required();
  slice->add_option("--u", slice_args.u_path)->required();
  slice->add_option("--v", slice_args.v_path)->required();
  slice->add_option("--out", slice_args.out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(build_args);
    if (verify->parsed()) return cmd_verify(cert_path);
    if (gen->parsed()) return cmd_gen(gen_args);
    if (slice->parsed()) return cmd_slice(slice_args);
  } catch (const EngineError& e) {
    print_error(e);
    return error_exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"Internal\",\"message\":\"" << e.what() << "\"}\n";
    return 1;
  }
  return 1;
}
