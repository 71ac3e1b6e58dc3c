#ifndef ZEROSPAN_SERIALIZE_HPP
#define ZEROSPAN_SERIALIZE_HPP

#include <string>

#include "zerospan/builder.hpp"

namespace zerospan {

// JSON text <-> engine values. Emission is deterministic: fixed key order,
// exact scalars as "num/den" string pairs, vectors and tables in index
// order. Parsers raise ParseError with a location hint on malformed input.

PolyInput parse_poly(const std::string& json_text);
std::string dump_poly(const PolyInput& poly);

SeedSpace parse_seed(const std::string& json_text, Field field);
std::string dump_seed(const SeedSpace& seed, Field field);

SparseVector parse_point(const std::string& json_text, Field field);
std::string dump_point(const SparseVector& x);

Certificate parse_certificate(const std::string& json_text);
std::string dump_certificate(const Certificate& cert);

// Missing keys keep their defaults.
RunConfig parse_config(const std::string& json_text);

std::string dump_slice_report(const SliceReport& rep);

} // namespace zerospan

#endif
