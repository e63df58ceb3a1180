#pragma once

// JSON encodings shared by the CLI subcommands. Every payload carries "v": 1.

#include <string>

#include "json.hpp"
#include "sbgroups/classifier.hpp"
#include "sbgroups/exact_fields.hpp"
#include "sbgroups/pgl3_checker.hpp"

namespace sbg::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {"order": N, "table": [[...], ...]} with "order" optional. Throws MalformedTable.
group::FiniteGroup parse_table(const Json& j);
/// {"kind": "cyclic" | "semidirect" | "mu3_times_semidirect" | "mu3k", "n", "d", "k"}.
/// Throws MalformedDescriptor.
classifier::Descriptor parse_descriptor(const Json& j);
/// "p/q" or an integer. Throws std::invalid_argument.
field::Rational parse_rational(const std::string& s);

/// C7, C21, G(7,2), C3xG(7,2), C3xC3, C3^3.
std::string witness_name(const classifier::Witness& w);

Json to_json(const classifier::OrderVerdict& v);
Json to_json(const classifier::Witness& w);
Json to_json(const classifier::Classification& c);
Json to_json(const pgl3::Report& r);

}  // namespace sbg::cli
