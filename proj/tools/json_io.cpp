#include "json_io.hpp"

#include <stdexcept>

#include "sbgroups/error.hpp"

namespace sbg::cli {

namespace {

using u64 = std::uint64_t;

u64 non_negative(const Json& j, const char* field, ErrorKind kind) {
  if (!j.contains(field)) return 0;
  const auto& v = j.at(field);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw Error(kind, std::string("\"") + field + "\" must be a non-negative integer");
  }
  return v.get<u64>();
}

}  // namespace

group::FiniteGroup parse_table(const Json& j) {
  const Json* rows = &j;
  if (j.is_object()) {
    if (!j.contains("table")) throw Error(ErrorKind::MalformedTable, "missing \"table\"");
    rows = &j.at("table");
  }
  if (!rows->is_array() || rows->empty()) throw Error(ErrorKind::MalformedTable, "\"table\" must be a non-empty array");
  std::vector<std::vector<group::Element>> table;
  for (const auto& row : *rows) {
    if (!row.is_array()) throw Error(ErrorKind::MalformedTable, "table rows must be arrays");
    auto& out = table.emplace_back();
    for (const auto& x : row) {
      if (!x.is_number_integer() || x.get<long long>() < 0) {
        throw Error(ErrorKind::MalformedTable, "table entries must be non-negative integers");
      }
      out.push_back(x.get<group::Element>());
    }
  }
  if (j.is_object() && j.contains("order") && non_negative(j, "order", ErrorKind::MalformedTable) != table.size()) {
    throw Error(ErrorKind::MalformedTable, "\"order\" does not match the table size");
  }
  return group::FiniteGroup::from_table(table);
}

classifier::Descriptor parse_descriptor(const Json& j) {
  using Kind = classifier::Descriptor::Kind;
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw Error(ErrorKind::MalformedDescriptor, "descriptor must be an object with a string \"kind\"");
  }
  const auto kind = j.at("kind").get<std::string>();
  classifier::Descriptor d{Kind::Cyclic};
  if (kind == "cyclic") {
    d.kind = Kind::Cyclic;
  } else if (kind == "semidirect") {
    d.kind = Kind::Semidirect;
  } else if (kind == "mu3_times_semidirect") {
    d.kind = Kind::Mu3TimesSemidirect;
  } else if (kind == "mu3k") {
    d.kind = Kind::Mu3k;
  } else {
    throw Error(ErrorKind::MalformedDescriptor, "unknown kind \"" + kind + "\"");
  }
  d.n = j.contains("n") ? non_negative(j, "n", ErrorKind::MalformedDescriptor) : 1;
  d.d = non_negative(j, "d", ErrorKind::MalformedDescriptor);
  d.k = static_cast<unsigned>(non_negative(j, "k", ErrorKind::MalformedDescriptor));
  classifier::validate(d);
  return d;
}

field::Rational parse_rational(const std::string& s) {
  field::Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational number: " + s);
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string witness_name(const classifier::Witness& w) {
  using classifier::WitnessKind;
  const auto n = std::to_string(w.n);
  switch (w.kind) {
    case WitnessKind::Cyclic: return "C" + n;
    case WitnessKind::Cyclic3n: return "C" + std::to_string(3 * w.n);
    case WitnessKind::Balanced: return w.n == 1 ? "C3" : "G(" + n + "," + std::to_string(w.d) + ")";
    case WitnessKind::Mu3TimesBalanced: return w.n == 1 ? "C3xC3" : "C3xG(" + n + "," + std::to_string(w.d) + ")";
    case WitnessKind::Mu3Cubed: return "C3^3";
  }
  return "?";
}

Json to_json(const classifier::OrderVerdict& v) {
  Json j{{"v", kSchemaVersion}, {"n", v.n}, {"admissible", v.admissible}};
  if (!v.admissible) j["obstruction"] = std::string(to_string(v.obstruction));
  if (v.obstruction == classifier::OrderObstruction::BadPrime) j["prime"] = v.prime;
  return j;
}

Json to_json(const classifier::Witness& w) {
  return Json{{"kind", std::string(to_string(w.kind))},
              {"n", w.n},
              {"d", w.d},
              {"order", w.group_order()},
              {"name", witness_name(w)}};
}

Json to_json(const classifier::Classification& c) {
  Json j{{"v", kSchemaVersion}, {"verdict", std::string(to_string(c.verdict))}};
  if (c.witness) j["witness"] = to_json(*c.witness);
  j["obstruction"] = std::string(to_string(c.obstruction));
  if (c.obstruction == classifier::Obstruction::BadPrime) j["prime"] = c.prime;
  return j;
}

Json to_json(const pgl3::Report& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    cases.push_back(Json{{"case", c.name}, {"verdict", c.passed ? "pass" : "fail"}, {"witness", c.witness}});
  }
  return Json{{"suite", r.suite}, {"passed", r.passed()}, {"failures", r.failures()}, {"cases", std::move(cases)}};
}

}  // namespace sbg::cli
