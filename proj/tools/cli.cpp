#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "sbgroups/classifier.hpp"
#include "sbgroups/cyclic_algebra.hpp"
#include "sbgroups/error.hpp"
#include "suites.hpp"

namespace sbg::cli {

namespace {

using u64 = std::uint64_t;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + origin + ": " + e.what());
  }
}

// --descriptor accepts inline JSON or a path to a file holding it.
Json descriptor_json(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return parse_json(arg, "--descriptor");
  return parse_json(read_file(arg), arg);
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

Json relations_json(const std::vector<algebra::Relation>& rels) {
  Json out = Json::array();
  for (const auto& r : rels) out.push_back(Json{{"relation", r.name}, {"holds", r.holds}});
  return out;
}

Json order_json(const std::optional<u64>& o) { return o ? Json(*o) : Json(nullptr); }

struct AlgebraOptions {
  u64 n = 1;
  u64 d = 0;
  std::string a = "2";
  std::string b = "3";
  bool with_tau = false;
  bool heisenberg = false;
  std::size_t cap = 5000;
};

// Builds the requested witness and fills the report. Returns kSurfacedError when the
// closure hits a zero divisor or the cap; the payload then records the status.
int algebra_report(const AlgebraOptions& opt, Json& j) {
  const auto a = parse_rational(opt.a);
  std::vector<algebra::AlgebraElement> gens;
  Json orders = Json::object();
  if (opt.heisenberg) {
    const auto b = parse_rational(opt.b);
    j["construction"] = "heisenberg";
    j["parameters"] = Json{{"a", a.get_str()}, {"b", b.get_str()}};
    const auto w = algebra::heisenberg_witness(a, b);
    j["relations"] = relations_json(w.relations);
    gens = {w.u, w.v};
  } else {
    j["construction"] = opt.with_tau ? "semidirect_times_mu3" : "semidirect";
    j["parameters"] = Json{{"n", opt.n}, {"d", opt.d}, {"a", a.get_str()}};
    const auto w = opt.with_tau ? algebra::semidirect_times_mu3_witness(opt.n, opt.d, a)
                                : algebra::semidirect_witness(opt.n, opt.d, a);
    j["relations"] = relations_json(w.relations);
    gens = w.generators();
  }
  try {
    const char* names[] = {"u", "v"};
    const char* semidirect_names[] = {"xi", "alpha", "tau"};
    for (std::size_t i = 0; i < gens.size(); ++i) {
      orders[opt.heisenberg ? names[i] : semidirect_names[i]] = order_json(algebra::order_mod_scalars(gens[i], opt.cap));
    }
    const auto g = algebra::generated_group_mod_scalars(gens, opt.cap);
    const auto c = classifier::classify_group(g.group);
    j["status"] = "ok";
    j["orders"] = std::move(orders);
    Json group{{"order", g.group.order()}, {"verdict", std::string(to_string(c.verdict))}};
    if (c.witness) group["name"] = witness_name(*c.witness);
    j["group"] = std::move(group);
    return kOk;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ZeroDivisor && e.kind() != ErrorKind::CapExceeded) throw;
    j["status"] = std::string(to_string(e.kind()));
    j["orders"] = std::move(orders);
    j["diagnostic"] = e.what();
    return kSurfacedError;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite groups acting on Severi-Brauer surfaces", "sbg"};
  app.require_subcommand(1, 1);
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "Suppress progress logs");

  auto* order_cmd = app.add_subcommand("order", "Whether some non-trivial Severi-Brauer surface has an automorphism of order N");
  u64 order_n = 0;
  order_cmd->add_option("N", order_n)->required();

  auto* classify_cmd = app.add_subcommand("classify", "Classify a group given by table or descriptor");
  std::string table_path, descriptor_arg;
  bool over_q = false;
  auto* file_opt = classify_cmd->add_option("--file", table_path, "Multiplication table JSON file");
  auto* desc_opt = classify_cmd->add_option("--descriptor", descriptor_arg, "Descriptor JSON, inline or as a path");
  file_opt->excludes(desc_opt);
  classify_cmd->add_flag("--over-q", over_q, "Realizability over Q instead");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List admissible orders or realizable groups");
  u64 max_order = 0, max_groups = 0;
  auto* orders_opt = enumerate_cmd->add_option("--orders", max_order, "Admissible orders up to MAX");
  auto* groups_opt = enumerate_cmd->add_option("--groups", max_groups, "Automorphism-realizable groups up to order MAX");
  orders_opt->excludes(groups_opt);
  enumerate_cmd->require_option(1, 1);

  auto* algebra_cmd = app.add_subcommand("algebra", "Build a cyclic algebra witness and report its group");
  AlgebraOptions alg;
  algebra_cmd->add_option("--n", alg.n, "Order of xi")->capture_default_str();
  algebra_cmd->add_option("--d", alg.d, "Character, a cube root of unity mod n")->capture_default_str();
  algebra_cmd->add_option("--a", alg.a, "alpha^3, a rational")->capture_default_str();
  algebra_cmd->add_option("--b", alg.b, "v^3 for --heisenberg, a rational")->capture_default_str();
  auto* tau_flag = algebra_cmd->add_flag("--with-tau", alg.with_tau, "Add the cube root of 2 generating mu_3");
  auto* heis_flag = algebra_cmd->add_flag("--heisenberg", alg.heisenberg, "Build the u, v pair with uv = omega vu");
  tau_flag->excludes(heis_flag);
  algebra_cmd->add_option("--cap", alg.cap, "Largest group the closure may build")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::optional<u64> bound;
  verify_cmd->add_option("--suite", suite)->required()->check(CLI::IsMember({"semidirect", "algebra", "pgl3", "all"}));
  verify_cmd->add_option("--bound", bound, "Override the suite's sweep bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kOk;
    }
    app.exit(e, out, err);
    return kMalformedInput;
  }

  try {
    if (order_cmd->parsed()) {
      emit(out, to_json(classifier::admissible_order(order_n)));
      return kOk;
    }

    if (classify_cmd->parsed()) {
      std::optional<group::FiniteGroup> table;
      std::optional<classifier::Descriptor> desc;
      if (table_path.empty() == descriptor_arg.empty()) {
        throw std::invalid_argument("classify needs exactly one of --file and --descriptor");
      }
      if (!table_path.empty()) {
        table = parse_table(parse_json(read_file(table_path), table_path));
      } else {
        desc = parse_descriptor(descriptor_json(descriptor_arg));
      }
      if (over_q) {
        const auto g = table ? *table : classifier::realize(*desc);
        emit(out, Json{{"v", kSchemaVersion}, {"order", g.order()}, {"realizable_over_q", classifier::classify_over_Q(g)}});
      } else {
        emit(out, to_json(table ? classifier::classify_group(*table) : classifier::classify_descriptor(*desc)));
      }
      return kOk;
    }

    if (enumerate_cmd->parsed()) {
      if (*orders_opt) {
        emit(out, Json{{"v", kSchemaVersion}, {"max", max_order}, {"orders", classifier::enumerate_admissible_orders(max_order)}});
      } else {
        Json groups = Json::array();
        for (const auto& w : classifier::enumerate_aut_groups(max_groups)) groups.push_back(to_json(w));
        emit(out, Json{{"v", kSchemaVersion}, {"max", max_groups}, {"groups", std::move(groups)}});
      }
      return kOk;
    }

    if (algebra_cmd->parsed()) {
      Json j{{"v", kSchemaVersion}};
      const int code = algebra_report(alg, j);
      emit(out, j);
      return code;
    }

    if (verify_cmd->parsed()) {
      const auto reports = run_suite(suite, bound, quiet ? nullptr : &err);
      Json list = Json::array();
      std::size_t failures = 0;
      for (const auto& r : reports) {
        failures += r.failures();
        list.push_back(to_json(r));
      }
      emit(out, Json{{"v", kSchemaVersion}, {"suite", suite}, {"passed", failures == 0}, {"failures", failures}, {"reports", std::move(list)}});
      return failures == 0 ? kOk : kSuiteFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  }
  return kMalformedInput;
}

}  // namespace sbg::cli
