// Command-line front end: deterministic JSON-lines reports on stdout,
// diagnostics on stderr. Exit code 0 iff every emitted pass flag is true,
// 1 on computation errors, 2 on usage errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include "ramsey/carlson_simpson.hpp"
#include "ramsey/degree_calc.hpp"
#include "ramsey/ellentuck.hpp"
#include "ramsey/error.hpp"
#include "ramsey/fin_blocks.hpp"
#include "ramsey/laflamme.hpp"
#include "ramsey/seq_orders.hpp"
#include "ramsey/space_core.hpp"
#include "ramsey/suite.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

struct Output {
  std::optional<std::ofstream> file;

  void emit(const ordered_json& record) {
    const std::string line = record.dump();
    std::cout << line << "\n";
    if (file) *file << line << "\n";
  }
};

ramsey::SpaceId parse_space(const std::string& name, int param) {
  const auto family = ramsey::family_from_name(name);
  if (!family)
    ramsey::fail(ramsey::Errc::usage_error, "unknown space '" + name + "'");
  return ramsey::make_space(*family, param);
}

ordered_json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    ramsey::fail(ramsey::Errc::usage_error, "cannot open file " + path);
  ordered_json data;
  in >> data;
  return data;
}

ramsey::BlockSeq load_block_seq(const std::string& path) {
  const ordered_json data = load_json_file(path);
  const int k = data.at("k").get<int>();
  std::vector<ramsey::FinFunc> funcs;
  for (const auto& entries : data.at("funcs")) {
    std::vector<std::pair<int, int>> parsed;
    for (const auto& entry : entries)
      parsed.emplace_back(entry.at(0).get<int>(), entry.at(1).get<int>());
    funcs.emplace_back(k, std::move(parsed));
  }
  return ramsey::BlockSeq(k, std::move(funcs));
}

// Degrees are numbers in the reports; arbitrary-precision stragglers fall
// back to decimal strings.
ordered_json big_to_json(const ramsey::BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max())
    return ordered_json(v.convert_to<long long>());
  return ordered_json(v.str());
}

ordered_json fin_func_json(const ramsey::FinFunc& f) {
  ordered_json entries = ordered_json::array();
  for (const auto& [pos, value] : f.entries())
    entries.push_back(ordered_json::array({pos, value}));
  return ordered_json{{"k", f.ceiling()}, {"entries", entries}};
}

std::vector<std::uint8_t> parse_hex_bits(const std::string& hex) {
  std::vector<std::uint8_t> bytes;
  std::string padded = hex;
  if (padded.size() % 2) padded = "0" + padded;
  // Big-endian hex string; byte 0 of the result holds the lowest pair bits.
  for (std::size_t i = padded.size(); i >= 2; i -= 2) {
    const std::string byte = padded.substr(i - 2, 2);
    bytes.push_back(static_cast<std::uint8_t>(std::stoi(byte, nullptr, 16)));
  }
  return bytes;
}

int run_suite_command(const std::string& which, Output& out) {
  const bool full = which == "full";
  const auto results = ramsey::run_suite(full);
  for (const auto& r : results) {
    out.emit(ordered_json{{"criterion", r.index},
                          {"name", r.name},
                          {"pass", r.pass},
                          {"detail", r.detail}});
    std::cerr << "criterion " << r.index << " (" << r.name << "): "
              << (r.pass ? "pass" : "FAIL") << " in " << r.elapsed_ms << " ms\n";
  }
  const bool pass = ramsey::suite_passes(results);
  out.emit(ordered_json{{"suite", which},
                        {"criteria", results.size()},
                        {"pass", pass}});
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-approximation toolkit for partition spaces"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "also append JSON lines to this file");
  int budget_override = 0;
  app.add_option("--budget", budget_override,
                 "override stabilization caps (leaves/blocks)");

  // degree
  auto* degree = app.add_subcommand("degree", "Ramsey degree of a space");
  std::string degree_space;
  int degree_param = 1;
  int degree_n = 2;
  std::string degree_method;
  degree->add_option("--space", degree_space)->required();
  degree->add_option("--param", degree_param)->required();
  degree->add_option("--n", degree_n)->required();
  degree->add_option("--method", degree_method,
                     "bruteforce|combinator|formula|closed");

  // classes
  auto* classes = app.add_subcommand("classes", "pair classes of a space");
  std::string classes_space;
  int classes_param = 2;
  bool classes_list = false;
  classes->add_option("--space", classes_space)->required();
  classes->add_option("--param", classes_param)->required();
  classes->add_flag("--list", classes_list, "include class representatives");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "well-order enumeration");
  int enum_k = 2;
  std::string enum_order = "prec";
  int enum_count = 10;
  enumerate->add_option("--k", enum_k)->required();
  enumerate->add_option("--order", enum_order)
      ->check(CLI::IsMember({"prec", "lex"}));
  enumerate->add_option("--count", enum_count)->required();

  // verify
  auto* verify = app.add_subcommand("verify", "cross-verify degrees or run suites");
  std::string verify_space;
  int verify_param = 1;
  int verify_nmax = 2;
  std::string verify_suite;
  verify->add_option("--space", verify_space);
  verify->add_option("--param", verify_param);
  verify->add_option("--nmax", verify_nmax);
  verify->add_option("--suite", verify_suite)
      ->check(CLI::IsMember({"quick", "full"}));

  // fin
  auto* fin = app.add_subcommand("fin", "block-sequence operations");
  fin->require_subcommand(1);
  auto* fin_gen = fin->add_subcommand("gen", "generated level set");
  int fin_k = 1;
  int fin_j = 1;
  std::string fin_blocks_path;
  fin_gen->add_option("--k", fin_k)->required();
  fin_gen->add_option("--blocks", fin_blocks_path)->required();
  fin_gen->add_option("--j", fin_j)->required();
  auto* fin_leq = fin->add_subcommand("leq", "block-subsequence test");
  std::string fin_left;
  std::string fin_right;
  fin_leq->add_option("--left", fin_left)->required();
  fin_leq->add_option("--right", fin_right)->required();

  // cs
  auto* cs = app.add_subcommand("cs", "partition operations");
  cs->require_subcommand(1);
  auto* cs_mono = cs->add_subcommand("mono", "monochromatic coarsening");
  std::string cs_partition;
  std::string cs_coloring;
  int cs_target = 2;
  cs_mono->add_option("--partition", cs_partition)->required();
  cs_mono->add_option("--coloring", cs_coloring)->required();
  cs_mono->add_option("--target", cs_target)->required();

  // audit
  auto* audit = app.add_subcommand("audit", "finite axiom fragments");
  std::string audit_space;
  int audit_param = 1;
  int audit_depth = 4;
  audit->add_option("--space", audit_space)->required();
  audit->add_option("--param", audit_param);
  audit->add_option("--depth", audit_depth);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  Output out;
  if (!out_path.empty()) out.file.emplace(out_path, std::ios::app);

  try {
    if (*degree) {
      const ramsey::SpaceId space = parse_space(degree_space, degree_param);
      ramsey::Method method = ramsey::Method::closed;
      std::optional<ramsey::BigInt> value;
      if (!degree_method.empty()) {
        const auto parsed = ramsey::method_from_name(degree_method);
        if (!parsed)
          ramsey::fail(ramsey::Errc::usage_error,
                       "unknown method '" + degree_method + "'");
        method = *parsed;
        value = ramsey::degree_by_method(space, degree_n, method);
      } else {
        // First available route wins: closed, combinator, bruteforce.
        for (ramsey::Method m : {ramsey::Method::closed,
                                 ramsey::Method::combinator,
                                 ramsey::Method::bruteforce}) {
          try {
            value = ramsey::degree_by_method(space, degree_n, m);
            method = m;
            break;
          } catch (const ramsey::Error&) {
          }
        }
        if (!value)
          ramsey::fail(ramsey::Errc::method_unavailable,
                       "no degree route for this space and size");
      }
      out.emit(ordered_json{{"space", ramsey::family_name(space.family)},
                            {"param", space.param},
                            {"n", degree_n},
                            {"value", big_to_json(*value)},
                            {"method", ramsey::method_name(method)}});
      return 0;
    }

    if (*classes) {
      const ramsey::SpaceId space = parse_space(classes_space, classes_param);
      if (space.family != ramsey::Family::ellentuck_hd)
        ramsey::fail(ramsey::Errc::usage_error,
                     "class listings exist for --space e");
      ramsey::PairClassBudget budget;
      if (budget_override > 0) budget.max_leaves = budget_override;
      const auto result = ramsey::count_pair_classes(space.param, budget);
      ordered_json record{{"space", "e"},
                          {"k", space.param},
                          {"count", result.count}};
      if (classes_list) {
        ordered_json list = ordered_json::array();
        for (const auto& pattern : result.classes) list.push_back(pattern.key());
        record["classes"] = list;
      }
      out.emit(record);
      return 0;
    }

    if (*enumerate) {
      const auto seqs = enum_order == "lex"
                            ? ramsey::enumerate_lex(enum_k, enum_count)
                            : ramsey::enumerate_upto(enum_k, enum_count);
      for (const auto& s : seqs) {
        ordered_json line = ordered_json::array();
        for (int e : s.entries()) line.push_back(e);
        out.emit(line);
      }
      return 0;
    }

    if (*verify) {
      if (!verify_suite.empty()) return run_suite_command(verify_suite, out);
      if (verify_space.empty())
        ramsey::fail(ramsey::Errc::usage_error,
                     "verify needs --space or --suite");
      const ramsey::SpaceId space = parse_space(verify_space, verify_param);
      const ramsey::DegreeTable table = ramsey::cross_verify(space, verify_nmax);
      ordered_json rows = ordered_json::array();
      for (const auto& row : table.rows)
        rows.push_back(ordered_json{{"n", row.n},
                                    {"method", ramsey::method_name(row.method)},
                                    {"value", big_to_json(row.value)}});
      out.emit(ordered_json{{"space", ramsey::family_name(space.family)},
                            {"param", space.param},
                            {"rows", rows},
                            {"pass", table.pass}});
      return table.pass ? 0 : 1;
    }

    if (*fin_gen) {
      const ramsey::BlockSeq blocks = load_block_seq(fin_blocks_path);
      if (blocks.ceiling() != fin_k)
        ramsey::fail(ramsey::Errc::usage_error,
                     "--k disagrees with the ceiling in the blocks file");
      for (const auto& f : ramsey::gen_semigroup(blocks, fin_j))
        out.emit(fin_func_json(f));
      return 0;
    }

    if (*fin_leq) {
      const bool value = ramsey::is_block_subseq(load_block_seq(fin_left),
                                                 load_block_seq(fin_right));
      out.emit(ordered_json{{"value", value}});
      return 0;
    }

    if (*cs_mono) {
      const ordered_json partition_data = load_json_file(cs_partition);
      const ramsey::FinPartition E(partition_data.get<std::vector<int>>());
      const ordered_json coloring_data = load_json_file(cs_coloring);
      const ramsey::PairColoring coloring(
          coloring_data.at("size").get<int>(),
          parse_hex_bits(coloring_data.at("bits").get<std::string>()));
      const auto result = ramsey::mono_coarsening(E, coloring, cs_target);
      ordered_json rgs = ordered_json::array();
      for (int d : result.partition.rgs()) rgs.push_back(d);
      ordered_json minima = ordered_json::array();
      for (int m : result.mono_minima) minima.push_back(m);
      out.emit(ordered_json{{"rgs", rgs}, {"mono_minima", minima}});
      return 0;
    }

    if (*audit) {
      const ramsey::SpaceId space = parse_space(audit_space, audit_param);
      ramsey::AuditBudget budget;
      if (budget_override > 0) budget.per_length = budget_override;
      const ramsey::AuditReport report =
          ramsey::audit_axioms(space, audit_depth, budget);
      ordered_json checks = ordered_json::array();
      for (const auto& check : report.checks)
        checks.push_back(ordered_json{
            {"axiom", check.axiom},
            {"pass", check.pass},
            {"witness", check.witness.empty() ? ordered_json(nullptr)
                                              : ordered_json(check.witness)}});
      out.emit(ordered_json{{"space", ramsey::family_name(space.family)},
                            {"param", space.param},
                            {"depth", audit_depth},
                            {"checks", checks}});
      return report.pass() ? 0 : 1;
    }
  } catch (const ramsey::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ramsey::Errc::usage_error ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
