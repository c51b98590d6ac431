#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pesol/census.hpp"
#include "pesol/construct.hpp"
#include "pesol/io.hpp"
#include "pesol/retraction.hpp"
#include "pesol/solution.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

pesol::RawTables load_tables(const std::string& path) {
  if (path == "-") return pesol::read_raw_tables(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return pesol::read_raw_tables(in);
}

pesol::Format parse_format(const std::string& name) {
  if (name == "pesol") return pesol::Format::pesol;
  if (name == "json") return pesol::Format::json;
  throw std::runtime_error("unknown format '" + name + "' (expected pesol or json)");
}

void emit_tables(const pesol::RawTables& t, const std::string& out_path,
                 const std::string& format) {
  pesol::Format f = parse_format(format);
  if (out_path.empty() || out_path == "-") {
    pesol::write_tables(std::cout, t, f);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  pesol::write_tables(out, t, f);
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::string witness_str(const pesol::Triple& t) {
  return "(x,y,z)=(" + std::to_string(t.x) + "," + std::to_string(t.y) + "," +
         std::to_string(t.z) + ")";
}

int cmd_verify(const std::string& path) {
  pesol::RawTables tables = load_tables(path);
  auto violation = pesol::pentagon_violation(tables);
  std::cout << "n: " << tables.size() << "\n";
  if (violation) {
    std::cout << "pentagon: violated at " << witness_str(*violation) << "\n";
    auto eqs = pesol::component_equations(tables);
    auto report = [](const char* name, const std::optional<pesol::Triple>& w) {
      std::cout << name << ": " << (w ? "violated at " + witness_str(*w) : "ok") << "\n";
    };
    report("associativity", eqs.associativity);
    report("compatibility", eqs.compatibility);
    report("composition", eqs.composition);
    return kExitFalse;
  }
  std::cout << "pentagon: ok\n";
  pesol::Solution sol(tables);
  pesol::SolutionProfile prof = pesol::profile(sol);
  std::cout << "commutative: " << yesno(prof.commutative) << "\n"
            << "non-degenerate: " << yesno(prof.non_degenerate) << "\n"
            << "bijective: " << yesno(prof.bijective) << "\n"
            << "involutive: " << yesno(prof.involutive) << "\n"
            << "idempotent: " << yesno(prof.idempotent) << "\n"
            << "left-zero product: " << yesno(prof.left_zero_underlying) << "\n";
  if (prof.group) {
    std::cout << "group: order " << prof.group->order() << " ("
              << pesol::group_name(*prof.group) << "), orbits "
              << pesol::orbits(*prof.group).size() << "\n";
    if (prof.commutative) {
      auto card = pesol::retract_cardinalities(sol);
      std::cout << "retract size: " << card.retract_size
                << (card.retract_size == sol.size() ? " (irretractable)" : "") << "\n";
    }
  }
  return kExitTrue;
}

int cmd_construct(const std::vector<std::string>& args, const std::string& out_path,
                  const std::string& format) {
  if (args.empty()) throw std::runtime_error("construct: missing factory name");
  const std::string& factory = args[0];
  auto need = [&](size_t count) {
    if (args.size() != count + 1)
      throw std::runtime_error("construct " + factory + ": expected " + std::to_string(count) +
                               " argument(s)");
  };
  auto to_int = [&](const std::string& s) {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::runtime_error("construct: bad integer '" + s + "'");
    return v;
  };

  pesol::RawTables tables;
  if (factory == "group") {
    need(1);
    tables = pesol::group_solution(args[1]).tables();
  } else if (factory == "identity") {
    need(1);
    tables = pesol::identity_solution(to_int(args[1])).tables();
  } else if (factory == "cyclic") {
    need(2);
    tables = pesol::cyclic_solution(to_int(args[1]), to_int(args[2])).tables();
  } else if (factory == "xor") {
    need(1);
    tables = pesol::xor_solution(to_int(args[1])).tables();
  } else if (factory == "extension" || factory == "sigma") {
    need(2);
    pesol::GroupTable g = pesol::resolve_group_spec(args[1]);
    std::ifstream in(args[2]);
    if (!in) throw std::runtime_error("cannot open '" + args[2] + "'");
    if (factory == "extension") {
      tables = pesol::extension_solution(pesol::read_cocycle(in, g)).tables();
    } else {
      pesol::SigmaFamily sf = pesol::read_sigma(in, g);
      int x_size = sf.sigma.empty() ? 1 : sf.sigma.front().degree();
      tables = pesol::sigma_extension_solution(g, x_size, sf).tables();
    }
  } else {
    throw std::runtime_error("construct: unknown factory '" + factory +
                             "' (group, identity, cyclic, xor, extension, sigma)");
  }
  emit_tables(tables, out_path, format);
  return kExitTrue;
}

int cmd_retract(const std::string& path, const std::string& out_path,
                const std::string& format) {
  pesol::Solution sol = pesol::Solution(load_tables(path));
  pesol::SolutionProfile prof = pesol::profile(sol);
  if (!prof.commutative || !prof.non_degenerate) {
    std::cout << "not a commutative non-degenerate solution; no retraction\n";
    return kExitFalse;
  }
  pesol::RetractionData data = pesol::retract(sol);
  std::cout << "n: " << sol.size() << "\n"
            << "retract size: " << data.quotient.size() << "\n"
            << "irretractable: " << yesno(data.quotient.size() == sol.size()) << "\n";
  for (size_t c = 0; c < data.classes.size(); ++c) {
    std::cout << "class " << c << ":";
    for (int x : data.classes[c]) std::cout << " " << x;
    std::cout << "\n";
  }
  if (!out_path.empty()) emit_tables(data.quotient.tables(), out_path, format);
  return kExitTrue;
}

int cmd_iso(const std::string& a_path, const std::string& b_path) {
  pesol::Solution a{load_tables(a_path)};
  pesol::Solution b{load_tables(b_path)};
  auto witness = pesol::solutions_isomorphic(a, b);
  if (!witness) {
    std::cout << "not isomorphic\n";
    return kExitFalse;
  }
  std::cout << "isomorphic\n" << pesol::format_permutation(*witness) << "\n";
  return kExitTrue;
}

void print_census_line(const pesol::CensusResult& result) {
  int irretractable = 0;
  for (const auto& e : result.entries) irretractable += e.irretractable ? 1 : 0;
  std::cout << "n=" << result.n << " count=" << result.entries.size()
            << " irretractable=" << irretractable << "\n";
}

int cmd_census(int n, const pesol::CensusOptions& options, bool report,
               const std::string& out_dir, const std::string& format) {
  pesol::CensusResult result = pesol::run_census(n, options);
  print_census_line(result);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (size_t e = 0; e < result.entries.size(); ++e) {
      std::string path =
          out_dir + "/n" + std::to_string(n) + "_rep" + std::to_string(e) + ".pesol";
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot write '" + path + "'");
      pesol::write_tables(out, result.entries[e].solution.tables(), parse_format(format));
    }
  }
  if (!report) return kExitTrue;

  for (size_t e = 0; e < result.entries.size(); ++e) {
    const auto& entry = result.entries[e];
    std::cout << "entry " << e << ": group order " << entry.group_order << " ("
              << entry.group_tag << "), orbits " << entry.orbit_count << ", "
              << (entry.irretractable ? "irretractable" : "retractable") << ", raw "
              << entry.raw_count << "\n";
  }
  pesol::ClassifyReport classify = pesol::classify_census(result);
  if (!classify.has_prediction) {
    std::cout << "no list prediction for n=" << n << "; census only\n";
    return kExitTrue;
  }
  for (size_t i = 0; i < classify.expected.size(); ++i) {
    std::cout << "  " << classify.expected[i] << " -> ";
    if (classify.matched_entry[i] >= 0)
      std::cout << "entry " << classify.matched_entry[i] << "\n";
    else
      std::cout << "UNMATCHED\n";
  }
  for (int e : classify.unmatched_entries)
    std::cout << "  entry " << e << " -> NOT IN LIST\n";
  if (classify.matched) {
    std::cout << result.entries.size() << " solutions; matches the known list\n";
    return kExitTrue;
  }
  std::cout << "census does not match the known list\n";
  return kExitFalse;
}

int cmd_audit(int n, const pesol::CensusOptions& options) {
  pesol::CensusResult result = pesol::run_census(n, options);
  print_census_line(result);
  pesol::AuditReport report = pesol::audit_census(result);
  if (report.ok()) {
    std::cout << "all structural checks passed (" << result.entries.size() << " entries, "
              << report.irretractable_count << " irretractable)\n";
    return kExitTrue;
  }
  for (const auto& failure : report.failures)
    std::cout << "FAILED: " << failure.check << " (entry " << failure.entry << ")\n";
  return kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite set-theoretic solutions of the pentagon equation"};
  app.require_subcommand(1);

  std::string in_path, in_path_b, out_path, format = "pesol", out_dir;
  std::vector<std::string> construct_args;
  int n = 0, jobs = 1;
  bool report = false, force = false, no_symmetry = false;

  CLI::App* verify = app.add_subcommand("verify", "check tables against the pentagon identity");
  verify->add_option("file", in_path, "PESOL/json file, or - for stdin")->required();

  CLI::App* construct = app.add_subcommand("construct", "emit a solution from a factory");
  construct->add_option("factory", construct_args,
                        "group <spec> | identity <n> | cyclic <m> <n> | xor <k> | "
                        "extension <spec> <file> | sigma <spec> <file>")
      ->required();
  construct->add_option("-o,--output", out_path, "output file (default stdout)");
  construct->add_option("--format", format, "pesol or json");

  CLI::App* retract_cmd = app.add_subcommand("retract", "retraction report");
  retract_cmd->add_option("file", in_path, "PESOL/json file, or - for stdin")->required();
  retract_cmd->add_option("-o,--output", out_path, "write the quotient here");
  retract_cmd->add_option("--format", format, "pesol or json");

  CLI::App* iso = app.add_subcommand("iso", "isomorphism test with witness");
  iso->add_option("a", in_path, "first solution")->required();
  iso->add_option("b", in_path_b, "second solution")->required();

  CLI::App* census = app.add_subcommand("census", "enumerate left-zero solutions up to isomorphism");
  census->add_option("n", n, "carrier size")->required();
  census->add_option("--jobs", jobs, "worker threads");
  census->add_flag("--report", report, "per-entry lines plus the known-list match");
  census->add_flag("--force", force, "raise the size budget to the engine ceiling");
  census->add_flag("--no-symmetry-breaking", no_symmetry, "full first-level branching");
  census->add_option("--out", out_dir, "write representatives into this directory");
  census->add_option("--format", format, "pesol or json");

  CLI::App* audit = app.add_subcommand("audit", "run structural checks on the census");
  audit->add_option("n", n, "carrier size")->required();
  audit->add_option("--jobs", jobs, "worker threads");
  audit->add_flag("--force", force, "raise the size budget to the engine ceiling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitError;
  }

  try {
    pesol::CensusOptions options;
    options.jobs = jobs;
    options.symmetry_breaking = !no_symmetry;
    if (force) options.max_size = 10;
    if (verify->parsed()) return cmd_verify(in_path);
    if (construct->parsed()) return cmd_construct(construct_args, out_path, format);
    if (retract_cmd->parsed()) return cmd_retract(in_path, out_path, format);
    if (iso->parsed()) return cmd_iso(in_path, in_path_b);
    if (census->parsed()) return cmd_census(n, options, report, out_dir, format);
    if (audit->parsed()) return cmd_audit(n, options);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
