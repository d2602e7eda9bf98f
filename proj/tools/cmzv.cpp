#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "cmzv/config.hpp"
#include "cmzv/relations.hpp"
#include "cmzv/selftest.hpp"

namespace {

using namespace cmzv;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDivergent = 3;

Symbol parse_symbol(const std::string& kind, const std::string& index) {
  if (kind == "zeta") return Symbol::mzv(Index::parse(index));
  if (kind == "zetastar") return Symbol::mzsv(Index::parse(index));
  if (kind == "cyc") return Symbol::cyc(CyclicIndex::parse(index));
  throw std::invalid_argument("unknown symbol kind '" + kind +
                              "' (expected zeta, zetastar or cyc)");
}

int cmd_eval(const std::string& kind, const std::string& index, long cutoff,
             const std::string& mode, const std::string& format) {
  Symbol sym = parse_symbol(kind, index);
  TruncationSpec spec{cutoff, mode == "exact" ? Arith::Exact : Arith::Float};
  EvalOutcome out = evaluate_symbol(sym, spec);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["index"] = sym.to_text();
    j["cutoff"] = cutoff;
    j["mode"] = mode;
    j["value"] = out.value;
    if (out.error_bound.empty())
      j["error_bound"] = nullptr;
    else
      j["error_bound"] = out.error_bound;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << out.value << "\n";
  }
  return kExitOk;
}

std::vector<Relation> load_relations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::vector<Relation> rels;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    rels.push_back(Relation::from_json(nlohmann::ordered_json::parse(line)));
  }
  return rels;
}

int cmd_relations(const std::string& family, int weight, int max_blocks,
                  const std::string& out_path, const std::string& matrix_path,
                  bool print_rank) {
  std::vector<Relation> rels = generate_family(family, weight, max_blocks);
  std::ostringstream body;
  for (const auto& r : rels) body << r.to_json().dump() << "\n";
  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << body.str();
  }
  if (!matrix_path.empty()) {
    std::ofstream out(matrix_path);
    if (!out) throw std::runtime_error("cannot write '" + matrix_path + "'");
    out << relation_matrix_csv(rels, weight);
  }
  if (print_rank)
    std::cout << "rank " << rank_over_q(rels, weight) << "\n";
  return kExitOk;
}

int cmd_verify(const std::vector<Relation>& rels, long cutoff, double tol,
               const std::string& mode, const std::string& format, int jobs) {
  TruncationSpec spec{cutoff, mode == "exact" ? Arith::Exact : Arith::Float};
  std::vector<VerifyReport> reports(rels.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < rels.size(); ++i)
      reports[i] = verify_numeric(rels[i], spec, tol);
  } else {
    // Parallel across relations; output order stays the input order.
    std::vector<std::future<VerifyReport>> futs;
    for (size_t i = 0; i < rels.size(); ++i) {
      futs.push_back(std::async(std::launch::async, [&, i] {
        return verify_numeric(rels[i], spec, tol);
      }));
      if (static_cast<int>(futs.size()) == jobs || i + 1 == rels.size()) {
        size_t base = i + 1 - futs.size();
        for (size_t f = 0; f < futs.size(); ++f)
          reports[base + f] = futs[f].get();
        futs.clear();
      }
    }
  }
  bool all_pass = true;
  for (size_t i = 0; i < rels.size(); ++i) {
    const auto& rep = reports[i];
    all_pass = all_pass && rep.pass;
    if (format == "json") {
      nlohmann::ordered_json j = rep.to_json();
      j["family"] = rels[i].family();
      j["provenance"] = rels[i].provenance();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << (rep.pass ? "pass" : "FAIL") << "  residual="
                << format_double(rep.residual) << "  [" << rep.guarantee << "]  "
                << rels[i].family() << " " << rels[i].provenance().dump() << "\n";
    }
  }
  std::cout << (all_pass ? "verified" : "FAILED") << " " << rels.size()
            << " relations at cutoff " << cutoff << "\n";
  return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclic multiple zeta value toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg = Config::from_env();
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file");

  auto* eval = app.add_subcommand("eval", "evaluate one symbol");
  std::string kind, index, mode = "float", format;
  long cutoff = 0;
  eval->add_option("kind", kind, "zeta | zetastar | cyc")->required();
  eval->add_option("index", index, "e.g. 1,2 or [(2),(1)]")->required();
  eval->add_option("--cutoff", cutoff, "summation cutoff");
  eval->add_option("--mode", mode, "exact | float")
      ->check(CLI::IsMember({"exact", "float"}));
  eval->add_option("--format", format, "text | json");

  auto* relations = app.add_subcommand("relations", "generate a relation family");
  std::string family, out_path, matrix_path;
  int weight = 0, max_blocks = 0;
  bool print_rank = false;
  relations->add_option("--family", family,
                        "cyc1 | cyc2 | cyclic-sum | derivation | sum-formula")
      ->required();
  relations->add_option("--weight", weight, "relation weight")->required();
  relations->add_option("--out", out_path, "output file (JSON lines)");
  relations->add_option("--max-blocks", max_blocks, "tensor block bound");
  relations->add_option("--matrix-csv", matrix_path, "write the relation matrix");
  relations->add_flag("--print-rank", print_rank, "print exact rank over Q");

  auto* verify = app.add_subcommand("verify", "verify relations numerically");
  std::string in_path;
  double tol = 0;
  int jobs = 0;
  verify->add_option("--in", in_path, "relation file (JSON lines)");
  verify->add_option("--family", family, "generate this family instead");
  verify->add_option("--weight", weight, "relation weight");
  verify->add_option("--cutoff", cutoff, "summation cutoff");
  verify->add_option("--tol", tol, "residual tolerance");
  verify->add_option("--mode", mode, "exact | float")
      ->check(CLI::IsMember({"exact", "float"}));
  verify->add_option("--jobs", jobs, "parallel verification degree");
  verify->add_option("--format", format, "text | json");

  auto* selftest = app.add_subcommand("selftest", "run the identity suites");
  std::string level = "quick";
  selftest->add_option("--level", level, "quick | full")
      ->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!config_path.empty()) cfg = Config::load(config_path);
    if (cutoff == 0) cutoff = cfg.cutoff;
    if (tol == 0) tol = cfg.tol;
    if (jobs == 0) jobs = cfg.jobs;
    if (max_blocks == 0) max_blocks = cfg.max_blocks;
    if (format.empty()) format = cfg.format;

    if (*eval) return cmd_eval(kind, index, cutoff, mode, format);
    if (*relations)
      return cmd_relations(family, weight, max_blocks, out_path, matrix_path,
                           print_rank);
    if (*verify) {
      std::vector<Relation> rels;
      if (!in_path.empty()) {
        try {
          rels = load_relations(in_path);
        } catch (const std::exception& e) {
          std::cerr << "error: " << e.what() << "\n";
          return kExitUsage;
        }
      } else if (!family.empty()) {
        rels = generate_family(family, weight, max_blocks);
      } else {
        std::cerr << "error: verify needs --in or --family/--weight\n";
        return kExitUsage;
      }
      return cmd_verify(rels, cutoff, tol, mode, format, jobs);
    }
    if (*selftest) {
      auto lv = level == "quick" ? SelftestLevel::Quick : SelftestLevel::Full;
      auto results = run_selftest(lv, cfg);
      std::string report;
      int failures = print_selftest_report(results, lv, cfg, report);
      std::cout << report;
      return failures == 0 ? kExitOk : kExitVerifyFailed;
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDivergent;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
