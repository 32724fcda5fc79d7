// Command-line front end. Talks to the solver library exclusively
// through the C interface in mcs.h.

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcs.h"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitParamTooLarge = 3;
constexpr int kExitInternal = 4;
constexpr int kExitTimeout = 5;

int g_log_level = 0;  // 0 quiet, 1 info, 2 debug; from MCS_LOG

void init_log_level() {
  const char* env = std::getenv("MCS_LOG");
  if (!env) return;
  std::string v = env;
  if (v == "info") g_log_level = 1;
  if (v == "debug") g_log_level = 2;
}

void log_info(const std::string& msg) {
  if (g_log_level >= 1) std::cerr << "[mcs] " << msg << "\n";
}

struct GraphHandle {
  mcs_graph* g = nullptr;
  ~GraphHandle() { mcs_graph_free(g); }
};

struct SolutionHandle {
  mcs_solution* s = nullptr;
  ~SolutionHandle() { mcs_solution_free(s); }
};

int exit_code_for(mcs_status status) {
  switch (status) {
    case MCS_ERR_PARAMETER_TOO_LARGE:
      return kExitParamTooLarge;
    case MCS_ERR_INTERNAL:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

int load_graph(const std::string& path, GraphHandle& out) {
  char err[512] = {0};
  mcs_status st = mcs_graph_from_file(path.c_str(), &out.g, err, sizeof err);
  if (st != MCS_OK) {
    std::cerr << "error: " << err << "\n";
    return exit_code_for(st);
  }
  return 0;
}

std::vector<int> parse_id_list(const std::string& list, bool& ok) {
  std::vector<int> out;
  ok = true;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      ok = false;
      return {};
    }
  }
  return out;
}

json one_based(const int* data, int count) {
  json arr = json::array();
  for (int i = 0; i < count; i++) arr.push_back(data[i] + 1);
  return arr;
}

int cmd_solve(const std::string& input, const std::string& method,
              int threads, long timeout_ms, bool compare_oracle,
              bool pretty) {
  GraphHandle gh;
  if (int rc = load_graph(input, gh)) return rc;
  log_info("solving " + input + " with method " + method);

  mcs_solve_options opts;
  mcs_solve_options_init(&opts);
  opts.method = method.c_str();
  opts.threads = threads;
  opts.timeout_ms = timeout_ms;

  char err[512] = {0};
  SolutionHandle sh;
  auto start = std::chrono::steady_clock::now();
  mcs_status st = mcs_solve(gh.g, &opts, &sh.s, err, sizeof err);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  if (st != MCS_OK) {
    std::cerr << "error: " << err << "\n";
    return exit_code_for(st);
  }
  if (!mcs_solution_verified(sh.s)) {
    std::cerr << "error: solver produced an unverified solution\n";
    return kExitInternal;
  }

  json report;
  report["method"] = mcs_solution_method(sh.s);
  report["size"] = mcs_solution_size(sh.s);
  report["vertices"] =
      one_based(mcs_solution_vertices(sh.s), mcs_solution_size(sh.s));
  report["elapsed_ms"] = elapsed;
  report["explored"] = mcs_solution_explored(sh.s);
  report["verified"] = mcs_solution_verified(sh.s) != 0;
  report["optimal"] = mcs_solution_optimal(sh.s) != 0;

  if (compare_oracle) {
    mcs_solve_options oracle_opts;
    mcs_solve_options_init(&oracle_opts);
    oracle_opts.method = "brute";
    SolutionHandle oh;
    st = mcs_solve(gh.g, &oracle_opts, &oh.s, err, sizeof err);
    if (st != MCS_OK) {
      std::cerr << "error: oracle comparison failed: " << err << "\n";
      return exit_code_for(st);
    }
    report["oracle_size"] = mcs_solution_size(oh.s);
    report["matches_oracle"] =
        mcs_solution_size(oh.s) == mcs_solution_size(sh.s);
  }

  if (pretty) {
    std::cout << "method:   " << report["method"].get<std::string>() << "\n"
              << "size:     " << report["size"].get<int>() << "\n"
              << "vertices: " << report["vertices"].dump() << "\n"
              << "elapsed:  " << elapsed << " ms\n"
              << "explored: " << report["explored"].get<std::uint64_t>()
              << "\n"
              << "verified: " << (report["verified"].get<bool>() ? "yes" : "no")
              << "\n";
    if (compare_oracle) {
      std::cout << "oracle:   " << report["oracle_size"].get<int>() << " ("
                << (report["matches_oracle"].get<bool>() ? "match"
                                                         : "MISMATCH")
                << ")\n";
    }
  } else {
    std::cout << report.dump() << "\n";
  }
  return mcs_solution_timed_out(sh.s) ? kExitTimeout : 0;
}

int cmd_check(const std::string& input, const std::string& subset,
              bool pretty) {
  GraphHandle gh;
  if (int rc = load_graph(input, gh)) return rc;

  bool ok = false;
  std::vector<int> ids = parse_id_list(subset, ok);
  if (!ok) {
    std::cerr << "error: cannot parse subset list '" << subset << "'\n";
    return kExitUsage;
  }
  int n = mcs_graph_vertex_count(gh.g);
  std::vector<int> zero_based;
  for (int id : ids) {
    if (id < 1 || id > n) {
      std::cerr << "error: vertex id " << id << " out of range 1.." << n
                << "\n";
      return kExitUsage;
    }
    zero_based.push_back(id - 1);
  }

  char err[512] = {0};
  int consistent = 0;
  int witness = -1;
  mcs_status st = mcs_check_subset(
      gh.g, zero_based.data(), static_cast<int>(zero_based.size()),
      &consistent, &witness, err, sizeof err);
  if (st != MCS_OK) {
    std::cerr << "error: " << err << "\n";
    return exit_code_for(st);
  }

  json report;
  report["consistent"] = consistent != 0;
  if (consistent) {
    report["witness"] = nullptr;
  } else {
    report["witness"] = witness + 1;
  }
  if (pretty) {
    if (consistent) {
      std::cout << "consistent\n";
    } else {
      std::cout << "inconsistent, witness vertex " << witness + 1 << "\n";
    }
  } else {
    std::cout << report.dump() << "\n";
  }
  return consistent ? 0 : 1;
}

int cmd_params(const std::string& input, bool pretty) {
  GraphHandle gh;
  if (int rc = load_graph(input, gh)) return rc;

  char err[512] = {0};
  int k = -1;
  int r = -1;
  mcs_status st = mcs_vertex_cover(gh.g, -1, &k, err, sizeof err);
  if (st != MCS_OK) {
    std::cerr << "error: " << err << "\n";
    return exit_code_for(st);
  }
  st = mcs_neighborhood_diversity(gh.g, &r, err, sizeof err);
  if (st != MCS_OK) {
    std::cerr << "error: " << err << "\n";
    return exit_code_for(st);
  }

  json types = json::array();
  for (int t = 0; t < r; t++) {
    int size = 0;
    int clique = 0;
    st = mcs_type_info(gh.g, t, &size, &clique, err, sizeof err);
    if (st != MCS_OK) {
      std::cerr << "error: " << err << "\n";
      return exit_code_for(st);
    }
    json entry;
    entry["index"] = t;
    entry["size"] = size;
    entry["kind"] = clique ? "clique" : "independent";
    types.push_back(entry);
  }

  json report;
  report["n"] = mcs_graph_vertex_count(gh.g);
  report["m"] = mcs_graph_edge_count(gh.g);
  report["c"] = mcs_graph_color_count(gh.g);
  report["vertex_cover"] = k;
  report["neighborhood_diversity"] = r;
  report["types"] = types;

  if (pretty) {
    std::cout << "n = " << report["n"].get<int>()
              << ", m = " << report["m"].get<int>()
              << ", c = " << report["c"].get<int>() << "\n"
              << "vertex cover k = " << k << "\n"
              << "neighborhood diversity r = " << r << "\n";
    for (const auto& entry : types) {
      std::cout << "  type " << entry["index"].get<int>() << ": "
                << entry["size"].get<int>() << " vertices, "
                << entry["kind"].get<std::string>() << "\n";
    }
  } else {
    std::cout << report.dump() << "\n";
  }
  return 0;
}

int cmd_generate(const std::string& model, std::uint64_t seed,
                 const std::string& out_path, int n, double p, int c, int k,
                 double density, const std::string& sizes_list) {
  char err[512] = {0};
  GraphHandle gh;
  mcs_status st;
  if (model == "gnp") {
    st = mcs_generate_gnp(n, p, c, seed, &gh.g, err, sizeof err);
  } else if (model == "planted_vc") {
    st = mcs_generate_planted_vc(k, n, c, density, seed, &gh.g, err,
                                 sizeof err);
  } else if (model == "planted_nd") {
    bool ok = false;
    std::vector<int> sizes = parse_id_list(sizes_list, ok);
    if (!ok || sizes.empty()) {
      std::cerr << "error: --sizes must be a comma list of class sizes\n";
      return kExitUsage;
    }
    st = mcs_generate_planted_nd(sizes.data(),
                                 static_cast<int>(sizes.size()), c, density,
                                 seed, &gh.g, err, sizeof err);
  } else {
    std::cerr << "error: unknown model '" << model
              << "' (expected gnp, planted_vc or planted_nd)\n";
    return kExitUsage;
  }
  if (st != MCS_OK) {
    std::cerr << "error: " << err << "\n";
    return exit_code_for(st);
  }

  char* text = nullptr;
  st = mcs_graph_to_text(gh.g, &text, err, sizeof err);
  if (st != MCS_OK) {
    std::cerr << "error: " << err << "\n";
    return exit_code_for(st);
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    mcs_string_free(text);
    std::cerr << "error: cannot write " << out_path << "\n";
    return kExitUsage;
  }
  out << text;
  out.close();
  mcs_string_free(text);
  log_info("wrote " + out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  init_log_level();
  CLI::App app{"Minimum consistent subset solver"};
  app.require_subcommand(1);

  std::string input, method = "auto", subset, model, out_path, sizes_list;
  int threads = 1;
  long timeout_ms = 0;
  bool compare_oracle = false;
  bool pretty = false;
  std::uint64_t seed = 0;
  int n = 10;
  int c = 2;
  int k = 2;
  double p = 0.3;
  double density = 0.3;

  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("--input", input)->required();
  solve->add_option("--method", method)
      ->check(CLI::IsMember({"auto", "brute", "vc", "nd"}));
  solve->add_option("--threads", threads)->check(CLI::PositiveNumber);
  solve->add_option("--timeout-ms", timeout_ms);
  solve->add_flag("--compare-oracle", compare_oracle);
  solve->add_flag("--pretty", pretty);

  auto* check = app.add_subcommand("check", "Check a subset for consistency");
  check->add_option("--input", input)->required();
  check->add_option("--subset", subset, "Comma list of 1-based vertex ids")
      ->required();
  check->add_flag("--pretty", pretty);

  auto* params = app.add_subcommand("params", "Report structural parameters");
  params->add_option("--input", input)->required();
  params->add_flag("--pretty", pretty);

  auto* generate = app.add_subcommand("generate", "Generate an instance");
  generate->add_option("--model", model)->required();
  generate->add_option("--seed", seed);
  generate->add_option("--out", out_path)->required();
  generate->add_option("--n", n);
  generate->add_option("--p", p);
  generate->add_option("--c", c);
  generate->add_option("--k", k);
  generate->add_option("--density", density);
  generate->add_option("--sizes", sizes_list,
                       "Comma list of twin class sizes (planted_nd)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (solve->parsed()) {
    return cmd_solve(input, method, threads, timeout_ms, compare_oracle,
                     pretty);
  }
  if (check->parsed()) return cmd_check(input, subset, pretty);
  if (params->parsed()) return cmd_params(input, pretty);
  if (generate->parsed()) {
    return cmd_generate(model, seed, out_path, n, p, c, k, density,
                        sizes_list);
  }
  return kExitUsage;
}
