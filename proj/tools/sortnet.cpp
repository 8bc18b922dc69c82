// sortnet: command-line front end for the sortnet core library.
//
// Exit codes: 0 success, 1 check failed (oracle gp-check), 2 validation
// error or bad usage, 3 data error (missing or malformed files), 4 internal
// error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sortnet/edelman_greene.hpp"
#include "sortnet/error.hpp"
#include "sortnet/experiments.hpp"
#include "sortnet/geometry.hpp"
#include "sortnet/hook_formula.hpp"
#include "sortnet/json_io.hpp"
#include "sortnet/patterns.hpp"
#include "sortnet/sampler.hpp"
#include "sortnet/wiring_diagram.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitValidation = 2;
constexpr int kExitData = 3;
constexpr int kExitInternal = 4;

struct Globals {
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string format = "json";
  std::string out;
  bool timing = false;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw sortnet::DomainError("not an integer list: '" + text + "'");
    }
  }
  if (out.empty()) throw sortnet::DomainError("empty integer list");
  return out;
}

// "1,2;3" -> {{1,2},{3}}
std::vector<std::vector<int>> parse_rows(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(parse_int_list(row));
  return rows;
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty() || g.out == "-") {
    std::cout << text;
  } else {
    sortnet::write_text_file(g.out, text);
  }
}

fs::path default_gp_path() {
  if (const char* dir = std::getenv("SORTNET_DATA_DIR")) {
    return fs::path(dir) / "gp5.json";
  }
  const fs::path source = fs::path(SORTNET_SOURCE_DATA_DIR) / "gp5.json";
  if (fs::exists(source)) return source;
  std::error_code ec;
  const auto exe = fs::read_symlink("/proc/self/exe", ec);
  if (!ec) {
    const auto installed = exe.parent_path().parent_path() / "share/sortnet/gp5.json";
    if (fs::exists(installed)) return installed;
  }
  return source;
}

sortnet::SortingNetwork load_gp(const std::string& path) {
  const fs::path p = path.empty() ? default_gp_path() : fs::path(path);
  const auto net = sortnet::network_from_json(sortnet::read_json_file(p));
  if (net.n() != 5) {
    throw sortnet::DomainError("GP pattern must be a size-5 network");
  }
  return net;
}

std::string report_text(const Globals& g, const sortnet::ExperimentReport& r) {
  if (g.format == "csv") return sortnet::report_to_csv(r, g.timing);
  return sortnet::report_to_json(r, g.timing).dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sortnet: sorting networks, staircase tableaux and the "
               "Edelman-Greene bijection"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  if (const char* env = std::getenv("SORTNET_SEED")) {
    try {
      g.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: SORTNET_SEED is not an unsigned integer\n";
      return kExitValidation;
    }
  }
  app.add_option("--seed", g.seed, "RNG seed (default: $SORTNET_SEED or 1)");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out,-o", g.out, "output file (default: stdout)");
  app.add_flag("--timing", g.timing, "include wall-clock time in reports");

  // sample
  std::string shape_text;
  int count = 1;
  auto* sample = app.add_subcommand("sample", "uniform standard Young tableaux (JSONL)");
  sample->add_option("--shape", shape_text, "staircase:N or row list 3,2,1")->required();
  sample->add_option("--count", count)->check(CLI::PositiveNumber);

  int size_n = 0;
  auto* sample_net = app.add_subcommand("sample-network", "uniform sorting networks (JSONL)");
  sample_net->add_option("--n", size_n, "network size")->required();
  sample_net->add_option("--count", count)->check(CLI::PositiveNumber);

  // eg
  std::string to_network, to_tableau;
  auto* eg = app.add_subcommand("eg", "Edelman-Greene bijection");
  auto* eg_fwd = eg->add_option("--to-network", to_network, "tableau JSON file");
  auto* eg_inv = eg->add_option("--to-tableau", to_tableau, "network JSON file");
  eg_fwd->excludes(eg_inv);
  eg->require_option(1);

  // render
  std::string network_file;
  double unit = 40.0;
  auto* render = app.add_subcommand("render", "SVG wiring diagram");
  render->add_option("network", network_file, "network JSON file")->required();
  render->add_option("--unit", unit, "pixels per grid step");

  // pattern
  std::string pattern_text;
  bool exact = false, greedy = false;
  auto* pattern = app.add_subcommand("pattern", "disjoint pattern occurrences");
  pattern->add_option("--network", network_file)->required();
  pattern->add_option("--pattern", pattern_text, "e.g. 2,1,2")->required();
  auto* exact_flag = pattern->add_flag("--exact", exact, "branch and bound (<= 64 occurrences)");
  auto* greedy_flag = pattern->add_flag("--greedy", greedy, "greedy lower bound (default)");
  exact_flag->excludes(greedy_flag);

  // realize / certify
  std::string points_file;
  double eps = sortnet::kDefaultGeneralPositionEps;
  auto* realize = app.add_subcommand("realize", "network of a point configuration");
  realize->add_option("points", points_file, "points JSON file")->required();
  realize->add_option("--eps", eps, "general-position tolerance");

  std::string gp_file;
  bool wide = false;
  auto* certify = app.add_subcommand("certify", "non-realizability certificate");
  certify->add_option("network", network_file)->required();
  certify->add_option("--gp-pattern", gp_file, "size-5 non-realizable network JSON");
  certify->add_flag("--wide", wide, "also scan windows wider than the pattern");

  // experiment
  std::string ns_text = "50,100,200";
  int samples = 200;
  double prefix_c = 1.0;
  std::string motif_text = "1,2;3";
  std::optional<double> cutoff;
  auto* experiment = app.add_subcommand("experiment", "Monte Carlo scaling experiments");
  experiment->require_subcommand(1);
  auto add_run_options = [&](CLI::App* sub) {
    sub->add_option("--n", ns_text, "comma-separated sizes")->capture_default_str();
    sub->add_option("--samples", samples)->check(CLI::PositiveNumber)->capture_default_str();
  };
  auto* t1 = experiment->add_subcommand("t1", "disjoint occurrences of a pattern (count/n^2)");
  add_run_options(t1);
  t1->add_option("--pattern", pattern_text, "pattern, e.g. 1,2")->required();
  t1->add_option("--prefix-c", prefix_c, "time prefix [1, ceil(c n)]")->capture_default_str();
  auto* t2 = experiment->add_subcommand("t2", "identically ordered diagonal motifs");
  add_run_options(t2);
  t2->add_option("--motif", motif_text, "staircase tableau rows, e.g. 1,2;3")->capture_default_str();
  t2->add_option("--cutoff", cutoff, "require entries > N - cutoff*n");
  auto* t3 = experiment->add_subcommand("t3", "fraction of certified non-realizable networks");
  add_run_options(t3);
  t3->add_option("--gp-pattern", gp_file);
  auto* stat = experiment->add_subcommand("stationarity", "exact s_1 vs s_2 frequencies");
  std::string stat_ns = "3,4,5";
  stat->add_option("--n", stat_ns, "sizes <= 5")->capture_default_str();

  // oracle
  long long draws = 1000000;
  bool list = false;
  auto* oracle = app.add_subcommand("oracle", "independent checks");
  oracle->require_subcommand(1);
  auto* enumerate = oracle->add_subcommand("enumerate", "enumerate tableaux vs hook formula");
  enumerate->add_option("--shape", shape_text)->required();
  enumerate->add_flag("--list", list, "print every tableau");
  auto* gp_check = oracle->add_subcommand("gp-check", "check the GP pattern data file");
  gp_check->add_option("--gp-pattern", gp_file);
  gp_check->add_option("--draws", draws)->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*sample) {
      const auto shape = sortnet::parse_shape(shape_text);
      std::string text;
      for (const auto& t : sortnet::sample_batch(shape, count, g.seed, g.jobs)) {
        text += sortnet::to_json(t).dump() + "\n";
      }
      emit(g, text);
    } else if (*sample_net) {
      std::string text;
      for (const auto& w : sortnet::sample_network_batch(size_n, count, g.seed, g.jobs)) {
        text += sortnet::to_json(w).dump() + "\n";
      }
      emit(g, text);
    } else if (*eg) {
      if (!to_network.empty()) {
        const auto t = sortnet::tableau_from_json(sortnet::read_json_file(to_network));
        emit(g, sortnet::to_json(sortnet::eg_forward(t)).dump() + "\n");
      } else {
        const auto w = sortnet::network_from_json(sortnet::read_json_file(to_tableau));
        emit(g, sortnet::to_json(sortnet::eg_inverse(w)).dump() + "\n");
      }
    } else if (*render) {
      const auto w = sortnet::network_from_json(sortnet::read_json_file(network_file));
      sortnet::WiringStyle style;
      style.unit = unit;
      emit(g, sortnet::render_wiring_diagram(w, style));
    } else if (*pattern) {
      const auto w = sortnet::network_from_json(sortnet::read_json_file(network_file));
      const sortnet::Pattern gamma(parse_int_list(pattern_text));
      const auto occ = sortnet::find_occurrences(w, gamma);
      const auto chosen = exact ? sortnet::max_disjoint_exact(occ)
                                : sortnet::max_disjoint_greedy(occ);
      json out;
      out["pattern"] = gamma.swaps();
      out["windows"] = json::array();
      for (const auto& win : chosen.windows) out["windows"].push_back(sortnet::to_json(win));
      out["count"] = chosen.count();
      out["method"] = exact ? "exact" : "greedy";
      out["occurrences"] = occ.size();
      emit(g, out.dump() + "\n");
    } else if (*realize) {
      const auto pts = sortnet::points_from_json(sortnet::read_json_file(points_file));
      emit(g, sortnet::to_json(sortnet::realize_network(pts, eps)).dump() + "\n");
    } else if (*certify) {
      const auto w = sortnet::network_from_json(sortnet::read_json_file(network_file));
      const auto gp = load_gp(gp_file);
      const auto witness = sortnet::certify_nonrealizable(w, gp, wide);
      json out;
      out["certified"] = witness.has_value();
      if (witness) {
        out["result"] = "not realizable";
        out["witness"] = sortnet::to_json(*witness);
      } else {
        out["result"] = "inconclusive";
      }
      emit(g, out.dump() + "\n");
    } else if (*experiment) {
      sortnet::ExperimentReport report;
      if (*t1) {
        sortnet::PatternOptions opt;
        opt.ns = parse_int_list(ns_text);
        opt.samples = samples;
        opt.seed = g.seed;
        opt.jobs = g.jobs;
        opt.prefix_c = prefix_c;
        report = sortnet::experiment_pattern_counts(
            sortnet::Pattern(parse_int_list(pattern_text)), opt);
      } else if (*t2) {
        sortnet::MotifOptions opt;
        opt.ns = parse_int_list(ns_text);
        opt.samples = samples;
        opt.seed = g.seed;
        opt.jobs = g.jobs;
        opt.cutoff = cutoff;
        report = sortnet::experiment_diagonal_motifs(
            sortnet::StandardTableau(parse_rows(motif_text)), opt);
      } else if (*t3) {
        sortnet::RunOptions opt;
        opt.ns = parse_int_list(ns_text);
        opt.samples = samples;
        opt.seed = g.seed;
        opt.jobs = g.jobs;
        report = sortnet::experiment_certificates(load_gp(gp_file), opt);
      } else {
        report = sortnet::experiment_stationarity(parse_int_list(stat_ns));
      }
      emit(g, report_text(g, report));
    } else if (*enumerate) {
      const auto shape = sortnet::parse_shape(shape_text);
      json out;
      out["shape"] = shape.rows();
      long long enumerated = 0;
      json tableaux = json::array();
      sortnet::for_each_syt(shape, [&](const sortnet::StandardTableau& t) {
        ++enumerated;
        if (list) tableaux.push_back(sortnet::to_json(t));
      });
      const auto dim = sortnet::dimension(shape);
      out["count"] = enumerated;
      out["dimension"] = dim.str();
      out["match"] = sortnet::BigInt(enumerated) == dim;
      if (list) out["tableaux"] = std::move(tableaux);
      emit(g, out.dump() + "\n");
      return out["match"].get<bool>() ? 0 : kExitCheckFailed;
    } else if (*gp_check) {
      const fs::path path = gp_file.empty() ? default_gp_path() : fs::path(gp_file);
      const auto doc = sortnet::read_json_file(path);
      std::vector<int> swaps;
      try {
        swaps = doc.at("swaps").get<std::vector<int>>();
      } catch (const json::exception& e) {
        throw sortnet::DataError(std::string("malformed GP pattern: ") + e.what());
      }
      const auto result = sortnet::gp_check(swaps, draws, g.seed, g.jobs);
      json out;
      out["file"] = path.string();
      out["valid_network"] = result.valid_network;
      out["never_realized"] = result.never_realized;
      out["draws"] = result.draws;
      out["networks"] = result.total_networks;
      out["realized_networks"] = result.realized_networks;
      out["never_realized_set"] = json::array();
      for (const auto& w : result.never_realized_set) {
        out["never_realized_set"].push_back(w.swaps());
      }
      std::cerr << (result.pass() ? "PASS" : "FAIL") << ": " << path.string()
                << " (" << result.realized_networks << "/" << result.total_networks
                << " networks realized in " << result.draws << " draws)\n";
      emit(g, out.dump() + "\n");
      return result.pass() ? 0 : kExitCheckFailed;
    }
  } catch (const sortnet::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const sortnet::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
