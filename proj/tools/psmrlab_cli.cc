// Copyright 2026 The PSMRLab Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library only through the C API and
// formats the JSON it returns.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "psmrlab/psmrlab.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitRuntime = 3;

struct GlobalFlags {
  std::optional<unsigned long long> seed_base;
  std::optional<std::string> output;
  std::optional<long> stride;
  std::optional<int> threads;
  bool json_only = false;
};

int ExitCodeFor(psmr_status s) {
  switch (s) {
    case PSMR_OK:
      return kExitOk;
    case PSMR_ERR_INVALID_ARGUMENT:
    case PSMR_ERR_PARSE:
    case PSMR_ERR_VALIDATION:
    case PSMR_ERR_COMPATIBILITY:
      return kExitInput;
    default:
      return kExitRuntime;
  }
}

// Thrown after a failed library call; carries the exit code.
struct CallFailed {
  int code;
};

json Call(psmr_status status, char** text) {
  if (status != PSMR_OK) {
    std::cerr << "error (" << psmr_status_name(status)
              << "): " << psmr_last_error() << "\n";
    throw CallFailed{ExitCodeFor(status)};
  }
  json out = json::parse(*text);
  psmr_string_free(*text);
  *text = nullptr;
  return out;
}

psmr_run_options RunOptions(const GlobalFlags& g) {
  psmr_run_options o;
  psmr_run_options_init(&o);
  if (g.threads) o.threads = *g.threads;
  if (g.seed_base) {
    o.has_seed_base = 1;
    o.seed_base = *g.seed_base;
  }
  if (g.stride) {
    o.has_stride = 1;
    o.stride = *g.stride;
  }
  if (g.output) o.output = g.output->c_str();
  return o;
}

std::string Num(const json& v, int precision = 6) {
  if (v.is_null()) return "inf";
  if (!v.is_number()) return v.dump();
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v.get<double>());
  return buf;
}

std::string Vec(const json& v, int precision = 4) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += Num(v[i], precision);
  }
  return s + ")";
}

void PrintJsonBlock(const json& j) {
  std::cout << "--- json ---\n" << j.dump(2) << "\n";
}

void Emit(const GlobalFlags& g, const json& j,
          const std::function<void()>& human) {
  if (g.json_only) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  human();
  PrintJsonBlock(j);
}

void PrintAnalysis(const json& a) {
  const json& eq = a["equilibrium"];
  const json& gaps = a["gaps"];
  std::cout << "game: " << a["type"].get<std::string>() << ", "
            << a["num_x"] << " x " << a["num_y"] << " actions\n";
  if (eq["psne"].empty()) {
    std::cout << "PSNE: none\n";
  } else {
    for (const json& p : eq["psne"]) {
      std::cout << "PSNE: (" << p["x"].get<int>() + 1 << ", "
                << p["y"].get<int>() + 1 << ")"
                << (p["strict"].get<bool>() ? " strict" : " non-strict")
                << "\n";
    }
  }
  std::cout << "v*    = " << Num(eq["v_star"]) << "  (maximin row "
            << eq["maximin_row"].get<int>() + 1 << ", minimax column "
            << eq["minimax_col"].get<int>() + 1 << ")\n"
            << "vMix  = " << Num(eq["v_mix"]) << "\n"
            << "p*    = " << Vec(eq["p_star"]) << "\n"
            << "q*    = " << Vec(eq["q_star"]) << "\n"
            << "dMix  = " << Num(gaps["delta_mix"]) << "\n";
  if (!gaps["anchor"].is_null()) {
    std::cout << "dR    = " << Vec(gaps["delta_r"]) << "  min "
              << Num(gaps["delta_r_min"]) << "\n"
              << "dC    = " << Vec(gaps["delta_c"]) << "  min "
              << Num(gaps["delta_c_min"]) << "\n";
  }
  std::cout << "dLin  = " << Num(gaps["delta_lin"]) << "\n";
  if (!gaps["delta_entry"].is_null()) {
    std::cout << "dE    = " << Num(gaps["delta_entry"]) << "\n";
  }
}

int CmdAnalyze(const GlobalFlags& g, const std::string& file,
               const std::string& catalog_id, double eps) {
  psmr_game* game = nullptr;
  psmr_status s = catalog_id.empty()
                      ? psmr_game_from_file(file.c_str(), &game)
                      : psmr_game_from_catalog(catalog_id.c_str(), eps, &game);
  if (s != PSMR_OK) Call(s, nullptr);
  char* text = nullptr;
  s = psmr_game_analyze(game, &text);
  psmr_game_free(game);
  json a = Call(s, &text);
  Emit(g, a, [&] { PrintAnalysis(a); });
  return kExitOk;
}

int CmdSimulate(const GlobalFlags& g, const std::string& spec_path) {
  psmr_run_options o = RunOptions(g);
  char* text = nullptr;
  json r = Call(psmr_experiment_run_file(spec_path.c_str(), &o, &text), &text);
  Emit(g, r, [&] {
    std::cout << "experiment " << r["experiment_id"].get<std::string>()
              << ": " << r["learner"].get<std::string>() << " vs "
              << r["adversary"].get<std::string>() << ", "
              << r["feedback"].get<std::string>() << " feedback, "
              << r["noise"].get<std::string>() << " noise, T = "
              << r["horizon"] << ", " << r["num_seeds"] << " seeds\n";
    std::printf("%-6s %14s %12s %12s\n", "series", "mean", "sd", "ci95");
    for (const char* k : {"psmr", "nr", "er"}) {
      std::printf("%-6s %14s %12s %12s\n", k, Num(r[k]["mean"], 8).c_str(),
                  Num(r[k]["sd"]).c_str(), Num(r[k]["ci95_half"]).c_str());
    }
    if (!r["psmr_fit"].is_null()) {
      const json& f = r["psmr_fit"];
      std::cout << "mean PSMR fit over t in [" << f["first_t"] << ", "
                << f["last_t"] << "]: a + b ln t (b = "
                << Num(f["log"]["b"]) << ", residual "
                << Num(f["log"]["residual_norm"]) << "), a + b sqrt t (b = "
                << Num(f["sqrt"]["b"]) << ", residual "
                << Num(f["sqrt"]["residual_norm"]) << ") -> "
                << f["winner"].get<std::string>() << "\n";
    }
    if (!r["csv"].is_null()) {
      std::cout << "wrote " << r["csv_rows"] << " rows to "
                << r["csv"].get<std::string>() << "\n";
    }
  });
  return kExitOk;
}

int CmdLowerBound(const GlobalFlags& g,
                  const std::vector<std::pair<double, double>>& gaps,
                  long horizon, long seeds, const std::string& learner,
                  const std::string& noise) {
  json req = {{"horizon", horizon},
              {"seeds", {{"count", seeds}, {"base", 0}}},
              {"learner", learner},
              {"noise", noise},
              {"gaps", json::array()}};
  for (const auto& [dr, dc] : gaps) req["gaps"].push_back({dr, dc});
  psmr_run_options o = RunOptions(g);
  char* text = nullptr;
  const std::string body = req.dump();
  json r = Call(psmr_lowerbound_run(body.c_str(), &o, &text), &text);
  bool failed = false;
  Emit(g, r, [&] {
    std::printf("%-7s %-7s %4s %10s %10s %8s %12s %12s %12s %5s %10s\n",
                "dR", "dC", "case", "K", "eps", "T'", "PSMR(A)", "PSMR(B)",
                "max", "arg", "scale");
    for (const json& e : r["entries"]) {
      if (e.contains("error")) {
        std::printf("%-7s %-7s  error: %s\n", Num(e["delta_r"]).c_str(),
                    Num(e["delta_c"]).c_str(),
                    e["error"].get<std::string>().c_str());
        continue;
      }
      std::printf("%-7s %-7s %4d %10s %10s %8ld %12s %12s %12s %5s %10s\n",
                  Num(e["delta_r"]).c_str(), Num(e["delta_c"]).c_str(),
                  e["A"]["case"].get<int>(), Num(e["A"]["K"]).c_str(),
                  Num(e["A"]["eps"]).c_str(), e["A"]["t_prime"].get<long>(),
                  Num(e["A"]["mean_psmr"], 8).c_str(),
                  Num(e["B"]["mean_psmr"], 8).c_str(),
                  Num(e["max_mean_psmr"], 8).c_str(),
                  e["max_matrix"].get<std::string>().c_str(),
                  Num(e["theoretical_scale"]).c_str());
    }
    if (r["entries"].size() > 1) {
      std::cout << "max mean PSMR strictly increasing along the sweep: "
                << (r["strictly_increasing"].get<bool>() ? "yes" : "no")
                << "\n";
    }
  });
  for (const json& e : r["entries"]) failed |= e.contains("error");
  return failed ? kExitInput : kExitOk;
}

int CmdDesign(const GlobalFlags& g, const std::string& file, double tol,
              const std::vector<int>& random) {
  char* text = nullptr;
  psmr_status s;
  if (!random.empty()) {
    s = psmr_design_random(random[0], random[1],
                           g.seed_base.value_or(0), tol, &text);
  } else {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "error (parse): cannot open file '" << file << "'\n";
      return kExitInput;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    s = psmr_design_compute(ss.str().c_str(), tol, &text);
  }
  json d = Call(s, &text);
  Emit(g, d, [&] {
    std::cout << "design over " << d["num_actions"] << " actions in R^"
              << d["dim"] << " (" << d["iterations"] << " iterations)\n";
    std::printf("%-8s %-12s %s\n", "index", "weight", "label");
    for (const json& e : d["support"]) {
      std::printf("%-8d %-12s %s\n", e["index"].get<int>() + 1,
                  Num(e["weight"]).c_str(),
                  e.value("label", std::string()).c_str());
    }
    std::cout << "max leverage = " << Num(d["max_leverage"], 10)
              << ", c_achieved = " << Num(d["c_achieved"], 10) << "\n";
  });
  return kExitOk;
}

int CmdCatalog(const GlobalFlags& g, const std::string& show, double eps) {
  char* text = nullptr;
  json list = Call(psmr_catalog_list(eps, &text), &text);
  if (show.empty()) {
    Emit(g, list, [&] {
      for (const json& e : list) {
        std::printf("%-18s %s\n", e["id"].get<std::string>().c_str(),
                    e["provenance"].get<std::string>().c_str());
      }
    });
    return kExitOk;
  }
  for (const json& e : list) {
    if (e["id"] == show) {
      std::cout << e["game"].dump(2) << "\n";
      return kExitOk;
    }
  }
  std::cerr << "error (invalid_argument): unknown catalog id '" << show << "'\n";
  return kExitInput;
}

// "0.1,0.1;0.05,0.05" -> pairs.
std::vector<std::pair<double, double>> ParseGaps(const std::string& text) {
  std::vector<std::pair<double, double>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const size_t comma = item.find(',');
    if (comma == std::string::npos) {
      throw CLI::ValidationError("--gaps", "expected DR,DC pairs separated by ';'");
    }
    try {
      out.emplace_back(std::stod(item.substr(0, comma)),
                       std::stod(item.substr(comma + 1)));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--gaps", "bad number in '" + item + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError("--gaps", "no pairs given");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"psmrlab: regret experiments for learners in zero-sum games"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags g;
  app.add_option("--seed-base", g.seed_base, "First seed of counted seed ranges");
  app.add_option("--output", g.output, "CSV output path for simulate");
  app.add_option("--stride", g.stride,
                 "Log every k rounds (0 = powers of two plus final)");
  app.add_option("--threads", g.threads,
                 "Episodes run concurrently (PSMRLAB_THREADS overrides)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", g.json_only, "Print only the JSON block");

  auto* analyze = app.add_subcommand("analyze", "Equilibria and gap profile of a game");
  std::string game_file, catalog_id;
  double eps = 0.5;
  auto* file_opt = analyze->add_option("file", game_file, "Game file");
  auto* cat_opt = analyze->add_option("--catalog", catalog_id, "Built-in game id");
  analyze->add_option("--eps", eps, "Parameter of the built-in example games");
  file_opt->excludes(cat_opt);
  cat_opt->excludes(file_opt);

  auto* simulate = app.add_subcommand("simulate", "Run an experiment spec");
  std::string spec_path;
  simulate->add_option("spec", spec_path, "Experiment spec file")->required();

  auto* lowerbound = app.add_subcommand("lowerbound",
                                        "Run the hard two-game construction");
  double delta_r = 0.0, delta_c = 0.0;
  std::string gaps_text, learner = "tsallis_inf", noise = "two_point";
  long horizon = 0, seeds = 30;
  auto* dr_opt = lowerbound->add_option("--delta-r", delta_r, "Row gap");
  auto* dc_opt = lowerbound->add_option("--delta-c", delta_c, "Column gap");
  auto* gaps_opt = lowerbound->add_option(
      "--gaps", gaps_text, "Sweep, e.g. \"0.1,0.1;0.05,0.05;0.025,0.025\"");
  dr_opt->needs(dc_opt);
  dc_opt->needs(dr_opt);
  gaps_opt->excludes(dr_opt)->excludes(dc_opt);
  lowerbound->add_option("--horizon,-T", horizon, "Horizon")->required()
      ->check(CLI::PositiveNumber);
  lowerbound->add_option("--seeds", seeds, "Number of seeds")
      ->check(CLI::PositiveNumber);
  lowerbound->add_option("--learner", learner, "Learner name");
  lowerbound->add_option("--noise", noise, "two_point or noiseless");

  auto* design = app.add_subcommand("design", "Kiefer-Wolfowitz exploration design");
  std::string actions_file;
  double tol = 0.01;
  std::vector<int> random;
  auto* actions_opt = design->add_option("file", actions_file, "Action set file");
  auto* random_opt = design->add_option("--random", random,
                                        "M,D: M random unit vectors in R^D")
                         ->delimiter(',')
                         ->expected(2);
  actions_opt->excludes(random_opt);
  design->add_option("--tol", tol, "Stop when max leverage <= (1 + tol) d");

  auto* catalog = app.add_subcommand("catalog", "List the built-in games");
  std::string show;
  catalog->add_option("--show", show, "Print one entry as a game file");
  catalog->add_option("--eps", eps, "Parameter of the built-in example games");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze) {
      if (game_file.empty() && catalog_id.empty()) {
        std::cerr << "error: analyze needs a game file or --catalog\n";
        return kExitInput;
      }
      return CmdAnalyze(g, game_file, catalog_id, eps);
    }
    if (*simulate) return CmdSimulate(g, spec_path);
    if (*lowerbound) {
      std::vector<std::pair<double, double>> gaps;
      if (!gaps_text.empty()) {
        gaps = ParseGaps(gaps_text);
      } else if (dr_opt->count() > 0) {
        gaps.emplace_back(delta_r, delta_c);
      } else {
        std::cerr << "error: lowerbound needs --delta-r/--delta-c or --gaps\n";
        return kExitInput;
      }
      return CmdLowerBound(g, gaps, horizon, seeds, learner, noise);
    }
    if (*design) {
      if (actions_file.empty() && random.empty()) {
        std::cerr << "error: design needs an action set file or --random\n";
        return kExitInput;
      }
      return CmdDesign(g, actions_file, tol, random);
    }
    if (*catalog) return CmdCatalog(g, show, eps);
  } catch (const CallFailed& f) {
    return f.code;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
