#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "vho/matrix_io.hpp"
#include "vho/scenario_io.hpp"
#include "vho/schemes.hpp"
#include "vho/sim.hpp"

using nlohmann::json;
using namespace vho;

namespace {

// exit codes: 0 success, 2 parse error, 3 bad weights, 4 scenario invariant
int exit_code_for(const error& e) {
  switch (e.code()) {
    case errc::parse_error:
      return 2;
    case errc::negative_weight:
    case errc::sum_not_one:
      return 3;
    case errc::scenario_invalid:
      return 4;
    default:
      return 1;
  }
}

bool color_enabled() {
  const char* env = std::getenv("VHO_COLOR");
  if (env != nullptr && std::string(env) == "0") return false;
  return isatty(STDOUT_FILENO) == 1;
}

std::string bold(const std::string& s) {
  return color_enabled() ? "\033[1m" + s + "\033[0m" : s;
}

std::string green(const std::string& s) {
  return color_enabled() ? "\033[32m" + s + "\033[0m" : s;
}

std::string fixed(double v, int digits = 4) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

// ---- decide ----------------------------------------------------------------

json report_json(const madm::method_report& rep,
                 const std::vector<std::string>& alternatives) {
  json j;
  j["scores"] = json::array();
  for (std::size_t i = 0; i < alternatives.size(); ++i) {
    j["scores"].push_back({{"id", alternatives[i]}, {"score", rep.scores[i]}});
  }
  j["ranking"] = rep.ranked.order_ids;
  j["winner"] = rep.winner;
  if (rep.rsd_pct) {
    j["rsd_pct"] = *rep.rsd_pct;
  } else {
    j["rsd_pct"] = nullptr;
    j["rsd_reason"] = errc_name(*rep.rsd_error);
  }
  return j;
}

void print_report(const std::string& title, const madm::method_report& rep,
                  const std::vector<std::string>& alternatives) {
  std::cout << bold(title) << "\n";
  for (std::size_t i = 0; i < alternatives.size(); ++i) {
    std::cout << "  " << std::left << std::setw(12) << alternatives[i]
              << fixed(rep.scores[i]) << "\n";
  }
  std::cout << "  ranking: " << join(rep.ranked.order_ids, " > ") << "\n";
  if (rep.rsd_pct) {
    std::cout << "  rsd:     " << fixed(*rep.rsd_pct, 2) << "%\n";
  } else {
    std::cout << "  rsd:     undefined (" << errc_name(*rep.rsd_error) << ")\n";
  }
  std::cout << "  winner:  " << green(rep.winner) << "\n";
}

int run_decide(const std::string& matrix_path, const std::string& method,
               const std::string& format) {
  const io::matrix_file file = io::load_matrix_file(matrix_path);
  const auto& alternatives = file.matrix.alternatives();

  std::optional<madm::method_report> saw;
  std::optional<madm::method_report> wpm;
  std::optional<std::string> discriminating;
  if (method == "both") {
    madm::method_comparison cmp = madm::compare_methods(file.matrix, file.weights);
    saw = std::move(cmp.saw);
    wpm = std::move(cmp.wpm);
    discriminating = cmp.more_discriminating;
  } else if (method == "saw") {
    saw = madm::saw_report(file.matrix, file.weights);
  } else {
    wpm = madm::wpm_report(file.matrix, file.weights);
  }

  if (format == "json") {
    json j;
    j["matrix"] = matrix_path;
    j["alternatives"] = alternatives;
    if (saw) j["saw"] = report_json(*saw, alternatives);
    if (wpm) j["wpm"] = report_json(*wpm, alternatives);
    if (saw && wpm) {
      j["more_discriminating"] =
          discriminating ? json(*discriminating) : json();
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (saw) print_report("SAW scores", *saw, alternatives);
  if (wpm) print_report("WPM ideal ratios", *wpm, alternatives);
  if (saw && wpm) {
    if (discriminating) {
      const auto& strong = *discriminating == "wpm" ? *wpm : *saw;
      const auto& weak = *discriminating == "wpm" ? *saw : *wpm;
      std::cout << bold("more discriminating: ") << *discriminating << " ("
                << fixed(*strong.rsd_pct, 2) << "% vs "
                << fixed(*weak.rsd_pct, 2) << "%)\n";
    } else {
      std::cout << bold("more discriminating: ") << "undecided\n";
    }
  }
  return 0;
}

// ---- simulate ---------------------------------------------------------------

void print_summary(const sim::metrics_summary& m, std::size_t events) {
  std::cout << bold("simulation summary") << "\n"
            << "  events:      " << events << "\n"
            << "  handovers:   " << m.handovers << "\n"
            << "  blocked:     " << m.blocked << "\n"
            << "  decisions:   " << m.decisions << "\n"
            << "  mean delay:  " << fixed(m.mean_processing_delay_ms, 3) << " ms\n"
            << "  max delay:   " << fixed(m.max_processing_delay_ms, 3) << " ms\n";
  std::cout << "  connections: ";
  bool first = true;
  for (const auto& [id, n] : m.connections) {
    if (!first) std::cout << " ";
    std::cout << id << "=" << n;
    first = false;
  }
  if (m.connections.empty()) std::cout << "none";
  std::cout << "\n  total time:  " << fixed(m.total_time_s, 3) << " s\n";
}

int run_simulate(const std::string& scenario_path, const std::string& out_path) {
  const sim::scenario s = io::load_scenario_file(scenario_path);
  const sim::run_result result = sim::run(s);

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return 1;
  }
  io::write_trace(out, result.trace);
  out.close();

  print_summary(result.summary, result.trace.size());
  std::cout << "  trace:       " << out_path << "\n";
  return 0;
}

// ---- compare ----------------------------------------------------------------

struct comparison_row {
  std::string scheme;
  std::string method;
  std::vector<std::string> connects;  // distinct networks in connection order
  sim::metrics_summary summary;
  std::optional<double> mean_score_rsd_pct;
};

comparison_row run_combination(sim::scenario s, schemes::scheme sch,
                               selection::method m) {
  s.decision_scheme = sch;
  s.decision_method = m;
  const sim::run_result result = sim::run(s);

  comparison_row row;
  row.scheme = schemes::scheme_name(sch);
  row.method = selection::method_name(m);
  row.summary = result.summary;

  double rsd_sum = 0.0;
  std::size_t rsd_count = 0;
  for (const auto& ev : result.trace) {
    if (ev.kind == sim::event_kind::connected) {
      const auto& id = std::get<sim::connected_payload>(ev.payload).network;
      if (row.connects.empty() || row.connects.back() != id) {
        row.connects.push_back(id);
      }
    } else if (ev.kind == sim::event_kind::decision_made) {
      const auto& outcome = std::get<sim::decision_payload>(ev.payload).outcome;
      if (outcome.per_network_scores.size() >= 2) {
        std::vector<double> scores;
        for (const auto& sn : outcome.per_network_scores) scores.push_back(sn.nqv);
        rsd_sum += madm::rsd(scores);
        ++rsd_count;
      }
    }
  }
  if (rsd_count > 0) row.mean_score_rsd_pct = rsd_sum / rsd_count;
  return row;
}

int run_compare(const std::string& scenario_path, const std::string& format) {
  const sim::scenario base = io::load_scenario_file(scenario_path);

  std::vector<comparison_row> rows;
  for (schemes::scheme sch : {schemes::scheme::cvhd, schemes::scheme::dvhd,
                              schemes::scheme::tdvhd}) {
    for (selection::method m : {selection::method::saw, selection::method::wpm}) {
      rows.push_back(run_combination(base, sch, m));
    }
  }

  if (format == "json") {
    json j;
    j["scenario"] = scenario_path;
    j["runs"] = json::array();
    for (const auto& row : rows) {
      json r{{"scheme", row.scheme},
             {"method", row.method},
             {"connections", row.connects},
             {"handovers", row.summary.handovers},
             {"blocked", row.summary.blocked},
             {"decisions", row.summary.decisions},
             {"mean_processing_delay_ms", row.summary.mean_processing_delay_ms},
             {"max_processing_delay_ms", row.summary.max_processing_delay_ms}};
      r["mean_score_rsd_pct"] =
          row.mean_score_rsd_pct ? json(*row.mean_score_rsd_pct) : json();
      j["runs"].push_back(std::move(r));
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << bold("scheme  method  connections          handovers  blocked  "
                    "mean delay  max delay  mean rsd") << "\n";
  for (const auto& row : rows) {
    std::ostringstream line;
    line << std::left << std::setw(8) << row.scheme << std::setw(8) << row.method
         << std::setw(21) << join(row.connects, ",") << std::setw(11)
         << row.summary.handovers << std::setw(9) << row.summary.blocked
         << std::setw(12) << fixed(row.summary.mean_processing_delay_ms, 3)
         << std::setw(11) << fixed(row.summary.max_processing_delay_ms, 3)
         << (row.mean_score_rsd_pct ? fixed(*row.mean_score_rsd_pct, 2) + "%"
                                    : std::string("-"));
    std::cout << line.str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"network-selection decisions and handover simulation"};
  app.require_subcommand(1);

  std::string matrix_path;
  std::string method = "both";
  std::string decide_format = "table";
  CLI::App* decide = app.add_subcommand(
      "decide", "score a decision-matrix file and rank the alternatives");
  decide->add_option("--matrix", matrix_path, "decision matrix file")->required();
  decide->add_option("--method", method, "saw, wpm or both")
      ->check(CLI::IsMember({"saw", "wpm", "both"}));
  decide->add_option("--format", decide_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  std::string scenario_path;
  std::string out_path = "trace.jsonl";
  CLI::App* simulate = app.add_subcommand(
      "simulate", "run a scenario and write the event trace");
  simulate->add_option("--scenario", scenario_path, "scenario JSON file")->required();
  simulate->add_option("--out", out_path, "trace output path (JSON lines)");

  std::string cmp_scenario_path;
  std::string cmp_format = "table";
  CLI::App* compare = app.add_subcommand(
      "compare", "run a scenario under every scheme and method");
  compare->add_option("--scenario", cmp_scenario_path, "scenario JSON file")->required();
  compare->add_option("--format", cmp_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (decide->parsed()) return run_decide(matrix_path, method, decide_format);
    if (simulate->parsed()) return run_simulate(scenario_path, out_path);
    return run_compare(cmp_scenario_path, cmp_format);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
