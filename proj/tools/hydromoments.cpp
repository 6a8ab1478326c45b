#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "hydromoments/cli/commands.hpp"
#include "hydromoments/cli/verify.hpp"

using namespace hydromoments;
using namespace hydromoments::cli;

namespace {

const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"human", Format::Human}};

Space parse_space(const std::string& s) { return s == "p" ? Space::Momentum : Space::Position; }

/// "a:b", "a..b" or "a" as an inclusive integer range.
std::pair<int, int> parse_range(const std::string& text) {
  for (const std::string sep : {"..", ":"}) {
    const auto at = text.find(sep);
    if (at != std::string::npos) return {std::stoi(text.substr(0, at)), std::stoi(text.substr(at + sep.size()))};
  }
  const int v = std::stoi(text);
  return {v, v};
}

/// "a..b" doubles from a up to b; otherwise a comma-separated list.
std::vector<int> parse_sequence(const std::string& text) {
  std::vector<int> out;
  const auto at = text.find("..");
  if (at != std::string::npos) {
    const int lo = std::stoi(text.substr(0, at)), hi = std::stoi(text.substr(at + 2));
    for (int v = lo; v <= hi && v > 0; v *= 2) out.push_back(v);
    return out;
  }
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(std::stoi(item));
  return out;
}

/// Orders may be written as decimals or as fractions p/q.
double parse_order(const std::string& text) {
  if (text.find('/') != std::string::npos) return rational_from_string(text).get_d();
  size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size()) throw std::invalid_argument("bad order '" + text + "'");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radial expectation values <r^alpha> and <p^alpha> of D-dimensional hydrogenic states"};
  app.require_subcommand(1);

  Request base;
  std::string mode = "auto";
  std::string format_name;

  auto add_state = [&](CLI::App* cmd) {
    cmd->add_option("--D", base.D, "Dimension (>= 2)")->capture_default_str();
    cmd->add_option("--n", base.n, "Principal quantum number")->capture_default_str();
    cmd->add_option("--l", base.l, "Hyperangular quantum number")->capture_default_str();
    cmd->add_option("--Z", base.Z, "Nuclear charge")->capture_default_str();
  };
  auto add_mode = [&](CLI::App* cmd) {
    cmd->add_option("--mode", mode, "auto, exact, float or oracle")
        ->check(CLI::IsMember({"auto", "exact", "float", "oracle"}))
        ->capture_default_str();
  };

  auto* compute = app.add_subcommand("compute", "Evaluate single moments");
  std::vector<std::string> alpha_text;
  std::string space = "r";
  compute->add_option("--space", space, "r or p")->check(CLI::IsMember({"r", "p"}))->capture_default_str();
  compute->add_option("--alpha", alpha_text, "Order(s); repeat or separate with commas")->required()->delimiter(',');
  add_state(compute);
  add_mode(compute);
  compute->add_option("--format", format_name, "json, csv or human")->check(CLI::IsMember({"json", "csv", "human"}));

  auto* table = app.add_subcommand("table", "Sweep a grid of states and orders");
  TableSpec tspec;
  std::string D_range = "3", n_range = "1:3", l_choice = "all";
  std::vector<std::string> alpha_list;
  table->add_option("--D-range", D_range, "D range, e.g. 2:6")->capture_default_str();
  table->add_option("--n-range", n_range, "n range, e.g. 1:4")->capture_default_str();
  table->add_option("--l", l_choice, "'all' or a single l")->capture_default_str();
  table->add_option("--alpha-list", alpha_list, "Comma-separated orders")->required()->delimiter(',');
  table->add_option("--space", space, "r or p")->check(CLI::IsMember({"r", "p"}))->capture_default_str();
  table->add_option("--Z", tspec.Z, "Nuclear charge")->capture_default_str();
  table->add_flag("--parallel", tspec.parallel, "Use a worker pool (HYDROMOMENTS_THREADS sets its size)");
  add_mode(table);
  table->add_option("--format", format_name, "json, csv or human")->check(CLI::IsMember({"json", "csv", "human"}));

  auto* verify = app.add_subcommand("verify", "Run cross-check suites");
  std::string suite = "all", grid = "medium";
  verify->add_option("--suite", suite, "routes, reflection, oracle, asymptotics, uncertainty or all")
      ->check(CLI::IsMember({"routes", "reflection", "oracle", "asymptotics", "uncertainty", "all"}))
      ->capture_default_str();
  verify->add_option("--grid", grid, "small, medium or full")
      ->check(CLI::IsMember({"small", "medium", "full"}))
      ->capture_default_str();
  verify->add_option("--format", format_name, "json or human")->check(CLI::IsMember({"json", "human"}));

  auto* limits = app.add_subcommand("limits", "Compare asymptotic estimates with exact values");
  LimitsSpec lspec;
  std::string regime = "rydberg", family = "general", sequence;
  limits->add_option("--regime", regime, "rydberg or highd")->check(CLI::IsMember({"rydberg", "highd"}));
  limits->add_option("--alpha", lspec.alpha, "Order")->required();
  limits->add_option("--space", space, "r or p")->check(CLI::IsMember({"r", "p"}));
  limits->add_option("--family", family, "general, circular or ns")->check(CLI::IsMember({"general", "circular", "ns"}));
  auto* n_seq = limits->add_option("--n-seq", sequence, "n values: a..b (doubling) or a list");
  auto* D_seq = limits->add_option("--D-seq", sequence, "D values: a..b (doubling) or a list");
  n_seq->excludes(D_seq);
  add_state(limits);
  limits->add_option("--format", format_name, "json, csv or human")->check(CLI::IsMember({"json", "csv", "human"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const char* fallback = compute->parsed() ? "json" : table->parsed() ? "csv" : "human";
  const Format format = formats.at(format_name.empty() ? fallback : format_name);

  try {
    if (compute->parsed()) {
      std::vector<Request> requests;
      for (const auto& text : alpha_text) {
        Request q = base;
        q.space = parse_space(space);
        q.alpha = parse_order(text);
        q.mode = mode;
        requests.push_back(q);
      }
      return cmd_compute(requests, format, std::cout, std::cerr);
    }
    if (table->parsed()) {
      std::tie(tspec.D_lo, tspec.D_hi) = parse_range(D_range);
      std::tie(tspec.n_lo, tspec.n_hi) = parse_range(n_range);
      tspec.l = l_choice == "all" ? -1 : std::stoi(l_choice);
      for (const auto& text : alpha_list) tspec.alphas.push_back(parse_order(text));
      tspec.mode = mode;
      tspec.space = parse_space(space);
      return cmd_table(tspec, format, std::cout);
    }
    if (verify->parsed()) return cmd_verify(suite, named_grid(grid), format, std::cout, std::cerr);
    if (limits->parsed()) {
      lspec.regime = regime == "highd" ? Regime::HighD : Regime::Rydberg;
      lspec.family = family == "circular" ? LimitFamily::Circular : family == "ns" ? LimitFamily::NS : LimitFamily::General;
      lspec.space = limits->count("--space") ? parse_space(space) : Space::Momentum;
      lspec.D = base.D;
      lspec.n = base.n;
      lspec.l = base.l;
      lspec.Z = base.Z;
      if (sequence.empty()) {
        std::cerr << "error: limits needs --n-seq or --D-seq\n";
        return exit_domain;
      }
      lspec.sequence = parse_sequence(sequence);
      return cmd_limits(lspec, format, std::cout, std::cerr);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_domain;
  }
  return exit_ok;
}
