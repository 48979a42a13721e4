// Copyright 2026 The conflictnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "conflictnet/analysis.h"
#include "conflictnet/equilibrium.h"
#include "conflictnet/examples.h"
#include "conflictnet/format.h"
#include "conflictnet/general_solver.h"
#include "conflictnet/parallel.h"
#include "conflictnet/serialization.h"
#include "json.hpp"
#include "sweep.h"

namespace conflictnet::cli {
namespace {

using nlohmann::json;

// Flags shared by the network-consuming subcommands.
struct CommonFlags {
  std::string example;
  std::string input;
  std::vector<std::string> f;
  std::string v;
  std::string tullock;
  std::string cost;
  std::string format = "json";
  std::string output;
  int threads = 0;
};

void AddSourceFlags(CLI::App* app, CommonFlags& flags, bool many_f) {
  app->add_option("--example", flags.example,
                  "Built-in network: triangle, simplex or duel");
  app->add_option("--input", flags.input, "Network JSON file");
  auto* f = app->add_option(
      "--f", flags.f,
      "Production for every battle: power:A,r | ratio:c | cara:a | "
      "piecewise:s,A,r | piecewise-f3");
  if (!many_f) f->expected(1);
  app->add_option("--v", flags.v, "Prizes per battle size, ascending");
  app->add_option("--tullock", flags.tullock,
                  "Per-size power exponents, e.g. r2=1,r3=0.5");
  app->add_option("--cost", flags.cost, "Cost function power:kappa,p");
}

void AddOutputFlags(CLI::App* app, CommonFlags& flags) {
  app->add_option("--format", flags.format, "json, csv or md")
      ->check(CLI::IsMember({"json", "csv", "md"}));
  app->add_option("--output", flags.output, "Write to this file");
  app->add_option("--threads", flags.threads, "Worker threads")
      ->check(CLI::NonNegativeNumber);
}

NetworkSource SourceFrom(const CommonFlags& flags, const std::string* f) {
  NetworkSource source;
  if (!flags.example.empty()) source.example = flags.example;
  if (!flags.input.empty()) source.input = flags.input;
  if (f != nullptr) source.production = ParseProduction(*f);
  if (!flags.v.empty()) source.prizes = ParseNumberList(flags.v);
  if (!flags.tullock.empty()) source.tullock = ParseTullock(flags.tullock);
  if (!flags.cost.empty()) source.cost = ParseCost(flags.cost);
  return source;
}

SemiSymmetricStructure RequireSemiSymmetric(const ConflictNetwork& net) {
  SemiSymmetryCheck check = CheckSemiSymmetry(net);
  if (!check.ok()) {
    std::string msg = "network is not semi-symmetric:";
    for (const auto& v : check.violations) msg += "\n  " + v.message;
    Fail(ErrorCode::kPreconditionViolation, msg);
  }
  return *check.structure;
}

void Emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) Fail(ErrorCode::kPreconditionViolation, "cannot write '" + path + "'");
  file << text;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string Markdown() const {
    std::string s = "|";
    for (const auto& h : header) s += " " + h + " |";
    s += "\n|";
    for (std::size_t i = 0; i < header.size(); ++i) s += "---|";
    s += "\n";
    for (const auto& row : rows) {
      s += "|";
      for (const auto& cell : row) s += " " + cell + " |";
      s += "\n";
    }
    return s;
  }

  static std::string CsvField(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string quoted = "\"";
    for (char c : cell) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }

  std::string Csv() const {
    auto line = [](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) s += ",";
        s += CsvField(cells[i]);
      }
      return s + "\n";
    };
    std::string s = line(header);
    for (const auto& row : rows) s += line(row);
    return s;
  }
};

std::string Render(const std::string& format, const json& j,
                   const Table& table) {
  if (format == "json") return j.dump(2) + "\n";
  if (format == "csv") return table.Csv();
  return table.Markdown();
}

std::string Sig(double v) { return FormatSignificant(v, 6); }
std::string Full(double v) { return FormatShortest(v); }

std::string DescribeProduction(const SemiSymmetricStructure& ss) {
  if (ss.SharedProduction()) return ss.classes.front().production.Describe();
  std::string s;
  for (const auto& c : ss.classes) {
    if (!s.empty()) s += ";";
    s += std::to_string(c.size) + "=" + c.production.Describe();
  }
  return s;
}

std::vector<double> PayoffsAt(const ConflictNetwork& net,
                              const EffortProfile& profile) {
  std::vector<double> payoffs(net.num_players());
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    payoffs[i] = PayoffByIndex(net, profile, i);
  }
  return payoffs;
}

std::map<int, double> UniformBySize(const SemiSymmetricStructure& ss,
                                    double effort) {
  std::map<int, double> m;
  for (const auto& c : ss.classes) m[c.size] = effort;
  return m;
}

// Mean of per-player totals when they coincide (relative 1e-6), else null.
json CommonTotal(const std::vector<double>& totals) {
  const auto [lo, hi] = std::minmax_element(totals.begin(), totals.end());
  if (*hi - *lo > 1e-6 * std::max(1.0, std::abs(*hi))) return nullptr;
  double sum = 0.0;
  for (double t : totals) sum += t;
  return sum / static_cast<double>(totals.size());
}

// ---------------------------------------------------------------------------
// solve

struct SolveFlags {
  std::string regime = "both";
  std::string method = "auto";
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  int max_iterations = 10000;
};

json EffortsJson(const ConflictNetwork& net, const EffortProfile& profile) {
  json j = json::object();
  for (std::size_t t = 0; t < net.num_battles(); ++t) {
    const Battle& b = net.battle(t);
    json row = json::object();
    for (std::size_t s = 0; s < b.participants.size(); ++s) {
      row[std::to_string(b.participants[s])] = profile.at(t, s);
    }
    j[b.id] = row;
  }
  return j;
}

struct RegimeSummary {
  json report;
  json total;  // scalar or null
  bool converged = true;
  int iterations = 0;
};

RegimeSummary SolveSemiDe(const ConflictNetwork& net,
                          const SemiSymmetricStructure& ss,
                          const BracketingConfig& cfg) {
  const DeResult de = SolveDe(ss, cfg);
  const EffortProfile profile = SizeDeterminedProfile(net, de.EffortBySize());
  json by_size = json::object();
  for (const auto& [k, x] : de.EffortBySize()) by_size[std::to_string(k)] = x;
  RegimeSummary s;
  s.total = de.total;
  s.report = {{"converged", true},
              {"effort_by_size", by_size},
              {"marginal_cost", de.marginal_cost},
              {"payoffs", PayoffsAt(net, profile)},
              {"residuals", de.residuals},
              {"total", de.total},
              {"totals", profile.Totals(net)}};
  return s;
}

RegimeSummary SolveSemiUe(const ConflictNetwork& net,
                          const SemiSymmetricStructure& ss,
                          const BracketingConfig& cfg) {
  const UeResult ue = SolveUe(ss, cfg);
  const EffortProfile profile =
      SizeDeterminedProfile(net, UniformBySize(ss, ue.effort));
  RegimeSummary s;
  s.total = ue.total;
  s.report = {{"converged", true},
              {"effort", ue.effort},
              {"marginal_cost", ue.marginal_cost},
              {"payoffs", PayoffsAt(net, profile)},
              {"residual", ue.residual},
              {"total", ue.total},
              {"totals", profile.Totals(net)}};
  return s;
}

RegimeSummary SolveIterative(const ConflictNetwork& net, bool uniform,
                             const IterationConfig& cfg) {
  const SolveOutcome o =
      uniform ? SolveNashUeIterative(net, cfg) : SolveNashIterative(net, cfg);
  RegimeSummary s;
  s.total = CommonTotal(o.totals);
  s.converged = o.converged;
  s.iterations = o.iterations;
  s.report = {{"converged", o.converged},
              {"damping", o.damping},
              {"degenerate_battles", o.degenerate_battles},
              {"deviation_gain", o.deviation_gain},
              {"efforts", EffortsJson(net, o.profile)},
              {"iterations", o.iterations},
              {"last_change", o.last_change},
              {"payoffs", PayoffsAt(net, o.profile)},
              {"totals", o.totals}};
  return s;
}

int CmdSolve(const CommonFlags& flags, const SolveFlags& sf, std::ostream& out) {
  const ConflictNetwork net = BuildNetwork(
      SourceFrom(flags, flags.f.empty() ? nullptr : &flags.f.front()));
  const SemiSymmetryCheck check = CheckSemiSymmetry(net);

  std::string method = sf.method;
  if (method == "auto") method = check.ok() ? "semisymmetric" : "iterative";
  const SemiSymmetricStructure ss =
      method == "semisymmetric" ? RequireSemiSymmetric(net)
                                : SemiSymmetricStructure{};

  BracketingConfig bracket;
  IterationConfig iter;
  iter.max_iterations = sf.max_iterations;
  if (sf.tol) {
    Require(*sf.tol > 0.0, "--tol must be positive");
    bracket.rel_tol = *sf.tol;
    bracket.abs_tol = std::min(bracket.abs_tol, *sf.tol);
    iter.tolerance = *sf.tol;
  }
  if (sf.seed) iter.initial = InitialProfile::Random(*sf.seed);

  json j = {{"method", method},
            {"network",
             {{"battles", net.num_battles()},
              {"players", net.players()},
              {"semi_symmetric", check.ok()}}},
            {"regime", sf.regime}};
  Table table{{"regime", "method", "X", "converged", "iterations"}, {}};
  bool converged = true;
  auto run = [&](const std::string& name, bool uniform) {
    RegimeSummary s;
    if (method == "semisymmetric") {
      s = uniform ? SolveSemiUe(net, ss, bracket) : SolveSemiDe(net, ss, bracket);
    } else {
      s = SolveIterative(net, uniform, iter);
    }
    converged = converged && s.converged;
    j[name == "de" ? "X_de" : "X_ue"] = s.total;
    j[name] = s.report;
    const std::string x =
        s.total.is_null()
            ? "varies"
            : (flags.format == "md" ? Sig(s.total.get<double>())
                                    : Full(s.total.get<double>()));
    table.rows.push_back({name, method, x, s.converged ? "true" : "false",
                          std::to_string(s.iterations)});
  };
  if (sf.regime != "ue") run("de", false);
  if (sf.regime != "de") run("ue", true);

  Emit(Render(flags.format, j, table), flags.output, out);
  return converged ? kExitOk : kExitNonConvergence;
}

// ---------------------------------------------------------------------------
// compare

json VerdictJson(const CurvatureVerdict& v) {
  return {{"curvature", CurvatureName(v.curvature)},
          {"family", CurvatureName(v.family)},
          {"max_defect", v.max_defect},
          {"min_defect", v.min_defect},
          {"sampled", CurvatureName(v.sampled)},
          {"third_derivative",
           {{"negative", v.third_negative},
            {"positive", v.third_positive},
            {"zero", v.third_zero}}}};
}

// Relation of X_ue to X_de, the way the comparison table reads.
std::string UeRelation(Ordering de_vs_ue) {
  switch (de_vs_ue) {
    case Ordering::kLess:
      return ">";
    case Ordering::kGreater:
      return "<";
    case Ordering::kEqual:
      return "=";
  }
  return "?";
}

int CmdCompare(const CommonFlags& flags, std::optional<double> tol,
               std::ostream& out) {
  BracketingConfig cfg;
  if (tol) {
    Require(*tol > 0.0, "--tol must be positive");
    cfg.rel_tol = *tol;
    cfg.abs_tol = std::min(cfg.abs_tol, *tol);
  }
  std::vector<const std::string*> fs;
  for (const auto& f : flags.f) fs.push_back(&f);
  if (fs.empty()) fs.push_back(nullptr);

  json reports = json::array();
  Table table;
  if (flags.format == "md") {
    table.header = {"f", "h", "X_ue", "", "X_de"};
  } else {
    table.header = {"f",         "h",          "X_ue",       "relation",
                    "X_de",      "payoff_ue",  "payoff_de",  "gap",
                    "consistent", "recommendation"};
  }
  for (const std::string* f : fs) {
    const ConflictNetwork net = BuildNetwork(SourceFrom(flags, f));
    const SemiSymmetricStructure ss = RequireSemiSymmetric(net);
    const ComparisonReport r = CompareRegimes(ss, cfg);
    const std::vector<double> pay_de =
        PayoffsAt(net, SizeDeterminedProfile(net, r.de.EffortBySize()));
    const std::vector<double> pay_ue = PayoffsAt(
        net, SizeDeterminedProfile(net, UniformBySize(ss, r.ue.effort)));
    const std::string name = DescribeProduction(ss);
    const std::string h = CurvatureName(r.curvature);
    json consistent = nullptr;
    if (r.consistent) consistent = *r.consistent;
    reports.push_back(
        {{"X_de", r.x_de},
         {"X_ue", r.x_ue},
         {"consistent", consistent},
         {"curvature", h},
         {"f", name},
         {"gaps", {r.gap}},
         {"ordering", "X_de " + OrderingSymbol(r.ordering) + " X_ue"},
         {"payoffs_de", pay_de},
         {"payoffs_ue", pay_ue},
         {"recommendation", RecommendationName(r.recommendation)},
         {"structure", StructureToJson(ss)},
         {"verdict", r.verdict ? VerdictJson(*r.verdict) : json(nullptr)}});
    if (flags.format == "md") {
      table.rows.push_back(
          {name, h, Sig(r.x_ue), UeRelation(r.ordering), Sig(r.x_de)});
    } else {
      table.rows.push_back(
          {name, h, Full(r.x_ue), UeRelation(r.ordering), Full(r.x_de),
           Full(r.payoff_ue), Full(r.payoff_de), Full(r.gap),
           r.consistent ? (*r.consistent ? "true" : "false") : "",
           RecommendationName(r.recommendation)});
    }
  }
  const json j = reports.size() == 1 ? reports.front() : reports;
  Emit(Render(flags.format, j, table), flags.output, out);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// neutrality

int CmdNeutrality(const CommonFlags& flags, const std::string& grid_text,
                  std::optional<std::uint64_t> seed, std::ostream& out) {
  const ConflictNetwork net = BuildNetwork(
      SourceFrom(flags, flags.f.empty() ? nullptr : &flags.f.front()));
  const SemiSymmetricStructure ss = RequireSemiSymmetric(net);
  const auto grid = ParseGrid(grid_text, ss.classes.size(), seed.value_or(0));
  const NeutralityReport r = NeutralityCheck(ss, grid);
  const RegimePoint& worst = r.points[r.worst_index];

  json j = {{"f", DescribeProduction(ss)},
            {"gaps", r.gaps},
            {"max_gap", r.max_gap},
            {"neutral", r.neutral},
            {"points", r.points.size()},
            {"structure", StructureToJson(ss)},
            {"tolerance", kNeutralityTolerance},
            {"worst",
             {{"X_de", worst.x_de},
              {"X_ue", worst.x_ue},
              {"gap", worst.gap},
              {"index", r.worst_index},
              {"payoff_de", worst.payoff_de},
              {"payoff_ue", worst.payoff_ue},
              {"prizes", r.worst_prizes}}}};

  std::string text;
  if (flags.format == "json") {
    text = j.dump(2) + "\n";
  } else if (flags.format == "csv") {
    Table table;
    table.header = {"index"};
    for (const auto& c : ss.classes) {
      table.header.push_back("v" + std::to_string(c.size));
    }
    for (const char* h : {"X_de", "X_ue", "payoff_de", "payoff_ue", "gap"}) {
      table.header.push_back(h);
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
      std::vector<std::string> row{std::to_string(i)};
      for (double v : grid[i]) row.push_back(Full(v));
      const RegimePoint& p = r.points[i];
      for (double v : {p.x_de, p.x_ue, p.payoff_de, p.payoff_ue, p.gap}) {
        row.push_back(Full(v));
      }
      table.rows.push_back(row);
    }
    text = table.Csv();
  } else {
    Table table{{"f", "points", "max gap", "neutral"},
                {{DescribeProduction(ss), std::to_string(r.points.size()),
                  Sig(r.max_gap), r.neutral ? "true" : "false"}}};
    text = table.Markdown();
    if (!r.neutral) {
      std::string prizes;
      for (double v : r.worst_prizes) {
        prizes += (prizes.empty() ? "" : ", ") + Sig(v);
      }
      text += "\nworst instance: v = (" + prizes + "), X_de = " +
              Sig(worst.x_de) + ", X_ue = " + Sig(worst.x_ue) +
              ", gap = " + Sig(worst.gap) + "\n";
    }
  }
  Emit(text, flags.output, out);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// validate

json ValidityJson(const ProductionFunction& pf, bool& ok) {
  const ValidityReport report = ValidateProduction(pf, DefaultGridFor(pf));
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back(
        {{"detail", c.detail}, {"name", c.name}, {"passed", c.passed}});
  }
  ok = ok && report.ok();
  return {{"checks", checks},
          {"curvature", CurvatureName(ClassifyH(pf).curvature)},
          {"f", pf.Describe()},
          {"ok", report.ok()}};
}

int CmdValidate(const CommonFlags& flags, std::ostream& out) {
  json j = json::object();
  bool ok = true;
  std::vector<ProductionFunction> productions;
  if (!flags.example.empty() || !flags.input.empty()) {
    const ConflictNetwork net = BuildNetwork(
        SourceFrom(flags, flags.f.empty() ? nullptr : &flags.f.front()));
    const SemiSymmetryCheck check = CheckSemiSymmetry(net);
    json violations = json::array();
    for (const auto& v : check.violations) violations.push_back(v.message);
    j["network"] = {
        {"battles", net.num_battles()},
        {"players", net.players()},
        {"semi_symmetric", check.ok()},
        {"structure",
         check.ok() ? StructureToJson(*check.structure) : json(nullptr)},
        {"violations", violations}};
    for (const auto& b : net.battles()) {
      if (std::find(productions.begin(), productions.end(), b.production) ==
          productions.end()) {
        productions.push_back(b.production);
      }
    }
  } else {
    Require(!flags.f.empty(), "validate needs --input, --example or --f");
    for (const auto& f : flags.f) productions.push_back(ParseProduction(f));
  }
  json list = json::array();
  Table table{{"f", "check", "passed", "detail"}, {}};
  for (const auto& pf : productions) {
    json pj = ValidityJson(pf, ok);
    for (const auto& c : pj["checks"]) {
      table.rows.push_back({pf.Describe(), c["name"].get<std::string>(),
                            c["passed"].get<bool>() ? "true" : "false",
                            c["detail"].get<std::string>()});
    }
    list.push_back(std::move(pj));
  }
  j["productions"] = list;
  j["valid"] = ok;
  Emit(Render(flags.format, j, table), flags.output, out);
  return ok ? kExitOk : kExitInputError;
}

// ---------------------------------------------------------------------------
// examples

int CmdExamples(const CommonFlags& flags, const std::string& name,
                std::ostream& out) {
  if (name.empty()) {
    std::string text;
    for (const auto& n : ExampleNames()) text += n + "\n";
    Emit(text, flags.output, out);
    return kExitOk;
  }
  CommonFlags f = flags;
  f.example = name;
  const ConflictNetwork net =
      BuildNetwork(SourceFrom(f, f.f.empty() ? nullptr : &f.f.front()));
  Emit(DumpNetwork(net), flags.output, out);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

int CmdSweep(const std::string& spec_path, const std::string& output,
             int threads, std::ostream& out, std::ostream& err) {
  SweepSpec spec = ReadSweepSpec(spec_path);
  if (!output.empty()) spec.output = output;
  if (threads > 0) spec.threads = threads;
  const SweepSummary s = RunSweep(spec, out);
  if (spec.output) {
    err << "sweep: " << s.rows << " rows, " << s.skipped
        << " already present, " << s.written << " written to " << *spec.output
        << "\n";
  }
  return kExitOk;
}

// Rebuilds the network with every battle passed through `edit`.
template <typename F>
ConflictNetwork EditBattles(const ConflictNetwork& net, F&& edit,
                            std::optional<CostFunction> cost = std::nullopt) {
  std::vector<Battle> battles = net.battles();
  for (auto& b : battles) edit(b);
  return ConflictNetwork::Create(net.players(), std::move(battles),
                                 cost.value_or(net.cost()));
}

}  // namespace

std::map<int, double> ParseTullock(const std::string& text) {
  std::map<int, double> out;
  for (const auto& item : SplitString(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq < 2 || item[0] != 'r') {
      Fail(ErrorCode::kSchemaError, "bad --tullock entry '" + item +
                                        "' (expected r<size>=<exponent>)");
    }
    const double size = ParseNumber(item.substr(1, eq - 1));
    if (size != std::floor(size) || size < 2) {
      Fail(ErrorCode::kSchemaError, "bad battle size in '" + item + "'");
    }
    out[static_cast<int>(size)] = ParseNumber(item.substr(eq + 1));
  }
  return out;
}

CostFunction ParseCost(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || text.substr(0, colon) != "power") {
    Fail(ErrorCode::kSchemaError,
         "bad cost '" + text + "' (expected power:kappa,p)");
  }
  const auto params = ParseNumberList(text.substr(colon + 1));
  if (params.size() != 2) {
    Fail(ErrorCode::kSchemaError, "cost power takes two parameters");
  }
  return CostFunction::Power(params[0], params[1]);
}

std::vector<double> ParseNumberList(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : SplitString(text, ',')) out.push_back(ParseNumber(item));
  return out;
}

std::vector<std::vector<double>> ParseGrid(const std::string& text,
                                           std::size_t classes,
                                           std::uint64_t default_seed) {
  const auto parts = SplitString(text, ':');
  std::vector<std::vector<double>> grid;
  if (parts.size() >= 2 && parts[0] == "explicit") {
    const std::string body = text.substr(text.find(':') + 1);
    if (!body.empty()) {
      for (const auto& row : SplitString(body, ';')) {
        grid.push_back(ParseNumberList(row));
      }
    }
  } else if (parts.size() >= 2 && parts[0] == "random") {
    const double count = ParseNumber(parts[1]);
    if (count != std::floor(count) || count < 0) {
      Fail(ErrorCode::kSchemaError, "bad grid size '" + parts[1] + "'");
    }
    std::uint64_t seed = default_seed;
    double lo = 0.1;
    double hi = 100.0;
    for (std::size_t i = 2; i < parts.size(); ++i) {
      const auto eq = parts[i].find('=');
      const std::string key = parts[i].substr(0, eq);
      if (eq == std::string::npos) {
        Fail(ErrorCode::kSchemaError, "bad grid option '" + parts[i] + "'");
      }
      const double value = ParseNumber(parts[i].substr(eq + 1));
      if (key == "seed") {
        seed = static_cast<std::uint64_t>(value);
      } else if (key == "lo") {
        lo = value;
      } else if (key == "hi") {
        hi = value;
      } else {
        Fail(ErrorCode::kSchemaError, "unknown grid option '" + key + "'");
      }
    }
    grid = RandomValuationGrid(classes, static_cast<std::size_t>(count), seed,
                               lo, hi);
  } else {
    Fail(ErrorCode::kSchemaError,
         "bad --grid '" + text +
             "' (expected random:N[:seed=S] or explicit:v2,v3[;...])");
  }
  if (grid.empty()) Fail(ErrorCode::kPreconditionViolation, "valuation grid is empty");
  for (const auto& row : grid) {
    if (row.size() != classes) {
      Fail(ErrorCode::kPreconditionViolation,
           "grid rows need " + std::to_string(classes) + " prizes");
    }
  }
  return grid;
}

ConflictNetwork BuildNetwork(const NetworkSource& source) {
  if (source.example.has_value() == source.input.has_value()) {
    Fail(ErrorCode::kPreconditionViolation,
         "give exactly one of --example or --input");
  }
  ConflictNetwork net = source.example ? GenerateExample(*source.example)
                                       : ReadNetworkFile(*source.input);
  if (source.production || source.cost) {
    net = EditBattles(
        net,
        [&](Battle& b) {
          if (source.production) b.production = *source.production;
        },
        source.cost);
  }
  std::set<int> sizes;
  for (const auto& b : net.battles()) sizes.insert(b.size());
  if (!source.prizes.empty()) {
    if (source.prizes.size() != sizes.size()) {
      Fail(ErrorCode::kPreconditionViolation,
           "--v needs " + std::to_string(sizes.size()) +
               " prizes, one per battle size");
    }
    std::map<int, double> prize;
    std::size_t i = 0;
    for (int k : sizes) prize[k] = source.prizes[i++];
    net = EditBattles(net, [&](Battle& b) { b.prize = prize.at(b.size()); });
  }
  if (!source.tullock.empty()) {
    for (const auto& [k, r] : source.tullock) {
      if (!sizes.count(k)) {
        Fail(ErrorCode::kPreconditionViolation,
             "network has no battles of size " + std::to_string(k));
      }
    }
    net = EditBattles(net, [&](Battle& b) {
      auto it = source.tullock.find(b.size());
      if (it != source.tullock.end()) {
        b.production = ProductionFunction::Power(1.0, it->second);
      }
    });
  }
  return net;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBracketFailure:
    case ErrorCode::kNonFiniteEvaluation:
    case ErrorCode::kDegenerateBattle:
      return kExitNonConvergence;
    default:
      return kExitInputError;
  }
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Equilibria of conflict networks under discriminatory and "
               "uniform effort",
               "conflictnet"};
  app.require_subcommand(1);

  CommonFlags solve_flags;
  SolveFlags solve_opts;
  auto* solve = app.add_subcommand("solve", "Solve for equilibrium efforts");
  AddSourceFlags(solve, solve_flags, false);
  AddOutputFlags(solve, solve_flags);
  solve->add_option("--regime", solve_opts.regime, "de, ue or both")
      ->check(CLI::IsMember({"de", "ue", "both"}));
  solve->add_option("--method", solve_opts.method,
                    "semisymmetric, iterative or auto")
      ->check(CLI::IsMember({"semisymmetric", "iterative", "auto"}));
  solve->add_option("--tol", solve_opts.tol, "Solver tolerance");
  solve->add_option("--seed", solve_opts.seed,
                    "Random starting profile for the iterative solver");
  solve->add_option("--max-iterations", solve_opts.max_iterations,
                    "Iteration cap for the iterative solver")
      ->check(CLI::PositiveNumber);

  CommonFlags compare_flags;
  std::optional<double> compare_tol;
  auto* compare =
      app.add_subcommand("compare", "Compare total effort under DE and UE");
  AddSourceFlags(compare, compare_flags, true);
  AddOutputFlags(compare, compare_flags);
  compare->add_option("--tol", compare_tol, "Solver tolerance");

  CommonFlags neutral_flags;
  std::string grid;
  std::optional<std::uint64_t> neutral_seed;
  auto* neutrality = app.add_subcommand(
      "neutrality", "Check DE/UE neutrality over a valuation grid");
  AddSourceFlags(neutrality, neutral_flags, false);
  AddOutputFlags(neutrality, neutral_flags);
  neutrality
      ->add_option("--grid", grid,
                   "random:N[:seed=S][:lo=L][:hi=H] or explicit:v2,v3[;...]")
      ->required();
  neutrality->add_option("--seed", neutral_seed, "Default seed for random grids");

  std::string spec_path;
  std::string sweep_output;
  int sweep_threads = 0;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep to CSV");
  sweep->add_option("spec", spec_path, "Sweep spec JSON")->required();
  sweep->add_option("--output", sweep_output, "CSV path (overrides the spec)");
  sweep->add_option("--threads", sweep_threads, "Worker threads")
      ->check(CLI::NonNegativeNumber);

  CommonFlags validate_flags;
  auto* validate = app.add_subcommand(
      "validate", "Validate a network file or production functions");
  AddSourceFlags(validate, validate_flags, true);
  AddOutputFlags(validate, validate_flags);

  CommonFlags example_flags;
  std::string example_name;
  auto* examples = app.add_subcommand(
      "examples", "List built-in networks or print one as JSON");
  examples->add_option("name", example_name, "Example to print");
  examples->add_option("--f", example_flags.f, "Production for every battle")
      ->expected(1);
  examples->add_option("--v", example_flags.v, "Prizes per size, ascending");
  examples->add_option("--tullock", example_flags.tullock,
                       "Per-size power exponents");
  examples->add_option("--cost", example_flags.cost, "power:kappa,p");
  examples->add_option("--output", example_flags.output, "Write to this file");

  std::vector<std::string> argv_storage{"conflictnet"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (solve->parsed()) {
      SetThreads(solve_flags.threads);
      return CmdSolve(solve_flags, solve_opts, out);
    }
    if (compare->parsed()) {
      SetThreads(compare_flags.threads);
      return CmdCompare(compare_flags, compare_tol, out);
    }
    if (neutrality->parsed()) {
      SetThreads(neutral_flags.threads);
      return CmdNeutrality(neutral_flags, grid, neutral_seed, out);
    }
    if (sweep->parsed()) {
      return CmdSweep(spec_path, sweep_output, sweep_threads, out, err);
    }
    if (validate->parsed()) return CmdValidate(validate_flags, out);
    if (examples->parsed()) return CmdExamples(example_flags, example_name, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace conflictnet::cli
