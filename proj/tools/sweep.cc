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


#include "sweep.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "conflictnet/analysis.h"
#include "conflictnet/error.h"
#include "conflictnet/format.h"
#include "conflictnet/parallel.h"

namespace conflictnet::cli {
namespace {

using nlohmann::json;

// Rows solved and written per flush.
constexpr std::size_t kChunkRows = 256;

[[noreturn]] void SpecFail(const std::string& path, const std::string& msg) {
  Fail(ErrorCode::kSchemaError, (path.empty() ? "/" : path) + ": " + msg);
}

double SpecNumber(const json& j, const std::string& path) {
  if (!j.is_number()) SpecFail(path, "expected a number");
  return j.get<double>();
}

std::string SpecString(const json& j, const std::string& path) {
  if (!j.is_string()) SpecFail(path, "expected a string");
  return j.get<std::string>();
}

// Size suffix of "v3" / "r3"; 0 for a bare name.
int AxisSize(const std::string& name) {
  if (name.size() < 2) return 0;
  int k = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return -1;
    k = k * 10 + (name[i] - '0');
  }
  return k;
}

bool KnownAxis(const std::string& name) {
  if (name == "r" || name == "cost_p" || name == "cost_kappa") return true;
  return (name[0] == 'v' || name[0] == 'r') && AxisSize(name) >= 2;
}

SizeClass& ClassFor(SemiSymmetricStructure& ss, int size,
                    const std::string& axis) {
  for (auto& c : ss.classes) {
    if (c.size == size) return c;
  }
  Fail(ErrorCode::kPreconditionViolation,
       "axis " + axis + ": network has no battles of size " +
           std::to_string(size));
}

void SetExponent(SizeClass& c, double r) {
  const auto* p = std::get_if<PowerFamily>(&c.production.family());
  c.production = ProductionFunction::Power(p ? p->scale : 1.0, r);
}

std::string Header(const SweepSpec& spec) {
  std::string s;
  for (const auto& a : spec.axes) s += a.name + ",";
  return s + "X_de,X_ue,payoff_de,payoff_ue,gap";
}

std::vector<std::size_t> Digits(const SweepSpec& spec, std::size_t row) {
  std::vector<std::size_t> idx(spec.axes.size());
  for (std::size_t a = spec.axes.size(); a-- > 0;) {
    const std::size_t n = spec.axes[a].values.size();
    idx[a] = row % n;
    row /= n;
  }
  return idx;
}

std::string ParamsPrefix(const SweepSpec& spec, std::size_t row) {
  const auto idx = Digits(spec, row);
  std::string s;
  for (std::size_t a = 0; a < spec.axes.size(); ++a) {
    s += FormatShortest(spec.axes[a].values[idx[a]]) + ",";
  }
  return s;
}

std::string Row(const SweepSpec& spec, std::size_t row, const RegimePoint& p) {
  std::string s = ParamsPrefix(spec, row);
  s += FormatShortest(p.x_de) + "," + FormatShortest(p.x_ue) + "," +
       FormatShortest(p.payoff_de) + "," + FormatShortest(p.payoff_ue) + "," +
       FormatShortest(p.gap);
  return s + "\n";
}

// Complete rows already in `path` after dropping any partial trailing line.
// Throws when the existing content does not belong to this sweep.
std::size_t PrepareResume(const SweepSpec& spec, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return 0;
  std::stringstream buffer;
  buffer << in.rdbuf();
  in.close();
  std::string text = buffer.str();
  const std::size_t keep = text.rfind('\n');
  const std::size_t complete = keep == std::string::npos ? 0 : keep + 1;
  if (complete != text.size()) {
    std::filesystem::resize_file(path, complete);
    text.resize(complete);
  }
  if (text.empty()) return 0;

  std::vector<std::string> lines = SplitString(text.substr(0, text.size() - 1), '\n');
  if (lines.front() != Header(spec)) {
    Fail(ErrorCode::kPreconditionViolation,
         "'" + path + "' holds a different sweep (header mismatch)");
  }
  const std::size_t rows = lines.size() - 1;
  if (rows > GridSize(spec)) {
    Fail(ErrorCode::kPreconditionViolation,
         "'" + path + "' has more rows than the sweep grid");
  }
  for (std::size_t r = 0; r < rows; ++r) {
    if (lines[r + 1].rfind(ParamsPrefix(spec, r), 0) != 0) {
      Fail(ErrorCode::kPreconditionViolation,
           "'" + path + "' row " + std::to_string(r + 1) +
               " does not match the sweep grid");
    }
  }
  return rows;
}

}  // namespace

SweepSpec ParseSweepSpec(const json& j) {
  if (!j.is_object()) SpecFail("", "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "base" && key != "axes" && key != "output" && key != "threads") {
      SpecFail("/" + key, "unknown key");
    }
  }
  if (!j.contains("base")) SpecFail("", "missing key 'base'");
  if (!j.contains("axes")) SpecFail("", "missing key 'axes'");

  SweepSpec spec;
  const json& base = j["base"];
  if (!base.is_object()) SpecFail("/base", "expected an object");
  for (const auto& [key, value] : base.items()) {
    const std::string path = "/base/" + key;
    if (key == "example") {
      spec.base.example = SpecString(value, path);
    } else if (key == "input") {
      spec.base.input = SpecString(value, path);
    } else if (key == "f") {
      spec.base.production = ParseProduction(SpecString(value, path));
    } else if (key == "cost") {
      spec.base.cost = ParseCost(SpecString(value, path));
    } else if (key == "v") {
      if (!value.is_array()) SpecFail(path, "expected an array");
      for (std::size_t i = 0; i < value.size(); ++i) {
        spec.base.prizes.push_back(
            SpecNumber(value[i], path + "/" + std::to_string(i)));
      }
    } else if (key == "tullock") {
      if (!value.is_object()) SpecFail(path, "expected an object");
      std::string text;
      for (const auto& [rk, r] : value.items()) {
        text += (text.empty() ? "" : ",") + rk + "=" +
                FormatShortest(SpecNumber(r, path + "/" + rk));
      }
      spec.base.tullock = ParseTullock(text);
    } else {
      SpecFail(path, "unknown key");
    }
  }
  if (spec.base.example.has_value() == spec.base.input.has_value()) {
    SpecFail("/base", "give exactly one of 'example' or 'input'");
  }

  const json& axes = j["axes"];
  if (!axes.is_array()) SpecFail("/axes", "expected an array");
  if (axes.empty()) SpecFail("/axes", "a sweep needs at least one axis");
  std::set<std::string> names;
  for (std::size_t a = 0; a < axes.size(); ++a) {
    const std::string path = "/axes/" + std::to_string(a);
    const json& ax = axes[a];
    if (!ax.is_object() || !ax.contains("name")) {
      SpecFail(path, "expected an object with a 'name'");
    }
    SweepAxis axis;
    axis.name = SpecString(ax["name"], path + "/name");
    if (!KnownAxis(axis.name)) {
      SpecFail(path + "/name", "unknown axis '" + axis.name + "'");
    }
    if (!names.insert(axis.name).second) {
      SpecFail(path + "/name", "duplicate axis '" + axis.name + "'");
    }
    if (ax.contains("values")) {
      for (const auto& [key, v] : ax.items()) {
        if (key != "name" && key != "values") SpecFail(path + "/" + key, "unknown key");
      }
      const json& values = ax["values"];
      if (!values.is_array() || values.empty()) {
        SpecFail(path + "/values", "expected a nonempty array");
      }
      for (std::size_t i = 0; i < values.size(); ++i) {
        axis.values.push_back(
            SpecNumber(values[i], path + "/values/" + std::to_string(i)));
      }
    } else {
      for (const auto& [key, v] : ax.items()) {
        if (key != "name" && key != "from" && key != "to" && key != "steps") {
          SpecFail(path + "/" + key, "unknown key");
        }
      }
      for (const char* key : {"from", "to", "steps"}) {
        if (!ax.contains(key)) {
          SpecFail(path, std::string("missing key '") + key + "'");
        }
      }
      const double from = SpecNumber(ax["from"], path + "/from");
      const double to = SpecNumber(ax["to"], path + "/to");
      if (!ax["steps"].is_number_integer() || ax["steps"].get<long long>() < 1) {
        SpecFail(path + "/steps", "expected a positive integer");
      }
      const long long steps = ax["steps"].get<long long>();
      if (steps == 1 && from != to) {
        SpecFail(path + "/steps", "one step needs from == to");
      }
      if (static_cast<double>(steps) > static_cast<double>(MaxGridPoints())) {
        SpecFail(path + "/steps", "axis exceeds the grid cap");
      }
      for (long long i = 0; i < steps; ++i) {
        axis.values.push_back(
            i + 1 == steps ? to
                           : from + (to - from) * static_cast<double>(i) /
                                        static_cast<double>(steps - 1));
      }
    }
    spec.axes.push_back(std::move(axis));
  }

  if (j.contains("output")) spec.output = SpecString(j["output"], "/output");
  if (j.contains("threads")) {
    if (!j["threads"].is_number_integer() || j["threads"].get<int>() < 0) {
      SpecFail("/threads", "expected a nonnegative integer");
    }
    spec.threads = j["threads"].get<int>();
  }

  double points = 1.0;
  for (const auto& a : spec.axes) points *= static_cast<double>(a.values.size());
  if (points > static_cast<double>(MaxGridPoints())) {
    SpecFail("/axes", "grid has " + FormatShortest(points) +
                          " points, over the cap of " +
                          std::to_string(MaxGridPoints()) +
                          " (CONFLICTNET_MAX_GRID)");
  }
  return spec;
}

SweepSpec ReadSweepSpec(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kSchemaError, "cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    Fail(ErrorCode::kSchemaError, std::string("/: invalid JSON: ") + e.what());
  }
  return ParseSweepSpec(j);
}

std::size_t MaxGridPoints() {
  const char* env = std::getenv("CONFLICTNET_MAX_GRID");
  if (env == nullptr || *env == '\0') return kDefaultMaxGrid;
  const double cap = ParseNumber(env);
  if (!(cap >= 1.0) || cap != std::floor(cap)) {
    Fail(ErrorCode::kPreconditionViolation,
         "CONFLICTNET_MAX_GRID must be a positive integer");
  }
  return static_cast<std::size_t>(cap);
}

std::size_t GridSize(const SweepSpec& spec) {
  std::size_t n = 1;
  for (const auto& a : spec.axes) n *= a.values.size();
  return n;
}

SemiSymmetricStructure SweepPoint(const SemiSymmetricStructure& base,
                                  const SweepSpec& spec, std::size_t row) {
  SemiSymmetricStructure ss = base;
  const auto idx = Digits(spec, row);
  for (std::size_t a = 0; a < spec.axes.size(); ++a) {
    const std::string& name = spec.axes[a].name;
    const double value = spec.axes[a].values[idx[a]];
    if (name == "r") {
      for (auto& c : ss.classes) SetExponent(c, value);
    } else if (name == "cost_p") {
      ss.cost = CostFunction::Power(ss.cost.scale(), value);
    } else if (name == "cost_kappa") {
      ss.cost = CostFunction::Power(value, ss.cost.exponent());
    } else if (name[0] == 'v') {
      Require(value > 0.0, "axis " + name + ": prizes must be positive");
      ClassFor(ss, AxisSize(name), name).prize = value;
    } else {
      SetExponent(ClassFor(ss, AxisSize(name), name), value);
    }
  }
  return ss;
}

SweepSummary RunSweep(const SweepSpec& spec, std::ostream& out) {
  const ConflictNetwork net = BuildNetwork(spec.base);
  const SemiSymmetryCheck check = CheckSemiSymmetry(net);
  if (!check.ok()) {
    Fail(ErrorCode::kPreconditionViolation,
         "sweep base network is not semi-symmetric");
  }
  const SemiSymmetricStructure& base = *check.structure;
  SweepSummary summary;
  summary.rows = GridSize(spec);
  // Surface bad axes before touching any file.
  SweepPoint(base, spec, 0);
  if (spec.threads > 0) SetThreads(spec.threads);

  std::ofstream file;
  std::ostream* sink = &out;
  if (spec.output) {
    summary.skipped = PrepareResume(spec, *spec.output);
    file.open(*spec.output, std::ios::binary | std::ios::app);
    if (!file) {
      Fail(ErrorCode::kPreconditionViolation,
           "cannot write '" + *spec.output + "'");
    }
    sink = &file;
  }
  if (summary.skipped == 0) *sink << Header(spec) << "\n" << std::flush;

  for (std::size_t start = summary.skipped; start < summary.rows;
       start += kChunkRows) {
    const std::size_t end = std::min(summary.rows, start + kChunkRows);
    std::vector<SemiSymmetricStructure> batch;
    batch.reserve(end - start);
    for (std::size_t r = start; r < end; ++r) {
      batch.push_back(SweepPoint(base, spec, r));
    }
    const std::vector<RegimePoint> points = EvaluateRegimes(batch);
    std::string text;
    for (std::size_t r = start; r < end; ++r) {
      text += Row(spec, r, points[r - start]);
    }
    *sink << text << std::flush;
    summary.written += end - start;
  }
  return summary;
}

}  // namespace conflictnet::cli
