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


#include "conflictnet/serialization.h"

#include <fstream>
#include <set>
#include <sstream>

#include "conflictnet/error.h"

namespace conflictnet {
namespace {

using nlohmann::json;

[[noreturn]] void SchemaFail(const std::string& path, const std::string& msg) {
  Fail(ErrorCode::kSchemaError, (path.empty() ? "/" : path) + ": " + msg);
}

void RequireKeys(const json& j, const std::string& path,
                 const std::set<std::string>& required,
                 const std::set<std::string>& optional = {}) {
  if (!j.is_object()) SchemaFail(path, "expected an object");
  for (const auto& key : required) {
    if (!j.contains(key)) SchemaFail(path, "missing key '" + key + "'");
  }
  for (const auto& [key, value] : j.items()) {
    if (!required.count(key) && !optional.count(key)) {
      SchemaFail(path + "/" + key, "unknown key");
    }
  }
}

double Number(const json& j, const std::string& path) {
  if (!j.is_number()) SchemaFail(path, "expected a number");
  return j.get<double>();
}

PlayerId PlayerIdAt(const json& j, const std::string& path) {
  if (!j.is_number_integer()) SchemaFail(path, "expected an integer player id");
  return j.get<PlayerId>();
}

// Factory preconditions become schema errors located at `path`.
template <typename F>
auto Located(const std::string& path, F&& make) {
  try {
    return make();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kPreconditionViolation) throw;
    SchemaFail(path, e.what());
  }
}

}  // namespace

json ProductionToJson(const ProductionFunction& pf) {
  json j;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PowerFamily>) {
          j["family"] = "power";
          j["params"] = {{"A", p.scale}, {"r", p.exponent}};
        } else if constexpr (std::is_same_v<T, RatioFamily>) {
          j["family"] = "ratio";
          j["params"] = {{"c", p.shift}};
        } else if constexpr (std::is_same_v<T, CaraFamily>) {
          j["family"] = "cara";
          j["params"] = {{"alpha", p.rate}};
        } else {
          j["family"] = "piecewise";
          j["params"] = {{"s", p.breakpoint}, {"A", p.scale},
                         {"r", p.exponent},   {"a", p.slope},
                         {"b", p.intercept}};
        }
      },
      pf.family());
  return j;
}

ProductionFunction ProductionFromJson(const json& j, const std::string& path) {
  RequireKeys(j, path, {"family", "params"});
  if (!j["family"].is_string()) SchemaFail(path + "/family", "expected a string");
  const std::string family = j["family"].get<std::string>();
  const json& params = j["params"];
  const std::string pp = path + "/params";
  auto num = [&](const char* key) { return Number(params[key], pp + "/" + key); };
  if (family == "power") {
    RequireKeys(params, pp, {"A", "r"});
    return Located(pp, [&] { return ProductionFunction::Power(num("A"), num("r")); });
  }
  if (family == "ratio") {
    RequireKeys(params, pp, {"c"});
    return Located(pp, [&] { return ProductionFunction::Ratio(num("c")); });
  }
  if (family == "cara") {
    RequireKeys(params, pp, {"alpha"});
    return Located(pp, [&] { return ProductionFunction::Cara(num("alpha")); });
  }
  if (family == "piecewise") {
    RequireKeys(params, pp, {"s", "A", "r"}, {"a", "b"});
    if (params.contains("a") != params.contains("b")) {
      SchemaFail(pp, "'a' and 'b' must be given together");
    }
    return Located(pp, [&] {
      if (params.contains("a")) {
        return ProductionFunction::PiecewisePowerAffine(
            num("s"), num("A"), num("r"), num("a"), num("b"));
      }
      return ProductionFunction::PiecewisePowerAffine(num("s"), num("A"),
                                                      num("r"));
    });
  }
  SchemaFail(path + "/family", "unknown production family '" + family + "'");
}

json CostToJson(const CostFunction& cost) {
  return {{"family", "power"},
          {"params", {{"kappa", cost.scale()}, {"p", cost.exponent()}}}};
}

CostFunction CostFromJson(const json& j, const std::string& path) {
  RequireKeys(j, path, {"family", "params"});
  if (j["family"] != "power") {
    SchemaFail(path + "/family", "only the 'power' cost family is supported");
  }
  const std::string pp = path + "/params";
  RequireKeys(j["params"], pp, {"kappa", "p"});
  const double kappa = Number(j["params"]["kappa"], pp + "/kappa");
  const double p = Number(j["params"]["p"], pp + "/p");
  return Located(pp, [&] { return CostFunction::Power(kappa, p); });
}

json NetworkToJson(const ConflictNetwork& net) {
  json battles = json::array();
  for (const auto& b : net.battles()) {
    battles.push_back({{"id", b.id},
                       {"participants", b.participants},
                       {"prize", b.prize},
                       {"production", ProductionToJson(b.production)}});
  }
  return {{"players", net.players()},
          {"cost", CostToJson(net.cost())},
          {"battles", battles}};
}

ConflictNetwork NetworkFromJson(const json& j) {
  RequireKeys(j, "", {"players", "cost", "battles"});
  if (!j["players"].is_array()) SchemaFail("/players", "expected an array");
  std::vector<PlayerId> players;
  std::set<PlayerId> known;
  for (std::size_t i = 0; i < j["players"].size(); ++i) {
    const std::string path = "/players/" + std::to_string(i);
    const PlayerId id = PlayerIdAt(j["players"][i], path);
    if (!known.insert(id).second) SchemaFail(path, "duplicate player id");
    players.push_back(id);
  }
  if (players.size() < 2) SchemaFail("/players", "need at least two players");

  const CostFunction cost = CostFromJson(j["cost"], "/cost");

  const json& jb = j["battles"];
  if (!jb.is_array()) SchemaFail("/battles", "expected an array");
  if (jb.empty()) SchemaFail("/battles", "battle list is empty");
  std::vector<Battle> battles;
  std::set<std::string> ids;
  std::set<PlayerId> seen;
  for (std::size_t t = 0; t < jb.size(); ++t) {
    const std::string path = "/battles/" + std::to_string(t);
    const json& b = jb[t];
    RequireKeys(b, path, {"id", "participants", "prize", "production"});
    if (!b["id"].is_string()) SchemaFail(path + "/id", "expected a string");
    Battle battle;
    battle.id = b["id"].get<std::string>();
    if (!ids.insert(battle.id).second) {
      SchemaFail(path + "/id", "duplicate battle id '" + battle.id + "'");
    }
    if (!b["participants"].is_array()) {
      SchemaFail(path + "/participants", "expected an array");
    }
    std::set<PlayerId> members;
    for (std::size_t s = 0; s < b["participants"].size(); ++s) {
      const std::string pp = path + "/participants/" + std::to_string(s);
      const PlayerId id = PlayerIdAt(b["participants"][s], pp);
      if (!known.count(id)) SchemaFail(pp, "unknown player " + std::to_string(id));
      if (!members.insert(id).second) SchemaFail(pp, "repeated participant");
      battle.participants.push_back(id);
      seen.insert(id);
    }
    if (battle.participants.size() < 2) {
      SchemaFail(path + "/participants", "need at least two participants");
    }
    battle.prize = Number(b["prize"], path + "/prize");
    if (!(battle.prize > 0.0) || !std::isfinite(battle.prize)) {
      SchemaFail(path + "/prize", "prize must be positive");
    }
    battle.production = ProductionFromJson(b["production"], path + "/production");
    battles.push_back(std::move(battle));
  }
  for (std::size_t i = 0; i < players.size(); ++i) {
    if (!seen.count(players[i])) {
      SchemaFail("/players/" + std::to_string(i), "player is in no battle");
    }
  }
  return ConflictNetwork::Create(std::move(players), std::move(battles), cost);
}

std::string DumpNetwork(const ConflictNetwork& net) {
  return NetworkToJson(net).dump(2) + "\n";
}

ConflictNetwork ParseNetwork(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    Fail(ErrorCode::kSchemaError, std::string("/: invalid JSON: ") + e.what());
  }
  return NetworkFromJson(j);
}

ConflictNetwork ReadNetworkFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorCode::kSchemaError, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseNetwork(buffer.str());
}

json StructureToJson(const SemiSymmetricStructure& ss) {
  json classes = json::array();
  for (const auto& c : ss.classes) {
    classes.push_back({{"size", c.size},
                       {"degree", c.degree},
                       {"prize", c.prize},
                       {"production", c.production.Describe()}});
  }
  return {{"classes", classes}, {"cost", ss.cost.Describe()}};
}

}  // namespace conflictnet
