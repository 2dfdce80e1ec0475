#include "coopet/game_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace coopet {

namespace {

using nlohmann::json;

int to_int(const json& value, const std::string& field) {
  if (!value.is_number_integer())
    throw GameParseError("field '" + field + "' must be an integer");
  return value.get<int>();
}

long long to_int64(const json& value, const std::string& field) {
  if (!value.is_number_integer())
    throw GameParseError("field '" + field + "' must be an integer");
  return value.get<long long>();
}

std::vector<std::vector<int>> to_coalition_list(const json& value, const std::string& field,
                                                int n) {
  if (!value.is_array())
    throw GameParseError("field '" + field + "' must be an array of coalitions");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const json& coalition = value[i];
    std::string where = field + "[" + std::to_string(i) + "]";
    if (!coalition.is_array())
      throw GameParseError("field '" + where + "' must be an array of player ids");
    std::vector<int> ids;
    std::set<int> seen;
    for (const json& id_value : coalition) {
      int id = to_int(id_value, where);
      if (id < 1 || id > n)
        throw GameParseError("field '" + where + "': player id " + std::to_string(id) +
                             " out of range 1.." + std::to_string(n));
      if (!seen.insert(id).second)
        throw GameParseError("field '" + where + "': duplicate player id " +
                             std::to_string(id));
      ids.push_back(id);
    }
    out.push_back(std::move(ids));
  }
  return out;
}

void reject_unknown_fields(const json& object, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : object.items())
    if (!allowed.count(key)) throw GameParseError("unknown field '" + key + "'");
}

}  // namespace

GameDefinition parse_game_text(const std::string& text) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GameParseError(std::string("not valid JSON: ") + e.what());
  }
  if (!parsed.is_object()) throw GameParseError("game file must hold a single object");
  if (!parsed.contains("n")) throw GameParseError("missing field 'n'");
  if (!parsed.contains("kind")) throw GameParseError("missing field 'kind'");
  if (!parsed["kind"].is_string()) throw GameParseError("field 'kind' must be a string");

  GameDefinition def;
  def.n = to_int(parsed["n"], "n");
  if (def.n < 1 || def.n > kMaxPlayers)
    throw GameParseError("field 'n': player count " + std::to_string(def.n) +
                         " outside 1.." + std::to_string(kMaxPlayers));
  const std::string kind = parsed["kind"].get<std::string>();

  if (kind == "mwc" || kind == "winning") {
    def.kind = kind == "mwc" ? GameKind::MinimalWinning : GameKind::ExplicitWinning;
    reject_unknown_fields(parsed, {"n", "kind", kind});
    if (!parsed.contains(kind)) throw GameParseError("missing field '" + kind + "'");
    def.coalitions = to_coalition_list(parsed[kind], kind, def.n);
  } else if (kind == "weighted") {
    def.kind = GameKind::Weighted;
    reject_unknown_fields(parsed, {"n", "kind", "weights", "quota"});
    if (!parsed.contains("weights")) throw GameParseError("missing field 'weights'");
    if (!parsed.contains("quota")) throw GameParseError("missing field 'quota'");
    if (!parsed["weights"].is_array())
      throw GameParseError("field 'weights' must be an array");
    for (const json& w : parsed["weights"]) {
      long long weight = to_int64(w, "weights");
      if (weight < 0) throw GameParseError("field 'weights': negative weight");
      def.weights.push_back(weight);
    }
    def.quota = to_int64(parsed["quota"], "quota");
  } else if (kind == "apex") {
    def.kind = GameKind::Apex;
    reject_unknown_fields(parsed, {"n", "kind", "apex"});
    if (!parsed.contains("apex")) throw GameParseError("missing field 'apex'");
    def.apex_player = to_int(parsed["apex"], "apex");
    if (def.apex_player < 1 || def.apex_player > def.n)
      throw GameParseError("field 'apex': player id " + std::to_string(def.apex_player) +
                           " out of range 1.." + std::to_string(def.n));
  } else if (kind == "majority") {
    def.kind = GameKind::Majority;
    reject_unknown_fields(parsed, {"n", "kind", "quota"});
    if (!parsed.contains("quota")) throw GameParseError("missing field 'quota'");
    def.quota = to_int64(parsed["quota"], "quota");
  } else {
    throw GameParseError("unknown kind '" + kind + "'");
  }
  return def;
}

GameDefinition parse_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GameParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_game_text(buffer.str());
}

std::string game_to_json(const GameDefinition& def) {
  json out;
  out["n"] = def.n;
  out["kind"] = to_string(def.kind);
  switch (def.kind) {
    case GameKind::MinimalWinning:
      out["mwc"] = def.coalitions;
      break;
    case GameKind::ExplicitWinning:
      out["winning"] = def.coalitions;
      break;
    case GameKind::Weighted:
      out["weights"] = def.weights;
      out["quota"] = def.quota;
      break;
    case GameKind::Apex:
      out["apex"] = def.apex_player;
      break;
    case GameKind::Majority:
      out["quota"] = def.quota;
      break;
  }
  return out.dump();
}

}  // namespace coopet
