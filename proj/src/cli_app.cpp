#include "coopet/cli_app.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coopet/decisiveness.hpp"
#include "coopet/game_io.hpp"
#include "coopet/power_indices.hpp"
#include "coopet/reference_tables.hpp"

namespace coopet {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class IndexKind {
  ShapleyGen,
  Profitability,
  Interaction,
  InteractionIndicator,
  Attitude,
  Coopetition,
  Cooperative,
  Competitive,
  Decisiveness,
};

const std::map<std::string, IndexKind>& index_names() {
  static const std::map<std::string, IndexKind> names = {
      {"shapley-gen", IndexKind::ShapleyGen},
      {"profitability", IndexKind::Profitability},
      {"interaction", IndexKind::Interaction},
      {"interaction-indicator", IndexKind::InteractionIndicator},
      {"attitude", IndexKind::Attitude},
      {"coopetition", IndexKind::Coopetition},
      {"cooperative", IndexKind::Cooperative},
      {"competitive", IndexKind::Competitive},
      {"decisiveness", IndexKind::Decisiveness},
  };
  return names;
}

bool takes_model(IndexKind kind) {
  switch (kind) {
    case IndexKind::Attitude:
    case IndexKind::Coopetition:
    case IndexKind::Cooperative:
    case IndexKind::Competitive:
    case IndexKind::Decisiveness:
      return true;
    default:
      return false;
  }
}

bool takes_against(IndexKind kind) {
  return kind == IndexKind::Attitude || kind == IndexKind::InteractionIndicator;
}

/// Indices defined through 2-partitions need at least two players.
bool needs_pair(IndexKind kind) {
  return takes_model(kind);
}

Coalition parse_coalition_arg(const std::string& text, int n, const std::string& flag) {
  if (text == "none" || text.empty()) return Coalition();
  std::vector<int> ids;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string token =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (token.empty() || token.size() > 2 ||
        !std::all_of(token.begin(), token.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
      throw UsageError(flag + ": expected comma-separated player ids, got '" + text + "'");
    ids.push_back(std::stoi(token));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  Coalition c = Coalition::from_ids(ids);
  if (static_cast<std::size_t>(c.size()) != ids.size())
    throw UsageError(flag + ": duplicate player id in '" + text + "'");
  if (!c.subset_of(Coalition::full(n)))
    throw UsageError(flag + ": " + to_string(c) + " has players outside 1.." +
                     std::to_string(n));
  return c;
}

struct OutputRow {
  std::vector<int> coalition;
  std::string index;
  std::string model;
  Rational value;
};

std::string join_ids(const std::vector<int>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ids[i]);
  }
  return out;
}

void render_rows(const std::vector<OutputRow>& rows, const std::string& format,
                 std::ostream& out) {
  if (format == "csv") {
    out << "coalition,index,model,value\n";
    for (const OutputRow& row : rows)
      out << "\"" << join_ids(row.coalition) << "\"," << row.index << "," << row.model
          << "," << format_rational(row.value) << "\n";
    return;
  }
  if (format == "json") {
    nlohmann::json doc = nlohmann::json::array();
    for (const OutputRow& row : rows) {
      nlohmann::json item;
      item["coalition"] = row.coalition;
      item["index"] = row.index;
      item["model"] = row.model;
      item["value"] = format_rational(row.value);
      doc.push_back(std::move(item));
    }
    out << doc.dump(2) << "\n";
    return;
  }
  std::vector<std::array<std::string, 4>> cells;
  cells.push_back({"coalition", "index", "model", "value"});
  for (const OutputRow& row : rows)
    cells.push_back(
        {join_ids(row.coalition), row.index, row.model, format_rational(row.value)});
  std::array<std::size_t, 4> width{};
  for (const auto& row : cells)
    for (int i = 0; i < 4; ++i) width[i] = std::max(width[i], row[i].size());
  for (const auto& row : cells) {
    for (int i = 0; i < 4; ++i) {
      out << row[i];
      if (i < 3) out << std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << "\n";
  }
}

Model parse_model(const std::string& name) {
  if (name == "banzhaf") return Model::Banzhaf;
  if (name == "shapley-owen") return Model::ShapleyOwen;
  throw UsageError("unknown model '" + name + "' (banzhaf, shapley-owen)");
}

Rational compute_index(const SimpleGame& game, IndexKind kind, Coalition s,
                       std::optional<Model> model, std::optional<Coalition> against) {
  switch (kind) {
    case IndexKind::ShapleyGen:
      return generalized_shapley(game, s);
    case IndexKind::Profitability:
      return profitability(game, s);
    case IndexKind::Interaction:
      return shapley_interaction(game, s);
    case IndexKind::InteractionIndicator:
      return Rational(interaction_indicator(game, s, *against));
    case IndexKind::Attitude:
      return attitude(game, s, *against, partition_distribution(*model));
    case IndexKind::Coopetition:
      return coopetition(game, s, partition_distribution(*model),
                         outside_distribution(*model));
    case IndexKind::Cooperative:
      return index_bundle(game, s, *model).cooperative;
    case IndexKind::Competitive:
      return index_bundle(game, s, *model).competitive;
    case IndexKind::Decisiveness:
      return index_bundle(game, s, *model).decisiveness;
  }
  throw std::logic_error("unreachable");
}

struct LoadedGame {
  GameDefinition def;
  std::optional<SimpleGame> game;
  ValidationReport report;
};

/// Parse errors propagate as GameParseError; validation problems land in the
/// report with `game` left empty.
LoadedGame load(const std::string& path, bool allow_weak_majority) {
  LoadedGame loaded;
  loaded.def = parse_game_file(path);
  loaded.def.allow_weak_majority = allow_weak_majority;
  loaded.report = validate(loaded.def);
  if (loaded.report.ok()) loaded.game.emplace(loaded.def);
  return loaded;
}

struct CliOptions {
  std::string file;
  std::string coalition;
  std::string index;
  std::string model;
  std::string against;
  std::string format = "table";
  std::string table;
  int min_size = -1;
  int max_size = -1;
  bool collapse_symmetric = false;
  bool allow_weak_majority = false;
};

int run_validate(const CliOptions& opt, std::ostream& out) {
  LoadedGame loaded = load(opt.file, opt.allow_weak_majority);
  out << loaded.report.to_string();
  if (loaded.report.ok()) out << "\n";
  return loaded.report.ok() ? kExitOk : kExitValidation;
}

int run_indices(const CliOptions& opt, std::ostream& out) {
  IndexKind kind = index_names().at(opt.index);
  if (takes_model(kind) && opt.model.empty())
    throw UsageError("--model is required for index '" + opt.index + "'");
  if (!takes_model(kind) && !opt.model.empty())
    throw UsageError("--model does not apply to index '" + opt.index + "'");
  if (takes_against(kind) && opt.against.empty())
    throw UsageError("--against is required for index '" + opt.index +
                     "' ('none' for the empty coalition)");
  if (!takes_against(kind) && !opt.against.empty())
    throw UsageError("--against does not apply to index '" + opt.index + "'");

  LoadedGame loaded = load(opt.file, opt.allow_weak_majority);
  if (!loaded.game) {
    out << loaded.report.to_string();
    return kExitValidation;
  }
  const SimpleGame& game = *loaded.game;

  Coalition s = parse_coalition_arg(opt.coalition, game.player_count(), "--coalition");
  if (s.empty()) throw UsageError("--coalition must not be empty");
  if (needs_pair(kind) && s.size() < 2)
    throw UsageError("index '" + opt.index + "' needs a coalition of at least 2 players");

  std::optional<Model> model;
  if (!opt.model.empty()) model = parse_model(opt.model);
  std::optional<Coalition> against;
  if (takes_against(kind)) {
    against = parse_coalition_arg(opt.against, game.player_count(), "--against");
    if (!against->disjoint_with(s))
      throw UsageError("--against " + to_string(*against) + " overlaps --coalition " +
                       to_string(s));
  }

  OutputRow row{s.members(), opt.index, model ? to_string(*model) : "-",
                compute_index(game, kind, s, model, against)};
  render_rows({row}, opt.format, out);
  return kExitOk;
}

bool is_symmetric(const SimpleGame& game) {
  std::vector<int> value_by_size(game.player_count() + 1, -1);
  for (Coalition s : subsets_of(game.grand_coalition())) {
    int v = game.value(s);
    int& seen = value_by_size[s.size()];
    if (seen == -1)
      seen = v;
    else if (seen != v)
      return false;
  }
  return true;
}

int run_sweep(const CliOptions& opt, std::ostream& out) {
  IndexKind kind = index_names().at(opt.index);
  if (takes_against(kind))
    throw UsageError("index '" + opt.index + "' needs --against; use the indices command");
  if (takes_model(kind) && opt.model.empty())
    throw UsageError("--model is required for index '" + opt.index + "'");
  if (!takes_model(kind) && !opt.model.empty())
    throw UsageError("--model does not apply to index '" + opt.index + "'");

  LoadedGame loaded = load(opt.file, opt.allow_weak_majority);
  if (!loaded.game) {
    out << loaded.report.to_string();
    return kExitValidation;
  }
  const SimpleGame& game = *loaded.game;
  const int n = game.player_count();

  const int floor_size = needs_pair(kind) ? 2 : 1;
  int min_size = opt.min_size < 0 ? floor_size : opt.min_size;
  int max_size = opt.max_size < 0 ? n : opt.max_size;
  if (min_size < floor_size || min_size > max_size || max_size > n)
    throw UsageError("size range " + std::to_string(min_size) + ".." +
                     std::to_string(max_size) + " invalid (need " +
                     std::to_string(floor_size) + " <= min <= max <= " +
                     std::to_string(n) + ")");

  std::optional<Model> model;
  if (!opt.model.empty()) model = parse_model(opt.model);

  std::vector<OutputRow> rows;
  if (opt.collapse_symmetric) {
    if (!is_symmetric(game)) {
      out << "game is not symmetric; --collapse-symmetric does not apply\n";
      return kExitValidation;
    }
    for (int size = min_size; size <= max_size; ++size) {
      Coalition s = Coalition::full(size);
      rows.push_back({s.members(), opt.index, model ? to_string(*model) : "-",
                      compute_index(game, kind, s, model, std::nullopt)});
    }
  } else {
    for (int size = min_size; size <= max_size; ++size)
      for (Coalition s : subsets_of(game.grand_coalition()))
        if (s.size() == size)
          rows.push_back({s.members(), opt.index, model ? to_string(*model) : "-",
                          compute_index(game, kind, s, model, std::nullopt)});
  }
  render_rows(rows, opt.format, out);
  return kExitOk;
}

int run_tables(const CliOptions& opt, std::ostream& out) {
  TableReport report;
  if (opt.table == "apex")
    report = reproduce_apex_table();
  else if (opt.table.size() == 1 && opt.table[0] >= '1' && opt.table[0] <= '4')
    report = reproduce_table(opt.table[0] - '0');
  else
    throw UsageError("unknown table '" + opt.table + "' (1, 2, 3, 4, apex)");
  out << report.render();
  return report.ok() ? kExitOk : kExitValidation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact indices for simple monotone cooperative games"};
  app.require_subcommand(1);

  CliOptions opt;

  auto add_game_flags = [&](CLI::App* cmd) {
    cmd->add_option("file", opt.file, "game file (JSON)")->required();
    cmd->add_flag("--allow-weak-majority", opt.allow_weak_majority,
                  "accept majority quotas not exceeding n/2");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
  };
  std::vector<std::string> known_indices;
  for (const auto& [name, kind] : index_names()) known_indices.push_back(name);

  CLI::App* validate_cmd = app.add_subcommand("validate", "check a game file");
  add_game_flags(validate_cmd);

  CLI::App* indices_cmd =
      app.add_subcommand("indices", "compute one index for one coalition");
  add_game_flags(indices_cmd);
  indices_cmd->add_option("--coalition", opt.coalition, "comma-separated 1-based ids")
      ->required();
  indices_cmd->add_option("--index", opt.index, "index to compute")
      ->required()
      ->check(CLI::IsMember(known_indices));
  indices_cmd->add_option("--model", opt.model, "banzhaf or shapley-owen")
      ->check(CLI::IsMember({"banzhaf", "shapley-owen"}));
  indices_cmd->add_option("--against", opt.against,
                          "outside coalition T ('none' for the empty one)");
  add_format(indices_cmd);

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "compute one index for every coalition in a size range");
  add_game_flags(sweep_cmd);
  sweep_cmd->add_option("--index", opt.index, "index to compute")
      ->required()
      ->check(CLI::IsMember(known_indices));
  sweep_cmd->add_option("--model", opt.model, "banzhaf or shapley-owen")
      ->check(CLI::IsMember({"banzhaf", "shapley-owen"}));
  sweep_cmd->add_option("--min-size", opt.min_size, "smallest coalition size");
  sweep_cmd->add_option("--max-size", opt.max_size, "largest coalition size");
  sweep_cmd->add_flag("--collapse-symmetric", opt.collapse_symmetric,
                      "one row per size (symmetric games only)");
  add_format(sweep_cmd);

  CLI::App* tables_cmd =
      app.add_subcommand("tables", "recompute a built-in reference table and diff it");
  tables_cmd->add_option("which", opt.table, "1, 2, 3, 4 or apex")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) return run_validate(opt, out);
    if (indices_cmd->parsed()) return run_indices(opt, out);
    if (sweep_cmd->parsed()) return run_sweep(opt, out);
    if (tables_cmd->parsed()) return run_tables(opt, out);
  } catch (const GameParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace coopet
