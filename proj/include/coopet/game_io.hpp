#pragma once

#include <stdexcept>
#include <string>

#include "coopet/game.hpp"

namespace coopet {

/// Malformed game file: bad JSON, wrong types, unknown fields, ids out of
/// range. Distinct from semantic validation failures, which go through
/// `validate`.
class GameParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the single-object game format:
///   {"n": <int>, "kind": "mwc"|"winning"|"weighted"|"apex"|"majority", ...}
/// with kind-specific fields `mwc`/`winning` (arrays of arrays of 1-based
/// ids), `weights` + `quota`, `apex`, or `quota`. Unknown fields are rejected.
GameDefinition parse_game_text(const std::string& text);
GameDefinition parse_game_file(const std::string& path);

/// Inverse of parsing; emits the same single-object format.
std::string game_to_json(const GameDefinition& def);

}  // namespace coopet
