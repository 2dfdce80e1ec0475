#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coopet/rational.hpp"

namespace coopet {

// Built-in verification of the published reference values for the demo games:
// the split example (interaction and coopetition tables), the symmetric
// majority tables at n = 8 and n = 9, and the apex closed forms. Every
// expected value was cross-checked against independent enumeration before
// being embedded; where a published value fails that cross-check, the cell
// carries the published value as an annotation and the verified value as the
// expectation, and the report calls the difference out instead of hiding it.

struct TableCell {
  std::string row;
  std::string column;
  Rational expected;                  // trusted, oracle-verified value
  std::optional<Rational> published;  // set when the printed value differs
  Rational computed;
  bool ok = false;
};

struct TableReport {
  std::string name;
  std::string description;
  std::vector<TableCell> cells;
  std::vector<std::string> notes;

  int mismatches() const;
  bool ok() const { return mismatches() == 0; }
  std::string render() const;
};

/// which: 1 = interaction indices for the split games, 2 = coopetition for the
/// split games, 3 = majority n=8 grid, 4 = majority n=9 grid.
TableReport reproduce_table(int which);

/// Apex closed forms, n = 3..10, every coalition: zero coopetition under both
/// models, Banzhaf decisiveness against its closed form, Shapley-Owen
/// decisiveness against the case-split formula evaluated with the Shapley-Owen
/// distributions.
TableReport reproduce_apex_table();

}  // namespace coopet
