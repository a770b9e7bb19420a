#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "gardner/g_matrix.hpp"

namespace gardner {

class BoardParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parsed board plus whatever metadata came with it.
struct BoardDocument {
  IntMatrix entries;
  std::optional<Integer> value;
  std::optional<Labeling> labeling;
};

/// Accepts either text (an optional header line, then d lines of d
/// nonnegative decimal integers) or a JSON object {"d": ..., "entries":
/// [[...], ...]} whose numbers may be JSON integers or decimal strings.
/// The first line counts as a header when it holds a non-integer token, or
/// when its token count differs from the rows that follow it.
/// Throws BoardParseError.
BoardDocument parse_board(std::string_view text);

BoardDocument read_board_file(const std::filesystem::path& path);

/// d lines of space-separated entries.
std::string format_board(const IntMatrix& m);

/// The addition table: a header row of column labels, then each row label
/// followed by its board row.
std::string format_addition_table(const GMatrix& g, const Labeling& labels);

/// {"d", "value", "entries", "lambda", "mu"}; integers as decimal strings.
nlohmann::json board_to_json(const GMatrix& g, const std::optional<Labeling>& labels = std::nullopt);

}  // namespace gardner
