#include "gardner/board_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

namespace gardner {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

bool is_nonnegative_decimal(const std::string& tok) {
  if (tok.empty()) return false;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

bool all_integers(const std::vector<std::string>& toks) {
  for (const auto& t : toks) {
    if (!is_nonnegative_decimal(t) && !(t.size() > 1 && t[0] == '-' && is_nonnegative_decimal(t.substr(1)))) {
      return false;
    }
  }
  return true;
}

Integer json_integer(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                  : Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw BoardParseError("board JSON: expected an integer or a decimal string");
}

void require_nonnegative(const Integer& x) {
  if (x < 0) throw BoardParseError("board: negative entry " + x.get_str());
}

BoardDocument parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw BoardParseError(std::string("board JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    throw BoardParseError("board JSON: expected an object with an \"entries\" array");
  }
  const auto& rows = j["entries"];
  const std::size_t d = rows.size();
  if (d == 0) throw BoardParseError("board JSON: empty entries");
  if (j.contains("d")) {
    Integer declared = json_integer(j["d"]);
    if (declared != static_cast<long>(d)) throw BoardParseError("board JSON: \"d\" disagrees with entries");
  }
  IntMatrix m(d);
  try {
    for (std::size_t i = 0; i < d; ++i) {
      if (!rows[i].is_array() || rows[i].size() != d) {
        throw BoardParseError("board JSON: row " + std::to_string(i + 1) + " does not have d entries");
      }
      for (std::size_t k = 0; k < d; ++k) {
        m(i, k) = json_integer(rows[i][k]);
        require_nonnegative(m(i, k));
      }
    }
    BoardDocument doc{std::move(m), std::nullopt, std::nullopt};
    if (j.contains("value")) doc.value = json_integer(j["value"]);
    if (j.contains("lambda") && j.contains("mu")) {
      std::vector<Integer> lambda, mu;
      for (const auto& x : j["lambda"]) lambda.push_back(json_integer(x));
      for (const auto& x : j["mu"]) mu.push_back(json_integer(x));
      doc.labeling = Labeling(std::move(lambda), std::move(mu));
    }
    return doc;
  } catch (const std::invalid_argument& e) {
    throw BoardParseError(std::string("board JSON: ") + e.what());
  }
}

BoardDocument parse_text(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream is{std::string(text)};
  for (std::string line; std::getline(is, line);) {
    auto toks = split_tokens(line);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  if (lines.empty()) throw BoardParseError("board: no rows");

  std::size_t first = 0;
  if (!all_integers(lines[0])) {
    first = 1;
  } else if (lines.size() >= 2 && lines[0].size() != lines[1].size() &&
             lines.size() - 1 == lines[1].size()) {
    first = 1;
  }
  const std::size_t d = lines.size() - first;
  if (d == 0) throw BoardParseError("board: header without rows");
  IntMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto& row = lines[first + i];
    if (row.size() != d) {
      throw BoardParseError("board: row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                            " entries, expected " + std::to_string(d));
    }
    for (std::size_t k = 0; k < d; ++k) {
      if (!is_nonnegative_decimal(row[k])) {
        throw BoardParseError("board: '" + row[k] + "' is not a nonnegative decimal integer");
      }
      m(i, k) = Integer(row[k]);
    }
  }
  return {std::move(m), std::nullopt, std::nullopt};
}

}  // namespace

BoardDocument parse_board(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string_view::npos && text[start] == '{') return parse_json(text);
  return parse_text(text);
}

BoardDocument read_board_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw BoardParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_board(buf.str());
}

std::string format_board(const IntMatrix& m) {
  std::size_t width = 1;
  for (const auto& x : m.entries()) width = std::max(width, x.get_str().size());
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      os << (j ? " " : "") << std::setw(static_cast<int>(width)) << m(i, j).get_str();
    }
    os << '\n';
  }
  return os.str();
}

std::string format_addition_table(const GMatrix& g, const Labeling& labels) {
  const std::size_t d = g.size();
  std::size_t width = 1;
  for (const auto& x : g.matrix().entries()) width = std::max(width, x.get_str().size());
  for (const auto& x : labels.lambda()) width = std::max(width, x.get_str().size());
  for (const auto& x : labels.mu()) width = std::max(width, x.get_str().size());
  const int w = static_cast<int>(width);
  std::ostringstream os;
  os << std::setw(w) << "+" << " |";
  for (const auto& x : labels.lambda()) os << ' ' << std::setw(w) << x.get_str();
  os << '\n' << std::string(width + 1, '-') << '+' << std::string(d * (width + 1), '-') << '\n';
  for (std::size_t i = 0; i < d; ++i) {
    os << std::setw(w) << labels.mu()[i].get_str() << " |";
    for (std::size_t j = 0; j < d; ++j) os << ' ' << std::setw(w) << g(i, j).get_str();
    os << '\n';
  }
  return os.str();
}

nlohmann::json board_to_json(const GMatrix& g, const std::optional<Labeling>& labels) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : g.matrix().row(i)) row.push_back(x.get_str());
    entries.push_back(std::move(row));
  }
  nlohmann::json j{{"d", g.size()}, {"value", g.value().get_str()}, {"entries", std::move(entries)}};
  if (labels) {
    nlohmann::json lambda = nlohmann::json::array(), mu = nlohmann::json::array();
    for (const auto& x : labels->lambda()) lambda.push_back(x.get_str());
    for (const auto& x : labels->mu()) mu.push_back(x.get_str());
    j["lambda"] = std::move(lambda);
    j["mu"] = std::move(mu);
  }
  return j;
}

}  // namespace gardner
