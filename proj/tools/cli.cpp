#include "cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gardner/board_io.hpp"
#include "gardner/counting.hpp"
#include "gardner/duality.hpp"
#include "gardner/polynomial.hpp"
#include "gardner/polytope.hpp"
#include "gardner/trick.hpp"

namespace gardner::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Integer enumeration_budget() {
  const char* env = std::getenv("GARDNER_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationBudget;
  try {
    Integer b = parse_integer(env);
    if (b < 0) throw std::invalid_argument("negative");
    return b;
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string("GARDNER_BUDGET is not a nonnegative integer: ") + env);
  }
}

BoardDocument load_board(const std::string& file) {
  if (file == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_board(buf.str());
  }
  return read_board_file(file);
}

std::string join(const std::vector<Integer>& xs) {
  std::ostringstream os;
  for (std::size_t k = 0; k < xs.size(); ++k) os << (k ? " " : "") << xs[k];
  return os.str();
}

json string_array(const std::vector<Integer>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(x.get_str());
  return a;
}

struct Options {
  // trick
  std::size_t d = 0;
  std::uint64_t n = 0;
  std::string mode = "uniform";
  std::optional<std::uint64_t> seed;
  bool labels = false;
  // shared
  bool json_output = false;
  std::string file;
  // count
  std::string formula = "3";
  bool oracle = false;
  // roots
  double tol = 1e-8;
  // decompose
  bool rows_first = false;
  // duality
  std::size_t samples = 300;
  unsigned long n_max = 0;
};

int cmd_trick(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.d < 1) throw UsageError("trick: d must be at least 1");
  const std::uint64_t seed = o.seed ? *o.seed : std::random_device{}();
  err << "seed " << seed << '\n';
  const TrickMode mode = o.mode == "quick" ? TrickMode::Quick : TrickMode::Uniform;
  const GMatrix board = trick_generate(o.d, o.n, mode, seed);
  const Labeling labels = decompose_canonical(board);
  if (o.json_output) {
    json j = board_to_json(board, labels);
    j["seed"] = std::to_string(seed);
    j["mode"] = o.mode;
    out << j.dump() << '\n';
  } else if (o.labels) {
    out << format_addition_table(board, labels);
  } else {
    out << format_board(board.matrix());
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const BoardDocument doc = load_board(o.file);
  const auto check = is_g_matrix_fast(doc.entries);
  if (o.json_output) {
    json j{{"d", doc.entries.size()}, {"g_matrix", static_cast<bool>(check)}};
    if (check.value) j["value"] = check.value->get_str();
    if (check.witness) {
      const auto& w = *check.witness;
      j["witness"] = {{"quadruple", w.quadruple},
                      {"placements", {w.first.one_based(), w.second.one_based()}},
                      {"sums", {w.first_sum.get_str(), w.second_sum.get_str()}}};
    }
    out << j.dump() << '\n';
  } else if (check.value) {
    out << "value " << *check.value << '\n';
  } else if (check.witness) {
    const auto& w = *check.witness;
    out << "not a G-matrix: A" << w.quadruple[0] << w.quadruple[1] << " + A" << w.quadruple[2]
        << w.quadruple[3] << " != A" << w.quadruple[0] << w.quadruple[3] << " + A" << w.quadruple[2]
        << w.quadruple[1] << '\n'
        << "rooks " << w.first.to_string() << " cover " << w.first_sum << '\n'
        << "rooks " << w.second.to_string() << " cover " << w.second_sum << '\n';
  } else {
    out << "not a G-matrix\n";
  }
  if (doc.value && check.value && *doc.value != *check.value) {
    out << "declared value " << *doc.value << " differs\n";
    return kCheckFailed;
  }
  return check ? kOk : kCheckFailed;
}

int cmd_count(const Options& o, std::ostream& out) {
  if (o.d < 1) throw UsageError("count: d must be at least 1");
  const Integer n(std::to_string(o.n));
  std::vector<std::pair<std::string, Integer>> rows;
  if (o.formula == "1" || o.formula == "all") rows.emplace_back("1st", g_formula_1(o.d, n));
  if (o.formula == "2" || o.formula == "all") rows.emplace_back("2nd", g_formula_2(o.d, n));
  if (o.formula == "3" || o.formula == "all") rows.emplace_back("3rd", g_formula_3(o.d, n));
  if (o.oracle) rows.emplace_back("bruteforce", g_bruteforce(o.d, o.n, enumeration_budget()));

  bool agree = true;
  for (const auto& r : rows) agree = agree && r.second == rows.front().second;
  if (o.json_output) {
    json j{{"d", o.d}, {"N", std::to_string(o.n)}, {"agree", agree}};
    for (const auto& [name, value] : rows) j[name] = value.get_str();
    out << j.dump() << '\n';
  } else if (rows.size() == 1) {
    out << rows.front().second << '\n';
  } else {
    for (const auto& [name, value] : rows) out << name << ' ' << value << '\n';
    if (!agree) out << "MISMATCH\n";
  }
  return agree ? kOk : kCheckFailed;
}

int cmd_poly(const Options& o, std::ostream& out) {
  if (o.d < 1) throw UsageError("poly: d must be at least 1");
  const CountingPolynomial p = interpolate(o.d);
  if (o.json_output) {
    out << p.to_json().dump() << '\n';
  } else {
    out << p.to_string() << '\n';
  }
  return kOk;
}

int cmd_roots(const Options& o, std::ostream& out) {
  if (o.d < 2) throw UsageError("roots: d must be at least 2");
  const RootReport r = roots_check(o.d, o.tol);
  if (o.json_output) {
    json roots = json::array();
    for (const auto& root : r.roots) {
      roots.push_back({{"re", root.value.real()}, {"im", root.value.imag()},
                       {"kind", to_string(root.kind)}, {"exact", root.exact}});
    }
    out << json{{"d", r.d}, {"tol", r.tol}, {"passed", r.passed}, {"roots", roots}}.dump() << '\n';
  } else {
    out << std::setprecision(12);
    for (const auto& root : r.roots) {
      out << root.value.real() << (root.value.imag() < 0 ? " - " : " + ") << std::abs(root.value.imag())
          << "i  " << to_string(root.kind) << (root.exact ? " (exact)" : "") << '\n';
    }
    out << (r.passed ? "all roots classified" : "UNCLASSIFIED ROOTS") << '\n';
  }
  return r.passed ? kOk : kCheckFailed;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const BoardDocument doc = load_board(o.file);
  const auto g = GMatrix::try_certify(doc.entries);
  if (!g) {
    out << "not a G-matrix\n";
    return kCheckFailed;
  }
  const auto order = o.rows_first ? DecompositionOrder::RowsFirst : DecompositionOrder::ColumnsFirst;
  const Labeling labels = decompose_canonical(*g, order);
  if (o.json_output) {
    out << board_to_json(*g, labels).dump() << '\n';
  } else {
    out << format_addition_table(*g, labels);
  }
  return kOk;
}

int cmd_locate(const Options& o, std::ostream& out) {
  const BoardDocument doc = load_board(o.file);
  const auto g = GMatrix::try_certify(doc.entries);
  if (!g) {
    out << "not a G-matrix\n";
    return kCheckFailed;
  }
  const std::size_t k = locate(*g);
  const auto cells = halfopen_cells(g->size());
  const bool member = halfopen_contains(cells[k - 1], *g);
  const Labeling labels = decompose_canonical(*g);
  if (o.json_output) {
    out << json{{"d", g->size()},
                {"value", g->value().get_str()},
                {"cell", k},
                {"lambda", string_array(labels.lambda())},
                {"mu", string_array(labels.mu())},
                {"member", member}}
               .dump()
        << '\n';
  } else {
    out << "cell " << k << " of " << g->size() << ": " << cells[k - 1].simplex().to_string() << '\n'
        << "lambda " << join(labels.lambda()) << '\n'
        << "mu " << join(labels.mu()) << '\n';
  }
  return member ? kOk : kCheckFailed;
}

int cmd_duality(const Options& o, std::ostream& out) {
  if (o.d < 1) throw UsageError("duality: d must be at least 1");
  const std::uint64_t seed = o.seed ? *o.seed : 1;
  const GalePairReport gale = gale_pair_check(o.d, o.samples, seed);
  const CompressedReport compressed = compressed_check(o.d, o.samples, seed);
  const AffineSubspace birkhoff = birkhoff_affine_hull(o.d);
  const AffineSubspace gardner = gardner_affine_hull(o.d);
  const bool hulls_dual = dual_subspace(birkhoff) == gardner && dual_subspace(gardner) == birkhoff;
  std::optional<GorensteinReport> gorenstein;
  if (o.n_max >= o.d) gorenstein = gorenstein_check(o.d, o.n_max, enumeration_budget());

  const bool ok = gale.passed() && compressed.passed() && hulls_dual && (!gorenstein || gorenstein->passed());
  if (o.json_output) {
    json j{{"d", o.d},
           {"seed", std::to_string(seed)},
           {"vertex_pairings", gale.vertex_pairings},
           {"gale_samples", gale.g_samples + gale.b_samples},
           {"gale_counterexamples", gale.counterexamples},
           {"hulls_dual", hulls_dual},
           {"compressed_counterexamples", compressed.counterexamples},
           {"passed", ok}};
    if (gorenstein) j["gorenstein"] = gorenstein->passed();
    out << j.dump() << '\n';
  } else {
    out << "seed " << seed << '\n'
        << "vertex pairings <v, P_sigma> = 1: " << gale.vertex_pairings << " checked, "
        << (gale.passed() ? "ok" : "FAILED") << '\n'
        << "sampled descriptions agree: " << gale.g_samples << " + " << gale.b_samples << " samples\n"
        << "affine hulls are dual: " << (hulls_dual ? "ok" : "FAILED") << '\n'
        << "compressed: " << compressed.g_accepted << " G_d and " << compressed.b_accepted
        << " B_d cube points checked, " << (compressed.passed() ? "ok" : "FAILED") << '\n';
    if (gorenstein) {
      for (const auto& level : gorenstein->levels) {
        out << "interior of " << level.n << "*G_" << o.d << ": " << level.interior << ", lattice points of "
            << level.n - o.d << "*G_" << o.d << ": " << level.shifted << '\n';
      }
      out << "gorenstein: " << (gorenstein->passed() ? "ok" : "FAILED") << '\n';
    }
    for (const auto& c : gale.counterexamples) out << c << '\n';
    for (const auto& c : compressed.counterexamples) out << c << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gardner chessboards: G-matrices, their polytopes and counts"};
  app.require_subcommand(1);
  Options o;

  auto* trick = app.add_subcommand("trick", "Fill a d x d board so every rook placement covers N");
  trick->add_option("d", o.d, "side length")->required();
  trick->add_option("N", o.n, "value")->required();
  trick->add_option("--mode", o.mode, "uniform or quick")->check(CLI::IsMember({"uniform", "quick"}));
  trick->add_option("--seed", o.seed, "random seed (printed on stderr)");
  trick->add_flag("--labels", o.labels, "print the addition table");
  trick->add_flag("--json", o.json_output);

  auto* verify = app.add_subcommand("verify", "Check a board file ('-' for stdin)");
  verify->add_option("file", o.file)->required();
  verify->add_flag("--json", o.json_output);

  auto* count = app.add_subcommand("count", "Count integer G-matrices of side d and value N");
  count->add_option("d", o.d)->required();
  count->add_option("N", o.n)->required();
  count->add_option("--formula", o.formula, "1, 2, 3 or all")->check(CLI::IsMember({"1", "2", "3", "all"}));
  count->add_flag("--oracle", o.oracle, "also count by brute force");
  count->add_flag("--json", o.json_output);

  auto* poly = app.add_subcommand("poly", "Print the counting polynomial for side d");
  poly->add_option("d", o.d)->required();
  poly->add_flag("--json", o.json_output);

  auto* roots = app.add_subcommand("roots", "Locate and classify the roots of the counting polynomial");
  roots->add_option("d", o.d)->required();
  roots->add_option("--tol", o.tol);
  roots->add_flag("--json", o.json_output);

  auto* decompose = app.add_subcommand("decompose", "Print the addition table of a board");
  decompose->add_option("file", o.file)->required();
  decompose->add_flag("--rows-first", o.rows_first, "peel row minima first");
  decompose->add_flag("--json", o.json_output);

  auto* locate_cmd = app.add_subcommand("locate", "Find the half-open cell containing a board");
  locate_cmd->add_option("file", o.file)->required();
  locate_cmd->add_flag("--json", o.json_output);

  auto* duality = app.add_subcommand("duality", "Check the Gardner/Birkhoff duality for side d");
  duality->add_option("d", o.d)->required();
  duality->add_option("--samples", o.samples);
  duality->add_option("--seed", o.seed);
  duality->add_option("--n-max", o.n_max, "also check the Gorenstein shift up to this value");
  duality->add_flag("--json", o.json_output);

  std::vector<const char*> argv{"gardner"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*trick) return cmd_trick(o, out, err);
    if (*verify) return cmd_verify(o, out);
    if (*count) return cmd_count(o, out);
    if (*poly) return cmd_poly(o, out);
    if (*roots) return cmd_roots(o, out);
    if (*decompose) return cmd_decompose(o, out);
    if (*locate_cmd) return cmd_locate(o, out);
    if (*duality) return cmd_duality(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BoardParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace gardner::cli
