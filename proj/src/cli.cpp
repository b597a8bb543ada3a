#include "lozenge/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lozenge/jsonio.hpp"
#include "lozenge/render.hpp"
#include "lozenge/shuffle.hpp"

namespace lozenge {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kBadInput = 2;
constexpr int kGuardExceeded = 3;
constexpr int kIoFailure = 4;

struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RowSet rowset_from_text(const std::string& text) {
  return rowset_from_json(Json::parse(text));
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return Json::parse(in);
}

void check_cells_guard(const Region& region, long long max_cells) {
  if (region.cell_count() > max_cells)
    throw GuardError("region has " + std::to_string(region.cell_count()) +
                     " cells, over the --max-cells guard of " + std::to_string(max_cells));
}

int default_diag(const RowSet& u, const RowSet& l) {
  int n = u.empty() ? 0 : u.back();
  if (!l.empty()) n = std::max(n, l.back());
  return n;
}

// Every subset of 1..limit as a RowSet, the empty set first.
std::vector<RowSet> all_subsets(int limit) {
  std::vector<RowSet> out;
  out.reserve(static_cast<size_t>(1) << limit);
  for (unsigned mask = 0; mask < (1u << limit); ++mask) {
    std::vector<int> positions;
    for (int p = 1; p <= limit; ++p)
      if (mask & (1u << (p - 1))) positions.push_back(p);
    out.emplace_back(std::move(positions));
  }
  return out;
}

std::vector<RowSet> subsets_of(const RowSet& base, int max_size) {
  std::vector<RowSet> out;
  const auto& pool = base.positions();
  const int n = base.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) > max_size) continue;
    std::vector<int> positions;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) positions.push_back(pool[static_cast<size_t>(i)]);
    out.emplace_back(std::move(positions));
  }
  return out;
}

struct CheckLog {
  std::ostream& out;
  long long checks = 0;
  long long failures = 0;
  long long skipped = 0;

  void record(const std::string& name, bool pass, Json detail = Json::object()) {
    ++checks;
    if (pass) return;
    ++failures;
    Json line{{"check", name}, {"pass", false}};
    for (auto& [key, value] : detail.items()) line[key] = value;
    out << line.dump() << "\n";
  }

  void skip(const std::string& name, const std::string& reason) {
    ++skipped;
    out << Json{{"check", name}, {"skipped", true}, {"reason", reason}}.dump() << "\n";
  }

  int finish() {
    out << Json{{"checks", checks},
                {"failures", failures},
                {"skipped", skipped},
                {"pass", failures == 0}}
               .dump()
        << "\n";
    return failures == 0 ? kOk : kVerifyFailed;
  }
};

struct CountArgs {
  std::string u_text;
  std::string l_text;
  std::string method = "formula";
  int diag = 0;
  long long max_cells = 256;
};

int run_count(const CountArgs& args, std::ostream& out) {
  RowSet u = rowset_from_text(args.u_text);
  bool have_l = !args.l_text.empty();
  RowSet l = have_l ? rowset_from_text(args.l_text) : RowSet();
  const int diag = args.diag > 0 ? args.diag : default_diag(u, l);

  ExactCount count;
  if (args.method == "formula") {
    count = have_l ? count_dented(u, l) : count_formula(u);
  } else if (args.method == "recursion") {
    count = have_l ? count_recursive(u) * count_recursive(l) : count_recursive(u);
  } else {
    if (have_l) {
      Region region = build_dented_hexagon(u.size(), l.size(), diag, u, l);
      check_cells_guard(region, args.max_cells);
      count = brute_force_count(region);
    } else {
      check_cells_guard(build_half_hexagon(u.size(), diag), args.max_cells);
      count = brute_force_count_bottom_row(u.size(), diag, u);
    }
  }

  Json report{{"U", to_json(u)}};
  if (have_l) report["L"] = to_json(l);
  report["count"] = count_to_string(count);
  report["method"] = args.method;
  out << report.dump() << "\n";
  return kOk;
}

int run_enumerate(const std::string& u_text, long long limit, std::ostream& out) {
  RowSet u = rowset_from_text(u_text);
  enumerate_patterns(u, [&](const GTPattern& pattern) {
    out << to_json(pattern).dump() << "\n";
    return limit <= 0 || --limit > 0;
  });
  return kOk;
}

void verify_restricted_oracle(CheckLog& log, const RestrictedSpec& spec, long long max_cells) {
  const int diag = default_diag(row_union(spec.U, spec.L), spec.B);
  Region region = build_dented_hexagon(spec.U.size(), spec.L.size(), diag,
                                       row_difference(spec.U, spec.V),
                                       row_difference(spec.L, spec.V));
  if (region.cell_count() > max_cells) {
    log.skip("restricted-formula-vs-oracle",
             "region has " + std::to_string(region.cell_count()) +
                 " cells, over the --max-cells guard of " + std::to_string(max_cells));
    return;
  }
  ExactCount formula = count_restricted(spec);
  ExactCount oracle = brute_force_count_restricted(region, spec.V, spec.B);
  log.record("restricted-formula-vs-oracle", formula == oracle,
             Json{{"spec", to_json(spec)},
                  {"formula", count_to_string(formula)},
                  {"oracle", count_to_string(oracle)}});
}

void verify_shuffle_pair(CheckLog& log, const RowSet& u, const RowSet& l, const RowSet& s,
                         const RestrictedSpec& restricted) {
  ShuffleSpec moves(u, l, s);
  auto [u_prime, l_prime] = shuffle(moves);
  if (!u_prime.empty() && !l_prime.empty()) {
    ExactRatio closed = shuffle_ratio_closed_form(moves);
    ExactRatio direct = make_ratio(count_dented(u, l), count_dented(u_prime, l_prime));
    log.record("shuffle-ratio", closed == direct,
               Json{{"spec", to_json(moves)},
                    {"closed_form", ratio_to_string(closed)},
                    {"direct", ratio_to_string(direct)}});
  }
  log.record("shuffle-invariance", verify_shuffle_invariance(restricted, s),
             Json{{"spec", to_json(restricted)}, {"S", to_json(s)}});
}

int run_verify_spec(const std::string& path, long long max_cells, std::ostream& out) {
  Json doc = load_json_file(path);
  RestrictedSpec spec = restricted_spec_from_json(doc);
  CheckLog log{out};

  log.record("factored-identity",
             count_dented_factored(spec.U, spec.L) == count_dented(spec.U, spec.L),
             Json{{"U", to_json(spec.U)}, {"L", to_json(spec.L)}});
  verify_restricted_oracle(log, spec, max_cells);
  if (doc.contains("shuffles")) {
    const Json& shuffles = doc.at("shuffles");
    if (!shuffles.is_array())
      throw std::invalid_argument("\"shuffles\" must be an array of row sets");
    for (const Json& entry : shuffles)
      verify_shuffle_pair(log, spec.U, spec.L, rowset_from_json(entry), spec);
  }
  return log.finish();
}

int run_verify_sweep(int max_pos, long long max_cells, std::ostream& out) {
  CheckLog log{out};
  std::vector<RowSet> sets = all_subsets(max_pos);
  RowSet everything = sets.back();

  for (const RowSet& u : sets) {
    if (u.empty()) continue;
    for (const RowSet& l : sets) {
      if (l.empty()) continue;
      log.record("factored-identity", count_dented_factored(u, l) == count_dented(u, l),
                 Json{{"U", to_json(u)}, {"L", to_json(l)}});

      Region region = build_dented_hexagon(u.size(), l.size(), default_diag(u, l), u, l);
      if (region.cell_count() > max_cells) {
        log.skip("dented-formula-vs-oracle", "region over the --max-cells guard");
      } else {
        ExactCount oracle = brute_force_count(region);
        ExactCount formula = count_dented(u, l);
        log.record("dented-formula-vs-oracle", oracle == formula,
                   Json{{"U", to_json(u)},
                        {"L", to_json(l)},
                        {"formula", count_to_string(formula)},
                        {"oracle", count_to_string(oracle)}});
      }

      SetSplit split = set_algebra(u, l);
      RowSet priv = row_union(split.a_private, split.b_private);
      RestrictedSpec trivial(u, l, RowSet(), RowSet());
      for (const RowSet& s : subsets_of(priv, priv.size()))
        verify_shuffle_pair(log, u, l, s, trivial);

      for (const RowSet& v : subsets_of(split.common, 2)) {
        RowSet blocked = row_difference(row_union(u, l), v);
        for (const RowSet& b : subsets_of(row_difference(everything, blocked), 2))
          verify_restricted_oracle(log, RestrictedSpec(u, l, v, b), max_cells);
      }
    }
  }
  return log.finish();
}

struct RenderArgs {
  std::string region_path;
  std::string patterns_path;
  std::string out_path;
  double scale = 40.0;
  bool hide_diagonal = false;
  bool omit_dents = false;
  std::string palette;
};

int run_render(const RenderArgs& args, std::ostream&) {
  SvgStyle style;
  style.scale = args.scale;
  style.show_diagonal = !args.hide_diagonal;
  style.dents_white = !args.omit_dents;
  if (!args.palette.empty()) {
    std::vector<std::string> fills;
    std::stringstream stream(args.palette);
    std::string item;
    while (std::getline(stream, item, ',')) fills.push_back(item);
    if (fills.size() != 3)
      throw std::invalid_argument("--palette needs three comma-separated fills");
    style.vertical = fills[0];
    style.left_tilted = fills[1];
    style.right_tilted = fills[2];
  }

  std::string svg;
  if (!args.region_path.empty()) {
    svg = region_to_svg(region_from_json(load_json_file(args.region_path)), style);
  } else {
    Json doc = load_json_file(args.patterns_path);
    if (!doc.is_object() || !doc.contains("upper") || !doc.contains("lower"))
      throw std::invalid_argument("patterns file must carry \"upper\" and \"lower\" rows");
    GTPattern upper = pattern_from_json(doc.at("upper"));
    GTPattern lower = pattern_from_json(doc.at("lower"));
    int diag = doc.contains("N")
                   ? doc.at("N").get<int>()
                   : default_diag(upper.bottom_row(), lower.bottom_row());
    svg = tiling_to_svg(glue_halves(upper, lower, diag), style);
  }

  std::ofstream file(args.out_path, std::ios::binary);
  if (!file) throw IoError("cannot open " + args.out_path + " for writing");
  file << svg;
  file.flush();
  if (!file) throw IoError("failed writing " + args.out_path);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting, enumeration and drawing of lozenge tilings of dented hexagons"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count_cmd = app.add_subcommand("count", "Count tilings for bottom row(s)");
  count_cmd->add_option("--U", count_args.u_text, "Bottom row as a JSON array, e.g. [1,3,6,8]")
      ->required();
  count_cmd->add_option("--L", count_args.l_text,
                        "Second bottom row; counts the dented hexagon instead");
  count_cmd->add_option("--method", count_args.method, "Counting method")
      ->check(CLI::IsMember({"formula", "recursion", "oracle"}));
  count_cmd->add_option("--N", count_args.diag, "Diagonal length (default: largest position)");
  count_cmd->add_option("--max-cells", count_args.max_cells, "Cell guard for the oracle");

  std::string enum_u;
  long long enum_limit = 0;
  auto* enum_cmd = app.add_subcommand("enumerate", "Stream patterns as JSON lines");
  enum_cmd->add_option("--U", enum_u, "Bottom row as a JSON array")->required();
  enum_cmd->add_option("--limit", enum_limit, "Stop after this many patterns (0 = all)");

  std::string verify_spec_path;
  int verify_sweep = 0;
  long long verify_max_cells = 256;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the closed forms");
  auto* spec_opt = verify_cmd->add_option("--spec", verify_spec_path,
                                          "JSON file with U, L, V, B and optional shuffles");
  auto* sweep_opt = verify_cmd->add_option("--sweep", verify_sweep,
                                           "Exhaustive sweep over positions 1..N")
                        ->check(CLI::Range(1, 10));
  verify_cmd->add_option("--max-cells", verify_max_cells, "Cell guard for oracle checks");
  spec_opt->excludes(sweep_opt);

  RenderArgs render_args;
  auto* render_cmd = app.add_subcommand("render", "Write an SVG drawing");
  auto* region_opt = render_cmd->add_option("--region", render_args.region_path,
                                            "Region JSON file to draw");
  auto* patterns_opt = render_cmd->add_option(
      "--patterns", render_args.patterns_path,
      "JSON file with \"upper\" and \"lower\" patterns to glue and draw");
  render_cmd->add_option("--out", render_args.out_path, "Output SVG path")->required();
  render_cmd->add_option("--scale", render_args.scale, "Pixels per unit length");
  render_cmd->add_flag("--no-diagonal", render_args.hide_diagonal, "Skip the dashed diagonal");
  render_cmd->add_flag("--omit-dents", render_args.omit_dents,
                       "Leave dents empty instead of white");
  render_cmd->add_option("--palette", render_args.palette,
                         "Lozenge fills: vertical,left,right");
  region_opt->excludes(patterns_opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (count_cmd->parsed()) return run_count(count_args, out);
    if (enum_cmd->parsed()) return run_enumerate(enum_u, enum_limit, out);
    if (verify_cmd->parsed()) {
      if (!verify_spec_path.empty()) return run_verify_spec(verify_spec_path, verify_max_cells, out);
      if (verify_sweep > 0) return run_verify_sweep(verify_sweep, verify_max_cells, out);
      throw std::invalid_argument("verify needs --spec or --sweep");
    }
    if (render_cmd->parsed()) {
      if (render_args.region_path.empty() && render_args.patterns_path.empty())
        throw std::invalid_argument("render needs --region or --patterns");
      return run_render(render_args, out);
    }
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return kGuardExceeded;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace lozenge
