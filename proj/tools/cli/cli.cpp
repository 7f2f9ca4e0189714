#include "cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "birat/birat.hpp"
#include "json.hpp"

namespace birat::cli {
namespace {

using json = nlohmann::json;

struct Setup {
  Field field;
  TermOrder order;
  std::vector<UniPoly> polys;
};

// Parses field, order and polynomials; failures become usage errors.
std::optional<Setup> prepare(const RunConfig& cfg, const std::vector<std::string>& texts,
                             Outcome& outcome) {
  try {
    const Field field = Field::parse(cfg.field);
    const auto order = TermOrder::parse(cfg.order);
    if (!order) {
      throw Error(ErrorCode::kSyntaxError,
                  "unknown term order '" + cfg.order + "' (expected degrevlex or lex)");
    }
    if (texts.empty()) {
      throw Error(ErrorCode::kSyntaxError, "no input polynomials");
    }
    Setup setup{field, *order, {}};
    for (std::size_t i = 0; i < texts.size(); ++i) {
      try {
        setup.polys.push_back(parse_poly(texts[i], field));
      } catch (const Error& e) {
        throw Error(e.code(), "f" + std::to_string(i + 1) + " \"" + texts[i] + "\": " + e.what());
      }
    }
    return setup;
  } catch (const Error& e) {
    outcome.exit_code = kExitUsage;
    outcome.err = std::string("error: ") + e.what() + "\n";
    return std::nullopt;
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return static_cast<double>(us) / 1000.0;
}

std::string format_ms(double ms) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << ms;
  return os.str();
}

std::vector<std::string> format_basis(const GroebnerBasis& basis, FormatStyle style) {
  std::vector<std::string> out;
  for (const auto& h : basis.elements) out.push_back(format_poly(h, basis.order, style));
  return out;
}

std::vector<std::string> format_inputs(const std::vector<UniPoly>& polys) {
  std::vector<std::string> out;
  for (const auto& f : polys) out.push_back(format_poly(f));
  return out;
}

json staircase_json(const Staircase& st) {
  if (st.is_finite()) return *st.count;
  return "infinite";
}

std::string staircase_text(const Staircase& st) {
  return st.is_finite() ? std::to_string(*st.count) : "infinite";
}

void print_header(std::ostream& os, const Setup& setup) {
  os << "field: " << setup.field.to_string() << "\n";
  os << "order: " << to_string(setup.order) << "\n";
  for (std::size_t i = 0; i < setup.polys.size(); ++i) {
    os << "f" << i + 1 << " = " << format_poly(setup.polys[i]) << "\n";
  }
}

void print_divided_differences(std::ostream& os, const std::vector<BiPoly>& gs,
                               const TermOrder& order) {
  for (std::size_t i = 0; i < gs.size(); ++i) {
    os << "g" << i + 1 << " = " << format_poly(gs[i], order) << "\n";
  }
}

void print_basis(std::ostream& os, const GroebnerBasis& basis) {
  os << "basis (monic):\n";
  for (const auto& line : format_basis(basis, FormatStyle::kMonic)) os << "  " << line << "\n";
  os << "basis (integer-primitive):\n";
  for (const auto& line : format_basis(basis, FormatStyle::kIntegerPrimitive)) {
    os << "  " << line << "\n";
  }
}

}  // namespace

Outcome run_classify(const RunConfig& cfg, const std::vector<std::string>& texts) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  auto setup = prepare(cfg, texts, outcome);
  if (!setup) return outcome;

  const ProblemInstance inst(setup->polys, setup->order);
  Verdict verdict;
  try {
    verdict = classify(inst);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDegenerateImage) throw;
    outcome.exit_code = kExitDegenerate;
    outcome.err = std::string("error: ") + e.what() + "\n";
    return outcome;
  }
  const double ms = elapsed_ms(start);

  if (cfg.json) {
    json report;
    report["classification"] = to_string(verdict.classification);
    report["basis_monic"] = format_basis(verdict.basis, FormatStyle::kMonic);
    report["basis_primitive"] = format_basis(verdict.basis, FormatStyle::kIntegerPrimitive);
    report["staircase"] = staircase_json(verdict.staircase);
    report["am_check"] = verdict.am_check ? json(to_string(*verdict.am_check)) : json(nullptr);
    report["inputs"] = format_inputs(setup->polys);
    report["order"] = cfg.order;
    report["field"] = setup->field.to_string();
    report["reasons"] = verdict.reason_codes;
    report["elapsed_ms"] = ms;
    report["version"] = kVersion;
    outcome.out = report.dump(2) + "\n";
    return outcome;
  }

  std::ostringstream os;
  print_header(os, *setup);
  print_divided_differences(os, inst.divided_differences(), setup->order);
  os << "classification: " << display_name(verdict.classification) << "\n";
  if (verdict.classification == Classification::kIsomorphism) {
    os << "note: isomorphism holds over the algebraic closure of " << setup->field.to_string()
       << "\n";
  }
  os << "staircase: " << staircase_text(verdict.staircase) << "\n";
  if (verdict.am_check) os << "am_check: " << to_string(*verdict.am_check) << "\n";
  os << "reasons:";
  for (const auto& r : verdict.reason_codes) os << " " << r;
  os << "\n";
  if (cfg.show_basis) print_basis(os, verdict.basis);
  os << "elapsed_ms: " << format_ms(ms) << "\n";
  os << "version: " << kVersion << "\n";
  outcome.out = os.str();
  return outcome;
}

Outcome run_gb(const RunConfig& cfg, const std::vector<std::string>& texts) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  auto setup = prepare(cfg, texts, outcome);
  if (!setup) return outcome;

  const ProblemInstance inst(setup->polys, setup->order);
  const std::vector<BiPoly> gs = inst.divided_differences();
  const bool all_zero =
      std::all_of(gs.begin(), gs.end(), [](const BiPoly& g) { return g.is_zero(); });
  if (all_zero) {
    outcome.exit_code = kExitDegenerate;
    outcome.err = "error: degenerate image (point): every divided difference is zero\n";
    return outcome;
  }
  const GroebnerBasis basis = reduced_groebner_basis({gs, setup->order});
  const Staircase staircase = staircase_dimension(basis);
  const double ms = elapsed_ms(start);

  if (cfg.json) {
    json report;
    std::vector<std::string> g_text;
    for (const auto& g : gs) g_text.push_back(format_poly(g, setup->order));
    report["inputs"] = format_inputs(setup->polys);
    report["divided_differences"] = g_text;
    report["basis_monic"] = format_basis(basis, FormatStyle::kMonic);
    report["basis_primitive"] = format_basis(basis, FormatStyle::kIntegerPrimitive);
    report["staircase"] = staircase_json(staircase);
    report["order"] = cfg.order;
    report["field"] = setup->field.to_string();
    report["elapsed_ms"] = ms;
    report["version"] = kVersion;
    outcome.out = report.dump(2) + "\n";
    return outcome;
  }

  std::ostringstream os;
  print_header(os, *setup);
  print_divided_differences(os, gs, setup->order);
  print_basis(os, basis);
  os << "staircase: " << staircase_text(staircase) << "\n";
  os << "elapsed_ms: " << format_ms(ms) << "\n";
  os << "version: " << kVersion << "\n";
  outcome.out = os.str();
  return outcome;
}

Outcome run_divdiff(const RunConfig& cfg, const std::vector<std::string>& texts) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  auto setup = prepare(cfg, texts, outcome);
  if (!setup) return outcome;

  struct Row {
    std::string f, g, diagonal, derivative;
    bool ok;
  };
  std::vector<Row> rows;
  for (const auto& f : setup->polys) {
    const BiPoly g = divided_difference(f);
    const UniPoly diag = substitute_diagonal(g);
    const UniPoly df = derivative(f);
    rows.push_back({format_poly(f), format_poly(g, setup->order), format_poly(diag, 's'),
                    format_poly(df, 's'), diag == df});
  }
  const double ms = elapsed_ms(start);

  if (cfg.json) {
    json report;
    report["inputs"] = json::array();
    report["divided_differences"] = json::array();
    report["diagonal"] = json::array();
    report["derivatives"] = json::array();
    report["diagonal_check"] = json::array();
    for (const auto& row : rows) {
      report["inputs"].push_back(row.f);
      report["divided_differences"].push_back(row.g);
      report["diagonal"].push_back(row.diagonal);
      report["derivatives"].push_back(row.derivative);
      report["diagonal_check"].push_back(row.ok);
    }
    report["order"] = cfg.order;
    report["field"] = setup->field.to_string();
    report["elapsed_ms"] = ms;
    report["version"] = kVersion;
    outcome.out = report.dump(2) + "\n";
    return outcome;
  }

  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string n = std::to_string(i + 1);
    os << "f" << n << " = " << rows[i].f << "\n";
    os << "g" << n << " = " << rows[i].g << "\n";
    os << "g" << n << "(s,s) = " << rows[i].diagonal << "\n";
    os << "f" << n << "'(s) = " << rows[i].derivative << "\n";
    os << "diagonal check: " << (rows[i].ok ? "ok" : "FAILED") << "\n";
  }
  os << "elapsed_ms: " << format_ms(ms) << "\n";
  outcome.out = os.str();
  return outcome;
}

namespace {

Outcome run_one(const RunConfig& cfg, const std::vector<std::string>& polys) {
  try {
    switch (cfg.command) {
      case Command::kClassify: return run_classify(cfg, polys);
      case Command::kGb: return run_gb(cfg, polys);
      case Command::kDivdiff: return run_divdiff(cfg, polys);
    }
  } catch (const Error& e) {
    return {kExitUsage, {}, std::string("error: ") + e.what() + "\n"};
  }
  return {kExitUsage, {}, "error: unknown command\n"};
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string strip_trailing_newline(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

Outcome run_batch(const RunConfig& cfg) {
  std::ifstream in(*cfg.file);
  if (!in) return {kExitUsage, {}, "error: cannot open input file '" + *cfg.file + "'\n"};

  Outcome total;
  std::ostringstream out, err;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;

    std::vector<std::string> polys;
    std::stringstream fields(body);
    std::string piece;
    while (std::getline(fields, piece, ';')) polys.push_back(trim(piece));

    const Outcome one = run_one(cfg, polys);
    total.exit_code = std::max(total.exit_code, one.exit_code);
    if (!one.err.empty()) err << "line " << line_no << ": " << one.err;

    if (cfg.json) {
      if (one.exit_code == kExitOk) {
        out << json::parse(one.out).dump() << "\n";
      } else {
        json failure;
        failure["line"] = line_no;
        failure["exit_code"] = one.exit_code;
        failure["error"] = strip_trailing_newline(one.err);
        out << failure.dump() << "\n";
      }
    } else {
      out << "== line " << line_no << " ==\n";
      out << (one.exit_code == kExitOk ? one.out : one.err);
    }
  }
  total.out = out.str();
  total.err = err.str();
  return total;
}

}  // namespace

Outcome run(const RunConfig& cfg) {
  const bool has_args = !cfg.polys.empty();
  const bool has_file = cfg.file.has_value();
  if (has_args == has_file) {
    return {kExitUsage, {},
            "error: give either polynomial arguments or --file, not both or neither\n"};
  }
  if (has_file) return run_batch(cfg);
  return run_one(cfg, cfg.polys);
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide birationality and isomorphism of polynomial curve parametrizations"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  RunConfig cfg;
  std::string file;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.field, "Coefficient field: Q or F<p> (e.g. F101)")
        ->capture_default_str();
    sub->add_option("--order", cfg.order, "Term order on k[s,t]: degrevlex or lex (s < t)")
        ->capture_default_str();
    sub->add_flag("--json", cfg.json, "Emit a JSON report");
    sub->add_option("--file", file,
                    "Batch input: one instance per line, polynomials separated by ';'");
    sub->add_option("polys", cfg.polys, "Polynomials in t, e.g. \"t^3\" \"t^2 + t\"");
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "Classify the parametrization");
  add_common(classify_cmd);
  classify_cmd->add_flag("--show-basis", cfg.show_basis, "Print the reduced Groebner basis");
  CLI::App* gb_cmd =
      app.add_subcommand("gb", "Print the divided differences and their reduced basis");
  add_common(gb_cmd);
  gb_cmd->add_flag("--show-basis", cfg.show_basis, "Accepted for symmetry; always on");
  CLI::App* dd_cmd = app.add_subcommand("divdiff", "Print divided differences and diagonals");
  add_common(dd_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests are ParseErrors with exit code 0.
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (classify_cmd->parsed()) {
    cfg.command = Command::kClassify;
  } else if (gb_cmd->parsed()) {
    cfg.command = Command::kGb;
  } else {
    cfg.command = Command::kDivdiff;
  }
  if (!file.empty()) cfg.file = file;

  const Outcome outcome = run(cfg);
  out << outcome.out;
  err << outcome.err;
  return outcome.exit_code;
}

}  // namespace birat::cli
