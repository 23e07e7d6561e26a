// Command-line front end: table emission and verification suites.
//
//   eulerid numbers   --max-degree N
//   eulerid poly      --max-degree N [--modulus d --char-index i]
//   eulerid chars     --modulus d
//   eulerid twisted   --modulus d --char-index i --max-degree N [--level n]
//   eulerid fermionic --p p --level N --max-degree n
//   eulerid verify    --suite NAME [grid overrides]
//
// Every subcommand accepts --format json|csv and --output PATH.
// Exit codes: 0 success, 1 some certificate did not pass, 2 rejected input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eulerid/eulerid.hpp"

namespace {

using eulerid::Json;

constexpr int kExitFailedCertificates = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  std::optional<unsigned> modulus;
  unsigned max_degree = 10;
  std::optional<unsigned> max_degree_override;
  std::optional<unsigned> char_index;
  std::optional<unsigned> prime;
  std::optional<unsigned> level;
  std::optional<unsigned> w1;
  std::optional<unsigned> w2;
  std::optional<std::string> x;
  std::string suite = "all";
  std::string characters = "all";
  std::string format = "json";
  std::string output;
};

// A table is emitted either as JSON {"kind", "params", "rows"} or CSV.
struct Table {
  std::string kind;
  Json params = Json::object();
  std::vector<std::string> columns;
  std::vector<Json> rows;  // objects keyed by column
};

std::string csv_cell(const Json& v) {
  std::string s;
  if (v.is_string()) s = v.get<std::string>();
  else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + csv_cell(v[i]);
  } else if (v.is_object() && v.contains("order") && v.contains("coeffs")) {
    s = v.get<eulerid::CyclotomicNumber>().to_string();
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return s;
}

std::string render_table(const Table& t, const std::string& format) {
  if (format == "json") {
    Json j{{"kind", t.kind}, {"params", t.params}, {"rows", t.rows}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_cell(row.at(t.columns[i]));
    os << "\n";
  }
  return os.str();
}

std::string render_report(const eulerid::Report& report, const std::string& format) {
  if (format == "json") return Json(report).dump(2) + "\n";
  std::ostringstream os;
  os << "suite,theorem,params,status,first_mismatch\n";
  for (const auto& run : report.runs)
    for (const auto& c : run.certificates)
      os << run.suite << "," << c.theorem << "," << csv_cell(c.params.dump()) << "," << eulerid::to_string(c.status)
         << "," << csv_cell(c.first_mismatch.is_null() ? std::string() : c.first_mismatch.dump()) << "\n";
  return os.str();
}

void require_even_modulus(const RunConfig& cfg) {
  if (!cfg.modulus) throw UsageError("--modulus is required");
  if (*cfg.modulus < 2 || *cfg.modulus % 2) throw UsageError("--modulus must be an even integer >= 2");
}

eulerid::DirichletCharacter selected_character(const RunConfig& cfg) {
  require_even_modulus(cfg);
  const unsigned index = cfg.char_index.value_or(0);
  const unsigned count = eulerid::euler_phi(*cfg.modulus);
  if (index >= count)
    throw UsageError("--char-index must be below phi(" + std::to_string(*cfg.modulus) + ") = " + std::to_string(count));
  return eulerid::character_at(*cfg.modulus, index);
}

Table numbers_table(const RunConfig& cfg) {
  Table t{"numbers", {{"max_degree", cfg.max_degree}}, {"n", "bernoulli", "euler", "genocchi"}, {}};
  for (unsigned n = 0; n <= cfg.max_degree; ++n)
    t.rows.push_back(Json{{"n", n},
                          {"bernoulli", eulerid::bernoulli_number(n)},
                          {"euler", eulerid::euler_number(n)},
                          {"genocchi", eulerid::genocchi_number(n)}});
  return t;
}

Table poly_table(const RunConfig& cfg) {
  Table t{"poly", {{"max_degree", cfg.max_degree}}, {"n", "bernoulli", "euler", "genocchi"}, {}};
  std::optional<eulerid::DirichletCharacter> chi;
  if (cfg.modulus) {
    chi = selected_character(cfg);
    t.params["modulus"] = chi->modulus();
    t.params["char_index"] = chi->index();
    t.columns.push_back("gen_euler");
  }
  for (unsigned n = 0; n <= cfg.max_degree; ++n) {
    Json row{{"n", n},
             {"bernoulli", eulerid::bernoulli_poly(n)},
             {"euler", eulerid::euler_poly(n)},
             {"genocchi", eulerid::genocchi_poly(n)}};
    if (chi) row["gen_euler"] = eulerid::gen_euler_poly(n, *chi).poly;
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table chars_table(const RunConfig& cfg) {
  if (!cfg.modulus || *cfg.modulus < 1) throw UsageError("--modulus must be a positive integer");
  Table t{"chars",
          {{"modulus", *cfg.modulus}},
          {"index", "conductor", "parity", "principal", "primitive", "exponents", "values"},
          {}};
  for (const auto& chi : eulerid::enumerate_characters(*cfg.modulus)) {
    t.rows.push_back(Json{{"index", chi.index()},
                          {"conductor", chi.conductor()},
                          {"parity", chi.parity()},
                          {"principal", chi.is_principal()},
                          {"primitive", chi.is_primitive()},
                          {"exponents", chi.exponents()},
                          {"values", chi.values()}});
  }
  return t;
}

Table twisted_table(const RunConfig& cfg) {
  const auto chi = selected_character(cfg);
  const unsigned level = cfg.level.value_or(1);
  if (level < 1) throw UsageError("--level must be at least 1");
  const unsigned long long upper = static_cast<unsigned long long>(chi.modulus()) * level - 1;
  Table t{"twisted",
          {{"modulus", chi.modulus()},
           {"char_index", chi.index()},
           {"conductor", chi.conductor()},
           {"max_degree", cfg.max_degree},
           {"power_sum_upper_limit", upper}},
          {"n", "gen_euler", "gen_genocchi", "power_sum"},
          {}};
  for (unsigned n = 0; n <= cfg.max_degree; ++n)
    t.rows.push_back(Json{{"n", n},
                          {"gen_euler", eulerid::gen_euler_poly(n, chi).poly},
                          {"gen_genocchi", eulerid::gen_genocchi_poly(n, chi).poly},
                          {"power_sum", eulerid::twisted_power_sum(n, chi, upper)}});
  return t;
}

void require_odd_prime(unsigned p) {
  if (p % 2 == 0 || !eulerid::is_prime(p)) throw UsageError("--p must be an odd prime");
}

Table fermionic_table(const RunConfig& cfg) {
  const unsigned p = cfg.prime.value_or(3);
  require_odd_prime(p);
  const unsigned max_level = cfg.level.value_or(3);
  if (max_level < 1) throw UsageError("--level must be at least 1");
  Table t{"fermionic",
          {{"p", p}, {"max_degree", cfg.max_degree}, {"max_level", max_level}},
          {"p", "n", "N", "partial_sum", "euler", "valuation"},
          {}};
  for (unsigned n = 0; n <= cfg.max_degree; ++n)
    for (const auto& row : eulerid::valuation_table(p, n, max_level))
      t.rows.push_back(Json{{"p", row.prime},
                            {"n", row.degree},
                            {"N", row.level},
                            {"partial_sum", row.partial},
                            {"euler", row.euler},
                            {"valuation", eulerid::to_string(row.valuation)}});
  return t;
}

eulerid::SuiteOptions suite_options(const RunConfig& cfg) {
  eulerid::SuiteOptions o;
  const bool moduli_matter = cfg.suite == "all" || cfg.suite.starts_with("theorem") || cfg.suite == "eq17";
  if (cfg.modulus) {
    if (moduli_matter) require_even_modulus(cfg);
    o.modulus = cfg.modulus;
  }
  if (cfg.char_index) {
    if (!cfg.modulus) throw UsageError("--char-index requires --modulus");
    selected_character(cfg);
    o.char_index = cfg.char_index;
  }
  if (cfg.prime) require_odd_prime(*cfg.prime);
  if (cfg.w1 && *cfg.w1 < 1) throw UsageError("--w1 must be positive");
  if (cfg.w2 && *cfg.w2 < 1) throw UsageError("--w2 must be positive");
  if (cfg.level && *cfg.level < 1) throw UsageError("--level must be at least 1");
  if (cfg.x) {
    try {
      o.x = eulerid::Rational::parse(*cfg.x);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--x: ") + e.what());
    }
  }
  o.max_degree = cfg.max_degree_override;
  o.prime = cfg.prime;
  o.level = cfg.level;
  o.w1 = cfg.w1;
  o.w2 = cfg.w2;
  o.characters = eulerid::character_selection_from_string(cfg.characters);
  return o;
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw UsageError("cannot write output path: " + cfg.output);
  out << text;
  if (!out) throw UsageError("cannot write output path: " + cfg.output);
}

int dispatch(const RunConfig& cfg) {
  if (cfg.subcommand == "verify") {
    const auto options = suite_options(cfg);
    // Probe the output path before spending time on the grids.
    if (!cfg.output.empty() && cfg.output != "-") {
      std::ofstream probe(cfg.output, std::ios::app);
      if (!probe) throw UsageError("cannot write output path: " + cfg.output);
    }
    const auto report = eulerid::run_report(cfg.suite, options);
    write_output(cfg, render_report(report, cfg.format));
    std::cerr << report.count(eulerid::Status::pass) << "/" << report.total() << " certificates passed\n";
    return report.all_passed() ? 0 : kExitFailedCertificates;
  }
  Table t;
  if (cfg.subcommand == "numbers") t = numbers_table(cfg);
  else if (cfg.subcommand == "poly") t = poly_table(cfg);
  else if (cfg.subcommand == "chars") t = chars_table(cfg);
  else if (cfg.subcommand == "twisted") t = twisted_table(cfg);
  else if (cfg.subcommand == "fermionic") t = fermionic_table(cfg);
  else throw UsageError("unknown subcommand");
  write_output(cfg, render_table(t, cfg.format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Bernoulli/Euler/Genocchi tables and identity verification"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", cfg.output, "Output path (default: stdout)");
  };
  auto add_max_degree = [&](CLI::App* sub) {
    sub->add_option_function<unsigned>(
        "--max-degree",
        [&](const unsigned& v) {
          cfg.max_degree = v;
          cfg.max_degree_override = v;
        },
        "Largest degree");
  };

  auto* numbers = app.add_subcommand("numbers", "B_n, E_n, G_n tables");
  add_max_degree(numbers);
  add_common(numbers);

  auto* poly = app.add_subcommand("poly", "Coefficient vectors of B_n(x), E_n(x), G_n(x) and optionally E_{n,chi}(x)");
  add_max_degree(poly);
  poly->add_option("--modulus", cfg.modulus, "Even character modulus");
  poly->add_option("--char-index", cfg.char_index, "Character index (see `chars`)");
  add_common(poly);

  auto* chars = app.add_subcommand("chars", "Enumerate Dirichlet characters modulo d");
  chars->add_option("--modulus", cfg.modulus, "Modulus")->required();
  add_common(chars);

  auto* twisted = app.add_subcommand("twisted", "E_{n,chi}, G_{n,chi} and T_{n,chi}(d*level - 1) tables");
  twisted->add_option("--modulus", cfg.modulus, "Even character modulus")->required();
  twisted->add_option("--char-index", cfg.char_index, "Character index (default 0)");
  twisted->add_option("--level", cfg.level, "Power sums run up to d*level - 1 (default 1)");
  add_max_degree(twisted);
  add_common(twisted);

  auto* fermionic = app.add_subcommand("fermionic", "Valuation table of fermionic partial sums");
  fermionic->add_option("--p", cfg.prime, "Odd prime (default 3)");
  fermionic->add_option("--level", cfg.level, "Largest level N (default 3)");
  add_max_degree(fermionic);
  add_common(fermionic);

  auto* verify = app.add_subcommand("verify", "Run verification suites and emit a certificate report");
  std::vector<std::string> suites = eulerid::suite_names();
  suites.push_back("all");
  verify->add_option("--suite", cfg.suite, "Suite name (default all)")->check(CLI::IsMember(suites));
  verify->add_option("--modulus", cfg.modulus, "Restrict the grid to one even modulus");
  add_max_degree(verify);
  verify->add_option("--char-index", cfg.char_index, "Restrict to one character (needs --modulus)");
  verify->add_option("--p", cfg.prime, "Restrict fermionic grid to one odd prime");
  verify->add_option("--level", cfg.level, "Largest level / shift count");
  verify->add_option("--w1", cfg.w1, "Restrict theorem5 grid to one w1");
  verify->add_option("--w2", cfg.w2, "Restrict theorem5 grid to one w2");
  verify->add_option("--x", cfg.x, "Restrict theorem5 grid to one rational x, e.g. 1/2");
  verify->add_option("--characters", cfg.characters, "Character selection: all | nonprincipal | primitive")
      ->check(CLI::IsMember({"all", "nonprincipal", "primitive"}));
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    return dispatch(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const eulerid::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
