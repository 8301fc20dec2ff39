// Command-line front end: Kazhdan-Lusztig coefficients and polynomials of
// sparse paving matroids, tableau counts, bound reports, coefficient tables,
// and the formula-versus-engine verification sweep.
//
// Exit codes: 0 success, 2 input validation, 3 verification mismatch,
// 4 resource cap exceeded, 1 internal error.

#include "sparsekl/bounds.hpp"
#include "sparsekl/ch_document.hpp"
#include "sparsekl/exactmath.hpp"
#include "sparsekl/matroid_oracle.hpp"
#include "sparsekl/sparse_paving.hpp"
#include "sparsekl/tableaux.hpp"
#include "sparsekl/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace sparsekl;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitCap = 4;

struct GlobalOptions {
  std::string format = "text";  // text | json | csv
  std::uint64_t seed = 0;
  bool unchecked = false;
};

Integer parse_integer(const std::string& s) {
  try {
    return Integer(s);
  } catch (const std::exception&) {
    throw validation_error("not an integer: " + s);
  }
}

json poly_to_json(const IntPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a;
}

// Coefficients fit in 64 bits in every table/report this tool prints only
// when small; emit strings to keep the schema exact at any size.
std::string int_str(const Integer& v) { return v.str(); }

class Report {
 public:
  Report(std::string command, const GlobalOptions& opt) : opt_(opt) {
    body_["command"] = std::move(command);
    body_["inputs"] = json::object();
    body_["results"] = json::object();
    body_["pass"] = true;
    start_ = std::chrono::steady_clock::now();
  }

  json& inputs() { return body_["inputs"]; }
  json& results() { return body_["results"]; }
  void set_pass(bool ok) { body_["pass"] = ok; }

  // text_lines: human lines; csv_rows: header + rows of equal width
  void set_text(std::vector<std::string> lines) { text_ = std::move(lines); }
  void set_csv(std::vector<std::vector<std::string>> rows) { csv_ = std::move(rows); }

  void emit() {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
    body_["timing_ms"] = elapsed;
    if (opt_.format == "json") {
      std::cout << body_.dump(2) << "\n";
    } else if (opt_.format == "csv") {
      for (const auto& row : csv_) {
        for (std::size_t i = 0; i < row.size(); ++i)
          std::cout << (i ? "," : "") << row[i];
        std::cout << "\n";
      }
    } else {
      for (const auto& line : text_) std::cout << line << "\n";
    }
  }

 private:
  GlobalOptions opt_;
  json body_;
  std::vector<std::string> text_;
  std::vector<std::vector<std::string>> csv_;
  std::chrono::steady_clock::time_point start_;
};

struct KlQuery {
  int m = 0;
  int d = 0;
  Integer c;
  std::optional<ChDocument> doc;
};

KlQuery resolve_kl_inputs(const CLI::App* cmd, int m, int d, const std::string& c_str,
                          const std::string& ch_file) {
  KlQuery q;
  if (!ch_file.empty()) {
    q.doc = ChDocument::load(ch_file);
    const auto sp = q.doc->to_matroid();  // validates
    q.m = sp.m;
    q.d = sp.d;
    q.c = sp.ch_size();
  } else {
    if (cmd->count("--m") == 0 || cmd->count("--d") == 0)
      throw validation_error("need --m and --d (or --ch-file)");
    q.m = m;
    q.d = d;
    q.c = c_str.empty() ? Integer(0) : parse_integer(c_str);
  }
  return q;
}

int cmd_coeff(const GlobalOptions& opt, const CLI::App* cmd, int m, int d,
              const std::string& c_str, const std::string& ch_file, std::optional<int> i) {
  const auto q = resolve_kl_inputs(cmd, m, d, c_str, ch_file);
  Report report("coeff", opt);
  report.inputs() = {{"m", q.m}, {"d", q.d}, {"c", int_str(q.c)}};
  if (i) {
    const Integer v = paving::kl_coefficient(q.m, q.d, q.c, *i, opt.unchecked);
    report.inputs()["i"] = *i;
    report.results()["coefficient"] = int_str(v);
    report.set_text({int_str(v)});
    report.set_csv({{"m", "d", "c", "i", "coefficient"},
                    {std::to_string(q.m), std::to_string(q.d), int_str(q.c), std::to_string(*i),
                     int_str(v)}});
  } else {
    const auto p = paving::kl_polynomial(q.m, q.d, q.c, opt.unchecked);
    report.results()["coefficients"] = poly_to_json(p);
    report.set_text({p.str()});
    std::vector<std::vector<std::string>> rows = {{"m", "d", "c", "i", "coefficient"}};
    for (int k = 0; k <= p.degree(); ++k)
      rows.push_back({std::to_string(q.m), std::to_string(q.d), int_str(q.c), std::to_string(k),
                      int_str(p.coeff(k))});
    report.set_csv(std::move(rows));
  }
  report.emit();
  return kExitOk;
}

int cmd_skyt(const GlobalOptions& opt, int a, int i, int b, const std::string& method,
             bool enumerate, int cell_cap) {
  Report report("skyt", opt);
  report.inputs() = {{"a", a}, {"i", i}, {"b", b}, {"method", method}};

  const bool geometric = a >= 2 && b >= 2 && i >= 1;
  const Integer alt = tableaux::count_skyt(a, i, b);
  std::optional<Integer> positive;
  if (method == "positive" || method == "both") {
    // outside the geometric domain the conventions pin the value directly
    positive = geometric ? tableaux::count_skyt_positive(a, i, b) : alt;
  }

  bool consistent = true;
  std::vector<std::string> lines;
  json& res = report.results();
  if (method != "positive") {
    res["count"] = int_str(alt);
    lines.push_back(int_str(alt));
  }
  if (positive) {
    res["count_positive"] = int_str(*positive);
    if (method == "positive") lines.push_back(int_str(*positive));
    if (*positive != alt) consistent = false;
  }
  std::vector<std::vector<std::string>> rows = {{"a", "i", "b", "count"},
                                                {std::to_string(a), std::to_string(i),
                                                 std::to_string(b), int_str(alt)}};
  if (enumerate) {
    if (!geometric) throw validation_error("skyt: enumeration needs a,b >= 2 and i >= 1");
    if (cell_cap > tableaux::kDefaultCellCap)
      std::cerr << "skyt: cell cap raised above " << tableaux::kDefaultCellCap
                << "; enumeration time grows factorially\n";
    const auto fillings = tableaux::enumerate_skyt(a, i, b, cell_cap);
    res["enumerated"] = fillings.size();
    if (Integer(static_cast<long>(fillings.size())) != alt) consistent = false;
    json listing = json::array();
    for (const auto& f : fillings) listing.push_back(f.entries);
    res["fillings"] = std::move(listing);
    lines.push_back("enumerated " + std::to_string(fillings.size()) + " fillings:");
    for (const auto& f : fillings) {
      std::string line = " ";
      for (int v : f.entries) line += " " + std::to_string(v);
      lines.push_back(line);
    }
  }
  report.set_pass(consistent);
  report.set_text(std::move(lines));
  report.set_csv(std::move(rows));
  report.emit();
  if (!consistent) {
    std::cerr << "skyt: counting methods disagree\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_verify(const GlobalOptions& opt, int max_ground, int samples, bool inject_fault) {
  if (max_ground > verify::kOracleGroundCap)
    std::cerr << "verify: engine ground cap is " << verify::kOracleGroundCap
              << "; clamping (larger sweeps get slow quickly)\n";
  verify::SweepOptions vo;
  vo.max_ground = max_ground;
  vo.samples = samples;
  vo.seed = opt.seed;
  vo.inject_fault = inject_fault;
  verify::SweepStats stats;
  const auto mismatch = verify::formula_vs_engine_sweep(vo, &stats);

  Report report("verify", opt);
  report.inputs() = {{"max_ground", max_ground}, {"samples", samples}, {"seed", opt.seed},
                     {"inject_fault", inject_fault}};
  report.results()["instances"] = stats.instances;
  report.results()["exhaustive_instances"] = stats.exhaustive_instances;
  report.results()["sampled_instances"] = stats.sampled_instances;
  report.set_pass(!mismatch);
  if (mismatch) {
    report.results()["witness"] = json::parse(ChDocument::from_matroid(mismatch->instance).serialize());
    report.results()["quantity"] = mismatch->quantity;
    report.results()["formula"] = poly_to_json(mismatch->formula_value);
    report.results()["engine"] = poly_to_json(mismatch->engine_value);
    report.set_text({"FAIL: " + mismatch->describe()});
    report.set_csv({{"pass"}, {"0"}});
    report.emit();
    return kExitMismatch;
  }
  report.set_text({"pass: " + std::to_string(stats.instances) + " instances agree (" +
                   std::to_string(stats.exhaustive_instances) + " exhaustive, " +
                   std::to_string(stats.sampled_instances) + " sampled)"});
  report.set_csv({{"pass", "instances"}, {"1", std::to_string(stats.instances)}});
  report.emit();
  return kExitOk;
}

int cmd_bounds(const GlobalOptions& opt, int m, int d, bool exact) {
  const auto r = bounds::make_report(m, d, exact);
  Report report("bounds", opt);
  report.inputs() = {{"m", m}, {"d", d}, {"exact", exact}};
  json& res = report.results();
  res["coding_bound"] = int_str(r.coding);
  res["johnson_bound"] = int_str(r.johnson);
  res["best"] = int_str(r.best);
  std::vector<std::string> lines = {"coding  " + int_str(r.coding),
                                    "johnson " + int_str(r.johnson),
                                    "best    " + int_str(r.best)};
  std::vector<std::vector<std::string>> rows = {
      {"m", "d", "coding", "johnson", "best", "exact"},
      {std::to_string(m), std::to_string(d), int_str(r.coding), int_str(r.johnson),
       int_str(r.best), r.exact ? std::to_string(*r.exact) : ""}};
  if (r.exact) {
    res["exact"] = *r.exact;
    json wit = json::array();
    for (Mask c : r.witness) wit.push_back(mask_to_elements(c));
    res["witness"] = std::move(wit);
    lines.push_back("exact   " + std::to_string(*r.exact));
    std::string w = "witness";
    for (Mask c : r.witness) w += " " + mask_to_string(c);
    lines.push_back(w);
  }
  report.set_text(std::move(lines));
  report.set_csv(std::move(rows));
  report.emit();
  return kExitOk;
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  try {
    if (colon == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
  } catch (const std::exception&) {
    throw validation_error("bad range: " + s + " (expected LO:HI)");
  }
}

int cmd_table(const GlobalOptions& opt, const std::string& m_range, const std::string& d_range,
              const std::string& c_policy, const std::string& c_str) {
  const auto [m_lo, m_hi] = parse_range(m_range);
  const auto [d_lo, d_hi] = parse_range(d_range);
  if (m_lo < 0 || d_lo < 0 || m_hi < m_lo || d_hi < d_lo)
    throw validation_error("table: empty or negative range");
  if (c_policy != "zero" && c_policy != "max-bound" && c_policy != "explicit")
    throw validation_error("table: c policy must be zero, max-bound or explicit");
  if (c_policy == "explicit" && c_str.empty())
    throw validation_error("table: explicit c policy needs --c");

  Report report("table", opt);
  report.inputs() = {{"m_range", m_range}, {"d_range", d_range}, {"c_policy", c_policy}};
  json rows_json = json::array();
  std::vector<std::vector<std::string>> rows = {{"m", "d", "c", "i", "coefficient"}};
  for (int m = m_lo; m <= m_hi; ++m)
    for (int d = d_lo; d <= d_hi; ++d) {
      Integer c = 0;
      if (c_policy == "max-bound") c = bounds::best_bound(m, d);
      if (c_policy == "explicit") c = parse_integer(c_str);
      for (int i = 0; 2 * i < d || i == 0; ++i) {
        const Integer v = paving::kl_coefficient(m, d, c, i, /*unchecked=*/true);
        rows_json.push_back(
            {{"m", m}, {"d", d}, {"c", int_str(c)}, {"i", i}, {"coefficient", int_str(v)}});
        rows.push_back({std::to_string(m), std::to_string(d), int_str(c), std::to_string(i),
                        int_str(v)});
        if (2 * (i + 1) >= d) break;
      }
    }
  report.results()["rows"] = std::move(rows_json);
  std::vector<std::string> lines;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const auto& r = rows[k];
    lines.push_back("m=" + r[0] + " d=" + r[1] + " c=" + r[2] + " i=" + r[3] + " -> " + r[4]);
  }
  report.set_text(std::move(lines));
  report.set_csv(std::move(rows));
  report.emit();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sparsekl: exact Kazhdan-Lusztig polynomials of sparse paving matroids.\n"
      "Polynomials print as coefficient lists, lowest degree first."};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for randomized commands")->capture_default_str();
  app.add_flag("--unchecked", opt.unchecked,
               "Skip the family-size bound check and evaluate the formula anyway");

  int m = 0, d = 0, i_flag = -1;
  std::string c_str, ch_file;

  auto add_kl_inputs = [&](CLI::App* cmd) {
    auto* om = cmd->add_option("--m", m, "Corank");
    auto* od = cmd->add_option("--d", d, "Rank");
    auto* oc = cmd->add_option("--c", c_str, "Size of the circuit-hyperplane family");
    auto* of = cmd->add_option("--ch-file", ch_file, "JSON document with fields m, d, ch");
    of->excludes(om)->excludes(od)->excludes(oc);
    om->needs(od);
    od->needs(om);
  };

  auto* coeff = app.add_subcommand("coeff", "Kazhdan-Lusztig coefficient(s) of S_{m,d}(CH)");
  add_kl_inputs(coeff);
  coeff->add_option("--i", i_flag, "Single coefficient index (omit for the full polynomial)");

  auto* poly = app.add_subcommand("poly", "Full Kazhdan-Lusztig polynomial of S_{m,d}(CH)");
  add_kl_inputs(poly);

  int sa = 0, si = 0, sb = 0, cell_cap = tableaux::kDefaultCellCap;
  std::string method = "both";
  bool do_enumerate = false;
  auto* skyt = app.add_subcommand("skyt", "Count (and enumerate) skew tableau fillings");
  skyt->add_option("--a", sa, "Left column height")->required();
  skyt->add_option("--i", si, "Band width parameter")->required();
  skyt->add_option("--b", sb, "Right column height")->required();
  skyt->add_option("--method", method, "Counting formula(s) to run")
      ->check(CLI::IsMember({"alt", "positive", "both"}))
      ->capture_default_str();
  skyt->add_flag("--enumerate", do_enumerate, "Also enumerate the fillings");
  skyt->add_option("--cell-cap", cell_cap,
                   "Enumeration cell cap (raising it can be slow)")
      ->capture_default_str();

  int max_ground = verify::kExhaustiveGroundCap, samples = 50;
  bool inject_fault = false;
  auto* verify_cmd = app.add_subcommand("verify", "Formula vs brute-force engine sweep");
  verify_cmd->add_option("--max-ground", max_ground, "Largest ground set size")
      ->capture_default_str();
  verify_cmd->add_option("--samples", samples, "Random families per (m,d) beyond ground 7")
      ->capture_default_str();
  verify_cmd->add_flag("--inject-fault", inject_fault,
                       "Corrupt the formula side (mutation test of the sweep itself)");

  bool exact = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "Bounds on the circuit-hyperplane count");
  bounds_cmd->add_option("--m", m, "Corank")->required();
  bounds_cmd->add_option("--d", d, "Rank")->required();
  bounds_cmd->add_flag("--exact", exact, "Also solve J(m+d,d) exactly (small cases)");

  std::string m_range, d_range, c_policy = "zero";
  auto* table = app.add_subcommand("table", "Grid of Kazhdan-Lusztig coefficients");
  table->add_option("--m-range", m_range, "LO:HI")->required();
  table->add_option("--d-range", d_range, "LO:HI")->required();
  table->add_option("--c-policy", c_policy, "zero | max-bound | explicit")
      ->capture_default_str();
  table->add_option("--c", c_str, "Family size for the explicit policy");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (coeff->parsed())
      return cmd_coeff(opt, coeff, m, d, c_str, ch_file,
                       i_flag >= 0 ? std::optional<int>(i_flag) : std::nullopt);
    if (poly->parsed()) return cmd_coeff(opt, poly, m, d, c_str, ch_file, std::nullopt);
    if (skyt->parsed()) return cmd_skyt(opt, sa, si, sb, method, do_enumerate, cell_cap);
    if (verify_cmd->parsed()) return cmd_verify(opt, max_ground, samples, inject_fault);
    if (bounds_cmd->parsed()) return cmd_bounds(opt, m, d, exact);
    if (table->parsed()) return cmd_table(opt, m_range, d_range, c_policy, c_str);
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
