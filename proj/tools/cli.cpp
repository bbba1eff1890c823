#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "ratcensus/analysis.hpp"
#include "ratcensus/census.hpp"
#include "ratcensus/contfrac.hpp"
#include "ratcensus/errors.hpp"
#include "ratcensus/fourplat.hpp"
#include "ratcensus/rdecomp.hpp"
#include "ratcensus/table_cache.hpp"

namespace ratcensus::cli {

namespace {

using nlohmann::json;

constexpr int kDigits = 12;

// Raised when the mathematics disagrees with itself; maps to exit code 2.
struct VerificationFailure {
  std::string output;
};

enum class Format { csv, json, md };

struct CommandConfig {
  Format format = Format::csv;
  std::string out_path;
  std::string cache_dir;
};

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", kDigits, v);
  return buf;
}

std::string joined(std::span<const std::int64_t> values, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(values[i]);
  }
  return s;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("n-range must look like A:B, got '" + text + "'");
  int first = 0;
  int last = 0;
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    first = std::stoi(text.substr(0, colon), &used_a);
    last = std::stoi(text.substr(colon + 1), &used_b);
    if (used_a != colon || used_b != text.size() - colon - 1) throw std::invalid_argument(text);
  } catch (const std::logic_error&) {
    throw InputError("malformed n-range '" + text + "'");
  }
  if (first < 2 || first > last) throw InputError("n-range needs 2 <= A <= B, got '" + text + "'");
  return {first, last};
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("malformed integer list '" + text + "'");
    }
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

LinkKind parse_kind(const std::string& s) { return s == "knot" ? LinkKind::knot : LinkKind::link; }

class Tables {
 public:
  explicit Tables(const std::string& cache_dir) {
    if (!cache_dir.empty()) cache_.emplace(cache_dir);
  }

  CountTable get(TableKind kind, int max_n) const {
    return cache_ ? cache_->obtain(kind, max_n) : make_table(kind, max_n);
  }

 private:
  std::optional<TableCache> cache_;
};

// ---- cf --------------------------------------------------------------------

std::string cf_record(const Fraction& f, const CFVector& v, Format format) {
  if (format == Format::json) {
    return json{{"p", f.p()}, {"q", f.q()}, {"vector", std::vector<std::int64_t>(v.entries().begin(), v.entries().end())}}
               .dump(2) + "\n";
  }
  return "p,q,vector\n" + std::to_string(f.p()) + "," + std::to_string(f.q()) + ",\"" +
         joined(v.entries()) + "\"\n";
}

// ---- diagram ---------------------------------------------------------------

std::string diagram_info(const std::string& vector_text, const std::string& orient, Format format) {
  const CFVector v = CFVector::parse(vector_text);
  const Fraction f = evaluate(v);
  const FourPlatDiagram d =
      build(v, orient == "rev" ? SecondComponent::reversed : SecondComponent::forward);
  const SeifertData sd = seifert_decompose(d);
  const SignedVectorType sv = signed_vector_and_type(d);
  if (format == Format::json) {
    return json{{"vector", std::vector<std::int64_t>(v.entries().begin(), v.entries().end())},
                {"p", f.p()},
                {"q", f.q()},
                {"c", sd.c},
                {"s", sd.s},
                {"mu", sd.mu},
                {"genus", sd.genus},
                {"signed_vector", sv.signed_entries},
                {"type", to_string(sv.type)}}
               .dump(2) + "\n";
  }
  std::ostringstream os;
  os << "vector,p,q,c,s,mu,genus,signed_vector,type\n"
     << '"' << joined(v.entries()) << "\"," << f.p() << ',' << f.q() << ',' << sd.c << ','
     << sd.s << ',' << sd.mu << ',' << sd.genus << ",\"" << joined(sv.signed_entries) << "\","
     << to_string(sv.type) << '\n';
  return os.str();
}

// ---- census ----------------------------------------------------------------

std::string census_count(int n, int s, const std::string& which, Format format) {
  const BigInt v = which == "r" ? count_r(n, s) : which == "rs" ? count_rs(n, s) : count_lambda(n, s);
  if (format == Format::json) {
    return json{{"n", n}, {"s", s}, {"which", which}, {"count", v.get_str()}}.dump(2) + "\n";
  }
  return v.get_str() + "\n";
}

std::string census_genus(int n, int g, const std::string& kind, Format format) {
  const BigInt v = kind == "knot" ? psi(n, g) : phi(n, g);
  if (format == Format::json) {
    return json{{"n", n}, {"g", g}, {"kind", kind}, {"count", v.get_str()}}.dump(2) + "\n";
  }
  return v.get_str() + "\n";
}

struct AvgRow {
  int n;
  BigInt total;
  Rational avg;
};

std::vector<AvgRow> average_rows(LinkKind kind, int first, int last, const Tables& tables) {
  const TableKind tk = kind == LinkKind::knot ? TableKind::Psi : TableKind::Phi;
  const CountTable table = tables.get(tk, last);
  std::vector<AvgRow> rows;
  for (int n = std::max(first, table_min_n(tk)); n <= last; ++n) {
    const BigInt total = kind == LinkKind::knot ? rk_total(n) : rl_total(n);
    if (total == 0) continue;
    BigInt weighted = 0;
    const auto [lo, hi] = table_index_range(tk, n);
    for (int g = lo; g <= hi; ++g) weighted += g * table.at(n, g);
    Rational avg(weighted, total);
    avg.canonicalize();
    rows.push_back({n, total, avg});
  }
  return rows;
}

std::string census_avg(const std::string& kind, const std::string& range, Format format,
                       const Tables& tables) {
  const auto [first, last] = parse_range(range);
  const auto rows = average_rows(parse_kind(kind), first, last, tables);
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n},
                     {"count_total", r.total.get_str()},
                     {"avg_exact_num", r.avg.get_num().get_str()},
                     {"avg_exact_den", r.avg.get_den().get_str()},
                     {"avg_decimal", to_decimal(r.avg, kDigits)}});
    }
    return json{{"kind", kind}, {"rows", arr}}.dump(2) + "\n";
  }
  std::ostringstream os;
  if (format == Format::md) {
    os << "| n | count_total | avg_exact | avg_decimal |\n|---|---|---|---|\n";
    for (const auto& r : rows) {
      os << "| " << r.n << " | " << r.total.get_str() << " | " << r.avg.get_str() << " | "
         << to_decimal(r.avg, kDigits) << " |\n";
    }
    return os.str();
  }
  os << "n,count_total,avg_exact_num,avg_exact_den,avg_decimal\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.total.get_str() << ',' << r.avg.get_num().get_str() << ','
       << r.avg.get_den().get_str() << ',' << to_decimal(r.avg, kDigits) << '\n';
  }
  return os.str();
}

std::string census_table(const std::string& name, int max_n, Format format, const Tables& tables) {
  if (max_n < 2) throw InputError("--max-n must be at least 2");
  const TableKind kind = name == "t1" ? TableKind::R : name == "t2" ? TableKind::RS : TableKind::Lambda;
  const CountTable table = tables.get(kind, max_n);
  const int step = kind == TableKind::RS ? 2 : 1;

  std::ostringstream os;
  if (format == Format::csv) {
    os << "n,s,count,kind\n";
    for (int n = 2; n <= max_n; ++n) {
      for (int s = 2; s <= n; s += step) {
        os << n << ',' << s << ',' << table.at(n, s).get_str() << ',' << to_string(kind_of(n, s)) << '\n';
      }
    }
    return os.str();
  }
  if (format == Format::json) {
    json rows = json::array();
    json totals = json::object();
    for (int n = 2; n <= max_n; ++n) {
      BigInt total = 0;
      for (int s = 2; s <= n; s += step) {
        rows.push_back({{"n", n}, {"s", s}, {"count", table.at(n, s).get_str()}, {"kind", to_string(kind_of(n, s))}});
        total += table.at(n, s);
      }
      totals[std::to_string(n)] = total.get_str();
    }
    return json{{"name", name}, {"max_n", max_n}, {"rows", rows}, {"totals", totals}}.dump(2) + "\n";
  }
  // markdown grid; links in bold
  os << "| n \\ s |";
  for (int s = 2; s <= max_n; s += step) os << ' ' << s << " |";
  os << " total |\n|---|";
  for (int s = 2; s <= max_n; s += step) os << "---|";
  os << "---|\n";
  for (int n = 2; n <= max_n; ++n) {
    BigInt total = 0;
    os << "| " << n << " |";
    for (int s = 2; s <= max_n; s += step) {
      const BigInt v = s > n ? BigInt(0) : table.at(n, s);
      if (v == 0) {
        os << " |";
        continue;
      }
      total += v;
      const bool bold = kind_of(n, s) == LinkKind::link;
      os << ' ' << (bold ? "**" : "") << v.get_str() << (bold ? "**" : "") << " |";
    }
    os << ' ' << total.get_str() << " |\n";
  }
  return os.str();
}

// ---- verify ----------------------------------------------------------------

std::string verify_oracle(int max_n, Format format) {
  if (max_n < 2) throw InputError("--max-n must be at least 2");
  int mismatches = 0;
  json rows = json::array();
  std::ostringstream os;
  os << "n,s,oracle_r,formula_r,oracle_rs,formula_rs,status\n";
  for (int n = 2; n <= max_n; ++n) {
    for (int s = 2; s <= n; ++s) {
      const BigInt oracle_r = oracle_count(n, s);
      const BigInt formula_r = count_r(n, s);
      const BigInt oracle_rs = oracle_symmetric_count(n, s);
      const BigInt formula_rs = count_rs(n, s);
      const bool same = oracle_r == formula_r && oracle_rs == formula_rs;
      mismatches += !same;
      const char* status = same ? "ok" : "MISMATCH";
      os << n << ',' << s << ',' << oracle_r.get_str() << ',' << formula_r.get_str() << ','
         << oracle_rs.get_str() << ',' << formula_rs.get_str() << ',' << status << '\n';
      rows.push_back({{"n", n},
                      {"s", s},
                      {"oracle_r", oracle_r.get_str()},
                      {"formula_r", formula_r.get_str()},
                      {"oracle_rs", oracle_rs.get_str()},
                      {"formula_rs", formula_rs.get_str()},
                      {"status", status}});
    }
  }
  os << "MISMATCHES: " << mismatches << '\n';
  std::string text = format == Format::json
                         ? json{{"rows", rows}, {"mismatches", mismatches}}.dump(2) + "\n"
                         : os.str();
  if (mismatches != 0) throw VerificationFailure{std::move(text)};
  return text;
}

std::string verify_identities(int max_n, Format format) {
  const auto checks = check_identities(max_n);
  bool all = true;
  std::ostringstream os;
  json arr = json::array();
  os << "identity,checks,status,counterexample\n";
  for (const auto& c : checks) {
    all = all && c.passed;
    os << c.name << ',' << c.checks << ',' << (c.passed ? "pass" : "FAIL") << ",\""
       << c.counterexample.value_or("") << "\"\n";
    arr.push_back({{"identity", c.name},
                   {"checks", c.checks},
                   {"passed", c.passed},
                   {"counterexample", c.counterexample ? json(*c.counterexample) : json(nullptr)}});
  }
  std::string text = format == Format::json ? json{{"max_n", max_n}, {"identities", arr}}.dump(2) + "\n" : os.str();
  if (!all) throw VerificationFailure{std::move(text)};
  return text;
}

// ---- fit / plot ------------------------------------------------------------

json fit_json(const std::string& kind, int first, int last, std::size_t points, const FitResult& f) {
  return {{"kind", kind},
          {"n_first", first},
          {"n_last", last},
          {"points", points},
          {"slope", fixed(f.slope)},
          {"intercept", fixed(f.intercept)},
          {"r_squared", fixed(f.r_squared)}};
}

std::string fit_command(const std::string& kind, const std::string& range, Format format) {
  const auto [first, last] = parse_range(range);
  const GenusSeries series = genus_series(parse_kind(kind), first, last);
  const FitResult f = fit(series);
  if (format == Format::json) return fit_json(kind, first, last, series.points.size(), f).dump(2) + "\n";
  std::ostringstream os;
  os << "kind,n_first,n_last,points,slope,intercept,r_squared\n"
     << kind << ',' << first << ',' << last << ',' << series.points.size() << ',' << fixed(f.slope)
     << ',' << fixed(f.intercept) << ',' << fixed(f.r_squared) << '\n';
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::string plot_data(const std::string& kind, const std::string& range, const std::string& path) {
  if (path.empty()) throw InputError("plot-data requires --out PATH");
  const auto [first, last] = parse_range(range);
  const GenusSeries series = genus_series(parse_kind(kind), first, last);
  const FitResult f = fit(series);
  std::ostringstream data;
  data << "n,avg_decimal\n";
  for (const auto& [n, avg] : series.points) data << n << ',' << to_decimal(avg, kDigits) << '\n';
  write_file(path, data.str());
  const std::string sidecar = path + ".fit.json";
  write_file(sidecar, fit_json(kind, first, last, series.points.size(), f).dump(2) + "\n");
  return "wrote " + std::to_string(series.points.size()) + " rows to " + path + " and fit to " + sidecar + "\n";
}

// ---- report ----------------------------------------------------------------

std::string report_shape(int max_n, Format format) {
  const auto rows = shape_report(max_n);
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n},
                     {"unimodal", r.unimodal},
                     {"argmax", r.argmax},
                     {"expected_argmax", r.expected_argmax},
                     {"maximum", r.maximum.get_str()},
                     {"status", to_string(r.status)}});
    }
    return json{{"rows", arr}}.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "n,unimodal,argmax,expected_argmax,maximum,status\n";
  for (const auto& r : rows) {
    os << r.n << ',' << (r.unimodal ? "yes" : "no") << ',';
    for (std::size_t i = 0; i < r.argmax.size(); ++i) os << (i ? ";" : "") << r.argmax[i];
    os << ',' << r.expected_argmax << ',' << r.maximum.get_str() << ',' << to_string(r.status) << '\n';
  }
  return os.str();
}

std::string report_conjecture(const std::string& list, Format format) {
  const ConjectureReport report = conjecture_probe(parse_int_list(list));
  bool bounded = true;
  std::ostringstream os;
  json arr = json::array();
  os << "n,knot_ratio,knot_ratio_decimal,link_ratio,link_ratio_decimal,knot_gap_decimal,link_gap_decimal,below_half\n";
  const auto text_or_blank = [](const std::optional<Rational>& v, bool exact) {
    if (!v) return std::string();
    return exact ? v->get_str() : to_decimal(*v, kDigits);
  };
  const auto json_or_null = [&](const std::optional<Rational>& v, bool exact) {
    return v ? json(text_or_blank(v, exact)) : json(nullptr);
  };
  for (const auto& r : report.rows) {
    bounded = bounded && r.below_half;
    os << r.n << ',' << r.knot_ratio.get_str() << ',' << to_decimal(r.knot_ratio, kDigits) << ','
       << text_or_blank(r.link_ratio, true) << ',' << text_or_blank(r.link_ratio, false) << ','
       << to_decimal(r.knot_gap, kDigits) << ',' << text_or_blank(r.link_gap, false) << ','
       << (r.below_half ? "yes" : "no") << '\n';
    arr.push_back({{"n", r.n},
                   {"knot_ratio", r.knot_ratio.get_str()},
                   {"knot_ratio_decimal", to_decimal(r.knot_ratio, kDigits)},
                   {"link_ratio", json_or_null(r.link_ratio, true)},
                   {"link_ratio_decimal", json_or_null(r.link_ratio, false)},
                   {"knot_gap_decimal", to_decimal(r.knot_gap, kDigits)},
                   {"link_gap_decimal", json_or_null(r.link_gap, false)},
                   {"below_half", r.below_half}});
  }
  std::string text = format == Format::json
                         ? json{{"rows", arr},
                                {"knot_gap_shrinking", report.knot_gap_shrinking},
                                {"link_gap_shrinking", report.link_gap_shrinking}}
                                   .dump(2) + "\n"
                         : os.str();
  if (!bounded) throw VerificationFailure{std::move(text)};
  return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Census of oriented rational knots and links by crossing number, Seifert circles and genus",
               "ratcensus"};
  app.require_subcommand(1);
  app.fallthrough();

  CommandConfig config;
  std::string format_name = "csv";
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"csv", "json", "md"}));
  app.add_option("--out", config.out_path, "Write output to PATH instead of standard output");
  app.add_option("--cache", config.cache_dir, "Table cache directory (default: $RATCENSUS_CACHE)");

  // cf
  auto* cf = app.add_subcommand("cf", "Continued-fraction conversions");
  cf->require_subcommand(1);
  std::string fraction_text;
  auto* cf_expand = cf->add_subcommand("expand", "P/Q -> odd-length vector");
  cf_expand->add_option("fraction", fraction_text, "Reduced fraction P/Q with 0 < P < Q")->required();
  std::string vector_text;
  auto* cf_eval = cf->add_subcommand("eval", "a1,a2,... -> P/Q");
  cf_eval->add_option("vector", vector_text, "Odd-length positive vector")->required();

  // diagram
  auto* diagram = app.add_subcommand("diagram", "4-plat diagrams");
  diagram->require_subcommand(1);
  auto* diagram_info_cmd = diagram->add_subcommand("info", "Seifert statistics of a 4-plat");
  std::string orient = "fwd";
  diagram_info_cmd->add_option("--vector", vector_text, "Odd-length positive vector")->required();
  diagram_info_cmd->add_option("--orient2", orient, "Orientation of the second component")
      ->check(CLI::IsMember({"fwd", "rev"}));

  // census
  auto* census = app.add_subcommand("census", "Closed-form counts");
  census->require_subcommand(1);
  int n = 0;
  int s = 0;
  int g = 0;
  int max_n = 0;
  std::string which = "lambda";
  std::string kind = "knot";
  std::string range;
  std::string table_name;
  auto* census_count_cmd = census->add_subcommand("count", "Count by (n, s)");
  census_count_cmd->add_option("--n", n, "Crossing number")->required();
  census_count_cmd->add_option("--s", s, "Seifert circles")->required();
  census_count_cmd->add_option("--which", which, "r, rs or lambda")->check(CLI::IsMember({"r", "rs", "lambda"}));
  auto* census_genus_cmd = census->add_subcommand("genus", "Count by (n, genus)");
  census_genus_cmd->add_option("--n", n, "Crossing number")->required();
  census_genus_cmd->add_option("--g", g, "Genus")->required();
  census_genus_cmd->add_option("--kind", kind, "knot or link")->check(CLI::IsMember({"knot", "link"}));
  auto* census_avg_cmd = census->add_subcommand("avg", "Exact average genus");
  census_avg_cmd->add_option("--kind", kind, "knot or link")->required()->check(CLI::IsMember({"knot", "link"}));
  census_avg_cmd->add_option("--n-range", range, "A:B")->required();
  auto* census_table_cmd = census->add_subcommand("table", "Count tables");
  census_table_cmd->add_option("--name", table_name, "t1, t2 or t3")->required()->check(CLI::IsMember({"t1", "t2", "t3"}));
  census_table_cmd->add_option("--max-n", max_n, "Largest crossing number")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Exit 2 on any disagreement");
  verify->require_subcommand(1);
  auto* verify_oracle_cmd = verify->add_subcommand("oracle", "Brute-force tuples against the closed forms");
  verify_oracle_cmd->add_option("--max-n", max_n, "Largest crossing number")->required();
  auto* verify_identities_cmd = verify->add_subcommand("identities", "Sequence identities");
  verify_identities_cmd->add_option("--max-n", max_n, "Largest running index")->required();

  // fit / plot-data
  auto* fit_cmd = app.add_subcommand("fit", "Least-squares line through the average genus");
  fit_cmd->add_option("--kind", kind, "knot or link")->required()->check(CLI::IsMember({"knot", "link"}));
  fit_cmd->add_option("--n-range", range, "A:B")->required();
  auto* plot_cmd = app.add_subcommand("plot-data", "Write n,avg_decimal data plus a .fit.json sidecar to --out");
  plot_cmd->add_option("--kind", kind, "knot or link")->required()->check(CLI::IsMember({"knot", "link"}));
  plot_cmd->add_option("--n-range", range, "A:B")->required();

  // report
  auto* report = app.add_subcommand("report", "Observational reports");
  report->require_subcommand(1);
  auto* report_shape_cmd = report->add_subcommand("shape", "Bell shape of Lambda_n(s)");
  report_shape_cmd->add_option("--max-n", max_n, "Largest crossing number")->required();
  std::string n_list;
  auto* report_conjecture_cmd = report->add_subcommand("conjecture", "<g>/n against 1/4");
  report_conjecture_cmd->add_option("--n", n_list, "Comma-separated crossing numbers")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : usage_error;
  }

  config.format = format_name == "json" ? Format::json : format_name == "md" ? Format::md : Format::csv;
  if (config.cache_dir.empty()) {
    if (const char* env = std::getenv("RATCENSUS_CACHE")) config.cache_dir = env;
  }

  const auto emit = [&](const std::string& text) {
    if (config.out_path.empty()) {
      out << text;
    } else {
      write_file(config.out_path, text);
    }
  };

  try {
    const Tables tables(config.cache_dir);
    std::string text;
    if (cf_expand->parsed()) {
      const Fraction f = Fraction::parse(fraction_text);
      text = cf_record(f, expand(f), config.format);
    } else if (cf_eval->parsed()) {
      const CFVector v = CFVector::parse(vector_text);
      text = cf_record(evaluate(v), v, config.format);
    } else if (diagram_info_cmd->parsed()) {
      text = diagram_info(vector_text, orient, config.format);
    } else if (census_count_cmd->parsed()) {
      text = census_count(n, s, which, config.format);
    } else if (census_genus_cmd->parsed()) {
      text = census_genus(n, g, kind, config.format);
    } else if (census_avg_cmd->parsed()) {
      text = census_avg(kind, range, config.format, tables);
    } else if (census_table_cmd->parsed()) {
      text = census_table(table_name, max_n, config.format, tables);
    } else if (verify_oracle_cmd->parsed()) {
      text = verify_oracle(max_n, config.format);
    } else if (verify_identities_cmd->parsed()) {
      text = verify_identities(max_n, config.format);
    } else if (fit_cmd->parsed()) {
      text = fit_command(kind, range, config.format);
    } else if (plot_cmd->parsed()) {
      out << plot_data(kind, range, config.out_path);
      return ok;
    } else if (report_shape_cmd->parsed()) {
      text = report_shape(max_n, config.format);
    } else if (report_conjecture_cmd->parsed()) {
      text = report_conjecture(n_list, config.format);
    }
    emit(text);
    return ok;
  } catch (const VerificationFailure& failure) {
    try {
      emit(failure.output);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
    }
    err << "verification failed\n";
    return verification_failed;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return verification_failed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n' << "Run with --help for usage.\n";
    return usage_error;
  }
}

}  // namespace ratcensus::cli
