#pragma once

// The `kemeny` command line. run_cli() is separate from main() so the tests
// can drive it in-process.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kemeny/asymptotics.hpp"
#include "kemeny/braess.hpp"
#include "kemeny/config.hpp"
#include "kemeny/exact_oracle.hpp"
#include "kemeny/family.hpp"
#include "kemeny/io.hpp"

namespace kemeny::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kDisconnected = 3, kEdgePresent = 4 };

struct Input {
  Graph graph;
  std::optional<FamilySpec> spec;
  std::string text;
};

inline Input load_input(const std::string& text) {
  if (std::filesystem::is_regular_file(text)) {
    std::ifstream in(text);
    if (!in) throw ParseError("cannot open " + text);
    return {read_edge_list(in), std::nullopt, text};
  }
  if (text.find(':') == std::string::npos) throw ParseError("no such file and not a family spec: " + text);
  FamilySpec spec = parse_family(text);
  return {build(spec), spec, text};
}

struct RunConfig {
  std::string format = "table";
  std::optional<unsigned> decimals;
  unsigned precision_bits = kDefaultPrecisionBits;
  unsigned parallelism = 1;
  std::string config_file;
  Settings settings;
};

namespace detail {

inline std::string real_str(const Real& x, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

inline std::string sci(const Real& x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << x.convert_to<double>();
  return os.str();
}

inline std::pair<Vertex, Vertex> parse_edge(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("--edge expects u,v");
  try {
    std::size_t a = 0;
    std::size_t b = 0;
    const int u = std::stoi(s.substr(0, comma), &a);
    const int v = std::stoi(s.substr(comma + 1), &b);
    if (a != comma || b != s.size() - comma - 1) throw ParseError("--edge expects u,v");
    return {u, v};
  } catch (const std::logic_error&) {
    throw ParseError("--edge expects u,v");
  }
}

// Closed-form census for families that have one.
inline BraessCensus fast_census(const FamilySpec& spec) {
  if (const auto* b = std::get_if<family::Broom>(&spec.value)) return broom_census_fast(b->k, b->p);
  if (const auto* p = std::get_if<family::Path>(&spec.value)) {
    BraessCensus c;
    c.spec = spec;
    c.order = p->k;
    for (long i = 1; i <= p->k; ++i) {
      for (long j = i + 2; j <= p->k; ++j) {
        BraessEntry e;
        e.edge = Edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        e.delta = path_braess_delta(i - 1, j - i + 1, p->k);
        e.braess = e.delta.sign() > 0;
        c.entries.push_back(std::move(e));
      }
    }
    kemeny::detail::tally(c);
    return c;
  }
  throw DomainError("no closed-form census for " + to_string(spec) + " (brooms and paths only)");
}

inline Classifier classifier_for(const std::optional<FamilySpec>& spec) {
  if (spec) {
    if (const auto* b = std::get_if<family::Broom>(&spec->value)) return broom_classifier(b->k, b->p);
  }
  return {};
}

// Rows of strings rendered as csv, table or json.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void print(std::ostream& out, const std::string& format) const {
    if (format == "json") {
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["rows"] = Json::array();
      for (const auto& r : rows) {
        Json o;
        for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
        j["rows"].push_back(o);
      }
      out << j.dump(2) << '\n';
      return;
    }
    if (format == "csv") {
      auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
        out << '\n';
      };
      line(header);
      for (const auto& r : rows) line(r);
      return;
    }
    std::vector<std::size_t> w(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
    for (const auto& r : rows)
      for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) out << std::left << std::setw(static_cast<int>(w[i] + 2)) << r[i];
      out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
  }
};

}  // namespace detail

inline int cmd_kemeny(const RunConfig& cfg, const std::string& input, std::ostream& out) {
  const Input in = load_input(input);
  const KemenyReport r = kemeny(in.graph);
  if (cfg.format == "json") {
    out << kemeny_json(r, in.text).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    write_kemeny_csv(out, r, cfg.decimals);
  } else {
    write_kemeny_table(out, r, cfg.decimals);
  }
  return kOk;
}

struct BraessArgs {
  std::string edge;
  bool census = false;
  bool fast = false;
  bool verify = false;
  bool braess_only = false;
};

inline int cmd_braess(const RunConfig& cfg, const std::string& input, const BraessArgs& a, std::ostream& out,
                      std::ostream& err) {
  const Input in = load_input(input);
  if (!a.edge.empty()) {
    const auto [u, v] = detail::parse_edge(a.edge);
    BraessEntry e = is_braess(in.graph, u, v);
    if (const auto cls = detail::classifier_for(in.spec)) e.category = cls(e.edge);
    if (cfg.format == "json") {
      Json j{{"schema_version", kSchemaVersion}, {"u", e.edge.u},           {"v", e.edge.v},
             {"delta", rational_json(e.delta)},  {"braess", e.braess},       {"category", to_string(e.category)}};
      out << j.dump(2) << '\n';
    } else if (cfg.format == "csv") {
      BraessCensus c;
      c.entries.push_back(e);
      write_census_csv(out, c);
    } else {
      out << "edge    {" << e.edge.u << ',' << e.edge.v << "}\n";
      out << "delta   " << format_rational(e.delta, cfg.decimals) << '\n';
      out << "braess  " << (e.braess ? "yes" : "no") << '\n';
    }
    return kOk;
  }
  if (!a.census) throw ParseError("braess needs --edge u,v or --census");
  BraessCensus c;
  if (a.fast) {
    if (!in.spec) throw DomainError("--fast needs a family spec, not an edge list");
    c = detail::fast_census(*in.spec);
    if (a.verify) {
      const BraessCensus slow = census(in.graph, cfg.parallelism, detail::classifier_for(in.spec));
      if (slow.entries != c.entries) {
        err << "fast census disagrees with brute force\n";
        return kFailure;
      }
      err << "verified: fast census equals brute force (" << c.entries.size() << " non-edges)\n";
    }
  } else {
    c = census(in.graph, cfg.parallelism, detail::classifier_for(in.spec));
    c.spec = in.spec;
  }
  if (cfg.format == "json") {
    out << census_json(c).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    write_census_csv(out, c, a.braess_only);
  } else {
    write_census_table(out, c, cfg.decimals, a.braess_only);
  }
  return kOk;
}

struct AsymptoticsArgs {
  std::string what;
  std::vector<long> ks;
  std::optional<double> tol;
  long p = 2;
  int jmax = 14;
};

inline int cmd_asymptotics(const RunConfig& cfg, const AsymptoticsArgs& a, std::ostream& out) {
  const double tol = a.tol ? *a.tol : cfg.settings.number("series_tol", 1e-6);
  const unsigned bits = cfg.precision_bits;
  const int digits = 12;
  detail::Table t;
  if (a.what == "constants") {
    const auto c = limit_constants(tol, bits);
    const auto t1 = t1_infinity(tol, bits);
    PrecisionScope scope(bits);
    t.header = {"name", "value", "tail_bound", "terms"};
    auto row = [&](const std::string& n, const SeriesValue& s) {
      t.rows.push_back({n, detail::real_str(s.value, digits), detail::sci(s.tail_bound), std::to_string(s.terms_used)});
    };
    row("gamma", c.gamma);
    row("S1_inf", c.s1);
    row("T1_inf", t1);
    t.rows.push_back({"S1/2+gamma/3-2/3", detail::real_str(c.path_limit, digits),
                      detail::sci(c.s1.tail_bound / 2 + c.gamma.tail_bound / 3), ""});
    t.rows.push_back({"S1+2gamma/3-4/3", detail::real_str(c.path_slope, digits),
                      detail::sci(c.s1.tail_bound + 2 * c.gamma.tail_bound / 3), ""});
    t.rows.push_back({"T1+gamma-2", detail::real_str(t1.value + c.gamma.value - 2, digits),
                      detail::sci(t1.tail_bound + c.gamma.tail_bound), ""});
  } else if (a.what == "path-gap") {
    const auto c = limit_constants(tol, bits);
    const bool judged = cfg.settings.has("path_gap");
    t.header = {"k", "a_star", "lhs", "predicted", "gap"};
    if (judged) t.header.push_back("within_tol");
    for (long k : a.ks.empty() ? std::vector<long>{1000, 10000, 100000, 1000000} : a.ks) {
      const auto r = path_asymptotic_gap(k, c, bits);
      std::vector<std::string> row{std::to_string(k), r.a_star.str(), detail::real_str(r.lhs, digits),
                                   detail::real_str(r.predicted_limit, digits), detail::real_str(r.gap, 6)};
      if (judged) row.push_back(r.gap.convert_to<double>() <= cfg.settings.number("path_gap") ? "yes" : "no");
      t.rows.push_back(std::move(row));
    }
  } else if (a.what == "path-count") {
    const auto c = limit_constants(tol, bits);
    const bool judged = cfg.settings.has("path_count_relative");
    t.header = {"k", "exact_count", "predicted", "gap", "relative_error"};
    if (judged) t.header.push_back("within_tol");
    for (long k : a.ks.empty() ? std::vector<long>{1000, 10000, 100000} : a.ks) {
      const auto r = compare_path_count(k, c, bits);
      PrecisionScope scope(bits);
      std::vector<std::string> row{std::to_string(k), r.exact.str(), detail::real_str(r.predicted, digits),
                                   detail::real_str(abs(Real(r.exact) - r.predicted), 8),
                                   detail::real_str(r.relative_error, 6)};
      if (judged) {
        row.push_back(r.relative_error.convert_to<double>() <= cfg.settings.number("path_count_relative") ? "yes"
                                                                                                         : "no");
      }
      t.rows.push_back(std::move(row));
    }
  } else if (a.what == "broom-trend") {
    std::vector<std::pair<long, long>> schedule;
    if (!a.ks.empty()) {
      for (long k : a.ks) schedule.emplace_back(k, a.p);
    } else {
      for (int j = 2; j <= a.jmax; ++j) schedule.emplace_back(1L << j, a.p);
    }
    t.header = {"k", "p", "B1", "B2", "B3", "k_ln_k", "ratio"};
    for (const auto& r : broom_b3_trend(schedule)) {
      std::ostringstream kl;
      kl << std::setprecision(10) << r.k_ln_k;
      std::ostringstream ra;
      ra << std::setprecision(6) << r.ratio;
      t.rows.push_back({std::to_string(r.k), std::to_string(r.p), r.b1.str(), r.b2.str(), r.b3.str(), kl.str(), ra.str()});
    }
  } else {
    throw ParseError("unknown asymptotics table " + a.what);
  }
  t.print(out, cfg.format);
  return kOk;
}

inline int cmd_graph(const std::string& input, const std::string& output, std::ostream& out) {
  const Input in = load_input(input);
  if (output.empty() || output == "-") {
    write_edge_list(out, in.graph);
    return kOk;
  }
  std::ofstream f(output);
  if (!f) throw ParseError("cannot write " + output);
  write_edge_list(f, in.graph);
  return kOk;
}

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Kemeny constants and Braess edges"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--decimal", cfg.decimals, "Render rationals as fixed point with this many digits");
  app.add_option("--precision", cfg.precision_bits, "MPFR precision in bits")->check(CLI::Range(32u, 4096u));
  app.add_option("--parallelism", cfg.parallelism, "Worker threads for brute-force censuses")
      ->check(CLI::Range(1u, 256u));
  app.add_option("--config", cfg.config_file, "key = value settings file");

  std::string input;
  auto* kem = app.add_subcommand("kemeny", "Kemeny's constant, spanning tree count and moments");
  kem->add_option("input", input, "Edge-list file or family spec such as path:8")->required();

  BraessArgs ba;
  auto* br = app.add_subcommand("braess", "Braess test for one non-edge or a full census");
  br->add_option("input", input, "Edge-list file or family spec")->required();
  auto* edge = br->add_option("--edge", ba.edge, "Non-edge u,v");
  auto* cen = br->add_flag("--census", ba.census, "Classify every non-edge");
  br->add_flag("--fast", ba.fast, "Use the closed forms (brooms, paths)")->needs(cen);
  br->add_flag("--verify", ba.verify, "Check the fast census against brute force")->needs(cen);
  br->add_flag("--braess-only", ba.braess_only, "Only list Braess edges");
  edge->excludes(cen);

  AsymptoticsArgs aa;
  auto* as = app.add_subcommand("asymptotics", "Limit constants and count-versus-law tables");
  as->add_option("table", aa.what, "constants | path-gap | path-count | broom-trend")
      ->required()
      ->check(CLI::IsMember({"constants", "path-gap", "path-count", "broom-trend"}));
  as->add_option("--k", aa.ks, "Values of k")->delimiter(',');
  as->add_option("--tol", aa.tol, "Tail bound for series constants")->check(CLI::PositiveNumber);
  as->add_option("--p", aa.p, "Pendant count for broom-trend")->check(CLI::Range(2L, 1000000L));
  as->add_option("--jmax", aa.jmax, "broom-trend uses k = 4 .. 2^jmax")->check(CLI::Range(2, 24));

  std::string output;
  auto* gr = app.add_subcommand("graph", "Write the graph as an edge list");
  gr->add_option("input", input, "Edge-list file or family spec")->required();
  gr->add_option("-o,--output", output, "Destination file (default stdout)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (!cfg.config_file.empty()) cfg.settings = Settings::load(cfg.config_file);
    if (*kem) return cmd_kemeny(cfg, input, out);
    if (*br) return cmd_braess(cfg, input, ba, out, err);
    if (*as) return cmd_asymptotics(cfg, aa, out);
    return cmd_graph(input, output, out);
  } catch (const DisconnectedGraphError& e) {
    err << "error: " << e.what() << '\n';
    return kDisconnected;
  } catch (const DuplicateEdgeError& e) {
    err << "error: " << e.what() << '\n';
    return kEdgePresent;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const VertexRangeError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace kemeny::cli
