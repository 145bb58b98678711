#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ckbound/bounds.hpp"
#include "ckbound/errors.hpp"
#include "ckbound/expr.hpp"
#include "ckbound/graph6.hpp"
#include "ckbound/json_io.hpp"
#include "ckbound/search.hpp"
#include "ckbound/verify.hpp"

namespace ckbound::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string decimal(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string ratio_text(const EigenValue& r) {
  if (!r.is_exact()) return decimal(r.to_double());
  return r.pretty() + " (" + decimal(r.to_double()) + ")";
}

// "a..b", "a,b,c" or "a".
std::vector<std::size_t> parse_range(const std::string& text) {
  std::vector<std::size_t> out;
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw UsageError("bad range '" + text + "'");
    }
    return std::stoul(s);
  };
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const std::size_t lo = number(text.substr(0, dots));
    const std::size_t hi = number(text.substr(dots + 2));
    if (lo > hi) throw UsageError("empty range '" + text + "'");
    for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(number(item));
  return out;
}

struct SpectrumArgs {
  std::string expr;
  bool exact = false;
  bool numeric = false;
  bool json = false;
};

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out, std::ostream& err) {
  const SpectralDescriptor d = resolve_graph_expr(a.expr);
  Spectrum s = d.spectrum;
  if (a.numeric) {
    s = d.graph() != nullptr ? eigen_spectrum(*d.graph()) : Spectrum::from_floats(d.spectrum.to_doubles());
  }
  if (a.exact && !s.is_exact()) err << "note: no exact spectrum known for " << d.name << "; showing numeric values\n";
  if (a.json) {
    out << Json{{"name", d.name}, {"n", d.n}, {"exact", s.is_exact()}, {"spectrum", to_json(s)}}.dump() << '\n';
    return kSuccess;
  }
  if (!s.is_exact()) {
    err << "note: numeric spectrum (Jacobi); eigenvalues closer than 1e-07 merged for display\n";
    s = s.merged_for_display(1e-7);
  }
  out << s.to_text() << '\n';
  return kSuccess;
}

struct BoundArgs {
  std::string expr;
  std::size_t k = 0;
  std::string t = "sup";
  bool json = false;
};

int cmd_bound(const BoundArgs& a, std::ostream& out) {
  const SpectralDescriptor d = resolve_graph_expr(a.expr);
  if (a.k == 0 || a.k > d.n) {
    throw UsageError("--k must lie in 1.." + std::to_string(d.n) + " for " + d.name);
  }
  if (a.t == "sup") {
    const BoundCertificate c = certify(d, a.k);
    if (a.json) {
      out << to_json(c).dump() << '\n';
      return kSuccess;
    }
    out << "graph: " << d.name << " (n = " << d.n << ")\n"
        << "k: " << a.k << "\n"
        << "t: sup\n"
        << "ratio: " << ratio_text(c.ratio) << (c.degenerate ? " [not attained]" : "") << "\n"
        << "verification: " << to_string(c.verification) << "\n";
    if (a.k >= 2) out << "upper bound 1/(2 sqrt(k-1)): " << decimal(nikiforov_upper(static_cast<int>(a.k))) << "\n";
    return kSuccess;
  }
  std::size_t t = 0;
  try {
    std::size_t used = 0;
    t = std::stoul(a.t, &used);
    if (used != a.t.size() || t == 0) throw std::invalid_argument("t");
  } catch (const std::exception&) {
    throw UsageError("--t must be a positive integer or 'sup'");
  }
  const EigenValue lambda = kth_largest_of_blowup(d, t, a.k);
  const EigenValue ratio = finite_blowup_ratio(d, t, a.k);
  check_upper_dominance(a.k, ratio.to_double());
  if (a.json) {
    out << Json{{"k", a.k},
                {"t", t},
                {"descriptor", to_json(d)},
                {"eigenvalue", to_json(lambda)},
                {"ratio", {{"exact", ratio.is_exact() ? Json(ratio.to_string()) : Json(nullptr)}, {"float", ratio.to_double()}}},
                {"verification", to_string(d.verification())}}
               .dump()
        << '\n';
    return kSuccess;
  }
  out << "graph: " << d.name << " (n = " << d.n << ")\n"
      << "k: " << a.k << "\n"
      << "t: " << t << "\n"
      << "eigenvalue: " << ratio_text(lambda) << "\n"
      << "ratio: " << ratio_text(ratio) << "\n"
      << "verification: " << to_string(d.verification()) << "\n";
  return kSuccess;
}

struct TableArgs {
  std::string range = "4..24";
  bool json = false;
};

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
  const auto ks = parse_range(a.range);
  const std::size_t lo = ks.front();
  const std::size_t hi = ks.back();
  if (lo < 4 || hi > 24) throw UsageError("table range must lie within 4..24");
  const auto rows = build_table(lo, hi);
  bool all = true;
  if (!a.json) {
    out << std::left << std::setw(4) << "k" << std::setw(16) << "c_k >=" << std::setw(10) << "decimal"
        << std::setw(26) << "graph(s)" << std::setw(28) << "status" << std::setw(11) << "upper" << "match\n";
  }
  for (const auto& row : rows) {
    all = all && row.match;
    if (a.json) {
      out << to_json(row).dump() << '\n';
      continue;
    }
    std::string graphs, status;
    for (const auto& c : row.certificates) {
      graphs += (graphs.empty() ? "" : ", ") + c.base.name;
      status += (status.empty() ? "" : ", ") + std::string(to_string(c.verification));
    }
    const EigenValue& r = row.certificates.front().ratio;
    out << std::left << std::setw(4) << row.k << std::setw(16) << r.pretty() << std::setw(10) << decimal(r.to_double())
        << std::setw(26) << graphs << std::setw(28) << status << std::setw(11)
        << decimal(nikiforov_upper(static_cast<int>(row.k))) << (row.match ? "yes" : "NO") << '\n';
  }
  for (const auto& row : rows) {
    if (row.match) continue;
    err << "mismatch k=" << row.k << ": expected " << row.expected.to_string() << " (" << row.printed_decimal
        << "), got";
    for (const auto& c : row.certificates) err << ' ' << c.ratio.to_string();
    err << '\n';
  }
  return all ? kSuccess : kCheckFailed;
}

struct SearchArgs {
  std::size_t k = 0;
  std::size_t n = 0;
  std::string method;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t budget = 100000;
  std::size_t restarts = 1;
  double t0 = 0.05;
  double cooling = 0.995;
  std::uint64_t stall = 5000;
  std::string g6_file;
  bool skip_malformed = false;
  bool allow_n8 = false;
  unsigned threads = 0;
  std::string witness_file = "ckbound-witness.json";
  bool no_history = false;
};

int report_search(const SearchResult& r, const std::string& witness_file, std::ostream& out, std::ostream& err) {
  out << to_json(r).dump() << '\n';
  const auto record = record_ratio(r.k);
  if (record && r.best_ratio > *record + 1e-9) {
    std::ofstream f(witness_file);
    f << witness_json(r).dump(2) << '\n';
    err << "*** EXCEEDANCE: ratio " << std::setprecision(17) << r.best_ratio << " beats the best known "
        << *record << " for k = " << r.k << "; witness written to " << witness_file << '\n';
    return kExceedance;
  }
  return kSuccess;
}

int cmd_search(const SearchArgs& a, bool n_given, std::ostream& out, std::ostream& err) {
  std::string method = a.method;
  if (!a.g6_file.empty()) {
    if (!method.empty() && method != "stream") throw UsageError("--g6-file implies --method stream");
    if (n_given) throw UsageError("--n cannot be combined with --g6-file");
    method = "stream";
  }
  if (method.empty()) method = "anneal";
  if (method == "stream") {
    if (a.g6_file.empty()) throw UsageError("--method stream needs --g6-file");
    StreamOptions opts{a.skip_malformed, &err};
    SearchResult r;
    if (a.g6_file == "-") {
      r = stream_max(a.k, std::cin, opts);
    } else {
      std::ifstream in(a.g6_file);
      if (!in) throw UsageError("cannot open " + a.g6_file);
      r = stream_max(a.k, in, opts);
    }
    return report_search(r, a.witness_file, out, err);
  }
  if (!n_given) throw UsageError("--n is required for method " + method);
  if (method == "exhaustive") {
    return report_search(exhaustive_max(a.k, a.n, {a.allow_n8, a.threads}), a.witness_file, out, err);
  }
  SearchConfig cfg;
  cfg.k = a.k;
  cfg.n = a.n;
  if (method == "anneal") {
    cfg.method = SearchMethod::Anneal;
  } else if (method == "hillclimb") {
    cfg.method = SearchMethod::HillClimb;
  } else {
    throw UsageError("unknown method '" + method + "'");
  }
  cfg.seed = a.seed;
  cfg.budget = a.budget;
  cfg.restarts = a.restarts;
  cfg.initial_temperature = a.t0;
  cfg.cooling = a.cooling;
  cfg.stall_limit = a.stall;
  cfg.record_history = !a.no_history;
  return report_search(local_search(cfg), a.witness_file, out, err);
}

struct CampaignArgs {
  std::string n_range;
  std::vector<std::uint64_t> seeds{1, 2, 3};
  std::uint64_t budget = 20000;
  std::size_t restarts = 4;
  std::string witness_file = "ckbound-c3-witness.json";
};

int cmd_campaign(const CampaignArgs& a, std::ostream& out, std::ostream& err) {
  CampaignConfig cfg;
  cfg.n_values = a.n_range.empty() ? std::vector<std::size_t>{} : parse_range(a.n_range);
  cfg.seeds = a.seeds;
  cfg.budget = a.budget;
  cfg.restarts = a.restarts;
  const CampaignReport report = c3_campaign(cfg);
  const Json j = to_json(report);
  out << j.dump() << '\n';
  if (report.exceeded) {
    std::ofstream f(a.witness_file);
    f << j.at("witness").dump(2) << '\n';
    err << "*** EXCEEDANCE: lambda_3 construction beats 1/3; witness written to " << a.witness_file << '\n';
    return kExceedance;
  }
  return kSuccess;
}

struct VerifyArgs {
  std::string icosahedron_g6;
  std::string certificate;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyOptions opts;
  if (!a.icosahedron_g6.empty()) opts.icosahedron_override = g6_decode(a.icosahedron_g6);
  auto checks = run_verification(opts);
  if (!a.certificate.empty()) {
    VerifyCheck c{"certificate " + a.certificate, true, 0, ""};
    try {
      std::ifstream in(a.certificate);
      if (!in) throw UsageError("cannot open " + a.certificate);
      recheck_certificate(Json::parse(in));
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = e.what();
    }
    checks.push_back(c);
  }
  bool all = true;
  Json report = Json::array();
  for (const auto& c : checks) {
    all = all && c.passed;
    if (a.json) {
      report.push_back({{"check", c.name}, {"passed", c.passed}, {"residual", c.residual}, {"detail", c.detail}});
    } else {
      out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (max residual " << std::scientific
          << std::setprecision(2) << c.residual << std::defaultfloat << ")" << (c.detail.empty() ? "" : "  " + c.detail)
          << '\n';
    }
  }
  if (a.json) out << Json{{"passed", all}, {"checks", report}}.dump() << '\n';
  return all ? kSuccess : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ckbound: lower bounds on the k-th largest adjacency eigenvalue via closed blowups"};
  app.name("ckbound");
  app.require_subcommand(1);

  SpectrumArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "Adjacency spectrum of a graph expression");
  spectrum->add_option("expr", spectrum_args.expr, "Graph expression, e.g. johnson:7,2")->required();
  auto* exact_flag = spectrum->add_flag("--exact", spectrum_args.exact, "Exact spectrum (default when known)");
  spectrum->add_flag("--numeric", spectrum_args.numeric, "Force eigensolver values")->excludes(exact_flag);
  spectrum->add_flag("--json", spectrum_args.json, "Machine-readable output");

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "Blowup lower bound certificate for c_k");
  bound->add_option("expr", bound_args.expr, "Graph expression")->required();
  bound->add_option("--k", bound_args.k, "Eigenvalue index")->required();
  bound->add_option("--t", bound_args.t, "Blowup factor, or 'sup' for the limit")->capture_default_str();
  bound->add_flag("--json", bound_args.json, "Certificate JSON");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Reproduce the published table of lower bounds");
  table->add_option("--range", table_args.range, "k range within 4..24, e.g. 4..24")->capture_default_str();
  table->add_flag("--json", table_args.json, "JSON lines, one per row");

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Search for graphs maximising (lambda_k + 1)/n");
  search->add_option("--k", search_args.k, "Eigenvalue index")->required()->check(CLI::PositiveNumber);
  auto* n_opt = search->add_option("--n", search_args.n, "Vertex count")->check(CLI::PositiveNumber);
  search->add_option("--method", search_args.method, "exhaustive | hillclimb | anneal | stream")
      ->check(CLI::IsMember({"exhaustive", "hillclimb", "anneal", "stream"}));
  search->add_option("--seed", search_args.seed, "PRNG seed (mt19937_64)")->capture_default_str();
  search->add_option("--budget", search_args.budget, "Objective evaluations")->capture_default_str()->check(CLI::PositiveNumber);
  search->add_option("--restarts", search_args.restarts, "Independent runs")->capture_default_str();
  search->add_option("--t0", search_args.t0, "Initial annealing temperature")->capture_default_str();
  search->add_option("--cooling", search_args.cooling, "Cooling factor per accepted move")->capture_default_str();
  search->add_option("--stall", search_args.stall, "Rejections before re-randomising")->capture_default_str();
  search->add_option("--g6-file", search_args.g6_file, "graph6 stream, '-' for stdin");
  search->add_flag("--skip-malformed", search_args.skip_malformed, "Skip bad graph6 lines with a warning");
  search->add_flag("--allow-n8", search_args.allow_n8, "Permit exhaustive search at n = 8 (2^28 graphs)");
  search->add_option("--threads", search_args.threads, "Worker threads for exhaustive search");
  search->add_option("--witness-file", search_args.witness_file, "Where an exceeding witness is written")
      ->capture_default_str();
  search->add_flag("--no-history", search_args.no_history, "Omit the improvement history");

  CampaignArgs campaign_args;
  auto* campaign = app.add_subcommand("campaign", "Annealing sweep at k = 3 against the 1/3 threshold");
  campaign->add_option("--n-range", campaign_args.n_range, "Vertex counts, e.g. 6..12 or 6,9,12");
  campaign->add_option("--seeds", campaign_args.seeds, "Seeds per n")->delimiter(',');
  campaign->add_option("--budget", campaign_args.budget, "Evaluations per run")->capture_default_str();
  campaign->add_option("--restarts", campaign_args.restarts, "Restarts per run")->capture_default_str();
  campaign->add_option("--witness-file", campaign_args.witness_file)->capture_default_str();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the built-in cross-check suite");
  verify->add_option("--icosahedron-g6", verify_args.icosahedron_g6, "Check this graph in place of the icosahedron");
  verify->add_option("--certificate", verify_args.certificate, "Also re-check a certificate JSON file");
  verify->add_flag("--json", verify_args.json, "Machine-readable report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(spectrum_args, out, err);
    if (bound->parsed()) return cmd_bound(bound_args, out);
    if (table->parsed()) return cmd_table(table_args, out, err);
    if (search->parsed()) return cmd_search(search_args, n_opt->count() > 0, out, err);
    if (campaign->parsed()) return cmd_campaign(campaign_args, out, err);
    if (verify->parsed()) return cmd_verify(verify_args, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const InfeasibleParameters& e) {
    err << "infeasible parameters: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const TableMismatch& e) {
    err << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace ckbound::cli
