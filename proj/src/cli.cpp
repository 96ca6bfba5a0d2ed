#include "toric/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "toric/catalog.hpp"
#include "toric/fan_io.hpp"
#include "toric/verify.hpp"

namespace toric {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json names_json(const Fan& fan, Cone c) { return fan.names_of(c); }

std::string names_text(const Fan& fan, Cone c) {
  std::string s = "{";
  for (const auto& n : fan.names_of(c)) s += (s.size() > 1 ? "," : "") + n;
  return s + "}";
}

// Options shared by analyze and export-fan.
struct SourceOptions {
  std::string file;
  std::string family;
  std::optional<int> d, s;
  std::vector<int> a, p, b, c;
};

void add_source_options(CLI::App* cmd, SourceOptions& o) {
  cmd->add_option("--file", o.file, "fan JSON file");
  cmd->add_option("--family", o.family, "pn | kleinschmidt | example41 | batyrev3");
  cmd->add_option("--d", o.d, "dimension");
  cmd->add_option("--s", o.s, "kleinschmidt: fiber dimension + 1");
  cmd->add_option("--a", o.a, "twists (kleinschmidt) or a (example41)")->delimiter(',');
  cmd->add_option("--p", o.p, "batyrev3: p0,p1,p2,p3,p4")->delimiter(',');
  cmd->add_option("--b", o.b, "batyrev3: b1..b_p3")->delimiter(',');
  cmd->add_option("--c", o.c, "batyrev3: c2..c_p2 (omit when p2 = 1)")->delimiter(',');
}

CatalogParams catalog_params(const SourceOptions& o) {
  auto need_d = [&] {
    if (!o.d) throw UsageError("--d is required for family " + o.family);
    return *o.d;
  };
  if (o.family == "pn") return ProjectiveSpaceParams{need_d()};
  if (o.family == "example41") {
    if (o.a.size() != 1) throw UsageError("example41 takes a single --a");
    return Example41Params{need_d(), o.a[0]};
  }
  if (o.family == "kleinschmidt") {
    const int d = need_d();
    const int s = o.s.value_or(2);
    std::vector<int> tw = o.a;
    if (tw.size() != static_cast<std::size_t>(s - 1))
      throw UsageError("kleinschmidt needs s-1 = " + std::to_string(s - 1) + " twists in --a");
    return BundleParams{d, s, tw};
  }
  if (o.family == "batyrev3") {
    if (o.p.size() != 5) throw UsageError("batyrev3 needs --p with five entries");
    BatyrevParams bp;
    std::copy(o.p.begin(), o.p.end(), bp.p.begin());
    bp.b = o.b;
    bp.c = o.c;
    if (o.d && *o.d != bp.dim()) throw UsageError("--d disagrees with p0+...+p4-3");
    return bp;
  }
  throw UsageError("unknown family '" + o.family + "'");
}

struct LoadedFan {
  Fan fan;
  std::string label;
};

LoadedFan load_source(const SourceOptions& o) {
  if (o.file.empty() == o.family.empty()) throw UsageError("give exactly one of --file or --family");
  if (!o.file.empty()) return {load_fan_file(o.file), o.file};
  const CatalogParams params = catalog_params(o);
  try {
    return {build(params), describe(params)};
  } catch (const FanError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<unsigned> resolve_ks(const std::vector<int>& ks, std::size_t rank) {
  std::vector<unsigned> out;
  if (ks.empty()) {
    for (unsigned k = 1; k <= rank; ++k) out.push_back(k);
    return out;
  }
  for (int k : ks) {
    if (k < 1 || static_cast<std::size_t>(k) > rank)
      throw UsageError("k = " + std::to_string(k) + " is outside 1.." + std::to_string(rank));
    out.push_back(static_cast<unsigned>(k));
  }
  return out;
}

void print_report_text(std::ostream& out, const Fan& fan, const PositivityReport& r, bool values) {
  out << "k=" << r.k << "  " << to_string(r.classification) << "  min " << to_string(r.min_value)
      << " on " << names_text(fan, r.witness) << "\n";
  if (!values) return;
  for (const auto& v : r.values) out << "    " << names_text(fan, v.cone) << "  " << to_string(v.value) << "\n";
}

// ---------------------------------------------------------------------------

int cmd_analyze(const SourceOptions& src, const std::vector<int>& ks, bool json, bool values,
                std::ostream& out) {
  const LoadedFan loaded = load_source(src);
  const Fan& fan = loaded.fan;
  const auto k_list = resolve_ks(ks, fan.rank());
  IntersectionEngine engine(fan);
  std::vector<PositivityReport> reports;
  for (unsigned k : k_list) reports.push_back(classify(engine, k));

  if (json) {
    nlohmann::json j;
    j["source"] = loaded.label;
    j["rank"] = fan.rank();
    j["num_rays"] = fan.num_rays();
    j["picard_number"] = fan.picard_number();
    j["fano"] = is_fano(fan);
    j["reports"] = nlohmann::json::array();
    for (const auto& r : reports) j["reports"].push_back(report_to_json(fan, r, values));
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << loaded.label << ": rank " << fan.rank() << ", " << fan.num_rays() << " rays, Picard number "
      << fan.picard_number() << (is_fano(fan) ? ", Fano" : "") << "\n";
  for (const auto& r : reports) print_report_text(out, fan, r, values);
  return kExitOk;
}

int cmd_export(const SourceOptions& src, const std::string& output, std::ostream& out) {
  const LoadedFan loaded = load_source(src);
  const std::string text = fan_to_json(loaded.fan).dump(2) + "\n";
  if (output.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream f(output);
  if (!f) throw UsageError("cannot write " + output);
  f << text;
  return kExitOk;
}

struct ScanOptions {
  std::string family;
  std::optional<int> min_d, max_d, max_s, max_twist, min_a, max_a, max_p, max_p2;
  std::vector<int> ks{2};
  unsigned workers = 1;
  bool json = false;
  bool values = false;
};

std::vector<CatalogParams> scan_grid(const ScanOptions& o) {
  if (o.family == "pn") {
    ProjectiveSpaceBounds b;
    b.min_d = o.min_d.value_or(b.min_d);
    b.max_d = o.max_d.value_or(b.max_d);
    return grid(b);
  }
  if (o.family == "kleinschmidt") {
    BundleBounds b;
    b.min_d = o.min_d.value_or(b.min_d);
    b.max_d = o.max_d.value_or(b.max_d);
    b.max_s = o.max_s.value_or(b.max_s);
    b.max_twist = o.max_twist.value_or(b.max_twist);
    return grid(b);
  }
  if (o.family == "example41") {
    Example41Bounds b;
    b.min_d = o.min_d.value_or(b.min_d);
    b.max_d = o.max_d.value_or(b.max_d);
    b.min_a = o.min_a.value_or(b.min_a);
    b.max_a = o.max_a.value_or(b.max_a);
    return grid(b);
  }
  if (o.family == "batyrev3") {
    BatyrevBounds b;
    b.max_p = o.max_p.value_or(b.max_p);
    b.max_p2 = o.max_p2.value_or(b.max_p2);
    b.max_twist = o.max_twist.value_or(b.max_twist);
    auto all = grid(b);
    if (o.min_d || o.max_d)
      std::erase_if(all, [&](const CatalogParams& p) {
        const int d = std::get<BatyrevParams>(p).dim();
        return d < o.min_d.value_or(d) || d > o.max_d.value_or(d);
      });
    return all;
  }
  throw UsageError("unknown family '" + o.family + "'");
}

int cmd_scan(const ScanOptions& o, std::ostream& out) {
  for (int k : o.ks)
    if (k < 1) throw UsageError("k must be positive");
  const auto params = scan_grid(o);
  std::vector<std::vector<std::string>> lines(params.size());
  std::vector<std::vector<std::pair<int, Positivity>>> tallies(params.size());
  std::vector<std::string> errors(params.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < params.size(); i = next++) {
      try {
        const Fan fan = build(params[i]);
        IntersectionEngine engine(fan);
        for (int k : o.ks) {
          if (static_cast<std::size_t>(k) > fan.rank()) continue;
          const auto r = classify(engine, static_cast<unsigned>(k));
          nlohmann::json j = report_to_json(fan, r, o.values);
          j["family"] = family_name(params[i]);
          j["params"] = describe(params[i]);
          j["rank"] = fan.rank();
          lines[i].push_back(j.dump());
          tallies[i].emplace_back(k, r.classification);
        }
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const unsigned workers = std::max(1u, o.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::map<int, std::map<std::string, std::size_t>> summary;
  std::size_t failed = 0;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!errors[i].empty()) {
      ++failed;
      nlohmann::json j{{"params", describe(params[i])}, {"error", errors[i]}};
      out << j.dump() << "\n";
      continue;
    }
    for (const auto& line : lines[i]) out << line << "\n";
    for (const auto& [k, c] : tallies[i]) ++summary[k][to_string(c)];
  }

  if (o.json) {
    nlohmann::json s;
    s["fans"] = params.size();
    s["failed"] = failed;
    for (const auto& [k, counts] : summary) {
      nlohmann::json per;
      for (auto c : {Positivity::Positive, Positivity::NefNotPositive, Positivity::NotNef})
        per[to_string(c)] = counts.contains(to_string(c)) ? counts.at(to_string(c)) : 0;
      s["by_k"][std::to_string(k)] = per;
    }
    out << nlohmann::json{{"summary", s}}.dump() << "\n";
  } else {
    out << "# " << o.family << ": " << params.size() << " fans, " << failed << " failed to build\n";
    out << "#   k  positive  nef_not_positive  not_nef\n";
    for (const auto& [k, counts] : summary) {
      auto get = [&](Positivity p) { return counts.contains(to_string(p)) ? counts.at(to_string(p)) : 0; };
      std::ostringstream row;
      row << "# " << std::string(3 - std::min<std::size_t>(3, std::to_string(k).size()), ' ') << k << "  "
          << get(Positivity::Positive) << "  " << get(Positivity::NefNotPositive) << "  "
          << get(Positivity::NotNef);
      out << row.str() << "\n";
    }
  }
  return failed == 0 ? kExitOk : kExitBadFan;
}

int cmd_verify(const VerifyConfig& cfg, bool json, std::ostream& out, std::ostream& err) {
  const auto records = verify_paper(cfg, [&](const std::string& family) { err << "verifying " << family << " fans\n"; });
  bool all = true;
  for (const auto& r : records) all = all && r.pass;
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records)
      arr.push_back({{"id", r.id}, {"anchor", r.anchor}, {"status", r.pass ? "pass" : "fail"},
                     {"checks", r.checks}, {"details", r.details}});
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& r : records)
      out << (r.pass ? "pass  " : "FAIL  ") << r.id << "  " << r.anchor << "  (" << r.details << ")\n";
    out << (all ? "all checks passed" : "some checks failed") << "\n";
  }
  return all ? kExitOk : kExitBadFan;
}

}  // namespace

nlohmann::json report_to_json(const Fan& fan, const PositivityReport& report, bool include_values) {
  nlohmann::json j;
  j["k"] = report.k;
  j["classification"] = to_string(report.classification);
  j["min_value"] = to_string(report.min_value);
  j["witness_cone"] = names_json(fan, report.witness);
  if (include_values) {
    j["values"] = nlohmann::json::array();
    for (const auto& v : report.values)
      j["values"].push_back({{"cone", names_json(fan, v.cone)}, {"value", to_string(v.value)}});
  }
  return j;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chern character positivity on smooth complete toric varieties", "toricch"};
  app.require_subcommand(1);

  SourceOptions analyze_src;
  std::vector<int> analyze_k;
  bool analyze_json = false, analyze_values = false;
  auto* analyze = app.add_subcommand("analyze", "classify ch_k on one fan");
  add_source_options(analyze, analyze_src);
  analyze->add_option("--k", analyze_k, "k values (default: all)")->delimiter(',');
  analyze->add_flag("--json", analyze_json);
  analyze->add_flag("--values", analyze_values, "include every per-cone value");

  ScanOptions scan_opt;
  auto* scan = app.add_subcommand("scan", "classify ch_k over a parameter grid");
  scan->add_option("--family", scan_opt.family)->required();
  scan->add_option("--k", scan_opt.ks)->delimiter(',');
  scan->add_option("--min-d", scan_opt.min_d);
  scan->add_option("--max-d", scan_opt.max_d);
  scan->add_option("--max-s", scan_opt.max_s);
  scan->add_option("--max-twist", scan_opt.max_twist);
  scan->add_option("--min-a", scan_opt.min_a);
  scan->add_option("--max-a", scan_opt.max_a);
  scan->add_option("--max-p", scan_opt.max_p);
  scan->add_option("--max-p2", scan_opt.max_p2);
  scan->add_option("--workers", scan_opt.workers);
  scan->add_flag("--json", scan_opt.json, "summary as JSON");
  scan->add_flag("--values", scan_opt.values);

  VerifyConfig vcfg;
  vcfg.workers = std::max(1u, std::thread::hardware_concurrency());
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify-paper", "run every reproduction check");
  verify->add_option("--workers", vcfg.workers);
  verify->add_option("--seed", vcfg.seed);
  verify->add_option("--bundle-max-d", vcfg.bundles.max_d);
  verify->add_option("--bundle-max-twist", vcfg.bundles.max_twist);
  verify->add_option("--batyrev-max-p", vcfg.batyrev.max_p);
  verify->add_option("--batyrev-max-p2", vcfg.batyrev.max_p2);
  verify->add_option("--batyrev-max-twist", vcfg.batyrev.max_twist);
  verify->add_option("--transforms", vcfg.unimodular_transforms);
  verify->add_flag("--json", verify_json);

  SourceOptions export_src;
  std::string export_out;
  auto* exp = app.add_subcommand("export-fan", "write a fan as JSON");
  add_source_options(exp, export_src);
  exp->add_option("--output,-o", export_out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (*analyze)
      code = cmd_analyze(analyze_src, analyze_k, analyze_json, analyze_values, buffer);
    else if (*scan)
      code = cmd_scan(scan_opt, buffer);
    else if (*verify)
      code = cmd_verify(vcfg, verify_json, buffer, err);
    else if (*exp)
      code = cmd_export(export_src, export_out, buffer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FanError& e) {
    err << "invalid fan: " << e.what() << "\n";
    return kExitBadFan;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadFan;
  }
  out << buffer.str();
  return code;
}

}  // namespace toric
