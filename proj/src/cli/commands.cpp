#include "mixprior/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "mixprior/eppf.hpp"
#include "mixprior/errors.hpp"
#include "mixprior/format.hpp"
#include "mixprior/kplus_prior.hpp"
#include "mixprior/mc_oracle.hpp"
#include "mixprior/partition_functionals.hpp"

namespace mixprior::cli {

namespace {

using json = nlohmann::ordered_json;

// Flags shared by every subcommand that needs a model.
struct ModelFlags {
  std::string model;
  int n = 0;
  double alpha = 0.0;
  double gamma = 0.0;
  std::string prior_k;
  int kmax = TruncationPolicy{}.hard_cap;
  double eps = TruncationPolicy{}.tail_mass_epsilon;
  std::string format = "csv";
  std::string out_path;

  CLI::Option* n_opt = nullptr;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* gamma_opt = nullptr;
  CLI::Option* prior_opt = nullptr;
};

void add_model_flags(CLI::App* cmd, ModelFlags& f, const std::string& default_format = "csv") {
  f.format = default_format;
  cmd->add_option("--model", f.model, "Model class")
      ->required()
      ->check(CLI::IsMember({"dpm", "static", "dynamic"}));
  f.n_opt = cmd->add_option("--n", f.n, "Sample size N")->check(CLI::PositiveNumber);
  f.alpha_opt = cmd->add_option("--alpha", f.alpha, "alpha (DPM, dynamic MFM)");
  f.gamma_opt = cmd->add_option("--gamma", f.gamma, "gamma (static MFM)");
  f.prior_opt = cmd->add_option("--prior-k", f.prior_k,
                                "Prior on K: uniform:LO:HI, geometric:P, bnb:R:A:B, fixed:K, infinity");
  cmd->add_option("--kmax", f.kmax, "Hard cap on the truncation of the sum over K")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--eps", f.eps, "Tail mass of p(K) allowed beyond the truncation");
  cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", f.out_path, "Write results to this file instead of stdout");
}

TruncationPolicy policy_of(const ModelFlags& f) {
  TruncationPolicy p;
  p.hard_cap = f.kmax;
  p.tail_mass_epsilon = f.eps;
  return p;
}

// Parameter values that a sweep may override.
struct Overrides {
  std::optional<int> n;
  std::optional<double> alpha;
  std::optional<double> gamma;
};

// Builds the spec from flags. Commands whose DPM output does not depend on
// alpha pass alpha_free so --alpha may be omitted there.
ModelSpec make_spec(const ModelFlags& f, const Overrides& ov = {}, bool alpha_free = false) {
  const bool has_n = ov.n || f.n_opt->count() > 0;
  if (!has_n) throw InvalidArgument("--n is required");
  const int n = ov.n.value_or(f.n);
  const bool has_alpha = ov.alpha || f.alpha_opt->count() > 0;
  const bool has_gamma = ov.gamma || f.gamma_opt->count() > 0;
  const double alpha = ov.alpha.value_or(f.alpha);
  const double gamma = ov.gamma.value_or(f.gamma);
  const auto policy = policy_of(f);

  if (f.model == "dpm") {
    if (has_gamma) throw InvalidArgument("--gamma does not apply to --model dpm");
    if (f.prior_opt->count() && !parse_component_count_prior(f.prior_k).is_infinity()) {
      throw InvalidArgument("--model dpm implies --prior-k infinity");
    }
    if (!has_alpha && !alpha_free) throw InvalidArgument("--model dpm needs --alpha");
    return ModelSpec::dpm(n, has_alpha ? alpha : 1.0, policy);
  }
  if (!f.prior_opt->count()) throw InvalidArgument("--model " + f.model + " needs --prior-k");
  const auto prior = parse_component_count_prior(f.prior_k);
  if (f.model == "static") {
    if (has_alpha) throw InvalidArgument("--alpha does not apply to --model static");
    if (!has_gamma) throw InvalidArgument("--model static needs --gamma");
    return ModelSpec::static_mfm(n, prior, gamma, policy);
  }
  if (has_gamma) throw InvalidArgument("--gamma does not apply to --model dynamic");
  if (!has_alpha) throw InvalidArgument("--model dynamic needs --alpha");
  return ModelSpec::dynamic_mfm(n, prior, alpha, policy);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw InvalidArgument("empty entry in list '" + text + "'");
    out.push_back(item);
  }
  if (out.empty()) throw InvalidArgument("empty list");
  return out;
}

double to_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || !std::isfinite(v)) throw InvalidArgument("not a number: '" + s + "'");
  return v;
}

int to_int(const std::string& s) {
  const double v = to_real(s);
  if (v != std::floor(v) || std::fabs(v) > 1e9) throw InvalidArgument("not an integer: '" + s + "'");
  return static_cast<int>(v);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split_list(text)) out.push_back(to_int(item));
  return out;
}

// Comma list, or START:STOP:STEP (inclusive).
std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) throw InvalidArgument("range grid must be START:STOP:STEP");
    const double start = to_real(parts[0]), stop = to_real(parts[1]), step = to_real(parts[2]);
    if (!(step > 0.0) || stop < start) throw InvalidArgument("invalid range grid '" + text + "'");
    const auto count = static_cast<long long>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (long long i = 0; i < count; ++i) out.push_back(start + i * step);
  } else {
    for (const auto& item : split_list(text)) out.push_back(to_real(item));
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (!(out[i] > out[i - 1])) throw InvalidArgument("grid must be strictly increasing");
  }
  return out;
}

Functional read_psi_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open psi file '" + path + "'");
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    line = line.substr(start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      values.push_back(to_real(line));
      continue;
    }
    const int n = to_int(line.substr(0, comma));
    if (n != static_cast<int>(values.size()) + 1) {
      throw InvalidArgument("psi file must list n = 1, 2, ... in order");
    }
    values.push_back(to_real(line.substr(comma + 1)));
  }
  return Functional::from_table("custom", std::move(values));
}

void report_truncation(std::ostream& err, const KPlusPmf& pmf) {
  err << "covered_mass=" << format_double(pmf.covered_mass);
  if (pmf.k_max > 0) {
    err << " k_max=" << pmf.k_max << " prior_covered_mass=" << format_double(pmf.prior_covered_mass);
  }
  err << '\n';
  if (pmf.truncation_warning) {
    err << "warning: the truncated sum over K covers less mass than the warn threshold\n";
  }
}

json stats_json(const FunctionalStats& s) {
  json j;
  if (s.k) {
    j["k"] = *s.k;
  } else {
    j["k"] = "weighted";
  }
  j["mean"] = s.mean;
  j["sd"] = s.sd;
  j["variance"] = s.variance;
  return j;
}

std::string k_label(const FunctionalStats& s) {
  return s.k ? std::to_string(*s.k) : std::string("weighted");
}

// --- subcommands ---------------------------------------------------------

struct KPlusCmd {
  ModelFlags model;
  double quantile = 0.99;
  bool summary = false;
};

void run_kplus(const KPlusCmd& c, std::ostream& out, std::ostream& err) {
  const auto spec = make_spec(c.model);
  const auto pmf = kplus_pmf(spec);
  report_truncation(err, pmf);
  const auto s = kplus_summaries(pmf, c.quantile);
  if (c.model.format == "json") {
    json j;
    j["n"] = pmf.n;
    j["covered_mass"] = pmf.covered_mass;
    j["probs"] = pmf.probs;
    j["k_max"] = pmf.k_max;
    j["prior_covered_mass"] = pmf.prior_covered_mass;
    j["truncation_warning"] = pmf.truncation_warning;
    j["summary"] = {{"mean", s.mean},
                    {"sd", s.sd},
                    {"quantile_level", s.quantile_level},
                    {"quantile", s.quantile},
                    {"mode", s.mode},
                    {"p_homogeneity", s.p_homogeneity}};
    out << j.dump(2) << '\n';
    return;
  }
  CsvWriter csv(out);
  if (c.summary) {
    csv.row({"mean", "sd", "quantile", "p_homogeneity", "mode", "covered_mass"});
    csv.row({format_double(s.mean), format_double(s.sd), std::to_string(s.quantile),
             format_double(s.p_homogeneity), std::to_string(s.mode),
             format_double(s.covered_mass)});
    return;
  }
  csv.row({"k", "prob"});
  for (int k = 1; k <= pmf.n; ++k) csv.row({std::to_string(k), format_double(pmf.prob(k))});
}

struct FunctionalCmd {
  ModelFlags model;
  std::string kind = "entropy";
  std::string psi_file;
  std::string kplus = "2,4,6,8";
  bool weighted = false;
};

FunctionalStats conditional_stats(const std::string& kind, const MixtureTables& tables, int k,
                                  const std::optional<Functional>& custom) {
  if (kind == "entropy") return relative_entropy_stats(tables, k);
  if (kind == "singletons") return functional_stats(tables, k, Functional::singletons());
  return functional_stats(tables, k, *custom);
}

void run_functional(const FunctionalCmd& c, std::ostream& out, std::ostream& /*err*/) {
  std::optional<Functional> custom;
  if (c.kind == "custom") {
    if (c.psi_file.empty()) throw InvalidArgument("--kind custom needs --psi-file");
    custom = read_psi_file(c.psi_file);
  }
  std::vector<FunctionalStats> rows;
  if (c.weighted) {
    const auto spec = make_spec(c.model);
    if (c.kind == "entropy") {
      rows.push_back(weighted_relative_entropy_stats(spec));
    } else {
      rows.push_back(weighted_stats(spec, c.kind == "singletons" ? Functional::singletons() : *custom));
    }
  } else {
    const auto spec = make_spec(c.model, {}, true);
    const auto ks = parse_int_list(c.kplus);
    int depth = 1;
    for (int k : ks) {
      if (k < 1 || k > spec.n()) throw InvalidArgument("--kplus values must lie in 1..N");
      depth = std::max(depth, k);
    }
    const MixtureTables tables(spec, depth);
    for (int k : ks) rows.push_back(conditional_stats(c.kind, tables, k, custom));
  }

  if (c.model.format == "json") {
    json j;
    j["kind"] = c.kind;
    j["rows"] = json::array();
    for (const auto& r : rows) j["rows"].push_back(stats_json(r));
    out << j.dump(2) << '\n';
    return;
  }
  CsvWriter csv(out);
  csv.row({"k", "mean", "sd"});
  for (const auto& r : rows) csv.row({k_label(r), format_double(r.mean), format_double(r.sd)});
}

struct SweepCmd {
  ModelFlags model;
  std::string target;
  std::string axis;
  std::string grid;
  std::string kplus;
  double quantile = 0.99;
};

struct SweepRow {
  std::string axis;
  std::string k;
  std::string stat;
  double value;
};

void sweep_point(const SweepCmd& c, const ModelSpec& spec, const std::string& axis_label,
                 const std::vector<int>& ks, std::vector<SweepRow>& rows) {
  auto push = [&](const std::string& k, const std::string& stat, double v) {
    rows.push_back({axis_label, k, stat, v});
  };
  if (c.target == "kplus") {
    const auto pmf = kplus_pmf(spec);
    const auto s = kplus_summaries(pmf, c.quantile);
    push("", "mean", s.mean);
    push("", "sd", s.sd);
    push("", "quantile", s.quantile);
    push("", "p_homogeneity", s.p_homogeneity);
    push("", "covered_mass", s.covered_mass);
    for (int k : ks) push(std::to_string(k), "prob", pmf.prob(k));
    return;
  }
  if (c.target == "weighted-entropy") {
    const auto s = weighted_relative_entropy_stats(spec);
    push("weighted", "mean", s.mean);
    push("weighted", "sd", s.sd);
    return;
  }
  int depth = 1;
  for (int k : ks) {
    if (k < 1 || k > spec.n()) {
      throw InvalidArgument("K+ = " + std::to_string(k) + " outside 1..N");
    }
    depth = std::max(depth, k);
  }
  const MixtureTables tables(spec, depth);
  for (int k : ks) {
    const auto kl = std::to_string(k);
    if (c.target == "marginal") {
      const auto pmf = marginal_size_pmf(tables, k);
      for (std::size_t n = 0; n < pmf.size(); ++n) {
        push(kl, "marginal:" + std::to_string(n + 1), pmf[n]);
      }
      continue;
    }
    const auto s = c.target == "entropy" ? relative_entropy_stats(tables, k)
                                         : functional_stats(tables, k, Functional::singletons());
    push(kl, "mean", s.mean);
    push(kl, "sd", s.sd);
  }
}

void run_sweep(const SweepCmd& c, std::ostream& out, std::ostream& /*err*/) {
  const auto grid = parse_grid(c.grid);
  const auto& model = c.model.model;
  if (c.axis == "gamma" && model != "static") {
    throw InvalidArgument("--axis gamma applies to --model static only");
  }
  if (c.axis == "alpha" && model == "static") {
    throw InvalidArgument("--axis alpha applies to --model dpm or dynamic");
  }
  std::vector<int> ks;
  if (!c.kplus.empty()) {
    ks = parse_int_list(c.kplus);
  } else if (c.target != "kplus") {
    ks = {2, 4, 6, 8};
  }
  const bool alpha_free = c.target == "entropy" || c.target == "singletons" || c.target == "marginal";

  std::vector<SweepRow> rows;
  for (double g : grid) {
    Overrides ov;
    std::string label;
    if (c.axis == "n") {
      if (g != std::floor(g) || g < 1) throw InvalidArgument("--axis n needs positive integers");
      ov.n = static_cast<int>(g);
      label = std::to_string(*ov.n);
    } else {
      (c.axis == "gamma" ? ov.gamma : ov.alpha) = g;
      label = format_double(g);
    }
    try {
      sweep_point(c, make_spec(c.model, ov, alpha_free), label, ks, rows);
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("at grid point " + label + ": " + e.what());
    } catch (const Error& e) {
      throw TruncationError("at grid point " + label + ": " + e.what());
    }
  }

  if (c.model.format == "json") {
    json j;
    j["target"] = c.target;
    j["axis"] = c.axis;
    j["rows"] = json::array();
    for (const auto& r : rows) {
      j["rows"].push_back({{"axis", r.axis}, {"k", r.k}, {"stat", r.stat}, {"value", r.value}});
    }
    out << j.dump(2) << '\n';
    return;
  }
  CsvWriter csv(out);
  csv.row({"axis", "k", "stat", "value"});
  for (const auto& r : rows) csv.row({r.axis, r.k, r.stat, format_double(r.value)});
}

struct SimulateCmd {
  ModelFlags model;
  std::int64_t draws = 1000;
  std::uint64_t seed = 1;
  std::string emit = "draws";
};

std::string join_sizes(const std::vector<int>& sizes) {
  std::string s;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(sizes[i]);
  }
  return s;
}

void run_simulate(const SimulateCmd& c, std::ostream& out, std::ostream& /*err*/) {
  const auto spec = make_spec(c.model);
  const bool json_out = c.model.format == "json";
  if (c.emit == "pmf") {
    const auto est = estimate_kplus_pmf(spec, c.draws, c.seed);
    if (json_out) {
      json j;
      j["n"] = est.n;
      j["draws"] = est.draws;
      j["seed"] = c.seed;
      j["freq"] = est.freq;
      j["se"] = est.se;
      out << j.dump(2) << '\n';
      return;
    }
    CsvWriter csv(out);
    csv.row({"k", "freq", "se"});
    for (int k = 1; k <= est.n; ++k) {
      csv.row({std::to_string(k), format_double(est.freq[k - 1]), format_double(est.se[k - 1])});
    }
    return;
  }
  const auto samples = simulate_partitions(spec, c.draws, c.seed);
  if (json_out) {
    json j;
    j["n"] = spec.n();
    j["seed"] = c.seed;
    j["draws"] = json::array();
    for (const auto& s : samples) j["draws"].push_back({{"k_plus", s.k_plus}, {"sizes", s.sizes}});
    out << j.dump(2) << '\n';
    return;
  }
  CsvWriter csv(out);
  csv.row({"draw", "k_plus", "sizes"});
  for (std::size_t i = 0; i < samples.size(); ++i) {
    csv.row({std::to_string(i + 1), std::to_string(samples[i].k_plus), join_sizes(samples[i].sizes)});
  }
}

struct MarginalCmd {
  ModelFlags model;
  int kplus = 1;
};

void run_marginal(const MarginalCmd& c, std::ostream& out, std::ostream& /*err*/) {
  const auto spec = make_spec(c.model, {}, true);
  if (c.kplus < 1 || c.kplus > spec.n()) throw InvalidArgument("--kplus must lie in 1..N");
  const auto pmf = marginal_size_pmf(spec, c.kplus);
  if (c.model.format == "json") {
    json j;
    j["n"] = spec.n();
    j["k"] = c.kplus;
    j["probs"] = pmf;
    out << j.dump(2) << '\n';
    return;
  }
  CsvWriter csv(out);
  csv.row({"n", "prob"});
  for (std::size_t n = 0; n < pmf.size(); ++n) csv.row({std::to_string(n + 1), format_double(pmf[n])});
}

struct EppfCmd {
  ModelFlags model;
  std::string sizes;
};

void run_eppf(const EppfCmd& c, std::ostream& out, std::ostream& /*err*/) {
  const LabelledSizes sizes(parse_int_list(c.sizes));
  Overrides ov;
  if (c.model.n_opt->count() == 0) ov.n = sizes.n();
  const auto spec = make_spec(c.model, ov);
  if (sizes.n() != spec.n()) {
    throw InvalidArgument("--sizes add up to " + std::to_string(sizes.n()) + ", not --n " +
                          std::to_string(spec.n()));
  }
  const double lp = log_eppf(sizes, spec);
  const double cond = conditional_sizes_prior(sizes, spec);
  if (c.model.format == "json") {
    json j;
    j["sizes"] = std::vector<int>(sizes.sizes().begin(), sizes.sizes().end());
    j["n"] = sizes.n();
    j["k"] = sizes.k();
    j["log_prob"] = lp;
    j["prob"] = std::exp(lp);
    j["conditional_prob"] = cond;
    out << j.dump(2) << '\n';
    return;
  }
  CsvWriter csv(out);
  csv.row({"log_prob", "prob", "conditional_prob"});
  csv.row({format_double(lp), format_double(std::exp(lp)), format_double(cond)});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Implicit priors on the number of data clusters and on partitions", "mixprior"};
  app.require_subcommand(1);

  KPlusCmd kplus;
  auto* kplus_cmd = app.add_subcommand("kplus", "Prior pmf of the number of data clusters K+");
  add_model_flags(kplus_cmd, kplus.model);
  kplus_cmd->add_option("--quantile", kplus.quantile, "Quantile level for the summary");
  kplus_cmd->add_flag("--summary", kplus.summary, "Emit the summary row instead of the pmf (CSV)");

  FunctionalCmd functional;
  auto* functional_cmd =
      app.add_subcommand("functional", "Conditional or weighted stats of a partition functional");
  add_model_flags(functional_cmd, functional.model);
  functional_cmd->add_option("--kind", functional.kind)
      ->check(CLI::IsMember({"entropy", "singletons", "custom"}));
  functional_cmd->add_option("--psi-file", functional.psi_file, "psi(n) values for --kind custom");
  functional_cmd->add_option("--kplus", functional.kplus, "Comma list of K+ values");
  functional_cmd->add_flag("--weighted", functional.weighted, "Weight by the K+ prior");

  SweepCmd sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Long-format sweep over gamma, alpha or N");
  add_model_flags(sweep_cmd, sweep.model);
  sweep_cmd->add_option("--target", sweep.target)
      ->required()
      ->check(CLI::IsMember({"kplus", "entropy", "singletons", "weighted-entropy", "marginal"}));
  sweep_cmd->add_option("--axis", sweep.axis)->required()->check(CLI::IsMember({"gamma", "alpha", "n"}));
  sweep_cmd->add_option("--grid", sweep.grid, "Comma list or START:STOP:STEP")->required();
  sweep_cmd->add_option("--kplus", sweep.kplus, "Comma list of K+ values");
  sweep_cmd->add_option("--quantile", sweep.quantile);

  SimulateCmd simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "Simulate partitions from the generative model");
  add_model_flags(simulate_cmd, simulate.model);
  simulate_cmd->add_option("--draws", simulate.draws)->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--seed", simulate.seed);
  simulate_cmd->add_option("--emit", simulate.emit)->check(CLI::IsMember({"draws", "pmf"}));

  MarginalCmd marginal;
  auto* marginal_cmd = app.add_subcommand("marginal", "Marginal pmf of one labelled cluster size");
  add_model_flags(marginal_cmd, marginal.model);
  marginal_cmd->add_option("--kplus", marginal.kplus)->required();

  EppfCmd eppf;
  auto* eppf_cmd = app.add_subcommand("eppf", "Prior probability of a partition with given block sizes");
  add_model_flags(eppf_cmd, eppf.model, "json");
  eppf_cmd->add_option("--sizes", eppf.sizes, "Comma list of block sizes")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const ModelFlags* flags = nullptr;
  std::function<void(std::ostream&)> body;
  if (kplus_cmd->parsed()) {
    flags = &kplus.model;
    body = [&](std::ostream& o) { run_kplus(kplus, o, err); };
  } else if (functional_cmd->parsed()) {
    flags = &functional.model;
    body = [&](std::ostream& o) { run_functional(functional, o, err); };
  } else if (sweep_cmd->parsed()) {
    flags = &sweep.model;
    body = [&](std::ostream& o) { run_sweep(sweep, o, err); };
  } else if (simulate_cmd->parsed()) {
    flags = &simulate.model;
    body = [&](std::ostream& o) { run_simulate(simulate, o, err); };
  } else if (marginal_cmd->parsed()) {
    flags = &marginal.model;
    body = [&](std::ostream& o) { run_marginal(marginal, o, err); };
  } else {
    flags = &eppf.model;
    body = [&](std::ostream& o) { run_eppf(eppf, o, err); };
  }

  try {
    std::ostringstream buffer;
    body(buffer);
    if (flags->out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(flags->out_path, std::ios::binary);
      if (!file) throw InvalidArgument("cannot write '" + flags->out_path + "'");
      file << buffer.str();
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace mixprior::cli
