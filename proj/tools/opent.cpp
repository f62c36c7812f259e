// Copyright 2026 The opent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// opent: instance generation, single checks, campaigns and bound constants.
//
// JSON goes to stdout (or --out), a human summary to stderr.
// Exit codes: 0 ok / hypothesis skip, 1 violation, 2 usage or input error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "opent/io.hpp"

namespace {

using opent::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::pair<int, int> parse_range(const std::string& s, const char* what) {
  const auto colon = s.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {v, v};
    }
    const std::string lo = s.substr(0, colon), hi = s.substr(colon + 1);
    const int a = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(s);
    const int b = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(s);
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError(std::string("bad ") + what + " range '" + s + "' (expected lo:hi)");
  }
}

std::vector<opent::TheoremId> parse_theorems(const std::string& s) {
  if (s == "all") return {opent::kAllTheorems.begin(), opent::kAllTheorems.end()};
  std::vector<opent::TheoremId> out;
  for (const auto& name : split(s, ',')) out.push_back(opent::parse_theorem(name));
  if (out.empty()) throw UsageError("no theorems given");
  return out;
}

std::vector<double> parse_reals(const std::string& s) {
  std::vector<double> out;
  for (const auto& tok : split(s, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw UsageError("bad number '" + tok + "'");
    }
  }
  return out;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + out + "'");
  f << text;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

unsigned worker_count(int requested) {
  unsigned n = requested > 0 ? static_cast<unsigned>(requested)
                             : std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("OE_THREADS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v >= 1) n = std::min(n, static_cast<unsigned>(v));
  }
  return n;
}

// --- subcommands ------------------------------------------------------------------

struct GenArgs {
  std::string theorem;
  int dim = 2;
  int k = 2;
  std::uint64_t seed = 0;
  std::string f = "power:0.5";
  double param = 0.5;
  bool diagonal = false;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  const auto id = opent::parse_theorem(a.theorem);
  const auto inst = opent::random_instance(id, a.dim, a.k, a.seed,
                                           opent::ScalarFunction::parse(a.f), a.param, a.diagonal);
  emit(opent::io::to_json(inst).dump(2) + "\n", a.out);
  std::cerr << "generated " << a.theorem << " dim=" << inst.dim << " k=" << inst.k
            << " m=" << inst.m << " M=" << inst.M << "\n";
  return kExitOk;
}

struct CheckArgs {
  std::string instance;
  std::string theorem;
  double tol = opent::kLoewnerTol;
};

int cmd_check(const CheckArgs& a) {
  if (!(a.tol >= 0.0)) throw UsageError("--tol must be >= 0");
  const auto inst = opent::io::instance_from_string(read_file(a.instance));
  const auto id = a.theorem.empty() ? inst.theorem : opent::parse_theorem(a.theorem);
  const auto r = opent::check(id, inst, a.tol);
  std::cout << opent::io::to_json(r).dump(2) << "\n";
  if (!r.hypothesis_met) {
    std::cerr << r.label << ": hypothesis not met (" << r.detail << ")\n";
    return kExitOk;
  }
  std::cerr << r.label << ": " << (r.holds ? "holds" : "VIOLATED") << ", margin " << r.margin;
  if (r.failed()) std::cerr << " [" << opent::to_string(r.triage) << "]";
  std::cerr << "\n";
  return r.holds ? kExitOk : kExitViolation;
}

struct CampaignArgs {
  std::string theorems = "all";
  int trials = 1000;
  std::string dims = "2:8";
  std::string k = "2:4";
  std::string functions = "power:0.5,power:0.25,neg_t_log_t,log";
  std::string params = "0,0.25,0.5,0.75,1";
  double tol = opent::kLoewnerTol;
  std::uint64_t seed = 42;
  bool diagonal = false;
  int threads = 0;
  std::string out;
  std::string format = "json";
  std::string csv;
};

opent::CampaignConfig make_config(const CampaignArgs& a) {
  opent::CampaignConfig c;
  c.theorems = parse_theorems(a.theorems);
  c.trials = a.trials;
  std::tie(c.dim_min, c.dim_max) = parse_range(a.dims, "dims");
  std::tie(c.k_min, c.k_max) = parse_range(a.k, "k");
  c.functions = split(a.functions, ',');
  c.params = parse_reals(a.params);
  c.tol = a.tol;
  c.seed = a.seed;
  c.diagonal = a.diagonal;
  c.threads = static_cast<int>(worker_count(a.threads));
  c.validate();
  return c;
}

int cmd_campaign(const CampaignArgs& a) {
  const auto config = make_config(a);
  const auto report = opent::campaign(config);
  if (a.format == "csv") {
    emit(opent::io::to_csv(report), a.out);
  } else {
    emit(opent::io::to_json(report).dump(2) + "\n", a.out);
  }
  if (!a.csv.empty()) emit(opent::io::to_csv(report), a.csv);

  for (const auto& s : report.results) {
    std::cerr << std::left << std::setw(20) << opent::to_string(s.theorem) << " trials "
              << s.trials << "  pass " << s.passes << "  skip " << s.skips << "  fail "
              << s.failures << " (" << s.substantive << " substantive)";
    if (s.errors) std::cerr << "  errors " << s.errors;
    if (s.min_margin) std::cerr << "  min_margin " << *s.min_margin;
    std::cerr << "\n";
  }
  const int bad = report.substantive_violations();
  std::cerr << (bad ? "substantive violations: " + std::to_string(bad) : std::string("no substantive violations"))
            << "\n";
  return bad ? kExitViolation : kExitOk;
}

struct ReplayArgs {
  CampaignArgs campaign;
  std::string theorem;
  std::uint64_t trial_seed = 0;
};

int cmd_replay(const ReplayArgs& a) {
  const auto config = make_config(a.campaign);
  const auto id = opent::parse_theorem(a.theorem);
  const auto rec = opent::run_trial(config, id, a.trial_seed);
  auto j = opent::io::to_json(rec);
  if (rec.error.empty()) j["instance"] = opent::io::to_json(opent::trial_instance(config, id, a.trial_seed));
  emit(j.dump(2) + "\n", a.campaign.out);
  std::cerr << a.theorem << " seed " << a.trial_seed << ": margin " << rec.result.margin << "\n";
  return rec.result.failed() && rec.result.triage == opent::Triage::substantive ? kExitViolation
                                                                                 : kExitOk;
}

struct BoundsArgs {
  std::string f;
  double m = 0.0;
  double M = 0.0;
};

int cmd_bounds(const BoundsArgs& a) {
  const auto f = opent::ScalarFunction::parse(a.f);
  if (!(a.m > 0.0 && a.m < a.M)) throw UsageError("bounds needs 0 < m < M");
  const auto data = opent::secant_data(f, a.m, a.M);
  auto j = opent::io::to_json(data);
  j["f"] = f.spec();
  const bool closed = (f.kind() == opent::FunctionKind::log ||
                       f.kind() == opent::FunctionKind::neg_t_log_t) &&
                      a.m < 1.0 && 1.0 < a.M;
  if (closed) {
    const auto z = opent::zeta_closed_forms(a.m, a.M);
    const double ref = f.kind() == opent::FunctionKind::log ? z.zeta_log : z.zeta_neg_t_log_t;
    j["zeta_closed_form"] = ref;
    j["zeta_closed_form_delta"] = std::abs(data.zeta - ref);
  }
  std::cout << j.dump(2) << "\n";
  std::cerr << f.spec() << " on [" << a.m << ", " << a.M << "]: zeta " << data.zeta;
  if (data.gamma) std::cerr << ", gamma " << *data.gamma;
  std::cerr << "\n";
  return kExitOk;
}

void add_campaign_flags(CLI::App* sub, CampaignArgs& a) {
  sub->add_option("--theorems", a.theorems, "comma-separated theorem names or 'all'");
  sub->add_option("--trials", a.trials, "trials per theorem")->check(CLI::NonNegativeNumber);
  sub->add_option("--dims", a.dims, "dimension range lo:hi");
  sub->add_option("--k", a.k, "number of field nodes / compressions, lo:hi");
  sub->add_option("--functions", a.functions, "comma-separated function specs");
  sub->add_option("--q-or-p,--params", a.params, "comma-separated q/p values");
  sub->add_option("--tol", a.tol, "Loewner tolerance");
  sub->add_option("--seed", a.seed, "master seed");
  sub->add_flag("--diagonal", a.diagonal, "simultaneously diagonal instances");
  sub->add_option("--threads", a.threads, "worker threads (0 = all cores, capped by OE_THREADS)");
  sub->add_option("--out", a.out, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"opent: numerical verification of operator entropy inequalities"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a random instance for a theorem");
  gen_cmd->add_option("--theorem", gen.theorem, "theorem name")->required();
  gen_cmd->add_option("--dim", gen.dim, "matrix dimension")->check(CLI::Range(1, 64));
  gen_cmd->add_option("--k", gen.k, "number of field nodes / compressions")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed, "seed");
  gen_cmd->add_option("--f", gen.f, "function spec");
  gen_cmd->add_option("--q,--p,--param", gen.param, "q or p");
  gen_cmd->add_flag("--diagonal", gen.diagonal, "simultaneously diagonal instance");
  gen_cmd->add_option("--out", gen.out, "output path (default stdout)");

  CheckArgs chk;
  auto* check_cmd = app.add_subcommand("check", "check one instance file");
  check_cmd->add_option("instance,--instance", chk.instance, "instance JSON ('-' for stdin)")
      ->required();
  check_cmd->add_option("--theorem", chk.theorem, "override the instance's theorem");
  check_cmd->add_option("--tol", chk.tol, "Loewner tolerance");

  CampaignArgs camp;
  auto* camp_cmd = app.add_subcommand("campaign", "run randomized trials for many theorems");
  add_campaign_flags(camp_cmd, camp);
  camp_cmd->add_option("--format", camp.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  camp_cmd->add_option("--csv", camp.csv, "also write one CSV row per trial here");

  ReplayArgs rep;
  auto* rep_cmd = app.add_subcommand("replay", "re-run one campaign trial from its seed");
  add_campaign_flags(rep_cmd, rep.campaign);
  rep_cmd->add_option("--theorem", rep.theorem, "theorem name")->required();
  rep_cmd->add_option("--trial-seed", rep.trial_seed, "trial seed (worst_seed in reports)")
      ->required();

  BoundsArgs bnd;
  auto* bnd_cmd = app.add_subcommand("bounds", "secant constants gamma_f and zeta_f");
  bnd_cmd->add_option("--f", bnd.f, "function spec")->required();
  bnd_cmd->add_option("--m", bnd.m, "lower end")->required();
  bnd_cmd->add_option("--M", bnd.M, "upper end")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*check_cmd) return cmd_check(chk);
    if (*camp_cmd) return cmd_campaign(camp);
    if (*rep_cmd) return cmd_replay(rep);
    if (*bnd_cmd) return cmd_bounds(bnd);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const opent::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
