// Copyright 2026 The exo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "exo_cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "exo/errors.hpp"
#include "exo/gateset.hpp"
#include "exo/genetic.hpp"
#include "exo/metrics.hpp"
#include "exo/nelder_mead.hpp"
#include "exo/objective.hpp"
#include "exo/pulse.hpp"

namespace exo::cli {

namespace {

using nlohmann::json;

/// Raised for anything that should end with exit status 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

std::string sci(cplx z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e%+.6ei", z.real(), z.imag());
  return buf;
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

// Options shared by every command that reads one sequence.
struct SourceOptions {
  std::string file;
  std::string builtin;
  bool polished = false;
  std::string variant = "table4";
  int sign = 1;
  bool as_json = false;
};

void add_source_options(CLI::App* cmd, SourceOptions& o) {
  cmd->add_option("file", o.file, "Sequence file");
  cmd->add_option("--builtin", o.builtin,
                  "Built-in sequence (cnot_exact_3q picks a table with --variant)");
  cmd->add_flag("--polished", o.polished, "Use the refined times of a builtin");
  cmd->add_option("--variant", o.variant, "Three-qubit exact CNOT table")
      ->check(CLI::IsMember({"table3", "table4"}));
  cmd->add_option("--sign", o.sign, "Exchange exponent sign")->check(CLI::IsMember({1, -1}));
  cmd->add_flag("--json", o.as_json, "Machine-readable report");
}

struct Source {
  ExchangeSequence seq;
  std::string label;
  std::optional<BuiltinId> id;
};

Source load_source(const SourceOptions& o) {
  if (o.file.empty() == o.builtin.empty()) {
    throw InputError("give exactly one of a sequence file or --builtin");
  }
  const auto variant = o.polished ? TableVariant::Polished : TableVariant::Printed;
  if (!o.builtin.empty()) {
    std::optional<BuiltinId> id = builtin_from_string(o.builtin);
    if (o.builtin == "cnot_exact_3q") {
      id = o.variant == "table3" ? BuiltinId::Cnot26_3q : BuiltinId::Cnot31_3q;
    }
    if (!id) throw InputError("unknown builtin '" + o.builtin + "'");
    try {
      return {builtin(*id, variant), std::string(to_string(*id)), id};
    } catch (const std::logic_error& e) {
      throw InputError(e.what());
    }
  }
  try {
    return {read_sequence_file(o.file), o.file, std::nullopt};
  } catch (const ParseError& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(o.file + ": " + e.what());
  } catch (const std::out_of_range& e) {
    throw InputError(o.file + ": " + e.what());
  }
}

Sign to_sign(int s) { return s < 0 ? Sign::Minus : Sign::Plus; }

ComplexMatrix project(const ExchangeSequence& seq, Sign sign) {
  if (seq.n_blocks() < 1 || seq.n_blocks() > 2) {
    throw InputError("sequences must cover one or two encoded blocks");
  }
  const LogicalProjector p(seq.code, seq.n_blocks());
  return project_sequence(seq, p, sign);
}

void emit(std::ostream& out, bool as_json, const json& report,
          const std::vector<std::pair<std::string, std::string>>& lines) {
  if (as_json) {
    out << report.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : lines) {
    out << key;
    for (std::size_t i = key.size(); i < 12; ++i) out << ' ';
    out << value << '\n';
  }
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  SourceOptions src;
  std::string target;
  std::optional<double> tolerance;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const Source s = load_source(o.src);
  std::string target_name = o.target;
  double tol = 1e-6;
  if (s.id) {
    const BuiltinCheck check = documented_check(*s.id);
    if (target_name.empty()) target_name = check.target;
    tol = check.tolerance;
  }
  if (target_name.empty()) target_name = "cnot-invariants";
  if (o.tolerance) tol = *o.tolerance;

  const ComplexMatrix m = project(s.seq, to_sign(o.src.sign));
  const double lambda = leakage_projected(m);
  const Schedule sched = schedule_parallel(s.seq);

  std::optional<double> f, distance;
  bool near_singular = false;
  if (target_name == "cnot-invariants") {
    if (m.rows() != 4) throw InputError("cnot-invariants needs a two-block sequence");
    const FitnessReport r = fitness_projected(m, kCnotInvariants);
    f = r.f;
    near_singular = r.near_singular;
  } else if (target_name != "none") {
    TargetGate tg;
    try {
      tg = target(target_name);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    if (tg.matrix.rows() != m.rows()) {
      throw InputError("target '" + target_name + "' does not match the sequence's logical dimension");
    }
    distance = phase_aligned_distance(m, tg.matrix);
    if (m.rows() == 4) {
      const FitnessReport r = fitness_projected(m, makhlin(tg.matrix));
      f = r.f;
      near_singular = r.near_singular;
    }
  }

  // metric, value: every requested metric must be within tolerance
  std::vector<std::pair<std::string, double>> checked;
  if (target_name == "cnot-invariants") checked.emplace_back("f", *f);
  if (distance) checked.emplace_back("distance", *distance);
  checked.emplace_back("leakage", lambda);
  std::vector<std::string> failed;
  for (const auto& [name, value] : checked)
    if (!(value <= tol)) failed.push_back(name);

  json report = {{"sequence", s.label},
                 {"code", to_string(s.seq.code)},
                 {"n_physical", s.seq.n_physical},
                 {"gates", s.seq.size()},
                 {"cycles", sched.cycle_count()},
                 {"target", target_name},
                 {"leakage", lambda},
                 {"tolerance", tol},
                 {"near_singular", near_singular},
                 {"pass", failed.empty()},
                 {"failed", failed}};
  std::vector<std::pair<std::string, std::string>> lines = {
      {"sequence", s.label + " (" + std::string(to_string(s.seq.code)) + ", " +
                       std::to_string(s.seq.n_physical) + " qubits)"},
      {"gates", std::to_string(s.seq.size())},
      {"cycles", std::to_string(sched.cycle_count())},
      {"target", target_name},
  };
  if (f) {
    report["f"] = *f;
    report["F"] = *f + lambda;
    lines.emplace_back("f", sci(*f) + (near_singular ? " (near-singular penalty)" : ""));
  }
  lines.emplace_back("leakage", sci(lambda));
  if (f) lines.emplace_back("F", sci(*f + lambda));
  if (distance) {
    report["distance"] = *distance;
    lines.emplace_back("distance", sci(*distance));
  }
  lines.emplace_back("tolerance", sci(tol));
  std::string verdict = "PASS";
  if (!failed.empty()) {
    verdict = "FAIL:";
    for (const auto& name : failed) verdict += " " + name;
    verdict += " above tolerance";
  }
  lines.emplace_back("result", verdict);
  emit(out, o.src.as_json, report, lines);
  return failed.empty() ? kPass : kToleranceFailure;
}

// ------------------------------------------------------------ invariants

int cmd_invariants(const SourceOptions& o, std::ostream& out) {
  const Source s = load_source(o);
  const ComplexMatrix m = project(s.seq, to_sign(o.sign));
  if (m.rows() != 4) throw InputError("invariants need a two-block sequence");
  const double lambda = leakage_projected(m);
  json report = {{"sequence", s.label}, {"leakage", lambda}};
  std::vector<std::pair<std::string, std::string>> lines = {{"sequence", s.label}};
  try {
    const MakhlinInvariants inv = makhlin(m);
    report["M1"] = complex_json(inv.m1);
    report["M2"] = complex_json(inv.m2);
    report["near_singular"] = false;
    lines.emplace_back("M1", sci(inv.m1));
    lines.emplace_back("M2", sci(inv.m2));
  } catch (const NearSingularError& e) {
    report["near_singular"] = true;
    report["abs_det"] = e.abs_det();
    lines.emplace_back("M1", "undefined (near-singular, |det| = " + sci(e.abs_det()) + ")");
    lines.emplace_back("M2", "undefined");
  }
  lines.emplace_back("leakage", sci(lambda));
  emit(out, o.as_json, report, lines);
  return kPass;
}

// -------------------------------------------------------------- schedule

int cmd_schedule(const SourceOptions& o, std::ostream& out) {
  const Source s = load_source(o);
  const Schedule sched = schedule_parallel(s.seq);
  json cycles = json::array();
  std::ostringstream text;
  for (std::size_t c = 0; c < sched.cycle_count(); ++c) {
    json gates = json::array();
    char head[48];
    std::snprintf(head, sizeof head, "cycle %3zu  max|t| %.6f ", c + 1, sched.cycle_durations[c]);
    text << head;
    for (std::size_t i : sched.cycles[c]) {
      const PulseGate& g = s.seq.gates[i];
      gates.push_back({{"index", i}, {"q1", g.q1}, {"q2", g.q2}, {"t", g.t}});
      text << " (" << g.q1 << "," << g.q2 << ")";
    }
    text << '\n';
    cycles.push_back({{"gates", gates}, {"duration", sched.cycle_durations[c]}});
  }
  const double serial = serial_time(s.seq);
  const double parallel = sched.parallel_time();
  if (o.as_json) {
    json report = {{"sequence", s.label},      {"gates", s.seq.size()},
                   {"cycles", sched.cycle_count()}, {"serial_time", serial},
                   {"parallel_time", parallel}, {"schedule", cycles}};
    out << report.dump(2) << '\n';
    return kPass;
  }
  out << text.str();
  emit(out, false, {},
       {{"sequence", s.label},
        {"gates", std::to_string(s.seq.size())},
        {"cycles", std::to_string(sched.cycle_count())},
        {"serial", sci(serial)},
        {"parallel", sci(parallel)}});
  return kPass;
}

// ---------------------------------------------------------------- export

void write_output(const std::string& path, const ExchangeSequence& seq, std::ostream& out) {
  if (path.empty()) {
    out << serialize(seq);
    return;
  }
  try {
    write_sequence_file(path, seq);
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

int cmd_export(const SourceOptions& o, const std::string& out_path, std::ostream& out) {
  if (!o.file.empty()) throw InputError("export takes --builtin only");
  const Source s = load_source(o);
  write_output(out_path, s.seq, out);
  return kPass;
}

// -------------------------------------------------------------- optimize

struct OptimizeOptions {
  std::string layout_file;
  std::string target = "cnot-invariants";
  std::string stages = "ga+nm";
  std::string init;
  std::string out_path;
  std::string report_path;
  std::uint64_t seed = 1;
  int workers = 1;
  int sign = 1;
  int max_generations = GAConfig{}.max_generations;
  std::size_t max_iterations = NMConfig{}.max_iterations;
  double epsilon = GAConfig{}.epsilon;
  double nm_step = NMConfig{}.initial_step;
  std::vector<std::string> hold;  // "from:to" gate ranges kept at their start values
  bool as_json = false;
};

/// Indices of the slots left free by the --hold ranges.
std::vector<std::size_t> free_slots(const std::vector<std::string>& hold, std::size_t n) {
  std::vector<bool> held(n, false);
  for (const auto& range : hold) {
    const auto colon = range.find(':');
    std::size_t from = 0, to = 0;
    try {
      if (colon == std::string::npos) throw std::invalid_argument("no colon");
      from = std::stoul(range.substr(0, colon));
      to = std::stoul(range.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw InputError("--hold expects FROM:TO, got '" + range + "'");
    }
    if (from >= to || to > n) throw InputError("--hold range '" + range + "' is empty or out of range");
    for (std::size_t i = from; i < to; ++i) held[i] = true;
  }
  std::vector<std::size_t> slots;
  for (std::size_t i = 0; i < n; ++i)
    if (!held[i]) slots.push_back(i);
  if (slots.empty()) throw InputError("--hold leaves nothing to optimize");
  return slots;
}

ObjectiveTarget objective_target(const std::string& name) {
  if (name == "cnot-invariants") return InvariantTarget{};
  try {
    return GateTarget{target(name).matrix};
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

ExchangeSequence read_input(const std::string& path, bool require_times) {
  try {
    return read_sequence_file(path, require_times);
  } catch (const ParseError& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::out_of_range& e) {
    throw InputError(path + ": " + e.what());
  }
}

int cmd_optimize(const OptimizeOptions& o, std::ostream& out, std::ostream& err) {
  ExchangeSequence layout_seq = read_input(o.layout_file, false);
  const Layout layout = Layout::from_sequence(layout_seq);
  if (layout.size() == 0) throw InputError("layout has no gates");

  Genome x(layout.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = layout_seq.gates[i].t;
  if (!o.init.empty()) {
    const ExchangeSequence init = read_input(o.init, true);
    if (Layout::from_sequence(init).pairs != layout.pairs || init.n_physical != layout.n_physical) {
      throw InputError("--init does not match the layout's qubit pairs");
    }
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = init.gates[i].t;
  }

  std::unique_ptr<SequenceObjective> objective;
  try {
    objective = std::make_unique<SequenceObjective>(layout, objective_target(o.target), to_sign(o.sign));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const std::vector<std::size_t> slots = free_slots(o.hold, x.size());
  const Genome start = x;
  auto expand = [&](std::span<const double> free) {
    Genome full = start;
    for (std::size_t k = 0; k < slots.size(); ++k) full[slots[k]] = free[k];
    return full;
  };
  const ObjectiveFn fn = [&](std::span<const double> free) { return (*objective)(expand(free)); };
  Genome z(slots.size());
  for (std::size_t k = 0; k < slots.size(); ++k) z[k] = x[slots[k]];

  std::ofstream report_file;
  if (!o.report_path.empty()) {
    report_file.open(o.report_path);
    if (!report_file) throw InputError("cannot write report '" + o.report_path + "'");
  }
  auto log = [&](const std::string& line) {
    if (report_file) report_file << line << '\n';
  };

  json stages = json::array();
  if (o.stages.find("ga") != std::string::npos) {
    GAConfig cfg;
    cfg.rng_seed = o.seed;
    cfg.max_generations = o.max_generations;
    cfg.epsilon = o.epsilon;
    log("# stage ga: generation island best mean");
    const IslandRunResult r = island_run(z.size(), fn, cfg, o.workers,
                                         [&](const std::vector<HistoryEntry>& entries) {
                                           for (const auto& e : entries) {
                                             log(std::to_string(e.generation) + " " +
                                                 std::to_string(e.island) + " " + sci(e.best) + " " +
                                                 sci(e.mean));
                                           }
                                         });
    z = r.best;
    stages.push_back({{"stage", "ga"},
                      {"generations", r.generations},
                      {"best", r.best_fitness},
                      {"island", r.best_island}});
  }
  if (o.stages.find("nm") != std::string::npos) {
    NMConfig cfg;
    cfg.max_iterations = o.max_iterations;
    cfg.initial_step = o.nm_step;
    cfg.tolerance = 1e-15;
    const NMResult r = nelder_mead(fn, z, cfg);
    z = r.x;
    log("# stage nm: iterations " + std::to_string(r.iterations) + " evaluations " +
        std::to_string(r.evaluations) + " best " + sci(r.f));
    stages.push_back({{"stage", "nm"}, {"iterations", r.iterations}, {"best", r.f}});
  }

  x = expand(z);
  ExchangeSequence best = layout.with_times(x);
  best.barriers = layout_seq.barriers;
  const SequenceObjective::Breakdown b = objective->evaluate(x);
  const bool converged = b.total < o.epsilon;
  if (!o.out_path.empty()) write_output(o.out_path, best, out);

  json report = {{"target", o.target},   {"stages", stages},       {"leakage", b.leakage},
                 {"F", b.total},         {"epsilon", o.epsilon},   {"converged", converged},
                 {"near_singular", b.near_singular}};
  std::vector<std::pair<std::string, std::string>> lines = {{"target", o.target}};
  for (const auto& st : stages) {
    std::string detail = st["stage"] == "ga" ? std::to_string(st["generations"].get<int>()) + " generations"
                                             : std::to_string(st["iterations"].get<std::size_t>()) + " iterations";
    lines.emplace_back(st["stage"].get<std::string>(), detail + ", best " + sci(st["best"].get<double>()));
  }
  if (std::holds_alternative<InvariantTarget>(objective_target(o.target))) {
    report["f"] = b.f;
    lines.emplace_back("f", sci(b.f));
  } else {
    report["distance"] = b.distance;
    lines.emplace_back("distance", sci(b.distance));
  }
  lines.emplace_back("leakage", sci(b.leakage));
  lines.emplace_back("F", sci(b.total));
  lines.emplace_back("result", converged ? "converged" : "above epsilon " + sci(o.epsilon));
  if (o.out_path.empty() && !o.as_json) {
    // the sequence already went to stdout; keep the summary off it
    emit(err, false, report, lines);
  } else {
    emit(out, o.as_json, report, lines);
  }
  return converged ? kPass : kToleranceFailure;
}

// ----------------------------------------------------------- synth-local

struct SynthOptions {
  std::string target;
  std::string code = "four_qubit";
  std::uint64_t seed = 1;
  std::size_t max_starts = SynthesisOptions{}.max_starts;
  double accept = SynthesisOptions{}.accept_cost;
  std::string out_path;
  bool as_json = false;
};

int cmd_synth_local(const SynthOptions& o, std::ostream& out) {
  const auto code = code_from_string(o.code);
  if (!code) throw InputError("unknown code '" + o.code + "'");
  TargetGate tg;
  try {
    tg = target(o.target == "identity" ? "identity1" : o.target);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (tg.matrix.rows() != 2) throw InputError("synth-local needs a one-qubit target");
  SynthesisOptions opts;
  opts.max_starts = o.max_starts;
  opts.accept_cost = o.accept;

  ExchangeSequence seq = local_layout(*code);
  double cost = 0.0;
  std::size_t starts = o.max_starts;
  bool found = true;
  try {
    const SynthesisResult r = synthesize_local(tg, *code, o.seed, opts);
    seq = r.sequence;
    cost = r.cost;
    starts = r.starts;
  } catch (const BudgetExhausted& e) {
    found = false;
    cost = e.best_cost();
    for (std::size_t i = 0; i < seq.gates.size() && i < e.best_times().size(); ++i) {
      seq.gates[i].t = e.best_times()[i];
    }
  }
  if (!o.out_path.empty()) write_output(o.out_path, seq, out);

  json times = json::array();
  std::string text;
  for (const auto& g : seq.gates) {
    times.push_back(g.t);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%.9f", text.empty() ? "" : " ", g.t);
    text += buf;
  }
  json report = {{"target", tg.name}, {"code", o.code}, {"times", times},
                 {"cost", cost},      {"starts", starts}, {"found", found}};
  emit(out, o.as_json, report,
       {{"target", tg.name},
        {"times", text},
        {"cost", sci(cost)},
        {"starts", std::to_string(starts)},
        {"result", found ? "PASS" : "FAIL: start budget exhausted"}});
  return found ? kPass : kToleranceFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exchange-only encoded gate sequences: verify, inspect, schedule, optimize", "exo"};
  app.require_subcommand(1);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a sequence against a target gate");
  add_source_options(verify_cmd, verify.src);
  verify_cmd->add_option("--target", verify.target,
                         "cnot, cnot-invariants, identity, hadamard, pi8, identity1, sigma_z, none");
  verify_cmd->add_option("--tolerance", verify.tolerance, "Pass threshold for every reported metric");

  SourceOptions inv;
  auto* inv_cmd = app.add_subcommand("invariants", "Local-equivalence invariants and leakage");
  add_source_options(inv_cmd, inv);

  SourceOptions sched;
  auto* sched_cmd = app.add_subcommand("schedule", "Pack a sequence into parallel cycles");
  add_source_options(sched_cmd, sched);

  SourceOptions exp;
  std::string export_out;
  auto* export_cmd = app.add_subcommand("export", "Write a builtin as a sequence file");
  add_source_options(export_cmd, exp);
  export_cmd->add_option("--out", export_out, "Output path (default: stdout)");

  OptimizeOptions opt;
  auto* opt_cmd = app.add_subcommand("optimize", "GA and/or Nelder-Mead over the times of a layout");
  opt_cmd->add_option("layout", opt.layout_file, "Layout file (sequence format, times optional)")
      ->required();
  opt_cmd->add_option("--target", opt.target, "cnot-invariants or a gate name");
  opt_cmd->add_option("--stages", opt.stages)->check(CLI::IsMember({"ga", "nm", "ga+nm"}));
  opt_cmd->add_option("--init", opt.init, "Starting times for nm (sequence file)");
  opt_cmd->add_option("--out", opt.out_path, "Best sequence (default: stdout)");
  opt_cmd->add_option("--report", opt.report_path, "Per-generation log");
  opt_cmd->add_option("--seed", opt.seed);
  opt_cmd->add_option("--workers", opt.workers)->check(CLI::PositiveNumber);
  opt_cmd->add_option("--sign", opt.sign)->check(CLI::IsMember({1, -1}));
  opt_cmd->add_option("--max-generations", opt.max_generations)->check(CLI::NonNegativeNumber);
  opt_cmd->add_option("--max-iterations", opt.max_iterations);
  opt_cmd->add_option("--epsilon", opt.epsilon, "Success threshold on F");
  opt_cmd->add_option("--nm-step", opt.nm_step, "Initial simplex step")->check(CLI::PositiveNumber);
  opt_cmd->add_option("--hold", opt.hold, "Gate range FROM:TO (0-based, end exclusive) held fixed");
  opt_cmd->add_flag("--json", opt.as_json);

  SynthOptions syn;
  auto* syn_cmd = app.add_subcommand("synth-local", "Multistart search for a 4-pulse encoded local gate");
  syn_cmd->add_option("--target", syn.target, "hadamard, pi8, identity, sigma_z")->required();
  syn_cmd->add_option("--code", syn.code)->check(CLI::IsMember({"four_qubit", "three_qubit"}));
  syn_cmd->add_option("--seed", syn.seed);
  syn_cmd->add_option("--max-starts", syn.max_starts)->check(CLI::PositiveNumber);
  syn_cmd->add_option("--accept", syn.accept, "Acceptance cost");
  syn_cmd->add_option("--out", syn.out_path);
  syn_cmd->add_flag("--json", syn.as_json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
    if (inv_cmd->parsed()) return cmd_invariants(inv, out);
    if (sched_cmd->parsed()) return cmd_schedule(sched, out);
    if (export_cmd->parsed()) return cmd_export(exp, export_out, out);
    if (opt_cmd->parsed()) return cmd_optimize(opt, out, err);
    if (syn_cmd->parsed()) return cmd_synth_local(syn, out);
  } catch (const InputError& e) {
    err << "exo: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "exo: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace exo::cli
