// Copyright 2026 The fpcheb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fpcheb/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/chrono.h>
#include <fmt/format.h>

#include "fpcheb/arith_sums.hpp"
#include "fpcheb/artin.hpp"
#include "fpcheb/census.hpp"
#include "fpcheb/charsum.hpp"
#include "fpcheb/errors.hpp"
#include "fpcheb/factor.hpp"
#include "fpcheb/forge.hpp"
#include "fpcheb/interval.hpp"
#include "fpcheb/morse.hpp"
#include "fpcheb/selftest.hpp"

namespace fpcheb {

namespace {

struct Artifact {
  std::string text;
  int status = kExitOk;
};

std::string timestamp_utc() {
  return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}",
                     fmt::gmtime(std::chrono::system_clock::to_time_t(std::chrono::system_clock::now())));
}

std::string finish(Json j, const RunConfig& cfg) {
  if (!cfg.no_timestamp) j["generated_at"] = timestamp_utc();
  return j.dump(2) + "\n";
}

std::string resolve_format(const RunConfig& cfg, const std::string& fallback,
                           std::initializer_list<const char*> allowed) {
  const std::string fmt_name = cfg.format.empty() ? fallback : cfg.format;
  for (const char* a : allowed) {
    if (fmt_name == a) return fmt_name;
  }
  throw PreconditionError(fmt::format("{} does not emit format '{}'", cfg.command, fmt_name));
}

PrimeModulus require_modulus(const RunConfig& cfg) {
  if (cfg.p == 0) throw PreconditionError("--p is required");
  return PrimeModulus(cfg.p);
}

Poly parse_poly_for(const PrimeModulus& mod, const std::string& text, const char* what) {
  Poly f = Poly::parse(text);
  if (f.p() != mod.value()) {
    throw PreconditionError(fmt::format("{} is over F_{}, expected F_{}", what, f.p(), mod.value()));
  }
  return f;
}

Poly resolve_base(const PrimeModulus& mod, const RunConfig& cfg, int d) {
  if (!cfg.base.empty()) return parse_poly_for(mod, cfg.base, "--base");
  if (d < 2) throw PreconditionError("--d must be >= 2");
  return find_morse_polynomial(mod, d);
}

IntervalFp resolve_interval(const PrimeModulus& mod, const std::string& text) {
  return text.empty() ? IntervalFp::full(mod) : IntervalFp::parse(mod, text);
}

std::vector<Residue> resolve_shifts(const PrimeModulus& mod, const std::vector<u64>& shifts) {
  std::vector<Residue> out;
  for (u64 h : shifts) out.push_back(mod.reduce(h));
  return out;
}

FactorizationType resolve_lambda(const RunConfig& cfg, int d) {
  if (cfg.lambda.empty()) return FactorizationType({d});
  FactorizationType lambda = FactorizationType::parse(cfg.lambda);
  if (lambda.total() != d) {
    throw PreconditionError(fmt::format("--lambda {} is not a partition of {}", cfg.lambda, d));
  }
  return lambda;
}

Artifact dry_run(const RunConfig& cfg, Json resolved) {
  Json j = artifact("dry-run");
  j["config"] = config_json(cfg);
  j["resolved"] = std::move(resolved);
  return {finish(std::move(j), cfg)};
}

ForgeSchedule resolve_schedule(const RunConfig& cfg) {
  ForgeSchedule s;
  s.interval_factor = cfg.interval_factor;
  s.b_prefix = cfg.b_prefix;
  s.interval_start = cfg.interval_start;
  s.max_doublings = cfg.max_doublings;
  if (!(s.interval_factor > 0)) throw PreconditionError("--interval-factor must be positive");
  if (s.max_doublings < 0) throw PreconditionError("--max-doublings must be >= 0");
  return s;
}

Artifact cmd_forge(const RunConfig& cfg) {
  const PrimeModulus mod = require_modulus(cfg);
  resolve_format(cfg, "json", {"json"});
  const Poly base = cfg.base.empty() ? Poly::monomial(mod, cfg.d)
                                     : parse_poly_for(mod, cfg.base, "--base");
  if (!base.is_monic() || base.degree() < 2) throw PreconditionError("--base must be monic, degree >= 2");
  if (mod.value() <= static_cast<u64>(base.degree()) + 1) throw PreconditionError("forge needs p > d + 1");
  ForgeSchedule schedule = resolve_schedule(cfg);
  schedule.interval_start = mod.reduce(schedule.interval_start);
  if (cfg.dry_run) return dry_run(cfg, {{"base", base.to_text()}});
  return {finish(forge_json(construct_irreducible(base, schedule), !cfg.no_timestamp), cfg)};
}

Artifact cmd_scaling(const RunConfig& cfg) {
  const std::string format = resolve_format(cfg, "csv", {"csv", "json"});
  BaseRule rule;
  if (cfg.base_rule == "monomial") {
    rule = BaseRule::monomial;
  } else if (cfg.base_rule == "morse") {
    rule = BaseRule::morse;
  } else {
    throw PreconditionError("--base-rule must be monomial or morse");
  }
  for (u64 p : cfg.primes) {
    const PrimeModulus mod(p);
    if (p <= static_cast<u64>(cfg.d) + 1) throw PreconditionError(fmt::format("p = {} is not > d + 1", p));
  }
  if (cfg.d < 2) throw PreconditionError("--d must be >= 2");
  const ForgeSchedule schedule = resolve_schedule(cfg);
  if (cfg.primes.size() < 3) throw PreconditionError("--primes needs at least three primes");
  if (cfg.dry_run) return dry_run(cfg, {{"primes", cfg.primes}});
  const ScalingTable table = cost_scaling_experiment(cfg.primes, cfg.d, rule, schedule, cfg.workers);
  if (format == "csv") return {scaling_csv(table)};
  return {finish(scaling_json(table, !cfg.no_timestamp), cfg)};
}

MainTerms resolve_main_terms(const std::string& s) {
  if (s == "certify") return MainTerms::certify;
  if (s == "assume-symmetric") return MainTerms::assume_symmetric;
  if (s == "none") return MainTerms::none;
  throw PreconditionError("--main-terms must be certify, assume-symmetric or none");
}

Artifact cmd_census(const RunConfig& cfg) {
  const PrimeModulus mod = require_modulus(cfg);
  const std::string format = resolve_format(cfg, "json", {"json", "csv"});
  const Poly base = resolve_base(mod, cfg, cfg.d);
  const FamilyShape shape = FamilyShape::parse(cfg.shape, base);
  const IntervalFp interval = resolve_interval(mod, cfg.interval);
  CensusOptions options{resolve_main_terms(cfg.main_terms), cfg.workers};
  std::optional<Residue> fixed;
  if (cfg.fixed) fixed = mod.reduce(*cfg.fixed);
  if (cfg.dry_run) {
    return dry_run(cfg, {{"base", base.to_text()}, {"shape", shape.label()},
                         {"interval", interval.to_text()}});
  }
  const CensusReport report = interval_census(shape, fixed, interval, options);
  if (format == "csv") return {census_csv(report)};
  Json j = census_json(report);
  if (report.has_main_terms()) j["total_variation"] = total_variation_distance(report);
  return {finish(std::move(j), cfg)};
}

Artifact cmd_charsum(const RunConfig& cfg) {
  const PrimeModulus mod = require_modulus(cfg);
  if (mod.value() > kCharacterSumMaxP) throw PreconditionError("charsum needs p <= 10^6");
  const Poly base = resolve_base(mod, cfg, cfg.d);
  const FactorizationType lambda = resolve_lambda(cfg, base.degree());
  if (cfg.all_b == cfg.b.has_value()) throw PreconditionError("give exactly one of --b or --all-b");
  const std::string format = resolve_format(cfg, cfg.all_b ? "csv" : "json", {"json", "csv"});
  if (cfg.dry_run) return dry_run(cfg, {{"base", base.to_text()}, {"lambda", lambda.label()}});

  const ClassIndicator indicator = class_indicator(base, lambda, cfg.workers);
  if (!cfg.all_b) {
    const Residue b = mod.reduce(*cfg.b);
    const auto s = twisted_class_sum(indicator, RootsOfUnity(mod.value()), b);
    if (format == "csv") {
      return {fmt::format("b,re,im,abs\n{},{},{},{}\n", b, format_double(s.real()),
                          format_double(s.imag()), format_double(std::abs(s)))};
    }
    Json j = artifact("charsum");
    j["p"] = mod.value();
    j["base"] = base.to_text();
    j["lambda"] = lambda.label();
    j["class_count"] = indicator.count;
    j["b"] = b;
    j["sum"] = complex_json(s);
    return {finish(std::move(j), cfg)};
  }

  const auto sums = twisted_class_sums(indicator);
  const ParsevalCheck parseval = parseval_check(indicator, sums);
  const int status = parseval.ok ? kExitOk : kExitInvariant;
  if (format == "csv") {
    std::string text = "b,re,im,abs\n";
    for (u64 b = 0; b < sums.size(); ++b) {
      text += fmt::format("{},{},{},{}\n", b, format_double(sums[b].real()),
                          format_double(sums[b].imag()), format_double(std::abs(sums[b])));
    }
    text += fmt::format("parseval,{},{},{}\n", format_double(parseval.lhs),
                        format_double(parseval.rhs), format_double(parseval.relative_error));
    return {text, status};
  }
  Json j = artifact("charsum");
  j["p"] = mod.value();
  j["base"] = base.to_text();
  j["lambda"] = lambda.label();
  j["class_count"] = indicator.count;
  j["ramified"] = indicator.ramified;
  double max_nonzero = 0;
  Json rows = Json::array();
  for (u64 b = 0; b < sums.size(); ++b) {
    if (b > 0) max_nonzero = std::max(max_nonzero, std::abs(sums[b]));
    Json row = complex_json(sums[b]);
    row["b"] = b;
    rows.push_back(std::move(row));
  }
  j["max_abs_nonzero_b"] = max_nonzero;
  j["sums"] = std::move(rows);
  j["parseval"] = {{"lhs", parseval.lhs}, {"rhs", parseval.rhs},
                   {"relative_error", parseval.relative_error}, {"ok", parseval.ok}};
  return {finish(std::move(j), cfg), status};
}

Artifact cmd_complete(const RunConfig& cfg) {
  const PrimeModulus mod = require_modulus(cfg);
  if (mod.value() > kCharacterSumMaxP) throw PreconditionError("complete needs p <= 10^6");
  resolve_format(cfg, "json", {"json"});
  const Poly base = resolve_base(mod, cfg, cfg.d);
  const FactorizationType lambda = resolve_lambda(cfg, base.degree());
  const IntervalFp interval = resolve_interval(mod, cfg.interval);
  if (cfg.dry_run) {
    return dry_run(cfg, {{"base", base.to_text()}, {"lambda", lambda.label()},
                         {"interval", interval.to_text()}});
  }
  const CompletedSum cs = completed_sum_decomposition(base, lambda, interval);
  Json j = artifact("complete");
  j["p"] = mod.value();
  j["base"] = base.to_text();
  j["lambda"] = lambda.label();
  j["interval"] = interval.to_text();
  j["direct_count"] = cs.direct_count;
  j["reconstruction"] = complex_json(cs.reconstruction);
  j["reconstruction_error"] = cs.reconstruction_error;
  j["main_term"] = cs.main_term;
  j["tail_bound"] = cs.tail_bound;
  return {finish(std::move(j), cfg)};
}

Artifact cmd_cubic(const RunConfig& cfg) {
  const PrimeModulus mod = require_modulus(cfg);
  resolve_format(cfg, "json", {"json"});
  if (mod.value() % 3 != 1) throw PreconditionError("cubic needs p = 1 mod 3");
  const Residue omega = cfg.omega ? mod.reduce(*cfg.omega) : primitive_cube_root(mod);
  const auto shifts = resolve_shifts(mod, cfg.shifts);
  const IntervalFp interval = resolve_interval(mod, cfg.interval);
  if (cfg.dry_run) return dry_run(cfg, {{"omega", omega}, {"interval", interval.to_text()}});
  const JointCubicCensus census = joint_cubic_census(mod, shifts, interval, omega);
  Json j = artifact("cubic");
  j["p"] = census.p;
  j["omega"] = census.omega;
  j["shifts"] = census.shifts;
  j["interval"] = interval.to_text();
  j["skipped"] = census.skipped;
  const double cells = std::pow(3.0, static_cast<double>(shifts.size()));
  j["expected_per_cell"] = static_cast<double>(interval.size()) / cells;
  Json rows = Json::array();
  for (const auto& [classes, count] : census.counts) {
    rows.push_back(Json{{"classes", classes}, {"count", count}});
  }
  j["cells"] = std::move(rows);
  return {finish(std::move(j), cfg)};
}

Artifact cmd_chowla(const RunConfig& cfg) {
  const PrimeModulus mod = require_modulus(cfg);
  resolve_format(cfg, "json", {"json"});
  const Poly base = resolve_base(mod, cfg, cfg.d);
  const auto shifts = resolve_shifts(mod, cfg.shifts);
  const IntervalFp interval = resolve_interval(mod, cfg.interval);
  if (cfg.dry_run) return dry_run(cfg, {{"base", base.to_text()}, {"interval", interval.to_text()}});
  const i64 sum = chowla_sum(base, shifts, interval);
  Json j = artifact("chowla");
  j["p"] = mod.value();
  j["base"] = base.to_text();
  j["shifts"] = shifts;
  j["interval"] = interval.to_text();
  j["sum"] = sum;
  j["sum_over_sqrt_p"] = static_cast<double>(sum) / std::sqrt(static_cast<double>(mod.value()));
  return {finish(std::move(j), cfg)};
}

Artifact cmd_divsum(const RunConfig& cfg) {
  const PrimeModulus mod = require_modulus(cfg);
  resolve_format(cfg, "json", {"json"});
  const Poly base = resolve_base(mod, cfg, cfg.d);
  DivisorSumMode mode;
  if (cfg.mode == "shifted") {
    mode = DivisorSumMode::shifted;
  } else if (cfg.mode == "titchmarsh") {
    mode = DivisorSumMode::titchmarsh;
  } else {
    throw PreconditionError("--mode must be shifted or titchmarsh");
  }
  if (cfg.r < 2) throw PreconditionError("--r must be >= 2");
  const IntervalFp interval = resolve_interval(mod, cfg.interval);
  if (cfg.dry_run) return dry_run(cfg, {{"base", base.to_text()}, {"interval", interval.to_text()}});
  Json j = artifact("divsum");
  j["p"] = mod.value();
  j["base"] = base.to_text();
  j["r"] = cfg.r;
  j["mode"] = cfg.mode;
  j["interval"] = interval.to_text();
  j["value"] = divisor_sum(base, cfg.r, interval, mode);
  return {finish(std::move(j), cfg)};
}

Artifact cmd_trinomials(const RunConfig& cfg) {
  const PrimeModulus mod = require_modulus(cfg);
  resolve_format(cfg, "json", {"json"});
  if (mod.value() <= static_cast<u64>(cfg.d) + 1) throw PreconditionError("trinomials needs p > d + 1");
  const IntervalFp i0 = resolve_interval(mod, cfg.interval);
  const IntervalFp i1 = resolve_interval(mod, cfg.interval1);
  if (cfg.dry_run) return dry_run(cfg, {{"i0", i0.to_text()}, {"i1", i1.to_text()}});
  const TrinomialSweep sweep = trinomial_sweep(mod, cfg.d, i0, i1, cfg.workers);
  Json j = artifact("trinomials");
  j["p"] = mod.value();
  j["d"] = cfg.d;
  j["i0"] = i0.to_text();
  j["i1"] = i1.to_text();
  j["count"] = sweep.count;
  j["pairs"] = sweep.pairs;
  j["main_term"] = sweep.main_term;
  j["density_ratio"] = sweep.density_ratio;
  return {finish(std::move(j), cfg)};
}

Artifact cmd_morse(const RunConfig& cfg) {
  const PrimeModulus mod = require_modulus(cfg);
  resolve_format(cfg, "json", {"json"});
  const Poly base = resolve_base(mod, cfg, cfg.d);
  std::optional<Poly> g;
  if (!cfg.g.empty()) g = parse_poly_for(mod, cfg.g, "--g");
  if (cfg.dry_run) return dry_run(cfg, {{"base", base.to_text()}});
  Json j = artifact("morse");
  j["p"] = mod.value();
  j["base"] = base.to_text();
  j["morse"] = is_morse_polynomial(base);
  j["critical_value_polynomial"] = critical_value_polynomial(base).to_text();
  j["type"] = type_json(factorization_type(base));
  j["factorization"] = factorization_json(full_factorization(base, cfg.seed));
  if (g) {
    j["g"] = g->to_text();
    j["morse_rational"] = is_morse_rational(base, *g);
    if (g->degree() >= 1) j["geyer"] = geyer_condition(base, *g);
  }
  return {finish(std::move(j), cfg)};
}

Artifact cmd_badset(const RunConfig& cfg) {
  const PrimeModulus mod = require_modulus(cfg);
  resolve_format(cfg, "json", {"json"});
  const Poly base = resolve_base(mod, cfg, cfg.d);
  const FamilyShape shape = FamilyShape::parse(cfg.shape, base);
  if (cfg.dry_run) return dry_run(cfg, {{"base", base.to_text()}, {"shape", shape.label()}});
  BadSetOptions options;
  options.workers = cfg.workers;
  return {finish(bad_set_json(bad_set(shape, options)), cfg)};
}

Artifact cmd_selftest(const RunConfig& cfg) {
  const std::string format = resolve_format(cfg, "text", {"text", "json"});
  if (cfg.dry_run) return dry_run(cfg, Json::object());
  const auto results = run_selftest();
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  const int status = all ? kExitOk : kExitInvariant;
  if (format == "json") {
    Json j = artifact("selftest");
    Json rows = Json::array();
    for (const auto& r : results) {
      Json row{{"name", r.name}, {"passed", r.passed}};
      if (!r.detail.empty()) row["detail"] = r.detail;
      rows.push_back(std::move(row));
    }
    j["cases"] = std::move(rows);
    j["passed"] = all;
    return {finish(std::move(j), cfg), status};
  }
  std::string text;
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed ? 1 : 0;
    text += fmt::format("{}  {}{}\n", r.passed ? "PASS" : "FAIL", r.name,
                        r.detail.empty() ? "" : "  (" + r.detail + ")");
  }
  text += fmt::format("{}/{} passed\n", passed, results.size());
  return {text, status};
}

using Handler = Artifact (*)(const RunConfig&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"forge", cmd_forge},       {"scaling", cmd_scaling},       {"census", cmd_census},
      {"charsum", cmd_charsum},   {"complete", cmd_complete},     {"cubic", cmd_cubic},
      {"chowla", cmd_chowla},     {"divsum", cmd_divsum},         {"trinomials", cmd_trinomials},
      {"morse", cmd_morse},       {"badset", cmd_badset},         {"selftest", cmd_selftest},
  };
  return table;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) throw PreconditionError("cannot open --out " + cfg.out);
  file << text;
}

}  // namespace

Json config_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  j["p"] = c.p;
  j["d"] = c.d;
  j["base"] = c.base;
  j["shape"] = c.shape;
  j["interval"] = c.interval;
  j["interval1"] = c.interval1;
  j["fixed"] = c.fixed ? Json(*c.fixed) : Json(nullptr);
  j["shifts"] = c.shifts;
  j["r"] = c.r;
  j["mode"] = c.mode;
  j["omega"] = c.omega ? Json(*c.omega) : Json(nullptr);
  j["lambda"] = c.lambda;
  j["b"] = c.b ? Json(*c.b) : Json(nullptr);
  j["all_b"] = c.all_b;
  j["g"] = c.g;
  j["main_terms"] = c.main_terms;
  j["primes"] = c.primes;
  j["base_rule"] = c.base_rule;
  j["interval_factor"] = c.interval_factor;
  j["b_prefix"] = c.b_prefix;
  j["interval_start"] = c.interval_start;
  j["max_doublings"] = c.max_doublings;
  j["seed"] = c.seed;
  j["format"] = c.format;
  j["out"] = c.out;
  j["workers"] = c.workers;
  return j;
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto it = handlers().find(config.command);
  if (it == handlers().end()) {
    err << "error: unknown command '" << config.command << "'\n";
    return kExitValidation;
  }
  try {
    if (config.workers == 0) throw PreconditionError("--workers must be >= 1");
    const Artifact a = it->second(config);
    emit(config, a.text, out);
    if (a.status == kExitInvariant) err << "invariant violated: see artifact\n";
    return a.status;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.invariant() << ": " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Finite-field polynomial experiments"};
  app.name("fpcheb");
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json or csv (text for selftest)");
    sub->add_option("--out", cfg.out, "Write the artifact here instead of stdout");
    sub->add_option("--workers", cfg.workers, "Worker threads for partitioned scans");
    sub->add_option("--seed", cfg.seed, "Seed for randomized splitting");
    sub->add_flag("--dry-run", cfg.dry_run, "Validate and print the resolved config");
    sub->add_flag("--no-timestamp", cfg.no_timestamp, "Omit timestamp and timing fields");
  };
  auto add_p = [&](CLI::App* sub) { sub->add_option("--p", cfg.p, "Prime modulus"); };
  auto add_d = [&](CLI::App* sub) { sub->add_option("--d", cfg.d, "Degree"); };
  auto add_base = [&](CLI::App* sub) {
    sub->add_option("--base", cfg.base, "Base polynomial, p:<p>;c0,c1,...");
  };
  auto add_interval = [&](CLI::App* sub) {
    sub->add_option("--interval", cfg.interval, "M:len[:A:B], default all of F_p");
  };
  auto add_shifts = [&](CLI::App* sub) {
    sub->add_option("--shifts", cfg.shifts, "Distinct shifts")->delimiter(',');
  };
  auto add_lambda = [&](CLI::App* sub) {
    sub->add_option("--lambda", cfg.lambda, "Factorization type as a comma list");
  };
  auto add_schedule = [&](CLI::App* sub) {
    sub->add_option("--interval-factor", cfg.interval_factor);
    sub->add_option("--b-prefix", cfg.b_prefix);
    sub->add_option("--interval-start", cfg.interval_start);
    sub->add_option("--max-doublings", cfg.max_doublings);
  };
  auto add_fixed = [&](CLI::App* sub) {
    sub->add_option_function<u64>("--fixed", [&](const u64& v) { cfg.fixed = v; },
                                  "Fixed coefficient of the family");
  };

  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, handler] : handlers()) {
    (void)handler;
    subs[name] = app.add_subcommand(name);
    common(subs[name]);
  }
  subs["forge"]->description("Deterministic irreducible f + b x + a");
  add_p(subs["forge"]);
  add_d(subs["forge"]);
  add_base(subs["forge"]);
  add_schedule(subs["forge"]);

  subs["scaling"]->description("Forge cost against p");
  add_d(subs["scaling"]);
  add_schedule(subs["scaling"]);
  subs["scaling"]->add_option("--primes", cfg.primes)->delimiter(',');
  subs["scaling"]->add_option("--base-rule", cfg.base_rule, "monomial or morse");

  subs["census"]->description("Factorization-type census over an interval");
  for (auto* s : {subs["census"], subs["badset"]}) {
    add_p(s);
    add_d(s);
    add_base(s);
    s->add_option("--shape", cfg.shape, "add-const, linear, monomial:m or general:<poly>");
  }
  add_interval(subs["census"]);
  add_fixed(subs["census"]);
  subs["census"]->add_option("--main-terms", cfg.main_terms, "certify, assume-symmetric or none");
  subs["badset"]->description("Exceptional set of a family by full scan");

  subs["charsum"]->description("Twisted class sums S(b)");
  subs["complete"]->description("Completed-sum decomposition of an interval count");
  for (auto* s : {subs["charsum"], subs["complete"]}) {
    add_p(s);
    add_d(s);
    add_base(s);
    add_lambda(s);
  }
  subs["charsum"]->add_option_function<u64>("--b", [&](const u64& v) { cfg.b = v; });
  subs["charsum"]->add_flag("--all-b", cfg.all_b, "Every b in F_p plus the Parseval line");
  add_interval(subs["complete"]);

  subs["cubic"]->description("Joint cubic residue classes of h_i + a");
  add_p(subs["cubic"]);
  add_shifts(subs["cubic"]);
  add_interval(subs["cubic"]);
  subs["cubic"]->add_option_function<u64>("--omega", [&](const u64& v) { cfg.omega = v; });

  subs["chowla"]->description("Sum of products of Moebius values");
  subs["divsum"]->description("Shifted divisor or Titchmarsh sums");
  for (auto* s : {subs["chowla"], subs["divsum"]}) {
    add_p(s);
    add_d(s);
    add_base(s);
    add_interval(s);
  }
  add_shifts(subs["chowla"]);
  subs["divsum"]->add_option("--r", cfg.r);
  subs["divsum"]->add_option("--mode", cfg.mode, "shifted or titchmarsh");

  subs["trinomials"]->description("Irreducible x^d + a1 x + a0 over I0 x I1");
  add_p(subs["trinomials"]);
  add_d(subs["trinomials"]);
  subs["trinomials"]->add_option("--interval,--i0", cfg.interval, "Range of a0");
  subs["trinomials"]->add_option("--i1", cfg.interval1, "Range of a1");

  subs["morse"]->description("Morse and Geyer tests for a polynomial");
  add_p(subs["morse"]);
  add_d(subs["morse"]);
  add_base(subs["morse"]);
  subs["morse"]->add_option("--g", cfg.g, "Denominator for the rational test");

  subs["selftest"]->description("Pass/fail table of small worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) cfg.command = name;
  }
  return dispatch(cfg, out, err);
}

}  // namespace fpcheb
