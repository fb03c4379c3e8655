#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "truchet/cocycle.hpp"
#include "truchet/collapse.hpp"
#include "truchet/dynamics.hpp"
#include "truchet/mc.hpp"
#include "truchet/render.hpp"
#include "truchet/renorm.hpp"
#include "truchet/rng.hpp"
#include "truchet/sequence.hpp"

namespace {

using nlohmann::json;
using namespace truchet;

struct SeqFlags {
  std::string omega_literal, omega_prime_literal;
  double p = 0.5, q = 0.5;
  bool bernoulli = false;
  std::optional<std::uint64_t> seed;

  void attach(CLI::App* cmd, bool with_prime = true) {
    cmd->add_option("--omega", omega_literal,
                    "omega as a literal like '-+^+--' (periodic extension)");
    if (with_prime)
      cmd->add_option("--omega-prime", omega_prime_literal, "omega' literal");
    cmd->add_option("--p", p, "persistence of omega (or +1-rate with --bernoulli)");
    if (with_prime)
      cmd->add_option("--q", q, "persistence of omega' (or +1-rate with --bernoulli)");
    cmd->add_flag("--bernoulli", bernoulli, "draw i.i.d. entries instead of a chain");
    std::uint64_t* slot = &seed.emplace(0);
    cmd->add_option("--seed", *slot, "seed for sampled sequences")
        ->check(CLI::NonNegativeNumber)
        ->each([this](const std::string&) { seeded = true; });
  }

  bool seeded = false;

  Sequence build(const std::string& literal, double param, std::uint64_t salt) const {
    if (!literal.empty()) return Sequence::from_literal(literal);
    if (!seeded)
      throw std::invalid_argument("--seed is required when sequences are sampled");
    const std::uint64_t s = mix64(*seed ^ salt);
    if (bernoulli) return Sequence::bernoulli(param, s);
    return Sequence::sample_markov(MarkovParams(param), s);
  }

  Sequence build_omega() const { return build(omega_literal, p, 0x0a); }
  Sequence build_omega_prime() const { return build(omega_prime_literal, q, 0x0b); }
};

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

Normal parse_normal(const std::string& name) {
  if (name == "right") return Normal::right();
  if (name == "up") return Normal::up();
  if (name == "left") return Normal::left();
  if (name == "down") return Normal::down();
  throw std::invalid_argument("normal must be right|up|left|down");
}

json trace_to_json(const TraceResult& r) {
  return json{{"status", r.closed() ? "closed" : "open-at-budget"},
              {"period", r.closed() ? r.period : 0},
              {"steps", r.steps},
              {"step_counts", r.step_counts},
              {"displacement_extremes",
               {{"min_a", r.min_a}, {"max_a", r.max_a},
                {"min_b", r.min_b}, {"max_b", r.max_b}}}};
}

std::string trace_to_csv(const TraceResult& r) {
  std::ostringstream s;
  s << "status,period,steps,c1,c2,c3,c4,c5,c6,min_a,max_a,min_b,max_b\n"
    << (r.closed() ? "closed" : "open-at-budget") << ','
    << (r.closed() ? r.period : 0) << ',' << r.steps;
  for (auto c : r.step_counts) s << ',' << c;
  s << ',' << r.min_a << ',' << r.max_a << ',' << r.min_b << ',' << r.max_b << '\n';
  return s.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Truchet tiling dynamics, renormalization and Monte Carlo checks"};
  app.set_config("--config", "", "flat key=value config file");
  app.require_subcommand(1);

  // trace ------------------------------------------------------------------
  auto* trace_cmd = app.add_subcommand("trace", "follow one curve and report closure");
  SeqFlags trace_seq;
  trace_seq.attach(trace_cmd);
  std::int64_t trace_budget = 10000;
  std::string trace_normal = "up";
  std::string trace_format = "json";
  std::string trace_out;
  trace_cmd->add_option("--budget", trace_budget, "maximum number of steps");
  trace_cmd->add_option("--v", trace_normal, "initial normal: right|up|left|down");
  trace_cmd->add_option("--format", trace_format)->check(CLI::IsMember({"json", "csv"}));
  trace_cmd->add_option("--out", trace_out, "output path (default stdout)");

  // collapse ----------------------------------------------------------------
  auto* collapse_cmd = app.add_subcommand("collapse", "collapse a sequence and show the witness");
  SeqFlags collapse_seq;
  collapse_seq.attach(collapse_cmd, /*with_prime=*/false);
  std::int64_t collapse_horizon = 4096;
  std::int64_t collapse_window = 8;
  std::string collapse_out;
  collapse_cmd->add_option("--horizon", collapse_horizon, "scan horizon");
  collapse_cmd->add_option("--window", collapse_window, "printed window half-width");
  collapse_cmd->add_option("--out", collapse_out);

  // renorm ------------------------------------------------------------------
  auto* renorm_cmd = app.add_subcommand("renorm", "repeatedly renormalize sampled states");
  SeqFlags renorm_seq;
  renorm_seq.attach(renorm_cmd);
  int renorm_depth = 5;
  std::int64_t renorm_horizon = 4096, renorm_budget = 100000, renorm_samples = 1;
  std::string renorm_out;
  renorm_cmd->add_option("--depth", renorm_depth);
  renorm_cmd->add_option("--horizon", renorm_horizon);
  renorm_cmd->add_option("--budget", renorm_budget);
  renorm_cmd->add_option("--samples", renorm_samples);
  renorm_cmd->add_option("--out", renorm_out);

  // limit -------------------------------------------------------------------
  auto* limit_cmd = app.add_subcommand("limit", "closed-form limit quantities as CSV");
  long limit_m = 1, limit_n = 1;
  int limit_kmax = 100;
  std::string limit_out;
  limit_cmd->add_option("--m", limit_m)->check(CLI::PositiveNumber);
  limit_cmd->add_option("--n", limit_n)->check(CLI::PositiveNumber);
  limit_cmd->add_option("--kmax", limit_kmax)->check(CLI::PositiveNumber);
  limit_cmd->add_option("--out", limit_out);

  // mc ----------------------------------------------------------------------
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo experiments with analytic anchors");
  std::string mc_experiment;
  double mc_p = 0.5, mc_q = 0.5;
  bool mc_bernoulli = false;
  std::int64_t mc_samples = 100000, mc_budget = 10000;
  std::uint64_t mc_seed = 0;
  std::string mc_out;
  mc_cmd->add_option("--experiment", mc_experiment, "closed|transport|steps|returns|p4")
      ->required()
      ->check(CLI::IsMember({"closed", "transport", "steps", "returns", "p4"}));
  mc_cmd->add_option("--p", mc_p);
  mc_cmd->add_option("--q", mc_q);
  mc_cmd->add_flag("--bernoulli", mc_bernoulli);
  mc_cmd->add_option("--samples", mc_samples)->check(CLI::PositiveNumber);
  mc_cmd->add_option("--budget", mc_budget)->check(CLI::PositiveNumber);
  mc_cmd->add_option("--seed", mc_seed)->required();
  mc_cmd->add_option("--out", mc_out);

  // render ------------------------------------------------------------------
  auto* render_cmd = app.add_subcommand("render", "SVG picture of a tiling");
  SeqFlags render_seq;
  render_seq.attach(render_cmd);
  std::vector<std::int64_t> viewport{-8, 8, -8, 8};
  std::string render_highlight, render_out;
  std::int64_t render_budget = 4096;
  bool render_shade = false, render_div = false;
  double render_scale = 40.0;
  render_cmd->add_option("--viewport", viewport, "m0 m1 n0 n1 (square-center ranges)")
      ->expected(4);
  render_cmd->add_option("--highlight", render_highlight,
                         "trace and overdraw the curve through this normal");
  render_cmd->add_option("--budget", render_budget, "highlight trace budget");
  render_cmd->add_flag("--shade-collapse", render_shade, "gray out collapsed rows/columns");
  render_cmd->add_flag("--dividing-lines", render_div, "-+ lines solid, +- dashed");
  render_cmd->add_option("--scale", render_scale, "pixels per square");
  render_cmd->add_option("--out", render_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse diagnostic
    return code == 0 ? 0 : 2;
  }

  if (trace_cmd->parsed()) {
    const State x{trace_seq.build_omega(), trace_seq.build_omega_prime(),
                  parse_normal(trace_normal)};
    const TraceResult r = trace(x, trace_budget);
    write_output(trace_out, trace_format == "json" ? trace_to_json(r).dump(2) + "\n"
                                                   : trace_to_csv(r));
    return 0;
  }

  if (collapse_cmd->parsed()) {
    const Sequence omega = collapse_seq.build_omega();
    const CollapseWitness w = collapse(omega, collapse_horizon);
    json counts = json::object();
    for (const auto& [i, n] : w.rule.counts) counts[std::to_string(i)] = n;
    json kept = json::object();
    for (const auto& [i, k] : w.kept_indices) kept[std::to_string(i)] = k;
    const json j{{"input", print_literal(omega, -2 * collapse_window, 2 * collapse_window)},
                 {"eta", print_literal(w.eta, -collapse_window, collapse_window)},
                 {"insertion_counts", counts},
                 {"kept_indices", kept}};
    write_output(collapse_out, j.dump(2) + "\n");
    return 0;
  }

  if (renorm_cmd->parsed()) {
    json levels = json::array();
    for (int level = 0; level < renorm_depth; ++level)
      levels.push_back(json{{"level", level},
                            {"outcomes", json::object()},
                            {"steps_histogram", json::object()},
                            {"max_horizon", 0}});
    for (std::int64_t i = 0; i < renorm_samples; ++i) {
      SeqFlags seq = renorm_seq;
      if (renorm_samples > 1 && seq.seeded) *seq.seed = mix64(*renorm_seq.seed + static_cast<std::uint64_t>(i));
      const State x{seq.build_omega(), seq.build_omega_prime(),
                    Normal::from_index(static_cast<int>(i & 3))};
      const auto outcomes = repeated_renormalize(x, renorm_depth, renorm_horizon, renorm_budget);
      for (std::size_t level = 0; level < outcomes.size(); ++level) {
        json& slot = levels[level];
        const std::string tag = to_string(outcomes[level].status);
        slot["outcomes"][tag] = slot["outcomes"].value(tag, 0) + 1;
        const std::string steps = std::to_string(outcomes[level].steps_to_renormalizable);
        slot["steps_histogram"][steps] = slot["steps_histogram"].value(steps, 0) + 1;
        slot["max_horizon"] = std::max<std::int64_t>(slot["max_horizon"].get<std::int64_t>(),
                                                     outcomes[level].horizon_used);
      }
    }
    write_output(renorm_out, json{{"samples", renorm_samples}, {"levels", levels}}.dump(2) + "\n");
    return 0;
  }

  if (limit_cmd->parsed()) {
    const int kmax = limit_kmax;
    const auto nu = nu_on_sequence<Rational>(Rational(limit_m), Rational(limit_n), kmax);
    const auto l11 = l11_partial_sequence(kmax);
    const auto gam = gamma_sequence(kmax);
    std::ostringstream csv;
    csv << "k,nu_On,l11_partial,gamma,s_k\n";
    csv.precision(12);
    for (int k = 0; k <= kmax; ++k) {
      csv << k << ',' << to_double(nu[static_cast<std::size_t>(k)]) << ',';
      if (k >= 1) csv << to_double(l11[static_cast<std::size_t>(k - 1)]);
      csv << ',' << to_double(gam[static_cast<std::size_t>(k)]) << ',';
      if (k >= 1) csv << to_double(s_k(k));
      csv << '\n';
    }
    write_output(limit_out, csv.str());
    return 0;
  }

  if (mc_cmd->parsed()) {
    const MeasureSpec spec = mc_bernoulli ? MeasureSpec::bernoulli(mc_p, mc_q)
                                          : MeasureSpec::markov(mc_p, mc_q);
    const json j = run_experiment(mc_experiment, spec, mc_samples, mc_seed, mc_budget);
    write_output(mc_out, j.dump(2) + "\n");
    return 0;
  }

  if (render_cmd->parsed()) {
    RenderConfig cfg{render_seq.build_omega(), render_seq.build_omega_prime()};
    cfg.m0 = viewport[0]; cfg.m1 = viewport[1];
    cfg.n0 = viewport[2]; cfg.n1 = viewport[3];
    if (!render_highlight.empty()) cfg.highlight = parse_normal(render_highlight);
    cfg.highlight_budget = render_budget;
    cfg.shade_collapse = render_shade;
    cfg.dividing_lines = render_div;
    cfg.scale = render_scale;
    write_output(render_out, render_tiling(cfg));
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const truchet::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
