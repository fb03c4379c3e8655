#include "truchet/mc.hpp"

#include <cmath>

#include "truchet/cocycle.hpp"
#include "truchet/renorm.hpp"
#include "truchet/rng.hpp"

namespace truchet {

namespace {
constexpr std::uint64_t kStreamSample = 0x5eedu;
constexpr std::uint64_t kStreamNormal = 0x0fu;
}  // namespace

Estimate proportion_estimate(std::int64_t hits, std::int64_t n, std::uint64_t seed) {
  const double phat = n > 0 ? static_cast<double>(hits) / static_cast<double>(n) : 0.0;
  const double se = n > 0 ? std::sqrt(phat * (1.0 - phat) / static_cast<double>(n)) : 0.0;
  return {phat, se, n, seed};
}

Estimate mean_estimate(double sum, double sum_sq, std::int64_t n, std::uint64_t seed) {
  if (n <= 1) return {n == 1 ? sum : 0.0, 0.0, n, seed};
  const double nd = static_cast<double>(n);
  const double mean = sum / nd;
  const double var = std::max(0.0, (sum_sq - nd * mean * mean) / (nd - 1.0));
  return {mean, std::sqrt(var / nd), n, seed};
}

Comparison compare(const std::string& name, const Estimate& est, double analytic) {
  const double z = est.std_error > 0.0 ? (est.value - analytic) / est.std_error : 0.0;
  return {name, est, analytic, z};
}

State sample_state(const MeasureSpec& spec, std::uint64_t seed, std::int64_t i) {
  const std::uint64_t key = keyed_bits(seed, kStreamSample, i);
  const Normal v = Normal::from_index(
      static_cast<int>(keyed_bits(key, kStreamNormal, std::int64_t{0}) & 3));
  switch (spec.kind) {
    case MeasureSpec::Kind::Markov:
      return {Sequence::sample_markov(MarkovParams(spec.p), mix64(key ^ 1)),
              Sequence::sample_markov(MarkovParams(spec.q), mix64(key ^ 2)), v};
    case MeasureSpec::Kind::Bernoulli:
      return {Sequence::bernoulli(spec.p, mix64(key ^ 1)),
              Sequence::bernoulli(spec.q, mix64(key ^ 2)), v};
    case MeasureSpec::Kind::Constant:
    default:
      return {Sequence::constant(Sym::Plus), Sequence::constant(Sym::Plus), v};
  }
}

Estimate estimate_closed_fraction(const MeasureSpec& spec, std::int64_t budget,
                                  std::int64_t samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  std::int64_t closed = 0;
  const TraceOptions lean{.record_path = false};
  for (std::int64_t i = 0; i < samples; ++i) {
    const State x = sample_state(spec, seed, i);
    if (trace(x, budget, lean).closed()) ++closed;
  }
  return proportion_estimate(closed, samples, seed);
}

TransportReport estimate_transport(double p, std::int64_t samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const MarkovParams params(p);
  constexpr std::int64_t kHorizon = 64;

  TransportReport out;
  std::int64_t collapsible = 0;
  std::int64_t match = 0;
  std::array<std::int64_t, 8> word_counts{};
  for (std::int64_t i = 0; i < samples; ++i) {
    const std::uint64_t key = keyed_bits(seed, kStreamSample, i);
    const Sequence omega = Sequence::sample_markov(params, key);
    if (!zero_collapsible(omega)) continue;
    ++collapsible;
    // Realize the first three collapsed entries directly: kept index 0 plus
    // the next two kept indices to the right.
    std::array<Sym, 3> eta;
    eta[0] = omega.at(0);
    std::int64_t k = 0;
    bool ok = true;
    for (int j = 1; j <= 2 && ok; ++j) {
      const std::int64_t stop = k + kHorizon;
      do {
        ++k;
        if (k > stop) { ok = false; break; }
      } while (!is_kept(omega, k));
      if (ok) eta[static_cast<std::size_t>(j)] = omega.at(k);
    }
    if (!ok) {
      ++out.skipped;
      continue;
    }
    ++out.n_collapsed;
    if (eta[0] == eta[1]) ++match;
    int word = 0;
    for (int j = 0; j < 3; ++j)
      word = (word << 1) | (eta[static_cast<std::size_t>(j)] == Sym::Plus ? 1 : 0);
    ++word_counts[static_cast<std::size_t>(word)];
  }

  out.collapsible = proportion_estimate(collapsible, samples, seed);
  out.adjacent_match = proportion_estimate(match, out.n_collapsed, seed);

  const double q = transport_q(p);
  const MarkovParams qparams(q);
  for (int word = 0; word < 8; ++word) {
    std::string name = "^";
    std::vector<Sym> syms;
    for (int j = 2; j >= 0; --j) {
      const Sym s = ((word >> j) & 1) ? Sym::Plus : Sym::Minus;
      syms.push_back(s);
      name.push_back(to_char(s));
    }
    const double analytic = cylinder_measure(qparams, CylinderPattern(0, 2, syms));
    out.cylinders.push_back(compare(
        name, proportion_estimate(word_counts[static_cast<std::size_t>(word)],
                                  out.n_collapsed, seed),
        analytic));
  }
  return out;
}

std::array<Estimate, 6> estimate_step_measures(double p, double q,
                                               std::int64_t samples,
                                               std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  std::array<std::int64_t, 6> counts{};
  const MeasureSpec spec = MeasureSpec::markov(p, q);
  for (std::int64_t i = 0; i < samples; ++i) {
    const State x = sample_state(spec, seed, i);
    counts[static_cast<std::size_t>(class_index(step_class(x)) - 1)] += 1;
  }
  std::array<Estimate, 6> out;
  for (int c = 0; c < 6; ++c)
    out[static_cast<std::size_t>(c)] =
        proportion_estimate(counts[static_cast<std::size_t>(c)], samples, seed);
  return out;
}

std::array<Estimate, 6> estimate_p4_joint(double p, double q,
                                          std::int64_t samples,
                                          std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  std::array<std::int64_t, 6> counts{};
  const MeasureSpec spec = MeasureSpec::markov(p, q);
  for (std::int64_t i = 0; i < samples; ++i) {
    const State x = sample_state(spec, seed, i);
    if (!is_period4(x)) continue;
    counts[static_cast<std::size_t>(class_index(step_class(x)) - 1)] += 1;
  }
  std::array<Estimate, 6> out;
  for (int c = 0; c < 6; ++c)
    out[static_cast<std::size_t>(c)] =
        proportion_estimate(counts[static_cast<std::size_t>(c)], samples, seed);
  return out;
}

Estimate ReturnTimeReport::Bucket::mean(std::uint64_t seed) const {
  return mean_estimate(sum, sum_sq, n, seed);
}

ReturnTimeReport estimate_return_times(double p, double q, std::int64_t samples,
                                       std::uint64_t seed, std::int64_t budget) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  constexpr std::int64_t kHorizon = 256;
  ReturnTimeReport out;
  const MeasureSpec spec = MeasureSpec::markov(p, q);

  for (std::int64_t i = 0; i < samples; ++i) {
    const State x = sample_state(spec, seed, i);
    if (!in_renormalizable_set(x)) continue;
    ++out.n_states;
    try {
      const CollapseWitness w = collapse(x.omega, kHorizon);
      const CollapseWitness wp = collapse(x.omega_prime, kHorizon);
      const State down{w.eta, wp.eta, x.v};
      const int j = class_index(step_class(down));

      const ReturnBlock blk = return_block(x, budget);
      if (blk.return_time % 4 != 1) ++out.mod4_violations;

      // Which insertion count governs the return time is decided by the
      // outgoing normal of the first step.
      const Normal v1 = phi(x).v;
      std::int64_t gap = 0;
      if (v1 == Normal::right()) gap = w.rule.count_at(0);
      else if (v1 == Normal::left()) gap = w.rule.count_at(-1);
      else if (v1 == Normal::up()) gap = wp.rule.count_at(0);
      else gap = wp.rule.count_at(-1);
      if (blk.return_time != 4 * gap + 1) ++out.branch_violations;

      const std::int64_t m = (blk.return_time - 1) / 4;
      if (blk.counts != collapsed_step_matrix(m)[static_cast<std::size_t>(j - 1)])
        ++out.count_mismatches;

      auto& bucket = out.per_class[static_cast<std::size_t>(j - 1)];
      bucket.n += 1;
      const double ret = static_cast<double>(blk.return_time);
      bucket.sum += ret;
      bucket.sum_sq += ret * ret;
      bucket.histogram[blk.return_time] += 1;
    } catch (const DomainError&) {
      ++out.skipped;
    }
  }
  return out;
}

nlohmann::json report_json(const std::string& experiment,
                           const nlohmann::json& params, std::uint64_t seed,
                           std::int64_t n, const std::vector<Comparison>& comps) {
  nlohmann::json estimates = nlohmann::json::array();
  nlohmann::json analytic = nlohmann::json::array();
  nlohmann::json z_scores = nlohmann::json::array();
  for (const auto& c : comps) {
    estimates.push_back({{"name", c.name},
                         {"value", c.estimate.value},
                         {"std_error", c.estimate.std_error},
                         {"n", c.estimate.n_samples}});
    analytic.push_back({{"name", c.name}, {"value", c.analytic}});
    z_scores.push_back({{"name", c.name}, {"z", c.z_score}});
  }
  return nlohmann::json{{"experiment", experiment}, {"params", params},
                        {"seed", seed},             {"n", n},
                        {"estimates", estimates},   {"analytic", analytic},
                        {"z_scores", z_scores}};
}

nlohmann::json run_experiment(const std::string& name, const MeasureSpec& spec,
                              std::int64_t samples, std::uint64_t seed,
                              std::int64_t budget) {
  nlohmann::json params{{"p", spec.p}, {"q", spec.q}};
  params["measure"] = spec.kind == MeasureSpec::Kind::Markov ? "markov"
                      : spec.kind == MeasureSpec::Kind::Bernoulli ? "bernoulli"
                                                                  : "constant";
  std::vector<Comparison> comps;

  if (name == "closed") {
    params["budget"] = budget;
    const Estimate est = estimate_closed_fraction(spec, budget, samples, seed);
    // The drift bound is the only universal analytic anchor here: an upper
    // bound when the driving means are nonzero.
    double bound = 1.0;
    if (spec.kind == MeasureSpec::Kind::Bernoulli)
      bound = 1.0 - drift_lower_bound(2.0 * spec.p - 1.0, 2.0 * spec.q - 1.0);
    else if (spec.kind == MeasureSpec::Kind::Constant)
      bound = 0.0;
    comps.push_back(compare("closed_fraction_upper_bound", est, bound));
    return report_json("closed", params, seed, samples, comps);
  }
  if (name == "transport") {
    const TransportReport rep = estimate_transport(spec.p, samples, seed);
    comps.push_back(compare("collapsible", rep.collapsible, spec.p));
    comps.push_back(compare("adjacent_match", rep.adjacent_match, transport_q(spec.p)));
    for (const auto& c : rep.cylinders) comps.push_back(c);
    nlohmann::json j = report_json("transport", params, seed, samples, comps);
    j["skipped"] = rep.skipped;
    return j;
  }
  if (name == "steps") {
    const auto est = estimate_step_measures(spec.p, spec.q, samples, seed);
    const auto mv = step_measure_vector(spec.p, spec.q);
    for (int c = 0; c < 6; ++c)
      comps.push_back(compare("class_" + std::to_string(c + 1),
                              est[static_cast<std::size_t>(c)],
                              mv[static_cast<std::size_t>(c)]));
    return report_json("steps", params, seed, samples, comps);
  }
  if (name == "p4") {
    const auto est = estimate_p4_joint(spec.p, spec.q, samples, seed);
    const auto pv = p4_class_probabilities(spec.p, spec.q);
    for (int c = 0; c < 6; ++c)
      comps.push_back(compare("class_" + std::to_string(c + 1),
                              est[static_cast<std::size_t>(c)],
                              pv[static_cast<std::size_t>(c)]));
    return report_json("p4", params, seed, samples, comps);
  }
  if (name == "returns") {
    params["budget"] = budget;
    const ReturnTimeReport rep =
        estimate_return_times(spec.p, spec.q, samples, seed, budget);
    const auto means = insertion_means(spec.p, spec.q);
    for (int c = 0; c < 6; ++c) {
      const auto& bucket = rep.per_class[static_cast<std::size_t>(c)];
      comps.push_back(compare("mean_return_class_" + std::to_string(c + 1),
                              bucket.mean(seed),
                              4.0 * means[static_cast<std::size_t>(c)] + 1.0));
    }
    nlohmann::json j = report_json("returns", params, seed, samples, comps);
    j["mod4_violations"] = rep.mod4_violations;
    j["branch_violations"] = rep.branch_violations;
    j["count_mismatches"] = rep.count_mismatches;
    j["skipped"] = rep.skipped;
    j["states_in_set"] = rep.n_states;
    return j;
  }
  throw std::invalid_argument("unknown experiment: " + name);
}

}  // namespace truchet
