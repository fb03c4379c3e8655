#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "truchet/dynamics.hpp"
#include "truchet/sequence.hpp"

namespace truchet {

// Point estimate with its declared standard error: binomial (normal
// approximation) for proportions, sample standard error for means.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
};

Estimate proportion_estimate(std::int64_t hits, std::int64_t n, std::uint64_t seed);
Estimate mean_estimate(double sum, double sum_sq, std::int64_t n, std::uint64_t seed);

// How to draw (omega, omega', v): the normal is always uniform on the four
// choices, drawn from the per-sample key.
struct MeasureSpec {
  enum class Kind { Markov, Bernoulli, Constant };
  Kind kind = Kind::Markov;
  double p = 0.5;  // persistence (Markov) or +1-rate of omega (Bernoulli)
  double q = 0.5;  // persistence (Markov) or +1-rate of omega' (Bernoulli)

  static MeasureSpec markov(double p, double q) { return {Kind::Markov, p, q}; }
  static MeasureSpec bernoulli(double r1, double r2) { return {Kind::Bernoulli, r1, r2}; }
  static MeasureSpec constant() { return {Kind::Constant, 1.0, 1.0}; }
};

// Sample i of an experiment keyed by `seed`; aggregation over i is
// order-independent because every draw is counter-based.
State sample_state(const MeasureSpec& spec, std::uint64_t seed, std::int64_t i);

// One analytic/empirical comparison; every report states its sigma and
// sample count rather than hiding a tolerance.
struct Comparison {
  std::string name;
  Estimate estimate;
  double analytic = 0.0;
  double z_score = 0.0;
};

Comparison compare(const std::string& name, const Estimate& est, double analytic);

// Fraction of curves that provably close within `budget` steps.  A certified
// lower bound on the closing probability: staying open at the budget decides
// nothing.
Estimate estimate_closed_fraction(const MeasureSpec& spec, std::int64_t budget,
                                  std::int64_t samples, std::uint64_t seed);

// Collapsibility fraction and the collapsed law: length-<=3 cylinder
// frequencies of the collapse, plus the adjacent-match frequency that fits
// the collapsed persistence parameter.
struct TransportReport {
  Estimate collapsible;                  // target: p
  Estimate adjacent_match;               // target: 1/(2-p)
  std::vector<Comparison> cylinders;     // all 8 words on indices 0..2
  std::int64_t skipped = 0;              // collapsible draws lost to the horizon
  std::int64_t n_collapsed = 0;
};

TransportReport estimate_transport(double p, std::int64_t samples, std::uint64_t seed);

std::array<Estimate, 6> estimate_step_measures(double p, double q,
                                               std::int64_t samples,
                                               std::uint64_t seed);

// Joint frequency of (step class i, closes after four squares).
std::array<Estimate, 6> estimate_p4_joint(double p, double q,
                                          std::int64_t samples,
                                          std::uint64_t seed);

// Return times to the renormalizable set, bucketed by the class of the
// collapsed step, with every structural law checked per sample.
struct ReturnTimeReport {
  struct Bucket {
    std::int64_t n = 0;
    double sum = 0.0, sum_sq = 0.0;
    std::map<std::int64_t, std::int64_t> histogram;
    Estimate mean(std::uint64_t seed) const;
  };

  std::array<Bucket, 6> per_class;
  std::int64_t n_states = 0;            // states drawn inside the set
  std::int64_t mod4_violations = 0;     // return times not = 1 (mod 4)
  std::int64_t branch_violations = 0;   // ret != 2*len(f(.))+1 per the outgoing normal
  std::int64_t count_mismatches = 0;    // class counts off the expected row
  std::int64_t skipped = 0;             // lost to horizon or budget
};

ReturnTimeReport estimate_return_times(double p, double q, std::int64_t samples,
                                       std::uint64_t seed, std::int64_t budget);

// JSON schema shared by every experiment:
// {experiment, params, seed, n, estimates[], analytic[], z_scores[]}.
nlohmann::json report_json(const std::string& experiment,
                           const nlohmann::json& params, std::uint64_t seed,
                           std::int64_t n, const std::vector<Comparison>& comps);

nlohmann::json run_experiment(const std::string& name, const MeasureSpec& spec,
                              std::int64_t samples, std::uint64_t seed,
                              std::int64_t budget);

}  // namespace truchet
