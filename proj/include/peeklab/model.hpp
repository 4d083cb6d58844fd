#pragma once

#include <string>

namespace peeklab {

// Market and preference parameters.
//
// Price model: S_t = s0 + mu*t + sigma*(gamma*W'_t + gamma_bar*W_t) with two
// independent Brownian drivers; W' is the one the investor can peek at.
// Trading at rate phi incurs the temporary-impact execution price
// S + (lambda_impact/2)*phi.
struct ModelParams {
  double s0 = 0.0;             // initial price
  double mu = 0.0;             // risk premium (currency/time)
  double sigma = 1.0;          // volatility, > 0
  double gamma = 0.0;          // signal correlation, |gamma| < 1
  double lambda_impact = 1.0;  // temporary impact, > 0
  double alpha = 1.0;          // absolute risk aversion, > 0
  double horizon_T = 1.0;      // terminal time, > 0
  double phi0 = 0.0;           // initial position (shares)
};

// Parameter set that passed validation, with the derived quantities
// rho = alpha*sigma^2/lambda (the hyperbolic time scale is sqrt(rho)) and
// gamma_bar = sqrt(1 - gamma^2).
class ValidatedModel {
 public:
  const ModelParams& params() const { return params_; }
  double rho() const { return rho_; }
  double gamma_bar() const { return gamma_bar_; }

  double s0() const { return params_.s0; }
  double mu() const { return params_.mu; }
  double sigma() const { return params_.sigma; }
  double gamma() const { return params_.gamma; }
  double lambda() const { return params_.lambda_impact; }
  double alpha() const { return params_.alpha; }
  double horizon() const { return params_.horizon_T; }
  double phi0() const { return params_.phi0; }

  // True iff already in baseline form (s0=0, mu=0, sigma=1, alpha=1).
  bool is_baseline() const;

 private:
  friend ValidatedModel validate(const ModelParams&);
  ValidatedModel(const ModelParams& p, double rho, double gamma_bar)
      : params_(p), rho_(rho), gamma_bar_(gamma_bar) {}

  ModelParams params_;
  double rho_;
  double gamma_bar_;
};

// Validates ranges and populates derived quantities.
// Throws InvalidParameter naming the offending field. gamma = +-1 is rejected:
// a noiseless signal makes the frictionless part of the model degenerate.
ValidatedModel validate(const ModelParams& raw);

// Reduction of a general parameter set to the baseline model
// (s0=0, mu=0, sigma=1, alpha=1, lambda^0 = lambda/(alpha*sigma^2)).
//
// An optimal baseline rule started at phi0_baseline = alpha*sigma*phi0 - mu/sigma,
// evaluated on the drift-translated drivers
//   W'_s + wprime_shift_rate * s,   W_s + w_shift_rate * s,
// and scaled by 1/(alpha*sigma), is optimal in the general model; the general
// maximum utility is utility_factor times the baseline one.
struct BaselineReduction {
  ModelParams baseline;       // baseline parameter block (same gamma, T)
  double phi0_baseline;       // alpha*sigma*phi0 - mu/sigma
  double utility_factor;      // exp(-mu^2 T / (2 sigma^2)), in (0, 1]
  double wprime_shift_rate;   // mu*gamma/sigma, applied to the signal driver W'
  double w_shift_rate;        // mu*gamma_bar/sigma, applied to the orthogonal driver W
};

BaselineReduction to_baseline(const ValidatedModel& model);

}  // namespace peeklab
