#include "peeklab/model.hpp"

#include <cmath>

#include "peeklab/errors.hpp"

namespace peeklab {

namespace {

void require_finite(double x, const char* field) {
  if (!std::isfinite(x)) {
    throw InvalidParameter(std::string(field) + " must be finite");
  }
}

void require_positive(double x, const char* field) {
  require_finite(x, field);
  if (x <= 0.0) {
    throw InvalidParameter(std::string(field) + " must be > 0");
  }
}

}  // namespace

bool ValidatedModel::is_baseline() const {
  return params_.s0 == 0.0 && params_.mu == 0.0 && params_.sigma == 1.0 &&
         params_.alpha == 1.0;
}

ValidatedModel validate(const ModelParams& raw) {
  require_finite(raw.s0, "s0");
  require_finite(raw.mu, "mu");
  require_finite(raw.phi0, "phi0");
  require_positive(raw.sigma, "sigma");
  require_positive(raw.lambda_impact, "lambda_impact");
  require_positive(raw.alpha, "alpha");
  require_positive(raw.horizon_T, "horizon_T");
  require_finite(raw.gamma, "gamma");
  if (!(std::abs(raw.gamma) < 1.0)) {
    throw InvalidParameter("gamma must lie in (-1, 1)");
  }
  const double rho = raw.alpha * raw.sigma * raw.sigma / raw.lambda_impact;
  const double gamma_bar = std::sqrt(1.0 - raw.gamma * raw.gamma);
  return ValidatedModel(raw, rho, gamma_bar);
}

BaselineReduction to_baseline(const ValidatedModel& model) {
  const ModelParams& p = model.params();
  BaselineReduction red;
  red.baseline = p;
  red.baseline.s0 = 0.0;
  red.baseline.mu = 0.0;
  red.baseline.sigma = 1.0;
  red.baseline.alpha = 1.0;
  red.baseline.lambda_impact = p.lambda_impact / (p.alpha * p.sigma * p.sigma);
  red.phi0_baseline = p.alpha * p.sigma * p.phi0 - p.mu / p.sigma;
  red.baseline.phi0 = red.phi0_baseline;
  red.utility_factor =
      std::exp(-p.mu * p.mu * p.horizon_T / (2.0 * p.sigma * p.sigma));
  // Removing the price drift shifts the signal driver by its gamma-weighted
  // share and the orthogonal driver by the gamma_bar-weighted one.
  red.wprime_shift_rate = p.mu * model.gamma() / p.sigma;
  red.w_shift_rate = p.mu * model.gamma_bar() / p.sigma;
  return red;
}

}  // namespace peeklab
