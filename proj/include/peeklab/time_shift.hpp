#pragma once

#include <utility>
#include <vector>

namespace peeklab {

// Peek-ahead horizon tau: [0, T] -> [0, T], continuous, nondecreasing,
// tau(t) >= t, tau(T) = T; represented piecewise-linearly by breakpoints
// (t_k, tau_k). Evaluation between breakpoints is linear interpolation.
//
// The closed-form machinery needs only tau, its generalized inverse
//   tau^{-1}(u) = inf{ t >= 0 : tau(t) >= u }
// and the slope tau_dot (taken as the left slope at breakpoints), all of
// which the piecewise-linear表 representation supplies exactly.
class TimeShift {
 public:
  // Breakpoints must satisfy: t strictly increasing, t_0 = 0, t_last = T,
  // tau nondecreasing, tau_k >= t_k, tau_last = T. Throws InvalidParameter.
  explicit TimeShift(std::vector<std::pair<double, double>> breakpoints);

  static TimeShift identity(double T);
  // tau(t) = (t + delta) ^ T. delta = 0 gives the identity shift.
  static TimeShift constant_lookahead(double T, double delta);

  double horizon() const { return breakpoints_.back().first; }
  double initial() const { return breakpoints_.front().second; }  // tau(0)

  // tau(t); throws OutOfDomain for t outside [0, T].
  double operator()(double t) const;

  // Generalized inverse inf{ t : tau(t) >= u }; equals 0 for u <= tau(0).
  // Throws OutOfDomain for u outside [0, T].
  double inverse(double u) const;

  // Left slope of tau at t (right slope at t = 0).
  double slope(double t) const;

  // Time of the first breakpoint with tau = T, i.e. tau^{-1}(T).
  double last_strict_time() const { return inverse(horizon()); }

  const std::vector<std::pair<double, double>>& breakpoints() const {
    return breakpoints_;
  }

 private:
  std::vector<std::pair<double, double>> breakpoints_;
};

// Staircase-with-risers approximation of ts on `segments` equal cells:
// each cell is held flat at the midpoint value of ts (clipped upward so the
// shift property tau >= t survives), with short linear risers joining levels
// at cell boundaries. Converges to ts as segments grows; used to exercise the
// continuity of the problem value in the time shift.
TimeShift staircase_approximation(const TimeShift& ts, int segments);

}  // namespace peeklab
