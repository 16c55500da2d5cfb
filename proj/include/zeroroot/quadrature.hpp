#pragma once

#include <functional>

namespace zeroroot::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

using Fn = std::function<double(double)>;

// Globally adaptive Gauss-Kronrod (7/15) on a finite interval.
Result gauss_kronrod(const Fn& f, double a, double b, double abs_tol, int max_intervals = 2000);

// Double-exponential rule on [0, inf) via x = exp(pi/2 sinh t).
Result exp_sinh(const Fn& f, double abs_tol, int max_levels = 12);

}  // namespace zeroroot::quad
