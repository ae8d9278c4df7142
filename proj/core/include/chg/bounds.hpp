#pragma once

// Closed-form size bounds for C_h[g]-sets and the density of the random
// construction. All functions are pure.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace chg {

// (g-1)^(1/h) n^(1-1/h): main term of the upper bound for C_h[g]-sets in [n].
// The error term has order n^(1/2 - 1/(2h)) and no explicit constant.
double thm1_main(double n, int h, int g);

// Exponent of the error term of thm1_main, reported symbolically.
double thm1_error_order(int h);

// Upper bound on the Zarankiewicz number z(m, n, s, t).
double eq2_furedi(double m, double n, double s, double t);

// (g-h+1)^(1/h) n^(1-1/h) + h n^(1-2/h) + h for C_h[g]-sets in a group of
// order n.
double eq3_group(double n, int h, int g);

// (1 - 1/h)(1 - 1/g)(1 + 1/(hg - 1)) = (h-1)(g-1)/(hg-1).
double density_exponent(int h, int g);

struct Density {
  double p = 0;   // inclusion probability
  double np = 0;  // expected sample size
  // |2pn - n^(g+h-1) (2p)^(hg)| relative to 2pn, evaluated in log space.
  double residual = 0;
};

// Solves 2pn = n^(g+h-1) (2p)^(hg). Throws PreconditionError when p > 1.
Density np_density(double n, int h, int g);

// (1/8) n^density_exponent(h, g), which equals np / 4.
double thm5_lower(double n, int h, int g);

struct RatioPoint {
  std::int64_t n = 0;
  double ratio = 0;
};

struct RatioSeries {
  std::vector<RatioPoint> points;
  std::vector<std::int64_t> skipped;  // n < 2, where ln n <= 0
};

// A(n) (ln n)^(1/h) / n^(1-1/h) for each (n, A(n)). Diagnostic only.
RatioSeries thm6_ratio(const std::vector<std::pair<std::int64_t, std::int64_t>>& counts,
                       int h);

}  // namespace chg
