#include "chg/bounds.hpp"

#include <cmath>

#include "chg/error.hpp"

namespace chg {

namespace {

void require_hg(int h, int g) {
  if (h < 2 || g < h) {
    throw PreconditionError("bounds need g >= h >= 2 (got h=" +
                            std::to_string(h) + ", g=" + std::to_string(g) + ")");
  }
}

}  // namespace

double thm1_main(double n, int h, int g) {
  // The closed form makes sense for any g >= 2, including g < h.
  if (h < 2 || g < 2) throw PreconditionError("thm1_main needs h >= 2 and g >= 2");
  if (n < 1) throw PreconditionError("n must be at least 1");
  return std::pow(g - 1.0, 1.0 / h) * std::pow(n, 1.0 - 1.0 / h);
}

double thm1_error_order(int h) { return 0.5 - 0.5 / h; }

double eq2_furedi(double m, double n, double s, double t) {
  if (!(m >= s && s >= t && t >= 1 && n >= t)) {
    throw PreconditionError("Zarankiewicz bound needs m >= s >= t >= 1 and n >= t");
  }
  return std::sqrt(s - t) * n * std::pow(m, 1.0 - 1.0 / t) +
         t * std::pow(m, 2.0 - 2.0 / t) + t * n;
}

double eq3_group(double n, int h, int g) {
  require_hg(h, g);
  if (n < 1) throw PreconditionError("group order must be at least 1");
  return std::pow(g - h + 1.0, 1.0 / h) * std::pow(n, 1.0 - 1.0 / h) +
         h * std::pow(n, 1.0 - 2.0 / h) + h;
}

double density_exponent(int h, int g) {
  return static_cast<double>((h - 1) * (g - 1)) / (h * g - 1);
}

Density np_density(double n, int h, int g) {
  require_hg(h, g);
  if (n < 1) throw PreconditionError("n must be at least 1");
  Density d;
  d.np = 0.5 * std::pow(n, density_exponent(h, g));
  d.p = d.np / n;
  if (d.p > 1) {
    throw PreconditionError("n is too small for h=" + std::to_string(h) +
                            ", g=" + std::to_string(g) + ": p = " +
                            std::to_string(d.p) + " > 1");
  }
  const double lhs = std::log(2 * d.p * n);
  const double rhs = (g + h - 1) * std::log(n) + h * g * std::log(2 * d.p);
  d.residual = std::abs(std::expm1(rhs - lhs));
  return d;
}

double thm5_lower(double n, int h, int g) {
  require_hg(h, g);
  return std::pow(n, density_exponent(h, g)) / 8.0;
}

RatioSeries thm6_ratio(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& counts, int h) {
  if (h < 2) throw PreconditionError("h must be at least 2");
  RatioSeries out;
  for (std::size_t i = 1; i < counts.size(); ++i) {
    if (counts[i].first < counts[i - 1].first ||
        counts[i].second < counts[i - 1].second) {
      throw PreconditionError("counting function must be nondecreasing");
    }
  }
  for (auto [n, a] : counts) {
    if (n < 2) {
      out.skipped.push_back(n);
      continue;
    }
    const double dn = static_cast<double>(n);
    out.points.push_back(
        {n, a * std::pow(std::log(dn), 1.0 / h) / std::pow(dn, 1.0 - 1.0 / h)});
  }
  return out;
}

}  // namespace chg
