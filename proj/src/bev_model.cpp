#include "taildep/bev_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "taildep/detail/format.hpp"
#include "taildep/errors.hpp"

namespace taildep {

namespace {

// Standard normal CDF via erfc; absolute error well below 1e-12.
double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

void check_finite_nonneg(double x1, double x2) {
  if (std::isnan(x1) || std::isnan(x2)) {
    throw InvalidInputError("stdf: NaN argument");
  }
  if (x1 < 0.0 || x2 < 0.0) {
    throw InvalidInputError("stdf: arguments must be nonnegative");
  }
}

double parse_number(std::string_view token, std::string_view spec) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last) {
    throw ParseError("model spec '" + std::string(spec) + "': bad number '" +
                     std::string(token) + "'");
  }
  return value;
}

}  // namespace

BevModel BevModel::logistic(double r) {
  if (!(r > 0.0 && r <= 1.0)) {
    throw InvalidInputError("logistic model: r must satisfy 0 < r <= 1, got " +
                            detail::format_double(r));
  }
  return BevModel(Family::Logistic, r, 0.0, 0.0);
}

BevModel BevModel::asym_logistic(double r, double t1, double t2) {
  if (!(r > 0.0 && r <= 1.0)) {
    throw InvalidInputError("asymmetric logistic model: r must satisfy 0 < r <= 1, got " +
                            detail::format_double(r));
  }
  if (!(t1 >= 0.0 && t1 <= 1.0) || !(t2 >= 0.0 && t2 <= 1.0)) {
    throw InvalidInputError("asymmetric logistic model: t1, t2 must lie in [0, 1]");
  }
  return BevModel(Family::AsymLogistic, r, t1, t2);
}

BevModel BevModel::husler_reiss(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw InvalidInputError("Husler-Reiss model: r must be positive and finite, got " +
                            detail::format_double(r));
  }
  return BevModel(Family::HuslerReiss, r, 0.0, 0.0);
}

BevModel BevModel::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("model spec '" + std::string(spec) +
                     "': expected '<family>:<params>'");
  }
  const std::string_view family = spec.substr(0, colon);
  std::string_view rest = spec.substr(colon + 1);

  double r = std::nan("");
  double t1 = std::nan("");
  double t2 = std::nan("");
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item =
        comma == std::string_view::npos ? rest : rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ParseError("model spec '" + std::string(spec) + "': bad token '" +
                       std::string(item) + "'");
    }
    const std::string_view key = item.substr(0, eq);
    const double value = parse_number(item.substr(eq + 1), spec);
    if (key == "r") {
      r = value;
    } else if (key == "t1") {
      t1 = value;
    } else if (key == "t2") {
      t2 = value;
    } else {
      throw ParseError("model spec '" + std::string(spec) +
                       "': unknown parameter '" + std::string(key) + "'");
    }
  }
  if (std::isnan(r)) {
    throw ParseError("model spec '" + std::string(spec) + "': missing parameter 'r'");
  }

  if (family == "logistic") {
    if (!std::isnan(t1) || !std::isnan(t2)) {
      throw ParseError("model spec '" + std::string(spec) +
                       "': t1/t2 are not logistic parameters");
    }
    return logistic(r);
  }
  if (family == "alog") {
    if (std::isnan(t1) || std::isnan(t2)) {
      throw ParseError("model spec '" + std::string(spec) +
                       "': alog requires parameters t1 and t2");
    }
    return asym_logistic(r, t1, t2);
  }
  if (family == "hr") {
    if (!std::isnan(t1) || !std::isnan(t2)) {
      throw ParseError("model spec '" + std::string(spec) +
                       "': t1/t2 are not hr parameters");
    }
    return husler_reiss(r);
  }
  throw ParseError("model spec '" + std::string(spec) + "': unknown family '" +
                   std::string(family) + "'");
}

std::string BevModel::spec() const {
  switch (family_) {
    case Family::Logistic:
      return "logistic:r=" + detail::format_double(r_);
    case Family::AsymLogistic:
      return "alog:r=" + detail::format_double(r_) + ",t1=" + detail::format_double(t1_) +
             ",t2=" + detail::format_double(t2_);
    case Family::HuslerReiss:
      return "hr:r=" + detail::format_double(r_);
  }
  return {};
}

double BevModel::stdf(double x1, double x2) const {
  check_finite_nonneg(x1, x2);
  // Margin identities l(x,0) = l(0,x) = x hold exactly for every family.
  if (x1 == 0.0) return x2;
  if (x2 == 0.0) return x1;

  switch (family_) {
    case Family::Logistic: {
      // Evaluate on x/max so x^(1/r) cannot overflow for small r.
      const double m = std::max(x1, x2);
      const double s =
          std::pow(x1 / m, 1.0 / r_) + std::pow(x2 / m, 1.0 / r_);
      return m * std::pow(s, r_);
    }
    case Family::AsymLogistic: {
      const double a = t1_ * x1;
      const double b = t2_ * x2;
      double joint = 0.0;
      const double m = std::max(a, b);
      if (m > 0.0) {
        const double s = std::pow(a / m, 1.0 / r_) + std::pow(b / m, 1.0 / r_);
        joint = m * std::pow(s, r_);
      }
      return (1.0 - t1_) * x1 + (1.0 - t2_) * x2 + joint;
    }
    case Family::HuslerReiss: {
      const double inv_r = 1.0 / r_;
      const double half_log = 0.5 * r_ * std::log(x1 / x2);
      return x1 * normal_cdf(inv_r + half_log) + x2 * normal_cdf(inv_r - half_log);
    }
  }
  throw InvalidInputError("stdf: unknown family");
}

double BevModel::stdf_dx1(double x1, double x2) const {
  if (!(x1 > 0.0) || !(x2 > 0.0)) {
    throw InvalidInputError("stdf_dx1: arguments must be strictly positive");
  }
  switch (family_) {
    case Family::Logistic: {
      const double m = std::max(x1, x2);
      const double w1 = std::pow(x1 / m, 1.0 / r_);
      const double w2 = std::pow(x2 / m, 1.0 / r_);
      const double t = w1 + w2;
      // dl/dx1 = (l / x1) * x1^(1/r) / (x1^(1/r) + x2^(1/r))
      return m * std::pow(t, r_) / x1 * (w1 / t);
    }
    case Family::AsymLogistic: {
      const double a = t1_ * x1;
      const double b = t2_ * x2;
      double joint_term = 0.0;
      const double m = std::max(a, b);
      if (m > 0.0 && a > 0.0) {
        const double w1 = std::pow(a / m, 1.0 / r_);
        const double w2 = std::pow(b / m, 1.0 / r_);
        const double t = w1 + w2;
        joint_term = m * std::pow(t, r_) / x1 * (w1 / t);
      }
      return (1.0 - t1_) + joint_term;
    }
    case Family::HuslerReiss:
      // The density terms of the two summands cancel exactly.
      return normal_cdf(1.0 / r_ + 0.5 * r_ * std::log(x1 / x2));
  }
  throw InvalidInputError("stdf_dx1: unknown family");
}

double BevModel::true_tdc() const { return 2.0 - stdf(1.0, 1.0); }

double BevModel::copula(double u, double v) const {
  if (std::isnan(u) || std::isnan(v) || u < 0.0 || u > 1.0 || v < 0.0 || v > 1.0) {
    throw InvalidInputError("copula: arguments must lie in [0, 1]");
  }
  if (u == 0.0 || v == 0.0) return 0.0;  // continuity limit
  return std::exp(-stdf(-std::log(u), -std::log(v)));
}

double BevModel::copula_du(double u, double v) const {
  if (!(u > 0.0 && u < 1.0) || !(v > 0.0 && v < 1.0)) {
    throw InvalidInputError("copula_du: arguments must lie strictly inside (0, 1)");
  }
  const double x = -std::log(u);
  const double y = -std::log(v);
  return std::exp(-stdf(x, y)) * stdf_dx1(x, y) / u;
}

}  // namespace taildep
