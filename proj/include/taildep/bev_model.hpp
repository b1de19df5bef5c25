#pragma once

#include <string>
#include <string_view>

namespace taildep {

enum class Family { Logistic, AsymLogistic, HuslerReiss };

/// A parametric bivariate extreme-value model, defined by its stable tail
/// dependence function l(x1, x2).
///
/// Supported families and parameter ranges:
///   - logistic:       l = (x1^(1/r) + x2^(1/r))^r,               0 < r <= 1
///   - asym. logistic: l = (1-t1)x1 + (1-t2)x2
///                         + ((t1 x1)^(1/r) + (t2 x2)^(1/r))^r,   0 < r <= 1,
///                                                                0 <= tj <= 1
///   - Husler-Reiss:   l = x1 Phi(1/r + r/2 log(x1/x2))
///                         + x2 Phi(1/r + r/2 log(x2/x1)),        r > 0
///
/// Instances are immutable; all member functions are pure and safe to call
/// concurrently.
class BevModel {
 public:
  static BevModel logistic(double r);
  static BevModel asym_logistic(double r, double t1, double t2);
  static BevModel husler_reiss(double r);

  /// Parses a model spec string: "logistic:r=0.7", "alog:r=0.7,t1=0.5,t2=0.5"
  /// or "hr:r=0.7". Throws ParseError naming the offending token, or
  /// InvalidInputError when a parameter is out of range.
  static BevModel parse(std::string_view spec);

  Family family() const { return family_; }
  double r() const { return r_; }
  double t1() const { return t1_; }
  double t2() const { return t2_; }

  /// Canonical spec string; round-trips through parse() and is stable across
  /// builds (used to derive replication seeds).
  std::string spec() const;

  /// Stable tail dependence function at (x1, x2), x1, x2 >= 0.
  /// Satisfies max(x1,x2) <= l <= x1+x2 and l(x,0) = l(0,x) = x exactly.
  double stdf(double x1, double x2) const;

  /// Partial derivative of the STDF in its first argument; x1, x2 > 0.
  double stdf_dx1(double x1, double x2) const;

  /// Tail-dependence coefficient, 2 - l(1,1); always in [0,1].
  double true_tdc() const;

  /// Copula C(u,v) = exp(-l(-log u, -log v)) for u, v in (0,1].
  /// C(0,v) and C(u,0) are 0 by continuity rather than an error.
  double copula(double u, double v) const;

  /// Conditional distribution dC/du(u,v) for u, v strictly inside (0,1);
  /// nondecreasing in v with limits 0 at v->0 and 1 at v->1.
  double copula_du(double u, double v) const;

 private:
  BevModel(Family family, double r, double t1, double t2)
      : family_(family), r_(r), t1_(t1), t2_(t2) {}

  Family family_;
  double r_;
  double t1_;  // unused for logistic / Husler-Reiss
  double t2_;
};

}  // namespace taildep
