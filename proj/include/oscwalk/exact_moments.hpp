#pragma once

#include <map>
#include <utility>
#include <vector>

#include "oscwalk/rational.hpp"

namespace oscwalk {

// E[H(x)^order] for x = 0..n and order = 0..max_order, computed once by the
// one-step moment recursion with E[H(0)^order] = y0^order. Exact.
class MomentTable {
 public:
  MomentTable(int n, int y0, int max_order);

  const Rational& operator()(int x, int order) const;
  int n() const { return n_; }
  int y0() const { return y0_; }
  int max_order() const { return max_order_; }

 private:
  int n_;
  int y0_;
  int max_order_;
  std::vector<std::vector<Rational>> values_;  // [x][order]
};

// Single moment E[H(x)^order]; builds a table internally, so prefer
// MomentTable when sweeping x or order.
Rational moment(int n, int y0, int x, int order);

// Closed forms for the first two moments. The variance expressions carry
// (n-3) denominators, hence the n >= 4 gates; below that the recursion is
// the source of truth.
Rational closed_form_mean(int n, int y0, int x);            // n >= 2
Rational closed_form_second_moment(int n, int y0, int x);   // n >= 4
Rational closed_form_variance(int n, int y0, int x);        // n >= 4

// E[H(points[0])^powers[0] ... H(points[m-1])^powers[m-1]].
struct MixedMomentSpec {
  std::vector<int> points;  // strictly increasing, within [0, n]
  std::vector<int> powers;  // nonnegative, same length
};

Rational mixed_moment(int n, int y0, const MixedMomentSpec& spec);

// Closed form for Cov[H(x1), H(x2)], x1 < x2; n >= 4. Equals the mixed-moment
// route E[H(x1)H(x2)] - E[H(x1)]E[H(x2)] exactly.
Rational covariance(int n, int y0, int x1, int x2);

// Closed forms for the volume V = sum of heights.
Rational volume_mean(int n, int y0);
Rational volume_variance(int n, int y0);  // n >= 4

// Bivariate polynomial with exact rational coefficients, keyed by
// (x power, y power).
class Polynomial2 {
 public:
  Polynomial2() = default;
  static Polynomial2 monomial(int a, int b, Rational coeff = Rational(1));

  void add_term(int a, int b, const Rational& coeff);
  Rational operator()(const Rational& x, const Rational& y) const;
  int degree() const;  // total degree; -1 for the zero polynomial
  Rational constant_term() const;
  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }

 private:
  std::map<std::pair<int, int>, Rational> terms_;
};

// E[sum_{i=0}^{n} P(i, H(i))], exact, by summing moments against P's
// coefficients.
Rational weighted_sum_expectation(int n, int y0, const Polynomial2& p);

// Verification that E[sum_i P(i, H(i))] = (n+1) Q(n, y0) for a bivariate
// polynomial Q of the same total degree and constant term as P. Q is fitted
// by exact interpolation over a grid of (n, y0) pairs and then checked on
// held-out pairs.
struct HxVerification {
  Polynomial2 q;
  bool fit_ok = false;       // interpolation system solvable and consistent
  bool holdout_ok = false;   // held-out (n, y0) pairs reproduced exactly
  bool degree_ok = false;    // deg Q == deg P
  bool constant_ok = false;  // Q(0,0) == P(0,0)

  bool ok() const { return fit_ok && holdout_ok && degree_ok && constant_ok; }
};

HxVerification hx_verify(const Polynomial2& p);

}  // namespace oscwalk
