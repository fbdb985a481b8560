#include "oscwalk/exact_moments.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace oscwalk {

namespace {

void check_walk_domain(int n, int y0) {
  if (n < 1) throw std::invalid_argument("moment: n must be >= 1");
  if (y0 < 0 || y0 > n || (n - y0) % 2 != 0)
    throw std::invalid_argument("moment: y0 must lie in [0, n] with the parity of n");
}

// Coefficient of E[H(x)^k] in the one-step expansion of E[H(x+1)^order]:
// C(order,k) - (1 + (-1)^(order-k)) C(order,k-1) / span.
Rational step_coefficient(int order, int k, int span) {
  Rational c(binomial(order, k));
  if ((order - k) % 2 == 0) c -= Rational(2 * binomial(order, k - 1), span);
  return c;
}

}  // namespace

MomentTable::MomentTable(int n, int y0, int max_order)
    : n_(n), y0_(y0), max_order_(max_order) {
  check_walk_domain(n, y0);
  if (max_order < 0) throw std::invalid_argument("MomentTable: max_order must be >= 0");

  values_.assign(n + 1, std::vector<Rational>(max_order + 1));
  for (int order = 0; order <= max_order; ++order)
    values_[0][order] = Rational(int_pow(Int(y0), order));
  for (int x = 0; x < n; ++x) {
    const int span = n - x;
    values_[x + 1][0] = 1;
    for (int order = 1; order <= max_order; ++order) {
      Rational acc(1);
      for (int k = 1; k <= order; ++k)
        acc += step_coefficient(order, k, span) * values_[x][k];
      values_[x + 1][order] = acc;
    }
  }
}

const Rational& MomentTable::operator()(int x, int order) const {
  if (x < 0 || x > n_) throw std::domain_error("MomentTable: x outside [0, n]");
  if (order < 0 || order > max_order_)
    throw std::domain_error("MomentTable: order outside [0, max_order]");
  return values_[x][order];
}

Rational moment(int n, int y0, int x, int order) {
  if (order < 0) throw std::domain_error("moment: order must be >= 0");
  if (x < 0 || x > n) throw std::domain_error("moment: x outside [0, n]");
  return MomentTable(n, y0, order)(x, order);
}

Rational closed_form_mean(int n, int y0, int x) {
  check_walk_domain(n, y0);
  if (n < 2) throw std::domain_error("closed_form_mean: requires n >= 2");
  if (x < 0 || x > n) throw std::domain_error("closed_form_mean: x outside [0, n]");
  const Int N(n), X(x), Y(y0);
  return Rational(X * (N - X), N - 1) +
         Rational(Y * (N - X) * (N - X - 1), N * (N - 1));
}

Rational closed_form_second_moment(int n, int y0, int x) {
  check_walk_domain(n, y0);
  if (n < 4) throw std::domain_error("closed_form_second_moment: requires n >= 4");
  if (x < 0 || x > n) throw std::domain_error("closed_form_second_moment: x outside [0, n]");
  const Int N(n), X(x), Y(y0);
  Rational r(X * (N - X) * (N * X - X * X - 2), (N - 1) * (N - 3));
  r += Rational(Y * 2 * X * (N - X) * (N - X - 1) * (N * N - 2 * N - 1 - (N - 1) * X),
                N * (N - 1) * (N - 2) * (N - 3));
  r += Rational(Y * Y * (N - X) * (N - X - 1) * (N - X - 2) * (N - X - 3),
                N * (N - 1) * (N - 2) * (N - 3));
  return r;
}

Rational closed_form_variance(int n, int y0, int x) {
  check_walk_domain(n, y0);
  if (n < 4) throw std::domain_error("closed_form_variance: requires n >= 4");
  if (x < 0 || x > n) throw std::domain_error("closed_form_variance: x outside [0, n]");
  const Int N(n), X(x), Y(y0);
  Rational r(2 * X * (X - 1) * (N - X) * (N - X - 1), (N - 1) * (N - 1) * (N - 3));
  r += Rational(Y * 2 * X * (2 * N * N - 5 * N + 1 - (3 * N - 5) * X) * (N - X) * (N - X - 1),
                N * (N - 1) * (N - 1) * (N - 2) * (N - 3));
  r -= Rational(Y * Y * 2 * X * (2 * N * N - 6 * N + 3 - (2 * N - 3) * X) * (N - X) * (N - X - 1),
                N * N * (N - 1) * (N - 1) * (N - 2) * (N - 3));
  return r;
}

namespace {

using MixedKey = std::pair<std::vector<int>, std::vector<int>>;

class MixedMomentEngine {
 public:
  MixedMomentEngine(int n, int y0, int max_order)
      : n_(n), y0_(y0), table_(n, y0, max_order) {}

  // points strictly increasing, powers all >= 1.
  Rational eval(std::vector<int> points, std::vector<int> powers) {
    if (points.empty()) return Rational(1);
    if (points.size() == 1) return table_(points[0], powers[0]);

    MixedKey key{points, powers};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Expand H(last)^a one step back, conditioning at last-1; the step away
    // from last-1 has span n - (last-1).
    const int last = points.back();
    const int a = powers.back();
    const int span = n_ - last + 1;
    std::vector<int> head_points(points.begin(), points.end() - 1);
    std::vector<int> head_powers(powers.begin(), powers.end() - 1);

    Rational acc = eval(head_points, head_powers);  // constant term of the expansion
    for (int k = 1; k <= a; ++k) {
      std::vector<int> next_points = head_points;
      std::vector<int> next_powers = head_powers;
      if (last - 1 == head_points.back()) {
        next_powers.back() += k;
      } else {
        next_points.push_back(last - 1);
        next_powers.push_back(k);
      }
      acc += step_coefficient(a, k, span) * eval(std::move(next_points), std::move(next_powers));
    }
    memo_.emplace(std::move(key), acc);
    return acc;
  }

 private:
  int n_;
  int y0_;
  MomentTable table_;
  std::map<MixedKey, Rational> memo_;
};

}  // namespace

Rational mixed_moment(int n, int y0, const MixedMomentSpec& spec) {
  check_walk_domain(n, y0);
  if (spec.points.size() != spec.powers.size())
    throw std::invalid_argument("mixed_moment: points/powers size mismatch");
  std::vector<int> points;
  std::vector<int> powers;
  int power_budget = 0;
  for (std::size_t i = 0; i < spec.points.size(); ++i) {
    if (spec.points[i] < 0 || spec.points[i] > n)
      throw std::domain_error("mixed_moment: point outside [0, n]");
    if (i > 0 && spec.points[i] <= spec.points[i - 1])
      throw std::invalid_argument("mixed_moment: points must be strictly increasing");
    if (spec.powers[i] < 0) throw std::domain_error("mixed_moment: negative power");
    power_budget += spec.powers[i];
    if (spec.powers[i] > 0) {
      points.push_back(spec.points[i]);
      powers.push_back(spec.powers[i]);
    }
  }
  MixedMomentEngine engine(n, y0, std::max(1, power_budget));
  return engine.eval(std::move(points), std::move(powers));
}

Rational covariance(int n, int y0, int x1, int x2) {
  check_walk_domain(n, y0);
  if (n < 4) throw std::domain_error("covariance: requires n >= 4");
  if (x1 >= x2) throw std::invalid_argument("covariance: requires x1 < x2");
  if (x1 < 0 || x2 > n) throw std::domain_error("covariance: points outside [0, n]");
  const Int N(n), X1(x1), X2(x2), Y(y0);
  Rational r(2 * X1 * (X1 - 1) * (N - X2) * (N - X2 - 1), (N - 1) * (N - 1) * (N - 3));
  r += Rational(
      Y * 2 * X1 * (2 * N * N - 5 * N + 1 - (3 * N - 5) * X1) * (N - X2) * (N - X2 - 1),
      N * (N - 1) * (N - 1) * (N - 2) * (N - 3));
  r -= Rational(
      Y * Y * 2 * X1 * (2 * N * N - 6 * N + 3 - (2 * N - 3) * X1) * (N - X2) * (N - X2 - 1),
      N * N * (N - 1) * (N - 1) * (N - 2) * (N - 3));
  return r;
}

Rational volume_mean(int n, int y0) {
  check_walk_domain(n, y0);
  const Int N(n), Y(y0);
  return Rational(N * (N + 1), 6) + Rational(Y * (N + 1), 3);
}

Rational volume_variance(int n, int y0) {
  check_walk_domain(n, y0);
  if (n < 4) throw std::domain_error("volume_variance: requires n >= 4");
  const Int N(n), Y(y0);
  return Rational((N + 1) * N * (N - 2), 45) + Rational(Y * (N + 1) * (3 * N + 2), 45) -
         Rational(Y * Y * 4 * (N + 1), 45);
}

Polynomial2 Polynomial2::monomial(int a, int b, Rational coeff) {
  Polynomial2 p;
  p.add_term(a, b, coeff);
  return p;
}

void Polynomial2::add_term(int a, int b, const Rational& coeff) {
  if (a < 0 || b < 0) throw std::invalid_argument("Polynomial2: negative exponent");
  auto key = std::make_pair(a, b);
  terms_[key] += coeff;
  if (terms_[key] == 0) terms_.erase(key);
}

Rational Polynomial2::operator()(const Rational& x, const Rational& y) const {
  Rational acc(0);
  for (const auto& [key, coeff] : terms_)
    acc += coeff * rational_pow(x, key.first) * rational_pow(y, key.second);
  return acc;
}

int Polynomial2::degree() const {
  int d = -1;
  for (const auto& [key, coeff] : terms_) d = std::max(d, key.first + key.second);
  return d;
}

Rational Polynomial2::constant_term() const {
  auto it = terms_.find({0, 0});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational weighted_sum_expectation(int n, int y0, const Polynomial2& p) {
  check_walk_domain(n, y0);
  int max_y_power = 0;
  for (const auto& [key, coeff] : p.terms()) max_y_power = std::max(max_y_power, key.second);
  MomentTable table(n, y0, max_y_power);
  Rational acc(0);
  for (int i = 0; i <= n; ++i) {
    const Int xi(i);
    for (const auto& [key, coeff] : p.terms())
      acc += coeff * Rational(int_pow(xi, key.first)) * table(i, key.second);
  }
  return acc;
}

namespace {

// Exact Gaussian elimination on an augmented system; returns false when the
// system is inconsistent or rank-deficient in the unknowns.
bool solve_exact(std::vector<std::vector<Rational>> rows, int unknowns,
                 std::vector<Rational>& solution) {
  const int m = static_cast<int>(rows.size());
  int pivot_row = 0;
  std::vector<int> pivot_of_col(unknowns, -1);
  for (int col = 0; col < unknowns && pivot_row < m; ++col) {
    int sel = -1;
    for (int r = pivot_row; r < m; ++r)
      if (rows[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[pivot_row], rows[sel]);
    const Rational inv = Rational(1) / rows[pivot_row][col];
    for (auto& v : rows[pivot_row]) v *= inv;
    for (int r = 0; r < m; ++r) {
      if (r == pivot_row || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (int c = col; c <= unknowns; ++c) rows[r][c] -= factor * rows[pivot_row][c];
    }
    pivot_of_col[col] = pivot_row;
    ++pivot_row;
  }
  for (int c = 0; c < unknowns; ++c)
    if (pivot_of_col[c] < 0) return false;  // rank deficient
  for (int r = pivot_row; r < m; ++r)
    if (rows[r][unknowns] != 0) return false;  // inconsistent
  solution.assign(unknowns, Rational(0));
  for (int c = 0; c < unknowns; ++c) solution[c] = rows[pivot_of_col[c]][unknowns];
  return true;
}

}  // namespace

HxVerification hx_verify(const Polynomial2& p) {
  HxVerification result;
  const int d = std::max(0, p.degree());

  std::vector<std::pair<int, int>> monomials;  // exponents of Q, total degree <= d
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b) monomials.emplace_back(a, b);
  const int unknowns = static_cast<int>(monomials.size());

  const auto scaled_value = [&p](int n, int y0) {
    return weighted_sum_expectation(n, y0, p) / Rational(n + 1);
  };
  const auto equation_row = [&](int n, int y0) {
    std::vector<Rational> row;
    row.reserve(unknowns + 1);
    for (const auto& [a, b] : monomials)
      row.push_back(Rational(int_pow(Int(n), a) * int_pow(Int(y0), b)));
    row.push_back(scaled_value(n, y0));
    return row;
  };

  std::vector<std::vector<Rational>> rows;
  for (int n : {16, 18, 20, 22, 24, 26})
    for (int y0 : {0, 2, 4, 6}) rows.push_back(equation_row(n, y0));

  std::vector<Rational> coeffs;
  result.fit_ok = solve_exact(std::move(rows), unknowns, coeffs);
  if (!result.fit_ok) return result;

  for (int i = 0; i < unknowns; ++i)
    if (coeffs[i] != 0) result.q.add_term(monomials[i].first, monomials[i].second, coeffs[i]);

  result.holdout_ok = true;
  for (int n : {28, 30, 31})
    for (int y0 : {0, 1, 2, 3}) {
      if ((n - y0) % 2 != 0) continue;
      if (result.q(Rational(n), Rational(y0)) != scaled_value(n, y0)) {
        result.holdout_ok = false;
      }
    }

  result.degree_ok = result.q.degree() == p.degree();
  result.constant_ok = result.q.constant_term() == p.constant_term();
  return result;
}

}  // namespace oscwalk
