#include "foldcover/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "foldcover_polynomial_table.hpp"

namespace foldcover {

double DensePolynomial::max_abs_coefficient() const {
  double m = 0.0;
  for (double c : coefficients) m = std::max(m, std::abs(c));
  return m;
}

DensePolynomial DensePolynomial::derivative() const {
  DensePolynomial d;
  for (std::size_t i = 1; i < coefficients.size(); ++i) {
    d.coefficients.push_back(coefficients[i] * static_cast<double>(i));
  }
  if (d.coefficients.empty()) d.coefficients.push_back(0.0);
  return d;
}

double eval_poly(const DensePolynomial& p, double x) {
  double acc = 0.0;
  for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<std::pair<std::string, DensePolynomial>> parse_polynomial_table(std::string_view text) {
  std::vector<std::pair<std::string, DensePolynomial>> out;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string name;
    if (!(tokens >> name)) continue;
    DensePolynomial p;
    long long c = 0;
    while (tokens >> c) p.coefficients.push_back(static_cast<double>(c));
    if (!tokens.eof() || p.coefficients.empty()) {
      throw std::runtime_error("malformed polynomial table entry: " + name);
    }
    std::reverse(p.coefficients.begin(), p.coefficients.end());
    out.emplace_back(std::move(name), std::move(p));
  }
  return out;
}

const DensePolynomial& named_polynomial(std::string_view name) {
  static const std::map<std::string, DensePolynomial, std::less<>> table = [] {
    std::map<std::string, DensePolynomial, std::less<>> m;
    for (auto& [n, p] : parse_polynomial_table(data::kPolynomialTable)) m.emplace(n, p);
    return m;
  }();
  auto it = table.find(name);
  if (it == table.end()) throw std::out_of_range("unknown polynomial: " + std::string(name));
  return it->second;
}

std::vector<Bracket> isolate_positive_roots(const DensePolynomial& p, double lo, double hi,
                                            std::size_t grid) {
  std::vector<Bracket> out;
  if (!(lo < hi) || grid == 0) return out;
  const double h = (hi - lo) / static_cast<double>(grid);
  double x0 = lo;
  double f0 = eval_poly(p, x0);
  for (std::size_t i = 1; i <= grid; ++i) {
    const double x1 = (i == grid) ? hi : lo + h * static_cast<double>(i);
    const double f1 = eval_poly(p, x1);
    if ((f0 < 0.0) != (f1 < 0.0)) out.push_back({x0, x1});
    x0 = x1;
    f0 = f1;
  }
  return out;
}

double refine_root(const DensePolynomial& p, Bracket bracket, double tol) {
  double a = bracket.lo, b = bracket.hi;
  if (a > b) std::swap(a, b);
  double fa = eval_poly(p, a), fb = eval_poly(p, b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa < 0.0) == (fb < 0.0)) throw std::invalid_argument("refine_root: bracket has no sign change");

  auto shrink = [&](double x, double fx) {
    if ((fx < 0.0) == (fa < 0.0)) {
      a = x;
      fa = fx;
    } else {
      b = x;
      fb = fx;
    }
  };

  const double switch_width = std::max(1e-6, tol);
  while (b - a > switch_width) {
    const double m = 0.5 * (a + b);
    const double fm = eval_poly(p, m);
    if (fm == 0.0) return m;
    shrink(m, fm);
  }

  const DensePolynomial dp = p.derivative();
  double x = 0.5 * (a + b);
  for (int iter = 0; iter < 200 && b - a > tol; ++iter) {
    const double fx = eval_poly(p, x);
    if (fx == 0.0) return x;
    shrink(x, fx);
    const double slope = eval_poly(dp, x);
    double xn = slope != 0.0 ? x - fx / slope : 0.5 * (a + b);
    if (!(xn > a && xn < b)) xn = 0.5 * (a + b);
    if (std::abs(xn - x) < 0.5 * tol) {
      // Probe just past the Newton estimate to collapse the bracket from the other side.
      const double dir = xn >= x ? 1.0 : -1.0;
      const double y = std::clamp(xn + dir * 0.25 * tol, a, b);
      const double fy = eval_poly(p, y);
      if (fy == 0.0) return y;
      shrink(y, fy);
    }
    x = std::clamp(xn, a, b);
  }
  return 0.5 * (a + b);
}

Minimum golden_section(const std::function<double(double)>& f, double a, double b, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? Minimum{x1, f1} : Minimum{x2, f2};
}

Minimum minimize_1d(const std::function<double(double)>& f, double a, double b, double tol,
                    MinimizeOptions options) {
  const std::size_t n = std::max<std::size_t>(options.grid, 3);
  std::vector<double> xs(n), vs(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    vs[i] = f(xs[i]);
  }
  std::vector<std::size_t> basins;
  for (std::size_t i = 0; i < n; ++i) {
    const bool left_ok = i == 0 || vs[i] <= vs[i - 1];
    const bool right_ok = i + 1 == n || vs[i] <= vs[i + 1];
    if (left_ok && right_ok) basins.push_back(i);
  }
  std::stable_sort(basins.begin(), basins.end(),
                   [&](std::size_t i, std::size_t j) { return vs[i] < vs[j]; });
  if (basins.size() > options.basins) basins.resize(std::max<std::size_t>(options.basins, 1));

  Minimum best{xs[basins.front()], vs[basins.front()]};
  auto consider = [&](Minimum m) {
    if (m.value < best.value || (m.value == best.value && m.x < best.x)) best = m;
  };
  for (std::size_t i : basins) {
    consider({xs[i], vs[i]});
    const double lo = xs[i == 0 ? 0 : i - 1];
    const double hi = xs[i + 1 == n ? n - 1 : i + 1];
    if (hi - lo > tol) consider(golden_section(f, lo, hi, tol));
  }
  return best;
}

namespace {

constexpr double kBox = 1e6;
constexpr std::size_t kVars = 3;

// Row over the first `dim` entries of `a`: a . x <= b.
struct Row {
  std::array<double, kVars> a{};
  double b = 0.0;
};

using Vec = std::array<double, kVars>;

double row_scale(const Row& r, const Vec& x, std::size_t dim) {
  double s = 1.0 + std::abs(r.b);
  for (std::size_t i = 0; i < dim; ++i) s += std::abs(r.a[i] * x[i]);
  return s;
}

bool violates(const Row& r, const Vec& x, std::size_t dim) {
  double lhs = 0.0;
  for (std::size_t i = 0; i < dim; ++i) lhs += r.a[i] * x[i];
  return lhs > r.b + 1e-12 * row_scale(r, x, dim);
}

// Lexicographic minimum of the objectives over the box [-kBox, kBox]^dim.
Vec box_optimum(const std::vector<Vec>& objectives, std::size_t dim) {
  Vec x{};
  for (std::size_t i = 0; i < dim; ++i) {
    for (const Vec& o : objectives) {
      double mag = 0.0;
      for (std::size_t j = 0; j < dim; ++j) mag = std::max(mag, std::abs(o[j]));
      if (std::abs(o[i]) > 1e-12 * mag) {
        x[i] = o[i] > 0.0 ? -kBox : kBox;
        break;
      }
    }
  }
  return x;
}

// Eliminates variable k using the equality row h: x_k = (h.b - sum_{i != k} h.a_i x_i) / h.a_k.
Row substitute(const Row& r, const Row& h, std::size_t k, std::size_t dim) {
  Row out;
  const double f = r.a[k] / h.a[k];
  std::size_t j = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (i == k) continue;
    out.a[j++] = r.a[i] - f * h.a[i];
  }
  out.b = r.b - f * h.b;
  return out;
}

Vec substitute_objective(const Vec& o, const Row& h, std::size_t k, std::size_t dim) {
  Vec out{};
  const double f = o[k] / h.a[k];
  std::size_t j = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (i == k) continue;
    out[j++] = o[i] - f * h.a[i];
  }
  return out;
}

// Seidel recursion; rows are already in random order. Returns false when infeasible.
bool seidel(const std::vector<Row>& rows, const std::vector<Vec>& objectives, std::size_t dim, Vec& x) {
  if (dim == 0) {
    for (const Row& r : rows) {
      if (r.b < -1e-9 * (1.0 + std::abs(r.b))) return false;
    }
    return true;
  }
  x = box_optimum(objectives, dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& h = rows[i];
    if (!violates(h, x, dim)) continue;
    std::size_t k = 0;
    for (std::size_t j = 1; j < dim; ++j) {
      if (std::abs(h.a[j]) > std::abs(h.a[k])) k = j;
    }
    if (std::abs(h.a[k]) < 1e-15) return false;  // 0 <= negative

    std::vector<Row> sub;
    sub.reserve(i + 2);
    // The eliminated variable keeps its box as two ordinary rows.
    Row upper, lower;
    upper.a[k] = 1.0;
    upper.b = kBox;
    lower.a[k] = -1.0;
    lower.b = kBox;
    sub.push_back(substitute(upper, h, k, dim));
    sub.push_back(substitute(lower, h, k, dim));
    for (std::size_t j = 0; j < i; ++j) sub.push_back(substitute(rows[j], h, k, dim));
    std::vector<Vec> sub_obj;
    sub_obj.reserve(objectives.size());
    for (const Vec& o : objectives) sub_obj.push_back(substitute_objective(o, h, k, dim));

    Vec y{};
    if (!seidel(sub, sub_obj, dim - 1, y)) return false;
    double acc = h.b;
    std::size_t j = 0;
    for (std::size_t v = 0; v < dim; ++v) {
      if (v == k) continue;
      x[v] = y[j];
      acc -= h.a[v] * y[j];
      ++j;
    }
    x[k] = acc / h.a[k];
  }
  return true;
}

}  // namespace

LpSolution solve_lp3(std::span<const LpConstraint> constraints, std::uint64_t seed) {
  std::vector<Row> base;
  base.reserve(constraints.size());
  for (const LpConstraint& c : constraints) base.push_back({{c.a, c.b, c.d}, c.rhs});
  // Variable order (tx, ty, c); objectives: c first, then tx, then ty.
  const std::vector<Vec> objectives{{0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<Row> rows = base;
    std::shuffle(rows.begin(), rows.end(), rng);
    Vec x{};
    if (!seidel(rows, objectives, kVars, x)) return {LpStatus::Infeasible, 0.0, 0.0, 0.0};
    bool ok = true;
    for (const Row& r : base) {
      double lhs = r.a[0] * x[0] + r.a[1] * x[1] + r.a[2] * x[2];
      if (lhs > r.b + 1e-9 * row_scale(r, x, kVars)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    LpSolution s{LpStatus::Optimal, x[0], x[1], x[2]};
    if (x[2] <= -kBox * (1.0 - 1e-9)) s.status = LpStatus::Unbounded;
    return s;
  }
  throw std::runtime_error("solve_lp3: solution failed verification");
}

}  // namespace foldcover
