#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace foldcover {

/// Real polynomial, coefficients in ascending degree.
struct DensePolynomial {
  std::vector<double> coefficients;

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  double max_abs_coefficient() const;
  DensePolynomial derivative() const;
};

double eval_poly(const DensePolynomial& p, double x);

/// Named polynomial from the bundled coefficient table ("phi", "x_rho").
/// Throws std::out_of_range for unknown names.
const DensePolynomial& named_polynomial(std::string_view name);

/// Parses "name c_n ... c_1 c_0" lines (highest degree first, '#' comments).
std::vector<std::pair<std::string, DensePolynomial>> parse_polynomial_table(std::string_view text);

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

/// Sign-change brackets from a uniform scan of [lo, hi] with `grid` cells.
std::vector<Bracket> isolate_positive_roots(const DensePolynomial& p, double lo, double hi,
                                            std::size_t grid);

/// Bisection down to width 1e-6, then bracket-guarded Newton until the
/// bracket is narrower than tol. Throws std::invalid_argument without a sign change.
double refine_root(const DensePolynomial& p, Bracket bracket, double tol);

struct Minimum {
  double x = 0.0;
  double value = 0.0;
};

struct MinimizeOptions {
  std::size_t grid = 2048;
  /// How many of the best sampled basins get a golden-section polish.
  std::size_t basins = 4;
};

/// Global-ish minimum of a piecewise smooth function: uniform scan, then
/// golden-section search inside the best basins. Ties go to the smaller x.
Minimum minimize_1d(const std::function<double(double)>& f, double a, double b, double tol,
                    MinimizeOptions options = {});

/// Golden-section search for a unimodal f on [a, b].
Minimum golden_section(const std::function<double(double)>& f, double a, double b, double tol);

/// a*tx + b*ty + d*c <= rhs
struct LpConstraint {
  double a = 0.0;
  double b = 0.0;
  double d = 0.0;
  double rhs = 0.0;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double tx = 0.0;
  double ty = 0.0;
  double c = 0.0;
};

/// Minimizes c (ties broken by smallest tx, then ty) by Seidel's randomized
/// incremental algorithm. The result is re-checked against every constraint.
LpSolution solve_lp3(std::span<const LpConstraint> constraints, std::uint64_t seed = 42);

}  // namespace foldcover
