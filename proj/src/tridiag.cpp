#include "qlsurf/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qlsurf/errors.hpp"

namespace qls::tridiag {
namespace {

double pivot_floor(const SymmetricTridiagonal& t) {
  double max_off2 = 1.0;
  for (double e : t.off_diagonal) max_off2 = std::max(max_off2, e * e);
  return std::numeric_limits<double>::min() * max_off2;
}

double norm_estimate(const SymmetricTridiagonal& t) {
  auto [lo, hi] = gershgorin_bounds(t);
  return std::max(std::abs(lo), std::abs(hi));
}

// LU factorisation of (T - shift) with partial pivoting. Row i of U has
// entries in columns i, i+1, i+2.
struct ShiftedLU {
  std::vector<double> u0, u1, u2, mult;
  std::vector<char> swapped;

  ShiftedLU(const SymmetricTridiagonal& t, double shift) {
    const std::size_t n = t.size();
    u0.resize(n);
    u1.assign(n, 0.0);
    u2.assign(n, 0.0);
    mult.assign(n, 0.0);
    swapped.assign(n, 0);
    const double tiny =
        std::numeric_limits<double>::epsilon() * std::max(norm_estimate(t), 1e-300);

    double a = t.diagonal[0] - shift;
    double b = n > 1 ? t.off_diagonal[0] : 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double sub = t.off_diagonal[i];
      const double dn = t.diagonal[i + 1] - shift;
      const double en = i + 2 < n ? t.off_diagonal[i + 1] : 0.0;
      if (std::abs(a) >= std::abs(sub)) {
        if (a == 0.0) a = tiny;
        const double m = sub / a;
        u0[i] = a;
        u1[i] = b;
        mult[i] = m;
        a = dn - m * b;
        b = en;
      } else {
        const double m = a / sub;
        u0[i] = sub;
        u1[i] = dn;
        u2[i] = en;
        swapped[i] = 1;
        mult[i] = m;
        a = b - m * dn;
        b = -m * en;
      }
    }
    u0[n - 1] = a == 0.0 ? tiny : a;
  }

  void solve(std::vector<double>& r) const {
    const std::size_t n = u0.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) {
        const double top = r[i];
        r[i] = r[i + 1];
        r[i + 1] = top - mult[i] * r[i];
      } else {
        r[i + 1] -= mult[i] * r[i];
      }
    }
    r[n - 1] /= u0[n - 1];
    if (n > 1) r[n - 2] = (r[n - 2] - u1[n - 2] * r[n - 1]) / u0[n - 2];
    for (std::size_t i = n >= 2 ? n - 2 : 0; i-- > 0;) {
      r[i] = (r[i] - u1[i] * r[i + 1] - u2[i] * r[i + 2]) / u0[i];
    }
  }
};

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

std::size_t count_below(const SymmetricTridiagonal& t, double shift) {
  const std::size_t n = t.size();
  if (n == 0) return 0;
  const double pivmin = pivot_floor(t);
  std::size_t count = 0;
  double q = t.diagonal[0] - shift;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0) ++count;
  for (std::size_t i = 1; i < n; ++i) {
    const double e = t.off_diagonal[i - 1];
    q = t.diagonal[i] - shift - e * e / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0) ++count;
  }
  return count;
}

std::pair<double, double> gershgorin_bounds(const SymmetricTridiagonal& t) {
  const std::size_t n = t.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.off_diagonal[i - 1]);
    if (i + 1 < n) r += std::abs(t.off_diagonal[i]);
    lo = std::min(lo, t.diagonal[i] - r);
    hi = std::max(hi, t.diagonal[i] + r);
  }
  return {lo, hi};
}

double eigenvalue(const SymmetricTridiagonal& t, std::size_t k, double lower,
                  double upper) {
  if (k >= t.size()) {
    throw std::invalid_argument("eigenvalue index out of range");
  }
  if (count_below(t, lower) > k || count_below(t, upper) <= k) {
    throw std::invalid_argument("eigenvalue " + std::to_string(k) +
                                " is not inside the bisection interval");
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double pivmin = pivot_floor(t);
  double lo = lower;
  double hi = upper;
  for (int it = 0; it < 200; ++it) {
    const double width = hi - lo;
    if (width <= 2.0 * eps * std::max(std::abs(lo), std::abs(hi)) + pivmin) {
      break;
    }
    const double mid = lo + 0.5 * width;
    if (mid <= lo || mid >= hi) break;
    if (count_below(t, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

std::vector<double> eigenvector(const SymmetricTridiagonal& t, double lambda,
                                std::span<const std::vector<double>> previous,
                                int max_iterations) {
  const std::size_t n = t.size();
  const ShiftedLU lu(t, lambda);

  // Deterministic start vector with components along every eigenvector.
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = 1.0 + 0.5 * std::sin(0.6180339887 * static_cast<double>(i + 1));
  }

  auto orthonormalise = [&](std::vector<double>& v) {
    for (const auto& p : previous) {
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += v[i] * p[i];
      for (std::size_t i = 0; i < n; ++i) v[i] -= dot * p[i];
    }
    const double nrm = norm2(v);
    if (!(nrm > 0) || !std::isfinite(nrm)) return false;
    for (double& v_i : v) v_i /= nrm;
    return true;
  };

  if (!orthonormalise(x)) {
    throw NumericalError("inverse iteration: degenerate start vector");
  }
  std::vector<double> prev = x;
  for (int it = 0; it < max_iterations; ++it) {
    lu.solve(x);
    if (!orthonormalise(x)) {
      throw NumericalError("inverse iteration broke down at eigenvalue " +
                           std::to_string(lambda));
    }
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += x[i] * prev[i];
    if (dot < 0) {
      for (double& v : x) v = -v;
    }
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      change = std::max(change, std::abs(x[i] - prev[i]));
    }
    if (it > 0 && change < 1e-10) return x;
    prev = x;
  }
  throw NumericalError("inverse iteration did not converge at eigenvalue " +
                       std::to_string(lambda));
}

}  // namespace qls::tridiag
