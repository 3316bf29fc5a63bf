#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qlsurf/tridiag.hpp"

using namespace qls::tridiag;

namespace {

SymmetricTridiagonal toeplitz(std::size_t n, double a, double b) {
  return {std::vector<double>(n, a), std::vector<double>(n - 1, b)};
}

std::vector<double> multiply(const SymmetricTridiagonal& t, const std::vector<double>& x) {
  const std::size_t n = t.size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = t.diagonal[i] * x[i];
    if (i > 0) y[i] += t.off_diagonal[i - 1] * x[i - 1];
    if (i + 1 < n) y[i] += t.off_diagonal[i] * x[i + 1];
  }
  return y;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST_CASE("Toeplitz spectrum matches the closed form") {
  const std::size_t n = 200;
  const double a = 2.0, b = -1.0;
  const auto t = toeplitz(n, a, b);
  const auto [lo, hi] = gershgorin_bounds(t);
  for (std::size_t k = 0; k < 10; ++k) {
    // eigenvalues a + 2b cos(j pi / (n+1)), ascending for b < 0 with j = k+1
    const double exact = a + 2 * b * std::cos((k + 1) * std::numbers::pi / (n + 1));
    CHECK(eigenvalue(t, k, lo, hi) == doctest::Approx(exact).epsilon(1e-13));
  }
}

TEST_CASE("Sturm count agrees with the closed form") {
  const std::size_t n = 50;
  const auto t = toeplitz(n, 0.0, 1.0);
  for (double s : {-1.9, -1.0, -0.1, 0.3, 1.5}) {
    std::size_t expected = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      if (2 * std::cos(j * std::numbers::pi / (n + 1)) < s) ++expected;
    }
    CHECK(count_below(t, s) == expected);
  }
}

TEST_CASE("Toeplitz eigenvectors are sines") {
  const std::size_t n = 64;
  const auto t = toeplitz(n, 2.0, -1.0);
  const auto [lo, hi] = gershgorin_bounds(t);
  const double lambda = eigenvalue(t, 2, lo, hi);
  const auto v = eigenvector(t, lambda);
  std::vector<double> s(n);
  double norm = 0;
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = std::sin(3.0 * (i + 1) * std::numbers::pi / (n + 1));
    norm += s[i] * s[i];
  }
  CHECK(std::abs(dot(v, s)) / std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("random matrices: residuals and orthogonality") {
  std::mt19937_64 rng(20241016);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 30 + 7 * trial;
    SymmetricTridiagonal t;
    for (std::size_t i = 0; i < n; ++i) t.diagonal.push_back(3 * u(rng));
    for (std::size_t i = 0; i + 1 < n; ++i) t.off_diagonal.push_back(u(rng));
    const auto [lo, hi] = gershgorin_bounds(t);
    std::vector<std::vector<double>> found;
    double last = -INFINITY;
    for (std::size_t k = 0; k < 5; ++k) {
      const double lambda = eigenvalue(t, k, lo, hi);
      CHECK(lambda >= last);
      last = lambda;
      auto v = eigenvector(t, lambda, found);
      CHECK(dot(v, v) == doctest::Approx(1.0).epsilon(1e-12));
      const auto tv = multiply(t, v);
      double r = 0;
      for (std::size_t i = 0; i < n; ++i) r = std::max(r, std::abs(tv[i] - lambda * v[i]));
      CHECK(r < 1e-9);
      for (const auto& w : found) CHECK(std::abs(dot(v, w)) < 1e-8);
      found.push_back(std::move(v));
    }
  }
}

TEST_CASE("bisection rejects a bracket that misses the eigenvalue") {
  const auto t = toeplitz(10, 2.0, -1.0);
  CHECK_THROWS(eigenvalue(t, 0, 1.0, 2.0));
  CHECK_THROWS(eigenvalue(t, 20, 0.0, 4.0));
}
