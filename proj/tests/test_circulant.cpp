#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ispec/circulant.hpp"
#include "ispec/errors.hpp"
#include "ispec/oracle.hpp"
#include "test_support.hpp"

using namespace ispec;
using std::numbers::pi;

TEST_CASE("cycle adjacency eigenvalues") {
  for (int n = 3; n <= 20; ++n) {
    std::vector<double> row(std::size_t(n), 0.0);
    row[1] = row[std::size_t(n - 1)] = 1.0;
    const CirculantRow c(row);
    for (int l = 0; l < n; ++l)
      CHECK(circulant_eigenvalue_real(c, l) == doctest::Approx(2.0 * std::cos(2.0 * pi * l / n)).epsilon(1e-12));
  }
}

TEST_CASE("l = 0 gives the row sum") {
  const CirculantRow c({0.5, -1.0, 2.0, 0.25});
  const Complex z = circulant_eigenvalue(c, 0);
  CHECK(z.real() == doctest::Approx(1.75));
  CHECK(z.imag() == doctest::Approx(0.0));
}

TEST_CASE("fourier vectors") {
  const auto ones = fourier_vector(7, 0);
  for (const auto& z : ones) CHECK(z == Complex{1.0, 0.0});

  const auto v = fourier_vector(4, 1);
  const Complex expected[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int t = 0; t < 4; ++t) CHECK(std::abs(v[std::size_t(t)] - expected[t]) < 1e-15);

  for (const auto& z : fourier_vector(13, 5)) CHECK(std::abs(z) == doctest::Approx(1.0));
  CHECK_THROWS_AS(fourier_vector(4, 4), IndexOutOfRange);
  CHECK_THROWS_AS(fourier_vector(4, -1), IndexOutOfRange);
}

TEST_CASE("fourier vectors diagonalize every circulant") {
  std::mt19937 rng(20241016);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 32;
    std::vector<double> row(static_cast<std::size_t>(n));
    for (auto& x : row) x = entry(rng);
    const CirculantRow c(row);
    for (int l = 0; l < n; ++l) {
      const auto v = fourier_vector(n, l);
      const auto mv = multiply(c, v);
      const Complex lambda = circulant_eigenvalue(c, l);
      double worst = 0.0;
      for (int t = 0; t < n; ++t) worst = std::max(worst, std::abs(mv[std::size_t(t)] - lambda * v[std::size_t(t)]));
      REQUIRE(worst <= 1e-10 * n);
    }
  }
}

TEST_CASE("symmetric 0/1 circulants match the dense oracle") {
  std::mt19937 rng(8);
  const int n = 8;
  for (int trial = 0; trial < 20; ++trial) {
    const CirculantRow c(testing::random_symmetric_row(rng, n));
    REQUIRE(c.is_symmetric());
    std::vector<double> closed;
    for (int l = 0; l < n; ++l) closed.push_back(circulant_eigenvalue_real(c, l));
    std::sort(closed.begin(), closed.end());
    const auto brute = oracle::eigenvalues_bruteforce(oracle::DenseSymmetricMatrix::from_row_major(n, c.expand()));
    CHECK(testing::max_abs_diff(closed, brute) <= 1e-9);
  }
}

TEST_CASE("asymmetric rows are rejected by the real-valued path") {
  const CirculantRow c({0.0, 1.0, 0.0, 0.0});
  CHECK_FALSE(c.is_symmetric());
  CHECK_THROWS_AS(circulant_eigenvalue_real(c, 1), InvalidParams);
  CHECK_THROWS_AS(circulant_eigenvalue(c, 4), IndexOutOfRange);
  CHECK_THROWS_AS(CirculantRow({}), InvalidParams);
}

TEST_CASE("rim rows") {
  auto r = rim_row(12, 3);
  for (int t = 0; t < 12; ++t) CHECK(r[t] == ((t == 3 || t == 9) ? 1.0 : 0.0));
  r = rim_row(12, 4);
  for (int t = 0; t < 12; ++t) CHECK(r[t] == ((t == 4 || t == 8) ? 1.0 : 0.0));
  r = rim_row(5, 2);
  for (int t = 0; t < 5; ++t) CHECK(r[t] == ((t == 2 || t == 3) ? 1.0 : 0.0));
  CHECK_THROWS_AS(rim_row(12, 6), InvalidParams);

  for (int n = 3; n <= 40; ++n)
    for (int s = 1; 2 * s < n; ++s) REQUIRE(rim_row(n, s).is_symmetric());
}

TEST_CASE("alpha and beta") {
  const auto p = validate_and_canonicalize(12, 3, 4);
  CHECK(alpha(p, 0) == 2.0);
  CHECK(beta(p, 0) == 2.0);
  CHECK(alpha(p, 2) == doctest::Approx(-2.0));
  const auto petersen = validate_and_canonicalize(5, 1, 2);
  CHECK(beta(petersen, 1) == doctest::Approx(2.0 * std::cos(4.0 * pi / 5.0)));
  CHECK_THROWS_AS(alpha(p, 12), IndexOutOfRange);

  for (const auto& q : testing::all_params(32)) {
    for (int l = 0; l < q.n(); ++l) {
      REQUIRE(alpha(q, l) == alpha(q, (q.n() - l) % q.n()));
      REQUIRE(beta(q, l) == beta(q, (q.n() - l) % q.n()));
      REQUIRE(std::abs(alpha(q, l) - circulant_eigenvalue_real(rim_row(q.n(), q.j()), l)) <= 1e-12);
      REQUIRE(std::abs(beta(q, l) - circulant_eigenvalue_real(rim_row(q.n(), q.k()), l)) <= 1e-12);
    }
  }
}

TEST_CASE("rim eigenvalues match the dense oracle on the rim blocks") {
  for (int n = 3; n <= 32; ++n) {
    for (int s = 1; 2 * s < n; ++s) {
      std::vector<double> closed;
      for (int l = 0; l < n; ++l) closed.push_back(rim_eigenvalue(n, s, l));
      std::sort(closed.begin(), closed.end());
      const auto brute =
          oracle::eigenvalues_bruteforce(oracle::DenseSymmetricMatrix::from_adjacency(rim_adjacency(n, s)));
      REQUIRE(testing::max_abs_diff(closed, brute) <= 1e-9);
    }
  }
}
