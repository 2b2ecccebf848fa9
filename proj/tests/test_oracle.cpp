#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "ispec/errors.hpp"
#include "ispec/oracle.hpp"
#include "test_support.hpp"

using namespace ispec;
using namespace ispec::oracle;

TEST_CASE("jacobi on tiny matrices") {
  auto m = DenseSymmetricMatrix::from_row_major(2, {0, 1, 1, 0});
  auto e = eigenvalues_bruteforce(m);
  CHECK(e[0] == doctest::Approx(-1.0));
  CHECK(e[1] == doctest::Approx(1.0));

  const auto c4 = eigenvalues_bruteforce(DenseSymmetricMatrix::from_adjacency(rim_adjacency(4, 1)));
  const double expected[] = {-2.0, 0.0, 0.0, 2.0};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(c4[std::size_t(i)] - expected[i]) <= 1e-12);

  CHECK(eigenvalues_bruteforce(DenseSymmetricMatrix(3)) == std::vector<double>{0.0, 0.0, 0.0});
  CHECK(eigenvalues_bruteforce(DenseSymmetricMatrix(0)).empty());
}

TEST_CASE("jacobi on the Petersen graph") {
  const auto e = testing::dense_spectrum(validate_and_canonicalize(5, 1, 2));
  const double expected[] = {-2, -2, -2, -2, 1, 1, 1, 1, 1, 3};
  for (int i = 0; i < 10; ++i) CHECK(std::abs(e[std::size_t(i)] - expected[i]) <= 1e-10);
}

TEST_CASE("jacobi preserves trace and Frobenius norm") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int order = 2 + trial % 30;
    DenseSymmetricMatrix m(order);
    for (int r = 0; r < order; ++r)
      for (int c = r; c < order; ++c) m.set(r, c, entry(rng));
    const auto e = eigenvalues_bruteforce(m);
    double sum = 0.0, sq = 0.0;
    for (double v : e) {
      sum += v;
      sq += v * v;
    }
    CHECK(std::abs(sum - m.trace()) <= 1e-9 * (1.0 + std::abs(m.trace())));
    CHECK(std::abs(std::sqrt(sq) - m.frobenius_norm()) <= 1e-9 * m.frobenius_norm());
    CHECK(std::is_sorted(e.begin(), e.end()));
  }
}

TEST_CASE("row-major construction validates its input") {
  CHECK_THROWS_AS(DenseSymmetricMatrix::from_row_major(2, {0, 1, 2, 0}), InvalidParams);
  CHECK_THROWS_AS(DenseSymmetricMatrix::from_row_major(2, {0, 1, 1}), InvalidParams);
}

TEST_CASE("bfs components") {
  CHECK(bfs_components(build_adjacency(validate_and_canonicalize(5, 1, 2))) == 1);
  CHECK(bfs_components(build_adjacency(validate_and_canonicalize(12, 2, 2))) == 2);
  CHECK(bfs_components(build_adjacency(validate_and_canonicalize(12, 3, 3))) == 3);
  CHECK(bfs_components(rim_adjacency(12, 4)) == 4);
  CHECK(bfs_components(AdjacencyMatrix(5)) == 5);
}

TEST_CASE("two coloring") {
  CHECK(two_coloring(build_adjacency(validate_and_canonicalize(6, 1, 1))));
  CHECK_FALSE(two_coloring(build_adjacency(validate_and_canonicalize(5, 1, 2))));
  CHECK(two_coloring(build_adjacency(validate_and_canonicalize(8, 1, 3))));
  CHECK_FALSE(two_coloring(rim_adjacency(9, 3)));
  CHECK(two_coloring(rim_adjacency(12, 3)));
}

TEST_CASE("results do not depend on vertex labelling") {
  std::mt19937 rng(5);
  for (const auto& p : testing::all_params(16)) {
    const auto a = build_adjacency(p);
    std::vector<int> perm(std::size_t(a.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    AdjacencyMatrix b(a.order());
    for (int r = 0; r < a.order(); ++r)
      for (int c = r + 1; c < a.order(); ++c)
        if (a.at(r, c)) b.connect(perm[std::size_t(r)], perm[std::size_t(c)]);
    REQUIRE(bfs_components(a) == bfs_components(b));
    REQUIRE(two_coloring(a) == two_coloring(b));
  }
}

TEST_CASE("residual") {
  const auto p = validate_and_canonicalize(12, 3, 4);
  const auto adj = build_adjacency(p);

  EigenPair constant{{0, Branch::plus, 3.0, 2.0, 2.0, 1.0}, ComplexVector(24, Complex{1.0, 0.0})};
  CHECK(residual(adj, constant) <= 1e-12);

  auto pair = eigenvector(p, 3, Branch::minus);
  CHECK(residual(adj, pair) <= 1e-9);
  // Negative control: a wrong eigenvalue must show up.
  pair.point.value += 0.1;
  CHECK(residual(adj, pair) >= 0.09);

  pair.vector.pop_back();
  CHECK_THROWS_AS(residual(adj, pair), InvalidParams);
}
