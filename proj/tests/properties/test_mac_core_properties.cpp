#include <doctest.h>

#include <random>

#include "onepmac/inequality.hpp"
#include "onepmac/interference.hpp"
#include "onepmac/polytope.hpp"
#include "onepmac/vertices.hpp"

using namespace onepmac;

namespace {

std::vector<double> dirichlet(int n, std::mt19937_64& rng) {
  std::gamma_distribution<double> g(1.0, 1.0);
  std::vector<double> w(n);
  double s = 0.0;
  for (auto& x : w) s += x = g(rng);
  for (auto& x : w) x /= s;
  return w;
}

// sum_i lambda_i g_i(b|a_i) with random single-party channels g_i.
Mac random_separable(const AlphabetSpec& alph, std::mt19937_64& rng) {
  const int N = alph.parties();
  const auto lambda = dirichlet(N, rng);
  std::vector<std::vector<std::vector<double>>> g(N);
  for (int i = 0; i < N; ++i)
    for (int a = 0; a < alph.input_sizes[i]; ++a) g[i].push_back(dirichlet(alph.output_size, rng));
  std::vector<double> p(alph.num_transitions(), 0.0);
  for (std::size_t flat = 0; flat < alph.num_inputs(); ++flat) {
    const auto in = alph.unflatten(flat);
    for (int b = 0; b < alph.output_size; ++b)
      for (int i = 0; i < N; ++i) p[alph.transition_index(b, flat)] += lambda[i] * g[i][in[i]][b];
  }
  return Mac(alph, p, 1e-12);
}

Mac random_stochastic(const AlphabetSpec& alph, std::mt19937_64& rng) {
  std::vector<double> p(alph.num_transitions());
  for (std::size_t a = 0; a < alph.num_inputs(); ++a) {
    const auto col = dirichlet(alph.output_size, rng);
    for (int b = 0; b < alph.output_size; ++b) p[alph.transition_index(b, a)] = col[b];
  }
  return Mac(alph, p, 1e-12);
}

}  // namespace

TEST_CASE("random separable MACs are separable with vanishing pairwise I2") {
  std::mt19937_64 rng(20240601);
  const std::vector<AlphabetSpec> shapes{AlphabetSpec::binary(2), AlphabetSpec::binary(3),
                                         AlphabetSpec({3, 2, 2}, 3), AlphabetSpec({2, 3}, 2)};
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Mac m = random_separable(shapes[t % shapes.size()], rng);
    CHECK(is_separable(m));
    for (int i = 0; i < m.parties(); ++i)
      for (int j = i + 1; j < m.parties(); ++j) worst = std::max(worst, interference_I2(m, i, j));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("vertex interference coordinates above order K vanish exactly") {
  for (int N = 1; N <= 4; ++N)
    for (int K = 1; K <= N; ++K)
      for (const auto& v : enumerate_vertices(N, K)) {
        std::vector<Rational> q;
        for (double x : v.probs()) q.emplace_back(x);
        forward_interference_transform(v.alphabets(), q);
        for (std::size_t flat = 0; flat < v.alphabets().num_inputs(); ++flat)
          if (std::popcount(static_cast<unsigned>(flat)) > K) REQUIRE(q[flat] == 0);
      }
}

TEST_CASE("coordinate transform round-trips on random MACs") {
  std::mt19937_64 rng(99);
  const std::vector<AlphabetSpec> shapes{AlphabetSpec::binary(3), AlphabetSpec({2, 3, 2}, 3),
                                         AlphabetSpec::binary(4)};
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Mac m = random_stochastic(shapes[t % shapes.size()], rng);
    const Mac back = from_interference_coords(to_interference_coords(m));
    for (std::size_t k = 0; k < m.probs().size(); ++k)
      worst = std::max(worst, std::abs(back.probs()[k] - m.probs()[k]));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("binary C_N transitions satisfy p(b|1..1,0..0) = -(L-1) p(b|e0) + sum p(b|e_i)") {
  std::mt19937_64 rng(5);
  double worst = 0.0;
  for (int t = 0; t < 300; ++t) {
    const int N = 2 + t % 3;
    const AlphabetSpec alph = AlphabetSpec::binary(N);
    const Mac m = random_separable(alph, rng);
    // Every input tuple, not just the leading-ones one: relabel to 1..1,0..0.
    for (std::size_t flat = 0; flat < alph.num_inputs(); ++flat) {
      const auto in = alph.unflatten(flat);
      for (int b = 0; b < 2; ++b) {
        const std::vector<int> zero(N, 0);
        double rhs = 0.0;
        int L = 0;
        for (int i = 0; i < N; ++i) {
          if (!in[i]) continue;
          ++L;
          auto e = zero;
          e[i] = 1;
          rhs += m.prob(b, e);
        }
        if (L == 0) continue;
        rhs -= (L - 1) * m.prob(b, zero);
        worst = std::max(worst, std::abs(m(b, flat) - rhs));
      }
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("fingerprint inequalities hold on every C_{N,K} vertex") {
  for (int N = 2; N <= 4; ++N)
    for (int K = 1; K < N; ++K) {
      const auto verts = enumerate_vertices(N, K);
      for (const auto& S : combinations(N, K + 1)) {
        const auto ineq = fingerprint_inequality(AlphabetSpec::binary(N), K, S);
        FingerprintLabeling swapped;
        swapped.reference_output = 1;
        swapped.flipped_output = 0;
        const auto ineq2 = fingerprint_inequality(AlphabetSpec::binary(N), K, S, swapped);
        for (const auto& v : verts) {
          const RationalVector p = to_rational_vector(v.probs());
          REQUIRE(eval_inequality(ineq, p) <= ineq.bound);
          REQUIRE(eval_inequality(ineq2, p) <= ineq2.bound);
        }
      }
    }
}
