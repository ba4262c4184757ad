#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "../support/oracles.hpp"
#include "onepmac/encoding.hpp"
#include "onepmac/errors.hpp"
#include "onepmac/inequality.hpp"
#include "onepmac/interference.hpp"
#include "onepmac/strategies.hpp"
#include "onepmac/violation.hpp"

using namespace onepmac;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs_diff(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Kraus sum of a product channel built directly from the branch definitions.
CMatrix product_encoding_oracle(const CMatrix& rho, const std::vector<NpChannel>& ch) {
  const int N = static_cast<int>(rho.rows());
  CMatrix out = CMatrix::Zero(N + 1, N + 1);
  // Coherences are damped by the averaged y factors; populations leak to vacuum.
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i == j) {
        double t = 0.0;
        for (const auto& br : ch[i].branches()) t += br.weight * std::norm(br.y);
        out(i + 1, i + 1) = rho(i, i) * t;
        out(0, 0) += rho(i, i).real() * (1.0 - t);
      } else {
        cplx yi = 0.0, yj = 0.0;
        for (const auto& br : ch[i].branches()) yi += br.weight * br.y;
        for (const auto& br : ch[j].branches()) yj += br.weight * br.y;
        out(i + 1, j + 1) = rho(i, j) * yi * std::conj(yj);
      }
    }
  return out;
}

}  // namespace

TEST_CASE("equal_superposition") {
  CHECK(equal_superposition(1).matrix()(0, 0).real() == doctest::Approx(1.0));
  CHECK(std::abs(equal_superposition(2)(0, 1) - 0.5) < 1e-15);
  const auto s3 = equal_superposition(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(std::abs(s3(i, j) - 1.0 / 3.0) < 1e-15);
  CHECK_THROWS_AS(equal_superposition(0), InvalidDim);
}

TEST_CASE("state validation") {
  CMatrix bad(2, 2);
  bad << 0.5, 0.6, 0.6, 0.5;
  CHECK_THROWS_AS(OneParticleState{bad}, InvalidState);
  bad << 0.5, 0.1, 0.2, 0.5;
  CHECK_THROWS_AS(OneParticleState{bad}, InvalidState);
  bad << 0.6, 0.0, 0.0, 0.5;
  CHECK_THROWS_AS(OneParticleState{bad}, InvalidState);
  CVector v(2);
  v << 1.0, 1.0;
  CHECK_THROWS_AS(OneParticleState::pure(v), NotNormalized);
}

TEST_CASE("channel validation") {
  CHECK_THROWS_AS(NpChannel({{1.0, 0.8, 0.8}}), InvalidChannel);
  CHECK_THROWS_AS(NpChannel({{0.5, 1.0, 0.0}, {0.4, 1.0, 0.0}}), InvalidChannel);
  CHECK_THROWS_AS(NpChannel({{1.0, 1.2, 0.0}}), InvalidChannel);
  CHECK_NOTHROW(NpChannel({{0.5, 0.6, cplx(0, 0.8)}, {0.5, 1.0, 0.0}}));
  CMatrix k = CMatrix::Identity(2, 2);
  k(1, 0) = 0.5;  // vacuum -> particle
  CHECK_THROWS_AS(JointNpChannel({0}, {k}), InvalidKraus);
  CHECK_THROWS_AS(JointNpChannel({0}, {0.5 * CMatrix::Identity(2, 2)}), InvalidKraus);
  CHECK_THROWS_AS(Povm({CMatrix::Identity(3, 3)}), InvalidPovm);
  CHECK_THROWS_AS(Povm({CMatrix::Identity(3, 3), CMatrix::Identity(3, 3)}), InvalidPovm);
}

TEST_CASE("apply_product_encoding") {
  const auto s2 = equal_superposition(2);
  SUBCASE("identity channels leave the state unchanged") {
    const std::vector<NpChannel> ch(2, NpChannel::identity());
    const CMatrix out = apply_product_encoding(s2, ch);
    CHECK(std::abs(out(0, 0)) == 0.0);
    CHECK(max_abs_diff(out.bottomRightCorner(2, 2), s2.matrix()) < 1e-15);
  }
  SUBCASE("full blocking gives the vacuum") {
    const std::vector<NpChannel> ch(2, NpChannel::blocking());
    const CMatrix out = apply_product_encoding(s2, ch);
    CHECK(out(0, 0).real() == doctest::Approx(1.0));
    CHECK(out.bottomRightCorner(2, 2).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("phase pi on party 1") {
    const std::vector<NpChannel> ch{NpChannel::phase(kPi), NpChannel::identity()};
    const CMatrix out = apply_product_encoding(s2, ch);
    CMatrix D = CMatrix::Zero(2, 2);
    D(0, 0) = -1.0;
    D(1, 1) = 1.0;
    const CMatrix expected = D * s2.matrix() * D.adjoint();
    CHECK(max_abs_diff(out.bottomRightCorner(2, 2), expected) < 1e-15);
    CHECK(std::abs(out(0, 1) - 0.0) == 0.0);
  }
  SUBCASE("random damping matches the branch formula") {
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
      const auto s = random_mixed_state(3, 2, rng);
      const std::vector<NpChannel> ch{random_np_channel(rng), random_np_channel(rng),
                                      random_np_channel(rng)};
      const CMatrix out = apply_product_encoding(s, ch);
      CHECK(max_abs_diff(out, product_encoding_oracle(s.matrix(), ch)) < 1e-14);
      CHECK(std::abs(out.trace() - 1.0) < 1e-12);
    }
  }
  CHECK_THROWS_AS(apply_product_encoding(s2, std::vector<NpChannel>(3, NpChannel::identity())),
                  ChannelCountMismatch);
}

TEST_CASE("apply_joint_encoding") {
  Rng rng(8);
  const auto s = random_mixed_state(3, 3, rng);
  SUBCASE("singleton partition reproduces the product encoding") {
    const std::vector<NpChannel> ch{random_np_channel(rng), random_np_channel(rng),
                                    random_np_channel(rng)};
    std::vector<JointNpChannel> joint;
    for (int p = 0; p < 3; ++p) joint.push_back(JointNpChannel::from_product({p}, {ch[p]}));
    CHECK(max_abs_diff(apply_joint_encoding(s, joint), apply_product_encoding(s, ch)) < 1e-14);
    // Same for a pair group built from the product of its members.
    std::vector<JointNpChannel> pair{JointNpChannel::from_product({0, 2}, {ch[0], ch[2]}),
                                     JointNpChannel::from_product({1}, {ch[1]})};
    CHECK(max_abs_diff(apply_joint_encoding(s, pair), apply_product_encoding(s, ch)) < 1e-14);
  }
  SUBCASE("vacuum stays vacuum") {
    CMatrix vac = CMatrix::Zero(4, 4);
    vac(0, 0) = 1.0;
    for (int t = 0; t < 10; ++t) {
      const std::vector<JointNpChannel> ch{random_joint_channel({0, 1}, rng),
                                           random_joint_channel({2}, rng)};
      const CMatrix out = apply_joint_encoding(vac, ch);
      CHECK(std::abs(out(0, 0) - 1.0) < 1e-12);
      CHECK(out.bottomRightCorner(3, 3).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  SUBCASE("output is a trace-one positive operator") {
    for (int t = 0; t < 10; ++t) {
      const std::vector<JointNpChannel> ch{random_joint_channel({1, 2}, rng),
                                           random_joint_channel({0}, rng)};
      const CMatrix out = apply_joint_encoding(s, ch, 2);
      CHECK(std::abs(out.trace() - 1.0) < 1e-12);
      CHECK(out(0, 0).real() >= -1e-15);
      CHECK(oracle::eigenvalues(out).front() > -1e-12);
    }
  }
  SUBCASE("parity strategy puts a conditional pi phase on paths i and j") {
    const auto enc = parity_encoder(4, {0, 1}, {2, 3}, 0, 2);
    const auto s4 = equal_superposition(4);
    for (int a = 0; a < 16; ++a) {
      const auto in = oracle::bits(a, 4);
      std::vector<double> theta(4, 0.0);
      if ((in[0] + in[1]) % 2) theta[0] = kPi;
      if ((in[2] + in[3]) % 2) theta[2] = kPi;
      CMatrix D = CMatrix::Zero(4, 4);
      for (int k = 0; k < 4; ++k) D(k, k) = std::polar(1.0, theta[k]);
      const CMatrix out = encode(s4, Encoder{enc}, in);
      CHECK(max_abs_diff(out.bottomRightCorner(4, 4), D * s4.matrix() * D.adjoint()) < 1e-14);
    }
  }
  SUBCASE("bad partitions") {
    const std::vector<JointNpChannel> overlap{JointNpChannel::identity({0, 1}),
                                              JointNpChannel::identity({1, 2})};
    CHECK_THROWS_AS(apply_joint_encoding(s, overlap), InvalidPartition);
    const std::vector<JointNpChannel> missing{JointNpChannel::identity({0, 1})};
    CHECK_THROWS_AS(apply_joint_encoding(s, missing), InvalidPartition);
    const std::vector<JointNpChannel> big{JointNpChannel::identity({0, 1, 2})};
    CHECK_THROWS_AS(apply_joint_encoding(s, big, 2), InvalidPartition);
  }
}

TEST_CASE("generate_mac") {
  SUBCASE("diagonal state with damping and number-basis decoding") {
    const std::vector<double> pops{0.2, 0.5, 0.3};
    const auto s = OneParticleState::diagonal(pops);
    const double y[3][2] = {{1.0, 0.3}, {0.6, 0.0}, {0.9, 0.5}};
    ProductEncoder enc;
    for (int p = 0; p < 3; ++p) enc.table.push_back({NpChannel::damping(y[p][0]), NpChannel::damping(y[p][1])});
    const std::vector<std::vector<double>> d{{0.1, 0.7, 0.2, 1.0}, {0.9, 0.3, 0.8, 0.0}};
    const Mac m = generate_mac(s, enc, Povm::number_basis(d));
    for (int a = 0; a < 8; ++a) {
      const auto in = oracle::bits(a, 3);
      for (int b = 0; b < 2; ++b) {
        double expected = 0.0;
        for (int i = 0; i < 3; ++i) {
          const double t = y[i][in[i]] * y[i][in[i]];
          expected += pops[i] * (d[b][0] * (1.0 - t) + d[b][i + 1] * t);
        }
        CHECK(m(b, a) == doctest::Approx(expected).epsilon(1e-13));
      }
    }
  }
  SUBCASE("equal superposition, {0,pi} parity phases, projector onto psi+") {
    CVector plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    const Mac m = generate_mac(equal_superposition(2), phase_encoder({{0.0, kPi}, {0.0, kPi}}),
                               Povm::projective(plus));
    CHECK(m(0, 0) == doctest::Approx(1.0));
    CHECK(std::abs(m(0, 1)) < 1e-15);
    CHECK(std::abs(m(0, 2)) < 1e-15);
    CHECK(m(0, 3) == doctest::Approx(1.0));
  }
  SUBCASE("three-path superposition with the optimal phases reaches 11/3") {
    const auto rep = violation_report(3);
    std::vector<std::vector<double>> ph;
    for (double phi : rep.phases) ph.push_back({0.0, phi});
    const Mac m = generate_mac(equal_superposition(3), phase_encoder(ph),
                               Povm::projective(rep.measurement_vector));
    CHECK(eval_inequality(fingerprint_inequality(3, 2), m) == doctest::Approx(11.0 / 3.0).epsilon(1e-10));
  }
}

TEST_CASE("i2_max_for_state") {
  CHECK(i2_max_for_state(equal_superposition(2), 0, 1).value == doctest::Approx(2.0));
  const auto diag = i2_max_for_state(OneParticleState::diagonal({0.3, 0.7}), 0, 1);
  CHECK(diag.value == 0.0);
  CHECK_FALSE(diag.strategy);
  for (double theta : {0.0, 0.7, 2.0, -2.5}) {
    CMatrix rho(2, 2);
    rho << 0.5, std::polar(0.3, theta), std::polar(0.3, -theta), 0.5;
    const OneParticleState s(rho);
    const auto r = i2_max_for_state(s, 0, 1);
    CHECK(r.value == doctest::Approx(1.2));
    const Mac m = i2_strategy_mac(s, *r.strategy);
    CHECK(interference_I2(m, 0, 1) == doctest::Approx(1.2).epsilon(1e-12));
  }
  CHECK_THROWS_AS(i2_max_for_state(equal_superposition(2), 0, 0), IndexOutOfRange);
  CHECK_THROWS_AS(i2_max_for_state(equal_superposition(2), 0, 2), IndexOutOfRange);
}

TEST_CASE("build_M and build_M3") {
  const std::vector<double> ph{kPi, -kPi};
  const CMatrix M = build_M(2, ph);
  CMatrix expected(2, 2);
  expected << 0.5, -1.5, -1.5, 0.5;
  CHECK(max_abs_diff(M, expected) < 1e-15);
  CHECK(trace_norm(M) == doctest::Approx(3.0));

  for (int N = 3; N <= 7; ++N)
    for (double phi : {0.3, 1.2, 2.9}) {
      std::vector<double> full(N, kPi);
      full[0] = phi;
      if (N > 1) full[1] = -phi;
      const CMatrix MN = build_M(N, full);
      CHECK(MN.trace().real() == doctest::Approx(N - 1.0));
      auto spectrum = oracle::eigenvalues(MN);
      auto sub = oracle::eigenvalues(build_M3(N, phi));
      for (int k = 0; k < N - 3; ++k) sub.push_back(4.0 / N);
      std::sort(sub.begin(), sub.end());
      REQUIRE(spectrum.size() == sub.size());
      for (std::size_t k = 0; k < spectrum.size(); ++k) CHECK(spectrum[k] == doctest::Approx(sub[k]).epsilon(1e-12));
    }
}

TEST_CASE("trace_norm and the Jacobi eigensolver") {
  CHECK(trace_norm(CMatrix::Identity(3, 3)) == doctest::Approx(3.0));
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -2.0;
  CHECK(trace_norm(d) == doctest::Approx(3.0));
  CMatrix nh = CMatrix::Zero(2, 2);
  nh(0, 1) = 1.0;
  CHECK_THROWS_AS(trace_norm(nh), NotHermitian);

  Rng rng(12);
  for (int n : {1, 2, 3, 5, 8}) {
    CMatrix a(n, n);
    std::normal_distribution<double> g;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) a(r, c) = cplx(g(rng), g(rng));
    const CMatrix h = 0.5 * (a + a.adjoint());
    const auto mine = hermitian_eigenvalues(h);
    const auto ref = oracle::eigenvalues(h);
    for (int k = 0; k < n; ++k) CHECK(mine[k] == doctest::Approx(ref[k]).epsilon(1e-11));
    CHECK(trace_norm(h) == doctest::Approx(oracle::trace_norm(h)).epsilon(1e-10));
    if (n == 3) {
      const auto c = hermitian_eigenvalues_3x3(h.data());
      for (int k = 0; k < 3; ++k) CHECK(c[k] == doctest::Approx(ref[k]).epsilon(1e-11));
    }
    const CVector v = lowest_eigenvector(h);
    CHECK((h * v - ref[0] * v).norm() < 1e-10);
  }
}

TEST_CASE("violation values") {
  CHECK(max_violation(2).delta == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(max_violation(3).delta == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(max_violation(4).delta == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(std::cos(max_violation(4).phi) == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(max_violation(6).delta == doctest::Approx(1.0 / 72.0).epsilon(1e-12));
  CHECK(max_violation(2).phi == doctest::Approx(kPi));
  CHECK_THROWS_AS(max_violation(1), InvalidDim);

  CHECK(helstrom_lhs(3, optimal_phases(3)) == doctest::Approx(11.0 / 3.0).epsilon(1e-12));
  CHECK(helstrom_lhs(2, optimal_phases(2)) == doctest::Approx(3.0).epsilon(1e-12));
  for (int N = 2; N <= 6; ++N) {
    CHECK(helstrom_lhs(N, std::vector<double>(N, 0.0)) == doctest::Approx(N).epsilon(1e-12));
    CHECK(std::abs(violation_delta(N, 0.0)) < 1e-12);
  }

  const auto rep = violation_report(4);
  CHECK(rep.delta == doctest::Approx(0.5 * (rep.trace_norm - 4 + 1)).epsilon(1e-12));
  CHECK(rep.lhs == doctest::Approx(0.5 * (4 + 1 + rep.trace_norm)).epsilon(1e-12));
}

TEST_CASE("helstrom_value agrees with a direct positive-part oracle") {
  Rng rng(21);
  const auto ineq = c32_nontrivial_inequalities()[1];
  const auto s = random_mixed_state(3, 2, rng);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  const std::vector<std::vector<double>> ph{{0.0, u(rng)}, {0.0, u(rng)}, {0.0, u(rng)}};
  // Direct: sum c(1|a) + positive part of sum (c(0|a) - c(1|a)) sigma_a.
  CMatrix X = CMatrix::Zero(3, 3);
  double base = 0.0;
  for (int a = 0; a < 8; ++a) {
    const auto in = oracle::bits(a, 3);
    const double c0 = ineq.coeffs[a].get_d(), c1 = ineq.coeffs[8 + a].get_d();
    base += c1;
    CMatrix D = CMatrix::Zero(3, 3);
    for (int k = 0; k < 3; ++k) D(k, k) = std::polar(1.0, ph[k][in[k]]);
    X += (c0 - c1) * (D * s.matrix() * D.adjoint());
  }
  CHECK(helstrom_phase_value(ineq, s.matrix(), ph) ==
        doctest::Approx(base + oracle::positive_part(X)).epsilon(1e-12));
}

TEST_CASE("odd-order interference") {
  Rng rng(2);
  SUBCASE("N=3, K=1 with random encodings") {
    const auto s = random_mixed_state(3, 3, rng);
    const auto r = verify_odd_interference_vanishes(s, 1, 30, 5);
    CHECK(r.vanishes);
    CHECK(r.max_abs < 1e-9);
  }
  SUBCASE("second order does not vanish for a coherent pair") {
    CHECK(max_random_interference(equal_superposition(2), 1, 2, 30, 5) > 1e-3);
  }
  SUBCASE("diagonal state: no interference above the group size") {
    const auto s = OneParticleState::diagonal({0.2, 0.3, 0.5});
    CHECK(max_random_interference(s, 1, 2, 20, 9) < 1e-12);
    CHECK(max_random_interference(s, 2, 3, 20, 9) < 1e-12);
  }
  CHECK_THROWS_AS(verify_odd_interference_vanishes(equal_superposition(2), 1, 1), InvalidDim);
}
