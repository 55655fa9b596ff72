#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "sqc/eig.hpp"
#include "sqc/matrix.hpp"
#include "sqc/projection.hpp"
#include "sqc/rng.hpp"

using namespace sqc;

namespace {

CMatrix random_hermitian(int dim, CounterRng& rng) {
  CMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    m.at(i, i) = rng.next_gaussian();
    for (int j = i + 1; j < dim; ++j) {
      const cplx v = rng.next_complex_gaussian();
      m.at(i, j) = v;
      m.at(j, i) = std::conj(v);
    }
  }
  return m;
}

double orthonormality_defect(const CMatrix& v) {
  CMatrix g = v.adjoint() * v;
  g -= CMatrix::identity(v.dim());
  return g.max_abs();
}

}  // namespace

TEST_CASE("rng determinism and substreams") {
  CounterRng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  CounterRng base(7);
  CounterRng s0 = base.substream(0);
  CounterRng s1 = base.substream(1);
  CHECK(s0.next_u64() != s1.next_u64());
  // Substream derivation ignores the parent counter.
  CounterRng base2(7);
  base2.next_u64();
  CounterRng s0again = base2.substream(0);
  CounterRng s0ref = CounterRng(7).substream(0);
  CHECK(s0again.next_u64() == s0ref.next_u64());
}

TEST_CASE("rng uniform and gaussian moments") {
  CounterRng rng(2024);
  double sum = 0.0, sumsq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double g = rng.next_gaussian();
    sum += g;
    sumsq += g * g;
  }
  CHECK(std::fabs(sum / n) < 0.01);
  CHECK(std::fabs(sumsq / n - 1.0) < 0.02);
}

TEST_CASE("hermitian_eig identity and diagonal cases") {
  auto e = hermitian_eig(CMatrix::identity(2));
  CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-14));

  CMatrix d(2);
  d.at(0, 0) = 0.0;
  d.at(1, 1) = 1.0;
  auto e2 = hermitian_eig(d);
  CHECK(e2.values[0] == doctest::Approx(1.0));
  CHECK(e2.values[1] == doctest::Approx(0.0));
  // Descending order swaps the canonical basis (up to phase).
  CHECK(std::abs(e2.vectors.at(1, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(e2.vectors.at(0, 1)) == doctest::Approx(1.0));
  CHECK(std::abs(e2.vectors.at(0, 0)) == doctest::Approx(0.0));
}

TEST_CASE("hermitian_eig all-ones 3x3") {
  // Characteristic polynomial of the all-ones matrix J_3 is l^2 (l - 3).
  CMatrix j(3);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) j.at(i, k) = 1.0;
  auto e = hermitian_eig(j);
  CHECK(e.values[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(e.values[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(e.values[2] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eig rejects asymmetric input") {
  CMatrix m = CMatrix::identity(3);
  m.at(0, 1) = 1e-6;
  CHECK_THROWS_WITH_AS(hermitian_eig(m), doctest::Contains("asymmetry"), std::invalid_argument);
}

TEST_CASE("hermitian_eig reconstruction residual over random matrices") {
  CounterRng rng(11);
  double worst_recon = 0.0, worst_orth = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int dim = 1 + static_cast<int>(rng.next_u64() % 16);
    CMatrix m = random_hermitian(dim, rng);
    auto e = hermitian_eig(m);
    CMatrix r = eig_reconstruct(e);
    r -= m;
    worst_recon = std::max(worst_recon, r.max_abs());
    worst_orth = std::max(worst_orth, orthonormality_defect(e.vectors));
    for (std::size_t k = 1; k < e.values.size(); ++k) CHECK(e.values[k - 1] >= e.values[k]);
  }
  CHECK(worst_recon <= 1e-9);
  CHECK(worst_orth <= 1e-10);
}

TEST_CASE("random_unitary contract") {
  CHECK_THROWS_AS(random_unitary(0, 1), std::invalid_argument);

  const CMatrix u = random_unitary(5, 99);
  CHECK(orthonormality_defect(u) <= 1e-10);

  const CMatrix v = random_unitary(5, 99);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(u.at(i, j) == v.at(i, j));

  const CMatrix w = random_unitary(1, 3);
  CHECK(std::abs(w.at(0, 0)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("random_unitary Haar moment") {
  // Monte-Carlo oracle: E|U_00|^2 = 1/dim for Haar measure.
  const int dim = 4;
  double acc = 0.0;
  const int n = 10000;
  for (int s = 0; s < n; ++s) {
    CounterRng rng(CounterRng(555).substream(static_cast<std::uint64_t>(s)));
    const CMatrix u = haar_unitary(dim, rng);
    acc += std::norm(u.at(0, 0));
  }
  CHECK(std::fabs(acc / n - 0.25) < 0.01);
}

TEST_CASE("random_projection contract") {
  CHECK_THROWS_AS(random_projection(3, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_projection(3, -1, 1), std::invalid_argument);

  const Projection z = random_projection(3, 0, 7);
  CHECK(z.matrix().max_abs() == 0.0);
  const Projection id = random_projection(3, 3, 7);
  CHECK((id.matrix() - CMatrix::identity(3)).max_abs() == 0.0);

  CounterRng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 2 + static_cast<int>(rng.next_u64() % 7);
    const int rank = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(dim + 1));
    CounterRng sub = rng.substream(static_cast<std::uint64_t>(trial));
    const Projection p = haar_projection(dim, rank, sub);
    CHECK(p.rank() == rank);
    CHECK(p.matrix().hermiticity_defect() <= 1e-12);
  }
}

TEST_CASE("random_projection pair trace moment") {
  // Monte-Carlo oracle: for independent rank-1 projections in dim 2,
  // E tr_2(P Q) = E |<u,v>|^2 / 2 = (1/2) * (1/2) = 1/4.
  double acc = 0.0;
  const int n = 10000;
  CounterRng master(8080);
  for (int s = 0; s < n; ++s) {
    CounterRng a = master.substream(2 * static_cast<std::uint64_t>(s));
    CounterRng b = master.substream(2 * static_cast<std::uint64_t>(s) + 1);
    acc += pair_trace(haar_projection(2, 1, a), haar_projection(2, 1, b));
  }
  CHECK(std::fabs(acc / n - 0.25) < 0.01);
}

TEST_CASE("trace_triple examples") {
  const Projection i2 = Projection::from_matrix(CMatrix::identity(2));
  Vec3 t = trace_triple(i2, i2, i2);
  CHECK(t[0] == doctest::Approx(1.0));
  CHECK(t[1] == doctest::Approx(1.0));
  CHECK(t[2] == doctest::Approx(1.0));

  CMatrix e1(2), e2(2), plus(2);
  e1.at(0, 0) = 1.0;
  e2.at(1, 1) = 1.0;
  plus.at(0, 0) = plus.at(0, 1) = plus.at(1, 0) = plus.at(1, 1) = 0.5;
  const Projection p1 = Projection::from_matrix(e1);
  const Projection p2 = Projection::from_matrix(e2);
  const Projection p3 = Projection::from_matrix(plus);

  Vec3 t2 = trace_triple(p1, p2, p1);
  CHECK(t2[0] == doctest::Approx(0.0));
  CHECK(t2[1] == doctest::Approx(0.5));
  CHECK(t2[2] == doctest::Approx(0.0));

  // P1 = P2 = diag(1,0), P3 the projection onto (e1+e2)/sqrt(2).
  Vec3 t3 = trace_triple(p1, p1, p3);
  CHECK(t3[0] == doctest::Approx(0.5));
  CHECK(t3[1] == doctest::Approx(0.25));
  CHECK(t3[2] == doctest::Approx(0.25));

  const Projection big = Projection::from_matrix(CMatrix::identity(3));
  CHECK_THROWS_AS(trace_triple(p1, p2, big), std::invalid_argument);
}

TEST_CASE("pair trace stays in the rank interval") {
  // 1e5 random pairs across dimensions <= 8; the admissible interval is
  // [max(0,(n1+n2-d)/d), min(n1/d, n2/d)].
  CounterRng master(4242);
  double worst = 0.0;
  for (int trial = 0; trial < 100000; ++trial) {
    CounterRng rng = master.substream(static_cast<std::uint64_t>(trial));
    const int d = 2 + static_cast<int>(rng.next_u64() % 7);
    const int n1 = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(d + 1));
    const int n2 = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(d + 1));
    CounterRng ra = rng.substream(1), rb = rng.substream(2);
    const double t = pair_trace(haar_projection(d, n1, ra), haar_projection(d, n2, rb));
    const double lo = std::max(0.0, static_cast<double>(n1 + n2 - d) / d);
    const double hi = std::min(static_cast<double>(n1) / d, static_cast<double>(n2) / d);
    worst = std::max(worst, lo - t);
    worst = std::max(worst, t - hi);
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("trace_triple is invariant under joint unitary conjugation") {
  CounterRng master(17);
  for (int trial = 0; trial < 1000; ++trial) {
    CounterRng rng = master.substream(static_cast<std::uint64_t>(trial));
    const int d = 2 + static_cast<int>(rng.next_u64() % 5);
    CounterRng r1 = rng.substream(1), r2 = rng.substream(2), r3 = rng.substream(3), ru = rng.substream(4);
    const Projection p1 = haar_projection(d, 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(d)), r1);
    const Projection p2 = haar_projection(d, 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(d)), r2);
    const Projection p3 = haar_projection(d, 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(d)), r3);
    const CMatrix u = haar_unitary(d, ru);
    auto conj = [&u](const Projection& p) {
      CMatrix m = u * p.matrix() * u.adjoint();
      for (int i = 0; i < m.dim(); ++i) {
        m.at(i, i) = cplx(m.at(i, i).real(), 0.0);
        for (int j = i + 1; j < m.dim(); ++j) {
          const cplx v = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
          m.at(i, j) = v;
          m.at(j, i) = std::conj(v);
        }
      }
      return Projection::from_matrix(m);
    };
    const Vec3 before = trace_triple(p1, p2, p3);
    const Vec3 after = trace_triple(conj(p1), conj(p2), conj(p3));
    CHECK(max_abs(before - after) <= 1e-10);
  }
}

TEST_CASE("projection validation rejects near-projections") {
  CMatrix m = CMatrix::identity(2);
  m.at(0, 0) = 0.9;  // Hermitian but not idempotent
  CHECK_THROWS_AS(Projection::from_matrix(m), std::invalid_argument);

  CMatrix h(2);
  h.at(0, 1) = 1e-3;  // not Hermitian
  CHECK_THROWS_AS(Projection::from_matrix(h), std::invalid_argument);
}

TEST_CASE("pvm validation") {
  const Projection p = random_projection(4, 2, 5);
  CHECK_NOTHROW(Pvm::from_elements({p, p.complement()}));
  CHECK_THROWS_AS(Pvm::from_elements({p, p}), std::invalid_argument);
}

TEST_CASE("direct sums and blocks") {
  CMatrix a = CMatrix::identity(2);
  CMatrix b(1);
  b.at(0, 0) = 5.0;
  CMatrix s = CMatrix::direct_sum(a, b);
  CHECK(s.dim() == 3);
  CHECK(s.at(2, 2) == cplx(5.0));
  CHECK(s.at(0, 2) == cplx(0.0));
  CMatrix back = s.block(2, 1);
  CHECK(back.at(0, 0) == cplx(5.0));
}
