#include <doctest.h>

#include "cherednik/errors.hpp"
#include "cherednik/parallel.hpp"
#include "cherednik/twist.hpp"
#include "support.hpp"

using namespace cherednik;
using testing_support::braided;
using testing_support::parse;
using testing_support::rational;

namespace {

using MaskPair = std::pair<unsigned, unsigned>;

// F = prod_{j<i} 1/2 (1(x)1 + g_i(x)1 + 1(x)g_j - g_i(x)g_j), expanded by hand
// into sum c_{S,T} gamma_S (x) gamma_T.
std::map<MaskPair, Rational> expanded_F(int n) {
  std::map<MaskPair, Rational> F{{{0u, 0u}, Rational(1)}};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j) {
      const unsigned gi = 1u << (i - 1), gj = 1u << (j - 1);
      const std::vector<std::pair<MaskPair, Rational>> f{{{0u, 0u}, Rational(1, 2)},
                                                         {{gi, 0u}, Rational(1, 2)},
                                                         {{0u, gj}, Rational(1, 2)},
                                                         {{gi, gj}, Rational(-1, 2)}};
      std::map<MaskPair, Rational> next;
      for (const auto& [k, c] : F)
        for (const auto& [k2, c2] : f) next[{k.first ^ k2.first, k.second ^ k2.second}] += c * c2;
      F.clear();
      for (const auto& [k, c] : next)
        if (c != 0) F[k] = c;
    }
  return F;
}

// sum c_{S,T} (gamma_S |> a)(gamma_T |> b)
PBWElement star_by_expansion(const PBWElement& a, const PBWElement& b) {
  PBWElement out(a.algebra());
  for (const auto& [k, c] : expanded_F(a.algebra()->n()))
    out += multiply(t_action(k.first, a), t_action(k.second, b)) * ParamScalar(CycRational(c));
  return out;
}

PBWElement X(const AlgebraPtr& a, int i) { return PBWElement::x(a, i); }
PBWElement G(const AlgebraPtr& a, const MonomialMatrix& g) { return PBWElement::group(a, g); }

}  // namespace

TEST_SUITE("twist") {
  TEST_CASE("cocycle axioms hold exhaustively") {
    for (int n : {2, 3, 4}) {
      CAPTURE(n);
      const auto reports = qt_axioms_check(n);
      CHECK(reports.size() >= 7);
      for (const auto& r : reports) {
        CAPTURE(r.name);
        CHECK(r.passed());
      }
    }
  }

  TEST_CASE("the cocycle as a small tensor") {
    for (int n : {2, 3, 4}) {
      const SmallTensor F = cocycle_F(n);
      CHECK(F * F == SmallTensor::one(2));
      // agrees with the hand expansion
      SmallTensor hand(2);
      for (const auto& [k, c] : expanded_F(n)) hand.add({k.first, k.second}, c);
      CHECK(F == hand);
      CHECK(F.counit(0) == SmallTensor::one(1));
      CHECK(F.counit(1) == SmallTensor::one(1));
    }
    CHECK(cocycle_F(2) == f_element(2, 1));
    CHECK(f_element(2, 1) * f_element(2, 1) == SmallTensor::one(2));
    CHECK(f_element(3, 1) * f_element(2, 1) == f_element(2, 1) * f_element(3, 1));
  }

  TEST_CASE("f_21 on x2 (x) x1") {
    const auto r = rational(2, 1, 2);
    const TensorPair tp = TensorPair::of(X(r, 2), X(r, 1));
    const TensorPair f = f_apply(2, 1, tp);
    REQUIRE(f.terms().size() == 1);
    CHECK(f.terms().begin()->second == ParamScalar(-1));
    CHECK(f.terms().begin()->first == tp.terms().begin()->first);
    CHECK(f_apply(2, 1, f) == tp);
    // fixed on diagonal left factors
    const TensorPair td = TensorPair::of(G(r, make_t(2, 2, 1, 1)), X(r, 1));
    CHECK(f_apply(2, 1, td) == td);
  }

  TEST_CASE("star examples") {
    const auto r = rational(2, 1, 2);
    CHECK(star(X(r, 2), X(r, 1)) == -(X(r, 1) * X(r, 2)));
    CHECK(star(X(r, 1), X(r, 2)) == X(r, 1) * X(r, 2));
    CHECK(star(X(r, 2), X(r, 1)) == -star(X(r, 1), X(r, 2)));
    CHECK(star(PBWElement::y(r, 2), X(r, 1)) == -(PBWElement::y(r, 2) * X(r, 1)));
    const MonomialMatrix s = simple_s(2, 2, 1);
    CHECK(star(G(r, s), G(r, s)) == G(r, make_r(2, 2, 1, 2)));
    CHECK(star(G(r, s), G(r, s)).to_string() == "t(1;1)*t(2;1)");
    const auto t = G(r, make_t(2, 2, 1, 1));
    CHECK(star(t, X(r, 1)) == t * X(r, 1));
    CHECK(star(X(r, 1), t) == X(r, 1) * t);
    // the twisted product is not the plain one
    CHECK_FALSE(star(X(r, 2), X(r, 1)) == X(r, 2) * X(r, 1));
  }

  TEST_CASE("property: sign rule, F-oracle and hand expansion agree") {
    Rng rng(61);
    for (const auto& alg : {rational(2, 1, 2), rational(2, 1, 3), rational(4, 1, 2), rational(4, 2, 3)}) {
      CAPTURE(alg->name());
      const auto gens = algebra_generators(alg);
      for (const auto& [na, a] : gens)
        for (const auto& [nb, b] : gens) {
          CAPTURE(na);
          CAPTURE(nb);
          const PBWElement fast = star(a, b);
          CHECK(fast == star_oracle(a, b));
          CHECK(fast == star_by_expansion(a, b));
        }
      for (int trial = 0; trial < 30; ++trial) {
        const PBWElement a = random_element(alg, rng), b = random_element(alg, rng);
        const PBWElement fast = star(a, b);
        CHECK(fast == star_oracle(a, b));
        CHECK(fast == star_by_expansion(a, b));
        CHECK(fast == star_serial(a, b));
      }
    }
  }

  TEST_CASE("property: star is associative") {
    Rng rng(62);
    for (const auto& alg : {rational(2, 1, 3), rational(4, 1, 2)}) {
      for (int trial = 0; trial < 20; ++trial) {
        const PBWElement a = random_element(alg, rng), b = random_element(alg, rng), c = random_element(alg, rng);
        CHECK(star(star(a, b), c) == star(a, star(b, c)));
      }
    }
  }

  TEST_CASE("property: the order of the f_ij does not matter") {
    Rng rng(63);
    const auto r = rational(2, 1, 3);
    for (int trial = 0; trial < 20; ++trial) {
      const TensorPair tp = TensorPair::of(random_element(r, rng), random_element(r, rng));
      auto order = f_order(3);
      rng.shuffle(order);
      CHECK(F_apply(tp, order) == F_apply(tp));
    }
    CHECK(f_order(3) == std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}});
  }

  TEST_CASE("p and q split the T-action") {
    Rng rng(64);
    const auto r = rational(2, 1, 3);
    for (int trial = 0; trial < 20; ++trial) {
      const PBWElement u = random_element(r, rng);
      for (int i = 1; i <= 3; ++i) {
        CHECK(p_action(i, u) + q_action(i, u) == u);
        CHECK(p_action(i, p_action(i, u)) == p_action(i, u));
        CHECK(p_action(i, q_action(i, u)).is_zero());
        // s_i * u = s_i (p_i |> u) + sbar_i (q_i |> u)
        if (i < 3) {
          const MonomialMatrix s = simple_s(3, 2, i), sb = simple_sbar(3, 2, i);
          CHECK(star(G(r, s), u) == G(r, s) * p_action(i, u) + G(r, sb) * q_action(i, u));
          CHECK(star(u, G(r, s)) == p_action(i + 1, u) * G(r, s) + q_action(i + 1, u) * G(r, sb));
        }
      }
    }
  }

  TEST_CASE("verification suites pass") {
    const SampleConfig cfg{40, 2, 7};
    for (const auto& alg : {rational(2, 1, 2), rational(2, 1, 3), rational(4, 1, 2)}) {
      CAPTURE(alg->name());
      CHECK(verify_star_oracle(alg, cfg).passed());
      CHECK(verify_s_au(alg, cfg).passed());
      CHECK(verify_torus_star(alg, cfg).passed());
      CHECK(verify_star_braid(alg).passed());
      CHECK(verify_star_associative(alg, SampleConfig{10, 2, 7}).passed());
      CHECK(verify_f_order(alg, SampleConfig{10, 2, 7}).passed());
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(star(X(braided(2, 1, 2), 1), X(braided(2, 1, 2), 2)), KindMismatch);
    CHECK_THROWS_AS(star(X(rational(3, 1, 2), 1), X(rational(3, 1, 2), 2)), InvalidSpec);
    CHECK_THROWS_AS(star_oracle(X(braided(2, 1, 2), 1), X(braided(2, 1, 2), 2)), KindMismatch);
    CHECK_THROWS_AS(star(X(rational(2, 1, 2), 1), X(rational(2, 1, 3), 2)), KindMismatch);
  }
}
