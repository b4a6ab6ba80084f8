#include <doctest.h>

#include "cherednik/errors.hpp"
#include "cherednik/pbw.hpp"
#include "support.hpp"

using namespace cherednik;
using testing_support::braided;
using testing_support::parse;
using testing_support::random_word;
using testing_support::rational;

namespace {

PBWElement X(const AlgebraPtr& a, int i) { return PBWElement::x(a, i); }
PBWElement Y(const AlgebraPtr& a, int i) { return PBWElement::y(a, i); }
PBWElement G(const AlgebraPtr& a, const MonomialMatrix& g) { return PBWElement::group(a, g); }

PBWElement random_el(const AlgebraPtr& alg, Rng& rng, int degree = 2, int terms = 2) {
  return random_element(alg, rng, RandomElementOptions{degree, terms});
}

// Number of (k, l) in N^n x N^n with |k| + |l| = d, by enumeration.
long long count_exponents(int slots, int d) {
  if (slots == 0) return d == 0 ? 1 : 0;
  long long total = 0;
  for (int e = 0; e <= d; ++e) total += count_exponents(slots - 1, d - e);
  return total;
}

// g u g^-1 = coeff * (single term); returns coeff, requires one term.
ParamScalar conjugation_scalar(const AlgebraPtr& alg, const MonomialMatrix& g, const PBWElement& u,
                               const PBWElement& image) {
  const PBWElement c = G(alg, g) * u * G(alg, g.inverse());
  REQUIRE(c.size() == 1);
  REQUIRE(image.size() == 1);
  CHECK(c.terms().begin()->first == image.terms().begin()->first);
  return c.terms().begin()->second;
}

// g rhs(i,j) g^-1 = a_j b_i rhs(pi(i), pi(j)) with g x_j g^-1 = a_j x_pi(j) and
// g y_i g^-1 = b_i y_pi(i); the relations must be stable under conjugation.
bool rhs_equivariant(const AlgebraPtr& alg, const std::function<GroupAlgebraElement(int, int)>& rhs) {
  const int n = alg->n();
  for (const auto& g : group_generators(alg->group()))
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        const int pi = g.image(i - 1) + 1, pj = g.image(j - 1) + 1;
        const ParamScalar a = conjugation_scalar(alg, g, X(alg, j), X(alg, pj));
        const ParamScalar b = conjugation_scalar(alg, g, Y(alg, i), Y(alg, pi));
        const PBWElement lhs = G(alg, g) * PBWElement::from_group_algebra(alg, rhs(i, j)) * G(alg, g.inverse());
        const PBWElement want = PBWElement::from_group_algebra(alg, rhs(pi, pj)) * (a * b);
        if (!(lhs == want)) return false;
      }
  return true;
}

}  // namespace

TEST_SUITE("pbw") {
  TEST_CASE("straightening examples") {
    const auto r = rational(2, 1, 2);
    CHECK(straighten(r, Word{Letter::Y(1), Letter::X(2)}).to_string() == "x2*y1 + c1*s(1,2;0) - c1*s(1,2;1)");
    CHECK(straighten(r, Word{Letter::Y(1), Letter::X(1)}).to_string() ==
          "x1*y1 + 1 - c1*s(1,2;0) - c1*s(1,2;1) - c[1]*t(1;1)");
    const auto b = braided(2, 1, 2);
    CHECK(straighten(b, Word{Letter::X(2), Letter::X(1)}) == -(X(b, 1) * X(b, 2)));
    CHECK(straighten(b, Word{Letter::Y(2), Letter::Y(1)}) == -(Y(b, 1) * Y(b, 2)));
    CHECK(straighten(r, Word{Letter::X(2), Letter::X(1)}) == X(r, 1) * X(r, 2));
    // g x_i = g(x_i) g
    CHECK(straighten(r, Word{Letter::G(make_t(2, 2, 1, 1)), Letter::X(1)}).to_string() == "-x1*t(1;1)");
    CHECK(straighten(r, Word{Letter::G(make_s(2, 2, 1, 2, 0)), Letter::X(1)}).to_string() == "x2*s(1,2;0)");
    CHECK(straighten(r, Word{Letter::G(make_s(2, 2, 1, 2, 1)), Letter::G(make_s(2, 2, 1, 2, 1))}).to_string() == "1");
  }

  TEST_CASE("multiplication basics") {
    const auto r = rational(2, 1, 3);
    Rng rng(41);
    const PBWElement one = PBWElement::scalar(r, 1);
    for (int trial = 0; trial < 20; ++trial) {
      const PBWElement a = random_el(r, rng);
      CHECK(one * a == a);
      CHECK(a * one == a);
    }
    const PBWElement xy = X(r, 1) * Y(r, 1);
    CHECK(xy.size() == 1);
    CHECK(xy.to_string() == "x1*y1");
    CHECK((PBWElement(r) * X(r, 1)).is_zero());
  }

  TEST_CASE("property: associativity") {
    Rng rng(42);
    for (const auto& alg : {rational(2, 1, 2), rational(2, 1, 3), braided(2, 1, 3), rational(4, 2, 3)}) {
      CAPTURE(alg->name());
      for (int trial = 0; trial < 25; ++trial) {
        const PBWElement a = random_el(alg, rng), b = random_el(alg, rng), c = random_el(alg, rng);
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
      }
    }
  }

  TEST_CASE("property: table product, rewriting and serial kernel agree") {
    Rng rng(43);
    for (const auto& alg : {rational(2, 1, 3), braided(2, 1, 3), rational(4, 1, 2), braided(4, 1, 2)}) {
      CAPTURE(alg->name());
      for (int trial = 0; trial < 30; ++trial) {
        const PBWElement a = random_el(alg, rng, 3), b = random_el(alg, rng, 3);
        const PBWElement ab = multiply(a, b);
        CHECK(ab == multiply_by_rewriting(a, b));
        CHECK(ab == multiply_serial(a, b));
      }
    }
  }

  TEST_CASE("property: normal words are fixed points") {
    Rng rng(44);
    for (const auto& alg : {rational(4, 2, 3), braided(2, 1, 3)}) {
      for (int trial = 0; trial < 50; ++trial) {
        const PBWElement a = random_el(alg, rng, 4, 1);
        for (const auto& [t, c] : a.terms()) {
          const PBWElement once = straighten(alg, word_of(t));
          REQUIRE(once.size() == 1);
          CHECK(once.terms().begin()->first == t);
          CHECK(once.terms().begin()->second == ParamScalar(1));
        }
      }
    }
  }

  TEST_CASE("property: rewriting order does not matter") {
    Rng rng(45), order_rng(46);
    const std::vector<AlgebraPtr> algs{rational(2, 1, 3), braided(2, 1, 3), rational(4, 1, 2), braided(4, 2, 3)};
    for (int trial = 0; trial < 200; ++trial) {
      const AlgebraPtr& alg = algs[trial % algs.size()];
      const Word w = random_word(rng, alg, 6);
      StraightenOptions random_order;
      random_order.random_order = &order_rng;
      CHECK(straighten(alg, w) == straighten(alg, w, random_order));
    }
  }

  TEST_CASE("T-action") {
    const auto r = rational(2, 1, 2);
    CHECK(gamma_action(1, X(r, 1)) == -X(r, 1));
    CHECK(gamma_action(1, X(r, 2)) == X(r, 2));
    CHECK(gamma_action(2, Y(r, 2)) == -Y(r, 2));
    // only the group part moves: t_1 s_12 t_1 = sbar_12
    const PBWElement u = X(r, 2) * G(r, make_s(2, 2, 1, 2, 0)) * Y(r, 2);
    CHECK(gamma_action(1, u) == X(r, 2) * G(r, make_s(2, 2, 1, 2, 1)) * Y(r, 2));
    Rng rng(47);
    for (const auto& alg : {rational(2, 1, 3), rational(4, 2, 3), braided(2, 1, 3)}) {
      for (int trial = 0; trial < 20; ++trial) {
        const PBWElement a = random_el(alg, rng), b = random_el(alg, rng);
        const unsigned mask = static_cast<unsigned>(rng.below(8));
        CHECK(t_action(mask, t_action(mask, a)) == a);
        CHECK(t_action(mask, a * b) == t_action(mask, a) * t_action(mask, b));
        PBWElement sum(alg);
        for (const auto& [I, part] : eigencomponents(a)) {
          CHECK(eigen_project(TCharacter{I}, part) == part);
          sum += part;
        }
        CHECK(sum == a);
      }
    }
    CHECK_THROWS_AS(gamma_action(1, X(rational(3, 1, 2), 1)), InvalidSpec);
  }

  TEST_CASE("graded dimensions") {
    const auto r = rational(2, 1, 2), b = braided(2, 1, 2);
    CHECK(graded_dimension(*r, 0) == 8);
    CHECK(graded_dimension(*r, 1) == 32);
    for (const auto& alg : {r, b, rational(4, 2, 3)})
      for (int d = 0; d <= 3; ++d) {
        CHECK(graded_dimension(*alg, d) ==
              static_cast<long long>(alg->elements().size()) * count_exponents(2 * alg->n(), d));
        if (alg != r) continue;
        CHECK(graded_dimension(*r, d) == graded_dimension(*b, d));
      }
    CHECK_THROWS_AS(graded_dimension(*rational(4, 1, 6), 0, 100), SizeLimitExceeded);
  }

  TEST_CASE("relations against the general kappa form") {
    for (const auto& alg : {rational(2, 1, 2), rational(2, 1, 3), rational(4, 2, 3), rational(3, 1, 2),
                            rational(6, 2, 3)}) {
      CAPTURE(alg->name());
      for (int i = 1; i <= alg->n(); ++i)
        for (int j = 1; j <= alg->n(); ++j) {
          CHECK(kappa_commutator(*alg, i, j) == alg->yx_rhs(i, j));
          CHECK(commutator(Y(alg, i), X(alg, j)) == PBWElement::from_group_algebra(alg, alg->yx_rhs(i, j)));
        }
    }
  }

  TEST_CASE("equivariance of the off-diagonal relation") {
    for (const auto& alg : {rational(2, 1, 3), rational(4, 1, 3), rational(4, 2, 3), braided(4, 2, 3)}) {
      CAPTURE(alg->name());
      CHECK(rhs_equivariant(alg, [&](int i, int j) { return alg->yx_rhs(i, j); }));
    }
    // eps in place of eps^-1: harmless for m = 2, not G-stable for m = 4
    const auto r2 = rational(2, 1, 3), r4 = rational(4, 1, 3);
    CHECK(printed_offdiagonal_rhs(*r2, 1, 2) == r2->yx_rhs(1, 2));
    CHECK_FALSE(printed_offdiagonal_rhs(*r4, 1, 2) == r4->yx_rhs(1, 2));
    CHECK_FALSE(rhs_equivariant(r4, [&](int i, int j) { return printed_offdiagonal_rhs(*r4, i, j); }));
  }

  TEST_CASE("c = 0 gives the Weyl algebra smash product") {
    for (const auto& alg : {rational(2, 1, 3), rational(4, 2, 3)}) {
      ParamAssignment zero;
      for (int k = 0; k < alg->parameter_count(); ++k) zero[k] = CycRational(0);
      for (int i = 1; i <= alg->n(); ++i)
        for (int j = 1; j <= alg->n(); ++j)
          CHECK(commutator(Y(alg, i), X(alg, j)).specialize(zero) == PBWElement::scalar(alg, i == j ? 1 : 0));
    }
  }

  TEST_CASE("errors") {
    const auto r = rational(2, 1, 2);
    CHECK_THROWS_AS(X(r, 3), AlphabetError);
    CHECK_THROWS_AS(Y(r, 0), AlphabetError);
    CHECK_THROWS_AS(G(r, make_s(3, 2, 1, 2, 0)), MembershipError);
    CHECK_THROWS_AS(G(braided(2, 2, 3), make_s(3, 2, 1, 2, 0)), MembershipError);
    CHECK_THROWS_AS(straighten(r, Word{Letter::X(5)}), AlphabetError);
    CHECK_THROWS_AS(X(r, 1) * X(rational(2, 1, 3), 1), KindMismatch);
    CHECK_THROWS_AS(Algebra::create(GroupSpec{2, 2, 2}, AlgebraKind::rational), InvalidSpec);
    CHECK_THROWS_AS(Algebra::create(GroupSpec{3, 1, 3}, AlgebraKind::braided), InvalidSpec);
    CHECK_THROWS_AS(kappa_commutator(*braided(2, 1, 2), 1, 1), KindMismatch);
  }

  TEST_CASE("straightening cache") {
    const auto r = rational(2, 1, 3);
    r->clear_cache();
    CHECK(r->cache_size() == 0);
    const PBWElement a = Y(r, 1) * Y(r, 2) * X(r, 1);
    CHECK(r->cache_size() > 0);
    const std::size_t before = r->cache_size();
    CHECK(Y(r, 1) * Y(r, 2) * X(r, 1) == a);
    CHECK(r->cache_size() == before);
    r->clear_cache();
    CHECK(Y(r, 1) * Y(r, 2) * X(r, 1) == a);
  }
}
