#include <doctest.h>

#include "cherednik/group_algebra.hpp"
#include "support.hpp"

using namespace cherednik;
using testing_support::random_member;
using testing_support::random_param_scalar;

namespace {

GroupAlgebraElement random_ga(Rng& rng, const GroupSpec& spec, int terms) {
  GroupAlgebraElement u(spec);
  for (int k = 0; k < terms; ++k) u.add_term(random_member(rng, spec), random_param_scalar(rng, spec.m, 2));
  return u;
}

GroupAlgebraElement delta(const GroupSpec& spec, const MonomialMatrix& g, const ParamScalar& c = 1) {
  return GroupAlgebraElement::delta(spec, g, c);
}

int brute_inversions(unsigned I, unsigned J) {
  int d = 0;
  for (int i = 0; i < 32; ++i)
    for (int j = 0; j < 32; ++j)
      if ((I >> i & 1u) && (J >> j & 1u) && i > j) ++d;
  return d;
}

}  // namespace

TEST_SUITE("group_algebra") {
  TEST_CASE("delta functions multiply like the group") {
    const GroupSpec spec{4, 2, 3};
    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
      const MonomialMatrix g = random_member(rng, spec), h = random_member(rng, spec);
      CHECK(delta(spec, g) * delta(spec, h) == delta(spec, g * h));
    }
  }

  TEST_CASE("sign idempotents") {
    const GroupSpec spec{2, 1, 3};
    const MonomialMatrix id(3, 2);
    for (int i = 1; i <= 3; ++i) {
      const auto t = make_t(3, 2, i, 1);
      const auto plus = (delta(spec, id) + delta(spec, t)) * ParamScalar(CycRational(Rational(1, 2)));
      const auto minus = (delta(spec, id) - delta(spec, t)) * ParamScalar(CycRational(Rational(1, 2)));
      CHECK(plus * plus == plus);
      CHECK(minus * minus == minus);
      CHECK((plus * minus).is_zero());
      CHECK(plus + minus == delta(spec, id));
    }
    const auto s = make_s(3, 2, 1, 2, 0), sb = make_s(3, 2, 1, 2, 1);
    CHECK(((delta(spec, id) + delta(spec, s)) * (delta(spec, id) - delta(spec, s))).is_zero());
    // s^+ s^- = 1/4 (s^2 - s sbar + sbar s - sbar^2); the cross terms cancel since s sbar = sbar s
    const ParamScalar half(CycRational(Rational(1, 2))), quarter(CycRational(Rational(1, 4)));
    const auto splus = (delta(spec, s) + delta(spec, sb)) * half, sminus = (delta(spec, s) - delta(spec, sb)) * half;
    CHECK(s * sb == sb * s);
    CHECK(splus * sminus == (delta(spec, s * s) - delta(spec, sb * sb)) * quarter);
    CHECK((splus * sminus).is_zero());
  }

  TEST_CASE("gamma conjugation") {
    // t_1^(-1) s_12^(zeta^k) t_1^(-1) = s_12^(zeta^{k+m/2})
    for (int m : {2, 4, 6})
      for (int k = 0; k < m; ++k) {
        CHECK(gamma_conjugate(1u, make_s(3, m, 1, 2, k)) == make_s(3, m, 1, 2, k + m / 2));
        CHECK(gamma_conjugate(3u, make_s(3, m, 1, 2, k)) == make_s(3, m, 1, 2, k));
        CHECK(gamma_conjugate(4u, make_s(3, m, 1, 2, k)) == make_s(3, m, 1, 2, k));
      }
    const GroupSpec spec{4, 1, 2};
    CHECK(gamma_action(2, delta(spec, make_s(2, 4, 1, 2, 1))) == delta(spec, make_s(2, 4, 1, 2, 3)));
    CHECK(gamma_action(1, delta(spec, make_t(2, 4, 1, 1))) == delta(spec, make_t(2, 4, 1, 1)));
  }

  TEST_CASE("eigen projection examples") {
    const GroupSpec spec{2, 1, 2};
    const auto s = make_s(2, 2, 1, 2, 0), sb = make_s(2, 2, 1, 2, 1);
    const ParamScalar half(CycRational(Rational(1, 2)));
    // s_12 splits into (s + sbar)/2 (trivial) and (s - sbar)/2 (alpha_{12})
    CHECK(eigen_project(TCharacter{0}, delta(spec, s)) == (delta(spec, s) + delta(spec, sb)) * half);
    CHECK(eigen_project(TCharacter{3}, delta(spec, s)) == (delta(spec, s) - delta(spec, sb)) * half);
    CHECK(eigen_project(TCharacter{1}, delta(spec, s)).is_zero());
    CHECK(eigen_project(TCharacter{0}, delta(spec, make_t(2, 2, 1, 1))) == delta(spec, make_t(2, 2, 1, 1)));
  }

  TEST_CASE("property: projectors decompose the T-action") {
    Rng rng(32);
    for (const auto& spec : {GroupSpec{2, 1, 3}, GroupSpec{4, 2, 3}, GroupSpec{4, 1, 2}}) {
      const unsigned full = (1u << spec.n) - 1;
      for (int trial = 0; trial < 20; ++trial) {
        const auto u = random_ga(rng, spec, 3);
        GroupAlgebraElement sum(spec);
        for (unsigned I = 0; I <= full; ++I) {
          const auto uI = eigen_project(TCharacter{I}, u);
          CHECK(eigen_project(TCharacter{I}, uI) == uI);
          for (unsigned J = 0; J <= full; ++J)
            if (J != I) CHECK(eigen_project(TCharacter{J}, uI).is_zero());
          for (int j = 1; j <= spec.n; ++j)
            CHECK(gamma_action(j, uI) == uI * ParamScalar(TCharacter{I}.value_on(1u << (j - 1))));
          sum += uI;
        }
        CHECK(sum == u);
      }
    }
  }

  TEST_CASE("property: the T-action is by algebra automorphisms") {
    Rng rng(33);
    const GroupSpec spec{4, 2, 3};
    for (int trial = 0; trial < 30; ++trial) {
      const auto u = random_ga(rng, spec, 3), v = random_ga(rng, spec, 3);
      const unsigned mask = static_cast<unsigned>(rng.below(8));
      CHECK(gamma_subset_action(mask, u * v) == gamma_subset_action(mask, u) * gamma_subset_action(mask, v));
      CHECK(gamma_subset_action(mask, gamma_subset_action(mask, u)) == u);
    }
  }

  TEST_CASE("property: associativity and distributivity of convolution") {
    Rng rng(34);
    const GroupSpec spec{2, 1, 3};
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = random_ga(rng, spec, 2), b = random_ga(rng, spec, 2), c = random_ga(rng, spec, 2);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(convolve(a, b) == a * b);
    }
  }

  TEST_CASE("cached eigencomponents sum to delta_g") {
    for (const auto& spec : {GroupSpec{2, 1, 3}, GroupSpec{4, 2, 2}}) {
      for (const auto& g : enumerate(spec)) {
        GroupAlgebraElement sum(spec);
        for (const auto& [mask, part] : group_eigencomponents(spec, g)) {
          CHECK_FALSE(part.is_zero());
          CHECK(eigen_project(TCharacter{mask}, part) == part);
          sum += part;
        }
        CHECK(sum == delta(spec, g));
      }
    }
  }

  TEST_CASE("inversion count") {
    CHECK(inversion_count(0b101, 0b110) == 1 + 0);
    CHECK(inversion_count(0b011, 0b001) == 1);
    CHECK(inversion_count(0, 0b111) == 0);
    for (unsigned I = 0; I < 32; ++I)
      for (unsigned J = 0; J < 32; ++J) CHECK(inversion_count(I, J) == brute_inversions(I, J));
  }

  TEST_CASE("zero coefficients are dropped") {
    const GroupSpec spec{2, 1, 2};
    auto u = delta(spec, make_t(2, 2, 1, 1), ParamScalar::parameter(0));
    u.add_term(make_t(2, 2, 1, 1), -ParamScalar::parameter(0));
    CHECK(u.is_zero());
    CHECK(u.coefficient(make_t(2, 2, 1, 1)).is_zero());
  }
}
