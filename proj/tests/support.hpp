#pragma once

// Helpers and hand-rolled generators shared by the unit and property tests.

#include <string>
#include <vector>

#include "cherednik/expr.hpp"
#include "cherednik/groups.hpp"
#include "cherednik/pbw.hpp"
#include "cherednik/rng.hpp"
#include "cherednik/scalars.hpp"

namespace testing_support {

using namespace cherednik;

inline Rational small_rational(Rng& rng) {
  Rational q(rng.range(-6, 6), rng.range(1, 4));
  q.canonicalize();
  return q;
}

inline CycRational random_cyc(Rng& rng, int m) {
  std::vector<Rational> coords(static_cast<std::size_t>(euler_phi(m)));
  for (auto& c : coords) c = rng.coin() ? small_rational(rng) : Rational(0);
  return CycRational(m, coords);
}

inline CycRational random_nonzero_cyc(Rng& rng, int m) {
  CycRational a;
  do {
    a = random_cyc(rng, m);
  } while (a.is_zero());
  return a;
}

// Up to three monomials in c1 .. c[count-1] of degree <= 2.
inline ParamScalar random_param_scalar(Rng& rng, int m, int count) {
  ParamScalar s;
  const int terms = rng.range(0, 3);
  for (int k = 0; k < terms; ++k) {
    ParamScalar mono(random_cyc(rng, m));
    const int degree = rng.range(0, 2);
    for (int d = 0; d < degree; ++d) mono *= ParamScalar::parameter(rng.range(0, count - 1));
    s += mono;
  }
  return s;
}

inline MonomialMatrix random_monomial(Rng& rng, int n, int m) {
  std::vector<int> perm(n), exps(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm);
  for (auto& e : exps) e = rng.range(0, m - 1);
  return MonomialMatrix::from_images(m, perm, exps);
}

inline MonomialMatrix random_member(Rng& rng, const GroupSpec& spec) {
  MonomialMatrix g;
  do {
    g = random_monomial(rng, spec.n, spec.m);
  } while (!is_member(g, spec));
  return g;
}

// A random word of generators and group letters, for the rewriting tests.
inline Word random_word(Rng& rng, const AlgebraPtr& alg, int letters) {
  Word w;
  for (int k = 0; k < letters; ++k) {
    switch (rng.range(0, 2)) {
      case 0:
        w.push_back(Letter::X(rng.range(1, alg->n())));
        break;
      case 1:
        w.push_back(Letter::Y(rng.range(1, alg->n())));
        break;
      default:
        w.push_back(Letter::G(rng.pick(alg->elements())));
    }
  }
  return w;
}

inline PBWElement parse(const AlgebraPtr& alg, const std::string& text) { return parse_expression(alg, text); }

inline AlgebraPtr rational(int m, int p, int n) { return Algebra::create(GroupSpec{m, p, n}, AlgebraKind::rational); }
inline AlgebraPtr braided(int m, int p, int n) { return Algebra::create(GroupSpec{m, p, n}, AlgebraKind::braided); }

}  // namespace testing_support
