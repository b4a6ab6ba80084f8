#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cherednik/errors.hpp"
#include "cherednik/groups.hpp"
#include "support.hpp"

using namespace cherednik;
using testing_support::random_member;
using testing_support::random_monomial;

namespace {

using Dense = std::vector<std::vector<CycRational>>;

// Leibniz expansion; fine for n <= 4.
CycRational dense_det(const Dense& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CycRational total;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    CycRational term(inversions % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) term *= a[perm[i]][i];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Dense dense_mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<CycRational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

CycRational power(CycRational a, int k) {
  CycRational out(1);
  for (int i = 0; i < k; ++i) out *= a;
  return out;
}

int perm_sign(const MonomialMatrix& g) { return permutation_length(g) % 2 ? -1 : 1; }

// Membership by the determinant: the product P of the nonzero entries satisfies
// P^(m/p) = 1; P = sgn * det for G and, in mu(G), (-1)^[odd] P = det.
bool brute_member(const MonomialMatrix& g, const GroupSpec& spec) {
  CycRational det = dense_det(g.matrix());
  if (spec.flavor == Flavor::complex) det *= CycRational(perm_sign(g));
  return power(det, spec.m / spec.p).is_one();
}

std::set<MonomialMatrix> brute_enumerate(const GroupSpec& spec) {
  std::set<MonomialMatrix> out;
  std::vector<int> perm(spec.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> exps(spec.n, 0);
    while (true) {
      const MonomialMatrix g = MonomialMatrix::from_images(spec.m, perm, exps);
      if (brute_member(g, spec)) out.insert(g);
      int k = 0;
      while (k < spec.n && ++exps[k] == spec.m) exps[k++] = 0;
      if (k == spec.n) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::set<MonomialMatrix> closure(const std::vector<MonomialMatrix>& gens, int n, int m) {
  std::set<MonomialMatrix> seen{MonomialMatrix(n, m)};
  std::vector<MonomialMatrix> frontier{MonomialMatrix(n, m)};
  while (!frontier.empty()) {
    std::vector<MonomialMatrix> next;
    for (const auto& g : frontier)
      for (const auto& s : gens)
        if (seen.insert(g * s).second) next.push_back(g * s);
    frontier = std::move(next);
  }
  return seen;
}

Dense minus_identity(const MonomialMatrix& g) {
  Dense a = g.matrix();
  for (std::size_t i = 0; i < a.size(); ++i) a[i][i] -= CycRational(1);
  return a;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

const std::vector<GroupSpec> kSpecs{{2, 1, 2}, {2, 1, 3}, {2, 2, 3}, {4, 1, 2}, {4, 2, 2}, {4, 2, 3}, {3, 1, 2},
                                    {6, 3, 2}, {2, 2, 2}};

}  // namespace

TEST_SUITE("groups") {
  TEST_CASE("reflection builders") {
    const MonomialMatrix s = make_s(2, 4, 1, 2, 1);
    const auto a = s.matrix();
    // column 0 is s(x1) = i x2
    CHECK(a[1][0] == CycRational::zeta_power(4, 1));
    CHECK(a[0][1] == CycRational::zeta_power(4, 3));
    CHECK((s * s).is_identity());

    const MonomialMatrix sigma = make_sigma(2, 2, 1, 2, 0);
    CHECK(sigma.matrix()[0][1] == CycRational(-1));
    CHECK(sigma.matrix()[1][0] == CycRational(1));
    CHECK(sigma.order() == 4);
    CHECK((sigma * sigma) == make_diagonal(2, {1, 1}));

    const MonomialMatrix t = make_t(3, 4, 2, 1);
    CHECK(t.is_diagonal());
    CHECK(t.matrix()[1][1] == CycRational::zeta_power(4, 1));
    CHECK(t.order() == 4);
    CHECK(t.determinant() == CycRational::zeta_power(4, 1));
  }

  TEST_CASE("membership examples") {
    CHECK(is_member(make_s(3, 2, 1, 2, 1), GroupSpec{2, 2, 3}));
    CHECK_FALSE(is_member(make_t(3, 2, 1, 1), GroupSpec{2, 2, 3}));
    CHECK(is_member(make_t(3, 4, 1, 2), GroupSpec{4, 2, 3}));
    CHECK(is_member(make_sigma(3, 2, 1, 2, 0), GroupSpec{2, 2, 3, Flavor::mystic}));
    CHECK_FALSE(is_member(make_s(3, 2, 1, 2, 0), GroupSpec{2, 2, 3, Flavor::mystic}));
    CHECK_FALSE(is_member(make_s(2, 2, 1, 2, 0), GroupSpec{2, 1, 3}));
  }

  TEST_CASE("sigma is s times a sign on the second coordinate") {
    for (int m : {2, 4, 6})
      for (int k = 0; k < m; ++k) {
        CAPTURE(m);
        CAPTURE(k);
        CHECK(make_sigma(3, m, 1, 3, k) == make_s(3, m, 1, 3, k) * make_t(3, m, 3, m / 2));
        CHECK(make_sigma(3, m, 1, 3, k).matrix() ==
              dense_mul(make_s(3, m, 1, 3, k).matrix(), make_t(3, m, 3, m / 2).matrix()));
      }
  }

  TEST_CASE("enumeration agrees with the determinant oracle") {
    for (const auto& base : kSpecs)
      for (Flavor f : {Flavor::complex, Flavor::mystic}) {
        if (f == Flavor::mystic && base.m % 2) continue;
        const GroupSpec spec = base.with_flavor(f);
        CAPTURE(spec.to_string());
        const auto listed = enumerate(spec);
        const std::set<MonomialMatrix> as_set(listed.begin(), listed.end());
        CHECK(as_set.size() == listed.size());
        CHECK(as_set == brute_enumerate(spec));
        long long mn = 1;
        for (int i = 0; i < spec.n; ++i) mn *= spec.m;
        CHECK(static_cast<long long>(listed.size()) == factorial(spec.n) * mn / spec.p);
        CHECK(spec.order() == static_cast<long long>(listed.size()));
      }
  }

  TEST_CASE("generators close up to the whole group") {
    for (const auto& base : kSpecs)
      for (Flavor f : {Flavor::complex, Flavor::mystic}) {
        if (f == Flavor::mystic && base.m % 2) continue;
        const GroupSpec spec = base.with_flavor(f);
        CAPTURE(spec.to_string());
        const auto listed = enumerate(spec);
        CHECK(closure(group_generators(spec), spec.n, spec.m) ==
              std::set<MonomialMatrix>(listed.begin(), listed.end()));
        // mystic reflections and the torus generate mu(G) too
        if (f == Flavor::mystic) {
          auto gens = mystic_reflections(spec);
          for (const auto& t : enumerate_torus(spec.n, spec.m, spec.p)) gens.push_back(t);
          CHECK(closure(gens, spec.n, spec.m) == std::set<MonomialMatrix>(listed.begin(), listed.end()));
        }
      }
  }

  TEST_CASE("mu(G) = G as sets exactly when m/p is even") {
    for (const auto& spec : kSpecs) {
      if (spec.m % 2) continue;
      CAPTURE(spec.to_string());
      const auto g = enumerate(spec), mg = enumerate(spec.with_flavor(Flavor::mystic));
      const bool equal = std::set<MonomialMatrix>(g.begin(), g.end()) == std::set<MonomialMatrix>(mg.begin(), mg.end());
      CHECK(equal == ((spec.m / spec.p) % 2 == 0));
      CHECK(g.size() == mg.size());
    }
  }

  TEST_CASE("reflections are the elements with rank(g - 1) = 1") {
    for (const auto& spec : kSpecs) {
      CAPTURE(spec.to_string());
      std::set<MonomialMatrix> brute;
      for (const auto& g : enumerate(spec))
        if (matrix_rank(minus_identity(g)) == 1) brute.insert(g);
      const auto refl = reflections(spec);
      CHECK(std::set<MonomialMatrix>(refl.begin(), refl.end()) == brute);
      CHECK(static_cast<int>(refl.size()) ==
            spec.m * spec.n * (spec.n - 1) / 2 + spec.n * (spec.m / spec.p - 1));
      if (spec.m % 2 == 0) {
        const auto mystic = mystic_reflections(spec.with_flavor(Flavor::mystic));
        CHECK(mystic.size() == refl.size());
        for (const auto& s : mystic) {
          CHECK(is_member(s, spec.with_flavor(Flavor::mystic)));
          ReflectionData rd;
          if (as_sigma_reflection(s, rd)) CHECK(s.order() == 4);
        }
      }
    }
  }

  TEST_CASE("reflection recognisers") {
    ReflectionData rd;
    REQUIRE(as_s_reflection(make_s(3, 4, 3, 1, 1), rd));
    CHECK(rd.i == 1);
    CHECK(rd.j == 3);
    CHECK(rd.k == 3);
    CHECK_FALSE(as_s_reflection(make_sigma(3, 4, 1, 3, 1), rd));
    REQUIRE(as_sigma_reflection(make_sigma(3, 4, 1, 3, 1), rd));
    CHECK(rd.k == 1);
    REQUIRE(as_t_reflection(make_t(3, 4, 2, 3), rd));
    CHECK(rd.i == 2);
    CHECK(rd.k == 3);
    CHECK_FALSE(as_t_reflection(MonomialMatrix(3, 4), rd));
  }

  TEST_CASE("characteristic polynomial against det(x - g) at integer points") {
    Rng rng(21);
    for (int trial = 0; trial < 60; ++trial) {
      const int m = trial % 3 == 0 ? 2 : (trial % 3 == 1 ? 4 : 6);
      const int n = 2 + trial % 3;
      const MonomialMatrix g = random_monomial(rng, n, m);
      const auto poly = characteristic_polynomial(g);
      REQUIRE(static_cast<int>(poly.size()) == n + 1);
      CHECK(poly.back().is_one());
      for (int x = -2; x <= 2; ++x) {
        Dense a = g.matrix();
        for (auto& row : a)
          for (auto& c : row) c = -c;
        for (int i = 0; i < n; ++i) a[i][i] += CycRational(x);
        CycRational value;
        for (int k = n; k >= 0; --k) value = value * CycRational(x) + poly[k];
        CHECK(value == dense_det(a));
      }
    }
  }

  TEST_CASE("conjugacy classes partition the group") {
    for (const auto& spec : kSpecs) {
      CAPTURE(spec.to_string());
      const auto elems = enumerate(spec);
      std::set<MonomialMatrix> covered;
      std::size_t classes = 0;
      for (const auto& g : elems) {
        if (covered.count(g)) continue;
        ++classes;
        const auto cls = conjugacy_class(g, spec);
        std::set<MonomialMatrix> brute;
        for (const auto& h : elems) brute.insert(g.conjugated_by(h));
        CHECK(std::set<MonomialMatrix>(cls.begin(), cls.end()) == brute);
        CHECK(elems.size() % cls.size() == 0);
        covered.insert(cls.begin(), cls.end());
      }
      CHECK(covered.size() == elems.size());
      CHECK(classes >= 1);
    }
    // In G(2,2,2) the two reflections s_12 and s_12^(-1) are no longer conjugate.
    CHECK(conjugacy_class(make_s(2, 2, 1, 2, 0), GroupSpec{2, 2, 2}).size() == 1);
    CHECK(conjugacy_class(make_s(2, 2, 1, 2, 0), GroupSpec{2, 1, 2}).size() == 2);
  }

  TEST_CASE("property: composition matches matrix multiplication") {
    Rng rng(22);
    for (int trial = 0; trial < 500; ++trial) {
      const int m = 1 + trial % 6, n = 1 + trial % 4;
      const MonomialMatrix g = random_monomial(rng, n, m), h = random_monomial(rng, n, m);
      CHECK((g * h).matrix() == dense_mul(g.matrix(), h.matrix()));
      CHECK((g * g.inverse()).is_identity());
      CHECK((g * h).determinant() == g.determinant() * h.determinant());
      CHECK(g.determinant() == dense_det(g.matrix()));
      CHECK(g.conjugated_by(h) == h * g * h.inverse());
    }
  }

  TEST_CASE("property: canonical text round trips") {
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
      const MonomialMatrix g = random_monomial(rng, 1 + trial % 5, 1 + trial % 8);
      CHECK(MonomialMatrix::parse_canonical(g.canonical()) == g);
    }
    CHECK(make_s(3, 4, 1, 2, 1).canonical() == "[p:2,1,3 e:1,3,0 m:4]");
    CHECK_THROWS_AS(MonomialMatrix::parse_canonical("[p:1 e:0]"), ParseError);
    CHECK_THROWS_AS(MonomialMatrix::parse_canonical("p:1 e:0 m:2"), ParseError);
  }

  TEST_CASE("property: reduced words") {
    Rng rng(24);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + trial % 5;
      const MonomialMatrix g = random_monomial(rng, n, 2);
      const auto pick = [&](std::size_t k) { return static_cast<std::size_t>(rng.below(k)); };
      const auto word = trial % 2 ? reduced_word(g, pick) : reduced_word(g);
      CHECK(static_cast<int>(word.size()) == permutation_length(g));
      MonomialMatrix prod(n, 2);
      for (int i : word) prod = prod * simple_s(n, 2, i);
      CHECK(prod == permutation_part(g));
    }
    CHECK(reduced_word(MonomialMatrix(3, 2)).empty());
  }

  TEST_CASE("torus") {
    for (const auto& spec : kSpecs) {
      const auto torus = enumerate_torus(spec.n, spec.m, spec.p);
      long long expected = 1;
      for (int i = 0; i < spec.n; ++i) expected *= spec.m;
      CHECK(static_cast<long long>(torus.size()) == expected / spec.p);
      for (const auto& t : torus) CHECK(in_torus(t, spec.p));
      const auto gens = torus_generators(spec.n, spec.m, spec.p);
      CHECK(closure(gens, spec.n, spec.m) == std::set<MonomialMatrix>(torus.begin(), torus.end()));
    }
  }

  TEST_CASE("group element text") {
    CHECK(format_group_element(MonomialMatrix(3, 2)) == "1");
    CHECK(format_group_element(make_s(3, 4, 1, 2, 1)) == "s(1,2;1)");
    CHECK(format_group_element(make_t(3, 4, 2, 3)) == "t(2;3)");
    CHECK(format_group_element(make_sigma(3, 4, 1, 2, 1), true) == "sg(1,2;1)");
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(make_s(3, 2, 1, 1, 0), IndexOutOfRange);
    CHECK_THROWS_AS(make_s(3, 2, 0, 2, 0), IndexOutOfRange);
    CHECK_THROWS_AS(make_t(3, 2, 4, 1), IndexOutOfRange);
    CHECK_THROWS_AS(make_sigma(3, 3, 1, 2, 0), InvalidSpec);
    CHECK_THROWS_AS((GroupSpec{4, 3, 2}.validate()), InvalidSpec);
    CHECK_THROWS_AS((GroupSpec{3, 1, 2, Flavor::mystic}.validate()), InvalidSpec);
    CHECK_THROWS_AS((GroupSpec{2, 1, kMaxRank + 1}.validate()), Error);
    CHECK_THROWS_AS(enumerate(GroupSpec{4, 1, 6}, 1000), SizeLimitExceeded);
    CHECK((GroupSpec{2, 2, 2}.algebra_admissible()) == false);
    CHECK((GroupSpec{4, 1, 2}.algebra_admissible()));
  }

  TEST_CASE("property: random members stay in the group under products") {
    Rng rng(25);
    for (const auto& spec : {GroupSpec{4, 2, 3}, GroupSpec{6, 3, 3}, GroupSpec{4, 2, 3, Flavor::mystic}}) {
      for (int trial = 0; trial < 100; ++trial) {
        const MonomialMatrix g = random_member(rng, spec), h = random_member(rng, spec);
        CHECK(is_member(g * h, spec));
        CHECK(is_member(g.inverse(), spec));
        CHECK(brute_member(g, spec));
      }
    }
  }
}
