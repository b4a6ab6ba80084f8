#include "cherednik/isomorphism.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "cherednik/errors.hpp"
#include "cherednik/linalg.hpp"
#include "cherednik/parallel.hpp"
#include "cherednik/rng.hpp"

namespace cherednik {

namespace {

ReportParams spec_params(const GroupSpec& spec) {
  return {{"m", std::to_string(spec.m)}, {"p", std::to_string(spec.p)}, {"n", std::to_string(spec.n)}};
}

GroupSpec full_torus_spec(int m, int n) { return GroupSpec{m, 1, n}; }

GroupAlgebraElement retag(const GroupAlgebraElement& u, const GroupSpec& spec) {
  GroupAlgebraElement out(spec);
  for (const auto& [g, c] : u.terms()) out.add_term(g, c);
  return out;
}

std::vector<MonomialMatrix> permutations(int n, int m) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<MonomialMatrix> out;
  do {
    out.push_back(make_permutation(m, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::string word_string(const std::vector<int>& word) {
  if (word.empty()) return "()";
  std::string s;
  for (int i : word) s += (s.empty() ? "" : ",") + std::to_string(i);
  return s;
}

// Records a failure with both sides unless a == b.
template <class T>
bool same(CheckReport& r, const std::string& label, const T& a, const T& b) {
  if (a == b) return true;
  r.fail(label + ": " + a.to_string() + " != " + b.to_string());
  return false;
}

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

using Dense = std::vector<std::vector<CycRational>>;

Dense dense_product(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense out(n, std::vector<CycRational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

bool dense_equal(const Dense& a, const Dense& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  return true;
}

std::vector<CycRational> poly_product(const std::vector<CycRational>& a, const std::vector<CycRational>& b) {
  std::vector<CycRational> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::string poly_string(const std::vector<CycRational>& p) {
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? ", " : "") + p[k].to_string();
  return "[" + s + "]";
}

CycRational constant_of(const ParamScalar& c) {
  if (!c.is_constant()) throw InvalidSpec("expected a parameter-free coefficient");
  return c.constant_term();
}

}  // namespace

// --- PhiContext --------------------------------------------------------------

PhiContext::PhiContext(GroupSpec base, long long size_limit) {
  base.validate();
  if (base.m % 2 != 0) throw InvalidSpec("phi needs m even");
  if (!base.algebra_admissible()) throw InvalidSpec("phi needs n >= 3, or n = 2 with p odd");
  target_ = Algebra::create(base.with_flavor(Flavor::complex), AlgebraKind::rational, 1, size_limit);
  source_ = Algebra::create(base.with_flavor(Flavor::mystic), AlgebraKind::braided, -1, size_limit);
}

const PBWElement& PhiContext::phi_group(const MonomialMatrix& g) const {
  {
    std::shared_lock lock(mutex_);
    auto it = group_cache_.find(g);
    if (it != group_cache_.end()) return it->second;
  }
  PBWElement value = phi_group(g, WordChooser{});
  std::unique_lock lock(mutex_);
  return group_cache_.try_emplace(g, std::move(value)).first->second;
}

PBWElement PhiContext::phi_group(const MonomialMatrix& g, const WordChooser& chooser) const {
  if (!source_->contains(g)) throw MembershipError(g.canonical() + " is not in " + mystic_spec().to_string());
  const int n = spec().n, m = spec().m;
  const std::vector<int> word = reduced_word(g, chooser);
  MonomialMatrix sigma_w(n, m);
  for (int i : word) sigma_w = sigma_w * simple_sigma(n, m, i);
  const MonomialMatrix t_corr = sigma_w.inverse() * g;
  if (!t_corr.is_diagonal() || !in_torus(t_corr, spec().p))
    throw std::logic_error("sigma_w^-1 g is not in T(m,p,n) for " + g.canonical());
  PBWElement out = PBWElement::scalar(target_, ParamScalar(1));
  for (int i : word) out = star(out, PBWElement::group(target_, simple_sbar(n, m, i)));
  return star(out, PBWElement::group(target_, t_corr));
}

PBWElement PhiContext::phi_group_algebra(const GroupAlgebraElement& u) const {
  PBWElement out(target_);
  for (const auto& [g, c] : u.terms()) out += phi_group(g) * c;
  return out;
}

PBWElement PhiContext::phi(const PBWElement& u) const {
  if (u.algebra() && u.algebra() != source_) {
    if (u.algebra()->kind() != AlgebraKind::braided || !(u.algebra()->group() == source_->group()))
      throw KindMismatch("phi expects an element of " + source_->name());
  }
  const MonomialMatrix id(spec().n, spec().m);
  PBWElement out(target_);
  for (const auto& [t, c] : u.terms()) {
    PBWElement image = phi_group(t.g);
    if (t.x_degree() > 0) image = star(PBWElement::monomial(target_, t.x, id, Degrees{}), image);
    if (t.y_degree() > 0) image = star(image, PBWElement::monomial(target_, Degrees{}, id, t.y));
    out += image * c;
  }
  return out;
}

// --- theta_w -----------------------------------------------------------------

std::vector<int> theta_word(const MonomialMatrix& w) {
  std::vector<int> word = reduced_word(w);
  std::reverse(word.begin(), word.end());
  return word;
}

GroupAlgebraElement eta(int i, const MonomialMatrix& w) {
  const int n = w.rank(), m = w.conductor();
  const GroupSpec spec = full_torus_spec(m, n);
  const MonomialMatrix winv = w.inverse();
  const MonomialMatrix ti = make_t(n, m, i, m / 2);
  const MonomialMatrix r = ti * (winv * ti * w);
  const MonomialMatrix rp = winv * make_r(n, m, i, i + 1) * w;
  const CycRational half(Rational(1, 2));
  GroupAlgebraElement out(spec);
  out.add_term(MonomialMatrix(n, m), half);
  out.add_term(r, -half);
  out.add_term(rp, half);
  out.add_term(r * rp, half);
  return out;
}

GroupAlgebraElement theta(const MonomialMatrix& w_in) {
  const MonomialMatrix w = permutation_part(w_in);
  const int n = w.rank(), m = w.conductor();
  const std::vector<int> word = theta_word(w);
  MonomialMatrix sigma_w(n, m);
  for (auto it = word.rbegin(); it != word.rend(); ++it) sigma_w = sigma_w * simple_sigma(n, m, *it);
  const MonomialMatrix t_w = w.inverse() * sigma_w;
  const GroupSpec spec = full_torus_spec(m, n);
  GroupAlgebraElement out = GroupAlgebraElement::delta(spec, t_w);
  MonomialMatrix prefix(n, m);
  for (int i : word) {
    out = out * eta(i, prefix);
    prefix = simple_s(n, m, i) * prefix;
  }
  return out;
}

// --- group checks ------------------------------------------------------------

CheckReport verify_group_order(const GroupSpec& spec, long long size_limit) {
  return run_check("group_order", spec_params(spec), [&](CheckReport& r) {
    spec.validate();
    long long power = 1;
    for (int k = 0; k < spec.n; ++k) power *= spec.m;
    const long long expected = factorial(spec.n) * power / spec.p;
    r.details["expected"] = std::to_string(expected);
    const auto G = enumerate(spec.with_flavor(Flavor::complex), size_limit);
    r.details["G"] = std::to_string(G.size());
    r.expect(static_cast<long long>(G.size()) == expected, "|G| = " + std::to_string(G.size()));
    if (spec.m % 2 == 0) {
      const auto muG = enumerate(spec.with_flavor(Flavor::mystic), size_limit);
      r.details["muG"] = std::to_string(muG.size());
      r.expect(static_cast<long long>(muG.size()) == expected, "|mu(G)| = " + std::to_string(muG.size()));
    }
  });
}

std::vector<CheckReport> verify_groups(const GroupSpec& spec, long long size_limit, std::uint64_t seed) {
  spec.validate();
  const GroupSpec G = spec.with_flavor(Flavor::complex);
  const bool even = spec.m % 2 == 0;
  const ReportParams params = spec_params(spec);
  std::vector<CheckReport> out;
  out.push_back(verify_group_order(spec, size_limit));

  out.push_back(run_check("composition", params, [&](CheckReport& r) {
    std::vector<MonomialMatrix> elems = enumerate(G, size_limit);
    if (even) {
      const auto mu = enumerate(spec.with_flavor(Flavor::mystic), size_limit);
      elems.insert(elems.end(), mu.begin(), mu.end());
    }
    Rng rng(seed);
    const MonomialMatrix id(spec.n, spec.m);
    for (int k = 0; k < 500; ++k) {
      const MonomialMatrix& g = rng.pick(elems);
      const MonomialMatrix& h = rng.pick(elems);
      if (!dense_equal((g * h).matrix(), dense_product(g.matrix(), h.matrix())))
        r.fail(g.canonical() + " * " + h.canonical() + " disagrees with the matrix product");
      if (!(g * g.inverse() == id) || !(g.inverse() * g == id)) r.fail(g.canonical() + " inverse");
      if (!((g * h).determinant() == g.determinant() * h.determinant()))
        r.fail("det of " + g.canonical() + " * " + h.canonical());
    }
  }));

  out.push_back(run_check("reflections", params, [&](CheckReport& r) {
    const auto S = reflections(G);
    const long long pairs = spec.n * (spec.n - 1) / 2;
    const long long expected = pairs * spec.m + spec.n * (spec.m / spec.p - 1);
    r.details["count"] = std::to_string(S.size());
    r.expect(static_cast<long long>(S.size()) == expected, "|S| = " + std::to_string(S.size()));
    const MonomialMatrix id(spec.n, spec.m);
    const Dense idm = id.matrix();
    for (const auto& s : S) {
      r.expect(is_member(s, G), s.canonical() + " not in " + G.to_string());
      Dense diff = s.matrix();
      for (int i = 0; i < spec.n; ++i) diff[i][i] -= idm[i][i];
      r.expect(matrix_rank(diff) == 1, "rank(s - 1) != 1 for " + s.canonical());
      if (!s.is_diagonal()) r.expect(s * s == id, s.canonical() + " is not an involution");
    }
    if (even) {
      const GroupSpec mu = spec.with_flavor(Flavor::mystic);
      const auto Sm = mystic_reflections(mu);
      r.details["mystic_count"] = std::to_string(Sm.size());
      r.expect(static_cast<long long>(Sm.size()) == expected, "|mystic S| = " + std::to_string(Sm.size()));
      // (x - 1)^(n-2) (x^2 + 1)
      std::vector<CycRational> expected_poly{CycRational(1), CycRational(0), CycRational(1)};
      for (int k = 0; k < spec.n - 2; ++k) expected_poly = poly_product(expected_poly, {CycRational(-1), CycRational(1)});
      for (const auto& s : Sm) {
        r.expect(is_member(s, mu), s.canonical() + " not in " + mu.to_string());
        if (s.is_diagonal()) continue;
        r.expect(s.order() == 4, s.canonical() + " has order " + std::to_string(s.order()));
        const auto cp = characteristic_polynomial(s);
        r.expect(cp == expected_poly, "charpoly of " + s.canonical() + " = " + poly_string(cp));
      }
    }
  }));

  out.push_back(run_check("conjugacy", params, [&](CheckReport& r) {
    const auto S = reflections(G);
    std::vector<MonomialMatrix> pair_type, diag_type;
    for (const auto& s : S) (s.is_diagonal() ? diag_type : pair_type).push_back(s);
    if (spec.n >= 3 || spec.p % 2 == 1) {
      if (!pair_type.empty()) {
        const auto cls = conjugacy_class(pair_type.front(), G, size_limit);
        const std::set<MonomialMatrix> got(cls.begin(), cls.end()), want(pair_type.begin(), pair_type.end());
        r.expect(got == want, "the s_ij^(eps) do not form one class");
      }
    } else {
      r.details["pairs"] = "n = 2 with p even: the s_12^(eps) split";
    }
    for (int k = 1; k < spec.m; ++k) {
      const MonomialMatrix t1 = make_t(spec.n, spec.m, 1, k);
      if (!is_member(t1, G)) continue;
      const auto cls = conjugacy_class(t1, G, size_limit);
      std::set<MonomialMatrix> want;
      for (int i = 1; i <= spec.n; ++i) want.insert(make_t(spec.n, spec.m, i, k));
      r.expect(std::set<MonomialMatrix>(cls.begin(), cls.end()) == want,
               "class of " + t1.canonical() + " is not {t_i^(zeta^" + std::to_string(k) + ")}");
    }
    if (even && spec.n >= 3) {
      const GroupSpec mu = spec.with_flavor(Flavor::mystic);
      std::vector<MonomialMatrix> sig;
      for (const auto& s : mystic_reflections(mu))
        if (!s.is_diagonal()) sig.push_back(s);
      const auto cls = conjugacy_class(sig.front(), mu, size_limit);
      r.expect(std::set<MonomialMatrix>(cls.begin(), cls.end()) == std::set<MonomialMatrix>(sig.begin(), sig.end()),
               "the sigma_ij^(eps) do not form one class");
    }
  }));

  if (even) {
    out.push_back(run_check("mystic_partner", params, [&](CheckReport& r) {
      const int n = spec.n, m = spec.m;
      for (int i = 1; i < n; ++i)
        r.expect(simple_sigma(n, m, i) == simple_s(n, m, i) * make_t(n, m, i + 1, m / 2),
                 "sigma_i != s_i t_{i+1}^(-1) for i = " + std::to_string(i));
      const auto a = enumerate(G, size_limit);
      const auto b = enumerate(spec.with_flavor(Flavor::mystic), size_limit);
      r.expect(a.size() == b.size(), "|mu(G)| != |G|");
      const std::set<MonomialMatrix> sa(a.begin(), a.end()), sb(b.begin(), b.end());
      if ((spec.m / spec.p) % 2 == 0) {
        r.expect(sa == sb, "mu(G) != G as sets although m/p is even");
        r.details["sets"] = "equal";
      } else {
        r.details["sets"] = sa == sb ? "equal" : "different";
      }
    }));
  }
  return out;
}

CheckReport verify_presentation(const GroupSpec& spec, long long size_limit) {
  return run_check("presentation", spec_params(spec), [&](CheckReport& r) {
    spec.validate();
    if (spec.m % 2 != 0) throw InvalidSpec("mu(G) needs m even");
    const int n = spec.n, m = spec.m;
    const GroupSpec mu = spec.with_flavor(Flavor::mystic);
    // (i)
    for (int i = 1; i < n; ++i) {
      const MonomialMatrix s = simple_sigma(n, m, i);
      r.expect(s * s == make_r(n, m, i, i + 1), "sigma_" + std::to_string(i) + "^2");
    }
    // (ii)
    for (int i = 1; i < n; ++i) {
      const MonomialMatrix a = simple_sigma(n, m, i);
      for (int j = i + 2; j < n; ++j) {
        const MonomialMatrix b = simple_sigma(n, m, j);
        r.expect(a * b == b * a, "sigma_" + std::to_string(i) + " sigma_" + std::to_string(j));
      }
      if (i + 1 < n) {
        const MonomialMatrix b = simple_sigma(n, m, i + 1);
        r.expect(a * b * a == b * a * b, "braid at " + std::to_string(i));
      }
    }
    // (iii)
    const auto torus = enumerate_torus(n, m, spec.p);
    for (int i = 1; i < n; ++i) {
      const MonomialMatrix s = simple_sigma(n, m, i), si = simple_s(n, m, i);
      for (const auto& t : torus)
        r.expect(s * t * s.inverse() == si * t * si, "sigma_" + std::to_string(i) + " " + t.canonical());
    }
    // closure of the generators
    std::vector<MonomialMatrix> gens;
    for (int i = 1; i < n; ++i) gens.push_back(simple_sigma(n, m, i));
    for (const auto& t : torus_generators(n, m, spec.p)) gens.push_back(t);
    std::set<MonomialMatrix> seen{MonomialMatrix(n, m)};
    std::deque<MonomialMatrix> queue{MonomialMatrix(n, m)};
    while (!queue.empty()) {
      const MonomialMatrix g = queue.front();
      queue.pop_front();
      for (const auto& s : gens) {
        const MonomialMatrix h = g * s;
        if (seen.insert(h).second) {
          if (static_cast<long long>(seen.size()) > size_limit) throw SizeLimitExceeded("closure above the size limit");
          queue.push_back(h);
        }
      }
    }
    const auto elems = enumerate(mu, size_limit);
    r.details["order"] = std::to_string(seen.size());
    r.expect(seen == std::set<MonomialMatrix>(elems.begin(), elems.end()), "closure differs from mu(G)");
    r.expect(static_cast<long long>(seen.size()) == spec.order(), "order " + std::to_string(seen.size()));
  });
}

// --- phi checks --------------------------------------------------------------

CheckReport verify_sigma_table(const PhiContext& ctx) {
  return run_check("sigma_table", spec_params(ctx.spec()), [&](CheckReport& r) {
    const int n = ctx.spec().n, m = ctx.spec().m;
    int count = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        for (int k = 0; k < m; ++k) {
          const MonomialMatrix sigma = make_sigma(n, m, i, j, k);
          const MonomialMatrix want = i < j ? make_s(n, m, i, j, k + m / 2) : make_s(n, m, i, j, k);
          same(r, "phi(" + format_group_element(sigma, true) + ")", ctx.phi_group(sigma),
               PBWElement::group(ctx.target(), want));
          ++count;
        }
      }
    r.details["entries"] = std::to_string(count);
  });
}

CheckReport verify_theta(const PhiContext& ctx) {
  return run_check("theta", spec_params(ctx.spec()), [&](CheckReport& r) {
    const int n = ctx.spec().n, m = ctx.spec().m;
    const GroupSpec full = full_torus_spec(m, n);
    const MonomialMatrix id(n, m);
    const auto torus = enumerate_torus(n, m, ctx.spec().p);
    for (const auto& w : permutations(n, m)) {
      const std::string wname = format_group_element(w);
      const GroupAlgebraElement th = theta(w);
      r.details["word " + wname] = word_string(theta_word(w));
      same(r, "theta_" + wname + "^2", th * th, GroupAlgebraElement::delta(full, id));
      for (const auto& [g, c] : th.terms()) {
        bool ok = g.is_diagonal();
        for (int j = 0; j < n; ++j) ok = ok && (g.exponent(j) == 0 || 2 * g.exponent(j) == m);
        r.expect(ok, "theta_" + wname + " has " + g.canonical() + " outside T(2,1,n)");
      }
      const GroupAlgebraElement wth = GroupAlgebraElement::delta(full, w) * th;
      for (const auto& t : torus) {
        const GroupAlgebraElement u = retag(wth * GroupAlgebraElement::delta(full, t), ctx.mystic_spec());
        same(r, "phi(w theta_w t) for w = " + wname + ", t = " + t.canonical(), ctx.phi_group_algebra(u),
             PBWElement::group(ctx.target(), w * t));
      }
      for (int i = 1; i < n; ++i) {
        const PBWElement lhs = star(PBWElement::group(ctx.target(), simple_sbar(n, m, i)),
                                    PBWElement::group(ctx.target(), w));
        const GroupAlgebraElement rhs =
            GroupAlgebraElement::delta(full, simple_s(n, m, i) * w) * eta(i, w);
        same(r, "sbar_" + std::to_string(i) + " * " + wname, lhs,
             PBWElement::from_group_algebra(ctx.target(), retag(rhs, ctx.spec())));
      }
    }
  });
}

CheckReport verify_phi_relations(const PhiContext& ctx) {
  return run_check("phi_relations", spec_params(ctx.spec()), [&](CheckReport& r) {
    const AlgebraPtr& src = ctx.source();
    const AlgebraPtr& tgt = ctx.target();
    const int n = ctx.spec().n, m = ctx.spec().m;
    std::vector<PBWElement> X, Y;
    for (int i = 1; i <= n; ++i) {
      X.push_back(ctx.phi(PBWElement::x(src, i)));
      Y.push_back(ctx.phi(PBWElement::y(src, i)));
      same(r, "phi(x" + std::to_string(i) + ")", X.back(), PBWElement::x(tgt, i));
      same(r, "phi(y" + std::to_string(i) + ")", Y.back(), PBWElement::y(tgt, i));
    }
    int count = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const PBWElement lhs = star(Y[i - 1], X[j - 1]) - star(X[j - 1], Y[i - 1]) * ParamScalar(src->yx_sign(i, j));
        same(r, "y" + std::to_string(i) + " x" + std::to_string(j), lhs, ctx.phi_group_algebra(src->yx_rhs(i, j)));
        ++count;
        if (i < j) {
          const ParamScalar sgn(src->exchange_sign());
          same(r, "x" + std::to_string(i) + " x" + std::to_string(j), star(X[i - 1], X[j - 1]),
               star(X[j - 1], X[i - 1]) * sgn);
          same(r, "y" + std::to_string(i) + " y" + std::to_string(j), star(Y[i - 1], Y[j - 1]),
               star(Y[j - 1], Y[i - 1]) * sgn);
          count += 2;
        }
      }
    const auto gens = group_generators(ctx.mystic_spec());
    for (const auto& g : gens) {
      const PBWElement& pg = ctx.phi_group(g);
      for (int i = 0; i < n; ++i) {
        const ParamScalar zx(CycRational::zeta_power(m, g.exponent(i)));
        const ParamScalar zy(CycRational::zeta_power(m, -g.exponent(i)));
        same(r, format_group_element(g, true) + " x" + std::to_string(i + 1), star(pg, X[i]),
             star(X[g.image(i)], pg) * zx);
        same(r, format_group_element(g, true) + " y" + std::to_string(i + 1), star(pg, Y[i]),
             star(Y[g.image(i)], pg) * zy);
        count += 2;
      }
    }
    // multiplicativity on C mu(G), generator by element
    const auto& elems = src->elements();
    std::vector<std::optional<std::string>> bad(gens.size() * elems.size());
    parallel_for(bad.size(), [&](std::size_t k) {
      const MonomialMatrix& g = gens[k / elems.size()];
      const MonomialMatrix& h = elems[k % elems.size()];
      if (!(star(ctx.phi_group(g), ctx.phi_group(h)) == ctx.phi_group(g * h)))
        bad[k] = "phi(" + format_group_element(g, true) + ") * phi(" + h.canonical() + ") != phi(product)";
    });
    for (const auto& b : bad)
      if (b) r.fail(*b);
    count += static_cast<int>(bad.size());
    r.details["identities"] = std::to_string(count);
  });
}

CheckReport verify_phi_homomorphism(const PhiContext& ctx, const IsoConfig& cfg) {
  ReportParams params = spec_params(ctx.spec());
  params["samples"] = std::to_string(cfg.samples);
  params["max_degree"] = std::to_string(cfg.max_degree);
  params["seed"] = std::to_string(cfg.seed);
  return run_check("phi_homomorphism", params, [&](CheckReport& r) {
    const AlgebraPtr& src = ctx.source();
    std::vector<std::pair<PBWElement, PBWElement>> pairs;
    const auto gens = algebra_generators(src);
    for (const auto& a : gens)
      for (const auto& b : gens) pairs.emplace_back(a.second, b.second);
    Rng rng(cfg.seed);
    const RandomElementOptions opts{cfg.max_degree, 3};
    for (int k = 0; k < cfg.samples; ++k) {
      PBWElement a = random_element(src, rng, opts);
      PBWElement b = random_element(src, rng, opts);
      pairs.emplace_back(std::move(a), std::move(b));
    }
    std::vector<std::optional<std::string>> bad(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t k) {
      const auto& [a, b] = pairs[k];
      const PBWElement lhs = ctx.phi(a * b), rhs = star(ctx.phi(a), ctx.phi(b));
      if (!(lhs == rhs))
        bad[k] = "u = " + a.to_string() + " ; v = " + b.to_string() + " ; phi(uv) = " + lhs.to_string() +
                 " ; phi(u)*phi(v) = " + rhs.to_string();
    });
    for (const auto& b : bad)
      if (b) r.fail(*b);
    r.details["pairs"] = std::to_string(pairs.size());
  });
}

CheckReport verify_phi_presentation(const PhiContext& ctx) {
  return run_check("phi_presentation", spec_params(ctx.spec()), [&](CheckReport& r) {
    const AlgebraPtr& tgt = ctx.target();
    const int n = ctx.spec().n, m = ctx.spec().m;
    auto ps = [&](int i) { return ctx.phi_group(simple_sigma(n, m, i)); };
    for (int i = 1; i < n; ++i) {
      same(r, "(i) sigma_" + std::to_string(i), star(ps(i), ps(i)), PBWElement::group(tgt, make_r(n, m, i, i + 1)));
      for (int j = i + 2; j < n; ++j)
        same(r, "(ii) sigma_" + std::to_string(i) + " sigma_" + std::to_string(j), star(ps(i), ps(j)),
             star(ps(j), ps(i)));
      if (i + 1 < n)
        same(r, "(ii) braid " + std::to_string(i), star(star(ps(i), ps(i + 1)), ps(i)),
             star(star(ps(i + 1), ps(i)), ps(i + 1)));
      const PBWElement& inv = ctx.phi_group(simple_sigma(n, m, i).inverse());
      const MonomialMatrix si = simple_s(n, m, i);
      for (const auto& t : enumerate_torus(n, m, ctx.spec().p))
        same(r, "(iii) sigma_" + std::to_string(i) + " " + t.canonical(),
             star(star(ps(i), PBWElement::group(tgt, t)), inv), PBWElement::group(tgt, si * t * si));
    }
  });
}

CheckReport verify_phi_well_defined(const PhiContext& ctx, const IsoConfig& cfg) {
  ReportParams params = spec_params(ctx.spec());
  params["seed"] = std::to_string(cfg.seed);
  params["samples"] = std::to_string(cfg.well_defined_samples);
  return run_check("phi_word_independence", params, [&](CheckReport& r) {
    Rng rng(cfg.seed ^ 0x3c3cULL);
    const auto& elems = ctx.source()->elements();
    std::vector<MonomialMatrix> long_ones;
    for (const auto& g : elems)
      if (permutation_length(g) >= 2) long_ones.push_back(g);
    const auto& pool = long_ones.empty() ? elems : long_ones;
    const WordChooser chooser = [&](std::size_t count) { return static_cast<std::size_t>(rng.below(count)); };
    for (int k = 0; k < cfg.well_defined_samples; ++k) {
      const MonomialMatrix& g = rng.pick(pool);
      same(r, "phi(" + g.canonical() + ")", ctx.phi_group(g, chooser), ctx.phi_group(g));
    }
  });
}

CheckReport verify_phi_bijective(const PhiContext& ctx) {
  return run_check("phi_bijective", spec_params(ctx.spec()), [&](CheckReport& r) {
    RowReducer<MonomialMatrix> reducer;
    for (const auto& g : ctx.source()->elements()) {
      RowReducer<MonomialMatrix>::Vector v;
      for (const auto& [t, c] : ctx.phi_group(g).terms()) v[t.g] = constant_of(c);
      reducer.add(std::move(v));
    }
    r.details["rank"] = std::to_string(reducer.rank());
    r.expect(static_cast<long long>(reducer.rank()) == ctx.spec().order(),
             "rank " + std::to_string(reducer.rank()) + " != |G|");
  });
}

std::vector<CheckReport> verify_main_theorem(const PhiContext& ctx, const IsoConfig& cfg) {
  std::vector<CheckReport> out;
  out.push_back(verify_phi_relations(ctx));
  out.push_back(verify_phi_homomorphism(ctx, cfg));
  out.push_back(verify_phi_presentation(ctx));
  out.push_back(verify_phi_well_defined(ctx, cfg));
  out.push_back(verify_phi_bijective(ctx));
  return out;
}

namespace {

// All exponent vectors (k, l) in N^n x N^n with |k| + |l| = d.
void compositions(int slots, int d, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == slots - 1) {
    current.push_back(d);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int a = 0; a <= d; ++a) {
    current.push_back(a);
    compositions(slots, d - a, current, out);
    current.pop_back();
  }
}

}  // namespace

CheckReport verify_basis_correspondence(const PhiContext& ctx, int max_degree) {
  ReportParams params = spec_params(ctx.spec());
  params["max_degree"] = std::to_string(max_degree);
  return run_check("basis_correspondence", params, [&](CheckReport& r) {
    const AlgebraPtr& src = ctx.source();
    const AlgebraPtr& tgt = ctx.target();
    const GroupSpec& spec = ctx.spec();
    const int n = spec.n, m = spec.m;
    const GroupSpec full = full_torus_spec(m, n);
    const MonomialMatrix id(n, m);
    const auto torus = enumerate_torus(n, m, spec.p);

    // T-eigenbasis w b of each coset span, and the braided w theta_w b
    std::vector<PBWElement> target_basis, source_basis;
    RowReducer<MonomialMatrix> source_rank;
    for (const auto& w : permutations(n, m)) {
      RowReducer<MonomialMatrix> coset;
      const GroupAlgebraElement wth = GroupAlgebraElement::delta(full, w) * theta(w);
      std::size_t picked = 0;
      for (const auto& t : torus) {
        for (const auto& [I, comp] : group_eigencomponents(spec, w * t)) {
          RowReducer<MonomialMatrix>::Vector v;
          for (const auto& [g, c] : comp.terms()) v[g] = constant_of(c);
          if (!coset.add(v)) continue;
          ++picked;
          target_basis.push_back(PBWElement::from_group_algebra(tgt, comp));
          // b = w^-1 (w b)
          GroupAlgebraElement b(full);
          for (const auto& [g, c] : comp.terms()) b.add_term(w.inverse() * g, c);
          const GroupAlgebraElement u = retag(wth * b, ctx.mystic_spec());
          RowReducer<MonomialMatrix>::Vector sv;
          for (const auto& [g, c] : u.terms()) sv[g] = constant_of(c);
          source_rank.add(std::move(sv));
          source_basis.push_back(PBWElement::from_group_algebra(src, u));
        }
      }
      r.expect(picked == torus.size(), "coset of " + format_group_element(w) + " gave " + std::to_string(picked) +
                                           " eigenvectors");
    }
    r.details["degree0_source_rank"] = std::to_string(source_rank.rank());
    r.expect(static_cast<long long>(target_basis.size()) == spec.order(), "target eigenbasis size");
    r.expect(static_cast<long long>(source_rank.rank()) == spec.order(), "braided spanning set is not independent");

    long long plus = 0, minus = 0;
    for (int d = 0; d <= max_degree; ++d) {
      std::vector<std::vector<int>> exps;
      std::vector<int> cur;
      compositions(2 * n, d, cur, exps);
      std::vector<std::optional<std::string>> bad(exps.size() * source_basis.size());
      std::vector<int> sign(bad.size(), 0);
      parallel_for(bad.size(), [&](std::size_t idx) {
        const auto& e = exps[idx / source_basis.size()];
        const std::size_t b = idx % source_basis.size();
        Degrees kx{}, ly{};
        for (int i = 0; i < n; ++i) {
          kx[i] = static_cast<std::uint8_t>(e[i]);
          ly[i] = static_cast<std::uint8_t>(e[n + i]);
        }
        const PBWElement braided = PBWElement::monomial(src, kx, id, Degrees{}) *
                                   source_basis[b] * PBWElement::monomial(src, Degrees{}, id, ly);
        const PBWElement image = ctx.phi(braided);
        const PBWElement want = PBWElement::monomial(tgt, kx, id, Degrees{}) * target_basis[b] *
                                PBWElement::monomial(tgt, Degrees{}, id, ly);
        if (image == want) {
          sign[idx] = 1;
        } else if (image == -want) {
          sign[idx] = -1;
        } else {
          bad[idx] = "phi(" + braided.to_string() + ") = " + image.to_string() + " ; expected +-" + want.to_string();
        }
      });
      for (std::size_t k = 0; k < bad.size(); ++k) {
        if (bad[k]) r.fail(*bad[k]);
        if (sign[k] > 0) ++plus;
        if (sign[k] < 0) ++minus;
      }
      const long long count = static_cast<long long>(bad.size());
      r.details["degree " + std::to_string(d)] = std::to_string(count);
      r.expect(count == graded_dimension(*src, d, src->size_limit()), "braided graded dimension at " + std::to_string(d));
      r.expect(count == graded_dimension(*tgt, d, tgt->size_limit()), "rational graded dimension at " + std::to_string(d));
    }
    r.details["signs"] = std::to_string(plus) + " plus, " + std::to_string(minus) + " minus";
  });
}

}  // namespace cherednik
