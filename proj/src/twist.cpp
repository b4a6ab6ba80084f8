#include "cherednik/twist.hpp"

#include <sstream>

#include "cherednik/errors.hpp"
#include "cherednik/parallel.hpp"

namespace cherednik {

// --- SmallTensor -------------------------------------------------------------

SmallTensor SmallTensor::one(int arity) { return basis(Key(static_cast<std::size_t>(arity), 0u)); }

SmallTensor SmallTensor::basis(const Key& key, const Rational& coeff) {
  SmallTensor t(static_cast<int>(key.size()));
  t.add(key, coeff);
  return t;
}

void SmallTensor::add(const Key& key, const Rational& coeff) {
  if (static_cast<int>(key.size()) != arity_) throw InvalidSpec("tensor arity mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SmallTensor& SmallTensor::operator+=(const SmallTensor& other) {
  for (const auto& [k, c] : other.terms_) add(k, c);
  return *this;
}

SmallTensor& SmallTensor::operator-=(const SmallTensor& other) {
  for (const auto& [k, c] : other.terms_) add(k, -c);
  return *this;
}

SmallTensor operator*(const SmallTensor& a, const SmallTensor& b) {
  if (a.arity_ != b.arity_) throw InvalidSpec("tensor arity mismatch");
  SmallTensor out(a.arity_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      SmallTensor::Key k(ka.size());
      for (std::size_t leg = 0; leg < ka.size(); ++leg) k[leg] = ka[leg] ^ kb[leg];
      out.add(k, ca * cb);
    }
  }
  return out;
}

SmallTensor SmallTensor::coproduct(int leg) const {
  SmallTensor out(arity_ + 1);
  for (const auto& [k, c] : terms_) {
    Key next = k;
    next.insert(next.begin() + leg, k[leg]);
    out.add(next, c);
  }
  return out;
}

SmallTensor SmallTensor::counit(int leg) const {
  SmallTensor out(arity_ - 1);
  for (const auto& [k, c] : terms_) {
    Key next = k;
    next.erase(next.begin() + leg);
    out.add(next, c);
  }
  return out;
}

SmallTensor SmallTensor::embed(int arity, const std::vector<int>& legs) const {
  SmallTensor out(arity);
  for (const auto& [k, c] : terms_) {
    Key next(static_cast<std::size_t>(arity), 0u);
    for (std::size_t leg = 0; leg < k.size(); ++leg) next[legs[leg]] = k[leg];
    out.add(next, c);
  }
  return out;
}

SmallTensor SmallTensor::flipped() const {
  SmallTensor out(arity_);
  for (const auto& [k, c] : terms_) out.add(Key(k.rbegin(), k.rend()), c);
  return out;
}

std::string SmallTensor::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (std::size_t leg = 0; leg < k.size(); ++leg) {
      os << (leg ? "(x)" : "*");
      if (k[leg] == 0) {
        os << "1";
      } else {
        os << "g{";
        bool sep = false;
        for (int i = 0; i < 32; ++i)
          if (k[leg] & (1u << i)) {
            os << (sep ? "," : "") << i + 1;
            sep = true;
          }
        os << "}";
      }
    }
  }
  return os.str();
}

SmallTensor f_element(int i, int j) {
  const unsigned gi = 1u << (i - 1), gj = 1u << (j - 1);
  const Rational half(1, 2);
  SmallTensor f(2);
  f.add({0, 0}, half);
  f.add({gi, 0}, half);
  f.add({0, gj}, half);
  f.add({gi, gj}, -half);
  return f;
}

SmallTensor cocycle_F(int n) {
  SmallTensor F = SmallTensor::one(2);
  for (const auto& [i, j] : f_order(n)) F = F * f_element(i, j);
  return F;
}

std::vector<std::pair<int, int>> f_order(int n) {
  std::vector<std::pair<int, int>> order;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j) order.emplace_back(i, j);
  return order;
}

std::vector<CheckReport> qt_axioms_check(int n) {
  if (n < 1 || n > kMaxRank) throw InvalidSpec("rank out of range");
  const ReportParams params{{"n", std::to_string(n)}};
  std::vector<std::pair<std::string, SmallTensor>> structures;
  for (const auto& [i, j] : f_order(n))
    structures.emplace_back("f" + std::to_string(i) + std::to_string(j), f_element(i, j));
  structures.emplace_back("F", cocycle_F(n));
  const SmallTensor one2 = SmallTensor::one(2), one1 = SmallTensor::one(1);

  std::vector<CheckReport> out;
  out.push_back(run_check("qt1", params, [&](CheckReport& r) {
    r.details["note"] = "vacuous: C T is commutative and cocommutative";
    for (const auto& [name, R] : structures) {
      for (unsigned S = 0; S < (1u << n); ++S) {
        const SmallTensor delta = SmallTensor::basis({S, S});
        const SmallTensor lhs = R * delta, rhs = delta.flipped() * R;
        r.expect_equal(name + " gamma_S=" + std::to_string(S), lhs.to_string(), rhs.to_string());
      }
    }
  }));
  out.push_back(run_check("qt2_left", params, [&](CheckReport& r) {
    for (const auto& [name, R] : structures) {
      const SmallTensor lhs = R.coproduct(0);
      const SmallTensor rhs = R.embed(3, {0, 2}) * R.embed(3, {1, 2});
      r.expect_equal(name, lhs.to_string(), rhs.to_string());
    }
  }));
  out.push_back(run_check("qt2_right", params, [&](CheckReport& r) {
    for (const auto& [name, R] : structures) {
      const SmallTensor lhs = R.coproduct(1);
      const SmallTensor rhs = R.embed(3, {0, 2}) * R.embed(3, {0, 1});
      r.expect_equal(name, lhs.to_string(), rhs.to_string());
    }
  }));
  out.push_back(run_check("qybe", params, [&](CheckReport& r) {
    for (const auto& [name, R] : structures) {
      const SmallTensor R12 = R.embed(3, {0, 1}), R13 = R.embed(3, {0, 2}), R23 = R.embed(3, {1, 2});
      r.expect_equal(name, (R12 * R13 * R23).to_string(), (R23 * R13 * R12).to_string());
    }
  }));
  out.push_back(run_check("cocycle", params, [&](CheckReport& r) {
    for (const auto& [name, R] : structures) {
      const SmallTensor lhs = R.embed(3, {0, 1}) * R.coproduct(0);
      const SmallTensor rhs = R.embed(3, {1, 2}) * R.coproduct(1);
      r.expect_equal(name, lhs.to_string(), rhs.to_string());
    }
  }));
  out.push_back(run_check("counit", params, [&](CheckReport& r) {
    for (const auto& [name, R] : structures) {
      r.expect_equal(name + " (eps(x)id)", R.counit(0).to_string(), one1.to_string());
      r.expect_equal(name + " (id(x)eps)", R.counit(1).to_string(), one1.to_string());
    }
  }));
  out.push_back(run_check("involution", params, [&](CheckReport& r) {
    for (const auto& [name, R] : structures) r.expect_equal(name + "^2", (R * R).to_string(), one2.to_string());
  }));
  out.push_back(run_check("f_commute", params, [&](CheckReport& r) {
    for (std::size_t a = 0; a + 1 < structures.size(); ++a)
      for (std::size_t b = a + 1; b + 1 < structures.size(); ++b) {
        const auto& [na, fa] = structures[a];
        const auto& [nb, fb] = structures[b];
        r.expect_equal(na + "*" + nb, (fa * fb).to_string(), (fb * fa).to_string());
      }
  }));
  return out;
}

// --- TensorPair and the star products -------------------------------------------

TensorPair TensorPair::of(const PBWElement& a, const PBWElement& b) {
  TensorPair tp(a.algebra() ? a.algebra() : b.algebra());
  for (const auto& [ta, ca] : a.terms())
    for (const auto& [tb, cb] : b.terms()) tp.add({ta, tb}, ca * cb);
  return tp;
}

void TensorPair::add(const Key& key, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PBWElement TensorPair::multiplied() const {
  PBWElement out(algebra_);
  for (const auto& [key, c] : terms_) {
    PBWElement a(algebra_), b(algebra_);
    a.add_term(key.first, c);
    b.add_term(key.second, ParamScalar(1));
    out += multiply(a, b);
  }
  return out;
}

TensorPair f_apply(int i, int j, const TensorPair& tp) {
  if (i <= j) throw IndexOutOfRange("f_ij needs i > j");
  const unsigned gi = 1u << (i - 1), gj = 1u << (j - 1);
  const CycRational half(Rational(1, 2));
  TensorPair out(tp.algebra());
  for (const auto& [key, c] : tp.terms()) {
    const ParamScalar hc = c * half;
    auto [sa, ta] = gamma_term(gi, key.first);
    auto [sb, tb] = gamma_term(gj, key.second);
    out.add(key, hc);
    out.add({ta, key.second}, sa > 0 ? hc : -hc);
    out.add({key.first, tb}, sb > 0 ? hc : -hc);
    out.add({ta, tb}, sa * sb > 0 ? -hc : hc);
  }
  return out;
}

TensorPair F_apply(const TensorPair& tp, std::vector<std::pair<int, int>> order) {
  if (order.empty() && tp.algebra()) order = f_order(tp.algebra()->n());
  TensorPair current = tp;
  for (const auto& [i, j] : order) current = f_apply(i, j, current);
  return current;
}

void require_twistable(const PBWElement& a) {
  if (!a.algebra()) return;
  if (a.algebra()->kind() != AlgebraKind::rational) throw KindMismatch("the star product lives on the rational kind");
  if (a.algebra()->m() % 2 != 0) throw InvalidSpec("the star product needs m even");
}

PBWElement star_oracle(const PBWElement& a, const PBWElement& b) {
  require_twistable(a);
  require_twistable(b);
  return F_apply(TensorPair::of(a, b)).multiplied();
}

namespace {

PBWElement star_impl(const PBWElement& a, const PBWElement& b, bool serial) {
  require_twistable(a);
  require_twistable(b);
  const AlgebraPtr alg = a.algebra() ? a.algebra() : b.algebra();
  PBWElement out(alg);
  if (a.is_zero() || b.is_zero()) return out;
  const auto ca = eigencomponents(a), cb = eigencomponents(b);
  std::vector<std::pair<const std::pair<const unsigned, PBWElement>*, const std::pair<const unsigned, PBWElement>*>>
      pairs;
  for (const auto& ea : ca)
    for (const auto& eb : cb) pairs.emplace_back(&ea, &eb);
  std::vector<PBWElement> partial(pairs.size());
  auto body = [&](std::size_t k) {
    const auto& [I, aI] = *pairs[k].first;
    const auto& [J, bJ] = *pairs[k].second;
    PBWElement prod = serial ? multiply_serial(aI, bJ) : multiply(aI, bJ);
    if (inversion_count(I, J) % 2) prod = -prod;
    partial[k] = std::move(prod);
  };
  if (serial) {
    for (std::size_t k = 0; k < pairs.size(); ++k) body(k);
  } else {
    parallel_for(pairs.size(), body);
  }
  for (const auto& p : partial) out += p;
  return out;
}

}  // namespace

PBWElement star(const PBWElement& a, const PBWElement& b) { return star_impl(a, b, false); }

PBWElement star_serial(const PBWElement& a, const PBWElement& b) { return star_impl(a, b, true); }

PBWElement p_action(int i, const PBWElement& u) {
  return (u + gamma_action(i, u)) * ParamScalar(CycRational(Rational(1, 2)));
}

PBWElement q_action(int i, const PBWElement& u) {
  return (u - gamma_action(i, u)) * ParamScalar(CycRational(Rational(1, 2)));
}

namespace {

ReportParams spec_params(const AlgebraPtr& alg) {
  return {{"m", std::to_string(alg->m())}, {"p", std::to_string(alg->p())}, {"n", std::to_string(alg->n())}};
}

ReportParams sample_params(const AlgebraPtr& alg, const SampleConfig& cfg) {
  ReportParams p = spec_params(alg);
  p["samples"] = std::to_string(cfg.samples);
  p["max_degree"] = std::to_string(cfg.max_degree);
  p["seed"] = std::to_string(cfg.seed);
  return p;
}

void require_rational_even(const AlgebraPtr& alg) {
  if (alg->kind() != AlgebraKind::rational) throw KindMismatch("needs the rational kind");
  if (alg->m() % 2 != 0) throw InvalidSpec("needs m even");
}

}  // namespace

CheckReport verify_star_oracle(const AlgebraPtr& alg, const SampleConfig& cfg) {
  return run_check("star_oracle", sample_params(alg, cfg), [&](CheckReport& r) {
    require_rational_even(alg);
    const auto gens = algebra_generators(alg);
    long long compared = 0;
    for (const auto& [na, a] : gens) {
      for (const auto& [nb, b] : gens) {
        const PBWElement fast = star(a, b), slow = star_oracle(a, b);
        r.expect_equal(na + " * " + nb, fast.to_string(), slow.to_string());
        ++compared;
      }
    }
    Rng rng(cfg.seed);
    const RandomElementOptions opts{cfg.max_degree, 3};
    for (int k = 0; k < cfg.samples; ++k) {
      const PBWElement a = random_element(alg, rng, opts), b = random_element(alg, rng, opts);
      const PBWElement fast = star(a, b), slow = star_oracle(a, b);
      if (!(fast == slow)) r.fail("(" + a.to_string() + ") * (" + b.to_string() + "): fast = " + fast.to_string() +
                                  " ; oracle = " + slow.to_string());
      if (!(fast == star_serial(a, b))) r.fail("parallel and serial star differ on sample " + std::to_string(k));
      ++compared;
    }
    r.details["pairs"] = std::to_string(compared);
  });
}

CheckReport verify_s_au(const AlgebraPtr& alg, const SampleConfig& cfg) {
  return run_check("s_star_u", sample_params(alg, cfg), [&](CheckReport& r) {
    require_rational_even(alg);
    const int n = alg->n(), m = alg->m();
    Rng rng(cfg.seed ^ 0x5a5aULL);
    const RandomElementOptions opts{cfg.max_degree, 3};
    std::vector<PBWElement> samples;
    for (int k = 0; k < cfg.samples; ++k) samples.push_back(random_element(alg, rng, opts));
    for (int i = 1; i < n; ++i) samples.push_back(PBWElement::group(alg, simple_s(n, m, i)));
    for (const auto& u : samples) {
      for (int i = 1; i < n; ++i) {
        const PBWElement s = PBWElement::group(alg, simple_s(n, m, i));
        const PBWElement sbar = PBWElement::group(alg, simple_sbar(n, m, i));
        const PBWElement left = s * p_action(i, u) + sbar * q_action(i, u);
        r.expect_equal("s" + std::to_string(i) + " * (" + u.to_string() + ")", star_oracle(s, u).to_string(),
                       left.to_string());
        const PBWElement right = p_action(i + 1, u) * s + q_action(i + 1, u) * sbar;
        r.expect_equal("(" + u.to_string() + ") * s" + std::to_string(i), star_oracle(u, s).to_string(),
                       right.to_string());
      }
    }
  });
}

CheckReport verify_torus_star(const AlgebraPtr& alg, const SampleConfig& cfg) {
  return run_check("torus_star", sample_params(alg, cfg), [&](CheckReport& r) {
    require_rational_even(alg);
    Rng rng(cfg.seed ^ 0x7777ULL);
    const auto torus = enumerate_torus(alg->n(), alg->m(), alg->p());
    const RandomElementOptions opts{cfg.max_degree, 3};
    for (int k = 0; k < cfg.samples; ++k) {
      const PBWElement u = random_element(alg, rng, opts);
      const PBWElement t = PBWElement::group(alg, rng.pick(torus));
      r.expect_equal("t * u", star_oracle(t, u).to_string(), (t * u).to_string());
      r.expect_equal("u * t", star_oracle(u, t).to_string(), (u * t).to_string());
    }
  });
}

CheckReport verify_star_braid(const AlgebraPtr& alg) {
  return run_check("star_braid", spec_params(alg), [&](CheckReport& r) {
    require_rational_even(alg);
    const int n = alg->n(), m = alg->m();
    auto s = [&](int i) { return PBWElement::group(alg, simple_s(n, m, i)); };
    for (int i = 1; i < n; ++i) {
      r.expect_equal("s" + std::to_string(i) + " * s" + std::to_string(i), star(s(i), s(i)).to_string(),
                     PBWElement::group(alg, make_r(n, m, i, i + 1)).to_string());
      for (int j = i + 2; j < n; ++j)
        r.expect_equal("s" + std::to_string(i) + " * s" + std::to_string(j), star(s(i), s(j)).to_string(),
                       star(s(j), s(i)).to_string());
      if (i + 1 < n)
        r.expect_equal("braid " + std::to_string(i), star(star(s(i), s(i + 1)), s(i)).to_string(),
                       star(star(s(i + 1), s(i)), s(i + 1)).to_string());
    }
  });
}

CheckReport verify_star_associative(const AlgebraPtr& alg, const SampleConfig& cfg) {
  return run_check("star_associative", sample_params(alg, cfg), [&](CheckReport& r) {
    require_rational_even(alg);
    Rng rng(cfg.seed ^ 0xa550ULL);
    const RandomElementOptions opts{cfg.max_degree, 2};
    for (int k = 0; k < cfg.samples; ++k) {
      const PBWElement a = random_element(alg, rng, opts), b = random_element(alg, rng, opts),
                       c = random_element(alg, rng, opts);
      const PBWElement lhs = star(star(a, b), c), rhs = star(a, star(b, c));
      if (!(lhs == rhs))
        r.fail("(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + "): " + lhs.to_string() +
               " vs " + rhs.to_string());
    }
  });
}

CheckReport verify_f_order(const AlgebraPtr& alg, const SampleConfig& cfg) {
  return run_check("f_order", sample_params(alg, cfg), [&](CheckReport& r) {
    require_rational_even(alg);
    Rng rng(cfg.seed ^ 0x0fdeULL);
    const RandomElementOptions opts{cfg.max_degree, 3};
    for (int k = 0; k < cfg.samples; ++k) {
      const TensorPair tp = TensorPair::of(random_element(alg, rng, opts), random_element(alg, rng, opts));
      auto order = f_order(alg->n());
      rng.shuffle(order);
      const TensorPair twice = F_apply(F_apply(tp));
      if (!(F_apply(tp) == F_apply(tp, order))) r.fail("shuffled order changes F on sample " + std::to_string(k));
      if (!(twice == tp)) r.fail("F is not an involution on sample " + std::to_string(k));
    }
  });
}

}  // namespace cherednik
