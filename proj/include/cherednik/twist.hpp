#pragma once

// The cocycle F = prod_{j<i} f_ij on C T, T = (C_2)^n, and the twisted product
// a * b = m(F |> (a (x) b)) on the rational Cherednik algebra (F^-1 = F).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/pbw.hpp"
#include "cherednik/report.hpp"

namespace cherednik {

// Element of (C T)^{(x) k}: keys hold one subset mask per leg.
class SmallTensor {
 public:
  using Key = std::vector<unsigned>;

  explicit SmallTensor(int arity = 2) : arity_(arity) {}
  static SmallTensor one(int arity);
  static SmallTensor basis(const Key& key, const Rational& coeff = Rational(1));

  int arity() const noexcept { return arity_; }
  const std::map<Key, Rational>& terms() const noexcept { return terms_; }
  void add(const Key& key, const Rational& coeff);

  SmallTensor& operator+=(const SmallTensor& other);
  SmallTensor& operator-=(const SmallTensor& other);
  friend SmallTensor operator+(SmallTensor a, const SmallTensor& b) { return a += b; }
  friend SmallTensor operator-(SmallTensor a, const SmallTensor& b) { return a -= b; }
  // Legwise product, gamma_S gamma_T = gamma_{S xor T}.
  friend SmallTensor operator*(const SmallTensor& a, const SmallTensor& b);
  friend bool operator==(const SmallTensor& a, const SmallTensor& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  // Delta on one leg (Delta gamma = gamma (x) gamma); arity grows by one.
  SmallTensor coproduct(int leg) const;
  // epsilon on one leg (epsilon gamma = 1); arity drops by one.
  SmallTensor counit(int leg) const;
  // Places leg k at position legs[k] of a tensor of the given arity.
  SmallTensor embed(int arity, const std::vector<int>& legs) const;
  // Tensor flip of a 2-tensor.
  SmallTensor flipped() const;

  std::string to_string() const;

 private:
  int arity_;
  std::map<Key, Rational> terms_;
};

// 1/2 (1(x)1 + gamma_i(x)1 + 1(x)gamma_j - gamma_i(x)gamma_j), 1-based.
SmallTensor f_element(int i, int j);
SmallTensor cocycle_F(int n);

std::vector<CheckReport> qt_axioms_check(int n);

// Pairs of PBW terms with coefficients, the domain of the F-action.
class TensorPair {
 public:
  using Key = std::pair<PBWTerm, PBWTerm>;

  explicit TensorPair(AlgebraPtr alg) : algebra_(std::move(alg)) {}
  static TensorPair of(const PBWElement& a, const PBWElement& b);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const std::map<Key, ParamScalar>& terms() const noexcept { return terms_; }
  void add(const Key& key, const ParamScalar& c);
  friend bool operator==(const TensorPair& a, const TensorPair& b) { return a.terms_ == b.terms_; }

  // m, the product of the two slots.
  PBWElement multiplied() const;

 private:
  AlgebraPtr algebra_;
  std::map<Key, ParamScalar> terms_;
};

// f_ij acting on the two slots, i > j, 1-based.
TensorPair f_apply(int i, int j, const TensorPair& tp);
// All f_ij in the given order; default is lexicographic in (i, j).
TensorPair F_apply(const TensorPair& tp, std::vector<std::pair<int, int>> order = {});
std::vector<std::pair<int, int>> f_order(int n);

void require_twistable(const PBWElement& a);

// m(F |> (a (x) b)).
PBWElement star_oracle(const PBWElement& a, const PBWElement& b);
// Sign rule on T-eigencomponents: a_I * b_J = (-1)^{d(I,J)} a_I b_J.
PBWElement star(const PBWElement& a, const PBWElement& b);
PBWElement star_serial(const PBWElement& a, const PBWElement& b);

// p_i |> u and q_i |> u, 1-based.
PBWElement p_action(int i, const PBWElement& u);
PBWElement q_action(int i, const PBWElement& u);

struct SampleConfig {
  int samples = 100;
  int max_degree = 2;
  std::uint64_t seed = 0;
};

// star == star_oracle on generator pairs and random pairs.
CheckReport verify_star_oracle(const AlgebraPtr& alg, const SampleConfig& cfg);
// s_i * u and u * s_i against the p/q formulas.
CheckReport verify_s_au(const AlgebraPtr& alg, const SampleConfig& cfg);
// t * u = t u and u * t = u t for diagonal t.
CheckReport verify_torus_star(const AlgebraPtr& alg, const SampleConfig& cfg);
// s_i * s_i = r_{i,i+1} and the braid relations under *.
CheckReport verify_star_braid(const AlgebraPtr& alg);
// Associativity of * on random triples.
CheckReport verify_star_associative(const AlgebraPtr& alg, const SampleConfig& cfg);
// F_action does not depend on the order of the f_ij.
CheckReport verify_f_order(const AlgebraPtr& alg, const SampleConfig& cfg);

}  // namespace cherednik
