#pragma once

// One-dimensional modules of the rational Cherednik algebra of G(2,1,n), their
// twists to the braided side, the Euler-type element h, and the c = 0 limit.

#include <functional>
#include <string>
#include <vector>

#include "cherednik/isomorphism.hpp"
#include "cherednik/pbw.hpp"
#include "cherednik/report.hpp"
#include "cherednik/scalars.hpp"

namespace cherednik {

// A character of G(2,1,n), fixed by its values on s = s_i and t = t_i^(-1).
struct LinearCharacter {
  int n = 2;
  int s_value = 1;
  int t_value = 1;

  static LinearCharacter triv(int n) { return {n, 1, 1}; }
  static LinearCharacter kappa(int n) { return {n, 1, -1}; }
  static LinearCharacter det(int n) { return {n, -1, -1}; }
  static LinearCharacter kappa_det(int n) { return {n, -1, 1}; }
  static std::vector<LinearCharacter> all(int n) { return {triv(n), kappa(n), det(n), kappa_det(n)}; }

  // "triv", "kappa", "det", "kappa*det"
  std::string name() const;
  // tau(s)^{parity} tau(t)^{number of -1 entries}; g in G(2,1,n).
  int value(const MonomialMatrix& g) const;

  friend bool operator==(const LinearCharacter&, const LinearCharacter&) = default;
};

// c1_coeff * c1 + cm1_coeff * c[1] = offset; c[1] is c_{-1}.
struct ConstraintLine {
  Rational c1_coeff;
  Rational cm1_coeff;
  Rational offset;

  bool contains(const ParamAssignment& a) const;
  // The point of the line with the given c1.
  ParamAssignment point(const Rational& c1) const;
  std::string to_string() const;
};

// 1 = 2(n-1) tau(s) c1 + tau(t) c_{-1}
ConstraintLine constraint_line(const LinearCharacter& tau);

// Evaluates every defining relation of alg on the one-dimensional module with
// x, y acting by 0 and g by rho(g), at the given parameters. Returns the
// violated relations.
std::vector<std::string> one_dimensional_violations(const AlgebraPtr& alg,
                                                    const std::function<CycRational(const MonomialMatrix&)>& rho,
                                                    const ParamAssignment& assignment);

// Passes iff all relations hold at the assignment and some relation fails at a
// point off the constraint line.
CheckReport verify_one_dimensional(const LinearCharacter& tau, const ParamAssignment& assignment);

// tau'(t) = tau(t), tau'(sigma_i) = rho_tau(sbar_i), rewritten in (s, t) values.
LinearCharacter twist_character(const LinearCharacter& tau);
// rho_tau o phi on the braided algebra at c' = -c: all relations hold and the
// character is twist_character(tau); both readings of tau'(sigma_i) agree.
CheckReport verify_twisted_module(const LinearCharacter& tau, const ParamAssignment& assignment);
// The four-character table triv->triv, kappa->det, det->kappa, kappa*det->kappa*det.
CheckReport verify_character_table(int n);

// h = sum_i x_i y_i + n/2 + sum_s c_s s with c_s the kappa-normalised parameter.
PBWElement build_h(const AlgebraPtr& alg);
// [h, x_i] = x_i and [h, y_i] = -y_i, symbolically.
CheckReport verify_h(const AlgebraPtr& alg);
// At c = 0: [y_i, x_j] = delta_ij.
CheckReport verify_weyl_degeneration(const AlgebraPtr& alg);

// h, Weyl degeneration, and for G(2,1,n) the character checks.
std::vector<CheckReport> verify_reps(const GroupSpec& spec, long long size_limit = kDefaultSizeLimit);

}  // namespace cherednik
