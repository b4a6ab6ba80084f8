#include "cherednik/reps.hpp"

#include <cstdlib>
#include <map>
#include <optional>

#include "cherednik/errors.hpp"

namespace cherednik {

namespace {

std::string assignment_string(const ParamAssignment& a) {
  std::string s;
  for (const auto& [k, v] : a) s += (s.empty() ? "" : ", ") + parameter_name(k) + " = " + v.to_string();
  return s;
}

void require_g21(const LinearCharacter& tau) {
  if (tau.n < 2 || tau.n > kMaxRank) throw InvalidSpec("characters need 2 <= n <= " + std::to_string(kMaxRank));
  if (std::abs(tau.s_value) != 1 || std::abs(tau.t_value) != 1) throw InvalidSpec("character values must be +-1");
}

// Degree-zero part of u through rho, at the given parameters.
CycRational evaluate(const PBWElement& u, const std::function<CycRational(const MonomialMatrix&)>& rho,
                     const ParamAssignment& a) {
  CycRational out;
  for (const auto& [t, c] : u.terms())
    if (t.total_degree() == 0) out += specialize(c, a) * rho(t.g);
  return out;
}

ReportParams character_params(const LinearCharacter& tau, const ParamAssignment& a) {
  ReportParams p{{"tau", tau.name()}, {"n", std::to_string(tau.n)}};
  for (const auto& [k, v] : a) p[parameter_name(k)] = v.to_string();
  return p;
}

}  // namespace

std::string LinearCharacter::name() const {
  if (s_value == 1) return t_value == 1 ? "triv" : "kappa";
  return t_value == 1 ? "kappa*det" : "det";
}

int LinearCharacter::value(const MonomialMatrix& g) const {
  if (g.conductor() != 2) throw InvalidSpec("characters are tabulated for G(2,1,n)");
  int v = g.sign() < 0 ? s_value : 1;
  for (int j = 0; j < g.rank(); ++j)
    if (g.exponent(j) != 0) v *= t_value;
  return v;
}

bool ConstraintLine::contains(const ParamAssignment& a) const {
  const auto c1 = a.find(0), cm1 = a.find(1);
  if (c1 == a.end() || cm1 == a.end()) throw MissingParameter("the constraint line needs c1 and c[1]");
  return c1->second * CycRational(c1_coeff) + cm1->second * CycRational(cm1_coeff) == CycRational(offset);
}

ParamAssignment ConstraintLine::point(const Rational& c1) const {
  const Rational cm1 = (offset - c1_coeff * c1) / cm1_coeff;
  return {{0, CycRational(c1)}, {1, CycRational(cm1)}};
}

std::string ConstraintLine::to_string() const {
  const std::string lhs = format_linear_combination(
      {{ParamScalar(CycRational(c1_coeff)), "c1"}, {ParamScalar(CycRational(cm1_coeff)), "c[1]"}});
  return lhs + " = " + offset.get_str();
}

ConstraintLine constraint_line(const LinearCharacter& tau) {
  require_g21(tau);
  return ConstraintLine{Rational(2 * (tau.n - 1) * tau.s_value), Rational(tau.t_value), Rational(1)};
}

std::vector<std::string> one_dimensional_violations(const AlgebraPtr& alg,
                                                    const std::function<CycRational(const MonomialMatrix&)>& rho,
                                                    const ParamAssignment& a) {
  std::vector<std::string> bad;
  const int n = alg->n();
  // y_i x_j - sign x_j y_i = rhs: the left side acts by 0.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const CycRational v = evaluate(PBWElement::from_group_algebra(alg, alg->yx_rhs(i, j)), rho, a);
      if (!v.is_zero())
        bad.push_back("y" + std::to_string(i) + " x" + std::to_string(j) + ": 0 = " + v.to_string());
    }
  // x x, y y and g x = g(x) g relations have x or y in every word: 0 = 0.
  // Group relations: rho must be multiplicative.
  const auto gens = group_generators(alg->group());
  for (const auto& g : gens)
    for (const auto& h : alg->elements()) {
      const CycRational lhs = rho(g) * rho(h), rhs = rho(g * h);
      if (!(lhs == rhs)) bad.push_back("rho(" + g.canonical() + ") rho(" + h.canonical() + ") != rho(product)");
    }
  return bad;
}

CheckReport verify_one_dimensional(const LinearCharacter& tau, const ParamAssignment& assignment) {
  return run_check("one_dimensional", character_params(tau, assignment), [&](CheckReport& r) {
    require_g21(tau);
    const AlgebraPtr alg = Algebra::create(GroupSpec{2, 1, tau.n}, AlgebraKind::rational);
    const auto rho = [&](const MonomialMatrix& g) { return CycRational(tau.value(g)); };
    const ConstraintLine line = constraint_line(tau);
    r.details["line"] = line.to_string();
    r.details["on_line"] = line.contains(assignment) ? "yes" : "no";
    for (const auto& v : one_dimensional_violations(alg, rho, assignment)) r.fail(v);
    // necessity: shift c[1] off the line
    ParamAssignment off = assignment;
    off[1] += CycRational(1);
    const auto off_bad = one_dimensional_violations(alg, rho, off);
    r.details["off_line"] = assignment_string(off) + " -> " + std::to_string(off_bad.size()) + " violations";
    r.expect(!off_bad.empty(), "relations also hold off the constraint line at " + assignment_string(off));
  });
}

LinearCharacter twist_character(const LinearCharacter& tau) {
  require_g21(tau);
  // rho_tau(sbar_i) = tau(s) tau(t)^2 = tau(s); sigma_i = s_i t_{i+1}^(-1)
  const int sigma_value = tau.s_value * tau.t_value * tau.t_value;
  return LinearCharacter{tau.n, sigma_value * tau.t_value, tau.t_value};
}

CheckReport verify_twisted_module(const LinearCharacter& tau, const ParamAssignment& assignment) {
  return run_check("twisted_module", character_params(tau, assignment), [&](CheckReport& r) {
    require_g21(tau);
    const int n = tau.n;
    const PhiContext ctx(GroupSpec{2, 1, n});
    const auto rho_tau = [&](const MonomialMatrix& g) { return CycRational(tau.value(g)); };
    const auto rho = [&](const MonomialMatrix& g) { return evaluate(ctx.phi_group(g), rho_tau, assignment); };
    const LinearCharacter twisted = twist_character(tau);
    r.details["tau'"] = twisted.name();
    for (const auto& v : one_dimensional_violations(ctx.source(), rho, assignment)) r.fail(v);
    for (const auto& g : ctx.source()->elements())
      r.expect(rho(g) == CycRational(twisted.value(g)),
               "rho_tau(phi(" + g.canonical() + ")) = " + rho(g).to_string() + ", tau' gives " +
                   std::to_string(twisted.value(g)));
    for (int i = 1; i < n; ++i) {
      const MonomialMatrix sigma = simple_sigma(n, 2, i);
      const CycRational direct = rho_tau(simple_sbar(n, 2, i));
      // tau(sigma_i) tau(t_i), with sigma_i read in G(2,1,n)
      const CycRational displayed = rho_tau(sigma) * rho_tau(make_t(n, 2, i, 1));
      r.expect(direct == displayed, "the two readings of tau'(sigma_" + std::to_string(i) + ") differ");
      r.expect(rho(sigma) == direct, "rho_tau(phi(sigma_" + std::to_string(i) + ")) != rho_tau(sbar)");
    }
  });
}

CheckReport verify_character_table(int n) {
  return run_check("character_table", {{"n", std::to_string(n)}}, [&](CheckReport& r) {
    const std::map<std::string, std::string> table{
        {"triv", "triv"}, {"kappa", "det"}, {"det", "kappa"}, {"kappa*det", "kappa*det"}};
    for (const auto& tau : LinearCharacter::all(n)) {
      const LinearCharacter image = twist_character(tau);
      r.details[tau.name()] = image.name();
      r.expect_equal(tau.name(), image.name(), table.at(tau.name()));
      r.expect(twist_character(image) == tau, "twist is not an involution at " + tau.name());
    }
  });
}

PBWElement build_h(const AlgebraPtr& alg) {
  if (alg->kind() != AlgebraKind::rational) throw KindMismatch("h is built in the rational kind");
  const int n = alg->n(), m = alg->m();
  Rational half_n(n, 2);
  half_n.canonicalize();
  PBWElement h = PBWElement::scalar(alg, ParamScalar(CycRational(half_n)));
  for (int i = 1; i <= n; ++i) h += PBWElement::x(alg, i) * PBWElement::y(alg, i);
  for (const auto& s : reflections(alg->group())) {
    ReflectionData rd;
    ParamScalar c_s;
    if (as_t_reflection(s, rd)) {
      c_s = -alg->c_zeta(rd.k / alg->p()) * cyc_invert(CycRational(1) - CycRational::zeta_power(m, rd.k));
    } else {
      c_s = -alg->c1();
    }
    h += PBWElement::group(alg, s, c_s);
  }
  return h;
}

CheckReport verify_h(const AlgebraPtr& alg) {
  return run_check("h_element", {{"m", std::to_string(alg->m())}, {"p", std::to_string(alg->p())},
                                 {"n", std::to_string(alg->n())}},
                   [&](CheckReport& r) {
                     const PBWElement h = build_h(alg);
                     r.details["h"] = h.to_string();
                     for (int i = 1; i <= alg->n(); ++i) {
                       const PBWElement x = PBWElement::x(alg, i), y = PBWElement::y(alg, i);
                       r.expect_equal("[h, x" + std::to_string(i) + "]", commutator(h, x).to_string(), x.to_string());
                       r.expect_equal("[h, y" + std::to_string(i) + "]", commutator(h, y).to_string(),
                                      (-y).to_string());
                     }
                   });
}

CheckReport verify_weyl_degeneration(const AlgebraPtr& alg) {
  return run_check("weyl_degeneration", {{"m", std::to_string(alg->m())}, {"p", std::to_string(alg->p())},
                                         {"n", std::to_string(alg->n())}},
                   [&](CheckReport& r) {
                     if (alg->kind() != AlgebraKind::rational) throw KindMismatch("needs the rational kind");
                     ParamAssignment zero;
                     for (int k = 0; k < alg->parameter_count(); ++k) zero[k] = CycRational(0);
                     for (int i = 1; i <= alg->n(); ++i)
                       for (int j = 1; j <= alg->n(); ++j) {
                         const PBWElement c =
                             commutator(PBWElement::y(alg, i), PBWElement::x(alg, j)).specialize(zero);
                         const PBWElement want = PBWElement::scalar(alg, ParamScalar(i == j ? 1 : 0));
                         r.expect_equal("[y" + std::to_string(i) + ", x" + std::to_string(j) + "]", c.to_string(),
                                        want.to_string());
                       }
                   });
}

std::vector<CheckReport> verify_reps(const GroupSpec& spec, long long size_limit) {
  const AlgebraPtr alg = Algebra::create(spec, AlgebraKind::rational, 1, size_limit);
  std::vector<CheckReport> out;
  out.push_back(verify_h(alg));
  out.push_back(verify_weyl_degeneration(alg));
  if (spec.m == 2 && spec.p == 1) {
    out.push_back(verify_character_table(spec.n));
    for (const auto& tau : LinearCharacter::all(spec.n)) {
      const ConstraintLine line = constraint_line(tau);
      for (const Rational& c1 : {Rational(0), Rational(1, 3)}) {
        const ParamAssignment a = line.point(c1);
        out.push_back(verify_one_dimensional(tau, a));
        out.push_back(verify_twisted_module(tau, a));
      }
    }
  }
  return out;
}

}  // namespace cherednik
