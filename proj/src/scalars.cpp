#include "cherednik/scalars.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <memory>
#include <mutex>
#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik {
namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Returns (quotient, remainder) of a / b over Q; b nonzero after trimming.
std::pair<QPoly, QPoly> divmod(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  if (b.empty()) throw DivisionByZero();
  QPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    Rational factor = a.back() / b.back();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

struct FieldData {
  int m = 1;
  int degree = 1;
  IntPoly phi;
  // z^k reduced mod Phi_m, for 0 <= k < m.
  std::vector<std::vector<Rational>> powers;
};

constexpr int kMaxCachedConductor = 512;

std::mutex& registry_mutex() {
  static std::mutex mu;
  return mu;
}

IntPoly compute_cyclotomic(int m, std::map<int, IntPoly>& memo) {
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  // z^m - 1
  IntPoly num(static_cast<std::size_t>(m) + 1, Integer(0));
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    IntPoly den = compute_cyclotomic(d, memo);
    // Exact division by a monic integer polynomial.
    IntPoly q(num.size() - den.size() + 1, Integer(0));
    for (std::size_t k = q.size(); k-- > 0;) {
      q[k] = num[k + den.size() - 1];
      for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= q[k] * den[i];
    }
    num = std::move(q);
  }
  memo[m] = num;
  return num;
}

const FieldData& field(int m) {
  if (m < 1) throw InvalidSpec("conductor must be positive");
  static std::array<std::atomic<const FieldData*>, kMaxCachedConductor + 1> cache{};
  static std::map<int, std::unique_ptr<FieldData>> overflow;
  if (m <= kMaxCachedConductor) {
    if (const FieldData* f = cache[m].load(std::memory_order_acquire)) return *f;
  }
  std::lock_guard<std::mutex> lock(registry_mutex());
  if (m <= kMaxCachedConductor) {
    if (const FieldData* f = cache[m].load(std::memory_order_acquire)) return *f;
  } else if (auto it = overflow.find(m); it != overflow.end()) {
    return *it->second;
  }
  static std::map<int, IntPoly> memo;
  auto data = std::make_unique<FieldData>();
  data->m = m;
  data->phi = compute_cyclotomic(m, memo);
  data->degree = static_cast<int>(data->phi.size()) - 1;
  const int deg = data->degree;
  std::vector<Rational> current(deg, Rational(0));
  current[0] = 1;
  if (deg == 0) throw Error("degenerate cyclotomic polynomial");
  for (int k = 0; k < m; ++k) {
    data->powers.push_back(current);
    // multiply by z and reduce with z^deg = -sum phi_i z^i
    Rational carry = current[deg - 1];
    for (int i = deg - 1; i > 0; --i) current[i] = current[i - 1];
    current[0] = 0;
    if (carry != 0)
      for (int i = 0; i < deg; ++i) current[i] -= carry * Rational(data->phi[i]);
  }
  const FieldData* raw = data.get();
  if (m <= kMaxCachedConductor) {
    static std::vector<std::unique_ptr<FieldData>> owned;
    owned.push_back(std::move(data));
    cache[m].store(raw, std::memory_order_release);
  } else {
    overflow[m] = std::move(data);
  }
  return *raw;
}

void unify(CycRational& a, CycRational& b) {
  if (a.conductor() == b.conductor()) return;
  if (a.is_rational()) {
    a = a.promoted(b.conductor());
  } else if (b.is_rational()) {
    b = b.promoted(a.conductor());
  } else {
    throw Error("cyclotomic conductor mismatch: " + std::to_string(a.conductor()) +
                " vs " + std::to_string(b.conductor()));
  }
}

}  // namespace

const IntPoly& cyclotomic_polynomial(int m) { return field(m).phi; }

int euler_phi(int m) { return field(m).degree; }

CycRational::CycRational() : m_(1), coeffs_(1, Rational(0)) {}

CycRational::CycRational(long value) : m_(1), coeffs_(1, Rational(value)) {}

CycRational::CycRational(Rational value, int m) : m_(m) {
  coeffs_.assign(static_cast<std::size_t>(field(m).degree), Rational(0));
  coeffs_[0] = std::move(value);
}

CycRational::CycRational(int m, const std::vector<Rational>& coeffs) : m_(m) {
  const FieldData& f = field(m);
  coeffs_.assign(static_cast<std::size_t>(f.degree), Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const auto& power = f.powers[k % static_cast<std::size_t>(m)];
    for (int i = 0; i < f.degree; ++i)
      if (power[i] != 0) coeffs_[i] += coeffs[k] * power[i];
  }
}

CycRational CycRational::zeta_power(int m, long k) {
  const FieldData& f = field(m);
  long r = k % m;
  if (r < 0) r += m;
  CycRational out;
  out.m_ = m;
  out.coeffs_ = f.powers[static_cast<std::size_t>(r)];
  return out;
}

bool CycRational::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

bool CycRational::is_one() const { return is_rational() && coeffs_[0] == 1; }

bool CycRational::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& q) { return q == 0; });
}

CycRational CycRational::promoted(int m) const {
  if (m == m_) return *this;
  if (!is_rational()) throw Error("cannot change the conductor of an irrational element");
  return CycRational(coeffs_[0], m);
}

CycRational& CycRational::operator+=(const CycRational& other) {
  if (other.m_ != m_) {
    CycRational b = other;
    unify(*this, b);
    return *this += b;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycRational& CycRational::operator-=(const CycRational& other) {
  if (other.m_ != m_) {
    CycRational b = other;
    unify(*this, b);
    return *this -= b;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CycRational& CycRational::operator*=(const CycRational& other) {
  if (other.m_ != m_) {
    CycRational b = other;
    unify(*this, b);
    return *this *= b;
  }
  const std::size_t deg = coeffs_.size();
  if (deg == 1) {
    coeffs_[0] *= other.coeffs_[0];
    return *this;
  }
  if (other.is_rational()) {
    for (auto& q : coeffs_) q *= other.coeffs_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * deg - 1, Rational(0));
  for (std::size_t i = 0; i < deg; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j)
      if (other.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  *this = CycRational(m_, prod);
  return *this;
}

CycRational CycRational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return CycRational(Rational(1) / coeffs_[0], m_);
  const FieldData& f = field(m_);
  // Extended Euclid: find s with s*a + t*Phi = gcd (a nonzero constant).
  QPoly r0(f.phi.begin(), f.phi.end());
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw DivisionByZero();
  for (auto& q : s1) q /= r1[0];
  return CycRational(m_, s1);
}

CycRational& CycRational::operator/=(const CycRational& other) { return *this *= other.inverse(); }

CycRational CycRational::operator-() const {
  CycRational out = *this;
  for (auto& q : out.coeffs_) q = -q;
  return out;
}

bool operator==(const CycRational& a, const CycRational& b) {
  if (a.m_ == b.m_) return a.coeffs_ == b.coeffs_;
  return a.is_rational() && b.is_rational() && a.coeffs_[0] == b.coeffs_[0];
}

std::string CycRational::to_string() const {
  ParamScalar s(*this);
  return s.to_string();
}

CycRational cyc_invert(const CycRational& a) { return a.inverse(); }

std::ostream& operator<<(std::ostream& os, const CycRational& a) { return os << a.to_string(); }

std::string parameter_name(ParamIndex index) {
  if (index == 0) return "c1";
  return "c[" + std::to_string(index) + "]";
}

ParamScalar::ParamScalar(const CycRational& constant) {
  if (!constant.is_zero()) terms_.emplace(ParamMonomial{}, constant);
}

ParamScalar::ParamScalar(long constant) : ParamScalar(CycRational(constant)) {}

ParamScalar ParamScalar::parameter(ParamIndex index) {
  if (index < 0) throw InvalidSpec("negative parameter index");
  ParamScalar out;
  ParamMonomial mono(static_cast<std::size_t>(index) + 1, 0);
  mono[index] = 1;
  out.terms_.emplace(std::move(mono), CycRational(1));
  return out;
}

bool ParamScalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

CycRational ParamScalar::constant_term() const {
  auto it = terms_.find(ParamMonomial{});
  return it == terms_.end() ? CycRational() : it->second;
}

int ParamScalar::max_parameter() const {
  int best = -1;
  for (const auto& [mono, c] : terms_) best = std::max(best, static_cast<int>(mono.size()) - 1);
  return best;
}

void ParamScalar::add_term(const ParamMonomial& mono, const CycRational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

ParamScalar& ParamScalar::operator*=(const CycRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [mono, coeff] : terms_) coeff *= c;
  return *this;
}

ParamScalar& ParamScalar::operator*=(const ParamScalar& other) {
  *this = *this * other;
  return *this;
}

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
  ParamScalar out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      ParamMonomial mono(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < ma.size(); ++i) mono[i] += ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i) mono[i] += mb[i];
      out.add_term(mono, ca * cb);
    }
  }
  return out;
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar out = *this;
  for (auto& [mono, c] : out.terms_) c = -c;
  return out;
}

ParamScalar ParamScalar::substitute(const std::function<ParamScalar(ParamIndex)>& image) const {
  ParamScalar out;
  for (const auto& [mono, c] : terms_) {
    ParamScalar term(c);
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      ParamScalar base = image(static_cast<ParamIndex>(i));
      for (int e = 0; e < mono[i]; ++e) term = term * base;
    }
    out += term;
  }
  return out;
}

std::vector<ScalarSummand> expand(const ParamScalar& s) {
  std::vector<ScalarSummand> out;
  for (const auto& [mono, c] : s.terms()) {
    for (std::size_t k = 0; k < c.coords().size(); ++k) {
      if (c.coords()[k] == 0) continue;
      out.push_back(ScalarSummand{c.coords()[k], static_cast<int>(k), mono});
    }
  }
  return out;
}

std::string format_unsigned_summand(const ScalarSummand& summand) {
  std::vector<std::string> factors;
  Rational q = abs(summand.q);
  if (q != 1) factors.push_back(q.get_str());
  if (summand.zeta_exponent == 1) factors.emplace_back("z");
  if (summand.zeta_exponent > 1) factors.push_back("z^" + std::to_string(summand.zeta_exponent));
  for (std::size_t i = 0; i < summand.monomial.size(); ++i) {
    const int e = summand.monomial[i];
    if (e == 0) continue;
    std::string f = parameter_name(static_cast<ParamIndex>(i));
    if (e > 1) f += "^" + std::to_string(e);
    factors.push_back(std::move(f));
  }
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += '*';
    out += factors[i];
  }
  return out;
}

std::string format_linear_combination(const std::vector<std::pair<ParamScalar, std::string>>& parts) {
  std::string out;
  bool first = true;
  for (const auto& [coeff, letters] : parts) {
    for (const auto& summand : expand(coeff)) {
      const bool negative = summand.q < 0;
      if (first) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string body = format_unsigned_summand(summand);
      if (!body.empty() && !letters.empty()) body += '*';
      body += letters;
      out += body.empty() ? "1" : body;
    }
  }
  return first ? "0" : out;
}

std::string ParamScalar::to_string() const { return format_linear_combination({{*this, ""}}); }

std::ostream& operator<<(std::ostream& os, const ParamScalar& s) { return os << s.to_string(); }

CycRational specialize(const ParamScalar& s, const ParamAssignment& assignment) {
  CycRational out;
  for (const auto& [mono, c] : s.terms()) {
    CycRational term = c;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      auto it = assignment.find(static_cast<ParamIndex>(i));
      if (it == assignment.end())
        throw MissingParameter("no value for parameter " + parameter_name(static_cast<ParamIndex>(i)));
      for (int e = 0; e < mono[i]; ++e) term *= it->second;
    }
    out += term;
  }
  return out;
}

}  // namespace cherednik
