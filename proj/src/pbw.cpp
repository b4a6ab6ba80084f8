#include "cherednik/pbw.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "cherednik/errors.hpp"
#include "cherednik/parallel.hpp"

namespace cherednik {

std::string kind_name(AlgebraKind kind) { return kind == AlgebraKind::rational ? "rational" : "braided"; }

int PBWTerm::x_degree() const {
  int d = 0;
  for (auto v : x) d += v;
  return d;
}

int PBWTerm::y_degree() const {
  int d = 0;
  for (auto v : y) d += v;
  return d;
}

unsigned PBWTerm::odd_x_mask() const {
  unsigned mask = 0;
  for (int i = 0; i < kMaxRank; ++i)
    if (x[i] % 2) mask |= 1u << i;
  return mask;
}

unsigned PBWTerm::odd_y_mask() const {
  unsigned mask = 0;
  for (int i = 0; i < kMaxRank; ++i)
    if (y[i] % 2) mask |= 1u << i;
  return mask;
}

namespace {

int group_category(const MonomialMatrix& g) {
  if (g.is_identity()) return 0;
  return g.is_diagonal() ? 2 : 1;
}

}  // namespace

bool TermOrder::operator()(const PBWTerm& a, const PBWTerm& b) const {
  const int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  if (a.x != b.x) return a.x > b.x;
  const int ca = group_category(a.g), cb = group_category(b.g);
  if (ca != cb) return ca < cb;
  if (a.g != b.g) return a.g < b.g;
  return a.y > b.y;
}

// --- Algebra ---------------------------------------------------------------

Algebra::Algebra(GroupSpec group, AlgebraKind kind, int sign, long long size_limit)
    : group_(group), kind_(kind), sign_(sign), size_limit_(size_limit) {}

std::shared_ptr<const Algebra> Algebra::create(GroupSpec base, AlgebraKind kind, int parameter_sign,
                                               long long size_limit) {
  base.flavor = kind == AlgebraKind::rational ? Flavor::complex : Flavor::mystic;
  base.validate();
  if (!base.algebra_admissible())
    throw InvalidSpec("the algebra needs n >= 3, or n = 2 with p odd; got " + base.to_string());
  if (parameter_sign != 1 && parameter_sign != -1) throw InvalidSpec("parameter sign must be +1 or -1");
  std::shared_ptr<Algebra> alg(new Algebra(base, kind, parameter_sign, size_limit));
  const int n = base.n, m = base.m;
  const bool braided = kind == AlgebraKind::braided;
  alg->rhs_.assign(static_cast<std::size_t>(n * n), GroupAlgebraElement(base));
  auto reflection = [&](int i, int j, int k) {
    return braided ? make_sigma(n, m, i, j, k) : make_s(n, m, i, j, k);
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      GroupAlgebraElement& rhs = alg->rhs_[(i - 1) * n + (j - 1)];
      if (i != j) {
        for (int k = 0; k < m; ++k)
          rhs.add_term(reflection(i, j, k), alg->c1() * CycRational::zeta_power(m, -k));
        continue;
      }
      const int pair_sign = braided ? 1 : -1;
      rhs.add_term(MonomialMatrix(n, m), ParamScalar(1));
      for (int j2 = 1; j2 <= n; ++j2) {
        if (j2 == i) continue;
        for (int k = 0; k < m; ++k) rhs.add_term(reflection(i, j2, k), alg->c1() * CycRational(pair_sign));
      }
      for (int a = 1; a < base.m / base.p; ++a)
        rhs.add_term(make_t(n, m, i, a * base.p), alg->c_zeta(a) * CycRational(pair_sign));
    }
  }
  return alg;
}

ParamScalar Algebra::c1() const { return ParamScalar::parameter(0) * CycRational(sign_); }

ParamScalar Algebra::c_zeta(int k) const {
  if (k < 1 || k >= group_.m / group_.p) throw IndexOutOfRange("parameter index c[" + std::to_string(k) + "]");
  return ParamScalar::parameter(k) * CycRational(sign_);
}

const GroupAlgebraElement& Algebra::yx_rhs(int i, int j) const {
  if (i < 1 || i > n() || j < 1 || j > n()) throw IndexOutOfRange("relation index");
  return rhs_[(i - 1) * n() + (j - 1)];
}

std::string Algebra::name() const {
  std::ostringstream os;
  os << (kind_ == AlgebraKind::rational ? "H_c(" : "Hbar_c(") << group_.to_string() << ")";
  if (sign_ < 0) os << "[c -> -c]";
  return os.str();
}

std::shared_ptr<const std::vector<ScaledTerm>> Algebra::straightened_yx(const Degrees& b, const Degrees& c) const {
  const auto key = std::make_pair(b, c);
  {
    std::shared_lock lock(cache_mutex_);
    auto it = yx_cache_.find(key);
    if (it != yx_cache_.end()) return it->second;
  }
  Word word;
  for (int i = 0; i < n(); ++i)
    for (int e = 0; e < b[i]; ++e) word.push_back(Letter::Y(i + 1));
  for (int i = 0; i < n(); ++i)
    for (int e = 0; e < c[i]; ++e) word.push_back(Letter::X(i + 1));
  PBWElement nf = straighten(shared_from_this(), word);
  auto table = std::make_shared<std::vector<ScaledTerm>>();
  for (const auto& [t, coeff] : nf.terms()) table->push_back(ScaledTerm{t, coeff});
  std::unique_lock lock(cache_mutex_);
  auto [it, inserted] = yx_cache_.try_emplace(key, std::move(table));
  return it->second;
}

const std::vector<MonomialMatrix>& Algebra::elements() const {
  if (group_.order() > size_limit_)
    throw SizeLimitExceeded(group_.to_string() + " has " + std::to_string(group_.order()) +
                            " elements, above the limit " + std::to_string(size_limit_));
  std::call_once(elements_once_, [&] { elements_ = enumerate(group_, size_limit_); });
  return elements_;
}

void Algebra::clear_cache() const {
  std::unique_lock lock(cache_mutex_);
  yx_cache_.clear();
}

std::size_t Algebra::cache_size() const {
  std::shared_lock lock(cache_mutex_);
  return yx_cache_.size();
}

// --- PBWElement ----------------------------------------------------------

PBWElement PBWElement::scalar(const AlgebraPtr& alg, const ParamScalar& c) {
  return group(alg, MonomialMatrix(alg->n(), alg->m()), c);
}

PBWElement PBWElement::x(const AlgebraPtr& alg, int i, int power) {
  if (i < 1 || i > alg->n()) throw AlphabetError("x" + std::to_string(i) + " is not a generator");
  if (power < 0 || power > 255) throw AlphabetError("exponent out of range");
  PBWTerm t;
  t.g = MonomialMatrix(alg->n(), alg->m());
  t.x[i - 1] = static_cast<std::uint8_t>(power);
  PBWElement out(alg);
  out.add_term(t, ParamScalar(1));
  return out;
}

PBWElement PBWElement::y(const AlgebraPtr& alg, int i, int power) {
  if (i < 1 || i > alg->n()) throw AlphabetError("y" + std::to_string(i) + " is not a generator");
  if (power < 0 || power > 255) throw AlphabetError("exponent out of range");
  PBWTerm t;
  t.g = MonomialMatrix(alg->n(), alg->m());
  t.y[i - 1] = static_cast<std::uint8_t>(power);
  PBWElement out(alg);
  out.add_term(t, ParamScalar(1));
  return out;
}

PBWElement PBWElement::group(const AlgebraPtr& alg, const MonomialMatrix& g, const ParamScalar& c) {
  if (!alg->contains(g)) throw MembershipError(g.canonical() + " is not in " + alg->group().to_string());
  PBWTerm t;
  t.g = g;
  PBWElement out(alg);
  out.add_term(t, c);
  return out;
}

PBWElement PBWElement::monomial(const AlgebraPtr& alg, const Degrees& x, const MonomialMatrix& g, const Degrees& y) {
  if (!alg->contains(g)) throw MembershipError(g.canonical() + " is not in " + alg->group().to_string());
  PBWElement out(alg);
  out.add_term(PBWTerm{x, g, y}, ParamScalar(1));
  return out;
}

PBWElement PBWElement::from_group_algebra(const AlgebraPtr& alg, const GroupAlgebraElement& u) {
  PBWElement out(alg);
  for (const auto& [g, c] : u.terms()) {
    if (!alg->contains(g)) throw MembershipError(g.canonical() + " is not in " + alg->group().to_string());
    PBWTerm t;
    t.g = g;
    out.add_term(t, c);
  }
  return out;
}

ParamScalar PBWElement::coefficient(const PBWTerm& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? ParamScalar() : it->second;
}

void PBWElement::add_term(const PBWTerm& t, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void PBWElement::adopt(const PBWElement& other) {
  if (!algebra_) {
    algebra_ = other.algebra_;
  } else if (other.algebra_ && other.algebra_ != algebra_) {
    throw KindMismatch("elements of " + algebra_->name() + " and " + other.algebra_->name());
  }
}

PBWElement& PBWElement::operator+=(const PBWElement& other) {
  adopt(other);
  for (const auto& [t, c] : other.terms_) add_term(t, c);
  return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& other) {
  adopt(other);
  for (const auto& [t, c] : other.terms_) add_term(t, -c);
  return *this;
}

PBWElement& PBWElement::operator*=(const ParamScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, coeff] : terms_) coeff *= c;
  return *this;
}

PBWElement PBWElement::operator-() const {
  PBWElement out = *this;
  for (auto& [t, c] : out.terms_) c = -c;
  return out;
}

PBWElement operator*(const PBWElement& a, const PBWElement& b) { return multiply(a, b); }

PBWElement PBWElement::specialize(const ParamAssignment& assignment) const {
  PBWElement out(algebra_);
  for (const auto& [t, c] : terms_) out.add_term(t, ParamScalar(cherednik::specialize(c, assignment)));
  return out;
}

PBWElement PBWElement::substitute(const std::function<ParamScalar(ParamIndex)>& image) const {
  PBWElement out(algebra_);
  for (const auto& [t, c] : terms_) out.add_term(t, c.substitute(image));
  return out;
}

GroupAlgebraElement PBWElement::group_part() const {
  GroupAlgebraElement out(algebra_ ? algebra_->group() : GroupSpec{});
  for (const auto& [t, c] : terms_)
    if (t.total_degree() == 0) out.add_term(t.g, c);
  return out;
}

bool PBWElement::is_degree_zero() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.total_degree() == 0; });
}

namespace {

std::string letters_of(const PBWTerm& t, int n, bool prefer_sigma) {
  std::vector<std::string> parts;
  for (int i = 0; i < n; ++i) {
    if (!t.x[i]) continue;
    std::string s = "x" + std::to_string(i + 1);
    if (t.x[i] > 1) s += "^" + std::to_string(t.x[i]);
    parts.push_back(std::move(s));
  }
  if (!t.g.is_identity()) parts.push_back(format_group_element(t.g, prefer_sigma));
  for (int i = 0; i < n; ++i) {
    if (!t.y[i]) continue;
    std::string s = "y" + std::to_string(i + 1);
    if (t.y[i] > 1) s += "^" + std::to_string(t.y[i]);
    parts.push_back(std::move(s));
  }
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += '*';
    out += parts[k];
  }
  return out;
}

}  // namespace

std::string PBWElement::to_string() const {
  if (terms_.empty()) return "0";
  const bool braided = algebra_->kind() == AlgebraKind::braided;
  std::vector<std::pair<ParamScalar, std::string>> parts;
  for (const auto& [t, c] : terms_) parts.emplace_back(c, letters_of(t, algebra_->n(), braided));
  return format_linear_combination(parts);
}

std::ostream& operator<<(std::ostream& os, const PBWElement& u) { return os << u.to_string(); }

// --- rewriting -------------------------------------------------------------

Word word_of(const PBWTerm& t) {
  Word w;
  for (int i = 0; i < kMaxRank; ++i)
    for (int e = 0; e < t.x[i]; ++e) w.push_back(Letter{Letter::Type::x, i, {}});
  if (!t.g.is_identity()) w.push_back(Letter::G(t.g));
  for (int i = 0; i < kMaxRank; ++i)
    for (int e = 0; e < t.y[i]; ++e) w.push_back(Letter{Letter::Type::y, i, {}});
  return w;
}

namespace {

using LT = Letter::Type;

bool pair_reducible(const Letter& a, const Letter& b) {
  switch (a.type) {
    case LT::x:
      return b.type == LT::x && a.index > b.index;
    case LT::group:
      return b.type == LT::group || b.type == LT::x;
    case LT::y:
      return b.type != LT::y || a.index > b.index;
  }
  return false;
}

bool reducible_at(const Word& w, std::size_t pos) {
  if (w[pos].type == LT::group && w[pos].g.is_identity()) return true;
  return pos + 1 < w.size() && pair_reducible(w[pos], w[pos + 1]);
}

PBWTerm term_of_normal_word(const Algebra& alg, const Word& w) {
  PBWTerm t;
  t.g = MonomialMatrix(alg.n(), alg.m());
  for (const auto& letter : w) {
    switch (letter.type) {
      case LT::x:
        ++t.x[letter.index];
        break;
      case LT::y:
        ++t.y[letter.index];
        break;
      case LT::group:
        t.g = letter.g;
        break;
    }
  }
  return t;
}

void validate_word(const Algebra& alg, const Word& w) {
  for (const auto& letter : w) {
    if (letter.type == LT::group) {
      if (letter.g.rank() != alg.n() || letter.g.conductor() != alg.m())
        throw AlphabetError("group letter of the wrong shape: " + letter.g.canonical());
      if (!alg.contains(letter.g))
        throw MembershipError(letter.g.canonical() + " is not in " + alg.group().to_string());
    } else if (letter.index < 0 || letter.index >= alg.n()) {
      throw AlphabetError("generator index " + std::to_string(letter.index + 1) + " out of range");
    }
  }
}

template <class Emit>
void rewrite_at(const Algebra& alg, const Word& w, std::size_t pos, Emit&& emit) {
  const int m = alg.m();
  auto splice = [&](std::size_t drop, std::initializer_list<Letter> insert) {
    Word out;
    out.reserve(w.size() + insert.size());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(pos));
    out.insert(out.end(), insert.begin(), insert.end());
    out.insert(out.end(), w.begin() + static_cast<long>(pos + drop), w.end());
    return out;
  };
  const Letter& a = w[pos];
  if (a.type == LT::group && a.g.is_identity()) {
    emit(splice(1, {}), ParamScalar(1));
    return;
  }
  const Letter& b = w[pos + 1];
  if (a.type == LT::group && b.type == LT::group) {
    MonomialMatrix gh = a.g * b.g;
    if (gh.is_identity()) {
      emit(splice(2, {}), ParamScalar(1));
    } else {
      emit(splice(2, {Letter::G(gh)}), ParamScalar(1));
    }
    return;
  }
  if (a.type == LT::group && b.type == LT::x) {
    // g x_i = zeta^{e_i} x_{pi(i)} g
    const int i = b.index;
    emit(splice(2, {Letter{LT::x, a.g.image(i), {}}, a}), ParamScalar(CycRational::zeta_power(m, a.g.exponent(i))));
    return;
  }
  if (a.type == LT::y && b.type == LT::group) {
    // y_i g = g g^-1(y_i) = zeta^{e_{pi^-1(i)}} g y_{pi^-1(i)}
    const int j = b.g.preimage(a.index);
    emit(splice(2, {b, Letter{LT::y, j, {}}}), ParamScalar(CycRational::zeta_power(m, b.g.exponent(j))));
    return;
  }
  if (a.type == LT::y && b.type == LT::x) {
    const int i = a.index + 1, j = b.index + 1;
    emit(splice(2, {b, a}), ParamScalar(alg.yx_sign(i, j)));
    for (const auto& [g, c] : alg.yx_rhs(i, j).terms()) {
      if (g.is_identity()) {
        emit(splice(2, {}), c);
      } else {
        emit(splice(2, {Letter::G(g)}), c);
      }
    }
    return;
  }
  // x_j x_i or y_j y_i with j > i
  emit(splice(2, {b, a}), ParamScalar(alg.exchange_sign()));
}

}  // namespace

PBWElement straighten(const AlgebraPtr& alg, const WordSum& words, const StraightenOptions& options) {
  std::map<Word, ParamScalar> pending;
  auto push = [&](Word w, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = pending.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) pending.erase(it);
    }
  };
  for (const auto& [w, c] : words) {
    validate_word(*alg, w);
    push(w, c);
  }
  PBWElement result(alg);
  while (!pending.empty()) {
    auto it = pending.begin();
    if (options.random_order) std::advance(it, static_cast<long>(options.random_order->below(pending.size())));
    Word w = it->first;
    ParamScalar c = it->second;
    pending.erase(it);
    std::size_t pos = w.size();
    if (options.random_order) {
      std::vector<std::size_t> spots;
      for (std::size_t k = 0; k < w.size(); ++k)
        if (reducible_at(w, k)) spots.push_back(k);
      if (!spots.empty()) pos = options.random_order->pick(spots);
    } else {
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (reducible_at(w, k)) {
          pos = k;
          break;
        }
      }
    }
    if (pos == w.size()) {
      result.add_term(term_of_normal_word(*alg, w), c);
      continue;
    }
    rewrite_at(*alg, w, pos, [&](Word next, const ParamScalar& factor) { push(std::move(next), c * factor); });
  }
  return result;
}

PBWElement straighten(const AlgebraPtr& alg, const Word& word, const StraightenOptions& options) {
  return straighten(alg, WordSum{{word, ParamScalar(1)}}, options);
}

// --- multiplication ----------------------------------------------------------

namespace {

struct Moved {
  long zeta = 0;
  int sign = 1;
  Degrees degrees{};
};

// g applied to x^p (dual = false) or y^p (dual = true).
Moved act_on_monomial(const MonomialMatrix& g, const Degrees& p, bool braided, bool dual) {
  Moved out;
  const int n = g.rank();
  int parity = 0;
  for (int j = 0; j < n; ++j) {
    if (!p[j]) continue;
    out.zeta += static_cast<long>(g.exponent(j)) * p[j];
    out.degrees[g.image(j)] = p[j];
    if (braided)
      for (int j2 = j + 1; j2 < n; ++j2)
        if (g.image(j) > g.image(j2)) parity += p[j] * p[j2];
  }
  if (dual) out.zeta = -out.zeta;
  out.sign = parity % 2 ? -1 : 1;
  return out;
}

// Sign of x^a x^b -> x^{a+b}.
int concatenation_sign(const Degrees& a, const Degrees& b, int n, bool braided) {
  if (!braided) return 1;
  int parity = 0;
  for (int i = 0; i < n; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < i; ++j) parity += a[i] * b[j];
  }
  return parity % 2 ? -1 : 1;
}

Degrees add_degrees(const Degrees& a, const Degrees& b) {
  Degrees out{};
  for (int i = 0; i < kMaxRank; ++i) {
    const int v = a[i] + b[i];
    if (v > 255) throw AlphabetError("exponent overflow");
    out[i] = static_cast<std::uint8_t>(v);
  }
  return out;
}

void multiply_terms(const Algebra& alg, const PBWTerm& A, const ParamScalar& ca, const PBWTerm& B,
                    const ParamScalar& cb, std::vector<ScaledTerm>& out) {
  const bool braided = alg.kind() == AlgebraKind::braided;
  const int n = alg.n(), m = alg.m();
  const auto table = alg.straightened_yx(A.y, B.x);
  const ParamScalar base = ca * cb;
  const MonomialMatrix h_inv = B.g.inverse();
  for (const auto& [t, c] : *table) {
    // x^a g (x^c' g' y^b') h y^d
    const Moved mx = act_on_monomial(A.g, t.x, braided, false);
    const int s1 = concatenation_sign(A.x, mx.degrees, n, braided);
    const Moved my = act_on_monomial(h_inv, t.y, braided, true);
    const int s2 = concatenation_sign(my.degrees, B.y, n, braided);
    PBWTerm term{add_degrees(A.x, mx.degrees), A.g * t.g * B.g, add_degrees(my.degrees, B.y)};
    CycRational factor = CycRational::zeta_power(m, mx.zeta + my.zeta) * CycRational(mx.sign * my.sign * s1 * s2);
    out.push_back(ScaledTerm{std::move(term), base * c * factor});
  }
}

PBWElement multiply_impl(const PBWElement& a, const PBWElement& b, bool serial) {
  const AlgebraPtr alg = a.algebra() ? a.algebra() : b.algebra();
  if (a.algebra() && b.algebra() && a.algebra() != b.algebra())
    throw KindMismatch("multiplying elements of " + a.algebra()->name() + " and " + b.algebra()->name());
  PBWElement result(alg);
  if (a.is_zero() || b.is_zero()) return result;
  std::vector<std::pair<const PBWTerm*, const ParamScalar*>> left, right;
  for (const auto& [t, c] : a.terms()) left.emplace_back(&t, &c);
  for (const auto& [t, c] : b.terms()) right.emplace_back(&t, &c);
  const std::size_t count = left.size() * right.size();
  std::vector<std::vector<ScaledTerm>> partial(count);
  auto body = [&](std::size_t k) {
    const auto& [ta, ca] = left[k / right.size()];
    const auto& [tb, cb] = right[k % right.size()];
    multiply_terms(*alg, *ta, *ca, *tb, *cb, partial[k]);
  };
  if (serial) {
    for (std::size_t k = 0; k < count; ++k) body(k);
  } else {
    parallel_for(count, body);
  }
  for (const auto& chunk : partial)
    for (const auto& st : chunk) result.add_term(st.term, st.coeff);
  return result;
}

}  // namespace

PBWElement multiply(const PBWElement& a, const PBWElement& b) { return multiply_impl(a, b, false); }

PBWElement multiply_serial(const PBWElement& a, const PBWElement& b) { return multiply_impl(a, b, true); }

PBWElement multiply_by_rewriting(const PBWElement& a, const PBWElement& b) {
  const AlgebraPtr alg = a.algebra() ? a.algebra() : b.algebra();
  if (!alg) return PBWElement();
  WordSum words;
  for (const auto& [ta, ca] : a.terms()) {
    const Word wa = word_of(ta);
    for (const auto& [tb, cb] : b.terms()) {
      Word w = wa;
      const Word wb = word_of(tb);
      w.insert(w.end(), wb.begin(), wb.end());
      words.emplace_back(std::move(w), ca * cb);
    }
  }
  return straighten(alg, words);
}

PBWElement commutator(const PBWElement& a, const PBWElement& b) { return multiply(a, b) - multiply(b, a); }

// --- T-action ----------------------------------------------------------------

std::pair<int, PBWTerm> gamma_term(unsigned mask, const PBWTerm& t) {
  int parity = 0;
  for (int i = 0; i < kMaxRank; ++i)
    if (mask & (1u << i)) parity += t.x[i] + t.y[i];
  PBWTerm out{t.x, gamma_conjugate(mask, t.g), t.y};
  return {parity % 2 ? -1 : 1, out};
}

PBWElement t_action(unsigned mask, const PBWElement& u) {
  if (u.algebra() && u.algebra()->m() % 2 != 0) throw InvalidSpec("the T-action needs m even");
  PBWElement out(u.algebra());
  for (const auto& [t, c] : u.terms()) {
    auto [sign, moved] = gamma_term(mask, t);
    out.add_term(moved, sign > 0 ? c : -c);
  }
  return out;
}

PBWElement gamma_action(int i, const PBWElement& u) {
  if (u.algebra() && (i < 1 || i > u.algebra()->n())) throw IndexOutOfRange("gamma index");
  return t_action(1u << (i - 1), u);
}

PBWElement eigen_project(TCharacter I, const PBWElement& u) {
  PBWElement out(u.algebra());
  if (!u.algebra()) return out;
  const int n = u.algebra()->n();
  const CycRational weight(Rational(1, 1u << n));
  for (unsigned S = 0; S < (1u << n); ++S) {
    PBWElement moved = t_action(S, u);
    moved *= ParamScalar(weight * CycRational(I.value_on(S)));
    out += moved;
  }
  return out;
}

std::map<unsigned, PBWElement> eigencomponents(const PBWElement& u) {
  std::map<unsigned, PBWElement> out;
  if (!u.algebra()) return out;
  if (u.algebra()->m() % 2 != 0) throw InvalidSpec("the T-action needs m even");
  for (const auto& [t, c] : u.terms()) {
    const unsigned letters = t.odd_x_mask() ^ t.odd_y_mask();
    for (const auto& [K, part] : group_eigencomponents(u.algebra()->group(), t.g)) {
      auto [it, inserted] = out.try_emplace(letters ^ K, PBWElement(u.algebra()));
      for (const auto& [g, cg] : part.terms()) it->second.add_term(PBWTerm{t.x, g, t.y}, c * cg);
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero()) {
      it = out.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

std::vector<std::pair<std::string, PBWElement>> algebra_generators(const AlgebraPtr& alg) {
  std::vector<std::pair<std::string, PBWElement>> out;
  for (int i = 1; i <= alg->n(); ++i) out.emplace_back("x" + std::to_string(i), PBWElement::x(alg, i));
  for (int i = 1; i <= alg->n(); ++i) out.emplace_back("y" + std::to_string(i), PBWElement::y(alg, i));
  const bool braided = alg->kind() == AlgebraKind::braided;
  for (const auto& g : group_generators(alg->group()))
    out.emplace_back(format_group_element(g, braided), PBWElement::group(alg, g));
  return out;
}

PBWElement random_element(const AlgebraPtr& alg, Rng& rng, const RandomElementOptions& options) {
  const int n = alg->n(), m = alg->m();
  const auto& elements = alg->elements();
  PBWElement out(alg);
  const int terms = rng.range(1, std::max(1, options.max_terms));
  for (int k = 0; k < terms; ++k) {
    PBWTerm t;
    t.g = rng.pick(elements);
    const int degree = rng.range(0, options.max_degree);
    for (int d = 0; d < degree; ++d) {
      const int slot = rng.range(0, 2 * n - 1);
      if (slot < n) {
        ++t.x[slot];
      } else {
        ++t.y[slot - n];
      }
    }
    CycRational base;
    switch (rng.below(3)) {
      case 0:
        base = CycRational(1);
        break;
      case 1:
        base = CycRational(Rational(1, 2));
        break;
      default:
        base = CycRational::zeta_power(m, 1);
        break;
    }
    if (rng.coin()) base = -base;
    ParamScalar coeff(base);
    // pick 1 or one of the parameters
    const int which = rng.range(0, alg->parameter_count());
    if (which > 0) coeff *= ParamScalar::parameter(which - 1);
    out.add_term(t, coeff);
  }
  return out;
}

long long graded_dimension(const Algebra& alg, int d, long long size_limit) {
  const long long order = alg.group().order();
  if (order > size_limit) throw SizeLimitExceeded("group order above the size limit");
  // C(d + 2n - 1, 2n - 1)
  const int k = 2 * alg.n() - 1;
  long long count = 1;
  for (int i = 1; i <= k; ++i) count = count * (d + i) / i;
  return order * count;
}

GroupAlgebraElement kappa_commutator(const Algebra& alg, int i, int j) {
  if (alg.kind() != AlgebraKind::rational) throw KindMismatch("the kappa form is for the rational kind");
  const int m = alg.m();
  GroupAlgebraElement out(alg.group());
  if (i == j) out.add_term(MonomialMatrix(alg.n(), m), ParamScalar(1));
  for (const auto& s : reflections(alg.group())) {
    // <y_i, (1 - s) x_j>
    CycRational pairing(i == j ? 1 : 0);
    if (s.image(j - 1) == i - 1) pairing -= CycRational::zeta_power(m, s.exponent(j - 1));
    if (pairing.is_zero()) continue;
    ParamScalar c_s;
    ReflectionData r;
    if (as_t_reflection(s, r)) {
      const CycRational zeta = CycRational::zeta_power(m, r.k);
      c_s = -alg.c_zeta(r.k / alg.p()) * cyc_invert(CycRational(1) - zeta);
    } else {
      c_s = -alg.c1();
    }
    out.add_term(s, c_s * pairing);
  }
  return out;
}

GroupAlgebraElement printed_offdiagonal_rhs(const Algebra& alg, int i, int j) {
  const int n = alg.n(), m = alg.m();
  GroupAlgebraElement out(alg.group());
  for (int k = 0; k < m; ++k) {
    const MonomialMatrix s = alg.kind() == AlgebraKind::braided ? make_sigma(n, m, i, j, k) : make_s(n, m, i, j, k);
    out.add_term(s, alg.c1() * CycRational::zeta_power(m, k));
  }
  return out;
}

}  // namespace cherednik
