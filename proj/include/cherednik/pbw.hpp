#pragma once

// PBW normal forms x^k g y^l for the rational Cherednik algebra of G(m,p,n)
// and the negative braided Cherednik algebra of mu(G(m,p,n)).

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/group_algebra.hpp"
#include "cherednik/groups.hpp"
#include "cherednik/rng.hpp"
#include "cherednik/scalars.hpp"

namespace cherednik {

enum class AlgebraKind { rational, braided };

std::string kind_name(AlgebraKind kind);

using Degrees = std::array<std::uint8_t, kMaxRank>;

struct PBWTerm {
  Degrees x{};
  MonomialMatrix g;
  Degrees y{};

  int x_degree() const;
  int y_degree() const;
  int total_degree() const { return x_degree() + y_degree(); }
  unsigned odd_x_mask() const;
  unsigned odd_y_mask() const;

  friend bool operator==(const PBWTerm&, const PBWTerm&) = default;
  friend auto operator<=>(const PBWTerm&, const PBWTerm&) = default;
};

// Display order: total degree descending, x exponents descending, then the
// group part (identity, permutation-nontrivial, diagonal), then y exponents.
struct TermOrder {
  bool operator()(const PBWTerm& a, const PBWTerm& b) const;
};

class PBWElement;

struct ScaledTerm {
  PBWTerm term;
  ParamScalar coeff;
};

class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  // parameter_sign = -1 builds the algebra at the negated parameters, so that
  // its c1 stands for -c1 of the formal ring.
  static std::shared_ptr<const Algebra> create(GroupSpec base, AlgebraKind kind, int parameter_sign = 1,
                                               long long size_limit = kDefaultSizeLimit);

  AlgebraKind kind() const noexcept { return kind_; }
  const GroupSpec& group() const noexcept { return group_; }
  int n() const noexcept { return group_.n; }
  int m() const noexcept { return group_.m; }
  int p() const noexcept { return group_.p; }
  int parameter_sign() const noexcept { return sign_; }
  // c1 and c[1..m/p-1]
  int parameter_count() const { return group_.m / group_.p; }
  ParamScalar c1() const;
  ParamScalar c_zeta(int k) const;

  bool contains(const MonomialMatrix& g) const { return is_member(g, group_); }
  // Sign picked up when x_i and x_j (or y_i and y_j) trade places, i != j.
  int exchange_sign() const { return kind_ == AlgebraKind::braided ? -1 : 1; }
  // y_i x_j = sign * x_j y_i + rhs(i, j); 1-based.
  int yx_sign(int i, int j) const { return i == j ? 1 : exchange_sign(); }
  const GroupAlgebraElement& yx_rhs(int i, int j) const;

  std::string name() const;

  // All group elements, enumerated once; SizeLimitExceeded above the limit.
  const std::vector<MonomialMatrix>& elements() const;
  long long size_limit() const noexcept { return size_limit_; }

  // Normal form of y^b x^c, memoized.
  std::shared_ptr<const std::vector<ScaledTerm>> straightened_yx(const Degrees& b, const Degrees& c) const;
  void clear_cache() const;
  std::size_t cache_size() const;

 private:
  Algebra(GroupSpec group, AlgebraKind kind, int sign, long long size_limit);

  GroupSpec group_;
  AlgebraKind kind_;
  int sign_;
  long long size_limit_;
  mutable std::once_flag elements_once_;
  mutable std::vector<MonomialMatrix> elements_;
  std::vector<GroupAlgebraElement> rhs_;  // n*n table, row i, column j

  mutable std::shared_mutex cache_mutex_;
  mutable std::map<std::pair<Degrees, Degrees>, std::shared_ptr<const std::vector<ScaledTerm>>> yx_cache_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

class PBWElement {
 public:
  using Terms = std::map<PBWTerm, ParamScalar, TermOrder>;

  PBWElement() = default;
  explicit PBWElement(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

  static PBWElement scalar(const AlgebraPtr& alg, const ParamScalar& c);
  // 1-based index
  static PBWElement x(const AlgebraPtr& alg, int i, int power = 1);
  static PBWElement y(const AlgebraPtr& alg, int i, int power = 1);
  static PBWElement group(const AlgebraPtr& alg, const MonomialMatrix& g, const ParamScalar& c = ParamScalar(1));
  static PBWElement monomial(const AlgebraPtr& alg, const Degrees& x, const MonomialMatrix& g, const Degrees& y);
  static PBWElement from_group_algebra(const AlgebraPtr& alg, const GroupAlgebraElement& u);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  ParamScalar coefficient(const PBWTerm& t) const;

  void add_term(const PBWTerm& t, const ParamScalar& c);

  PBWElement& operator+=(const PBWElement& other);
  PBWElement& operator-=(const PBWElement& other);
  PBWElement& operator*=(const ParamScalar& c);
  PBWElement operator-() const;
  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  friend PBWElement operator*(PBWElement a, const ParamScalar& c) { return a *= c; }
  friend PBWElement operator*(const ParamScalar& c, PBWElement a) { return a *= c; }
  friend PBWElement operator*(const PBWElement& a, const PBWElement& b);

  friend bool operator==(const PBWElement& a, const PBWElement& b) { return a.terms_ == b.terms_; }

  PBWElement specialize(const ParamAssignment& assignment) const;
  PBWElement substitute(const std::function<ParamScalar(ParamIndex)>& image) const;
  // The degree-0 part as a group algebra element.
  GroupAlgebraElement group_part() const;
  bool is_degree_zero() const;

  std::string to_string() const;

 private:
  void adopt(const PBWElement& other);

  AlgebraPtr algebra_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const PBWElement& u);

// Words in the generators, used by the rewriting engine and the relation checks.
struct Letter {
  enum class Type : std::uint8_t { x, y, group };
  Type type = Type::x;
  int index = 0;  // 0-based, x and y only
  MonomialMatrix g;

  static Letter X(int i) { return Letter{Type::x, i - 1, {}}; }
  static Letter Y(int i) { return Letter{Type::y, i - 1, {}}; }
  static Letter G(const MonomialMatrix& g) { return Letter{Type::group, 0, g}; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;
using WordSum = std::vector<std::pair<Word, ParamScalar>>;

Word word_of(const PBWTerm& t);

struct StraightenOptions {
  // When set, each step rewrites a randomly chosen reducible pair of a randomly
  // chosen pending word instead of the leftmost pair of the first word.
  Rng* random_order = nullptr;
};

// Throws AlphabetError for bad letters and MembershipError for group letters
// outside the algebra's group.
PBWElement straighten(const AlgebraPtr& alg, const WordSum& words, const StraightenOptions& options = {});
PBWElement straighten(const AlgebraPtr& alg, const Word& word, const StraightenOptions& options = {});

// Term-pair products through the memoized y^b x^c table; parallel over pairs.
PBWElement multiply(const PBWElement& a, const PBWElement& b);
// Same kernel on one thread.
PBWElement multiply_serial(const PBWElement& a, const PBWElement& b);
// Reference: straighten the concatenated words.
PBWElement multiply_by_rewriting(const PBWElement& a, const PBWElement& b);

PBWElement commutator(const PBWElement& a, const PBWElement& b);

// T-action (needs m even): gamma_S |> x^k g y^l =
// (-1)^{sum_{i in S} k_i + l_i} x^k (t_S g t_S) y^l.
std::pair<int, PBWTerm> gamma_term(unsigned mask, const PBWTerm& t);
PBWElement t_action(unsigned mask, const PBWElement& u);
PBWElement gamma_action(int i, const PBWElement& u);
PBWElement eigen_project(TCharacter I, const PBWElement& u);
// Decomposition into T-eigencomponents, indexed by character mask.
std::map<unsigned, PBWElement> eigencomponents(const PBWElement& u);

// x_i, y_i, then the group generators (s_i or sigma_i, and generators of
// T(m,p,n)), with display names.
std::vector<std::pair<std::string, PBWElement>> algebra_generators(const AlgebraPtr& alg);

struct RandomElementOptions {
  int max_degree = 2;
  int max_terms = 3;
};

// Terms x^k g y^l with |k| + |l| <= max_degree, g uniform in the group, and
// coefficients from {+-1, +-1/2, +-zeta_m} times 1 or a single parameter.
PBWElement random_element(const AlgebraPtr& alg, Rng& rng, const RandomElementOptions& options = {});

// |G| times the number of (k, l) with |k| + |l| = d.
long long graded_dimension(const Algebra& alg, int d, long long size_limit = kDefaultSizeLimit);

// y_i x_j - x_j y_i from the general form <y,x> + sum_s c_s <y,(1-s)x> s with
// c_s = -c1 on s_ij^(eps) and -c_zeta / (1 - zeta) on t_i^(zeta). Rational kind.
GroupAlgebraElement kappa_commutator(const Algebra& alg, int i, int j);

// The i != j right-hand side with eps in place of eps^-1.
GroupAlgebraElement printed_offdiagonal_rhs(const Algebra& alg, int i, int j);

}  // namespace cherednik
