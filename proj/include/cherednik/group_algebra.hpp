#pragma once

// Sparse elements of the group algebra C G with parameter coefficients, and the
// action of T = (C_2)^n by conjugation with t_i^(-1).

#include <map>
#include <string>
#include <vector>

#include "cherednik/groups.hpp"
#include "cherednik/scalars.hpp"

namespace cherednik {

// alpha_I for I a bitmask over 0-based indices; alpha_I(gamma_j) = -1 iff j in I.
struct TCharacter {
  unsigned mask = 0;

  int value_on(unsigned gamma_mask) const { return __builtin_popcount(mask & gamma_mask) % 2 ? -1 : 1; }
  friend TCharacter operator*(TCharacter a, TCharacter b) { return TCharacter{a.mask ^ b.mask}; }
  friend bool operator==(TCharacter, TCharacter) = default;
};

// Number of pairs (i, j) with i in I, j in J and i > j.
int inversion_count(unsigned I, unsigned J);

class GroupAlgebraElement {
 public:
  using Terms = std::map<MonomialMatrix, ParamScalar>;

  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(GroupSpec spec) : spec_(spec) {}
  static GroupAlgebraElement delta(const GroupSpec& spec, const MonomialMatrix& g,
                                   const ParamScalar& coeff = ParamScalar(1));

  const GroupSpec& spec() const noexcept { return spec_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  ParamScalar coefficient(const MonomialMatrix& g) const;

  void add_term(const MonomialMatrix& g, const ParamScalar& coeff);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator*=(const ParamScalar& c);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(GroupAlgebraElement a, const ParamScalar& c) { return a *= c; }
  friend GroupAlgebraElement operator*(const ParamScalar& c, GroupAlgebraElement a) { return a *= c; }
  // Convolution.
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string(bool prefer_sigma = false) const;

 private:
  GroupSpec spec_;
  Terms terms_;
};

GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

// gamma_S |> g = t_S g t_S with t_S = prod_{i in S} t_i^(-1).
MonomialMatrix gamma_conjugate(unsigned mask, const MonomialMatrix& g);
// 1-based i.
GroupAlgebraElement gamma_action(int i, const GroupAlgebraElement& u);
GroupAlgebraElement gamma_subset_action(unsigned mask, const GroupAlgebraElement& u);

// 2^-n sum_S alpha_I(gamma_S) gamma_S |> u
GroupAlgebraElement eigen_project(TCharacter I, const GroupAlgebraElement& u);

// All nonzero eigencomponents of delta_g, keyed by character mask. Cached.
const std::vector<std::pair<unsigned, GroupAlgebraElement>>& group_eigencomponents(
    const GroupSpec& spec, const MonomialMatrix& g);

}  // namespace cherednik
