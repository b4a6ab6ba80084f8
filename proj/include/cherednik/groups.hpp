#pragma once

// Elements of S_n x| T_n as monomial matrices, and the groups G(m,p,n) and
// mu(G(m,p,n)) they live in.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cherednik/scalars.hpp"

namespace cherednik {

inline constexpr int kMaxRank = 8;
inline constexpr long long kDefaultSizeLimit = 100000;

// g(x_j) = zeta_m^{e_j} x_{pi(j)}; the diagonal part acts first.
// Indices passed to the public accessors are 0-based; the make_* builders take
// 1-based indices like the printed notation.
class MonomialMatrix {
 public:
  MonomialMatrix() = default;
  MonomialMatrix(int n, int m);  // identity

  // perm[j] = pi(j) and exps[j] = e_j, 0-based.
  static MonomialMatrix from_images(int m, const std::vector<int>& perm, const std::vector<int>& exps);

  int rank() const noexcept { return n_; }
  int conductor() const noexcept { return m_; }
  int image(int j) const { return perm_[j]; }
  int exponent(int j) const { return exps_[j]; }
  int preimage(int i) const;

  bool is_identity() const;
  bool is_diagonal() const;
  // +1 or -1
  int sign() const;
  // sum of exponents, reduced mod m
  int exponent_sum() const;
  CycRational determinant() const;
  int order() const;

  MonomialMatrix inverse() const;
  // h * this * h^-1
  MonomialMatrix conjugated_by(const MonomialMatrix& h) const;

  friend MonomialMatrix operator*(const MonomialMatrix& g, const MonomialMatrix& h);
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
  friend auto operator<=>(const MonomialMatrix&, const MonomialMatrix&) = default;

  // Dense matrix, column j holds g(x_j).
  std::vector<std::vector<CycRational>> matrix() const;

  // "[p:2,3,1 e:0,1,3 m:4]" with 1-based images.
  std::string canonical() const;
  static MonomialMatrix parse_canonical(const std::string& text);

  std::size_t hash() const noexcept;

 private:
  std::uint8_t n_ = 0;
  std::uint16_t m_ = 1;
  std::array<std::uint8_t, kMaxRank> perm_{};
  std::array<std::uint16_t, kMaxRank> exps_{};
};

struct MonomialMatrixHash {
  std::size_t operator()(const MonomialMatrix& g) const noexcept { return g.hash(); }
};

// s_ij^(zeta^k): x_i -> zeta^k x_j, x_j -> zeta^-k x_i.
MonomialMatrix make_s(int n, int m, int i, int j, int k);
// t_i^(zeta^k)
MonomialMatrix make_t(int n, int m, int i, int k);
// sigma_ij^(zeta^k): x_i -> zeta^k x_j, x_j -> -zeta^-k x_i. Needs m even.
MonomialMatrix make_sigma(int n, int m, int i, int j, int k);
MonomialMatrix make_diagonal(int m, const std::vector<int>& exps);
MonomialMatrix make_permutation(int m, const std::vector<int>& perm);

// s_i = s_{i,i+1}^(1), sbar_i = s_{i,i+1}^(-1), sigma_i = sigma_{i,i+1}^(1).
MonomialMatrix simple_s(int n, int m, int i);
MonomialMatrix simple_sbar(int n, int m, int i);
MonomialMatrix simple_sigma(int n, int m, int i);
// r_ij = t_i^(-1) t_j^(-1)
MonomialMatrix make_r(int n, int m, int i, int j);
// t_S = prod_{i in S} t_i^(-1), S a bitmask over 0-based indices.
MonomialMatrix make_t_subset(int n, int m, unsigned mask);

// The permutation part of g as a permutation matrix with no phases.
MonomialMatrix permutation_part(const MonomialMatrix& g);

struct ReflectionData {
  int i = 0, j = 0, k = 0;  // 1-based, i < j for pair types; j = 0 for t
};
// s_ij^(zeta^k) with i < j and k = e_i, if g is one.
bool as_s_reflection(const MonomialMatrix& g, ReflectionData& out);
// sigma_ij^(zeta^k) with i < j and k = e_i.
bool as_sigma_reflection(const MonomialMatrix& g, ReflectionData& out);
// t_i^(zeta^k), k != 0.
bool as_t_reflection(const MonomialMatrix& g, ReflectionData& out);

enum class Flavor { complex, mystic };

struct GroupSpec {
  int m = 1;
  int p = 1;
  int n = 1;
  Flavor flavor = Flavor::complex;

  // Throws InvalidSpec.
  void validate() const;
  // n >= 3, or n = 2 with p odd.
  bool algebra_admissible() const;
  long long order() const;
  GroupSpec with_flavor(Flavor f) const { return GroupSpec{m, p, n, f}; }
  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
  friend auto operator<=>(const GroupSpec&, const GroupSpec&) = default;
};

bool is_member(const MonomialMatrix& g, const GroupSpec& spec);
// T(m,p,n): diagonal with exponent sum divisible by p.
bool in_torus(const MonomialMatrix& g, int p);

// Throws SizeLimitExceeded when the order is above the limit.
std::vector<MonomialMatrix> enumerate(const GroupSpec& spec, long long size_limit = kDefaultSizeLimit);
std::vector<MonomialMatrix> enumerate_torus(int n, int m, int p);
// A generating set of T(m,p,n).
std::vector<MonomialMatrix> torus_generators(int n, int m, int p);

// s_1..s_{n-1} (sigma_i for the mystic flavor) followed by torus_generators.
std::vector<MonomialMatrix> group_generators(const GroupSpec& spec);

// s_ij^(eps) over unordered pairs and t_i^(zeta) for zeta in C_{m/p} \ {1}.
std::vector<MonomialMatrix> reflections(const GroupSpec& spec);
// sigma_ij^(eps) over unordered pairs and the same t_i^(zeta).
std::vector<MonomialMatrix> mystic_reflections(const GroupSpec& spec);

std::vector<MonomialMatrix> conjugacy_class(const MonomialMatrix& g, const GroupSpec& spec,
                                            long long size_limit = kDefaultSizeLimit);

// det(x - g), coefficients from x^0 up to x^n.
std::vector<CycRational> characteristic_polynomial(const MonomialMatrix& g);

// Rank of a dense matrix over Q(zeta_m), by exact elimination.
int matrix_rank(std::vector<std::vector<CycRational>> rows);

// A reduced word i_1..i_k (1-based) with perm(g) = s_{i_1} ... s_{i_k}. The
// chooser picks one of the available right descents; the default takes the
// smallest.
std::vector<int> reduced_word(const MonomialMatrix& g,
                              const std::function<std::size_t(std::size_t)>& chooser = {});

// Expression-grammar text: "1", s(i,j;k), sg(i,j;k) (tried first when
// prefer_sigma), t(i;k), otherwise a word in s(a,a+1;0) followed by t factors.
std::string format_group_element(const MonomialMatrix& g, bool prefer_sigma = false);

// Number of inversions of the permutation part.
int permutation_length(const MonomialMatrix& g);

}  // namespace cherednik
