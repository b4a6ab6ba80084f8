#pragma once

// The map phi from the negative braided Cherednik algebra of mu(G(m,p,n)) to
// the twisted rational Cherednik algebra of G(m,p,n), the elements theta_w, and
// the group-level checks (orders, presentation of mu(G)).

#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "cherednik/group_algebra.hpp"
#include "cherednik/pbw.hpp"
#include "cherednik/report.hpp"
#include "cherednik/twist.hpp"

namespace cherednik {

using WordChooser = std::function<std::size_t(std::size_t)>;

class PhiContext {
 public:
  // Source: braided over mu(G(m,p,n)) at the parameters -c. Target: rational
  // over G(m,p,n). Needs m even and an admissible (p, n).
  explicit PhiContext(GroupSpec base, long long size_limit = kDefaultSizeLimit);

  const AlgebraPtr& source() const noexcept { return source_; }
  const AlgebraPtr& target() const noexcept { return target_; }
  const GroupSpec& spec() const noexcept { return target_->group(); }
  const GroupSpec& mystic_spec() const noexcept { return source_->group(); }

  // sbar_{i1} * ... * sbar_{ik} * t_corr for pi(g) = s_{i1}...s_{ik}, in the
  // target's degree-zero part. Memoized for the default word.
  const PBWElement& phi_group(const MonomialMatrix& g) const;
  PBWElement phi_group(const MonomialMatrix& g, const WordChooser& chooser) const;
  // Linear extension to C mu(G).
  PBWElement phi_group_algebra(const GroupAlgebraElement& u) const;
  // x^k g y^l |-> x^k * phi(g) * y^l.
  PBWElement phi(const PBWElement& u) const;

 private:
  AlgebraPtr source_;
  AlgebraPtr target_;
  mutable std::shared_mutex mutex_;
  mutable std::map<MonomialMatrix, PBWElement> group_cache_;
};

// Reduced word (i1, ..., ik) with w = s_{ik} ... s_{i1} (first letter acts first).
std::vector<int> theta_word(const MonomialMatrix& w);
// eta_i(w) = 1/2 (1 - r + r' + r r'), r = t_i^(-1) w^-1 t_i^(-1) w,
// r' = w^-1 r_{i,i+1} w; in C G(m,1,n).
GroupAlgebraElement eta(int i, const MonomialMatrix& w);
// t_w eta_{i1}(1) eta_{i2}(s_{i1}) ... with sigma_{ik}...sigma_{i1} = w t_w.
GroupAlgebraElement theta(const MonomialMatrix& w);

struct IsoConfig {
  int samples = 100;
  int max_degree = 2;
  std::uint64_t seed = 0;
  int well_defined_samples = 20;
};

// Orders, composition against dense matrices, determinant and inverse laws,
// reflection sets, conjugacy classes and set equality mu(G) = G for m/p even.
std::vector<CheckReport> verify_groups(const GroupSpec& spec, long long size_limit = kDefaultSizeLimit,
                                       std::uint64_t seed = 0);
// Enumerated |G| and |mu(G)| against n! m^n / p.
CheckReport verify_group_order(const GroupSpec& spec, long long size_limit = kDefaultSizeLimit);
// Relations (i)-(iii) for sigma_i and T(m,p,n), and closure of the generators.
CheckReport verify_presentation(const GroupSpec& spec, long long size_limit = kDefaultSizeLimit);

// phi(sigma_ij^(eps)) against s_ij^(-eps) (i < j) and s_ij^(eps) (i > j).
CheckReport verify_sigma_table(const PhiContext& ctx);
// theta_w^2 = 1, support in T(2,1,n), phi(w theta_w t) = w t, and
// sbar_i * w = s_i w eta_i(w), for every w in S_n.
CheckReport verify_theta(const PhiContext& ctx);
// Relations, homomorphism on generator pairs and random pairs, presentation
// under phi, word independence of phi_group, bijectivity on C mu(G).
std::vector<CheckReport> verify_main_theorem(const PhiContext& ctx, const IsoConfig& cfg);
CheckReport verify_phi_relations(const PhiContext& ctx);
CheckReport verify_phi_homomorphism(const PhiContext& ctx, const IsoConfig& cfg);
CheckReport verify_phi_presentation(const PhiContext& ctx);
CheckReport verify_phi_well_defined(const PhiContext& ctx, const IsoConfig& cfg);
CheckReport verify_phi_bijective(const PhiContext& ctx);
// x^k (w theta_w b) y^l |-> +-x^k (w b) y^l through total degree max_degree.
CheckReport verify_basis_correspondence(const PhiContext& ctx, int max_degree);

}  // namespace cherednik
