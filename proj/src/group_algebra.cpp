#include "cherednik/group_algebra.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>

#include "cherednik/errors.hpp"

namespace cherednik {

int inversion_count(unsigned I, unsigned J) {
  int count = 0;
  for (int i = 0; i < 32; ++i) {
    if (!(I & (1u << i))) continue;
    // j < i with j in J
    count += __builtin_popcount(J & ((1u << i) - 1u));
  }
  return count;
}

GroupAlgebraElement GroupAlgebraElement::delta(const GroupSpec& spec, const MonomialMatrix& g,
                                               const ParamScalar& coeff) {
  GroupAlgebraElement out(spec);
  out.add_term(g, coeff);
  return out;
}

ParamScalar GroupAlgebraElement::coefficient(const MonomialMatrix& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? ParamScalar() : it->second;
}

void GroupAlgebraElement::add_term(const MonomialMatrix& g, const ParamScalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  for (const auto& [g, c] : other.terms_) add_term(g, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
  for (const auto& [g, c] : other.terms_) add_term(g, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const ParamScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, coeff] : terms_) coeff *= c;
  return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (!(a.spec_ == b.spec_)) throw KindMismatch("convolving elements of different group algebras");
  GroupAlgebraElement out(a.spec_);
  for (const auto& [g, cg] : a.terms_)
    for (const auto& [h, ch] : b.terms_) out.add_term(g * h, cg * ch);
  return out;
}

GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return a * b; }

std::string GroupAlgebraElement::to_string(bool prefer_sigma) const {
  std::vector<std::pair<ParamScalar, std::string>> parts;
  for (const auto& [g, c] : terms_) parts.emplace_back(c, g.is_identity() ? "" : format_group_element(g, prefer_sigma));
  return format_linear_combination(parts);
}

MonomialMatrix gamma_conjugate(unsigned mask, const MonomialMatrix& g) {
  if (mask == 0) return g;
  const MonomialMatrix t = make_t_subset(g.rank(), g.conductor(), mask);
  return t * g * t;
}

GroupAlgebraElement gamma_subset_action(unsigned mask, const GroupAlgebraElement& u) {
  GroupAlgebraElement out(u.spec());
  for (const auto& [g, c] : u.terms()) out.add_term(gamma_conjugate(mask, g), c);
  return out;
}

GroupAlgebraElement gamma_action(int i, const GroupAlgebraElement& u) {
  if (i < 1 || i > u.spec().n) throw IndexOutOfRange("gamma index");
  return gamma_subset_action(1u << (i - 1), u);
}

GroupAlgebraElement eigen_project(TCharacter I, const GroupAlgebraElement& u) {
  const int n = u.spec().n;
  GroupAlgebraElement out(u.spec());
  const CycRational weight(Rational(1, 1u << n));
  for (unsigned S = 0; S < (1u << n); ++S) {
    GroupAlgebraElement moved = gamma_subset_action(S, u);
    moved *= ParamScalar(weight * CycRational(I.value_on(S)));
    out += moved;
  }
  return out;
}

namespace {

using Components = std::vector<std::pair<unsigned, GroupAlgebraElement>>;

struct ComponentCache {
  std::shared_mutex mutex;
  std::map<std::pair<GroupSpec, MonomialMatrix>, std::unique_ptr<Components>> entries;
};

ComponentCache& component_cache() {
  static ComponentCache cache;
  return cache;
}

}  // namespace

const std::vector<std::pair<unsigned, GroupAlgebraElement>>& group_eigencomponents(const GroupSpec& spec,
                                                                                const MonomialMatrix& g) {
  ComponentCache& cache = component_cache();
  const auto key = std::make_pair(spec, g);
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.entries.find(key);
    if (it != cache.entries.end()) return *it->second;
  }
  auto parts = std::make_unique<Components>();
  const GroupAlgebraElement base = GroupAlgebraElement::delta(spec, g);
  for (unsigned I = 0; I < (1u << spec.n); ++I) {
    GroupAlgebraElement component = eigen_project(TCharacter{I}, base);
    if (!component.is_zero()) parts->emplace_back(I, std::move(component));
  }
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.entries.try_emplace(key, std::move(parts));
  return *it->second;
}

}  // namespace cherednik
