#include "cherednik/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik {
namespace {

int mod(long value, int m) {
  long r = value % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

void check_index(int n, int i) {
  if (i < 1 || i > n)
    throw IndexOutOfRange("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

void check_rank(int n) {
  if (n < 1 || n > kMaxRank)
    throw InvalidSpec("rank must lie in 1.." + std::to_string(kMaxRank));
}

}  // namespace

MonomialMatrix::MonomialMatrix(int n, int m) {
  check_rank(n);
  if (m < 1 || m > 65535) throw InvalidSpec("conductor out of range");
  n_ = static_cast<std::uint8_t>(n);
  m_ = static_cast<std::uint16_t>(m);
  for (int j = 0; j < n; ++j) perm_[j] = static_cast<std::uint8_t>(j);
}

MonomialMatrix MonomialMatrix::from_images(int m, const std::vector<int>& perm,
                                           const std::vector<int>& exps) {
  const int n = static_cast<int>(perm.size());
  if (exps.size() != perm.size()) throw InvalidSpec("permutation and exponent lengths differ");
  MonomialMatrix g(n, m);
  std::vector<bool> seen(n, false);
  for (int j = 0; j < n; ++j) {
    if (perm[j] < 0 || perm[j] >= n || seen[perm[j]]) throw InvalidSpec("not a permutation");
    seen[perm[j]] = true;
    g.perm_[j] = static_cast<std::uint8_t>(perm[j]);
    g.exps_[j] = static_cast<std::uint16_t>(mod(exps[j], m));
  }
  return g;
}

int MonomialMatrix::preimage(int i) const {
  for (int j = 0; j < n_; ++j)
    if (perm_[j] == i) return j;
  throw IndexOutOfRange("preimage");
}

bool MonomialMatrix::is_identity() const {
  for (int j = 0; j < n_; ++j)
    if (perm_[j] != j || exps_[j] != 0) return false;
  return true;
}

bool MonomialMatrix::is_diagonal() const {
  for (int j = 0; j < n_; ++j)
    if (perm_[j] != j) return false;
  return true;
}

int MonomialMatrix::sign() const {
  int s = 1;
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (perm_[a] > perm_[b]) s = -s;
  return s;
}

int MonomialMatrix::exponent_sum() const {
  long total = 0;
  for (int j = 0; j < n_; ++j) total += exps_[j];
  return mod(total, m_);
}

CycRational MonomialMatrix::determinant() const {
  return CycRational::zeta_power(m_, exponent_sum()) * CycRational(sign());
}

int MonomialMatrix::order() const {
  MonomialMatrix power = *this;
  int k = 1;
  while (!power.is_identity()) {
    power = power * *this;
    ++k;
  }
  return k;
}

MonomialMatrix MonomialMatrix::inverse() const {
  MonomialMatrix inv(n_, m_);
  for (int j = 0; j < n_; ++j) {
    inv.perm_[perm_[j]] = static_cast<std::uint8_t>(j);
    inv.exps_[perm_[j]] = static_cast<std::uint16_t>(mod(-static_cast<long>(exps_[j]), m_));
  }
  return inv;
}

MonomialMatrix MonomialMatrix::conjugated_by(const MonomialMatrix& h) const {
  return h * *this * h.inverse();
}

MonomialMatrix operator*(const MonomialMatrix& g, const MonomialMatrix& h) {
  if (g.n_ != h.n_ || g.m_ != h.m_) throw InvalidSpec("multiplying monomial matrices of different shape");
  MonomialMatrix out(g.n_, g.m_);
  for (int j = 0; j < g.n_; ++j) {
    const int mid = h.perm_[j];
    out.perm_[j] = g.perm_[mid];
    out.exps_[j] = static_cast<std::uint16_t>((h.exps_[j] + g.exps_[mid]) % g.m_);
  }
  return out;
}

std::vector<std::vector<CycRational>> MonomialMatrix::matrix() const {
  std::vector<std::vector<CycRational>> a(n_, std::vector<CycRational>(n_, CycRational()));
  for (int j = 0; j < n_; ++j) a[perm_[j]][j] = CycRational::zeta_power(m_, exps_[j]);
  return a;
}

std::string MonomialMatrix::canonical() const {
  std::ostringstream os;
  os << "[p:";
  for (int j = 0; j < n_; ++j) os << (j ? "," : "") << perm_[j] + 1;
  os << " e:";
  for (int j = 0; j < n_; ++j) os << (j ? "," : "") << exps_[j];
  os << " m:" << m_ << "]";
  return os.str();
}

MonomialMatrix MonomialMatrix::parse_canonical(const std::string& text) {
  auto fail = [&]() -> MonomialMatrix { throw ParseError("bad monomial matrix '" + text + "'", 0); };
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') return fail();
  std::istringstream is(text.substr(1, text.size() - 2));
  std::string ptok, etok, mtok;
  is >> ptok >> etok >> mtok;
  if (ptok.rfind("p:", 0) != 0 || etok.rfind("e:", 0) != 0 || mtok.rfind("m:", 0) != 0) return fail();
  auto split = [&](const std::string& s) {
    std::vector<int> out;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        out.push_back(std::stoi(item));
      } catch (const std::exception&) {
        fail();
      }
    }
    return out;
  };
  std::vector<int> perm = split(ptok.substr(2));
  std::vector<int> exps = split(etok.substr(2));
  int m = 0;
  try {
    m = std::stoi(mtok.substr(2));
  } catch (const std::exception&) {
    return fail();
  }
  for (int& v : perm) --v;
  return from_images(m, perm, exps);
}

std::size_t MonomialMatrix::hash() const noexcept {
  std::size_t h = n_ * 131u + m_;
  for (int j = 0; j < n_; ++j) h = h * 1000003u ^ (perm_[j] * 257u + exps_[j]);
  return h;
}

MonomialMatrix make_s(int n, int m, int i, int j, int k) {
  check_index(n, i);
  check_index(n, j);
  if (i == j) throw IndexOutOfRange("s_ij needs i != j");
  std::vector<int> perm(n), exps(n, 0);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[i - 1], perm[j - 1]);
  exps[i - 1] = k;
  exps[j - 1] = -k;
  return MonomialMatrix::from_images(m, perm, exps);
}

MonomialMatrix make_t(int n, int m, int i, int k) {
  check_index(n, i);
  std::vector<int> exps(n, 0);
  exps[i - 1] = k;
  return make_diagonal(m, exps);
}

MonomialMatrix make_sigma(int n, int m, int i, int j, int k) {
  if (m % 2 != 0) throw InvalidSpec("mystic reflections need m even");
  check_index(n, i);
  check_index(n, j);
  if (i == j) throw IndexOutOfRange("sigma_ij needs i != j");
  std::vector<int> perm(n), exps(n, 0);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[i - 1], perm[j - 1]);
  exps[i - 1] = k;
  exps[j - 1] = m / 2 - k;
  return MonomialMatrix::from_images(m, perm, exps);
}

MonomialMatrix make_diagonal(int m, const std::vector<int>& exps) {
  std::vector<int> perm(exps.size());
  std::iota(perm.begin(), perm.end(), 0);
  return MonomialMatrix::from_images(m, perm, exps);
}

MonomialMatrix make_permutation(int m, const std::vector<int>& perm) {
  return MonomialMatrix::from_images(m, perm, std::vector<int>(perm.size(), 0));
}

MonomialMatrix simple_s(int n, int m, int i) { return make_s(n, m, i, i + 1, 0); }

MonomialMatrix simple_sbar(int n, int m, int i) {
  if (m % 2 != 0) throw InvalidSpec("sbar_i needs m even");
  return make_s(n, m, i, i + 1, m / 2);
}

MonomialMatrix simple_sigma(int n, int m, int i) { return make_sigma(n, m, i, i + 1, 0); }

MonomialMatrix make_r(int n, int m, int i, int j) {
  if (m % 2 != 0) throw InvalidSpec("r_ij needs m even");
  return make_t(n, m, i, m / 2) * make_t(n, m, j, m / 2);
}

MonomialMatrix make_t_subset(int n, int m, unsigned mask) {
  if (m % 2 != 0) throw InvalidSpec("t_S needs m even");
  std::vector<int> exps(n, 0);
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) exps[i] = m / 2;
  return make_diagonal(m, exps);
}

MonomialMatrix permutation_part(const MonomialMatrix& g) {
  std::vector<int> perm(g.rank());
  for (int j = 0; j < g.rank(); ++j) perm[j] = g.image(j);
  return make_permutation(g.conductor(), perm);
}

namespace {

// Transposition (a b) with a < b, 0-based; false otherwise.
bool transposition_pair(const MonomialMatrix& g, int& a, int& b) {
  a = b = -1;
  for (int j = 0; j < g.rank(); ++j) {
    if (g.image(j) == j) {
      if (g.exponent(j) != 0) return false;
      continue;
    }
    if (a < 0) {
      a = j;
    } else if (b < 0) {
      b = j;
    } else {
      return false;
    }
  }
  return a >= 0 && b >= 0 && g.image(a) == b && g.image(b) == a;
}

}  // namespace

bool as_s_reflection(const MonomialMatrix& g, ReflectionData& out) {
  int a, b;
  if (!transposition_pair(g, a, b)) return false;
  if ((g.exponent(a) + g.exponent(b)) % g.conductor() != 0) return false;
  out = ReflectionData{a + 1, b + 1, g.exponent(a)};
  return true;
}

bool as_sigma_reflection(const MonomialMatrix& g, ReflectionData& out) {
  if (g.conductor() % 2 != 0) return false;
  int a, b;
  if (!transposition_pair(g, a, b)) return false;
  if ((g.exponent(a) + g.exponent(b)) % g.conductor() != g.conductor() / 2) return false;
  out = ReflectionData{a + 1, b + 1, g.exponent(a)};
  return true;
}

bool as_t_reflection(const MonomialMatrix& g, ReflectionData& out) {
  if (!g.is_diagonal()) return false;
  int found = -1;
  for (int j = 0; j < g.rank(); ++j) {
    if (g.exponent(j) == 0) continue;
    if (found >= 0) return false;
    found = j;
  }
  if (found < 0) return false;
  out = ReflectionData{found + 1, 0, g.exponent(found)};
  return true;
}

void GroupSpec::validate() const {
  if (m < 1) throw InvalidSpec("m must be positive");
  if (p < 1 || m % p != 0) throw InvalidSpec("p must divide m");
  check_rank(n);
  if (flavor == Flavor::mystic && m % 2 != 0) throw InvalidSpec("mu(G(m,p,n)) needs m even");
}

bool GroupSpec::algebra_admissible() const { return n >= 3 || (n == 2 && p % 2 == 1); }

long long GroupSpec::order() const {
  long long total = 1;
  for (int k = 2; k <= n; ++k) total *= k;
  for (int k = 0; k < n; ++k) total *= m;
  return total / p;
}

std::string GroupSpec::to_string() const {
  std::ostringstream os;
  if (flavor == Flavor::mystic) os << "mu(";
  os << "G(" << m << "," << p << "," << n << ")";
  if (flavor == Flavor::mystic) os << ")";
  return os.str();
}

bool is_member(const MonomialMatrix& g, const GroupSpec& spec) {
  if (g.rank() != spec.n || g.conductor() != spec.m) return false;
  long shifted = g.exponent_sum();
  if (spec.flavor == Flavor::mystic && g.sign() < 0) shifted += spec.m / 2;
  return shifted % spec.p == 0;
}

bool in_torus(const MonomialMatrix& g, int p) { return g.is_diagonal() && g.exponent_sum() % p == 0; }

std::vector<MonomialMatrix> enumerate(const GroupSpec& spec, long long size_limit) {
  spec.validate();
  if (spec.order() > size_limit)
    throw SizeLimitExceeded(spec.to_string() + " has " + std::to_string(spec.order()) +
                            " elements, above the limit " + std::to_string(size_limit));
  std::vector<MonomialMatrix> out;
  out.reserve(static_cast<std::size_t>(spec.order()));
  std::vector<int> perm(spec.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> exps(spec.n, 0);
    while (true) {
      MonomialMatrix g = MonomialMatrix::from_images(spec.m, perm, exps);
      if (is_member(g, spec)) out.push_back(g);
      int pos = spec.n - 1;
      while (pos >= 0 && ++exps[pos] == spec.m) exps[pos--] = 0;
      if (pos < 0) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<MonomialMatrix> enumerate_torus(int n, int m, int p) {
  std::vector<MonomialMatrix> out;
  std::vector<int> exps(n, 0);
  while (true) {
    MonomialMatrix t = make_diagonal(m, exps);
    if (in_torus(t, p)) out.push_back(t);
    int pos = n - 1;
    while (pos >= 0 && ++exps[pos] == m) exps[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

std::vector<MonomialMatrix> torus_generators(int n, int m, int p) {
  std::vector<MonomialMatrix> gens;
  if (p % m != 0) gens.push_back(make_t(n, m, 1, p));
  for (int i = 1; i < n; ++i) gens.push_back(make_t(n, m, i, 1) * make_t(n, m, i + 1, -1));
  if (gens.empty()) gens.emplace_back(n, m);
  return gens;
}

std::vector<MonomialMatrix> reflections(const GroupSpec& spec) {
  std::vector<MonomialMatrix> out;
  for (int i = 1; i <= spec.n; ++i)
    for (int j = i + 1; j <= spec.n; ++j)
      for (int k = 0; k < spec.m; ++k) out.push_back(make_s(spec.n, spec.m, i, j, k));
  for (int i = 1; i <= spec.n; ++i)
    for (int k = 1; k < spec.m / spec.p; ++k) out.push_back(make_t(spec.n, spec.m, i, k * spec.p));
  return out;
}

std::vector<MonomialMatrix> mystic_reflections(const GroupSpec& spec) {
  std::vector<MonomialMatrix> out;
  for (int i = 1; i <= spec.n; ++i)
    for (int j = i + 1; j <= spec.n; ++j)
      for (int k = 0; k < spec.m; ++k) out.push_back(make_sigma(spec.n, spec.m, i, j, k));
  for (int i = 1; i <= spec.n; ++i)
    for (int k = 1; k < spec.m / spec.p; ++k) out.push_back(make_t(spec.n, spec.m, i, k * spec.p));
  return out;
}

std::vector<MonomialMatrix> conjugacy_class(const MonomialMatrix& g, const GroupSpec& spec,
                                            long long size_limit) {
  if (!is_member(g, spec)) throw MembershipError(g.canonical() + " is not in " + spec.to_string());
  std::set<MonomialMatrix> orbit;
  for (const auto& h : enumerate(spec, size_limit)) orbit.insert(g.conjugated_by(h));
  return {orbit.begin(), orbit.end()};
}

std::vector<CycRational> characteristic_polynomial(const MonomialMatrix& g) {
  const int n = g.rank();
  const int m = g.conductor();
  std::vector<CycRational> poly{CycRational(1)};
  std::vector<bool> visited(n, false);
  for (int start = 0; start < n; ++start) {
    if (visited[start]) continue;
    int length = 0;
    long phase = 0;
    for (int j = start; !visited[j]; j = g.image(j)) {
      visited[j] = true;
      phase += g.exponent(j);
      ++length;
    }
    // multiply by x^length - zeta^phase
    std::vector<CycRational> next(poly.size() + length, CycRational());
    const CycRational c = CycRational::zeta_power(m, phase);
    for (std::size_t a = 0; a < poly.size(); ++a) {
      next[a + length] += poly[a];
      next[a] -= poly[a] * c;
    }
    poly = std::move(next);
  }
  return poly;
}

int matrix_rank(std::vector<std::vector<CycRational>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const CycRational inv = rows[rank][c].inverse();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][c].is_zero()) continue;
      const CycRational factor = rows[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<int> reduced_word(const MonomialMatrix& g,
                              const std::function<std::size_t(std::size_t)>& chooser) {
  std::vector<int> images(g.rank());
  for (int j = 0; j < g.rank(); ++j) images[j] = g.image(j);
  std::vector<int> record;
  while (true) {
    std::vector<int> descents;
    for (int i = 0; i + 1 < g.rank(); ++i)
      if (images[i] > images[i + 1]) descents.push_back(i);
    if (descents.empty()) break;
    const std::size_t pick = chooser ? chooser(descents.size()) % descents.size() : 0;
    const int i = descents[pick];
    std::swap(images[i], images[i + 1]);
    record.push_back(i + 1);
  }
  std::reverse(record.begin(), record.end());
  return record;
}

int permutation_length(const MonomialMatrix& g) {
  int inversions = 0;
  for (int a = 0; a < g.rank(); ++a)
    for (int b = a + 1; b < g.rank(); ++b)
      if (g.image(a) > g.image(b)) ++inversions;
  return inversions;
}

}  // namespace cherednik

namespace cherednik {

std::string format_group_element(const MonomialMatrix& g, bool prefer_sigma) {
  if (g.is_identity()) return "1";
  ReflectionData r;
  auto pair_text = [](const char* name, const ReflectionData& d) {
    return std::string(name) + "(" + std::to_string(d.i) + "," + std::to_string(d.j) + ";" +
           std::to_string(d.k) + ")";
  };
  if (prefer_sigma && as_sigma_reflection(g, r)) return pair_text("sg", r);
  if (as_s_reflection(g, r)) return pair_text("s", r);
  std::string out;
  for (int i : reduced_word(g)) {
    if (!out.empty()) out += '*';
    out += "s(" + std::to_string(i) + "," + std::to_string(i + 1) + ";0)";
  }
  for (int j = 0; j < g.rank(); ++j) {
    if (g.exponent(j) == 0) continue;
    if (!out.empty()) out += '*';
    out += "t(" + std::to_string(j + 1) + ";" + std::to_string(g.exponent(j)) + ")";
  }
  return out;
}

}  // namespace cherednik

namespace cherednik {

std::vector<MonomialMatrix> group_generators(const GroupSpec& spec) {
  std::vector<MonomialMatrix> gens;
  for (int i = 1; i < spec.n; ++i)
    gens.push_back(spec.flavor == Flavor::mystic ? simple_sigma(spec.n, spec.m, i) : simple_s(spec.n, spec.m, i));
  for (const auto& t : torus_generators(spec.n, spec.m, spec.p))
    if (!t.is_identity()) gens.push_back(t);
  return gens;
}

}  // namespace cherednik
