#include "tca/ktheory.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

#include "tca/bott.hpp"

namespace tca {

std::vector<Partition> grassmannian_basis(int d, int r) {
  if (r < 0 || r > d) throw std::invalid_argument("grassmannian: need 0 <= r <= d");
  return partitions_in_rectangle(r, d - r);
}

namespace {

// Irreducible decomposition of S_a ⊗ S_b for GL_n, a and b dominant.
std::vector<std::pair<std::vector<int>, Integer>> gl_product(const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t n = a.size();
  if (n == 0) return {{{}, 1}};
  const int sa = a.back();
  const int sb = b.back();
  std::vector<int> pa(a), pb(b);
  for (int& x : pa) x -= sa;
  for (int& x : pb) x -= sb;
  std::vector<std::pair<std::vector<int>, Integer>> out;
  for (auto& [nu, c] : lr_product(Partition(pa), Partition(pb), static_cast<int>(n))) {
    std::vector<int> w = nu.padded(n);
    for (int& x : w) x += sa + sb;
    out.emplace_back(std::move(w), Integer(static_cast<unsigned long>(c)));
  }
  return out;
}

}  // namespace

BundleClass::BundleClass(int d, int r) : d_(d), r_(r) {
  if (r < 0 || r > d) throw std::invalid_argument("bundle class: need 0 <= r <= d");
}

BundleClass BundleClass::schur_q(int d, int r, const Partition& lam) {
  BundleClass b(d, r);
  b.add(as_weight(lam, static_cast<std::size_t>(r)), Weight(std::vector<int>(static_cast<std::size_t>(d - r), 0)), 1);
  return b;
}

BundleClass BundleClass::schur_q_dual(int d, int r, const Partition& lam) {
  BundleClass b(d, r);
  b.add(tca::dual(as_weight(lam, static_cast<std::size_t>(r))), Weight(std::vector<int>(static_cast<std::size_t>(d - r), 0)),
        1);
  return b;
}

BundleClass BundleClass::schur_r(int d, int r, const Partition& lam) {
  BundleClass b(d, r);
  b.add(Weight(std::vector<int>(static_cast<std::size_t>(r), 0)), as_weight(lam, static_cast<std::size_t>(d - r)), 1);
  return b;
}

void BundleClass::add(const Weight& q_weight, const Weight& r_weight, const Integer& c) {
  if (static_cast<int>(q_weight.length()) != r_ || static_cast<int>(r_weight.length()) != d_ - r_)
    throw std::invalid_argument("bundle class: weight lengths must be r and d - r");
  if (!q_weight.is_dominant() || !r_weight.is_dominant())
    throw std::invalid_argument("bundle class: weights must be dominant");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({q_weight.entries, r_weight.entries}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BundleClass BundleClass::tensor(const BundleClass& other) const {
  if (other.d_ != d_ || other.r_ != r_) throw std::invalid_argument("bundle class: mismatched Grassmannians");
  BundleClass out(d_, r_);
  for (const auto& [k1, c1] : terms_) {
    for (const auto& [k2, c2] : other.terms_) {
      const auto q_side = gl_product(k1.first, k2.first);
      const auto r_side = gl_product(k1.second, k2.second);
      for (const auto& [q, cq] : q_side)
        for (const auto& [rr, cr] : r_side) out.add(Weight(q), Weight(rr), c1 * c2 * cq * cr);
    }
  }
  return out;
}

BundleClass BundleClass::dual() const {
  BundleClass out(d_, r_);
  for (const auto& [k, c] : terms_) out.add(tca::dual(Weight(k.first)), tca::dual(Weight(k.second)), c);
  return out;
}

BundleClass& BundleClass::operator+=(const BundleClass& other) {
  if (other.d_ != d_ || other.r_ != r_) throw std::invalid_argument("bundle class: mismatched Grassmannians");
  for (const auto& [k, c] : other.terms_) add(Weight(k.first), Weight(k.second), c);
  return *this;
}

BundleClass& BundleClass::operator*=(const Integer& scalar) {
  if (scalar == 0) terms_.clear();
  for (auto& [k, c] : terms_) c *= scalar;
  return *this;
}

Integer euler_characteristic(const BundleClass& bundle) {
  Integer chi = 0;
  for (const auto& [k, c] : bundle.terms()) {
    auto h = bwb_pushforward(Weight(k.first), Weight(k.second), bundle.d());
    if (!h) continue;
    const Integer dim = weyl_dimension(h->gamma);
    chi += h->degree % 2 == 0 ? Integer(c * dim) : Integer(-c * dim);
  }
  return chi;
}

IntMatrix pairing_matrix(int d, int r) {
  const auto basis = grassmannian_basis(d, r);
  IntMatrix m(basis.size(), std::vector<Integer>(basis.size(), 0));
  for (std::size_t row = 0; row < basis.size(); ++row) {
    const Weight r_weight = as_weight(transpose(basis[row]), static_cast<std::size_t>(d - r));
    for (std::size_t col = 0; col < basis.size(); ++col) {
      const Weight q_weight = dual(as_weight(basis[col], static_cast<std::size_t>(r)));
      if (auto h = bwb_pushforward(q_weight, r_weight, d)) {
        const Integer dim = weyl_dimension(h->gamma);
        m[row][col] = h->degree % 2 == 0 ? dim : Integer(-dim);
      }
    }
  }
  return m;
}

std::vector<Integer> dual_basis_coordinates(const BundleClass& bundle) {
  const auto basis = grassmannian_basis(bundle.d(), bundle.r());
  std::vector<Integer> coords;
  coords.reserve(basis.size());
  for (const Partition& alpha : basis) {
    const Integer v = euler_characteristic(BundleClass::schur_r(bundle.d(), bundle.r(), transpose(alpha)).tensor(bundle));
    coords.push_back(alpha.size() % 2 == 0 ? v : Integer(-v));
  }
  return coords;
}

IntMatrix schur_q_transition(int d, int r) {
  const auto basis = grassmannian_basis(d, r);
  IntMatrix t(basis.size(), std::vector<Integer>(basis.size(), 0));
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto coords = dual_basis_coordinates(BundleClass::schur_q(d, r, basis[col]));
    for (std::size_t row = 0; row < basis.size(); ++row) t[row][col] = coords[row];
  }
  return t;
}

namespace {

IntMatrix invert_unimodular(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("transition matrix is singular");
    std::swap(a[col], a[pivot]);
    const mpq_class inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const mpq_class f = a[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  IntMatrix out(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class& x = a[i][n + j];
      x.canonicalize();
      if (x.get_den() != 1) throw std::logic_error("transition matrix is not unimodular");
      out[i][j] = x.get_num();
    }
  }
  return out;
}

const IntMatrix& inverse_transition(int d, int r) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, IntMatrix> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({d, r});
  if (it == cache.end()) it = cache.emplace(std::pair{d, r}, invert_unimodular(schur_q_transition(d, r))).first;
  return it->second;
}

}  // namespace

GrKClass GrKClass::zero(int d, int r) {
  return GrKClass{d, r, std::vector<Integer>(grassmannian_basis(d, r).size(), 0)};
}

GrKClass GrKClass::basis(int d, int r, const Partition& lam) {
  if (!fits_rectangle(lam, r, d - r))
    throw std::invalid_argument("partition " + lam.to_string() + " is outside the " + std::to_string(r) + "x" +
                                std::to_string(d - r) + " rectangle");
  GrKClass c = zero(d, r);
  const auto b = grassmannian_basis(d, r);
  c.coeffs[static_cast<std::size_t>(std::find(b.begin(), b.end(), lam) - b.begin())] = 1;
  return c;
}

BundleClass to_bundle(const GrKClass& c) {
  const auto basis = grassmannian_basis(c.d, c.r);
  if (c.coeffs.size() != basis.size()) throw std::invalid_argument("GrKClass has the wrong number of coordinates");
  BundleClass out(c.d, c.r);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    BundleClass term = BundleClass::schur_q(c.d, c.r, basis[k]);
    term *= c.coeffs[k];
    out += term;
  }
  return out;
}

GrKClass to_gr_class(const BundleClass& bundle) {
  const auto y = dual_basis_coordinates(bundle);
  const IntMatrix& inv = inverse_transition(bundle.d(), bundle.r());
  GrKClass out = GrKClass::zero(bundle.d(), bundle.r());
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out.coeffs[i] += inv[i][j] * y[j];
  return out;
}

GrKClass serre_dual_gr(const GrKClass& c) {
  const int d = c.d;
  const int r = c.r;
  // ω_Y = det(R ⊗ Q*) = det(Q)^{−(d−r)} ⊗ det(R)^{r}; dim Y = r(d − r).
  const BundleClass source = to_bundle(c);
  BundleClass target(d, d - r);
  const bool odd = (r * (d - r)) % 2 != 0;
  for (const auto& [k, coeff] : source.terms()) {
    Weight q = dual(Weight(k.first));
    Weight rr = dual(Weight(k.second));
    for (int& x : q.entries) x -= d - r;
    for (int& x : rr.entries) x += r;
    // On Gr_{d−r}(E*): Q' = R*, R' = Q*, so S_q(Q) ⊗ S_rr(R) = S_{rr*}(Q') ⊗ S_{q*}(R').
    target.add(dual(rr), dual(q), odd ? Integer(-coeff) : coeff);
  }
  return to_gr_class(target);
}

KClass::KClass(int d) : d_(d) {
  if (d < 0) throw std::invalid_argument("KClass: d must be nonnegative");
}

SchurElement KClass::coeff(int r, const Partition& lam) const {
  auto b = blocks_.find(r);
  if (b == blocks_.end()) return {};
  auto it = b->second.find(lam);
  return it == b->second.end() ? SchurElement{} : it->second;
}

void KClass::add(int r, const Partition& lam, const SchurElement& a) {
  if (r < 0 || r > d_) throw std::invalid_argument("KClass: block index out of range");
  if (!fits_rectangle(lam, r, d_ - r))
    throw std::invalid_argument("KClass: partition " + lam.to_string() + " is outside the " + std::to_string(r) + "x" +
                                std::to_string(d_ - r) + " rectangle");
  if (a.is_zero()) return;
  Block& block = blocks_[r];
  SchurElement& slot = block[lam];
  slot += a;
  if (slot.is_zero()) {
    block.erase(lam);
    if (block.empty()) blocks_.erase(r);
  }
}

KClass& KClass::operator+=(const KClass& other) {
  if (other.d_ != d_) throw std::invalid_argument("KClass: mismatched d");
  for (const auto& [r, block] : other.blocks_)
    for (const auto& [lam, a] : block) add(r, lam, a);
  return *this;
}

KClass& KClass::operator-=(const KClass& other) {
  if (other.d_ != d_) throw std::invalid_argument("KClass: mismatched d");
  for (const auto& [r, block] : other.blocks_)
    for (const auto& [lam, a] : block) add(r, lam, -a);
  return *this;
}

KClass& KClass::operator*=(const SchurElement& a) {
  KClass out(d_);
  for (const auto& [r, block] : blocks_)
    for (const auto& [lam, c] : block) out.add(r, lam, multiply(a, c));
  return *this = std::move(out);
}

std::size_t k_rank(int d) {
  std::size_t total = 0;
  for (int r = 0; r <= d; ++r) total += grassmannian_basis(d, r).size();
  return total;
}

KClass basis_class(int r, const Partition& lam, const Partition& mu_v, int d) {
  KClass x(d);
  x.add(r, lam, SchurElement::basis(mu_v));
  return x;
}

KClass project_block(const KClass& x, int r) {
  if (r < 0 || r > x.d()) throw std::invalid_argument("project_block: block index out of range");
  KClass out(x.d());
  if (auto it = x.blocks().find(r); it != x.blocks().end())
    for (const auto& [lam, a] : it->second) out.add(r, lam, a);
  return out;
}

KClass fourier(const KClass& x) {
  const int d = x.d();
  KClass out(d);
  for (const auto& [r, block] : x.blocks()) {
    const auto target_basis = grassmannian_basis(d, d - r);
    for (const auto& [lam, a] : block) {
      const GrKClass image = serre_dual_gr(GrKClass::basis(d, r, lam));
      const SchurElement a_star = star(a);
      for (std::size_t k = 0; k < target_basis.size(); ++k)
        if (image.coeffs[k] != 0) out.add(d - r, target_basis[k], a_star * image.coeffs[k]);
    }
  }
  return out;
}

}  // namespace tca
