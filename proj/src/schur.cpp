#include "tca/schur.hpp"

#include <mutex>
#include <sstream>
#include <tuple>

namespace tca {

namespace {

// Fills the skew diagram ν/λ in reading order (rows top to bottom, each row
// right to left), counting fillings that are semistandard, have content μ and
// whose reading word is a lattice word.
class LrCounter {
 public:
  LrCounter(const Partition& lam, const Partition& mu, const Partition& nu) : lam_(lam), mu_(mu), nu_(nu) {
    for (int i = 0; i < nu.length(); ++i)
      for (int c = nu[i] - 1; c >= lam[i]; --c) cells_.emplace_back(i, c);
    filling_.assign(static_cast<std::size_t>(nu.length()), std::vector<int>(static_cast<std::size_t>(nu.first()), 0));
    count_.assign(static_cast<std::size_t>(mu.length()) + 1, 0);
  }

  std::uint64_t run() { return place(0); }

 private:
  std::uint64_t place(std::size_t k) {
    if (k == cells_.size()) return 1;
    auto [row, col] = cells_[k];
    const auto r = static_cast<std::size_t>(row);
    const auto c = static_cast<std::size_t>(col);
    int hi = mu_.length();
    // Row weakly increasing: bounded by the cell to the right (already filled).
    if (col + 1 < nu_[r]) hi = std::min(hi, filling_[r][c + 1]);
    // Entries in row i of an LR tableau never exceed i + 1.
    hi = std::min(hi, row + 1);
    int lo = 1;
    // Columns strictly increasing: bounded below by the cell above when it is
    // part of the skew shape.
    if (row > 0 && col >= lam_[r - 1]) lo = filling_[r - 1][c] + 1;
    std::uint64_t total = 0;
    for (int v = lo; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (count_[vi] >= mu_[vi - 1]) continue;
      if (v > 1 && count_[vi] + 1 > count_[vi - 1]) continue;
      ++count_[vi];
      filling_[r][c] = v;
      total += place(k + 1);
      --count_[vi];
    }
    filling_[r][c] = 0;
    return total;
  }

  const Partition& lam_;
  const Partition& mu_;
  const Partition& nu_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<std::vector<int>> filling_;
  std::vector<int> count_;
};

using LrKey = std::tuple<Partition, Partition, Partition>;

std::mutex& memo_mutex() {
  static std::mutex m;
  return m;
}

std::map<LrKey, std::uint64_t>& memo() {
  static std::map<LrKey, std::uint64_t> table;
  return table;
}

}  // namespace

std::uint64_t lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
  if (nu.size() != lam.size() + mu.size()) return 0;
  if (!nu.contains(lam) || !nu.contains(mu)) return 0;
  if (mu.empty() || lam.empty()) return 1;  // ν equals the other factor here.
  LrKey key{lam, mu, nu};
  {
    std::lock_guard lock(memo_mutex());
    if (auto it = memo().find(key); it != memo().end()) return it->second;
  }
  std::uint64_t value = LrCounter(lam, mu, nu).run();
  std::lock_guard lock(memo_mutex());
  memo().emplace(std::move(key), value);
  return value;
}

std::vector<std::pair<Partition, std::uint64_t>> lr_product(const Partition& lam, const Partition& mu,
                                                           int max_length) {
  int rows = lam.length() + mu.length();
  if (max_length >= 0) rows = std::min(rows, max_length);
  std::vector<std::pair<Partition, std::uint64_t>> out;
  if (lam.length() > rows || mu.length() > rows) return out;
  for (const Partition& nu : partitions_of(lam.size() + mu.size(), rows, lam.first() + mu.first())) {
    if (auto c = lr_coefficient(lam, mu, nu)) out.emplace_back(nu, c);
  }
  return out;
}

Integer schur_dimension(const Partition& lam, int n) {
  if (lam.length() > n) return 0;
  Integer num = 1;
  Integer den = 1;
  const Partition conj = transpose(lam);
  for (int i = 0; i < lam.length(); ++i) {
    for (int j = 0; j < lam[static_cast<std::size_t>(i)]; ++j) {
      num *= n + j - i;
      den *= (lam[static_cast<std::size_t>(i)] - j - 1) + (conj[static_cast<std::size_t>(j)] - i - 1) + 1;
    }
  }
  return num / den;
}

Integer weyl_dimension(const Weight& v) {
  if (!v.is_dominant()) throw std::invalid_argument("weyl_dimension needs a dominant weight");
  if (v.entries.empty()) return 1;
  const int shift = v.entries.back();
  std::vector<int> parts(v.entries);
  for (int& x : parts) x -= shift;
  return schur_dimension(Partition(std::move(parts)), static_cast<int>(v.length()));
}

SchurElement SchurElement::basis(const Partition& p, const Integer& coeff) {
  SchurElement e;
  e.add(p, coeff);
  return e;
}

Integer SchurElement::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SchurElement::add(const Partition& p, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SchurElement& SchurElement::operator+=(const SchurElement& other) {
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

SchurElement& SchurElement::operator-=(const SchurElement& other) {
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

SchurElement& SchurElement::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scalar;
  return *this;
}

std::string SchurElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) out << mag.get_str() << ' ';
    out << 's' << p.to_string();
    first = false;
  }
  return out.str();
}

SchurElement multiply(const SchurElement& a, const SchurElement& b) {
  SchurElement out;
  for (const auto& [p, c] : a.terms())
    for (const auto& [q, d] : b.terms())
      for (const auto& [nu, m] : lr_product(p, q)) out.add(nu, c * d * Integer(static_cast<unsigned long>(m)));
  return out;
}

SchurElement star(const SchurElement& a) {
  SchurElement out;
  for (const auto& [p, c] : a.terms()) out.add(transpose(p), p.size() % 2 == 0 ? c : Integer(-c));
  return out;
}

}  // namespace tca
