#include "tca/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace tca {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(std::size_t n) const {
  if (n < parts_.size()) throw std::invalid_argument("cannot pad a partition to fewer rows than it has");
  std::vector<int> out(parts_);
  out.resize(n, 0);
  return out;
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  // Larger in lexicographic order comes first.
  return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
                                                a.parts_.end());
}

Partition transpose(const Partition& p) {
  std::vector<int> t(static_cast<std::size_t>(p.first()), 0);
  for (int row : p.parts())
    for (int c = 0; c < row; ++c) ++t[static_cast<std::size_t>(c)];
  return Partition(std::move(t));
}

bool fits_rectangle(const Partition& p, int rows, int cols) {
  return p.length() <= rows && p.first() <= cols;
}

namespace {

void generate(int remaining, int max_part, int slots, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (slots == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    generate(remaining - p, p, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_length, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  generate(n, max_part < 0 ? n : max_part, max_length < 0 ? n : max_length, cur, out);
  // generate() already emits in descending lexicographic order.
  return out;
}

std::vector<Partition> partitions_up_to(int max_size, int max_length, int max_part) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto level = partitions_of(n, max_length, max_part);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Partition> partitions_in_rectangle(int rows, int cols) {
  if (rows < 0 || cols < 0) return {};
  return partitions_up_to(rows * cols, rows, cols);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  auto fail = [&](std::string_view token) -> ParseError {
    std::ostringstream msg;
    msg << "malformed " << what << " literal '" << text << "': offending token '" << token << "'";
    return ParseError(msg.str());
  };
  std::string_view body = trim(text);
  if (body.empty() || body.front() != '[') throw fail(body.substr(0, 1));
  if (body.back() != ']') throw fail(body.substr(body.size() - 1));
  body = trim(body.substr(1, body.size() - 2));
  std::vector<int> values;
  if (body.empty()) return values;
  while (true) {
    auto comma = body.find(',');
    std::string_view token = trim(body.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) throw fail(token);
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  return values;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  std::vector<int> parts = parse_int_list(text, "partition");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0 || (i > 0 && parts[i] > parts[i - 1])) {
      std::ostringstream msg;
      msg << "malformed partition literal '" << text << "': offending token '" << parts[i]
          << "' (parts must be nonnegative and weakly decreasing)";
      throw ParseError(msg.str());
    }
  }
  return Partition(std::move(parts));
}

bool Weight::is_dominant() const {
  return std::is_sorted(entries.begin(), entries.end(), std::greater<>());
}

std::string Weight::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries[i]);
  }
  return s + "]";
}

Weight parse_weight(std::string_view text) { return Weight(parse_int_list(text, "weight")); }

Weight as_weight(const Partition& p, std::size_t n) { return Weight(p.padded(n)); }

Weight dual(const Weight& v) {
  Weight out;
  out.entries.reserve(v.length());
  for (auto it = v.entries.rbegin(); it != v.entries.rend(); ++it) out.entries.push_back(-*it);
  return out;
}

int WeightWithTail::at(std::size_t i) const {
  if (i < head.length()) return head.entries[i];
  return tail[i - head.length()];
}

std::vector<int> WeightWithTail::truncate(std::size_t len) const {
  std::vector<int> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = at(i);
  return out;
}

WeightWithTail concat_weight(const Weight& head, const Partition& mu) { return {head, mu}; }

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
  return h;
}

}  // namespace tca
