#include "oscwalk/partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oscwalk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("Partition: parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

int Partition::part(int row) const {
  return (row >= 0 && row < rows()) ? parts_[row] : 0;
}

std::vector<Corner> Partition::removable_corners() const {
  std::vector<Corner> out;
  for (int r = 0; r < rows(); ++r) {
    if (r + 1 == rows() || parts_[r] > parts_[r + 1])
      out.push_back({r, parts_[r] - 1, CornerKind::Removable});
  }
  return out;
}

std::vector<Corner> Partition::addable_corners() const {
  std::vector<Corner> out;
  for (int r = 0; r <= rows(); ++r) {
    if (r == 0 || parts_[r - 1] > part(r))
      out.push_back({r, part(r), CornerKind::Addable});
  }
  return out;
}

Partition Partition::apply(const Corner& c) const {
  std::vector<int> next = parts_;
  if (c.kind == CornerKind::Removable) {
    if (c.row < 0 || c.row >= rows() || c.col != parts_[c.row] - 1 ||
        (c.row + 1 < rows() && parts_[c.row] == parts_[c.row + 1]))
      throw std::invalid_argument("Partition::apply: not a removable corner");
    next[c.row] -= 1;
  } else {
    if (c.row < 0 || c.row > rows() || c.col != part(c.row) ||
        (c.row > 0 && parts_[c.row - 1] == part(c.row)))
      throw std::invalid_argument("Partition::apply: not an addable corner");
    if (c.row == rows())
      next.push_back(1);
    else
      next[c.row] += 1;
  }
  return Partition(std::move(next));
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

Int syt_count(const Partition& p) {
  thread_local std::map<std::vector<int>, Int> cache;
  if (auto it = cache.find(p.parts()); it != cache.end()) return it->second;

  // Hook length formula: f = |lambda|! / prod of hooks.
  const auto& parts = p.parts();
  std::vector<int> conjugate;  // conjugate[c] = #rows with part > c
  if (!parts.empty()) {
    conjugate.assign(parts[0], 0);
    for (int len : parts)
      for (int c = 0; c < len; ++c) conjugate[c] += 1;
  }
  Int hooks = 1;
  for (int r = 0; r < p.rows(); ++r)
    for (int c = 0; c < parts[r]; ++c)
      hooks *= (parts[r] - c) + (conjugate[c] - r) - 1;

  Int f = factorial(static_cast<unsigned long>(p.size()));
  mpz_divexact(f.get_mpz_t(), f.get_mpz_t(), hooks.get_mpz_t());
  cache.emplace(p.parts(), f);
  return f;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(prefix));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int size) {
  if (size < 0) throw std::invalid_argument("partitions_of: size must be >= 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(size, size == 0 ? 1 : size, prefix, out);
  return out;
}

}  // namespace oscwalk
