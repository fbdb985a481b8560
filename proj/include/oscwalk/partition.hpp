#pragma once

#include <compare>
#include <string>
#include <vector>

#include "oscwalk/rational.hpp"

namespace oscwalk {

enum class CornerKind { Removable, Addable };

// A box position at which a Young diagram may grow or shrink while staying a
// valid diagram. Row/column indices are 0-based.
struct Corner {
  int row = 0;
  int col = 0;
  CornerKind kind = CornerKind::Removable;

  friend bool operator==(const Corner&, const Corner&) = default;
};

// Integer partition, i.e. a Young diagram: weakly decreasing positive parts.
// Value type with canonical form (no trailing zeros); equality is structural.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }  // box count |lambda|
  bool empty() const { return parts_.empty(); }
  int part(int row) const;  // 0 for rows at or below the diagram

  // Positions whose removal leaves a valid partition, ordered by row.
  std::vector<Corner> removable_corners() const;
  // Positions whose addition yields a valid partition, ordered by row.
  std::vector<Corner> addable_corners() const;

  // Applies a corner edit; throws std::invalid_argument if the corner is not
  // valid for this shape.
  Partition apply(const Corner& c) const;

  std::string to_string() const;  // "[2,1]", "[]" for the empty shape

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Number of standard Young tableaux of shape p, via the hook length formula.
// Exact; memoized per thread.
Int syt_count(const Partition& p);

// All partitions of exactly `size` boxes, in lexicographic order.
std::vector<Partition> partitions_of(int size);

}  // namespace oscwalk
