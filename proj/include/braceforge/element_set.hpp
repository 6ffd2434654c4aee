#pragma once

#include <initializer_list>
#include <numeric>
#include <vector>

#include "braceforge/errors.hpp"

namespace braceforge {

// Subset of a carrier {0, ..., carrier_order-1}, stored as a bitset.
// Comparison is structural, so sets deduplicate and order deterministically
// in standard containers.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int carrier_order) : bits_(carrier_order, false) {}

  static ElementSet empty(int carrier_order) { return ElementSet(carrier_order); }

  static ElementSet full(int carrier_order) {
    ElementSet s(carrier_order);
    s.bits_.assign(carrier_order, true);
    return s;
  }

  static ElementSet singleton(int carrier_order, int x) {
    ElementSet s(carrier_order);
    s.insert(x);
    return s;
  }

  static ElementSet of(int carrier_order, std::initializer_list<int> xs) {
    ElementSet s(carrier_order);
    for (int x : xs) s.insert(x);
    return s;
  }

  static ElementSet from_indices(int carrier_order, const std::vector<int>& xs) {
    ElementSet s(carrier_order);
    for (int x : xs) s.insert(x);
    return s;
  }

  int carrier_order() const { return static_cast<int>(bits_.size()); }

  bool contains(int x) const { return bits_[x]; }

  void insert(int x) {
    if (x < 0 || x >= carrier_order())
      throw PreconditionError("element index out of carrier range");
    bits_[x] = true;
  }

  void erase(int x) { bits_[x] = false; }

  int size() const {
    int n = 0;
    for (bool b : bits_) n += b ? 1 : 0;
    return n;
  }

  bool is_empty() const { return size() == 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < carrier_order(); ++i)
      if (bits_[i]) out.push_back(i);
    return out;
  }

  bool subset_of(const ElementSet& o) const {
    require_same_carrier(o);
    for (int i = 0; i < carrier_order(); ++i)
      if (bits_[i] && !o.bits_[i]) return false;
    return true;
  }

  ElementSet intersect(const ElementSet& o) const {
    require_same_carrier(o);
    ElementSet r(carrier_order());
    for (int i = 0; i < carrier_order(); ++i) r.bits_[i] = bits_[i] && o.bits_[i];
    return r;
  }

  ElementSet unite(const ElementSet& o) const {
    require_same_carrier(o);
    ElementSet r(carrier_order());
    for (int i = 0; i < carrier_order(); ++i) r.bits_[i] = bits_[i] || o.bits_[i];
    return r;
  }

  bool operator==(const ElementSet& o) const { return bits_ == o.bits_; }
  bool operator!=(const ElementSet& o) const { return bits_ != o.bits_; }
  bool operator<(const ElementSet& o) const { return bits_ < o.bits_; }

 private:
  void require_same_carrier(const ElementSet& o) const {
    if (carrier_order() != o.carrier_order())
      throw PreconditionError("element sets live on different carriers");
  }

  std::vector<bool> bits_;
};

// Orders sets by size first, then lexicographically on the bitset.
struct ElementSetSizeLexLess {
  bool operator()(const ElementSet& a, const ElementSet& b) const {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a < b;
  }
};

}  // namespace braceforge
