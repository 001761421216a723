#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace renormlab {

/// A subset of {0, ..., universe-1}, stored as a bitset.
///
/// The total order `<` is the canonical member order used everywhere in the
/// library: by cardinality first, then lexicographically on the sorted
/// element lists.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : bits_(universe) {}
  Subset(std::size_t universe, std::initializer_list<std::size_t> elements);

  static Subset from_elements(std::size_t universe, const std::vector<std::size_t>& elements);
  static Subset full(std::size_t universe);
  /// Low `universe` bits of `mask`.
  static Subset from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(std::size_t i) const { return i < bits_.size() && bits_.test(i); }

  void insert(std::size_t i) { bits_.set(i); }
  void erase(std::size_t i) { bits_.reset(i); }

  bool is_subset_of(const Subset& other) const { return bits_.is_subset_of(other.bits_); }
  bool is_proper_subset_of(const Subset& other) const { return bits_.is_proper_subset_of(other.bits_); }
  bool intersects(const Subset& other) const { return bits_.intersects(other.bits_); }

  /// Smallest element, or universe() when empty.
  std::size_t first() const;
  /// Next element after i, or universe() when none.
  std::size_t next(std::size_t i) const;
  std::vector<std::size_t> elements() const;

  Subset operator&(const Subset& o) const { return Subset(bits_ & o.bits_); }
  Subset operator|(const Subset& o) const { return Subset(bits_ | o.bits_); }
  Subset operator-(const Subset& o) const { return Subset(bits_ - o.bits_); }

  std::size_t hash() const;

  friend bool operator==(const Subset& a, const Subset& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const Subset& a, const Subset& b);

 private:
  explicit Subset(boost::dynamic_bitset<std::uint64_t> bits) : bits_(std::move(bits)) {}

  boost::dynamic_bitset<std::uint64_t> bits_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.hash(); }
};

}  // namespace renormlab
