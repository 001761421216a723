#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "renormlab/rational.hpp"
#include "renormlab/subset.hpp"

namespace renormlab {

/// A finite set of atom labels in canonical (natural) order.
///
/// Labels are sorted so that runs of digits compare numerically:
/// "n2" < "n10", "0,2" < "0,10".
class IndexSet {
 public:
  /// Throws DomainError on duplicate labels.
  static std::shared_ptr<const IndexSet> make(std::vector<std::string> labels);
  /// Labels "0", ..., "n-1".
  static std::shared_ptr<const IndexSet> numbered(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find(const std::string& label) const;
  /// Throws DomainError for an unknown label.
  std::size_t index_of(const std::string& label) const;

  Subset subset_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const Subset& s) const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.labels_ == b.labels_; }

 private:
  explicit IndexSet(std::vector<std::string> labels);

  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> positions_;
};

using IndexSetPtr = std::shared_ptr<const IndexSet>;

/// Natural-order label comparison used by IndexSet.
bool natural_less(const std::string& a, const std::string& b);

/// Throws DomainError unless both ground sets are equal.
void require_same_ground(const IndexSetPtr& a, const IndexSetPtr& b, const char* op);

/// Finite-support vector over an IndexSet with exact rational entries.
/// Entries are kept sorted by index with zeros dropped.
class LatticeVector {
 public:
  struct Entry {
    std::size_t index;
    Rational value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  explicit LatticeVector(IndexSetPtr gamma);
  /// Duplicate indices or out-of-range indices throw DomainError.
  LatticeVector(IndexSetPtr gamma, std::vector<Entry> entries);

  static LatticeVector from_dense(IndexSetPtr gamma, const std::vector<Rational>& values);
  static LatticeVector indicator(IndexSetPtr gamma, const Subset& subset);
  static LatticeVector unit(IndexSetPtr gamma, std::size_t index);

  const IndexSet& gamma() const { return *gamma_; }
  const IndexSetPtr& gamma_ptr() const { return gamma_; }
  std::size_t dimension() const { return gamma_->size(); }

  std::span<const Entry> entries() const { return entries_; }
  Rational at(std::size_t index) const;
  Subset support() const;
  std::size_t support_size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  std::vector<Rational> dense() const;

  LatticeVector operator-() const;
  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator*(const Rational& c, const LatticeVector& a);

  friend bool operator==(const LatticeVector& a, const LatticeVector& b);

 private:
  IndexSetPtr gamma_;
  std::vector<Entry> entries_;
};

/// Result of comparing two vectors in the pointwise order.
enum class Order { equal, less, greater, incomparable };

const char* to_string(Order o);

LatticeVector meet(const LatticeVector& x, const LatticeVector& y);
LatticeVector join(const LatticeVector& x, const LatticeVector& y);
LatticeVector abs(const LatticeVector& x);
/// |x| restricted to `subset`, zero elsewhere.
LatticeVector abs_restrict(const LatticeVector& x, const Subset& subset);
/// x restricted to `subset` (signs kept).
LatticeVector restrict_to(const LatticeVector& x, const Subset& subset);

/// `less` iff x <= y coordinatewise and x != y.
Order pointwise_compare(const LatticeVector& x, const LatticeVector& y);

/// |x| < |y| in the lattice strict order.
bool abs_strictly_below(const LatticeVector& x, const LatticeVector& y);

/// Σ_{γ∈A} x_γ.
Rational sum_over(const LatticeVector& x, const Subset& subset);

}  // namespace renormlab
