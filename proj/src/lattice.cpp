#include "renormlab/lattice.hpp"

#include <algorithm>
#include <cctype>

#include "renormlab/errors.hpp"

namespace renormlab {

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      std::size_t is = i;
      std::size_t js = j;
      while (is + 1 < ie && a[is] == '0') ++is;
      while (js + 1 < je && b[js] == '0') ++js;
      const std::size_t la = ie - is;
      const std::size_t lb = je - js;
      if (la != lb) return la < lb;
      const int c = a.compare(is, la, b, js, lb);
      if (c != 0) return c < 0;
      // Equal numeric value; fall back to the raw run so "01" and "1" differ.
      if (ie - i != je - j) return ie - i < je - j;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

IndexSet::IndexSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) positions_.emplace(labels_[i], i);
}

std::shared_ptr<const IndexSet> IndexSet::make(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end(), natural_less);
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i] == labels[i - 1]) throw DomainError("duplicate index label '" + labels[i] + "'");
  }
  return std::shared_ptr<const IndexSet>(new IndexSet(std::move(labels)));
}

std::shared_ptr<const IndexSet> IndexSet::numbered(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return make(std::move(labels));
}

std::optional<std::size_t> IndexSet::find(const std::string& label) const {
  const auto it = positions_.find(label);
  if (it == positions_.end()) return std::nullopt;
  return it->second;
}

std::size_t IndexSet::index_of(const std::string& label) const {
  const auto pos = find(label);
  if (!pos) throw DomainError("unknown index label '" + label + "'");
  return *pos;
}

Subset IndexSet::subset_of(const std::vector<std::string>& labels) const {
  Subset s(size());
  for (const auto& l : labels) s.insert(index_of(l));
  return s;
}

std::vector<std::string> IndexSet::labels_of(const Subset& s) const {
  std::vector<std::string> out;
  for (std::size_t i = s.first(); i < s.universe(); i = s.next(i)) out.push_back(labels_.at(i));
  return out;
}

void require_same_ground(const IndexSetPtr& a, const IndexSetPtr& b, const char* op) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw DomainError(std::string(op) + ": mismatched index sets");
}

const char* to_string(Order o) {
  switch (o) {
    case Order::equal: return "equal";
    case Order::less: return "less";
    case Order::greater: return "greater";
    case Order::incomparable: return "incomparable";
  }
  return "?";
}

LatticeVector::LatticeVector(IndexSetPtr gamma) : gamma_(std::move(gamma)) {
  if (!gamma_) throw DomainError("LatticeVector: null index set");
}

LatticeVector::LatticeVector(IndexSetPtr gamma, std::vector<Entry> entries) : LatticeVector(std::move(gamma)) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].index >= gamma_->size()) throw DomainError("LatticeVector: index out of range");
    if (i > 0 && entries[i].index == entries[i - 1].index) throw DomainError("LatticeVector: duplicate index");
    if (entries[i].value != 0) entries_.push_back(std::move(entries[i]));
  }
}

LatticeVector LatticeVector::from_dense(IndexSetPtr gamma, const std::vector<Rational>& values) {
  LatticeVector v(std::move(gamma));
  if (values.size() != v.dimension()) throw DomainError("from_dense: length does not match index set");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0) v.entries_.push_back({i, values[i]});
  }
  return v;
}

LatticeVector LatticeVector::indicator(IndexSetPtr gamma, const Subset& subset) {
  LatticeVector v(std::move(gamma));
  if (subset.universe() != v.dimension()) throw DomainError("indicator: subset universe mismatch");
  for (std::size_t i = subset.first(); i < subset.universe(); i = subset.next(i)) v.entries_.push_back({i, Rational(1)});
  return v;
}

LatticeVector LatticeVector::unit(IndexSetPtr gamma, std::size_t index) {
  LatticeVector v(std::move(gamma));
  if (index >= v.dimension()) throw DomainError("unit: index out of range");
  v.entries_.push_back({index, Rational(1)});
  return v;
}

Rational LatticeVector::at(std::size_t index) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                                   [](const Entry& e, std::size_t i) { return e.index < i; });
  if (it != entries_.end() && it->index == index) return it->value;
  return Rational(0);
}

Subset LatticeVector::support() const {
  Subset s(dimension());
  for (const auto& e : entries_) s.insert(e.index);
  return s;
}

std::vector<Rational> LatticeVector::dense() const {
  std::vector<Rational> out(dimension());
  for (const auto& e : entries_) out[e.index] = e.value;
  return out;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector out(*this);
  for (auto& e : out.entries_) e.value = -e.value;
  return out;
}

namespace {

template <typename Op>
LatticeVector combine(const LatticeVector& a, const LatticeVector& b, Op op, const char* name) {
  require_same_ground(a.gamma_ptr(), b.gamma_ptr(), name);
  std::vector<LatticeVector::Entry> out;
  const auto ea = a.entries();
  const auto eb = b.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  const Rational zero(0);
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i].index < eb[j].index)) {
      out.push_back({ea[i].index, op(ea[i].value, zero)});
      ++i;
    } else if (i == ea.size() || eb[j].index < ea[i].index) {
      out.push_back({eb[j].index, op(zero, eb[j].value)});
      ++j;
    } else {
      out.push_back({ea[i].index, op(ea[i].value, eb[j].value)});
      ++i;
      ++j;
    }
  }
  return LatticeVector(a.gamma_ptr(), std::move(out));
}

}  // namespace

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  return combine(a, b, [](const Rational& p, const Rational& q) { return Rational(p + q); }, "add");
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  return combine(a, b, [](const Rational& p, const Rational& q) { return Rational(p - q); }, "subtract");
}

LatticeVector operator*(const Rational& c, const LatticeVector& a) {
  LatticeVector out(a.gamma_ptr());
  if (c == 0) return out;
  for (const auto& e : a.entries_) out.entries_.push_back({e.index, c * e.value});
  return out;
}

bool operator==(const LatticeVector& a, const LatticeVector& b) {
  if (a.gamma_ != b.gamma_ && !(*a.gamma_ == *b.gamma_)) return false;
  return a.entries_ == b.entries_;
}

LatticeVector meet(const LatticeVector& x, const LatticeVector& y) {
  return combine(x, y, [](const Rational& p, const Rational& q) { return p < q ? p : q; }, "meet");
}

LatticeVector join(const LatticeVector& x, const LatticeVector& y) {
  return combine(x, y, [](const Rational& p, const Rational& q) { return p < q ? q : p; }, "join");
}

LatticeVector abs(const LatticeVector& x) {
  std::vector<LatticeVector::Entry> out;
  for (const auto& e : x.entries()) out.push_back({e.index, abs(e.value)});
  return LatticeVector(x.gamma_ptr(), std::move(out));
}

LatticeVector abs_restrict(const LatticeVector& x, const Subset& subset) {
  std::vector<LatticeVector::Entry> out;
  for (const auto& e : x.entries()) {
    if (subset.contains(e.index)) out.push_back({e.index, abs(e.value)});
  }
  return LatticeVector(x.gamma_ptr(), std::move(out));
}

LatticeVector restrict_to(const LatticeVector& x, const Subset& subset) {
  std::vector<LatticeVector::Entry> out;
  for (const auto& e : x.entries()) {
    if (subset.contains(e.index)) out.push_back(e);
  }
  return LatticeVector(x.gamma_ptr(), std::move(out));
}

Order pointwise_compare(const LatticeVector& x, const LatticeVector& y) {
  const LatticeVector diff = y - x;
  bool some_pos = false;
  bool some_neg = false;
  for (const auto& e : diff.entries()) {
    if (e.value > 0) some_pos = true;
    else some_neg = true;
  }
  if (!some_pos && !some_neg) return Order::equal;
  if (some_pos && !some_neg) return Order::less;
  if (some_neg && !some_pos) return Order::greater;
  return Order::incomparable;
}

bool abs_strictly_below(const LatticeVector& x, const LatticeVector& y) {
  return pointwise_compare(abs(x), abs(y)) == Order::less;
}

Rational sum_over(const LatticeVector& x, const Subset& subset) {
  Rational s(0);
  for (const auto& e : x.entries()) {
    if (subset.contains(e.index)) s += e.value;
  }
  return s;
}

}  // namespace renormlab
