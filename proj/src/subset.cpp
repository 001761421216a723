#include "renormlab/subset.hpp"

namespace renormlab {

Subset::Subset(std::size_t universe, std::initializer_list<std::size_t> elements) : bits_(universe) {
  for (std::size_t e : elements) bits_.set(e);
}

Subset Subset::from_elements(std::size_t universe, const std::vector<std::size_t>& elements) {
  Subset s(universe);
  for (std::size_t e : elements) s.bits_.set(e);
  return s;
}

Subset Subset::full(std::size_t universe) {
  Subset s(universe);
  s.bits_.set();
  return s;
}

Subset Subset::from_mask(std::size_t universe, std::uint64_t mask) {
  Subset s(universe);
  for (std::size_t i = 0; i < universe && i < 64; ++i) {
    if ((mask >> i) & 1U) s.bits_.set(i);
  }
  return s;
}

std::size_t Subset::first() const {
  const auto pos = bits_.find_first();
  return pos == boost::dynamic_bitset<std::uint64_t>::npos ? bits_.size() : pos;
}

std::size_t Subset::next(std::size_t i) const {
  const auto pos = bits_.find_next(i);
  return pos == boost::dynamic_bitset<std::uint64_t>::npos ? bits_.size() : pos;
}

std::vector<std::size_t> Subset::elements() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::size_t i = first(); i < universe(); i = next(i)) out.push_back(i);
  return out;
}

std::size_t Subset::hash() const {
  std::size_t h = bits_.size() * 0x9e3779b97f4a7c15ULL;
  std::vector<std::uint64_t> blocks;
  boost::to_block_range(bits_, std::back_inserter(blocks));
  for (std::uint64_t b : blocks) {
    h ^= std::hash<std::uint64_t>{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool operator<(const Subset& a, const Subset& b) {
  const std::size_t ca = a.size();
  const std::size_t cb = b.size();
  if (ca != cb) return ca < cb;
  std::size_t i = a.first();
  std::size_t j = b.first();
  while (i < a.universe() && j < b.universe()) {
    if (i != j) return i < j;
    i = a.next(i);
    j = b.next(j);
  }
  return a.universe() < b.universe();
}

}  // namespace renormlab
