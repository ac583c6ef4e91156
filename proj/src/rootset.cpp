#include "tutte/rootset.hpp"

#include <bit>

#include "tutte/errors.hpp"

namespace tutte {

RootSet::RootSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

RootSet RootSet::full(std::size_t size) {
  RootSet s(size);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

bool RootSet::test(std::size_t i) const {
  if (i >= size_) throw ConstraintError("root index out of range");
  return (words_[i / 64] >> (i % 64)) & 1U;
}

void RootSet::set(std::size_t i, bool value) {
  if (i >= size_) throw ConstraintError("root index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (value)
    words_[i / 64] |= bit;
  else
    words_[i / 64] &= ~bit;
}

std::size_t RootSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool RootSet::none() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

RootSet RootSet::complement() const {
  RootSet s(*this);
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

std::vector<int> RootSet::indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) out.push_back(static_cast<int>(i));
  return out;
}

bool RootSet::is_subset_of(const RootSet& other) const {
  if (other.size_ != size_) throw ConstraintError("root set size mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] & ~other.words_[k]) return false;
  return true;
}

RootSet& RootSet::operator|=(const RootSet& other) {
  if (other.size_ != size_) throw ConstraintError("root set size mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

RootSet& RootSet::operator&=(const RootSet& other) {
  if (other.size_ != size_) throw ConstraintError("root set size mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

std::strong_ordering RootSet::operator<=>(const RootSet& other) const {
  if (auto c = size_ <=> other.size_; c != 0) return c;
  for (std::size_t i = 0; i < size_; ++i) {
    const bool a = test(i), b = other.test(i);
    if (a != b) return a ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::string RootSet::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

std::uint64_t RootSet::hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ size_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return h;
}

void RootSet::trim() {
  if (size_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

}  // namespace tutte
