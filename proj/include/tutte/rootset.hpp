#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tutte {

// Fixed-size bit set over root indices.
class RootSet {
 public:
  RootSet() = default;
  explicit RootSet(std::size_t size);
  static RootSet full(std::size_t size);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void reset(std::size_t i) { set(i, false); }

  std::size_t count() const;
  bool none() const;
  RootSet complement() const;
  std::vector<int> indices() const;
  bool is_subset_of(const RootSet& other) const;

  RootSet& operator|=(const RootSet& other);
  RootSet& operator&=(const RootSet& other);

  bool operator==(const RootSet& other) const = default;
  // Compares bit strings read from index 0 upward.
  std::strong_ordering operator<=>(const RootSet& other) const;

  std::string to_string() const;
  std::uint64_t hash() const;

 private:
  void trim();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace tutte
