#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace zdg {

// Fixed-size bitset sized at runtime. Adjacency rows and vertex subsets are
// all stored this way; the solver's inner loops are popcounts over it.
class Bits {
 public:
  Bits() : size_(0) {}
  explicit Bits(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }

  void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void clear() { for (auto& w : words_) w = 0; }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : words_) if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  // |a & b|, the workhorse of subset_degree.
  static int and_count(const Bits& a, const Bits& b) {
    int c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      c += std::popcount(a.words_[i] & b.words_[i]);
    return c;
  }

  // true if a & b is nonempty
  static bool intersects(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      if (a.words_[i] & b.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const Bits& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  Bits operator~() const {
    Bits r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    int tail = size_ & 63;
    if (tail && !r.words_.empty()) r.words_.back() &= (uint64_t{1} << tail) - 1;
    return r;
  }

  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  bool operator==(const Bits& o) const { return size_ == o.size_ && words_ == o.words_; }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    for (int i = 0; i < size_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  static Bits from_indices(int size, const std::vector<int>& idx) {
    Bits b(size);
    for (int i : idx) b.set(i);
    return b;
  }

 private:
  int size_;
  std::vector<uint64_t> words_;
};

}  // namespace zdg
