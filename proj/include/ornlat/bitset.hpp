#pragma once

#include <cstdint>
#include <vector>

namespace ornlat {

// Dynamic bitset used for order relations and down/up sets of posets.
// Word 0 carries bits 0..63; all operands of binary ops must share a size.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

  int size() const { return n_; }

  void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }

  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset minus(Bitset a, const Bitset& b) { return a.subtract(b); }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator<(const Bitset& o) const { return w_ < o.w_; }  // word-lexicographic

  // -1 when no bit is set.
  int find_first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i) * 64 + __builtin_ctzll(w_[i]);
    return -1;
  }
  int find_next(int i) const {
    ++i;
    if (i >= n_) return -1;
    std::size_t k = std::size_t(i) >> 6;
    std::uint64_t w = w_[k] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (w) return int(k) * 64 + __builtin_ctzll(w);
      if (++k == w_.size()) return -1;
      w = w_[k];
    }
  }
  int find_last() const {
    for (std::size_t i = w_.size(); i-- > 0;)
      if (w_[i]) return int(i) * 64 + 63 - __builtin_clzll(w_[i]);
    return -1;
  }

  template <typename F>
  void for_each(F f) const {
    for (int i = find_first(); i >= 0; i = find_next(i)) f(i);
  }

private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Small-universe vertex sets: bit v-1 holds vertex v of [n], n <= 64.
using Vset = std::uint64_t;

inline Vset vbit(int v) { return Vset{1} << (v - 1); }
inline bool vhas(Vset s, int v) { return (s >> (v - 1)) & 1; }
inline int vcount(Vset s) { return __builtin_popcountll(s); }
inline int vmin(Vset s) { return __builtin_ctzll(s) + 1; }
inline int vmax(Vset s) { return 64 - __builtin_clzll(s); }

template <typename F>
inline void vfor_each(Vset s, F f) {
  while (s) {
    int v = __builtin_ctzll(s) + 1;
    f(v);
    s &= s - 1;
  }
}

}  // namespace ornlat
