// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROPCON_CANDIDATE_SET_HPP_
#define PROPCON_CANDIDATE_SET_HPP_

#include <array>
#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace propcon {

inline constexpr int kMaxCandidates = 512;

// Fixed-capacity bitset over candidate indices. Ordering is lexicographic on
// the sorted index sequence, which is the enumeration order used everywhere.
class CandidateSet {
 public:
  static constexpr int kWords = kMaxCandidates / 64;

  CandidateSet() = default;
  CandidateSet(std::initializer_list<int> elements) {
    for (int c : elements) insert(c);
  }
  static CandidateSet from_indices(const std::vector<int>& elements) {
    CandidateSet s;
    for (int c : elements) s.insert(c);
    return s;
  }
  // {0, ..., m-1}
  static CandidateSet prefix(int m) {
    CandidateSet s;
    for (int c = 0; c < m; ++c) s.insert(c);
    return s;
  }

  void insert(int c) {
    assert(c >= 0 && c < kMaxCandidates);
    words_[c >> 6] |= std::uint64_t{1} << (c & 63);
  }
  void erase(int c) { words_[c >> 6] &= ~(std::uint64_t{1} << (c & 63)); }
  bool contains(int c) const {
    return (words_[c >> 6] >> (c & 63)) & 1;
  }

  int size() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
  }
  bool empty() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  // Index of the largest element, or -1.
  int max_element() const {
    for (int i = kWords - 1; i >= 0; --i) {
      if (words_[i] != 0) return i * 64 + 63 - std::countl_zero(words_[i]);
    }
    return -1;
  }

  bool is_subset_of(const CandidateSet& other) const {
    for (int i = 0; i < kWords; ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }
  bool intersects(const CandidateSet& other) const {
    for (int i = 0; i < kWords; ++i) {
      if (words_[i] & other.words_[i]) return true;
    }
    return false;
  }
  int intersection_size(const CandidateSet& other) const {
    int total = 0;
    for (int i = 0; i < kWords; ++i) {
      total += std::popcount(words_[i] & other.words_[i]);
    }
    return total;
  }

  CandidateSet& operator|=(const CandidateSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  CandidateSet& operator&=(const CandidateSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  CandidateSet& operator-=(const CandidateSet& o) {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend CandidateSet operator|(CandidateSet a, const CandidateSet& b) {
    return a |= b;
  }
  friend CandidateSet operator&(CandidateSet a, const CandidateSet& b) {
    return a &= b;
  }
  friend CandidateSet operator-(CandidateSet a, const CandidateSet& b) {
    return a -= b;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        f(i * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }
  std::vector<int> indices() const {
    std::vector<int> out;
    for_each([&](int c) { out.push_back(c); });
    return out;
  }

  friend bool operator==(const CandidateSet&, const CandidateSet&) = default;

  friend std::strong_ordering operator<=>(const CandidateSet& a,
                                          const CandidateSet& b) {
    for (int i = 0; i < kWords; ++i) {
      std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff == 0) continue;
      int bit = std::countr_zero(diff);
      int c = i * 64 + bit;
      // The set holding the lowest differing element sorts first unless the
      // other set ends there (a proper prefix sorts first).
      if ((a.words_[i] >> bit) & 1) {
        return b.has_element_above(c) ? std::strong_ordering::less
                                      : std::strong_ordering::greater;
      }
      return a.has_element_above(c) ? std::strong_ordering::greater
                                    : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (std::uint64_t w : words_) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }

 private:
  bool has_element_above(int c) const {
    int word = c >> 6;
    int bit = c & 63;
    if (bit < 63 && (words_[word] >> (bit + 1)) != 0) return true;
    for (int i = word + 1; i < kWords; ++i) {
      if (words_[i] != 0) return true;
    }
    return false;
  }

  std::array<std::uint64_t, kWords> words_{};
};

struct CandidateSetHash {
  std::size_t operator()(const CandidateSet& s) const { return s.hash(); }
};

}  // namespace propcon

#endif  // PROPCON_CANDIDATE_SET_HPP_
