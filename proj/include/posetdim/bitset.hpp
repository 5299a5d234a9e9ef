/*
Copyright 2026 The posetdim Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace posetdim {

// Fixed-size dynamic bitset. All binary operations require equal sizes.
class DynBitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  DynBitset() = default;
  explicit DynBitset(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  static DynBitset full(std::size_t size) {
    DynBitset b(size);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  DynBitset& operator|=(const DynBitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  DynBitset& operator&=(const DynBitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  DynBitset& subtract(const DynBitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }
  friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }

  bool is_subset_of(const DynBitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  bool intersects(const DynBitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  std::size_t find_first() const { return find_next_from(0); }
  // First set bit at index > i.
  std::size_t find_next(std::size_t i) const { return find_next_from(i + 1); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  // Raw little-endian word bytes; usable as a hash-map key.
  std::string key() const {
    return std::string(reinterpret_cast<const char*>(words_.data()),
                       words_.size() * sizeof(std::uint64_t));
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const DynBitset&, const DynBitset&) = default;

 private:
  std::size_t find_next_from(std::size_t i) const {
    if (i >= size_) return npos;
    std::size_t k = i >> 6;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (w) return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
      if (++k >= words_.size()) return npos;
      w = words_[k];
    }
  }

  void trim() {
    if (size_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace posetdim
