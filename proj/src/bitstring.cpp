// Copyright 2026 The Scramble Authors
// SPDX-License-Identifier: Apache-2.0

#include "scramble/bitstring.hpp"

#include <bit>

#include "scramble/errors.hpp"

namespace scramble {

namespace {
std::size_t word_count(int size) {
  return static_cast<std::size_t>(size + 63) >> 6;
}
}  // namespace

BitString::BitString(int size) : words_(word_count(size), 0), size_(size) {
  if (size < 0) throw InvalidInput("bit string size must be nonnegative");
}

BitString BitString::from_ascii(std::string_view text) {
  BitString out(static_cast<int>(text.size()));
  for (int i = 0; i < out.size_; ++i) {
    const char c = text[static_cast<std::size_t>(i)];
    if (c == '1') {
      out.set(i);
    } else if (c != '0') {
      throw InvalidInput("bit string may contain only '0' and '1'");
    }
  }
  return out;
}

BitString BitString::from_sites(int size, std::span<const int> occupied) {
  BitString out(size);
  for (int site : occupied) {
    if (site < 0 || site >= size)
      throw InvalidInput("occupied site out of range");
    out.set(site);
  }
  return out;
}

int BitString::popcount() const {
  int n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

void BitString::set(int site, bool value) {
  std::uint64_t& w = words_[static_cast<std::size_t>(site) >> 6];
  const std::uint64_t mask = std::uint64_t{1} << (site & 63);
  if (value) {
    w |= mask;
  } else {
    w &= ~mask;
  }
}

std::vector<int> BitString::ones() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount()));
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      out.push_back(static_cast<int>(wi * 64) + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

bool BitString::has_adjacent_pair() const {
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    if (words_[wi] & (words_[wi] >> 1)) return true;
    // pair straddling the word boundary
    if (wi + 1 < words_.size() && (words_[wi] >> 63) && (words_[wi + 1] & 1))
      return true;
  }
  return false;
}

std::string BitString::to_ascii() const {
  std::string s(static_cast<std::size_t>(size_), '0');
  for (int i = 0; i < size_; ++i)
    if (test(i)) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

std::size_t BitStringHash::operator()(const BitString& b) const {
  // splitmix64-style word mixing
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(b.size());
  for (std::uint64_t w : b.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 31;
  }
  return static_cast<std::size_t>(h);
}

bool ascii_less(const BitString& a, const BitString& b) {
  const int n = a.size() < b.size() ? a.size() : b.size();
  for (int i = 0; i < n; ++i) {
    const bool ai = a.test(i), bi = b.test(i);
    if (ai != bi) return bi;
  }
  return a.size() < b.size();
}

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (c > cap) return cap;
  }
  return static_cast<std::uint64_t>(c);
}

}  // namespace scramble
