#pragma once

// Fixed-capacity words over a small alphabet (letters are indices). Ordered
// deglex: shorter words first, then lexicographically by letter index.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfcheck {

class WordCapError : public std::length_error {
 public:
  explicit WordCapError(std::size_t len)
      : std::length_error("word length " + std::to_string(len) + " exceeds the configured cap") {}
};

class Word {
 public:
  static constexpr std::size_t kHardMax = 16;
  static constexpr std::size_t kDefaultCap = 8;

  Word() = default;
  Word(std::initializer_list<int> letters) {
    for (int l : letters) push_back(static_cast<std::uint8_t>(l));
  }

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }
  std::uint8_t operator[](std::size_t i) const { return s_[i]; }
  const std::uint8_t* begin() const { return s_.data(); }
  const std::uint8_t* end() const { return s_.data() + n_; }

  void push_back(std::uint8_t letter) {
    if (n_ >= kHardMax) throw WordCapError(n_ + 1u);
    s_[n_++] = letter;
  }

  Word sub(std::size_t pos, std::size_t len) const {
    Word w;
    for (std::size_t i = 0; i < len; ++i) w.s_[i] = s_[pos + i];
    w.n_ = static_cast<std::uint8_t>(len);
    return w;
  }
  Word prefix(std::size_t len) const { return sub(0, len); }
  Word suffix_from(std::size_t pos) const { return sub(pos, n_ - pos); }

  /// True iff `pattern` occurs at position `pos`.
  bool matches_at(const Word& pattern, std::size_t pos) const {
    if (pos + pattern.n_ > n_) return false;
    for (std::size_t i = 0; i < pattern.n_; ++i)
      if (s_[pos + i] != pattern.s_[i]) return false;
    return true;
  }
  bool contains(const Word& pattern) const {
    for (std::size_t p = 0; p + pattern.n_ <= n_; ++p)
      if (matches_at(pattern, p)) return true;
    return false;
  }

  friend bool operator==(const Word& a, const Word& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.s_[i] != b.s_[i]) return false;
    return true;
  }
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (std::size_t i = 0; i < a.n_; ++i)
      if (auto c = a.s_[i] <=> b.s_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i) h = h * 131 + s_[i] + 1;
    return h;
  }

  std::string str(const std::vector<std::string>& names) const {
    if (n_ == 0) return "1";
    std::string out;
    for (std::size_t i = 0; i < n_; ++i) out += names.at(s_[i]);
    return out;
  }

 private:
  std::array<std::uint8_t, kHardMax> s_{};
  std::uint8_t n_ = 0;
};

/// Concatenation that refuses to exceed `cap`.
inline Word concat(const Word& a, const Word& b, std::size_t cap = Word::kDefaultCap) {
  if (a.size() + b.size() > cap) throw WordCapError(a.size() + b.size());
  Word w = a;
  for (auto l : b) w.push_back(l);
  return w;
}

inline Word concat3(const Word& a, const Word& b, const Word& c, std::size_t cap = Word::kDefaultCap) {
  return concat(concat(a, b, cap), c, cap);
}

}  // namespace hopfcheck

template <>
struct std::hash<hopfcheck::Word> {
  std::size_t operator()(const hopfcheck::Word& w) const noexcept { return w.hash(); }
};
