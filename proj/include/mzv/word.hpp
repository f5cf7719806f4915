#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace mzv {

enum class Letter : std::uint8_t { X = 0, Y = 1 };

/// Word over {x, y}, packed into 64 bits with the first letter most significant.
///
/// Ordering is by length first, then lexicographic with x < y.
class Word {
 public:
  static constexpr int kMaxLength = 64;

  constexpr Word() = default;
  explicit Word(std::string_view letters);  // plain "xxy", no powers

  static Word x() { return Word(0, 1); }
  static Word y() { return Word(1, 1); }
  static Word power(Letter l, int count);
  /// z_k = x^(k-1) y
  static Word z(int k);

  int size() const noexcept { return len_; }
  bool empty() const noexcept { return len_ == 0; }
  std::uint64_t bits() const noexcept { return bits_; }

  Letter operator[](int i) const noexcept {
    return static_cast<Letter>((bits_ >> (len_ - 1 - i)) & 1U);
  }
  Letter front() const noexcept { return (*this)[0]; }
  Letter back() const noexcept { return static_cast<Letter>(bits_ & 1U); }

  /// Word without its first `n` letters.
  Word drop_front(int n) const noexcept;
  /// First `n` letters.
  Word take_front(int n) const noexcept;

  /// Letters i and i+1 exchanged.
  Word swap_adjacent(int i) const;

  bool admissible() const noexcept;
  bool in_h1() const noexcept { return len_ == 0 || back() == Letter::Y; }

  std::string plain() const;  // "xxyy"
  std::string str() const;    // "x^2y^2", "1" for the empty word

  friend Word operator*(Word a, Word b);
  friend bool operator==(Word, Word) = default;
  friend std::strong_ordering operator<=>(Word a, Word b) {
    if (auto c = a.len_ <=> b.len_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  constexpr Word(std::uint64_t bits, int len) : bits_(bits), len_(static_cast<std::uint8_t>(len)) {}

  std::uint64_t bits_ = 0;
  std::uint8_t len_ = 0;
};

/// Parses "x^2y^2", "xxyy" or "1".
Word parse_word(std::string_view text);

struct WordHash {
  std::size_t operator()(Word w) const noexcept {
    return std::hash<std::uint64_t>{}(w.bits() * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(w.size()));
  }
};

}  // namespace mzv
