#include "mzv/word.hpp"

#include "mzv/error.hpp"

namespace mzv {

namespace {

void check_length(int len) {
  if (len > Word::kMaxLength) {
    throw Error(ErrorCode::LengthGuard, "word longer than " + std::to_string(Word::kMaxLength));
  }
}

std::uint64_t low_mask(int n) { return n >= 64 ? ~0ULL : ((1ULL << n) - 1); }

}  // namespace

Word::Word(std::string_view letters) {
  check_length(static_cast<int>(letters.size()));
  for (char c : letters) {
    if (c != 'x' && c != 'y') throw Error(ErrorCode::ParseError, std::string("bad letter '") + c + "'");
    bits_ = (bits_ << 1) | (c == 'y' ? 1U : 0U);
  }
  len_ = static_cast<std::uint8_t>(letters.size());
}

Word Word::power(Letter l, int count) {
  check_length(count);
  return Word(l == Letter::Y ? low_mask(count) : 0, count);
}

Word Word::z(int k) {
  if (k < 1) throw Error(ErrorCode::ParseError, "z_k needs k >= 1");
  check_length(k);
  return Word(1, k);
}

Word Word::drop_front(int n) const noexcept {
  const int len = len_ - n;
  return Word(bits_ & low_mask(len), len);
}

Word Word::take_front(int n) const noexcept {
  if (n == 0) return Word();
  return Word(bits_ >> (len_ - n), n);
}

Word Word::swap_adjacent(int i) const {
  if (i < 0 || i + 1 >= len_) throw Error(ErrorCode::IndexOutOfRange, "swap position outside word");
  const int s1 = len_ - 1 - i;
  const int s2 = s1 - 1;
  const std::uint64_t b1 = (bits_ >> s1) & 1U;
  const std::uint64_t b2 = (bits_ >> s2) & 1U;
  if (b1 == b2) return *this;
  return Word(bits_ ^ ((1ULL << s1) | (1ULL << s2)), len_);
}

bool Word::admissible() const noexcept {
  return len_ == 0 || (front() == Letter::X && back() == Letter::Y);
}

std::string Word::plain() const {
  std::string s;
  for (int i = 0; i < len_; ++i) s += (*this)[i] == Letter::X ? 'x' : 'y';
  return s;
}

std::string Word::str() const {
  if (len_ == 0) return "1";
  std::string s;
  int i = 0;
  while (i < len_) {
    const Letter l = (*this)[i];
    int run = 1;
    while (i + run < len_ && (*this)[i + run] == l) ++run;
    s += l == Letter::X ? 'x' : 'y';
    if (run > 1) s += "^" + std::to_string(run);
    i += run;
  }
  return s;
}

Word operator*(Word a, Word b) {
  check_length(a.len_ + b.len_);
  if (b.len_ == 64) return b;  // a is empty
  return Word((a.bits_ << b.len_) | b.bits_, a.len_ + b.len_);
}

Word parse_word(std::string_view text) {
  if (text == "1") return Word();
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty word literal");
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c != 'x' && c != 'y') {
      throw Error(ErrorCode::ParseError, "bad word literal '" + std::string(text) + "'");
    }
    ++i;
    int count = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (start == i || i - start > 3) {
        throw Error(ErrorCode::ParseError, "bad exponent in '" + std::string(text) + "'");
      }
      count = std::stoi(std::string(text.substr(start, i - start)));
    }
    w = w * Word::power(c == 'x' ? Letter::X : Letter::Y, count);
  }
  return w;
}

}  // namespace mzv
