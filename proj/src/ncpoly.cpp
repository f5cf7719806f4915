#include "mzv/ncpoly.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "mzv/error.hpp"

namespace mzv {

NCPoly::NCPoly(Word w) { terms_.emplace(w, CycloNum(1L)); }

NCPoly::NCPoly(const CycloNum& constant) {
  if (!constant.is_zero()) terms_.emplace(Word(), constant);
}

NCPoly NCPoly::monomial(const CycloNum& c, Word w) {
  NCPoly p;
  p.add_term(w, c);
  return p;
}

CycloNum NCPoly::coeff(Word w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? CycloNum() : it->second;
}

void NCPoly::add_term(Word w, const CycloNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NCPoly NCPoly::homogeneous(int d) const {
  NCPoly out;
  for (const auto& [w, c] : terms_) {
    if (w.size() == d) out.terms_.emplace_hint(out.terms_.end(), w, c);
  }
  return out;
}

NCPoly NCPoly::truncated(int n) const {
  NCPoly out;
  for (const auto& [w, c] : terms_) {
    if (w.size() > n) break;
    out.terms_.emplace_hint(out.terms_.end(), w, c);
  }
  return out;
}

int NCPoly::max_weight() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first.size(); }

int NCPoly::min_weight() const noexcept { return terms_.empty() ? -1 : terms_.begin()->first.size(); }

bool NCPoly::is_homogeneous(int d) const noexcept {
  return terms_.empty() || (min_weight() == d && max_weight() == d);
}

NCPoly& NCPoly::operator+=(const NCPoly& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const CycloNum& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly out = *this;
  for (auto& [w, v] : out.terms_) v = -v;
  return out;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) out.add_term(wa * wb, ca * cb);
  }
  return out;
}

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<Word, Word>& p) const noexcept {
    return WordHash{}(p.first) * 31 + WordHash{}(p.second);
  }
};

using Memo = std::unordered_map<std::pair<Word, Word>, CountedWords, PairHash>;

void normalize(CountedWords& v) {
  std::sort(v.begin(), v.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (out > 0 && v[out - 1].first == v[i].first) {
      v[out - 1].second += v[i].second;
    } else {
      v[out++] = v[i];
    }
  }
  v.resize(out);
}

void append_prefixed(CountedWords& dst, Word prefix, const CountedWords& src) {
  for (const auto& [w, n] : src) dst.emplace_back(prefix * w, n);
}

Word first_block(Word w) {
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] == Letter::Y) return w.take_front(i + 1);
  }
  throw Error(ErrorCode::NotInH1, "word " + w.str() + " ends in x");
}

// Accumulates sum_{pairs} cp*cq*product(wp,wq) with a hash map, then sorts once.
template <typename WordProduct>
NCPoly bilinear(const NCPoly& p, const NCPoly& q, WordProduct product) {
  std::unordered_map<Word, CycloNum, WordHash> acc;
  for (const auto& [wp, cp] : p.terms()) {
    for (const auto& [wq, cq] : q.terms()) {
      const CycloNum c = cp * cq;
      const bool unit = c == CycloNum(1L);
      for (const auto& [w, n] : product(wp, wq)) {
        auto [it, inserted] = acc.try_emplace(w);
        if (unit) {
          it->second += CycloNum(Rational(n));
        } else {
          it->second += c * Rational(n);
        }
      }
    }
  }
  NCPoly out;
  for (auto& [w, c] : acc) out.add_term(w, c);
  return out;
}

}  // namespace

const CountedWords& shuffle_words(Word a, Word b) {
  thread_local Memo memo;
  if (b < a) std::swap(a, b);  // shuffle is commutative
  if (auto it = memo.find({a, b}); it != memo.end()) return it->second;

  CountedWords result;
  if (a.empty()) {
    result.emplace_back(b, 1);
  } else {
    const Word ha = a.take_front(1);
    const Word hb = b.take_front(1);
    append_prefixed(result, ha, shuffle_words(a.drop_front(1), b));
    append_prefixed(result, hb, shuffle_words(a, b.drop_front(1)));
    normalize(result);
  }
  return memo.emplace(std::pair{a, b}, std::move(result)).first->second;
}

const CountedWords& harmonic_words(Word a, Word b) {
  thread_local Memo memo;
  if (b < a) std::swap(a, b);  // harmonic product is commutative
  if (auto it = memo.find({a, b}); it != memo.end()) return it->second;

  CountedWords result;
  if (a.empty()) {
    if (!b.in_h1()) throw Error(ErrorCode::NotInH1, "word " + b.str() + " ends in x");
    result.emplace_back(b, 1);
  } else {
    const Word za = first_block(a);
    const Word zb = first_block(b);
    const Word ra = a.drop_front(za.size());
    const Word rb = b.drop_front(zb.size());
    append_prefixed(result, za, harmonic_words(ra, b));
    append_prefixed(result, zb, harmonic_words(a, rb));
    append_prefixed(result, Word::z(za.size() + zb.size()), harmonic_words(ra, rb));
    normalize(result);
  }
  return memo.emplace(std::pair{a, b}, std::move(result)).first->second;
}

NCPoly shuffle(const NCPoly& p, const NCPoly& q) {
  return bilinear(p, q, [](Word a, Word b) -> const CountedWords& { return shuffle_words(a, b); });
}

NCPoly harmonic(const NCPoly& p, const NCPoly& q) {
  for (const NCPoly* poly : {&p, &q}) {
    for (const auto& [w, c] : poly->terms()) {
      if (!w.in_h1()) throw Error(ErrorCode::NotInH1, "word " + w.str() + " ends in x");
    }
  }
  return bilinear(p, q, [](Word a, Word b) -> const CountedWords& { return harmonic_words(a, b); });
}

NCPoly shuffle_oracle(Word a, Word b) {
  const int n = a.size() + b.size();
  if (n > 16) throw Error(ErrorCode::LengthGuard, "oracle limited to combined length 16");
  NCPoly out;
  // bit i of mask set: position i takes the next letter of a
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) != a.size()) continue;
    std::string letters;
    int ia = 0;
    int ib = 0;
    for (int i = 0; i < n; ++i) {
      const Letter l = (mask >> i) & 1U ? a[ia++] : b[ib++];
      letters += l == Letter::X ? 'x' : 'y';
    }
    out.add_term(Word(letters), CycloNum(1L));
  }
  return out;
}

}  // namespace mzv
