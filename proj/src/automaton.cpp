#include "mzv/automaton.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mzv/composition.hpp"
#include "mzv/error.hpp"

namespace mzv {

Label Label::parse(std::string_view text) {
  if (text == "x") return x();
  if (text == "y") return y();
  if (text.size() > 2 && text.substr(0, 2) == "z_") {
    const std::string digits(text.substr(2));
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 2) {
      const int k = std::stoi(digits);
      if (k >= 1) return z(k);
    }
  }
  throw Error(ErrorCode::ParseError, "bad letter '" + std::string(text) + "'");
}

Word Label::word() const {
  switch (kind) {
    case Kind::X:
      return Word::x();
    case Kind::Y:
      return Word::y();
    case Kind::Z:
      break;
  }
  return Word::z(k);
}

std::string Label::str() const {
  switch (kind) {
    case Kind::X:
      return "x";
    case Kind::Y:
      return "y";
    case Kind::Z:
      break;
  }
  return "z_" + std::to_string(k);
}

Automaton::Automaton(int states) : states_(states), finals_(static_cast<std::size_t>(std::max(states, 0))) {
  if (states < 1) throw Error(ErrorCode::InvalidState, "automaton needs at least one state");
}

void Automaton::check_state(int s) const {
  if (s < 0 || s >= states_) {
    throw Error(ErrorCode::InvalidState, "state q" + std::to_string(s + 1) + " out of range");
  }
}

void Automaton::add_transition(int from, Label label, const CycloNum& coeff, int to) {
  check_state(from);
  check_state(to);
  if (coeff.is_zero()) return;
  transitions_.push_back({from, label, coeff, to});
}

void Automaton::set_final(int state, bool final) {
  check_state(state);
  finals_[state] = final;
}

bool Automaton::is_final(int state) const {
  check_state(state);
  return finals_[state];
}

std::vector<int> Automaton::finals() const {
  std::vector<int> out;
  for (int s = 0; s < states_; ++s) {
    if (finals_[s]) out.push_back(s);
  }
  return out;
}

namespace {

// Keeps states reachable from the initial state, preserving relative order.
Automaton prune_unreachable(const Automaton& m) {
  std::vector<std::vector<int>> succ(m.state_count());
  for (const auto& t : m.transitions()) succ[t.from].push_back(t.to);
  std::vector<int> index(m.state_count(), -1);
  std::vector<int> stack{0};
  index[0] = 0;
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    for (int t : succ[s]) {
      if (index[t] < 0) {
        index[t] = 0;
        stack.push_back(t);
      }
    }
  }
  int next = 0;
  for (int& i : index) {
    if (i >= 0) i = next++;
  }
  Automaton out(next);
  for (const auto& t : m.transitions()) {
    if (index[t.from] >= 0) out.add_transition(index[t.from], t.label, t.coeff, index[t.to]);
  }
  for (int f : m.finals()) {
    if (index[f] >= 0) out.set_final(index[f]);
  }
  return out;
}

void copy_into(Automaton& dst, const Automaton& src, int offset) {
  for (const auto& t : src.transitions()) dst.add_transition(t.from + offset, t.label, t.coeff, t.to + offset);
  for (int f : src.finals()) dst.set_final(f + offset);
}

bool is_chain(const Automaton& m) {
  const int n = m.state_count();
  const auto& ts = m.transitions();
  if (static_cast<int>(ts.size()) != n - 1) return false;
  for (int i = 0; i + 1 < n; ++i) {
    if (ts[i].from != i || ts[i].to != i + 1) return false;
  }
  return m.finals() == std::vector<int>{n - 1};
}

}  // namespace

Automaton word_automaton(Word w) {
  if (w.empty()) throw Error(ErrorCode::EmptyWord, "word automaton needs a nonempty word");
  Automaton m(w.size() + 1);
  for (int i = 0; i < w.size(); ++i) m.add_transition(i, Label::of(w[i]), CycloNum(1L), i + 1);
  m.set_final(w.size());
  return m;
}

Automaton sum_automaton(const Automaton& a, const Automaton& b) {
  if (a.is_final(0) && b.is_final(0)) {
    throw Error(ErrorCode::InvalidState, "constant term 2 cannot be carried by a final state");
  }
  const int na = a.state_count();
  Automaton out(1 + na + b.state_count());
  copy_into(out, a, 1);
  copy_into(out, b, 1 + na);
  for (const auto& t : a.transitions()) {
    if (t.from == 0) out.add_transition(0, t.label, t.coeff, t.to + 1);
  }
  for (const auto& t : b.transitions()) {
    if (t.from == 0) out.add_transition(0, t.label, t.coeff, t.to + 1 + na);
  }
  out.set_final(0, a.is_final(0) || b.is_final(0));
  return prune_unreachable(out);
}

Automaton concat_automaton(const Automaton& a, const Automaton& b) {
  const int na = a.state_count();
  Automaton out(na + b.state_count());
  for (const auto& t : a.transitions()) out.add_transition(t.from, t.label, t.coeff, t.to);
  for (const auto& t : b.transitions()) out.add_transition(t.from + na, t.label, t.coeff, t.to + na);
  for (int f : a.finals()) {
    for (const auto& t : b.transitions()) {
      if (t.from == 0) out.add_transition(f, t.label, t.coeff, t.to + na);
    }
    if (b.is_final(0)) out.set_final(f);
  }
  for (int f : b.finals()) out.set_final(f + na);
  return prune_unreachable(out);
}

Automaton scalar_automaton(const CycloNum& c, const Automaton& m) {
  if (c == CycloNum(1L)) return m;
  if (is_chain(m)) {
    // scale the last transition, as for a single scaled word
    Automaton out(m.state_count());
    const auto& ts = m.transitions();
    for (std::size_t i = 0; i < ts.size(); ++i) {
      out.add_transition(ts[i].from, ts[i].label, i + 1 == ts.size() ? ts[i].coeff * c : ts[i].coeff, ts[i].to);
    }
    out.set_final(m.state_count() - 1);
    return out;
  }
  if (m.is_final(0)) throw Error(ErrorCode::InvalidState, "cannot scale the constant term");
  Automaton out(m.state_count() + 1);
  copy_into(out, m, 1);
  for (const auto& t : m.transitions()) {
    if (t.from == 0) out.add_transition(0, t.label, t.coeff * c, t.to + 1);
  }
  return prune_unreachable(out);
}

Automaton star_automaton(const Automaton& chain) {
  if (chain.state_count() == 1 && chain.transitions().empty()) {
    throw Error(ErrorCode::EmptyWord, "closure of the empty word");
  }
  if (!is_chain(chain)) throw Error(ErrorCode::NotAChain, "closure is only built for word chains");
  const int len = chain.state_count() - 1;
  Automaton out(len);
  for (const auto& t : chain.transitions()) out.add_transition(t.from, t.label, t.coeff, t.to % len);
  out.set_final(0);
  return out;
}

Automaton shuffle_automaton(std::span<const Factor> factors, bool starred) {
  if (factors.empty() || factors.size() > 4) {
    throw Error(ErrorCode::TooManyFactors, "shuffle automaton takes 1 to 4 factors");
  }
  const int k = static_cast<int>(factors.size());
  std::vector<int> lens;
  for (const auto& f : factors) {
    if (f.word.empty()) throw Error(ErrorCode::EmptyWord, "shuffle factor is the empty word");
    lens.push_back(f.word.size());
  }
  // position ranges: cycles [0, l) when starred, chains [0, l] otherwise
  std::vector<int> radix(lens);
  if (!starred) {
    for (int& r : radix) ++r;
  }
  int count = 1;
  for (int r : radix) count *= r;

  auto decode = [&](int code) {
    std::vector<int> p(k);
    for (int i = 0; i < k; ++i) {
      p[i] = code % radix[i];
      code /= radix[i];
    }
    return p;
  };
  // row-major code, first factor fastest
  std::vector<int> number(count);
  std::iota(number.begin(), number.end(), 0);

  const bool equal = std::all_of(lens.begin(), lens.end(), [&](int l) { return l == lens[0]; });
  if (starred && equal && k > 1) {
    // Group states by total position mod l; inside a group, order by the
    // positions of factors 2..k with the last factor most significant.
    const int l = lens[0];
    std::vector<std::pair<std::vector<int>, int>> keyed;
    for (int code = 0; code < count; ++code) {
      const auto p = decode(code);
      std::vector<int> key{std::accumulate(p.begin(), p.end(), 0) % l};
      for (int i = k - 1; i >= 1; --i) key.push_back(p[i]);
      keyed.emplace_back(std::move(key), code);
    }
    std::sort(keyed.begin(), keyed.end());
    for (int idx = 0; idx < count; ++idx) number[keyed[idx].second] = idx;
  }

  Automaton m(count);
  for (int code = 0; code < count; ++code) {
    const auto p = decode(code);
    int stride = 1;
    for (int i = 0; i < k; ++i) {
      const int l = lens[i];
      if (starred || p[i] < l) {
        const bool completes = p[i] == l - 1;
        const int next = starred ? (p[i] + 1) % l : p[i] + 1;
        const int target = code + (next - p[i]) * stride;
        m.add_transition(number[code], Label::of(factors[i].word[p[i]]),
                         completes ? factors[i].coeff : CycloNum(1L), number[target]);
      }
      stride *= radix[i];
    }
  }
  m.set_final(starred ? 0 : number[count - 1]);
  return m;
}

Automaton harmonic_automaton(const Factor& a, const Factor& b, bool starred) {
  if (a.word.empty() || b.word.empty()) throw Error(ErrorCode::EmptyWord, "harmonic factor is the empty word");
  const std::vector<int> p = z_blocks(a.word);
  const std::vector<int> q = z_blocks(b.word);
  const int m = static_cast<int>(p.size());
  const int n = static_cast<int>(q.size());
  const int rows = starred ? m : m + 1;
  const int cols = starred ? n : n + 1;
  auto index = [&](int r, int c) { return r * cols + c; };

  Automaton out(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const bool can_r = starred || r < m;
      const bool can_c = starred || c < n;
      const CycloNum ca = r == m - 1 ? a.coeff : CycloNum(1L);
      const CycloNum cb = c == n - 1 ? b.coeff : CycloNum(1L);
      const int nr = starred ? (r + 1) % m : r + 1;
      const int nc = starred ? (c + 1) % n : c + 1;
      if (can_r) out.add_transition(index(r, c), Label::z(p[r]), ca, index(nr, c));
      if (can_c) out.add_transition(index(r, c), Label::z(q[c]), cb, index(r, nc));
      if (can_r && can_c) out.add_transition(index(r, c), Label::z(p[r] + q[c]), ca * cb, index(nr, nc));
    }
  }
  out.set_final(starred ? 0 : index(m, n));
  return out;
}

namespace {

int z_weight(const Transition& t) {
  if (t.label.kind != Label::Kind::Z) {
    throw Error(ErrorCode::NotInH1, "harmonic product needs z-letter automata");
  }
  return t.label.k;
}

}  // namespace

Automaton harmonic_product(const Automaton& a, const Automaton& b) {
  const int nb = b.state_count();
  auto index = [&](int s, int t) { return s * nb + t; };
  Automaton out(a.state_count() * nb);
  for (const auto& ta : a.transitions()) {
    const int ka = z_weight(ta);
    for (int t = 0; t < nb; ++t) out.add_transition(index(ta.from, t), ta.label, ta.coeff, index(ta.to, t));
    for (const auto& tb : b.transitions()) {
      const int kb = z_weight(tb);
      out.add_transition(index(ta.from, tb.from), Label::z(ka + kb), ta.coeff * tb.coeff, index(ta.to, tb.to));
    }
  }
  for (const auto& tb : b.transitions()) {
    z_weight(tb);
    for (int s = 0; s < a.state_count(); ++s) out.add_transition(index(s, tb.from), tb.label, tb.coeff, index(s, tb.to));
  }
  for (int fa : a.finals()) {
    for (int fb : b.finals()) out.set_final(index(fa, fb));
  }
  return prune_unreachable(out);
}

namespace {

std::string coeff_key(const CycloNum& c) {
  std::string s = std::to_string(c.order());
  for (const auto& q : c.coeffs()) s += "|" + q.get_str();
  return s;
}

// Outgoing weight of `s` per (label, target class), with parallel edges summed.
std::map<std::pair<Label, int>, CycloNum> outgoing(const Automaton& m, int s, const std::vector<int>& cls) {
  std::map<std::pair<Label, int>, CycloNum> out;
  for (const auto& t : m.transitions()) {
    if (t.from == s) out[{t.label, cls[t.to]}] += t.coeff;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

Automaton collapse_identical_states(const Automaton& m) {
  const int n = m.state_count();
  std::vector<int> cls(n);
  for (int s = 0; s < n; ++s) cls[s] = m.is_final(s) ? 1 : 0;
  int classes = 0;
  while (true) {
    // signature: previous class, then the outgoing weights into classes
    std::map<std::string, int> ids;
    std::vector<int> next(n);
    for (int s = 0; s < n; ++s) {
      std::string sig = std::to_string(cls[s]);
      for (const auto& [key, c] : outgoing(m, s, cls)) {
        sig += ";" + key.first.str() + ">" + std::to_string(key.second) + "=" + coeff_key(c);
      }
      auto [it, inserted] = ids.try_emplace(sig, static_cast<int>(ids.size()));
      next[s] = it->second;
    }
    const int count = static_cast<int>(ids.size());
    cls = std::move(next);
    if (count == classes) break;
    classes = count;
  }
  // renumber so the initial state's class comes first, others by first member
  std::vector<int> order(classes, -1);
  int next_id = 0;
  order[cls[0]] = next_id++;
  for (int s = 0; s < n; ++s) {
    if (order[cls[s]] < 0) order[cls[s]] = next_id++;
  }
  Automaton out(classes);
  std::vector<bool> done(classes, false);
  for (int s = 0; s < n; ++s) {
    const int c = order[cls[s]];
    if (done[c]) continue;
    done[c] = true;
    out.set_final(c, m.is_final(s));
    for (const auto& [key, coeff] : outgoing(m, s, cls)) out.add_transition(c, key.first, coeff, order[key.second]);
  }
  return out;
}

Matrix::Matrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim) {}

Matrix Matrix::identity(int dim) {
  Matrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = NCPoly(1L);
  return m;
}

Matrix Matrix::block(int r0, int r1, int c0, int c1) const {
  if (r1 - r0 != c1 - c0 || r0 < 0 || c0 < 0 || r1 > dim_ || c1 > dim_ || r1 < r0) {
    throw Error(ErrorCode::IndexOutOfRange, "matrix block must be square and inside the matrix");
  }
  Matrix out(r1 - r0);
  for (int i = r0; i < r1; ++i) {
    for (int j = c0; j < c1; ++j) out.at(i - r0, j - c0) = at(i, j);
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::IndexOutOfRange, "matrix dimensions differ");
  const int n = a.dim();
  Matrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const NCPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (!b.at(k, j).is_zero()) out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

Matrix adjacency(const Automaton& m) {
  Matrix a(m.state_count());
  for (const auto& t : m.transitions()) a.at(t.from, t.to).add_term(t.label.word(), t.coeff);
  return a;
}

Matrix matrix_power(const Matrix& a, unsigned n) {
  Matrix result = Matrix::identity(a.dim());
  Matrix base = a;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

std::vector<std::vector<NCPoly>> row_powers(const Matrix& a, int row, int n_max) {
  const int n = a.dim();
  if (row < 0 || row >= n) throw Error(ErrorCode::InvalidState, "row out of range");
  std::vector<std::vector<NCPoly>> rows;
  rows.emplace_back(n);
  rows[0][row] = NCPoly(1L);
  for (int step = 1; step <= n_max; ++step) {
    const auto& prev = rows.back();
    std::vector<NCPoly> cur(n);
    for (int k = 0; k < n; ++k) {
      if (prev[k].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (!a.at(k, j).is_zero()) cur[j] += prev[k] * a.at(k, j);
      }
    }
    rows.push_back(std::move(cur));
  }
  return rows;
}

namespace {

// Appends label * coeff to every word of `src`, accumulating into `dst`.
void extend(NCPoly& dst, const NCPoly& src, const Transition& t) {
  const Word lw = t.label.word();
  for (const auto& [w, c] : src.terms()) dst.add_term(w * lw, c * t.coeff);
}

// V[d][s]: words of weight d on paths from `from` to s. Paths may leave a
// state other than `from` at step zero only if it is not blocked.
std::vector<std::vector<NCPoly>> path_table(const Automaton& m, int from, const std::vector<bool>& blocked,
                                            int n_max) {
  if (from < 0 || from >= m.state_count()) throw Error(ErrorCode::InvalidState, "state out of range");
  std::vector<std::vector<NCPoly>> v(static_cast<std::size_t>(n_max) + 1, std::vector<NCPoly>(m.state_count()));
  v[0][from] = NCPoly(1L);
  for (int d = 1; d <= n_max; ++d) {
    for (const auto& t : m.transitions()) {
      const int w = t.label.weight();
      if (w > d) continue;
      if (d - w > 0 && blocked[t.from]) continue;
      const NCPoly& src = v[d - w][t.from];
      if (!src.is_zero()) extend(v[d][t.to], src, t);
    }
  }
  return v;
}

}  // namespace

GradedSeries accepted_from(const Automaton& m, int state, int n_max) {
  const auto v = path_table(m, state, std::vector<bool>(m.state_count(), false), n_max);
  GradedSeries out(n_max);
  for (int d = 0; d <= n_max; ++d) {
    for (int f : m.finals()) out.add_to_part(d, v[d][f]);
  }
  return out;
}

GradedSeries accepted(const Automaton& m, int n_max) { return accepted_from(m, 0, n_max); }

GradedSeries restricted_accepted(const Automaton& m, int from, int to, std::span<const int> avoid, int n_max) {
  if (to < 0 || to >= m.state_count()) throw Error(ErrorCode::InvalidState, "state out of range");
  std::vector<bool> blocked(m.state_count(), false);
  for (int s : avoid) {
    if (s < 0 || s >= m.state_count()) throw Error(ErrorCode::InvalidState, "avoided state out of range");
    blocked[s] = true;
  }
  const auto v = path_table(m, from, blocked, n_max);
  GradedSeries out(n_max);
  for (int d = 0; d <= n_max; ++d) out.add_to_part(d, v[d][to]);
  return out;
}

}  // namespace mzv
