#include "mzv/format.hpp"

#include <cctype>
#include <numeric>

#include "mzv/error.hpp"

namespace mzv {

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

Rational parse_rational(std::string_view s) {
  if (s.empty() || s.find_first_not_of("0123456789/") != std::string_view::npos || s.front() == '/' ||
      s.back() == '/' || std::count(s.begin(), s.end(), '/') > 1) {
    throw Error(ErrorCode::ParseError, "bad rational '" + std::string(s) + "'");
  }
  Rational r(std::string(s), 10);
  if (r.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(s) + "'");
  r.canonicalize();
  return r;
}

std::string word_latex(Word w) {
  if (w.empty()) return "1";
  std::string s;
  int i = 0;
  while (i < w.size()) {
    const Letter l = w[i];
    int run = 1;
    while (i + run < w.size() && w[i + run] == l) ++run;
    s += l == Letter::X ? 'x' : 'y';
    if (run > 1) s += "^{" + std::to_string(run) + "}";
    i += run;
  }
  return s;
}

}  // namespace

std::string coeff_text(const CycloNum& c, int root_order) {
  const int m = root_order == 0 ? c.order() : root_order;
  const CycloNum e = c.embed(m);
  std::string out;
  for (std::size_t j = 0; j < e.coeffs().size(); ++j) {
    const Rational& a = e.coeffs()[j];
    if (a == 0) continue;
    std::string term;
    const Rational mag = abs(a);
    const std::string power = j == 1 ? "w" : "w^" + std::to_string(j);
    if (j == 0) {
      term = mag.get_str();
    } else if (mag == 1) {
      term = power;
    } else {
      term = mag.get_str() + "*" + power;
    }
    if (a < 0) {
      out += "-" + term;
    } else {
      out += (out.empty() ? "" : "+") + term;
    }
  }
  return out.empty() ? "0" : out;
}

CycloNum parse_coeff(std::string_view text, int root_order) {
  if (root_order < 1) throw Error(ErrorCode::ZeroOrder, "root order must be positive");
  const std::string s = strip_spaces(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty coefficient");
  std::vector<Rational> raw(static_cast<std::size_t>(root_order));
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (i != 0) {
      throw Error(ErrorCode::ParseError, "bad coefficient '" + s + "'");
    }
    std::size_t end = i;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string term = s.substr(i, end - i);
    if (term.empty()) throw Error(ErrorCode::ParseError, "bad coefficient '" + s + "'");
    Rational r = 1;
    long exponent = 0;
    std::string root = term;
    if (const auto star = term.find('*'); star != std::string::npos) {
      r = parse_rational(term.substr(0, star));
      root = term.substr(star + 1);
      if (root.empty()) throw Error(ErrorCode::ParseError, "bad coefficient '" + s + "'");
    } else if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      r = parse_rational(term);
      root.clear();
    }
    if (!root.empty()) {
      if (root == "i") {
        if (root_order != 4) throw Error(ErrorCode::ParseError, "'i' needs --root-order 4");
        exponent = 1;
      } else if (root == "w") {
        exponent = 1;
      } else if (root.size() > 2 && root.substr(0, 2) == "w^" &&
                 root.find_first_not_of("0123456789", 2) == std::string::npos && root.size() <= 6) {
        exponent = std::stol(root.substr(2));
      } else {
        throw Error(ErrorCode::ParseError, "bad coefficient term '" + term + "'");
      }
    }
    raw[exponent % root_order] += negative ? Rational(-r) : r;
    i = end;
  }
  return CycloNum::make(root_order, raw);
}

int root_order_of(const NCPoly& p) {
  int m = 1;
  for (const auto& [w, c] : p.terms()) m = std::lcm(m, c.order());
  return m;
}

std::string poly_text(const NCPoly& p, int root_order) {
  if (p.is_zero()) return "0";
  const int m = root_order == 0 ? root_order_of(p) : root_order;
  std::string out;
  for (const auto& [w, c] : p.terms()) {
    const bool constant = w.empty();
    std::string body;
    bool negative = false;
    if (const auto r = c.rational()) {
      negative = *r < 0;
      const Rational mag = abs(*r);
      if (constant) {
        body = mag.get_str();
      } else if (mag == 1) {
        body = w.str();
      } else {
        body = mag.get_str() + "*" + w.str();
      }
    } else {
      body = "(" + coeff_text(c, m) + ")";
      if (!constant) body += "*" + w.str();
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

NCPoly parse_poly(std::string_view text, int root_order) {
  const std::string s = strip_spaces(text);
  if (s == "0") return NCPoly();
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty polynomial");
  NCPoly out;
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (i != 0) {
      throw Error(ErrorCode::ParseError, "bad polynomial '" + s + "'");
    }
    CycloNum coeff(1L);
    bool have_coeff = false;
    if (i < s.size() && s[i] == '(') {
      const auto close = s.find(')', i);
      if (close == std::string::npos) throw Error(ErrorCode::ParseError, "unbalanced '(' in '" + s + "'");
      coeff = parse_coeff(s.substr(i + 1, close - i - 1), root_order);
      i = close + 1;
      have_coeff = true;
    } else if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t end = i;
      while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '/')) ++end;
      coeff = CycloNum(parse_rational(s.substr(i, end - i)));
      i = end;
      have_coeff = true;
    }
    Word w;
    bool has_word = !have_coeff;
    if (have_coeff && i < s.size() && s[i] == '*') {
      ++i;
      has_word = true;
    }
    if (has_word) {
      std::size_t end = i;
      while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
      w = parse_word(s.substr(i, end - i));
      i = end;
    }
    out.add_term(w, negative ? -coeff : coeff);
  }
  return out;
}

std::string poly_latex(const NCPoly& p, int root_order) {
  if (p.is_zero()) return "0";
  const int m = root_order == 0 ? root_order_of(p) : root_order;
  std::string out;
  for (const auto& [w, c] : p.terms()) {
    std::string body;
    bool negative = false;
    if (const auto r = c.rational()) {
      negative = *r < 0;
      const Rational mag = abs(*r);
      std::string num = mag.get_den() == 1 ? mag.get_num().get_str()
                                           : "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
      if (w.empty()) {
        body = num;
      } else {
        body = mag == 1 ? word_latex(w) : num + word_latex(w);
      }
    } else {
      std::string ct = coeff_text(c, m);
      std::string tex;
      for (char ch : ct) {
        if (ch == 'w') {
          tex += "\\omega";
        } else if (ch == '*') {
          continue;
        } else {
          tex += ch;
        }
      }
      body = "(" + tex + ")" + (w.empty() ? "" : word_latex(w));
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

std::string poly_summary(const NCPoly& p, std::size_t max_terms) {
  if (p.size() <= max_terms) return poly_text(p);
  NCPoly head;
  std::size_t k = 0;
  for (const auto& [w, c] : p.terms()) {
    if (k++ == max_terms) break;
    head.add_term(w, c);
  }
  return poly_text(head) + " + ... (" + std::to_string(p.size()) + " terms)";
}

std::string composition_latex(const Composition& c) { return "\\zeta(" + c.str() + ")"; }

nlohmann::ordered_json automaton_json(const Automaton& m) {
  int order = 1;
  for (const auto& t : m.transitions()) order = std::lcm(order, t.coeff.order());
  nlohmann::ordered_json j;
  j["root_order"] = order;
  j["states"] = m.state_count();
  j["initial"] = 1;
  auto finals = nlohmann::ordered_json::array();
  for (int f : m.finals()) finals.push_back(f + 1);
  j["finals"] = finals;
  auto ts = nlohmann::ordered_json::array();
  for (const auto& t : m.transitions()) {
    ts.push_back({{"from", t.from + 1}, {"letter", t.label.str()}, {"coeff", coeff_text(t.coeff, order)}, {"to", t.to + 1}});
  }
  j["transitions"] = ts;
  return j;
}

Automaton automaton_from_json(const nlohmann::ordered_json& j) {
  try {
    const int order = j.at("root_order").get<int>();
    if (j.at("initial").get<int>() != 1) throw Error(ErrorCode::InvalidState, "initial state must be q1");
    Automaton m(j.at("states").get<int>());
    for (const auto& f : j.at("finals")) m.set_final(f.get<int>() - 1);
    for (const auto& t : j.at("transitions")) {
      m.add_transition(t.at("from").get<int>() - 1, Label::parse(t.at("letter").get<std::string>()),
                       parse_coeff(t.at("coeff").get<std::string>(), order), t.at("to").get<int>() - 1);
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("automaton JSON: ") + e.what());
  }
}

std::string matrix_text(const Matrix& a) {
  int order = 1;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) order = std::lcm(order, root_order_of(a.at(i, j)));
  }
  std::string out;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      if (j > 0) out += " | ";
      out += poly_text(a.at(i, j), order);
    }
    out += "\n";
  }
  return out;
}

}  // namespace mzv
