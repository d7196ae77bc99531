#include "ordlab/parse.hpp"

#include <cctype>

namespace ordlab {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ordinal run() {
    Ordinal v = expr();
    skip_ws();
    if (pos_ != text_.size()) throw parse_error("trailing input", pos_);
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Ordinal expr() {
    Ordinal v = term();
    while (eat('+')) v = add(v, term());
    return v;
  }

  Ordinal term() {
    Ordinal v = factor();
    while (eat('*')) v = mul(v, factor());
    return v;
  }

  struct Atom {
    Ordinal value;
    bool power_base;  // literal w or e<k>
    int level;
  };

  Ordinal factor() {
    Atom a = atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      std::size_t at = pos_;
      ++pos_;
      if (!a.power_base)
        throw parse_error("only w^ and e<k>^ are ordinal powers", at);
      return eps_pow(a.level, factor());
    }
    return a.value;
  }

  Atom atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw parse_error("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Ordinal v = expr();
      if (!eat(')')) throw parse_error("expected ')'", pos_);
      return Atom{v, false, 0};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Atom{Ordinal(number()), false, 0};
    if (c == 'w') {
      ++pos_;
      return Atom{Ordinal::omega(), true, -1};
    }
    if (c == 'e') {
      std::size_t at = pos_;
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw parse_error("expected epsilon index after 'e'", at);
      Nat idx = number();
      if (idx > 1000) throw parse_error("epsilon index too large", at);
      return Atom{Ordinal::eps(static_cast<int>(idx)), true, static_cast<int>(idx)};
    }
    throw parse_error(std::string("unexpected character '") + c + "'", pos_);
  }

  Nat number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Nat(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Style {
  std::string omega;
  std::string eps_prefix;
  std::string times;
  std::string plus;
};

const Style kAscii{"w", "e", "*", " + "};
const Style kUnicode{"\xCF\x89", "\xCE\xB5", "\xC2\xB7", " + "};

std::string render_rec(const Ordinal& a, const Style& st);

// An exponent or coefficient prints inline when it is a single parse
// "factor"; sums and scaled terms need parentheses.
bool is_factor_shape(const Ordinal& a) {
  if (a.is_finite()) return true;
  if (a.terms().size() != 1) return false;
  const Term& t = a.leading();
  if (!(t.coefficient == Ordinal(1))) return false;
  return t.exponent.is_zero() || is_factor_shape(t.exponent);
}

std::string render_sub(const Ordinal& a, const Style& st) {
  if (is_factor_shape(a)) return render_rec(a, st);
  return "(" + render_rec(a, st) + ")";
}

std::string base_name(int level, const Style& st) {
  if (level == -1) return st.omega;
  return st.eps_prefix + std::to_string(level);
}

std::string render_rec(const Ordinal& a, const Style& st) {
  if (a.is_finite()) return a.nat_value().str();
  std::string out;
  bool first = true;
  for (const Term& t : a.terms()) {
    if (!first) out += st.plus;
    first = false;
    if (t.exponent.is_zero()) {
      out += render_rec(t.coefficient, st);
      continue;
    }
    out += base_name(a.node_level(), st);
    if (!(t.exponent == Ordinal(1))) out += "^" + render_sub(t.exponent, st);
    if (!(t.coefficient == Ordinal(1))) out += st.times + render_sub(t.coefficient, st);
  }
  return out;
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return Parser(text).run(); }

std::string render(const Ordinal& a, RenderStyle style) {
  return render_rec(a, style == RenderStyle::Ascii ? kAscii : kUnicode);
}

}  // namespace ordlab
