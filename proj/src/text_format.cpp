#include "efb/text_format.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "efb/generators.hpp"
#include "efb/word_oracle.hpp"

namespace efb {

namespace {

enum class TokKind { Number, Star, Plus, Minus, Factor, End };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> toks;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (c == '+') {
      toks.push_back({TokKind::Plus, "+", i++});
    } else if (c == '-') {
      toks.push_back({TokKind::Minus, "-", i++});
    } else if (s.substr(i, 3) == "\xE2\x88\x92") {  // U+2212
      toks.push_back({TokKind::Minus, "-", i});
      i += 3;
    } else if (c == '*') {
      toks.push_back({TokKind::Star, "*", i++});
    } else if (std::isdigit(c)) {
      const std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      // Allow "a / b" with spaces around the slash.
      std::size_t j = i;
      while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == '/') {
        ++j;
        while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j >= s.size() || !std::isdigit(static_cast<unsigned char>(s[j]))) {
          throw ParseError("expected denominator at position " + std::to_string(j));
        }
        const std::size_t den = j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        toks.push_back({TokKind::Number, std::string(s.substr(start, i - start)) + "/" + std::string(s.substr(den, j - den)), start});
        i = j;
      } else {
        toks.push_back({TokKind::Number, std::string(s.substr(start, i - start)), start});
      }
    } else if (c == 'e' || c == 'p' || c == 'q') {
      const std::size_t start = i++;
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
        throw ParseError("expected index after '" + std::string(1, static_cast<char>(c)) + "' at position " + std::to_string(start));
      }
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      toks.push_back({TokKind::Factor, std::string(s.substr(start, i - start)), start});
    } else {
      throw ParseError("unexpected character '" + std::string(1, static_cast<char>(c)) + "' at position " + std::to_string(i));
    }
  }
  toks.push_back({TokKind::End, "", s.size()});
  return toks;
}

class Parser {
 public:
  Parser(int m, std::string_view text) : m_(m), toks_(tokenize(text)) {}

  ParsedElement parse() {
    Element sum(m_);
    bool first = true;
    while (true) {
      int sign = 1;
      if (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
        sign = next().kind == TokKind::Minus ? -1 : 1;
      } else if (!first) {
        if (peek().kind == TokKind::End) break;
        throw ParseError("expected '+' or '-' at position " + std::to_string(peek().pos));
      }
      Element term = parse_term();
      sum += sign < 0 ? Element(-term) : term;
      first = false;
      if (peek().kind == TokKind::End) break;
    }
    return {std::move(sum), saw_null_ ? Basis::Null : Basis::Gamma};
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  Element parse_term() {
    std::optional<Rational> coef;
    if (peek().kind == TokKind::Number) {
      coef = parse_rational(next().text);
      if (peek().kind == TokKind::Star) {
        next();
        if (peek().kind != TokKind::Factor) throw ParseError("expected factor after '*' at position " + std::to_string(peek().pos));
      }
    }
    if (!coef && peek().kind != TokKind::Factor) {
      throw ParseError("expected term at position " + std::to_string(peek().pos));
    }
    Element value = identity(m_);
    while (peek().kind == TokKind::Factor) value = value * factor(next());
    if (coef) value *= *coef;
    return value;
  }

  Element factor(const Token& t) {
    int idx = 0;
    for (std::size_t i = 1; i < t.text.size(); ++i) {
      idx = idx * 10 + (t.text[i] - '0');
      if (idx > 2 * kMaxDim) break;
    }
    const char kind = t.text[0];
    const int limit = kind == 'e' ? 2 * m_ : m_;
    if (idx < 1 || idx > limit) {
      throw ParseError("factor '" + t.text + "' out of range 1.." + std::to_string(limit) + " at position " + std::to_string(t.pos));
    }
    if (kind == 'e') {
      saw_gamma_ = true;
      return gamma(m_, idx);
    }
    saw_null_ = true;
    return kind == 'p' ? witt_p(m_, idx) : witt_q(m_, idx);
  }

  int m_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  bool saw_gamma_ = false;
  bool saw_null_ = false;
};

// Appends "coef * body" with the sign folded into the joiner.
void append_term(std::string& out, const Rational& c, const std::string& body) {
  const bool negative = sgn(c) < 0;
  const Rational mag = abs(c);
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (body.empty()) {
    out += mag.get_str();
  } else if (mag == 1) {
    out += body;
  } else {
    out += mag.get_str() + " * " + body;
  }
}

}  // namespace

ParsedElement parse_element(int m, std::string_view text) {
  check_dim(m);
  return Parser(m, text).parse();
}

std::string canonical_word_str(const EfbIndex& x) { return oracle::word_str(oracle::canonical_word(x)); }

std::string format_gamma(const Element& v) {
  std::string out;
  for (const auto& mono : to_gamma(v)) {
    std::string body;
    for (int i = 0; i < 64; ++i) {
      if (!(mono.mask & (1ull << i))) continue;
      if (!body.empty()) body += ' ';
      body += "e" + std::to_string(i + 1);
    }
    append_term(out, mono.coef, body);
  }
  return out.empty() ? "0" : out;
}

std::string format_null(const Element& v) {
  std::string out;
  for (const auto& [idx, c] : v.terms()) append_term(out, c, canonical_word_str(idx));
  return out.empty() ? "0" : out;
}

std::string format_element(const Element& v, Basis basis) {
  return basis == Basis::Gamma ? format_gamma(v) : format_null(v);
}

}  // namespace efb
