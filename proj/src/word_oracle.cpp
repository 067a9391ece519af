#include "efb/word_oracle.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace efb::oracle {

namespace {

using Letters = std::vector<NullLetter>;

// First position where a relation must fire, or npos when the word is in
// normal form: indices non-decreasing, no repeated letter, each index block
// of length <= 2. Inside an alternating block x y x the second pair fires, so
// the result is either shorter or contains x x.
std::size_t first_redex(const Letters& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k].index > w[k + 1].index) return k;
    if (w[k].index == w[k + 1].index) {
      if (w[k].kind == w[k + 1].kind) return k;
      if (k + 2 < w.size() && w[k + 2].index == w[k].index) return k + 1;
    }
  }
  return std::string::npos;
}

// Expands a normal-form word into basis elements. A missing index stands for
// the unit {q_i, p_i} = q_i p_i + p_i q_i.
void expand_normal(int m, const Letters& w, const Rational& coef, std::vector<Element::Term>& out) {
  // pattern per pair: bit 0 set = h negative (starts with p), bit 1 set = odd
  std::vector<std::vector<std::pair<int, int>>> choices(m);  // (h, g) options
  std::size_t k = 0;
  for (int i = 1; i <= m; ++i) {
    auto& opts = choices[i - 1];
    if (k < w.size() && w[k].index == i) {
      const bool two = k + 1 < w.size() && w[k + 1].index == i;
      const int h = w[k].kind == LetterKind::Q ? 1 : -1;
      opts.emplace_back(h, two ? 1 : -1);
      k += two ? 2 : 1;
    } else {
      opts.emplace_back(1, 1);
      opts.emplace_back(-1, 1);
    }
  }
  // Enumerate the cartesian product of choices.
  std::vector<std::size_t> pick(m, 0);
  while (true) {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    for (int i = 0; i < m; ++i) {
      const auto [h, g] = choices[i][pick[i]];
      a = (a << 1) | (h < 0 ? 1u : 0u);
      b = (b << 1) | (h * g < 0 ? 1u : 0u);
    }
    out.emplace_back(EfbIndex(Signature(m, a), Signature(m, b)), coef);
    int i = m - 1;
    while (i >= 0 && ++pick[i] == choices[i].size()) pick[i--] = 0;
    if (i < 0) break;
  }
}

}  // namespace

NullWord parse_word(std::string_view text) {
  NullWord w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 'p' && tok[0] != 'q')) throw ParseError("bad null letter: " + tok);
    int idx = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tok[i]))) throw ParseError("bad null letter: " + tok);
      idx = idx * 10 + (tok[i] - '0');
      if (idx > kMaxDim) throw ParseError("letter index too large: " + tok);
    }
    if (idx < 1) throw ParseError("letter index must be >= 1: " + tok);
    w.letters.push_back({tok[0] == 'p' ? LetterKind::P : LetterKind::Q, idx});
  }
  return w;
}

std::string word_str(const std::vector<NullLetter>& letters) {
  std::string s;
  for (const auto& l : letters) {
    if (!s.empty()) s += ' ';
    s += (l.kind == LetterKind::P ? 'p' : 'q');
    s += std::to_string(l.index);
  }
  return s;
}

std::vector<NullLetter> canonical_word(const EfbIndex& x) {
  std::vector<NullLetter> w;
  for (int i = 0; i < x.dim(); ++i) {
    const bool h_plus = x.row.entry(i) > 0;
    const bool even = x.row.entry(i) == x.col.entry(i);
    const LetterKind first = h_plus ? LetterKind::Q : LetterKind::P;
    const LetterKind second = h_plus ? LetterKind::P : LetterKind::Q;
    w.push_back({first, i + 1});
    if (even) w.push_back({second, i + 1});
  }
  return w;
}

std::vector<NullWord> rewrite_at(const NullWord& w, std::size_t pos) {
  if (pos + 1 >= w.letters.size()) return {w};
  const NullLetter x = w.letters[pos];
  const NullLetter y = w.letters[pos + 1];
  if (x.index == y.index && x.kind == y.kind) return {};

  NullWord swapped = w;
  std::swap(swapped.letters[pos], swapped.letters[pos + 1]);
  swapped.coefficient = -w.coefficient;
  if (x.index != y.index) return {swapped};

  NullWord dropped = w;
  dropped.letters.erase(dropped.letters.begin() + static_cast<std::ptrdiff_t>(pos),
                        dropped.letters.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
  return {dropped, swapped};
}

Element reduce(int m, const NullWord& w) {
  check_dim(m);
  for (const auto& l : w.letters) {
    if (l.index < 1 || l.index > m) throw DimensionError("letter index outside 1..m");
  }
  std::map<Letters, Rational> normal;
  std::vector<NullWord> work{w};
  while (!work.empty()) {
    NullWord cur = std::move(work.back());
    work.pop_back();
    if (sgn(cur.coefficient) == 0) continue;
    const std::size_t pos = first_redex(cur.letters);
    if (pos == std::string::npos) {
      normal[cur.letters] += cur.coefficient;
      continue;
    }
    for (auto& next : rewrite_at(cur, pos)) work.push_back(std::move(next));
  }
  std::vector<Element::Term> terms;
  for (const auto& [letters, coef] : normal) {
    if (sgn(coef) != 0) expand_normal(m, letters, coef, terms);
  }
  return Element(m, std::move(terms));
}

Element oracle_product(const EfbIndex& x, const EfbIndex& y) {
  if (x.dim() != y.dim()) throw DimensionError("oracle product of indices with different m");
  NullWord w;
  w.letters = canonical_word(x);
  const auto rhs = canonical_word(y);
  w.letters.insert(w.letters.end(), rhs.begin(), rhs.end());
  return reduce(x.dim(), w);
}

}  // namespace efb::oracle
