#include "efb/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "efb/automorphisms.hpp"
#include "efb/generators.hpp"
#include "efb/spinor_spaces.hpp"
#include "efb/text_format.hpp"

namespace efb::report {

namespace {

using nlohmann::ordered_json;

std::string pad_right(const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }
std::string pad_left(const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; }

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

// Grid with a label column; all columns padded to their widest entry.
std::string render_grid(const std::vector<std::string>& col_labels, const std::vector<std::string>& row_labels,
                        const std::vector<std::vector<std::string>>& cells) {
  std::size_t label_w = 0;
  for (const auto& r : row_labels) label_w = std::max(label_w, r.size());
  std::vector<std::size_t> w(col_labels.size());
  for (std::size_t c = 0; c < col_labels.size(); ++c) {
    w[c] = col_labels[c].size();
    for (const auto& row : cells) w[c] = std::max(w[c], row[c].size());
  }
  std::string out = pad_right("", label_w);
  for (std::size_t c = 0; c < col_labels.size(); ++c) out += "   " + pad_right(col_labels[c], w[c]);
  out = rstrip(out) + "\n";
  for (std::size_t r = 0; r < row_labels.size(); ++r) {
    std::string line = pad_right(row_labels[r], label_w);
    for (std::size_t c = 0; c < col_labels.size(); ++c) line += "   " + pad_right(cells[r][c], w[c]);
    out += rstrip(line) + "\n";
  }
  return out;
}

void check_generator(int m, int i) {
  check_dim(m);
  if (i < 1 || i > 2 * m) throw std::out_of_range("generator index outside 1.." + std::to_string(2 * m));
}

std::string summary(const StabilizerReport& r) {
  if (!r.space_map) return "not a permutation of spaces";
  if (r.stabilizes_all()) return "stabilizes all spaces";
  if (r.is_negation()) return "moves spaces: b -> -b";
  return "permutes spaces";
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected text or json)");
}

std::string table_cell(const EfbIndex& x) {
  const std::string word = canonical_word_str(x);
  return table_sign(x) < 0 ? "-" + word : word;
}

std::string render_table(int m, Format format) {
  const int limit = format == Format::Text ? kMaxTextTableDim : kMaxJsonTableDim;
  if (m < 1 || m > limit) throw std::out_of_range("table m must be in 1.." + std::to_string(limit));
  const auto sigs = all_signatures(m);
  std::vector<std::string> labels;
  for (const auto& s : sigs) labels.push_back(s.str());

  if (format == Format::Json) {
    ordered_json j;
    j["m"] = m;
    j["rows"] = labels;
    j["cols"] = labels;
    ordered_json cells = ordered_json::array();
    for (const auto& a : sigs) {
      ordered_json row = ordered_json::array();
      for (const auto& b : sigs) {
        const EfbIndex idx(a, b);
        row.push_back({{"sign", table_sign(idx)}, {"word", canonical_word_str(idx)}, {"text", table_cell(idx)}});
      }
      cells.push_back(std::move(row));
    }
    j["cells"] = std::move(cells);
    return dump(j);
  }

  std::vector<std::vector<std::string>> cells;
  for (const auto& a : sigs) {
    std::vector<std::string> row;
    for (const auto& b : sigs) row.push_back(table_cell(EfbIndex(a, b)));
    cells.push_back(std::move(row));
  }
  return render_grid(labels, labels, cells);
}

std::string render_gamma(int m, int i, Format format) {
  check_generator(m, i);
  const Element g = gamma(m, i);
  const auto M = to_matrix(g);

  if (format == Format::Json) {
    ordered_json j;
    j["m"] = m;
    j["i"] = i;
    ordered_json mat = ordered_json::array();
    for (std::size_t r = 0; r < M.rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (std::size_t c = 0; c < M.cols(); ++c) row.push_back(M(r, c).get_num().get_si());
      mat.push_back(std::move(row));
    }
    j["matrix"] = std::move(mat);
    ordered_json terms = ordered_json::array();
    for (const auto& [idx, c] : g.terms()) {
      terms.push_back({{"row", idx.row.str()}, {"col", idx.col.str()}, {"coef", c.get_str()}, {"word", canonical_word_str(idx)}});
    }
    j["expansion"] = std::move(terms);
    j["text"] = format_null(g);
    j["trace"] = trace(g).get_str();
    return dump(j);
  }

  std::string out = "e" + std::to_string(i) + " in Cl(" + std::to_string(m) + "," + std::to_string(m) + ")\n";
  for (std::size_t r = 0; r < M.rows(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < M.cols(); ++c) line += pad_left(M(r, c).get_str(), 3);
    out += line + "\n";
  }
  out += "expansion: " + format_null(g) + "\n";
  return out;
}

std::string render_apply(int m, std::string_view automorphism, std::string_view input,
                         std::optional<std::string_view> inner_element, Format format) {
  const ParsedElement in = parse_element(m, input);
  Element result(m);
  if (automorphism == "main") {
    result = main_auto(in.value);
  } else if (automorphism == "reversion") {
    result = reversion_auto(in.value);
  } else if (automorphism == "conjugation") {
    result = conjugation_auto(in.value);
  } else if (automorphism == "beta") {
    result = beta_anti(in.value);
  } else if (automorphism == "dual") {
    result = dual_transpose(in.value);
  } else if (automorphism == "inner") {
    if (!inner_element) throw std::invalid_argument("inner requires an element (--x)");
    result = inner(parse_element(m, *inner_element).value, in.value);
  } else {
    throw std::invalid_argument("unknown automorphism '" + std::string(automorphism) + "'");
  }
  const std::string text = format_element(result, in.basis);
  if (format == Format::Json) {
    ordered_json j;
    j["m"] = m;
    j["automorphism"] = std::string(automorphism);
    if (inner_element) j["x"] = std::string(*inner_element);
    j["input"] = std::string(input);
    j["basis"] = in.basis == Basis::Gamma ? "gamma" : "null";
    j["result"] = text;
    return dump(j);
  }
  return text + "\n";
}

std::string render_classify(int m, std::string_view element, Format format) {
  const ParsedElement x = parse_element(m, element);
  const StabilizerReport rep = classify_stabilizer(x.value);
  const auto sigs = all_signatures(m);

  if (format == Format::Json) {
    ordered_json j;
    j["m"] = m;
    j["x"] = std::string(element);
    if (rep.space_map) {
      ordered_json map = ordered_json::object();
      for (const auto& b : sigs) map[b.str()] = (*rep.space_map)[b.bits()].str();
      j["space_map"] = std::move(map);
    } else {
      j["space_map"] = nullptr;
    }
    j["summary"] = summary(rep);
    j["chirality_factor"] = to_string(rep.chirality_factor);
    j["prop2_equivalence"] = rep.equivalence_holds();
    return dump(j);
  }

  std::string out = "x = " + std::string(element) + "\n";
  if (rep.space_map) {
    out += "space map:\n";
    for (const auto& b : sigs) out += "  " + b.str() + " -> " + (*rep.space_map)[b.bits()].str() + "\n";
  }
  out += "summary: " + summary(rep) + "\n";
  out += "chirality factor: " + to_string(rep.chirality_factor) + "\n";
  out += std::string("x S x^-1 = S  <=>  S x^-1 = S: ") + (rep.equivalence_holds() ? "holds" : "violated") + "\n";
  return out;
}

std::string render_bench(const std::vector<bench::BenchRow>& rows, int trials, Format format) {
  if (format == Format::Json) {
    ordered_json j;
    j["trials"] = trials;
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json o;
      o["m"] = r.m;
      o["efb_mults"] = r.vector_spinor.efb;
      o["dense_mults"] = r.vector_spinor.dense;
      o["count_ratio"] = r.count_ratio();
      o["claim_holds"] = r.counts_match_claim();
      if (r.has_general) {
        o["general_efb_mults"] = r.general.efb;
        o["general_dense_mults"] = r.general.dense;
      }
      o["efb_median_ns"] = r.efb_median_ns;
      o["dense_median_ns"] = r.dense_median_ns;
      o["wall_ratio"] = r.wall_ratio();
      arr.push_back(std::move(o));
    }
    j["rows"] = std::move(arr);
    return dump(j);
  }

  const std::vector<std::string> cols{"efb_mults", "dense_mults", "ratio", "claim", "general_efb", "general_dense",
                                      "efb_ns",    "dense_ns",    "wall_ratio"};
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    labels.push_back("m=" + std::to_string(r.m));
    cells.push_back({std::to_string(r.vector_spinor.efb), std::to_string(r.vector_spinor.dense),
                     fixed(r.count_ratio(), 0), r.counts_match_claim() ? "ok" : "FAIL",
                     r.has_general ? std::to_string(r.general.efb) : "-",
                     r.has_general ? std::to_string(r.general.dense) : "-", fixed(r.efb_median_ns, 1),
                     fixed(r.dense_median_ns, 1), fixed(r.wall_ratio(), 2)});
  }
  return render_grid(cols, labels, cells);
}

std::vector<int> parse_dim_list(std::string_view text) {
  auto to_int = [&](std::string_view s) {
    if (s.empty() || s.size() > 3 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("bad dimension list '" + std::string(text) + "'");
    }
    return std::stoi(std::string(s));
  };
  std::vector<int> out;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    const int lo = to_int(text.substr(0, dots));
    const int hi = to_int(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty dimension range '" + std::string(text) + "'");
    for (int m = lo; m <= hi; ++m) out.push_back(m);
    return out;
  }
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(to_int(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace efb::report
