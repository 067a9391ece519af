#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "efb/bench.hpp"

// Text and json renderings behind the command-line subcommands. Every
// function returns the full document; errors propagate as exceptions.
namespace efb::report {

enum class Format { Text, Json };

// "text" or "json"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

inline constexpr int kMaxTextTableDim = 6;
inline constexpr int kMaxJsonTableDim = 10;

// Signed EFB word of the matrix unit at (a, b): t(a,b) Psi_ab, e.g. "-q1 p2".
std::string table_cell(const EfbIndex& x);

// Rows are h signatures, columns h∘g signatures. Throws std::out_of_range.
std::string render_table(int m, Format format);
std::string render_gamma(int m, int i, Format format);

// automorphism: main | reversion | conjugation | beta | dual | inner.
// The result is written in the token family of the input.
std::string render_apply(int m, std::string_view automorphism, std::string_view input,
                         std::optional<std::string_view> inner_element, Format format);

std::string render_classify(int m, std::string_view element, Format format);

std::string render_bench(const std::vector<bench::BenchRow>& rows, int trials, Format format);

// "4", "2..8", "2,3,5"
std::vector<int> parse_dim_list(std::string_view text);

}  // namespace efb::report
