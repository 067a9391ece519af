// Command-line front end: table | gamma | apply | classify | bench.
// Exit codes: 0 success, 1 usage error, 2 domain error.

#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "efb/errors.hpp"
#include "efb/report.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kDomainError = 2;

std::string read_stdin() {
  std::string s{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  using efb::report::Format;

  CLI::App app{"Clifford algebra Cl(m,m) in the extended Fock basis"};
  app.require_subcommand(1);

  int m = 2;
  std::string format = "text";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--m", m, "Number of Witt pairs")->required();
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* table = app.add_subcommand("table", "Signed EFB table of Cl(m,m)");
  add_common(table);

  int gen = 1;
  auto* gamma = app.add_subcommand("gamma", "Matrix and EFB expansion of a generator");
  add_common(gamma);
  gamma->add_option("--i", gen, "Generator index 1..2m")->required();

  std::string automorphism;
  std::string input;
  std::string inner_x;
  auto* apply = app.add_subcommand("apply", "Apply an automorphism to an element");
  add_common(apply);
  apply->add_option("automorphism", automorphism, "main|reversion|conjugation|beta|dual|inner")
      ->required()
      ->check(CLI::IsMember({"main", "reversion", "conjugation", "beta", "dual", "inner"}));
  apply->add_option("input", input, "Element, e.g. \"2 * e1 e3 - 1/2 * e2\" (stdin if omitted)");
  apply->add_option("--x", inner_x, "Conjugating element for 'inner'");

  std::string element;
  auto* classify = app.add_subcommand("classify", "Spinor-space action of conjugation by an element");
  add_common(classify);
  classify->add_option("element", element, "Invertible element (stdin if omitted)");

  std::string dims = "2..8";
  int trials = 5;
  auto* bench = app.add_subcommand("bench", "Multiplication counts and timings, EFB vs dense");
  bench->add_option("--m", dims, "Dimensions: 4, 2..8 or 2,3,5");
  bench->add_option("--trials", trials, "Timing samples per dimension");
  bench->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  const Format fmt = efb::report::parse_format(format);
  try {
    if (table->parsed()) {
      std::cout << efb::report::render_table(m, fmt);
    } else if (gamma->parsed()) {
      std::cout << efb::report::render_gamma(m, gen, fmt);
    } else if (apply->parsed()) {
      if (automorphism == "inner" && inner_x.empty()) {
        std::cerr << "error: inner requires --x\n";
        return kUsageError;
      }
      if (input.empty()) input = read_stdin();
      std::optional<std::string_view> x;
      if (!inner_x.empty()) x = inner_x;
      std::cout << efb::report::render_apply(m, automorphism, input, x, fmt);
    } else if (classify->parsed()) {
      if (element.empty()) element = read_stdin();
      std::cout << efb::report::render_classify(m, element, fmt);
    } else if (bench->parsed()) {
      const auto ms = efb::report::parse_dim_list(dims);
      std::cout << efb::report::render_bench(efb::bench::run(ms, trials), trials, fmt);
    }
  } catch (const efb::NotInvertibleError& e) {
    std::cerr << "error: not invertible: " << e.what() << "\n";
    return kDomainError;
  } catch (const efb::ParseError& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return kDomainError;
  } catch (const efb::DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return 0;
}
