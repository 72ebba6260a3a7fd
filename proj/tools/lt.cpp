// lt: command-line front end for groups of infinite words and their trees.
//
// Exit codes: 0 success, 1 property violation, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ltree/checks.hpp"
#include "ltree/error.hpp"
#include "ltree/group.hpp"
#include "ltree/tree.hpp"

namespace {

constexpr int kViolation = 1;
constexpr int kInputError = 2;

ltree::GroupDef load_valid(const std::string& path) {
  ltree::GroupDef group = ltree::load_group(path);
  group.require_valid();
  return group;
}

std::string letter_or_dash(const ltree::Word& w, bool first, const ltree::Alphabet& alphabet) {
  if (w.empty()) return "-";
  return ltree::format_letter(first ? w.first_letter() : w.last_letter(), alphabet);
}

int cmd_eval(const std::string& defs, const std::string& expr) {
  const auto group = load_valid(defs);
  const auto g = ltree::evaluate(group, expr);
  std::cout << "word " << ltree::format_word(g.word, group.alphabet()) << "\n"
            << "length " << g.length().to_string() << "\n"
            << "first " << letter_or_dash(g.word, true, group.alphabet()) << "\n"
            << "last " << letter_or_dash(g.word, false, group.alphabet()) << "\n"
            << "blocks " << ltree::block_shape(g.word) << "\n";
  return 0;
}

int cmd_dist(const std::string& defs, const std::string& a, const std::string& b) {
  const auto group = load_valid(defs);
  const auto p = ltree::parse_point(group, a), q = ltree::parse_point(group, b);
  std::cout << ltree::distance(p, q).to_string() << "\n";
  return 0;
}

int cmd_act(const std::string& defs, const std::string& expr, const std::string& point) {
  const auto group = load_valid(defs);
  const auto f = ltree::evaluate(group, expr);
  std::cout << ltree::format_point(ltree::act(f, ltree::parse_point(group, point))) << "\n";
  return 0;
}

int cmd_spine(const std::string& defs, const std::vector<std::string>& exprs, const std::string& format,
              const std::string& out_path) {
  const auto group = load_valid(defs);
  std::vector<ltree::GroupElem> elems;
  for (const auto& e : exprs) elems.push_back(ltree::evaluate(group, e));
  const auto s = ltree::spine(group, elems);
  const std::string text = format == "dot" ? ltree::to_dot(s, group) : ltree::to_text(s, group);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ltree::ParseError("cannot write '" + out_path + "'");
  out << text;
  return out ? 0 : kInputError;
}

int cmd_check(const std::string& defs, const std::string& suite, std::size_t samples, std::uint64_t seed) {
  // Unsound generator tables load here so that the report can name them.
  const auto group = ltree::load_group(defs);
  const auto report = ltree::run_suite(group, suite, samples, seed);
  std::cout << report.to_text();
  return report.passed() ? 0 : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groups of infinite words over Z^n and their universal trees"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "lt 0.1.0");

  std::string defs, expr, point_a, point_b, format = "text", out_path, suite = "all";
  std::vector<std::string> exprs;
  std::size_t samples = 500;
  std::uint64_t seed = 1;

  auto* eval = app.add_subcommand("eval", "Evaluate a generator expression");
  eval->add_option("defs", defs, "Group definition file")->required();
  eval->add_option("expr", expr, "Generator expression")->required();

  auto* dist = app.add_subcommand("dist", "Distance between two points <alpha>@<expr>");
  dist->add_option("defs", defs, "Group definition file")->required();
  dist->add_option("p", point_a, "First point")->required();
  dist->add_option("q", point_b, "Second point")->required();

  auto* act = app.add_subcommand("act", "Apply an element to a point");
  act->add_option("defs", defs, "Group definition file")->required();
  act->add_option("expr", expr, "Generator expression")->required();
  act->add_option("point", point_a, "Point <alpha>@<expr> or e")->required();

  auto* spine = app.add_subcommand("spine", "Subtree spanned by the base point and orbit points");
  spine->add_option("defs", defs, "Group definition file")->required();
  spine->add_option("exprs", exprs, "Generator expressions")->required();
  spine->add_option("--format", format, "Output format")->check(CLI::IsMember({"dot", "text"}));
  spine->add_option("--out", out_path, "Output file (default: stdout)");

  auto* check = app.add_subcommand("check", "Run a randomised property suite");
  check->add_option("defs", defs, "Group definition file")->required();
  check->add_option("--suite", suite, "Suite")->check(CLI::IsMember({"metric", "length", "action", "all"}));
  check->add_option("--samples", samples, "Number of samples")->check(CLI::PositiveNumber);
  check->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (eval->parsed()) return cmd_eval(defs, expr);
    if (dist->parsed()) return cmd_dist(defs, point_a, point_b);
    if (act->parsed()) return cmd_act(defs, expr, point_a);
    if (spine->parsed()) return cmd_spine(defs, exprs, format, out_path);
    if (check->parsed()) return cmd_check(defs, suite, samples, seed);
  } catch (const ltree::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ltree::ComUndefined& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
