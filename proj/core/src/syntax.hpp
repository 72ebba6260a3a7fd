#pragma once

// Shared surface syntax of the word DSL and of generator expressions:
//   sequence := item*
//   item     := atom ('^' '-'? digits)?
//   atom     := name | '(' sequence ')' | 'tail' '(' key '=' value, ... ')' | '1' | 'ε'
//   name     := [A-Za-z][0-9]*

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ltree::syntax {

struct Term;
using Sequence = std::vector<Term>;

struct TailArgs {
  std::string front;
  std::string back;
  std::string offset = "0";
};

struct Term {
  enum class Kind { name, group, tail } kind = Kind::name;
  std::string name;
  std::shared_ptr<Sequence> group;
  TailArgs tail;
  std::int64_t exponent = 1;
};

/// Throws ParseError on malformed input.
Sequence parse(std::string_view text);

inline constexpr std::int64_t kMaxExponent = 1'000'000;

}  // namespace ltree::syntax
