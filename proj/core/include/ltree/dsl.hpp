#pragma once

// Text form of words: letters are names [A-Za-z][0-9]*, juxtaposed or
// separated by whitespace; `x^-1` inverts, `(ab)^3` repeats, `1` or `ε` is the
// empty word, and `tail(front="ab", back="ba", offset=2)` is a tail block.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ltree/word.hpp"

namespace ltree {

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(const std::vector<std::string>& names);

  static bool valid_name(std::string_view name);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::uint32_t symbol) const { return names_.at(symbol); }
  std::optional<std::uint32_t> find(std::string_view name) const;
  /// Index of `name`, appending it if new.
  std::uint32_t add(const std::string& name);

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

std::string format_letter(Letter x, const Alphabet& alphabet);
/// Letters juxtaposed, e.g. "ab^-1c"; empty input gives "".
std::string format_finite(const FiniteWord& w, const Alphabet& alphabet);
/// Round-trippable DSL text; "ε" for the empty word.
std::string format_word(const Word& w, const Alphabet& alphabet);
/// Compact block outline, e.g. "F2 T F1" (finite block sizes, T for tails).
std::string block_shape(const Word& w);

/// Parses the word DSL. Unknown letters are an error unless `extend` is set,
/// in which case they are appended to the alphabet.
Word parse_word(std::string_view text, Alphabet& alphabet, std::size_t rank, bool extend = false);
Word parse_word(std::string_view text, const Alphabet& alphabet, std::size_t rank);
FiniteWord parse_finite(std::string_view text, Alphabet& alphabet, bool extend = false);

}  // namespace ltree
