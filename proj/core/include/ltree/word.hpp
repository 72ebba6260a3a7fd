#pragma once

// Reduced Lambda-words over Z^n in block normal form.
//
// A word w : [1, |w|] -> X^{+-} is a finite alternation of finite blocks and
// tail blocks. A tail block has length (delta, 1): positions finitely far from
// its start read a forward-periodic pattern, positions finitely far from its
// end read a backward-periodic pattern.
//
// Internally a word of height h is stored as h + 1 levels; level j holds the
// letters at positions (a, j), a in Z. Each level is an incoming
// left-infinite periodic stream (absent on level 0), an explicit core and an
// outgoing right-infinite periodic stream (absent on the top level).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ltree/ordered_group.hpp"

namespace ltree {

struct Letter {
  std::uint32_t symbol = 0;
  bool inverted = false;

  Letter inverse() const { return {symbol, !inverted}; }
  friend bool operator==(Letter, Letter) = default;
  friend auto operator<=>(Letter, Letter) = default;
};

using FiniteWord = std::vector<Letter>;

FiniteWord inverse(const FiniteWord& w);
bool is_reduced(const FiniteWord& w);
/// Reduced and, read cyclically, free of cancellation.
bool is_cyclically_reduced(const FiniteWord& w);
/// Shortest r with w = r^k. Empty input yields empty output.
FiniteWord primitive_root(const FiniteWord& w);
bool is_proper_power(const FiniteWord& w);

/// Tail block as exposed in the block view and accepted by the DSL.
struct TailBlock {
  FiniteWord front;  ///< read forward from the block start
  FiniteWord back;   ///< read backward from the block end; the end reads back.back()
  BigInt offset;     ///< coordinate-0 part of the block length (delta)
};

using Block = std::variant<FiniteWord, TailBlock>;

class Word {
 public:
  /// One horizontal slice of the word (see the file comment).
  struct Level {
    FiniteWord incoming;  ///< period of the left stream; empty on level 0
    BigInt anchor;        ///< index of the last letter of the left stream
    FiniteWord core;      ///< letters at anchor+1 .. anchor+|core|
    FiniteWord outgoing;  ///< period of the right stream; empty on the top level

    BigInt core_end() const { return anchor + core.size(); }
    Letter at(const BigInt& index) const;
  };

  /// The empty word in Z^rank.
  explicit Word(std::size_t rank = 1);

  static Word finite(std::size_t rank, FiniteWord letters);
  /// A single tail block of length (offset, 1). Periods must be non-empty and
  /// cyclically reduced; they are replaced by their primitive roots.
  static Word tail(std::size_t rank, FiniteWord front, FiniteWord back, BigInt offset = 0);
  static Word from_blocks(std::size_t rank, const std::vector<Block>& blocks);

  std::size_t rank() const { return rank_; }
  std::size_t height() const { return levels_.size() - 1; }
  const std::vector<Level>& levels() const { return levels_; }
  LambdaElem length() const;
  bool empty() const { return height() == 0 && levels_[0].core.empty(); }
  bool is_finite() const { return height() == 0; }
  /// Letters of a height-0 word; throws for infinite words.
  const FiniteWord& letters() const;

  /// Adjacent letters never mutually inverse, periods cyclically reduced.
  bool is_reduced() const { return reduced_; }

  /// The letter at position beta, 1 <= beta <= |w|.
  Letter at(const LambdaElem& beta) const;
  Letter first_letter() const;
  Letter last_letter() const;

  std::vector<Block> blocks() const;

 private:
  friend Word inverse(const Word&);
  friend Word concat(const Word&, const Word&);
  friend Word slice(const Word&, const LambdaElem&, const LambdaElem&);

  void normalize();
  bool compute_reduced() const;

  std::size_t rank_;
  std::vector<Level> levels_;
  bool reduced_ = true;
};

/// w^{-1}(beta) = w(|w| + 1 - beta)^{-1}.
Word inverse(const Word& w);

/// Plain concatenation; the result is flagged unreduced when the seam letters
/// cancel.
Word concat(const Word& u, const Word& v);

/// Restriction of w to the positions (from, to], re-indexed from 1.
Word slice(const Word& w, const LambdaElem& from, const LambdaElem& to);

/// u_beta: restriction to [1, beta].
Word initial_subword(const Word& w, const LambdaElem& beta);

/// |com(u, v)|. Throws ComUndefined when the common initial segment does not
/// exist.
LambdaElem com_length(const Word& u, const Word& v);

/// The longest common initial segment and its length.
std::pair<Word, LambdaElem> com(const Word& u, const Word& v);

/// u * v = u~^{-1} o v~ where u^{-1} = com(u^{-1}, v) o u~, v = com(u^{-1}, v) o v~.
Word product(const Word& u, const Word& v);

/// Same function on the same domain.
bool same_word(const Word& u, const Word& v);

struct CyclicDecomposition {
  Word conjugator;  ///< c in w = c^{-1} o core o c
  Word core;
};

/// The unique decomposition w = c^{-1} o core o c with core cyclically
/// reduced, or nullopt when w is not in CDR.
std::optional<CyclicDecomposition> cyclic_decomposition(const Word& w);

/// Letter test w(1)^{-1} != w(|w|). Throws on the empty word.
bool is_cyclically_reduced(const Word& w);

/// Group-theoretic form of the same test: |w * w| = 2|w|.
bool squares_without_cancellation(const Word& w);

}  // namespace ltree
