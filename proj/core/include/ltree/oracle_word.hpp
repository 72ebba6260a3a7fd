#pragma once

// Words assembled from generator oracles, following the effective-computation
// scheme: a generator is usable as soon as its letters are computable (ER1)
// and the common prefix of any two generator suffixes is computable (ER2).
// Products are kept as lists of pieces of signed generators; com and * are
// driven purely by ER2 queries on those pieces.

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

#include "ltree/word.hpp"

namespace ltree {

class GeneratorOracle {
 public:
  virtual ~GeneratorOracle() = default;

  virtual std::size_t rank() const = 0;
  virtual LambdaElem length() const = 0;
  /// ER1: y(pos) for 1 <= pos <= |y|.
  virtual Letter eval(const LambdaElem& pos) const = 0;

  /// ER2: the length of the common prefix of y^{+-1} restricted to
  /// (from, |y|] and other^{+-1} restricted to (other_from, |other|], capped
  /// at `limit`. The default implementation probes letters and only handles
  /// finite stretches; it throws std::logic_error otherwise.
  virtual LambdaElem common_prefix(bool inverted, const LambdaElem& from,
                                   const GeneratorOracle& other, bool other_inverted,
                                   const LambdaElem& other_from, const LambdaElem& limit) const;

  /// Letter of y^{-1} when `inverted`, of y otherwise.
  Letter signed_eval(bool inverted, const LambdaElem& pos) const;
};

/// Oracle backed by a block-normal-form word.
class WordOracle final : public GeneratorOracle {
 public:
  explicit WordOracle(Word word);

  std::size_t rank() const override { return word_.rank(); }
  LambdaElem length() const override { return word_.length(); }
  Letter eval(const LambdaElem& pos) const override { return word_.at(pos); }
  LambdaElem common_prefix(bool inverted, const LambdaElem& from, const GeneratorOracle& other,
                           bool other_inverted, const LambdaElem& other_from,
                           const LambdaElem& limit) const override;

  const Word& word() const { return word_; }

 private:
  Word suffix(bool inverted, const LambdaElem& from, const LambdaElem& limit) const;

  Word word_;
  Word inverse_;
};

/// Finite generator given by an arbitrary letter function on [1, length].
class FunctionOracle final : public GeneratorOracle {
 public:
  FunctionOracle(std::size_t rank, BigInt length, std::function<Letter(const BigInt&)> letter);

  std::size_t rank() const override { return rank_; }
  LambdaElem length() const override { return LambdaElem::from_parts(rank_, length_); }
  Letter eval(const LambdaElem& pos) const override;

 private:
  std::size_t rank_;
  BigInt length_;
  std::function<Letter(const BigInt&)> letter_;
};

class LazyWord {
 public:
  struct Piece {
    std::shared_ptr<const GeneratorOracle> source;
    bool inverted = false;
    LambdaElem from;  ///< the piece covers positions (from, from + size] of source^{+-1}
    LambdaElem size;
  };

  explicit LazyWord(std::size_t rank);
  static LazyWord generator(std::shared_ptr<const GeneratorOracle> source, bool inverted = false);

  std::size_t rank() const { return rank_; }
  LambdaElem length() const;
  bool empty() const { return pieces_.empty(); }
  const std::vector<Piece>& pieces() const { return pieces_; }

  Letter eval(const LambdaElem& pos) const;
  LazyWord inverse() const;
  LazyWord slice(const LambdaElem& from, const LambdaElem& to) const;
  LazyWord concat(const LazyWord& other) const;

 private:
  std::size_t rank_;
  std::vector<Piece> pieces_;
};

LambdaElem com_length(const LazyWord& u, const LazyWord& v);
LazyWord product(const LazyWord& u, const LazyWord& v);

}  // namespace ltree
