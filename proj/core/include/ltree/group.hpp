#pragma once

// Finitely generated subgroups of CDR(Z^n, X): generator tables, evaluation
// of generator expressions, the Lyndon length function and its axioms.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ltree/dsl.hpp"
#include "ltree/oracle_word.hpp"
#include "ltree/word.hpp"

namespace ltree {

struct Generator {
  std::string name;
  Word word;
};

class GroupDef {
 public:
  GroupDef(std::size_t rank, Alphabet alphabet, std::vector<Generator> generators);

  std::size_t rank() const { return rank_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::optional<std::size_t> find(std::string_view name) const;

  /// Violations of the generator-table invariants (reduced, admits a cyclic
  /// decomposition). Empty when the table is sound.
  std::vector<std::string> problems() const;
  /// Throws std::invalid_argument naming the first problem.
  void require_valid() const;

  /// Stable textual form; the input of hash().
  std::string canonical_text() const;
  /// FNV-1a 64 of canonical_text().
  std::uint64_t hash() const;

  /// ER1/ER2 oracles for the generators, in table order.
  const std::vector<std::shared_ptr<const GeneratorOracle>>& oracles() const { return oracles_; }

 private:
  std::size_t rank_;
  Alphabet alphabet_;
  std::vector<Generator> generators_;
  std::vector<std::shared_ptr<const GeneratorOracle>> oracles_;
};

struct GroupElem {
  Word word;
  std::string expression;  ///< generator string it was evaluated from; "1" for the identity

  LambdaElem length() const { return word.length(); }
};

struct GenToken {
  std::size_t generator;
  bool inverted = false;
  friend bool operator==(GenToken, GenToken) = default;
};

/// Parses a generator expression ("s a s^-1", "(ab)^3", "1") into a flat
/// token list. Throws ParseError on unknown generator names.
std::vector<GenToken> parse_expression(const GroupDef& group, std::string_view expr);
std::string format_expression(const GroupDef& group, const std::vector<GenToken>& tokens);

GroupElem identity(const GroupDef& group);
GroupElem generator_elem(const GroupDef& group, GenToken token);
/// Left-associated *-product of the generator words.
GroupElem evaluate(const GroupDef& group, std::string_view expr);
GroupElem evaluate(const GroupDef& group, const std::vector<GenToken>& tokens);
/// The same product computed through the generator oracles.
LazyWord evaluate_lazy(const GroupDef& group, const std::vector<GenToken>& tokens);

GroupElem multiply(const GroupElem& f, const GroupElem& g);
GroupElem inverse(const GroupElem& g);
bool is_identity(const GroupElem& g);

/// c(f, g) = |com(f, g)|, cross-checked on every call against
/// (|f| + |g| - |f^{-1} * g|) / 2 and against the letters at the split point.
/// A failed cross-check throws std::logic_error.
LambdaElem c_value(const GroupElem& f, const GroupElem& g);
/// Number of c_value cross-checks performed by this process.
std::uint64_t c_value_checks();

/// Searches freely reduced generator strings of length <= bound for h != 1
/// with |h * h| = 2|h|. A result certifies minimality of the universal tree;
/// nullopt is inconclusive.
std::optional<GroupElem> minimality_witness(const GroupDef& group, int bound);

/// Deterministic source of random group elements (products of at most
/// `max_length` generators and inverses, freely reduced in the generators).
class ElementSampler {
 public:
  ElementSampler(const GroupDef& group, std::uint64_t seed, std::size_t max_length = 6);

  std::vector<GenToken> tokens(std::size_t min_length = 0);
  GroupElem element(std::size_t min_length = 0);
  GroupElem nontrivial();
  std::uint64_t next(std::uint64_t bound);  ///< uniform in [0, bound)
  const GroupDef& group() const { return *group_; }

 private:
  const GroupDef* group_;
  std::uint64_t state_;
  std::size_t max_length_;
};

struct Finding {
  std::string axiom;
  bool passed = true;
  std::size_t sample = 0;  ///< samples checked when passed, first failing sample otherwise
  std::string detail;
};

struct CheckReport {
  std::vector<Finding> findings;

  bool passed() const;
  /// One line per axiom: "PASS axiom=<id> sample=<n>" or
  /// "FAIL axiom=<id> sample=<k> <detail>".
  std::string to_text() const;
  void merge(const CheckReport& other);
};

/// Single finding CDR: every generator is reduced and admits a cyclic
/// decomposition.
CheckReport check_generators(const GroupDef& group);

/// L1-L4, subadditivity, 0 <= c <= min, and generator-table soundness
/// (axiom id CDR) on `samples` random triples.
CheckReport check_length_axioms(const GroupDef& group, std::size_t samples, std::uint64_t seed);

/// Group definition files:
///   lgroup 1
///   rank 2
///   alphabet a b
///   gen s = tail(front="ab", back="ab")
/// or a construction line (`free alphabet=a,b`, `hnn_stable u="ab"`,
/// `hnn_conj u="ab" v="ba"`) optionally followed by extra `gen` lines.
GroupDef parse_group(std::string_view text);
GroupDef load_group(const std::string& path);

}  // namespace ltree
