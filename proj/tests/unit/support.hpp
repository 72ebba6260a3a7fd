#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ltree/constructions.hpp"
#include "ltree/group.hpp"
#include "ltree/tree.hpp"
#include "ltree/word.hpp"
#include "oracle.hpp"

namespace testing {

// splitmix64; independent of the library's sampler.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

inline oracle::Letters random_letters(Rng& rng, int k, std::size_t length) {
  oracle::Letters w;
  for (std::size_t i = 0; i < length; ++i) {
    const int g = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
    w.push_back(rng.below(2) ? g : -g);
  }
  return w;
}

inline oracle::Letters random_reduced(Rng& rng, int k, std::size_t length) {
  oracle::Letters w;
  while (w.size() < length) {
    const int g = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
    const int x = rng.below(2) ? g : -g;
    if (!w.empty() && w.back() == -x) continue;
    w.push_back(x);
  }
  return w;
}

inline ltree::FiniteWord to_finite(const oracle::Letters& w) {
  ltree::FiniteWord out;
  for (int x : w) out.push_back({static_cast<std::uint32_t>((x < 0 ? -x : x) - 1), x < 0});
  return out;
}

inline oracle::Letters to_letters(const ltree::FiniteWord& w) {
  oracle::Letters out;
  for (auto x : w) out.push_back(x.inverted ? -static_cast<int>(x.symbol + 1) : static_cast<int>(x.symbol + 1));
  return out;
}

inline ltree::Word finite(const oracle::Letters& w) { return ltree::Word::finite(1, to_finite(w)); }

/// Generator expression for a letter string in a free group whose generator
/// i is named names[i - 1].
inline std::string to_expr(const oracle::Letters& w, const std::vector<std::string>& names = {"a", "b", "c", "d"}) {
  if (w.empty()) return "1";
  std::string out;
  for (int x : w) {
    if (!out.empty()) out += ' ';
    out += names[static_cast<std::size_t>((x < 0 ? -x : x) - 1)];
    if (x < 0) out += "^-1";
  }
  return out;
}

inline ltree::LambdaElem lam(std::int64_t a) { return ltree::LambdaElem::from_parts(1, a); }
inline ltree::LambdaElem lam(std::int64_t a, std::int64_t b) { return ltree::LambdaElem::from_parts(2, a, b); }

/// Random position in [1, length] that favours both ends of each level.
inline ltree::LambdaElem random_position(Rng& rng, const ltree::LambdaElem& length) {
  const std::size_t rank = length.rank();
  const std::int64_t top = rank >= 2 ? length[1].convert_to<std::int64_t>() : 0;
  const std::int64_t low = length[0].convert_to<std::int64_t>();
  if (top == 0) return ltree::LambdaElem::from_parts(rank, rng.between(1, low));
  const std::int64_t level = rng.between(0, top);
  std::int64_t a;
  if (level == 0)
    a = rng.between(1, 20);
  else if (level == top)
    a = rng.between(low - 20, low);
  else
    a = rng.between(-20, 20);
  return ltree::LambdaElem::from_parts(rank, a, level);
}

inline ltree::GroupDef free_ab() { return ltree::free_group({"a", "b"}); }
inline ltree::GroupDef example1() { return ltree::hnn_stable(std::vector<std::string>{"a", "b"}, "ab"); }
inline ltree::GroupDef example2() { return ltree::hnn_conjugate(std::vector<std::string>{"a", "b"}, "ab", "ba"); }

/// Compares spine() over the given reduced words (in the free group on
/// a, b, ...) with the oracle prefix tree compressed to root, words and
/// branch nodes. Returns an empty string on a match, a description otherwise.
inline std::string compare_with_prefix_tree(const ltree::GroupDef& group, const std::vector<oracle::Letters>& words) {
  std::vector<ltree::GroupElem> elems;
  for (const auto& w : words) elems.push_back(ltree::evaluate(group, to_expr(w, group.alphabet().names())));
  const ltree::Spine s = ltree::spine(group, elems);
  const oracle::PrefixTree trie = oracle::prefix_tree(words);
  const oracle::CompressedTree expected = oracle::compress(trie, words);

  std::vector<oracle::Letters> labels;
  for (const auto& node : s.nodes) labels.push_back(to_letters(ltree::geodesic_label(node).letters()));
  const std::set<oracle::Letters> got(labels.begin(), labels.end());
  if (got.size() != labels.size()) return "spine has two nodes with one label";
  if (got != std::set<oracle::Letters>(expected.nodes.begin(), expected.nodes.end()))
    return "node sets differ: " + std::to_string(got.size()) + " vs " + std::to_string(expected.nodes.size());
  if (s.edges.size() + 1 != s.nodes.size()) return "edge count";
  for (const auto& e : s.edges) {
    const auto it = expected.parent.find(labels[e.child]);
    if (it == expected.parent.end()) return "edge into the root";
    if (it->second.first != labels[e.parent]) return "parent differs for " + to_expr(labels[e.child]);
    if (e.length != ltree::LambdaElem::from_parts(1, it->second.second)) return "edge length differs";
  }
  for (std::size_t i = 0; i < s.nodes.size(); ++i)
    for (std::size_t j = i; j < s.nodes.size(); ++j) {
      const int bfs = oracle::brute_distance(trie, trie.find(labels[i]), trie.find(labels[j]));
      const auto want = ltree::LambdaElem::from_parts(1, bfs);
      if (ltree::distance(s.nodes[i], s.nodes[j]) != want) return "distance differs";
      if (ltree::path_length(s, i, j) != want) return "path length differs";
    }
  return {};
}

}  // namespace testing
