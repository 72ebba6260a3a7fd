#pragma once

// Brute-force reference implementations on finite words over Z. Letters are
// nonzero ints: +k is generator k, -k its inverse. Nothing here depends on
// the library under test.

#include <map>
#include <vector>

namespace oracle {

using Letters = std::vector<int>;

Letters naive_reduce(const Letters& w);
Letters inverse(const Letters& w);
Letters concat(const Letters& a, const Letters& b);
/// Length of the longest common prefix.
std::size_t lcp(const Letters& a, const Letters& b);

/// All freely reduced words over k generators of length <= radius, in
/// shortlex order (letter order 1, -1, 2, -2, ...).
std::vector<Letters> reduced_words(int k, int radius);

/// Trie of all prefixes of the given reduced words; node 0 is the empty word.
struct PrefixTree {
  std::vector<Letters> nodes;
  std::map<Letters, int> index;
  std::vector<std::vector<int>> adjacent;

  int find(const Letters& w) const;  ///< -1 when absent
};

PrefixTree prefix_tree(const std::vector<Letters>& words);
int brute_distance(const PrefixTree& tree, int a, int b);

/// Keeps the root, the given words and the branch nodes, joining the rest of
/// the trie into weighted edges (child -> parent, length).
struct CompressedTree {
  std::vector<Letters> nodes;
  std::map<Letters, std::pair<Letters, int>> parent;  ///< node -> (parent, length)
};

CompressedTree compress(const PrefixTree& tree, const std::vector<Letters>& words);

}  // namespace oracle
