#pragma once

// The universal tree of a group of words: points are classes of pairs
// <alpha, g> with 0 <= alpha <= |g|, where <alpha, f> and <beta, g> coincide
// iff alpha = beta <= c(f, g). The base point is <0, 1>.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ltree/group.hpp"

namespace ltree {

struct TreePoint {
  LambdaElem alpha;
  GroupElem elem;
};

TreePoint base_point(const GroupDef& group);
/// Throws std::invalid_argument unless 0 <= alpha <= |g|.
TreePoint make_point(LambdaElem alpha, GroupElem g);
/// <|g|, g>, the image of the base point under g.
TreePoint orbit_point(GroupElem g);

bool point_eq(const TreePoint& p, const TreePoint& q);
LambdaElem distance(const TreePoint& p, const TreePoint& q);
/// Length of the common part of the geodesics from the base point to p and q.
LambdaElem overlap(const TreePoint& p, const TreePoint& q);

TreePoint act(const GroupElem& f, const TreePoint& p);
/// d(base, g . base); throws std::logic_error if it differs from |g|.
LambdaElem based_length(const GroupDef& group, const GroupElem& g);

TreePoint median(const TreePoint& p, const TreePoint& q, const TreePoint& r);
/// Throws std::invalid_argument for the identity.
bool on_axis(const GroupElem& g, const TreePoint& p);
/// |g * g| - |g|, asserted equal to the length of the cyclically reduced core.
LambdaElem translation_length(const GroupElem& g);

/// Letter read on arriving at p from the base point; nullopt at the base point.
std::optional<Letter> point_label(const TreePoint& p);
/// The word read along the geodesic from the base point to p.
Word geodesic_label(const TreePoint& p);

/// "<alpha>@<expr>", with "e" for the base point.
std::string format_point(const TreePoint& p);
/// Parses "<alpha>@<expr>" or "e". Throws ParseError, or std::invalid_argument
/// when alpha lies outside [0, |g|].
TreePoint parse_point(const GroupDef& group, std::string_view text);

struct SpineEdge {
  std::size_t parent;
  std::size_t child;
  LambdaElem length;
  Letter label;  ///< letter read on arriving at the child
};

/// Finite subtree spanned by the base point and the orbit points of a list of
/// elements. Node 0 is the base point; nodes are ordered by (alpha, index of
/// the first element whose geodesic passes through them).
struct Spine {
  std::vector<TreePoint> nodes;
  std::vector<SpineEdge> edges;
  std::uint64_t group_hash = 0;
  std::size_t rank = 1;
};

Spine spine(const GroupDef& group, const std::vector<GroupElem>& elems);
/// Sum of edge lengths along the tree path between two nodes.
LambdaElem path_length(const Spine& s, std::size_t a, std::size_t b);

std::string to_dot(const Spine& s, const GroupDef& group);
/// Versioned text format:
///   lambda-spine 1
///   group <hash> rank <n>
///   nodes <count>
///   node <id> alpha <alpha> elem "<expr>"
///   edges <count>
///   edge <parent> <child> length <lambda> label <letter>
std::string to_text(const Spine& s, const GroupDef& group);

/// Homomorphism of a subgroup into a larger group, given by images of the
/// generators. Construction checks that each image has the same length as
/// its generator (lifted to the larger rank).
class Embedding {
 public:
  Embedding(const GroupDef& sub, const GroupDef& sup, std::vector<std::string> images);

  GroupElem image(const GroupElem& f) const;
  const GroupDef& sub() const { return *sub_; }
  const GroupDef& sup() const { return *sup_; }

 private:
  const GroupDef* sub_;
  const GroupDef* sup_;
  std::vector<std::vector<GenToken>> images_;
};

/// <alpha, f> -> <alpha, image(f)>.
TreePoint canonical_embedding(const TreePoint& p, const Embedding& embedding);

}  // namespace ltree
