#include "ltree/tree.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "ltree/error.hpp"

namespace ltree {

TreePoint base_point(const GroupDef& group) {
  return {LambdaElem::zero(group.rank()), identity(group)};
}

TreePoint make_point(LambdaElem alpha, GroupElem g) {
  if (alpha.rank() != g.word.rank()) throw std::invalid_argument("incompatible ordered groups");
  if (alpha.is_negative() || alpha > g.length())
    throw std::invalid_argument("point outside [0,|g|]: " + alpha.to_string());
  return {std::move(alpha), std::move(g)};
}

TreePoint orbit_point(GroupElem g) {
  LambdaElem alpha = g.length();
  return {std::move(alpha), std::move(g)};
}

LambdaElem overlap(const TreePoint& p, const TreePoint& q) {
  return min_of(min_of(p.alpha, q.alpha), c_value(p.elem, q.elem));
}

bool point_eq(const TreePoint& p, const TreePoint& q) {
  return p.alpha == q.alpha && p.alpha <= c_value(p.elem, q.elem);
}

LambdaElem distance(const TreePoint& p, const TreePoint& q) {
  const LambdaElem m = overlap(p, q);
  return p.alpha + q.alpha - m - m;
}

TreePoint act(const GroupElem& f, const TreePoint& p) {
  const LambdaElem c = c_value(inverse(f), p.elem);
  if (p.alpha <= c) return {f.length() - p.alpha, f};
  return {f.length() + p.alpha - c - c, multiply(f, p.elem)};
}

LambdaElem based_length(const GroupDef& group, const GroupElem& g) {
  LambdaElem d = distance(base_point(group), act(g, base_point(group)));
  if (d != g.length())
    throw std::logic_error("based length " + d.to_string() + " differs from |g| = " +
                           g.length().to_string());
  return d;
}

TreePoint median(const TreePoint& p, const TreePoint& q, const TreePoint& r) {
  // In a tree rooted at the base point the median is the deepest of the
  // three pairwise branch points.
  const LambdaElem pq = overlap(p, q), pr = overlap(p, r), qr = overlap(q, r);
  if (pq >= pr && pq >= qr) return {pq, p.elem};
  if (pr >= qr) return {pr, p.elem};
  return {qr, q.elem};
}

bool on_axis(const GroupElem& g, const TreePoint& p) {
  if (is_identity(g)) throw std::invalid_argument("axis undefined for identity");
  const TreePoint back = act(inverse(g), p), forth = act(g, p);
  return distance(back, forth) == distance(back, p) + distance(p, forth);
}

LambdaElem translation_length(const GroupElem& g) {
  if (is_identity(g)) throw std::invalid_argument("axis undefined for identity");
  const LambdaElem via_square = product(g.word, g.word).length() - g.length();
  const auto decomposition = cyclic_decomposition(g.word);
  if (!decomposition) throw std::logic_error("element admits no cyclic decomposition");
  if (decomposition->core.length() != via_square)
    throw std::logic_error("translation length " + via_square.to_string() +
                           " differs from the cyclic core length " +
                           decomposition->core.length().to_string());
  return via_square;
}

std::optional<Letter> point_label(const TreePoint& p) {
  if (p.alpha.is_zero()) return std::nullopt;
  return p.elem.word.at(p.alpha);
}

Word geodesic_label(const TreePoint& p) { return initial_subword(p.elem.word, p.alpha); }

std::string format_point(const TreePoint& p) {
  if (p.alpha.is_zero()) return "e";
  return p.alpha.to_string() + "@" + p.elem.expression;
}

TreePoint parse_point(const GroupDef& group, std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) throw ParseError("empty point");
  text = text.substr(first, last - first + 1);
  if (text == "e" || text == "\xCE\xB5") return base_point(group);
  const auto at = text.find('@');
  if (at == std::string_view::npos) throw ParseError("expected a point '<alpha>@<expr>' or 'e'");
  LambdaElem alpha;
  try {
    alpha = LambdaElem::parse(text.substr(0, at), group.rank());
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("malformed alpha: ") + e.what());
  }
  return make_point(std::move(alpha), evaluate(group, text.substr(at + 1)));
}

Spine spine(const GroupDef& group, const std::vector<GroupElem>& elems) {
  const std::size_t k = elems.size();
  // common[i][j] = c(e_i, e_j); common[i][i] = |e_i|.
  std::vector<std::vector<LambdaElem>> common(k, std::vector<LambdaElem>(k));
  for (std::size_t i = 0; i < k; ++i) {
    common[i][i] = elems[i].length();
    for (std::size_t j = i + 1; j < k; ++j) common[i][j] = common[j][i] = c_value(elems[i], elems[j]);
  }

  struct Candidate {
    LambdaElem alpha;
    std::size_t elem;  // smallest index whose geodesic contains the point
  };
  const LambdaElem zero = LambdaElem::zero(group.rank());
  std::vector<Candidate> candidates;
  auto add = [&](const LambdaElem& alpha, std::size_t i) {
    if (alpha.is_zero()) return;
    std::size_t first = i;
    for (std::size_t j = 0; j < i; ++j)
      if (alpha <= common[i][j]) {
        first = j;
        break;
      }
    for (const auto& c : candidates)
      if (c.elem == first && c.alpha == alpha) return;
    candidates.push_back({alpha, first});
  };
  for (std::size_t i = 0; i < k; ++i) {
    add(common[i][i], i);
    for (std::size_t j = i + 1; j < k; ++j) add(common[i][j], i);
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.elem < b.elem;
  });

  Spine out;
  out.group_hash = group.hash();
  out.rank = group.rank();
  out.nodes.push_back(base_point(group));
  std::vector<Candidate> placed{{zero, 0}};
  for (const auto& c : candidates) {
    // Representative with the shortest expression among the elements whose
    // geodesic passes through the node.
    std::size_t rep = c.elem;
    for (std::size_t j = 0; j < k; ++j)
      if (c.alpha <= common[c.elem][j] && elems[j].expression.size() < elems[rep].expression.size())
        rep = j;
    std::size_t parent = 0;
    for (std::size_t n = 1; n < placed.size(); ++n)
      if (placed[n].alpha < c.alpha && placed[n].alpha <= common[c.elem][placed[n].elem] &&
          placed[n].alpha > placed[parent].alpha)
        parent = n;
    const Letter label = elems[c.elem].word.at(c.alpha);
    out.edges.push_back({parent, out.nodes.size(), c.alpha - placed[parent].alpha, label});
    out.nodes.push_back({c.alpha, elems[rep]});
    placed.push_back(c);
  }
  return out;
}

LambdaElem path_length(const Spine& s, std::size_t a, std::size_t b) {
  std::vector<std::size_t> parent(s.nodes.size(), 0);
  std::vector<LambdaElem> up(s.nodes.size(), LambdaElem::zero(s.rank));
  std::vector<std::size_t> depth(s.nodes.size(), 0);
  for (const auto& e : s.edges) {
    parent[e.child] = e.parent;
    up[e.child] = e.length;
  }
  // Edges are emitted parent-first, so one pass fixes the depths.
  for (const auto& e : s.edges) depth[e.child] = depth[e.parent] + 1;
  LambdaElem total = LambdaElem::zero(s.rank);
  while (a != b) {
    if (depth[a] >= depth[b]) {
      total += up[a];
      a = parent[a];
    } else {
      total += up[b];
      b = parent[b];
    }
  }
  return total;
}

namespace {

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string node_caption(const TreePoint& p) {
  return "\xE2\x9F\xA8" + p.alpha.to_string() + ", " + p.elem.expression + "\xE2\x9F\xA9";
}

}  // namespace

std::string to_dot(const Spine& s, const GroupDef& group) {
  std::ostringstream out;
  out << "graph spine {\n";
  out << "  // group " << hex64(s.group_hash) << " rank " << s.rank << "\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < s.nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << node_caption(s.nodes[i]) << "\"];\n";
  for (const auto& e : s.edges)
    out << "  n" << e.parent << " -- n" << e.child << " [label=\"" << e.length.to_string() << " "
        << format_letter(e.label, group.alphabet()) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_text(const Spine& s, const GroupDef& group) {
  std::ostringstream out;
  out << "lambda-spine 1\n";
  out << "group " << hex64(s.group_hash) << " rank " << s.rank << "\n";
  out << "nodes " << s.nodes.size() << "\n";
  for (std::size_t i = 0; i < s.nodes.size(); ++i)
    out << "node " << i << " alpha " << s.nodes[i].alpha.to_string() << " elem \""
        << s.nodes[i].elem.expression << "\"\n";
  out << "edges " << s.edges.size() << "\n";
  for (const auto& e : s.edges)
    out << "edge " << e.parent << " " << e.child << " length " << e.length.to_string() << " label "
        << format_letter(e.label, group.alphabet()) << "\n";
  return out.str();
}

Embedding::Embedding(const GroupDef& sub, const GroupDef& sup, std::vector<std::string> images)
    : sub_(&sub), sup_(&sup) {
  if (images.size() != sub.generators().size())
    throw std::invalid_argument("expected " + std::to_string(sub.generators().size()) +
                                " generator images");
  if (sub.rank() > sup.rank()) throw std::invalid_argument("incompatible ordered groups");
  for (std::size_t i = 0; i < images.size(); ++i) {
    images_.push_back(parse_expression(sup, images[i]));
    const LambdaElem target = evaluate(sup, images_.back()).length();
    if (target != sub.generators()[i].word.length().lifted(sup.rank()))
      throw std::invalid_argument("length function not preserved");
  }
}

GroupElem Embedding::image(const GroupElem& f) const {
  std::vector<GenToken> tokens;
  for (const auto& t : parse_expression(*sub_, f.expression)) {
    const auto& img = images_[t.generator];
    if (!t.inverted) {
      tokens.insert(tokens.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) tokens.push_back({it->generator, !it->inverted});
    }
  }
  return evaluate(*sup_, tokens);
}

TreePoint canonical_embedding(const TreePoint& p, const Embedding& embedding) {
  return {p.alpha.lifted(embedding.sup().rank()), embedding.image(p.elem)};
}

}  // namespace ltree
