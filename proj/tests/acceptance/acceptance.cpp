// Acceptance suite: one PASS/FAIL line per criterion, with wall-clock limits.
// Exit status is non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ltree/checks.hpp"
#include "ltree/constructions.hpp"
#include "ltree/tree.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace ltree;
using testing::lam;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
  void require(const CheckReport& report, const std::string& what) {
    if (report.passed()) return;
    std::istringstream lines(report.to_text());
    for (std::string line; std::getline(lines, line);)
      if (line.rfind("FAIL", 0) == 0) return require(false, what + ": " + line);
  }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char timing[64];
  if (limit_seconds > 0) {
    outcome.require(seconds < limit_seconds, "time limit exceeded");
    std::snprintf(timing, sizeof timing, "%.2f s < %.0f s", seconds, limit_seconds);
  } else {
    std::snprintf(timing, sizeof timing, "%.2f s, no limit", seconds);
  }
  std::cout << (outcome.ok ? "PASS " : "FAIL ") << id << " " << title << " (" << timing << ")";
  if (!outcome.ok) std::cout << ": " << outcome.detail;
  std::cout << std::endl;
  if (!outcome.ok) ++failures;
}

// Positions of a word of length (k, 1) near its start and near its end.
std::vector<LambdaElem> tail_positions(testing::Rng& rng, const LambdaElem& length, int count) {
  std::vector<LambdaElem> out;
  for (int i = 0; i < count; ++i) {
    if (i % 2 == 0)
      out.push_back(lam(rng.between(1, 200), 0));
    else
      out.push_back(lam(length[0].convert_to<std::int64_t>() - rng.between(0, 200), 1));
  }
  return out;
}

bool eval_equal(const Word& x, const Word& y, const std::vector<LambdaElem>& positions) {
  if (x.length() != y.length()) return false;
  for (const auto& beta : positions)
    if (x.at(beta) != y.at(beta)) return false;
  return same_word(x, y);
}

}  // namespace

int main() {
  const GroupDef free2 = testing::free_ab();
  const GroupDef ex1 = testing::example1();
  const GroupDef ex2 = testing::example2();
  bool suites_clean = true;

  criterion("AC1", "metric axioms and well-definedness, 1000 samples in F(a,b) and Example 1", 10, [&](Outcome& o) {
    for (const GroupDef* g : {&free2, &ex1}) {
      const CheckReport r = check_metric(*g, 1000, 101);
      suites_clean = suites_clean && r.passed();
      o.require(r, g == &free2 ? "F(a,b)" : "Example 1");
    }
  });

  criterion("AC2", "isosceles overlap triples on 1000 random triples", 10, [&](Outcome& o) {
    for (const GroupDef* g : {&free2, &ex1}) {
      ElementSampler sampler(*g, 202);
      for (int k = 0; k < 1000; ++k) {
        const TreePoint p = random_point(sampler), q = random_point(sampler), r = random_point(sampler);
        o.require(is_isosceles(overlap(p, q), overlap(p, r), overlap(q, r)),
                  "sample " + std::to_string(k) + " " + format_point(p) + " " + format_point(q) + " " +
                      format_point(r));
      }
    }
  });

  criterion("AC3", "action: isometry, composition, freeness, based length, 1000 samples", 20, [&](Outcome& o) {
    for (const GroupDef* g : {&free2, &ex1}) {
      const CheckReport r = check_action(*g, 1000, 303);
      suites_clean = suites_clean && r.passed();
      o.require(r, g == &free2 ? "F(a,b)" : "Example 1");
    }
  });

  criterion("AC4", "spine vs prefix-tree oracle on 200 random word sets over {a,b}", 30, [&](Outcome& o) {
    testing::Rng rng(404);
    for (int k = 0; k < 200; ++k) {
      std::vector<oracle::Letters> words;
      for (std::uint64_t n = 1 + rng.below(8); n > 0; --n) words.push_back(testing::random_reduced(rng, 2, rng.below(7)));
      const std::string mismatch = testing::compare_with_prefix_tree(free2, words);
      o.require(mismatch.empty(), "set " + std::to_string(k) + ": " + mismatch);
      // Orbit points of the input words against breadth-first search.
      const auto trie = oracle::prefix_tree(words);
      for (const auto& x : words)
        for (const auto& y : words) {
          const int bfs = oracle::brute_distance(trie, trie.find(x), trie.find(y));
          const LambdaElem d = distance(orbit_point(evaluate(free2, testing::to_expr(x))),
                                        orbit_point(evaluate(free2, testing::to_expr(y))));
          o.require(d == lam(bfs), "distance " + testing::to_expr(x) + " / " + testing::to_expr(y));
        }
    }
  });

  criterion("AC5", "Example 1 and 2 identities, eval-checked at 100 positions", 5, [&](Outcome& o) {
    testing::Rng rng(505);
    const Word s1 = evaluate(ex1, "s").word, u = evaluate(ex1, "a b").word;
    o.require(s1.length() == lam(0, 1), "|phi(s)| != (0,1)");
    const Word left = product(s1, u), right = product(u, s1);
    o.require(eval_equal(left, right, tail_positions(rng, left.length(), 100)), "phi(s) u != u phi(s)");
    o.require(is_identity(evaluate(ex1, "s (a b) s^-1 (a b)^-1")), "s u s^-1 u^-1 != 1");

    const Word s2 = evaluate(ex2, "s").word, u2 = evaluate(ex2, "a b").word, v2 = evaluate(ex2, "b a").word;
    const Word cl = concat(u2, s2), cr = concat(s2, v2);
    o.require(cl.is_reduced() && cr.is_reduced(), "concatenations not reduced");
    o.require(eval_equal(cl, cr, tail_positions(rng, cl.length(), 100)), "u psi(s) != psi(s) v");
    // u o psi(s) = psi(s) o v makes s^-1 u s = v hold; the literal criterion
    // s u s^-1 = v would need s^2 to commute with u as well.
    const bool conjugate = is_identity(evaluate(ex2, "s^-1 (a b) s (b a)^-1"));
    std::cout << "  Example 2: s^-1 u s v^-1 = 1 is " << (conjugate ? "true" : "false") << "\n";
    const GroupElem literal = evaluate(ex2, "s (a b) s^-1 (b a)^-1");
    o.require(is_identity(literal), "s u s^-1 v^-1 has length " + literal.length().to_string() + ", not the identity");
  });

  criterion("AC6", "word problem: 500 w w^-1 per group, 500 non-trivial words in F", 20, [&](Outcome& o) {
    for (const GroupDef* g : {&free2, &ex1}) {
      ElementSampler sampler(*g, 606, 20);
      for (int k = 0; k < 500; ++k) {
        const std::string w = format_expression(*g, sampler.tokens());
        o.require(is_identity(evaluate(*g, "(" + w + ") (" + w + ")^-1")), "w w^-1 != 1 for w = " + w);
      }
    }
    testing::Rng rng(607);
    for (int k = 0; k < 500; ++k) {
      const oracle::Letters w = testing::random_reduced(rng, 2, 1 + rng.below(20));
      const GroupElem g = evaluate(free2, testing::to_expr(w));
      o.require(!is_identity(g) && testing::to_letters(g.word.letters()) == oracle::naive_reduce(w),
                "non-trivial word evaluated wrongly: " + testing::to_expr(w));
    }
  });

  criterion("AC7", "canonical embedding: 200 distance pairs, 200 equivariance samples", 10, [&](Outcome& o) {
    Alphabet ab({"a", "b"});
    const GroupDef cyclic(1, ab, {{"x", parse_word("a b", ab, 1)}});
    const Embedding into_free(cyclic, free2, {"a b"});
    const Embedding into_hnn(free2, ex1, {"a", "b"});
    for (const Embedding* mu : {&into_free, &into_hnn}) {
      ElementSampler sampler(mu->sub(), 707);
      const std::size_t rank = mu->sup().rank();
      for (int k = 0; k < 200; ++k) {
        const TreePoint p = random_point(sampler), q = random_point(sampler);
        o.require(distance(canonical_embedding(p, *mu), canonical_embedding(q, *mu)) == distance(p, q).lifted(rank),
                  "distance not preserved at " + format_point(p) + " " + format_point(q));
      }
      for (int k = 0; k < 200; ++k) {
        const GroupElem f = sampler.element();
        const TreePoint p = random_point(sampler);
        o.require(point_eq(canonical_embedding(act(f, p), *mu), act(mu->image(f), canonical_embedding(p, *mu))),
                  "not equivariant at f=" + f.expression + " p=" + format_point(p));
      }
      o.require(point_eq(canonical_embedding(base_point(mu->sub()), *mu), base_point(mu->sup())), "base point moved");
    }
  });

  criterion("AC8", "minimality witness: F at bound 1, <b^-1 a b> inconclusive at bound 3", 5, [&](Outcome& o) {
    const auto witness = minimality_witness(free2, 1);
    o.require(witness && witness->expression == "a", "free group: expected witness a");

    Alphabet ab({"a", "b"});
    const GroupDef conj(1, ab, {{"x", parse_word("b^-1 a b", ab, 1)}});
    o.require(!minimality_witness(conj, 3), "conjugate subgroup: unexpected witness");
    // Oracle: every freely reduced string x^k, |k| <= 3, substituted and reduced.
    bool oracle_found = false;
    for (const auto& string : oracle::reduced_words(1, 3)) {
      if (string.empty()) continue;
      oracle::Letters h;
      for (int x : string) h = oracle::concat(h, x > 0 ? oracle::Letters{-2, 1, 2} : oracle::Letters{-2, -1, 2});
      h = oracle::naive_reduce(h);
      const auto square = oracle::naive_reduce(oracle::concat(h, h));
      if (!h.empty() && square.size() == 2 * h.size()) oracle_found = true;
    }
    o.require(!oracle_found, "oracle disagrees: found a witness");
    bool oracle_free = false;
    for (const auto& string : oracle::reduced_words(2, 1))
      if (!string.empty() && oracle::naive_reduce(oracle::concat(string, string)).size() == 2) oracle_free = true;
    o.require(oracle_free, "oracle disagrees on the free group");
  });

  criterion("AC9", "length axioms, 1000 samples in Examples 1 and 2; c cross-check on every call", 0, [&](Outcome& o) {
    const std::uint64_t before = c_value_checks();
    for (const GroupDef* g : {&ex1, &ex2}) {
      const CheckReport r = check_length_axioms(*g, 1000, 909);
      suites_clean = suites_clean && r.passed();
      o.require(r, g == &ex1 ? "Example 1" : "Example 2");
    }
    o.require(c_value_checks() > before, "no cross-checks recorded");
    o.require(suites_clean, "a suite above reported a failure");
    std::cout << "  c-value cross-checks performed: " << c_value_checks() << "\n";
  });

  return failures == 0 ? 0 : 1;
}
