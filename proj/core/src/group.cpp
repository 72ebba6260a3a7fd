#include "ltree/group.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ltree/error.hpp"
#include "syntax.hpp"

namespace ltree {

namespace {

constexpr std::size_t kMaxExpressionTokens = 1'000'000;

std::atomic<std::uint64_t> g_c_value_checks{0};

void append_tokens(const GroupDef& group, const syntax::Sequence& seq, std::vector<GenToken>& out) {
  for (const auto& term : seq) {
    std::vector<GenToken> piece;
    switch (term.kind) {
      case syntax::Term::Kind::name: {
        auto index = group.find(term.name);
        if (!index) throw ParseError("unknown generator '" + term.name + "'");
        piece.push_back({*index, false});
        break;
      }
      case syntax::Term::Kind::group:
        append_tokens(group, *term.group, piece);
        break;
      case syntax::Term::Kind::tail:
        throw ParseError("tail blocks are not allowed in generator expressions");
    }
    if (term.exponent < 0) {
      std::reverse(piece.begin(), piece.end());
      for (auto& t : piece) t.inverted = !t.inverted;
    }
    const std::int64_t times = term.exponent < 0 ? -term.exponent : term.exponent;
    if (piece.size() * static_cast<std::size_t>(times) + out.size() > kMaxExpressionTokens)
      throw ParseError("expression too long");
    for (std::int64_t i = 0; i < times; ++i) out.insert(out.end(), piece.begin(), piece.end());
  }
}

std::string trimmed(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<GenToken> inverse_tokens(std::vector<GenToken> tokens) {
  std::reverse(tokens.begin(), tokens.end());
  for (auto& t : tokens) t.inverted = !t.inverted;
  return tokens;
}

std::vector<GenToken> joined(const std::vector<GenToken>& a, const std::vector<GenToken>& b) {
  std::vector<GenToken> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

GroupDef::GroupDef(std::size_t rank, Alphabet alphabet, std::vector<Generator> generators)
    : rank_(rank), alphabet_(std::move(alphabet)), generators_(std::move(generators)) {
  if (rank_ == 0) throw std::invalid_argument("ordered group rank must be at least 1");
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (!Alphabet::valid_name(g.name)) throw std::invalid_argument("invalid generator name '" + g.name + "'");
    if (!seen.insert(g.name).second) throw std::invalid_argument("duplicate generator '" + g.name + "'");
    if (g.word.rank() != rank_) throw std::invalid_argument("incompatible ordered groups");
    for (const auto& level : g.word.levels())
      for (const auto* part : {&level.incoming, &level.core, &level.outgoing})
        for (Letter x : *part)
          if (x.symbol >= alphabet_.size())
            throw std::invalid_argument("generator '" + g.name + "' uses a letter outside the alphabet");
    oracles_.push_back(std::make_shared<WordOracle>(g.word));
  }
}

std::optional<std::size_t> GroupDef::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  return std::nullopt;
}

std::vector<std::string> GroupDef::problems() const {
  std::vector<std::string> out;
  for (const auto& g : generators_) {
    if (!g.word.is_reduced())
      out.push_back("generator '" + g.name + "' is not reduced");
    else if (!cyclic_decomposition(g.word))
      out.push_back("generator '" + g.name + "' admits no cyclic decomposition");
  }
  return out;
}

void GroupDef::require_valid() const {
  if (auto p = problems(); !p.empty()) throw std::invalid_argument(p.front());
}

std::string GroupDef::canonical_text() const {
  std::string out = "rank " + std::to_string(rank_) + "\nalphabet";
  for (const auto& n : alphabet_.names()) out += " " + n;
  out += "\n";
  for (const auto& g : generators_) out += "gen " + g.name + " = " + format_word(g.word, alphabet_) + "\n";
  return out;
}

std::uint64_t GroupDef::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_text()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<GenToken> parse_expression(const GroupDef& group, std::string_view expr) {
  std::vector<GenToken> out;
  append_tokens(group, syntax::parse(expr), out);
  return out;
}

std::string format_expression(const GroupDef& group, const std::vector<GenToken>& tokens) {
  if (tokens.empty()) return "1";
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += group.generators()[t.generator].name;
    if (t.inverted) out += "^-1";
  }
  return out;
}

GroupElem identity(const GroupDef& group) { return {Word(group.rank()), "1"}; }

GroupElem generator_elem(const GroupDef& group, GenToken token) {
  const Generator& g = group.generators().at(token.generator);
  return {token.inverted ? inverse(g.word) : g.word, format_expression(group, {token})};
}

GroupElem evaluate(const GroupDef& group, const std::vector<GenToken>& tokens) {
  Word w(group.rank());
  for (const auto& t : tokens) {
    const Word& g = group.generators().at(t.generator).word;
    w = product(w, t.inverted ? inverse(g) : g);
  }
  return {std::move(w), format_expression(group, tokens)};
}

GroupElem evaluate(const GroupDef& group, std::string_view expr) {
  GroupElem out = evaluate(group, parse_expression(group, expr));
  if (std::string text = trimmed(expr); !text.empty()) out.expression = std::move(text);
  return out;
}

LazyWord evaluate_lazy(const GroupDef& group, const std::vector<GenToken>& tokens) {
  LazyWord w(group.rank());
  for (const auto& t : tokens) w = product(w, LazyWord::generator(group.oracles().at(t.generator), t.inverted));
  return w;
}

GroupElem multiply(const GroupElem& f, const GroupElem& g) {
  std::string expr;
  if (f.expression == "1")
    expr = g.expression;
  else if (g.expression == "1")
    expr = f.expression;
  else
    expr = f.expression + " " + g.expression;
  return {product(f.word, g.word), std::move(expr)};
}

GroupElem inverse(const GroupElem& g) {
  std::string expr = g.expression == "1" ? "1" : "(" + g.expression + ")^-1";
  return {inverse(g.word), std::move(expr)};
}

bool is_identity(const GroupElem& g) { return g.word.length().is_zero(); }

LambdaElem c_value(const GroupElem& f, const GroupElem& g) {
  const LambdaElem common = com_length(f.word, g.word);
  const LambdaElem quotient = product(inverse(f.word), g.word).length();
  LambdaElem via_lengths = f.length() + g.length() - quotient;
  try {
    via_lengths = via_lengths.half();
  } catch (const std::domain_error&) {
    throw std::logic_error("c-value cross-check failed: |f|+|g|-|f^-1 g| is odd");
  }
  if (via_lengths != common)
    throw std::logic_error("c-value cross-check failed: " + common.to_string() + " vs " +
                           via_lengths.to_string());
  if (common.is_positive() && f.word.at(common) != g.word.at(common))
    throw std::logic_error("c-value cross-check failed: letters differ inside the common prefix");
  const LambdaElem next = common + LambdaElem::one(common.rank());
  if (next <= f.length() && next <= g.length() && f.word.at(next) == g.word.at(next))
    throw std::logic_error("c-value cross-check failed: common prefix is not maximal");
  g_c_value_checks.fetch_add(1, std::memory_order_relaxed);
  return common;
}

std::uint64_t c_value_checks() { return g_c_value_checks.load(std::memory_order_relaxed); }

std::optional<GroupElem> minimality_witness(const GroupDef& group, int bound) {
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  const std::size_t n = group.generators().size();
  std::vector<GenToken> tokens;
  std::optional<GroupElem> found;
  // Depth-first over freely reduced strings, shortest lengths first.
  auto search = [&](auto&& self, std::size_t depth, const GroupElem& prefix) -> bool {
    if (tokens.size() == depth) {
      if (!is_identity(prefix) && squares_without_cancellation(prefix.word)) {
        found = prefix;
        return true;
      }
      return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (bool inv : {false, true}) {
        GenToken t{i, inv};
        if (!tokens.empty() && tokens.back() == GenToken{i, !inv}) continue;
        tokens.push_back(t);
        GroupElem next = evaluate(group, tokens);
        if (self(self, depth, next)) return true;
        tokens.pop_back();
      }
    }
    return false;
  };
  for (int length = 1; length <= bound; ++length) {
    tokens.clear();
    if (search(search, static_cast<std::size_t>(length), identity(group))) return found;
  }
  return std::nullopt;
}

ElementSampler::ElementSampler(const GroupDef& group, std::uint64_t seed, std::size_t max_length)
    : group_(&group), state_(seed), max_length_(max_length) {}

std::uint64_t ElementSampler::next(std::uint64_t bound) {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return bound == 0 ? z : z % bound;
}

std::vector<GenToken> ElementSampler::tokens(std::size_t min_length) {
  const std::size_t n = group_->generators().size();
  std::vector<GenToken> out;
  if (n == 0) return out;
  const std::size_t lo = std::min(min_length, max_length_);
  const std::size_t length = lo + next(max_length_ - lo + 1);
  while (out.size() < length) {
    GenToken t{static_cast<std::size_t>(next(n)), next(2) == 1};
    if (!out.empty() && out.back() == GenToken{t.generator, !t.inverted}) continue;
    out.push_back(t);
  }
  return out;
}

GroupElem ElementSampler::element(std::size_t min_length) {
  return evaluate(*group_, tokens(min_length));
}

GroupElem ElementSampler::nontrivial() {
  if (group_->generators().empty()) throw std::invalid_argument("group has no generators");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    GroupElem g = element(1);
    if (!is_identity(g)) return g;
  }
  throw std::runtime_error("no non-trivial element found");
}

bool CheckReport::passed() const {
  return std::all_of(findings.begin(), findings.end(), [](const Finding& f) { return f.passed; });
}

std::string CheckReport::to_text() const {
  std::ostringstream out;
  for (const auto& f : findings) {
    out << (f.passed ? "PASS" : "FAIL") << " axiom=" << f.axiom << " sample=" << f.sample;
    if (!f.passed && !f.detail.empty()) out << " " << f.detail;
    out << "\n";
  }
  return out.str();
}

void CheckReport::merge(const CheckReport& other) {
  findings.insert(findings.end(), other.findings.begin(), other.findings.end());
}

CheckReport check_generators(const GroupDef& group) {
  CheckReport report;
  const auto problems = group.problems();
  if (problems.empty())
    report.findings.push_back({"CDR", true, group.generators().size(), ""});
  else
    report.findings.push_back({"CDR", false, 0, problems.front()});
  return report;
}

CheckReport check_length_axioms(const GroupDef& group, std::size_t samples, std::uint64_t seed) {
  CheckReport report;
  const char* ids[] = {"CDR", "L1", "L2", "L3", "L4", "SUB", "CMIN", "C"};
  for (const char* id : ids) report.findings.push_back({id, true, samples, ""});
  auto fail = [&](const char* id, std::size_t k, const std::string& detail) {
    for (auto& f : report.findings)
      if (f.axiom == id && f.passed) {
        f.passed = false;
        f.sample = k;
        f.detail = detail;
      }
  };

  report.findings[0] = check_generators(group).findings.front();
  if (!identity(group).length().is_zero()) fail("L1", 0, "|1| != 0");

  ElementSampler sampler(group, seed);
  const LambdaElem zero = LambdaElem::zero(group.rank());
  for (std::size_t k = 0; k < samples; ++k) {
    const auto tx = sampler.tokens(), ty = sampler.tokens(), tz = sampler.tokens();
    std::string where;
    try {
      const GroupElem x = evaluate(group, tx), y = evaluate(group, ty), z = evaluate(group, tz);
      where = "x=\"" + x.expression + "\" y=\"" + y.expression + "\" z=\"" + z.expression + "\"";
      if (x.length() < zero) fail("L1", k, where);
      if (evaluate(group, inverse_tokens(tx)).length() != x.length()) fail("L2", k, where);

      const LambdaElem cxy = c_value(x, y), cxz = c_value(x, z), cyz = c_value(y, z);
      if (cxy > cxz && cxz != cyz) fail("L3", k, where);

      // |x^{-1} y| and |xy| evaluated token by token, independently of c_value.
      const LambdaElem quotient = evaluate(group, joined(inverse_tokens(tx), ty)).length();
      const LambdaElem twice = x.length() + y.length() - quotient;
      bool even = true;
      for (const auto& coord : twice.coords()) even = even && (coord & 1) == 0;
      if (!even) fail("L4", k, where);
      else if (twice.half() != cxy) fail("C", k, where + " half-sum disagrees with com");

      if (evaluate(group, joined(tx, ty)).length() > x.length() + y.length()) fail("SUB", k, where);
      if (cxy < zero || cxy > min_of(x.length(), y.length())) fail("CMIN", k, where);
    } catch (const std::exception& e) {
      fail("C", k, where + " error=\"" + e.what() + "\"");
    }
  }
  return report;
}

}  // namespace ltree
