#include "ltree/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "ltree/error.hpp"

namespace ltree {

namespace {

// Longest stretch of letters slice() will write out explicitly.
constexpr std::size_t kMaxMaterialized = std::size_t{1} << 26;

std::size_t to_size(const BigInt& x) { return x.convert_to<std::size_t>(); }

std::size_t mod(const BigInt& k, std::size_t n) {
  BigInt r = k % n;
  if (r < 0) r += n;
  return to_size(r);
}

FiniteWord rotate_left(const FiniteWord& w, std::size_t k) {
  if (w.empty()) return w;
  FiniteWord out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(i + k) % w.size()];
  return out;
}

FiniteWord rotate_left(const FiniteWord& w, const BigInt& k) {
  return w.empty() ? w : rotate_left(w, mod(k, w.size()));
}

std::size_t level_of(const LambdaElem& x) {
  return x.rank() >= 2 ? to_size(x[1]) : 0;
}

FiniteWord read_range(const Word::Level& level, const BigInt& from, const BigInt& to) {
  if (to < from) return {};
  BigInt count = to - from + 1;
  if (count > kMaxMaterialized) throw std::length_error("word segment too long to materialize");
  FiniteWord out;
  out.reserve(to_size(count));
  BigInt core_begin = level.anchor + 1;
  if (from >= core_begin && to <= level.core_end()) {
    auto first = level.core.begin() + static_cast<std::ptrdiff_t>(to_size(from - core_begin));
    out.assign(first, first + static_cast<std::ptrdiff_t>(to_size(count)));
    return out;
  }
  for (BigInt a = from; a <= to; ++a) out.push_back(level.at(a));
  return out;
}

// Maximal run of the level, starting at `cursor`, that lies in one piece.
struct Piece {
  bool stream;
  std::optional<BigInt> last;  // nullopt: runs to +infinity
  std::size_t period;
};

Piece piece_at(const Word::Level& level, const BigInt& cursor) {
  if (!level.incoming.empty() && cursor <= level.anchor)
    return {true, level.anchor, level.incoming.size()};
  if (cursor <= level.core_end()) return {false, level.core_end(), 0};
  return {true, std::nullopt, level.outgoing.size()};
}

std::optional<BigInt> min_opt(const std::optional<BigInt>& a, const std::optional<BigInt>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

FiniteWord inverse(const FiniteWord& w) {
  FiniteWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

bool is_reduced(const FiniteWord& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1].inverse()) return false;
  return true;
}

bool is_cyclically_reduced(const FiniteWord& w) {
  return !w.empty() && is_reduced(w) && w.front().inverse() != w.back();
}

FiniteWord primitive_root(const FiniteWord& w) {
  const std::size_t n = w.size();
  if (n == 0) return w;
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && w[i] != w[k]) k = border[k - 1];
    if (w[i] == w[k]) ++k;
    border[i] = k;
  }
  const std::size_t period = n - border[n - 1];
  if (n % period != 0) return w;
  return FiniteWord(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(period));
}

bool is_proper_power(const FiniteWord& w) { return primitive_root(w).size() < w.size(); }

Letter Word::Level::at(const BigInt& index) const {
  if (!incoming.empty() && index <= anchor) {
    const std::size_t n = incoming.size();
    return incoming[n - 1 - mod(anchor - index, n)];
  }
  BigInt offset = index - anchor - 1;
  if (offset < 0) throw std::out_of_range("position outside [1,|w|]");
  if (offset < core.size()) return core[to_size(offset)];
  if (outgoing.empty()) throw std::out_of_range("position outside [1,|w|]");
  return outgoing[mod(offset - core.size(), outgoing.size())];
}

Word::Word(std::size_t rank) : rank_(rank), levels_(1) {
  if (rank == 0) throw std::invalid_argument("ordered group rank must be at least 1");
}

Word Word::finite(std::size_t rank, FiniteWord letters) {
  Word w(rank);
  w.levels_[0].core = std::move(letters);
  w.reduced_ = w.compute_reduced();
  return w;
}

Word Word::tail(std::size_t rank, FiniteWord front, FiniteWord back, BigInt offset) {
  if (rank < 2) throw std::invalid_argument("tail blocks need an ordered group of rank >= 2");
  if (!is_cyclically_reduced(front) || !is_cyclically_reduced(back))
    throw std::invalid_argument("tail period must be non-empty and cyclically reduced");
  Word w(rank);
  w.levels_[0].outgoing = std::move(front);
  Level top;
  top.incoming = std::move(back);
  top.anchor = std::move(offset);
  w.levels_.push_back(std::move(top));
  w.normalize();
  return w;
}

Word Word::from_blocks(std::size_t rank, const std::vector<Block>& blocks) {
  Word w(rank);
  for (const auto& block : blocks) {
    if (const auto* f = std::get_if<FiniteWord>(&block))
      w = concat(w, Word::finite(rank, *f));
    else {
      const auto& t = std::get<TailBlock>(block);
      w = concat(w, Word::tail(rank, t.front, t.back, t.offset));
    }
  }
  return w;
}

LambdaElem Word::length() const {
  return LambdaElem::from_parts(rank_, levels_.back().core_end(), BigInt(height()));
}

const FiniteWord& Word::letters() const {
  if (!is_finite()) throw std::logic_error("word has infinite length");
  return levels_[0].core;
}

Letter Word::at(const LambdaElem& beta) const {
  if (beta < LambdaElem::one(rank_) || beta > length())
    throw std::out_of_range("position outside [1,|w|]");
  return levels_[level_of(beta)].at(beta[0]);
}

Letter Word::first_letter() const { return at(LambdaElem::one(rank_)); }

Letter Word::last_letter() const { return at(length()); }

std::vector<Block> Word::blocks() const {
  std::vector<Block> out;
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    if (j > 0)
      out.emplace_back(TailBlock{levels_[j - 1].outgoing, levels_[j].incoming,
                                 levels_[j].anchor - levels_[j - 1].core_end()});
    if (!levels_[j].core.empty()) out.emplace_back(levels_[j].core);
  }
  return out;
}

void Word::normalize() {
  for (auto& level : levels_) {
    level.incoming = primitive_root(level.incoming);
    level.outgoing = primitive_root(level.outgoing);
    if (const std::size_t n = level.incoming.size(); n > 0) {
      std::size_t k = 0;
      while (k < level.core.size() && level.core[k] == level.incoming[k % n]) ++k;
      if (k > 0) {
        level.incoming = rotate_left(level.incoming, k % n);
        level.anchor += k;
        level.core.erase(level.core.begin(), level.core.begin() + static_cast<std::ptrdiff_t>(k));
      }
    }
    if (const std::size_t m = level.outgoing.size(); m > 0) {
      std::size_t k = 0;
      const std::size_t c = level.core.size();
      while (k < c && level.core[c - 1 - k] == level.outgoing[(m - 1 - k % m) % m]) ++k;
      if (k > 0) {
        level.outgoing = rotate_left(level.outgoing, m - k % m);
        level.core.resize(c - k);
      }
    }
    // A level that is one bi-infinite periodic stream is anchored at 0.
    if (level.core.empty() && !level.incoming.empty() && level.incoming == level.outgoing &&
        level.anchor != 0) {
      level.incoming = rotate_left(level.incoming, BigInt(-level.anchor));
      level.outgoing = level.incoming;
      level.anchor = 0;
    }
  }
  reduced_ = compute_reduced();
}

bool Word::compute_reduced() const {
  for (const auto& level : levels_) {
    if (!level.incoming.empty() && !is_cyclically_reduced(level.incoming)) return false;
    if (!level.outgoing.empty() && !is_cyclically_reduced(level.outgoing)) return false;
    FiniteWord seam;
    if (!level.incoming.empty()) seam.push_back(level.incoming.back());
    seam.insert(seam.end(), level.core.begin(), level.core.end());
    if (!level.outgoing.empty()) seam.push_back(level.outgoing.front());
    if (!ltree::is_reduced(seam)) return false;
  }
  return true;
}

Word inverse(const Word& w) {
  const BigInt total = w.levels_.back().core_end();
  Word out(w.rank_);
  out.levels_.clear();
  for (auto it = w.levels_.rbegin(); it != w.levels_.rend(); ++it) {
    Word::Level level;
    level.anchor = total - it->core_end();
    level.core = inverse(it->core);
    level.incoming = inverse(it->outgoing);
    level.outgoing = inverse(it->incoming);
    out.levels_.push_back(std::move(level));
  }
  out.normalize();
  return out;
}

Word concat(const Word& u, const Word& v) {
  if (u.rank_ != v.rank_) throw std::invalid_argument("incompatible ordered groups");
  Word out = u;
  const BigInt shift = u.levels_.back().core_end();
  auto& seam = out.levels_.back();
  seam.core.insert(seam.core.end(), v.levels_[0].core.begin(), v.levels_[0].core.end());
  seam.outgoing = v.levels_[0].outgoing;
  for (std::size_t j = 1; j < v.levels_.size(); ++j) {
    Word::Level level = v.levels_[j];
    level.anchor += shift;
    out.levels_.push_back(std::move(level));
  }
  out.normalize();
  return out;
}

Word slice(const Word& w, const LambdaElem& from, const LambdaElem& to) {
  const LambdaElem zero = LambdaElem::zero(w.rank_);
  if (from < zero || to < from || w.length() < to)
    throw std::out_of_range("slice bounds outside [0,|w|]");
  if (from == to) return Word(w.rank_);
  const std::size_t first = level_of(from), last = level_of(to);
  const BigInt& f0 = from[0];
  const BigInt& t0 = to[0];
  if (first == last) return Word::finite(w.rank_, read_range(w.levels_[first], f0 + 1, t0));

  Word out(w.rank_);
  out.levels_.clear();
  {
    const auto& src = w.levels_[first];
    Word::Level level;
    level.core = read_range(src, f0 + 1, src.core_end());
    const BigInt stream_start = std::max(BigInt(f0 + 1), BigInt(src.core_end() + 1));
    level.outgoing = rotate_left(src.outgoing, BigInt(stream_start - src.core_end() - 1));
    out.levels_.push_back(std::move(level));
  }
  for (std::size_t j = first + 1; j < last; ++j) {
    Word::Level level = w.levels_[j];
    level.anchor -= f0;
    out.levels_.push_back(std::move(level));
  }
  {
    const auto& src = w.levels_[last];
    Word::Level level;
    if (t0 <= src.anchor) {
      const std::size_t n = src.incoming.size();
      level.incoming.resize(n);
      for (std::size_t k = 0; k < n; ++k) level.incoming[n - 1 - k] = src.at(t0 - k);
      level.anchor = t0;
    } else {
      level.incoming = src.incoming;
      level.anchor = src.anchor;
      level.core = read_range(src, src.anchor + 1, t0);
    }
    level.anchor -= f0;
    out.levels_.push_back(std::move(level));
  }
  out.normalize();
  return out;
}

Word initial_subword(const Word& w, const LambdaElem& beta) {
  return slice(w, LambdaElem::zero(w.rank()), beta);
}

LambdaElem com_length(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("incompatible ordered groups");
  const std::size_t rank = u.rank();
  const std::size_t hu = u.height(), hv = v.height();
  for (std::size_t j = 0; j <= std::min(hu, hv); ++j) {
    const auto& U = u.levels()[j];
    const auto& V = v.levels()[j];
    const auto position = [&](const BigInt& a) { return LambdaElem::from_parts(rank, a, BigInt(j)); };
    std::optional<BigInt> stop;
    if (j == hu) stop = U.core_end();
    if (j == hv) stop = min_opt(stop, V.core_end());

    BigInt cursor = 1;
    if (j > 0) {
      // Both left streams must describe the same left-infinite sequence.
      const BigInt top = std::min(U.anchor, V.anchor);
      const std::size_t window = U.incoming.size() + V.incoming.size();
      for (std::size_t k = 0; k < window; ++k)
        if (U.at(top - k) != V.at(top - k)) throw ComUndefined();
      cursor = top + 1;
    }
    bool level_agrees = false;
    while (!level_agrees) {
      if (stop && cursor > *stop) return position(*stop);
      const Piece pu = piece_at(U, cursor);
      const Piece pv = piece_at(V, cursor);
      const std::optional<BigInt> seg_last = min_opt(min_opt(pu.last, pv.last), stop);
      if (pu.stream && pv.stream) {
        // Two periodic runs that agree on |p| + |q| positions agree throughout.
        const std::size_t window = pu.period + pv.period;
        for (std::size_t k = 0; k < window; ++k) {
          const BigInt a = cursor + k;
          if (seg_last && a > *seg_last) break;
          if (U.at(a) != V.at(a)) return position(a - 1);
        }
        if (!seg_last) {
          level_agrees = true;
        } else {
          cursor = *seg_last + 1;
        }
      } else {
        for (BigInt a = cursor; a <= *seg_last; ++a)
          if (U.at(a) != V.at(a)) return position(a - 1);
        cursor = *seg_last + 1;
      }
    }
  }
  throw std::logic_error("com_length: level scan ended without a result");
}

std::pair<Word, LambdaElem> com(const Word& u, const Word& v) {
  LambdaElem length = com_length(u, v);
  return {initial_subword(u, length), length};
}

Word product(const Word& u, const Word& v) {
  const LambdaElem cancelled = com_length(inverse(u), v);
  Word left = slice(u, LambdaElem::zero(u.rank()), u.length() - cancelled);
  Word right = slice(v, cancelled, v.length());
  return concat(left, right);
}

bool same_word(const Word& u, const Word& v) {
  if (u.rank() != v.rank() || u.length() != v.length()) return false;
  try {
    return com_length(u, v) == u.length();
  } catch (const ComUndefined&) {
    return false;
  }
}

std::optional<CyclicDecomposition> cyclic_decomposition(const Word& w) {
  if (!w.is_reduced()) return std::nullopt;
  if (w.empty()) return CyclicDecomposition{Word(w.rank()), Word(w.rank())};
  LambdaElem overlap;
  try {
    overlap = com_length(w, inverse(w));
  } catch (const ComUndefined&) {
    return std::nullopt;
  }
  const LambdaElem total = w.length();
  if (overlap + overlap >= total) return std::nullopt;
  Word conjugator_inverse = initial_subword(w, overlap);
  Word core = slice(w, overlap, total - overlap);
  return CyclicDecomposition{inverse(conjugator_inverse), std::move(core)};
}

bool is_cyclically_reduced(const Word& w) {
  if (w.empty()) throw std::invalid_argument("empty word");
  return w.first_letter().inverse() != w.last_letter();
}

bool squares_without_cancellation(const Word& w) {
  const LambdaElem len = w.length();
  return product(w, w).length() == len + len;
}

}  // namespace ltree
