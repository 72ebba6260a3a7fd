#include "ltree/oracle_word.hpp"

#include <stdexcept>

#include "ltree/error.hpp"

namespace ltree {

Letter GeneratorOracle::signed_eval(bool inverted, const LambdaElem& pos) const {
  if (!inverted) return eval(pos);
  return eval(length() + LambdaElem::one(rank()) - pos).inverse();
}

LambdaElem GeneratorOracle::common_prefix(bool inverted, const LambdaElem& from,
                                          const GeneratorOracle& other, bool other_inverted,
                                          const LambdaElem& other_from,
                                          const LambdaElem& limit) const {
  const LambdaElem span =
      min_of(min_of(length() - from, other.length() - other_from), limit);
  if (span.height() != 0 || span.is_negative())
    throw std::logic_error("oracle pair cannot decide an infinite common prefix");
  const LambdaElem one = LambdaElem::one(rank());
  LambdaElem k = LambdaElem::zero(rank());
  while (k < span) {
    const LambdaElem next = k + one;
    if (signed_eval(inverted, from + next) != other.signed_eval(other_inverted, other_from + next))
      break;
    k = next;
  }
  return k;
}

WordOracle::WordOracle(Word word) : word_(std::move(word)), inverse_(ltree::inverse(word_)) {}

Word WordOracle::suffix(bool inverted, const LambdaElem& from, const LambdaElem& limit) const {
  const Word& w = inverted ? inverse_ : word_;
  return slice(w, from, min_of(w.length(), from + limit));
}

LambdaElem WordOracle::common_prefix(bool inverted, const LambdaElem& from,
                                     const GeneratorOracle& other, bool other_inverted,
                                     const LambdaElem& other_from, const LambdaElem& limit) const {
  const auto* peer = dynamic_cast<const WordOracle*>(&other);
  if (!peer)
    return GeneratorOracle::common_prefix(inverted, from, other, other_inverted, other_from, limit);
  return com_length(suffix(inverted, from, limit), peer->suffix(other_inverted, other_from, limit));
}

FunctionOracle::FunctionOracle(std::size_t rank, BigInt length,
                               std::function<Letter(const BigInt&)> letter)
    : rank_(rank), length_(std::move(length)), letter_(std::move(letter)) {}

Letter FunctionOracle::eval(const LambdaElem& pos) const {
  if (pos.height() != 0 || pos[0] < 1 || pos[0] > length_)
    throw std::out_of_range("position outside [1,|w|]");
  return letter_(pos[0]);
}

LazyWord::LazyWord(std::size_t rank) : rank_(rank) {}

LazyWord LazyWord::generator(std::shared_ptr<const GeneratorOracle> source, bool inverted) {
  LazyWord w(source->rank());
  LambdaElem size = source->length();
  if (!size.is_zero())
    w.pieces_.push_back({std::move(source), inverted, LambdaElem::zero(w.rank_), std::move(size)});
  return w;
}

LambdaElem LazyWord::length() const {
  LambdaElem total = LambdaElem::zero(rank_);
  for (const auto& p : pieces_) total += p.size;
  return total;
}

Letter LazyWord::eval(const LambdaElem& pos) const {
  if (pos < LambdaElem::one(rank_)) throw std::out_of_range("position outside [1,|w|]");
  LambdaElem offset = LambdaElem::zero(rank_);
  for (const auto& p : pieces_) {
    if (pos <= offset + p.size) return p.source->signed_eval(p.inverted, p.from + pos - offset);
    offset += p.size;
  }
  throw std::out_of_range("position outside [1,|w|]");
}

LazyWord LazyWord::inverse() const {
  LazyWord out(rank_);
  for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) {
    const LambdaElem total = it->source->length();
    out.pieces_.push_back({it->source, !it->inverted, total - it->from - it->size, it->size});
  }
  return out;
}

LazyWord LazyWord::slice(const LambdaElem& from, const LambdaElem& to) const {
  const LambdaElem zero = LambdaElem::zero(rank_);
  if (from < zero || to < from || length() < to)
    throw std::out_of_range("slice bounds outside [0,|w|]");
  LazyWord out(rank_);
  LambdaElem offset = zero;
  for (const auto& p : pieces_) {
    const LambdaElem start = offset, end = offset + p.size;
    offset = end;
    const LambdaElem lo = max_of(start, from), hi = min_of(end, to);
    if (hi <= lo) continue;
    out.pieces_.push_back({p.source, p.inverted, p.from + (lo - start), hi - lo});
  }
  return out;
}

LazyWord LazyWord::concat(const LazyWord& other) const {
  if (rank_ != other.rank_) throw std::invalid_argument("incompatible ordered groups");
  LazyWord out = *this;
  out.pieces_.insert(out.pieces_.end(), other.pieces_.begin(), other.pieces_.end());
  return out;
}

LambdaElem com_length(const LazyWord& u, const LazyWord& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("incompatible ordered groups");
  const auto& a = u.pieces();
  const auto& b = v.pieces();
  LambdaElem total = LambdaElem::zero(u.rank());
  LambdaElem used_a = total, used_b = total;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const LambdaElem rest = min_of(a[i].size - used_a, b[j].size - used_b);
    const LambdaElem common = a[i].source->common_prefix(
        a[i].inverted, a[i].from + used_a, *b[j].source, b[j].inverted, b[j].from + used_b, rest);
    if (common < rest) return total + common;
    total += rest;
    used_a += rest;
    used_b += rest;
    if (used_a == a[i].size) {
      ++i;
      used_a = LambdaElem::zero(u.rank());
    }
    if (used_b == b[j].size) {
      ++j;
      used_b = LambdaElem::zero(u.rank());
    }
  }
  return total;
}

LazyWord product(const LazyWord& u, const LazyWord& v) {
  const LambdaElem cancelled = com_length(u.inverse(), v);
  const LambdaElem zero = LambdaElem::zero(u.rank());
  return u.slice(zero, u.length() - cancelled).concat(v.slice(cancelled, v.length()));
}

}  // namespace ltree
