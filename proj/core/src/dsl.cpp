#include "ltree/dsl.hpp"

#include <algorithm>
#include <cctype>

#include "ltree/error.hpp"
#include "syntax.hpp"

namespace ltree {

namespace {

Word repeat(const Word& w, std::int64_t exponent) {
  Word base = exponent < 0 ? inverse(w) : w;
  Word out(w.rank());
  for (std::int64_t k = exponent < 0 ? -exponent : exponent; k > 0; k >>= 1) {
    if (k & 1) out = concat(out, base);
    if (k > 1) base = concat(base, base);
  }
  return out;
}

Word interpret(const syntax::Sequence& seq, Alphabet& alphabet, std::size_t rank, bool extend) {
  Word out(rank);
  for (const auto& term : seq) {
    Word piece(rank);
    switch (term.kind) {
      case syntax::Term::Kind::name: {
        auto symbol = alphabet.find(term.name);
        if (!symbol) {
          if (!extend) throw ParseError("unknown letter '" + term.name + "'");
          symbol = alphabet.add(term.name);
        }
        piece = Word::finite(rank, {Letter{*symbol, false}});
        break;
      }
      case syntax::Term::Kind::group:
        piece = interpret(*term.group, alphabet, rank, extend);
        break;
      case syntax::Term::Kind::tail: {
        FiniteWord front = parse_finite(term.tail.front, alphabet, extend);
        FiniteWord back = parse_finite(term.tail.back, alphabet, extend);
        BigInt offset;
        try {
          offset = BigInt(term.tail.offset);
        } catch (const std::exception&) {
          throw ParseError("malformed tail offset '" + term.tail.offset + "'");
        }
        try {
          piece = Word::tail(rank, std::move(front), std::move(back), offset);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what());
        }
        break;
      }
    }
    out = concat(out, repeat(piece, term.exponent));
  }
  return out;
}

}  // namespace

Alphabet::Alphabet(const std::vector<std::string>& names) {
  for (const auto& n : names) {
    if (find(n)) throw ParseError("duplicate letter '" + n + "'");
    add(n);
  }
}

bool Alphabet::valid_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::optional<std::uint32_t> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

std::uint32_t Alphabet::add(const std::string& name) {
  if (auto existing = find(name)) return *existing;
  if (!valid_name(name)) throw ParseError("invalid letter name '" + name + "'");
  names_.push_back(name);
  return static_cast<std::uint32_t>(names_.size() - 1);
}

std::string format_letter(Letter x, const Alphabet& alphabet) {
  std::string out = alphabet.name(x.symbol);
  if (x.inverted) out += "^-1";
  return out;
}

std::string format_finite(const FiniteWord& w, const Alphabet& alphabet) {
  std::string out;
  for (Letter x : w) out += format_letter(x, alphabet);
  return out;
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "\xCE\xB5";
  std::string out;
  for (const auto& block : w.blocks()) {
    if (!out.empty()) out += ' ';
    if (const auto* f = std::get_if<FiniteWord>(&block)) {
      out += format_finite(*f, alphabet);
    } else {
      const auto& t = std::get<TailBlock>(block);
      out += "tail(front=\"" + format_finite(t.front, alphabet) + "\", back=\"" +
             format_finite(t.back, alphabet) + "\"";
      if (t.offset != 0) out += ", offset=" + t.offset.str();
      out += ")";
    }
  }
  return out;
}

std::string block_shape(const Word& w) {
  std::string out;
  for (const auto& block : w.blocks()) {
    if (!out.empty()) out += ' ';
    if (const auto* f = std::get_if<FiniteWord>(&block))
      out += "F" + std::to_string(f->size());
    else
      out += "T";
  }
  return out.empty() ? "empty" : out;
}

Word parse_word(std::string_view text, Alphabet& alphabet, std::size_t rank, bool extend) {
  return interpret(syntax::parse(text), alphabet, rank, extend);
}

Word parse_word(std::string_view text, const Alphabet& alphabet, std::size_t rank) {
  Alphabet copy = alphabet;
  return parse_word(text, copy, rank, false);
}

FiniteWord parse_finite(std::string_view text, Alphabet& alphabet, bool extend) {
  Word w = interpret(syntax::parse(text), alphabet, 1, extend);
  return w.letters();
}

}  // namespace ltree
