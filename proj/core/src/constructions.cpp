#include "ltree/constructions.hpp"

#include <stdexcept>

namespace ltree {

namespace {

void require_periodic_letter(const FiniteWord& w, const char* name) {
  if (w.empty()) throw std::invalid_argument(std::string(name) + " must be non-empty");
  if (!is_reduced(w) || !is_cyclically_reduced(w))
    throw std::invalid_argument(std::string(name) + " is not cyclically reduced");
  if (is_proper_power(w)) throw std::invalid_argument(std::string(name) + " is a proper power");
}

std::vector<Generator> letter_generators(const Alphabet& alphabet, std::size_t rank) {
  std::vector<Generator> gens;
  for (std::uint32_t i = 0; i < alphabet.size(); ++i)
    gens.push_back({alphabet.name(i), Word::finite(rank, {Letter{i, false}})});
  return gens;
}

void require_stable_name(const Alphabet& alphabet, const std::string& stable) {
  if (!Alphabet::valid_name(stable)) throw std::invalid_argument("invalid stable letter name '" + stable + "'");
  if (alphabet.find(stable)) throw std::invalid_argument("stable letter name clashes with the alphabet");
}

GroupDef build(const Alphabet& alphabet, const FiniteWord& u, const FiniteWord& v,
               const std::string& stable) {
  if (alphabet.size() == 0) throw std::invalid_argument("alphabet must be non-empty");
  require_stable_name(alphabet, stable);
  Word s = Word::tail(2, u, v);
  if (s.length() != LambdaElem::unit(2, 1)) throw std::logic_error("stable letter length is not (0,1)");
  const Word wu = Word::finite(2, u), wv = Word::finite(2, v);
  if (!same_word(concat(wu, s), concat(s, wv)))
    throw std::logic_error("stable letter does not conjugate u to v");
  if (!same_word(product(wu, s), product(s, wv)))
    throw std::logic_error("stable letter does not conjugate u to v");
  std::vector<Generator> gens = letter_generators(alphabet, 2);
  gens.push_back({stable, std::move(s)});
  return GroupDef(2, alphabet, std::move(gens));
}

Alphabet alphabet_for(std::vector<std::string> names, std::string_view u, std::string_view v,
                      FiniteWord& wu, FiniteWord& wv) {
  const bool infer = names.empty();
  Alphabet alphabet(names);
  wu = parse_finite(u, alphabet, infer);
  wv = parse_finite(v, alphabet, infer);
  return alphabet;
}

}  // namespace

GroupDef free_group(const std::vector<std::string>& alphabet) {
  if (alphabet.empty()) throw std::invalid_argument("alphabet must be non-empty");
  Alphabet letters(alphabet);
  return GroupDef(1, letters, letter_generators(letters, 1));
}

GroupDef hnn_stable(const Alphabet& alphabet, const FiniteWord& u, const std::string& stable) {
  require_periodic_letter(u, "u");
  return build(alphabet, u, u, stable);
}

GroupDef hnn_conjugate(const Alphabet& alphabet, const FiniteWord& u, const FiniteWord& v,
                       const std::string& stable) {
  require_periodic_letter(u, "u");
  require_periodic_letter(v, "v");
  if (u.size() != v.size()) throw std::invalid_argument("|u| != |v|");
  return build(alphabet, u, v, stable);
}

GroupDef hnn_stable(std::vector<std::string> alphabet, std::string_view u, const std::string& stable) {
  FiniteWord wu, wv;
  Alphabet letters = alphabet_for(std::move(alphabet), u, u, wu, wv);
  return hnn_stable(letters, wu, stable);
}

GroupDef hnn_conjugate(std::vector<std::string> alphabet, std::string_view u, std::string_view v,
                       const std::string& stable) {
  FiniteWord wu, wv;
  Alphabet letters = alphabet_for(std::move(alphabet), u, v, wu, wv);
  return hnn_conjugate(letters, wu, wv, stable);
}

}  // namespace ltree
