#include "ltree/ordered_group.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "ltree/error.hpp"

namespace ltree {

namespace {

void require_same_rank(const LambdaElem& a, const LambdaElem& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("incompatible ordered groups");
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

BigInt parse_integer(std::string_view digits, std::string_view context) {
  std::size_t i = 0;
  bool negative = false;
  if (i < digits.size() && (digits[i] == '+' || digits[i] == '-')) negative = digits[i++] == '-';
  if (i == digits.size()) throw ParseError("expected integer in '" + std::string(context) + "'");
  BigInt value = 0;
  for (; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i])))
      throw ParseError("expected integer in '" + std::string(context) + "'");
    value = value * 10 + (digits[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

// "b t + a" with t the generator of the dominant coordinate.
LambdaElem parse_polynomial(const std::string& s, std::size_t rank) {
  BigInt low = 0, level = 0;
  std::size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (any) {
      throw ParseError("expected '+' or '-' in '" + s + "'");
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    BigInt coefficient = start == i ? BigInt(1) : parse_integer(s.substr(start, i - start), s);
    bool has_t = false;
    if (i < s.size() && s[i] == '*') ++i;
    if (i < s.size() && s[i] == 't') {
      has_t = true;
      ++i;
    } else if (start == i) {
      throw ParseError("malformed ordered-group element '" + s + "'");
    }
    if (negative) coefficient = -coefficient;
    (has_t ? level : low) += coefficient;
    any = true;
  }
  if (!any) throw ParseError("empty ordered-group element");
  return LambdaElem::from_parts(rank, low, level);
}

}  // namespace

LambdaElem::LambdaElem(std::vector<BigInt> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("ordered group rank must be at least 1");
}

LambdaElem LambdaElem::zero(std::size_t rank) { return LambdaElem(std::vector<BigInt>(rank)); }

LambdaElem LambdaElem::one(std::size_t rank) { return unit(rank, 0); }

LambdaElem LambdaElem::unit(std::size_t rank, std::size_t index) {
  if (index >= rank) throw std::invalid_argument("unit index outside rank");
  std::vector<BigInt> c(rank);
  c[index] = 1;
  return LambdaElem(std::move(c));
}

LambdaElem LambdaElem::from_parts(std::size_t rank, BigInt low, BigInt level) {
  std::vector<BigInt> c(rank);
  if (rank == 0) throw std::invalid_argument("ordered group rank must be at least 1");
  c[0] = std::move(low);
  if (level != 0) {
    if (rank < 2) throw std::invalid_argument("incompatible ordered groups");
    c[1] = std::move(level);
  }
  return LambdaElem(std::move(c));
}

std::size_t LambdaElem::height() const {
  for (std::size_t i = coords_.size(); i-- > 0;)
    if (coords_[i] != 0) return i;
  return 0;
}

bool LambdaElem::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const BigInt& x) { return x == 0; });
}

bool LambdaElem::is_positive() const {
  for (std::size_t i = coords_.size(); i-- > 0;)
    if (coords_[i] != 0) return coords_[i] > 0;
  return false;
}

bool LambdaElem::is_negative() const { return !is_zero() && !is_positive(); }

LambdaElem LambdaElem::lifted(std::size_t rank) const {
  if (rank < coords_.size()) throw std::invalid_argument("incompatible ordered groups");
  std::vector<BigInt> c = coords_;
  c.resize(rank);
  return LambdaElem(std::move(c));
}

LambdaElem LambdaElem::half() const {
  std::vector<BigInt> c = coords_;
  for (auto& x : c) {
    if ((x & 1) != 0) throw std::domain_error("element is not divisible by 2");
    x /= 2;
  }
  return LambdaElem(std::move(c));
}

LambdaElem& LambdaElem::operator+=(const LambdaElem& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LambdaElem& LambdaElem::operator-=(const LambdaElem& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

LambdaElem LambdaElem::operator-() const {
  std::vector<BigInt> c = coords_;
  for (auto& x : c) x = -x;
  return LambdaElem(std::move(c));
}

LambdaElem operator*(const BigInt& k, const LambdaElem& a) {
  std::vector<BigInt> c = a.coords_;
  for (auto& x : c) x *= k;
  return LambdaElem(std::move(c));
}

std::strong_ordering operator<=>(const LambdaElem& a, const LambdaElem& b) {
  require_same_rank(a, b);
  for (std::size_t i = a.rank(); i-- > 0;) {
    if (a.coords_[i] < b.coords_[i]) return std::strong_ordering::less;
    if (a.coords_[i] > b.coords_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool operator==(const LambdaElem& a, const LambdaElem& b) {
  require_same_rank(a, b);
  return a.coords_ == b.coords_;
}

std::string LambdaElem::to_string() const {
  if (coords_.size() == 1) return coords_[0].str();
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += coords_[i].str();
  }
  return out + ")";
}

LambdaElem LambdaElem::parse(std::string_view text, std::size_t rank) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty ordered-group element");
  if (s.front() == '(') {
    if (s.back() != ')') throw ParseError("unbalanced parentheses in '" + s + "'");
    std::vector<BigInt> c;
    std::string_view body(s.data() + 1, s.size() - 2);
    std::size_t start = 0;
    while (true) {
      std::size_t comma = body.find(',', start);
      c.push_back(parse_integer(body.substr(start, comma - start), s));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (c.size() != rank) throw std::invalid_argument("incompatible ordered groups");
    return LambdaElem(std::move(c));
  }
  if (s.find('t') != std::string::npos) return parse_polynomial(s, rank);
  return LambdaElem::from_parts(rank, parse_integer(s, s));
}

std::strong_ordering compare(const LambdaElem& a, const LambdaElem& b) { return a <=> b; }

LambdaElem add(const LambdaElem& a, const LambdaElem& b) { return a + b; }

LambdaElem neg(const LambdaElem& a) { return -a; }

LambdaElem min_of(const LambdaElem& a, const LambdaElem& b) { return b < a ? b : a; }

LambdaElem max_of(const LambdaElem& a, const LambdaElem& b) { return a < b ? b : a; }

bool in_segment(const LambdaElem& c, const LambdaElem& a, const LambdaElem& b) {
  return a <= c && c <= b;
}

bool is_isosceles(const LambdaElem& a, const LambdaElem& b, const LambdaElem& c) {
  return a >= min_of(b, c) && b >= min_of(a, c) && c >= min_of(a, b);
}

}  // namespace ltree
