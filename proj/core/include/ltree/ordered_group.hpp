#pragma once

// Exact arithmetic in Z^n with the right-lexicographic order: the highest
// coordinate dominates, coordinate 0 is the least significant one.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ltree {

using BigInt = boost::multiprecision::cpp_int;

class LambdaElem {
 public:
  LambdaElem() = default;
  explicit LambdaElem(std::vector<BigInt> coords);

  static LambdaElem zero(std::size_t rank);
  /// The minimal positive element (1, 0, ..., 0).
  static LambdaElem one(std::size_t rank);
  static LambdaElem unit(std::size_t rank, std::size_t index);
  /// Element with coordinate 0 = low and coordinate 1 = level (rank >= 2
  /// required when level != 0).
  static LambdaElem from_parts(std::size_t rank, BigInt low, BigInt level = 0);

  std::size_t rank() const { return coords_.size(); }
  const BigInt& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<BigInt>& coords() const { return coords_; }

  /// Index of the highest non-zero coordinate, or 0 for the zero element.
  std::size_t height() const;

  bool is_zero() const;
  bool is_positive() const;
  bool is_negative() const;

  /// Zero-pads to a larger rank (the embedding Z^m -> Z^n, m <= n).
  LambdaElem lifted(std::size_t rank) const;

  /// Exact halving; throws std::domain_error if some coordinate is odd.
  LambdaElem half() const;

  LambdaElem& operator+=(const LambdaElem& other);
  LambdaElem& operator-=(const LambdaElem& other);
  friend LambdaElem operator+(LambdaElem a, const LambdaElem& b) { return a += b; }
  friend LambdaElem operator-(LambdaElem a, const LambdaElem& b) { return a -= b; }
  LambdaElem operator-() const;
  friend LambdaElem operator*(const BigInt& k, const LambdaElem& a);

  friend std::strong_ordering operator<=>(const LambdaElem& a, const LambdaElem& b);
  friend bool operator==(const LambdaElem& a, const LambdaElem& b);

  /// "a" for rank 1, "(a1,...,an)" otherwise.
  std::string to_string() const;

  /// Accepts "a", "(a1,...,an)", and for rank 2 the polynomial form
  /// "b t + a" (e.g. "t", "2t-1", "t + 3").
  static LambdaElem parse(std::string_view text, std::size_t rank);

 private:
  std::vector<BigInt> coords_;
};

std::strong_ordering compare(const LambdaElem& a, const LambdaElem& b);
LambdaElem add(const LambdaElem& a, const LambdaElem& b);
LambdaElem neg(const LambdaElem& a);
LambdaElem min_of(const LambdaElem& a, const LambdaElem& b);
LambdaElem max_of(const LambdaElem& a, const LambdaElem& b);

/// a <= c <= b.
bool in_segment(const LambdaElem& c, const LambdaElem& a, const LambdaElem& b);

/// True when the two smallest of the three values coincide.
bool is_isosceles(const LambdaElem& a, const LambdaElem& b, const LambdaElem& c);

}  // namespace ltree
