#include "syntax.hpp"

#include <cctype>

#include "ltree/error.hpp"

namespace ltree::syntax {

namespace {

constexpr std::string_view kEpsilon = "\xCE\xB5";

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Sequence run() {
    Sequence seq = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return seq;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) +
                     "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_keyword_tail() const {
    if (text_.substr(pos_, 4) != "tail") return false;
    std::size_t p = pos_ + 4;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && text_[p] == '(';
  }

  Sequence sequence() {
    Sequence seq;
    while (true) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') return seq;
      if (text_.substr(pos_, 1) == "1" || text_.substr(pos_, kEpsilon.size()) == kEpsilon) {
        pos_ += text_[pos_] == '1' ? 1 : kEpsilon.size();
        Term identity;
        identity.kind = Term::Kind::group;
        identity.group = std::make_shared<Sequence>();
        identity.exponent = exponent();
        seq.push_back(std::move(identity));
        continue;
      }
      Term term = atom();
      term.exponent = exponent();
      seq.push_back(std::move(term));
    }
  }

  Term atom() {
    Term term;
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      term.kind = Term::Kind::group;
      term.group = std::make_shared<Sequence>(sequence());
      skip_space();
      if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return term;
    }
    if (at_keyword_tail()) {
      pos_ = text_.find('(', pos_) + 1;
      term.kind = Term::Kind::tail;
      term.tail = tail_args();
      return term;
    }
    if (!std::isalpha(static_cast<unsigned char>(ch))) fail("expected a symbol");
    const std::size_t start = pos_++;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    term.name = std::string(text_.substr(start, pos_ - start));
    return term;
  }

  std::int64_t exponent() {
    skip_space();
    if (pos_ == text_.size() || text_[pos_] != '^') return 1;
    ++pos_;
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) negative = text_[pos_++] == '-';
    const std::size_t start = pos_;
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > kMaxExponent) fail("exponent too large");
    }
    if (start == pos_) fail("expected exponent");
    return negative ? -value : value;
  }

  TailArgs tail_args() {
    TailArgs args;
    bool have_front = false, have_back = false;
    while (true) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string key(text_.substr(start, pos_ - start));
      skip_space();
      if (pos_ == text_.size() || text_[pos_] != '=') fail("expected '=' after tail argument");
      ++pos_;
      skip_space();
      std::string value;
      if (pos_ < text_.size() && text_[pos_] == '"') {
        const std::size_t close = text_.find('"', pos_ + 1);
        if (close == std::string_view::npos) fail("unterminated string");
        value = std::string(text_.substr(pos_ + 1, close - pos_ - 1));
        pos_ = close + 1;
      } else {
        // Bare value: everything up to the next ',' or ')'.
        const std::size_t vstart = pos_;
        while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') ++pos_;
        std::string_view bare = text_.substr(vstart, pos_ - vstart);
        while (!bare.empty() && std::isspace(static_cast<unsigned char>(bare.back()))) bare.remove_suffix(1);
        value = std::string(bare);
      }
      if (key == "front") {
        args.front = value;
        have_front = true;
      } else if (key == "back") {
        args.back = value;
        have_back = true;
      } else if (key == "offset") {
        args.offset = value;
      } else {
        fail("unknown tail argument '" + key + "'");
      }
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
        break;
      }
      fail("expected ',' or ')' in tail arguments");
    }
    if (!have_front || !have_back) fail("tail needs both front and back");
    return args;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Sequence parse(std::string_view text) { return Parser(text).run(); }

}  // namespace ltree::syntax
