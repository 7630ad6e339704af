#include "char_expr.hpp"

#include <cctype>
#include <string>

#include "symirr/errors.hpp"
#include "symirr/plethysm.hpp"

namespace symirr::cli {

namespace {

class Parser {
 public:
  Parser(const TablePtr& t, std::string_view s) : t_(t), s_(s) {}

  ClassFunction parse() {
    ClassFunction f = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  const TablePtr& t_;
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("character expression '" + std::string(s_) + "' at " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  BigInt integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  unsigned small_integer() {
    const BigInt v = integer();
    if (!v.fits_uint_p() || v > 1000000) fail("integer out of range");
    return static_cast<unsigned>(v.get_ui());
  }

  ClassFunction expr() {
    ClassFunction f = term();
    for (;;) {
      if (accept("+")) {
        f += term();
      } else if (accept("-")) {
        f -= term();
      } else {
        return f;
      }
    }
  }

  ClassFunction term() {
    ClassFunction f = unary();
    while (accept("*")) f *= unary();
    return f;
  }

  ClassFunction unary() {
    if (accept("-")) return -unary();
    return atom();
  }

  ClassFunction irreducible(unsigned i) {
    if (i < 1 || i > t_->irreducible_count()) {
      fail("irreducible index " + std::to_string(i) + " outside 1.." + std::to_string(t_->irreducible_count()));
    }
    return t_->irreducible(i - 1);
  }

  ClassFunction atom() {
    if (accept("conj(")) {
      ClassFunction f = expr();
      expect(")");
      return f.conj();
    }
    for (const bool is_sym : {true, false}) {
      if (accept(is_sym ? "sym(" : "ext(")) {
        ClassFunction f = expr();
        expect(",");
        const unsigned k = small_integer();
        expect(")");
        return is_sym ? sym_power(f, k) : ext_power(f, k);
      }
    }
    if (accept("(")) {
      ClassFunction f = expr();
      expect(")");
      return f;
    }
    if (accept("X")) return irreducible(small_integer());
    skip_ws();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      return ClassFunction::constant(t_, Cyclotomic(integer()));
    }
    fail("expected a character");
  }
};

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

ClassFunction parse_character(const TablePtr& table, std::string_view text) {
  if (all_digits(text)) return Parser(table, "X" + std::string(text)).parse();
  return Parser(table, text).parse();
}

}  // namespace symirr::cli
