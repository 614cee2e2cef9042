#include "chevkit/expr.hpp"

#include <cctype>

#include "chevkit/errors.hpp"

namespace chevkit {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ContextPtr& ctx, const ExprNames& names)
      : text_(text), ctx_(ctx), names_(names) {}

  PolyMixed parse() {
    auto x = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string identifier() {
    skip();
    const size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  // Text up to the matching ')', consuming it.
  std::string balanced() {
    if (!eat('(')) fail("expected '('");
    const size_t start = pos_;
    int depth = 1;
    while (pos_ < text_.size()) {
      const char c = text_[pos_++];
      if (c == '(') ++depth;
      if (c == ')' && --depth == 0) return std::string(text_.substr(start, pos_ - 1 - start));
    }
    fail("unbalanced parentheses");
  }

  PolyMixed expr() {
    PolyMixed x = term();
    while (eat('*')) x = x * term();
    return x;
  }

  PolyMixed term() {
    PolyMixed x = atom();
    skip();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const bool negative = eat('-');
      skip();
      const size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      PolyMixed base = negative ? mixed_inverse(x) : x;
      PolyMixed r = PolyMixed::radical(PolyUnipotent(ctx_));
      for (int i = 0; i < e; ++i) r = r * base;
      x = r;
    }
    return x;
  }

  PolyMixed atom() {
    if (eat('(')) {
      PolyMixed x = expr();
      if (!eat(')')) fail("expected ')'");
      return x;
    }
    skip();
    if (pos_ < text_.size() && text_[pos_] == '1') {
      ++pos_;
      return PolyMixed::radical(PolyUnipotent(ctx_));
    }
    const std::string id = identifier();
    if (id.empty()) fail("expected an element");
    if (auto it = names_.words.find(id); it != names_.words.end()) return PolyMixed::weyl(ctx_, it->second);
    if (auto it = names_.unipotents.find(id); it != names_.unipotents.end()) {
      return PolyMixed::radical(it->second(SparsePoly::parse(balanced())));
    }
    if (id.rfind("n_", 0) == 0) {
      return PolyMixed::weyl(ctx_, WeylWord::parse(id.substr(2), ctx_->system().datum()));
    }
    if (id.size() > 1 && id[0] == 'e' &&
        std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const int label = std::stoi(id.substr(1));
      if (!ctx_->in_radical(label)) throw NotInParabolic("e" + std::to_string(label) + " is not a radical root element");
      return PolyMixed::radical(PolyUnipotent::root_element(ctx_, label, SparsePoly::parse(balanced())));
    }
    fail("unknown name '" + id + "'");
  }

  std::string_view text_;
  size_t pos_ = 0;
  const ContextPtr& ctx_;
  const ExprNames& names_;
};

}  // namespace

PolyMixed parse_mixed(std::string_view text, const ContextPtr& ctx, const ExprNames& names) {
  return Parser(text, ctx, names).parse();
}

}  // namespace chevkit
