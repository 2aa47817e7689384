#include "gtt/parse.hpp"

#include <cctype>

#include "gtt/errors.hpp"

namespace gtt {

namespace {

struct Parser {
  Store& st;
  const std::string& text;
  std::size_t pos = 0;
  std::vector<SymId> binders;

  [[noreturn]] void fail(const std::string& msg) {
    throw InputError("parse error at offset " + std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(const char* tok) {
    skip_ws();
    std::size_t len = std::char_traits<char>::length(tok);
    if (text.compare(pos, len, tok) == 0) {
      pos += len;
      return true;
    }
    return false;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  void expect(const char* tok) {
    if (!eat(tok)) fail(std::string("expected '") + tok + "'");
  }

  bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string ident() {
    skip_ws();
    if (pos >= text.size() || !ident_start(text[pos])) fail("expected identifier");
    std::size_t start = pos;
    while (pos < text.size() && ident_char(text[pos])) ++pos;
    return text.substr(start, pos - start);
  }

  Nat numeral() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected digits after '#'");
    Nat v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return v;
  }

  bool bound(SymId s) {
    for (SymId b : binders)
      if (b == s) return true;
    return false;
  }

  TermId term() {
    skip_ws();
    if (pos < text.size() && text[pos] == '#') {
      ++pos;
      return st.term_numeral(numeral());
    }
    SymId s = st.sym(ident());
    return bound(s) ? st.term_var(s) : st.term_elem(s);
  }

  NodeId truth_atom() {
    expect("(");
    skip_ws();
    NodeId out;
    if (peek('@')) {
      expect("@");
      out = st.mk_truth_quote(sentence());
    } else if (pos < text.size() && text[pos] == '#') {
      ++pos;
      if (pos < text.size() && text[pos] == '_') {
        ++pos;
        out = st.mk_truth_hole();
      } else {
        out = st.mk_truth_term(st.term_numeral(numeral()));
      }
    } else {
      SymId s = st.sym(ident());
      out = st.mk_truth_term(bound(s) ? st.term_var(s) : st.term_elem(s));
    }
    expect(")");
    return out;
  }

  NodeId atom() {
    skip_ws();
    if (eat("(")) {
      NodeId n = sentence();
      expect(")");
      return n;
    }
    std::string id = ident();
    if (id == "forall" || id == "exists") {
      SymId v = st.sym(ident());
      expect(".");
      binders.push_back(v);
      NodeId body = sentence();
      binders.pop_back();
      return st.mk_quant(id == "forall" ? Quant::forall : Quant::exists, v, body);
    }
    if (id == "T") return truth_atom();
    expect("(");
    std::vector<TermId> args;
    args.push_back(term());
    while (eat(",")) args.push_back(term());
    expect(")");
    return st.mk_pred(st.sym(id), args);
  }

  NodeId unary() {
    if (eat("~")) return st.mk_neg(unary());
    return atom();
  }

  NodeId conj() {
    NodeId a = unary();
    if (eat("&")) return st.mk_bin(BinOp::and_op, a, conj());
    return a;
  }

  NodeId disj() {
    NodeId a = conj();
    if (eat("|")) return st.mk_bin(BinOp::or_op, a, disj());
    return a;
  }

  NodeId implication() {
    NodeId a = disj();
    if (eat("->")) return st.mk_bin(BinOp::impl, a, implication());
    return a;
  }

  NodeId sentence() {
    NodeId a = implication();
    if (eat("<->")) return st.mk_bin(BinOp::iff, a, sentence());
    return a;
  }
};

}  // namespace

NodeId parse_sentence(Store& st, const std::string& text) {
  Parser p{st, text, 0, {}};
  NodeId n = p.sentence();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("unexpected trailing input");
  return n;
}

}  // namespace gtt
