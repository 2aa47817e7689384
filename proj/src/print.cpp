#include "gtt/print.hpp"

namespace gtt {

namespace {

// Binding strength: quantifiers are loosest, then <-> -> | & ~.
int prec_of(const Store& st, NodeId n) {
  const Node& nd = st.node(n);
  switch (nd.kind) {
    case NodeKind::quant:
      return 0;
    case NodeKind::bin:
      switch (static_cast<BinOp>(nd.op)) {
        case BinOp::iff: return 1;
        case BinOp::impl: return 2;
        case BinOp::or_op: return 3;
        case BinOp::and_op: return 4;
      }
      return 1;
    case NodeKind::neg:
      return 5;
    default:
      return 6;
  }
}

void term_text(const Store& st, TermId t, std::string& out) {
  const Term& tm = st.term(t);
  switch (tm.kind) {
    case TermKind::elem:
    case TermKind::var:
      out += st.sym_name(tm.sym);
      break;
    case TermKind::numeral:
      out += '#';
      out += tm.value.str();
      break;
  }
}

void print_rec(const Store& st, NodeId n, std::string& out);

void child_text(const Store& st, NodeId child, int min_prec, std::string& out) {
  if (prec_of(st, child) < min_prec) {
    out += '(';
    print_rec(st, child, out);
    out += ')';
  } else {
    print_rec(st, child, out);
  }
}

void print_rec(const Store& st, NodeId n, std::string& out) {
  const Node& nd = st.node(n);
  switch (nd.kind) {
    case NodeKind::pred: {
      out += st.sym_name(nd.a);
      out += '(';
      const auto& args = st.args(nd.b);
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) out += ',';
        term_text(st, args[i], out);
      }
      out += ')';
      break;
    }
    case NodeKind::truth: {
      out += "T(";
      switch (static_cast<TruthArg>(nd.op)) {
        case TruthArg::term: {
          const Term& tm = st.term(nd.a);
          if (tm.kind == TermKind::numeral) {
            NodeId q = st.decode(tm.value);
            if (q != no_node && !st.is_designated_code(tm.value)) {
              out += '@';
              print_rec(st, q, out);
            } else {
              out += '#';
              out += tm.value.str();
            }
          } else {
            term_text(st, nd.a, out);
          }
          break;
        }
        case TruthArg::quote:
          out += '@';
          print_rec(st, nd.a, out);
          break;
        case TruthArg::hole:
          out += "#_";
          break;
      }
      out += ')';
      break;
    }
    case NodeKind::neg:
      out += '~';
      child_text(st, nd.a, 5, out);
      break;
    case NodeKind::bin: {
      int p = prec_of(st, n);
      const char* op = "";
      switch (static_cast<BinOp>(nd.op)) {
        case BinOp::or_op: op = " | "; break;
        case BinOp::and_op: op = " & "; break;
        case BinOp::impl: op = " -> "; break;
        case BinOp::iff: op = " <-> "; break;
      }
      // All binaries associate to the right: the left child needs parens at
      // equal precedence, the right child only below it.
      child_text(st, nd.a, p + 1, out);
      out += op;
      child_text(st, nd.b, p, out);
      break;
    }
    case NodeKind::quant:
      out += (static_cast<Quant>(nd.op) == Quant::forall) ? "forall " : "exists ";
      out += st.sym_name(nd.a);
      out += ". ";
      print_rec(st, nd.b, out);
      break;
  }
}

}  // namespace

std::string print_sentence(const Store& st, NodeId n) {
  std::string out;
  print_rec(st, n, out);
  return out;
}

}  // namespace gtt
