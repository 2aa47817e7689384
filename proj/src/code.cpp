#include <cassert>
#include <cstring>
#include <stdexcept>

#include "gtt/ast.hpp"
#include "gtt/errors.hpp"

namespace gtt {

namespace {

constexpr std::uint8_t tag_pred = 0x01;
constexpr std::uint8_t tag_truth_term = 0x02;
constexpr std::uint8_t tag_truth_quote = 0x03;
constexpr std::uint8_t tag_neg = 0x05;
constexpr std::uint8_t tag_bin = 0x06;
constexpr std::uint8_t tag_quant = 0x07;
constexpr std::uint8_t tag_elem = 0x10;
constexpr std::uint8_t tag_numeral = 0x11;
constexpr std::uint8_t tag_var = 0x12;

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(v) | 0x80);
    v >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(v));
}

void put_name(std::vector<std::uint8_t>& out, const std::string& s) {
  put_varint(out, s.size());
  out.insert(out.end(), s.begin(), s.end());
}

void put_nat(std::vector<std::uint8_t>& out, const Nat& n) {
  std::vector<std::uint8_t> mag;
  Nat v = n;
  while (v > 0) {
    mag.push_back(static_cast<std::uint8_t>(v & 0xff));
    v >>= 8;
  }
  put_varint(out, mag.size());
  out.insert(out.end(), mag.rbegin(), mag.rend());
}

struct Reader {
  const std::vector<std::uint8_t>& buf;
  std::size_t pos = 0;

  std::uint8_t byte() {
    if (pos >= buf.size()) throw InputError("truncated sentence encoding");
    return buf[pos++];
  }
  std::uint64_t varint() {
    std::uint64_t v = 0;
    int shift = 0;
    for (;;) {
      std::uint8_t b = byte();
      v |= static_cast<std::uint64_t>(b & 0x7f) << shift;
      if (!(b & 0x80)) return v;
      shift += 7;
      if (shift > 56) throw InputError("overlong varint in sentence encoding");
    }
  }
  std::string name() {
    std::uint64_t len = varint();
    if (pos + len > buf.size()) throw InputError("truncated name in sentence encoding");
    std::string s(buf.begin() + pos, buf.begin() + pos + len);
    pos += len;
    return s;
  }
  Nat nat() {
    std::uint64_t len = varint();
    Nat v = 0;
    for (std::uint64_t i = 0; i < len; ++i) v = (v << 8) | byte();
    return v;
  }
};

}  // namespace

static void serialize_rec(const Store& st, NodeId id, std::vector<std::uint8_t>& out) {
  const Node& n = st.node(id);
  switch (n.kind) {
    case NodeKind::pred: {
      out.push_back(tag_pred);
      put_name(out, st.sym_name(n.a));
      const auto& args = st.args(n.b);
      put_varint(out, args.size());
      for (TermId t : args) {
        const Term& tm = st.term(t);
        switch (tm.kind) {
          case TermKind::elem:
            out.push_back(tag_elem);
            put_name(out, st.sym_name(tm.sym));
            break;
          case TermKind::var:
            out.push_back(tag_var);
            put_name(out, st.sym_name(tm.sym));
            break;
          case TermKind::numeral:
            out.push_back(tag_numeral);
            put_nat(out, tm.value);
            break;
        }
      }
      break;
    }
    case NodeKind::truth: {
      TruthArg ta = static_cast<TruthArg>(n.op);
      if (ta == TruthArg::hole) throw InputError("cannot encode an unregistered self-reference placeholder");
      if (ta == TruthArg::term) {
        out.push_back(tag_truth_term);
        const Term& tm = st.term(n.a);
        if (tm.kind == TermKind::numeral) {
          out.push_back(tag_numeral);
          put_nat(out, tm.value);
        } else if (tm.kind == TermKind::var) {
          out.push_back(tag_var);
          put_name(out, st.sym_name(tm.sym));
        } else {
          out.push_back(tag_elem);
          put_name(out, st.sym_name(tm.sym));
        }
      } else {
        out.push_back(tag_truth_quote);
        serialize_rec(st, n.a, out);
      }
      break;
    }
    case NodeKind::neg:
      out.push_back(tag_neg);
      serialize_rec(st, n.a, out);
      break;
    case NodeKind::bin:
      out.push_back(tag_bin);
      out.push_back(n.op);
      serialize_rec(st, n.a, out);
      serialize_rec(st, n.b, out);
      break;
    case NodeKind::quant:
      out.push_back(tag_quant);
      out.push_back(n.op);
      put_name(out, st.sym_name(n.a));
      serialize_rec(st, n.b, out);
      break;
  }
}

std::vector<std::uint8_t> Store::serialize(NodeId n) const {
  std::vector<std::uint8_t> out;
  serialize_rec(*this, n, out);
  return out;
}

static NodeId deserialize_rec(Store& st, Reader& r) {
  std::uint8_t tag = r.byte();
  switch (tag) {
    case tag_pred: {
      SymId p = st.sym(r.name());
      std::uint64_t argc = r.varint();
      std::vector<TermId> args;
      for (std::uint64_t i = 0; i < argc; ++i) {
        std::uint8_t tt = r.byte();
        if (tt == tag_elem)
          args.push_back(st.term_elem(st.sym(r.name())));
        else if (tt == tag_var)
          args.push_back(st.term_var(st.sym(r.name())));
        else if (tt == tag_numeral)
          args.push_back(st.term_numeral(r.nat()));
        else
          throw InputError("bad term tag in sentence encoding");
      }
      return st.mk_pred(p, args);
    }
    case tag_truth_term: {
      std::uint8_t tt = r.byte();
      if (tt == tag_numeral) return st.mk_truth_term(st.term_numeral(r.nat()));
      if (tt == tag_var) return st.mk_truth_term(st.term_var(st.sym(r.name())));
      if (tt == tag_elem) return st.mk_truth_term(st.term_elem(st.sym(r.name())));
      throw InputError("bad term tag in sentence encoding");
    }
    case tag_truth_quote:
      return st.mk_truth_quote(deserialize_rec(st, r));
    case tag_neg:
      return st.mk_neg(deserialize_rec(st, r));
    case tag_bin: {
      std::uint8_t op = r.byte();
      if (op > 3) throw InputError("bad connective in sentence encoding");
      NodeId a = deserialize_rec(st, r);
      NodeId b = deserialize_rec(st, r);
      return st.mk_bin(static_cast<BinOp>(op), a, b);
    }
    case tag_quant: {
      std::uint8_t q = r.byte();
      if (q > 1) throw InputError("bad quantifier in sentence encoding");
      SymId v = st.sym(r.name());
      return st.mk_quant(static_cast<Quant>(q), v, deserialize_rec(st, r));
    }
    default:
      throw InputError("bad node tag in sentence encoding");
  }
}

NodeId Store::deserialize(const std::vector<std::uint8_t>& bytes) {
  Reader r{bytes};
  NodeId n = deserialize_rec(*this, r);
  if (r.pos != bytes.size()) throw InputError("trailing bytes in sentence encoding");
  return n;
}

Nat Store::code_of(NodeId n) {
  Nat& cached = codes_[n];
  if (cached != 0) return cached;
  const Node& nd = nodes_[n];
  if (nd.varset != 0) throw InputError("open formulas have no code");
  if (nd.has_hole) throw InputError("unregistered self-reference placeholder has no code");
  Nat code = 2 * bytes_to_nat(serialize(n));
  cached = code;
  code_index_[code] = n;
  return code;
}

NodeId Store::decode(const Nat& code) const {
  auto it = code_index_.find(code);
  return it == code_index_.end() ? no_node : it->second;
}

const Designated& Store::register_designated(NodeId tmpl, const std::string& kind) {
  if (!nodes_[tmpl].has_hole) throw InputError("designated template must contain a #_ placeholder");
  Nat code = next_odd_;
  // Resolve the placeholder to the sentence's own code, then intern.
  struct Repl {
    Store& st;
    TermId num;
    NodeId run(NodeId id) {
      const Node nd = st.nodes_[id];
      if (!nd.has_hole) return id;
      switch (nd.kind) {
        case NodeKind::truth:
          if (static_cast<TruthArg>(nd.op) == TruthArg::hole) return st.mk_truth_term(num);
          return st.mk_truth_quote(run(nd.a));
        case NodeKind::neg:
          return st.mk_neg(run(nd.a));
        case NodeKind::bin:
          return st.mk_bin(static_cast<BinOp>(nd.op), run(nd.a), run(nd.b));
        case NodeKind::quant:
          return st.mk_quant(static_cast<Quant>(nd.op), nd.a, run(nd.b));
        default:
          return id;
      }
    }
  };
  Repl repl{*this, term_numeral(code)};
  NodeId node = repl.run(tmpl);
  if (codes_[node] != 0) {
    for (const auto& d : designated_)
      if (d.node == node) return d;
    throw InputError("designated sentence collides with an already coded sentence");
  }
  next_odd_ += 2;
  codes_[node] = code;
  code_index_[code] = node;
  designated_.push_back(Designated{node, code, kind});
  return designated_.back();
}

bool Store::is_designated_code(const Nat& code) const {
  if (code % 2 == 0) return false;
  auto it = code_index_.find(code);
  return it != code_index_.end();
}

}  // namespace gtt
