#include "ditri/printer.hpp"

#include <sstream>

#include "ditri/rational.hpp"

namespace ditri {

namespace {

/* Decoration suffix in the explicit spelling: nothing for plain nodes. */
std::string dec_canonical(Mask dec) {
  if (dec == 0) return "";
  return "^" + mask_str(dec);
}

/* Source spelling depends on the op's arity and the signature's mode. */
std::string dec_src(const Term& t, const Signature& sig) {
  if (t.dec() == 0) return "";
  int arity = int(t.kids().size());
  if (arity == 1) return "";
  if (sig.mode() == Mode::di && arity == 2) return t.dec() == mask_of({1}) ? "<" : ">";
  return dec_canonical(t.dec());
}

void term_rec(std::ostringstream& os, const Term& t, const Signature* sig) {
  if (t.is_leaf()) {
    os << "x" << t.leaf_index();
    return;
  }
  os << t.op() << (sig ? dec_src(t, *sig) : dec_canonical(t.dec())) << "(";
  bool first = true;
  for (const Term& k : t.kids()) {
    if (!first) os << ",";
    first = false;
    term_rec(os, k, sig);
  }
  os << ")";
}

std::string lincomb_impl(const LinComb& l, const Signature* sig) {
  if (l.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : l.terms()) {
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (a != 1) os << rat_str(a) << "*";
    term_rec(os, t, sig);
  }
  return os.str();
}

std::string flag_str(UnaryFlag f) {
  switch (f) {
    case UnaryFlag::derivation: return "derivation";
    case UnaryFlag::endomorphism: return "endomorphism";
    default: return "";
  }
}

} // namespace

std::string term_str(const Term& t) {
  std::ostringstream os;
  term_rec(os, t, nullptr);
  return os.str();
}

std::string lincomb_str(const LinComb& l) { return lincomb_impl(l, nullptr); }

std::string term_src(const Term& t, const Signature& sig) {
  std::ostringstream os;
  term_rec(os, t, &sig);
  return os.str();
}

std::string lincomb_src(const LinComb& l, const Signature& sig) { return lincomb_impl(l, &sig); }

std::string signature_stmt(const Signature& sig) {
  std::ostringstream os;
  os << "signature " << sig.name();
  if (sig.mode() != Mode::plain) os << " mode " << mode_str(sig.mode());
  os << " {\n";
  for (const OpDecl& op : sig.ops()) {
    os << "  op " << op.name << " : " << op.arity;
    if (op.flag != UnaryFlag::none) os << " flags : " << flag_str(op.flag);
    os << " ;\n";
  }
  os << "}\n";
  return os.str();
}

std::string identity_stmt(const Identity& id, const Signature& sig) {
  return "identity " + id.name + " over " + sig.name() + " : " + lincomb_src(id.lhs, sig) +
         " = 0 ;\n";
}

std::string system_stmt(const IdentitySystem& s) {
  std::ostringstream os;
  os << "system " << s.name << " over " << s.sig.name() << " = {";
  bool first = true;
  for (const Identity& id : s.ids) {
    os << (first ? " " : ", ") << id.name;
    first = false;
  }
  os << (first ? "" : " ") << "} ;\n";
  return os.str();
}

std::string morphism_stmt(const Morphism& m) {
  std::ostringstream os;
  os << "morphism " << m.name << " : " << m.source.name() << " -> " << m.target.name() << " {\n";
  for (const auto& [key, img] : m.images) {
    os << "  " << key.first << dec_canonical(key.second) << " |-> " << lincomb_src(img, m.target)
       << " ;\n";
  }
  os << "}\n";
  return os.str();
}

std::string algebra_stmt(const FiniteAlgebra& a) {
  std::ostringstream os;
  os << "algebra " << a.name << " over " << a.sig.name() << " dim " << a.dim() << " {\n";
  os << "  basis";
  for (int i = 0; i < a.dim(); ++i) os << (i ? ", " : " ") << a.basis[size_t(i)];
  os << " ;\n";
  for (const auto& [key, tensor] : a.tensors) {
    for (const auto& [tuple, val] : tensor) {
      if (elem_zero(val)) continue;
      os << "  " << key.name << dec_canonical(key.dec) << "(";
      for (size_t i = 0; i < tuple.size(); ++i)
        os << (i ? "," : "") << a.basis[size_t(tuple[i])];
      os << ") = " << a.elem_str(val) << " ;\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string operator_stmt(const LinearOperator& t, const std::string& algebra_name) {
  std::ostringstream os;
  os << "operator " << t.name << " on " << algebra_name << " = [";
  for (int j = 0; j < t.dim(); ++j) {
    os << (j ? ", [" : "[");
    for (size_t i = 0; i < t.mat[size_t(j)].size(); ++i)
      os << (i ? "," : "") << rat_str(t.mat[size_t(j)][i]);
    os << "]";
  }
  os << "] ;\n";
  return os.str();
}

std::string system_document(const IdentitySystem& s) {
  std::string out = signature_stmt(s.sig);
  for (const Identity& id : s.ids) out += identity_stmt(id, s.sig);
  out += system_stmt(s);
  return out;
}

std::string morphism_document(const Morphism& m) {
  std::string out = signature_stmt(m.source);
  if (m.source.name() != m.target.name()) out += signature_stmt(m.target);
  out += morphism_stmt(m);
  return out;
}

std::string algebra_document(const FiniteAlgebra& a) {
  return signature_stmt(a.sig) + algebra_stmt(a);
}

} // namespace ditri

