#include "ditri/parser.hpp"

#include <cctype>
#include <vector>

namespace ditri {

namespace {

enum class Tok { ident, number, punct, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int line = 1;
  int col = 1;
};

[[noreturn]] void fail_at(const std::string& src, const Token& t, const std::string& msg) {
  throw ParseError(src + ":" + std::to_string(t.line) + ":" + std::to_string(t.col) + ": " + msg);
}

std::vector<Token> lex(const std::string& text, const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto step = [&](size_t k) {
    for (size_t j = 0; j < k; ++j) {
      if (text[i + j] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += k;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') step(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      step(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      t.kind = Tok::ident;
      t.text = text.substr(i, j - i);
      step(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Tok::number;
      t.text = text.substr(i, j - i);
      step(j - i);
    } else {
      t.kind = Tok::punct;
      if (text.compare(i, 3, "|->") == 0) {
        t.text = "|->";
      } else if (text.compare(i, 2, "->") == 0) {
        t.text = "->";
      } else if (std::string("{}()[]:;,=+-*/^<>").find(c) != std::string::npos) {
        t.text = std::string(1, c);
      } else {
        fail_at(src, t, std::string("unexpected character '") + c + "'");
      }
      step(t.text.size());
    }
    out.push_back(std::move(t));
  }
  Token e;
  e.kind = Tok::end;
  e.text = "<end of input>";
  e.line = line;
  e.col = col;
  out.push_back(e);
  return out;
}

bool is_leaf_name(const std::string& s, int* index) {
  if (s.size() < 2 || s[0] != 'x') return false;
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  if (s[1] == '0') return false;
  long v = std::stol(s.substr(1));
  if (v < 1 || v > 63) return false;
  *index = int(v);
  return true;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::string src, Workspace& ws)
      : toks_(std::move(toks)), src_(std::move(src)), ws_(ws) {}

  void document() {
    while (peek().kind != Tok::end) statement();
  }

  LinComb lincomb_only(const Signature& sig) {
    LinComb l = lincomb(sig);
    if (peek().kind != Tok::end) fail("expected end of expression");
    return l;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
  std::string src_;
  Workspace& ws_;

  const Token& peek(size_t k = 0) const {
    size_t i = pos_ + k;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(src_, peek(), msg); }

  bool accept_punct(const std::string& p) {
    if (peek().kind == Tok::punct && peek().text == p) {
      next();
      return true;
    }
    return false;
  }
  void expect_punct(const std::string& p) {
    if (!accept_punct(p)) fail("expected '" + p + "', got '" + peek().text + "'");
  }
  std::string expect_ident(const std::string& what) {
    if (peek().kind != Tok::ident) fail("expected " + what + ", got '" + peek().text + "'");
    return next().text;
  }
  long expect_number(const std::string& what) {
    if (peek().kind != Tok::number) fail("expected " + what + ", got '" + peek().text + "'");
    return std::stol(next().text);
  }
  bool peek_kw(const std::string& kw, size_t k = 0) const {
    return peek(k).kind == Tok::ident && peek(k).text == kw;
  }
  void expect_kw(const std::string& kw) {
    if (!peek_kw(kw)) fail("expected '" + kw + "', got '" + peek().text + "'");
    next();
  }

  /* Positive rational INT [/ INT]. */
  Rational rational() {
    long num = expect_number("a number");
    if (accept_punct("/")) {
      long den = expect_number("a denominator");
      if (den == 0) fail("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  /* Signed rational, used in operator matrices. */
  Rational signed_rational() {
    bool neg = accept_punct("-");
    if (!neg) accept_punct("+");
    Rational q = rational();
    return neg ? Rational(-q) : q;
  }

  /* ^{1,3} -> mask.  Caller handles < and > aliases. */
  Mask dec_body() {
    expect_punct("{");
    Mask m = 0;
    do {
      const Token& at = peek();
      long k = expect_number("a position");
      if (k < 1 || k > 31) fail_at(src_, at, "position out of range");
      if (mask_contains(Mask(m), int(k))) fail_at(src_, at, "repeated position");
      m |= Mask(1) << (k - 1);
    } while (accept_punct(","));
    expect_punct("}");
    return m;
  }

  /* Op token: NAME, NAME^{..}, NAME< or NAME>.  With in_term set, < and > only
     count as decorations when a '(' follows (nothing else in a term starts with
     them, but the guard keeps error messages pointed at the right token). */
  std::pair<std::string, std::optional<Mask>> op_token(bool in_term) {
    std::string name = expect_ident("an operation name");
    if (accept_punct("^")) return {name, dec_body()};
    if (peek().kind == Tok::punct && (peek().text == "<" || peek().text == ">") &&
        (!in_term || (peek(1).kind == Tok::punct && peek(1).text == "("))) {
      Mask m = next().text == "<" ? mask_of({1}) : mask_of({2});
      return {name, m};
    }
    return {name, std::nullopt};
  }

  /* Resolves the spelled decoration against sig; arity-1 ops of decorated
     signatures default to {1}. */
  Mask resolve_dec(const Token& at, const Signature& sig, const OpDecl& op,
                   std::optional<Mask> spelled) {
    Mask dec;
    if (spelled) {
      if (sig.mode() == Mode::plain)
        fail_at(src_, at, "op " + op.name + " of a plain signature takes no decoration");
      dec = *spelled;
    } else {
      if (sig.mode() == Mode::plain)
        dec = 0;
      else if (op.arity == 1)
        dec = 1;
      else
        fail_at(src_, at, "op " + op.name + " needs a decoration here");
    }
    if (!sig.valid_decoration(op.arity, dec))
      fail_at(src_, at, "invalid decoration " + mask_str(dec) + " for " + op.name + "/" +
                            std::to_string(op.arity) + " in mode " + mode_str(sig.mode()));
    return dec;
  }

  Term term(const Signature& sig) {
    const Token& at = peek();
    if (peek().kind != Tok::ident) fail("expected a term");
    int leaf_idx = 0;
    bool leafish = is_leaf_name(peek().text, &leaf_idx);
    bool applied = peek(1).kind == Tok::punct &&
                   (peek(1).text == "(" || peek(1).text == "^" ||
                    ((peek(1).text == "<" || peek(1).text == ">") && peek(2).kind == Tok::punct &&
                     peek(2).text == "("));
    if (leafish && !applied) {
      next();
      return Term::leaf(leaf_idx);
    }
    auto [name, spelled] = op_token(true);
    const OpDecl* op = sig.find(name);
    if (!op) fail_at(src_, at, "unknown operation '" + name + "' in signature " + sig.name());
    Mask dec = resolve_dec(at, sig, *op, spelled);
    expect_punct("(");
    std::vector<Term> kids;
    if (!accept_punct(")")) {
      do kids.push_back(term(sig));
      while (accept_punct(","));
      expect_punct(")");
    }
    if (int(kids.size()) != op->arity)
      fail_at(src_, at, "op " + name + " takes " + std::to_string(op->arity) + " arguments, got " +
                            std::to_string(kids.size()));
    return Term::node(name, dec, std::move(kids));
  }

  /* 0 | [-] ADDEND { (+|-) ADDEND } with ADDEND = [RAT *] TERM. */
  LinComb lincomb(const Signature& sig) {
    if (peek().kind == Tok::number && peek().text == "0" &&
        !(peek(1).kind == Tok::punct && (peek(1).text == "*" || peek(1).text == "/"))) {
      next();
      return LinComb::zero();
    }
    LinComb out;
    bool neg = accept_punct("-");
    for (;;) {
      Rational c = 1;
      if (peek().kind == Tok::number) {
        c = rational();
        expect_punct("*");
      }
      if (neg) c = -c;
      out.add(term(sig), c);
      if (accept_punct("+"))
        neg = false;
      else if (accept_punct("-"))
        neg = true;
      else
        break;
    }
    return out;
  }

  void statement() {
    const Token& at = peek();
    try {
      if (peek_kw("signature"))
        signature_stmt();
      else if (peek_kw("identity"))
        identity_stmt();
      else if (peek_kw("system"))
        system_stmt();
      else if (peek_kw("morphism"))
        morphism_stmt();
      else if (peek_kw("algebra"))
        algebra_stmt();
      else if (peek_kw("operator"))
        operator_stmt();
      else
        fail("expected a statement (signature, identity, system, morphism, algebra, operator)");
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      fail_at(src_, at, e.what());
    }
  }

  void signature_stmt() {
    expect_kw("signature");
    std::string name = expect_ident("a signature name");
    Mode mode = Mode::plain;
    if (peek_kw("mode")) {
      next();
      std::string m = expect_ident("di or tri");
      if (m == "di")
        mode = Mode::di;
      else if (m == "tri")
        mode = Mode::tri;
      else
        fail("mode must be di or tri");
    }
    expect_punct("{");
    std::vector<OpDecl> ops;
    while (!accept_punct("}")) {
      expect_kw("op");
      const Token& at = peek();
      OpDecl d;
      d.name = expect_ident("an operation name");
      int dummy;
      if (is_leaf_name(d.name, &dummy))
        fail_at(src_, at, "operation name '" + d.name + "' collides with variable names");
      for (const OpDecl& prev : ops)
        if (prev.name == d.name) fail_at(src_, at, "duplicate operation '" + d.name + "'");
      expect_punct(":");
      long arity = expect_number("an arity");
      if (arity < 1 || arity > 12) fail("arity out of range");
      d.arity = int(arity);
      if (peek_kw("flags")) {
        next();
        expect_punct(":");
        std::string f = expect_ident("derivation or endomorphism");
        if (f == "derivation")
          d.flag = UnaryFlag::derivation;
        else if (f == "endomorphism")
          d.flag = UnaryFlag::endomorphism;
        else
          fail("flag must be derivation or endomorphism");
        if (d.arity != 1) fail_at(src_, at, "flags apply to arity-1 operations only");
      }
      expect_punct(";");
      ops.push_back(std::move(d));
    }
    ws_.add_signature(Signature(name, mode, std::move(ops)));
  }

  void identity_stmt() {
    expect_kw("identity");
    std::string name = expect_ident("an identity name");
    expect_kw("over");
    const Token& sat = peek();
    std::string sig_name = expect_ident("a signature name");
    const Signature* sig = ws_.find_signature(sig_name);
    if (!sig) fail_at(src_, sat, "unknown signature '" + sig_name + "'");
    expect_punct(":");
    const Token& lat = peek();
    LinComb lhs = lincomb(*sig);
    expect_punct("=");
    if (!(peek().kind == Tok::number && peek().text == "0")) fail("identities end with '= 0'");
    next();
    expect_punct(";");
    if (lhs.is_zero()) fail_at(src_, lat, "identity '" + name + "' is identically zero");
    if (!lhs.multilinear_of_degree(lhs.degree()))
      fail_at(src_, lat, "identity '" + name + "' is not multilinear");
    ws_.add_identity(sig_name, Identity{name, lhs});
  }

  void system_stmt() {
    expect_kw("system");
    std::string name = expect_ident("a system name");
    std::string over;
    if (peek_kw("over")) {
      next();
      over = expect_ident("a signature name");
    }
    expect_punct("=");
    expect_punct("{");
    IdentitySystem s;
    s.name = name;
    std::string sig_name = over;
    if (!accept_punct("}")) {
      do {
        const Token& at = peek();
        std::string id_name = expect_ident("an identity name");
        const NamedIdentity* ni = ws_.find_identity(id_name);
        if (!ni) fail_at(src_, at, "unknown identity '" + id_name + "'");
        if (sig_name.empty()) sig_name = ni->sig_name;
        if (ni->sig_name != sig_name)
          fail_at(src_, at, "identity '" + id_name + "' lives over " + ni->sig_name + ", not " +
                                sig_name);
        s.ids.push_back(ni->id);
      } while (accept_punct(","));
      expect_punct("}");
    }
    expect_punct(";");
    if (sig_name.empty()) fail("an empty system needs an explicit 'over SIG'");
    s.sig = ws_.signature(sig_name);
    validate_system(s);
    ws_.add_system(s);
  }

  void morphism_stmt() {
    expect_kw("morphism");
    Morphism m;
    m.name = expect_ident("a morphism name");
    expect_punct(":");
    const Token& sat = peek();
    std::string sname = expect_ident("a signature name");
    const Signature* src_sig = ws_.find_signature(sname);
    if (!src_sig) fail_at(src_, sat, "unknown signature '" + sname + "'");
    expect_punct("->");
    const Token& tat = peek();
    std::string tname = expect_ident("a signature name");
    const Signature* tgt_sig = ws_.find_signature(tname);
    if (!tgt_sig) fail_at(src_, tat, "unknown signature '" + tname + "'");
    m.source = *src_sig;
    m.target = *tgt_sig;
    expect_punct("{");
    while (!accept_punct("}")) {
      const Token& at = peek();
      auto [op_name, spelled] = op_token(false);
      const OpDecl* op = m.source.find(op_name);
      if (!op) fail_at(src_, at, "unknown operation '" + op_name + "' in " + sname);
      Mask dec = resolve_dec(at, m.source, *op, spelled);
      if (m.image(op_name, dec)) fail_at(src_, at, "duplicate image for " + op_name);
      expect_punct("|->");
      LinComb img = lincomb(m.target);
      expect_punct(";");
      m.images.push_back({{op_name, dec}, img});
    }
    validate_morphism(m);
    ws_.add_morphism(m);
  }

  void algebra_stmt() {
    expect_kw("algebra");
    FiniteAlgebra a;
    a.name = expect_ident("an algebra name");
    expect_kw("over");
    const Token& sat = peek();
    std::string sname = expect_ident("a signature name");
    const Signature* sig = ws_.find_signature(sname);
    if (!sig) fail_at(src_, sat, "unknown signature '" + sname + "'");
    a.sig = *sig;
    expect_kw("dim");
    long dim = expect_number("a dimension");
    if (dim < 1 || dim > 4096) fail("dimension out of range");
    expect_punct("{");
    expect_kw("basis");
    std::map<std::string, int> index_of;
    do {
      const Token& at = peek();
      std::string b = expect_ident("a basis name");
      if (index_of.count(b)) fail_at(src_, at, "duplicate basis name '" + b + "'");
      index_of[b] = int(a.basis.size());
      a.basis.push_back(b);
    } while (accept_punct(","));
    expect_punct(";");
    if (long(a.basis.size()) != dim)
      fail("basis lists " + std::to_string(a.basis.size()) + " names, dim says " +
           std::to_string(dim));
    auto basis_index = [&](const Token& at) {
      std::string b = expect_ident("a basis name");
      auto it = index_of.find(b);
      if (it == index_of.end()) fail_at(src_, at, "unknown basis element '" + b + "'");
      return it->second;
    };
    while (!accept_punct("}")) {
      const Token& at = peek();
      auto [op_name, spelled] = op_token(false);
      const OpDecl* op = a.sig.find(op_name);
      if (!op) fail_at(src_, at, "unknown operation '" + op_name + "' in " + sname);
      Mask dec = resolve_dec(at, a.sig, *op, spelled);
      expect_punct("(");
      std::vector<int> tuple;
      do tuple.push_back(basis_index(peek()));
      while (accept_punct(","));
      expect_punct(")");
      if (int(tuple.size()) != op->arity)
        fail_at(src_, at, "op " + op_name + " takes " + std::to_string(op->arity) + " arguments");
      expect_punct("=");
      Elem val;
      if (peek().kind == Tok::number && peek().text == "0" &&
          !(peek(1).kind == Tok::punct && (peek(1).text == "*" || peek(1).text == "/"))) {
        next();
      } else {
        bool neg = accept_punct("-");
        for (;;) {
          Rational c = 1;
          if (peek().kind == Tok::number) {
            c = rational();
            expect_punct("*");
          }
          if (neg) c = -c;
          int bi = basis_index(peek());
          val[bi] += c;
          if (val[bi] == 0) val.erase(bi);
          if (accept_punct("+"))
            neg = false;
          else if (accept_punct("-"))
            neg = true;
          else
            break;
        }
      }
      expect_punct(";");
      OpKey key{op_name, dec};
      if (a.tensors[key].count(tuple)) fail_at(src_, at, "duplicate entry for " + op_name);
      if (!val.empty()) a.tensors[key][tuple] = std::move(val);
    }
    validate_algebra(a);
    ws_.add_algebra(a);
  }

  void operator_stmt() {
    expect_kw("operator");
    LinearOperator t;
    t.name = expect_ident("an operator name");
    expect_kw("on");
    const Token& aat = peek();
    t.algebra = expect_ident("an algebra name");
    const FiniteAlgebra* a = ws_.find_algebra(t.algebra);
    if (!a) fail_at(src_, aat, "unknown algebra '" + t.algebra + "'");
    expect_punct("=");
    expect_punct("[");
    do {
      expect_punct("[");
      std::vector<Rational> row;
      do row.push_back(signed_rational());
      while (accept_punct(","));
      expect_punct("]");
      t.mat.push_back(std::move(row));
    } while (accept_punct(","));
    expect_punct("]");
    expect_punct(";");
    validate_operator(*a, t);
    ws_.add_operator(t);
  }
};

} // namespace

void parse_document(const std::string& text, const std::string& source_name, Workspace& ws) {
  Parser p(lex(text, source_name), source_name, ws);
  p.document();
}

LinComb parse_lincomb(const std::string& text, const Signature& sig) {
  Workspace scratch;
  Parser p(lex(text, "<expr>"), "<expr>", scratch);
  return p.lincomb_only(sig);
}

} // namespace ditri
