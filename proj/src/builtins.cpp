#include "ditri/builtins.hpp"

#include <stdexcept>

#include "ditri/corolla.hpp"

namespace ditri {

FiniteAlgebra c2_algebra() {
  FiniteAlgebra a;
  a.name = "c2";
  a.sig = comtrias_carrier();
  a.basis = {"e1", "e2"};
  auto& arrow = a.tensors[OpKey{kArrowOp, 0}];
  arrow[{0, 0}] = elem_unit(0);
  arrow[{0, 1}] = elem_unit(1);
  auto& perp = a.tensors[OpKey{kPerpOp, 0}];
  perp[{0, 0}] = elem_unit(0);
  perp[{1, 1}] = elem_unit(1);
  validate_algebra(a);
  return a;
}

namespace {

const char* kA2Gens[4] = {"b1", "b2", "x1", "x2"};

std::string a2_name(unsigned word) {
  if (word == 0) return "one";
  std::string s;
  for (int g = 0; g < 4; ++g)
    if ((word >> g) & 1) s += kA2Gens[g];
  return s;
}

/* Sign of merging two disjoint ascending generator words. */
int merge_sign(unsigned s, unsigned t) {
  int inv = 0;
  for (int i = 0; i < 4; ++i)
    if ((s >> i) & 1)
      for (int j = 0; j < i; ++j)
        if ((t >> j) & 1) ++inv;
  return inv % 2 ? -1 : 1;
}

} // namespace

FiniteAlgebra grassmann_a2() {
  FiniteAlgebra a;
  a.name = "a2";
  a.sig = Signature("assoc_sig", Mode::plain, {OpDecl{"m", 2, UnaryFlag::none}});
  for (unsigned w = 0; w < 16; ++w) a.basis.push_back(a2_name(w));
  auto& m = a.tensors[OpKey{"m", 0}];
  for (unsigned s = 0; s < 16; ++s)
    for (unsigned t = 0; t < 16; ++t) {
      if (s & t) continue;
      m[{int(s), int(t)}] = Elem{{int(s | t), Rational(merge_sign(s, t))}};
    }
  validate_algebra(a);
  return a;
}

LinearOperator grassmann_a2_tau() {
  LinearOperator tau;
  tau.name = "tau";
  tau.algebra = "a2";
  tau.mat.assign(16, std::vector<Rational>(16, 0));
  const int img_of[4] = {0, 1, 0, 1}; // b1, b2, x1 -> b1, x2 -> b2
  for (unsigned w = 0; w < 16; ++w) {
    // Apply the generator substitution, then resort; repeats kill the word.
    std::vector<int> imgs;
    for (int g = 0; g < 4; ++g)
      if ((w >> g) & 1) imgs.push_back(img_of[g]);
    int sign = 1;
    bool dead = false;
    for (size_t i = 0; i < imgs.size() && !dead; ++i)
      for (size_t j = i + 1; j < imgs.size(); ++j) {
        if (imgs[i] == imgs[j]) { dead = true; break; }
        if (imgs[i] > imgs[j]) sign = -sign;
      }
    if (dead) continue;
    unsigned out = 0;
    for (int g : imgs) out |= 1u << g;
    tau.mat[w][out] = Rational(sign);
  }
  return tau;
}

namespace {

Term x(int i) { return Term::leaf(i); }
Term b2(const char* op, Mask dec, const Term& a, const Term& b) {
  return Term::node(op, dec, {a, b});
}
Term b2(const char* op, const Term& a, const Term& b) { return Term::node(op, {a, b}); }

Signature one_binary(const std::string& sig_name, const std::string& op) {
  return Signature(sig_name, Mode::plain, {OpDecl{op, 2, UnaryFlag::none}});
}

} // namespace

IdentitySystem as_system() {
  IdentitySystem s;
  s.name = "as";
  s.sig = one_binary("assoc_sig", "m");
  LinComb assoc(b2("m", b2("m", x(1), x(2)), x(3)));
  assoc.add(b2("m", x(1), b2("m", x(2), x(3))), Rational(-1));
  s.ids.push_back({"assoc", assoc});
  return s;
}

IdentitySystem lie_system() {
  IdentitySystem s;
  s.name = "lie";
  s.sig = one_binary("lie_sig", "br");
  LinComb anti(b2("br", x(1), x(2)));
  anti.add(b2("br", x(2), x(1)), 1);
  s.ids.push_back({"anti", anti});
  LinComb jac(b2("br", b2("br", x(1), x(2)), x(3)));
  jac.add(b2("br", b2("br", x(2), x(3)), x(1)), 1);
  jac.add(b2("br", b2("br", x(3), x(1)), x(2)), 1);
  s.ids.push_back({"jacobi", jac});
  return s;
}

IdentitySystem perm_system() {
  IdentitySystem s;
  s.name = "perm";
  s.sig = one_binary("perm_sig", "m");
  LinComb assoc(b2("m", b2("m", x(1), x(2)), x(3)));
  assoc.add(b2("m", x(1), b2("m", x(2), x(3))), Rational(-1));
  s.ids.push_back({"assoc", assoc});
  LinComb lc(b2("m", b2("m", x(1), x(2)), x(3)));
  lc.add(b2("m", b2("m", x(2), x(1)), x(3)), Rational(-1));
  s.ids.push_back({"left_comm", lc});
  return s;
}

IdentitySystem n3_system() {
  IdentitySystem s;
  s.name = "n3";
  s.sig = one_binary("n3_sig", "m");
  s.ids.push_back({"left3", LinComb(b2("m", b2("m", x(1), x(2)), x(3)))});
  s.ids.push_back({"right3", LinComb(b2("m", x(1), b2("m", x(2), x(3))))});
  return s;
}

IdentitySystem trilie_system() {
  IdentitySystem s;
  s.name = "trilie";
  s.sig = Signature("trilie_sig", Mode::tri, {OpDecl{"br", 2, UnaryFlag::none}});
  const Mask h1 = mask_of({1}), h2 = mask_of({2}), h12 = mask_of({1, 2});

  LinComb hswap(b2("br", h2, x(1), x(2)));
  hswap.add(b2("br", h1, x(2), x(1)), 1);
  s.ids.push_back({"h_swap", hswap});

  LinComb anti(b2("br", h12, x(1), x(2)));
  anti.add(b2("br", h12, x(2), x(1)), 1);
  s.ids.push_back({"tri_anti", anti});

  LinComb jac(b2("br", h12, b2("br", h12, x(1), x(2)), x(3)));
  jac.add(b2("br", h12, b2("br", h12, x(2), x(3)), x(1)), 1);
  jac.add(b2("br", h12, b2("br", h12, x(3), x(1)), x(2)), 1);
  s.ids.push_back({"tri_jacobi", jac});

  LinComb leib(b2("br", h1, b2("br", h1, x(1), x(2)), x(3)));
  leib.add(b2("br", h1, x(1), b2("br", h1, x(2), x(3))), -1);
  leib.add(b2("br", h1, b2("br", h1, x(1), x(3)), x(2)), -1);
  s.ids.push_back({"leibniz", leib});

  LinComb mx1(b2("br", h12, x(1), b2("br", h1, x(2), x(3))));
  mx1.add(b2("br", h1, b2("br", h12, x(1), x(2)), x(3)), -1);
  mx1.add(b2("br", h12, x(2), b2("br", h1, x(1), x(3))), -1);
  s.ids.push_back({"mixed", mx1});

  LinComb mx2(b2("br", h1, x(1), b2("br", h12, x(2), x(3))));
  mx2.add(b2("br", h1, x(1), b2("br", h1, x(2), x(3))), -1);
  s.ids.push_back({"inner_free", mx2});
  return s;
}

IdentitySystem leftsym_system() {
  IdentitySystem s;
  s.name = "leftsym";
  s.sig = Signature("lsym_sig", Mode::di, {OpDecl{"br", 2, UnaryFlag::none}});
  const Mask h1 = mask_of({1}), h2 = mask_of({2});

  LinComb hswap(b2("br", h2, x(1), x(2)));
  hswap.add(b2("br", h1, x(2), x(1)), 1);
  s.ids.push_back({"ls_swap", hswap});

  auto prod = [&](const Term& a, const Term& b) { return b2("br", h2, a, b); };
  LinComb lsym(prod(prod(x(1), x(2)), x(3)));
  lsym.add(prod(x(1), prod(x(2), x(3))), -1);
  lsym.add(prod(x(2), prod(x(1), x(3))), 1);
  lsym.add(prod(prod(x(2), x(1)), x(3)), -1);
  s.ids.push_back({"left_sym", lsym});
  return s;
}

FiniteAlgebra componentwise_algebra(int d) {
  if (d < 1) throw std::invalid_argument("componentwise_algebra: dim < 1");
  FiniteAlgebra a;
  a.name = "k" + std::to_string(d);
  a.sig = one_binary("assoc_sig", "m");
  for (int i = 0; i < d; ++i) a.basis.push_back("e" + std::to_string(i));
  auto& m = a.tensors[OpKey{"m", 0}];
  for (int i = 0; i < d; ++i) m[{i, i}] = elem_unit(i);
  validate_algebra(a);
  return a;
}

LinearOperator coordinate_projection(const std::string& name, const std::vector<int>& keep) {
  LinearOperator t;
  t.name = name;
  t.mat.assign(keep.size(), std::vector<Rational>(keep.size(), 0));
  for (size_t i = 0; i < keep.size(); ++i)
    if (keep[i]) t.mat[i][i] = 1;
  return t;
}

LinearOperator scalar_operator(const std::string& name, int dim, const Rational& c) {
  LinearOperator t;
  t.name = name;
  t.mat.assign(size_t(dim), std::vector<Rational>(size_t(dim), 0));
  for (int i = 0; i < dim; ++i) t.mat[size_t(i)][size_t(i)] = c;
  return t;
}

FiniteAlgebra truncated_polynomials(int n) {
  if (n < 1) throw std::invalid_argument("truncated_polynomials: n < 1");
  FiniteAlgebra a;
  a.name = "poly" + std::to_string(n);
  a.sig = one_binary("assoc_sig", "m");
  a.basis.push_back("one");
  for (int k = 1; k < n; ++k) a.basis.push_back("x" + std::to_string(k));
  auto& m = a.tensors[OpKey{"m", 0}];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i + j < n) m[{i, j}] = elem_unit(i + j);
  validate_algebra(a);
  return a;
}

LinearOperator truncated_integration(int n) {
  LinearOperator t;
  t.name = "integrate";
  t.algebra = "poly" + std::to_string(n);
  t.mat.assign(size_t(n), std::vector<Rational>(size_t(n), 0));
  for (int k = 0; k + 1 < n; ++k) t.mat[size_t(k)][size_t(k + 1)] = Rational(1, k + 1);
  return t;
}

FiniteAlgebra sl2_algebra() {
  FiniteAlgebra a;
  a.name = "sl2";
  a.sig = one_binary("lie_sig", "br");
  a.basis = {"e", "h", "f"};
  auto& br = a.tensors[OpKey{"br", 0}];
  br[{1, 0}] = Elem{{0, Rational(2)}};   // [h,e] = 2e
  br[{0, 1}] = Elem{{0, Rational(-2)}};
  br[{1, 2}] = Elem{{2, Rational(-2)}};  // [h,f] = -2f
  br[{2, 1}] = Elem{{2, Rational(2)}};
  br[{0, 2}] = Elem{{1, Rational(1)}};   // [e,f] = h
  br[{2, 0}] = Elem{{1, Rational(-1)}};
  validate_algebra(a);
  return a;
}

LinearOperator sl2_neg_projection() {
  LinearOperator t;
  t.name = "negproj";
  t.algebra = "sl2";
  t.mat.assign(3, std::vector<Rational>(3, 0));
  t.mat[0][0] = -1;
  t.mat[1][1] = -1;
  return t;
}

FiniteAlgebra lie2d_algebra() {
  FiniteAlgebra a;
  a.name = "lie2d";
  a.sig = one_binary("lie_sig", "br");
  a.basis = {"x", "y"};
  auto& br = a.tensors[OpKey{"br", 0}];
  br[{0, 1}] = elem_unit(1);
  br[{1, 0}] = Elem{{1, Rational(-1)}};
  validate_algebra(a);
  return a;
}

LinearOperator lie2d_rb() {
  LinearOperator t;
  t.name = "shift";
  t.algebra = "lie2d";
  t.mat.assign(2, std::vector<Rational>(2, 0));
  t.mat[0][1] = 1;
  return t;
}

FiniteAlgebra jet2_algebra() {
  FiniteAlgebra a;
  a.name = "jet2";
  a.sig = Signature("comder_sig", Mode::plain,
                    {OpDecl{"m", 2, UnaryFlag::none}, OpDecl{"d", 1, UnaryFlag::derivation}});
  a.basis = {"one", "t", "t2"};
  auto& m = a.tensors[OpKey{"m", 0}];
  auto set = [&](int i, int j, int k) {
    m[{i, j}] = elem_unit(k);
    m[{j, i}] = elem_unit(k);
  };
  for (int i = 0; i < 3; ++i) set(0, i, i);
  set(1, 1, 2); // t*t = t2; anything of degree >= 3 truncates to 0
  auto& d = a.tensors[OpKey{"d", 0}];
  d[{1}] = elem_unit(2);
  validate_algebra(a);
  return a;
}

LinearOperator jet2_tsq() {
  LinearOperator t;
  t.name = "tsq";
  t.algebra = "jet2";
  t.mat.assign(3, std::vector<Rational>(3, 0));
  t.mat[0][2] = 1; // 1 -> t2
  return t;
}

FiniteAlgebra nilpotent_derivation_example() {
  FiniteAlgebra a;
  a.name = "nilder2";
  a.sig = Signature("comder_sig", Mode::plain,
                    {OpDecl{"m", 2, UnaryFlag::none}, OpDecl{"d", 1, UnaryFlag::derivation}});
  a.basis = {"x", "y"};
  a.tensors[OpKey{"m", 0}]; // zero multiplication
  auto& d = a.tensors[OpKey{"d", 0}];
  d[{0}] = elem_unit(1);
  validate_algebra(a);
  return a;
}

} // namespace ditri
