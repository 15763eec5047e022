#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <vector>

#include "common.hpp"
#include "ditri/builtins.hpp"
#include "ditri/consequence.hpp"
#include "ditri/constructions.hpp"
#include "ditri/corolla.hpp"
#include "ditri/split.hpp"

using namespace ditri;
using tt::d2;
using tt::n2;
using tt::x;

namespace {

const Mask k1 = mask_of({1}), k2 = mask_of({2}), k3 = mask_of({3});

bool singleton_decs(const Term& t) {
  if (t.is_leaf()) return true;
  if (mask_size(t.dec()) != 1) return false;
  for (const Term& k : t.kids())
    if (!singleton_decs(k)) return false;
  return true;
}

/* br^{1}(a,b) -> -br^{2}(b,a) over the di bracket signature. */
Morphism eliminate_left() {
  Morphism m;
  m.name = "elim";
  Signature di =
      Signature("lie_sig", Mode::plain, {OpDecl{"br", 2}}).decorated(Mode::di, "lie_sig_di");
  m.source = di;
  m.target = di;
  m.images.push_back({{"br", k1}, LinComb(d2("br", k2, x(2), x(1)), -1)});
  m.images.push_back({{"br", k2}, LinComb(d2("br", k2, x(1), x(2)))});
  return m;
}

/* One-dimensional model of both cluster products. */
FiniteAlgebra unit_coefficients() {
  FiniteAlgebra c;
  c.name = "k1";
  c.sig = comtrias_carrier();
  c.basis = {"e"};
  c.tensors[OpKey{kArrowOp, 0}][{0, 0}] = elem_unit(0);
  c.tensors[OpKey{kPerpOp, 0}][{0, 0}] = elem_unit(0);
  validate_algebra(c);
  return c;
}

Elem shift_elem(const Elem& e, int off) {
  Elem out;
  for (const auto& [i, c] : e) out[i + off] = c;
  return out;
}

} // namespace

TEST_CASE("splitting a generator lists its decorated copies") {
  LinComb br(n2("br", x(1), x(2)));

  auto post = split_coefficients(br, SplitMode::post);
  CHECK(post.size() == 3);
  CHECK(post.at(k1) == LinComb(d2("br", mask_of({1}), x(1), x(2))));
  CHECK(post.at(k2) == LinComb(d2("br", mask_of({2}), x(1), x(2))));
  CHECK(post.at(mask_of({1, 2})) == LinComb(d2("br", mask_of({1, 2}), x(1), x(2))));

  auto pre = split_coefficients(br, SplitMode::pre);
  CHECK(pre.size() == 2);
  CHECK(pre.count(mask_of({1, 2})) == 0);
}

TEST_CASE("splitting associativity yields the three half-product laws") {
  IdentitySystem pre = split_identities(as_system(), SplitMode::pre);
  CHECK(pre.ids.size() == 3);
  CHECK(pre.sig.mode() == Mode::di);
  for (const Identity& id : pre.ids)
    for (const auto& [t, c] : id.lhs.terms()) CHECK(singleton_decs(t));

  LinComb assoc = as_system().ids[0].lhs;
  auto comp = split_coefficients(assoc, SplitMode::pre);

  LinComb left(d2("m", k1, d2("m", k1, x(1), x(2)), x(3)));
  left.add(d2("m", k1, x(1), d2("m", k1, x(2), x(3))), -1);
  left.add(d2("m", k1, x(1), d2("m", k2, x(2), x(3))), -1);
  CHECK(comp.at(k1) == left);

  LinComb mid(d2("m", k1, d2("m", k2, x(1), x(2)), x(3)));
  mid.add(d2("m", k2, x(1), d2("m", k1, x(2), x(3))), -1);
  CHECK(comp.at(k2) == mid);

  LinComb right(d2("m", k2, d2("m", k1, x(1), x(2)), x(3)));
  right.add(d2("m", k2, d2("m", k2, x(1), x(2)), x(3)), 1);
  right.add(d2("m", k2, x(1), d2("m", k2, x(2), x(3))), -1);
  CHECK(comp.at(k3) == right);

  IdentitySystem post = split_identities(as_system(), SplitMode::post);
  CHECK(post.ids.size() == 7);
  for (const auto& [h, l] : split_coefficients(assoc, SplitMode::post)) CHECK(!l.is_zero());
}

TEST_CASE("the bracket splits to left symmetry") {
  IdentitySystem pre = split_identities(lie_system(), SplitMode::pre);
  CHECK(systems_equivalent(pre, leftsym_system(), 3).equivalent);

  // The emphasized-last coefficient of the Jacobi sum, with the left half
  // eliminated, is the left-symmetry of the product a*b = br^{2}(a,b).
  LinComb jac = lie_system().ids[1].lhs;
  LinComb h3 = split_coefficients(jac, SplitMode::pre).at(k3);
  LinComb eliminated = apply_morphism(eliminate_left(), h3);
  CHECK(eliminated == leftsym_system().ids[1].lhs);
}

TEST_CASE("splitting the nilpotency laws gives six identities") {
  IdentitySystem pre = split_identities(n3_system(), SplitMode::pre);
  CHECK(pre.ids.size() == 6);

  std::vector<LinComb> expect;
  expect.push_back(LinComb(d2("m", k1, d2("m", k1, x(1), x(2)), x(3))));
  expect.push_back(LinComb(d2("m", k1, d2("m", k2, x(1), x(2)), x(3))));
  LinComb l3(d2("m", k2, d2("m", k1, x(1), x(2)), x(3)));
  l3.add(d2("m", k2, d2("m", k2, x(1), x(2)), x(3)), 1);
  expect.push_back(l3);
  LinComb r1(d2("m", k1, x(1), d2("m", k1, x(2), x(3))));
  r1.add(d2("m", k1, x(1), d2("m", k2, x(2), x(3))), 1);
  expect.push_back(r1);
  expect.push_back(LinComb(d2("m", k2, x(1), d2("m", k1, x(2), x(3)))));
  expect.push_back(LinComb(d2("m", k2, x(1), d2("m", k2, x(2), x(3)))));

  for (const LinComb& e : expect) {
    bool found = false;
    for (const Identity& id : pre.ids)
      if (id.lhs.monic() == e.monic()) found = true;
    CHECK(found);
  }
}

TEST_CASE("split morphisms reproduce the triple-bracket components") {
  Morphism lts;
  lts.name = "lts";
  lts.source = Signature("lts_sig", Mode::plain, {OpDecl{"tr", 3}});
  lts.target = Signature("lie_sig", Mode::plain, {OpDecl{"br", 2}});
  lts.images.push_back(
      {{"tr", 0}, LinComb(n2("br", n2("br", x(1), x(2)), x(3)))});
  validate_morphism(lts);

  Morphism split = split_morphism(lts, SplitMode::pre);

  LinComb img3(d2("br", k2, d2("br", k1, x(1), x(2)), x(3)));
  img3.add(d2("br", k2, d2("br", k2, x(1), x(2)), x(3)), 1);
  CHECK(*split.image("tr", k3) == img3);
  CHECK(*split.image("tr", k1) == LinComb(d2("br", k1, d2("br", k1, x(1), x(2)), x(3))));

  // Eliminating the left half recovers the product spellings
  // (x1x2)x3 - (x2x1)x3 and x3(x2x1).
  Morphism elim = eliminate_left();
  LinComb prod3 = apply_morphism(elim, *split.image("tr", k3));
  LinComb want3(d2("br", k2, d2("br", k2, x(1), x(2)), x(3)));
  want3.add(d2("br", k2, d2("br", k2, x(2), x(1)), x(3)), -1);
  CHECK(prod3 == want3);
  CHECK(apply_morphism(elim, *split.image("tr", k1)) ==
        LinComb(d2("br", k2, x(3), d2("br", k2, x(2), x(1)))));

  // The identity generator map splits to the identity on components.
  Morphism ident;
  ident.name = "ident";
  ident.source = lts.target;
  ident.target = lts.target;
  ident.images.push_back({{"br", 0}, LinComb(n2("br", x(1), x(2)))});
  Morphism si = split_morphism(ident, SplitMode::post);
  for (Mask h : subsets_of(2))
    CHECK(*si.image("br", h) == LinComb(d2("br", h, x(1), x(2))));
}

TEST_CASE("unary operations pass through splitting undecorated") {
  IdentitySystem der;
  der.name = "der";
  der.sig = Signature("ud", Mode::plain, {OpDecl{"m", 2}, OpDecl{"d", 1, UnaryFlag::derivation}});
  LinComb leib(tt::n1("d", n2("m", x(1), x(2))));
  leib.add(n2("m", tt::n1("d", x(1)), x(2)), -1);
  leib.add(n2("m", x(1), tt::n1("d", x(2))), -1);
  der.ids.push_back({"leib", leib});

  auto comp = split_coefficients(leib, SplitMode::pre);
  LinComb want(tt::d1("d", d2("m", k1, x(1), x(2))));
  want.add(d2("m", k1, tt::d1("d", x(1)), x(2)), -1);
  want.add(d2("m", k1, x(1), tt::d1("d", x(2))), -1);
  CHECK(comp.at(k1) == want);

  // Degree-1 identities have the single component {1}.
  LinComb dd(tt::n1("d", tt::n1("d", x(1))));
  auto ddc = split_coefficients(dd, SplitMode::post);
  CHECK(ddc.size() == 1);
  CHECK(ddc.at(k1) == LinComb(tt::d1("d", tt::d1("d", x(1)))));
}

TEST_CASE("expansion reconstructs the sum of components") {
  std::vector<IdentitySystem> systems = {as_system(), lie_system(), perm_system(), n3_system()};
  for (const IdentitySystem& s : systems)
    for (const Identity& id : s.ids)
      for (SplitMode mode : {SplitMode::pre, SplitMode::post})
        CHECK(expand_decorations(id.lhs, mode) ==
              sum_components(split_coefficients(id.lhs, mode)));

  // Degree 4 over the bracket, including a non-monomial combination.
  Signature br = lie_system().sig;
  std::vector<Term> deg4 = enumerate_multilinear(br, 4);
  for (size_t i = 0; i < deg4.size(); i += 17)
    for (SplitMode mode : {SplitMode::pre, SplitMode::post}) {
      LinComb u(deg4[i]);
      u.add(deg4[(i + 31) % deg4.size()], Rational(1, 2));
      CHECK(expand_decorations(u, mode) == sum_components(split_coefficients(u, mode)));
    }
}

TEST_CASE("components match doubled evaluation") {
  // Post case on a 3-dimensional instance.
  FiniteAlgebra t = derived_from_operator(sl2_algebra(), sl2_neg_projection(),
                                          OperatorKind::rota_baxter, 1);
  CHECK(t.sig.mode() == Mode::tri);
  FiniteAlgebra th = hat_algebra(t);
  CHECK(th.dim() == 6);

  Signature plain = lie_system().sig;
  for (int n = 2; n <= 3; ++n)
    for (const Term& u : enumerate_multilinear(plain, n)) {
      auto comp = split_coefficients(LinComb(u), SplitMode::post);
      for (Mask h : subsets_of(n)) {
        std::vector<int> tuple(size_t(n), 0);
        for (;;) {
          std::vector<Elem> prim, plain_args;
          for (int i = 0; i < n; ++i) {
            int b = tuple[size_t(i)];
            plain_args.push_back(elem_unit(b));
            prim.push_back(elem_unit(mask_contains(h, i + 1) ? b + 3 : b));
          }
          // Primed inputs exactly at H: the hat evaluation is the primed copy
          // of the H-component evaluated in T.
          CHECK(evaluate(th, u, prim) == shift_elem(evaluate(t, comp.at(h), plain_args), 3));

          size_t p = size_t(n);
          while (p > 0 && ++tuple[p - 1] == 3) tuple[--p] = 0;
          if (p == 0) break;
        }
      }
      // All-unprimed inputs sum every component.
      std::vector<Elem> args = {elem_unit(0), elem_unit(1), elem_unit(2)};
      args.resize(size_t(n));
      Elem total;
      for (Mask h : subsets_of(n))
        total = elem_add(total, evaluate(t, comp.at(h), args));
      CHECK(evaluate(th, u, args) == total);
    }

  // Pre case: doubly primed products vanish.
  FiniteAlgebra t2 =
      derived_from_operator(lie2d_algebra(), lie2d_rb(), OperatorKind::rota_baxter, 0);
  CHECK(t2.sig.mode() == Mode::di);
  FiniteAlgebra t2h = hat_algebra(t2);
  OpKey br_key{"br", 0};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(elem_zero(t2h.apply(br_key, {elem_unit(i + 2), elem_unit(j + 2)})));
}

TEST_CASE("the one-dimensional coefficient algebra merges the components") {
  FiniteAlgebra k = unit_coefficients();

  FiniteAlgebra t = derived_from_operator(sl2_algebra(), sl2_neg_projection(),
                                          OperatorKind::rota_baxter, 1);
  FiniteAlgebra merged = box_product(k, t);
  CHECK(merged.dim() == t.dim());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Elem want;
      for (Mask h : subsets_of(2))
        want = elem_add(want, t.apply(OpKey{"br", h}, {elem_unit(i), elem_unit(j)}));
      CHECK(merged.apply(OpKey{"br", 0}, {elem_unit(i), elem_unit(j)}) == want);
    }

  FiniteAlgebra t2 =
      derived_from_operator(lie2d_algebra(), lie2d_rb(), OperatorKind::rota_baxter, 0);
  FiniteAlgebra merged2 = box_product(k, t2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Elem want = elem_add(t2.apply(OpKey{"br", k1}, {elem_unit(i), elem_unit(j)}),
                           t2.apply(OpKey{"br", k2}, {elem_unit(i), elem_unit(j)}));
      CHECK(merged2.apply(OpKey{"br", 0}, {elem_unit(i), elem_unit(j)}) == want);
    }
}
