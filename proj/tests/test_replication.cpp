#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "common.hpp"
#include "ditri/builtins.hpp"
#include "ditri/consequence.hpp"
#include "ditri/constructions.hpp"
#include "ditri/corolla.hpp"
#include "ditri/replicate.hpp"

using namespace ditri;
using tt::d2;
using tt::n2;
using tt::x;

namespace {

Signature br_sig() { return Signature("lie_sig", Mode::plain, {OpDecl{"br", 2}}); }

bool contains_monic(const IdentitySystem& s, const LinComb& l) {
  LinComb a = l.monic(), b = (-l).monic();
  for (const Identity& id : s.ids)
    if (id.lhs.monic() == a || id.lhs.monic() == b) return true;
  return false;
}

/* Every decoration in the tree is a singleton. */
bool singletons_only(const Term& t) {
  if (t.is_leaf()) return true;
  if (mask_size(t.dec()) != 1) return false;
  for (const Term& k : t.kids())
    if (!singletons_only(k)) return false;
  return true;
}

Elem tensor_elem(const Elem& c, const Elem& a, int dim_a) {
  Elem out;
  for (const auto& [i, ci] : c)
    for (const auto& [j, aj] : a) out[i * dim_a + j] = ci * aj;
  return out;
}

/* dim-2 scratch algebra with no identities at all. */
FiniteAlgebra scratch2() {
  FiniteAlgebra a;
  a.name = "scratch2";
  a.sig = Signature("one_op", Mode::plain, {OpDecl{"m", 2}});
  a.basis = {"u", "v"};
  auto& m = a.tensors[OpKey{"m", 0}];
  m[{0, 0}] = elem_unit(1);
  m[{0, 1}] = elem_add(elem_scale(elem_unit(0), Rational(1, 2)), elem_unit(1));
  m[{1, 0}] = elem_unit(0);
  validate_algebra(a);
  return a;
}

} // namespace

TEST_CASE("leaf decoration marks the path to the active variables") {
  Term u = n2("br", x(1), n2("br", x(2), x(3)));

  CHECK(decorate_term(n2("br", x(1), x(2)), mask_of({1, 2}), Mode::tri) ==
        d2("br", mask_of({1, 2}), x(1), x(2)));

  // Active x2 lives in the right subtree at local position 1.
  CHECK(decorate_term(u, mask_of({2}), Mode::tri) ==
        d2("br", mask_of({2}), x(1), d2("br", mask_of({1}), x(2), x(3))));

  // x1 and x3 touch both slots; x3 is local position 2 inside br(x2,x3).
  CHECK(decorate_term(u, mask_of({1, 3}), Mode::tri) ==
        d2("br", mask_of({1, 2}), x(1), d2("br", mask_of({2}), x(2), x(3))));

  CHECK_THROWS(decorate_term(u, mask_of({1, 2}), Mode::di));
  CHECK_THROWS(decorate_term(u, 0, Mode::tri));
  CHECK_THROWS(decorate_term(u, mask_of({4}), Mode::tri));
}

TEST_CASE("erasing decorations is a retraction of decorating") {
  Term dec = d2("br", mask_of({2}), x(1), d2("br", mask_of({1}), x(2), x(3)));
  CHECK(erase_decorations(dec) == n2("br", x(1), n2("br", x(2), x(3))));

  for (int n = 2; n <= 4; ++n)
    for (const Term& u : enumerate_multilinear(br_sig(), n))
      for (Mask h : subsets_of(n))
        CHECK(erase_decorations(decorate_term(u, h, Mode::tri)) == u);

  Term f = n2("br", x(1), x(2));
  LinComb two = erase_decorations(LinComb(decorate_term(f, mask_of({1}), Mode::di)) +
                                  LinComb(decorate_term(f, mask_of({2}), Mode::di)));
  CHECK(two == LinComb(f, 2));
}

TEST_CASE("replicating the bracket gives the one-sided exchange and Leibniz laws") {
  IdentitySystem di = replicate_identities(lie_system(), Mode::di);
  CHECK(di.sig.mode() == Mode::di);

  // Degree 2: br^{1}(x1,x2) + br^{2}(x2,x1) = 0, both decorations of anti.
  LinComb exch(d2("br", mask_of({1}), x(1), x(2)));
  exch.add(d2("br", mask_of({2}), x(2), x(1)), 1);
  CHECK(contains_monic(di, exch));

  for (const Identity& id : di.ids)
    for (const auto& [t, c] : id.lhs.terms()) CHECK(singletons_only(t));

  // Degree 3 is the right Leibniz law once br^{2} is eliminated.
  IdentitySystem leib;
  leib.name = "leibniz_di";
  leib.sig = di.sig;
  leib.ids.push_back({"ld_swap", exch});
  LinComb ll(d2("br", 1, d2("br", 1, x(1), x(2)), x(3)));
  ll.add(d2("br", 1, x(1), d2("br", 1, x(2), x(3))), -1);
  ll.add(d2("br", 1, d2("br", 1, x(1), x(3)), x(2)), -1);
  leib.ids.push_back({"ld_leib", ll});
  CHECK(systems_equivalent(di, leib, 3).equivalent);
}

TEST_CASE("the replicated bracket system matches its packaged presentation") {
  IdentitySystem tri = replicate_identities(lie_system(), Mode::tri);
  EquivReport rep = systems_equivalent(tri, trilie_system(), 3);
  CHECK(rep.equivalent);
  for (const EquivDetail& d : rep.details) CHECK(d.member);
}

TEST_CASE("inner decorations outside the emphasized slots are immaterial") {
  IdentitySystem bare;
  bare.name = "bare";
  bare.sig = Signature("fg", Mode::plain, {OpDecl{"f", 2}, OpDecl{"g", 2}});

  IdentitySystem rep = replicate_identities(bare, Mode::di);
  CHECK(!rep.ids.empty());
  LinComb want(d2("f", mask_of({1}), x(1), d2("g", mask_of({1}), x(2), x(3))));
  want.add(d2("f", mask_of({1}), x(1), d2("g", mask_of({2}), x(2), x(3))), -1);
  CHECK(contains_monic(rep, want));

  // All emitted differences evaluate to zero on every replicated instance.
  FiniteAlgebra b = scratch2();
  b.sig = bare.sig;
  auto table = b.tensors.extract(OpKey{"m", 0}).mapped();
  b.tensors.clear();
  b.tensors[OpKey{"f", 0}] = table;
  b.tensors[OpKey{"g", 0}] = table;
  validate_algebra(b);
  FiniteAlgebra t = tensor_replicated(c2_algebra(), b, Mode::di);
  CHECK(check_identities(t, rep).pass);
}

TEST_CASE("unary operations replicate only when flagged") {
  IdentitySystem bad;
  bad.name = "bad";
  bad.sig = Signature("ud", Mode::plain, {OpDecl{"m", 2}, OpDecl{"d", 1}});
  CHECK_THROWS(replicate_identities(bad, Mode::di));

  IdentitySystem der;
  der.name = "der";
  der.sig = Signature("ud", Mode::plain, {OpDecl{"m", 2}, OpDecl{"d", 1, UnaryFlag::derivation}});
  LinComb leib(tt::n1("d", n2("m", x(1), x(2))));
  leib.add(n2("m", tt::n1("d", x(1)), x(2)), -1);
  leib.add(n2("m", x(1), tt::n1("d", x(2))), -1);
  der.ids.push_back({"leib", leib});

  IdentitySystem rep = replicate_identities(der, Mode::tri);
  int d_nodes = 0;
  for (const Identity& id : rep.ids)
    for (const auto& [t, c] : id.lhs.terms()) {
      std::vector<Term> stack{t};
      while (!stack.empty()) {
        Term cur = stack.back();
        stack.pop_back();
        if (cur.is_leaf()) continue;
        if (cur.op() == "d") {
          CHECK(cur.dec() == 1);
          ++d_nodes;
        }
        for (const Term& k : cur.kids()) stack.push_back(k);
      }
    }
  CHECK(d_nodes > 0);
}

TEST_CASE("decorated morphisms transport generator images") {
  Morphism comm;
  comm.name = "commutator";
  comm.source = br_sig();
  comm.target = Signature("assoc_sig", Mode::plain, {OpDecl{"m", 2}});
  LinComb img(n2("m", x(1), x(2)));
  img.add(n2("m", x(2), x(1)), -1);
  comm.images.push_back({{"br", 0}, img});
  validate_morphism(comm);

  Morphism di = replicate_morphism(comm, Mode::di);
  LinComb h1(d2("m", mask_of({1}), x(1), x(2)));
  h1.add(d2("m", mask_of({2}), x(2), x(1)), -1);
  CHECK(*di.image("br", mask_of({1})) == h1);
  LinComb h2(d2("m", mask_of({2}), x(1), x(2)));
  h2.add(d2("m", mask_of({1}), x(2), x(1)), -1);
  CHECK(*di.image("br", mask_of({2})) == h2);

  Morphism tri = replicate_morphism(comm, Mode::tri);
  LinComb h12(d2("m", mask_of({1, 2}), x(1), x(2)));
  h12.add(d2("m", mask_of({1, 2}), x(2), x(1)), -1);
  CHECK(*tri.image("br", mask_of({1, 2})) == h12);

  // Erasing after transport recovers the plain image.
  CHECK(erase_decorations(*tri.image("br", mask_of({1}))) == img);

  Morphism ident;
  ident.name = "ident";
  ident.source = comm.target;
  ident.target = comm.target;
  ident.images.push_back({{"m", 0}, LinComb(n2("m", x(1), x(2)))});
  Morphism ident_di = replicate_morphism(ident, Mode::di);
  CHECK(*ident_di.image("m", mask_of({1})) == LinComb(d2("m", mask_of({1}), x(1), x(2))));
  CHECK(*ident_di.image("m", mask_of({2})) == LinComb(d2("m", mask_of({2}), x(1), x(2))));
}

TEST_CASE("decorated monomials evaluate to corolla times value on pure tensors") {
  FiniteAlgebra c2 = c2_algebra();
  FiniteAlgebra a = scratch2();
  FiniteAlgebra prod = tensor_replicated(c2, a, Mode::tri);
  CHECK(prod.dim() == 4);

  for (int n = 2; n <= 3; ++n)
    for (const Term& u : enumerate_multilinear(a.sig, n))
      for (Mask h : subsets_of(n)) {
        Term uh = decorate_term(u, h, Mode::tri);
        Term rep = representative_monomial(Corolla{n, h});
        std::vector<int> pick(size_t(n), 0);
        for (;;) {
          std::vector<Elem> args, cargs, aargs;
          for (int i = 0; i < n; ++i) {
            int ci = pick[size_t(i)] / 2, aj = pick[size_t(i)] % 2;
            args.push_back(tensor_elem(elem_unit(ci), elem_unit(aj), 2));
            cargs.push_back(elem_unit(ci));
            aargs.push_back(elem_unit(aj));
          }
          Elem lhs = evaluate(prod, uh, args);
          Elem rhs = tensor_elem(evaluate(c2, rep, cargs), evaluate(a, u, aargs), 2);
          CHECK(lhs == rhs);

          size_t p = size_t(n);
          while (p > 0 && ++pick[p - 1] == 4) pick[--p] = 0;
          if (p == 0) break;
        }
      }

  // Degree 4, sampled slots, every H.
  FiniteAlgebra di_prod = tensor_replicated(c2, a, Mode::di);
  std::vector<Term> deg4 = enumerate_multilinear(a.sig, 4);
  for (size_t ui = 0; ui < deg4.size(); ui += 13)
    for (Mask h : subsets_of(4)) {
      Term uh = decorate_term(deg4[ui], h, Mode::tri);
      Term rep = representative_monomial(Corolla{4, h});
      std::vector<Elem> args, cargs, aargs;
      for (int i = 0; i < 4; ++i) {
        int ci = (i + int(ui)) % 2, aj = (i / 2 + int(ui)) % 2;
        args.push_back(tensor_elem(elem_unit(ci), elem_unit(aj), 2));
        cargs.push_back(elem_unit(ci));
        aargs.push_back(elem_unit(aj));
      }
      CHECK(evaluate(prod, uh, args) ==
            tensor_elem(evaluate(c2, rep, cargs), evaluate(a, deg4[ui], aargs), 2));
      if (mask_size(h) == 1)
        CHECK(evaluate(di_prod, decorate_term(deg4[ui], h, Mode::di), args) ==
              tensor_elem(evaluate(c2, rep, cargs), evaluate(a, deg4[ui], aargs), 2));
    }
}
