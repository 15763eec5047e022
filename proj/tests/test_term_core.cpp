#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <vector>

#include "common.hpp"
#include "ditri/lincomb.hpp"
#include "ditri/signature.hpp"
#include "ditri/term.hpp"

using namespace ditri;
using tt::n2;
using tt::x;

namespace {

Signature one_op() { return Signature("one_op", Mode::plain, {OpDecl{"m", 2}}); }

Signature two_ops() {
  return Signature("two_ops", Mode::plain, {OpDecl{"br", 2}, OpDecl{"m", 2}});
}

/* Monomial pool of every degree <= cap, flattened. */
std::vector<Term> pool(const Signature& sig, int cap) {
  std::vector<Term> out;
  for (int d = 1; d <= cap; ++d)
    for (const Term& t : enumerate_multilinear(sig, d)) out.push_back(t);
  return out;
}

} // namespace

TEST_CASE("grafting replaces labeled leaves with shifted copies") {
  Term f = n2("m", x(1), x(2));
  Term g = n2("br", x(1), x(2));

  CHECK(graft(f, {g, x(1)}) == n2("m", g, x(3)));

  // A bare leaf is the grafting unit.
  CHECK(graft(x(1), {f}) == f);
  CHECK(graft(x(1), {g}) == g);

  // Leaves are matched by label, not planar position: label 1 sits rightmost
  // here, and the shifts 0, 3, 5 follow the labels of the slots.
  Term outer = n2("m", n2("br", x(2), x(3)), x(1));
  Term in1 = n2("br", x(2), n2("br", x(1), x(3)));
  Term in2 = n2("br", x(2), x(1));
  Term in3 = n2("m", x(1), x(2));
  Term expect = n2("m", n2("br", n2("br", x(5), x(4)), n2("m", x(6), x(7))), in1);
  CHECK(graft(outer, {in1, in2, in3}) == expect);
}

TEST_CASE("grafting is associative in the operad sense") {
  Signature sig = one_op();
  std::vector<Term> small = pool(sig, 2);

  for (const Term& t : enumerate_multilinear(sig, 2))
    for (const Term& u1 : small)
      for (const Term& u2 : small) {
        std::vector<Term> us = {u1, u2};
        Term mid = graft(t, us);

        // One V per leaf of each U, flattened in label order of the composite.
        std::vector<size_t> picks(size_t(u1.leaf_count() + u2.leaf_count()), 0);
        for (;;) {
          std::vector<Term> flat;
          std::vector<std::vector<Term>> blocks(2);
          size_t at = 0;
          for (int i = 0; i < 2; ++i)
            for (int l = 0; l < us[size_t(i)].leaf_count(); ++l, ++at) {
              flat.push_back(small[picks[at]]);
              blocks[size_t(i)].push_back(small[picks[at]]);
            }
          Term lhs = graft(mid, flat);
          Term rhs = graft(t, {graft(u1, blocks[0]), graft(u2, blocks[1])});
          CHECK(lhs == rhs);
          CHECK(lhs.is_multilinear());

          size_t p = picks.size();
          while (p > 0 && ++picks[p - 1] == small.size()) picks[--p] = 0;
          if (p == 0 && picks[0] == 0) break;
        }
      }
}

TEST_CASE("leaf relabeling") {
  Term f = n2("m", x(1), x(2));
  CHECK(act(f, {2, 1}) == n2("m", x(2), x(1)));
  CHECK(act(f, {1, 2}) == f);

  // The 3-cycle 1->2->3->1.
  Term t = n2("m", n2("br", x(1), x(3)), x(2));
  CHECK(act(t, {2, 3, 1}) == n2("m", n2("br", x(2), x(1)), x(3)));

  // Composition convention: act(act(T,s),t) = act(T, t o s).
  std::vector<int> s = {2, 3, 1}, u = {3, 1, 2};
  std::vector<int> u_of_s(3);
  for (int i = 0; i < 3; ++i) u_of_s[size_t(i)] = u[size_t(s[size_t(i)] - 1)];
  for (const Term& w : enumerate_multilinear(one_op(), 3))
    CHECK(act(act(w, s), u) == act(w, u_of_s));
}

TEST_CASE("act distributes over graft up to the block relabeling") {
  Signature sig = one_op();
  std::vector<Term> small = pool(sig, 2);
  for (int n = 2; n <= 3; ++n) {
    std::vector<Term> outers = enumerate_multilinear(sig, n);
    for (const Term& t : outers)
      for (const std::vector<int>& sigma : all_permutations(n)) {
        // Fixed inner tuple: degrees cycle through the pool.
        std::vector<Term> us;
        for (int i = 0; i < n; ++i) us.push_back(small[size_t(i) % small.size()]);

        std::vector<int> off(size_t(n) + 1, 0);
        for (int i = 0; i < n; ++i)
          off[size_t(i) + 1] = off[size_t(i)] + us[size_t(i)].leaf_count();

        std::vector<Term> permuted;
        std::vector<int> poff(size_t(n) + 1, 0);
        for (int j = 0; j < n; ++j) {
          permuted.push_back(us[size_t(sigma[size_t(j)] - 1)]);
          poff[size_t(j) + 1] = poff[size_t(j)] + permuted.back().leaf_count();
        }

        std::vector<int> beta(size_t(off[size_t(n)]));
        for (int j = 0; j < n; ++j)
          for (int l = 1; l <= permuted[size_t(j)].leaf_count(); ++l)
            beta[size_t(poff[size_t(j)] + l - 1)] = off[size_t(sigma[size_t(j)] - 1)] + l;

        CHECK(graft(act(t, sigma), us) == act(graft(t, permuted), beta));
      }
  }
}

TEST_CASE("normalization merges equal monomials and drops zeros") {
  Term f = n2("m", x(1), x(2));
  Term g = n2("m", x(2), x(1));

  LinComb zero = LinComb(f) - LinComb(f);
  CHECK(zero.is_zero());

  LinComb five = LinComb(f, 2) + LinComb(f, 3);
  CHECK(five.size() == 1);
  CHECK(five.coeff(f) == 5);

  // Distinct labelings never merge.
  CHECK((LinComb(f) + LinComb(g)).size() == 2);

  LinComb messy = normalize({{f, Rational(1, 2)}, {g, 1}, {f, Rational(-1, 2)}, {g, -1}});
  CHECK(messy.is_zero());

  LinComb l = normalize({{g, 3}, {f, Rational(2, 7)}});
  std::vector<std::pair<Term, Rational>> back(l.terms().begin(), l.terms().end());
  CHECK(normalize(back) == l);
  CHECK(l.monic().coeff(f) == 1);
}

TEST_CASE("multilinear monomial counts") {
  CHECK(enumerate_multilinear(one_op(), 1).size() == 1);
  CHECK(enumerate_multilinear(one_op(), 2).size() == 2);
  // 2 planar shapes x 3! labelings.
  CHECK(enumerate_multilinear(one_op(), 3).size() == 12);
  // 5 shapes x 4! labelings.
  CHECK(enumerate_multilinear(one_op(), 4).size() == 120);
  // Two ops: 2 shapes x 6 labelings x 4 op assignments.
  CHECK(enumerate_multilinear(two_ops(), 3).size() == 48);

  for (const Term& t : enumerate_multilinear(two_ops(), 3)) {
    CHECK(t.is_multilinear());
    CHECK(t.leaf_count() == 3);
    CHECK(term_valid(t, two_ops()));
  }
}

TEST_CASE("structural validation") {
  Signature sig = one_op();
  std::string why;
  CHECK_FALSE(term_valid(Term::node("m", {x(1)}), sig, &why));
  CHECK_FALSE(term_valid(n2("q", x(1), x(2)), sig, &why));
  CHECK_FALSE(term_valid(Term::node("m", 1, {x(1), x(2)}), sig, &why));

  Signature tri = sig.decorated(Mode::tri, "one_op_tri");
  CHECK(term_valid(Term::node("m", 3, {x(1), x(2)}), tri));
  CHECK_FALSE(term_valid(n2("m", x(1), x(2)), tri, &why));

  Term repeated = n2("m", x(1), x(1));
  CHECK_FALSE(repeated.is_multilinear());
  CHECK(repeated.leaf_count() == 2);

  CHECK(Term::compare(x(1), n2("m", x(1), x(2))) < 0);
  CHECK(all_permutations(3).size() == 6);
  CHECK(all_permutations(3).front() == std::vector<int>{1, 2, 3});
}
