#include "ditri/corolla.hpp"

#include <map>
#include <stdexcept>

namespace ditri {

std::string corolla_str(const Corolla& c) {
  return "e^(" + std::to_string(c.arity) + ")_" + mask_str(c.subset);
}

static void check_corolla(const Corolla& c, const char* who) {
  if (c.arity < 1 || c.subset == 0 || !mask_subset_of(c.subset, full_mask(c.arity)))
    throw std::invalid_argument(std::string(who) + ": malformed corolla " + corolla_str(c));
}

Corolla corolla_compose(const Corolla& outer, const std::vector<Corolla>& inners) {
  check_corolla(outer, "corolla_compose");
  if ((int)inners.size() != outer.arity)
    throw std::invalid_argument("corolla_compose: arity mismatch");
  int n = 0;
  std::vector<std::pair<int, Mask>> parts;
  parts.reserve(inners.size());
  for (const Corolla& c : inners) {
    check_corolla(c, "corolla_compose");
    parts.emplace_back(c.arity, c.subset);
    n += c.arity;
  }
  return Corolla{n, compose_subsets(outer.subset, parts)};
}

Corolla corolla_act(const Corolla& c, const std::vector<int>& perm) {
  check_corolla(c, "corolla_act");
  if ((int)perm.size() != c.arity)
    throw std::invalid_argument("corolla_act: permutation size mismatch");
  Mask out = 0;
  for (int k : mask_elements(c.subset)) {
    int img = perm[k - 1];
    if (img < 1 || img > c.arity) throw std::invalid_argument("corolla_act: not a permutation");
    out |= Mask(1) << (img - 1);
  }
  if (mask_size(out) != mask_size(c.subset))
    throw std::invalid_argument("corolla_act: not a permutation");
  return Corolla{c.arity, out};
}

Signature comtrias_carrier() {
  return Signature("ct", Mode::plain,
                   {OpDecl{kArrowOp, 2, UnaryFlag::none}, OpDecl{kPerpOp, 2, UnaryFlag::none}});
}

Term representative_monomial(const Corolla& c) {
  check_corolla(c, "representative_monomial");
  // Right-nested perp cluster over H ascending.
  std::vector<int> in = mask_elements(c.subset);
  Term cluster = Term::leaf(in.back());
  for (int k = (int)in.size() - 2; k >= 0; --k)
    cluster = Term::node(kPerpOp, {Term::leaf(in[k]), cluster});
  // Arrow-prefix the complement, ascending, right-nested.
  std::vector<int> out;
  for (int k = 1; k <= c.arity; ++k)
    if (!mask_contains(c.subset, k)) out.push_back(k);
  Term t = cluster;
  for (int k = (int)out.size() - 1; k >= 0; --k)
    t = Term::node(kArrowOp, {Term::leaf(out[k]), t});
  return t;
}

namespace {

// Evaluate over planar leaf positions; the caller relabels afterwards.
Corolla eval_planar(const Term& t) {
  if (t.is_leaf()) return Corolla{1, 1};
  Corolla left = eval_planar(t.kids()[0]);
  Corolla right = eval_planar(t.kids()[1]);
  Mask sub;
  if (t.op() == kArrowOp) sub = mask_of({2});
  else if (t.op() == kPerpOp) sub = mask_of({1, 2});
  else throw std::invalid_argument("corolla_from_monomial: unknown op " + t.op());
  return corolla_compose(Corolla{2, sub}, {left, right});
}

} // namespace

Corolla corolla_from_monomial(const Term& t) {
  if (!t.is_multilinear())
    throw std::invalid_argument("corolla_from_monomial: term is not multilinear");
  Corolla planar = eval_planar(t);
  std::vector<int> leaves;
  t.collect_leaves(leaves);
  return corolla_act(planar, leaves);
}

namespace {

Term A(const Term& a, const Term& b) { return Term::node(kArrowOp, {a, b}); }
Term P(const Term& a, const Term& b) { return Term::node(kPerpOp, {a, b}); }
Term x(int i) { return Term::leaf(i); }

struct AxiomPair {
  std::string name;
  Term lhs, rhs;
};

std::vector<AxiomPair> axiom_pairs() {
  return {
      {"arrow_assoc", A(A(x(1), x(2)), x(3)), A(x(1), A(x(2), x(3)))},
      {"arrow_left_sym", A(A(x(1), x(2)), x(3)), A(A(x(2), x(1)), x(3))},
      {"perp_absorb_left", A(P(x(1), x(2)), x(3)), A(A(x(1), x(2)), x(3))},
      {"arrow_into_perp", A(x(1), P(x(2), x(3))), P(A(x(1), x(2)), x(3))},
      {"perp_assoc", P(P(x(1), x(2)), x(3)), P(x(1), P(x(2), x(3)))},
  };
}

Identity from_pair(const AxiomPair& p) {
  LinComb l(p.lhs);
  l.add(p.rhs, Rational(-1));
  return Identity{p.name, l};
}

} // namespace

IdentitySystem comtrias_axioms() {
  IdentitySystem s;
  s.name = "comtrias";
  s.sig = comtrias_carrier();
  for (const AxiomPair& p : axiom_pairs()) s.ids.push_back(from_pair(p));
  return s;
}

IdentitySystem comtrias_axioms_full() {
  IdentitySystem s = comtrias_axioms();
  s.name = "comtrias_full";
  LinComb comm(P(x(1), x(2)));
  comm.add(P(x(2), x(1)), Rational(-1));
  s.ids.push_back(Identity{"perp_comm", comm});
  return s;
}

IdentitySystem perm_arrow_axioms() {
  IdentitySystem s;
  s.name = "perm_arrow";
  s.sig = Signature("perm_sig", Mode::plain, {OpDecl{kArrowOp, 2, UnaryFlag::none}});
  for (const AxiomPair& p : axiom_pairs()) {
    if (p.name == "arrow_assoc" || p.name == "arrow_left_sym") s.ids.push_back(from_pair(p));
  }
  return s;
}

namespace {

std::vector<Corolla> corollas_of_arity(int n) {
  std::vector<Corolla> out;
  for (Mask h : subsets_of(n)) out.push_back(Corolla{n, h});
  return out;
}

} // namespace

PresentationReport verify_comtrias_presentation(int max_arity) {
  PresentationReport rep;
  if (max_arity < 3) throw std::invalid_argument("verify_comtrias_presentation: max_arity < 3");

  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    if (rep.failures.size() < 32) rep.failures.push_back(msg);
  };

  // (a) The displayed identities hold in the corolla model: under every leaf
  // relabeling of the base instance, and under grafting of representative
  // monomials of arbitrary corollas (identity labeling; total arity bounded).
  for (const AxiomPair& ax : axiom_pairs()) {
    for (const std::vector<int>& perm : all_permutations(3)) {
      Corolla l = corolla_from_monomial(act(ax.lhs, perm));
      Corolla r = corolla_from_monomial(act(ax.rhs, perm));
      ++rep.axiom_checks;
      if (!(l == r))
        fail(ax.name + " fails under relabeling: " + corolla_str(l) + " != " + corolla_str(r));
    }
    for (int n1 = 1; n1 <= max_arity - 2; ++n1)
      for (int n2 = 1; n1 + n2 <= max_arity - 1; ++n2)
        for (int n3 = 1; n1 + n2 + n3 <= max_arity; ++n3)
          for (const Corolla& c1 : corollas_of_arity(n1))
            for (const Corolla& c2 : corollas_of_arity(n2))
              for (const Corolla& c3 : corollas_of_arity(n3)) {
                std::vector<Term> reps = {representative_monomial(c1),
                                           representative_monomial(c2),
                                           representative_monomial(c3)};
                Corolla l = corolla_from_monomial(graft(ax.lhs, reps));
                Corolla r = corolla_from_monomial(graft(ax.rhs, reps));
                ++rep.axiom_checks;
                if (!(l == r))
                  fail(ax.name + " fails under substitution (" + corolla_str(c1) + "," +
                       corolla_str(c2) + "," + corolla_str(c3) + ")");
              }
  }

  // (b) Sum-exchange bookkeeping: the tuples (K,H_1..H_m) are partitioned by
  // their composite subset, every subset of the composite arity is hit, and
  // each fiber has size prod over untouched blocks of (2^{n_j}-1).
  for (int m = 1; m <= 3; ++m) {
    std::vector<int> shape(m, 1);
    for (;;) {
      int n = 0;
      for (int v : shape) n += v;
      std::map<Mask, long> fiber;
      for (Mask k : subsets_of(m)) {
        std::vector<std::vector<Mask>> choices(m);
        for (int i = 0; i < m; ++i) choices[i] = subsets_of(shape[i]);
        std::vector<size_t> idx(m, 0);
        for (;;) {
          std::vector<std::pair<int, Mask>> parts;
          for (int i = 0; i < m; ++i) parts.emplace_back(shape[i], choices[i][idx[i]]);
          ++fiber[compose_subsets(k, parts)];
          ++rep.lemma_tuples;
          int p = m - 1;
          while (p >= 0 && ++idx[p] == choices[p].size()) idx[p--] = 0;
          if (p < 0) break;
        }
      }
      for (Mask h : subsets_of(n)) {
        long expect = 1;
        int off = 0;
        for (int i = 0; i < m; ++i) {
          Mask block = full_mask(shape[i]) << off;
          if ((h & block) == 0) expect *= (1L << shape[i]) - 1;
          off += shape[i];
        }
        auto it = fiber.find(h);
        long got = it == fiber.end() ? 0 : it->second;
        if (got != expect)
          fail("fiber size mismatch at n=" + std::to_string(n) + " H=" + mask_str(h) + ": " +
               std::to_string(got) + " != " + std::to_string(expect));
      }
      long total = 0;
      for (auto& [h, c] : fiber) total += c;
      long expect_total = 0; // recount to confirm the fibers exhaust the tuple set
      {
        long per_k = 1;
        for (int i = 0; i < m; ++i) per_k *= (1L << shape[i]) - 1;
        expect_total = ((1L << m) - 1) * per_k;
      }
      if (total != expect_total)
        fail("fiber total mismatch at m=" + std::to_string(m));

      int p = m - 1;
      while (p >= 0 && ++shape[p] > 3) shape[p--] = 1;
      if (p < 0) break;
    }
  }
  return rep;
}

} // namespace ditri
