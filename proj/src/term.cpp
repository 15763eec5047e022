#include "ditri/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace ditri {

Term Term::leaf(int index) {
  if (index < 1 || index > 63) throw std::invalid_argument("leaf label out of range [1,63]");
  auto n = std::make_shared<Node>();
  n->leaf = index;
  n->nleaves = 1;
  n->vars = VarSet(1) << (index - 1);
  return Term(std::move(n));
}

Term Term::node(const std::string& op, Mask dec, std::vector<Term> kids) {
  if (kids.empty()) throw std::invalid_argument("node needs at least one child");
  auto n = std::make_shared<Node>();
  n->op = op;
  n->dec = dec;
  n->nleaves = 0;
  for (const auto& k : kids) {
    n->nleaves += k.leaf_count();
    n->vars |= k.var_set();
  }
  n->kids = std::move(kids);
  return Term(std::move(n));
}

Term Term::node(const std::string& op, std::vector<Term> kids) {
  return node(op, 0, std::move(kids));
}

void Term::collect_leaves(std::vector<int>& out) const {
  if (is_leaf()) {
    out.push_back(p_->leaf);
    return;
  }
  for (const auto& k : p_->kids) k.collect_leaves(out);
}

bool Term::is_multilinear() const {
  const int n = leaf_count();
  if (n > 63) return false;
  /* n leaves whose label set is exactly {1..n}: each label occurs once */
  return p_->vars == (VarSet(1) << n) - 1;
}

int Term::leftmost_leaf() const {
  const Term* t = this;
  while (!t->is_leaf()) t = &t->kids().front();
  return t->leaf_index();
}

int Term::compare(const Term& a, const Term& b) {
  if (a.p_ == b.p_) return 0;
  if (a.leaf_count() != b.leaf_count()) return a.leaf_count() < b.leaf_count() ? -1 : 1;
  if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? -1 : 1;
  if (a.is_leaf()) {
    if (a.leaf_index() != b.leaf_index()) return a.leaf_index() < b.leaf_index() ? -1 : 1;
    return 0;
  }
  if (int c = a.op().compare(b.op()); c != 0) return c < 0 ? -1 : 1;
  if (a.dec() != b.dec()) return mask_lex_less(a.dec(), b.dec()) ? -1 : 1;
  if (a.kids().size() != b.kids().size()) return a.kids().size() < b.kids().size() ? -1 : 1;
  for (size_t i = 0; i < a.kids().size(); ++i)
    if (int c = compare(a.kids()[i], b.kids()[i]); c != 0) return c;
  return 0;
}

bool term_valid(const Term& t, const Signature& sig, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (t.is_leaf()) return true;
  const OpDecl* op = sig.find(t.op());
  if (!op) return fail("unknown op " + t.op());
  if (int(t.kids().size()) != op->arity)
    return fail("op " + t.op() + " expects " + std::to_string(op->arity) + " arguments");
  if (!sig.valid_decoration(op->arity, t.dec()))
    return fail("bad decoration " + mask_str(t.dec()) + " on " + t.op());
  for (const auto& k : t.kids())
    if (!term_valid(k, sig, why)) return false;
  return true;
}

Term shift_leaves(const Term& t, int offset) {
  if (offset == 0) return t;
  if (t.is_leaf()) return Term::leaf(t.leaf_index() + offset);
  std::vector<Term> kids;
  kids.reserve(t.kids().size());
  for (const auto& k : t.kids()) kids.push_back(shift_leaves(k, offset));
  return Term::node(t.op(), t.dec(), std::move(kids));
}

namespace {

Term graft_rec(const Term& t, const std::vector<Term>& shifted) {
  if (t.is_leaf()) return shifted[size_t(t.leaf_index() - 1)];
  std::vector<Term> kids;
  kids.reserve(t.kids().size());
  for (const auto& k : t.kids()) kids.push_back(graft_rec(k, shifted));
  return Term::node(t.op(), t.dec(), std::move(kids));
}

} // namespace

Term graft(const Term& outer, const std::vector<Term>& inners) {
  const int n = outer.leaf_count();
  if (!outer.is_multilinear()) throw std::invalid_argument("graft: outer term not multilinear");
  if (int(inners.size()) != n)
    throw std::invalid_argument("graft: expected " + std::to_string(n) + " inner terms");
  std::vector<Term> shifted;
  shifted.reserve(inners.size());
  int offset = 0;
  for (const auto& in : inners) {
    shifted.push_back(shift_leaves(in, offset));
    offset += in.leaf_count();
  }
  return graft_rec(outer, shifted);
}

Term act(const Term& t, const std::vector<int>& perm) {
  const int n = t.leaf_count();
  if (!t.is_multilinear()) throw std::invalid_argument("act: term not multilinear");
  if (int(perm.size()) != n) throw std::invalid_argument("act: permutation size mismatch");
  std::vector<bool> seen(size_t(n), false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[size_t(v - 1)])
      throw std::invalid_argument("act: not a bijection of {1..n}");
    seen[size_t(v - 1)] = true;
  }
  std::vector<Term> images;
  images.reserve(size_t(n));
  for (int i = 1; i <= n; ++i) images.push_back(Term::leaf(perm[size_t(i - 1)]));
  /* relabel only: same as graft_rec with unshifted leaf images */
  struct R {
    static Term go(const Term& t, const std::vector<Term>& im) {
      if (t.is_leaf()) return im[size_t(t.leaf_index() - 1)];
      std::vector<Term> kids;
      kids.reserve(t.kids().size());
      for (const auto& k : t.kids()) kids.push_back(go(k, im));
      return Term::node(t.op(), t.dec(), std::move(kids));
    }
  };
  return R::go(t, images);
}

namespace {

/* Multilinear monomials with leaf set S (as a sorted label vector). */
void enum_terms(const Signature& sig, const std::vector<int>& labels, std::vector<Term>& out) {
  if (labels.size() == 1) {
    out.push_back(Term::leaf(labels[0]));
    return;
  }
  const int n = int(labels.size());
  for (const auto& op : sig.ops()) {
    const int k = op.arity;
    if (k < 2 || k > n) continue;
    /* ordered set partitions of labels into k nonempty blocks */
    std::vector<int> assign(size_t(n), 0);
    while (true) {
      std::vector<std::vector<int>> blocks(static_cast<size_t>(k));
      for (int i = 0; i < n; ++i) blocks[size_t(assign[size_t(i)])].push_back(labels[size_t(i)]);
      bool ok = true;
      for (const auto& b : blocks)
        if (b.empty()) ok = false;
      if (ok) {
        std::vector<std::vector<Term>> sub(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) enum_terms(sig, blocks[size_t(j)], sub[size_t(j)]);
        std::vector<size_t> idx(size_t(k), 0);
        while (true) {
          std::vector<Term> kids;
          kids.reserve(size_t(k));
          for (int j = 0; j < k; ++j) kids.push_back(sub[size_t(j)][idx[size_t(j)]]);
          for (Mask dec : sig.decorations(k)) out.push_back(Term::node(op.name, dec, kids));
          int j = k - 1;
          while (j >= 0 && ++idx[size_t(j)] == sub[size_t(j)].size()) {
            idx[size_t(j)] = 0;
            --j;
          }
          if (j < 0) break;
        }
      }
      int i = n - 1;
      while (i >= 0 && ++assign[size_t(i)] == k) {
        assign[size_t(i)] = 0;
        --i;
      }
      if (i < 0) break;
    }
  }
}

} // namespace

std::vector<Term> enumerate_multilinear(const Signature& sig, int n) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  if (sig.has_unary())
    throw std::invalid_argument(
        "enumerate_multilinear: signature has arity-1 ops; the multilinear span is "
        "infinite-dimensional");
  std::vector<int> labels(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) labels[size_t(i)] = i + 1;
  std::vector<Term> out;
  enum_terms(sig, labels, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[size_t(i)] = i + 1;
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

} // namespace ditri
