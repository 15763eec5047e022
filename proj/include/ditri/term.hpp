#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ditri/signature.hpp"

namespace ditri {

/* Set of leaf labels, bit k-1 <-> label k.  Labels are capped at 63; every
   computation here lives at degree <= 6. */
using VarSet = std::uint64_t;

/* Planar rooted tree.  Leaves carry positive integer labels; internal nodes an
   op name and (in decorated signatures) a subset of argument positions.
   Immutable; copies share structure. */
class Term {
 public:
  static Term leaf(int index);
  static Term node(const std::string& op, Mask dec, std::vector<Term> kids);
  static Term node(const std::string& op, std::vector<Term> kids);

  bool is_leaf() const { return p_->leaf > 0; }
  int leaf_index() const { return p_->leaf; }
  const std::string& op() const { return p_->op; }
  Mask dec() const { return p_->dec; }
  const std::vector<Term>& kids() const { return p_->kids; }

  int leaf_count() const { return p_->nleaves; }
  VarSet var_set() const { return p_->vars; }

  /* Leaf labels in left-to-right planar order. */
  void collect_leaves(std::vector<int>& out) const;

  /* Leaf multiset is exactly {1..leaf_count()}. */
  bool is_multilinear() const;

  /* Label at the planar-leftmost leaf. */
  int leftmost_leaf() const;

  bool operator==(const Term& o) const { return compare(*this, o) == 0; }
  bool operator!=(const Term& o) const { return compare(*this, o) != 0; }
  bool operator<(const Term& o) const { return compare(*this, o) < 0; }

  /* Total order: leaf count, then leaves before nodes, leaves by label, nodes by
     op name, then decoration (lexicographic on element sequences), then children. */
  static int compare(const Term& a, const Term& b);

 private:
  struct Node {
    int leaf = 0;
    std::string op;
    Mask dec = 0;
    std::vector<Term> kids;
    int nleaves = 0;
    VarSet vars = 0;
  };
  explicit Term(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
};

/* Checks op names, arities and decorations against sig. */
bool term_valid(const Term& t, const Signature& sig, std::string* why = nullptr);

/* Add offset to every leaf label. */
Term shift_leaves(const Term& t, int offset);

/* Operadic grafting: outer must be multilinear of degree n = inners.size();
   leaf i is replaced by inners[i-1] with labels shifted by m_1+..+m_{i-1}
   (m_j = leaf count of inners[j-1]). */
Term graft(const Term& outer, const std::vector<Term>& inners);

/* Leaf relabeling by a bijection of {1..n}: leaf i becomes perm[i-1].
   act(act(T,s),t) = act(T, t o s) where (t o s)(i) = t(s(i)). */
Term act(const Term& t, const std::vector<int>& perm);

/* All multilinear degree-n monomials over sig, canonically ordered.  Refuses
   signatures with arity-1 ops (the span would be infinite-dimensional). */
std::vector<Term> enumerate_multilinear(const Signature& sig, int n);

/* All bijections of {1..n} in lexicographic order. */
std::vector<std::vector<int>> all_permutations(int n);

} // namespace ditri
