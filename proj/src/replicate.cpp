#include "ditri/replicate.hpp"

#include <stdexcept>

namespace ditri {

namespace {

Term decorate_rec(const Term& v, VarSet active) {
  if (v.is_leaf()) return v;
  Mask pos = 0;
  std::vector<Term> kids;
  kids.reserve(v.kids().size());
  for (size_t i = 0; i < v.kids().size(); ++i) {
    const Term& kid = v.kids()[i];
    VarSet hit = kid.var_set() & active;
    if (hit) {
      pos |= Mask(1) << i;
      kids.push_back(decorate_rec(kid, hit));
    } else {
      kids.push_back(decorate_rec(kid, VarSet(1) << (kid.leftmost_leaf() - 1)));
    }
  }
  return Term::node(v.op(), pos, kids);
}

} // namespace

Term decorate_term(const Term& u, Mask h, Mode mode) {
  if (mode == Mode::plain) throw std::invalid_argument("decorate_term: mode must be di or tri");
  if (!u.is_multilinear()) throw std::invalid_argument("decorate_term: term is not multilinear");
  int n = u.leaf_count();
  if (h == 0 || !mask_subset_of(h, full_mask(n)))
    throw std::invalid_argument("decorate_term: H is not a nonempty subset of the variables");
  if (mode == Mode::di && mask_size(h) != 1)
    throw std::invalid_argument("decorate_term: mode di admits only singleton H");
  return decorate_rec(u, VarSet(h));
}

LinComb decorate_term(const LinComb& u, Mask h, Mode mode) {
  LinComb out;
  for (const auto& [t, c] : u.terms()) out.add(decorate_term(t, h, mode), c);
  return out;
}

Term erase_decorations(const Term& t) {
  if (t.is_leaf()) return t;
  std::vector<Term> kids;
  kids.reserve(t.kids().size());
  for (const Term& k : t.kids()) kids.push_back(erase_decorations(k));
  return Term::node(t.op(), kids);
}

LinComb erase_decorations(const LinComb& l) {
  LinComb out;
  for (const auto& [t, c] : l.terms()) out.add(erase_decorations(t), c);
  return out;
}

namespace {

void require_replicable(const Signature& sig, const char* who) {
  if (sig.mode() != Mode::plain)
    throw std::invalid_argument(std::string(who) + ": signature is already decorated");
  if (!sig.unary_all_flagged())
    throw std::invalid_argument(std::string(who) +
                                ": arity-1 ops must be flagged derivation or endomorphism");
}

} // namespace

IdentitySystem replicate_identities(const IdentitySystem& s, Mode mode) {
  require_replicable(s.sig, "replicate_identities");
  IdentitySystem out;
  out.sig = s.sig.decorated(mode, s.sig.name() + "_" + mode_str(mode));
  out.name = s.name + "_" + mode_str(mode);

  for (const Identity& id : s.ids) {
    int n = id.lhs.degree();
    for (Mask h : mode_subsets(mode, n))
      out.ids.push_back(Identity{id.name + "_h" + mask_digits(h), decorate_term(id.lhs, h, mode)});
  }

  // Vanishing inner-decoration differences: outside the outer decoration the
  // inner decoration is immaterial.
  for (const OpDecl& f : s.sig.ops()) {
    for (Mask h : mode_subsets(mode, f.arity)) {
      for (int i = 1; i <= f.arity; ++i) {
        if (mask_contains(h, i)) continue;
        for (const OpDecl& g : s.sig.ops()) {
          std::vector<Mask> inner = mode_subsets(mode, g.arity);
          for (size_t k = 1; k < inner.size(); ++k) {
            auto plug = [&](Mask s_dec) {
              std::vector<Term> args;
              for (int l = i; l <= i + g.arity - 1; ++l) args.push_back(Term::leaf(l));
              Term gt = Term::node(g.name, s_dec, args);
              std::vector<Term> kids;
              for (int j = 1; j <= f.arity; ++j) {
                if (j < i) kids.push_back(Term::leaf(j));
                else if (j == i) kids.push_back(gt);
                else kids.push_back(Term::leaf(j + g.arity - 1));
              }
              return Term::node(f.name, h, kids);
            };
            LinComb diff(plug(inner[0]));
            diff.add(plug(inner[k]), Rational(-1));
            out.ids.push_back(Identity{"zero_" + f.name + "_h" + mask_digits(h) + "_p" +
                                           std::to_string(i) + "_" + g.name + "_s" +
                                           mask_digits(inner[0]) + "_s" + mask_digits(inner[k]),
                                       diff});
          }
        }
      }
    }
  }
  return out;
}

Morphism replicate_morphism(const Morphism& m, Mode mode) {
  require_replicable(m.source, "replicate_morphism");
  require_replicable(m.target, "replicate_morphism");
  Morphism out;
  out.name = m.name + "_" + mode_str(mode);
  out.source = m.source.decorated(mode, m.source.name() + "_" + mode_str(mode));
  out.target = m.target.decorated(mode, m.target.name() + "_" + mode_str(mode));
  for (const OpDecl& f : m.source.ops()) {
    const LinComb* img = m.image(f.name, 0);
    if (!img) throw std::invalid_argument("replicate_morphism: no image for op " + f.name);
    for (Mask h : mode_subsets(mode, f.arity))
      out.images.push_back({{f.name, h}, decorate_term(*img, h, mode)});
  }
  return out;
}

} // namespace ditri
