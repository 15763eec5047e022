#include "ditri/split.hpp"

#include <algorithm>
#include <stdexcept>

#include "ditri/lincomb.hpp"

namespace ditri {

std::string split_mode_str(SplitMode m) { return m == SplitMode::pre ? "pre" : "post"; }

Mode split_target_mode(SplitMode m) { return m == SplitMode::pre ? Mode::di : Mode::tri; }

namespace {

/* Nonempty subsets of a variable set, as masks over the same labels. */
std::vector<Mask> varset_subsets(VarSet vars, bool singletons_only) {
  std::vector<int> xs;
  for (int k = 1; VarSet(vars) >> (k - 1); ++k)
    if ((vars >> (k - 1)) & 1) xs.push_back(k);
  std::vector<Mask> out;
  if (singletons_only) {
    for (int x : xs) out.push_back(Mask(1) << (x - 1));
    return out;
  }
  for (Mask pick = 1; pick < (Mask(1) << xs.size()); ++pick) {
    Mask h = 0;
    for (size_t i = 0; i < xs.size(); ++i)
      if ((pick >> i) & 1) h |= Mask(1) << (xs[i] - 1);
    out.push_back(h);
  }
  std::sort(out.begin(), out.end(), mask_lex_less);
  return out;
}

struct Splitter {
  SplitMode mode;
  std::map<Term, std::map<Mask, LinComb>> memo;

  const std::map<Mask, LinComb>& split(const Term& u) {
    auto it = memo.find(u);
    if (it != memo.end()) return it->second;
    std::map<Mask, LinComb> out;
    if (u.is_leaf()) {
      out[Mask(1) << (u.leaf_index() - 1)] = LinComb(u);
      return memo.emplace(u, std::move(out)).first->second;
    }
    const int m = int(u.kids().size());
    std::vector<const std::map<Mask, LinComb>*> sub(m);
    std::vector<LinComb> sub_total(m);
    std::vector<Mask> sub_vars(m);
    for (int i = 0; i < m; ++i) {
      sub[i] = &split(u.kids()[i]);
      sub_vars[i] = Mask(u.kids()[i].var_set());
      for (const auto& [h, c] : *sub[i]) sub_total[i].add(c);
    }
    for (Mask h : varset_subsets(u.var_set(), mode == SplitMode::pre)) {
      Mask pos = 0;
      std::vector<LinComb> args(m);
      for (int i = 0; i < m; ++i) {
        Mask hit = h & sub_vars[i];
        if (hit) {
          pos |= Mask(1) << i;
          args[i] = sub[i]->at(hit);
        } else {
          args[i] = sub_total[i];
        }
      }
      std::vector<Term> slots;
      for (int i = 1; i <= m; ++i) slots.push_back(Term::leaf(i));
      out[h] = substitute_slots(Term::node(u.op(), pos, slots), args);
    }
    return memo.emplace(u, std::move(out)).first->second;
  }
};

bool any_decorated(const Term& t) {
  if (t.is_leaf()) return false;
  if (t.dec() != 0) return true;
  for (const Term& k : t.kids())
    if (any_decorated(k)) return true;
  return false;
}

void check_splittable(const LinComb& u, const char* who) {
  if (u.is_zero()) throw std::invalid_argument(std::string(who) + ": zero element");
  int n = u.degree();
  if (n > 12) throw std::invalid_argument(std::string(who) + ": degree beyond supported bound");
  if (!u.multilinear_of_degree(n))
    throw std::invalid_argument(std::string(who) + ": element is not multilinear");
  for (const auto& [t, c] : u.terms())
    if (any_decorated(t))
      throw std::invalid_argument(std::string(who) + ": input is already decorated");
}

} // namespace

std::map<Mask, LinComb> split_coefficients(const LinComb& u, SplitMode mode) {
  check_splittable(u, "split_coefficients");
  const int n = u.degree();
  Splitter sp{mode, {}};
  std::map<Mask, LinComb> out;
  for (Mask h : varset_subsets(full_mask(n), mode == SplitMode::pre)) out[h] = LinComb();
  for (const auto& [t, c] : u.terms())
    for (const auto& [h, comp] : sp.split(t)) out[h].add(comp, c);
  return out;
}

IdentitySystem split_identities(const IdentitySystem& s, SplitMode mode) {
  if (s.sig.mode() != Mode::plain)
    throw std::invalid_argument("split_identities: signature is already decorated");
  if (!s.sig.unary_all_flagged())
    throw std::invalid_argument(
        "split_identities: arity-1 ops must be flagged derivation or endomorphism");
  IdentitySystem out;
  out.sig = s.sig.decorated(split_target_mode(mode), s.sig.name() + "_" + split_mode_str(mode));
  out.name = s.name + "_" + split_mode_str(mode);
  for (const Identity& id : s.ids) {
    for (auto& [h, comp] : split_coefficients(id.lhs, mode)) {
      if (comp.is_zero()) continue;
      out.ids.push_back(Identity{id.name + "_h" + mask_digits(h), comp});
    }
  }
  return out;
}

Morphism split_morphism(const Morphism& m, SplitMode mode) {
  if (m.source.mode() != Mode::plain || m.target.mode() != Mode::plain)
    throw std::invalid_argument("split_morphism: signatures must be plain");
  if (!m.source.unary_all_flagged() || !m.target.unary_all_flagged())
    throw std::invalid_argument(
        "split_morphism: arity-1 ops must be flagged derivation or endomorphism");
  Morphism out;
  out.name = m.name + "_" + split_mode_str(mode);
  out.source = m.source.decorated(split_target_mode(mode), m.source.name() + "_" + split_mode_str(mode));
  out.target = m.target.decorated(split_target_mode(mode), m.target.name() + "_" + split_mode_str(mode));
  for (const OpDecl& f : m.source.ops()) {
    const LinComb* img = m.image(f.name, 0);
    if (!img) throw std::invalid_argument("split_morphism: no image for op " + f.name);
    auto parts = split_coefficients(*img, mode);
    for (Mask h : out.source.decorations(f.arity)) out.images.push_back({{f.name, h}, parts.at(h)});
  }
  return out;
}

LinComb sum_components(const std::map<Mask, LinComb>& parts) {
  LinComb out;
  for (const auto& [h, c] : parts) out.add(c);
  return out;
}

namespace {

LinComb expand_rec(const Term& t, Mode target) {
  if (t.is_leaf()) return LinComb(t);
  const int m = int(t.kids().size());
  std::vector<LinComb> args;
  for (const Term& k : t.kids()) args.push_back(expand_rec(k, target));
  std::vector<Term> slots;
  for (int i = 1; i <= m; ++i) slots.push_back(Term::leaf(i));
  LinComb out;
  for (Mask k : mode_subsets(target, m))
    out.add(substitute_slots(Term::node(t.op(), k, slots), args));
  return out;
}

} // namespace

LinComb expand_decorations(const LinComb& u, SplitMode mode) {
  check_splittable(u, "expand_decorations");
  LinComb out;
  for (const auto& [t, c] : u.terms()) out.add(expand_rec(t, split_target_mode(mode)), c);
  return out;
}

} // namespace ditri
