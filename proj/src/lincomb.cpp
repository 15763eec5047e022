#include "ditri/lincomb.hpp"

#include <stdexcept>

namespace ditri {

LinComb& LinComb::add(const Term& t, const Rational& c) {
  if (c == 0) return *this;
  auto [it, inserted] = c_.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
  return *this;
}

LinComb& LinComb::add(const LinComb& o, const Rational& c) {
  for (const auto& [t, x] : o.c_) add(t, x * c);
  return *this;
}

LinComb LinComb::operator+(const LinComb& o) const {
  LinComb r = *this;
  r.add(o, 1);
  return r;
}

LinComb LinComb::operator-(const LinComb& o) const {
  LinComb r = *this;
  r.add(o, -1);
  return r;
}

LinComb LinComb::operator-() const { return *this * Rational(-1); }

LinComb LinComb::operator*(const Rational& c) const {
  LinComb r;
  if (c == 0) return r;
  for (const auto& [t, x] : c_) r.c_.emplace(t, x * c);
  return r;
}

Rational LinComb::coeff(const Term& t) const {
  auto it = c_.find(t);
  return it == c_.end() ? Rational(0) : it->second;
}

int LinComb::degree() const {
  if (c_.empty()) throw std::logic_error("degree of zero LinComb");
  int n = c_.begin()->first.leaf_count();
  for (const auto& [t, x] : c_) {
    (void)x;
    if (t.leaf_count() != n) throw std::logic_error("LinComb not degree-homogeneous");
  }
  return n;
}

bool LinComb::multilinear_of_degree(int n) const {
  for (const auto& [t, x] : c_) {
    (void)x;
    if (t.leaf_count() != n || !t.is_multilinear()) return false;
  }
  return true;
}

LinComb LinComb::monic() const {
  if (c_.empty()) return *this;
  return *this * (Rational(1) / c_.begin()->second);
}

LinComb normalize(const std::vector<std::pair<Term, Rational>>& entries) {
  LinComb l;
  for (const auto& [t, c] : entries) l.add(t, c);
  return l;
}

namespace {

LinComb subst_rec(const Term& t, const std::vector<LinComb>& args) {
  if (t.is_leaf()) {
    size_t j = size_t(t.leaf_index());
    if (j < 1 || j > args.size()) throw std::invalid_argument("substitute_slots: slot out of range");
    return args[j - 1];
  }
  std::vector<LinComb> sub;
  sub.reserve(t.kids().size());
  for (const auto& k : t.kids()) sub.push_back(subst_rec(k, args));
  /* multilinear expansion over children */
  LinComb out;
  std::vector<std::map<Term, Rational>::const_iterator> it, end;
  for (const auto& s : sub) {
    if (s.is_zero()) return out;
    it.push_back(s.terms().begin());
    end.push_back(s.terms().end());
  }
  while (true) {
    std::vector<Term> kids;
    Rational c(1);
    for (size_t j = 0; j < sub.size(); ++j) {
      kids.push_back(it[j]->first);
      c *= it[j]->second;
    }
    out.add(Term::node(t.op(), t.dec(), std::move(kids)), c);
    size_t j = sub.size();
    while (j > 0) {
      if (++it[j - 1] != end[j - 1]) break;
      it[j - 1] = sub[j - 1].terms().begin();
      --j;
    }
    if (j == 0) break;
  }
  return out;
}

} // namespace

LinComb substitute_slots(const Term& pattern, const std::vector<LinComb>& args) {
  if (!pattern.is_multilinear() || pattern.leaf_count() != int(args.size()))
    throw std::invalid_argument("substitute_slots: pattern must be multilinear of degree #args");
  return subst_rec(pattern, args);
}

LinComb substitute_slots(const LinComb& pattern, const std::vector<LinComb>& args) {
  LinComb out;
  for (const auto& [t, c] : pattern.terms())
    out.add(substitute_slots(t, args), c);
  return out;
}

LinComb graft(const LinComb& outer, const std::vector<Term>& inners) {
  LinComb out;
  for (const auto& [t, c] : outer.terms()) out.add(graft(t, inners), c);
  return out;
}

LinComb act(const LinComb& l, const std::vector<int>& perm) {
  LinComb out;
  for (const auto& [t, c] : l.terms()) out.add(act(t, perm), c);
  return out;
}

LinComb shift_leaves(const LinComb& l, int offset) {
  LinComb out;
  for (const auto& [t, c] : l.terms()) out.add(shift_leaves(t, offset), c);
  return out;
}

} // namespace ditri
