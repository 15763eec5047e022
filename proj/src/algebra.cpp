#include "ditri/algebra.hpp"

#include <stdexcept>

namespace ditri {

Elem elem_unit(int i) { return Elem{{i, Rational(1)}}; }

Elem elem_scale(const Elem& e, const Rational& c) {
  Elem out;
  if (c == 0) return out;
  for (const auto& [i, x] : e) out[i] = x * c;
  return out;
}

Elem elem_add(const Elem& a, const Elem& b) {
  Elem out = a;
  for (const auto& [i, x] : b) {
    out[i] += x;
    if (out[i] == 0) out.erase(i);
  }
  return out;
}

bool elem_zero(const Elem& e) { return e.empty(); }

const Elem* FiniteAlgebra::tuple_value(const OpKey& k, const std::vector<int>& tuple) const {
  auto it = tensors.find(k);
  if (it == tensors.end()) return nullptr;
  auto jt = it->second.find(tuple);
  return jt == it->second.end() ? nullptr : &jt->second;
}

Elem FiniteAlgebra::apply(const OpKey& k, const std::vector<Elem>& args) const {
  Elem out;
  for (const Elem& a : args)
    if (a.empty()) return out;
  const size_t n = args.size();
  std::vector<Elem::const_iterator> it(n);
  for (size_t i = 0; i < n; ++i) it[i] = args[i].begin();
  for (;;) {
    Rational c = 1;
    std::vector<int> tuple(n);
    for (size_t i = 0; i < n; ++i) {
      tuple[i] = it[i]->first;
      c *= it[i]->second;
    }
    if (const Elem* v = tuple_value(k, tuple))
      for (const auto& [j, x] : *v) {
        out[j] += c * x;
        if (out[j] == 0) out.erase(j);
      }
    size_t p = n;
    while (p > 0) {
      if (++it[p - 1] != args[p - 1].end()) break;
      it[p - 1] = args[p - 1].begin();
      --p;
    }
    if (p == 0) break;
  }
  return out;
}

std::string FiniteAlgebra::elem_str(const Elem& e) const {
  if (e.empty()) return "0";
  std::string s;
  for (const auto& [i, c] : e) {
    if (!s.empty()) s += " + ";
    if (c == 1) s += basis.at(size_t(i));
    else s += rat_str(c) + "*" + basis.at(size_t(i));
  }
  return s;
}

void validate_algebra(const FiniteAlgebra& a) {
  if (a.basis.empty()) throw std::invalid_argument("algebra " + a.name + ": empty basis");
  for (size_t i = 0; i < a.basis.size(); ++i)
    for (size_t j = i + 1; j < a.basis.size(); ++j)
      if (a.basis[i] == a.basis[j])
        throw std::invalid_argument("algebra " + a.name + ": duplicate basis name " + a.basis[i]);
  for (const auto& [key, tensor] : a.tensors) {
    const OpDecl* op = a.sig.find(key.name);
    if (!op) throw std::invalid_argument("algebra " + a.name + ": unknown op " + key.name);
    if (!a.sig.valid_decoration(op->arity, key.dec))
      throw std::invalid_argument("algebra " + a.name + ": bad decoration on " + key.name);
    for (const auto& [tuple, val] : tensor) {
      if (int(tuple.size()) != op->arity)
        throw std::invalid_argument("algebra " + a.name + ": tuple arity mismatch on " + key.name);
      for (int i : tuple)
        if (i < 0 || i >= a.dim())
          throw std::invalid_argument("algebra " + a.name + ": tuple index out of range");
      for (const auto& [j, c] : val)
        if (j < 0 || j >= a.dim() || c == 0)
          throw std::invalid_argument("algebra " + a.name + ": malformed value");
    }
  }
  // Flagged unary ops are promises, not table entries: enforce them over the
  // whole basis so later theorem checks may rely on the flag alone.
  for (const OpDecl& u : a.sig.ops()) {
    if (u.arity != 1 || u.flag == UnaryFlag::none) continue;
    for (Mask udec : a.sig.decorations(1)) {
      OpKey ukey{u.name, udec};
      for (const OpDecl& f : a.sig.ops()) {
        if (f.arity < 2) continue;
        for (Mask fdec : a.sig.decorations(f.arity)) {
          OpKey fkey{f.name, fdec};
          std::vector<int> tuple(size_t(f.arity), 0);
          for (;;) {
            std::vector<Elem> args;
            args.reserve(tuple.size());
            for (int i : tuple) args.push_back(elem_unit(i));
            Elem lhs = a.apply(ukey, {a.apply(fkey, args)});
            Elem rhs;
            if (u.flag == UnaryFlag::derivation) {
              for (size_t i = 0; i < tuple.size(); ++i) {
                std::vector<Elem> mod = args;
                mod[i] = a.apply(ukey, {args[i]});
                for (const auto& [j, c] : a.apply(fkey, mod)) {
                  rhs[j] += c;
                  if (rhs[j] == 0) rhs.erase(j);
                }
              }
            } else {
              std::vector<Elem> mod = args;
              for (Elem& e : mod) e = a.apply(ukey, {e});
              rhs = a.apply(fkey, mod);
            }
            if (lhs != rhs) {
              std::string names;
              for (int i : tuple) names += (names.empty() ? "" : ",") + a.basis[size_t(i)];
              throw std::invalid_argument(
                  "algebra " + a.name + ": op " + u.name + " violates its " +
                  (u.flag == UnaryFlag::derivation ? std::string("derivation")
                                                   : std::string("endomorphism")) +
                  " flag on " + f.name + "(" + names + ")");
            }
            size_t p = tuple.size();
            while (p > 0) {
              if (++tuple[p - 1] < a.dim()) break;
              tuple[p - 1] = 0;
              --p;
            }
            if (p == 0) break;
          }
        }
      }
    }
  }
}

Elem LinearOperator::apply(const Elem& e) const {
  Elem out;
  for (const auto& [i, c] : e) {
    const std::vector<Rational>& row = mat.at(size_t(i));
    for (size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 0) continue;
      out[int(j)] += c * row[j];
      if (out[int(j)] == 0) out.erase(int(j));
    }
  }
  return out;
}

void validate_operator(const FiniteAlgebra& a, const LinearOperator& t) {
  if (t.dim() != a.dim())
    throw std::invalid_argument("operator " + t.name + ": size mismatch with " + a.name);
  for (const auto& row : t.mat)
    if (int(row.size()) != a.dim())
      throw std::invalid_argument("operator " + t.name + ": ragged matrix");
}

Elem evaluate(const FiniteAlgebra& a, const Term& t, const std::vector<Elem>& args) {
  if (t.is_leaf()) {
    int j = t.leaf_index();
    if (j < 1 || j > int(args.size()))
      throw std::invalid_argument("evaluate: leaf index " + std::to_string(j) + " out of range");
    return args[size_t(j - 1)];
  }
  std::vector<Elem> kid_vals;
  kid_vals.reserve(t.kids().size());
  for (const Term& k : t.kids()) kid_vals.push_back(evaluate(a, k, args));
  return a.apply(OpKey{t.op(), t.dec()}, kid_vals);
}

Elem evaluate(const FiniteAlgebra& a, const LinComb& l, const std::vector<Elem>& args) {
  Elem out;
  for (const auto& [t, c] : l.terms()) out = elem_add(out, elem_scale(evaluate(a, t, args), c));
  return out;
}

namespace {

bool next_tuple(std::vector<int>& tuple, int dim) {
  size_t p = tuple.size();
  while (p > 0) {
    if (++tuple[p - 1] < dim) return true;
    tuple[--p] = 0;
  }
  return false;
}

std::string tuple_str(const FiniteAlgebra& a, const std::vector<int>& tuple) {
  std::string s = "(";
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ",";
    s += a.basis[size_t(tuple[i])];
  }
  return s + ")";
}

} // namespace

CheckWitness check_identities(const FiniteAlgebra& a, const IdentitySystem& s) {
  for (const Identity& id : s.ids) {
    const int n = id.lhs.degree();
    std::vector<int> tuple(size_t(n), 0);
    do {
      std::vector<Elem> args;
      args.reserve(size_t(n));
      for (int i : tuple) args.push_back(elem_unit(i));
      Elem v = evaluate(a, id.lhs, args);
      if (!elem_zero(v)) return CheckWitness{false, id.name, tuple, v};
    } while (next_tuple(tuple, a.dim()));
  }
  return CheckWitness{};
}

std::string operator_kind_str(OperatorKind k) {
  switch (k) {
    case OperatorKind::averaging: return "averaging";
    case OperatorKind::hom_averaging: return "hom-averaging";
    case OperatorKind::rota_baxter: return "rota-baxter";
  }
  return "?";
}

namespace {

Rational rat_pow(const Rational& x, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

} // namespace

OperatorWitness check_operator(const FiniteAlgebra& a, const LinearOperator& t, OperatorKind kind,
                               const Rational& weight) {
  validate_operator(a, t);
  for (const OpDecl& op : a.sig.ops()) {
    for (Mask dec : a.sig.decorations(op.arity)) {
      const OpKey key{op.name, dec};
      const int n = op.arity;
      std::vector<int> tuple(size_t(n), 0);
      do {
        std::vector<Elem> units, timgs;
        for (int i : tuple) {
          units.push_back(elem_unit(i));
          timgs.push_back(t.apply(elem_unit(i)));
        }
        Elem lhs = a.apply(key, timgs);
        auto mixed = [&](Mask h) {
          std::vector<Elem> args(static_cast<size_t>(n));
          for (int i = 1; i <= n; ++i)
            args[size_t(i - 1)] = mask_contains(h, i) ? units[size_t(i - 1)] : timgs[size_t(i - 1)];
          return args;
        };
        auto report = [&](const std::string& what) {
          return OperatorWitness{false, operator_kind_str(kind) + " fails for " + t.name + " at " +
                                            op.name + (dec ? "^" + mask_str(dec) : "") + " " +
                                            what + " on " + tuple_str(a, tuple)};
        };
        if (kind == OperatorKind::averaging) {
          for (int i = 1; i <= n; ++i) {
            Elem rhs = t.apply(a.apply(key, mixed(Mask(1) << (i - 1))));
            if (lhs != rhs) return report("slot " + std::to_string(i));
          }
        } else if (kind == OperatorKind::hom_averaging) {
          for (Mask h : subsets_of(n)) {
            Elem rhs = t.apply(a.apply(key, mixed(h)));
            if (lhs != rhs) return report("subset " + mask_str(h));
          }
        } else {
          Elem rhs;
          for (Mask h : subsets_of(n))
            rhs = elem_add(rhs, elem_scale(t.apply(a.apply(key, mixed(h))),
                                           rat_pow(weight, mask_size(h) - 1)));
          if (lhs != rhs) return report("weight " + rat_str(weight));
        }
      } while (next_tuple(tuple, a.dim()));
    }
  }
  return OperatorWitness{};
}

} // namespace ditri
