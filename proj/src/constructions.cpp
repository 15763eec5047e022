#include "ditri/constructions.hpp"

#include <deque>
#include <stdexcept>

#include "ditri/builtins.hpp"
#include "ditri/corolla.hpp"

namespace ditri {

namespace {

std::vector<Rational> elem_row(const Elem& e, int dim) {
  std::vector<Rational> row(static_cast<size_t>(dim));
  for (const auto& [i, c] : e) row.at(size_t(i)) = c;
  return row;
}

bool next_tuple(std::vector<int>& tuple, int dim) {
  size_t p = tuple.size();
  while (p > 0) {
    if (++tuple[p - 1] < dim) return true;
    tuple[--p] = 0;
  }
  return false;
}

/* The coefficient algebra of a decoration mode: ops present, laws satisfied. */
void validate_coefficient_algebra(const FiniteAlgebra& c, Mode mode) {
  if (c.sig.mode() != Mode::plain)
    throw std::invalid_argument("coefficient algebra " + c.name + " must be plain");
  const OpDecl* arrow = c.sig.find(kArrowOp);
  if (!arrow || arrow->arity != 2)
    throw std::invalid_argument("coefficient algebra " + c.name + " needs a binary op arrow");
  IdentitySystem laws;
  if (mode == Mode::tri) {
    const OpDecl* perp = c.sig.find(kPerpOp);
    if (!perp || perp->arity != 2)
      throw std::invalid_argument("coefficient algebra " + c.name + " needs a binary op perp");
    laws = comtrias_axioms_full();
  } else if (mode == Mode::di) {
    laws = perm_arrow_axioms();
  } else {
    throw std::invalid_argument("coefficient algebra check needs mode di or tri");
  }
  CheckWitness w = check_identities(c, laws);
  if (!w.pass)
    throw std::invalid_argument("coefficient algebra " + c.name + " violates " + w.identity);
}

/* e_H evaluated on elements of the coefficient algebra, via the normal-form
   monomial of the corolla. */
Elem eval_corolla(const FiniteAlgebra& c, int n, Mask h, const std::vector<Elem>& args) {
  return evaluate(c, representative_monomial(Corolla{n, h}), args);
}

} // namespace

FiniteAlgebra tensor_replicated(const FiniteAlgebra& c, const FiniteAlgebra& a, Mode mode) {
  validate_coefficient_algebra(c, mode);
  if (a.sig.mode() != Mode::plain)
    throw std::invalid_argument("tensor_replicated: " + a.name + " must be plain");
  FiniteAlgebra out;
  out.name = "tensor_" + c.name + "_" + a.name + "_" + mode_str(mode);
  out.sig = a.sig.decorated(mode, a.sig.name() + "_" + mode_str(mode));
  for (const std::string& cb : c.basis)
    for (const std::string& ab : a.basis) out.basis.push_back(cb + "_" + ab);
  const int da = a.dim(), dim = c.dim() * da;
  for (const OpDecl& op : a.sig.ops()) {
    const int n = op.arity;
    for (Mask h : out.sig.decorations(n)) {
      auto& tensor = out.tensors[OpKey{op.name, h}];
      std::vector<int> tuple(size_t(n), 0);
      do {
        std::vector<Elem> cargs, aargs;
        for (int idx : tuple) {
          cargs.push_back(elem_unit(idx / da));
          aargs.push_back(elem_unit(idx % da));
        }
        Elem cv = eval_corolla(c, n, h, cargs);
        if (elem_zero(cv)) continue;
        Elem av = a.apply(OpKey{op.name, 0}, aargs);
        if (elem_zero(av)) continue;
        Elem val;
        for (const auto& [ci, cc] : cv)
          for (const auto& [ai, ac] : av) val[ci * da + ai] = cc * ac;
        tensor[tuple] = std::move(val);
      } while (next_tuple(tuple, dim));
    }
  }
  validate_algebra(out);
  return out;
}

FiniteAlgebra box_product(const FiniteAlgebra& c, const FiniteAlgebra& t) {
  if (t.sig.mode() == Mode::plain)
    throw std::invalid_argument("box_product: " + t.name + " must be decorated");
  validate_coefficient_algebra(c, t.sig.mode());
  FiniteAlgebra out;
  out.name = "box_" + c.name + "_" + t.name;
  out.sig = Signature(t.sig.name() + "_box", Mode::plain, t.sig.ops());
  for (const std::string& cb : c.basis)
    for (const std::string& tb : t.basis) out.basis.push_back(cb + "_" + tb);
  const int dt = t.dim(), dim = c.dim() * dt;
  for (const OpDecl& op : t.sig.ops()) {
    const int n = op.arity;
    auto& tensor = out.tensors[OpKey{op.name, 0}];
    std::vector<int> tuple(size_t(n), 0);
    do {
      std::vector<Elem> cargs, targs;
      for (int idx : tuple) {
        cargs.push_back(elem_unit(idx / dt));
        targs.push_back(elem_unit(idx % dt));
      }
      Elem val;
      for (Mask h : t.sig.decorations(n)) {
        Elem cv = eval_corolla(c, n, h, cargs);
        if (elem_zero(cv)) continue;
        Elem tv = t.apply(OpKey{op.name, h}, targs);
        if (elem_zero(tv)) continue;
        for (const auto& [ci, cc] : cv)
          for (const auto& [ti, tc] : tv) {
            int j = ci * dt + ti;
            val[j] += cc * tc;
            if (val[j] == 0) val.erase(j);
          }
      }
      if (!elem_zero(val)) tensor[tuple] = std::move(val);
    } while (next_tuple(tuple, dim));
  }
  validate_algebra(out);
  return out;
}

FiniteAlgebra hat_algebra(const FiniteAlgebra& t) {
  if (t.sig.mode() == Mode::plain)
    throw std::invalid_argument("hat_algebra: " + t.name + " must be decorated");
  FiniteAlgebra out;
  out.name = "hat_" + t.name;
  out.sig = Signature(t.sig.name() + "_hat", Mode::plain, t.sig.ops());
  const int dt = t.dim();
  for (const std::string& b : t.basis) out.basis.push_back(b);
  for (const std::string& b : t.basis) out.basis.push_back(b + "_p");
  for (const OpDecl& op : t.sig.ops()) {
    const int n = op.arity;
    auto& tensor = out.tensors[OpKey{op.name, 0}];
    std::vector<int> tuple(size_t(n), 0);
    do {
      Mask primed = 0;
      std::vector<Elem> payload;
      for (int i = 0; i < n; ++i) {
        if (tuple[size_t(i)] >= dt) primed |= Mask(1) << i;
        payload.push_back(elem_unit(tuple[size_t(i)] % dt));
      }
      Elem val;
      if (primed == 0) {
        for (Mask h : t.sig.decorations(n)) {
          Elem v = t.apply(OpKey{op.name, h}, payload);
          val = elem_add(val, v);
        }
      } else if (t.sig.valid_decoration(n, primed)) {
        Elem v = t.apply(OpKey{op.name, primed}, payload);
        for (const auto& [i, c] : v) val[i + dt] = c;
      }
      if (!elem_zero(val)) tensor[tuple] = std::move(val);
    } while (next_tuple(tuple, 2 * dt));
  }
  validate_algebra(out);
  return out;
}

Elem TildeResult::project_bar(const Elem& t_elem) const {
  std::vector<Rational> rem = t0.reduce(elem_row(t_elem, t0.ncols()));
  Elem out;
  for (size_t q = 0; q < bar_cols.size(); ++q)
    if (rem[size_t(bar_cols[q])] != 0) out[int(q)] = rem[size_t(bar_cols[q])];
  return out;
}

Elem TildeResult::include_t(const Elem& t_elem) const {
  Elem out;
  for (const auto& [i, c] : t_elem) out[int(bar_cols.size()) + i] = c;
  return out;
}

TildeResult tilde_algebra(const FiniteAlgebra& t) {
  if (t.sig.mode() == Mode::plain)
    throw std::invalid_argument("tilde_algebra: " + t.name + " must be decorated");
  const int dt = t.dim();
  TildeResult res;
  res.t0 = RowSpace(dt);

  // Seed: inner-decoration differences on basis tuples.
  std::deque<Elem> queue;
  auto push = [&](const Elem& v) {
    if (!elem_zero(v) && res.t0.insert(elem_row(v, dt), -1)) queue.push_back(v);
  };
  for (const OpDecl& op : t.sig.ops()) {
    std::vector<Mask> decs = t.sig.decorations(op.arity);
    if (decs.size() < 2) continue;
    std::vector<int> tuple(size_t(op.arity), 0);
    do {
      std::vector<Elem> args;
      for (int i : tuple) args.push_back(elem_unit(i));
      Elem v0 = t.apply(OpKey{op.name, decs[0]}, args);
      for (size_t k = 1; k < decs.size(); ++k) {
        Elem diff = elem_add(v0, elem_scale(t.apply(OpKey{op.name, decs[k]}, args), -1));
        push(diff);
      }
    } while (next_tuple(tuple, dt));
  }
  // Ideal closure: multiply span elements into every slot until stable.
  while (!queue.empty()) {
    Elem v = std::move(queue.front());
    queue.pop_front();
    for (const OpDecl& op : t.sig.ops()) {
      const int n = op.arity;
      for (Mask h : t.sig.decorations(n)) {
        for (int slot = 0; slot < n; ++slot) {
          std::vector<int> tuple(size_t(n - 1), 0);
          for (;;) {
            std::vector<Elem> args;
            size_t k = 0;
            for (int i = 0; i < n; ++i) {
              if (i == slot) args.push_back(v);
              else args.push_back(elem_unit(tuple[k++]));
            }
            push(t.apply(OpKey{op.name, h}, args));
            if (tuple.empty() || !next_tuple(tuple, dt)) break;
          }
        }
      }
    }
  }
  res.t0_dim = res.t0.dim();
  std::vector<int> pivots = res.t0.pivots();
  for (int c = 0, p = 0; c < dt; ++c) {
    if (p < int(pivots.size()) && pivots[size_t(p)] == c) { ++p; continue; }
    res.bar_cols.push_back(c);
  }
  const int r = res.bar_dim();

  FiniteAlgebra& out = res.alg;
  out.name = "tilde_" + t.name;
  out.sig = Signature(t.sig.name() + "_tilde", Mode::plain, t.sig.ops());
  for (int q = 0; q < r; ++q) out.basis.push_back("q_" + t.basis[size_t(res.bar_cols[size_t(q)])]);
  for (const std::string& b : t.basis) out.basis.push_back(b);

  for (const OpDecl& op : t.sig.ops()) {
    const int n = op.arity;
    std::vector<Mask> decs = t.sig.decorations(n);
    auto& tensor = out.tensors[OpKey{op.name, 0}];
    std::vector<int> tuple(size_t(n), 0);
    do {
      Mask in_t = 0;
      std::vector<Elem> args;
      for (int i = 0; i < n; ++i) {
        int idx = tuple[size_t(i)];
        if (idx >= r) {
          in_t |= Mask(1) << i;
          args.push_back(elem_unit(idx - r));
        } else {
          args.push_back(elem_unit(res.bar_cols[size_t(idx)]));
        }
      }
      Elem val;
      if (in_t == 0) {
        Elem first = res.project_bar(t.apply(OpKey{op.name, decs.front()}, args));
        Elem last = res.project_bar(t.apply(OpKey{op.name, decs.back()}, args));
        if (first != last)
          throw std::logic_error("tilde_algebra: quotient product depends on the decoration");
        val = first; // already in bar coordinates
      } else if (t.sig.valid_decoration(n, in_t)) {
        Elem v = t.apply(OpKey{op.name, in_t}, args);
        for (const auto& [i, c] : v) val[i + r] = c;
      }
      if (!elem_zero(val)) tensor[tuple] = std::move(val);
    } while (next_tuple(tuple, r + dt));
  }
  validate_algebra(out);
  return res;
}

EmbeddingReport canonical_embedding(const FiniteAlgebra& t) {
  if (t.sig.mode() != Mode::tri)
    throw std::invalid_argument("canonical_embedding: " + t.name + " must be mode tri");
  EmbeddingReport rep;
  rep.tilde = tilde_algebra(t);
  rep.target = tensor_replicated(c2_algebra(), rep.tilde.alg, Mode::tri);
  const int dtilde = rep.tilde.alg.dim();
  const int dt = t.dim();

  auto mu = [&](const Elem& a) {
    Elem out;
    for (const auto& [q, c] : rep.tilde.project_bar(a)) out[0 * dtilde + q] = c;
    for (const auto& [i, c] : rep.tilde.include_t(a)) {
      out[1 * dtilde + i] += c;
      if (out[1 * dtilde + i] == 0) out.erase(1 * dtilde + i);
    }
    return out;
  };
  auto mu_linear = [&](const Elem& a) {
    Elem out;
    for (const auto& [i, c] : a) out = elem_add(out, elem_scale(rep.images[size_t(i)], c));
    return out;
  };

  for (int j = 0; j < dt; ++j) rep.images.push_back(mu(elem_unit(j)));

  RowSpace rank(rep.target.dim());
  for (int j = 0; j < dt; ++j) rank.insert(elem_row(rep.images[size_t(j)], rep.target.dim()), j);
  rep.injective = rank.dim() == dt;

  rep.homomorphic = true;
  for (const OpDecl& op : t.sig.ops()) {
    const int n = op.arity;
    for (Mask h : t.sig.decorations(n)) {
      std::vector<int> tuple(size_t(n), 0);
      do {
        std::vector<Elem> units, imgs;
        for (int i : tuple) {
          units.push_back(elem_unit(i));
          imgs.push_back(rep.images[size_t(i)]);
        }
        Elem lhs = mu_linear(t.apply(OpKey{op.name, h}, units));
        Elem rhs = rep.target.apply(OpKey{op.name, h}, imgs);
        if (lhs != rhs) {
          rep.homomorphic = false;
          rep.detail = "mu fails to respect " + op.name + "^" + mask_str(h);
        }
      } while (rep.homomorphic && next_tuple(tuple, dt));
      if (!rep.homomorphic) break;
    }
    if (!rep.homomorphic) break;
  }
  if (rep.detail.empty() && !rep.injective) rep.detail = "mu is not injective";
  return rep;
}

FiniteAlgebra derived_from_operator(const FiniteAlgebra& a, const LinearOperator& t,
                                    OperatorKind kind, const Rational& weight) {
  if (a.sig.mode() != Mode::plain)
    throw std::invalid_argument("derived_from_operator: " + a.name + " must be plain");
  Mode mode;
  if (kind == OperatorKind::averaging) mode = Mode::di;
  else if (kind == OperatorKind::hom_averaging) mode = Mode::tri;
  else if (weight == 0) mode = Mode::di;
  else if (weight == 1) mode = Mode::tri;
  else
    throw std::invalid_argument(
        "derived_from_operator: rota-baxter weights other than 0 and 1 induce no "
        "decorated structure here");
  OperatorWitness w = check_operator(a, t, kind, weight);
  if (!w.pass) throw std::invalid_argument("derived_from_operator: " + w.detail);

  FiniteAlgebra out;
  out.name = a.name + "_der_" + t.name;
  out.sig = a.sig.decorated(mode, a.sig.name() + "_" + mode_str(mode));
  out.basis = a.basis;
  for (const OpDecl& op : a.sig.ops()) {
    const int n = op.arity;
    for (Mask h : out.sig.decorations(n)) {
      auto& tensor = out.tensors[OpKey{op.name, h}];
      std::vector<int> tuple(size_t(n), 0);
      do {
        std::vector<Elem> args;
        for (int i = 1; i <= n; ++i) {
          Elem u = elem_unit(tuple[size_t(i - 1)]);
          args.push_back(mask_contains(h, i) ? u : t.apply(u));
        }
        Elem v = a.apply(OpKey{op.name, 0}, args);
        if (!elem_zero(v)) tensor[tuple] = std::move(v);
      } while (next_tuple(tuple, a.dim()));
    }
  }
  validate_algebra(out);
  return out;
}

FiniteAlgebra derived_from_morphism(const FiniteAlgebra& a, const Morphism& m) {
  if (m.target.mode() != a.sig.mode())
    throw std::invalid_argument("derived_from_morphism: decoration mode of " + m.name +
                                " does not match " + a.name);
  for (const OpDecl& op : m.target.ops())
    if (!a.sig.find(op.name) || a.sig.find(op.name)->arity != op.arity)
      throw std::invalid_argument("derived_from_morphism: op " + op.name + " missing in " +
                                  a.name);
  FiniteAlgebra out;
  out.name = a.name + "_via_" + m.name;
  out.sig = m.source;
  out.basis = a.basis;
  for (const OpDecl& op : m.source.ops()) {
    const int n = op.arity;
    for (Mask h : m.source.decorations(n)) {
      const LinComb* img = m.image(op.name, h);
      if (!img)
        throw std::invalid_argument("derived_from_morphism: no image for " + op.name);
      auto& tensor = out.tensors[OpKey{op.name, h}];
      std::vector<int> tuple(size_t(n), 0);
      do {
        std::vector<Elem> args;
        for (int i : tuple) args.push_back(elem_unit(i));
        Elem v = evaluate(a, *img, args);
        if (!elem_zero(v)) tensor[tuple] = std::move(v);
      } while (next_tuple(tuple, a.dim()));
    }
  }
  validate_algebra(out);
  return out;
}

} // namespace ditri
