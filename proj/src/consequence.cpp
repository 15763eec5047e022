#include "ditri/consequence.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ditri/lincomb.hpp"

namespace ditri {

std::vector<Rational> ConsequenceSpace::row_of(const LinComb& l) const {
  std::vector<Rational> row(monomials.size());
  size_t found = 0;
  for (const auto& [t, c] : l.terms()) {
    auto it = std::lower_bound(monomials.begin(), monomials.end(), t);
    if (it == monomials.end() || *it != t)
      throw std::invalid_argument("row_of: term outside the monomial basis");
    row[size_t(it - monomials.begin())] = c;
    ++found;
  }
  (void)found;
  return row;
}

LinComb ConsequenceSpace::lincomb_of(const std::vector<Rational>& row) const {
  LinComb out;
  for (size_t i = 0; i < monomials.size(); ++i)
    if (row[i] != 0) out.add(monomials[i], row[i]);
  return out;
}

namespace {

void check_supported(const IdentitySystem& s, int degree) {
  if (s.sig.has_unary())
    throw std::invalid_argument(
        "consequence analysis does not support arity-1 operations (monomial spaces "
        "of a fixed degree become infinite)");
  if (degree < 1 || degree > 6)
    throw std::invalid_argument("consequence analysis supports degrees 1..6");
}

/* All ordered compositions of total into k parts >= 1. */
std::vector<std::vector<int>> compositions(int total, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(size_t(k), 1);
  for (;;) {
    int sum = 0;
    for (int v : cur) sum += v;
    if (sum == total) out.push_back(cur);
    int p = k - 1;
    while (p >= 0 && ++cur[size_t(p)] > total) cur[size_t(p--)] = 1;
    if (p < 0) break;
  }
  return out;
}

/* Single-substitution instances of one identity at the given degree, fed to
   sink in a fixed deterministic order. */
template <typename Sink>
void generate_instances(const Signature& sig, const Identity& id, int degree, Sink&& sink) {
  const int k = id.lhs.degree();
  if (k > degree) return;
  auto perms = all_permutations(degree);
  for (int d = k; d <= degree; ++d) {
    const int r = degree - d + 1;
    std::vector<Term> contexts = enumerate_multilinear(sig, r);
    for (const std::vector<int>& comp : compositions(d, k)) {
      std::vector<std::vector<Term>> inner_choices;
      for (int m : comp) inner_choices.push_back(enumerate_multilinear(sig, m));
      std::vector<size_t> idx(size_t(k), 0);
      for (;;) {
        std::vector<Term> inners;
        for (int i = 0; i < k; ++i) inners.push_back(inner_choices[size_t(i)][idx[size_t(i)]]);
        LinComb core = graft(id.lhs, inners); // labels 1..d
        for (const Term& ctx : contexts) {
          for (int p = 1; p <= r; ++p) {
            std::vector<LinComb> args;
            int next = d + 1;
            for (int q = 1; q <= r; ++q) {
              if (q == p) args.push_back(core);
              else args.push_back(LinComb(Term::leaf(next++)));
            }
            LinComb base = substitute_slots(ctx, args);
            for (const std::vector<int>& perm : perms)
              sink(act(base, perm), InstanceProv{id.name, ctx, p, inners, perm});
          }
        }
        int pos = k - 1;
        while (pos >= 0 && ++idx[size_t(pos)] == inner_choices[size_t(pos)].size())
          idx[size_t(pos--)] = 0;
        if (pos < 0) break;
      }
    }
  }
}

ConsequenceSpace build_space(const IdentitySystem& s, int degree) {
  check_supported(s, degree);
  ConsequenceSpace sp;
  sp.sig = s.sig;
  sp.degree = degree;
  sp.monomials = enumerate_multilinear(s.sig, degree);
  if (sp.monomials.size() > 20000)
    throw std::invalid_argument("consequence analysis: monomial basis too large");
  sp.space = RowSpace(int(sp.monomials.size()));
  std::set<LinComb> seen;
  for (const Identity& id : s.ids) {
    generate_instances(s.sig, id, degree, [&](const LinComb& inst, InstanceProv prov) {
      if (inst.is_zero()) return;
      if (!seen.insert(inst).second) return;
      int tag = int(sp.instances.size());
      sp.instances.push_back(inst);
      sp.provenance.push_back(std::move(prov));
      sp.space.insert(sp.row_of(inst), tag);
    });
  }
  return sp;
}

/* Closure self-check: the echelon basis is stable under relabeling, and one
   further substitution round applied to lower-degree slices stays inside this
   slice. */
void self_check(const IdentitySystem& s, ConsequenceSpace& sp) {
  const int n = sp.degree;
  for (int i = 0; i < sp.dim(); ++i) {
    LinComb b = sp.lincomb_of(sp.space.basis_row(i));
    for (const std::vector<int>& perm : all_permutations(n)) {
      std::map<int, Rational> combo;
      if (!sp.space.membership(sp.row_of(act(b, perm)), combo))
        throw std::logic_error("consequence self-check: slice not relabeling-stable");
    }
  }
  int min_deg = n;
  for (const Identity& id : s.ids) min_deg = std::min(min_deg, id.lhs.degree());
  for (int d = min_deg; d < n; ++d) {
    ConsequenceSpace lower = build_space(s, d);
    for (int i = 0; i < lower.dim(); ++i) {
      Identity derived{"basis", lower.lincomb_of(lower.space.basis_row(i))};
      generate_instances(s.sig, derived, n, [&](const LinComb& inst, const InstanceProv&) {
        std::map<int, Rational> combo;
        if (!inst.is_zero() && !sp.space.membership(sp.row_of(inst), combo))
          throw std::logic_error("consequence self-check: slice not substitution-closed");
      });
    }
  }
}

} // namespace

ConsequenceSpace consequence_space(const IdentitySystem& s, int degree,
                                   const ConsequenceOptions& opts) {
  ConsequenceSpace sp = build_space(s, degree);
  if (opts.self_check) self_check(s, sp);
  return sp;
}

bool verify_certificate(const ConsequenceSpace& sp, const LinComb& target,
                        const ConsequenceCertificate& cert) {
  if (cert.member) {
    LinComb sum;
    for (const auto& [idx, c] : cert.combination) {
      if (idx < 0 || idx >= int(sp.instances.size())) return false;
      sum.add(sp.instances[size_t(idx)], c);
    }
    return sum == target;
  }
  if (cert.value == 0) return false;
  auto eval = [&](const LinComb& l) {
    Rational acc = 0;
    for (const auto& [t, c] : l.terms()) {
      auto it = cert.functional.find(t);
      if (it != cert.functional.end()) acc += c * it->second;
    }
    return acc;
  };
  for (const LinComb& inst : sp.instances)
    if (eval(inst) != 0) return false;
  return eval(target) == cert.value;
}

ConsequenceResult is_consequence(const LinComb& target, const IdentitySystem& s,
                                 const ConsequenceOptions& opts) {
  if (target.is_zero()) throw std::invalid_argument("is_consequence: zero target");
  int n = target.degree();
  if (!target.multilinear_of_degree(n))
    throw std::invalid_argument("is_consequence: target is not multilinear");
  ConsequenceResult res{consequence_space(s, n, opts), {}};
  std::vector<Rational> row = res.space.row_of(target);
  std::map<int, Rational> combo;
  if (res.space.space.membership(row, combo)) {
    res.cert.member = true;
    for (const auto& [tag, c] : combo) res.cert.combination.push_back({tag, c});
  } else {
    res.cert.member = false;
    std::map<int, Rational> w = res.space.space.separating_functional(row);
    for (const auto& [col, c] : w) res.cert.functional[res.space.monomials[size_t(col)]] = c;
    Rational v = 0;
    for (const auto& [t, c] : target.terms()) {
      auto it = res.cert.functional.find(t);
      if (it != res.cert.functional.end()) v += c * it->second;
    }
    res.cert.value = v;
  }
  if (!verify_certificate(res.space, target, res.cert))
    throw std::logic_error("is_consequence: certificate failed re-verification");
  return res;
}

long codimension(const IdentitySystem& s, int degree, const ConsequenceOptions& opts) {
  ConsequenceSpace sp = consequence_space(s, degree, opts);
  return long(sp.monomials.size()) - sp.dim();
}

EquivReport systems_equivalent(const IdentitySystem& a, const IdentitySystem& b, int n_max,
                               const ConsequenceOptions& opts) {
  if (!a.sig.structurally_equal(b.sig))
    throw std::invalid_argument("systems_equivalent: signatures differ structurally");
  for (const OpDecl& oa : a.sig.ops())
    if (!b.sig.find(oa.name))
      throw std::invalid_argument("systems_equivalent: op names differ: " + oa.name);
  for (const IdentitySystem* s : {&a, &b})
    for (const Identity& id : s->ids)
      if (id.lhs.degree() > n_max)
        throw std::invalid_argument("systems_equivalent: generator " + id.name +
                                    " exceeds degree bound");
  EquivReport rep;
  rep.equivalent = true;
  std::map<int, ConsequenceSpace> of_a, of_b;
  auto slice = [&](const IdentitySystem& s, std::map<int, ConsequenceSpace>& cache, int d)
      -> ConsequenceSpace& {
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, consequence_space(s, d, opts)).first;
    return it->second;
  };
  auto run = [&](const IdentitySystem& from, const IdentitySystem& into,
                 std::map<int, ConsequenceSpace>& cache) {
    for (const Identity& id : from.ids) {
      int d = id.lhs.degree();
      ConsequenceSpace& sp = slice(into, cache, d);
      std::map<int, Rational> combo;
      bool member = sp.space.membership(sp.row_of(id.lhs), combo);
      rep.details.push_back(EquivDetail{from.name, id.name, d, member});
      if (!member) rep.equivalent = false;
    }
  };
  run(a, b, of_b);
  run(b, a, of_a);
  return rep;
}

} // namespace ditri
