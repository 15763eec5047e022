#include "ditri/rowspace.hpp"

#include <stdexcept>

namespace ditri {

std::vector<Rational> RowSpace::reduce(std::vector<Rational> row,
                                       std::map<int, Rational>* used) const {
  if (int(row.size()) != ncols_) throw std::invalid_argument("RowSpace: column count mismatch");
  for (const Row& r : rows_) {
    if (row[size_t(r.pivot)] == 0) continue;
    Rational lambda = row[size_t(r.pivot)] / Rational(r.v[size_t(r.pivot)]);
    for (int c = r.pivot; c < ncols_; ++c)
      if (r.v[size_t(c)] != 0) row[size_t(c)] -= lambda * Rational(r.v[size_t(c)]);
    if (used)
      for (const auto& [tag, co] : r.combo) (*used)[tag] += lambda * co;
  }
  if (used)
    for (auto it = used->begin(); it != used->end();)
      it = it->second == 0 ? used->erase(it) : std::next(it);
  return row;
}

bool RowSpace::insert(std::vector<Rational> row, int source) {
  std::map<int, Rational> used;
  std::vector<Rational> rem = reduce(std::move(row), &used);
  int pivot = -1;
  for (int c = 0; c < ncols_; ++c)
    if (rem[size_t(c)] != 0) { pivot = c; break; }
  if (pivot < 0) return false;

  // Scale to a primitive integer vector with positive leading entry.
  Integer den_lcm = 1;
  for (const Rational& x : rem)
    if (x != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<Integer> v(static_cast<size_t>(ncols_));
  Integer content = 0;
  for (int c = 0; c < ncols_; ++c) {
    if (rem[size_t(c)] == 0) continue;
    v[size_t(c)] = rem[size_t(c)].get_num() * (den_lcm / rem[size_t(c)].get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v[size_t(c)].get_mpz_t());
  }
  if (v[size_t(pivot)] < 0) content = -content;
  for (auto& x : v)
    if (x != 0) x /= content;

  // Stored row = scale * remainder; carry the combination along.
  Rational scale = Rational(v[size_t(pivot)]) / rem[size_t(pivot)];
  std::map<int, Rational> combo;
  combo[source] = scale;
  for (const auto& [tag, co] : used) {
    combo[tag] -= scale * co;
    if (combo[tag] == 0) combo.erase(tag);
  }
  Row nr{std::move(v), pivot, std::move(combo)};
  auto it = rows_.begin();
  while (it != rows_.end() && it->pivot < pivot) ++it;
  rows_.insert(it, std::move(nr));
  return true;
}

std::vector<int> RowSpace::pivots() const {
  std::vector<int> out;
  out.reserve(rows_.size());
  for (const Row& r : rows_) out.push_back(r.pivot);
  return out;
}

bool RowSpace::membership(const std::vector<Rational>& row, std::map<int, Rational>& combo) const {
  combo.clear();
  std::vector<Rational> rem = reduce(row, &combo);
  for (const Rational& x : rem)
    if (x != 0) return false;
  return true;
}

std::map<int, Rational> RowSpace::separating_functional(const std::vector<Rational>& row) const {
  std::vector<Rational> rem = reduce(row);
  int j0 = -1;
  for (int c = 0; c < ncols_; ++c)
    if (rem[size_t(c)] != 0) { j0 = c; break; }
  if (j0 < 0) throw std::logic_error("separating_functional: row lies in the span");

  /* w[j0] = 1, w supported on {j0} union pivots; <w, r_k> = 0 solved from the
     last basis row upward (r_k vanishes at pivots below its own). */
  std::map<int, Rational> w;
  w[j0] = 1;
  for (int k = int(rows_.size()) - 1; k >= 0; --k) {
    const Row& r = rows_[size_t(k)];
    Rational acc = Rational(r.v[size_t(j0)]);
    for (size_t i = size_t(k) + 1; i < rows_.size(); ++i) {
      int p = rows_[i].pivot;
      if (r.v[size_t(p)] != 0) acc += w[p] * Rational(r.v[size_t(p)]);
    }
    w[r.pivot] = -acc / Rational(r.v[size_t(r.pivot)]);
  }
  for (auto it = w.begin(); it != w.end();)
    it = it->second == 0 ? w.erase(it) : std::next(it);
  if (w.find(j0) == w.end()) throw std::logic_error("separating_functional: lost support");
  return w;
}

std::vector<Rational> RowSpace::basis_row(int i) const {
  const Row& r = rows_.at(size_t(i));
  std::vector<Rational> out(static_cast<size_t>(ncols_));
  for (int c = 0; c < ncols_; ++c) out[size_t(c)] = Rational(r.v[size_t(c)]);
  return out;
}

} // namespace ditri
