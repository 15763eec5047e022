#include "ditri/subset.hpp"

#include <algorithm>
#include <stdexcept>

namespace ditri {

std::vector<int> mask_elements(Mask m) {
  std::vector<int> xs;
  for (int k = 1; m; ++k, m >>= 1)
    if (m & 1u) xs.push_back(k);
  return xs;
}

std::string mask_str(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int k : mask_elements(m)) {
    if (!first) s += ",";
    s += std::to_string(k);
    first = false;
  }
  return s + "}";
}

std::string mask_digits(Mask m) {
  std::string s;
  for (int k : mask_elements(m)) s += std::to_string(k);
  return s;
}

bool mask_lex_less(Mask a, Mask b) {
  auto xa = mask_elements(a), xb = mask_elements(b);
  return std::lexicographical_compare(xa.begin(), xa.end(), xb.begin(), xb.end());
}

std::vector<Mask> subsets_of(int n) {
  std::vector<Mask> out;
  for (Mask m = 1; m <= full_mask(n); ++m) out.push_back(m);
  std::sort(out.begin(), out.end(), mask_lex_less);
  return out;
}

Mask compose_subsets(Mask K, const std::vector<std::pair<int, Mask>>& parts) {
  const int m = int(parts.size());
  if (K == 0 || K > full_mask(m))
    throw std::invalid_argument("compose_subsets: K not a nonempty subset of {1..m}");
  Mask out = 0;
  int offset = 0;
  for (int k = 1; k <= m; ++k) {
    auto [nk, hk] = parts[size_t(k - 1)];
    if (nk < 1) throw std::invalid_argument("compose_subsets: part arity < 1");
    if (hk == 0 || hk > full_mask(nk))
      throw std::invalid_argument("compose_subsets: H_k not a nonempty subset of {1..n_k}");
    if (mask_contains(K, k)) out |= hk << offset;
    offset += nk;
  }
  return out;
}

} // namespace ditri
