#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ditri {

/* Nonempty subsets of {1..n} as bitmasks, bit k-1 <-> element k.  n stays small
   (argument positions of an operation), 31 elements is far beyond any use here. */
using Mask = std::uint32_t;

inline bool mask_contains(Mask m, int k) { return (m >> (k - 1)) & 1u; }
inline Mask mask_of(std::initializer_list<int> xs) {
  Mask m = 0;
  for (int x : xs) m |= Mask(1) << (x - 1);
  return m;
}
inline int mask_size(Mask m) { return __builtin_popcount(m); }
inline Mask full_mask(int n) { return n >= 32 ? ~Mask(0) : (Mask(1) << n) - 1; }
inline bool mask_subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

std::vector<int> mask_elements(Mask m);

/* "13" for {1,3} — the form used inside generated identifiers. */
std::string mask_digits(Mask m);

/* "{1,3}" — the printed decoration body. */
std::string mask_str(Mask m);

/* Lexicographic order on the ascending element sequences; proper prefixes first.
   This is the order decorations use in the canonical term order. */
bool mask_lex_less(Mask a, Mask b);

/* All nonempty subsets of {1..n} in mask_lex_less order. */
std::vector<Mask> subsets_of(int n);

/* Subset composition: parts are (arity, subset) pairs, one per argument slot of
   the outer corolla; j is in the result iff j = n_1+..+n_{k-1}+l for some k in K
   and l in H_k.  Result spans {1..n_1+..+n_m}. */
Mask compose_subsets(Mask K, const std::vector<std::pair<int, Mask>>& parts);

} // namespace ditri
