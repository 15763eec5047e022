#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ditri/subset.hpp"

namespace ditri {

/* Decoration mode of a signature.  plain: ops carry no decoration.  di: every op
   carries a singleton subset of its argument positions.  tri: every op carries a
   nonempty subset.  Arity-1 ops in di/tri carry the unique decoration {1}. */
enum class Mode { plain, di, tri };

std::string mode_str(Mode m);

/* The admissible decorations at width n: di -> singletons {1}..{n} in that
   order; tri -> all nonempty subsets in canonical order; plain -> {0}. */
std::vector<Mask> mode_subsets(Mode mode, int n);

enum class UnaryFlag { none, derivation, endomorphism };

struct OpDecl {
  std::string name;
  int arity = 0;
  UnaryFlag flag = UnaryFlag::none;

  bool operator==(const OpDecl&) const = default;
};

class Signature {
 public:
  Signature() = default;
  Signature(std::string name, Mode mode, std::vector<OpDecl> ops);

  const std::string& name() const { return name_; }
  Mode mode() const { return mode_; }
  const std::vector<OpDecl>& ops() const { return ops_; }

  const OpDecl* find(const std::string& op) const;

  /* Decorations an op of the given arity admits under this signature's mode,
     in canonical order.  plain -> {0}; di -> singletons; tri -> all nonempty. */
  std::vector<Mask> decorations(int arity) const;

  bool valid_decoration(int arity, Mask dec) const;

  /* Same ops, arities, flags and mode; names of the signatures may differ. */
  bool structurally_equal(const Signature& other) const;

  /* The mode-di or mode-tri copy of a plain signature. */
  Signature decorated(Mode mode, const std::string& new_name) const;

  bool has_unary() const;
  bool unary_all_flagged() const;

 private:
  std::string name_;
  Mode mode_ = Mode::plain;
  std::vector<OpDecl> ops_;
};

} // namespace ditri
