#include "ditri/signature.hpp"

#include <stdexcept>

namespace ditri {

std::string mode_str(Mode m) {
  switch (m) {
    case Mode::plain: return "plain";
    case Mode::di: return "di";
    case Mode::tri: return "tri";
  }
  return "?";
}

Signature::Signature(std::string name, Mode mode, std::vector<OpDecl> ops)
    : name_(std::move(name)), mode_(mode), ops_(std::move(ops)) {
  for (size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].arity < 1) throw std::invalid_argument("op arity must be >= 1: " + ops_[i].name);
    if (ops_[i].arity > 1 && ops_[i].flag != UnaryFlag::none)
      throw std::invalid_argument("derivation/endomorphism flag needs arity 1: " + ops_[i].name);
    for (size_t j = i + 1; j < ops_.size(); ++j)
      if (ops_[i].name == ops_[j].name)
        throw std::invalid_argument("duplicate op name: " + ops_[i].name);
  }
}

const OpDecl* Signature::find(const std::string& op) const {
  for (const auto& o : ops_)
    if (o.name == op) return &o;
  return nullptr;
}

std::vector<Mask> mode_subsets(Mode mode, int n) {
  if (mode == Mode::plain) return {Mask(0)};
  if (n == 1) return {Mask(1)};
  if (mode == Mode::di) {
    std::vector<Mask> out;
    for (int k = 1; k <= n; ++k) out.push_back(Mask(1) << (k - 1));
    return out; // singletons {1},{2},..: already in mask_lex order
  }
  return subsets_of(n);
}

std::vector<Mask> Signature::decorations(int arity) const { return mode_subsets(mode_, arity); }

bool Signature::valid_decoration(int arity, Mask dec) const {
  if (mode_ == Mode::plain) return dec == 0;
  if (dec == 0 || dec > full_mask(arity)) return false;
  if (arity == 1) return dec == 1;
  if (mode_ == Mode::di) return mask_size(dec) == 1;
  return true;
}

bool Signature::structurally_equal(const Signature& other) const {
  return mode_ == other.mode_ && ops_ == other.ops_;
}

Signature Signature::decorated(Mode mode, const std::string& new_name) const {
  if (mode_ != Mode::plain)
    throw std::invalid_argument("signature already decorated: " + name_);
  if (mode == Mode::plain) throw std::invalid_argument("decorated() needs mode di or tri");
  return Signature(new_name, mode, ops_);
}

bool Signature::has_unary() const {
  for (const auto& o : ops_)
    if (o.arity == 1) return true;
  return false;
}

bool Signature::unary_all_flagged() const {
  for (const auto& o : ops_)
    if (o.arity == 1 && o.flag == UnaryFlag::none) return false;
  return true;
}

} // namespace ditri
