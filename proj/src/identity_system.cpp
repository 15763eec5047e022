#include "ditri/identity_system.hpp"

#include <stdexcept>

namespace ditri {

const Identity* IdentitySystem::find(const std::string& id_name) const {
  for (const auto& id : ids)
    if (id.name == id_name) return &id;
  return nullptr;
}

void validate_system(const IdentitySystem& s) {
  for (const auto& id : s.ids) {
    if (id.lhs.is_zero())
      throw std::invalid_argument("identity " + id.name + " is identically zero");
    int n = id.lhs.degree();
    if (!id.lhs.multilinear_of_degree(n))
      throw std::invalid_argument("identity " + id.name + " is not multilinear");
    std::string why;
    for (const auto& [t, c] : id.lhs.terms()) {
      (void)c;
      if (!term_valid(t, s.sig, &why))
        throw std::invalid_argument("identity " + id.name + ": " + why);
    }
  }
}

const LinComb* Morphism::image(const std::string& op, Mask dec) const {
  for (const auto& [key, img] : images)
    if (key.first == op && key.second == dec) return &img;
  return nullptr;
}

void validate_morphism(const Morphism& m) {
  for (const auto& op : m.source.ops()) {
    for (Mask dec : m.source.decorations(op.arity)) {
      const LinComb* img = m.image(op.name, dec);
      if (!img)
        throw std::invalid_argument("morphism " + m.name + ": no image for op " + op.name +
                                    (dec ? "^" + mask_str(dec) : ""));
      if (!img->is_zero()) {
        if (!img->multilinear_of_degree(op.arity))
          throw std::invalid_argument("morphism " + m.name + ": image of " + op.name +
                                      " must be multilinear of degree " +
                                      std::to_string(op.arity));
        std::string why;
        for (const auto& [t, c] : img->terms()) {
          (void)c;
          if (!term_valid(t, m.target, &why))
            throw std::invalid_argument("morphism " + m.name + ": " + why);
        }
      }
    }
  }
}

LinComb apply_morphism(const Morphism& m, const Term& t) {
  if (t.is_leaf()) return LinComb(t);
  std::vector<LinComb> sub;
  sub.reserve(t.kids().size());
  for (const auto& k : t.kids()) sub.push_back(apply_morphism(m, k));
  const LinComb* img = m.image(t.op(), t.dec());
  if (!img)
    throw std::invalid_argument("morphism " + m.name + " has no image for " + t.op() +
                                (t.dec() ? "^" + mask_str(t.dec()) : ""));
  return substitute_slots(*img, sub);
}

LinComb apply_morphism(const Morphism& m, const LinComb& l) {
  LinComb out;
  for (const auto& [t, c] : l.terms()) out.add(apply_morphism(m, t), c);
  return out;
}

IdentitySystem apply_morphism(const Morphism& m, const IdentitySystem& s) {
  IdentitySystem out;
  out.name = s.name + "_via_" + m.name;
  out.sig = m.target;
  for (const auto& id : s.ids) out.ids.push_back({id.name, apply_morphism(m, id.lhs)});
  return out;
}

} // namespace ditri
