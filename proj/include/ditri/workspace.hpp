#pragma once

#include <map>
#include <string>

#include "ditri/algebra.hpp"
#include "ditri/identity_system.hpp"

namespace ditri {

/* An identity together with the name of the signature it lives over. */
struct NamedIdentity {
  std::string sig_name;
  Identity id;
};

/* Named object store the DSL defines into and commands read from.  Names are
   unique per kind; redefinition is an error. */
class Workspace {
 public:
  void add_signature(const Signature& s);
  void add_identity(const std::string& sig_name, const Identity& id);
  void add_system(const IdentitySystem& s);
  void add_morphism(const Morphism& m);
  void add_algebra(const FiniteAlgebra& a);
  void add_operator(const LinearOperator& t);

  const Signature* find_signature(const std::string& name) const;
  const NamedIdentity* find_identity(const std::string& name) const;
  const IdentitySystem* find_system(const std::string& name) const;
  const Morphism* find_morphism(const std::string& name) const;
  const FiniteAlgebra* find_algebra(const std::string& name) const;
  const LinearOperator* find_operator(const std::string& name) const;

  /* Throwing lookups; the message names the kind and the unknown name. */
  const Signature& signature(const std::string& name) const;
  const NamedIdentity& identity(const std::string& name) const;
  const IdentitySystem& system(const std::string& name) const;
  const Morphism& morphism(const std::string& name) const;
  const FiniteAlgebra& algebra(const std::string& name) const;
  const LinearOperator& oper(const std::string& name) const;

  void load_text(const std::string& text, const std::string& source_name);
  void load_file(const std::string& path);
  /* Loads every *.ditri in dir, sorted by file name. */
  void load_preset_dir(const std::string& dir);

 private:
  template <class T>
  friend struct WsAccess;
  std::map<std::string, Signature> sigs_;
  std::map<std::string, NamedIdentity> ids_;
  std::map<std::string, IdentitySystem> systems_;
  std::map<std::string, Morphism> morphisms_;
  std::map<std::string, FiniteAlgebra> algebras_;
  std::map<std::string, LinearOperator> operators_;
};

/* Directory the bundled presets were installed to; "" when not configured. */
std::string default_preset_dir();

} // namespace ditri
