#include "ditri/workspace.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ditri/parser.hpp"

namespace ditri {

namespace {

bool sig_equal(const Signature& a, const Signature& b) {
  return a.name() == b.name() && a.mode() == b.mode() && a.ops() == b.ops();
}

bool ids_equal(const std::vector<Identity>& a, const std::vector<Identity>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].name != b[i].name || !(a[i].lhs == b[i].lhs)) return false;
  return true;
}

/* Redefinition with identical content is a no-op, so generated documents that
   restate stdlib objects load cleanly; any difference is an error. */
template <class M, class V, class Eq>
void add_unique(M& m, const std::string& kind, const std::string& name, const V& v, Eq same) {
  auto it = m.find(name);
  if (it != m.end()) {
    if (!same(it->second, v))
      throw std::invalid_argument(kind + " '" + name + "' is already defined differently");
    return;
  }
  m.emplace(name, v);
}

template <class M>
const typename M::mapped_type* find_in(const M& m, const std::string& name) {
  auto it = m.find(name);
  return it == m.end() ? nullptr : &it->second;
}

template <class M>
const typename M::mapped_type& get_in(const M& m, const std::string& kind,
                                      const std::string& name) {
  auto it = m.find(name);
  if (it == m.end()) throw std::invalid_argument("unknown " + kind + " '" + name + "'");
  return it->second;
}

} // namespace

void Workspace::add_signature(const Signature& s) {
  add_unique(sigs_, "signature", s.name(), s,
             [](const Signature& a, const Signature& b) { return sig_equal(a, b); });
}
void Workspace::add_identity(const std::string& sig_name, const Identity& id) {
  add_unique(ids_, "identity", id.name, NamedIdentity{sig_name, id},
             [](const NamedIdentity& a, const NamedIdentity& b) {
               return a.sig_name == b.sig_name && a.id.name == b.id.name && a.id.lhs == b.id.lhs;
             });
}
void Workspace::add_system(const IdentitySystem& s) {
  add_unique(systems_, "system", s.name, s,
             [](const IdentitySystem& a, const IdentitySystem& b) {
               return sig_equal(a.sig, b.sig) && ids_equal(a.ids, b.ids);
             });
}
void Workspace::add_morphism(const Morphism& m) {
  add_unique(morphisms_, "morphism", m.name, m, [](const Morphism& a, const Morphism& b) {
    if (!sig_equal(a.source, b.source) || !sig_equal(a.target, b.target)) return false;
    if (a.images.size() != b.images.size()) return false;
    for (size_t i = 0; i < a.images.size(); ++i)
      if (!(a.images[i] == b.images[i])) return false;
    return true;
  });
}
void Workspace::add_algebra(const FiniteAlgebra& a) {
  add_unique(algebras_, "algebra", a.name, a, [](const FiniteAlgebra& x, const FiniteAlgebra& y) {
    return sig_equal(x.sig, y.sig) && x.basis == y.basis && x.tensors == y.tensors;
  });
}
void Workspace::add_operator(const LinearOperator& t) {
  add_unique(operators_, "operator", t.name, t, [](const LinearOperator& a,
                                                   const LinearOperator& b) {
    return a.algebra == b.algebra && a.mat == b.mat;
  });
}

const Signature* Workspace::find_signature(const std::string& n) const {
  return find_in(sigs_, n);
}
const NamedIdentity* Workspace::find_identity(const std::string& n) const {
  return find_in(ids_, n);
}
const IdentitySystem* Workspace::find_system(const std::string& n) const {
  return find_in(systems_, n);
}
const Morphism* Workspace::find_morphism(const std::string& n) const {
  return find_in(morphisms_, n);
}
const FiniteAlgebra* Workspace::find_algebra(const std::string& n) const {
  return find_in(algebras_, n);
}
const LinearOperator* Workspace::find_operator(const std::string& n) const {
  return find_in(operators_, n);
}

const Signature& Workspace::signature(const std::string& n) const {
  return get_in(sigs_, "signature", n);
}
const NamedIdentity& Workspace::identity(const std::string& n) const {
  return get_in(ids_, "identity", n);
}
const IdentitySystem& Workspace::system(const std::string& n) const {
  return get_in(systems_, "system", n);
}
const Morphism& Workspace::morphism(const std::string& n) const {
  return get_in(morphisms_, "morphism", n);
}
const FiniteAlgebra& Workspace::algebra(const std::string& n) const {
  return get_in(algebras_, "algebra", n);
}
const LinearOperator& Workspace::oper(const std::string& n) const {
  return get_in(operators_, "operator", n);
}

void Workspace::load_text(const std::string& text, const std::string& source_name) {
  parse_document(text, source_name, *this);
}

void Workspace::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  load_text(buf.str(), path);
}

void Workspace::load_preset_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".ditri") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) load_file(p.string());
}

std::string default_preset_dir() {
#ifdef DITRI_PRESET_DIR
  return DITRI_PRESET_DIR;
#else
  return "";
#endif
}

} // namespace ditri
