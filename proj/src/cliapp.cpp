#include "ditri/cliapp.hpp"

#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ditri/builtins.hpp"
#include "ditri/consequence.hpp"
#include "ditri/constructions.hpp"
#include "ditri/corolla.hpp"
#include "ditri/parser.hpp"
#include "ditri/printer.hpp"
#include "ditri/replicate.hpp"
#include "ditri/split.hpp"
#include "ditri/workspace.hpp"

namespace ditri {

namespace {

using nlohmann::ordered_json;

std::string flag_name(UnaryFlag f) {
  switch (f) {
    case UnaryFlag::derivation: return "derivation";
    case UnaryFlag::endomorphism: return "endomorphism";
    default: return "none";
  }
}

std::string dec_str(Mask dec) { return dec == 0 ? "" : mask_str(dec); }

ordered_json j_sig(const Signature& sig) {
  ordered_json j;
  j["name"] = sig.name();
  j["mode"] = mode_str(sig.mode());
  j["ops"] = ordered_json::array();
  for (const OpDecl& op : sig.ops())
    j["ops"].push_back({{"name", op.name}, {"arity", op.arity}, {"flag", flag_name(op.flag)}});
  return j;
}

ordered_json j_system(const IdentitySystem& s) {
  ordered_json j;
  j["name"] = s.name;
  j["signature"] = j_sig(s.sig);
  j["identities"] = ordered_json::array();
  for (const Identity& id : s.ids)
    j["identities"].push_back({{"name", id.name}, {"lhs", lincomb_str(id.lhs)}});
  j["count"] = s.ids.size();
  return j;
}

ordered_json j_morphism(const Morphism& m) {
  ordered_json j;
  j["name"] = m.name;
  j["source"] = j_sig(m.source);
  j["target"] = j_sig(m.target);
  j["images"] = ordered_json::array();
  for (const auto& [key, img] : m.images)
    j["images"].push_back(
        {{"op", key.first}, {"dec", dec_str(key.second)}, {"image", lincomb_str(img)}});
  return j;
}

ordered_json j_algebra(const FiniteAlgebra& a) {
  ordered_json j;
  j["name"] = a.name;
  j["signature"] = j_sig(a.sig);
  j["dim"] = a.dim();
  j["basis"] = a.basis;
  j["entries"] = ordered_json::array();
  for (const auto& [key, tensor] : a.tensors) {
    for (const auto& [tuple, val] : tensor) {
      if (elem_zero(val)) continue;
      ordered_json e;
      e["op"] = key.name;
      e["dec"] = dec_str(key.dec);
      e["args"] = ordered_json::array();
      for (int i : tuple) e["args"].push_back(a.basis[size_t(i)]);
      e["value"] = a.elem_str(val);
      j["entries"].push_back(std::move(e));
    }
  }
  return j;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string prov_str(const InstanceProv& p) {
  std::string s = "id=" + p.id_name + " context=" + term_str(p.context) +
                  " leaf=" + std::to_string(p.marked_leaf) + " inners=[";
  for (size_t i = 0; i < p.inners.size(); ++i) s += (i ? ", " : "") + term_str(p.inners[i]);
  s += "] perm=[" + join_ints(p.perm) + "]";
  return s;
}

std::string tuple_names(const FiniteAlgebra& a, const std::vector<int>& tuple) {
  std::string s = "(";
  for (size_t i = 0; i < tuple.size(); ++i) s += (i ? "," : "") + a.basis[size_t(tuple[i])];
  return s + ")";
}

struct Ctx {
  Workspace ws;
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  long seed = 0;
  int exit_code = 0;

  void emit(const std::string& command, ordered_json inputs, ordered_json result,
            std::optional<ordered_json> certificates = std::nullopt) {
    ordered_json doc;
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    doc["result"] = std::move(result);
    if (certificates) doc["certificates"] = std::move(*certificates);
    doc["version"] = kVersion;
    out << doc.dump(2) << "\n";
  }
};

Mode parse_rep_mode(const std::string& s) { return s == "di" ? Mode::di : Mode::tri; }
SplitMode parse_split_mode(const std::string& s) {
  return s == "pre" ? SplitMode::pre : SplitMode::post;
}

OperatorKind parse_kind(const std::string& s) {
  if (s == "averaging") return OperatorKind::averaging;
  if (s == "hom-averaging") return OperatorKind::hom_averaging;
  return OperatorKind::rota_baxter; // "rota-baxter" or "rb"
}

void run_replicate(Ctx& c, const std::string& sys, const std::string& mode) {
  IdentitySystem r = replicate_identities(c.ws.system(sys), parse_rep_mode(mode));
  if (c.json)
    c.emit("replicate", {{"system", sys}, {"mode", mode}}, j_system(r));
  else
    c.out << system_document(r);
}

void run_split(Ctx& c, const std::string& sys, const std::string& mode) {
  IdentitySystem r = split_identities(c.ws.system(sys), parse_split_mode(mode));
  if (c.json)
    c.emit("split", {{"system", sys}, {"mode", mode}}, j_system(r));
  else
    c.out << system_document(r);
}

void run_replicate_morphism(Ctx& c, const std::string& mor, const std::string& mode) {
  Morphism r = replicate_morphism(c.ws.morphism(mor), parse_rep_mode(mode));
  if (c.json)
    c.emit("replicate-morphism", {{"morphism", mor}, {"mode", mode}}, j_morphism(r));
  else
    c.out << morphism_document(r);
}

void run_split_morphism(Ctx& c, const std::string& mor, const std::string& mode) {
  Morphism r = split_morphism(c.ws.morphism(mor), parse_split_mode(mode));
  if (c.json)
    c.emit("split-morphism", {{"morphism", mor}, {"mode", mode}}, j_morphism(r));
  else
    c.out << morphism_document(r);
}

void run_check(Ctx& c, const std::string& alg, const std::string& sys) {
  const FiniteAlgebra& a = c.ws.algebra(alg);
  CheckWitness w = check_identities(a, c.ws.system(sys));
  if (!w.pass) c.exit_code = 1;
  if (c.json) {
    ordered_json res;
    res["pass"] = w.pass;
    if (!w.pass)
      res["witness"] = {{"identity", w.identity},
                        {"tuple", ordered_json::parse("[]")},
                        {"value", a.elem_str(w.value)}};
    if (!w.pass)
      for (int i : w.tuple) res["witness"]["tuple"].push_back(a.basis[size_t(i)]);
    c.emit("check", {{"algebra", alg}, {"system", sys}}, res);
  } else if (w.pass) {
    c.out << "check " << alg << " against " << sys << ": pass\n";
  } else {
    c.out << "check " << alg << " against " << sys << ": FAIL identity=" << w.identity
          << " tuple=" << tuple_names(a, w.tuple) << " value=" << a.elem_str(w.value) << "\n";
  }
}

void run_check_operator(Ctx& c, const std::string& alg, const std::string& op,
                        const std::string& kind, const std::string& weight) {
  const FiniteAlgebra& a = c.ws.algebra(alg);
  const LinearOperator& t = c.ws.oper(op);
  OperatorWitness w = check_operator(a, t, parse_kind(kind), parse_rational(weight));
  if (!w.pass) c.exit_code = 1;
  if (c.json) {
    c.emit("check-operator",
           {{"algebra", alg}, {"operator", op}, {"kind", kind}, {"weight", weight}},
           {{"pass", w.pass}, {"detail", w.detail}});
  } else {
    c.out << "check-operator " << op << " on " << alg << " as " << kind << ": "
          << (w.pass ? "pass" : "FAIL " + w.detail) << "\n";
  }
}

void run_derive(Ctx& c, const std::string& alg, const std::string& op, const std::string& kind,
                const std::string& weight) {
  const FiniteAlgebra& a = c.ws.algebra(alg);
  const LinearOperator& t = c.ws.oper(op);
  OperatorKind k = parse_kind(kind);
  Rational w = parse_rational(weight);
  OperatorWitness chk = check_operator(a, t, k, w);
  if (!chk.pass) {
    c.exit_code = 1;
    if (c.json)
      c.emit("derive", {{"algebra", alg}, {"operator", op}, {"kind", kind}, {"weight", weight}},
             {{"pass", false}, {"detail", chk.detail}});
    else
      c.out << "derive: operator law fails: " << chk.detail << "\n";
    return;
  }
  FiniteAlgebra d = derived_from_operator(a, t, k, w);
  if (c.json) {
    ordered_json res;
    res["pass"] = true;
    res["algebra"] = j_algebra(d);
    c.emit("derive", {{"algebra", alg}, {"operator", op}, {"kind", kind}, {"weight", weight}},
           res);
  } else {
    c.out << algebra_document(d);
  }
}

void run_derive_morphism(Ctx& c, const std::string& alg, const std::string& mor) {
  FiniteAlgebra d = derived_from_morphism(c.ws.algebra(alg), c.ws.morphism(mor));
  if (c.json)
    c.emit("derive-morphism", {{"algebra", alg}, {"morphism", mor}},
           {{"algebra", j_algebra(d)}});
  else
    c.out << algebra_document(d);
}

void run_construct_tilde(Ctx& c, const std::string& alg) {
  TildeResult tr = tilde_algebra(c.ws.algebra(alg));
  if (c.json) {
    ordered_json res;
    res["t0_dim"] = tr.t0_dim;
    res["bar_dim"] = tr.bar_dim();
    res["bar_cols"] = tr.bar_cols;
    res["algebra"] = j_algebra(tr.alg);
    c.emit("construct", {{"kind", "tilde"}, {"algebra", alg}}, res);
  } else {
    c.out << "t0_dim: " << tr.t0_dim << "\nbar_dim: " << tr.bar_dim() << "\n"
          << algebra_document(tr.alg);
  }
}

void run_construct_hat(Ctx& c, const std::string& alg) {
  FiniteAlgebra h = hat_algebra(c.ws.algebra(alg));
  if (c.json)
    c.emit("construct", {{"kind", "hat"}, {"algebra", alg}}, {{"algebra", j_algebra(h)}});
  else
    c.out << algebra_document(h);
}

void run_construct_embed(Ctx& c, const std::string& alg) {
  const FiniteAlgebra& t = c.ws.algebra(alg);
  EmbeddingReport r = canonical_embedding(t);
  if (!(r.injective && r.homomorphic)) c.exit_code = 1;
  if (c.json) {
    ordered_json res;
    res["injective"] = r.injective;
    res["homomorphic"] = r.homomorphic;
    res["detail"] = r.detail;
    res["t0_dim"] = r.tilde.t0_dim;
    res["bar_dim"] = r.tilde.bar_dim();
    res["target"] = j_algebra(r.target);
    res["images"] = ordered_json::array();
    for (int i = 0; i < t.dim(); ++i)
      res["images"].push_back(
          {{"of", t.basis[size_t(i)]}, {"image", r.target.elem_str(r.images[size_t(i)])}});
    c.emit("construct", {{"kind", "embed"}, {"algebra", alg}}, res);
  } else {
    c.out << "injective: " << (r.injective ? "yes" : "no") << "\n"
          << "homomorphic: " << (r.homomorphic ? "yes" : "no") << "\n";
    if (!r.detail.empty()) c.out << "detail: " << r.detail << "\n";
    for (int i = 0; i < t.dim(); ++i)
      c.out << "mu(" << t.basis[size_t(i)]
            << ") = " << r.target.elem_str(r.images[size_t(i)]) << "\n";
    c.out << algebra_document(r.target);
  }
}

void run_construct_tensor(Ctx& c, const std::string& coeff, const std::string& alg,
                          const std::string& mode) {
  FiniteAlgebra r =
      tensor_replicated(c.ws.algebra(coeff), c.ws.algebra(alg), parse_rep_mode(mode));
  if (c.json)
    c.emit("construct", {{"kind", "tensor"}, {"coefficients", coeff}, {"algebra", alg},
                         {"mode", mode}},
           {{"algebra", j_algebra(r)}});
  else
    c.out << algebra_document(r);
}

void run_construct_box(Ctx& c, const std::string& coeff, const std::string& alg) {
  FiniteAlgebra r = box_product(c.ws.algebra(coeff), c.ws.algebra(alg));
  if (c.json)
    c.emit("construct", {{"kind", "box"}, {"coefficients", coeff}, {"algebra", alg}},
           {{"algebra", j_algebra(r)}});
  else
    c.out << algebra_document(r);
}

void run_consequence(Ctx& c, const std::string& sys, const std::string& target_id,
                     const std::string& expr, int degree, bool no_self_check) {
  const IdentitySystem& s = c.ws.system(sys);
  ConsequenceOptions opts;
  opts.self_check = !no_self_check;
  if (target_id.empty() && expr.empty()) {
    ConsequenceSpace sp = consequence_space(s, degree, opts);
    if (c.json)
      c.emit("consequence", {{"system", sys}, {"degree", degree}, {"self_check", !no_self_check}},
             {{"monomials", sp.monomials.size()},
              {"instances", sp.instances.size()},
              {"dim", sp.dim()}});
    else
      c.out << "degree: " << degree << "\nmonomials: " << sp.monomials.size()
            << "\ninstances: " << sp.instances.size() << "\ndim: " << sp.dim() << "\n";
    return;
  }
  LinComb target;
  std::string target_text;
  if (!expr.empty()) {
    target = parse_lincomb(expr, s.sig);
    target_text = expr;
  } else {
    target = c.ws.identity(target_id).id.lhs;
    target_text = target_id;
  }
  std::string why;
  for (const auto& [t, coef] : target.terms()) {
    (void)coef;
    if (!term_valid(t, s.sig, &why))
      throw std::invalid_argument("target not valid over " + s.sig.name() + ": " + why);
  }
  if (degree > 0 && !target.is_zero() && target.terms().begin()->first.leaf_count() != degree)
    throw std::invalid_argument("--degree " + std::to_string(degree) +
                                " does not match the target's degree");
  ConsequenceResult r = is_consequence(target, s, opts);
  const ConsequenceSpace& sp = r.space;
  if (!r.cert.member) c.exit_code = 1;
  if (c.json) {
    ordered_json res;
    res["member"] = r.cert.member;
    res["degree"] = sp.degree;
    res["monomials"] = sp.monomials.size();
    res["instances"] = sp.instances.size();
    res["dim"] = sp.dim();
    ordered_json certs;
    if (r.cert.member) {
      certs["combination"] = ordered_json::array();
      for (const auto& [k, coef] : r.cert.combination) {
        const InstanceProv& p = sp.provenance[size_t(k)];
        ordered_json e;
        e["instance"] = k;
        e["coeff"] = rat_str(coef);
        e["id"] = p.id_name;
        e["context"] = term_str(p.context);
        e["leaf"] = p.marked_leaf;
        e["inners"] = ordered_json::array();
        for (const Term& t : p.inners) e["inners"].push_back(term_str(t));
        e["perm"] = p.perm;
        certs["combination"].push_back(std::move(e));
      }
    } else {
      certs["functional"] = ordered_json::array();
      for (const auto& [t, v] : r.cert.functional)
        certs["functional"].push_back({{"term", term_str(t)}, {"value", rat_str(v)}});
      certs["value"] = rat_str(r.cert.value);
    }
    c.emit("consequence",
           {{"system", sys}, {"target", target_text}, {"self_check", !no_self_check}}, res,
           certs);
  } else {
    c.out << "target: " << lincomb_src(target, s.sig) << "\n"
          << "degree: " << sp.degree << "\nmonomials: " << sp.monomials.size()
          << "\ninstances: " << sp.instances.size() << "\ndim: " << sp.dim() << "\n"
          << "consequence: " << (r.cert.member ? "yes" : "no") << "\n";
    if (r.cert.member) {
      for (const auto& [k, coef] : r.cert.combination)
        c.out << "  " << rat_str(coef) << " * instance " << k << " ["
              << prov_str(sp.provenance[size_t(k)]) << "]\n";
    } else {
      c.out << "separating functional:\n";
      for (const auto& [t, v] : r.cert.functional)
        c.out << "  " << term_str(t) << ": " << rat_str(v) << "\n";
      c.out << "value on target: " << rat_str(r.cert.value) << "\n";
    }
  }
}

void run_codim(Ctx& c, const std::string& sys, int degree, bool no_self_check) {
  ConsequenceOptions opts;
  opts.self_check = !no_self_check;
  ConsequenceSpace sp = consequence_space(c.ws.system(sys), degree, opts);
  long codim = long(sp.monomials.size()) - sp.dim();
  if (c.json)
    c.emit("codim", {{"system", sys}, {"degree", degree}, {"self_check", !no_self_check}},
           {{"monomials", sp.monomials.size()},
            {"instances", sp.instances.size()},
            {"dim", sp.dim()},
            {"codim", codim}});
  else
    c.out << "monomials: " << sp.monomials.size() << "\ninstances: " << sp.instances.size()
          << "\ndim: " << sp.dim() << "\ncodim: " << codim << "\n";
}

void run_equiv(Ctx& c, const std::string& sys_a, const std::string& sys_b, int max_degree,
               bool no_self_check) {
  ConsequenceOptions opts;
  opts.self_check = !no_self_check;
  EquivReport r = systems_equivalent(c.ws.system(sys_a), c.ws.system(sys_b), max_degree, opts);
  if (!r.equivalent) c.exit_code = 1;
  if (c.json) {
    ordered_json res;
    res["equivalent"] = r.equivalent;
    res["details"] = ordered_json::array();
    for (const EquivDetail& d : r.details)
      res["details"].push_back({{"generator_of", d.system},
                                {"identity", d.id_name},
                                {"degree", d.degree},
                                {"member", d.member}});
    c.emit("equiv", {{"a", sys_a}, {"b", sys_b}, {"max_degree", max_degree}}, res);
  } else {
    for (const EquivDetail& d : r.details)
      c.out << d.id_name << " (degree " << d.degree << ", generator of " << d.system
            << "): " << (d.member ? "yes" : "no") << "\n";
    c.out << "equivalent: " << (r.equivalent ? "yes" : "no") << "\n";
  }
}

void run_selftest(Ctx& c, int max_arity) {
  struct Line {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Line> lines;
  auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
    lines.push_back({name, pass, detail});
  };

  PresentationReport pr = verify_comtrias_presentation(max_arity);
  std::string pd = "axiom_checks=" + std::to_string(pr.axiom_checks) +
                   " lemma_tuples=" + std::to_string(pr.lemma_tuples);
  for (const std::string& f : pr.failures) pd += " " + f;
  add("presentation", pr.ok, pd);

  FiniteAlgebra c2 = c2_algebra();
  CheckWitness cw = check_identities(c2, comtrias_axioms_full());
  add("coefficient_algebra", cw.pass, cw.pass ? "" : cw.identity);

  OperatorWitness w1 = check_operator(truncated_polynomials(4), truncated_integration(4),
                                      OperatorKind::rota_baxter, 0);
  add("integration_weight0", w1.pass, w1.detail);

  OperatorWitness w2 =
      check_operator(sl2_algebra(), sl2_neg_projection(), OperatorKind::rota_baxter, 1);
  add("projection_weight1", w2.pass, w2.detail);

  OperatorWitness w3 =
      check_operator(jet2_algebra(), jet2_tsq(), OperatorKind::rota_baxter, 0);
  add("jet_rb0", w3.pass, w3.detail);

  OperatorWitness w4 =
      check_operator(grassmann_a2(), grassmann_a2_tau(), OperatorKind::hom_averaging, 0);
  add("exterior_projection", w4.pass, w4.detail);

  /* Seeded spot check: a relabeled instance stays inside its own degree slice. */
  {
    std::mt19937 rng(static_cast<std::uint32_t>(c.seed));
    ConsequenceSpace sp = consequence_space(as_system(), 3);
    std::uniform_int_distribution<size_t> pick(0, sp.instances.size() - 1);
    auto perms = all_permutations(3);
    std::uniform_int_distribution<size_t> pperm(0, perms.size() - 1);
    bool ok = true;
    for (int rep = 0; rep < 5 && ok; ++rep) {
      LinComb target = act(sp.instances[pick(rng)], perms[pperm(rng)]);
      std::map<int, Rational> combo;
      ok = sp.space.membership(sp.row_of(target), combo);
    }
    add("relabeled_instances", ok, "seed=" + std::to_string(c.seed));
  }

  bool all = true;
  for (const Line& l : lines) all = all && l.pass;
  if (!all) c.exit_code = 1;

  if (c.json) {
    ordered_json res;
    res["pass"] = all;
    res["checks"] = ordered_json::array();
    for (const Line& l : lines)
      res["checks"].push_back({{"name", l.name}, {"pass", l.pass}, {"detail", l.detail}});
    c.emit("selftest", {{"max_arity", max_arity}, {"seed", c.seed}}, res);
  } else {
    for (const Line& l : lines)
      c.out << "selftest " << l.name << ": " << (l.pass ? "pass" : "FAIL")
            << (l.detail.empty() ? "" : " (" + l.detail + ")") << "\n";
    c.out << "selftest: " << (all ? "pass" : "FAIL") << "\n";
  }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"identity systems, their decorated replicas and splittings"};
  app.require_subcommand(1);

  bool json = false;
  long seed = 0;
  bool stdlib = true;
  std::vector<std::string> loads;
  app.add_flag("--json", json, "emit one JSON document");
  app.add_option("--seed", seed, "seed for the randomized self checks");
  app.add_flag("--stdlib,!--no-stdlib", stdlib, "load the bundled presets (default on)");
  app.add_option("--load", loads, "load a .ditri file before running")
      ->check(CLI::ExistingFile);
  app.set_version_flag("--version", std::string(kVersion));

  std::function<void(Ctx&)> run;

  struct {
    std::string system, morphism, algebra, oper, coeff, ident, expr, mode, kind;
    std::string weight = "0";
    std::string sys_b;
    int degree = 0;
    int max_degree = 4;
    int max_arity = 4;
    bool no_self_check = false;
  } o;

  auto* rep = app.add_subcommand("replicate", "decorated replica of a plain system");
  rep->add_option("system", o.system, "system name")->required();
  rep->add_option("--mode", o.mode, "di or tri")->required()->check(CLI::IsMember({"di", "tri"}));
  rep->callback([&] { run = [&](Ctx& c) { run_replicate(c, o.system, o.mode); }; });

  auto* spl = app.add_subcommand("split", "component splitting of a plain system");
  spl->add_option("system", o.system, "system name")->required();
  spl->add_option("--mode", o.mode, "pre or post")
      ->required()
      ->check(CLI::IsMember({"pre", "post"}));
  spl->callback([&] { run = [&](Ctx& c) { run_split(c, o.system, o.mode); }; });

  auto* repm = app.add_subcommand("replicate-morphism", "decorated replica of a morphism");
  repm->add_option("morphism", o.morphism, "morphism name")->required();
  repm->add_option("--mode", o.mode, "di or tri")
      ->required()
      ->check(CLI::IsMember({"di", "tri"}));
  repm->callback([&] { run = [&](Ctx& c) { run_replicate_morphism(c, o.morphism, o.mode); }; });

  auto* splm = app.add_subcommand("split-morphism", "component splitting of a morphism");
  splm->add_option("morphism", o.morphism, "morphism name")->required();
  splm->add_option("--mode", o.mode, "pre or post")
      ->required()
      ->check(CLI::IsMember({"pre", "post"}));
  splm->callback([&] { run = [&](Ctx& c) { run_split_morphism(c, o.morphism, o.mode); }; });

  auto* chk = app.add_subcommand("check", "check a system on a finite algebra");
  chk->add_option("algebra", o.algebra, "algebra name")->required();
  chk->add_option("system", o.system, "system name")->required();
  chk->callback([&] { run = [&](Ctx& c) { run_check(c, o.algebra, o.system); }; });

  auto* chko = app.add_subcommand("check-operator", "check an operator law on an algebra");
  chko->add_option("algebra", o.algebra, "algebra name")->required();
  chko->add_option("operator", o.oper, "operator name")->required();
  chko->add_option("--kind", o.kind, "averaging, hom-averaging, rota-baxter")
      ->required()
      ->check(CLI::IsMember({"averaging", "hom-averaging", "rota-baxter", "rb"}));
  chko->add_option("--weight", o.weight, "rota-baxter weight (rational, default 0)");
  chko->callback(
      [&] { run = [&](Ctx& c) { run_check_operator(c, o.algebra, o.oper, o.kind, o.weight); }; });

  auto* der = app.add_subcommand("derive", "decorated algebra induced by an operator");
  der->add_option("algebra", o.algebra, "algebra name")->required();
  der->add_option("operator", o.oper, "operator name")->required();
  der->add_option("--kind", o.kind, "averaging, hom-averaging, rota-baxter")
      ->required()
      ->check(CLI::IsMember({"averaging", "hom-averaging", "rota-baxter", "rb"}));
  der->add_option("--weight", o.weight, "rota-baxter weight (rational, default 0)");
  der->callback(
      [&] { run = [&](Ctx& c) { run_derive(c, o.algebra, o.oper, o.kind, o.weight); }; });

  auto* derm = app.add_subcommand("derive-morphism", "pull a structure back along a morphism");
  derm->add_option("algebra", o.algebra, "algebra name")->required();
  derm->add_option("morphism", o.morphism, "morphism name")->required();
  derm->callback([&] { run = [&](Ctx& c) { run_derive_morphism(c, o.algebra, o.morphism); }; });

  auto* con = app.add_subcommand("construct", "doubling and tensor constructions");
  con->require_subcommand(1);
  auto* til = con->add_subcommand("tilde", "quotient-extension of a decorated algebra");
  til->add_option("algebra", o.algebra, "algebra name")->required();
  til->callback([&] { run = [&](Ctx& c) { run_construct_tilde(c, o.algebra); }; });
  auto* hat = con->add_subcommand("hat", "doubling of a decorated algebra");
  hat->add_option("algebra", o.algebra, "algebra name")->required();
  hat->callback([&] { run = [&](Ctx& c) { run_construct_hat(c, o.algebra); }; });
  auto* emb = con->add_subcommand("embed", "canonical embedding into the coefficient tensor");
  emb->add_option("algebra", o.algebra, "algebra name")->required();
  emb->callback([&] { run = [&](Ctx& c) { run_construct_embed(c, o.algebra); }; });
  auto* ten = con->add_subcommand("tensor", "coefficient tensor of a plain algebra");
  ten->add_option("coefficients", o.coeff, "coefficient algebra name")->required();
  ten->add_option("algebra", o.algebra, "plain algebra name")->required();
  ten->add_option("--mode", o.mode, "di or tri")->required()->check(CLI::IsMember({"di", "tri"}));
  ten->callback([&] { run = [&](Ctx& c) { run_construct_tensor(c, o.coeff, o.algebra, o.mode); }; });
  auto* box = con->add_subcommand("box", "plain product collapsing all decorations");
  box->add_option("coefficients", o.coeff, "coefficient algebra name")->required();
  box->add_option("algebra", o.algebra, "decorated algebra name")->required();
  box->callback([&] { run = [&](Ctx& c) { run_construct_box(c, o.coeff, o.algebra); }; });

  auto* cons = app.add_subcommand("consequence", "decide membership in the substitution closure");
  cons->add_option("system", o.system, "system name")->required();
  cons->add_option("--degree", o.degree, "slice degree")->check(CLI::Range(1, 6));
  auto* copt_t = cons->add_option("--target", o.ident, "target identity name");
  auto* copt_e = cons->add_option("--expr", o.expr, "target expression over the system's signature");
  copt_t->excludes(copt_e);
  cons->add_flag("--no-self-check", o.no_self_check, "skip the internal cross checks");
  cons->callback([&] {
    run = [&](Ctx& c) {
      if (o.ident.empty() && o.expr.empty() && o.degree <= 0)
        throw std::invalid_argument("consequence needs --degree, --target or --expr");
      run_consequence(c, o.system, o.ident, o.expr, o.degree, o.no_self_check);
    };
  });

  auto* cod = app.add_subcommand("codim", "codimension of the degree-n consequence slice");
  cod->add_option("system", o.system, "system name")->required();
  cod->add_option("--degree", o.degree, "slice degree")->required()->check(CLI::Range(1, 6));
  cod->add_flag("--no-self-check", o.no_self_check, "skip the internal cross checks");
  cod->callback([&] { run = [&](Ctx& c) { run_codim(c, o.system, o.degree, o.no_self_check); }; });

  auto* eqv = app.add_subcommand("equiv", "mutual consequence of two generator systems");
  eqv->add_option("a", o.system, "first system")->required();
  eqv->add_option("b", o.sys_b, "second system")->required();
  eqv->add_option("--max-degree", o.max_degree, "largest generator degree allowed")
      ->check(CLI::Range(1, 6));
  eqv->add_flag("--no-self-check", o.no_self_check, "skip the internal cross checks");
  eqv->callback([&] {
    run = [&](Ctx& c) { run_equiv(c, o.system, o.sys_b, o.max_degree, o.no_self_check); };
  });

  auto* st = app.add_subcommand("selftest", "internal consistency checks");
  st->add_option("--max-arity", o.max_arity, "substitution depth for the presentation check")
      ->check(CLI::Range(3, 6));
  st->callback([&] { run = [&](Ctx& c) { run_selftest(c, o.max_arity); }; });

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
  for (CLI::App* sub : con->get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("ditri");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Ctx ctx{Workspace{}, out, err};
  ctx.json = json;
  ctx.seed = seed;
  try {
    if (stdlib) {
      std::string dir = default_preset_dir();
      if (!dir.empty() && std::filesystem::is_directory(dir)) ctx.ws.load_preset_dir(dir);
    }
    for (const std::string& f : loads) ctx.ws.load_file(f);
    run(ctx);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return ctx.exit_code;
}

int run_cli_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

} // namespace ditri
