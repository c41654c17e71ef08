#pragma once

// JSON rendering of certificates and reports (schema semiring-lab/report-v1).
// Needs nlohmann/json on the include path.

#include <gmpxx.h>

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "semiring_lab/abhyankar/abhyankar.hpp"
#include "semiring_lab/lab/conditions.hpp"
#include "semiring_lab/lab/cone.hpp"
#include "semiring_lab/semiring/structure.hpp"

namespace semiring_lab::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "semiring-lab/report-v1";

inline json poly(const Polynomial& p, const VarNames& names) { return format(p, names); }
inline json poly(const Polynomial& p) { return format(p); }

inline json polys(const std::vector<Polynomial>& ps, const VarNames& names) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(format(p, names));
  return out;
}

inline json rational(const mpq_class& q) { return q.get_str(); }

inline json exponents(const ExponentVector& u) { return to_string(u); }

inline std::string verdict(Truth t) {
  switch (t) {
    case Truth::yes:
      return "Yes";
    case Truth::no:
      return "No";
    case Truth::unknown:
      return "Unknown";
  }
  return "Unknown";
}

inline std::string verdict(Membership m) {
  switch (m) {
    case Membership::member:
      return "Member";
    case Membership::non_member:
      return "NonMember";
    case Membership::unknown:
      return "Unknown";
  }
  return "Unknown";
}

inline json model(const ModelWitness& w) {
  return {{"model", w.model}, {"assignment", w.assignment}, {"values", w.values}};
}

/// Relations are numbered from 1, in input order.
inline json derivation(const Derivation& d, const VarNames& names) {
  json out = json::array();
  for (const auto& s : d) {
    out.push_back({{"before", poly(s.before, names)},
                   {"after", poly(s.after, names)},
                   {"relation", s.relation + 1},
                   {"direction", s.forward ? "forward" : "backward"},
                   {"multiplier", s.multiplier.is_one() ? "1" : detail::format_monomial(s.multiplier, names)}});
  }
  return out;
}

inline json element(const SubringElement& e, const VarNames& ambient, const VarNames& tags) {
  return {{"ambient", poly(e.ambient, ambient)}, {"representation", poly(e.representation, tags)}};
}

inline json fraction(const FractionCertificate& f, const VarNames& ambient, const VarNames& tags) {
  return {{"target", poly(f.target, ambient)},
          {"numerator", element(f.numerator, ambient, tags)},
          {"denominator", element(f.denominator, ambient, tags)},
          {"residual", poly(f.residual, ambient)},
          {"checked", f.holds()}};
}

inline json univar(const UnivarOverSubring& h, const VarNames& ambient, const VarNames& tags) {
  json out = json::array();
  for (const auto& c : h.coefficients) out.push_back(element(c, ambient, tags));
  return out;
}

inline json witness(const ConditionCWitness& w, const VarNames& ambient, const VarNames& tags) {
  return {{"l0", poly(w.l0, ambient)},
          {"a", poly(w.a, ambient)},
          {"l", poly(w.l, ambient)},
          {"h", univar(w.h, ambient, tags)},
          {"route", w.route},
          {"root_checked", w.root_checked},
          {"outside_ideal", w.outside_ideal}};
}

inline json ia(const IAWitness& w, const VarNames& tags) {
  const VarNames a = VarNames::ambient(2);
  return {{"n", w.n},
          {"first", element(w.first, a, tags)},
          {"second", element(w.second, a, tags)},
          {"multiplier", poly(w.multiplier, a)},
          {"expansion", poly(w.expansion, a)},
          {"first_in_I", w.first_in_I},
          {"second_in_I", w.second_in_I},
          {"checked", w.holds()}};
}

inline json relations(const RelationVerification& v, const VarNames& tags) {
  json rel = json::array();
  for (const auto& r : v.relations) rel.push_back({{"relation", poly(r.relation, tags)}, {"value", rational(r.value)}});
  return {{"attempted", v.attempted}, {"complete", v.complete}, {"verdict", verdict(v.verdict)}, {"relations", rel}};
}

inline json germ(const GermCertificate& g) {
  const VarNames t({"t"});
  return {{"k", g.k},
          {"images", polys(g.images, t)},
          {"substitution_checked", g.substitution_checked},
          {"constants_checked", g.constants_checked},
          {"checked", g.holds()}};
}

inline json well_definedness(const WellDefinedness& w) {
  const VarNames tags = VarNames::tags(w.k);
  return {{"k", w.k},
          {"verdict", verdict(w.verdict)},
          {"relation_ideal", relations(w.relations, tags)},
          {"germ", germ(w.germ)}};
}

inline json non_extendability(const NonExtendability& ne) {
  json steps = json::array();
  const VarNames t({"t2"});
  for (const auto& s : ne.steps) {
    steps.push_back({{"n", s.n},
                     {"phi_fn", rational(s.phi_fn)},
                     {"coefficient", rational(s.coefficient)},
                     {"image", poly(s.image, t)},
                     {"required", rational(s.required)},
                     {"contradiction", s.contradiction}});
  }
  json out = {{"steps", steps}};
  out["first_contradiction"] = ne.first ? json(*ne.first) : json(nullptr);
  return out;
}

inline json cone(const Cone& c) {
  json members = json::array();
  for (const auto& u : c.members) members.push_back(exponents(u));
  return {{"n", c.n}, {"box", c.box}, {"provenance", c.provenance}, {"unknown", c.unknown}, {"members", members}};
}

inline json purity(const Purity& p) {
  json out = {{"members", p.members}};
  if (p.witness) {
    out["witness"] = {{"a", exponents(p.witness->a)}, {"k", p.witness->k}, {"quotient", exponents(p.witness->quotient)}};
  }
  return out;
}

inline json monomial_fractions(const std::vector<MonomialFraction>& fs, std::size_t n) {
  const VarNames a = VarNames::ambient(n);
  json out = json::array();
  for (const auto& f : fs) {
    out.push_back({{"variable", a[f.variable]},
                   {"numerator", poly(f.numerator, a)},
                   {"denominator", poly(f.denominator, a)},
                   {"numerator_member", verdict(f.numerator_member)},
                   {"denominator_member", verdict(f.denominator_member)},
                   {"checked", f.holds()}});
  }
  return out;
}

inline json condition_report(const ConditionReport& r) {
  const VarNames a = VarNames::ambient(r.ambient_vars);
  json c = json::object();
  json qf = json::array();
  for (const auto& f : r.quotient_field) qf.push_back(fraction(f, a, r.tags));
  c["a"] = {{"summary", r.a.summary}, {"fractions", qf}};
  json b = {{"summary", r.b.summary}};
  if (r.unit) {
    json elems = json::array();
    for (const auto& e : r.unit->elements) elems.push_back(element(e, a, r.tags));
    b["identity"] = {{"elements", elems},
                     {"cofactors", polys(r.unit->cofactors, a)},
                     {"expansion", poly(r.unit->expansion, a)},
                     {"elements_in_I", r.unit->elements_in_I},
                     {"checked", r.unit->holds()}};
  }
  c["b"] = b;
  json ws = json::array();
  for (const auto& w : r.c_witnesses) ws.push_back(witness(w, a, r.tags));
  c["c"] = {{"summary", r.c.summary}, {"witnesses", ws}, {"unresolved_l0", polys(r.c_unresolved, a)}};
  json d = {{"summary", r.d.summary}};
  json pre = json::array();
  for (const auto& p : r.preimages) {
    pre.push_back({{"m", p.m}, {"element", element(p.element, a, r.evidence_tags)}, {"value", rational(p.value)}});
  }
  d["preimages"] = pre;
  if (!r.preimages.empty()) d["evidence"] = "m <= " + std::to_string(r.preimages.back().m);
  if (r.d_refutation) {
    d["refutation"] = {{"denominator", r.d_refutation->denominator.get_str()}, {"prime", r.d_refutation->prime}};
  }
  c["d"] = d;
  return c;
}

inline json condition_verdicts(const ConditionReport& r) {
  return {{"a", to_string(r.a.verdict)},
          {"b", to_string(r.b.verdict)},
          {"c", to_string(r.c.verdict)},
          {"d", to_string(r.d.verdict)}};
}

inline json lab_budget(const LabBudget& b) {
  return {{"groebner_degree", b.groebner.max_degree},
          {"groebner_steps", b.groebner.max_steps},
          {"falsifier_shifts", b.falsifier.max_shifts},
          {"evidence", b.evidence},
          {"preimage_degree", b.preimage_degree}};
}

}  // namespace semiring_lab::report
