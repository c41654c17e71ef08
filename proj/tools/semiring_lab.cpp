// semiring-lab: command-line front end for the library.
//
// Exit codes: 0 success, 1 verification failure (a verdict differs from the
// expected one, or an Unknown under --strict), 2 usage or input error.

#include <CLI11.hpp>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "semiring_lab/abhyankar/abhyankar.hpp"
#include "semiring_lab/groebner/groebner.hpp"
#include "semiring_lab/groebner/subring.hpp"
#include "semiring_lab/lab/conditions.hpp"
#include "semiring_lab/lab/cone.hpp"
#include "semiring_lab/lab/subsets.hpp"
#include "semiring_lab/report/json.hpp"
#include "semiring_lab/semiring/congruence.hpp"
#include "semiring_lab/semiring/structure.hpp"

namespace sl = semiring_lab;
namespace rp = semiring_lab::report;
using rp::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Budgets {
  std::uint64_t degree = 8;
  std::uint64_t coefficient = 64;
  std::uint64_t steps = 100000;
  std::uint64_t box = 6;
  std::uint64_t k = 6;
};

// Values set on the command line; unset ones fall back to the environment
// and then to the defaults.
struct Flags {
  bool json = false;
  bool strict = false;
  std::optional<std::uint64_t> degree, coefficient, steps, box, k;
  std::string expect;
  std::size_t vars = 0;
};

Budgets environment_budgets() {
  Budgets b;
  const char* env = std::getenv("SEMIRING_LAB_BUDGET");
  if (env == nullptr) return b;
  std::stringstream in(env);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("SEMIRING_LAB_BUDGET: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    std::uint64_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoull(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("SEMIRING_LAB_BUDGET: bad number in '" + item + "'");
    }
    if (value == 0) throw UsageError("SEMIRING_LAB_BUDGET: budgets must be positive");
    if (key == "deg") b.degree = value;
    else if (key == "coef") b.coefficient = value;
    else if (key == "steps") b.steps = value;
    else if (key == "box") b.box = value;
    else if (key == "k") b.k = value;
    else throw UsageError("SEMIRING_LAB_BUDGET: unknown key '" + key + "'");
  }
  return b;
}

// ---------------------------------------------------------------- reports

struct Report {
  std::string command;
  std::string primary;  // verdict set to Unknown if the budget runs out
  json verdicts = json::object();
  json expected = json::object();
  json certificates = json::object();
  json result;
  json budget = json::object();
  bool exhausted = false;

  void verdict(const std::string& key, const std::string& value, json certificate) {
    verdicts[key] = value;
    certificates[key] = std::move(certificate);
  }
};

bool is_unknown(const json& v) { return v.get<std::string>() == "Unknown"; }

int exit_code(const Report& r, const Flags& f) {
  for (const auto& [key, want] : r.expected.items()) {
    if (!r.verdicts.contains(key)) return 1;
    if (is_unknown(r.verdicts[key])) continue;
    if (r.verdicts[key] != want) return 1;
  }
  if (!f.expect.empty()) {
    if (r.primary.empty() || !r.verdicts.contains(r.primary)) return 1;
    if (!is_unknown(r.verdicts[r.primary]) && r.verdicts[r.primary].get<std::string>() != f.expect) return 1;
  }
  if (f.strict) {
    for (const auto& [key, v] : r.verdicts.items()) {
      if (is_unknown(v)) return 1;
    }
    if (r.exhausted) return 1;
  }
  return 0;
}

void flatten(const json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) {
      if (key != "summary") flatten(v, path.empty() ? key : path + "." + key, out);
    }
  } else if (j.is_array()) {
    if (j.empty()) {
      out << "  " << path << " = []\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << "  " << path << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void print_text(const json& doc, std::ostream& out) {
  const json& verdicts = doc["verdicts"];
  const json& result = doc["result"];
  if (verdicts.empty() && !result.is_null()) {
    if (result.is_array()) {
      for (const auto& r : result) out << (r.is_string() ? r.get<std::string>() : r.dump()) << "\n";
    } else if (result.is_object()) {
      flatten(result, "", out);
    } else {
      out << (result.is_string() ? result.get<std::string>() : result.dump()) << "\n";
    }
    return;
  }
  out << doc["command"].get<std::string>() << "\n";
  std::size_t width = 0;
  for (const auto& [key, v] : verdicts.items()) width = std::max(width, key.size());
  for (const auto& [key, v] : verdicts.items()) {
    out << "  " << key << std::string(width - key.size() + 2, ' ') << v.get<std::string>();
    const json& cert = doc["certificates"][key];
    if (cert.is_object() && cert.contains("summary")) out << "  " << cert["summary"].get<std::string>();
    out << "\n";
  }
  if (!result.is_null()) {
    out << "result:\n";
    if (result.is_object() || result.is_array()) {
      flatten(result, "result", out);
    } else {
      out << "  " << (result.is_string() ? result.get<std::string>() : result.dump()) << "\n";
    }
  }
  out << "certificates:\n";
  flatten(doc["certificates"], "", out);
  if (doc["exhausted"].get<bool>()) out << "budget exhausted\n";
}

// ----------------------------------------------------------------- inputs

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream in(text);
  while (std::getline(in, item, sep)) {
    const auto first = item.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = item.find_last_not_of(" \t\r");
    out.push_back(item.substr(first, last - first + 1));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// One polynomial per line; blank lines and '#' comments are skipped.
std::vector<std::string> polynomial_lines(const std::string& text) {
  std::vector<std::string> out;
  for (auto& line : split(text, '\n')) {
    if (line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::size_t arity(const std::vector<std::string>& texts, const Flags& f) {
  if (f.vars > 0) return f.vars;
  std::size_t n = 1;
  for (const auto& t : texts) n = std::max(n, sl::infer_ambient_arity(t));
  return n;
}

std::vector<sl::Polynomial> parse_all(const std::vector<std::string>& texts, std::size_t n, sl::Domain d) {
  std::vector<sl::Polynomial> out;
  const sl::VarNames names = sl::VarNames::ambient(n);
  for (const auto& t : texts) out.push_back(sl::parse_polynomial(t, names, d));
  return out;
}

std::vector<mpq_class> parse_rationals(const std::string& text) {
  std::vector<mpq_class> out;
  for (const auto& item : split(text, ',')) {
    mpq_class q;
    if (q.set_str(item, 10) != 0) throw UsageError("not a rational number: '" + item + "'");
    q.canonicalize();
    out.push_back(q);
  }
  if (out.empty()) throw UsageError("empty list of rationals");
  return out;
}

std::vector<sl::ExponentVector> parse_vectors(const std::string& text) {
  std::vector<sl::ExponentVector> out;
  for (auto item : split(text, ';')) {
    if (item.size() < 2 || item.front() != '(' || item.back() != ')') {
      throw UsageError("exponent vectors look like (2,0): got '" + item + "'");
    }
    sl::ExponentVector u;
    for (const auto& x : split(item.substr(1, item.size() - 2), ',')) {
      try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(x, &used);
        if (used != x.size() || v > 64) throw std::invalid_argument(x);
        u.push_back(static_cast<std::uint32_t>(v));
      } catch (const std::exception&) {
        throw UsageError("bad exponent '" + x + "' in " + item);
      }
    }
    if (!out.empty() && out.front().size() != u.size()) throw UsageError("exponent vectors of different lengths");
    out.push_back(std::move(u));
  }
  return out;
}

// Either an inline ';'-separated list or a file with one entry per line.
std::vector<std::string> list_input(const std::string& inline_list, const std::string& file, const char* what) {
  if (!inline_list.empty() && !file.empty()) throw UsageError(std::string("give ") + what + " inline or as a file, not both");
  if (!file.empty()) return polynomial_lines(read_file(file));
  if (!inline_list.empty()) return split(inline_list, ';');
  throw UsageError(std::string("missing ") + what);
}

std::string relations_text(const std::string& inline_rel, const std::string& file) {
  if (!inline_rel.empty() && !file.empty()) throw UsageError("give relations inline or as a file, not both");
  if (!file.empty()) return read_file(file);
  std::string out;
  for (const auto& r : split(inline_rel, ';')) out += r + "\n";
  return out;
}

// ------------------------------------------------------------- commands

struct Context {
  Flags flags;
  Budgets env;
  Budgets effective() const {
    Budgets b = env;
    if (flags.degree) b.degree = *flags.degree;
    if (flags.coefficient) b.coefficient = *flags.coefficient;
    if (flags.steps) b.steps = *flags.steps;
    if (flags.box) b.box = *flags.box;
    if (flags.k) b.k = *flags.k;
    return b;
  }
  sl::GroebnerBudget groebner() const {
    const Budgets b = effective();
    sl::GroebnerBudget g;
    g.max_degree = b.degree;
    if (flags.steps || env.steps != Budgets{}.steps) g.max_steps = b.steps;
    return g;
  }
  sl::SemiringBudget semiring() const {
    const Budgets b = effective();
    return {b.degree, b.coefficient, b.steps};
  }
  // Abhyankar contexts default to degree cap 2k unless a degree was given.
  std::optional<sl::GroebnerBudget> abhyankar_groebner() const {
    if (!flags.degree && env.degree == Budgets{}.degree) return std::nullopt;
    return groebner();
  }
};

json groebner_budget_json(const sl::GroebnerBudget& g) {
  return {{"degree", g.max_degree}, {"steps", g.max_steps}, {"basis", g.max_basis}};
}

json semiring_budget_json(const sl::SemiringBudget& b) {
  return {{"degree", b.max_degree}, {"coefficient", b.max_coefficient}, {"steps", b.max_steps}};
}

struct PolyArgs {
  std::vector<std::string> operands;
  std::string at, images, order = "grlex";
};

sl::MonomialOrder parse_order(const std::string& name) {
  if (name == "lex") return sl::MonomialOrder::lex();
  if (name == "grlex") return sl::MonomialOrder::graded_lex();
  throw UsageError("unknown monomial order '" + name + "' (lex, grlex)");
}

Report run_poly(const std::string& op, const PolyArgs& a, const Context& ctx) {
  Report r;
  const std::size_t need = (op == "add" || op == "mul") ? 2 : 1;
  if (a.operands.size() != need) throw UsageError("poly " + op + " takes " + std::to_string(need) + " polynomial(s)");
  std::vector<std::string> texts = a.operands;
  if (op == "subst") {
    for (const auto& s : split(a.images, ';')) texts.push_back(s);
  }
  std::size_t n = arity(a.operands, ctx.flags);
  if (op == "eval") n = std::max(n, parse_rationals(a.at).size());
  const auto ps = parse_all(a.operands, n, sl::Domain::rational);
  const sl::VarNames names = sl::VarNames::ambient(n);
  if (op == "add") {
    r.result = sl::format(ps[0] + ps[1], names);
  } else if (op == "mul") {
    r.result = sl::format(ps[0] * ps[1], names);
  } else if (op == "eval") {
    const auto point = parse_rationals(a.at);
    if (point.size() != n) throw UsageError("--at needs " + std::to_string(n) + " values");
    r.result = sl::poly_eval(ps[0], point).value().get_str();
  } else if (op == "subst") {
    const auto image_texts = split(a.images, ';');
    if (image_texts.size() != n) throw UsageError("--images needs " + std::to_string(n) + " polynomials");
    const std::size_t m = arity(image_texts, Flags{});
    const auto images = parse_all(image_texts, m, sl::Domain::rational);
    r.result = sl::format(sl::poly_subst(ps[0], images), sl::VarNames::ambient(m));
  } else if (op == "lt") {
    const auto [m, c] = sl::leading_term(ps[0], parse_order(a.order));
    r.result = sl::format(sl::Polynomial::term(m, c.value(), sl::Domain::rational), names);
  }
  return r;
}

struct GroebnerArgs {
  std::string gens, ideal, poly, order = "grlex";
};

Report run_groebner(const std::string& op, const GroebnerArgs& a, const Context& ctx) {
  Report r;
  const sl::GroebnerBudget budget = ctx.groebner();
  r.budget = groebner_budget_json(budget);
  auto texts = list_input(a.gens, a.ideal, "generators (--gens or --ideal)");
  std::vector<std::string> all = texts;
  if (!a.poly.empty()) all.push_back(a.poly);
  const std::size_t n = arity(all, ctx.flags);
  const sl::VarNames names = sl::VarNames::ambient(n);
  const auto gens = parse_all(texts, n, sl::Domain::rational);
  auto need_poly = [&] {
    if (a.poly.empty()) throw UsageError("missing --poly");
    return sl::parse_polynomial(a.poly, names, sl::Domain::rational);
  };
  if (op == "basis" || op == "nf") {
    r.primary = "basis";
    const sl::GroebnerBasis gb = sl::buchberger(gens, parse_order(a.order), budget);
    const json stats = {{"pairs_reduced", gb.stats().pairs_reduced},
                        {"pairs_deferred", gb.stats().pairs_deferred},
                        {"max_pair_degree", gb.stats().max_pair_degree}};
    r.exhausted = !gb.complete();
    r.verdict("basis", gb.complete() ? "Complete" : "Unknown",
              {{"summary", gb.complete() ? "reduced basis" : "budget reached before completion"},
               {"order", std::string(gb.order().name())},
               {"basis", rp::polys(gb.generators(), names)},
               {"stats", stats}});
    if (op == "nf") {
      const sl::Polynomial nf = sl::normal_form(need_poly(), gb);
      r.result = sl::format(nf, names);
    } else {
      r.result = rp::polys(gb.generators(), names);
    }
  } else if (op == "member") {
    r.primary = "membership";
    const sl::Polynomial p = need_poly();
    const sl::MembershipCertificate cert = sl::ideal_membership(p, gens, budget);
    json c = {{"normal_form", sl::format(cert.normal_form, names)}};
    if (cert.verdict == sl::Membership::member) {
      sl::Polynomial sum(n, sl::Domain::rational);
      for (std::size_t i = 0; i < gens.size(); ++i) sum += cert.cofactors[i] * gens[i];
      c["cofactors"] = rp::polys(cert.cofactors, names);
      c["integral"] = cert.integral;
      c["recombined"] = sum == p.with_domain(sl::Domain::rational);
      c["summary"] = "sum of cofactors times generators equals the query";
      if (sum != p.with_domain(sl::Domain::rational)) r.expected["membership"] = "NonMember";
    } else if (cert.verdict == sl::Membership::non_member) {
      c["summary"] = "nonzero normal form modulo a complete basis";
    } else {
      c["summary"] = "basis incomplete within budget";
      r.exhausted = true;
    }
    r.verdict("membership", rp::verdict(cert.verdict), c);
  } else if (op == "relations") {
    r.primary = "relations";
    const sl::VarNames tags = sl::VarNames::indexed("X", 1, gens.size());
    const sl::RelationIdeal rel = sl::relation_ideal(gens, budget);
    r.exhausted = !rel.complete;
    r.verdict("relations", rel.complete ? "Complete" : "Unknown",
              {{"summary", rel.complete ? "generators of the relation ideal" : "partial list, budget reached"},
               {"tags", tags.names()},
               {"relations", rp::polys(rel.generators, tags)}});
    r.result = rp::polys(rel.generators, tags);
  } else if (op == "subalg") {
    r.primary = "membership";
    const sl::VarNames tags = sl::VarNames::indexed("X", 1, gens.size());
    const sl::Subring s(gens, budget);
    const sl::MembershipCertificate cert = s.membership(need_poly());
    json c = {{"tags", tags.names()}};
    if (cert.representation) {
      c["representation"] = sl::format(*cert.representation, tags);
      c["summary"] = "substituting the generators into the representation gives the query";
    } else {
      c["summary"] = cert.verdict == sl::Membership::non_member ? "remainder involves ambient variables"
                                                               : "basis incomplete within budget";
    }
    if (cert.verdict == sl::Membership::unknown) r.exhausted = true;
    r.verdict("membership", rp::verdict(cert.verdict), c);
  } else {
    throw UsageError("unknown groebner operation " + op);
  }
  return r;
}

struct PresentationArgs {
  std::string rel, relations, lhs, rhs, tag = "Q", elem;
  std::size_t limit = 64;
};

Report run_presentation(const std::string& op, const PresentationArgs& a, const Context& ctx) {
  Report r;
  const std::string text = relations_text(a.rel, a.relations);
  std::vector<std::string> all{text};
  for (const auto& s : {a.lhs, a.rhs, a.elem}) {
    if (!s.empty()) all.push_back(s);
  }
  const std::size_t n = arity(all, ctx.flags);
  const sl::Presentation pres = sl::parse_presentation(text, n);
  const sl::VarNames names = sl::VarNames::ambient(n);
  const sl::SemiringBudget budget = ctx.semiring();
  r.budget = semiring_budget_json(budget);
  auto elem = [&](const std::string& s, const char* flag) {
    if (s.empty()) throw UsageError(std::string("missing ") + flag);
    return sl::parse_polynomial(s, names, sl::Domain::natural);
  };
  auto equivalence = [&](const std::string& key, const sl::Equivalence& eq, const std::string& what) {
    json c = json::object();
    if (eq.derivation) {
      c["summary"] = "derivation " + what;
      c["derivation"] = rp::derivation(*eq.derivation, names);
      c["replayed"] = true;
    } else if (eq.separation) {
      c["summary"] = "separated in a model of the relations";
      c["model"] = rp::model(*eq.separation);
    } else {
      c["summary"] = "undecided within budget";
    }
    r.verdict(key, rp::verdict(eq.verdict), c);
  };
  if (op == "idempotent") {
    r.primary = "idempotent";
    const auto cc = sl::congruence_close(pres, budget);
    const sl::Equivalence eq = sl::is_add_idempotent(cc);
    if (eq.derivation && !sl::replay(pres, pres.constant(2), pres.constant(1), *eq.derivation)) {
      r.expected["idempotent"] = "No";
    }
    equivalence("idempotent", eq, "1 + 1 ~> 1");
    r.exhausted = eq.verdict == sl::Truth::unknown;
  } else if (op == "cancellative") {
    r.primary = "cancellative";
    const sl::Cancellativity c = sl::is_add_cancellative(pres);
    json cert = {{"summary", c.reason}};
    if (c.witness) {
      cert["a"] = sl::format(c.witness->a, names);
      cert["b"] = sl::format(c.witness->b, names);
      cert["c"] = sl::format(c.witness->c, names);
      cert["derivation"] = rp::derivation(c.witness->derivation, names);
      cert["separation"] = rp::model(c.witness->separation);
    }
    r.verdict("cancellative", rp::verdict(c.verdict), cert);
  } else if (op == "equiv") {
    r.primary = "equivalent";
    const auto cc = sl::congruence_close(pres, budget);
    const sl::Equivalence eq = sl::words_equivalent(elem(a.lhs, "--lhs"), elem(a.rhs, "--rhs"), cc);
    equivalence("equivalent", eq, "lhs ~> rhs");
    r.exhausted = eq.verdict == sl::Truth::unknown;
  } else if (op == "leq") {
    r.primary = "leq";
    const auto cc = sl::congruence_close(pres, budget);
    const sl::PresentedOrder o = sl::preorder_leq(elem(a.lhs, "--lhs"), elem(a.rhs, "--rhs"), cc);
    json c = json::object();
    if (o.c) {
      c["summary"] = "rhs ~ lhs + c";
      c["c"] = sl::format(*o.c, names);
      if (o.derivation) c["derivation"] = rp::derivation(*o.derivation, names);
    } else if (o.refutation) {
      c["summary"] = "a model of the relations puts lhs above rhs";
      c["model"] = rp::model(*o.refutation);
    } else {
      c["summary"] = "undecided within budget";
    }
    r.verdict("leq", rp::verdict(o.verdict), c);
    r.exhausted = o.verdict == sl::Truth::unknown;
  } else if (op == "find-l") {
    r.primary = "L";
    const auto cc = sl::congruence_close(pres, budget);
    const sl::LSample s = sl::find_L(cc, a.limit);
    json ds = json::array();
    for (const auto& d : s.derivations) ds.push_back(rp::derivation(d, names));
    r.verdict("L", s.elements.empty() ? "Unknown" : "Found",
              {{"summary", s.elements.empty() ? "no l with l + 1 = l among the candidates"
                                              : "elements with l + 1 = l, derivations replayed"},
               {"elements", rp::polys(s.elements, names)},
               {"derivations", ds},
               {"candidates", s.candidates},
               {"undecided", s.undecided},
               {"closure_checks", s.closure_checks},
               {"closure_holds", s.closure_holds}});
    r.result = rp::polys(s.elements, names);
  } else if (op == "subset") {
    sl::SubsetTag tag;
    if (a.tag == "P") tag = sl::SubsetTag::P;
    else if (a.tag == "Q") tag = sl::SubsetTag::Q;
    else if (a.tag == "L") tag = sl::SubsetTag::L;
    else throw UsageError("--tag must be P, Q or L");
    r.primary = "in_" + a.tag;
    const auto cc = sl::congruence_close(pres, budget);
    const sl::SubsetAnswer ans = sl::subset_member(tag, elem(a.elem, "--elem"), cc);
    r.verdict(r.primary, rp::verdict(ans.verdict), {{"summary", ans.evidence}});
  } else {
    throw UsageError("unknown presentation operation " + op);
  }
  return r;
}

struct AbhyankarArgs {
  std::size_t n = 0, nmax = 10, shifts = 8, evidence = 20;
  std::string l0 = "T1*T2", poly, elem;
  bool no_elim = false;
};

std::size_t truncation(const Context& ctx) { return static_cast<std::size_t>(ctx.effective().k); }

sl::AbhyankarContext make_context(const Context& ctx, const AbhyankarArgs& a, Report& r) {
  const std::size_t k = truncation(ctx);
  const auto budget = ctx.abhyankar_groebner();
  const sl::GroebnerBudget used = budget.value_or(sl::GroebnerBudget{2 * k, sl::GroebnerBudget{}.max_steps, sl::GroebnerBudget{}.max_basis});
  r.budget = groebner_budget_json(used);
  r.budget["k"] = k;
  r.budget["elimination"] = !a.no_elim;
  return sl::AbhyankarContext(k, {budget, !a.no_elim});
}

json well_defined_certificate(const sl::WellDefinedness& wd) {
  json c = rp::well_definedness(wd);
  c["summary"] = wd.germ.holds() ? "germ substitution checked" : "relation ideal route";
  return c;
}

Report run_abhyankar(const std::string& op, const AbhyankarArgs& a, const Context& ctx) {
  Report r;
  const sl::VarNames t = sl::VarNames::ambient(2);
  if (op == "gen") {
    if (a.n > 0) {
      r.result = sl::format(sl::abhyankar_generator(a.n), t);
    } else {
      r.result = rp::polys(sl::abhyankar_generators(truncation(ctx)), t);
    }
    return r;
  }
  if (op == "nonext") {
    r.primary = "contradiction";
    const sl::NonExtendability ne = sl::non_extendability(a.nmax);
    json c = rp::non_extendability(ne);
    if (ne.first) {
      const std::string n = std::to_string(*ne.first), n1 = std::to_string(*ne.first + 1);
      c["summary"] = "1/" + n1 + " = phi(f" + n1 + ") = (" + n + "*phi(f" + n + ") - 1)*t2 = 0*t2";
    } else {
      c["summary"] = "no contradiction up to nmax";
    }
    r.verdict("contradiction", ne.first ? "Yes" : "No", c);
    r.expected["contradiction"] = "Yes";
    return r;
  }
  if (op == "germ") {
    r.primary = "germ";
    const sl::GermCertificate g = sl::germ_certificate(truncation(ctx));
    json c = rp::germ(g);
    c["summary"] = "rho(f_n) = g_n with g_n(0) = 1/n";
    r.verdict("germ", g.holds() ? "Holds" : "Fails", c);
    r.expected["germ"] = "Holds";
    return r;
  }
  const sl::AbhyankarContext context = make_context(ctx, a, r);
  const sl::VarNames tags = context.ring().tag_names();
  const sl::WellDefinedness& wd = context.well_definedness();
  if (op == "wd") {
    r.primary = "well_defined";
    r.verdict("well_defined", rp::verdict(wd.verdict), well_defined_certificate(wd));
    r.expected["well_defined"] = "Yes";
    r.exhausted = wd.relations.attempted && !wd.relations.complete;
  } else if (op == "verify") {
    r.primary = "well_defined";
    r.verdict("well_defined", rp::verdict(wd.verdict), well_defined_certificate(wd));
    sl::LabBudget lb;
    lb.groebner = ctx.groebner();
    lb.falsifier.max_shifts = a.shifts;
    lb.evidence = a.evidence;
    const sl::Polynomial l0 = sl::parse_polynomial(a.l0, t, sl::Domain::natural);
    const sl::ConditionReport cr = sl::verify_conditions(context, {l0}, lb);
    json certs = rp::condition_report(cr);
    const json verdicts = rp::condition_verdicts(cr);
    for (const auto& key : {"a", "b", "c", "d"}) r.verdict(key, verdicts[key], certs[key]);
    r.budget["lab"] = rp::lab_budget(lb);
    r.expected = {{"well_defined", "Yes"}, {"a", "Holds"}, {"b", "Holds"}, {"c", "Fails"}, {"d", "Holds"}};
  } else if (op == "ia") {
    for (std::size_t n = 2; n + 1 <= context.k(); ++n) {
      const sl::IAWitness w = sl::ia_witness(context, n);
      json c = rp::ia(w, tags);
      c["summary"] = "1 = multiplier*first - second with first, second in I";
      const std::string key = "ia_" + std::to_string(n);
      r.verdict(key, w.holds() ? "Holds" : "Fails", c);
      r.expected[key] = "Holds";
    }
  } else if (op == "qf") {
    const auto [t2, t1] = sl::qf_witnesses(context);
    json c1 = rp::fraction(t1, t, tags);
    c1["summary"] = "T1*f3 = f2*(2f2 - 1)";
    json c2 = rp::fraction(t2, t, tags);
    c2["summary"] = "T2*(2f2 - 1) = f3";
    r.verdict("T1", t1.holds() ? "Holds" : "Fails", c1);
    r.verdict("T2", t2.holds() ? "Holds" : "Fails", c2);
    r.expected = {{"T1", "Holds"}, {"T2", "Holds"}};
  } else if (op == "falsify") {
    r.primary = "counterexample";
    const sl::Polynomial l0 = sl::parse_polynomial(a.l0, t, sl::Domain::natural);
    sl::FalsifierBudget fb;
    fb.max_shifts = a.shifts;
    const sl::FalsifierResult f = sl::condition_c_falsifier(context, l0, fb);
    json c = {{"attempts", f.attempts}};
    if (f.witness) {
      c = rp::witness(*f.witness, t, tags);
      c["attempts"] = f.attempts;
      c["summary"] = "h(l) = 0 with a coefficient of h outside I";
    } else {
      c["summary"] = "no witness within budget";
    }
    r.verdict("counterexample", f.found == sl::Truth::yes ? "Found" : "Unknown", c);
    r.budget["shifts"] = a.shifts;
  } else if (op == "member") {
    r.primary = "membership";
    if (a.poly.empty()) throw UsageError("missing --poly");
    const sl::Polynomial h = sl::parse_polynomial(a.poly, t, sl::Domain::rational);
    const sl::MembershipCertificate cert = context.ring().subring().membership(h);
    json c = {{"tags", tags.names()}};
    if (cert.representation) {
      c["representation"] = sl::format(*cert.representation, tags);
      c["summary"] = "substituting f2..fk into the representation gives the query";
    } else {
      c["summary"] = cert.verdict == sl::Membership::non_member ? "remainder involves T1 or T2"
                                                               : "basis incomplete within budget";
    }
    r.exhausted = cert.verdict == sl::Membership::unknown;
    r.verdict("membership", rp::verdict(cert.verdict), c);
  } else if (op == "phi") {
    if (a.elem.empty()) throw UsageError("missing --elem (a polynomial in the tags X2..Xk)");
    const sl::SubringElement e = context.element(a.elem);
    r.result = {{"element", rp::element(e, t, tags)}, {"phi", context.phi_eval(e).get_str()}};
  } else {
    throw UsageError("unknown abhyankar operation " + op);
  }
  return r;
}

struct ConeArgs {
  std::string images, rel, relations, gens, u;
};

sl::Cone cone_from(const ConeArgs& a, const Context& ctx, Report& r) {
  const auto box = static_cast<std::uint32_t>(ctx.effective().box);
  r.budget["box"] = box;
  const int sources = !a.images.empty() + (!a.rel.empty() || !a.relations.empty()) + !a.gens.empty();
  if (sources != 1) throw UsageError("give exactly one of --images, --rel/--relations, --gens");
  if (!a.images.empty()) return sl::cone_enumerate(sl::EvalHom(parse_rationals(a.images)), box);
  if (!a.gens.empty()) {
    const auto gens = parse_vectors(a.gens);
    const std::size_t n = ctx.flags.vars > 0 ? ctx.flags.vars : gens.front().size();
    return sl::semigroup_in_box(n, gens, box);
  }
  const std::string text = relations_text(a.rel, a.relations);
  const std::size_t n = arity({text}, ctx.flags);
  const sl::SemiringBudget budget = ctx.semiring();
  r.budget["presentation"] = semiring_budget_json(budget);
  return sl::cone_enumerate(std::make_shared<const sl::CongruenceClosure>(
                                sl::congruence_close(sl::parse_presentation(text, n), budget)),
                            box);
}

Report run_cone(const std::string& op, const ConeArgs& a, const Context& ctx) {
  Report r;
  if (op == "purity") {
    r.primary = "purity";
    if (a.gens.empty()) throw UsageError("missing --gens");
    const auto gens = parse_vectors(a.gens);
    const auto box = static_cast<std::uint32_t>(ctx.effective().box);
    r.budget["box"] = box;
    const std::size_t n = ctx.flags.vars > 0 ? ctx.flags.vars : gens.front().size();
    const sl::Purity p = sl::purity_check(n, gens, box);
    json c = rp::purity(p);
    if (p.witness) {
      c["summary"] = "a = " + sl::to_string(p.witness->a) + ", k = " + std::to_string(p.witness->k) +
                     ": a/k = " + sl::to_string(p.witness->quotient) + " is not generated";
    } else {
      c["summary"] = "every member divisible by k has a/k in the semigroup";
    }
    r.verdict("purity", p.pure ? "Pure" : "Impure", c);
    return r;
  }
  if (op == "one-plus-tu") {
    r.primary = "in_P";
    const auto us = parse_vectors(a.u);
    if (us.size() != 1) throw UsageError("--u takes one exponent vector");
    sl::SubsetAnswer ans;
    if (!a.images.empty()) {
      ans = sl::one_plus_Tu_in_P(us[0], sl::EvalHom(parse_rationals(a.images)));
    } else {
      const std::string text = relations_text(a.rel, a.relations);
      const sl::SemiringBudget budget = ctx.semiring();
      r.budget["presentation"] = semiring_budget_json(budget);
      const std::size_t n = ctx.flags.vars > 0 ? ctx.flags.vars : us[0].size();
      ans = sl::one_plus_Tu_in_P(us[0], std::make_shared<const sl::CongruenceClosure>(
                                            sl::congruence_close(sl::parse_presentation(text, n), budget)));
    }
    r.verdict("in_P", rp::verdict(ans.verdict), {{"summary", ans.evidence}});
    return r;
  }
  const sl::Cone c = cone_from(a, ctx, r);
  r.exhausted = c.unknown > 0;
  if (op == "enumerate") {
    r.result = rp::cone(c);
  } else if (op == "dim") {
    r.result = {{"dim", sl::cone_dim(c)}, {"n", c.n}, {"members", c.members.size()}, {"unknown", c.unknown}};
  } else if (op == "interior") {
    r.primary = "interior";
    const auto u = sl::find_interior_u(c);
    if (!u) {
      r.verdict("interior", "NotFound", {{"summary", "no u with u + e_i in the cone for every i"}});
    } else {
      const auto fr = sl::qf_from_cone(c, sl::cone_oracle(c));
      bool ok = true;
      for (const auto& f : *fr) ok = ok && f.holds();
      r.verdict("interior", "Found",
                {{"summary", "u = " + sl::to_string(*u)},
                 {"u", sl::to_string(*u)},
                 {"fractions", rp::monomial_fractions(*fr, c.n)}});
      r.verdict("quotient_field", ok ? "Holds" : "Fails",
                {{"summary", "T_i = T^(u+e_i)/T^u, checked by cross-multiplication"}});
      r.expected["quotient_field"] = "Holds";
    }
  } else {
    throw UsageError("unknown cone operation " + op);
  }
  return r;
}

struct LabArgs {
  std::string gens, ideal, values, l0;
  bool zero_ring = false;
  std::size_t shifts = 8, evidence = 20;
};

Report run_lab(const std::string& op, const LabArgs& a, const Context& ctx) {
  Report r;
  if (op != "conditions") throw UsageError("unknown lab operation " + op);
  const auto texts = list_input(a.gens, a.ideal, "subring generators (--gens or --ideal)");
  const auto l0_texts = a.l0.empty() ? std::vector<std::string>{} : split(a.l0, ';');
  std::vector<std::string> all = texts;
  all.insert(all.end(), l0_texts.begin(), l0_texts.end());
  const std::size_t n = arity(all, ctx.flags);
  sl::Candidate cand;
  cand.name = "command line";
  cand.generators = parse_all(texts, n, sl::Domain::integer);
  cand.l0 = parse_all(l0_texts, n, sl::Domain::natural);
  if (a.zero_ring == !a.values.empty()) throw UsageError("give exactly one of --values and --zero-ring");
  if (!a.zero_ring) cand.values = parse_rationals(a.values);
  sl::LabBudget lb;
  lb.groebner = ctx.groebner();
  lb.falsifier.max_shifts = a.shifts;
  lb.evidence = a.evidence;
  const sl::ConditionReport cr = sl::verify_conditions(cand, lb);
  r.primary = "well_defined";
  r.verdict("well_defined", rp::verdict(cr.well_defined), {{"summary", cr.well_defined_by}});
  json certs = rp::condition_report(cr);
  const json verdicts = rp::condition_verdicts(cr);
  for (const auto& key : {"a", "b", "c", "d"}) r.verdict(key, verdicts[key], certs[key]);
  r.budget = rp::lab_budget(lb);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polynomial, Groebner, semiring and cone computations with checked certificates"};
  app.require_subcommand(1);
  Flags flags;
  std::string op_name;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", flags.json, "machine-readable report");
    sub->add_flag("--strict", flags.strict, "treat Unknown verdicts as failures");
    sub->add_option("--deg", flags.degree, "degree budget (default 8; 2k for abhyankar)")->check(CLI::PositiveNumber);
    sub->add_option("--coef", flags.coefficient, "coefficient budget for presentations")->check(CLI::PositiveNumber);
    sub->add_option("--steps", flags.steps, "search step budget")->check(CLI::PositiveNumber);
    sub->add_option("--box", flags.box, "box bound for cones (default 6)")->check(CLI::PositiveNumber);
    sub->add_option("--k", flags.k, "truncation k (default 6)")->check(CLI::Range(2, 64));
    sub->add_option("--expect", flags.expect, "exit 1 unless the main verdict equals this");
    sub->add_option("--vars", flags.vars, "number of ambient variables (default: inferred)")->check(CLI::Range(1, 64));
  };

  std::function<Report(const Context&)> handler;
  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help,
                  std::function<Report(const std::string&, const Context&)> run) {
    CLI::App* sub = group->add_subcommand(name, help);
    common(sub);
    sub->callback([&, name, run] {
      op_name = group->get_name() + " " + name;
      handler = [name, run](const Context& c) { return run(name, c); };
    });
    return sub;
  };

  PolyArgs poly_args;
  CLI::App* poly = app.add_subcommand("poly", "polynomial arithmetic");
  poly->require_subcommand(1);
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"add", "sum of two polynomials"},
           {"mul", "product of two polynomials"},
           {"eval", "value at a rational point"},
           {"subst", "substitute polynomials for the variables"},
           {"lt", "leading term"}}) {
    CLI::App* sub = leaf(poly, name, help, [&](const std::string& op, const Context& c) { return run_poly(op, poly_args, c); });
    sub->add_option("polynomials", poly_args.operands, "operands")->required();
    if (name == "eval") sub->add_option("--at", poly_args.at, "point, e.g. 1/2,1/3")->required();
    if (name == "subst") sub->add_option("--images", poly_args.images, "images separated by ';'")->required();
    if (name == "lt") sub->add_option("--order", poly_args.order, "lex or grlex");
  }

  GroebnerArgs gb_args;
  CLI::App* gb = app.add_subcommand("groebner", "Groebner bases and membership");
  gb->require_subcommand(1);
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"basis", "reduced Groebner basis"},
           {"nf", "normal form modulo the ideal"},
           {"member", "ideal membership with cofactors"},
           {"relations", "relations among generators"},
           {"subalg", "subalgebra membership"}}) {
    CLI::App* sub = leaf(gb, name, help, [&](const std::string& op, const Context& c) { return run_groebner(op, gb_args, c); });
    sub->add_option("--gens", gb_args.gens, "generators separated by ';'");
    sub->add_option("--ideal", gb_args.ideal, "file with one generator per line");
    if (name == "nf" || name == "member" || name == "subalg") sub->add_option("--poly", gb_args.poly, "query")->required();
    if (name == "basis" || name == "nf") sub->add_option("--order", gb_args.order, "lex or grlex");
  }

  PresentationArgs pr_args;
  CLI::App* pr = app.add_subcommand("presentation", "word problems in presented semirings");
  pr->require_subcommand(1);
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"idempotent", "is 1 + 1 = 1"},
           {"cancellative", "additive cancellativity"},
           {"equiv", "are two elements equal"},
           {"leq", "lhs <= rhs in the preorder"},
           {"find-l", "elements with l + 1 = l"},
           {"subset", "membership in P, Q or L"}}) {
    CLI::App* sub =
        leaf(pr, name, help, [&](const std::string& op, const Context& c) { return run_presentation(op, pr_args, c); });
    sub->add_option("--relations", pr_args.relations, "file with one relation 'lhs = rhs' per line");
    sub->add_option("--rel", pr_args.rel, "relations separated by ';'");
    if (name == "equiv" || name == "leq") {
      sub->add_option("--lhs", pr_args.lhs)->required();
      sub->add_option("--rhs", pr_args.rhs)->required();
    }
    if (name == "find-l") sub->add_option("--limit", pr_args.limit, "candidates examined")->check(CLI::PositiveNumber);
    if (name == "subset") {
      sub->add_option("--tag", pr_args.tag, "P, Q or L");
      sub->add_option("--elem", pr_args.elem)->required();
    }
  }

  AbhyankarArgs ab_args;
  CLI::App* ab = app.add_subcommand("abhyankar", "the Abhyankar ring and its certificates");
  ab->require_subcommand(1);
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"gen", "generators f2..fk (or f_n with --n)"},
           {"germ", "germ substitution certificate"},
           {"wd", "well-definedness of phi"},
           {"verify", "conditions a-d report"},
           {"ia", "unit identities for IA = A"},
           {"qf", "quotient field certificates"},
           {"nonext", "phi does not extend to A"},
           {"falsify", "condition c counterexample"},
           {"member", "subalgebra membership"},
           {"phi", "phi of an element given in the tags"}}) {
    CLI::App* sub =
        leaf(ab, name, help, [&](const std::string& op, const Context& c) { return run_abhyankar(op, ab_args, c); });
    if (name == "gen") sub->add_option("--n", ab_args.n, "single generator index")->check(CLI::Range(2, 200));
    if (name == "nonext") sub->add_option("--nmax", ab_args.nmax)->check(CLI::Range(2, 1000));
    if (name == "verify" || name == "falsify") {
      sub->add_option("--l0", ab_args.l0, "element of N[T1,T2] (default T1*T2)");
      sub->add_option("--shifts", ab_args.shifts, "shifts a tried")->check(CLI::PositiveNumber);
    }
    if (name == "verify") sub->add_option("--evidence", ab_args.evidence, "preimages of 1/m for m up to this")->check(CLI::Range(1, 200));
    if (name == "member") sub->add_option("--poly", ab_args.poly)->required();
    if (name == "phi") sub->add_option("--elem", ab_args.elem)->required();
    if (name != "gen" && name != "nonext" && name != "germ") {
      sub->add_flag("--no-elim", ab_args.no_elim, "skip the elimination basis (germ certificate only)");
    }
  }

  ConeArgs cone_args;
  CLI::App* cone = app.add_subcommand("cone", "cones of Q-bounded monomials");
  cone->require_subcommand(1);
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"enumerate", "members within the box"},
           {"dim", "dimension"},
           {"purity", "purity of a semigroup"},
           {"interior", "interior point and fractions"},
           {"one-plus-tu", "is phi(1 + T^u) in P"}}) {
    CLI::App* sub = leaf(cone, name, help, [&](const std::string& op, const Context& c) { return run_cone(op, cone_args, c); });
    if (name != "purity") {
      sub->add_option("--images", cone_args.images, "phi(T_i) in Q+, e.g. 2,3");
      sub->add_option("--rel", cone_args.rel, "presentation relations separated by ';'");
      sub->add_option("--relations", cone_args.relations, "presentation file");
    }
    if (name != "one-plus-tu") sub->add_option("--gens", cone_args.gens, "semigroup generators, e.g. (2,0);(0,1)");
    if (name == "purity") sub->get_option("--gens")->required();
    if (name == "one-plus-tu") sub->add_option("--u", cone_args.u, "exponent vector, e.g. (1,2)")->required();
  }

  LabArgs lab_args;
  CLI::App* lab = app.add_subcommand("lab", "conditions a-d on a candidate subring");
  lab->require_subcommand(1);
  {
    CLI::App* sub = leaf(lab, "conditions", "conditions a-d report",
                         [&](const std::string& op, const Context& c) { return run_lab(op, lab_args, c); });
    sub->add_option("--gens", lab_args.gens, "subring generators separated by ';'");
    sub->add_option("--ideal", lab_args.ideal, "file with one generator per line");
    sub->add_option("--values", lab_args.values, "phi of each generator, e.g. 1/2,1/3");
    sub->add_flag("--zero-ring", lab_args.zero_ring, "I = B");
    sub->add_option("--l0", lab_args.l0, "l0 candidates separated by ';'");
    sub->add_option("--shifts", lab_args.shifts)->check(CLI::PositiveNumber);
    sub->add_option("--evidence", lab_args.evidence)->check(CLI::Range(1, 200));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Context ctx{flags, {}};
  Report report;
  const auto start = std::chrono::steady_clock::now();
  try {
    ctx.env = environment_budgets();
    try {
      report = handler(ctx);
    } catch (const sl::OutOfBudget& e) {
      report = Report{};
      const Budgets b = ctx.effective();
      report.budget = {{"degree", b.degree}, {"coefficient", b.coefficient}, {"steps", b.steps}};
      report.exhausted = true;
      report.primary = "result";
      report.verdict("result", "Unknown", {{"summary", e.what()}});
    }
  } catch (const sl::ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.message() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sl::AlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report.command = op_name;

  json args = json::array();
  for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
  const int code = exit_code(report, flags);
  json doc = {{"schema", rp::kSchema},
              {"command", report.command},
              {"arguments", args},
              {"verdicts", report.verdicts},
              {"expected", report.expected},
              {"certificates", report.certificates},
              {"result", report.result},
              {"budget", report.budget},
              {"exhausted", report.exhausted},
              {"status", code == 0 ? "ok" : "verification-failure"},
              {"exit_code", code},
              {"timing_ms", ms}};
  if (flags.json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    print_text(doc, std::cout);
  }
  return code;
}
