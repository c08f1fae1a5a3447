#include "jalg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "jalg/catalog.hpp"
#include "jalg/deformation.hpp"
#include "jalg/io.hpp"
#include "jalg/morphism.hpp"

namespace jalg {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string field;
  bool json = false;
  std::uint64_t budget = 0;
};

struct Report {
  int code = 0;
  std::string text;
  Json json;
};

std::optional<Field> requested_field(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  return Field::parse(o.field);
}

std::uint64_t budget_or(const Options& o, std::uint64_t fallback) { return o.budget ? o.budget : fallback; }

Algebra get_algebra(const std::string& path, const Options& o) {
  Algebra a = load_algebra(path);
  if (auto f = requested_field(o); f && *f != a.field()) a = a.over(*f);
  return a;
}

MatchedPair get_pair(const std::string& path, const Options& o) {
  MatchedPair mp = load_pair(path);
  if (auto f = requested_field(o); f && *f != mp.field()) mp = pair_over(mp, *f);
  return mp;
}

Field prime_field(const MatchedPair& mp) {
  if (!mp.field().is_prime()) throw UsageError("this command needs a prime field; pass --field F<p>");
  return mp.field();
}

Json verdict_json(const Verdict& v) {
  Json checks = Json::array();
  for (const auto& axiom : v.checked) {
    Json c = {{"axiom", axiom}, {"pass", true}};
    for (const auto& w : v.failures) {
      if (w.axiom != axiom) continue;
      c["pass"] = false;
      c["witness"] = {{"coordinate", w.coordinate}, {"monomial", w.monomial}, {"coefficient", w.coefficient}};
      break;
    }
    checks.push_back(c);
  }
  return {{"pass", v.ok()}, {"checks", checks}};
}

std::string table_text(const Algebra& a) {
  std::string out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      const Element e = a.table().product(i, j);
      if (is_zero(e)) continue;
      if (!out.empty()) out += "; ";
      out += a.basis()[i] + " " + a.basis()[j] + " = " + format_element(e, a.basis(), a.params());
    }
  }
  return out.empty() ? "all products zero" : out;
}

Json table_json(const Algebra& a) {
  Json products = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      const Element e = a.table().product(i, j);
      if (is_zero(e)) continue;
      products.push_back({{"x", a.basis()[i]}, {"y", a.basis()[j]}, {"value", format_element(e, a.basis(), a.params())}});
    }
  }
  return {{"field", a.field().name()}, {"basis", a.basis()}, {"params", a.params()}, {"products", products}};
}

std::string map_text(const LinearMap& f, const Algebra& src, const Algebra& dst) {
  return f.to_string(src.basis(), dst.basis(), merge_params(src.params(), dst.params()));
}

Json base(const std::string& command, const std::string& input, Field field) {
  return {{"command", command}, {"input", input}, {"field", field.name()}};
}

// ------------------------------------------------------------ commands

Report cmd_check(const std::string& path, const Options& o) {
  const Algebra a = get_algebra(path, o);
  const Verdict v = jordan_check(a);
  Report r;
  r.code = v.ok() ? 0 : 1;
  r.text = "algebra " + path + " over " + a.field().name() + ", dim " + std::to_string(a.dim()) + "\n" + v.summary();
  r.json = base("check", path, a.field());
  r.json["dim"] = a.dim();
  r.json["verdict"] = verdict_json(v);
  return r;
}

Report cmd_mp_check(const std::string& path, bool first_failure, const Options& o) {
  const MatchedPair mp = get_pair(path, o);
  const Verdict v = mp_check(mp, first_failure ? CheckMode::first_failure : CheckMode::all);
  Report r;
  r.code = v.ok() ? 0 : 1;
  r.text = "pair " + path + " over " + mp.field().name() + "\n" + v.summary() +
           (v.ok() ? "matched pair: yes\n" : "matched pair: no\n");
  r.json = base("mp-check", path, mp.field());
  r.json["verdict"] = verdict_json(v);
  return r;
}

Report cmd_bicross(const std::string& path, const Options& o) {
  const MatchedPair mp = get_pair(path, o);
  const Verdict v = mp_check(mp, CheckMode::first_failure);
  Report r;
  r.json = base("bicross", path, mp.field());
  r.json["verdict"] = verdict_json(v);
  if (!v.ok()) {
    r.code = 1;
    r.text = v.summary() + "not a matched pair; no bicrossed product\n";
    return r;
  }
  const BicrossedProduct bp = bicross(mp);
  r.text = write_algebra(bp.product);
  r.json["product"] = table_json(bp.product);
  return r;
}

Report cmd_semidirect(const std::string& path, const std::string& side, const Options& o) {
  const MatchedPair mp = get_pair(path, o);
  const bool left = side == "left";
  if (left && !mp.right.is_zero()) throw UsageError("left semidirect product needs a zero right action");
  if (!left && !mp.left.is_zero()) throw UsageError("right semidirect product needs a zero left action");
  const Verdict v = left ? semidirect_left_check(mp.A, mp.V, mp.left) : semidirect_right_check(mp.A, mp.V, mp.right);
  Report r;
  r.json = base("semidirect", path, mp.field());
  r.json["side"] = side;
  r.json["verdict"] = verdict_json(v);
  r.text = v.summary();
  if (!v.ok()) {
    r.code = 1;
    return r;
  }
  const Algebra product = left ? semidirect_left(mp.A, mp.V, mp.left) : semidirect_right(mp.A, mp.V, mp.right);
  r.text += write_algebra(product);
  r.json["product"] = table_json(product);
  return r;
}

Report cmd_factorize(const std::string& path, const std::string& a_spec, const std::string& b_spec, bool pair_out,
                     const Options& o) {
  const Algebra e = get_algebra(path, o);
  const Subspace a = parse_subspace(a_spec, e.basis(), e.field());
  const Subspace b = parse_subspace(b_spec, e.basis(), e.field());
  const bool complements = complement_check(e, a, b);
  const bool a_sub = subalgebra_check(e, a);
  const bool b_sub = subalgebra_check(e, b);
  Report r;
  r.json = base(pair_out ? "canonical-pair" : "factorize", path, e.field());
  r.json["complementary"] = complements;
  r.json["A_subalgebra"] = a_sub;
  r.json["B_subalgebra"] = b_sub;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  r.text = std::string("A, B complementary: ") + yes(complements) + "\nA subalgebra: " + yes(a_sub) +
           "\nB subalgebra: " + yes(b_sub) + "\n";
  if (!(complements && a_sub && b_sub)) {
    r.code = 1;
    r.text += "not a factorization\n";
    return r;
  }
  const Factorization f{e, a, b};
  const MatchedPair mp = canonical_pair(f);
  const Verdict v = mp_check(mp);
  r.json["verdict"] = verdict_json(v);
  if (pair_out) {
    r.text += write_pair(mp);
    r.json["pair"] = write_pair(mp);
  } else {
    const LinearMap p = projection(f);
    r.text += "factorization: valid\nprojection onto A: " + map_text(p, e, e) + "\n";
    r.json["projection"] = map_text(p, e, e);
    r.json["A"] = table_json(mp.A);
    r.json["B"] = table_json(mp.V);
  }
  r.text += v.summary();
  r.code = v.ok() ? 0 : 1;
  return r;
}

Report cmd_iso(const std::string& p1, const std::string& p2, const std::string& mode, std::uint32_t height,
               const Options& o) {
  const Algebra a = get_algebra(p1, o);
  const Algebra b = get_algebra(p2, o);
  if (a.field() != b.field()) throw UsageError("algebras over different fields; pass --field");
  const IsoMode m = mode.empty() ? (a.field().is_prime() ? IsoMode::exhaustive : IsoMode::invariants)
                                  : mode == "exhaustive" ? IsoMode::exhaustive : IsoMode::invariants;
  const IsoVerdict v = iso_search(a, b, m, height, budget_or(o, 2'000'000));
  Report r;
  r.code = v.outcome == IsoOutcome::isomorphic ? 0 : 1;
  r.json = base("iso", p1 + " " + p2, a.field());
  r.json["outcome"] = to_string(v.outcome);
  r.text = to_string(v.outcome) + "\n";
  if (v.witness) {
    r.text += "witness: " + map_text(*v.witness, a, b) + "\n";
    r.json["witness"] = map_text(*v.witness, a, b);
  }
  if (!v.invariant.empty()) {
    r.text += "invariant: " + v.invariant;
    if (!v.source_value.empty()) r.text += " (" + v.source_value + " vs " + v.target_value + ")";
    r.text += "\n";
    r.json["invariant"] = {{"name", v.invariant}, {"source", v.source_value}, {"target", v.target_value}};
  }
  if (!v.note.empty()) {
    r.text += "note: " + v.note + "\n";
    r.json["note"] = v.note;
  }
  return r;
}

Report cmd_classify2(const std::string& path, std::uint32_t height, const Options& o) {
  const Algebra a = get_algebra(path, o);
  if (a.dim() != 2) throw UsageError("classify2 needs a 2-dimensional algebra");
  const Signature s = classify_dim2(a, height);
  Report r;
  r.json = base("classify2", path, a.field());
  r.json["signature"] = {{"product_span", s.product_span}, {"cube_span", s.cube_span},
                         {"annihilator", s.annihilator}, {"has_unit", s.has_unit},
                         {"trace_rank", s.trace_rank}, {"idempotents", s.idempotents},
                         {"idempotents_exact", s.idempotents_exact}};
  r.text = s.to_string() + "\n";
  Json matches = Json::array();
  for (const auto& entry : catalog_entries()) {
    if (entry.kind != CatalogKind::algebra) continue;
    Algebra c = catalog_algebra(entry.name);
    if (c.dim() != 2) continue;
    if (c.field() != a.field()) c = c.over(a.field());
    const IsoMode mode = a.field().is_prime() ? IsoMode::exhaustive : IsoMode::invariants;
    if (iso_search(c, a, mode, height).outcome == IsoOutcome::isomorphic) matches.push_back(entry.name);
  }
  for (const auto& m : matches) r.text += "isomorphic to catalog:" + m.get<std::string>() + "\n";
  r.json["catalog_matches"] = matches;
  return r;
}

Report cmd_deform_check(const std::string& path, const std::string& map, const Options& o) {
  MatchedPair mp = get_pair(path, o);
  VarNames params = mp.params();
  const LinearMap r_map = parse_map(map, mp.V.basis(), mp.A.basis(), mp.field(), params);
  mp.A.set_params(params);
  mp.V.set_params(params);
  const Verdict v = deformation_check(mp, r_map);
  Report r;
  r.code = v.ok() ? 0 : 1;
  r.json = base("deform-check", path, mp.field());
  r.json["map"] = map_text(r_map, mp.V, mp.A);
  r.json["verdict"] = verdict_json(v);
  r.text = "r: " + map_text(r_map, mp.V, mp.A) + "\n" + v.summary();
  if (v.ok()) {
    const Algebra b_r = r_deform(mp, r_map);
    r.text += "deformation map: yes\nB_r: " + table_text(b_r) + "\n";
    r.json["deformed"] = table_json(b_r);
  } else {
    r.text += "deformation map: no\n";
  }
  return r;
}

Report cmd_deform_enum(const std::string& path, const Options& o) {
  const MatchedPair mp = get_pair(path, o);
  prime_field(mp);
  const auto maps = enumerate_deformations(mp, budget_or(o, 1'953'125));
  Report r;
  r.json = base("deform-enum", path, mp.field());
  Json list = Json::array();
  std::ostringstream os;
  os << "deformation maps over " << mp.field().name() << ": " << maps.size() << "\n";
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const std::string t = map_text(maps[i], mp.V, mp.A);
    os << "  r" << i + 1 << ": " << t << "\n";
    list.push_back(t);
  }
  r.text = os.str();
  r.json["count"] = maps.size();
  r.json["maps"] = list;
  return r;
}

std::vector<std::string> catalog_matches(const Algebra& a) {
  std::vector<std::string> out;
  for (const auto& entry : catalog_entries()) {
    if (entry.kind != CatalogKind::algebra) continue;
    const Algebra c = catalog_algebra(entry.name);
    if (c.dim() != a.dim()) continue;
    if (iso_search(c.over(a.field()), a, IsoMode::exhaustive).outcome == IsoOutcome::isomorphic) {
      out.push_back(entry.name);
    }
  }
  return out;
}

Report cmd_complements(const std::string& path, const Options& o) {
  const MatchedPair mp = get_pair(path, o);
  prime_field(mp);
  const Verdict v = mp_check(mp, CheckMode::first_failure);
  if (!v.ok()) {
    Report r;
    r.code = 1;
    r.text = v.summary() + "not a matched pair\n";
    r.json = base("complements", path, mp.field());
    r.json["verdict"] = verdict_json(v);
    return r;
  }
  const ComplementReport cr = factorization_index(mp, budget_or(o, 1'953'125));
  std::ostringstream os;
  Report r;
  r.json = base("complements", path, mp.field());
  os << "pair " << path << " over " << mp.field().name() << "\n";
  os << "deformation maps: " << cr.maps.size() << "\n";
  Json maps = Json::array();
  for (std::size_t i = 0; i < cr.maps.size(); ++i) {
    const std::string t = map_text(cr.maps[i], mp.V, mp.A);
    os << "  r" << i + 1 << ": " << t << "  |  B_r: " << table_text(cr.deformed[i]) << "\n";
    maps.push_back({{"name", "r" + std::to_string(i + 1)}, {"map", t}, {"deformed", table_json(cr.deformed[i])}});
  }
  Json classes = Json::array();
  for (std::size_t c = 0; c < cr.classes.size(); ++c) {
    const auto& cls = cr.classes[c];
    const Algebra& rep = cr.deformed[cls.representative];
    const auto matches = catalog_matches(rep);
    os << "class " << c + 1 << ": representative r" << cls.representative + 1 << ", B_r: " << table_text(rep);
    if (!matches.empty()) {
      os << " (isomorphic to";
      for (const auto& m : matches) os << " catalog:" << m;
      os << ")";
    }
    os << "\n";
    Json members = Json::array();
    for (std::size_t k = 0; k < cls.members.size(); ++k) {
      const std::string w = map_text(cls.witnesses[k], mp.V, mp.V);
      os << "  r" << cls.members[k] + 1 << " via " << w << "\n";
      members.push_back({{"map", "r" + std::to_string(cls.members[k] + 1)}, {"witness", w}});
    }
    classes.push_back({{"representative", "r" + std::to_string(cls.representative + 1)},
                       {"table", table_json(rep)},
                       {"catalog_matches", matches},
                       {"members", members}});
  }
  os << "index = " << cr.index << "\n";
  os << "equivalence partition agrees: " << (cr.partitions_agree ? "yes" : "no") << "\n";
  os << "note: " << cr.note << "\n";
  r.text = os.str();
  r.code = cr.partitions_agree ? 0 : 1;
  r.json["maps"] = maps;
  r.json["classes"] = classes;
  r.json["index"] = cr.index;
  r.json["partitions_agree"] = cr.partitions_agree;
  r.json["note"] = cr.note;
  return r;
}

Report cmd_catalog(const std::string& name) {
  Report r;
  r.json = {{"command", "catalog"}};
  if (!name.empty()) {
    const auto& e = catalog_entry(name);
    r.text = e.text;
    r.json["name"] = e.name;
    r.json["kind"] = e.kind == CatalogKind::pair ? "pair" : "algebra";
    r.json["text"] = e.text;
    return r;
  }
  Json list = Json::array();
  std::ostringstream os;
  for (const auto& e : catalog_entries()) {
    const char* kind = e.kind == CatalogKind::pair ? "pair" : "algebra";
    os << e.name << "  [" << kind << "]  " << e.description << "\n";
    list.push_back({{"name", e.name}, {"kind", kind}, {"description", e.description}});
  }
  r.text = os.str();
  r.json["entries"] = list;
  return r;
}

Report cmd_abelian_pairs(std::size_t n, const Options& o) {
  const Field k = requested_field(o).value_or(Field::prime(5));
  if (!k.is_prime()) throw UsageError("abelian-pairs needs a prime field");
  const AbelianScan scan = enumerate_abelian_pairs(n, k, budget_or(o, 20000));
  Report r;
  r.code = scan.bijection ? 0 : 1;
  std::ostringstream os;
  os << "candidates (lambda, D) over " << k.name() << ", n = " << n << ": " << scan.candidates << "\n";
  os << "matched pairs: " << scan.valid.size() << "\n";
  os << "D with D^3 = 0: " << scan.nilpotent << "\n";
  os << "matched pairs are exactly (0, D) with D^3 = 0: " << (scan.bijection ? "yes" : "no") << "\n";
  r.text = os.str();
  r.json = {{"command", "abelian-pairs"}, {"field", k.name()}, {"n", n}, {"candidates", scan.candidates},
            {"valid", scan.valid.size()}, {"nilpotent", scan.nilpotent}, {"bijection", scan.bijection}};
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"jalg: exact computations with Jordan algebras, matched pairs and complements", "jalg"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--field", o.field, "work over Q or F<p>, e.g. F5");
  app.add_flag("--json", o.json, "print a JSON report instead of text");
  app.add_option("--budget", o.budget, "candidate budget for exhaustive scans");

  std::string p1, p2, text, side = "right", mode, a_spec, b_spec;
  bool first_failure = false;
  std::uint32_t height = 2;
  std::size_t n = 2;

  auto* check = app.add_subcommand("check", "Jordan identity of an algebra");
  check->add_option("algebra", p1, "file or catalog:NAME")->required();
  auto* mp = app.add_subcommand("mp-check", "matched pair axioms");
  mp->add_option("pair", p1)->required();
  mp->add_flag("--first-failure", first_failure, "stop at the first failing axiom");
  auto* bic = app.add_subcommand("bicross", "bicrossed product of a matched pair");
  bic->add_option("pair", p1)->required();
  auto* semi = app.add_subcommand("semidirect", "left or right semidirect product");
  semi->add_option("pair", p1)->required();
  semi->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  auto* fac = app.add_subcommand("factorize", "check E = A + B and show the projection");
  auto* can = app.add_subcommand("canonical-pair", "canonical matched pair of E = A + B");
  for (auto* s : {fac, can}) {
    s->add_option("algebra", p1)->required();
    s->add_option("--A", a_spec, "spanning vectors, e.g. 'a, b'")->required();
    s->add_option("--B", b_spec)->required();
  }
  auto* iso = app.add_subcommand("iso", "isomorphism search");
  iso->add_option("first", p1)->required();
  iso->add_option("second", p2)->required();
  iso->add_option("--mode", mode, "default: exhaustive over F_p, invariants over Q")->check(CLI::IsMember({"exhaustive", "invariants"}));
  iso->add_option("--height", height, "coordinate height for bounded scans");
  auto* cls = app.add_subcommand("classify2", "invariants of a 2-dimensional algebra");
  cls->add_option("algebra", p1)->required();
  cls->add_option("--height", height);
  auto* dchk = app.add_subcommand("deform-check", "check a deformation map r: V -> A");
  dchk->add_option("pair", p1)->required();
  dchk->add_option("--map", text, "e.g. 'u -> 0; v -> alpha b'")->required();
  auto* denum = app.add_subcommand("deform-enum", "all deformation maps over F_p");
  denum->add_option("pair", p1)->required();
  auto* comp = app.add_subcommand("complements", "complements and factorization index over F_p");
  comp->add_option("pair", p1)->required();
  auto* cat = app.add_subcommand("catalog", "list catalog entries or print one");
  cat->add_option("name", p1);
  auto* ab = app.add_subcommand("abelian-pairs", "scan (lambda, D) for abelian pairs");
  ab->add_option("--n", n, "dimension of A0");

  std::vector<const char*> argv{"jalg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Report r;
    if (check->parsed()) r = cmd_check(p1, o);
    else if (mp->parsed()) r = cmd_mp_check(p1, first_failure, o);
    else if (bic->parsed()) r = cmd_bicross(p1, o);
    else if (semi->parsed()) r = cmd_semidirect(p1, side, o);
    else if (fac->parsed()) r = cmd_factorize(p1, a_spec, b_spec, false, o);
    else if (can->parsed()) r = cmd_factorize(p1, a_spec, b_spec, true, o);
    else if (iso->parsed()) r = cmd_iso(p1, p2, mode, height, o);
    else if (cls->parsed()) r = cmd_classify2(p1, height, o);
    else if (dchk->parsed()) r = cmd_deform_check(p1, text, o);
    else if (denum->parsed()) r = cmd_deform_enum(p1, o);
    else if (comp->parsed()) r = cmd_complements(p1, o);
    else if (cat->parsed()) r = cmd_catalog(p1);
    else r = cmd_abelian_pairs(n, o);
    if (o.json) {
      r.json["exit_code"] = r.code;
      out << r.json.dump(2) << "\n";
    } else {
      out << r.text;
    }
    return r.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    if (o.json) out << nlohmann::ordered_json{{"error", e.what()}, {"exit_code", 2}}.dump(2) << "\n";
    return 2;
  }
}

}  // namespace jalg
