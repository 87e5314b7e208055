#include "suspsplit/io.hpp"

#include <initializer_list>
#include <set>

#include "suspsplit/errors.hpp"

namespace suspsplit {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw SchemaError(what); }

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) bad(where + " must be an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : obj.items())
    if (!ok.count(key)) bad("unknown key '" + key + "' in " + where);
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) bad(where + " must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < -1'000'000 || x > 1'000'000) bad(where + " is out of range");
  return static_cast<int>(x);
}

int required_int(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) bad(where + " is missing '" + key + "'");
  return as_int(obj.at(key), where + "." + key);
}

bool as_bool(const json& v, const std::string& where) {
  if (!v.is_boolean()) bad(where + " must be a boolean");
  return v.get<bool>();
}

std::vector<int> int_list(const json& v, const std::string& where) {
  if (!v.is_array()) bad(where + " must be an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_int(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

BitMatrix matrix(const json& v, const std::string& where) {
  if (!v.is_array()) bad(where + " must be an array of rows");
  BitMatrix out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(int_list(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

void check_schema(const json& doc) {
  if (!doc.is_object()) bad("document must be a JSON object");
  if (doc.contains("schema") && as_int(doc.at("schema"), "schema") != kSchemaVersion)
    bad("unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
}

FinAbGroup torsion_of(const json& v) {
  if (!v.is_array()) bad("torsion must be an array of [p, r] pairs");
  std::vector<PrimePower> parts;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string where = "torsion[" + std::to_string(i) + "]";
    const auto pr = int_list(v[i], where);
    if (pr.size() != 2) bad(where + " must be a [p, r] pair");
    if (!is_prime(pr[0])) bad(where + ": p must be prime");
    if (pr[1] < 1) bad(where + ": r must be positive");
    parts.emplace_back(pr[0], pr[1]);
  }
  return FinAbGroup(0, parts);
}

// "trivial" or {"case": name, "r": int}; returns the case name and r (0 when absent).
std::pair<std::string, int> case_field(const json& v, const std::string& where) {
  if (v.is_string()) return {v.get<std::string>(), 0};
  only_keys(v, where, {"case", "r"});
  if (!v.contains("case") || !v.at("case").is_string()) bad(where + " needs a string 'case'");
  return {v.at("case").get<std::string>(), v.contains("r") ? as_int(v.at("r"), where + ".r") : 0};
}

OperationProfile profile_of(const json& v, int n) {
  if (n == 2)
    only_keys(v, "profile", {"w2", "theta", "tertiary", "sq2_h5"});
  else if (n == 5)
    only_keys(v, "profile", {});
  else
    only_keys(v, "profile", {"p1"});
  OperationProfile p;
  if (v.contains("w2")) p.w2_nonzero = as_bool(v.at("w2"), "profile.w2");
  if (v.contains("tertiary") && !v.at("tertiary").is_null()) p.tertiary = as_bool(v.at("tertiary"), "profile.tertiary");
  if (v.contains("theta")) {
    const auto [name, r] = case_field(v.at("theta"), "profile.theta");
    if (name == "trivial") p.theta = ThetaCase::Trivial;
    else if (name == "no_bockstein_link") p.theta = ThetaCase::NoBocksteinLink;
    else if (name == "bockstein_image") p.theta = ThetaCase::BocksteinImage;
    else bad("profile.theta: unknown case '" + name + "'");
    p.theta_r = r;
  }
  if (v.contains("sq2_h5")) {
    const auto [name, r] = case_field(v.at("sq2_h5"), "profile.sq2_h5");
    if (name == "no_bockstein_image") p.sq2h5 = Sq2H5Case::NoBocksteinImage;
    else if (name == "bockstein_image") p.sq2h5 = Sq2H5Case::BocksteinImage;
    else bad("profile.sq2_h5: unknown case '" + name + "'");
    p.sq2h5_r = r;
  }
  if (v.contains("p1")) {
    const auto [name, r] = case_field(v.at("p1"), "profile.p1");
    if (name == "trivial") p.p1 = P1Case::Trivial;
    else if (name == "a" && n == 3) p.p1 = P1Case::A;
    else if ((name == "b" && n == 3) || (name == "nontrivial" && n == 4)) p.p1 = P1Case::B;
    else if (name == "c" && n == 3) p.p1 = P1Case::C;
    else bad("profile.p1: case '" + name + "' does not apply for n = " + std::to_string(n));
    p.p1_r = r;
  }
  return p;
}

AttachingCoeffs coeffs_of(const json& v, int n) {
  AttachingCoeffs c;
  if (n == 2) {
    only_keys(v, "coeffs", {"x", "eps", "y", "z", "s", "t"});
    for (auto [key, dst] : {std::pair{"x", &c.x}, {"eps", &c.eps}, {"y", &c.y}, {"z", &c.z}, {"s", &c.s}, {"t", &c.t}})
      if (v.contains(key)) *dst = int_list(v.at(key), std::string("coeffs.") + key);
  } else if (n == 3) {
    only_keys(v, "coeffs", {"a", "b", "c"});
    for (auto [key, dst] : {std::pair{"a", &c.a}, {"b", &c.b}, {"c", &c.c}})
      if (v.contains(key)) *dst = int_list(v.at(key), std::string("coeffs.") + key);
  } else {
    bad("coeffs are accepted only for n = 2 and n = 3");
  }
  return c;
}

}  // namespace

ManifoldInput parse_decompose(const json& doc) {
  check_schema(doc);
  only_keys(doc, "document", {"schema", "n", "l", "d", "torsion", "sq2", "mode", "profile", "coeffs", "localize"});
  ManifoldInput in;
  in.n = required_int(doc, "n", "document");
  in.l = required_int(doc, "l", "document");
  in.d = required_int(doc, "d", "document");
  if (in.n < 2 || in.n > 5) bad("n must lie in 2..5");
  if (in.l < 0 || in.d < 0) bad("l and d must be non-negative");
  if (in.l > 16 || in.d > 16) bad("l and d are limited to 16");
  if (doc.contains("torsion")) in.T = torsion_of(doc.at("torsion"));
  if (doc.contains("localize")) in.localize = as_bool(doc.at("localize"), "localize");

  if (doc.contains("sq2")) {
    const json& s = doc.at("sq2");
    if (!s.is_object()) bad("sq2 must be an object");
    if (s.contains("A") || s.contains("B")) {
      only_keys(s, "sq2", {"A", "B"});
      if (!s.contains("A") || !s.contains("B")) bad("sq2 needs both A and B");
      in.sq2 = Sq2Matrices{matrix(s.at("A"), "sq2.A"), matrix(s.at("B"), "sq2.B")};
    } else {
      only_keys(s, "sq2", {"c1", "c2", "chosen"});
      SectionData sd;
      sd.c1 = required_int(s, "c1", "sq2");
      sd.c2 = required_int(s, "c2", "sq2");
      if (s.contains("chosen")) sd.chosen = int_list(s.at("chosen"), "sq2.chosen");
      in.sq2 = sd;
    }
  }

  std::string mode = doc.contains("coeffs") ? "attach" : "ops";
  if (doc.contains("mode")) {
    if (!doc.at("mode").is_string()) bad("mode must be \"ops\" or \"attach\"");
    mode = doc.at("mode").get<std::string>();
    if (mode != "ops" && mode != "attach") bad("mode must be \"ops\" or \"attach\"");
  }
  if (doc.contains("profile") && doc.contains("coeffs")) bad("give either profile or coeffs, not both");
  if (mode == "attach") {
    if (!doc.contains("coeffs")) bad("attach mode needs coeffs");
    in.top = coeffs_of(doc.at("coeffs"), in.n);
  } else {
    if (doc.contains("coeffs")) bad("ops mode takes a profile, not coeffs");
    if (doc.contains("profile"))
      in.top = profile_of(doc.at("profile"), in.n);
    else if (in.n != 5)
      bad("ops mode needs a profile");
  }
  return in;
}

AttachingVector parse_normalize(const json& doc) {
  check_schema(doc);
  only_keys(doc, "document", {"schema", "m", "target", "entries"});
  AttachingVector v;
  v.m = required_int(doc, "m", "document");
  if (!doc.contains("target") || !doc.at("target").is_array()) bad("target must be an array of term strings");
  if (!doc.contains("entries") || !doc.at("entries").is_array()) bad("entries must be an array of coefficient lists");
  const json& target = doc.at("target");
  const json& entries = doc.at("entries");
  if (target.size() != entries.size()) bad("target and entries must have the same length");
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (!target[i].is_string()) bad("target[" + std::to_string(i) + "] must be a string");
    try {
      v.target.push_back(parse_term(target[i].get<std::string>()));
    } catch (const DomainError& e) {
      bad("target[" + std::to_string(i) + "]: " + e.what());
    }
    const auto raw = int_list(entries[i], "entries[" + std::to_string(i) + "]");
    v.entries.emplace_back(entry_group(v.m, v.target.back()), std::vector<std::int64_t>(raw.begin(), raw.end()));
  }
  return v;
}

json to_json(const SpaceTerm& t) {
  json j{{"kind", std::string(kind_name(t.kind()))}, {"dim", t.dim()}, {"text", to_string(t)}};
  if (t.has_torsion()) {
    j["p"] = t.prime();
    j["r"] = t.exponent();
  }
  return j;
}

json to_json(const Wedge& w) {
  json terms = json::array();
  for (const auto& t : w.terms()) terms.push_back(to_json(t));
  return json{{"text", to_string(w)}, {"terms", terms}};
}

json to_json(const DecompositionResult& r) {
  json alts = json::array();
  for (const auto& a : r.alternatives) alts.push_back(json{{"wedge", to_json(a.wedge)}, {"condition", a.condition}});
  return json{{"schema", kSchemaVersion},
              {"clause", r.clause},
              {"localized", r.localized},
              {"wedge", to_json(r.wedge)},
              {"alternatives", alts}};
}

json to_json(const Normalized& n) {
  json trace = json::array();
  for (const auto& s : n.trace) trace.push_back(json{{"rule", s.rule}, {"pivot", s.pivot_term}, {"victim", s.victim_term}});
  json out{{"schema", kSchemaVersion}, {"vector", to_string(n.vector)}, {"trace", trace}};
  const auto s = survivor(n.vector);
  out["survivor"] = s ? json{{"kind", std::string(slot_name(s->kind))}, {"r", s->r}} : json(nullptr);
  out["cofiber"] = to_json(cofiber(n.vector));
  return out;
}

json to_json(const Report& r) {
  return json{{"check", r.check}, {"passed", r.passed}, {"cases", r.cases}, {"witness", r.witness}};
}

std::string format_result(const DecompositionResult& r) {
  std::string out = to_string(r.wedge) + "\n";
  for (const auto& a : r.alternatives) out += "or " + to_string(a.wedge) + "  [if " + a.condition + "]\n";
  return out;
}

std::string format_normalized(const Normalized& n) {
  std::string out = "normal form: " + to_string(n.vector) + "\n";
  for (const auto& s : n.trace)
    out += "  " + s.rule + " (term " + std::to_string(s.pivot_term) + " -> term " + std::to_string(s.victim_term) + ")\n";
  out += "cofiber: " + to_string(cofiber(n.vector)) + "\n";
  return out;
}

}  // namespace suspsplit
