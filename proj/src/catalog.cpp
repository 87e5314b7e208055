#include "suspsplit/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "suspsplit/errors.hpp"

namespace suspsplit {

namespace {

int min_dimension(Kind k) {
  switch (k) {
    case Kind::Sphere: return 1;
    case Kind::Moore: return 2;
    case Kind::ChangEta:
    case Kind::ChangR:
    case Kind::ConeTildeEta: return 2;
    case Kind::ConeEta2:
    case Kind::Cone2rEta2:
    case Kind::ConeTildeEtaEta:
    case Kind::ConeChang:
    case Kind::ConeEta3:
    case Kind::ConeAlpha1:
    case Kind::ConeTildeAlpha1:
    case Kind::ConeIAlpha1: return 3;
  }
  return 1;
}

// Fixed prime of the torsion carried by a kind; 0 if none, -1 if any prime.
int required_prime(Kind k) {
  switch (k) {
    case Kind::Sphere:
    case Kind::ChangEta:
    case Kind::ConeEta2:
    case Kind::ConeEta3:
    case Kind::ConeAlpha1: return 0;
    case Kind::Moore: return -1;
    case Kind::ChangR:
    case Kind::ConeTildeEta:
    case Kind::Cone2rEta2:
    case Kind::ConeTildeEtaEta:
    case Kind::ConeChang: return 2;
    case Kind::ConeTildeAlpha1:
    case Kind::ConeIAlpha1: return 3;
  }
  return 0;
}

FinAbGroup Z() { return FinAbGroup::free(1); }

}  // namespace

SpaceTerm::SpaceTerm(Kind kind, int dim, int p, int r) : kind_(kind), dim_(dim), p_(p), r_(r) {
  if (dim < min_dimension(kind))
    throw DomainError(ErrorKind::InvalidTerm,
                      std::string(kind_name(kind)) + " needs dimension >= " +
                          std::to_string(min_dimension(kind)));
  const int need = required_prime(kind);
  if (need == 0 && p != 0) throw DomainError(ErrorKind::InvalidTerm, "unexpected torsion");
  if (need > 0 && p != need)
    throw DomainError(ErrorKind::InvalidTerm,
                      std::string(kind_name(kind)) + " carries " + std::to_string(need) + "-primary torsion");
  if (need != 0) PrimePower(p, r);  // validates
  if (top_cell() > kMaxDimension)
    throw DomainError(ErrorKind::RangeExceeded, "dimension beyond " + std::to_string(kMaxDimension));
}

SpaceTerm SpaceTerm::sphere(int m) { return {Kind::Sphere, m, 0, 0}; }
SpaceTerm SpaceTerm::moore(PrimePower q, int m) { return {Kind::Moore, m, q.p(), q.r()}; }
SpaceTerm SpaceTerm::chang_eta(int n) { return {Kind::ChangEta, n, 0, 0}; }
SpaceTerm SpaceTerm::chang_r(int n, int r) { return {Kind::ChangR, n, 2, r}; }
SpaceTerm SpaceTerm::cone_eta2(int n) { return {Kind::ConeEta2, n, 0, 0}; }
SpaceTerm SpaceTerm::cone_tilde_eta(int n, int r) { return {Kind::ConeTildeEta, n, 2, r}; }
SpaceTerm SpaceTerm::cone_2r_eta2(int n, int r) { return {Kind::Cone2rEta2, n, 2, r}; }
SpaceTerm SpaceTerm::cone_tilde_eta_eta(int n, int r) { return {Kind::ConeTildeEtaEta, n, 2, r}; }
SpaceTerm SpaceTerm::cone_chang(int n, int r) { return {Kind::ConeChang, n, 2, r}; }
SpaceTerm SpaceTerm::cone_eta3(int m) { return {Kind::ConeEta3, m, 0, 0}; }
SpaceTerm SpaceTerm::cone_alpha1(int m) { return {Kind::ConeAlpha1, m, 0, 0}; }
SpaceTerm SpaceTerm::cone_tilde_alpha1(int m, int r) { return {Kind::ConeTildeAlpha1, m, 3, r}; }
SpaceTerm SpaceTerm::cone_i_alpha1(int m, int r) { return {Kind::ConeIAlpha1, m, 3, r}; }

int SpaceTerm::top_cell() const noexcept {
  switch (kind_) {
    case Kind::Sphere:
    case Kind::Moore: return dim_;
    case Kind::ChangEta:
    case Kind::ChangR: return dim_ + 2;
    case Kind::ConeEta2:
    case Kind::ConeTildeEta:
    case Kind::Cone2rEta2:
    case Kind::ConeTildeEtaEta:
    case Kind::ConeChang: return dim_ + 3;
    case Kind::ConeEta3:
    case Kind::ConeAlpha1:
    case Kind::ConeTildeAlpha1:
    case Kind::ConeIAlpha1: return dim_ + 4;
  }
  return dim_;
}

std::vector<SpaceTerm> moore_terms(const FinAbGroup& g, int m) {
  if (g.free_rank() != 0) throw DomainError(ErrorKind::InvalidTerm, "Moore coefficients must be finite");
  std::vector<SpaceTerm> out;
  for (const auto& q : g.torsion()) out.push_back(SpaceTerm::moore(q, m));
  return out;
}

// ---------------------------------------------------------------- Wedge

Wedge::Wedge(std::vector<SpaceTerm> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end());
}

void Wedge::add(const SpaceTerm& t) { terms_.insert(std::upper_bound(terms_.begin(), terms_.end(), t), t); }

void Wedge::add(const Wedge& w) {
  std::vector<SpaceTerm> merged;
  merged.reserve(terms_.size() + w.terms_.size());
  std::merge(terms_.begin(), terms_.end(), w.terms_.begin(), w.terms_.end(), std::back_inserter(merged));
  terms_ = std::move(merged);
}

void Wedge::add_copies(const SpaceTerm& t, int count) {
  for (int i = 0; i < count; ++i) add(t);
}

bool Wedge::remove(const SpaceTerm& t) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), t);
  if (it == terms_.end() || *it != t) return false;
  terms_.erase(it);
  return true;
}

int Wedge::count(const SpaceTerm& t) const {
  auto [lo, hi] = std::equal_range(terms_.begin(), terms_.end(), t);
  return static_cast<int>(hi - lo);
}

// ---------------------------------------------------------------- homology

void accumulate(GradedGroup& into, int degree, const FinAbGroup& g) {
  if (g.is_zero()) return;
  auto it = into.find(degree);
  if (it == into.end())
    into.emplace(degree, g);
  else
    it->second = direct_sum(it->second, g);
}

GradedGroup reduced_homology(const SpaceTerm& t) {
  GradedGroup h;
  const int n = t.dim();
  const auto tors = [&] { return FinAbGroup::cyclic(t.torsion()); };
  switch (t.kind()) {
    case Kind::Sphere: accumulate(h, n, Z()); break;
    case Kind::Moore: accumulate(h, n - 1, tors()); break;
    case Kind::ChangEta:
      accumulate(h, n, Z());
      accumulate(h, n + 2, Z());
      break;
    case Kind::ChangR:
      accumulate(h, n, tors());
      accumulate(h, n + 2, Z());
      break;
    case Kind::ConeEta2:
      accumulate(h, n, Z());
      accumulate(h, n + 3, Z());
      break;
    case Kind::ConeTildeEta:
    case Kind::Cone2rEta2:
      accumulate(h, n, tors());
      accumulate(h, n + 3, Z());
      break;
    case Kind::ConeTildeEtaEta:
      accumulate(h, n - 1, tors());
      accumulate(h, n + 3, Z());
      break;
    case Kind::ConeChang:
      accumulate(h, n - 1, tors());
      accumulate(h, n + 1, Z());
      accumulate(h, n + 3, Z());
      break;
    case Kind::ConeEta3:
    case Kind::ConeAlpha1:
      accumulate(h, n, Z());
      accumulate(h, n + 4, Z());
      break;
    case Kind::ConeTildeAlpha1:
      accumulate(h, n - 1, tors());
      accumulate(h, n + 4, Z());
      break;
    case Kind::ConeIAlpha1:
      accumulate(h, n, tors());
      accumulate(h, n + 4, Z());
      break;
  }
  return h;
}

GradedGroup reduced_homology(const Wedge& w) {
  GradedGroup h;
  for (const auto& t : w.terms())
    for (const auto& [deg, g] : reduced_homology(t)) accumulate(h, deg, g);
  return h;
}

std::string to_string(const GradedGroup& h) {
  if (h.empty()) return "0";
  std::string out;
  for (const auto& [deg, g] : h) {
    if (!out.empty()) out += ", ";
    out += "H" + std::to_string(deg) + "=" + g.encode();
  }
  return out;
}

// ---------------------------------------------------------------- suspension, localization

SpaceTerm suspend(const SpaceTerm& t) {
  if (t.top_cell() + 1 > kMaxDimension)
    throw DomainError(ErrorKind::RangeExceeded, "cannot suspend " + to_string(t));
  const int n = t.dim() + 1;
  const int r = t.exponent();
  switch (t.kind()) {
    case Kind::Sphere: return SpaceTerm::sphere(n);
    case Kind::Moore: return SpaceTerm::moore(t.torsion(), n);
    case Kind::ChangEta: return SpaceTerm::chang_eta(n);
    case Kind::ChangR: return SpaceTerm::chang_r(n, r);
    case Kind::ConeEta2: return SpaceTerm::cone_eta2(n);
    case Kind::ConeTildeEta: return SpaceTerm::cone_tilde_eta(n, r);
    case Kind::Cone2rEta2: return SpaceTerm::cone_2r_eta2(n, r);
    case Kind::ConeTildeEtaEta: return SpaceTerm::cone_tilde_eta_eta(n, r);
    case Kind::ConeChang: return SpaceTerm::cone_chang(n, r);
    case Kind::ConeEta3: return SpaceTerm::cone_eta3(n);
    case Kind::ConeAlpha1: return SpaceTerm::cone_alpha1(n);
    case Kind::ConeTildeAlpha1: return SpaceTerm::cone_tilde_alpha1(n, r);
    case Kind::ConeIAlpha1: return SpaceTerm::cone_i_alpha1(n, r);
  }
  return t;
}

Wedge suspend(const Wedge& w) {
  std::vector<SpaceTerm> out;
  for (const auto& t : w.terms()) out.push_back(suspend(t));
  return Wedge(std::move(out));
}

Wedge localize_away_from_2(const SpaceTerm& t) {
  const int n = t.dim();
  using S = SpaceTerm;
  switch (t.kind()) {
    case Kind::Sphere: return Wedge({t});
    case Kind::Moore: return t.prime() == 2 ? Wedge() : Wedge({t});
    case Kind::ChangEta: return Wedge({S::sphere(n), S::sphere(n + 2)});
    case Kind::ChangR: return Wedge({S::sphere(n + 2)});
    case Kind::ConeEta2: return Wedge({S::sphere(n), S::sphere(n + 3)});
    case Kind::ConeTildeEta:
    case Kind::Cone2rEta2:
    case Kind::ConeTildeEtaEta: return Wedge({S::sphere(n + 3)});
    case Kind::ConeChang: return Wedge({S::sphere(n + 1), S::sphere(n + 3)});
    case Kind::ConeEta3: return Wedge({S::sphere(n), S::sphere(n + 4)});
    case Kind::ConeAlpha1:
    case Kind::ConeTildeAlpha1:
    case Kind::ConeIAlpha1: return Wedge({t});
  }
  return Wedge({t});
}

Wedge localize_away_from_2(const Wedge& w) {
  Wedge out;
  for (const auto& t : w.terms()) out.add(localize_away_from_2(t));
  return out;
}

// ---------------------------------------------------------------- operations

OperationSignature operation_signature(const SpaceTerm& t) {
  OperationSignature sig;
  const int n = t.dim();
  auto bock = [&](int deg) { sig[deg].bocksteins.push_back(t.torsion()); };
  switch (t.kind()) {
    case Kind::Sphere: break;
    case Kind::Moore: bock(n - 1); break;
    case Kind::ChangEta: sig[n].sq2 = true; break;
    case Kind::ChangR:
      sig[n].sq2 = true;
      bock(n);
      break;
    case Kind::ConeEta2: sig[n].theta = true; break;
    case Kind::ConeTildeEta:
      bock(n);
      sig[n + 1].sq2 = true;
      break;
    case Kind::Cone2rEta2:
      sig[n].theta = true;
      bock(n);
      break;
    case Kind::ConeTildeEtaEta:
      bock(n - 1);
      sig[n].theta = true;
      break;
    case Kind::ConeChang:
      sig[n - 1].sq2 = true;
      bock(n - 1);
      sig[n].theta = true;
      break;
    case Kind::ConeEta3: sig[n].tertiary = true; break;
    case Kind::ConeAlpha1: sig[n].p1 = true; break;
    case Kind::ConeTildeAlpha1:
      bock(n - 1);
      sig[n].p1 = true;
      break;
    case Kind::ConeIAlpha1:
      sig[n].p1 = true;
      bock(n);
      break;
  }
  return sig;
}

OperationSignature operation_signature(const Wedge& w) {
  OperationSignature sig;
  for (const auto& t : w.terms()) {
    for (const auto& [deg, ops] : operation_signature(t)) {
      auto& into = sig[deg];
      into.sq2 |= ops.sq2;
      into.theta |= ops.theta;
      into.tertiary |= ops.tertiary;
      into.p1 |= ops.p1;
      into.bocksteins.insert(into.bocksteins.end(), ops.bocksteins.begin(), ops.bocksteins.end());
      std::sort(into.bocksteins.begin(), into.bocksteins.end());
    }
  }
  return sig;
}

// ---------------------------------------------------------------- text

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::Sphere: return "Sphere";
    case Kind::Moore: return "Moore";
    case Kind::ChangEta: return "ChangEta";
    case Kind::ChangR: return "ChangR";
    case Kind::ConeEta2: return "ConeEta2";
    case Kind::ConeTildeEta: return "ConeTildeEta";
    case Kind::Cone2rEta2: return "Cone2rEta2";
    case Kind::ConeTildeEtaEta: return "ConeTildeEtaEta";
    case Kind::ConeChang: return "ConeChang";
    case Kind::ConeEta3: return "ConeEta3";
    case Kind::ConeAlpha1: return "ConeAlpha1";
    case Kind::ConeTildeAlpha1: return "ConeTildeAlpha1";
    case Kind::ConeIAlpha1: return "ConeIAlpha1";
  }
  return "?";
}

namespace {

std::string sphere_text(int m) { return "S^" + std::to_string(m); }
std::string moore_text(const PrimePower& q, int m) {
  return "P^" + std::to_string(m) + "(Z/" + std::to_string(q.value()) + ")";
}
std::string chang_r_text(int n, const PrimePower& q) {
  return "C_{" + std::to_string(q.r()) + "}^" + std::to_string(n + 2) + "(Z/" + std::to_string(q.value()) + ")";
}
std::string cone_text(const std::string& base, const std::string& map, int top) {
  return "(" + base + " u_{" + map + "} e^" + std::to_string(top) + ")";
}

}  // namespace

std::string to_string(const SpaceTerm& t) {
  const int n = t.dim();
  const int top = t.top_cell();
  const std::string r = std::to_string(t.exponent());
  switch (t.kind()) {
    case Kind::Sphere: return sphere_text(n);
    case Kind::Moore: return moore_text(t.torsion(), n);
    case Kind::ChangEta: return "C_eta^" + std::to_string(n + 2);
    case Kind::ChangR: return chang_r_text(n, t.torsion());
    case Kind::ConeEta2: return cone_text(sphere_text(n), "eta^2", top);
    case Kind::ConeTildeEta: return cone_text(moore_text(t.torsion(), n + 1), "teta_" + r, top);
    case Kind::Cone2rEta2: return cone_text(moore_text(t.torsion(), n + 1), "i*eta^2", top);
    case Kind::ConeTildeEtaEta: return cone_text(moore_text(t.torsion(), n), "teta_" + r + "*eta", top);
    case Kind::ConeChang: return cone_text(chang_r_text(n - 1, t.torsion()), "iP*teta_" + r + "*eta", top);
    case Kind::ConeEta3: return cone_text(sphere_text(n), "eta^3", top);
    case Kind::ConeAlpha1: return cone_text(sphere_text(n), "alpha1", top);
    case Kind::ConeTildeAlpha1: return cone_text(moore_text(t.torsion(), n), "talpha1", top);
    case Kind::ConeIAlpha1: return cone_text(moore_text(t.torsion(), n + 1), "i*alpha1", top);
  }
  return "?";
}

std::string to_string(const Wedge& w) {
  if (w.is_point()) return "*";
  std::string out;
  for (const auto& t : w.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(t);
  }
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  bool done() const { return pos_ == s_.size(); }
  bool eat(std::string_view lit) {
    if (s_.substr(pos_, lit.size()) != lit) return false;
    pos_ += lit.size();
    return true;
  }
  void expect(std::string_view lit) {
    if (!eat(lit)) fail("expected '" + std::string(lit) + "'");
  }
  long long number() {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc() || ptr == s_.data() + pos_) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }
  // Number optionally wrapped in braces: 5 or {5}.
  long long braced_number() {
    if (eat("{")) {
      long long v = number();
      expect("}");
      return v;
    }
    return number();
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError(ErrorKind::InvalidTerm,
                      why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

PrimePower as_prime_power(long long q, const Cursor& c) {
  if (q < 2) c.fail("coefficient must be >= 2");
  FinAbGroup g = FinAbGroup::from_cyclic_order(q);
  if (g.torsion().size() != 1) c.fail("coefficient " + std::to_string(q) + " is not a prime power");
  return g.torsion()[0];
}

std::vector<SpaceTerm> parse_simple(Cursor& c, bool allow_composite);

SpaceTerm parse_one(Cursor& c) {
  auto terms = parse_simple(c, false);
  return terms.front();
}

std::vector<SpaceTerm> parse_cone(Cursor& c) {
  SpaceTerm base = parse_one(c);
  c.expect(" u_{");
  std::string map;
  // generator text runs to the closing brace
  while (!c.done() && !c.eat("}")) {
    char ch = 0;
    for (char candidate : std::string_view("abcdefghijklmnopqrstuvwxyzP*^_0123456789")) {
      std::string one(1, candidate);
      if (c.eat(one)) {
        ch = candidate;
        break;
      }
    }
    if (ch == 0) c.fail("bad generator name");
    map += ch;
  }
  c.expect(" e^");
  const long long top = c.braced_number();
  c.expect(")");

  const int r = base.exponent();
  const std::string rs = std::to_string(r);
  SpaceTerm out;
  if (base.kind() == Kind::Sphere && map == "eta^2")
    out = SpaceTerm::cone_eta2(base.dim());
  else if (base.kind() == Kind::Sphere && map == "eta^3")
    out = SpaceTerm::cone_eta3(base.dim());
  else if (base.kind() == Kind::Sphere && map == "alpha1")
    out = SpaceTerm::cone_alpha1(base.dim());
  else if (base.kind() == Kind::Moore && base.prime() == 2 && map == "teta_" + rs)
    out = SpaceTerm::cone_tilde_eta(base.dim() - 1, r);
  else if (base.kind() == Kind::Moore && base.prime() == 2 && map == "i*eta^2")
    out = SpaceTerm::cone_2r_eta2(base.dim() - 1, r);
  else if (base.kind() == Kind::Moore && base.prime() == 2 && map == "teta_" + rs + "*eta")
    out = SpaceTerm::cone_tilde_eta_eta(base.dim(), r);
  else if (base.kind() == Kind::ChangR && map == "iP*teta_" + rs + "*eta")
    out = SpaceTerm::cone_chang(base.dim() + 1, r);
  else if (base.kind() == Kind::Moore && base.prime() == 3 && map == "talpha1")
    out = SpaceTerm::cone_tilde_alpha1(base.dim(), r);
  else if (base.kind() == Kind::Moore && base.prime() == 3 && map == "i*alpha1")
    out = SpaceTerm::cone_i_alpha1(base.dim() - 1, r);
  else
    c.fail("no catalog cone of " + to_string(base) + " along " + map);
  if (out.top_cell() != top) c.fail("top cell should be e^" + std::to_string(out.top_cell()));
  return {out};
}

std::vector<SpaceTerm> parse_simple(Cursor& c, bool allow_composite) {
  if (c.eat("(")) return parse_cone(c);
  if (c.eat("S^")) return {SpaceTerm::sphere(static_cast<int>(c.braced_number()))};
  if (c.eat("P^")) {
    const int m = static_cast<int>(c.braced_number());
    c.expect("(Z/");
    const long long q = c.number();
    c.expect(")");
    if (allow_composite && q >= 2) return moore_terms(FinAbGroup::from_cyclic_order(q), m);
    return {SpaceTerm::moore(as_prime_power(q, c), m)};
  }
  if (c.eat("C_eta^")) return {SpaceTerm::chang_eta(static_cast<int>(c.braced_number()) - 2)};
  if (c.eat("C_{")) {
    const int r = static_cast<int>(c.number());
    c.expect("}^");
    const int m = static_cast<int>(c.braced_number());
    if (c.eat("(Z/")) {
      const PrimePower q = as_prime_power(c.number(), c);
      c.expect(")");
      if (q.p() != 2 || q.r() != r) c.fail("Chang coefficient must be Z/2^" + std::to_string(r));
    }
    return {SpaceTerm::chang_r(m - 2, r)};
  }
  if (c.eat("C^")) {
    const int m = static_cast<int>(c.braced_number());
    c.expect("_");
    if (c.eat("eta")) return {SpaceTerm::chang_eta(m - 2)};
    const int r = static_cast<int>(c.braced_number());
    return {SpaceTerm::chang_r(m - 2, r)};
  }
  c.fail("unrecognised term");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

SpaceTerm parse_term(std::string_view text) {
  text = trim(text);
  Cursor c(text);
  SpaceTerm t = parse_one(c);
  if (!c.done()) c.fail("trailing characters");
  return t;
}

Wedge parse_wedge(std::string_view text) {
  text = trim(text);
  if (text == "*" || text.empty()) return Wedge();
  Cursor c(text);
  std::vector<SpaceTerm> all;
  while (true) {
    auto part = parse_simple(c, true);
    all.insert(all.end(), part.begin(), part.end());
    if (c.done()) break;
    c.expect(" + ");
  }
  return Wedge(std::move(all));
}

}  // namespace suspsplit
