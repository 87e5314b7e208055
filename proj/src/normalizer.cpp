#include "suspsplit/normalizer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "suspsplit/errors.hpp"

namespace suspsplit {

namespace {

[[noreturn]] void invalid(const std::string& why) { throw DomainError(ErrorKind::InvalidVector, why); }

bool odd_kind(SlotKind k) { return k == SlotKind::Alpha1 || k == SlotKind::TAlpha1 || k == SlotKind::IAlpha1; }

std::int64_t coeff_of(const FormalSum& x, const GeneratorSymbol& g) {
  auto i = x.group().index_of(g);
  return i ? x.coeffs()[*i] : 0;
}

void require_only(const FormalSum& x, const std::optional<GeneratorSymbol>& allowed, const SpaceTerm& t) {
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    if (x.coeffs()[i] == 0) continue;
    if (allowed && x.group().summands[i].gen == *allowed) continue;
    invalid("component " + to_string(x.group().summands[i].gen) + " on " + to_string(t) +
            " is not a suspended generator");
  }
}

GeneratorSymbol gen_of(SlotKind k, int r) {
  switch (k) {
    case SlotKind::Teta: return {Gen::Teta, 0, r, 0};
    case SlotKind::IEta2: return {Gen::InEta2, 4, 0, 0};
    case SlotKind::Eta3: return {Gen::Eta3, 0, 0, 0};
    case SlotKind::Eta: return {Gen::Eta, 0, 0, 0};
    case SlotKind::TetaEta: return {Gen::TetaEta, 0, r, 0};
    case SlotKind::IPTetaEta: return {Gen::IPTetaEta, 0, r, 0};
    case SlotKind::Alpha1: return {Gen::Alpha1, 5, 0, 0};
    case SlotKind::TAlpha1: return {Gen::TAlpha1, 5, r, 0};
    case SlotKind::IAlpha1: return {Gen::IAlpha1, 5, 0, 0};
    case SlotKind::Passive: break;
  }
  invalid("passive slot has no generator");
}

bool exponent_ok(ExponentCondition c, int rp, int rv) {
  switch (c) {
    case ExponentCondition::Any: return true;
    case ExponentCondition::PivotLE: return rp <= rv;
    case ExponentCondition::PivotGE: return rp >= rv;
    case ExponentCondition::PivotLT: return rp < rv;
    case ExponentCondition::PivotGT: return rp > rv;
  }
  return false;
}

std::vector<RewriteRule> by_priority(std::vector<RewriteRule> rules) {
  std::stable_sort(rules.begin(), rules.end(),
                   [](const RewriteRule& a, const RewriteRule& b) { return a.priority < b.priority; });
  return rules;
}

const RewriteRule& find_rule(const std::vector<RewriteRule>& rules, const std::string& id) {
  for (const auto& r : rules)
    if (r.id == id) return r;
  invalid("unknown rule " + id);
}

}  // namespace

std::string_view slot_name(SlotKind k) {
  switch (k) {
    case SlotKind::Passive: return "passive";
    case SlotKind::Teta: return "teta";
    case SlotKind::IEta2: return "i*eta^2";
    case SlotKind::Eta3: return "eta^3";
    case SlotKind::Eta: return "eta";
    case SlotKind::TetaEta: return "teta*eta";
    case SlotKind::IPTetaEta: return "iP*teta*eta";
    case SlotKind::Alpha1: return "alpha1";
    case SlotKind::TAlpha1: return "talpha1";
    case SlotKind::IAlpha1: return "i*alpha1";
  }
  return "?";
}

HomotopyGroup entry_group(int m, const SpaceTerm& t) { return m == 8 ? pi_odd(m, t) : pi(m, t); }

int SlotVector::nonzero() const {
  return static_cast<int>(std::count_if(slots.begin(), slots.end(), [](const Slot& s) { return s.coeff != 0; }));
}

SlotVector blank_slots(int m, const std::vector<SpaceTerm>& target) {
  if (m != 6 && m != 8)
    throw DomainError(ErrorKind::UnsupportedPair, "normal forms are stored for S^6 and S^8 sources only");
  SlotVector v;
  v.m = m;
  v.target = target;
  for (std::size_t i = 0; i < target.size(); ++i) {
    const SpaceTerm& t = target[i];
    const int r = t.exponent();
    auto add = [&](SlotKind k) { v.slots.push_back({i, k, r, 0}); };
    if (m == 6) {
      if (t.kind() == Kind::Sphere && t.dim() == 3) add(SlotKind::Eta3);
      if (t.kind() == Kind::Sphere && t.dim() == 5) add(SlotKind::Eta);
      if (t.kind() == Kind::Moore && t.prime() == 2 && t.dim() == 5) {
        add(SlotKind::Teta);
        add(SlotKind::IEta2);
      }
      if (t.kind() == Kind::Moore && t.prime() == 2 && t.dim() == 4) add(SlotKind::TetaEta);
      if (t.kind() == Kind::ChangR && t.dim() == 3) add(SlotKind::IPTetaEta);
    } else {
      if (t.kind() == Kind::Sphere && t.dim() == 5) add(SlotKind::Alpha1);
      if (t.kind() == Kind::Moore && t.prime() == 3 && t.dim() == 5) add(SlotKind::TAlpha1);
      if (t.kind() == Kind::Moore && t.prime() == 3 && t.dim() == 6) add(SlotKind::IAlpha1);
    }
  }
  return v;
}

SlotVector to_slots(const AttachingVector& a) {
  if (a.entries.size() != a.target.size()) invalid("one entry per target term is required");
  SlotVector v = blank_slots(a.m, a.target);
  for (std::size_t i = 0; i < a.target.size(); ++i) {
    const SpaceTerm& t = a.target[i];
    const FormalSum& x = a.entries[i];
    if (!(x.group() == entry_group(a.m, t))) invalid("entry " + std::to_string(i) + " lies in the wrong group");
    auto set = [&](SlotKind k, std::int64_t c) {
      for (auto& s : v.slots)
        if (s.term == i && s.kind == k) s.coeff = static_cast<int>(c);
    };
    std::vector<Slot*> mine;
    for (auto& s : v.slots)
      if (s.term == i) mine.push_back(&s);
    if (mine.empty()) {
      require_only(x, std::nullopt, t);
      continue;
    }
    const SlotKind k0 = mine.front()->kind;
    if (k0 == SlotKind::Eta3) {
      const std::int64_t c = x.coeffs().at(0);
      if (c != 0 && c != 6) invalid(std::to_string(c) + "*nu' on " + to_string(t) + " is not a suspension");
      set(k0, c / 6);
    } else if (k0 == SlotKind::Teta && t.exponent() == 1) {
      const std::int64_t c = x.coeffs().at(0);
      set(SlotKind::Teta, c & 1);
      set(SlotKind::IEta2, c >> 1);
    } else if (k0 == SlotKind::Teta) {
      set(SlotKind::Teta, coeff_of(x, gen_of(SlotKind::Teta, t.exponent())));
      set(SlotKind::IEta2, coeff_of(x, gen_of(SlotKind::IEta2, t.exponent())));
    } else {
      const GeneratorSymbol g = gen_of(k0, t.exponent());
      require_only(x, g, t);
      set(k0, coeff_of(x, g));
    }
  }
  return v;
}

AttachingVector to_attaching(const SlotVector& v) {
  AttachingVector a;
  a.m = v.m;
  a.target = v.target;
  for (const auto& t : v.target) a.entries.emplace_back(entry_group(v.m, t));
  for (const auto& s : v.slots) {
    if (s.coeff == 0) continue;
    FormalSum& e = a.entries[s.term];
    e = e + element(e.group(), gen_of(s.kind, s.r)) * s.coeff;
  }
  return a;
}

// ---------------------------------------------------------------- rules

std::vector<RewriteRule> rule_set(int n) {
  using S = SlotKind;
  using C = ExponentCondition;
  std::vector<RewriteRule> out;
  auto kill = [&](std::string id, int prio, S pivot, S victim, C cond, std::string cite, bool same = false) {
    out.push_back({std::move(id), prio, pivot, victim, cond, same, Effect::ZeroVictim, std::move(cite)});
  };
  if (n == 2) {
    kill("teta-absorb", 1, S::Teta, S::IEta2, C::Any, "(1_P + i4 eta q5)(teta_r + i4 eta^2) = teta_r", true);
    kill("teta-teta", 1, S::Teta, S::Teta, C::PivotLE, "B(chi^r_s) teta_r = teta_s");
    kill("teta-ieta2", 1, S::Teta, S::IEta2, C::Any, "i4 eta q5 teta_r = i4 eta^2");
    kill("teta-eta", 1, S::Teta, S::Eta, C::Any, "q5 teta_r = eta");
    kill("teta-tetaeta", 1, S::Teta, S::TetaEta, C::Any, "teta_s eta q5 teta_r = teta_s eta");
    kill("teta-iptetaeta", 1, S::Teta, S::IPTetaEta, C::Any, "iP teta_s eta q5 teta_r");
    kill("teta-eta3", 1, S::Teta, S::Eta3, C::Any, "eta^2 q5 teta_r = eta^3");
    kill("tetaeta-ieta2", 2, S::TetaEta, S::IEta2, C::Any, "i4 eta q4 applied to teta_r eta");
    kill("tetaeta-eta3", 2, S::TetaEta, S::Eta3, C::Any, "eta q4 applied to teta_r eta");
    kill("tetaeta-tetaeta", 2, S::TetaEta, S::TetaEta, C::PivotLE, "B(chi^r_s) teta_r eta = teta_s eta");
    kill("tetaeta-iptetaeta", 2, S::TetaEta, S::IPTetaEta, C::PivotLE, "alpha^r_s iP = iP B(chi^r_s)");
    kill("iptetaeta-ieta2", 2, S::IPTetaEta, S::IEta2, C::Any, "i4 eta q applied to iP teta_r eta");
    kill("iptetaeta-eta3", 2, S::IPTetaEta, S::Eta3, C::Any, "eta q applied to iP teta_r eta");
    kill("iptetaeta-iptetaeta", 2, S::IPTetaEta, S::IPTetaEta, C::PivotLE, "alpha^r_s iP teta_r eta = iP teta_s eta");
    kill("iptetaeta-tetaeta", 2, S::IPTetaEta, S::TetaEta, C::PivotLT, "B(chi^{s+1}_r) xi_s iP teta_s eta = teta_r eta");
    kill("ieta2-ieta2", 3, S::IEta2, S::IEta2, C::PivotGE, "B(chi^s_r) i4 = i4 for s >= r");
    kill("ieta2-eta3", 3, S::IEta2, S::Eta3, C::Any, "bar-eta_r i4 = eta");
    kill("eta-eta3", 4, S::Eta, S::Eta3, C::Any, "eta^2 applied to eta");
    kill("eta-ieta2", 4, S::Eta, S::IEta2, C::Any, "i4 eta applied to eta");
    kill("eta-tetaeta", 4, S::Eta, S::TetaEta, C::Any, "teta_r applied to eta");
    kill("eta-iptetaeta", 4, S::Eta, S::IPTetaEta, C::Any, "iP teta_r applied to eta");
    kill("eta-eta", 4, S::Eta, S::Eta, C::Any, "identity between sphere summands");
    kill("eta3-eta3", 5, S::Eta3, S::Eta3, C::Any, "identity between sphere summands");
  } else if (n == 3) {
    kill("talpha-alpha", 1, S::TAlpha1, S::Alpha1, C::Any, "q5 talpha1 = alpha1");
    kill("talpha-ialpha", 1, S::TAlpha1, S::IAlpha1, C::Any, "i5 q5 talpha1 = i5 alpha1");
    kill("talpha-talpha", 1, S::TAlpha1, S::TAlpha1, C::PivotLE, "B(chi^r_s) talpha1 = talpha1");
    kill("alpha-ialpha", 2, S::Alpha1, S::IAlpha1, C::Any, "i5 alpha1");
    kill("alpha-alpha", 2, S::Alpha1, S::Alpha1, C::Any, "identity between sphere summands");
    kill("ialpha-ialpha", 3, S::IAlpha1, S::IAlpha1, C::PivotGE, "B(chi^r_s) i5 = i5 for r >= s");
    out.push_back({"unit", 9, S::Passive, S::Passive, C::Any, false, Effect::UnitNormalize, "-g and g have equal cones"});
  } else {
    throw DomainError(ErrorKind::UnsupportedPair, "rewrite rules exist for n = 2 and n = 3");
  }
  return out;
}

bool rule_matches(const RewriteRule& rule, const SlotVector& v, std::size_t p, std::size_t q) {
  const Slot& a = v.slots.at(p);
  const Slot& b = v.slots.at(q);
  if (rule.effect == Effect::UnitNormalize) return p == q && odd_kind(a.kind) && a.coeff != 0 && a.coeff != 1;
  if (p == q || a.coeff == 0) return false;
  if (a.kind != rule.pivot || b.kind != rule.victim) return false;
  if (rule.same_entry != (a.term == b.term)) return false;
  return exponent_ok(rule.cond, a.r, b.r);
}

SlotVector apply_rule(const RewriteRule& rule, const SlotVector& v, std::size_t p, std::size_t q) {
  if (!rule_matches(rule, v, p, q)) invalid("rule " + rule.id + " does not apply");
  SlotVector out = v;
  if (rule.effect == Effect::UnitNormalize)
    out.slots[p].coeff = 1;
  else
    out.slots[q].coeff = 0;
  return out;
}

namespace {

Normalized normalize_ordered(const SlotVector& v, const std::vector<RewriteRule>& ordered);

}  // namespace

Normalized normalize(const SlotVector& v) {
  static const std::vector<RewriteRule> two = by_priority(rule_set(2));
  static const std::vector<RewriteRule> three = by_priority(rule_set(3));
  return normalize_ordered(v, v.m == 8 ? three : two);
}

Normalized normalize(const SlotVector& v, const std::vector<RewriteRule>& rules) {
  return normalize_ordered(v, by_priority(rules));
}

namespace {

Normalized normalize_ordered(const SlotVector& v, const std::vector<RewriteRule>& ordered) {
  Normalized out{v, {}};
  int twos = 0;
  for (const auto& s : v.slots) twos += s.coeff >= 2 ? 1 : 0;
  const int bound = v.nonzero() + twos;
  SlotVector& cur = out.vector;
  const std::size_t k = cur.slots.size();
  while (true) {
    bool applied = false;
    for (const auto& rule : ordered) {
      for (std::size_t p = 0; p < k && !applied; ++p) {
        if (rule.effect == Effect::UnitNormalize) {
          if (rule_matches(rule, cur, p, p)) {
            cur.slots[p].coeff = 1;
            out.trace.push_back({rule.id, cur.slots[p].term, cur.slots[p].term});
            applied = true;
          }
          continue;
        }
        for (std::size_t q = 0; q < k && !applied; ++q) {
          if (cur.slots[q].coeff == 0 || !rule_matches(rule, cur, p, q)) continue;
          cur.slots[q].coeff = 0;
          out.trace.push_back({rule.id, cur.slots[p].term, cur.slots[q].term});
          applied = true;
        }
      }
      if (applied) break;
    }
    if (!applied) break;
    if (static_cast<int>(out.trace.size()) > bound)
      throw DomainError(ErrorKind::NonTermination, "rewriting exceeded its measure bound of " + std::to_string(bound));
  }
  return out;
}

}  // namespace

SlotVector replay(const SlotVector& v, const std::vector<TraceStep>& trace, const std::vector<RewriteRule>& rules) {
  SlotVector cur = v;
  for (const auto& step : trace) {
    const RewriteRule& rule = find_rule(rules, step.rule);
    std::optional<std::size_t> p, q;
    for (std::size_t i = 0; i < cur.slots.size(); ++i) {
      const Slot& s = cur.slots[i];
      if (rule.effect == Effect::UnitNormalize) {
        if (s.term == step.pivot_term && odd_kind(s.kind)) p = q = i;
        continue;
      }
      if (s.term == step.pivot_term && s.kind == rule.pivot) p = i;
      if (s.term == step.victim_term && s.kind == rule.victim) q = i;
    }
    if (!p || !q) invalid("trace step " + step.rule + " names absent slots");
    cur = apply_rule(rule, cur, *p, *q);
  }
  return cur;
}

// ---------------------------------------------------------------- survivors and cones

std::optional<Survivor> dominant_survivor(const SlotVector& v) {
  auto best = [&](SlotKind k, bool want_min) -> std::optional<int> {
    std::optional<int> r;
    for (const auto& s : v.slots) {
      if (s.coeff == 0 || s.kind != k) continue;
      if (!r || (want_min ? s.r < *r : s.r > *r)) r = s.r;
    }
    return r;
  };
  if (v.m == 8) {
    if (auto r = best(SlotKind::TAlpha1, true)) return Survivor{SlotKind::TAlpha1, *r};
    if (auto r = best(SlotKind::Alpha1, true)) return Survivor{SlotKind::Alpha1, *r};
    if (auto r = best(SlotKind::IAlpha1, false)) return Survivor{SlotKind::IAlpha1, *r};
    return std::nullopt;
  }
  if (auto r = best(SlotKind::Teta, true)) return Survivor{SlotKind::Teta, *r};
  if (auto r = best(SlotKind::Eta, true)) return Survivor{SlotKind::Eta, *r};
  auto te = best(SlotKind::TetaEta, true);
  auto ip = best(SlotKind::IPTetaEta, true);
  if (te && (!ip || *te <= *ip)) return Survivor{SlotKind::TetaEta, *te};
  if (ip) return Survivor{SlotKind::IPTetaEta, *ip};
  if (auto r = best(SlotKind::IEta2, false)) return Survivor{SlotKind::IEta2, *r};
  if (auto r = best(SlotKind::Eta3, true)) return Survivor{SlotKind::Eta3, *r};
  return std::nullopt;
}

std::optional<Survivor> survivor(const SlotVector& v) {
  if (v.nonzero() > 1) throw DomainError(ErrorKind::NotNormalized, "more than one nonzero component");
  for (const auto& s : v.slots)
    if (s.coeff != 0) return Survivor{s.kind, s.r};
  return std::nullopt;
}

Wedge cofiber(const SlotVector& v) {
  if (v.nonzero() > 1) throw DomainError(ErrorKind::NotNormalized, "more than one nonzero component");
  const Slot* live = nullptr;
  for (const auto& s : v.slots)
    if (s.coeff != 0) live = &s;
  Wedge w;
  for (std::size_t i = 0; i < v.target.size(); ++i)
    if (!live || live->term != i) w.add(v.target[i]);
  if (!live) {
    w.add(SpaceTerm::sphere(v.m + 1));
    return w;
  }
  const SpaceTerm& t = v.target[live->term];
  const int r = live->r;
  switch (live->kind) {
    case SlotKind::Eta: w.add(SpaceTerm::chang_eta(t.dim())); break;
    case SlotKind::Eta3: w.add(SpaceTerm::cone_eta3(t.dim())); break;
    case SlotKind::IEta2: w.add(SpaceTerm::cone_2r_eta2(t.dim() - 1, r)); break;
    case SlotKind::Teta: w.add(SpaceTerm::cone_tilde_eta(t.dim() - 1, r)); break;
    case SlotKind::TetaEta: w.add(SpaceTerm::cone_tilde_eta_eta(t.dim(), r)); break;
    case SlotKind::IPTetaEta: w.add(SpaceTerm::cone_chang(t.dim() + 1, r)); break;
    case SlotKind::Alpha1: w.add(SpaceTerm::cone_alpha1(t.dim())); break;
    case SlotKind::TAlpha1: w.add(SpaceTerm::cone_tilde_alpha1(t.dim(), r)); break;
    case SlotKind::IAlpha1: w.add(SpaceTerm::cone_i_alpha1(t.dim() - 1, r)); break;
    case SlotKind::Passive: invalid("passive slot carries a coefficient");
  }
  return w;
}

// ---------------------------------------------------------------- orbit oracle

std::string_view to_string(OrbitResult r) {
  switch (r) {
    case OrbitResult::Equivalent: return "equivalent";
    case OrbitResult::NotEquivalent: return "not equivalent";
    case OrbitResult::DepthExceeded: return "depth exceeded";
  }
  return "?";
}

namespace {

bool same_layout(const SlotVector& a, const SlotVector& b) {
  if (a.m != b.m || a.target != b.target || a.slots.size() != b.slots.size()) return false;
  for (std::size_t i = 0; i < a.slots.size(); ++i)
    if (a.slots[i].kind != b.slots[i].kind || a.slots[i].term != b.slots[i].term || a.slots[i].r != b.slots[i].r)
      return false;
  return true;
}

std::vector<int> coeffs(const SlotVector& v) {
  std::vector<int> c;
  for (const auto& s : v.slots) c.push_back(s.coeff);
  return c;
}

void set_coeffs(SlotVector& v, const std::vector<int>& c) {
  for (std::size_t i = 0; i < c.size(); ++i) v.slots[i].coeff = c[i];
}

// Every state one move away, in either direction.
std::vector<std::vector<int>> neighbours(const SlotVector& layout, const std::vector<int>& c,
                                         const std::vector<RewriteRule>& rules) {
  SlotVector v = layout;
  set_coeffs(v, c);
  const int mod = v.modulus();
  std::vector<std::vector<int>> out;
  const std::size_t k = c.size();
  for (const auto& rule : rules) {
    if (rule.effect == Effect::UnitNormalize) {
      for (std::size_t p = 0; p < k; ++p) {
        if (!odd_kind(v.slots[p].kind) || c[p] == 0) continue;
        auto next = c;
        next[p] = (c[p] * (mod - 1)) % mod;
        out.push_back(std::move(next));
      }
      continue;
    }
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = 0; q < k; ++q) {
        if (!rule_matches(rule, v, p, q)) continue;
        for (int add = 1; add < mod; ++add) {
          auto next = c;
          next[q] = (c[q] + add) % mod;
          out.push_back(std::move(next));
        }
      }
  }
  return out;
}

}  // namespace

OrbitResult orbit_equivalent(const SlotVector& a, const SlotVector& b, int depth) {
  return orbit_equivalent(a, b, depth, rule_set(a.m == 8 ? 3 : 2));
}

OrbitResult orbit_equivalent(const SlotVector& a, const SlotVector& b, int depth,
                             const std::vector<RewriteRule>& rules) {
  if (!same_layout(a, b)) return OrbitResult::NotEquivalent;
  const auto goal = coeffs(b);
  std::set<std::vector<int>> seen{coeffs(a)};
  std::vector<std::vector<int>> frontier{coeffs(a)};
  for (int level = 0;; ++level) {
    for (const auto& c : frontier)
      if (c == goal) return OrbitResult::Equivalent;
    if (frontier.empty()) return OrbitResult::NotEquivalent;
    if (level == depth) break;
    std::vector<std::vector<int>> next;
    for (const auto& c : frontier)
      for (auto& n : neighbours(a, c, rules))
        if (seen.insert(n).second) next.push_back(std::move(n));
    frontier = std::move(next);
  }
  return OrbitResult::DepthExceeded;
}

// ---------------------------------------------------------------- confluence

ConfluenceExplorer::ConfluenceExplorer(const SlotVector& layout, std::vector<RewriteRule> rules)
    : layout_(layout), rules_(std::move(rules)) {}

const std::map<std::string, Wedge>& ConfluenceExplorer::fixpoints(const std::vector<int>& c) {
    auto it = memo_.find(c);
    if (it != memo_.end()) return it->second;
    SlotVector v = layout_;
    set_coeffs(v, c);
    std::map<std::string, Wedge> out;
    bool moved = false;
    const std::size_t k = c.size();
    for (const auto& rule : rules_)
      for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < k; ++q) {
          if (rule.effect == Effect::UnitNormalize && p != q) continue;
          if (rule.effect == Effect::ZeroVictim && c[q] == 0) continue;
          if (!rule_matches(rule, v, p, q)) continue;
          moved = true;
          const auto sub = fixpoints(coeffs(apply_rule(rule, v, p, q)));
          out.insert(sub.begin(), sub.end());
        }
    if (!moved) {
      std::string key;
      Wedge w;
      try {
        w = cofiber(v);
        auto s = survivor(v);
        key = std::string(s ? slot_name(s->kind) : "none") + "/" + std::to_string(s ? s->r : 0) + "/" + to_string(w);
      } catch (const DomainError&) {
        key = "stuck/" + to_string(v);
      }
      out.emplace(key, w);
    }
    return memo_.emplace(c, std::move(out)).first->second;
}

ConfluenceReport ConfluenceExplorer::check(const SlotVector& v) {
  if (!same_layout(v, layout_)) invalid("vector does not share the explorer's layout");
  const auto& fps = fixpoints(coeffs(v));
  ConfluenceReport rep;
  rep.fixpoints = fps.size();
  rep.confluent = fps.size() == 1;
  for (const auto& [key, w] : fps) rep.witnesses.push_back(w);
  return rep;
}

ConfluenceReport check_confluence(const SlotVector& v) { return check_confluence(v, rule_set(v.m == 8 ? 3 : 2)); }

ConfluenceReport check_confluence(const SlotVector& v, const std::vector<RewriteRule>& rules) {
  return ConfluenceExplorer(v, rules).check(v);
}

std::string to_string(const SlotVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.slots.size(); ++i) {
    const Slot& s = v.slots[i];
    if (i) out += ", ";
    out += std::string(slot_name(s.kind));
    if (s.r) out += "_" + std::to_string(s.r);
    out += "@" + to_string(v.target[s.term]) + "=" + std::to_string(s.coeff);
  }
  return out + "]";
}

}  // namespace suspsplit
