#include <algorithm>

#include "doctest.h"
#include "suspsplit/errors.hpp"
#include "suspsplit/normalizer.hpp"

using namespace suspsplit;

namespace {

SpaceTerm P(int p, int r, int m) { return SpaceTerm::moore(PrimePower(p, r), m); }

// Sets the coefficient of the first slot of `kind` on target term `term`.
void set(SlotVector& v, std::size_t term, SlotKind kind, int c) {
  for (auto& s : v.slots)
    if (s.term == term && s.kind == kind) {
      s.coeff = c;
      return;
    }
  FAIL("no such slot");
}

int coeff(const SlotVector& v, std::size_t term, SlotKind kind) {
  for (const auto& s : v.slots)
    if (s.term == term && s.kind == kind) return s.coeff;
  return -1;
}

bool has_rule(int n, const std::string& id) {
  const auto rules = rule_set(n);
  return std::any_of(rules.begin(), rules.end(), [&](const RewriteRule& r) { return r.id == id; });
}

}  // namespace

TEST_CASE("rule sets") {
  CHECK(has_rule(2, "tetaeta-iptetaeta"));
  CHECK(has_rule(2, "iptetaeta-tetaeta"));
  CHECK(has_rule(3, "talpha-alpha"));
  CHECK(has_rule(3, "unit"));
  CHECK_FALSE(has_rule(2, "unit"));
  CHECK_THROWS_AS(rule_set(4), DomainError);
}

TEST_CASE("slot layout") {
  const SlotVector v = blank_slots(6, {P(2, 1, 5), SpaceTerm::sphere(3), P(2, 2, 4), SpaceTerm::chang_r(3, 1)});
  REQUIRE(v.slots.size() == 5);
  CHECK(v.slots[0].kind == SlotKind::Teta);
  CHECK(v.slots[1].kind == SlotKind::IEta2);
  CHECK(v.slots[2].kind == SlotKind::Eta3);
  CHECK(v.slots[3].kind == SlotKind::TetaEta);
  CHECK(v.slots[4].kind == SlotKind::IPTetaEta);
  CHECK(v.modulus() == 2);
  CHECK(blank_slots(8, {SpaceTerm::sphere(5)}).modulus() == 3);
}

TEST_CASE("cross rule keeps the smaller exponent") {
  SlotVector v = blank_slots(6, {P(2, 2, 4), SpaceTerm::chang_r(3, 3)});
  set(v, 0, SlotKind::TetaEta, 1);
  set(v, 1, SlotKind::IPTetaEta, 1);
  const SlotVector out = normalize(v).vector;
  CHECK(coeff(out, 0, SlotKind::TetaEta) == 1);
  CHECK(coeff(out, 1, SlotKind::IPTetaEta) == 0);

  SlotVector w = blank_slots(6, {P(2, 3, 4), SpaceTerm::chang_r(3, 2)});
  set(w, 0, SlotKind::TetaEta, 1);
  set(w, 1, SlotKind::IPTetaEta, 1);
  const SlotVector out2 = normalize(w).vector;
  CHECK(coeff(out2, 0, SlotKind::TetaEta) == 0);
  CHECK(coeff(out2, 1, SlotKind::IPTetaEta) == 1);
}

TEST_CASE("zero vector is fixed") {
  const SlotVector v = blank_slots(6, {SpaceTerm::sphere(3), SpaceTerm::sphere(5)});
  const Normalized n = normalize(v);
  CHECK(n.vector == v);
  CHECK(n.trace.empty());
  CHECK(cofiber(n.vector) == Wedge({SpaceTerm::sphere(3), SpaceTerm::sphere(5), SpaceTerm::sphere(7)}));
}

TEST_CASE("talpha absorbs alpha") {
  SlotVector v = blank_slots(8, {SpaceTerm::sphere(5), P(3, 1, 5)});
  set(v, 0, SlotKind::Alpha1, 1);
  set(v, 1, SlotKind::TAlpha1, 1);
  const SlotVector out = normalize(v).vector;
  CHECK(coeff(out, 0, SlotKind::Alpha1) == 0);
  CHECK(coeff(out, 1, SlotKind::TAlpha1) == 1);
  CHECK(cofiber(out) == Wedge({SpaceTerm::sphere(5), SpaceTerm::cone_tilde_alpha1(5, 1)}));
}

TEST_CASE("teta absorbs i4 eta^2 on the same summand") {
  SlotVector v = blank_slots(6, {P(2, 1, 5)});
  set(v, 0, SlotKind::Teta, 1);
  set(v, 0, SlotKind::IEta2, 1);
  const Normalized n = normalize(v);
  CHECK(coeff(n.vector, 0, SlotKind::Teta) == 1);
  CHECK(coeff(n.vector, 0, SlotKind::IEta2) == 0);
  REQUIRE(n.trace.size() == 1);
  CHECK(n.trace[0].rule == "teta-absorb");
}

TEST_CASE("unit normalization for n = 3") {
  SlotVector v = blank_slots(8, {P(3, 2, 6)});
  set(v, 0, SlotKind::IAlpha1, 2);
  const SlotVector out = normalize(v).vector;
  CHECK(coeff(out, 0, SlotKind::IAlpha1) == 1);
  CHECK(cofiber(out) == Wedge({SpaceTerm::cone_i_alpha1(5, 2)}));
}

TEST_CASE("attaching vectors convert to slots and back") {
  const std::vector<SpaceTerm> target{P(2, 1, 5), SpaceTerm::sphere(3)};
  AttachingVector a{6, target, {FormalSum(entry_group(6, target[0]), {3}), FormalSum(entry_group(6, target[1]), {6})}};
  const SlotVector v = to_slots(a);
  CHECK(coeff(v, 0, SlotKind::Teta) == 1);
  CHECK(coeff(v, 0, SlotKind::IEta2) == 1);
  CHECK(coeff(v, 1, SlotKind::Eta3) == 1);
  const AttachingVector back = to_attaching(v);
  CHECK(back.entries[0] == a.entries[0]);
  CHECK(back.entries[1] == a.entries[1]);

  AttachingVector bad{6, {SpaceTerm::sphere(3)}, {FormalSum(entry_group(6, SpaceTerm::sphere(3)), {1})}};
  CHECK_THROWS_AS(to_slots(bad), DomainError);
}

TEST_CASE("cofiber requires a normal form") {
  SlotVector v = blank_slots(6, {SpaceTerm::sphere(5), SpaceTerm::sphere(5)});
  set(v, 0, SlotKind::Eta, 1);
  set(v, 1, SlotKind::Eta, 1);
  CHECK_THROWS_AS(cofiber(v), DomainError);
  CHECK(cofiber(normalize(v).vector) == Wedge({SpaceTerm::sphere(5), SpaceTerm::chang_eta(5)}));
}

TEST_CASE("cofibers of each surviving generator") {
  SlotVector teta = blank_slots(6, {P(2, 2, 5)});
  set(teta, 0, SlotKind::Teta, 1);
  CHECK(cofiber(teta) == Wedge({SpaceTerm::cone_tilde_eta(4, 2)}));
  SlotVector eta3 = blank_slots(6, {SpaceTerm::sphere(3)});
  set(eta3, 0, SlotKind::Eta3, 1);
  CHECK(cofiber(eta3) == Wedge({SpaceTerm::cone_eta3(3)}));
  SlotVector ch = blank_slots(6, {SpaceTerm::chang_r(3, 2)});
  set(ch, 0, SlotKind::IPTetaEta, 1);
  CHECK(cofiber(ch) == Wedge({SpaceTerm::cone_chang(4, 2)}));
}

TEST_CASE("replay reproduces a trace") {
  SlotVector v = blank_slots(6, {P(2, 1, 5), P(2, 3, 5), SpaceTerm::sphere(5), SpaceTerm::sphere(3)});
  for (auto& s : v.slots) s.coeff = 1;
  const Normalized n = normalize(v);
  CHECK(replay(v, n.trace, rule_set(2)) == n.vector);
  CHECK(n.vector.nonzero() == 1);
  CHECK(survivor(n.vector) == dominant_survivor(v));
}

TEST_CASE("orbit oracle") {
  SlotVector v = blank_slots(6, {P(2, 1, 5), SpaceTerm::sphere(5)});
  set(v, 0, SlotKind::Teta, 1);
  set(v, 1, SlotKind::Eta, 1);
  const Normalized n = normalize(v);
  CHECK(orbit_equivalent(v, v, 0) == OrbitResult::Equivalent);
  CHECK(orbit_equivalent(v, n.vector, static_cast<int>(n.trace.size())) == OrbitResult::Equivalent);

  SlotVector only_eta = blank_slots(6, {P(2, 1, 5), SpaceTerm::sphere(5)});
  set(only_eta, 1, SlotKind::Eta, 1);
  CHECK(orbit_equivalent(n.vector, only_eta, 6) != OrbitResult::Equivalent);
  CHECK(orbit_equivalent(v, blank_slots(6, {SpaceTerm::sphere(5)}), 3) == OrbitResult::NotEquivalent);
}

TEST_CASE("confluence on a mixed vector") {
  SlotVector v = blank_slots(6, {P(2, 2, 4), SpaceTerm::chang_r(3, 2), SpaceTerm::sphere(3), P(2, 3, 5)});
  for (auto& s : v.slots) s.coeff = 1;
  const ConfluenceReport rep = check_confluence(v);
  CHECK(rep.confluent);
  CHECK(rep.fixpoints == 1);
}
