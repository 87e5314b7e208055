#include <cstdlib>

#include "doctest.h"
#include "suspsplit/errors.hpp"
#include "suspsplit/oracle.hpp"

using namespace suspsplit;

namespace {

EnumerationBounds small(int n) {
  EnumerationBounds b;
  b.max_l = 1;
  b.max_d = 1;
  b.max_t2 = 1;
  b.max_r = 2;
  b.n_min = b.n_max = n;
  b.spectators = false;
  return b;
}

}  // namespace

TEST_CASE("enumeration counts") {
  // Per shape 2^(3 t2 + 2 l - 2 c1 - c2): (1 + 4 + 1) for t2 = 0 and
  // (8 + 32 + 16 + 8) for each of r = 1, 2, doubled over d.
  CHECK(count_inputs(small(2)) == 268);
  CHECK(enumerate_inputs(small(2)).size() == 268);

  EnumerationBounds zero = small(2);
  zero.max_l = zero.max_d = zero.max_t2 = 0;
  const auto only = enumerate_inputs(zero);
  REQUIRE(only.size() == 1);
  CHECK(only[0].l == 0);
  CHECK(only[0].T.is_zero());

  for (const auto& in : enumerate_inputs(small(5))) CHECK(std::holds_alternative<OperationProfile>(in.top));
}

TEST_CASE("enumeration is deterministic") {
  const auto a = enumerate_inputs(small(3));
  const auto b = enumerate_inputs(small(3));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::get<AttachingCoeffs>(a[i].top) == std::get<AttachingCoeffs>(b[i].top));
}

TEST_CASE("the cap is enforced") {
  EnumerationBounds b = small(2);
  b.cap = 10;
  try {
    for_each_input(b, [](const ManifoldInput&) {});
    FAIL("expected CapExceeded");
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
  setenv("SUSPSPLIT_CAP", "77", 1);
  CHECK(cap_from_env() == 77);
  setenv("SUSPSPLIT_CAP", "many", 1);
  CHECK(cap_from_env() == kDefaultCap);
  unsetenv("SUSPSPLIT_CAP");
}

TEST_CASE("homology check catches a missing sphere") {
  ManifoldInput in;
  in.n = 2;
  in.l = 1;
  in.d = 1;
  OperationProfile p;
  p.tertiary = true;
  in.top = p;
  const Wedge good = decide(in).wedge;
  CHECK(check_homology(in, good, false).passed);
  Wedge bad = good;
  bad.remove(SpaceTerm::sphere(5));
  const Report r = check_homology(in, bad, false);
  CHECK_FALSE(r.passed);
  CHECK(r.witness.find("expected") != std::string::npos);
}

TEST_CASE("rule soundness and its mutation test") {
  CHECK(check_rule_soundness(2, small(2)).passed);
  CHECK(check_rule_soundness(3, small(3)).passed);
  auto rules = rule_set(2);
  for (auto& r : rules)
    if (r.id == "tetaeta-tetaeta") r.cond = ExponentCondition::PivotGT;
  EnumerationBounds b = small(2);
  b.max_t2 = 2;
  b.max_r = 3;
  CHECK_FALSE(check_rule_soundness(2, b, rules).passed);
}

TEST_CASE("cross validation") {
  ManifoldInput in;
  in.n = 2;
  in.T = FinAbGroup(0, {PrimePower(2, 1)});
  AttachingCoeffs c;
  c.x = {1};
  c.eps = {0};
  c.s = {0};
  in.top = c;
  CHECK(decide(in).wedge.count(SpaceTerm::cone_tilde_eta(4, 1)) == 1);
  CHECK(cross_validate(in).passed);

  ManifoldInput ops = in;
  ops.top = OperationProfile{};
  CHECK_FALSE(cross_validate(ops).passed);
}

TEST_CASE("small sweeps pass") {
  EnumerationBounds b = small(2);
  b.n_max = 5;
  b.spectators = true;
  CHECK(check_homology_sweep(b).passed);
  CHECK(check_mode_agreement(b).passed);
  CHECK(check_confluence_sweep(b).passed);
  CHECK(check_localization(b).passed);
  const Report phi = check_reduce_phi(2, 2, 2);
  CHECK(phi.passed);
  CHECK(phi.cases > 0);
}

TEST_CASE("profiles per shape") {
  ManifoldInput shape;
  shape.n = 3;
  shape.d = 1;
  shape.T = FinAbGroup(0, {PrimePower(3, 1), PrimePower(3, 2)});
  // trivial, a, then b and c for each exponent
  CHECK(enumerate_profiles(shape).size() == 6);
  shape.n = 5;
  CHECK(enumerate_profiles(shape).size() == 1);
}
