#include "doctest.h"
#include "suspsplit/decomposer.hpp"
#include "suspsplit/errors.hpp"

using namespace suspsplit;

namespace {

FinAbGroup tors(std::vector<PrimePower> parts) { return FinAbGroup(0, std::move(parts)); }

ManifoldInput ops(int n, int l, int d, FinAbGroup T, OperationProfile p = {}, bool localize = false) {
  ManifoldInput in;
  in.n = n;
  in.l = l;
  in.d = d;
  in.T = std::move(T);
  in.top = p;
  in.localize = localize;
  return in;
}

ErrorKind kind_of(const ManifoldInput& in) {
  try {
    decide(in);
  } catch (const DomainError& e) {
    return e.kind();
  }
  FAIL("decide did not throw");
  return ErrorKind::InvalidVector;
}

}  // namespace

TEST_CASE("reduce_phi") {
  CHECK(reduce_phi({{0}}, {{0}}, {1}) == SectionData{0, 0, {}});
  CHECK(reduce_phi({{1}}, {{1}}, {1}) == SectionData{1, 0, {}});
  CHECK(reduce_phi({{0}}, {{1, 1}}, {1, 2}) == SectionData{0, 1, {1}});
  CHECK(reduce_phi({}, {}, {}) == SectionData{0, 0, {}});
  // Rank two over Z/2 despite three nonzero entries.
  CHECK(reduce_phi({{1, 1}, {1, 0}}, {{0}, {0}}, {3}).c1 == 2);
  CHECK(reduce_phi({{1, 1}, {1, 1}}, {{1}, {0}}, {3}) == SectionData{1, 1, {0}});
  CHECK_THROWS_AS(reduce_phi({{1, 0}}, {{1}}, {1}), DomainError);
  CHECK_THROWS_AS(reduce_phi({{1}}, {{1, 0}}, {1}), DomainError);
}

TEST_CASE("section data validation") {
  ManifoldInput in = ops(2, 1, 0, tors({PrimePower(2, 1)}));
  in.sq2 = SectionData{1, 1, {0}};
  CHECK_THROWS_AS(section_data(in), DomainError);
  in.sq2 = SectionData{0, 1, {3}};
  CHECK_THROWS_AS(section_data(in), DomainError);
  in.sq2 = Sq2Matrices{{{1}}, {{1}}};
  CHECK(section_data(in) == SectionData{1, 0, {}});
}

TEST_CASE("homology section") {
  ManifoldInput in = ops(3, 2, 1, tors({PrimePower(3, 1)}));
  CHECK(to_string(homology_section(in)) == "S^3 + S^3 + S^4 + S^5 + S^5 + P^4(Z/3) + P^5(Z/3)");
  ManifoldInput e = ops(2, 1, 0, FinAbGroup{});
  e.sq2 = Sq2Matrices{{{1}}, {{}}};
  CHECK(homology_section(e) == Wedge({SpaceTerm::chang_eta(3)}));
  CHECK(homology_section(ops(4, 0, 0, FinAbGroup{})).is_point());
}

TEST_CASE("n = 5 is unconditional") {
  const auto res = decide(ops(5, 1, 2, tors({PrimePower(3, 1), PrimePower(2, 1)}), {}, true));
  CHECK(to_string(res.wedge) == "S^6 + S^7 + S^7 + S^8 + S^13 + P^7(Z/3) + P^8(Z/3)");
  CHECK(res.localized);
  CHECK(res.alternatives.empty());
}

TEST_CASE("n >= 3 requires localization") {
  CHECK(kind_of(ops(3, 0, 0, FinAbGroup{})) == ErrorKind::NotLocalized);
  CHECK(kind_of(ops(5, 1, 0, FinAbGroup{})) == ErrorKind::NotLocalized);
}

TEST_CASE("n = 2 case 1(a)") {
  OperationProfile p;
  p.tertiary = false;
  const auto res = decide(ops(2, 1, 1, FinAbGroup{}, p));
  CHECK(res.wedge == parse_wedge("S^4 + S^5 + S^3 + S^7"));
  CHECK(res.clause == "1(a)");

  p.tertiary = true;
  CHECK(decide(ops(2, 1, 1, FinAbGroup{}, p)).wedge == parse_wedge("S^4 + S^5 + (S^3 u_{eta^3} e^7)"));

  p.tertiary.reset();
  const auto amb = decide(ops(2, 1, 1, FinAbGroup{}, p));
  REQUIRE(amb.alternatives.size() == 1);
  CHECK(amb.wedge == parse_wedge("S^4 + S^5 + S^3 + S^7"));
  CHECK(amb.alternatives[0].wedge == parse_wedge("S^4 + S^5 + (S^3 u_{eta^3} e^7)"));
}

TEST_CASE("n = 2 case 1(a) with l = c1 forces epsilon = 0") {
  ManifoldInput in = ops(2, 1, 0, FinAbGroup{});
  in.sq2 = SectionData{1, 0, {}};
  const auto res = decide(in);
  CHECK(res.alternatives.empty());
  CHECK(res.wedge == parse_wedge("C_eta^5 + S^7"));
  OperationProfile p;
  p.tertiary = true;
  in.top = p;
  CHECK(kind_of(in) == ErrorKind::InconsistentProfile);
}

TEST_CASE("n = 2 case 1(b)") {
  OperationProfile p;
  p.theta = ThetaCase::NoBocksteinLink;
  p.theta_r = 2;
  const auto res = decide(ops(2, 0, 0, tors({PrimePower(2, 1), PrimePower(2, 2)}), p));
  CHECK(res.wedge == Wedge({SpaceTerm::moore(PrimePower(2, 1), 5), SpaceTerm::moore(PrimePower(2, 1), 4),
                            SpaceTerm::moore(PrimePower(2, 2), 4), SpaceTerm::cone_2r_eta2(4, 2)}));
  p.theta_r = 3;
  CHECK(kind_of(ops(2, 0, 0, tors({PrimePower(2, 1)}), p)) == ErrorKind::InconsistentProfile);
}

TEST_CASE("n = 2 case 1(c) offers both candidates") {
  OperationProfile p;
  p.theta = ThetaCase::BocksteinImage;
  p.theta_r = 1;
  ManifoldInput in = ops(2, 1, 0, tors({PrimePower(2, 1), PrimePower(2, 1)}), p);
  in.sq2 = SectionData{0, 1, {1}};
  const auto res = decide(in);
  CHECK(res.clause == "1(c)");
  REQUIRE(res.alternatives.size() == 1);
  CHECK(res.wedge.count(SpaceTerm::cone_tilde_eta_eta(4, 1)) == 1);
  CHECK(res.alternatives[0].wedge.count(SpaceTerm::cone_chang(4, 1)) == 1);
  CHECK(reduced_homology(res.wedge) == reduced_homology(res.alternatives[0].wedge));

  in.localize = true;
  const auto loc = decide(in);
  CHECK(loc.alternatives.empty());
  CHECK(loc.wedge == parse_wedge("S^3 + S^5 + S^7"));
}

TEST_CASE("n = 2 case 2") {
  OperationProfile p;
  p.w2_nonzero = true;
  CHECK(decide(ops(2, 1, 0, FinAbGroup{}, p)).wedge == parse_wedge("S^3 + C_eta^7"));
  p.sq2h5 = Sq2H5Case::BocksteinImage;
  p.sq2h5_r = 1;
  CHECK(decide(ops(2, 0, 0, tors({PrimePower(2, 1)}), p)).wedge ==
        Wedge({SpaceTerm::moore(PrimePower(2, 1), 4), SpaceTerm::cone_tilde_eta(4, 1)}));
  p.sq2h5 = Sq2H5Case::NoBocksteinImage;
  CHECK(kind_of(ops(2, 0, 0, FinAbGroup{}, p)) == ErrorKind::InconsistentProfile);
}

TEST_CASE("n = 3 clauses") {
  OperationProfile p;
  p.p1 = P1Case::B;
  p.p1_r = 1;
  const auto res = decide(ops(3, 0, 1, tors({PrimePower(3, 1), PrimePower(3, 2)}), p, true));
  CHECK(res.wedge.count(SpaceTerm::moore(PrimePower(3, 2), 5)) == 1);
  CHECK(res.wedge.count(SpaceTerm::moore(PrimePower(3, 1), 5)) == 0);
  CHECK(res.wedge.count(SpaceTerm::cone_tilde_alpha1(5, 1)) == 1);
  CHECK(res.wedge.count(SpaceTerm::sphere(5)) == 1);

  p.p1 = P1Case::A;
  CHECK(decide(ops(3, 0, 1, FinAbGroup{}, p, true)).wedge == Wedge({SpaceTerm::cone_alpha1(5)}));
  CHECK(kind_of(ops(3, 0, 0, FinAbGroup{}, p, true)) == ErrorKind::InconsistentProfile);

  p.p1 = P1Case::C;
  p.p1_r = 2;
  CHECK(decide(ops(3, 0, 0, tors({PrimePower(3, 2)}), p, true)).wedge ==
        Wedge({SpaceTerm::moore(PrimePower(3, 2), 5), SpaceTerm::cone_i_alpha1(5, 2)}));
}

TEST_CASE("n = 3 drops the 2-primary torsion") {
  const auto res = decide(ops(3, 1, 0, tors({PrimePower(2, 2), PrimePower(5, 1)}), {}, true));
  CHECK(to_string(res.wedge) == "S^4 + S^6 + S^9 + P^5(Z/5) + P^6(Z/5)");
}

TEST_CASE("n = 4 clauses") {
  OperationProfile p;
  p.p1 = P1Case::B;
  p.p1_r = 1;
  const auto res = decide(ops(4, 0, 0, tors({PrimePower(3, 1)}), p, true));
  CHECK(res.wedge == Wedge({SpaceTerm::moore(PrimePower(3, 1), 6), SpaceTerm::cone_tilde_alpha1(7, 1)}));
  CHECK(decide(ops(4, 1, 1, FinAbGroup{}, {}, true)).wedge == parse_wedge("S^5 + S^6 + S^7 + S^11"));
}

TEST_CASE("attaching mode") {
  ManifoldInput in = ops(2, 0, 0, tors({PrimePower(2, 2)}));
  AttachingCoeffs c;
  c.x = {1};
  c.eps = {0};
  c.s = {1};
  in.top = c;
  const auto res = decide(in);
  CHECK(res.wedge == Wedge({SpaceTerm::moore(PrimePower(2, 2), 4), SpaceTerm::cone_tilde_eta(4, 2)}));
  const auto prof = profile_from_vector(attaching_vector(in));
  CHECK(prof.w2_nonzero);
  CHECK(prof.sq2h5 == Sq2H5Case::BocksteinImage);
  CHECK(prof.sq2h5_r == 2);

  c.s = {};
  in.top = c;
  CHECK(kind_of(in) == ErrorKind::InvalidVector);
  c.s = {2};
  in.top = c;
  CHECK(kind_of(in) == ErrorKind::InvalidVector);
}

TEST_CASE("profiles read from attaching vectors") {
  ManifoldInput zero = ops(2, 1, 0, FinAbGroup{});
  AttachingCoeffs c;
  c.y = {0};
  c.z = {0};
  zero.top = c;
  const auto p = profile_from_vector(attaching_vector(zero));
  CHECK_FALSE(p.w2_nonzero);
  CHECK(p.theta == ThetaCase::Trivial);
  CHECK(p.tertiary == std::optional<bool>(false));

  ManifoldInput odd = ops(3, 0, 0, tors({PrimePower(3, 2)}), {}, true);
  AttachingCoeffs k;
  k.b = {0};
  k.c = {2};
  odd.top = k;
  const auto q = profile_from_vector(attaching_vector(odd));
  CHECK(q.p1 == P1Case::C);
  CHECK(q.p1_r == 2);
  CHECK(decide(odd).wedge == decide(ops(3, 0, 0, tors({PrimePower(3, 2)}), q, true)).wedge);
}

TEST_CASE("no attaching mode for n = 4") {
  ManifoldInput in = ops(4, 0, 0, FinAbGroup{}, {}, true);
  in.top = AttachingCoeffs{};
  CHECK(kind_of(in) == ErrorKind::UnsupportedPair);
}

TEST_CASE("expected homology table") {
  const auto h = expected_homology(ops(2, 1, 2, tors({PrimePower(2, 1), PrimePower(3, 1)})), true);
  CHECK(to_string(h) == to_string(GradedGroup{{3, FinAbGroup(1, {PrimePower(3, 1)})},
                                              {4, FinAbGroup(2, {PrimePower(3, 1)})},
                                              {5, FinAbGroup::free(1)},
                                              {7, FinAbGroup::free(1)}}));
}

TEST_CASE("profile text") {
  OperationProfile p;
  p.p1 = P1Case::B;
  p.p1_r = 2;
  CHECK(to_string(p, 4) == "P1 nontrivial (r=2)");
  CHECK(to_string(OperationProfile{}, 2) == "w2=0, Theta trivial, tertiary unknown");
}
