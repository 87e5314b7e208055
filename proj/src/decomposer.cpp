#include "suspsplit/decomposer.hpp"

#include <algorithm>
#include <set>

#include "suspsplit/errors.hpp"

namespace suspsplit {

namespace {

[[noreturn]] void inconsistent(const std::string& why) { throw DomainError(ErrorKind::InconsistentProfile, why); }

std::vector<int> exponents_of(const FinAbGroup& T, int p) {
  std::vector<int> out;
  for (const auto& q : T.torsion())
    if (q.p() == p) out.push_back(q.r());
  return out;
}

FinAbGroup odd_part(const FinAbGroup& T) {
  const FinAbGroup rest = without_prime(T, 2);
  return FinAbGroup(0, {rest.torsion().begin(), rest.torsion().end()});
}

void add_moore(Wedge& w, const FinAbGroup& g, int m) {
  for (const auto& t : moore_terms(g, m)) w.add(t);
}

bool has_summand(const FinAbGroup& g, int p, int r) { return g.count(PrimePower(p, r)) > 0; }

void require_range(const std::vector<int>& v, std::size_t size, int modulus, const char* name) {
  if (v.size() != size)
    throw DomainError(ErrorKind::InvalidVector, std::string("coefficient list ") + name + " needs " +
                                                     std::to_string(size) + " entries, got " +
                                                     std::to_string(v.size()));
  for (int c : v)
    if (c < 0 || c >= modulus)
      throw DomainError(ErrorKind::InvalidVector,
                        std::string("coefficient in ") + name + " must lie in 0.." + std::to_string(modulus - 1));
}

void validate(const ManifoldInput& in) {
  if (in.n < 2 || in.n > 5) throw DomainError(ErrorKind::RangeExceeded, "n must lie in 2..5");
  if (in.l < 0 || in.d < 0) inconsistent("l and d must be non-negative");
  if (in.T.free_rank() != 0) inconsistent("T must be a torsion group");
  if (in.n >= 3 && !in.localize)
    throw DomainError(ErrorKind::NotLocalized, "results for n >= 3 hold only after localization away from 2");
}

}  // namespace

// ---------------------------------------------------------------- Sq^2 reduction

SectionData reduce_phi(const BitMatrix& A, const BitMatrix& B, const std::vector<int>& exponents) {
  const std::size_t l = A.size();
  const std::size_t t2 = exponents.size();
  if (B.size() != l) throw DomainError(ErrorKind::ShapeMismatch, "B must have one row per row of A");
  for (const auto& row : A)
    if (row.size() != l) throw DomainError(ErrorKind::ShapeMismatch, "A must be square");
  for (const auto& row : B)
    if (row.size() != t2) throw DomainError(ErrorKind::ShapeMismatch, "B needs one column per 2-primary summand");

  std::vector<std::vector<int>> M(l);
  for (std::size_t i = 0; i < l; ++i) {
    M[i] = A[i];
    M[i].insert(M[i].end(), B[i].begin(), B[i].end());
    for (int& x : M[i]) {
      if (x != 0 && x != 1) throw DomainError(ErrorKind::InvalidVector, "Sq^2 matrices have entries 0 or 1");
    }
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < l && rank < l; ++col) {
    std::size_t piv = rank;
    while (piv < l && M[piv][col] == 0) ++piv;
    if (piv == l) continue;
    std::swap(M[piv], M[rank]);
    for (std::size_t i = 0; i < l; ++i)
      if (i != rank && M[i][col])
        for (std::size_t j = 0; j < M[i].size(); ++j) M[i][j] ^= M[rank][j];
    ++rank;
  }

  // Columns of B restricted to rows without an A pivot, larger exponents first.
  std::vector<std::size_t> order(t2);
  for (std::size_t j = 0; j < t2; ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return exponents[a] > exponents[b]; });
  std::vector<std::vector<int>> basis;  // each reduced so its leading 1 is unique
  std::vector<std::size_t> lead;
  SectionData out;
  out.c1 = static_cast<int>(rank);
  for (std::size_t j : order) {
    std::vector<int> v;
    for (std::size_t i = rank; i < l; ++i) v.push_back(M[i][l + j]);
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (v[lead[b]])
        for (std::size_t k = 0; k < v.size(); ++k) v[k] ^= basis[b][k];
    auto it = std::find(v.begin(), v.end(), 1);
    if (it == v.end()) continue;
    lead.push_back(static_cast<std::size_t>(it - v.begin()));
    basis.push_back(v);
    out.chosen.push_back(static_cast<int>(j));
  }
  std::sort(out.chosen.begin(), out.chosen.end());
  out.c2 = static_cast<int>(out.chosen.size());
  return out;
}

SectionData section_data(const ManifoldInput& in) {
  const auto exps = exponents_of(in.T, 2);
  SectionData sd;
  if (const auto* m = std::get_if<Sq2Matrices>(&in.sq2)) {
    if (static_cast<int>(m->A.size()) != in.l) throw DomainError(ErrorKind::ShapeMismatch, "A must be l x l");
    sd = reduce_phi(m->A, m->B, exps);
  } else if (const auto* s = std::get_if<SectionData>(&in.sq2)) {
    sd = *s;
    std::sort(sd.chosen.begin(), sd.chosen.end());
  }
  const int t2 = static_cast<int>(exps.size());
  if (sd.c1 < 0 || sd.c2 < 0 || sd.c1 + sd.c2 > in.l) inconsistent("need 0 <= c1 + c2 <= l");
  if (sd.c2 > t2) inconsistent("c2 exceeds the number of 2-primary summands");
  if (static_cast<int>(sd.chosen.size()) != sd.c2) inconsistent("chosen must list exactly c2 summands");
  for (std::size_t i = 0; i < sd.chosen.size(); ++i) {
    if (sd.chosen[i] < 0 || sd.chosen[i] >= t2) inconsistent("chosen index out of range");
    if (i && sd.chosen[i] == sd.chosen[i - 1]) inconsistent("chosen indices repeat");
  }
  return sd;
}

namespace {

struct Pieces {
  int n, l, d, c1, c2;
  FinAbGroup T;
  FinAbGroup Tc2;                 // T with the chosen summands removed
  std::vector<int> chosen_r;      // exponents of the chosen summands
  std::vector<int> unchosen_r;

  explicit Pieces(const ManifoldInput& in) : n(in.n), l(in.l), d(in.d), T(in.T) {
    const SectionData sd = section_data(in);
    c1 = sd.c1;
    c2 = sd.c2;
    const auto exps = exponents_of(T, 2);
    std::vector<PrimePower> drop;
    for (std::size_t j = 0; j < exps.size(); ++j) {
      const bool chosen = std::binary_search(sd.chosen.begin(), sd.chosen.end(), static_cast<int>(j));
      (chosen ? chosen_r : unchosen_r).push_back(exps[j]);
      if (chosen) drop.emplace_back(2, exps[j]);
    }
    Tc2 = drop_summands(T, drop);
  }
};

}  // namespace

Wedge homology_section(const ManifoldInput& in) {
  const Pieces P(in);
  const int n = in.n;
  Wedge w;
  w.add_copies(SpaceTerm::sphere(n + 1), P.d);
  add_moore(w, P.T, n + 2);
  w.add_copies(SpaceTerm::sphere(n), P.l - P.c1);
  w.add_copies(SpaceTerm::sphere(n + 2), P.l - P.c1 - P.c2);
  w.add_copies(SpaceTerm::chang_eta(n), P.c1);
  add_moore(w, P.Tc2, n + 1);
  for (int r : P.chosen_r) w.add(SpaceTerm::chang_r(n, r));
  return n == 2 ? suspend(w) : w;
}

// ---------------------------------------------------------------- decision trees

namespace {

DecompositionResult decide_n2(const ManifoldInput& in, const OperationProfile& prof) {
  const Pieces P(in);
  const int s3 = P.l - P.c1;
  const int s5 = P.l - P.c1 - P.c2;

  // Every n = 2 clause shares these summands; each clause may swap one out.
  struct Parts {
    FinAbGroup p5, p4;
    std::vector<int> chang;
    int s3, s5;
  };
  auto assemble = [&](const Parts& parts) {
    Wedge w;
    w.add_copies(SpaceTerm::sphere(4), P.d);
    w.add_copies(SpaceTerm::chang_eta(3), P.c1);
    add_moore(w, parts.p5, 5);
    add_moore(w, parts.p4, 4);
    for (int r : parts.chang) w.add(SpaceTerm::chang_r(3, r));
    w.add_copies(SpaceTerm::sphere(3), parts.s3);
    w.add_copies(SpaceTerm::sphere(5), parts.s5);
    return w;
  };
  const Parts base{P.T, P.Tc2, P.chosen_r, s3, s5};
  auto need_two = [&](int r, const char* what) {
    if (r < 1 || !has_summand(P.T, 2, r))
      inconsistent(std::string(what) + " names Z/2^" + std::to_string(r) + ", which is not a summand of T");
  };

  DecompositionResult res;
  if (!prof.w2_nonzero) {
    switch (prof.theta) {
      case ThetaCase::Trivial: {
        res.clause = "1(a)";
        if (s3 == 0) {
          if (prof.tertiary.value_or(false)) inconsistent("eta^3 needs a free S^3 summand (l = c1 forces epsilon = 0)");
          res.wedge = assemble(base);
          res.wedge.add(SpaceTerm::sphere(7));
          return res;
        }
        Parts p = base;
        p.s3 = s3 - 1;
        Wedge trivial = assemble(p);
        trivial.add(SpaceTerm::sphere(3));
        trivial.add(SpaceTerm::sphere(7));
        Wedge cone = assemble(p);
        cone.add(SpaceTerm::cone_eta3(3));
        if (!prof.tertiary.has_value()) {
          res.wedge = trivial;
          res.alternatives.push_back({cone, "the tertiary operation is nontrivial on H^2(M;Z/2)"});
        } else {
          res.wedge = *prof.tertiary ? cone : trivial;
        }
        return res;
      }
      case ThetaCase::NoBocksteinLink: {
        res.clause = "1(b)";
        const int r = prof.theta_r;
        need_two(r, "theta case 1(b)");
        Parts p = base;
        p.p5 = drop_summand(P.T, PrimePower(2, r));
        res.wedge = assemble(p);
        res.wedge.add(SpaceTerm::cone_2r_eta2(4, r));
        return res;
      }
      case ThetaCase::BocksteinImage: {
        res.clause = "1(c)";
        const int r = prof.theta_r;
        need_two(r, "theta case 1(c)");
        std::vector<Alternative> found;
        if (std::count(P.unchosen_r.begin(), P.unchosen_r.end(), r)) {
          Parts p = base;
          p.p4 = drop_summand(P.Tc2, PrimePower(2, r));
          Wedge w = assemble(p);
          w.add(SpaceTerm::cone_tilde_eta_eta(4, r));
          found.push_back({w, "teta_" + std::to_string(r) + "*eta is carried by P^4(Z/" + std::to_string(1 << r) + ")"});
        }
        if (std::count(P.chosen_r.begin(), P.chosen_r.end(), r)) {
          Parts p = base;
          p.chang.erase(std::find(p.chang.begin(), p.chang.end(), r));
          Wedge w = assemble(p);
          w.add(SpaceTerm::cone_chang(4, r));
          found.push_back({w, "teta_" + std::to_string(r) + "*eta is carried by a Chang summand C_{" + std::to_string(r) + "}^5"});
        }
        if (found.empty()) inconsistent("no P^4 or Chang summand carries Z/2^" + std::to_string(r));
        res.wedge = found.front().wedge;
        for (std::size_t i = 1; i < found.size(); ++i) res.alternatives.push_back(found[i]);
        return res;
      }
    }
  }
  if (prof.sq2h5 == Sq2H5Case::NoBocksteinImage) {
    res.clause = "2(a)";
    if (s5 < 1) inconsistent("Sq^2 on H^5 needs a free S^5 summand (l - c1 - c2 >= 1)");
    Parts p = base;
    p.s5 = s5 - 1;
    res.wedge = assemble(p);
    res.wedge.add(SpaceTerm::chang_eta(5));
    return res;
  }
  res.clause = "2(b)";
  const int r = prof.sq2h5_r;
  need_two(r, "Sq^2 case 2(b)");
  Parts p = base;
  p.p5 = drop_summand(P.T, PrimePower(2, r));
  res.wedge = assemble(p);
  res.wedge.add(SpaceTerm::cone_tilde_eta(4, r));
  return res;
}

DecompositionResult decide_odd(const ManifoldInput& in, const OperationProfile& prof) {
  const int n = in.n;
  const FinAbGroup T = odd_part(in.T);
  FinAbGroup low = T;   // coefficients of P^{n+2}
  FinAbGroup high = T;  // coefficients of P^{n+3}
  int spheres = in.d;
  DecompositionResult res;
  res.localized = true;
  std::optional<SpaceTerm> cone;

  auto need_three = [&](int r) {
    if (r < 1 || !has_summand(T, 3, r))
      inconsistent("Z/3^" + std::to_string(r) + " is not a summand of T");
  };
  const P1Case c = n == 5 ? P1Case::Trivial : prof.p1;
  switch (c) {
    case P1Case::Trivial: res.clause = n == 5 ? "unconditional" : "1"; break;
    case P1Case::A:
      if (n != 3) inconsistent("case a exists only for n = 3");
      if (in.d < 1) inconsistent("case a needs d >= 1");
      res.clause = "2(a)";
      --spheres;
      cone = SpaceTerm::cone_alpha1(5);
      break;
    case P1Case::B:
      need_three(prof.p1_r);
      res.clause = n == 3 ? "2(b)" : "nontrivial";
      // n = 4 puts the cone on the upper Moore space P^7.
      (n == 3 ? low : high) = drop_summand(T, PrimePower(3, prof.p1_r));
      cone = SpaceTerm::cone_tilde_alpha1(n == 3 ? 5 : 7, prof.p1_r);
      break;
    case P1Case::C:
      if (n != 3) inconsistent("case c exists only for n = 3");
      need_three(prof.p1_r);
      res.clause = "2(c)";
      high = drop_summand(T, PrimePower(3, prof.p1_r));
      cone = SpaceTerm::cone_i_alpha1(5, prof.p1_r);
      break;
  }

  Wedge w;
  for (int i = 0; i < in.l; ++i) {
    w.add(SpaceTerm::sphere(n + 1));
    w.add(SpaceTerm::sphere(n + 3));
  }
  w.add_copies(SpaceTerm::sphere(n + 2), spheres);
  add_moore(w, low, n + 2);
  add_moore(w, high, n + 3);
  if (cone)
    w.add(*cone);
  else
    w.add(SpaceTerm::sphere(2 * n + 3));
  res.wedge = w;
  return res;
}

}  // namespace

std::vector<Wedge> DecompositionResult::candidates() const {
  std::vector<Wedge> out{wedge};
  for (const auto& a : alternatives) out.push_back(a.wedge);
  return out;
}

DecompositionResult localize_result(const DecompositionResult& r) {
  DecompositionResult out;
  out.clause = r.clause;
  out.localized = true;
  out.wedge = localize_away_from_2(r.wedge);
  std::set<Wedge> seen{out.wedge};
  for (const auto& a : r.alternatives) {
    Wedge w = localize_away_from_2(a.wedge);
    if (seen.insert(w).second) out.alternatives.push_back({w, a.condition});
  }
  return out;
}

DecompositionResult decide(const ManifoldInput& in) {
  validate(in);
  DecompositionResult res;
  if (std::holds_alternative<AttachingCoeffs>(in.top)) {
    if (in.n >= 4) throw DomainError(ErrorKind::UnsupportedPair, "attaching mode is available for n = 2 and n = 3");
    const Normalized nv = normalize(attaching_vector(in));
    res.wedge = fixed_part(in);
    res.wedge.add(cofiber(nv.vector));
    res.clause = "attach";
    res.localized = in.n >= 3;
  } else {
    const auto& prof = std::get<OperationProfile>(in.top);
    res = in.n == 2 ? decide_n2(in, prof) : decide_odd(in, prof);
  }
  if (in.n == 2 && in.localize) return localize_result(res);
  return res;
}

// ---------------------------------------------------------------- attaching mode

SlotVector attaching_vector(const ManifoldInput& in) {
  const auto* co = std::get_if<AttachingCoeffs>(&in.top);
  if (!co) throw DomainError(ErrorKind::InvalidVector, "input carries an operation profile, not coefficients");
  std::vector<SpaceTerm> target;
  std::vector<int> values;
  if (in.n == 2) {
    const Pieces P(in);
    const auto exps = exponents_of(in.T, 2);
    const std::size_t t2 = exps.size();
    require_range(co->x, t2, 2, "x");
    require_range(co->eps, t2, 2, "eps");
    require_range(co->y, static_cast<std::size_t>(P.l - P.c1), 2, "y");
    require_range(co->z, static_cast<std::size_t>(P.l - P.c1 - P.c2), 2, "z");
    require_range(co->s, P.unchosen_r.size(), 2, "s");
    require_range(co->t, P.chosen_r.size(), 2, "t");
    for (std::size_t i = 0; i < t2; ++i) {
      target.push_back(SpaceTerm::moore(PrimePower(2, exps[i]), 5));
      values.push_back(co->x[i]);
      values.push_back(co->eps[i]);
    }
    for (int y : co->y) target.push_back(SpaceTerm::sphere(3)), values.push_back(y);
    for (int z : co->z) target.push_back(SpaceTerm::sphere(5)), values.push_back(z);
    for (std::size_t j = 0; j < P.unchosen_r.size(); ++j) {
      target.push_back(SpaceTerm::moore(PrimePower(2, P.unchosen_r[j]), 4));
      values.push_back(co->s[j]);
    }
    for (std::size_t j = 0; j < P.chosen_r.size(); ++j) {
      target.push_back(SpaceTerm::chang_r(3, P.chosen_r[j]));
      values.push_back(co->t[j]);
    }
  } else if (in.n == 3) {
    const auto exps = exponents_of(in.T, 3);
    require_range(co->a, static_cast<std::size_t>(in.d), 3, "a");
    require_range(co->b, exps.size(), 3, "b");
    require_range(co->c, exps.size(), 3, "c");
    for (int a : co->a) target.push_back(SpaceTerm::sphere(5)), values.push_back(a);
    for (std::size_t j = 0; j < exps.size(); ++j) {
      target.push_back(SpaceTerm::moore(PrimePower(3, exps[j]), 5));
      values.push_back(co->b[j]);
    }
    for (std::size_t j = 0; j < exps.size(); ++j) {
      target.push_back(SpaceTerm::moore(PrimePower(3, exps[j]), 6));
      values.push_back(co->c[j]);
    }
  } else {
    throw DomainError(ErrorKind::UnsupportedPair, "attaching mode is available for n = 2 and n = 3");
  }
  SlotVector v = blank_slots(in.n == 2 ? 6 : 8, target);
  if (v.slots.size() != values.size()) throw DomainError(ErrorKind::InvalidVector, "slot layout mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) v.slots[i].coeff = values[i];
  return v;
}

Wedge fixed_part(const ManifoldInput& in) {
  Wedge w;
  if (in.n == 2) {
    const Pieces P(in);
    w.add_copies(SpaceTerm::sphere(4), P.d);
    w.add_copies(SpaceTerm::chang_eta(3), P.c1);
    const FinAbGroup odd = odd_part(in.T);
    add_moore(w, odd, 5);
    add_moore(w, odd, 4);
    return w;
  }
  for (int i = 0; i < in.l; ++i) {
    w.add(SpaceTerm::sphere(in.n + 1));
    w.add(SpaceTerm::sphere(in.n + 3));
  }
  const FinAbGroup rest = without_prime(odd_part(in.T), 3);
  add_moore(w, rest, in.n + 2);
  add_moore(w, rest, in.n + 3);
  return w;
}

OperationProfile profile_from_vector(const SlotVector& v) {
  const auto s = survivor(normalize(v).vector);
  OperationProfile p;
  if (v.m == 8) {
    if (!s) return p;
    p.p1 = s->kind == SlotKind::Alpha1 ? P1Case::A : s->kind == SlotKind::TAlpha1 ? P1Case::B : P1Case::C;
    p.p1_r = s->kind == SlotKind::Alpha1 ? 0 : s->r;
    return p;
  }
  p.tertiary = false;
  if (!s) return p;
  switch (s->kind) {
    case SlotKind::Eta3: p.tertiary = true; break;
    case SlotKind::IEta2:
      p.theta = ThetaCase::NoBocksteinLink;
      p.theta_r = s->r;
      p.tertiary.reset();
      break;
    case SlotKind::TetaEta:
    case SlotKind::IPTetaEta:
      p.theta = ThetaCase::BocksteinImage;
      p.theta_r = s->r;
      p.tertiary.reset();
      break;
    case SlotKind::Eta:
      p.w2_nonzero = true;
      p.tertiary.reset();
      break;
    case SlotKind::Teta:
      p.w2_nonzero = true;
      p.sq2h5 = Sq2H5Case::BocksteinImage;
      p.sq2h5_r = s->r;
      p.tertiary.reset();
      break;
    default: break;
  }
  return p;
}

GradedGroup expected_homology(const ManifoldInput& in, bool localized) {
  const FinAbGroup T = localized ? odd_part(in.T) : in.T;
  const int n = in.n;
  GradedGroup h;
  accumulate(h, n + 1, direct_sum(FinAbGroup::free(in.l), T));
  accumulate(h, n + 2, direct_sum(FinAbGroup::free(in.d), T));
  accumulate(h, n + 3, FinAbGroup::free(in.l));
  accumulate(h, 2 * n + 3, FinAbGroup::free(1));
  return h;
}

std::string to_string(const OperationProfile& p, int n) {
  auto r = [](int v) { return "(r=" + std::to_string(v) + ")"; };
  if (n == 2) {
    if (p.w2_nonzero)
      return p.sq2h5 == Sq2H5Case::NoBocksteinImage ? "w2!=0, Sq2 on H^5 outside Bockstein images"
                                                    : "w2!=0, Sq2 class in Bockstein image " + r(p.sq2h5_r);
    switch (p.theta) {
      case ThetaCase::Trivial:
        return std::string("w2=0, Theta trivial, tertiary ") +
               (p.tertiary ? (*p.tertiary ? "nontrivial" : "trivial") : "unknown");
      case ThetaCase::NoBocksteinLink: return "w2=0, Theta nontrivial without Bockstein link " + r(p.theta_r);
      case ThetaCase::BocksteinImage: return "w2=0, Theta nontrivial on a Bockstein image " + r(p.theta_r);
    }
  }
  switch (p.p1) {
    case P1Case::Trivial: return "P1 trivial";
    case P1Case::A: return "P1 case a";
    case P1Case::B: return (n == 4 ? "P1 nontrivial " : "P1 case b ") + r(p.p1_r);
    case P1Case::C: return "P1 case c " + r(p.p1_r);
  }
  return "?";
}

}  // namespace suspsplit
