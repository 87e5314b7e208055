#include "suspsplit/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "suspsplit/errors.hpp"

namespace suspsplit {

std::uint64_t cap_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("SUSPSPLIT_CAP");
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  return (end && *end == '\0') ? static_cast<std::uint64_t>(v) : fallback;
}

namespace {

int working_prime(int n) { return n == 2 ? 2 : 3; }

// Nondecreasing exponent tuples of length t with entries in 1..max_r.
void exponent_tuples(int t, int max_r, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == t) {
    out.push_back(cur);
    return;
  }
  for (int r = cur.empty() ? 1 : cur.back(); r <= max_r; ++r) {
    cur.push_back(r);
    exponent_tuples(t, max_r, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> tuples_up_to(int max_t, int max_r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  for (int t = 0; t <= max_t; ++t) exponent_tuples(t, max_r, cur, out);
  return out;
}

// Size-k subsets of {0..t-1} in lexicographic order.
void subsets(int t, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < t; ++i) {
    cur.push_back(i);
    subsets(t, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// One shape: (n, l, d, T, section data) with an all-trivial profile.
void for_each_shape(const EnumerationBounds& b, const std::function<void(const ManifoldInput&)>& visit) {
  for (int n = std::max(2, b.n_min); n <= std::min(5, b.n_max); ++n) {
    const int p = working_prime(n);
    for (const auto& exps : tuples_up_to(b.max_t2, b.max_r)) {
      for (int spectator = 0; spectator <= (b.spectators ? 1 : 0); ++spectator) {
        std::vector<PrimePower> tors;
        for (int r : exps) tors.emplace_back(p, r);
        if (spectator) {
          if (n == 2) {
            tors.emplace_back(3, 1);
          } else {
            tors.emplace_back(2, 1);
            tors.emplace_back(5, 1);
          }
        }
        const FinAbGroup T(0, tors);
        const int t = static_cast<int>(exps.size());
        for (int l = 0; l <= b.max_l; ++l) {
          for (int d = 0; d <= b.max_d; ++d) {
            ManifoldInput in;
            in.n = n;
            in.l = l;
            in.d = d;
            in.T = T;
            in.localize = n >= 3;
            if (n != 2) {
              visit(in);
              continue;
            }
            for (int c1 = 0; c1 <= l; ++c1) {
              for (int c2 = 0; c2 <= std::min(t, l - c1); ++c2) {
                std::vector<std::vector<int>> picks;
                std::vector<int> cur;
                subsets(t, c2, 0, cur, picks);
                for (const auto& chosen : picks) {
                  in.sq2 = SectionData{c1, c2, chosen};
                  visit(in);
                }
              }
            }
          }
        }
      }
    }
  }
}

std::vector<std::size_t> coefficient_lengths(const ManifoldInput& in) {
  const int p = working_prime(in.n);
  std::size_t t = 0;
  for (const auto& q : in.T.torsion())
    if (q.p() == p) ++t;
  if (in.n == 2) {
    const SectionData sd = section_data(in);
    const auto l = static_cast<std::size_t>(in.l);
    return {t, t, l - sd.c1, l - sd.c1 - sd.c2, t - sd.c2, static_cast<std::size_t>(sd.c2)};
  }
  if (in.n == 3) return {static_cast<std::size_t>(in.d), t, t};
  return {};
}

std::uint64_t vectors_per_shape(const ManifoldInput& in) {
  if (in.n >= 4) return 1;
  std::uint64_t total = 1;
  const std::uint64_t mod = in.n == 2 ? 2 : 3;
  for (std::size_t len : coefficient_lengths(in))
    for (std::size_t i = 0; i < len; ++i) total *= mod;
  return total;
}

AttachingCoeffs unpack(const ManifoldInput& in, const std::vector<int>& flat) {
  const auto lens = coefficient_lengths(in);
  AttachingCoeffs co;
  std::vector<std::vector<int>*> dest =
      in.n == 2 ? std::vector<std::vector<int>*>{&co.x, &co.eps, &co.y, &co.z, &co.s, &co.t}
                : std::vector<std::vector<int>*>{&co.a, &co.b, &co.c};
  std::size_t at = 0;
  for (std::size_t k = 0; k < lens.size(); ++k)
    for (std::size_t i = 0; i < lens[k]; ++i) dest[k]->push_back(flat[at++]);
  return co;
}

std::string describe(const ManifoldInput& in) {
  std::ostringstream os;
  os << "n=" << in.n << " l=" << in.l << " d=" << in.d << " T=" << in.T.encode();
  if (const auto* sd = std::get_if<SectionData>(&in.sq2)) {
    os << " c1=" << sd->c1 << " c2=" << sd->c2 << " chosen=[";
    for (std::size_t i = 0; i < sd->chosen.size(); ++i) os << (i ? "," : "") << sd->chosen[i];
    os << "]";
  }
  if (const auto* co = std::get_if<AttachingCoeffs>(&in.top)) {
    os << " coeffs=";
    for (const auto* part : {&co->x, &co->eps, &co->y, &co->z, &co->s, &co->t, &co->a, &co->b, &co->c})
      for (int c : *part) os << c;
  } else {
    os << " profile={" << to_string(std::get<OperationProfile>(in.top), in.n) << "}";
  }
  return os.str();
}

GradedGroup prune(GradedGroup h) {
  std::erase_if(h, [](const auto& kv) { return kv.second.is_zero(); });
  return h;
}

FinAbGroup odd_only(const FinAbGroup& T) {
  std::vector<PrimePower> keep;
  for (const auto& q : T.torsion())
    if (q.p() != 2) keep.push_back(q);
  return FinAbGroup(0, keep);
}

}  // namespace

std::uint64_t count_inputs(const EnumerationBounds& b) {
  std::uint64_t total = 0;
  for_each_shape(b, [&](const ManifoldInput& in) { total += vectors_per_shape(in); });
  return total;
}

void for_each_input(const EnumerationBounds& b, const std::function<void(const ManifoldInput&)>& visit) {
  const std::uint64_t total = count_inputs(b);
  if (total > b.cap)
    throw DomainError(ErrorKind::CapExceeded,
                      std::to_string(total) + " inputs exceed the cap of " + std::to_string(b.cap));
  for_each_shape(b, [&](const ManifoldInput& shape) {
    if (shape.n >= 4) {
      visit(shape);
      return;
    }
    std::size_t width = 0;
    for (std::size_t len : coefficient_lengths(shape)) width += len;
    const int mod = shape.n == 2 ? 2 : 3;
    std::vector<int> flat(width, 0);
    ManifoldInput in = shape;
    while (true) {
      in.top = unpack(shape, flat);
      visit(in);
      std::size_t i = 0;
      while (i < width && ++flat[i] == mod) flat[i++] = 0;
      if (i == width) break;
    }
  });
}

std::vector<ManifoldInput> enumerate_inputs(const EnumerationBounds& b) {
  std::vector<ManifoldInput> out;
  for_each_input(b, [&](const ManifoldInput& in) { out.push_back(in); });
  return out;
}

std::vector<OperationProfile> enumerate_profiles(const ManifoldInput& shape) {
  std::vector<OperationProfile> out;
  const int p = working_prime(shape.n);
  std::set<int> rs;
  for (const auto& q : shape.T.torsion())
    if (q.p() == p) rs.insert(q.r());

  if (shape.n == 2) {
    const SectionData sd = section_data(shape);
    const int s3 = shape.l - sd.c1;
    const int s5 = shape.l - sd.c1 - sd.c2;
    for (std::optional<bool> tert : {std::optional<bool>(false), std::optional<bool>(true), std::optional<bool>()}) {
      if (s3 == 0 && tert.value_or(false)) continue;
      OperationProfile pr;
      pr.tertiary = tert;
      out.push_back(pr);
    }
    for (int r : rs) {
      OperationProfile b1;
      b1.theta = ThetaCase::NoBocksteinLink;
      b1.theta_r = r;
      out.push_back(b1);
      OperationProfile c1 = b1;
      c1.theta = ThetaCase::BocksteinImage;
      out.push_back(c1);
      OperationProfile w;
      w.w2_nonzero = true;
      w.sq2h5 = Sq2H5Case::BocksteinImage;
      w.sq2h5_r = r;
      out.push_back(w);
    }
    if (s5 >= 1) {
      OperationProfile w;
      w.w2_nonzero = true;
      out.push_back(w);
    }
    return out;
  }
  out.emplace_back();
  if (shape.n == 5) return out;
  if (shape.n == 3 && shape.d >= 1) {
    OperationProfile a;
    a.p1 = P1Case::A;
    out.push_back(a);
  }
  for (int r : rs) {
    OperationProfile bcase;
    bcase.p1 = P1Case::B;
    bcase.p1_r = r;
    out.push_back(bcase);
    if (shape.n == 3) {
      OperationProfile ccase = bcase;
      ccase.p1 = P1Case::C;
      out.push_back(ccase);
    }
  }
  return out;
}

// ---------------------------------------------------------------- reports

void Report::fail(const std::string& w) {
  if (passed) witness = w;
  passed = false;
}

void Report::merge(const Report& other) {
  cases += other.cases;
  if (!other.passed) fail(other.witness);
}

std::string to_string(const Report& r) {
  std::string s = (r.passed ? "PASS " : "FAIL ") + r.check + " (" + std::to_string(r.cases) + " cases)";
  if (!r.passed) s += ": " + r.witness;
  return s;
}

Report check_homology(const ManifoldInput& in, const Wedge& w, bool localized) {
  Report rep{"homology", true, 1, {}};
  const FinAbGroup T = localized ? odd_only(in.T) : in.T;
  GradedGroup want;
  accumulate(want, in.n + 1, direct_sum(FinAbGroup::free(in.l), T));
  accumulate(want, in.n + 2, direct_sum(FinAbGroup::free(in.d), T));
  accumulate(want, in.n + 3, FinAbGroup::free(in.l));
  accumulate(want, 2 * in.n + 3, FinAbGroup::free(1));
  const GradedGroup got = prune(reduced_homology(w));
  want = prune(want);
  if (got != want)
    rep.fail(describe(in) + " wedge " + to_string(w) + " has " + to_string(got) + ", expected " + to_string(want));
  return rep;
}

Report check_rule_soundness(int n, const EnumerationBounds& b, const std::vector<RewriteRule>& rules) {
  Report rep{"rule soundness n=" + std::to_string(n), true, 0, {}};
  EnumerationBounds nb = b;
  nb.n_min = nb.n_max = n == 2 ? 2 : 3;
  nb.spectators = false;
  const auto canonical = rule_set(n);
  std::set<std::string> seen;
  // Cofiber homology and survivor per coefficient vector of the current layout.
  struct Seen {
    GradedGroup homology;
    std::optional<Survivor> survivor;
  };
  std::string layout_key;
  std::map<std::vector<int>, Seen> memo;
  auto facts = [&](const SlotVector& x) -> const Seen& {
    std::vector<int> c;
    for (const auto& s : x.slots) c.push_back(s.coeff);
    auto it = memo.find(c);
    if (it == memo.end())
      it = memo.emplace(c, Seen{prune(reduced_homology(cofiber(normalize(x).vector))), dominant_survivor(x)}).first;
    return it->second;
  };
  for_each_input(nb, [&](const ManifoldInput& in) {
    const SlotVector v = attaching_vector(in);
    if (!seen.insert(std::to_string(v.m) + to_string(v)).second) return;
    SlotVector layout = v;
    for (auto& s : layout.slots) s.coeff = 0;
    if (const std::string key = std::to_string(v.m) + to_string(layout); key != layout_key) {
      layout_key = key;
      memo.clear();
    }
    const auto before_h = facts(v).homology;
    const auto before_s = facts(v).survivor;
    for (const auto& rule : rules) {
      for (std::size_t p = 0; p < v.slots.size(); ++p) {
        for (std::size_t q = 0; q < v.slots.size(); ++q) {
          if (!rule_matches(rule, v, p, q)) continue;
          ++rep.cases;
          const SlotVector w = apply_rule(rule, v, p, q);
          const std::string where = "rule " + rule.id + " on " + to_string(v);
          const Seen& after = facts(w);
          if (after.homology != before_h)
            rep.fail(where + " changes cofiber homology");
          else if (orbit_equivalent(v, w, 1, canonical) != OrbitResult::Equivalent)
            rep.fail(where + " is not a single canonical move");
          else if (after.survivor != before_s)
            rep.fail(where + " changes the surviving class");
        }
      }
    }
  });
  return rep;
}

Report check_rule_soundness(int n, const EnumerationBounds& b) { return check_rule_soundness(n, b, rule_set(n)); }

Report cross_validate(const ManifoldInput& in) {
  Report rep{"mode agreement", true, 1, {}};
  if (!std::holds_alternative<AttachingCoeffs>(in.top)) {
    rep.fail(describe(in) + " carries no attaching data");
    return rep;
  }
  try {
    const DecompositionResult att = decide(in);
    ManifoldInput ops = in;
    ops.top = profile_from_vector(attaching_vector(in));
    const DecompositionResult res = decide(ops);
    const auto cands = res.candidates();
    if (std::find(cands.begin(), cands.end(), att.wedge) == cands.end())
      rep.fail(describe(in) + " attach gives " + to_string(att.wedge) + ", operations give " + to_string(res.wedge));
  } catch (const DomainError& e) {
    rep.fail(describe(in) + " raised " + e.what());
  }
  return rep;
}

Report check_confluence_sweep(const EnumerationBounds& b) {
  Report rep{"confluence", true, 0, {}};
  EnumerationBounds nb = b;
  nb.n_min = std::max(nb.n_min, 2);
  nb.n_max = std::min(nb.n_max, 3);
  nb.spectators = false;
  std::map<std::string, ConfluenceExplorer> explorers;
  for_each_input(nb, [&](const ManifoldInput& in) {
    const SlotVector v = attaching_vector(in);
    SlotVector layout = v;
    for (auto& s : layout.slots) s.coeff = 0;
    const std::string key = std::to_string(layout.m) + to_string(layout);
    auto it = explorers.find(key);
    if (it == explorers.end()) it = explorers.emplace(key, ConfluenceExplorer(layout, rule_set(in.n))).first;
    ++rep.cases;
    const ConfluenceReport cr = it->second.check(v);
    if (!cr.confluent) {
      std::string w = to_string(v) + " reaches " + std::to_string(cr.fixpoints) + " fixpoints:";
      for (const auto& x : cr.witnesses) w += " [" + to_string(x) + "]";
      rep.fail(w);
    }
  });
  return rep;
}

Report check_homology_sweep(const EnumerationBounds& b) {
  Report rep{"homology round-trip", true, 0, {}};
  auto run = [&](const ManifoldInput& in) {
    try {
      const DecompositionResult res = decide(in);
      for (const auto& w : res.candidates()) rep.merge(check_homology(in, w, res.localized));
    } catch (const DomainError& e) {
      ++rep.cases;
      rep.fail(describe(in) + " raised " + e.what());
    }
  };
  for_each_shape(b, [&](const ManifoldInput& shape) {
    for (const auto& prof : enumerate_profiles(shape)) {
      ManifoldInput in = shape;
      in.top = prof;
      run(in);
      if (in.n == 2) {
        in.localize = true;
        run(in);
      }
    }
  });
  EnumerationBounds attach = b;
  attach.n_max = std::min(attach.n_max, 3);
  if (attach.n_min <= attach.n_max) for_each_input(attach, run);
  return rep;
}

Report check_mode_agreement(const EnumerationBounds& b) {
  Report rep{"mode agreement", true, 0, {}};
  EnumerationBounds nb = b;
  nb.n_max = std::min(nb.n_max, 3);
  if (nb.n_min > nb.n_max) return rep;
  for_each_input(nb, [&](const ManifoldInput& in) { rep.merge(cross_validate(in)); });
  return rep;
}

Report check_localization(const EnumerationBounds& b) {
  Report rep{"localization", true, 0, {}};
  if (b.n_min > 2) return rep;
  EnumerationBounds nb = b;
  nb.n_min = nb.n_max = 2;
  auto expected = [](const ManifoldInput& in) {
    Wedge w;
    w.add_copies(SpaceTerm::sphere(4), in.d);
    w.add_copies(SpaceTerm::sphere(3), in.l);
    w.add_copies(SpaceTerm::sphere(5), in.l);
    const FinAbGroup odd = odd_only(in.T);
    for (int m : {4, 5})
      for (const auto& t : moore_terms(odd, m)) w.add(t);
    w.add(SpaceTerm::sphere(7));
    return w;
  };
  auto run = [&](ManifoldInput in) {
    in.localize = true;
    const Wedge want = expected(in);
    try {
      const DecompositionResult res = decide(in);
      for (const auto& w : res.candidates()) {
        ++rep.cases;
        if (w != want) rep.fail(describe(in) + " localizes to " + to_string(w) + ", expected " + to_string(want));
      }
    } catch (const DomainError& e) {
      ++rep.cases;
      rep.fail(describe(in) + " raised " + e.what());
    }
  };
  for_each_shape(nb, [&](const ManifoldInput& shape) {
    for (const auto& prof : enumerate_profiles(shape)) {
      ManifoldInput in = shape;
      in.top = prof;
      run(in);
    }
  });
  for_each_input(nb, run);
  return rep;
}

Report check_reduce_phi(int max_l, int max_t2, int max_r) {
  Report rep{"reduce_phi zero clause", true, 0, {}};
  for (int l = 0; l <= max_l; ++l) {
    for (const auto& exps : tuples_up_to(max_t2, max_r)) {
      const int t = static_cast<int>(exps.size());
      const int bits = l * l + l * t;
      for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        BitMatrix A(l, std::vector<int>(l)), B(l, std::vector<int>(t));
        int k = 0;
        for (auto& row : A)
          for (int& x : row) x = (mask >> k++) & 1;
        for (auto& row : B)
          for (int& x : row) x = (mask >> k++) & 1;
        const SectionData sd = reduce_phi(A, B, exps);
        ++rep.cases;
        const bool zero = mask == 0;
        if ((sd.c1 == 0 && sd.c2 == 0) != zero) {
          rep.fail("l=" + std::to_string(l) + " t2=" + std::to_string(t) + " mask=" + std::to_string(mask) +
                   " gives c1=" + std::to_string(sd.c1) + " c2=" + std::to_string(sd.c2));
        }
      }
    }
  }
  return rep;
}

}  // namespace suspsplit
