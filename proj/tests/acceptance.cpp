// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "suspsplit/errors.hpp"
#include "suspsplit/oracle.hpp"
#include "suspsplit/pi_tables.hpp"

using namespace suspsplit;

namespace {

struct Outcome {
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;
};

EnumerationBounds desk_bounds(int n_min, int n_max) {
  EnumerationBounds b;
  b.max_l = 3;
  b.max_d = 3;
  b.max_t2 = 2;
  b.max_r = 3;
  b.n_min = n_min;
  b.n_max = n_max;
  b.cap = cap_from_env(kDefaultCap);
  return b;
}

Outcome from_reports(const std::vector<Report>& reports) {
  Outcome o;
  for (const auto& r : reports) {
    o.cases += r.cases;
    if (!r.passed && o.passed) {
      o.passed = false;
      o.detail = r.check + ": " + r.witness;
    }
  }
  return o;
}

std::string pow_text(int p, int e) {
  long long v = 1;
  for (int i = 0; i < e; ++i) v *= p;
  return std::to_string(v);
}

// Expected tables, written out from the closed formulas of the Moore, Chang
// and odd-primary lemmas.
std::vector<std::pair<std::string, std::string>> expected_tables() {
  std::vector<std::pair<std::string, std::string>> rows;
  auto rho = [](int r) { return r <= 2 ? r + 1 : r; };
  auto del = [](int r) { return r == 1 ? 1 : 0; };
  for (int n : {3, 4, 5}) {
    const std::string i = "i" + std::to_string(n);
    for (int p : {2, 3, 5}) {
      for (int r = 1; r <= 4; ++r) {
        const std::string P = "P^" + std::to_string(n + 1) + "(Z/" + pow_text(p, r) + ")";
        rows.push_back({"pi(" + std::to_string(n) + ", " + P + ")", "Z/" + pow_text(p, r) + "<" + i + ">"});
        rows.push_back({"pi(" + std::to_string(n + 1) + ", " + P + ")", p == 2 ? "Z/2<" + i + "*eta>" : "0"});
        std::string top = "0";
        if (p == 2) top = r == 1 ? "Z/4<teta_1>" : "Z/2<teta_" + std::to_string(r) + "> + Z/2<" + i + "*eta^2>";
        rows.push_back({"pi(" + std::to_string(n + 2) + ", " + P + ")", top});
      }
    }
    for (int r = 1; r <= 4; ++r)
      for (int s = 1; s <= 4; ++s) {
        const std::string key = "[P^" + std::to_string(n + 1) + "(Z/" + pow_text(2, r) + "), P^" +
                                std::to_string(n + 1) + "(Z/" + pow_text(2, s) + ")]";
        const std::string val = r == 1 && s == 1 ? "Z/4<1_P>"
                                                 : "Z/" + pow_text(2, std::min(r, s)) + "<B(chi^" + std::to_string(r) +
                                                       "_" + std::to_string(s) + ")> + Z/2<" + i + "*eta*q" +
                                                       std::to_string(n + 1) + ">";
        rows.push_back({key, val});
      }
  }
  for (int r = 1; r <= 4; ++r) {
    const std::string q = pow_text(2, r);
    const std::string rs = std::to_string(r);
    std::string v = "Z/" + pow_text(2, rho(r)) + "<j*lambda>";
    if (!del(r)) v += " + Z/2<i3*nu'>";
    rows.push_back({"pi(6, P^4(Z/" + q + "))", v + " + Z/2<teta_" + rs + "*eta>"});
    v = "Z/" + pow_text(2, r + 1) + "<i4*nu_4>";
    if (std::min(r - 1, 2) > 0) v += " + Z/" + pow_text(2, std::min(r - 1, 2)) + "<i4*Sigma(nu')>";
    rows.push_back({"pi(7, P^5(Z/" + q + "))", v + " + Z/2<teta_" + rs + "*eta>"});
    v = "Z/" + pow_text(2, r + del(r)) + "<iP*j*lambda>";
    if (!del(r)) v += " + Z/2<i3*nu'>";
    rows.push_back({"pi(6, C_{" + rs + "}^5(Z/" + q + "))", v + " + Z/2<iP*teta_" + rs + "*eta>"});
    for (int p : {3, 5}) {
      const std::string pq = pow_text(p, r);
      rows.push_back({"pi(8, P^5(Z/" + pq + "))", p == 3 ? "Z/3<talpha1>" : "0"});
      rows.push_back({"pi(8, P^6(Z/" + pq + "))", p == 3 ? "Z/3<i5*alpha1>" : "0"});
    }
  }
  rows.push_back({"pi(6, C_eta^5)", "Z/6<i3*nu'>"});
  return rows;
}

Outcome table_regression() {
  std::vector<HomotopyGroup> got;
  for (int n : {3, 4, 5}) {
    for (int p : {2, 3, 5})
      for (int r = 1; r <= 4; ++r) {
        const SpaceTerm P = SpaceTerm::moore(PrimePower(p, r), n + 1);
        for (int k = 0; k < 3; ++k) got.push_back(pi(n + k, P));
      }
    for (int r = 1; r <= 4; ++r)
      for (int s = 1; s <= 4; ++s) got.push_back(moore_maps(n, r, s));
  }
  for (int r = 1; r <= 4; ++r) {
    got.push_back(pi(6, SpaceTerm::moore(PrimePower(2, r), 4)));
    got.push_back(pi(7, SpaceTerm::moore(PrimePower(2, r), 5)));
    got.push_back(pi(6, SpaceTerm::chang_r(3, r)));
    for (int p : {3, 5}) {
      got.push_back(pi(8, SpaceTerm::moore(PrimePower(p, r), 5)));
      got.push_back(pi(8, SpaceTerm::moore(PrimePower(p, r), 6)));
    }
  }
  got.push_back(pi(6, SpaceTerm::chang_eta(3)));

  const auto want = expected_tables();
  Outcome o;
  if (want.size() != got.size()) return {false, 0, "row count mismatch"};
  for (std::size_t k = 0; k < want.size(); ++k) {
    ++o.cases;
    const std::string text = to_string(got[k]);
    const std::string expect = want[k].first + " = " + want[k].second;
    if (text != expect && o.passed) {
      o.passed = false;
      o.detail = "got '" + text + "', expected '" + expect + "'";
    }
  }
  return o;
}

Outcome mutation_is_caught() {
  // The teta-teta rule with its exponent branch reversed must be rejected.
  auto rules = rule_set(2);
  for (auto& r : rules)
    if (r.id == "teta-teta") r.cond = ExponentCondition::PivotGE;
  EnumerationBounds b = desk_bounds(2, 2);
  b.max_l = 0;
  b.max_d = 0;
  const Report rep = check_rule_soundness(2, b, rules);
  if (rep.passed) return {false, rep.cases, "corrupted rule set was accepted"};
  return {true, rep.cases, {}};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "table regression", 1.0, table_regression},
      {2, "homology round-trip", 60.0, [] { return from_reports({check_homology_sweep(desk_bounds(2, 5))}); }},
      {3, "mode agreement", 0.0, [] { return from_reports({check_mode_agreement(desk_bounds(2, 3))}); }},
      {4, "rule soundness and confluence", 0.0,
       [] {
         Outcome o = from_reports({check_rule_soundness(2, desk_bounds(2, 2)), check_rule_soundness(3, desk_bounds(3, 3)),
                                   check_confluence_sweep(desk_bounds(2, 3))});
         const Outcome m = mutation_is_caught();
         o.cases += m.cases;
         if (o.passed && !m.passed) o = {false, o.cases, m.detail};
         return o;
       }},
      {5, "localization", 0.0, [] { return from_reports({check_localization(desk_bounds(2, 2))}); }},
      {6, "reduce_phi zero clause", 0.0, [] { return from_reports({check_reduce_phi(3, 3, 3)}); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, 0, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.passed && c.budget_s > 0 && secs > c.budget_s) {
      o.passed = false;
      o.detail = "exceeded the " + std::to_string(c.budget_s) + " s budget";
    }
    all = all && o.passed;
    std::printf("criterion %d [%s]: %s (%llu cases, %.2f s)%s%s\n", c.id, c.name, o.passed ? "PASS" : "FAIL",
                static_cast<unsigned long long>(o.cases), secs, o.passed ? "" : " - ", o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
