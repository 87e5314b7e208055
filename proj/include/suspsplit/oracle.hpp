#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "suspsplit/decomposer.hpp"
#include "suspsplit/normalizer.hpp"

namespace suspsplit {

// Desk-scale enumeration limits. t2 counts summands of the working prime
// (2 for n = 2, 3 for n >= 3); `spectators` also toggles a torsion summand the
// top cell cannot see (Z/3 for n = 2, Z/2 + Z/5 for n >= 3).
struct EnumerationBounds {
  int max_l = 1;
  int max_d = 1;
  int max_t2 = 1;
  int max_r = 2;
  int n_min = 2;
  int n_max = 2;
  bool spectators = true;
  std::uint64_t cap = 1'000'000;
};

inline constexpr std::uint64_t kDefaultCap = 1'000'000;
// SUSPSPLIT_CAP when set and numeric, otherwise `fallback`.
std::uint64_t cap_from_env(std::uint64_t fallback = kDefaultCap);

// Attaching-mode inputs for n = 2, 3 (every coefficient vector); a single
// trivial-profile input per shape for n = 4, 5.
std::uint64_t count_inputs(const EnumerationBounds& b);
// Throws CapExceeded before visiting anything when the count is over the cap.
void for_each_input(const EnumerationBounds& b, const std::function<void(const ManifoldInput&)>& visit);
std::vector<ManifoldInput> enumerate_inputs(const EnumerationBounds& b);

// Every operation profile the decision tree accepts for the input's shape.
std::vector<OperationProfile> enumerate_profiles(const ManifoldInput& shape);

struct Report {
  std::string check;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string witness;  // first failure

  void fail(const std::string& w);
  void merge(const Report& other);
};

std::string to_string(const Report& r);

// Reduced homology of `w` against the suspended homology table of `in`.
Report check_homology(const ManifoldInput& in, const Wedge& w, bool localized);
// Each rule application keeps cofiber homology, is a single canonical move and
// keeps the dominant survivor.
Report check_rule_soundness(int n, const EnumerationBounds& b, const std::vector<RewriteRule>& rules);
Report check_rule_soundness(int n, const EnumerationBounds& b);
// Attaching-mode wedge lies in the operations-mode candidate set.
Report cross_validate(const ManifoldInput& in);
Report check_confluence_sweep(const EnumerationBounds& b);
// Every branch of every shape, both modes, against the homology table.
Report check_homology_sweep(const EnumerationBounds& b);
Report check_mode_agreement(const EnumerationBounds& b);
// Localized n = 2 outputs against the away-from-2 wedge built from (l, d, T).
Report check_localization(const EnumerationBounds& b);
// reduce_phi gives c1 = c2 = 0 exactly for zero matrices.
Report check_reduce_phi(int max_l, int max_t2, int max_r);

}  // namespace suspsplit
