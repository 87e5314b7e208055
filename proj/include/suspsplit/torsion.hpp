#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace suspsplit {

bool is_prime(std::int64_t n);

// A cyclic summand Z/p^r.
class PrimePower {
 public:
  PrimePower(int p, int r);

  int p() const noexcept { return p_; }
  int r() const noexcept { return r_; }
  std::int64_t value() const noexcept;

  auto operator<=>(const PrimePower&) const = default;

 private:
  int p_;
  int r_;
};

std::string to_string(const PrimePower& q);

// Finitely generated abelian group Z^rank + (sum of Z/p^r), kept in
// prime-power canonical form: torsion sorted by (p, r) ascending.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  FinAbGroup(int free_rank, std::vector<PrimePower> torsion);

  static FinAbGroup free(int rank) { return FinAbGroup(rank, {}); }
  static FinAbGroup cyclic(PrimePower q) { return FinAbGroup(0, {q}); }
  // Z/order, split into its primary parts; order 0 means Z.
  static FinAbGroup from_cyclic_order(std::int64_t order);

  int free_rank() const noexcept { return free_rank_; }
  std::span<const PrimePower> torsion() const noexcept { return torsion_; }
  bool is_zero() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
  int count(const PrimePower& q) const;
  // Product of torsion orders (1 for a torsion-free group).
  std::int64_t torsion_order() const;

  // Canonical encoding, e.g. "Z^2+Z/2+Z/4+Z/3"; "0" for the trivial group.
  std::string encode() const;

  bool operator==(const FinAbGroup&) const = default;

 private:
  int free_rank_ = 0;
  std::vector<PrimePower> torsion_;
};

FinAbGroup primary_component(const FinAbGroup& g, int p);
// Everything except the p-primary torsion (free part kept).
FinAbGroup without_prime(const FinAbGroup& g, int p);
// Torsion with all summands of the given multiset removed; throws
// DomainError(SummandAbsent) when one is missing.
FinAbGroup drop_summands(const FinAbGroup& g, std::span<const PrimePower> summands);
FinAbGroup drop_summand(const FinAbGroup& g, const PrimePower& q);
FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);

// Z/(k, p^r) evaluated to its canonical form.
FinAbGroup gcd_cyclic(std::int64_t k, const PrimePower& q);

}  // namespace suspsplit
