#include "suspsplit/torsion.hpp"

#include <algorithm>
#include <numeric>

#include "suspsplit/errors.hpp"

namespace suspsplit {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimePower::PrimePower(int p, int r) : p_(p), r_(r) {
  if (!is_prime(p)) throw DomainError(ErrorKind::InvalidTerm, "not a prime: " + std::to_string(p));
  if (r < 1) throw DomainError(ErrorKind::InvalidTerm, "exponent must be >= 1");
  std::int64_t v = 1;
  for (int i = 0; i < r; ++i) {
    v *= p;
    if (v > (std::int64_t{1} << 40))
      throw DomainError(ErrorKind::RangeExceeded, "prime power too large");
  }
}

std::int64_t PrimePower::value() const noexcept {
  std::int64_t v = 1;
  for (int i = 0; i < r_; ++i) v *= p_;
  return v;
}

std::string to_string(const PrimePower& q) { return "Z/" + std::to_string(q.value()); }

FinAbGroup::FinAbGroup(int free_rank, std::vector<PrimePower> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  if (free_rank < 0) throw DomainError(ErrorKind::InvalidTerm, "negative free rank");
  std::sort(torsion_.begin(), torsion_.end());
}

FinAbGroup FinAbGroup::from_cyclic_order(std::int64_t order) {
  if (order == 0) return free(1);
  std::vector<PrimePower> parts;
  std::int64_t rest = order;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    int r = 0;
    while (rest % p == 0) {
      rest /= p;
      ++r;
    }
    if (r > 0) parts.emplace_back(static_cast<int>(p), r);
  }
  if (rest > 1) parts.emplace_back(static_cast<int>(rest), 1);
  return FinAbGroup(0, std::move(parts));
}

int FinAbGroup::count(const PrimePower& q) const {
  return static_cast<int>(std::count(torsion_.begin(), torsion_.end(), q));
}

std::int64_t FinAbGroup::torsion_order() const {
  std::int64_t n = 1;
  for (const auto& q : torsion_) n *= q.value();
  return n;
}

std::string FinAbGroup::encode() const {
  if (is_zero()) return "0";
  std::string out;
  if (free_rank_ > 0) out = free_rank_ == 1 ? "Z" : "Z^" + std::to_string(free_rank_);
  for (const auto& q : torsion_) {
    if (!out.empty()) out += '+';
    out += to_string(q);
  }
  return out;
}

FinAbGroup primary_component(const FinAbGroup& g, int p) {
  std::vector<PrimePower> keep;
  for (const auto& q : g.torsion())
    if (q.p() == p) keep.push_back(q);
  return FinAbGroup(0, std::move(keep));
}

FinAbGroup without_prime(const FinAbGroup& g, int p) {
  std::vector<PrimePower> keep;
  for (const auto& q : g.torsion())
    if (q.p() != p) keep.push_back(q);
  return FinAbGroup(g.free_rank(), std::move(keep));
}

FinAbGroup drop_summands(const FinAbGroup& g, std::span<const PrimePower> summands) {
  std::vector<PrimePower> rest(g.torsion().begin(), g.torsion().end());
  for (const auto& q : summands) {
    auto it = std::find(rest.begin(), rest.end(), q);
    if (it == rest.end())
      throw DomainError(ErrorKind::SummandAbsent, to_string(q) + " is not a summand of " + g.encode());
    rest.erase(it);
  }
  return FinAbGroup(g.free_rank(), std::move(rest));
}

FinAbGroup drop_summand(const FinAbGroup& g, const PrimePower& q) {
  return drop_summands(g, std::span<const PrimePower>(&q, 1));
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<PrimePower> all(a.torsion().begin(), a.torsion().end());
  all.insert(all.end(), b.torsion().begin(), b.torsion().end());
  return FinAbGroup(a.free_rank() + b.free_rank(), std::move(all));
}

FinAbGroup gcd_cyclic(std::int64_t k, const PrimePower& q) {
  return FinAbGroup::from_cyclic_order(std::gcd(k, q.value()));
}

}  // namespace suspsplit
