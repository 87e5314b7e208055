#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "suspsplit/catalog.hpp"
#include "suspsplit/pi_tables.hpp"

namespace suspsplit {

// Top-cell attaching map S^m -> target, one element of pi_m per target term
// (odd-primary part when m = 8).
struct AttachingVector {
  int m = 6;
  std::vector<SpaceTerm> target;
  std::vector<FormalSum> entries;
};

// The group an entry over `t` lives in for source dimension m.
HomotopyGroup entry_group(int m, const SpaceTerm& t);

// Generator slots the rewrite rules act on.
enum class SlotKind : std::uint8_t {
  Passive,    // entry is forced zero
  Teta,       // teta_r on P^5(2^r)
  IEta2,      // i4 eta^2 on P^5(2^r)
  Eta3,       // eta^3 = 6nu' on S^3
  Eta,        // eta on S^5
  TetaEta,    // teta_r eta on P^4(2^r)
  IPTetaEta,  // iP teta_r eta on C^5_r
  Alpha1,     // alpha_1(5) on S^5
  TAlpha1,    // talpha_1(5) on P^5(3^r)
  IAlpha1,    // i5 alpha_1(5) on P^6(3^r)
};

std::string_view slot_name(SlotKind k);

struct Slot {
  std::size_t term = 0;  // index into target
  SlotKind kind = SlotKind::Passive;
  int r = 0;
  int coeff = 0;

  bool operator==(const Slot&) const = default;
};

struct SlotVector {
  int m = 6;
  std::vector<SpaceTerm> target;
  std::vector<Slot> slots;

  int modulus() const noexcept { return m == 8 ? 3 : 2; }
  int nonzero() const;
  bool operator==(const SlotVector&) const = default;
};

// Slots for each target term; coefficients zero.
SlotVector blank_slots(int m, const std::vector<SpaceTerm>& target);
// Throws InvalidVector when a forced-zero or non-suspension component is set.
SlotVector to_slots(const AttachingVector& v);
AttachingVector to_attaching(const SlotVector& v);

enum class ExponentCondition : std::uint8_t { Any, PivotLE, PivotGE, PivotLT, PivotGT };
enum class Effect : std::uint8_t { ZeroVictim, UnitNormalize };

struct RewriteRule {
  std::string id;
  int priority = 0;
  SlotKind pivot = SlotKind::Passive;
  SlotKind victim = SlotKind::Passive;
  ExponentCondition cond = ExponentCondition::Any;
  bool same_entry = false;
  Effect effect = Effect::ZeroVictim;
  std::string citation;
};

std::vector<RewriteRule> rule_set(int n);

bool rule_matches(const RewriteRule& rule, const SlotVector& v, std::size_t pivot, std::size_t victim);

struct TraceStep {
  std::string rule;
  std::size_t pivot_term = 0;
  std::size_t victim_term = 0;

  bool operator==(const TraceStep&) const = default;
};

struct Normalized {
  SlotVector vector;
  std::vector<TraceStep> trace;
};

Normalized normalize(const SlotVector& v);
Normalized normalize(const SlotVector& v, const std::vector<RewriteRule>& rules);
// Applies a trace step by step; throws InvalidVector if a step does not apply.
SlotVector replay(const SlotVector& v, const std::vector<TraceStep>& trace, const std::vector<RewriteRule>& rules);
// One application of `rule` at (pivot, victim) slot indices.
SlotVector apply_rule(const RewriteRule& rule, const SlotVector& v, std::size_t pivot, std::size_t victim);

struct Survivor {
  SlotKind kind;
  int r;
  bool operator==(const Survivor&) const = default;
};

// Closed-form survivor class predicted by the dominance order, independent of
// the rewriting engine.
std::optional<Survivor> dominant_survivor(const SlotVector& v);
std::optional<Survivor> survivor(const SlotVector& normalized);

// Wedge of untouched terms plus the cone on the surviving generator.
Wedge cofiber(const SlotVector& normalized);

enum class OrbitResult : std::uint8_t { Equivalent, NotEquivalent, DepthExceeded };
std::string_view to_string(OrbitResult r);

// Breadth-first search over single moves (victim += k * pivot, unit scaling).
OrbitResult orbit_equivalent(const SlotVector& a, const SlotVector& b, int depth,
                             const std::vector<RewriteRule>& rules);
OrbitResult orbit_equivalent(const SlotVector& a, const SlotVector& b, int depth);

struct ConfluenceReport {
  bool confluent = true;
  std::size_t fixpoints = 0;  // distinct fixpoint classes reached
  std::vector<Wedge> witnesses;
};

// Explores every application order; fixpoints are compared by surviving
// class and cofiber. One explorer serves all vectors sharing a layout and
// keeps its memo between calls.
class ConfluenceExplorer {
 public:
  ConfluenceExplorer(const SlotVector& layout, std::vector<RewriteRule> rules);
  ConfluenceReport check(const SlotVector& v);

 private:
  const std::map<std::string, Wedge>& fixpoints(const std::vector<int>& c);

  SlotVector layout_;
  std::vector<RewriteRule> rules_;
  std::map<std::vector<int>, std::map<std::string, Wedge>> memo_;
};

ConfluenceReport check_confluence(const SlotVector& v);
ConfluenceReport check_confluence(const SlotVector& v, const std::vector<RewriteRule>& rules);

std::string to_string(const SlotVector& v);

}  // namespace suspsplit
