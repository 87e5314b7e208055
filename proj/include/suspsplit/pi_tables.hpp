#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "suspsplit/catalog.hpp"

namespace suspsplit {

enum class Gen : std::uint8_t {
  Iota,            // 1 in pi_k(S^k)
  Eta,
  Eta2,
  Eta3,            // derived: 6nu', 6 Sigma(nu'), 12 nu_m
  NuPrime,         // pi_6(S^3)
  Nu4,             // Z summand of pi_7(S^4)
  SigmaNuPrime,
  NuM,             // pi_{m+3}(S^m), m >= 5
  Alpha1,          // 3-primary alpha_1(a)
  In,              // i_a : S^a -> X (bottom cell)
  InEta,
  InEta2,
  Teta,            // teta_r
  TetaEta,
  JLambda,
  I3NuPrime,
  IPJLambda,
  IPTetaEta,
  I4Nu4,
  I4SigmaNuPrime,
  TAlpha1,
  IAlpha1,         // i_a alpha_1(a)
  I3Alpha1,        // derived in pi_6(C^5_eta)
  OneP,
  BChi,            // B(chi^r_s)
  InEtaQ,          // i_a eta q_{a+1}
};

struct GeneratorSymbol {
  Gen tag = Gen::Iota;
  int a = 0;  // dimension parameter, where the name carries one
  int r = 0;
  int s = 0;

  auto operator<=>(const GeneratorSymbol&) const = default;
};

std::string to_string(const GeneratorSymbol& g);

struct Summand {
  GeneratorSymbol gen;
  std::int64_t order = 0;  // 0 = infinite cyclic

  bool operator==(const Summand&) const = default;
};

// pi_degree(target), or the mapping set [source, target] when source is set.
struct HomotopyGroup {
  int degree = 0;
  std::optional<SpaceTerm> source;
  SpaceTerm target;
  std::vector<Summand> summands;

  bool is_zero() const noexcept { return summands.empty(); }
  std::optional<std::size_t> index_of(const GeneratorSymbol& g) const;
  // Abstract group (Z for order 0, else Z/order split into primary parts).
  FinAbGroup abstract() const;
  bool operator==(const HomotopyGroup&) const = default;
};

// "Z/4<j*lambda> + Z/2<teta_1*eta>", "0" for the trivial group.
std::string group_text(const HomotopyGroup& g);
// "pi(6, P^4(Z/2)) = ..." or "[P^4(Z/2), P^4(Z/4)] = ...".
std::string to_string(const HomotopyGroup& g);

class FormalSum {
 public:
  explicit FormalSum(HomotopyGroup group);
  FormalSum(HomotopyGroup group, std::vector<std::int64_t> coeffs);

  static FormalSum basis(const HomotopyGroup& group, std::size_t i);

  const HomotopyGroup& group() const noexcept { return group_; }
  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;

  FormalSum operator+(const FormalSum& o) const;
  FormalSum operator*(std::int64_t k) const;
  bool operator==(const FormalSum&) const = default;

 private:
  void reduce();
  HomotopyGroup group_;
  std::vector<std::int64_t> coeffs_;
};

std::string to_string(const FormalSum& x);

int varrho(int r);
int delta(int r);

// Throws DomainError(UnsupportedPair) outside the stored tables.
HomotopyGroup pi(int m, const SpaceTerm& t);
// [P^{n+1}(2^r), P^{n+1}(2^s)].
HomotopyGroup moore_maps(int n, int r, int s);
// Odd-primary part of pi(m, t); nu-family generators renamed to alpha_1.
HomotopyGroup pi_odd(int m, const SpaceTerm& t);

// A named element of the group: a listed generator or one of the derived
// identities (eta^3, alpha_1, Sigma(nu') for m >= 5, i eta^2 = 2 teta_1,
// i3 alpha_1 = 2 i3 nu'). Throws UnknownComposite otherwise.
FormalSum element(const HomotopyGroup& group, const GeneratorSymbol& g);

enum class MapTag : std::uint8_t { Pinch, Chi, BottomIncl, MooreIncl, ZetaBar, XiBar, AlphaRS };

struct MapSymbol {
  MapTag tag;
  SpaceTerm source;
  SpaceTerm target;
  int r = 0;
  int s = 0;

  static MapSymbol pinch(PrimePower q, int n);          // P^{n+1}(q) -> S^{n+1}
  static MapSymbol chi(int p, int r, int s, int n);     // B(chi^r_s) on P^{n+1}
  static MapSymbol bottom_incl(int n);                  // S^n -> C^{n+2}_eta
  static MapSymbol moore_incl(int n, int r);            // i_P : P^{n+1}(2^r) -> C^{n+2}_r
  static MapSymbol zeta_bar(int n);                     // C^{n+2}_eta -> S^n
  static MapSymbol xi_bar(int n, int r);                // C^{n+2}_r -> P^{n+1}(2^{r+1})
  static MapSymbol alpha_rs(int n, int r, int s);       // C^{n+2}_r -> C^{n+2}_s, r <= s
};

std::string to_string(const MapSymbol& f);

// f_* x. Throws UnknownComposite for pairs outside the relation database.
FormalSum compose(const MapSymbol& f, const FormalSum& x);

// Generators of pi(m, t) that are suspensions; Eta3 is reported for S^3.
std::vector<GeneratorSymbol> suspended_generators(int m, const SpaceTerm& t);

}  // namespace suspsplit
