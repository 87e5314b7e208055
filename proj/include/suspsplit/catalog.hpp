#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "suspsplit/torsion.hpp"

namespace suspsplit {

// Elementary complexes. Dimension parameters follow the usual names:
//   Sphere(m)              S^m
//   Moore(p^r, m)          P^m(p^r), reduced homology Z/p^r in degree m-1
//   ChangEta(n)            C^{n+2}_eta = S^n u_eta e^{n+2}
//   ChangR(n, r)           C^{n+2}_r = P^{n+1}(2^r) u_{i_n eta} e^{n+2}
//   ConeEta2(n)            S^n u_{eta^2} e^{n+3}
//   ConeTildeEta(n, r)     P^{n+1}(2^r) u_{teta_r} e^{n+3}
//   Cone2rEta2(n, r)       P^{n+1}(2^r) u_{i_n eta^2} e^{n+3}
//   ConeTildeEtaEta(n, r)  P^n(2^r) u_{teta_r eta} e^{n+3}
//   ConeChang(n, r)        C^{n+1}_r u_{i_P teta_r eta} e^{n+3}
//   ConeEta3(m)            S^m u_{eta^3} e^{m+4}
//   ConeAlpha1(m)          S^m u_{alpha_1(m)} e^{m+4}
//   ConeTildeAlpha1(m, r)  P^m(3^r) u_{talpha_1(m)} e^{m+4}
//   ConeIAlpha1(m, r)      P^{m+1}(3^r) u_{i_m alpha_1(m)} e^{m+4}
enum class Kind : std::uint8_t {
  Sphere,
  Moore,
  ChangEta,
  ChangR,
  ConeEta2,
  ConeTildeEta,
  Cone2rEta2,
  ConeTildeEtaEta,
  ConeChang,
  ConeEta3,
  ConeAlpha1,
  ConeTildeAlpha1,
  ConeIAlpha1,
};

inline constexpr int kMaxDimension = 64;

class SpaceTerm {
 public:
  SpaceTerm() = default;  // S^1

  static SpaceTerm sphere(int m);
  static SpaceTerm moore(PrimePower q, int m);
  static SpaceTerm chang_eta(int n);
  static SpaceTerm chang_r(int n, int r);
  static SpaceTerm cone_eta2(int n);
  static SpaceTerm cone_tilde_eta(int n, int r);
  static SpaceTerm cone_2r_eta2(int n, int r);
  static SpaceTerm cone_tilde_eta_eta(int n, int r);
  static SpaceTerm cone_chang(int n, int r);
  static SpaceTerm cone_eta3(int m);
  static SpaceTerm cone_alpha1(int m);
  static SpaceTerm cone_tilde_alpha1(int m, int r);
  static SpaceTerm cone_i_alpha1(int m, int r);

  Kind kind() const noexcept { return kind_; }
  // The dimension parameter named in the table above (m or n).
  int dim() const noexcept { return dim_; }
  bool has_torsion() const noexcept { return p_ != 0; }
  // Only valid when has_torsion().
  PrimePower torsion() const { return PrimePower(p_, r_); }
  int prime() const noexcept { return p_; }
  int exponent() const noexcept { return r_; }
  int top_cell() const noexcept;

  auto operator<=>(const SpaceTerm&) const = default;

 private:
  SpaceTerm(Kind kind, int dim, int p, int r);

  Kind kind_ = Kind::Sphere;
  int dim_ = 1;
  int p_ = 0;
  int r_ = 0;
};

// P^m(G) for a finite group G, expanded into prime-power Moore spaces.
std::vector<SpaceTerm> moore_terms(const FinAbGroup& g, int m);

// A multiset of terms in canonical sorted order. The empty wedge is a point.
class Wedge {
 public:
  Wedge() = default;
  explicit Wedge(std::vector<SpaceTerm> terms);

  void add(const SpaceTerm& t);
  void add(const Wedge& w);
  void add_copies(const SpaceTerm& t, int count);
  // Removes one copy; returns false when absent.
  bool remove(const SpaceTerm& t);

  const std::vector<SpaceTerm>& terms() const noexcept { return terms_; }
  bool is_point() const noexcept { return terms_.empty(); }
  int count(const SpaceTerm& t) const;

  bool operator==(const Wedge&) const = default;
  auto operator<=>(const Wedge&) const = default;

 private:
  std::vector<SpaceTerm> terms_;
};

using GradedGroup = std::map<int, FinAbGroup>;

GradedGroup reduced_homology(const SpaceTerm& t);
GradedGroup reduced_homology(const Wedge& w);
// Degreewise direct sum; zero groups are never stored.
void accumulate(GradedGroup& into, int degree, const FinAbGroup& g);
std::string to_string(const GradedGroup& h);

SpaceTerm suspend(const SpaceTerm& t);
Wedge suspend(const Wedge& w);

Wedge localize_away_from_2(const SpaceTerm& t);
Wedge localize_away_from_2(const Wedge& w);

// Stable cohomology operations acting nontrivially out of one degree.
struct DegreeOperations {
  bool sq2 = false;
  bool theta = false;
  bool tertiary = false;
  bool p1 = false;
  std::vector<PrimePower> bocksteins;

  bool operator==(const DegreeOperations&) const = default;
};

using OperationSignature = std::map<int, DegreeOperations>;

OperationSignature operation_signature(const SpaceTerm& t);
OperationSignature operation_signature(const Wedge& w);

// Wedge notation: S^m, P^m(Z/q), C_eta^m, C_{r}^m(Z/q), (X u_{g} e^k);
// terms joined by " + ", "*" for a point.
std::string to_string(const SpaceTerm& t);
std::string to_string(const Wedge& w);
std::string_view kind_name(Kind k);

// Parses one term; also accepts the aliases C^m_eta and C^m_{r}.
SpaceTerm parse_term(std::string_view text);
// Parses a wedge; P^m(Z/k) with composite k expands into its primary parts.
Wedge parse_wedge(std::string_view text);

}  // namespace suspsplit
