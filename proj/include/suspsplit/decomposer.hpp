#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "suspsplit/catalog.hpp"
#include "suspsplit/normalizer.hpp"
#include "suspsplit/torsion.hpp"

namespace suspsplit {

using BitMatrix = std::vector<std::vector<int>>;

// Sq^2 data on the (n+1)-skeleton: A is l x l, B is l x t2, entries in {0,1}.
struct Sq2Matrices {
  BitMatrix A;
  BitMatrix B;
};

// Precomputed reduction: chosen holds indices into the 2-primary summands of T
// (in canonical order).
struct SectionData {
  int c1 = 0;
  int c2 = 0;
  std::vector<int> chosen;

  bool operator==(const SectionData&) const = default;
};

SectionData reduce_phi(const BitMatrix& A, const BitMatrix& B, const std::vector<int>& exponents);

enum class ThetaCase : std::uint8_t { Trivial, NoBocksteinLink, BocksteinImage };
enum class Sq2H5Case : std::uint8_t { NoBocksteinImage, BocksteinImage };
// n = 3 uses all four; n = 4 uses Trivial and B ("nontrivial").
enum class P1Case : std::uint8_t { Trivial, A, B, C };

struct OperationProfile {
  bool w2_nonzero = false;
  ThetaCase theta = ThetaCase::Trivial;
  int theta_r = 0;
  std::optional<bool> tertiary;
  Sq2H5Case sq2h5 = Sq2H5Case::NoBocksteinImage;
  int sq2h5_r = 0;
  P1Case p1 = P1Case::Trivial;
  int p1_r = 0;

  bool operator==(const OperationProfile&) const = default;
};

std::string to_string(const OperationProfile& p, int n);

// Raw top-cell coefficients. n = 2: x, eps over the 2-primary summands, y over
// the l - c1 three-spheres, z over the l - c1 - c2 five-spheres, s over the
// unchosen and t over the chosen summands. n = 3: a over d, b and c over the
// 3-primary summands. Entries are residues mod 2 (n = 2) or mod 3 (n = 3).
struct AttachingCoeffs {
  std::vector<int> x, eps, y, z, s, t;
  std::vector<int> a, b, c;

  bool operator==(const AttachingCoeffs&) const = default;
};

struct ManifoldInput {
  int n = 2;
  int l = 0;
  int d = 0;
  FinAbGroup T;
  std::variant<std::monostate, Sq2Matrices, SectionData> sq2;
  std::variant<OperationProfile, AttachingCoeffs> top;
  bool localize = false;
};

struct Alternative {
  Wedge wedge;
  std::string condition;

  bool operator==(const Alternative&) const = default;
};

struct DecompositionResult {
  Wedge wedge;
  std::vector<Alternative> alternatives;
  bool localized = false;
  std::string clause;

  // The main wedge followed by every alternative.
  std::vector<Wedge> candidates() const;
};

// Section data for the input (identity for n >= 3 and no Sq^2 data).
SectionData section_data(const ManifoldInput& in);
// The (2n+1)-st homology section; suspended once for n = 2.
Wedge homology_section(const ManifoldInput& in);

DecompositionResult decide(const ManifoldInput& in);
DecompositionResult localize_result(const DecompositionResult& r);

// Attaching mode helpers.
SlotVector attaching_vector(const ManifoldInput& in);
// Terms of the suspended section that the top cell cannot reach.
Wedge fixed_part(const ManifoldInput& in);
OperationProfile profile_from_vector(const SlotVector& v);

// Suspension of the homology table, 2-torsion dropped when localized.
GradedGroup expected_homology(const ManifoldInput& in, bool localized);

}  // namespace suspsplit
