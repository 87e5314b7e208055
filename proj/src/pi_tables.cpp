#include "suspsplit/pi_tables.hpp"

#include <algorithm>

#include "suspsplit/errors.hpp"

namespace suspsplit {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t v = 1;
  for (int i = 0; i < e; ++i) v *= b;
  return v;
}

std::int64_t mod(std::int64_t x, std::int64_t m) {
  if (m == 0) return x;
  x %= m;
  return x < 0 ? x + m : x;
}

GeneratorSymbol G(Gen tag, int a = 0, int r = 0, int s = 0) { return {tag, a, r, s}; }

[[noreturn]] void unsupported(int m, const SpaceTerm& t) {
  throw DomainError(ErrorKind::UnsupportedPair,
                    "no stored table for pi_" + std::to_string(m) + "(" + to_string(t) + ")");
}

[[noreturn]] void unknown(const std::string& what) { throw DomainError(ErrorKind::UnknownComposite, what); }

HomotopyGroup make(int m, const SpaceTerm& t, std::vector<Summand> s) {
  HomotopyGroup g;
  g.degree = m;
  g.target = t;
  for (auto& x : s)
    if (x.order != 1) g.summands.push_back(x);
  return g;
}

HomotopyGroup pi_sphere(int m, const SpaceTerm& t) {
  const int k = t.dim();
  if (m < k) return make(m, t, {});
  if (m == k) return make(m, t, {{G(Gen::Iota, k), 0}});
  if (k < 2) unsupported(m, t);
  if (m == k + 1) return make(m, t, {{G(Gen::Eta), k == 2 ? 0 : 2}});
  if (m == k + 2) return make(m, t, {{G(Gen::Eta2), 2}});
  if (m == k + 3) {
    if (k == 3) return make(m, t, {{G(Gen::NuPrime), 12}});
    if (k == 4) return make(m, t, {{G(Gen::Nu4), 0}, {G(Gen::SigmaNuPrime), 12}});
    if (k >= 5) return make(m, t, {{G(Gen::NuM, k), 24}});
  }
  unsupported(m, t);
}

HomotopyGroup pi_moore(int m, const SpaceTerm& t) {
  const int n = t.dim() - 1;
  const int p = t.prime();
  const int r = t.exponent();
  if (m < n) return make(m, t, {});
  if (n < 3) unsupported(m, t);
  if (m == n) return make(m, t, {{G(Gen::In, n), t.torsion().value()}});
  if (m == n + 1) return p == 2 ? make(m, t, {{G(Gen::InEta, n), 2}}) : make(m, t, {});
  if (m == n + 2) {
    if (p != 2) return make(m, t, {});
    if (r == 1) return make(m, t, {{G(Gen::Teta, 0, 1), 4}});
    return make(m, t, {{G(Gen::Teta, 0, r), 2}, {G(Gen::InEta2, n), 2}});
  }
  if (p == 2 && n == 3 && m == 6)
    return make(m, t,
                {{G(Gen::JLambda, 0, r), ipow(2, varrho(r))},
                 {G(Gen::I3NuPrime), ipow(2, 1 - delta(r))},
                 {G(Gen::TetaEta, 0, r), 2}});
  if (p == 2 && n == 4 && m == 7)
    return make(m, t,
                {{G(Gen::I4Nu4), ipow(2, r + 1)},
                 {G(Gen::I4SigmaNuPrime), ipow(2, std::min(r - 1, 2))},
                 {G(Gen::TetaEta, 0, r), 2}});
  if (p != 2 && m == 8 && (n == 4 || n == 5)) {
    const std::int64_t order = gcd_cyclic(3, t.torsion()).torsion_order();
    if (n == 4) return make(m, t, {{G(Gen::TAlpha1, 5, r), order}});
    return make(m, t, {{G(Gen::IAlpha1, 5), order}});
  }
  unsupported(m, t);
}

HomotopyGroup pi_chang(int m, const SpaceTerm& t) {
  const int n = t.dim();
  if (m < n) return make(m, t, {});
  if (n < 3) unsupported(m, t);
  if (t.kind() == Kind::ChangEta) {
    if (m == n) return make(m, t, {{G(Gen::In, n), 0}});
    if (n == 3 && m == 6) return make(m, t, {{G(Gen::I3NuPrime), 6}});
    unsupported(m, t);
  }
  const int r = t.exponent();
  if (m == n) return make(m, t, {{G(Gen::In, n), t.torsion().value()}});
  if (m == n + 1) return make(m, t, {});
  if (n == 3 && m == 6)
    return make(m, t,
                {{G(Gen::IPJLambda, 0, r), ipow(2, r + delta(r))},
                 {G(Gen::I3NuPrime), ipow(2, 1 - delta(r))},
                 {G(Gen::IPTetaEta, 0, r), 2}});
  unsupported(m, t);
}

}  // namespace

int varrho(int r) { return r <= 2 ? r + 1 : r; }
int delta(int r) { return r == 1 ? 1 : 0; }

// ---------------------------------------------------------------- text

std::string to_string(const GeneratorSymbol& g) {
  const std::string a = std::to_string(g.a);
  const std::string r = std::to_string(g.r);
  switch (g.tag) {
    case Gen::Iota: return "1";
    case Gen::Eta: return "eta";
    case Gen::Eta2: return "eta^2";
    case Gen::Eta3: return "eta^3";
    case Gen::NuPrime: return "nu'";
    case Gen::Nu4: return "nu_4";
    case Gen::SigmaNuPrime: return "Sigma(nu')";
    case Gen::NuM: return "nu_" + a;
    case Gen::Alpha1: return "alpha1";
    case Gen::In: return "i" + a;
    case Gen::InEta: return "i" + a + "*eta";
    case Gen::InEta2: return "i" + a + "*eta^2";
    case Gen::Teta: return "teta_" + r;
    case Gen::TetaEta: return "teta_" + r + "*eta";
    case Gen::JLambda: return "j*lambda";
    case Gen::I3NuPrime: return "i3*nu'";
    case Gen::IPJLambda: return "iP*j*lambda";
    case Gen::IPTetaEta: return "iP*teta_" + r + "*eta";
    case Gen::I4Nu4: return "i4*nu_4";
    case Gen::I4SigmaNuPrime: return "i4*Sigma(nu')";
    case Gen::TAlpha1: return "talpha1";
    case Gen::IAlpha1: return "i" + a + "*alpha1";
    case Gen::I3Alpha1: return "i3*alpha1";
    case Gen::OneP: return "1_P";
    case Gen::BChi: return "B(chi^" + r + "_" + std::to_string(g.s) + ")";
    case Gen::InEtaQ: return "i" + a + "*eta*q" + std::to_string(g.a + 1);
  }
  return "?";
}

std::optional<std::size_t> HomotopyGroup::index_of(const GeneratorSymbol& g) const {
  for (std::size_t i = 0; i < summands.size(); ++i)
    if (summands[i].gen == g) return i;
  return std::nullopt;
}

FinAbGroup HomotopyGroup::abstract() const {
  FinAbGroup out;
  for (const auto& s : summands) out = direct_sum(out, FinAbGroup::from_cyclic_order(s.order));
  return out;
}

std::string group_text(const HomotopyGroup& g) {
  if (g.is_zero()) return "0";
  std::string out;
  for (const auto& s : g.summands) {
    if (!out.empty()) out += " + ";
    out += s.order == 0 ? "Z" : "Z/" + std::to_string(s.order);
    out += "<" + to_string(s.gen) + ">";
  }
  return out;
}

std::string to_string(const HomotopyGroup& g) {
  if (g.source) return "[" + to_string(*g.source) + ", " + to_string(g.target) + "] = " + group_text(g);
  return "pi(" + std::to_string(g.degree) + ", " + to_string(g.target) + ") = " + group_text(g);
}

// ---------------------------------------------------------------- FormalSum

FormalSum::FormalSum(HomotopyGroup group) : group_(std::move(group)), coeffs_(group_.summands.size(), 0) {}

FormalSum::FormalSum(HomotopyGroup group, std::vector<std::int64_t> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != group_.summands.size())
    throw DomainError(ErrorKind::InvalidVector, "coefficient count does not match " + to_string(group_));
  reduce();
}

FormalSum FormalSum::basis(const HomotopyGroup& group, std::size_t i) {
  FormalSum x(group);
  x.coeffs_.at(i) = 1;
  x.reduce();
  return x;
}

void FormalSum::reduce() {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = mod(coeffs_[i], group_.summands[i].order);
}

bool FormalSum::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

FormalSum FormalSum::operator+(const FormalSum& o) const {
  if (!(group_ == o.group_)) throw DomainError(ErrorKind::InvalidVector, "adding elements of different groups");
  FormalSum out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += o.coeffs_[i];
  out.reduce();
  return out;
}

FormalSum FormalSum::operator*(std::int64_t k) const {
  FormalSum out = *this;
  for (auto& c : out.coeffs_) c *= k;
  out.reduce();
  return out;
}

std::string to_string(const FormalSum& x) {
  std::string out;
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    const auto c = x.coeffs()[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += to_string(x.group().summands[i].gen);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- tables

HomotopyGroup pi(int m, const SpaceTerm& t) {
  if (m < 1 || m > kMaxDimension) unsupported(m, t);
  switch (t.kind()) {
    case Kind::Sphere: return pi_sphere(m, t);
    case Kind::Moore: return pi_moore(m, t);
    case Kind::ChangEta:
    case Kind::ChangR: return pi_chang(m, t);
    default: unsupported(m, t);
  }
}

HomotopyGroup moore_maps(int n, int r, int s) {
  if (n < 3) throw DomainError(ErrorKind::UnsupportedPair, "mapping sets need n >= 3");
  const SpaceTerm src = SpaceTerm::moore(PrimePower(2, r), n + 1);
  const SpaceTerm dst = SpaceTerm::moore(PrimePower(2, s), n + 1);
  HomotopyGroup g;
  g.degree = n + 1;
  g.source = src;
  g.target = dst;
  if (r == 1 && s == 1)
    g.summands = {{G(Gen::OneP), 4}};
  else
    g.summands = {{G(Gen::BChi, 0, r, s), ipow(2, std::min(r, s))}, {G(Gen::InEtaQ, n), 2}};
  return g;
}

HomotopyGroup pi_odd(int m, const SpaceTerm& t) {
  HomotopyGroup full = pi(m, t);
  HomotopyGroup out = full;
  out.summands.clear();
  for (const auto& s : full.summands) {
    if (s.order == 0)
      throw DomainError(ErrorKind::UnsupportedPair, "odd part of " + to_string(full) + " has a free summand");
    std::int64_t odd = s.order;
    while (odd % 2 == 0) odd /= 2;
    if (odd == 1) continue;
    GeneratorSymbol g = s.gen;
    switch (g.tag) {
      case Gen::NuPrime: g = G(Gen::Alpha1, 3); break;
      case Gen::SigmaNuPrime: g = G(Gen::Alpha1, 4); break;
      case Gen::NuM: g = G(Gen::Alpha1, g.a); break;
      case Gen::I3NuPrime: g = G(Gen::I3Alpha1); break;
      default: break;
    }
    out.summands.push_back({g, odd});
  }
  return out;
}

FormalSum element(const HomotopyGroup& group, const GeneratorSymbol& g) {
  if (auto i = group.index_of(g)) return FormalSum::basis(group, *i);
  auto scaled = [&](const GeneratorSymbol& base, std::int64_t k) -> std::optional<FormalSum> {
    if (auto i = group.index_of(base)) return FormalSum::basis(group, *i) * k;
    return std::nullopt;
  };
  const SpaceTerm& t = group.target;
  std::optional<FormalSum> out;
  if (!group.source && t.kind() == Kind::Sphere && group.degree == t.dim() + 3) {
    const int k = t.dim();
    const bool odd_renamed = !group.summands.empty() && group.summands.front().gen.tag == Gen::Alpha1;
    if (g.tag == Gen::Eta3 && !odd_renamed) {
      if (k == 3) out = scaled(G(Gen::NuPrime), 6);
      if (k == 4) out = scaled(G(Gen::SigmaNuPrime), 6);
      if (k >= 5) out = scaled(G(Gen::NuM, k), 12);
    }
    if (g.tag == Gen::Alpha1 && g.a == k) {
      if (k == 3) out = scaled(G(Gen::NuPrime), 8);
      if (k == 4) out = scaled(G(Gen::SigmaNuPrime), 8);
      if (k >= 5) out = scaled(G(Gen::NuM, k), 16);
    }
    if (g.tag == Gen::SigmaNuPrime && k >= 5) out = scaled(G(Gen::NuM, k), 2);
  }
  if (g.tag == Gen::InEta2 && t.kind() == Kind::Moore && t.exponent() == 1 && g.a == t.dim() - 1)
    out = scaled(G(Gen::Teta, 0, 1), 2);
  if (g.tag == Gen::I3Alpha1 && t.kind() == Kind::ChangEta) out = scaled(G(Gen::I3NuPrime), 2);
  if (g.tag == Gen::InEtaQ && group.source && t.exponent() == 1 && group.source->exponent() == 1)
    out = scaled(G(Gen::OneP), 2);
  if (!out) unknown(to_string(g) + " is not a named element of " + to_string(group));
  return *out;
}

// ---------------------------------------------------------------- maps

MapSymbol MapSymbol::pinch(PrimePower q, int n) {
  return {MapTag::Pinch, SpaceTerm::moore(q, n + 1), SpaceTerm::sphere(n + 1), q.r(), 0};
}
MapSymbol MapSymbol::chi(int p, int r, int s, int n) {
  return {MapTag::Chi, SpaceTerm::moore(PrimePower(p, r), n + 1), SpaceTerm::moore(PrimePower(p, s), n + 1), r, s};
}
MapSymbol MapSymbol::bottom_incl(int n) {
  return {MapTag::BottomIncl, SpaceTerm::sphere(n), SpaceTerm::chang_eta(n), 0, 0};
}
MapSymbol MapSymbol::moore_incl(int n, int r) {
  return {MapTag::MooreIncl, SpaceTerm::moore(PrimePower(2, r), n + 1), SpaceTerm::chang_r(n, r), r, 0};
}
MapSymbol MapSymbol::zeta_bar(int n) {
  return {MapTag::ZetaBar, SpaceTerm::chang_eta(n), SpaceTerm::sphere(n), 0, 0};
}
MapSymbol MapSymbol::xi_bar(int n, int r) {
  return {MapTag::XiBar, SpaceTerm::chang_r(n, r), SpaceTerm::moore(PrimePower(2, r + 1), n + 1), r, r + 1};
}
MapSymbol MapSymbol::alpha_rs(int n, int r, int s) {
  if (r > s) throw DomainError(ErrorKind::UnknownComposite, "alpha^r_s needs r <= s");
  return {MapTag::AlphaRS, SpaceTerm::chang_r(n, r), SpaceTerm::chang_r(n, s), r, s};
}

std::string to_string(const MapSymbol& f) {
  std::string name;
  switch (f.tag) {
    case MapTag::Pinch: name = "q"; break;
    case MapTag::Chi: name = "B(chi^" + std::to_string(f.r) + "_" + std::to_string(f.s) + ")"; break;
    case MapTag::BottomIncl: name = "i"; break;
    case MapTag::MooreIncl: name = "iP"; break;
    case MapTag::ZetaBar: name = "zeta"; break;
    case MapTag::XiBar: name = "xi_" + std::to_string(f.r); break;
    case MapTag::AlphaRS: name = "alpha^" + std::to_string(f.r) + "_" + std::to_string(f.s); break;
  }
  return name + ": " + to_string(f.source) + " -> " + to_string(f.target);
}

namespace {

// Image of one generator as (multiplier, named element in the target); a
// multiplier of 0 means the image is zero.
struct Image {
  std::int64_t k;
  GeneratorSymbol g;
};

Image image(const MapSymbol& f, const GeneratorSymbol& g) {
  const std::string pair = to_string(g) + " under " + to_string(f);
  const int n = f.source.kind() == Kind::Moore ? f.source.dim() - 1 : f.source.dim();
  switch (f.tag) {
    case MapTag::Pinch:
      switch (g.tag) {
        case Gen::In:
        case Gen::InEta:
        case Gen::InEta2:
        case Gen::I3NuPrime:
        case Gen::I4Nu4:
        case Gen::I4SigmaNuPrime:
        case Gen::IAlpha1: return {0, g};
        case Gen::Teta: return {1, G(Gen::Eta)};
        case Gen::TetaEta: return {1, G(Gen::Eta2)};
        case Gen::TAlpha1: return {1, G(Gen::Alpha1, n + 1)};
        default: break;
      }
      break;
    case MapTag::Chi: {
      const int r = f.r;
      const int s = f.s;
      const std::int64_t up = r >= s ? 1 : ipow(f.source.prime(), s - r);
      switch (g.tag) {
        case Gen::In:
        case Gen::InEta:
        case Gen::InEta2:
        case Gen::IAlpha1: return {up, g};
        case Gen::Teta:
          if (s >= r) return {1, G(Gen::Teta, 0, s)};
          break;
        case Gen::TetaEta:
          if (s >= r) return {1, G(Gen::TetaEta, 0, s)};
          break;
        case Gen::TAlpha1:
          if (s >= r) return {1, G(Gen::TAlpha1, g.a, s)};
          break;
        default: break;
      }
      break;
    }
    case MapTag::BottomIncl:
      if (g.tag == Gen::Iota) return {1, G(Gen::In, n)};
      if (g.tag == Gen::NuPrime) return {1, G(Gen::I3NuPrime)};
      break;
    case MapTag::MooreIncl:
      if (g.tag == Gen::In) return {1, g};
      if (g.tag == Gen::JLambda) return {1, G(Gen::IPJLambda, 0, g.r)};
      if (g.tag == Gen::I3NuPrime) return {1, g};
      if (g.tag == Gen::TetaEta) return {1, G(Gen::IPTetaEta, 0, g.r)};
      break;
    case MapTag::ZetaBar:
      if (g.tag == Gen::In) return {2, G(Gen::Iota, n)};
      break;
    case MapTag::XiBar:
      if (g.tag == Gen::IPTetaEta) return {1, G(Gen::TetaEta, 0, f.r + 1)};
      if (g.tag == Gen::In) return {2, g};
      break;
    case MapTag::AlphaRS:
      if (g.tag == Gen::IPTetaEta) return {1, G(Gen::IPTetaEta, 0, f.s)};
      if (g.tag == Gen::In) return {ipow(2, f.s - f.r), g};
      break;
  }
  unknown("no stored relation for " + pair);
}

}  // namespace

FormalSum compose(const MapSymbol& f, const FormalSum& x) {
  const HomotopyGroup& src = x.group();
  if (src.source || !(src.target == f.source))
    throw DomainError(ErrorKind::UnknownComposite, to_string(f) + " cannot act on " + to_string(src));
  const HomotopyGroup dst = pi(src.degree, f.target);
  FormalSum out(dst);
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    const std::int64_t c = x.coeffs()[i];
    if (c == 0) continue;
    const Image im = image(f, src.summands[i].gen);
    if (im.k == 0) continue;
    out = out + element(dst, im.g) * (im.k * c);
  }
  return out;
}

std::vector<GeneratorSymbol> suspended_generators(int m, const SpaceTerm& t) {
  const HomotopyGroup g = pi(m, t);
  const int bottom = t.kind() == Kind::Moore ? t.dim() - 1 : t.dim();
  if (m <= 2 * bottom - 2) {
    std::vector<GeneratorSymbol> out;
    for (const auto& s : g.summands) out.push_back(s.gen);
    return out;
  }
  if (m == 6 && t.kind() == Kind::Moore && t.prime() == 2 && t.dim() == 4)
    return {G(Gen::TetaEta, 0, t.exponent())};
  if (m == 6 && t.kind() == Kind::ChangEta && t.dim() == 3) return {};
  if (m == 6 && t.kind() == Kind::Sphere && t.dim() == 3) return {G(Gen::Eta3)};
  if (m == 6 && t.kind() == Kind::ChangR && t.dim() == 3) return {G(Gen::IPTetaEta, 0, t.exponent())};
  unsupported(m, t);
}

}  // namespace suspsplit
