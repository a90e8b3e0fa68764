#pragma once

// Cyclic-cover machinery: the homomorphism phi to Z, basis normalization via
// the Euclidean algorithm, rewriting the relator in the kernel generators
// x_i = x^-i y x^i, width, the Brown fiberedness test, finite-cover relator
// systems, and homology classes of lifted curves.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mlift/diagram.hpp"
#include "mlift/word.hpp"

namespace mlift {

struct PhiData {
  long long phi_x = 0;
  long long phi_y = 0;
  bool b1_ok = false;
};

// The primitive solution of phi . ab(relator) = 0, sign-normalized so the
// first nonzero value is positive. Fails iff the relator abelianization
// vanishes (then b_1 = 2, outside the standing hypothesis b_1 = 1).
inline std::optional<PhiData> compute_phi(const Presentation& p) {
  AbelianVector ab = abelianize(p.relator, 2);
  if (ab[0] == 0 && ab[1] == 0) return std::nullopt;
  long long g = std::gcd(ab[0] < 0 ? -ab[0] : ab[0], ab[1] < 0 ? -ab[1] : ab[1]);
  PhiData phi;
  phi.phi_x = -ab[1] / g;
  phi.phi_y = ab[0] / g;
  if (phi.phi_x < 0 || (phi.phi_x == 0 && phi.phi_y < 0)) {
    phi.phi_x = -phi.phi_x;
    phi.phi_y = -phi.phi_y;
  }
  phi.b1_ok = true;
  return phi;
}

inline long long phi_value(const PhiData& phi, const Word& w) {
  AbelianVector ab = abelianize(w, 2);
  return phi.phi_x * ab[0] + phi.phi_y * ab[1];
}

// Substitutions applied to the relator change phi by the inverse of their
// abelianization matrix acting on the right.
inline PhiData phi_after(const PhiData& phi, const Substitution& s) {
  auto cols = s.matrix();
  long long a = cols[0][0], c = cols[0][1];  // column images
  long long b = cols[1][0], d = cols[1][1];
  long long det = a * d - b * c;
  if (det != 1 && det != -1) throw std::logic_error("phi_after: not unimodular");
  // row vector times inverse of [[a, b], [c, d]]
  long long nx = (phi.phi_x * d - phi.phi_y * c) / det;
  long long ny = (-phi.phi_x * b + phi.phi_y * a) / det;
  return PhiData{nx, ny, phi.b1_ok};
}

// Accumulates elementary substitutions until phi = (1, 0): repeated
// division steps on the pair of phi values, then a swap or sign fix.
inline std::pair<Presentation, Substitution> normalize(const Presentation& p,
                                                       const PhiData& phi0) {
  Substitution total = Substitution::identity(2);
  PhiData phi = phi0;
  auto push = [&](const Substitution& s) {
    total = s.compose(total);
    phi = phi_after(phi, s);
  };
  while (phi.phi_y != 0) {
    if (phi.phi_x == 0) {
      push(nielsen_swap(2, 0, 1));
      continue;
    }
    long long ax = phi.phi_x < 0 ? -phi.phi_x : phi.phi_x;
    long long ay = phi.phi_y < 0 ? -phi.phi_y : phi.phi_y;
    // y -> y x^t with t = q*sign(phi_x)*sign(phi_y) sends phi_y to
    // phi_y - t*phi_x (and symmetrically for x); this is one division step
    int e = (phi.phi_x > 0) == (phi.phi_y > 0) ? 1 : -1;
    if (ay >= ax) {
      long long q = ay / ax;
      std::vector<Word> im = {
          Word({Letter{0, 1}}),
          Word({Letter{1, 1}}) * Word(LetterSeq(static_cast<std::size_t>(q), Letter{0, e}))};
      std::vector<Word> inv = {
          Word({Letter{0, 1}}),
          Word({Letter{1, 1}}) * Word(LetterSeq(static_cast<std::size_t>(q), Letter{0, -e}))};
      push(Substitution::automorphism(2, im, inv));
    } else {
      long long q = ax / ay;
      std::vector<Word> im = {
          Word({Letter{0, 1}}) * Word(LetterSeq(static_cast<std::size_t>(q), Letter{1, e})),
          Word({Letter{1, 1}})};
      std::vector<Word> inv = {
          Word({Letter{0, 1}}) * Word(LetterSeq(static_cast<std::size_t>(q), Letter{1, -e})),
          Word({Letter{1, 1}})};
      push(Substitution::automorphism(2, im, inv));
    }
  }
  if (phi.phi_x < 0) push(nielsen_invert(2, 0));
  if (phi.phi_x != 1)
    throw std::logic_error("normalize: phi did not reduce to (1, 0)");

  Presentation out;
  out.name = p.name;
  out.relator = total.apply(p.relator);
  if (p.meridian) out.meridian = total.apply(*p.meridian);
  if (p.longitude) out.longitude = total.apply(*p.longitude);
  auto check = compute_phi(out);
  if (!check || check->phi_x != 1 || check->phi_y != 0)
    throw std::logic_error("normalize: postcondition phi = (1, 0) failed");
  return {out, total};
}

struct StaggeredRelator {
  CyclicWord source;          // the scanned rank-2 relator
  std::vector<long long> mu;  // y-letter levels, shifted so min = 1
  std::vector<long long> arc_levels;  // running level after each relator letter
  CyclicWord lifted_word;     // on rank k, generator i-1 = level i
  int k = 0;
};

struct MissingGenerator {
  int gen = 0;
};

// Scans the canonical rotation of a normalized relator with a running level
// that increments after x and decrements after x^-1; each y-letter at level
// l emits the kernel generator with index l. Levels are then shifted so the
// least is 1. The width k is asserted against the crossing-index formula
// (each x-step crosses the disk lift indexed by its larger adjacent level).
inline std::variant<StaggeredRelator, MissingGenerator> staggered_rewrite(
    const CyclicWord& relator) {
  bool has_x = false, has_y = false;
  for (const Letter& l : relator.letters()) (l.gen == 0 ? has_x : has_y) = true;
  if (!has_x) return MissingGenerator{0};
  if (!has_y) return MissingGenerator{1};

  long long level = 0;
  std::vector<long long> raw_mu, raw_arc;
  std::vector<long long> crossing_index;
  LetterSeq emitted;
  for (const Letter& l : relator.letters()) {
    if (l.gen == 0) {
      crossing_index.push_back(l.sign > 0 ? level + 1 : level);
      level += l.sign;
    } else {
      raw_mu.push_back(level);
      emitted.push_back(Letter{0, l.sign});  // index fixed after the shift
    }
    raw_arc.push_back(level);
  }
  if (level != 0)
    throw std::invalid_argument("staggered_rewrite: relator not in ker(phi)");

  long long lo = raw_mu[0], hi = raw_mu[0];
  for (long long v : raw_mu) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  long long shift = 1 - lo;
  StaggeredRelator out;
  out.source = relator;
  out.k = static_cast<int>(hi - lo + 1);
  for (long long v : raw_mu) out.mu.push_back(v + shift);
  for (long long v : raw_arc) out.arc_levels.push_back(v + shift);
  for (std::size_t i = 0; i < emitted.size(); ++i)
    emitted[i].gen = static_cast<int>(out.mu[i] - 1);
  Word w = Word::from_reduced(emitted);
  if (Word(w.letters()) != w)
    throw std::logic_error("staggered_rewrite: emitted word not reduced");
  CyclicWord cw(w);
  if (cw.size() != w.size())
    throw std::logic_error("staggered_rewrite: emitted word not cyclically reduced");
  out.lifted_word = cw;

  long long ci_lo = crossing_index[0], ci_hi = crossing_index[0];
  for (long long v : crossing_index) {
    ci_lo = std::min(ci_lo, v);
    ci_hi = std::max(ci_hi, v);
  }
  if (ci_hi - ci_lo + 2 != out.k)
    throw std::logic_error("staggered_rewrite: width formulas disagree");
  return out;
}

inline int width(const StaggeredRelator& s) { return s.k; }

// Brown's criterion: fibered iff the extreme kernel generators each appear
// exactly once in the lifted relator (a repeated minimum or maximum level
// means the kernel of phi is not finitely generated).
inline bool is_fibered(const StaggeredRelator& s) {
  int lo = 0, hi = 0;
  for (const Letter& l : s.lifted_word.letters()) {
    if (l.gen == 0) ++lo;
    if (l.gen == s.k - 1) ++hi;
  }
  return lo == 1 && hi == 1;
}

struct CoverPresentation {
  int n = 0;  // cover degree = rank
  std::vector<CyclicWord> relators;  // relator j is the lift shifted by j
};

inline CoverPresentation cover_presentation(const StaggeredRelator& s, int n) {
  if (n < s.k)
    throw std::invalid_argument("cover_presentation: degree below width");
  CoverPresentation out;
  out.n = n;
  for (int j = 0; j + s.k <= n; ++j) {
    LetterSeq shifted = s.lifted_word.letters();
    for (Letter& l : shifted) l.gen += j;
    out.relators.push_back(CyclicWord(Word::from_reduced(shifted)));
  }
  return out;
}

// Homology class of the j-th lift of the relator curve (1-based, among the
// lifts missing the cut disk) on the genus-n cover surface. The b-part is
// the exponent vector of the shifted relator; the a-part distributes the
// route crossings of the y-dual over levels via the running-level trace.
inline SymplecticClass lift_curve_class(const DiagramHomology& h,
                                        const StaggeredRelator& s, int n, int j) {
  if (j < 1 || j + s.k - 1 > n)
    throw std::invalid_argument("lift_curve_class: lift index out of range");
  if (!(h.diagram.relator == s.source))
    throw std::invalid_argument("lift_curve_class: diagram/rewrite mismatch");
  SymplecticClass cls;
  cls.genus = n;
  cls.a.assign(n, 0);
  cls.b.assign(n, 0);
  const auto& lw = s.lifted_word.letters();
  for (const Letter& l : lw) cls.b[l.gen + (j - 1)] += l.sign;
  if (h.route_y) {
    for (const RouteCrossing& x : h.route_y->crossings) {
      long long lvl = s.arc_levels[x.edge] + (j - 1);
      if (lvl < 1 || lvl > n)
        throw std::logic_error("lift_curve_class: crossing level out of range");
      cls.a[lvl - 1] += x.sign();
    }
  }
  return cls;
}

struct SurgeryBound {
  long long n_min = 0;
  int width_lambda = 0;
  long long b = 0;
  std::string condition;
};

// Theorem-4 threshold from the peripheral data of a normalized presentation:
// n_min = max(m+k-1, 2k-2, width(longitude) + |phi(meridian)|), valid for
// fillings of slope np/q with p >= 2.
inline SurgeryBound surgery_bound(int k, int m, const Presentation& normalized) {
  if (!normalized.meridian || !normalized.longitude)
    throw std::invalid_argument("surgery_bound: peripheral words missing");
  AbelianVector abl = abelianize(*normalized.longitude, 2);
  if (abl[0] != 0)
    throw std::invalid_argument("surgery_bound: longitude has nonzero phi");
  AbelianVector abm = abelianize(*normalized.meridian, 2);
  long long b = abm[0] < 0 ? -abm[0] : abm[0];
  if (b == 0)
    throw std::invalid_argument("surgery_bound: meridian has phi = 0");
  auto st = staggered_rewrite(CyclicWord(*normalized.longitude));
  if (std::holds_alternative<MissingGenerator>(st))
    throw std::invalid_argument("surgery_bound: longitude misses a generator");
  SurgeryBound out;
  out.width_lambda = std::get<StaggeredRelator>(st).k;
  out.b = b;
  out.n_min = std::max<long long>({m + k - 1, 2 * k - 2, out.width_lambda + b});
  out.condition = "M(np/q) virtually Haken for p >= 2, gcd(pn, q) = 1, n >= " +
                  std::to_string(out.n_min);
  return out;
}

}  // namespace mlift
