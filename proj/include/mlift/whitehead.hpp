#pragma once

// Whitehead's algorithm on multiwords: greedy length descent over type-II
// Whitehead automorphisms, disk-busting detection via connectivity and cut
// vertices of the Whitehead graph, and homology classes of disjoint disks
// pulled back through the minimization trace.

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mlift/word.hpp"

namespace mlift {

// letters encoded as vertices 0..2r-1: v = 2*gen + (sign<0)
inline int letter_vertex(const Letter& l) { return 2 * l.gen + (l.sign < 0); }
inline int vertex_inverse(int v) { return v ^ 1; }
inline Letter vertex_letter(int v) { return Letter{v / 2, (v & 1) ? -1 : 1}; }

class Multiword {
 public:
  Multiword() = default;
  Multiword(int rank, std::vector<CyclicWord> elements)
      : rank_(rank), elements_(std::move(elements)) {
    for (const CyclicWord& w : elements_) {
      if (w.empty())
        throw std::invalid_argument("Multiword: empty element");
      check_rank(w.letters(), rank_, "Multiword");
    }
    std::sort(elements_.begin(), elements_.end());
  }

  int rank() const { return rank_; }
  const std::vector<CyclicWord>& elements() const { return elements_; }
  std::size_t total_length() const {
    std::size_t n = 0;
    for (const CyclicWord& w : elements_) n += w.size();
    return n;
  }
  friend bool operator==(const Multiword& a, const Multiword& b) {
    return a.rank_ == b.rank_ && a.elements_ == b.elements_;
  }

 private:
  int rank_ = 0;
  std::vector<CyclicWord> elements_;
};

struct WhiteheadGraph {
  int rank = 0;
  // symmetric edge multiplicity matrix over 2*rank letter vertices
  std::vector<std::vector<int>> adj;
  std::vector<int> degree;

  explicit WhiteheadGraph(const Multiword& mw)
      : rank(mw.rank()),
        adj(2 * mw.rank(), std::vector<int>(2 * mw.rank(), 0)),
        degree(2 * mw.rank(), 0) {
    for (const CyclicWord& w : mw.elements()) {
      std::size_t n = w.size();
      for (std::size_t i = 0; i < n; ++i) {
        int u = letter_vertex(w[i]);
        int v = vertex_inverse(letter_vertex(w[(i + 1) % n]));
        adj[u][v]++;
        if (u != v) adj[v][u]++;
        degree[u]++;
        degree[v]++;
      }
    }
  }

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (int d : degree) e += d;
    return e / 2;
  }

  // generators with no occurrence anywhere
  std::vector<int> missing_generators() const {
    std::vector<int> out;
    for (int g = 0; g < rank; ++g)
      if (degree[2 * g] == 0 && degree[2 * g + 1] == 0) out.push_back(g);
    return out;
  }

  bool connected(int skip_vertex = -1) const {
    int n = 2 * rank;
    std::vector<int> seen(n, 0);
    int start = -1;
    for (int v = 0; v < n; ++v)
      if (v != skip_vertex) {
        start = v;
        break;
      }
    if (start < 0) return true;
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (v != skip_vertex && !seen[v] && adj[u][v] > 0) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    for (int v = 0; v < n; ++v)
      if (v != skip_vertex && !seen[v]) return false;
    return true;
  }

  // least cut vertex, or -1 (assumes the graph is connected)
  int cut_vertex() const {
    for (int v = 0; v < 2 * rank; ++v)
      if (!connected(v)) return v;
    return -1;
  }

  // connected components of the graph minus skip_vertex, as vertex lists
  std::vector<std::vector<int>> components(int skip_vertex = -1) const {
    int n = 2 * rank;
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
      if (s == skip_vertex || comp[s] >= 0) continue;
      std::vector<int> stack{s}, verts;
      comp[s] = static_cast<int>(out.size());
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        verts.push_back(u);
        for (int v = 0; v < n; ++v)
          if (v != skip_vertex && comp[v] < 0 && adj[u][v] > 0) {
            comp[v] = comp[s];
            stack.push_back(v);
          }
      }
      std::sort(verts.begin(), verts.end());
      out.push_back(std::move(verts));
    }
    return out;
  }
};

inline WhiteheadGraph whitehead_graph(const Multiword& mw) {
  return WhiteheadGraph(mw);
}

// A Whitehead automorphism. Type I: signed generator permutation.
// Type II: multiplier letter a with letter set A, a in A, a^-1 not in A.
struct WhiteheadMove {
  enum Kind { TypeI, TypeII };
  Kind kind = TypeII;
  int rank = 0;
  // type I: image vertex of each positive generator letter
  std::vector<int> perm;
  // type II
  int multiplier = 0;       // letter vertex a
  std::uint32_t mask = 0;      // bitmask of letter vertices in A

  static WhiteheadMove type1(int rank, std::vector<int> perm_) {
    WhiteheadMove m;
    m.kind = TypeI;
    m.rank = rank;
    m.perm = std::move(perm_);
    return m;
  }
  static WhiteheadMove type2(int rank, int a, std::uint32_t A) {
    WhiteheadMove m;
    m.kind = TypeII;
    m.rank = rank;
    m.multiplier = a;
    m.mask = A;
    if (!(A & (1u << a)) || (A & (1u << vertex_inverse(a))))
      throw std::invalid_argument("WhiteheadMove: need a in A, a^-1 not in A");
    return m;
  }

  Substitution substitution() const {
    if (kind == TypeI) {
      std::vector<Word> im, inv(rank);
      for (int g = 0; g < rank; ++g) im.push_back(Word({vertex_letter(perm[g])}));
      for (int g = 0; g < rank; ++g) {
        Letter l = vertex_letter(perm[g]);
        inv[l.gen] = Word({Letter{g, l.sign}});
      }
      return Substitution::automorphism(rank, im, inv);
    }
    Letter a = vertex_letter(multiplier);
    std::vector<Word> im, inv;
    for (int g = 0; g < rank; ++g) {
      bool pos_in = mask & (1u << (2 * g));
      bool neg_in = mask & (1u << (2 * g + 1));
      if (g == a.gen) {
        im.push_back(Word({Letter{g, 1}}));
        inv.push_back(Word({Letter{g, 1}}));
        continue;
      }
      LetterSeq w, wi;
      if (neg_in) {
        w.push_back(a.inverse());
        wi.push_back(a.inverse());
      }
      w.push_back(Letter{g, 1});
      wi.push_back(Letter{g, 1});
      if (pos_in) {
        w.push_back(a);
        wi.push_back(a);
      }
      // inverse move multiplies by a^-1 on the same sides
      for (Letter& l : wi)
        if (l.gen == a.gen) l.sign = -l.sign;
      im.push_back(Word(std::move(w)));
      inv.push_back(Word(std::move(wi)));
    }
    return Substitution::automorphism(rank, im, inv);
  }

  WhiteheadMove inverse() const {
    if (kind == TypeI) {
      std::vector<int> p(rank);
      for (int g = 0; g < rank; ++g) {
        Letter l = vertex_letter(perm[g]);
        p[l.gen] = 2 * g + (l.sign < 0);
      }
      return type1(rank, std::move(p));
    }
    // (A, a)^-1 = conjugate of (A', a^-1) with A' = (A \ {a}) u {a^-1}
    WhiteheadMove m = *this;
    m.multiplier = vertex_inverse(multiplier);
    m.mask &= ~(1u << multiplier);
    m.mask |= 1u << m.multiplier;
    return m;
  }
};

inline Multiword apply(const WhiteheadMove& m, const Multiword& w) {
  Substitution s = m.substitution();
  std::vector<CyclicWord> out;
  for (const CyclicWord& e : w.elements()) out.push_back(s.apply(e));
  return Multiword(w.rank(), std::move(out));
}

// all candidate type-II moves for a given rank, in tie-break order
inline std::vector<WhiteheadMove> all_type2_moves(int rank) {
  std::vector<WhiteheadMove> out;
  int n = 2 * rank;
  for (int a = 0; a < n; ++a) {
    std::vector<int> free;
    for (int v = 0; v < n; ++v)
      if (v != a && v != vertex_inverse(a)) free.push_back(v);
    std::uint32_t subsets = 1u << free.size();
    for (std::uint32_t s = 0; s < subsets; ++s) {
      std::uint32_t A = 1u << a;
      for (std::size_t i = 0; i < free.size(); ++i)
        if (s & (1u << i)) A |= 1u << free[i];
      out.push_back(WhiteheadMove::type2(rank, a, A));
    }
  }
  return out;
}

// cyclic length change of (A, a) computed from the Whitehead graph:
// edges crossing A against its complement, minus the degree of a
inline long long move_length_delta(const WhiteheadGraph& g,
                                   const WhiteheadMove& m) {
  long long crossing = 0;
  int n = 2 * g.rank;
  for (int u = 0; u < n; ++u) {
    if (!(m.mask & (1u << u))) continue;
    for (int v = 0; v < n; ++v)
      if (!(m.mask & (1u << v))) crossing += g.adj[u][v];
  }
  return crossing - g.degree[m.multiplier];
}

struct MinimizationTrace {
  std::vector<WhiteheadMove> moves;
  std::vector<std::size_t> lengths;  // multiword length after each move
  Multiword minimized;
};

// greedy descent: repeatedly apply the best strictly length-decreasing
// type-II move; by peak reduction the result has globally minimal length
inline MinimizationTrace minimize(const Multiword& start) {
  MinimizationTrace trace;
  Multiword cur = start;
  std::vector<WhiteheadMove> moves = all_type2_moves(start.rank());
  for (;;) {
    WhiteheadGraph g(cur);
    long long best = 0;
    const WhiteheadMove* pick = nullptr;
    for (const WhiteheadMove& m : moves) {
      long long d = move_length_delta(g, m);
      if (d < best) {
        best = d;
        pick = &m;
      }
    }
    if (!pick) break;
    Multiword next = apply(*pick, cur);
    if (next.total_length() != cur.total_length() + best)
      throw std::logic_error("minimize: length formula disagrees with apply");
    cur = std::move(next);
    trace.moves.push_back(*pick);
    trace.lengths.push_back(cur.total_length());
  }
  trace.minimized = std::move(cur);
  return trace;
}

struct DiskWitness {
  enum Kind { MissingGenerator, DisconnectedGraph, CutVertex };
  Kind kind = MissingGenerator;
  int generator = -1;  // the missing generator, for kind MissingGenerator
  // boundary class of the certified disk in the kernel lattice of the
  // minimized configuration; absent for separating certificates
  std::optional<AbelianVector> disk_class;
};

struct DiskBustingResult {
  bool diskbusting = false;
  MinimizationTrace trace;
  std::optional<DiskWitness> witness;
};

// transports a kernel-lattice vector backwards through trace moves:
// each forward move with abelianization matrix M acts on disk classes by
// M^-T, so the pullback through the whole trace is the product of M^T
inline AbelianVector pull_back_disk_class(
    const std::vector<WhiteheadMove>& moves, AbelianVector cls) {
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
    std::vector<AbelianVector> cols = it->substitution().matrix();
    int r = static_cast<int>(cls.size());
    AbelianVector out(r, 0);
    for (int j = 0; j < r; ++j)  // out = M^T * cls
      for (int i = 0; i < r; ++i) out[j] += cols[j][i] * cls[i];
    cls = std::move(out);
  }
  return cls;
}

inline AbelianVector witness_disk_class(const MinimizationTrace& trace,
                                        const DiskWitness& w);

inline DiskBustingResult is_diskbusting(const Multiword& mw) {
  DiskBustingResult res;
  res.trace = minimize(mw);
  int guard = static_cast<int>(mw.total_length()) + 4;
  for (;;) {
    if (--guard < 0)
      throw std::logic_error("is_diskbusting: cut-vertex loop did not settle");
    const Multiword& cur = res.trace.minimized;
    WhiteheadGraph g(cur);
    auto missing = g.missing_generators();
    if (!missing.empty()) {
      DiskWitness w;
      w.kind = DiskWitness::MissingGenerator;
      w.generator = missing.front();
      res.witness = std::move(w);
      res.witness->disk_class = witness_disk_class(res.trace, *res.witness);
      return res;
    }
    if (!g.connected()) {
      // disjoint curves on both sides of a splitting: the certified disk
      // separates and carries no primitive class
      DiskWitness w;
      w.kind = DiskWitness::DisconnectedGraph;
      res.witness = std::move(w);
      return res;
    }
    int cv = g.cut_vertex();
    if (cv < 0) {
      res.diskbusting = true;
      return res;
    }
    // cut vertex: apply the lobe move at cv and re-minimize. At minimal
    // length this cannot happen (the lobe move strictly shortens), so the
    // branch only guards against descent gaps.
    auto comps = g.components(cv);
    const std::vector<int>* lobe = nullptr;
    for (const auto& c : comps) {
      if (std::find(c.begin(), c.end(), vertex_inverse(cv)) == c.end()) {
        lobe = &c;
        break;
      }
    }
    if (!lobe) throw std::logic_error("is_diskbusting: cut vertex without lobe");
    std::uint32_t A = 1u << cv;
    for (int v : *lobe) A |= 1u << v;
    WhiteheadMove m = WhiteheadMove::type2(cur.rank(), cv, A);
    Multiword next = apply(m, cur);
    if (next.total_length() > cur.total_length())
      throw std::logic_error("is_diskbusting: lobe move increased length");
    res.trace.moves.push_back(m);
    res.trace.lengths.push_back(next.total_length());
    MinimizationTrace more = minimize(next);
    for (std::size_t i = 0; i < more.moves.size(); ++i) {
      res.trace.moves.push_back(more.moves[i]);
      res.trace.lengths.push_back(more.lengths[i]);
    }
    res.trace.minimized = std::move(more.minimized);
  }
}

inline AbelianVector witness_disk_class(const MinimizationTrace& trace,
                                        const DiskWitness& w) {
  if (w.kind != DiskWitness::MissingGenerator)
    throw std::invalid_argument("witness_disk_class: witness carries no class");
  int rank = trace.minimized.rank();
  if (w.generator < 0 || w.generator >= rank)
    throw std::invalid_argument("witness_disk_class: trace/witness mismatch");
  AbelianVector cls(rank, 0);
  cls[w.generator] = 1;
  AbelianVector v = pull_back_disk_class(trace.moves, std::move(cls));
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g != 1) throw std::logic_error("witness_disk_class: class not primitive");
  return v;
}

// exact rational rank test: true iff disk is outside the span of the curve
// vectors. Vectors live in Q^dim; curves are given as full (a|b) rows.
inline bool independent_of_span(const std::vector<AbelianVector>& curves,
                                const AbelianVector& disk) {
  for (const AbelianVector& c : curves)
    if (c.size() != disk.size())
      throw std::invalid_argument("independent_of_span: dimension mismatch");
  // Bareiss fraction-free elimination; entries stay minor-sized
  auto rank_of = [&](const std::vector<std::vector<__int128>>& input) {
    auto m = input;
    std::size_t rank = 0, cols = disk.size();
    __int128 prev = 1;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
      std::size_t piv = rank;
      while (piv < m.size() && m[piv][c] == 0) ++piv;
      if (piv == m.size()) continue;
      std::swap(m[rank], m[piv]);
      for (std::size_t r = rank + 1; r < m.size(); ++r) {
        for (std::size_t j = c + 1; j < cols; ++j)
          m[r][j] = (m[r][j] * m[rank][c] - m[rank][j] * m[r][c]) / prev;
        m[r][c] = 0;
      }
      prev = m[rank][c];
      ++rank;
    }
    return rank;
  };
  std::vector<std::vector<__int128>> rows;
  for (const AbelianVector& c : curves) rows.emplace_back(c.begin(), c.end());
  std::size_t base = rank_of(rows);
  rows.emplace_back(disk.begin(), disk.end());
  return rank_of(rows) == base + 1;
}

}  // namespace mlift
