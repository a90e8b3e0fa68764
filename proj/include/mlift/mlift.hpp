#pragma once

// Orchestration of the four lift conditions: search for the least certified
// m, thresholds for large cyclic covers, and the full analysis report.

#include <optional>
#include <string>
#include <vector>

#include "mlift/cover.hpp"
#include "mlift/diagram.hpp"
#include "mlift/whitehead.hpp"
#include "mlift/word.hpp"

namespace mlift {

struct Config {
  int max_m = 8;
  int cond4_bound = 8;  // alternative witness disks to try per index
  int jobs = 1;
};

// covers are large for n >= max(m+k-1, 2k-2)
inline long long threshold(int k, int m) {
  if (k < 2 || m < 1) throw std::invalid_argument("threshold: need k>=2, m>=1");
  return std::max<long long>(m + k - 1, 2 * k - 2);
}

enum class Cond4 { Pass, Fail, Undetermined };

struct ConditionResult {
  int m = 0;
  bool cond1 = false;
  bool cond2 = false;
  std::vector<bool> cond3;   // index i-1 holds condition 3 for i in 1..m-1
  std::vector<Cond4> cond4;  // same indexing

  bool passed() const {
    if (!cond1 || !cond2) return false;
    for (bool c : cond3)
      if (!c) return false;
    for (Cond4 c : cond4)
      if (c != Cond4::Pass) return false;
    return true;
  }
  bool blocked_only_by_cond4() const {
    if (!cond1 || !cond2) return false;
    for (bool c : cond3)
      if (!c) return false;
    bool undet = false;
    for (Cond4 c : cond4) {
      if (c == Cond4::Fail) return false;
      if (c == Cond4::Undetermined) undet = true;
    }
    return undet;
  }
};

enum class Status {
  Ok,
  Fibered,
  NotB1One,
  NotRealizable,
  MissingGen,
  MExhausted,
  Cond4Undetermined,
};

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Fibered: return "fibered";
    case Status::NotB1One: return "not-b1-one";
    case Status::NotRealizable: return "not-realizable";
    case Status::MissingGen: return "missing-generator";
    case Status::MExhausted: return "m-exhausted";
    case Status::Cond4Undetermined: return "cond4-undetermined";
  }
  return "?";
}

struct MliftReport {
  std::string name;
  Status status = Status::MExhausted;
  bool b1_ok = false;
  bool geometric = false;
  bool fibered = false;
  int k = 0;  // 0 when unknown
  std::vector<long long> mu;
  std::optional<int> m_found;
  std::optional<long long> n_threshold;
  std::optional<int> surface_genus;  // k - 1
  std::optional<SurgeryBound> surgery;
  std::string surgery_note;  // why the surgery bound is absent, if requested
  std::vector<ConditionResult> conditions;
  long long whitehead_calls = 0;
  std::string normalized_relator;  // text form, for caching and audit
};

namespace detail {

struct CondStats {
  long long whitehead_calls = 0;
};

// deterministic stream of length-preserving relabelings used to hunt for
// alternative witness disks: identity, adjacent swaps, then inversions
inline std::vector<Substitution> relabelings(int rank, int count) {
  std::vector<Substitution> out;
  out.push_back(Substitution::identity(rank));
  for (int g = 0; g + 1 < rank && static_cast<int>(out.size()) < count; ++g)
    out.push_back(nielsen_swap(rank, g, g + 1));
  for (int g = 0; g < rank && static_cast<int>(out.size()) < count; ++g)
    out.push_back(nielsen_invert(rank, g));
  for (int g = 0; g + 2 < rank && static_cast<int>(out.size()) < count; ++g)
    out.push_back(nielsen_swap(rank, g, g + 2));
  return out;
}

inline WhiteheadMove move_of_substitution(const Substitution& s) {
  // type-I wrapper so witness classes can be pulled back through it
  int rank = s.rank();
  std::vector<int> perm(rank);
  for (int g = 0; g < rank; ++g) {
    const Word& im = s.images()[g];
    if (im.size() != 1)
      throw std::invalid_argument("move_of_substitution: not a relabeling");
    perm[g] = letter_vertex(im[0]);
  }
  return WhiteheadMove::type1(rank, perm);
}

}  // namespace detail

// Definition-2 conditions at a given m for a normalized, non-fibered,
// realized presentation. Condition 4 tries the canonical witness first and
// then relabeled re-runs, up to cfg.cond4_bound candidates.
inline ConditionResult check_conditions(const StaggeredRelator& s,
                                        const DiagramHomology& h, int m,
                                        const Config& cfg,
                                        detail::CondStats* stats = nullptr) {
  if (m < 1) throw std::invalid_argument("check_conditions: m >= 1");
  ConditionResult res;
  res.m = m;
  detail::CondStats local;
  detail::CondStats& st = stats ? *stats : local;

  auto busting = [&](const Multiword& w) {
    ++st.whitehead_calls;
    return is_diskbusting(w);
  };

  res.cond1 = busting(Multiword(2, {s.source})).diskbusting;

  int rank = m + s.k - 1;
  CoverPresentation cover = cover_presentation(s, rank);
  res.cond2 = busting(Multiword(rank, cover.relators)).diskbusting;

  for (int i = 1; i <= m - 1; ++i) {
    std::vector<CyclicWord> rest;
    for (int j = 0; j < m; ++j)
      if (j != i - 1) rest.push_back(cover.relators[j]);
    Multiword dropped(rank, rest);
    auto r3 = busting(dropped);
    res.cond3.push_back(!r3.diskbusting);
    if (r3.diskbusting) {
      res.cond4.push_back(Cond4::Fail);
      continue;
    }
    // curves [dE^{i+1}] .. [dE^m] as (a|b) vectors of length 2*rank
    std::vector<AbelianVector> curves;
    for (int j = i + 1; j <= m; ++j) {
      SymplecticClass c = lift_curve_class(h, s, rank, j);
      AbelianVector v = c.a;
      v.insert(v.end(), c.b.begin(), c.b.end());
      curves.push_back(std::move(v));
    }
    Cond4 verdict = Cond4::Undetermined;
    std::vector<AbelianVector> seen;
    for (const Substitution& rel : detail::relabelings(rank, cfg.cond4_bound)) {
      std::vector<CyclicWord> relabeled;
      for (const CyclicWord& w : rest) relabeled.push_back(rel.apply(w));
      auto rr = busting(Multiword(rank, relabeled));
      if (rr.diskbusting || !rr.witness ||
          rr.witness->kind != DiskWitness::MissingGenerator)
        continue;
      AbelianVector cls = witness_disk_class(rr.trace, *rr.witness);
      cls = pull_back_disk_class({detail::move_of_substitution(rel)}, cls);
      if (std::find(seen.begin(), seen.end(), cls) != seen.end()) continue;
      seen.push_back(cls);
      AbelianVector disk(2 * rank, 0);
      for (int t = 0; t < rank; ++t) disk[t] = cls[t];
      if (independent_of_span(curves, disk)) {
        verdict = Cond4::Pass;
        break;
      }
    }
    res.cond4.push_back(verdict);
  }
  return res;
}

inline MliftReport find_min_m(const Presentation& input, const Config& cfg) {
  if (cfg.max_m < 1) throw std::invalid_argument("find_min_m: max_m >= 1");
  MliftReport rep;
  rep.name = input.name;

  bool has_x = false, has_y = false;
  for (const Letter& l : input.relator.letters()) (l.gen ? has_y : has_x) = true;
  if (input.relator.empty() || !has_x || !has_y) {
    rep.status = Status::MissingGen;
    return rep;
  }

  auto phi = compute_phi(input);
  if (!phi) {
    rep.status = Status::NotB1One;
    return rep;
  }
  rep.b1_ok = true;

  auto [norm, sub] = normalize(input, *phi);
  rep.normalized_relator = to_string(norm.relator, 2);

  auto stv = staggered_rewrite(norm.relator);
  if (std::holds_alternative<MissingGenerator>(stv)) {
    rep.status = Status::MissingGen;
    return rep;
  }
  StaggeredRelator s = std::get<StaggeredRelator>(stv);
  rep.k = s.k;
  rep.mu = s.mu;
  rep.surface_genus = s.k - 1;
  rep.fibered = is_fibered(s);

  auto dia = realize(norm.relator);
  rep.geometric = dia.has_value();

  if (rep.fibered) {
    // a fibered 2-handle satisfies no lift condition; skip all of them
    rep.status = Status::Fibered;
    return rep;
  }
  if (!dia) {
    rep.status = Status::NotRealizable;
    return rep;
  }

  DiagramHomology h = make_homology(*dia);
  detail::CondStats stats;
  bool undet_seen = false;
  for (int m = 1; m <= cfg.max_m; ++m) {
    ConditionResult res = check_conditions(s, h, m, cfg, &stats);
    rep.conditions.push_back(res);
    if (res.blocked_only_by_cond4()) undet_seen = true;
    if (res.passed()) {
      rep.m_found = m;
      rep.n_threshold = threshold(s.k, m);
      rep.status = Status::Ok;
      break;
    }
    if (m == 1 && !res.cond1) break;  // condition 1 does not depend on m
  }
  rep.whitehead_calls = stats.whitehead_calls;
  if (!rep.m_found)
    rep.status = undet_seen ? Status::Cond4Undetermined : Status::MExhausted;

  if (rep.m_found && input.meridian && input.longitude) {
    try {
      rep.surgery = surgery_bound(s.k, *rep.m_found, norm);
    } catch (const std::invalid_argument& e) {
      rep.surgery_note = e.what();
    }
  }
  return rep;
}

}  // namespace mlift
