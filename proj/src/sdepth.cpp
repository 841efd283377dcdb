#include "sqdepth/sdepth.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <unordered_map>

namespace sqd {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t w : v) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct PosetIndex {
  int n = 0;
  const std::vector<Mask>* elems = nullptr;
  std::vector<std::int32_t> index_of;  // mask -> element index, -1 absent

  explicit PosetIndex(const CharPoset& p) : n(p.ambient_n), elems(&p.elements) {
    index_of.assign(std::size_t{1} << n, -1);
    for (std::size_t i = 0; i < p.elements.size(); ++i)
      index_of[p.elements[i]] = static_cast<std::int32_t>(i);
  }
  std::int32_t lookup(Mask m) const { return index_of[m]; }
};

void check_sorted_invariant(CharPoset& p) {
  std::sort(p.elements.begin(), p.elements.end(), [](Mask a, Mask b) {
    return degree(a) != degree(b) ? degree(a) < degree(b) : a < b;
  });
}

// Cover search for a fixed target d.  Elements of cardinality < d are
// assigned intervals with tops of size exactly d; everything of
// cardinality >= d can stand alone as a singleton.  This normal form
// loses no generality: an interval [A,B] with |B| > d splits into
// translates [A|T, B'|T] over T <= B\B' for any d-subset B' >= A.
//
// The search runs level by level.  Two facts pin down the shape of any
// partition: (1) the number of new bottoms per level is forced, because
// an interval with bottom at level a covers exactly C(d-a, s-a) elements
// at level s, so the per-level quotas fall out of triangular elimination;
// (2) an interval's top extension T is already determined by its covered
// elements one level above the bottom (the sets A|{w}, w in T).  So the
// only real decisions are, for each element f at level s, whether f is a
// new bottom or which open interval from level s-1 covers it.  Branching
// on that one-step "parent" assignment (most-constrained element first)
// keeps the branching factor tiny, and every deeper element of a growing
// interval is claimed eagerly, so clashes surface immediately.
//
// Whether the "new bottom" branch should be tried before or after the
// parent branches depends on the instance (bottom-heavy partitions want
// it early, refutations usually close faster with parents first), so the
// search alternates both orders under a node budget that grows 8x per
// round.  The schedule is deterministic and terminates within a small
// factor of whichever order decides the instance first.
class ExactSearch {
 public:
  ExactSearch(const CharPoset& p, int d) : poset_(p), idx_(p), d_(d) {
    const std::size_t count = p.elements.size();
    deg_.reserve(count);
    for (Mask m : p.elements) deg_.push_back(degree(m));
    level_begin_.assign(d_ + 2, 0);
    {
      std::size_t i = 0;
      for (int s = 0; s <= d_ + 1; ++s) {
        while (i < count && deg_[i] < s) ++i;
        level_begin_[s] = i;
      }
    }
    choose_.assign(d_ + 1, std::vector<long long>(d_ + 1, 0));
    for (int i = 0; i <= d_; ++i) {
      choose_[i][0] = 1;
      for (int j = 1; j <= i; ++j)
        choose_[i][j] = choose_[i - 1][j - 1] + (j <= i - 1 ? choose_[i - 1][j] : 0);
    }

    // Forced bottom quota per level, with the infeasible cases (negative
    // quota, or more tops than level-d elements) detected up front.
    std::vector<long long> rem(d_ + 1, 0);
    for (int s = 0; s <= d_; ++s)
      rem[s] = static_cast<long long>(level_begin_[s + 1] - level_begin_[s]);
    quota_.assign(d_ > 0 ? d_ : 0, 0);
    long long tops = 0;
    counts_ok_ = true;
    for (int a = 0; a < d_ && counts_ok_; ++a) {
      if (rem[a] < 0) {
        counts_ok_ = false;
        break;
      }
      quota_[a] = rem[a];
      tops += rem[a];
      for (int s = a + 1; s < d_; ++s) rem[s] -= rem[a] * choose_[d_ - a][s - a];
    }
    if (counts_ok_ && tops > rem[d_]) counts_ok_ = false;
  }

  bool run(std::vector<Interval>& out) {
    const std::size_t count = poset_.elements.size();
    if (level_begin_[d_] == 0) {
      // Nothing of cardinality < d: all singletons.
      for (Mask m : poset_.elements) out.push_back({m, m});
      return true;
    }
    if (!counts_ok_) return false;
    bool solved = false;
    for (long long budget = 20000;; budget *= 8) {
      for (int order = 0; order < 2; ++order) {
        bottom_first_ = order == 1;
        budget_ = budget;
        nodes_ = 0;
        aborted_ = false;
        state_.assign(count, kFuture);
        bottoms_used_.assign(d_, 0);
        parents_.clear();
        solved = solve_level(deg_[0]);
        if (solved || !aborted_) break;
      }
      if (solved || !aborted_) break;
    }
    if (!solved) return false;
    for (const Parent& par : parents_) out.push_back({par.bottom, par.bottom | par.ext});
    for (std::size_t e = 0; e < count; ++e)
      if (state_[e] == kFuture) out.push_back({poset_.elements[e], poset_.elements[e]});
    return true;
  }

 private:
  enum State : unsigned char { kFuture, kClaimed, kChild, kBottom };

  struct Parent {
    Mask bottom = 0;
    Mask ext = 0;  // top extension chosen so far; top = bottom | ext
    int level = 0;
    int need = 0;  // children still missing one level up
  };

  // Claim every deeper element the new child forces: A|S|{w} for all
  // nonempty S <= ext.  Fails (and unwinds) if any such set is missing
  // from the poset or already spoken for.
  bool claim_child_cube(const Parent& par, Mask wbit, std::vector<std::size_t>& claimed) {
    for (Mask S = par.ext; S != 0; S = (S - 1) & par.ext) {
      const std::int32_t j = idx_.lookup(par.bottom | S | wbit);
      if (j < 0 || state_[j] != kFuture) {
        for (std::size_t u : claimed) state_[u] = kFuture;
        claimed.clear();
        return false;
      }
      state_[j] = kClaimed;
      claimed.push_back(static_cast<std::size_t>(j));
    }
    return true;
  }

  // Indices of parents open for children at level s (bottom at s-1).
  void open_parents(int s, std::vector<std::size_t>& out) const {
    out.clear();
    for (std::size_t i = 0; i < parents_.size(); ++i)
      if (parents_[i].level == s - 1 && parents_[i].need > 0) out.push_back(i);
  }

  // Options for element f: open parents P with f = bottom(P) | {w} whose
  // forced claims do not clash.
  void parent_options(Mask f, const std::vector<std::size_t>& open,
                      std::vector<std::size_t>& out) {
    out.clear();
    for (std::size_t i : open) {
      const Mask extra = f & ~parents_[i].bottom;
      if ((parents_[i].bottom & ~f) != 0 || extra == 0 || (extra & (extra - 1)) != 0)
        continue;
      std::vector<std::size_t> claimed;
      if (claim_child_cube(parents_[i], extra, claimed)) {
        for (std::size_t u : claimed) state_[u] = kFuture;
        out.push_back(i);
      }
    }
  }

  bool solve_level(int s) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    if (s == d_) return assign_tops();

    std::vector<std::size_t> open;
    open_parents(s, open);

    // A starving parent (fewer candidate children than it still needs)
    // refutes the whole branch.
    for (std::size_t i : open) {
      int avail = 0;
      for (int b = 0; b < idx_.n; ++b) {
        const Mask bit = Mask{1} << b;
        if (parents_[i].bottom & bit) continue;
        const std::int32_t j = idx_.lookup(parents_[i].bottom | bit);
        if (j >= 0 && state_[j] == kFuture) ++avail;
      }
      if (avail < parents_[i].need) return false;
    }

    // Most-constrained undecided element at this level.
    const std::size_t lo = level_begin_[s], hi = level_begin_[s + 1];
    std::size_t best = hi;
    std::size_t best_cnt = SIZE_MAX;
    std::vector<std::size_t> best_opts, opts;
    bool best_bottom_ok = false;
    const bool quota_left = bottoms_used_[s] < quota_[s];
    for (std::size_t e = lo; e < hi; ++e) {
      if (state_[e] != kFuture) continue;
      parent_options(poset_.elements[e], open, opts);
      const std::size_t cnt = opts.size() + (quota_left ? 1 : 0);
      if (cnt == 0) return false;
      if (cnt < best_cnt) {
        best = e;
        best_cnt = cnt;
        best_opts = opts;
        best_bottom_ok = quota_left;
        if (cnt == 1) break;
      }
    }
    if (best == hi) {
      // Level complete: every parent from s-1 must be full.
      for (std::size_t i : open)
        if (parents_[i].need > 0) return false;
      return solve_level(s + 1);
    }

    const Mask f = poset_.elements[best];
    const auto try_bottom = [&]() {
      if (!best_bottom_ok) return false;
      state_[best] = kBottom;
      ++bottoms_used_[s];
      parents_.push_back({f, 0, s, d_ - s});
      if (solve_level(s)) return true;
      parents_.pop_back();
      --bottoms_used_[s];
      state_[best] = kFuture;
      return false;
    };
    const auto try_parents = [&]() {
      for (std::size_t i : best_opts) {
        const Mask wbit = f & ~parents_[i].bottom;
        std::vector<std::size_t> claimed;
        if (!claim_child_cube(parents_[i], wbit, claimed)) continue;
        state_[best] = kChild;
        parents_[i].ext |= wbit;
        --parents_[i].need;
        if (solve_level(s)) return true;
        ++parents_[i].need;
        parents_[i].ext &= ~wbit;
        state_[best] = kFuture;
        for (std::size_t u : claimed) state_[u] = kFuture;
        if (aborted_) break;
      }
      return false;
    };
    if (bottom_first_) {
      if (try_bottom()) return true;
      if (!aborted_ && try_parents()) return true;
    } else {
      if (try_parents()) return true;
      if (!aborted_ && try_bottom()) return true;
    }
    return false;
  }

  // Bottoms at level d-1 still need their single-element top extension;
  // distinct parents must claim distinct level-d elements.
  bool assign_tops() {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    std::size_t best = parents_.size();
    std::size_t best_cnt = SIZE_MAX;
    for (std::size_t i = 0; i < parents_.size(); ++i) {
      if (parents_[i].need == 0) continue;
      std::size_t cnt = 0;
      for (int b = 0; b < idx_.n; ++b) {
        const Mask bit = Mask{1} << b;
        if ((parents_[i].bottom | parents_[i].ext) & bit) continue;
        const std::int32_t j = idx_.lookup(parents_[i].bottom | parents_[i].ext | bit);
        if (j >= 0 && state_[j] == kFuture) ++cnt;
      }
      if (cnt == 0) return false;
      if (cnt < best_cnt) {
        best = i;
        best_cnt = cnt;
        if (cnt == 1) break;
      }
    }
    if (best == parents_.size()) return true;
    Parent& par = parents_[best];
    for (int b = 0; b < idx_.n; ++b) {
      const Mask bit = Mask{1} << b;
      if ((par.bottom | par.ext) & bit) continue;
      const std::int32_t j = idx_.lookup(par.bottom | par.ext | bit);
      if (j < 0 || state_[j] != kFuture) continue;
      state_[j] = kClaimed;
      par.ext |= bit;
      --par.need;
      if (assign_tops()) return true;
      ++par.need;
      par.ext &= ~bit;
      state_[j] = kFuture;
      if (aborted_) break;
    }
    return false;
  }

  const CharPoset& poset_;
  PosetIndex idx_;
  int d_;
  std::vector<int> deg_;
  std::vector<std::size_t> level_begin_;
  std::vector<std::vector<long long>> choose_;
  std::vector<long long> quota_;
  std::vector<int> bottoms_used_;
  std::vector<State> state_;
  std::vector<Parent> parents_;
  bool counts_ok_ = false;
  bool bottom_first_ = false;
  bool aborted_ = false;
  long long budget_ = 0;
  long long nodes_ = 0;
};

void reject_degenerate(const CharPoset& p) {
  if (!p.empty()) return;
  switch (p.kind) {
    case PosetKind::quotient:
      throw std::invalid_argument("sdepth undefined: quotient poset of the unit ideal is empty");
    case PosetKind::ideal:
      throw std::invalid_argument("sdepth undefined: ideal poset of the zero ideal is empty");
    case PosetKind::pair:
      throw std::invalid_argument("sdepth undefined: pair poset with J = I is empty");
  }
  throw std::invalid_argument("empty poset");
}

}  // namespace

int IntervalPartition::value() const {
  if (intervals.empty()) return -1;
  int v = INT_MAX;
  for (const Interval& iv : intervals) v = std::min(v, degree(iv.top));
  return v;
}

CharPoset char_poset(PosetKind kind, const MonomialIdeal& I,
                     const MonomialIdeal* J, std::size_t cap) {
  const int n = I.ambient_n();
  if ((std::size_t{1} << n) > cap)
    throw std::invalid_argument("poset would exceed the element cap");
  if (kind == PosetKind::pair) {
    if (J == nullptr) throw std::invalid_argument("pair kind needs J");
    if (J->ambient_n() != n) throw std::invalid_argument("ambient mismatch for pair poset");
    for (Mask g : I.gens())
      if (!J->contains(g)) throw std::invalid_argument("pair kind requires I contained in J");
  } else if (J != nullptr) {
    throw std::invalid_argument("J is only meaningful for the pair kind");
  }

  CharPoset p;
  p.ambient_n = n;
  p.kind = kind;
  const Mask fm = full_mask(n);
  for (Mask m = 0;; ++m) {
    bool in = false;
    switch (kind) {
      case PosetKind::quotient: in = !I.contains(m); break;
      case PosetKind::ideal: in = I.contains(m); break;
      case PosetKind::pair: in = J->contains(m) && !I.contains(m); break;
    }
    if (in) p.elements.push_back(m);
    if (m == fm) break;
  }
  check_sorted_invariant(p);
  return p;
}

SdepthResult sdepth_exact(const CharPoset& p) {
  reject_degenerate(p);
  const int hi = degree(p.elements.back());

  SdepthResult result;
  result.method = SdepthMethod::branch_and_bound;
  // Ascending scan: d = 0 always succeeds (all singletons); stop at the
  // first infeasible target.
  for (int d = 0; d <= hi; ++d) {
    ExactSearch search(p, d);
    std::vector<Interval> intervals;
    if (!search.run(intervals)) break;
    result.value = d;
    result.certificate.intervals = std::move(intervals);
  }
  // Report the true min top size; it matches the feasibility level.
  result.value = result.certificate.value();
  return result;
}

namespace {

class OracleSearch {
 public:
  explicit OracleSearch(const CharPoset& p)
      : poset_(p), idx_(p), words_((p.elements.size() + 63) / 64) {}

  SdepthResult run() {
    std::vector<std::uint64_t> covered(words_, 0);
    const int value = best(covered);
    SdepthResult result;
    result.method = SdepthMethod::oracle;
    result.value = value;
    std::vector<Interval> intervals;
    if (!replay(covered, value, intervals))
      throw std::logic_error("oracle failed to reconstruct an optimal partition");
    result.certificate.intervals = std::move(intervals);
    result.value = result.certificate.value();
    return result;
  }

 private:
  static bool covered_bit(const std::vector<std::uint64_t>& c, std::size_t e) {
    return c[e >> 6] >> (e & 63) & 1;
  }

  std::size_t first_uncovered(const std::vector<std::uint64_t>& c) const {
    for (std::size_t e = 0; e < poset_.elements.size(); ++e)
      if (!covered_bit(c, e)) return e;
    return poset_.elements.size();
  }

  // All element indices of [sigma, top], or empty if the interval leaves
  // the poset or hits covered ground.
  bool interval_members(const std::vector<std::uint64_t>& c, Mask sigma, Mask top,
                        std::vector<std::size_t>& members) const {
    members.clear();
    const Mask extra = top & ~sigma;
    Mask sub = extra;
    while (true) {
      const std::int32_t j = idx_.lookup(sigma | sub);
      if (j < 0 || covered_bit(c, static_cast<std::size_t>(j))) return false;
      members.push_back(static_cast<std::size_t>(j));
      if (sub == 0) break;
      sub = (sub - 1) & extra;
    }
    return true;
  }

  std::vector<Mask> candidate_tops(Mask sigma) const {
    const Mask comp = full_mask(idx_.n) & ~sigma;
    std::vector<Mask> tops;
    Mask sub = comp;
    while (true) {
      tops.push_back(sigma | sub);
      if (sub == 0) break;
      sub = (sub - 1) & comp;
    }
    std::sort(tops.begin(), tops.end());
    return tops;
  }

  // Max over interval partitions of the uncovered remainder of the min
  // top size; INT_MAX for the empty remainder.
  int best(std::vector<std::uint64_t>& covered) {
    const std::size_t e = first_uncovered(covered);
    if (e == poset_.elements.size()) return INT_MAX;
    auto it = memo_.find(covered);
    if (it != memo_.end()) return it->second;

    const Mask sigma = poset_.elements[e];
    int value = -1;
    std::vector<std::size_t> members;
    for (Mask top : candidate_tops(sigma)) {
      if (!interval_members(covered, sigma, top, members)) continue;
      for (std::size_t m : members) covered[m >> 6] |= std::uint64_t{1} << (m & 63);
      value = std::max(value, std::min(degree(top), best(covered)));
      for (std::size_t m : members) covered[m >> 6] &= ~(std::uint64_t{1} << (m & 63));
    }
    memo_[covered] = value;
    return value;
  }

  bool replay(std::vector<std::uint64_t>& covered, int target,
              std::vector<Interval>& out) {
    const std::size_t e = first_uncovered(covered);
    if (e == poset_.elements.size()) return true;
    const Mask sigma = poset_.elements[e];
    std::vector<std::size_t> members;
    for (Mask top : candidate_tops(sigma)) {
      if (degree(top) < target) continue;
      if (!interval_members(covered, sigma, top, members)) continue;
      for (std::size_t m : members) covered[m >> 6] |= std::uint64_t{1} << (m & 63);
      if (best(covered) >= target) {
        out.push_back({sigma, top});
        if (replay(covered, target, out)) return true;
        out.pop_back();
      }
      for (std::size_t m : members) covered[m >> 6] &= ~(std::uint64_t{1} << (m & 63));
    }
    return false;
  }

  const CharPoset& poset_;
  PosetIndex idx_;
  std::size_t words_;
  std::unordered_map<std::vector<std::uint64_t>, int, VecHash> memo_;
};

}  // namespace

SdepthResult sdepth_oracle(const CharPoset& p, std::size_t cap) {
  reject_degenerate(p);
  if (p.elements.size() > cap)
    throw std::invalid_argument("poset too large for the exhaustive oracle");
  return OracleSearch(p).run();
}

bool validate_partition(const CharPoset& p, const IntervalPartition& pi) {
  PosetIndex idx(p);
  std::vector<char> seen(p.elements.size(), 0);
  for (const Interval& iv : pi.intervals) {
    if (iv.bottom & ~iv.top) return false;
    const Mask extra = iv.top & ~iv.bottom;
    Mask sub = extra;
    while (true) {
      const Mask m = iv.bottom | sub;
      if (m & ~full_mask(p.ambient_n)) return false;
      const std::int32_t j = idx.lookup(m);
      if (j < 0 || seen[j]) return false;
      seen[j] = 1;
      if (sub == 0) break;
      sub = (sub - 1) & extra;
    }
  }
  for (char s : seen)
    if (!s) return false;
  return true;
}

}  // namespace sqd
