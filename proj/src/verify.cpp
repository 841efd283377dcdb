#include "sqdepth/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sqdepth/graphpower.hpp"
#include "sqdepth/homology.hpp"

namespace sqd {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

MonomialIdeal path_ideal(int n, int k) {
  return edge_ideal(build_power_graph({Family::path, n, k}));
}

MonomialIdeal cycle_ideal(int n, int k) {
  return edge_ideal(build_power_graph({Family::cycle, n, k}));
}

Mask range_mask(int lo, int hi) {
  Mask m = 0;
  for (int v = lo; v <= hi; ++v) m |= var_bit(v);
  return m;
}

ClaimCheck make_eq(std::string id, int n, int k, int i, int expected, int observed) {
  ClaimCheck c;
  c.claim_id = std::move(id);
  c.n = n;
  c.k = k;
  c.i = i;
  c.expected = "=" + std::to_string(expected);
  c.observed = std::to_string(observed);
  c.status = observed == expected ? ClaimStatus::pass : ClaimStatus::fail;
  return c;
}

ClaimCheck make_bound(std::string id, int n, int k, int i, int lo, int hi, int observed) {
  ClaimCheck c;
  c.claim_id = std::move(id);
  c.n = n;
  c.k = k;
  c.i = i;
  c.expected = "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
  c.observed = std::to_string(observed);
  c.status = (lo <= observed && observed <= hi) ? ClaimStatus::pass : ClaimStatus::fail;
  return c;
}

ClaimCheck make_ge(std::string id, int n, int k, int i, int bound, int observed) {
  ClaimCheck c;
  c.claim_id = std::move(id);
  c.n = n;
  c.k = k;
  c.i = i;
  c.expected = ">=" + std::to_string(bound);
  c.observed = std::to_string(observed);
  c.status = observed >= bound ? ClaimStatus::pass : ClaimStatus::fail;
  return c;
}

ClaimCheck make_bool(std::string id, int n, int k, int i, bool holds) {
  ClaimCheck c;
  c.claim_id = std::move(id);
  c.n = n;
  c.k = k;
  c.i = i;
  c.expected = "true";
  c.observed = holds ? "true" : "false";
  c.status = holds ? ClaimStatus::pass : ClaimStatus::fail;
  return c;
}

ClaimCheck make_skipped(std::string id, int n, int k, int i, std::string reason) {
  ClaimCheck c;
  c.claim_id = std::move(id);
  c.n = n;
  c.k = k;
  c.i = i;
  c.status = ClaimStatus::skipped;
  c.reason = std::move(reason);
  return c;
}

bool poset_fits(int n, std::size_t cap) { return (std::size_t{1} << n) <= cap && n <= 20; }

int sdepth_value(PosetKind kind, const MonomialIdeal& I, const MonomialIdeal* J,
                 std::size_t cap) {
  return sdepth_exact(char_poset(kind, I, J, cap)).value;
}

}  // namespace

std::vector<ClaimCheck> verify_path_theorems(const VerifyOptions& opt) {
  std::vector<ClaimCheck> out;
  for (int k = 1; k <= opt.k_max; ++k) {
    for (int n = 2; n <= opt.n_max_depth; ++n) {
      const int expected = ceil_div(n, 2 * k + 1);
      out.push_back(make_eq("path-depth", n, k, -1, expected,
                            depth_quotient(path_ideal(n, k), opt.field)));
    }
    for (int n = 2; n <= opt.n_max_sdepth; ++n) {
      const int expected = ceil_div(n, 2 * k + 1);
      if (!poset_fits(n, opt.poset_cap)) {
        out.push_back(make_skipped("path-sdepth", n, k, -1, "poset cap exceeded"));
        continue;
      }
      out.push_back(make_eq("path-sdepth", n, k, -1, expected,
                            sdepth_value(PosetKind::quotient, path_ideal(n, k), nullptr,
                                         opt.poset_cap)));
    }
  }
  return out;
}

std::vector<ClaimCheck> verify_cycle_results(const VerifyOptions& opt) {
  std::vector<ClaimCheck> out;
  auto emit = [&](const char* id, int n, int k, int observed) {
    const int m = 2 * k + 1;
    const int c = ceil_div(n, m);
    if (n <= m) {
      out.push_back(make_eq(id, n, k, -1, 1, observed));
      return;
    }
    const int r = n % m;
    if (r == 0 || r >= k + 1)
      out.push_back(make_eq(id, n, k, -1, c, observed));
    else
      out.push_back(make_bound(id, n, k, -1, c - 1, c, observed));
  };
  for (int k = 1; k <= opt.k_max; ++k) {
    for (int n = 3; n <= opt.n_max_depth; ++n)
      emit("cycle-depth", n, k, depth_quotient(cycle_ideal(n, k), opt.field));
    for (int n = 3; n <= opt.n_max_sdepth; ++n) {
      if (!poset_fits(n, opt.poset_cap)) {
        out.push_back(make_skipped("cycle-sdepth", n, k, -1, "poset cap exceeded"));
        continue;
      }
      emit("cycle-sdepth", n, k,
           sdepth_value(PosetKind::quotient, cycle_ideal(n, k), nullptr, opt.poset_cap));
    }
  }
  return out;
}

std::vector<ClaimCheck> verify_ideal_bounds(const VerifyOptions& opt) {
  std::vector<ClaimCheck> out;
  const int n_max = opt.n_max_ideal;
  for (int k = 1; k <= opt.k_max; ++k) {
    const int m = 2 * k + 1;
    for (int n = 2; n <= n_max; ++n) {
      if (!poset_fits(n, opt.poset_cap)) {
        out.push_back(make_skipped("ideal-sdepth-path", n, k, -1, "poset cap exceeded"));
        continue;
      }
      const MonomialIdeal I = path_ideal(n, k);
      const int sd_ideal = sdepth_value(PosetKind::ideal, I, nullptr, opt.poset_cap);
      out.push_back(make_ge("ideal-sdepth-path", n, k, -1, ceil_div(n, m) + 1, sd_ideal));
      const int sd_quot = sdepth_value(PosetKind::quotient, I, nullptr, opt.poset_cap);
      out.push_back(make_bool("herzog-path", n, k, -1, sd_ideal >= sd_quot));
    }
    for (int n = 3; n <= n_max; ++n) {
      if (!poset_fits(n, opt.poset_cap)) {
        out.push_back(make_skipped("ideal-sdepth-cycle", n, k, -1, "poset cap exceeded"));
        continue;
      }
      const MonomialIdeal C = cycle_ideal(n, k);
      const int sd_ideal = sdepth_value(PosetKind::ideal, C, nullptr, opt.poset_cap);
      out.push_back(make_ge("ideal-sdepth-cycle", n, k, -1, ceil_div(n - k, m) + 1, sd_ideal));
      const int sd_quot = sdepth_value(PosetKind::quotient, C, nullptr, opt.poset_cap);
      out.push_back(make_bool("herzog-cycle", n, k, -1, sd_ideal >= sd_quot));
      if (n >= m) {
        const MonomialIdeal P = path_ideal(n, k);
        const int sd_pair = sdepth_value(PosetKind::pair, P, &C, opt.poset_cap);
        out.push_back(make_ge("pair-sdepth", n, k, -1, ceil_div(n + k + 1, m), sd_pair));
      }
    }
  }
  return out;
}

std::vector<ClaimCheck> verify_structural_lemmas(const VerifyOptions& opt) {
  std::vector<ClaimCheck> out;
  const int n_max = opt.n_max_lemma;
  for (int k = 2; k <= opt.k_max; ++k) {
    // Quotient by the full prime A_{n-1} collapses the path to a shorter one.
    for (int n = 2 * k + 2; n <= n_max; ++n) {
      const Mask a_vars = range_mask(n - k, n - 1);
      const MonomialIdeal lhs = path_ideal(n, k).add_primes(a_vars);
      const MonomialIdeal rhs =
          path_ideal(n - k - 1, k).extend_ambient(n).add_primes(a_vars);
      out.push_back(make_bool("lemma-path-quotient-A", n, k, -1, lhs == rhs));
    }
    // Colon by x_{n-k+i}, plain and A-augmented.
    for (int n = 3 * k + 2; n <= n_max; ++n) {
      for (int i = 0; i <= k - 1; ++i) {
        const int j = n - k + i;
        const MonomialIdeal P = path_ideal(n, k);
        const MonomialIdeal rhs =
            path_ideal(n - 2 * k - 1 + i, k).extend_ambient(n).sum(prime_B(n, k, j));
        out.push_back(make_bool("lemma-path-colon", n, k, i,
                                P.colon_by_variable(j) == rhs));
        const MonomialIdeal augmented = P.sum(prime_A(n, k, j - 1));
        out.push_back(make_bool("lemma-path-colon-A", n, k, i,
                                augmented.colon_by_variable(j) == rhs));
      }
    }
    // The two-case colon form in the short range 2k+2 <= n <= 3k+1.
    {
      const int n = 2 * k + 2;
      if (n <= n_max) {
        const MonomialIdeal lhs = path_ideal(n, k).colon_by_variable(n - k);
        const MonomialIdeal rhs = MonomialIdeal::zero(n).add_primes(
            range_mask(2, n - k - 1) | range_mask(n - k + 1, n));
        out.push_back(make_bool("lemma-path-colon-veronese", n, k, -1, lhs == rhs));
      }
    }
    for (int n = 2 * k + 3; n <= std::min(3 * k + 1, n_max); ++n) {
      for (int i = 0; i <= k - 1; ++i) {
        const int j = n - k + i;
        const int m = n - 2 * k - 1 + i;
        const MonomialIdeal lhs = path_ideal(n, k).colon_by_variable(j);
        const MonomialIdeal rhs =
            path_ideal(m, f_exponent(n, k, i)).extend_ambient(n).sum(prime_B(n, k, j));
        out.push_back(make_bool("lemma-path-colon-f", n, k, i, lhs == rhs));
      }
    }
    // Cycle lemmas need n >= 3k+2.
    for (int n = 3 * k + 2; n <= n_max; ++n) {
      {
        const Mask a_vars = range_mask(n - k, n - 1);
        const MonomialIdeal J = cycle_ideal(n, k).add_primes(a_vars);
        std::vector<Mask> restricted;
        for (Mask g : J.gens())
          if ((g & a_vars) == 0) restricted.push_back(g);
        const MonomialIdeal lhs = MonomialIdeal::minimalize(n, std::move(restricted));
        // Renumbering: reverse the surviving path block and land x_n on the
        // last vertex, so the wrap generators become path edges.
        VariableRenaming r;
        for (int v = 1; v <= n - k - 1; ++v) r.set(v, n - k - v);
        r.set(n, n - k);
        out.push_back(make_bool("lemma-cycle-quotient-A", n, k, -1,
                                ideals_isomorphic(lhs, path_ideal(n - k, k), r)));
      }
      for (int i = 0; i <= k - 1; ++i) {
        const int j = n - k + i;
        const MonomialIdeal C = cycle_ideal(n, k);
        const Mask window = range_mask(i + 1, n - 2 * k - 1 + i);
        std::vector<Mask> window_gens;
        for (Mask g : C.gens())
          if ((g & ~window) == 0) window_gens.push_back(g);
        const MonomialIdeal E = MonomialIdeal::minimalize(n, window_gens);
        const MonomialIdeal rhs = E.sum(prime_D(n, k, j));
        out.push_back(make_bool("lemma-cycle-colon", n, k, i,
                                C.colon_by_variable(j) == rhs));
        const MonomialIdeal augmented = C.sum(prime_A(n, k, j - 1));
        out.push_back(make_bool("lemma-cycle-colon-A", n, k, i,
                                augmented.colon_by_variable(j) == rhs));
        // The window block is the shorter path power after shifting back.
        VariableRenaming shift = VariableRenaming::shift(i + 1, n - 2 * k - 1 + i, -i);
        out.push_back(make_bool(
            "lemma-cycle-colon-window", n, k, i,
            ideals_isomorphic(E, path_ideal(n - 2 * k - 1, k), shift)));
      }
    }
  }
  return out;
}

std::vector<ClaimCheck> witness_upper_bounds(const VerifyOptions& opt) {
  std::vector<ClaimCheck> out;
  for (int k = 1; k <= opt.k_max; ++k) {
    const int m = 2 * k + 1;
    for (int n = 2 * k + 2; n <= opt.n_max_lemma; ++n) {
      const int l = n / m;
      const int rem = n % m;
      std::vector<int> verts;
      if (rem == 0) {
        for (int t = 0; t < l; ++t) verts.push_back(k + 1 + m * t);
      } else if (rem <= k + 1) {
        for (int t = 0; t < l; ++t) verts.push_back(k + 1 + m * t);
        verts.push_back(n);
      } else {
        for (int t = 0; t <= l; ++t) verts.push_back(k + 1 + m * t);
      }
      const Graph g = build_power_graph({Family::path, n, k});
      const Mask v = mask_from_vars(verts);
      const bool ok = is_maximal_independent(g, v) &&
                      static_cast<int>(verts.size()) == ceil_div(n, m);
      out.push_back(make_bool("witness-mis", n, k, -1, ok));
    }
    for (int n = 2; n <= opt.n_max_lemma; ++n) {
      const Graph g = build_power_graph({Family::path, n, k});
      out.push_back(make_eq("mmis-path", n, k, -1, ceil_div(n, m),
                            min_maximal_independent_set(g).size));
    }
  }
  return out;
}

std::vector<ClaimCheck> run_verifier(const VerifyOptions& opt) {
  const std::set<std::string> keep(opt.claims.begin(), opt.claims.end());
  auto wanted = [&](std::initializer_list<const char*> ids) {
    if (keep.empty()) return true;
    for (const char* id : ids)
      if (keep.count(id)) return true;
    return false;
  };

  std::vector<ClaimCheck> all;
  auto append = [&](std::vector<ClaimCheck> v) {
    all.insert(all.end(), std::make_move_iterator(v.begin()),
               std::make_move_iterator(v.end()));
  };
  // Skip whole grids whose claims are filtered out; the expensive ones are
  // the sdepth families.
  if (wanted({"path-depth", "path-sdepth"})) append(verify_path_theorems(opt));
  if (wanted({"cycle-depth", "cycle-sdepth"})) append(verify_cycle_results(opt));
  if (wanted({"ideal-sdepth-path", "ideal-sdepth-cycle", "herzog-path",
              "herzog-cycle", "pair-sdepth"}))
    append(verify_ideal_bounds(opt));
  if (wanted({"lemma-path-quotient-A", "lemma-path-colon", "lemma-path-colon-A",
              "lemma-path-colon-veronese", "lemma-path-colon-f",
              "lemma-cycle-quotient-A", "lemma-cycle-colon", "lemma-cycle-colon-A",
              "lemma-cycle-colon-window"}))
    append(verify_structural_lemmas(opt));
  if (wanted({"witness-mis", "mmis-path"})) append(witness_upper_bounds(opt));

  if (!keep.empty())
    std::erase_if(all, [&](const ClaimCheck& c) { return !keep.count(c.claim_id); });
  std::sort(all.begin(), all.end(), [](const ClaimCheck& a, const ClaimCheck& b) {
    if (a.claim_id != b.claim_id) return a.claim_id < b.claim_id;
    if (a.n != b.n) return a.n < b.n;
    if (a.k != b.k) return a.k < b.k;
    return a.i < b.i;
  });
  return all;
}

bool all_pass(const std::vector<ClaimCheck>& checks) {
  return std::none_of(checks.begin(), checks.end(), [](const ClaimCheck& c) {
    return c.status == ClaimStatus::fail;
  });
}

namespace {

const char* status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::skipped: return "skipped";
  }
  return "?";
}

}  // namespace

std::string report_json(const std::vector<ClaimCheck>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ClaimCheck& c : checks) {
    nlohmann::json rec = {
        {"claim_id", c.claim_id}, {"n", c.n},
        {"k", c.k},               {"expected", c.expected},
        {"observed", c.observed}, {"status", status_name(c.status)},
    };
    if (c.i >= 0) rec["i"] = c.i;
    if (!c.reason.empty()) rec["reason"] = c.reason;
    arr.push_back(std::move(rec));
  }
  return arr.dump(2) + "\n";
}

std::string report_csv(const std::vector<ClaimCheck>& checks) {
  std::ostringstream os;
  os << "claim_id,n,k,i,expected,observed,status\n";
  for (const ClaimCheck& c : checks) {
    os << c.claim_id << ',' << c.n << ',' << c.k << ',';
    if (c.i >= 0) os << c.i;
    os << ',' << c.expected << ',' << c.observed << ',' << status_name(c.status) << '\n';
  }
  return os.str();
}

std::string report_table(const std::vector<ClaimCheck>& checks) {
  // One grid per claim: rows n, columns k, cells observed plus a marker
  // for anything other than a pass.
  std::map<std::string, std::map<std::pair<int, int>, std::string>> grids;
  std::map<std::string, std::set<int>> ks;
  for (const ClaimCheck& c : checks) {
    std::string cell = c.observed.empty() ? "-" : c.observed;
    if (c.status == ClaimStatus::fail) cell += "!";
    if (c.status == ClaimStatus::skipped) cell = "skip";
    auto& g = grids[c.claim_id][{c.n, c.k}];
    g = g.empty() ? cell : g + "/" + cell;
    ks[c.claim_id].insert(c.k);
  }
  std::ostringstream os;
  for (const auto& [id, grid] : grids) {
    os << "== " << id << " ==\n";
    os << "  n\\k";
    for (int k : ks[id]) os << '\t' << k;
    os << '\n';
    std::set<int> ns;
    for (const auto& [key, _] : grid) ns.insert(key.first);
    for (int n : ns) {
      os << "  " << n;
      for (int k : ks[id]) {
        auto it = grid.find({n, k});
        os << '\t' << (it == grid.end() ? "." : it->second);
      }
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace sqd
