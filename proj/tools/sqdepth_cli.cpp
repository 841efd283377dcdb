#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqdepth/graphpower.hpp"
#include "sqdepth/homology.hpp"
#include "sqdepth/io.hpp"
#include "sqdepth/sdepth.hpp"
#include "sqdepth/verify.hpp"

using nlohmann::json;
using namespace sqd;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCapExceeded = 3;

// The size-cap guards all throw invalid_argument with "cap" in the text;
// everything else is a plain bad-input error.
bool is_cap_error(const std::exception& e) {
  return std::string(e.what()).find("cap") != std::string::npos ||
         std::string(e.what()).find("too large") != std::string::npos;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Family parse_family(const std::string& s) {
  if (s == "path") return Family::path;
  if (s == "cycle") return Family::cycle;
  throw CLI::ValidationError("--family must be path or cycle");
}

void write_or_print(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw std::runtime_error("cannot open output file: " + out_path);
  os << text;
}

// ---------------------------------------------------------------------------
// Result cache: one JSON file, keyed by semantic parameters.  Entries carry
// the certificate and its digest; a hit is only trusted after the digest
// matches and the certificate re-validates against a freshly built poset.

class ResultCache {
 public:
  explicit ResultCache(std::string path) : path_(std::move(path)) {
    if (path_.empty()) return;
    std::ifstream is(path_);
    if (!is) return;
    try {
      is >> data_;
    } catch (const json::exception&) {
      data_ = json::object();  // corrupt cache: start over
    }
    if (!data_.is_object()) data_ = json::object();
  }

  bool enabled() const { return !path_.empty(); }

  std::optional<std::pair<int, json>> lookup(const std::string& key) const {
    if (!enabled() || !data_.contains(key)) return std::nullopt;
    const json& rec = data_[key];
    if (!rec.is_object() || !rec.contains("value") || !rec.contains("certificate") ||
        !rec.contains("digest"))
      return std::nullopt;
    if (fnv1a(rec["certificate"].dump()) != rec["digest"].get<std::uint64_t>())
      return std::nullopt;  // digest mismatch: never trust, recompute
    return std::make_pair(rec["value"].get<int>(), rec["certificate"]);
  }

  void store(const std::string& key, int value, const json& certificate) {
    if (!enabled()) return;
    data_[key] = {{"value", value},
                  {"certificate", certificate},
                  {"digest", fnv1a(certificate.dump())}};
    std::ofstream os(path_);
    if (os) os << data_.dump(2) << '\n';
  }

 private:
  std::string path_;
  json data_ = json::object();
};

std::string default_cache_path() {
  const char* dir = std::getenv("SQDEPTH_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  return std::string(dir) + "/sqdepth-cache.json";
}

// ---------------------------------------------------------------------------

struct InvariantConfig {
  std::string target;
  std::string family;
  int n = 0;
  int k = 0;
  std::string field = "q";
  std::size_t cap_poset = kDefaultPosetCap;
  std::string certificate_out;
  std::string cache_path;
};

CharPoset build_poset(const InvariantConfig& cfg, PosetKind kind) {
  if (kind == PosetKind::pair) {
    if (cfg.family != "cycle-vs-path")
      throw std::invalid_argument("sdepth-pair needs --family cycle-vs-path");
    auto P = edge_ideal(build_power_graph({Family::path, cfg.n, cfg.k}));
    auto C = edge_ideal(build_power_graph({Family::cycle, cfg.n, cfg.k}));
    return char_poset(PosetKind::pair, P, &C, cfg.cap_poset);
  }
  auto I = edge_ideal(build_power_graph({parse_family(cfg.family), cfg.n, cfg.k}));
  return char_poset(kind, I, nullptr, cfg.cap_poset);
}

int run_invariant(const InvariantConfig& cfg) {
  const FieldChoice field = FieldChoice::parse(cfg.field);

  int value = 0;
  json certificate;  // interval partition or witness set; null when absent
  bool cacheable = false;

  const std::string key = cfg.family + ":" + std::to_string(cfg.n) + ":" +
                          std::to_string(cfg.k) + ":" + cfg.target + ":" + cfg.field;
  ResultCache cache(cfg.cache_path);

  auto sdepth_kind = [&](PosetKind kind) {
    cacheable = true;
    auto poset = build_poset(cfg, kind);
    if (auto hit = cache.lookup(key)) {
      IntervalPartition pi = partition_from_json(hit->second);
      if (validate_partition(poset, pi) && pi.value() == hit->first) {
        value = hit->first;
        certificate = hit->second;
        return;
      }
    }
    auto r = sdepth_exact(poset);
    value = r.value;
    certificate = partition_to_json(r.certificate);
  };

  if (cfg.target == "depth-quotient") {
    auto I = edge_ideal(build_power_graph({parse_family(cfg.family), cfg.n, cfg.k}));
    value = depth_quotient(I, field);
  } else if (cfg.target == "depth-ideal") {
    auto I = edge_ideal(build_power_graph({parse_family(cfg.family), cfg.n, cfg.k}));
    value = depth_ideal(I, field);
  } else if (cfg.target == "sdepth-quotient") {
    sdepth_kind(PosetKind::quotient);
  } else if (cfg.target == "sdepth-ideal") {
    sdepth_kind(PosetKind::ideal);
  } else if (cfg.target == "sdepth-pair") {
    sdepth_kind(PosetKind::pair);
  } else if (cfg.target == "mmis") {
    cacheable = true;
    auto g = build_power_graph({parse_family(cfg.family), cfg.n, cfg.k});
    if (auto hit = cache.lookup(key)) {
      Mask w = mask_from_vars(hit->second.get<std::vector<int>>());
      if (is_maximal_independent(g, w) && degree(w) == hit->first) {
        value = hit->first;
        certificate = hit->second;
      }
    }
    if (certificate.is_null()) {
      auto r = min_maximal_independent_set(g);
      value = r.size;
      certificate = json(vars_of(r.witness));
    }
  } else {
    throw std::invalid_argument("unknown invariant target: " + cfg.target);
  }

  if (cacheable) cache.store(key, value, certificate);
  if (!cfg.certificate_out.empty()) {
    if (certificate.is_null())
      throw std::invalid_argument("target " + cfg.target + " has no certificate");
    write_or_print(cfg.certificate_out, certificate.dump(2) + "\n");
  }
  std::cout << value << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------

const std::vector<std::string> kAllClaims = {
    "path-depth",           "path-sdepth",
    "cycle-depth",          "cycle-sdepth",
    "ideal-sdepth-path",    "ideal-sdepth-cycle",
    "herzog-path",          "herzog-cycle",
    "pair-sdepth",          "lemma-path-quotient-A",
    "lemma-path-colon",     "lemma-path-colon-A",
    "lemma-path-colon-veronese", "lemma-path-colon-f",
    "lemma-cycle-quotient-A", "lemma-cycle-colon",
    "lemma-cycle-colon-A",  "lemma-cycle-colon-window",
    "witness-mis",          "mmis-path",
};

// Claim selectors match by exact name or prefix, so `herzog` selects both
// herzog-path and herzog-cycle.
std::vector<std::string> expand_claims(const std::vector<std::string>& selectors) {
  std::vector<std::string> out;
  for (const std::string& s : selectors) {
    bool matched = false;
    for (const std::string& id : kAllClaims)
      if (id == s || id.rfind(s, 0) == 0) {
        out.push_back(id);
        matched = true;
      }
    if (!matched) throw std::invalid_argument("unknown claim selector: " + s);
  }
  return out;
}

struct VerifyConfig {
  int n_max = -1;
  int k_max = -1;
  std::vector<std::string> claims;
  std::string field = "q";
  std::size_t cap_poset = kDefaultPosetCap;
  std::string format = "json";
  std::string out;
};

int run_verify(const VerifyConfig& cfg) {
  VerifyOptions opt;
  opt.field = FieldChoice::parse(cfg.field);
  opt.poset_cap = cfg.cap_poset;
  if (cfg.n_max > 0) {
    opt.n_max_depth = cfg.n_max;
    opt.n_max_sdepth = std::min(cfg.n_max, opt.n_max_sdepth);
    opt.n_max_ideal = std::min(cfg.n_max, opt.n_max_ideal);
    opt.n_max_lemma = cfg.n_max;
  }
  if (cfg.k_max > 0) opt.k_max = cfg.k_max;
  if (!cfg.claims.empty()) opt.claims = expand_claims(cfg.claims);

  auto checks = run_verifier(opt);
  std::string report;
  if (cfg.format == "json")
    report = report_json(checks);
  else if (cfg.format == "csv")
    report = report_csv(checks);
  else if (cfg.format == "table")
    report = report_table(checks);
  else
    throw std::invalid_argument("--format must be json, csv or table");
  write_or_print(cfg.out, report);
  return all_pass(checks) ? kExitOk : kExitClaimFailure;
}

// ---------------------------------------------------------------------------

struct ValidateConfig {
  std::string family;
  int n = 0;
  int k = 0;
  std::string kind = "quotient";
  std::size_t cap_poset = kDefaultPosetCap;
  std::string certificate_path;
  int claimed_value = -1;
};

int run_validate(const ValidateConfig& cfg) {
  std::ifstream is(cfg.certificate_path);
  if (!is) throw std::invalid_argument("cannot read certificate: " + cfg.certificate_path);
  json j;
  is >> j;
  IntervalPartition pi = partition_from_json(j);

  PosetKind kind;
  if (cfg.kind == "quotient")
    kind = PosetKind::quotient;
  else if (cfg.kind == "ideal")
    kind = PosetKind::ideal;
  else if (cfg.kind == "pair")
    kind = PosetKind::pair;
  else
    throw std::invalid_argument("--kind must be quotient, ideal or pair");

  InvariantConfig icfg;
  icfg.family = cfg.family;
  icfg.n = cfg.n;
  icfg.k = cfg.k;
  icfg.cap_poset = cfg.cap_poset;
  auto poset = build_poset(icfg, kind);

  if (!validate_partition(poset, pi)) {
    std::cout << "invalid\n";
    return kExitClaimFailure;
  }
  if (cfg.claimed_value >= 0 && pi.value() < cfg.claimed_value) {
    std::cout << "invalid: partition proves only " << pi.value() << '\n';
    return kExitClaimFailure;
  }
  std::cout << "valid " << pi.value() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact depth and Stanley depth computations for edge ideals of "
               "path and cycle powers"};
  app.require_subcommand(1);

  // gen
  std::string gen_family;
  int gen_n = 0, gen_k = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Emit the edge ideal of P_n^k or C_n^k");
  gen->add_option("--family", gen_family, "path or cycle")->required();
  gen->add_option("--n", gen_n, "number of vertices")->required();
  gen->add_option("--k", gen_k, "power")->required();
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // invariant
  InvariantConfig inv;
  auto* invariant = app.add_subcommand("invariant", "Compute one invariant");
  invariant
      ->add_option("target", inv.target,
                   "depth-quotient | depth-ideal | sdepth-quotient | "
                   "sdepth-ideal | sdepth-pair | mmis")
      ->required();
  invariant->add_option("--family", inv.family, "path, cycle, or cycle-vs-path")
      ->required();
  invariant->add_option("--n", inv.n)->required();
  invariant->add_option("--k", inv.k)->required();
  invariant->add_option("--field", inv.field, "q or p:<prime>");
  invariant->add_option("--cap-poset", inv.cap_poset, "poset element cap");
  invariant->add_option("--certificate", inv.certificate_out,
                        "write the certificate JSON here");
  invariant->add_option("--cache", inv.cache_path, "cache file path");
  inv.cache_path = default_cache_path();

  // verify
  VerifyConfig ver;
  auto* verify = app.add_subcommand("verify", "Run the claim verifier");
  verify->add_option("--n-max", ver.n_max, "cap every n grid at this value");
  verify->add_option("--k-max", ver.k_max);
  verify->add_option("--claims", ver.claims, "claim ids or prefixes")->delimiter(',');
  verify->add_option("--field", ver.field, "q or p:<prime>");
  verify->add_option("--cap-poset", ver.cap_poset, "poset element cap");
  verify->add_option("--format", ver.format, "json, csv or table");
  verify->add_option("--out", ver.out, "report file (default stdout)");

  // validate-certificate
  ValidateConfig val;
  auto* validate =
      app.add_subcommand("validate-certificate", "Check an interval partition");
  validate->add_option("--family", val.family, "path, cycle, or cycle-vs-path")
      ->required();
  validate->add_option("--n", val.n)->required();
  validate->add_option("--k", val.k)->required();
  validate->add_option("--kind", val.kind, "quotient, ideal or pair");
  validate->add_option("--cap-poset", val.cap_poset);
  validate->add_option("--certificate", val.certificate_path, "certificate JSON")
      ->required();
  validate->add_option("--value", val.claimed_value, "claimed sdepth to check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (gen->parsed()) {
      auto spec = GraphSpec{parse_family(gen_family), gen_n, gen_k};
      auto I = edge_ideal(build_power_graph(spec));
      write_or_print(gen_out, ideal_to_json(I).dump() + "\n");
      return kExitOk;
    }
    if (invariant->parsed()) return run_invariant(inv);
    if (verify->parsed()) return run_verify(ver);
    if (validate->parsed()) return run_validate(val);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_cap_error(e) ? kExitCapExceeded : kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}
