#include "sqdepth/io.hpp"

#include <algorithm>

namespace sqd {

nlohmann::json ideal_to_json(const MonomialIdeal& I) {
  std::vector<std::vector<int>> lists;
  lists.reserve(I.gens().size());
  for (Mask g : I.gens()) lists.push_back(vars_of(g));
  std::sort(lists.begin(), lists.end());
  return nlohmann::json(lists);
}

MonomialIdeal ideal_from_json(const nlohmann::json& j, int ambient_n) {
  std::vector<Mask> gens;
  for (const auto& mono : j) gens.push_back(mask_from_vars(mono.get<std::vector<int>>()));
  return MonomialIdeal::minimalize(ambient_n, std::move(gens));
}

nlohmann::json graph_to_json(const GraphSpec& spec, const Graph& g) {
  nlohmann::json out;
  out["family"] = spec.family == Family::path ? "path" : "cycle";
  out["n"] = spec.n;
  out["k"] = spec.k;
  nlohmann::json edges = nlohmann::json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i, j});
  out["edges"] = std::move(edges);
  return out;
}

nlohmann::json partition_to_json(const IntervalPartition& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Interval& iv : p.intervals)
    arr.push_back({{"A", vars_of(iv.bottom)}, {"B", vars_of(iv.top)}});
  return arr;
}

IntervalPartition partition_from_json(const nlohmann::json& j) {
  IntervalPartition p;
  for (const auto& rec : j) {
    Interval iv;
    iv.bottom = mask_from_vars(rec.at("A").get<std::vector<int>>());
    iv.top = mask_from_vars(rec.at("B").get<std::vector<int>>());
    p.intervals.push_back(iv);
  }
  return p;
}

}  // namespace sqd
