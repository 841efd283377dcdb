#ifndef SQDEPTH_IO_HPP
#define SQDEPTH_IO_HPP

#include <json.hpp>

#include "sqdepth/graphpower.hpp"
#include "sqdepth/monomial.hpp"
#include "sqdepth/sdepth.hpp"

namespace sqd {

// Canonical ideal form: sorted list of sorted 1-based index lists,
// e.g. [[1,2],[2,3]].
nlohmann::json ideal_to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const nlohmann::json& j, int ambient_n);

// {family, n, k, edges:[[i,j],...]} with sorted 1-based pairs.
nlohmann::json graph_to_json(const GraphSpec& spec, const Graph& g);

// Certificates: list of {"A":[...],"B":[...]}.
nlohmann::json partition_to_json(const IntervalPartition& p);
IntervalPartition partition_from_json(const nlohmann::json& j);

}  // namespace sqd

#endif
