#ifndef SQDEPTH_SDEPTH_HPP
#define SQDEPTH_SDEPTH_HPP

#include <optional>
#include <vector>

#include "sqdepth/monomial.hpp"

namespace sqd {

enum class PosetKind { quotient, ideal, pair };

// The characteristic poset of squarefree multidegrees whose interval
// partitions compute sdepth: faces of the independence complex for S/I,
// the up-set {sigma : x_sigma in I} for I, and the difference for J/I.
struct CharPoset {
  int ambient_n = 0;
  PosetKind kind = PosetKind::quotient;
  std::vector<Mask> elements;  // sorted by (cardinality, mask)

  bool empty() const { return elements.empty(); }
};

// Hard cap on poset size; beyond it operations refuse rather than
// approximate.
constexpr std::size_t kDefaultPosetCap = std::size_t{1} << 20;

CharPoset char_poset(PosetKind kind, const MonomialIdeal& I,
                     const MonomialIdeal* J = nullptr,
                     std::size_t cap = kDefaultPosetCap);

struct Interval {
  Mask bottom = 0;
  Mask top = 0;
};

struct IntervalPartition {
  std::vector<Interval> intervals;
  int value() const;  // min |top|, or -1 when empty
};

enum class SdepthMethod { branch_and_bound, oracle };

struct SdepthResult {
  int value = 0;
  IntervalPartition certificate;
  SdepthMethod method = SdepthMethod::branch_and_bound;
};

// Exact Stanley depth of the module behind the poset, with an optimal
// interval-partition certificate.  Empty posets (unit ideal for the
// quotient kind, zero ideal for the ideal kind, J = I for the pair kind)
// are rejected.
SdepthResult sdepth_exact(const CharPoset& p);

// Independent exhaustive enumeration for cross-validation; rejects posets
// with more than `cap` elements.
SdepthResult sdepth_oracle(const CharPoset& p, std::size_t cap = 25);

bool validate_partition(const CharPoset& p, const IntervalPartition& pi);

}  // namespace sqd

#endif
