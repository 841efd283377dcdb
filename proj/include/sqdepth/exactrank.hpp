#ifndef SQDEPTH_EXACTRANK_HPP
#define SQDEPTH_EXACTRANK_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sqd {

// Coefficient field for homology ranks.  The rational option computes via
// fraction-free integer elimination; no floating point anywhere.
struct FieldChoice {
  bool rational = true;
  std::uint64_t prime = 0;

  static FieldChoice q() { return {true, 0}; }
  static FieldChoice p(std::uint64_t prime);
  static FieldChoice parse(const std::string& s);  // "q" or "p:<prime>"
  std::string to_string() const;
};

using IntMatrix = std::vector<std::vector<long long>>;

// Rank over Q of an integer matrix, via Bareiss fraction-free elimination
// with arbitrary-precision integers.
long rank_rational(const IntMatrix& m);

// Rank over GF(p).
long rank_mod_p(const IntMatrix& m, std::uint64_t p);

long rank_over_field(const IntMatrix& m, const FieldChoice& field);

}  // namespace sqd

#endif
