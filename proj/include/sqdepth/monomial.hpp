#ifndef SQDEPTH_MONOMIAL_HPP
#define SQDEPTH_MONOMIAL_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqd {

// A squarefree monomial over x_1..x_n is a subset of [n], kept in one
// machine word.  Bit i (0-based) set means x_{i+1} divides the monomial.
using Mask = std::uint64_t;

constexpr int kMaxVars = 64;

constexpr Mask var_bit(int v) { return Mask{1} << (v - 1); }

constexpr Mask full_mask(int n) {
  return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int degree(Mask m) { return std::popcount(m); }

Mask mask_from_vars(std::initializer_list<int> vars);
Mask mask_from_vars(const std::vector<int>& vars);
std::vector<int> vars_of(Mask m);

struct SqfMonomial {
  Mask mask = 0;
  int ambient_n = 0;

  SqfMonomial() = default;
  SqfMonomial(Mask m, int n);

  int degree() const { return std::popcount(mask); }
  bool is_unit() const { return mask == 0; }
  bool divides(const SqfMonomial& other) const;
};

// A squarefree monomial ideal, stored by its unique minimal generating set
// G(I): a divisibility antichain of masks, sorted ascending.  The zero
// ideal has no generators; the unit ideal is normalized to gens = {0}.
class MonomialIdeal {
public:
  MonomialIdeal() = default;

  static MonomialIdeal zero(int ambient_n);
  static MonomialIdeal unit(int ambient_n);
  static MonomialIdeal minimalize(int ambient_n, std::vector<Mask> gens);
  static MonomialIdeal minimalize(const std::vector<SqfMonomial>& gens);

  int ambient_n() const { return n_; }
  const std::vector<Mask>& gens() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0] == 0; }
  bool is_proper() const { return !is_unit(); }

  // x_m in I, i.e. some generator divides m.
  bool contains(Mask m) const;

  Mask support() const;

  // (I : x_v), v 1-based.
  MonomialIdeal colon_by_variable(int v) const;

  // (I, {x_j : j in vars}) -- add variable generators and minimalize.
  MonomialIdeal add_primes(Mask vars) const;

  // I + J, same ambient.
  MonomialIdeal sum(const MonomialIdeal& other) const;

  // Same generators, larger ambient ring.
  MonomialIdeal extend_ambient(int new_n) const;

  bool operator==(const MonomialIdeal&) const = default;

private:
  MonomialIdeal(int n, std::vector<Mask> gens);

  int n_ = 0;
  std::vector<Mask> gens_;
};

// A partial bijection on variable indices (1-based), used to mechanize the
// paper-style "after renumbering the variables" identifications.
class VariableRenaming {
public:
  VariableRenaming() = default;

  void set(int from, int to);
  bool defined(int v) const { return map_.count(v) != 0; }
  int apply(int v) const;
  Mask apply_mask(Mask m) const;  // throws if some variable is undefined

  static VariableRenaming identity(int n);
  // x_v -> x_{v+offset} for v in [lo, hi].
  static VariableRenaming shift(int lo, int hi, int offset);

  const std::map<int, int>& entries() const { return map_; }

private:
  std::map<int, int> map_;
  std::map<int, int> inverse_;
};

// True iff the renaming carries G(I) onto G(J) as sets.  Requires r to be
// defined on all of supp(I); the ambient sizes may differ.
bool ideals_isomorphic(const MonomialIdeal& I, const MonomialIdeal& J,
                       const VariableRenaming& r);

// Canonical text form used by the CLI and golden tests: a sorted list of
// monomials, each a sorted list of 1-based variable indices.
std::string ideal_to_canonical_string(const MonomialIdeal& I);

}  // namespace sqd

#endif
