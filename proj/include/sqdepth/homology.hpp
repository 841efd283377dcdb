#ifndef SQDEPTH_HOMOLOGY_HPP
#define SQDEPTH_HOMOLOGY_HPP

#include <vector>

#include "sqdepth/exactrank.hpp"
#include "sqdepth/monomial.hpp"

namespace sqd {

// Stanley-Reisner (independence) complex of a proper squarefree ideal:
// faces are the supports of squarefree monomials outside I.  Stored by the
// ideal's membership predicate; the facet list is computed on demand.
struct SimplicialComplex {
  MonomialIdeal ideal;

  int ambient_n() const { return ideal.ambient_n(); }
  bool is_face(Mask sigma) const { return !ideal.contains(sigma); }
  std::vector<Mask> facets() const;
};

SimplicialComplex independence_complex(const MonomialIdeal& I);

// Ranks of reduced homology of the restriction to sigma; entry [d+1] is
// rank of H~_d, for d = -1 .. |sigma|-1.  Exact arithmetic throughout.
std::vector<long> reduced_homology_ranks(const SimplicialComplex& complex,
                                         Mask sigma, const FieldChoice& field);

struct BettiEntry {
  int i;       // homological degree in the resolution of I
  Mask sigma;  // multidegree
  long beta;
};

// Nonzero multigraded Betti numbers of I over sigma <= supp(I), computed
// from reduced homology of restricted complexes.
std::vector<BettiEntry> betti_table(const MonomialIdeal& I, const FieldChoice& field);

// pd(S/I) for proper nonzero I.
int projective_dimension(const MonomialIdeal& I, const FieldChoice& field);

// depth(S/I) = n - pd(S/I); the zero ideal gives n, the unit ideal is
// rejected.
int depth_quotient(const MonomialIdeal& I, const FieldChoice& field);

// depth(I) = depth(S/I) + 1 for proper nonzero I.
int depth_ideal(const MonomialIdeal& I, const FieldChoice& field);

}  // namespace sqd

#endif
