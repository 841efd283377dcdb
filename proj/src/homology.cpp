#include "sqdepth/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqd {

namespace {

constexpr int kMaxSupport = 22;

// True iff v joins every face of the restriction to sigma, i.e. no
// generator inside sigma contains v.  Restrictions with a cone point are
// contractible and contribute nothing.
bool has_cone_point(const MonomialIdeal& I, Mask sigma) {
  Mask covered = 0;
  for (Mask g : I.gens())
    if ((g & ~sigma) == 0) covered |= g;
  return (sigma & ~covered) != 0;
}

}  // namespace

std::vector<Mask> SimplicialComplex::facets() const {
  const Mask supp = ideal.support();
  const Mask free_vars = full_mask(ambient_n()) & ~supp;
  if (degree(supp) > kMaxSupport)
    throw std::invalid_argument("facet enumeration capped at 22 support variables");

  std::vector<Mask> maximal;
  // Faces within the support, scanned top-down by cardinality.
  std::vector<Mask> faces;
  Mask sub = supp;
  while (true) {
    if (is_face(sub)) faces.push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & supp;
  }
  std::sort(faces.begin(), faces.end(), [](Mask a, Mask b) {
    return degree(a) != degree(b) ? degree(a) > degree(b) : a < b;
  });
  for (Mask f : faces) {
    bool dominated = false;
    for (Mask m : maximal)
      if ((f & ~m) == 0) { dominated = true; break; }
    if (!dominated) maximal.push_back(f);
  }
  for (Mask& m : maximal) m |= free_vars;
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

SimplicialComplex independence_complex(const MonomialIdeal& I) {
  if (I.is_unit()) throw std::invalid_argument("unit ideal has no Stanley-Reisner complex");
  return SimplicialComplex{I};
}

std::vector<long> reduced_homology_ranks(const SimplicialComplex& complex,
                                         Mask sigma, const FieldChoice& field) {
  if (sigma & ~full_mask(complex.ambient_n()))
    throw std::invalid_argument("sigma beyond ambient_n");
  const int s_max = degree(sigma);

  // Faces of the restriction grouped by cardinality; group[s] holds the
  // s-element faces, group[0] = {the empty face}.
  std::vector<std::vector<Mask>> group(s_max + 1);
  Mask sub = sigma;
  while (true) {
    if (complex.is_face(sub)) group[degree(sub)].push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & sigma;
  }
  for (auto& g : group) std::sort(g.begin(), g.end());

  // rank of the boundary map from s-faces to (s-1)-faces, for s = 1..s_max.
  std::vector<long> bd_rank(s_max + 2, 0);
  for (int s = 1; s <= s_max; ++s) {
    if (group[s].empty() || group[s - 1].empty()) continue;
    IntMatrix mat(group[s - 1].size(), std::vector<long long>(group[s].size(), 0));
    for (size_t col = 0; col < group[s].size(); ++col) {
      Mask face = group[s][col];
      int pos = 0;
      for (int v : vars_of(face)) {
        Mask sub_face = face & ~var_bit(v);
        auto it = std::lower_bound(group[s - 1].begin(), group[s - 1].end(), sub_face);
        if (it != group[s - 1].end() && *it == sub_face) {
          size_t row = static_cast<size_t>(it - group[s - 1].begin());
          mat[row][col] = (pos % 2 == 0) ? 1 : -1;
        }
        ++pos;
      }
    }
    bd_rank[s] = rank_over_field(mat, field);
  }

  std::vector<long> h(s_max + 1, 0);  // h[d+1] = rank of H~_d
  for (int s = 0; s <= s_max; ++s)
    h[s] = static_cast<long>(group[s].size()) - bd_rank[s] - bd_rank[s + 1];
  return h;
}

namespace {

int pd_over_support(const MonomialIdeal& I, const FieldChoice& field) {
  const Mask supp = I.support();
  if (degree(supp) > kMaxSupport)
    throw std::invalid_argument("Hochster enumeration capped at 22 support variables");
  SimplicialComplex complex{I};

  int pd = 0;  // the empty multidegree contributes homological degree 0
  Mask sigma = supp;
  while (sigma != 0) {
    if (!has_cone_point(I, sigma)) {
      const int size = degree(sigma);
      std::vector<long> h = reduced_homology_ranks(complex, sigma, field);
      for (int d = -1; d <= size - 1; ++d)
        if (h[d + 1] > 0) pd = std::max(pd, size - d - 1);
    }
    sigma = (sigma - 1) & supp;
  }
  return pd;
}

}  // namespace

std::vector<BettiEntry> betti_table(const MonomialIdeal& I, const FieldChoice& field) {
  if (!I.is_proper() || I.is_zero())
    throw std::invalid_argument("Betti table needs a proper nonzero ideal");
  const Mask supp = I.support();
  if (degree(supp) > kMaxSupport)
    throw std::invalid_argument("Hochster enumeration capped at 22 support variables");
  SimplicialComplex complex{I};

  std::vector<BettiEntry> out;
  Mask sigma = supp;
  while (sigma != 0) {
    if (!has_cone_point(I, sigma)) {
      const int size = degree(sigma);
      std::vector<long> h = reduced_homology_ranks(complex, sigma, field);
      for (int d = -1; d <= size - 1; ++d)
        if (h[d + 1] > 0 && size - d - 2 >= 0)
          out.push_back({size - d - 2, sigma, h[d + 1]});
    }
    sigma = (sigma - 1) & supp;
  }
  std::sort(out.begin(), out.end(), [](const BettiEntry& a, const BettiEntry& b) {
    return a.i != b.i ? a.i < b.i : a.sigma < b.sigma;
  });
  return out;
}

int projective_dimension(const MonomialIdeal& I, const FieldChoice& field) {
  if (!I.is_proper()) throw std::invalid_argument("unit ideal rejected");
  if (I.is_zero()) throw std::invalid_argument("zero ideal rejected");
  return pd_over_support(I, field);
}

int depth_quotient(const MonomialIdeal& I, const FieldChoice& field) {
  if (!I.is_proper()) throw std::invalid_argument("unit ideal rejected");
  if (I.is_zero()) return I.ambient_n();
  return I.ambient_n() - pd_over_support(I, field);
}

int depth_ideal(const MonomialIdeal& I, const FieldChoice& field) {
  if (I.is_zero()) throw std::invalid_argument("zero ideal rejected; depth(S) is reported by depth_quotient");
  if (!I.is_proper()) throw std::invalid_argument("unit ideal rejected");
  return depth_quotient(I, field) + 1;
}

}  // namespace sqd
