#include "sqdepth/monomial.hpp"

#include <algorithm>
#include <sstream>

namespace sqd {

Mask mask_from_vars(std::initializer_list<int> vars) {
  Mask m = 0;
  for (int v : vars) {
    if (v < 1 || v > kMaxVars) throw std::invalid_argument("variable index out of range");
    m |= var_bit(v);
  }
  return m;
}

Mask mask_from_vars(const std::vector<int>& vars) {
  Mask m = 0;
  for (int v : vars) {
    if (v < 1 || v > kMaxVars) throw std::invalid_argument("variable index out of range");
    m |= var_bit(v);
  }
  return m;
}

std::vector<int> vars_of(Mask m) {
  std::vector<int> out;
  while (m) {
    int b = std::countr_zero(m);
    out.push_back(b + 1);
    m &= m - 1;
  }
  return out;
}

SqfMonomial::SqfMonomial(Mask m, int n) : mask(m), ambient_n(n) {
  if (n < 1 || n > kMaxVars) throw std::invalid_argument("ambient_n must be in [1,64]");
  if (m & ~full_mask(n)) throw std::invalid_argument("monomial has a variable beyond ambient_n");
}

bool SqfMonomial::divides(const SqfMonomial& other) const {
  if (ambient_n != other.ambient_n) throw std::invalid_argument("ambient mismatch");
  return (mask & ~other.mask) == 0;
}

MonomialIdeal::MonomialIdeal(int n, std::vector<Mask> gens) : n_(n), gens_(std::move(gens)) {}

MonomialIdeal MonomialIdeal::zero(int ambient_n) {
  if (ambient_n < 1 || ambient_n > kMaxVars) throw std::invalid_argument("bad ambient_n");
  return MonomialIdeal(ambient_n, {});
}

MonomialIdeal MonomialIdeal::unit(int ambient_n) {
  if (ambient_n < 1 || ambient_n > kMaxVars) throw std::invalid_argument("bad ambient_n");
  return MonomialIdeal(ambient_n, {Mask{0}});
}

MonomialIdeal MonomialIdeal::minimalize(int ambient_n, std::vector<Mask> gens) {
  if (ambient_n < 1 || ambient_n > kMaxVars) throw std::invalid_argument("bad ambient_n");
  const Mask fm = full_mask(ambient_n);
  for (Mask g : gens)
    if (g & ~fm) throw std::invalid_argument("generator has a variable beyond ambient_n");

  // Unit monomial absorbs everything.
  if (std::find(gens.begin(), gens.end(), Mask{0}) != gens.end())
    return unit(ambient_n);

  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<Mask> keep;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < gens.size(); ++j) {
      if (j != i && (gens[j] & ~gens[i]) == 0 &&
          (gens[j] != gens[i] || j < i)) {
        minimal = false;
        break;
      }
    }
    if (minimal) keep.push_back(gens[i]);
  }
  return MonomialIdeal(ambient_n, std::move(keep));
}

MonomialIdeal MonomialIdeal::minimalize(const std::vector<SqfMonomial>& gens) {
  if (gens.empty()) throw std::invalid_argument("cannot infer ambient from empty list; use minimalize(n, masks)");
  int n = gens[0].ambient_n;
  std::vector<Mask> masks;
  masks.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.ambient_n != n) throw std::invalid_argument("mixed ambient sizes");
    masks.push_back(g.mask);
  }
  return minimalize(n, std::move(masks));
}

bool MonomialIdeal::contains(Mask m) const {
  if (m & ~full_mask(n_)) throw std::invalid_argument("monomial beyond ambient_n");
  for (Mask g : gens_)
    if ((g & ~m) == 0) return true;
  return false;
}

Mask MonomialIdeal::support() const {
  Mask s = 0;
  for (Mask g : gens_) s |= g;
  return s;
}

MonomialIdeal MonomialIdeal::colon_by_variable(int v) const {
  if (v < 1 || v > n_) throw std::invalid_argument("variable out of range");
  const Mask b = var_bit(v);
  std::vector<Mask> quot;
  quot.reserve(gens_.size());
  for (Mask g : gens_) quot.push_back(g & ~b);
  return minimalize(n_, std::move(quot));
}

MonomialIdeal MonomialIdeal::add_primes(Mask vars) const {
  if (vars & ~full_mask(n_)) throw std::invalid_argument("prime variables beyond ambient_n");
  std::vector<Mask> all = gens_;
  for (int v : vars_of(vars)) all.push_back(var_bit(v));
  return minimalize(n_, std::move(all));
}

MonomialIdeal MonomialIdeal::sum(const MonomialIdeal& other) const {
  if (n_ != other.n_) throw std::invalid_argument("ambient mismatch in sum");
  std::vector<Mask> all = gens_;
  all.insert(all.end(), other.gens_.begin(), other.gens_.end());
  return minimalize(n_, std::move(all));
}

MonomialIdeal MonomialIdeal::extend_ambient(int new_n) const {
  if (new_n < n_) throw std::invalid_argument("extend_ambient cannot shrink");
  return MonomialIdeal(new_n, gens_);
}

void VariableRenaming::set(int from, int to) {
  if (from < 1 || from > kMaxVars || to < 1 || to > kMaxVars)
    throw std::invalid_argument("renaming index out of range");
  auto it = map_.find(from);
  if (it != map_.end() && it->second != to)
    throw std::invalid_argument("renaming redefines a variable");
  auto jt = inverse_.find(to);
  if (jt != inverse_.end() && jt->second != from)
    throw std::invalid_argument("renaming is not injective");
  map_[from] = to;
  inverse_[to] = from;
}

int VariableRenaming::apply(int v) const {
  auto it = map_.find(v);
  if (it == map_.end()) throw std::invalid_argument("renaming undefined on x_" + std::to_string(v));
  return it->second;
}

Mask VariableRenaming::apply_mask(Mask m) const {
  Mask out = 0;
  for (int v : vars_of(m)) out |= var_bit(apply(v));
  return out;
}

VariableRenaming VariableRenaming::identity(int n) {
  VariableRenaming r;
  for (int v = 1; v <= n; ++v) r.set(v, v);
  return r;
}

VariableRenaming VariableRenaming::shift(int lo, int hi, int offset) {
  VariableRenaming r;
  for (int v = lo; v <= hi; ++v) r.set(v, v + offset);
  return r;
}

bool ideals_isomorphic(const MonomialIdeal& I, const MonomialIdeal& J,
                       const VariableRenaming& r) {
  for (int v : vars_of(I.support()))
    if (!r.defined(v)) throw std::invalid_argument("renaming undefined on a support variable");
  std::vector<Mask> mapped;
  mapped.reserve(I.gens().size());
  const Mask fm = full_mask(J.ambient_n());
  for (Mask g : I.gens()) {
    Mask h = r.apply_mask(g);
    if (h & ~fm) return false;
    mapped.push_back(h);
  }
  std::sort(mapped.begin(), mapped.end());
  return mapped == J.gens();
}

std::string ideal_to_canonical_string(const MonomialIdeal& I) {
  std::vector<std::vector<int>> lists;
  lists.reserve(I.gens().size());
  for (Mask g : I.gens()) lists.push_back(vars_of(g));
  std::sort(lists.begin(), lists.end());
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < lists.size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (size_t j = 0; j < lists[i].size(); ++j) {
      if (j) os << ',';
      os << lists[i][j];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace sqd
