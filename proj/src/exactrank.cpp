#include "sqdepth/exactrank.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <utility>

namespace sqd {

using boost::multiprecision::cpp_int;

FieldChoice FieldChoice::p(std::uint64_t prime) {
  if (prime < 2) throw std::invalid_argument("prime must be >= 2");
  for (std::uint64_t d = 2; d * d <= prime; ++d)
    if (prime % d == 0) throw std::invalid_argument("field characteristic must be prime");
  return {false, prime};
}

FieldChoice FieldChoice::parse(const std::string& s) {
  if (s == "q" || s == "Q") return q();
  if (s.rfind("p:", 0) == 0) return p(std::stoull(s.substr(2)));
  throw std::invalid_argument("field must be 'q' or 'p:<prime>'");
}

std::string FieldChoice::to_string() const {
  return rational ? "q" : "p:" + std::to_string(prime);
}

long rank_rational(const IntMatrix& m) {
  const long rows = static_cast<long>(m.size());
  if (rows == 0) return 0;
  const long cols = static_cast<long>(m[0].size());
  std::vector<std::vector<cpp_int>> a(rows);
  for (long i = 0; i < rows; ++i) a[i].assign(m[i].begin(), m[i].end());

  long rank = 0;
  cpp_int prev = 1;
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long pivot = -1;
    for (long i = r; i < rows; ++i)
      if (a[i][c] != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    for (long i = r + 1; i < rows; ++i) {
      for (long j = c + 1; j < cols; ++j) {
        cpp_int t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        a[i][j] = t / prev;  // exact by the Bareiss minor identity
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
    ++rank;
  }
  return rank;
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 acc = 1, base = b % p;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

long rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  const long rows = static_cast<long>(m.size());
  if (rows == 0) return 0;
  const long cols = static_cast<long>(m[0].size());
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) {
      long long v = m[i][j] % static_cast<long long>(p);
      if (v < 0) v += static_cast<long long>(p);
      a[i][j] = static_cast<std::uint64_t>(v);
    }

  long rank = 0, r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long pivot = -1;
    for (long i = r; i < rows; ++i)
      if (a[i][c] != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    std::uint64_t inv = pow_mod(a[r][c], p - 2, p);
    for (long j = c; j < cols; ++j)
      a[r][j] = static_cast<std::uint64_t>((unsigned __int128)a[r][j] * inv % p);
    for (long i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      std::uint64_t f = a[i][c];
      for (long j = c; j < cols; ++j) {
        unsigned __int128 t = (unsigned __int128)f * a[r][j] % p;
        a[i][j] = (a[i][j] + p - static_cast<std::uint64_t>(t)) % p;
      }
    }
    ++r;
    ++rank;
  }
  return rank;
}

long rank_over_field(const IntMatrix& m, const FieldChoice& field) {
  return field.rational ? rank_rational(m) : rank_mod_p(m, field.prime);
}

}  // namespace sqd
