#ifndef CIRCDLP_TESTS_ORACLES_HPP
#define CIRCDLP_TESTS_ORACLES_HPP

// Independent reference implementations used to cross-check the library.
// These deliberately avoid the code paths they validate.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "circdlp/circulant.hpp"
#include "circdlp/field.hpp"
#include "circdlp/linalg.hpp"
#include "circdlp/poly.hpp"

namespace oracles {

using namespace circdlp;

/// Trial-division primality.
inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

/// Product of two circulants through the full d x d matrix expansion,
/// re-extracting the first row.
inline Circulant mul_via_matrix(const Circulant& a, const Circulant& b) {
  Matrix product = a.expand() * b.expand();
  std::vector<FieldElement> row;
  row.reserve(a.d());
  for (unsigned j = 0; j < a.d(); ++j) row.push_back(product.at(0, j));
  return Circulant::from_row(row);
}

/// Product through representer polynomials reduced mod x^d - 1.
inline Circulant mul_via_poly(const Circulant& a, const Circulant& b) {
  Poly prod = a.representer() * b.representer();
  Poly reduced = prod % Poly::x_pow_minus_one(a.spec(), a.d());
  return Circulant::from_poly(a.spec(), a.d(), reduced);
}

/// a^e by repeated multiplication.
inline Circulant pow_by_repeated_mul(const Circulant& a, unsigned e) {
  Circulant acc = Circulant::identity(a.spec(), a.d());
  for (unsigned i = 0; i < e; ++i) acc = acc * a;
  return acc;
}

/// Exhaustive discrete log: least x in [0, bound) with g^x = h.
template <class G>
std::optional<std::uint64_t> dlog_exhaustive(const G& grp, const typename G::Element& g,
                                             const typename G::Element& h, std::uint64_t bound) {
  typename G::Element cur = grp.identity();
  for (std::uint64_t x = 0; x < bound; ++x) {
    if (grp.equal(cur, h)) return x;
    cur = grp.mul(cur, g);
  }
  return std::nullopt;
}

/// Cyclotomic polynomial over F_q by the recursive division
/// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
inline Poly cyclotomic(unsigned n, const FieldSpec& spec) {
  static std::map<std::pair<std::uint64_t, unsigned>, std::map<unsigned, Poly>> cache;
  auto& field_cache = cache[{spec.p(), spec.k()}];
  auto it = field_cache.find(n);
  if (it != field_cache.end()) return it->second;
  Poly num = Poly::x_pow_minus_one(spec, n);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = num / cyclotomic(d, spec);
  }
  field_cache.emplace(n, num);
  return num;
}

/// Irreducibility by exhaustive trial division over all monic polynomials of
/// degree <= deg(f)/2. Only sensible for tiny fields and degrees.
inline bool irreducible_by_search(const Poly& f) {
  const FieldSpec& spec = f.spec();
  int n = f.degree();
  if (n < 1) return false;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < spec.k(); ++i) q *= spec.p();
  for (int deg = 1; deg <= n / 2; ++deg) {
    // enumerate monic polynomials of this degree by odometer
    std::vector<std::uint64_t> coeffs(deg + 1, 0);
    coeffs[deg] = 1;
    for (;;) {
      Poly candidate(spec, coeffs);
      if ((f % candidate).is_zero()) return false;
      int pos = 0;
      while (pos < deg) {
        std::uint64_t next = coeffs[pos] + 1;
        if (next < q) {
          coeffs[pos] = next;
          break;
        }
        coeffs[pos] = 0;
        ++pos;
      }
      if (pos == deg) break;
    }
  }
  return true;
}

/// Characteristic polynomial det(xI - M) by cofactor expansion over the
/// polynomial ring. O(n!) -- for n <= 5.
inline Poly charpoly_by_cofactor(const Matrix& m) {
  const FieldSpec& spec = m.spec();
  unsigned n = m.n();
  // xI - M as a dense matrix of polynomials
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n, Poly::zero(spec)));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      Poly entry = Poly::constant(m.at(i, j).neg());
      if (i == j) entry = entry + Poly::x(spec);
      a[i][j] = entry;
    }
  // recursive Laplace expansion along the first row
  struct Rec {
    const FieldSpec& spec;
    std::vector<std::vector<Poly>>& a;
    Poly det(std::vector<unsigned> rows, std::vector<unsigned> cols) {
      if (rows.size() == 1) return a[rows[0]][cols[0]];
      Poly acc = Poly::zero(spec);
      std::vector<unsigned> sub_rows(rows.begin() + 1, rows.end());
      for (std::size_t c = 0; c < cols.size(); ++c) {
        std::vector<unsigned> sub_cols;
        for (std::size_t cc = 0; cc < cols.size(); ++cc)
          if (cc != c) sub_cols.push_back(cols[cc]);
        Poly term = a[rows[0]][cols[c]] * det(sub_rows, sub_cols);
        acc = (c % 2 == 0) ? acc + term : acc - term;
      }
      return acc;
    }
  } rec{spec, a};
  std::vector<unsigned> idx(n);
  for (unsigned i = 0; i < n; ++i) idx[i] = i;
  return rec.det(idx, idx);
}

}  // namespace oracles

#endif  // CIRCDLP_TESTS_ORACLES_HPP
