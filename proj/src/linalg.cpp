#include "circdlp/linalg.hpp"

namespace circdlp {

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (spec_ != rhs.spec_) throw FieldMismatchError("multiplying matrices over different fields");
  if (n_ != rhs.n_) throw DimensionError("multiplying matrices of different sizes");
  Matrix out(spec_, n_);
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) {
      FieldElement acc = spec_.zero();
      for (unsigned l = 0; l < n_; ++l) acc = acc + at(i, l) * rhs.at(l, j);
      out.set(i, j, acc);
    }
  }
  return out;
}

namespace {

// GF(2) determinant on bit-packed rows; value is 1 iff the matrix has full
// rank (in characteristic 2 row swaps do not change the sign).
std::uint64_t det_gf2(const Matrix& m) {
  unsigned n = m.n();
  unsigned words = (n + 63) / 64;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n) * words, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (m.raw(i, j)) rows[static_cast<std::size_t>(i) * words + j / 64] |= std::uint64_t{1} << (j % 64);

  auto row = [&](unsigned i) { return rows.data() + static_cast<std::size_t>(i) * words; };
  for (unsigned col = 0; col < n; ++col) {
    unsigned w = col / 64, b = col % 64;
    unsigned pivot = n;
    for (unsigned i = col; i < n; ++i) {
      if (row(i)[w] >> b & 1) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) return 0;
    if (pivot != col)
      for (unsigned x = 0; x < words; ++x) std::swap(row(pivot)[x], row(col)[x]);
    for (unsigned i = col + 1; i < n; ++i) {
      if (row(i)[w] >> b & 1)
        for (unsigned x = w; x < words; ++x) row(i)[x] ^= row(col)[x];
    }
  }
  return 1;
}

}  // namespace

FieldElement Matrix::det() const {
  if (spec_.is_gf2()) return FieldElement(spec_, det_gf2(*this));

  Matrix work = *this;
  FieldElement result = spec_.one();
  bool negate = false;
  for (unsigned col = 0; col < n_; ++col) {
    unsigned pivot = n_;
    for (unsigned i = col; i < n_; ++i) {
      if (!work.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == n_) return spec_.zero();
    if (pivot != col) {
      for (unsigned j = 0; j < n_; ++j) {
        FieldElement t = work.at(pivot, j);
        work.set(pivot, j, work.at(col, j));
        work.set(col, j, t);
      }
      negate = !negate;
    }
    FieldElement p = work.at(col, col);
    result = result * p;
    FieldElement ip = p.inverse();
    for (unsigned i = col + 1; i < n_; ++i) {
      FieldElement f = work.at(i, col) * ip;
      if (f.is_zero()) continue;
      for (unsigned j = col; j < n_; ++j)
        work.set(i, j, work.at(i, j) - f * work.at(col, j));
    }
  }
  return negate ? result.neg() : result;
}

Poly charpoly(const Matrix& m) {
  const FieldSpec& spec = m.spec();
  unsigned n = m.n();
  if (n == 0) return Poly::one(spec);
  Matrix h = m;

  // Similarity reduction to upper Hessenberg form.
  for (unsigned col = 0; col + 2 < n; ++col) {
    unsigned pivot = n;
    for (unsigned i = col + 1; i < n; ++i) {
      if (!h.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) continue;
    if (pivot != col + 1) {
      for (unsigned j = 0; j < n; ++j) {
        FieldElement t = h.at(pivot, j);
        h.set(pivot, j, h.at(col + 1, j));
        h.set(col + 1, j, t);
      }
      for (unsigned i = 0; i < n; ++i) {
        FieldElement t = h.at(i, pivot);
        h.set(i, pivot, h.at(i, col + 1));
        h.set(i, col + 1, t);
      }
    }
    FieldElement ip = h.at(col + 1, col).inverse();
    for (unsigned i = col + 2; i < n; ++i) {
      FieldElement f = h.at(i, col) * ip;
      if (f.is_zero()) continue;
      // row_i -= f * row_{col+1}; col_{col+1} += f * col_i  (similarity pair)
      for (unsigned j = 0; j < n; ++j) h.set(i, j, h.at(i, j) - f * h.at(col + 1, j));
      for (unsigned r = 0; r < n; ++r)
        h.set(r, col + 1, h.at(r, col + 1) + f * h.at(r, i));
    }
  }

  // p_m = (x - h[m-1][m-1]) p_{m-1} - sum_{i=1}^{m-1} h[i-1][m-1] *
  //       (prod_{j=i}^{m-1} h[j][j-1]) * p_{i-1}
  std::vector<Poly> p;
  p.reserve(n + 1);
  p.push_back(Poly::one(spec));
  Poly x = Poly::x(spec);
  for (unsigned mm = 1; mm <= n; ++mm) {
    Poly pm = (x - Poly::constant(h.at(mm - 1, mm - 1))) * p[mm - 1];
    FieldElement t = spec.one();
    for (unsigned i = mm - 1; i >= 1; --i) {
      t = t * h.at(i, i - 1);
      if (t.is_zero()) break;
      FieldElement coeff = h.at(i - 1, mm - 1) * t;
      if (!coeff.is_zero()) pm = pm - p[i - 1].scaled(coeff);
    }
    p.push_back(std::move(pm));
  }
  return p[n];
}

}  // namespace circdlp
