#include "circdlp/circulant.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>

namespace circdlp {

SquarePermutation::SquarePermutation(unsigned d) : d_(d) {
  if (d < 3 || d % 2 == 0)
    throw DimensionError("square permutation requires an odd dimension >= 3, got " +
                         std::to_string(d));
  // 2 * (d+1)/2 = d + 1 = 1 (mod d)
  std::uint64_t inv2 = (static_cast<std::uint64_t>(d) + 1) / 2;
  table_.resize(d);
  for (std::uint64_t j = 0; j < d; ++j)
    table_[j] = static_cast<std::uint32_t>(inv2 * j % d);
}

Circulant::Circulant(const FieldSpec& spec, unsigned d, std::vector<std::uint64_t> row_values)
    : spec_(spec), d_(d), row_(std::move(row_values)) {
  if (d_ < 2) throw DimensionError("circulant dimension must be >= 2");
  if (row_.size() != d_) throw DimensionError("row length does not match dimension");
}

Circulant Circulant::zero(const FieldSpec& spec, unsigned d) {
  return Circulant(spec, d, std::vector<std::uint64_t>(d, 0));
}

Circulant Circulant::identity(const FieldSpec& spec, unsigned d) {
  std::vector<std::uint64_t> row(d, 0);
  row[0] = 1;
  return Circulant(spec, d, std::move(row));
}

Circulant Circulant::shift(const FieldSpec& spec, unsigned d) {
  std::vector<std::uint64_t> row(d, 0);
  row[1] = 1;
  return Circulant(spec, d, std::move(row));
}

Circulant Circulant::from_row(const std::vector<FieldElement>& row) {
  if (row.empty()) throw DimensionError("empty circulant row");
  std::vector<std::uint64_t> values;
  values.reserve(row.size());
  for (const auto& e : row) {
    if (e.spec() != row[0].spec())
      throw FieldMismatchError("circulant entries from different fields");
    values.push_back(e.value());
  }
  return Circulant(row[0].spec(), static_cast<unsigned>(row.size()), std::move(values));
}

Circulant Circulant::from_poly(const FieldSpec& spec, unsigned d, const Poly& p) {
  if (p.degree() >= static_cast<int>(d))
    throw DimensionError("representer degree exceeds dimension");
  std::vector<std::uint64_t> row(d, 0);
  const auto& cv = p.coeff_values();
  std::copy(cv.begin(), cv.end(), row.begin());
  return Circulant(spec, d, std::move(row));
}

Matrix Circulant::expand() const {
  Matrix m(spec_, d_);
  for (unsigned i = 0; i < d_; ++i)
    for (unsigned j = 0; j < d_; ++j)
      m.set(i, j, FieldElement(spec_, row_[(j + d_ - i) % d_]));
  return m;
}

void Circulant::require_compatible(const Circulant& rhs) const {
  if (spec_ != rhs.spec_)
    throw FieldMismatchError("circulants over different fields");
  if (d_ != rhs.d_) throw DimensionError("circulants of different dimensions");
}

Circulant Circulant::operator+(const Circulant& rhs) const {
  require_compatible(rhs);
  std::vector<std::uint64_t> out(d_);
  for (unsigned i = 0; i < d_; ++i)
    out[i] = (FieldElement(spec_, row_[i]) + FieldElement(spec_, rhs.row_[i])).value();
  return Circulant(spec_, d_, std::move(out));
}

Circulant Circulant::mul_generic(const Circulant& rhs) const {
  require_compatible(rhs);
  std::vector<FieldElement> acc(d_, spec_.zero());
  for (unsigned i = 0; i < d_; ++i) {
    FieldElement ai(spec_, row_[i]);
    for (unsigned j = 0; j < d_; ++j) {
      unsigned t = i + j;
      if (t >= d_) t -= d_;
      acc[t] = acc[t] + ai * FieldElement(spec_, rhs.row_[j]);
    }
  }
  std::vector<std::uint64_t> out;
  out.reserve(d_);
  for (const auto& e : acc) out.push_back(e.value());
  return Circulant(spec_, d_, std::move(out));
}

namespace {

// F_2 fast path: rows as bit vectors, convolution by circular shift-XOR.
using Words = std::vector<std::uint64_t>;

Words pack_bits(const std::vector<std::uint64_t>& row) {
  Words w((row.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i]) w[i / 64] |= std::uint64_t{1} << (i % 64);
  return w;
}

// dst ^= src circularly shifted left by s bits within a d-bit vector.
void xor_rotated(Words& dst, const Words& src, unsigned s, unsigned d) {
  unsigned words = static_cast<unsigned>(src.size());
  auto xor_shifted = [&](unsigned offset, unsigned bit_begin, unsigned bit_end) {
    // dst bits [offset + 0, ...) ^= src bits [bit_begin, bit_end)
    unsigned count = bit_end - bit_begin;
    unsigned ws = bit_begin / 64, bs = bit_begin % 64;
    unsigned wd = offset / 64, bd = offset % 64;
    unsigned done = 0;
    while (done < count) {
      std::uint64_t chunk = src[ws] >> bs;
      unsigned avail = 64 - bs;
      if (bs && ws + 1 < words) chunk |= src[ws + 1] << (64 - bs);
      if (avail < 64) chunk &= (std::uint64_t{1} << avail) - 1;
      unsigned take = std::min<unsigned>(count - done, 64 - bd);
      take = std::min(take, avail < 64 ? avail : 64);
      std::uint64_t mask = take == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << take) - 1;
      dst[wd] ^= (chunk & mask) << bd;
      done += take;
      bit_begin += take;
      ws = bit_begin / 64;
      bs = bit_begin % 64;
      offset += take;
      wd = offset / 64;
      bd = offset % 64;
    }
  };
  if (s == 0) {
    for (unsigned i = 0; i < words; ++i) dst[i] ^= src[i];
    return;
  }
  xor_shifted(s, 0, d - s);  // low part moves up
  xor_shifted(0, d - s, d);  // high part wraps to the bottom
}

}  // namespace

Circulant Circulant::operator*(const Circulant& rhs) const {
  require_compatible(rhs);
  detail::tick_group_mult();
  if (!spec_.is_gf2()) return mul_generic(rhs);

  Words b = pack_bits(rhs.row_);
  Words acc(b.size(), 0);
  for (unsigned i = 0; i < d_; ++i)
    if (row_[i]) xor_rotated(acc, b, i, d_);
  std::vector<std::uint64_t> out(d_);
  for (unsigned i = 0; i < d_; ++i) out[i] = acc[i / 64] >> (i % 64) & 1;
  return Circulant(spec_, d_, std::move(out));
}

Circulant Circulant::square_step(const SquarePermutation* perm) const {
  std::vector<std::uint64_t> out(d_);
  for (unsigned j = 0; j < d_; ++j)
    out[j] = FieldElement(spec_, row_[(*perm)[j]]).square().value();
  return Circulant(spec_, d_, std::move(out));
}

Circulant Circulant::square_char2() const {
  if (!spec_.is_char2())
    throw Error("fast squaring requires characteristic 2; use the ring product");
  if (d_ % 2 == 0)
    throw DimensionError("fast squaring requires odd dimension; use the ring product");
  SquarePermutation perm(d_);
  return square_step(&perm);
}

Circulant Circulant::pow(std::uint64_t e) const {
  unsigned bl = e == 0 ? 0 : 64 - std::countl_zero(e);
  if (bl == 0) return identity(spec_, d_);
  bool fast = spec_.is_char2() && d_ % 2 == 1 && d_ >= 3;
  SquarePermutation perm(fast ? d_ : 3);
  Circulant acc = *this;
  for (int i = static_cast<int>(bl) - 2; i >= 0; --i) {
    acc = fast ? acc.square_step(&perm) : acc * acc;
    if (e >> i & 1) acc = acc * *this;
  }
  return acc;
}

Circulant Circulant::pow(const BigUint& e) const {
  unsigned bl = e.bit_length();
  if (bl == 0) return identity(spec_, d_);
  bool fast = spec_.is_char2() && d_ % 2 == 1 && d_ >= 3;
  SquarePermutation perm(fast ? d_ : 3);
  Circulant acc = *this;
  for (int i = static_cast<int>(bl) - 2; i >= 0; --i) {
    acc = fast ? acc.square_step(&perm) : acc * acc;
    if (e.bit(static_cast<unsigned>(i))) acc = acc * *this;
  }
  return acc;
}

Circulant Circulant::inverse() const {
  Poly ring_mod = Poly::x_pow_minus_one(spec_, d_);
  PolyEgcd e = poly_egcd(representer(), ring_mod);
  if (e.g.degree() != 0)
    throw NotInvertibleError("circulant is not invertible: gcd(representer, x^" +
                                 std::to_string(d_) + " - 1) = " + e.g.to_string(),
                             e.g.to_string());
  return from_poly(spec_, d_, e.u % ring_mod);
}

bool Circulant::is_unit() const {
  Poly g = poly_gcd(representer(), Poly::x_pow_minus_one(spec_, d_));
  return g.degree() == 0 && !g.is_zero();
}

FieldElement Circulant::row_sum() const {
  FieldElement acc = spec_.zero();
  for (std::uint64_t v : row_) acc = acc + FieldElement(spec_, v);
  return acc;
}

FieldElement Circulant::det() const { return expand().det(); }

CrtPair Circulant::crt_split(const Poly& psi) const {
  if (d_ % spec_.p() == 0)
    throw InseparableModulusError("gcd(d, q) != 1: the ring does not split");
  if (psi.degree() != static_cast<int>(d_) - 1)
    throw DimensionError("psi degree does not match dimension");
  Poly rep = representer();
  return CrtPair(rep.eval(spec_.one()), rep % psi);
}

Circulant Circulant::crt_lift(const CrtPair& pair, unsigned d, const Poly& psi) {
  const FieldSpec& spec = pair.at_one().spec();
  if (d % spec.p() == 0)
    throw InseparableModulusError("gcd(d, q) != 1: the ring does not split");
  if (psi.degree() != static_cast<int>(d) - 1)
    throw DimensionError("psi degree does not match dimension");
  // phi = residue + (at_one - residue(1)) * psi / psi(1); psi(1) = d != 0 in F_q.
  FieldElement psi_at_one = psi.eval(spec.one());
  FieldElement delta = pair.at_one() - pair.residue().eval(spec.one());
  Poly phi = pair.residue() + psi.scaled(delta * psi_at_one.inverse());
  return from_poly(spec, d, phi);
}

Bytes Circulant::to_bytes() const {
  Bytes out;
  out.reserve(4 + static_cast<std::size_t>(d_) * spec_.element_bytes());
  append_be(out, d_, 4);
  for (std::uint64_t v : row_) append_be(out, v, spec_.element_bytes());
  return out;
}

Circulant Circulant::from_bytes(const FieldSpec& spec, const Bytes& in, std::size_t& pos) {
  std::uint64_t d = read_be(in, pos, 4);
  if (d < 2) throw ParseError("circulant dimension must be >= 2");
  std::vector<std::uint64_t> row;
  row.reserve(d);
  for (std::uint64_t i = 0; i < d; ++i)
    row.push_back(FieldElement::from_bytes(spec, in, pos).value());
  return Circulant(spec, static_cast<unsigned>(d), std::move(row));
}

Circulant Circulant::from_bytes(const FieldSpec& spec, const Bytes& in) {
  std::size_t pos = 0;
  Circulant c = from_bytes(spec, in, pos);
  if (pos != in.size()) throw ParseError("trailing bytes after circulant");
  return c;
}

std::string Circulant::to_display() const {
  std::string out = "circ(";
  for (unsigned i = 0; i < d_; ++i) {
    if (i) out += ",";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(row_[i]));
    out += buf;
  }
  out += ")";
  return out;
}

Circulant random_circulant(const FieldSpec& spec, unsigned d, Rng& rng) {
  std::vector<std::uint64_t> row(d);
  for (auto& v : row) v = random_element(spec, rng).value();
  return Circulant(spec, d, std::move(row));
}

Circulant random_unit_circulant(const FieldSpec& spec, unsigned d, Rng& rng) {
  for (;;) {
    Circulant c = random_circulant(spec, d, rng);
    if (c.is_unit()) return c;
  }
}

}  // namespace circdlp
