#include "grc/code.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace grc {

namespace {

// Gray image of one ring row as packed bits; coordinate i occupies bits
// [i*2^k, (i+1)*2^k).
void pack_gray_row(const std::vector<RingValue>& row, int k, std::uint64_t* out, int words) {
  std::fill(out, out + words, 0);
  const int slice = 1 << k;
  for (size_t i = 0; i < row.size(); ++i) {
    const std::uint64_t img = gray_map(row[i]);
    const size_t bit = i * slice;
    out[bit / 64] |= img << (bit % 64);
    // slices never straddle word boundaries: slice divides 64
  }
}

BitMatrix gray_span_basis(RingSpec ring, int length,
                          const std::vector<std::vector<RingValue>>& rows) {
  const int ncols = length * ring.monomials();
  BitMatrix m(0, ncols);
  std::vector<RingValue> scaled(length, RingValue::zero(ring));
  std::vector<std::uint64_t> buf(m.words());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != length)
      throw std::invalid_argument("generator row length mismatch");
    for (int mono = 0; mono < ring.monomials(); ++mono) {
      const RingValue mv(ring, static_cast<std::uint16_t>(1u << mono));
      for (int i = 0; i < length; ++i) scaled[i] = ring_mul(mv, row[i]);
      pack_gray_row(scaled, ring.k, buf.data(), m.words());
      m.append_row_from(buf.data());
    }
  }
  return rref(m);
}

}  // namespace

LinearCode code_from_ring_rows(RingSpec ring, GroupPtr group, int length,
                               std::vector<std::vector<RingValue>> rows) {
  LinearCode c;
  c.ring = ring;
  c.length = length;
  c.group = std::move(group);
  c.generators = std::move(rows);
  c.basis = gray_span_basis(ring, length, c.generators);
  c.binary_rank = c.basis.rows();
  return c;
}

LinearCode code_from_sigma(const SigmaMatrix& m) {
  std::vector<std::vector<RingValue>> rows;
  rows.reserve(m.n);
  for (int i = 0; i < m.n; ++i)
    rows.emplace_back(m.entries.begin() + static_cast<size_t>(i) * m.n,
                      m.entries.begin() + static_cast<size_t>(i + 1) * m.n);
  return code_from_ring_rows(m.ring, m.group, m.n, std::move(rows));
}

LinearCode code_from_binary_rows(int length, const std::vector<std::vector<int>>& rows) {
  const RingSpec f2{0};
  std::vector<std::vector<RingValue>> ring_rows;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != length)
      throw std::invalid_argument("binary row length mismatch");
    std::vector<RingValue> rr;
    rr.reserve(r.size());
    for (int b : r) rr.emplace_back(f2, static_cast<std::uint16_t>(b & 1));
    ring_rows.push_back(std::move(rr));
  }
  return code_from_ring_rows(f2, nullptr, length, std::move(ring_rows));
}

int cardinality_log2(const LinearCode& c) { return c.binary_rank; }

LinearCode gray_image(const LinearCode& c) {
  LinearCode img;
  img.ring = RingSpec{0};
  img.length = c.image_length();
  img.group = nullptr;
  img.basis = c.basis;
  img.binary_rank = c.binary_rank;
  img.generators.reserve(c.basis.rows());
  const RingSpec f2{0};
  for (int r = 0; r < c.basis.rows(); ++r) {
    std::vector<RingValue> row;
    row.reserve(img.length);
    for (int j = 0; j < img.length; ++j) row.emplace_back(f2, static_cast<std::uint16_t>(c.basis.get(r, j)));
    img.generators.push_back(std::move(row));
  }
  return img;
}

LinearCode dual(const LinearCode& c) {
  const int k = c.ring.k;
  const int mono = c.ring.monomials();
  const int ncols = c.length * mono;  // unknowns w_{j,T} in monomial coordinates
  BitMatrix constraints(0, ncols);
  std::vector<std::uint64_t> buf(constraints.words());
  // Component U of [g, w] = sum_j sum_{T subset U} g_{j, U\T} w_{j,T}.
  for (const auto& g : c.generators) {
    for (int U = 0; U < mono; ++U) {
      std::fill(buf.begin(), buf.end(), 0);
      bool nonzero = false;
      for (int j = 0; j < c.length; ++j) {
        const std::uint16_t bits = g[j].bits();
        // enumerate T subset of U
        for (int T = U;; T = (T - 1) & U) {
          if ((bits >> (U ^ T)) & 1) {
            const size_t col = static_cast<size_t>(j) * mono + T;
            buf[col / 64] ^= std::uint64_t{1} << (col % 64);
            nonzero = true;
          }
          if (T == 0) break;
        }
      }
      if (nonzero) constraints.append_row_from(buf.data());
    }
  }

  const BitMatrix sols = nullspace(constraints);
  std::vector<std::vector<RingValue>> rows;
  rows.reserve(sols.rows());
  for (int r = 0; r < sols.rows(); ++r) {
    std::vector<RingValue> row;
    row.reserve(c.length);
    for (int j = 0; j < c.length; ++j) {
      std::uint16_t bits = 0;
      for (int T = 0; T < mono; ++T)
        if (sols.get(r, j * mono + T)) bits |= static_cast<std::uint16_t>(1u << T);
      row.emplace_back(c.ring, bits);
    }
    rows.push_back(std::move(row));
  }
  LinearCode d = code_from_ring_rows(c.ring, c.group, c.length, std::move(rows));
  (void)k;
  return d;
}

namespace {

// Number of nonzero ring coordinates of a packed Gray word. Folds each
// 2^k-bit slice down to its lowest bit, then popcounts the fold mask.
struct HammingFolder {
  int k;
  std::uint64_t slice_mask;  // lowest bit of every slice
  explicit HammingFolder(int k_) : k(k_) {
    const int slice = 1 << k_;
    slice_mask = 0;
    for (int b = 0; b < 64; b += slice) slice_mask |= std::uint64_t{1} << b;
  }
  int weight(const std::uint64_t* w, int words) const {
    int total = 0;
    for (int i = 0; i < words; ++i) {
      std::uint64_t x = w[i];
      for (int s = 1; s < (1 << k); s <<= 1) x |= x >> s;
      total += std::popcount(x & slice_mask);
    }
    return total;
  }
};

int lee_weight_words(const std::uint64_t* w, int words) {
  int total = 0;
  for (int i = 0; i < words; ++i) total += std::popcount(w[i]);
  return total;
}

// Walks all 2^rank codewords in Gray-code order, invoking f(word) for every
// nonzero codeword. f returns false to stop early.
template <typename F>
void enumerate_codewords(const LinearCode& c, F&& f) {
  const int r = c.binary_rank;
  if (r > kEnumerationRankBound) throw std::invalid_argument("code too large to enumerate");
  if (r == 0) return;
  const int words = c.basis.words();
  std::vector<std::uint64_t> cur(words, 0);
  const std::uint64_t total = std::uint64_t{1} << r;
  for (std::uint64_t m = 1; m < total; ++m) {
    const int flip = std::countr_zero(m);
    const std::uint64_t* row = c.basis.row(flip);
    for (int w = 0; w < words; ++w) cur[w] ^= row[w];
    if (!f(cur.data())) return;
  }
}

}  // namespace

std::optional<int> min_distance(const LinearCode& c, Metric metric) {
  if (c.is_zero_code()) return std::nullopt;
  const int words = c.basis.words();
  int best = c.image_length() + 1;
  if (metric == Metric::lee || c.ring.is_f2()) {
    enumerate_codewords(c, [&](const std::uint64_t* w) {
      best = std::min(best, lee_weight_words(w, words));
      return best > 1;
    });
  } else {
    const HammingFolder fold(c.ring.k);
    enumerate_codewords(c, [&](const std::uint64_t* w) {
      best = std::min(best, fold.weight(w, words));
      return best > 1;
    });
  }
  return best;
}

bool has_word_below(const LinearCode& c, Metric metric, int threshold) {
  if (c.is_zero_code()) return false;
  const int words = c.basis.words();
  bool found = false;
  if (metric == Metric::lee || c.ring.is_f2()) {
    enumerate_codewords(c, [&](const std::uint64_t* w) {
      found = lee_weight_words(w, words) < threshold;
      return !found;
    });
  } else {
    const HammingFolder fold(c.ring.k);
    enumerate_codewords(c, [&](const std::uint64_t* w) {
      found = fold.weight(w, words) < threshold;
      return !found;
    });
  }
  return found;
}

WeightEnumerator weight_enumerator(const LinearCode& c, WeightKind kind) {
  WeightEnumerator e;
  e.kind = kind;
  e.total = std::uint64_t{1} << c.binary_rank;
  const int words = c.basis.words();
  if (kind == WeightKind::complete) {
    const int mono = c.ring.monomials();
    const int slice = mono;
    std::vector<std::uint32_t> comp(static_cast<size_t>(1) << mono, 0);
    // composition of the zero word
    comp.assign(comp.size(), 0);
    comp[0] = static_cast<std::uint32_t>(c.length);
    e.by_composition[comp] = 1;
    enumerate_codewords(c, [&](const std::uint64_t* w) {
      std::vector<std::uint32_t> cc(static_cast<size_t>(1) << mono, 0);
      for (int i = 0; i < c.length; ++i) {
        const size_t bit = static_cast<size_t>(i) * slice;
        const std::uint16_t img =
            static_cast<std::uint16_t>((w[bit / 64] >> (bit % 64)) & ((1u << slice) - 1));
        ++cc[gray_unmap(c.ring, img).bits()];
      }
      ++e.by_composition[cc];
      return true;
    });
    return e;
  }

  std::vector<std::uint64_t> hist(static_cast<size_t>(c.image_length()) + 1, 0);
  if (kind == WeightKind::lee || c.ring.is_f2()) {
    enumerate_codewords(c, [&](const std::uint64_t* w) {
      ++hist[lee_weight_words(w, words)];
      return true;
    });
  } else {
    const HammingFolder fold(c.ring.k);
    enumerate_codewords(c, [&](const std::uint64_t* w) {
      ++hist[fold.weight(w, words)];
      return true;
    });
  }
  hist[0] += 1;  // zero word
  for (size_t wgt = 0; wgt < hist.size(); ++wgt)
    if (hist[wgt]) e.by_weight[static_cast<int>(wgt)] = hist[wgt];
  return e;
}

bool is_self_orthogonal(const LinearCode& c) {
  // Bilinearity over the ring makes checking generator pairs sufficient.
  for (size_t i = 0; i < c.generators.size(); ++i)
    for (size_t j = i; j < c.generators.size(); ++j) {
      RingValue acc = RingValue::zero(c.ring);
      for (int m = 0; m < c.length; ++m)
        acc = ring_add(acc, ring_mul(c.generators[i][m], c.generators[j][m]));
      if (!acc.is_zero()) return false;
    }
  return true;
}

bool is_self_dual(const LinearCode& c) {
  return is_self_orthogonal(c) && 2 * c.binary_rank == c.image_length();
}

bool is_type_ii(const LinearCode& c) {
  if (!c.ring.is_f2()) throw std::invalid_argument("type II applies to binary codes");
  bool ok = true;
  enumerate_codewords(c, [&](const std::uint64_t* w) {
    ok = lee_weight_words(w, c.basis.words()) % 4 == 0;
    return ok;
  });
  return ok;
}

bool is_formally_self_dual(const LinearCode& c, WeightKind kind) {
  const LinearCode d = dual(c);
  const WeightEnumerator a = weight_enumerator(c, kind);
  const WeightEnumerator b = weight_enumerator(d, kind);
  return kind == WeightKind::complete ? a.by_composition == b.by_composition
                                      : a.by_weight == b.by_weight;
}

LinearCode permute_coordinates(const LinearCode& c, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != c.length)
    throw std::invalid_argument("permutation length mismatch");
  std::vector<std::vector<RingValue>> rows = c.generators;
  for (auto& row : rows) {
    std::vector<RingValue> nr(row.size(), RingValue::zero(c.ring));
    for (int i = 0; i < c.length; ++i) nr[perm[i]] = row[i];
    row = std::move(nr);
  }
  return code_from_ring_rows(c.ring, c.group, c.length, std::move(rows));
}

bool codes_equal(const LinearCode& a, const LinearCode& b) {
  return a.ring == b.ring && a.length == b.length && a.basis == b.basis;
}

bool check_group_invariance(const LinearCode& c) {
  if (!c.group) throw std::invalid_argument("code carries no group");
  if (c.group->order() != c.length) throw std::invalid_argument("length mismatch");
  for (int h = 0; h < c.group->order(); ++h) {
    const auto perm = left_multiplication_permutation(*c.group, h);
    if (!codes_equal(permute_coordinates(c, perm), c)) return false;
  }
  return true;
}

std::vector<int> shift_equivalence_witness(const GroupRingElement& v, int h) {
  std::vector<int> perm(v.group->order());
  for (int j = 0; j < v.group->order(); ++j) perm[j] = v.group->mul(j, h);
  return perm;
}

bool isodual_witness_check(const LinearCode& c, const std::vector<int>& perm) {
  return codes_equal(permute_coordinates(c, perm), dual(c));
}

std::vector<int> csd_isodual_permutation(int s, int dihedral_order) {
  const int k = dihedral_order / 2;
  const int half = s * k;
  std::vector<int> perm(2 * half);
  for (int j = 0; j < 2; ++j)
    for (int zi = 0; zi < s; ++zi)
      for (int ai = 0; ai < k; ++ai) {
        const int from = j * half + zi * k + ai;
        const int to = (1 - j) * half + ((s - zi) % s) * k + ai;
        perm[from] = to;
      }
  return perm;
}

std::vector<int> cyclic_isodual_permutation(int n) {
  const int k = n / 2;
  std::vector<int> perm(n);
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < k; ++i) perm[j * k + i] = (1 - j) * k + (k - i) % k;
  return perm;
}

bool macwilliams_check(const LinearCode& c) {
  if (!c.ring.is_f2()) throw std::invalid_argument("macwilliams check applies to binary codes");
  const int n = c.length;
  const WeightEnumerator wc = weight_enumerator(c, WeightKind::hamming);
  const WeightEnumerator wd = weight_enumerator(dual(c), WeightKind::hamming);
  // B_j = (1/|C|) sum_w A_w K_j(w),
  // K_j(w) = sum_i (-1)^i C(w,i) C(n-w, j-i).
  std::vector<std::vector<__int128>> binom(n + 1, std::vector<__int128>(n + 1, 0));
  for (int a = 0; a <= n; ++a) {
    binom[a][0] = 1;
    for (int b = 1; b <= a; ++b)
      binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : 0);
  }
  const __int128 size = static_cast<__int128>(1) << c.binary_rank;
  for (int j = 0; j <= n; ++j) {
    __int128 acc = 0;
    for (const auto& [w, count] : wc.by_weight) {
      __int128 kr = 0;
      for (int i = 0; i <= j; ++i) {
        if (i > w || j - i > n - w) continue;
        const __int128 term = binom[w][i] * binom[n - w][j - i];
        kr += (i % 2 == 0) ? term : -term;
      }
      acc += static_cast<__int128>(count) * kr;
    }
    if (acc % size != 0) return false;
    const __int128 expect = acc / size;
    const auto it = wd.by_weight.find(j);
    const __int128 actual = (it == wd.by_weight.end()) ? 0 : static_cast<__int128>(it->second);
    if (expect != actual) return false;
  }
  return true;
}

namespace {

bool entries_circulant(const SigmaMatrix& m, int r0, int c0, int size, bool reverse) {
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      const int src = reverse ? (j + i) % size : ((j - i) % size + size) % size;
      if (!(m.at(r0 + i, c0 + j) == m.at(r0, c0 + src))) return false;
    }
  return true;
}

bool blocks_equal(const SigmaMatrix& m, int r0, int c0, int r1, int c1, int size) {
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if (!(m.at(r0 + i, c0 + j) == m.at(r1 + i, c1 + j))) return false;
  return true;
}

BlockKind classify_block(const SigmaMatrix& m, int r0, int c0, int size) {
  bool zero = true, ident = true;
  for (int i = 0; i < size && (zero || ident); ++i)
    for (int j = 0; j < size && (zero || ident); ++j) {
      const auto& x = m.at(r0 + i, c0 + j);
      if (!x.is_zero()) zero = false;
      if (!(x == ((i == j) ? RingValue::one(m.ring) : RingValue::zero(m.ring)))) ident = false;
    }
  if (zero) return BlockKind::zero;
  if (ident) return BlockKind::identity;
  if (entries_circulant(m, r0, c0, size, false)) return BlockKind::circulant;
  if (entries_circulant(m, r0, c0, size, true)) return BlockKind::reverse_circulant;
  return BlockKind::general;
}

}  // namespace

MatrixShape matrix_shape(const SigmaMatrix& m) {
  MatrixShape s;
  s.circulant = entries_circulant(m, 0, 0, m.n, false);
  s.reverse_circulant = entries_circulant(m, 0, 0, m.n, true);
  if (m.n % 2 == 0) {
    const int h = m.n / 2;
    s.block_a = classify_block(m, 0, 0, h);
    s.block_b = classify_block(m, 0, h, h);
    s.block_c = classify_block(m, h, 0, h);
    s.block_d = classify_block(m, h, h, h);
    const bool d_is_a = blocks_equal(m, h, h, 0, 0, h);
    const bool c_is_b = blocks_equal(m, h, 0, 0, h, h);
    s.block_abba = d_is_a && c_is_b;
    s.block_abda = d_is_a && !c_is_b;
  }
  return s;
}

std::string to_string(BlockKind k) {
  switch (k) {
    case BlockKind::zero: return "zero";
    case BlockKind::identity: return "identity";
    case BlockKind::circulant: return "circulant";
    case BlockKind::reverse_circulant: return "reverse-circulant";
    case BlockKind::general: return "general";
  }
  return "?";
}

std::string MatrixShape::describe() const {
  if (circulant && reverse_circulant) return "circulant, reverse-circulant";
  if (circulant) return "circulant";
  if (reverse_circulant) return "reverse-circulant";
  if (block_abba)
    return "[[A,B],[B,A]] with A " + to_string(block_a) + ", B " + to_string(block_b);
  if (block_abda)
    return "[[A,B],[D,A]] with A " + to_string(block_a) + ", B " + to_string(block_b) + ", D " +
           to_string(block_c);
  return "general";
}

}  // namespace grc
