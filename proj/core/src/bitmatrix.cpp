#include "grc/bitmatrix.hpp"

#include <algorithm>
#include <bit>

namespace grc {

int BitMatrix::leading(int r) const {
  for (int w = 0; w < words_; ++w) {
    const std::uint64_t x = data_[idx(r) + w];
    if (x) return w * 64 + std::countr_zero(x);
  }
  return -1;
}

int BitMatrix::popcount_row(int r) const {
  int c = 0;
  for (int w = 0; w < words_; ++w) c += std::popcount(data_[idx(r) + w]);
  return c;
}

std::string BitMatrix::to_string() const {
  std::string out;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out += get(r, c) ? '1' : '0';
    if (r + 1 < rows_) out += '\n';
  }
  return out;
}

BitMatrix rref(const BitMatrix& m) {
  // pivot column -> basis row storage
  BitMatrix work = m;
  std::vector<int> pivot_row(m.cols(), -1);
  std::vector<int> pivots;
  for (int r = 0; r < work.rows(); ++r) {
    for (;;) {
      const int lead = work.leading(r);
      if (lead < 0) break;
      if (pivot_row[lead] < 0) {
        pivot_row[lead] = r;
        pivots.push_back(lead);
        break;
      }
      work.xor_rows(r, pivot_row[lead]);
    }
  }
  std::sort(pivots.begin(), pivots.end());
  // back-substitute so pivot columns are cleared above and below
  for (size_t a = 0; a < pivots.size(); ++a)
    for (size_t b = a + 1; b < pivots.size(); ++b)
      if (work.get(pivot_row[pivots[a]], pivots[b]))
        work.xor_rows(pivot_row[pivots[a]], pivot_row[pivots[b]]);
  BitMatrix out(static_cast<int>(pivots.size()), m.cols());
  for (size_t a = 0; a < pivots.size(); ++a)
    for (int w = 0; w < m.words(); ++w)
      out.row(static_cast<int>(a))[w] = work.row(pivot_row[pivots[a]])[w];
  return out;
}

int rank(const BitMatrix& m) { return rref(m).rows(); }

BitMatrix nullspace(const BitMatrix& m) {
  const BitMatrix r = rref(m);
  const int n = m.cols();
  std::vector<int> pivot_of_col(n, -1);
  for (int i = 0; i < r.rows(); ++i) pivot_of_col[r.leading(i)] = i;
  BitMatrix out(0, n);
  for (int c = 0; c < n; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    out.append_row();
    const int nr = out.rows() - 1;
    out.set(nr, c, true);
    for (int p = 0; p < n; ++p) {
      const int pr = pivot_of_col[p];
      if (pr >= 0 && r.get(pr, c)) out.set(nr, p, true);
    }
  }
  return rref(out);
}

int rank64(std::uint64_t* rows, int n) {
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    std::uint64_t x = rows[i];
    for (int b = 0; b < rank; ++b) {
      const std::uint64_t lead = rows[b] & (~rows[b] + 1);
      if (x & lead) x ^= rows[b];
    }
    if (x) rows[rank++] = x;
  }
  return rank;
}

int echelon64(const std::uint64_t* rows, int n, std::uint64_t* basis) {
  int cnt = 0;
  for (int i = 0; i < n; ++i) {
    std::uint64_t x = rows[i];
    for (int b = 0; b < cnt; ++b) {
      const std::uint64_t lead = basis[b] & (~basis[b] + 1);
      if (x & lead) x ^= basis[b];
    }
    if (x) basis[cnt++] = x;
  }
  return cnt;
}

int rref64(const std::uint64_t* rows, int n, std::uint64_t* out) {
  const int r = echelon64(rows, n, out);
  // order by leading bit, then clear pivots above
  std::sort(out, out + r, [](std::uint64_t a, std::uint64_t b) {
    return std::countr_zero(a) < std::countr_zero(b);
  });
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      const std::uint64_t lead = out[b] & (~out[b] + 1);
      if (out[a] & lead) out[a] ^= out[b];
    }
  return r;
}

int nullspace64(const std::uint64_t* rows, int n, int ncols, std::vector<std::uint64_t>& out) {
  std::vector<std::uint64_t> basis(static_cast<size_t>(std::min(n, ncols)));
  const int r = rref64(rows, n, basis.data());
  std::vector<int> pivot_of_col(ncols, -1);
  for (int i = 0; i < r; ++i) pivot_of_col[std::countr_zero(basis[i])] = i;
  int nullity = 0;
  for (int c = 0; c < ncols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::uint64_t vec = std::uint64_t{1} << c;
    for (int p = 0; p < ncols; ++p) {
      const int pr = pivot_of_col[p];
      if (pr >= 0 && ((basis[pr] >> c) & 1)) vec |= std::uint64_t{1} << p;
    }
    out.push_back(vec);
    ++nullity;
  }
  return nullity;
}

}  // namespace grc
