#pragma once

// Bit-packed F2 linear algebra. Rows are little-endian bit vectors
// (column j = bit j % 64 of word j / 64). One engine serves every ring in
// scope: R_k codes reduce to F2 through the additive Gray bijection.

#include <cstdint>
#include <string>
#include <vector>

namespace grc {

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64),
        data_(static_cast<size_t>(rows) * words_, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words() const { return words_; }

  bool get(int r, int c) const { return (data_[idx(r) + c / 64] >> (c % 64)) & 1; }
  void set(int r, int c, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (c % 64);
    if (v) data_[idx(r) + c / 64] |= m; else data_[idx(r) + c / 64] &= ~m;
  }
  std::uint64_t* row(int r) { return data_.data() + idx(r); }
  const std::uint64_t* row(int r) const { return data_.data() + idx(r); }

  void xor_rows(int dst, int src) {
    for (int w = 0; w < words_; ++w) data_[idx(dst) + w] ^= data_[idx(src) + w];
  }
  bool row_is_zero(int r) const {
    for (int w = 0; w < words_; ++w)
      if (data_[idx(r) + w]) return false;
    return true;
  }
  void append_row() {
    ++rows_;
    data_.resize(static_cast<size_t>(rows_) * words_, 0);
  }
  void append_row_from(const std::uint64_t* src) {
    append_row();
    for (int w = 0; w < words_; ++w) data_[idx(rows_ - 1) + w] = src[w];
  }

  // Lowest set column of a row, -1 if zero.
  int leading(int r) const;
  int popcount_row(int r) const;

  // "0101..." per row, rows joined by '\n'.
  std::string to_string() const;

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  size_t idx(int r) const { return static_cast<size_t>(r) * words_; }
  int rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> data_;
};

// Canonical reduced row echelon form: pivots are the lowest-index columns,
// rows ordered by pivot, pivot columns cleared everywhere else. Two row
// spaces are equal iff their canonical forms are identical.
BitMatrix rref(const BitMatrix& m);
int rank(const BitMatrix& m);

// Basis of {x in F2^cols : M x = 0}, returned in canonical RREF.
BitMatrix nullspace(const BitMatrix& m);

// --- single-word variants for hot loops (cols <= 64) -----------------------

// Reduces rows in place to an echelon basis; returns the rank.
int rank64(std::uint64_t* rows, int n);

// Echelon basis (not necessarily canonical) of the row span; basis[i] have
// strictly decreasing leading bits. Returns number of basis rows.
int echelon64(const std::uint64_t* rows, int n, std::uint64_t* basis);

// Canonical RREF of a span given as rows; out must hold up to cols entries.
int rref64(const std::uint64_t* rows, int n, std::uint64_t* out);

// Nullspace basis vectors of the system {rows, ncols}; appends to out.
// Returns the nullity.
int nullspace64(const std::uint64_t* rows, int n, int ncols, std::vector<std::uint64_t>& out);

}  // namespace grc
