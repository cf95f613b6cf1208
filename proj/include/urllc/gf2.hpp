#pragma once
// Bit-packed GF(2) vectors, matrices and index permutations.
// Rows are little-endian in 64-bit words: bit j of a row lives in
// word j/64 at position j%64. Unused tail bits are kept at zero so
// that equality and popcount can work word-wise.

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace urllc {

struct BitVec {
  std::size_t n = 0;
  std::vector<std::uint64_t> w;

  BitVec() = default;
  explicit BitVec(std::size_t bits) : n(bits), w((bits + 63) / 64, 0) {}

  bool get(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    std::uint64_t m = std::uint64_t(1) << (i & 63);
    if (v) w[i >> 6] |= m; else w[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { w[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  void xor_with(const BitVec& o);     // *this ^= o, lengths must match
  std::size_t weight() const;         // popcount
  void clear_tail();                  // re-assert the zero-tail invariant

  bool operator==(const BitVec& o) const { return n == o.n && w == o.w; }
  std::string to_string() const;      // "0110..." for diagnostics
};

struct BitMatrix {
  std::size_t rows = 0, cols = 0;
  std::size_t wpr = 0;                // words per row
  std::vector<std::uint64_t> data;    // row-major, rows*wpr words

  BitMatrix() = default;
  BitMatrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), wpr((c + 63) / 64), data(r * wpr, 0) {}

  std::uint64_t* row(std::size_t i) { return data.data() + i * wpr; }
  const std::uint64_t* row(std::size_t i) const { return data.data() + i * wpr; }

  bool get(std::size_t i, std::size_t j) const {
    return (row(i)[j >> 6] >> (j & 63)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool v) {
    std::uint64_t m = std::uint64_t(1) << (j & 63);
    if (v) row(i)[j >> 6] |= m; else row(i)[j >> 6] &= ~m;
  }

  void xor_rows(std::size_t dst, std::size_t src);  // row[dst] ^= row[src]
  void swap_rows(std::size_t a, std::size_t b);
  BitVec row_vec(std::size_t i) const;

  bool operator==(const BitMatrix& o) const {
    return rows == o.rows && cols == o.cols && data == o.data;
  }
};

// Index permutation of length n. Forward application gathers:
// result[i] = v[map[i]]; inverse application scatters back.
struct Permutation {
  std::vector<std::size_t> map;

  Permutation() = default;
  explicit Permutation(std::size_t n);   // identity
  std::size_t size() const { return map.size(); }
  bool is_valid() const;                 // bijection check
  Permutation inverse() const;
};

std::vector<double> apply_forward(const std::vector<double>& v, const Permutation& p);
std::vector<double> apply_inverse(const std::vector<double>& v, const Permutation& p);
BitVec apply_forward(const BitVec& v, const Permutation& p);
BitVec apply_inverse(const BitVec& v, const Permutation& p);

// Gather columns: result(i,j) = m(i, p.map[j]).
BitMatrix permute_columns(const BitMatrix& m, const Permutation& p);

// v (length m.rows) times m over GF(2): result_j = XOR_i v_i * m(i,j).
// Implemented as an XOR of the rows selected by v.
BitVec mat_vec_mod2(const BitMatrix& m, const BitVec& v);

std::size_t rank_mod2(BitMatrix m);  // by value: elimination scratch

// Systematic Gauss-Jordan with column preference. Walks `preference`
// (a permutation of the n column indices, most preferred first) and
// takes a column as the next pivot if it is independent of the pivots
// chosen so far, deferring dependent columns past the first k slots.
// Returns G_kappa = [I_k | P] together with kappa, the refined
// permutation (kappa.map[j] = original column at permuted position j);
// the first k entries of kappa are the pivot columns in preference
// order, the rest are the deferred/unused columns in preference order.
// Throws std::invalid_argument if G has rank < rows.
struct SystematicForm {
  BitMatrix g;          // [I_k | P]
  Permutation kappa;
};
SystematicForm gauss_jordan_systematic(const BitMatrix& g, const Permutation& preference);

}  // namespace urllc
