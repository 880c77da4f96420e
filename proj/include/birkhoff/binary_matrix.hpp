#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace birkhoff {

// Thrown when an alleged face turns out not to be one (no vertex, not
// closed, empty).
struct invalid_face_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class PermutationMatrix;

// An n x n 0-1 matrix (1 <= n <= 8) packed row-major into a single
// 64-bit word: bit (i,j) lives at position i*n + j.  Faces of the
// Birkhoff polytope B_n are exactly the 0-1 matrices that are unions of
// permutation matrices, and this is the representation used for them
// throughout.  Bits above n*n are always zero, so equality of packed
// words is equality of matrices.
class BinaryMatrix {
  public:
    BinaryMatrix() : n_(1), bits_(0) {}

    BinaryMatrix(int n, std::uint64_t bits) : n_(check_order(n)), bits_(bits) {
        if (n < 8 && (bits >> (n * n)) != 0)
            throw std::invalid_argument("BinaryMatrix: bits set beyond n*n");
    }

    static BinaryMatrix zero(int n) { return BinaryMatrix(n, 0); }

    static BinaryMatrix ones(int n) {
        check_order(n);
        int sq = n * n;
        std::uint64_t b = sq == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << sq) - 1);
        return BinaryMatrix(n, b);
    }

    // Build from row-major strings, e.g. {"011","111","111"}.
    static BinaryMatrix from_rows(std::initializer_list<std::string_view> rows);

    int order() const { return n_; }
    std::uint64_t word() const { return bits_; }

    bool get(int i, int j) const { return (bits_ >> (i * n_ + j)) & 1u; }
    void set(int i, int j, bool v) {
        std::uint64_t m = std::uint64_t{1} << (i * n_ + j);
        bits_ = v ? (bits_ | m) : (bits_ & ~m);
    }

    // Bit j of the result is entry (i, j).
    std::uint64_t row_mask(int i) const {
        return (bits_ >> (i * n_)) & low_bits(n_);
    }

    int popcount() const { return std::popcount(bits_); }
    bool is_zero() const { return bits_ == 0; }

    friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const BinaryMatrix& a, const BinaryMatrix& b) { return !(a == b); }
    // Order by packed word; only meaningful among matrices of equal n.
    friend bool operator<(const BinaryMatrix& a, const BinaryMatrix& b) {
        return a.bits_ < b.bits_;
    }

    static std::uint64_t low_bits(int k) {
        return k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
    }

  private:
    static int check_order(int n) {
        if (n < 1 || n > 8)
            throw std::invalid_argument("BinaryMatrix: order must be in 1..8 (one 64-bit word)");
        return n;
    }

    std::uint8_t n_;
    std::uint64_t bits_;
};

// A permutation matrix of order n; perm[i] is the column of the single
// 1 in row i.
class PermutationMatrix {
  public:
    PermutationMatrix(int n, const std::array<std::uint8_t, 8>& perm) : n_(n), perm_(perm) {}

    static PermutationMatrix identity(int n) {
        std::array<std::uint8_t, 8> p{};
        for (int i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(i);
        return PermutationMatrix(n, p);
    }

    int order() const { return n_; }
    int column_of_row(int i) const { return perm_[i]; }

    BinaryMatrix matrix() const {
        std::uint64_t b = 0;
        for (int i = 0; i < n_; ++i) b |= std::uint64_t{1} << (i * n_ + perm_[i]);
        return BinaryMatrix(n_, b);
    }

    friend bool operator==(const PermutationMatrix& a, const PermutationMatrix& b) {
        if (a.n_ != b.n_) return false;
        for (int i = 0; i < a.n_; ++i)
            if (a.perm_[i] != b.perm_[i]) return false;
        return true;
    }

  private:
    std::uint8_t n_;
    std::array<std::uint8_t, 8> perm_;
};

// True iff every 1 of b is a 1 of a.  Orders must match.
bool contains(const BinaryMatrix& a, const BinaryMatrix& b);

// Bitwise union of the 1-sets.  Orders must match.
BinaryMatrix matrix_union(const BinaryMatrix& a, const BinaryMatrix& b);

BinaryMatrix transpose(const BinaryMatrix& f);

// Row i of the result is row perm[i] of f.
BinaryMatrix permute_rows(const BinaryMatrix& f, const std::array<int, 8>& perm);
// Column j of the result is column perm[j] of f.
BinaryMatrix permute_cols(const BinaryMatrix& f, const std::array<int, 8>& perm);

// Backtracking search for a permutation matrix contained in g, rows in
// index order, columns tried in ascending order, so the witness is
// deterministic (first-fit).  If `required` is given the permutation
// must use that cell.
std::optional<PermutationMatrix> find_permutation(const BinaryMatrix& g);
std::optional<PermutationMatrix> find_permutation(const BinaryMatrix& g, int req_i, int req_j);

// The largest face contained in g: keeps exactly the 1-cells of g that
// are used by some permutation matrix inside g.  Zero matrix if g
// contains no permutation matrix.
BinaryMatrix face_closure(const BinaryMatrix& g);

// Dimension of a face: e + k - 2n, where e is the number of 1s and k
// the number of connected components of the bipartite graph on rows
// and columns with an edge per 1-entry.  Caller guarantees f is a
// nonzero face (a union of permutation matrices).
int dimension(const BinaryMatrix& f);

// Face text format shared with the CLI: n lines of n characters, each
// '0' or '1'.  parse_face rejects ragged lines, characters outside
// {0,1}, wrong line counts, and n > 8.
BinaryMatrix parse_face(std::string_view text);
std::string format_face(const BinaryMatrix& f);

}  // namespace birkhoff
