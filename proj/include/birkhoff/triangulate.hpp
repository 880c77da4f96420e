#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "birkhoff/bigint.hpp"
#include "birkhoff/binary_matrix.hpp"

namespace birkhoff {

// Thrown by build_lattice when the configured record budget is hit.
// Carries the per-level statistics gathered so far (top-down).
struct budget_exceeded_error : std::runtime_error {
    budget_exceeded_error(std::string msg, std::vector<std::pair<int, std::size_t>> stats)
        : std::runtime_error(std::move(msg)), partial_level_sizes(std::move(stats)) {}
    std::vector<std::pair<int, std::size_t>> partial_level_sizes;  // (dimension, record count)
};

// Row and column scores of a 0-1 matrix.  Permuting rows permutes the
// row scores identically and leaves the column scores unchanged, and
// symmetrically for columns; that equivariance is what canonicalization
// relies on.
struct ScorePair {
    int n = 0;
    std::array<std::uint64_t, 8> row_scores{};
    std::array<std::uint64_t, 8> col_scores{};
};

// Scores built from row/column sums plus two refinement rounds: each
// round pairs a line's old score with the sum of the opposite-side
// scores at its 1-cells, packed positionally into one integer.
ScorePair compute_scores(const BinaryMatrix& f);

// Standard form of f and of transpose(f) (columns sorted by column
// score, rows sorted by row score with lexicographic bit-string
// tie-break), the numerically smaller packed word of the two, iterated
// to a fixpoint so that repeated application is the identity.  Not a
// true orbit canonical form: equivalent faces may (rarely) map to
// distinct representatives, which costs work but never correctness.
BinaryMatrix canonicalize(const BinaryMatrix& f);

// True canonical form: minimum packed word over all row permutations,
// column permutations and transposition.  Exponential in n; intended
// for testing small orders (n <= 6).
BinaryMatrix exact_canonicalize(const BinaryMatrix& f);

// The deterministic first-fit vertex of a nonzero face.
PermutationMatrix choose_vertex(const BinaryMatrix& f);

// The facets of f opposite vertex v: zero each 1-cell of v in turn,
// force to zero whichever other 1-cells of v lose their permutation,
// deduplicate the candidates and keep the maximal ones.  Every result
// is a face of dimension dimension(f) - 1 that does not contain v.
std::vector<BinaryMatrix> opposite_facets(const BinaryMatrix& f, const PermutationMatrix& v);

// One face of the lattice: the canonical representative plus parent
// pointers into the level one dimension up, each with a multiplicity
// (distinct raw facets of the same parent may canonicalize equally).
struct FaceRecord {
    BinaryMatrix face;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> parents;  // (index above, multiplicity)
};

// Leveled face lattice produced by the top-down sweep: levels[d] holds
// the dimension-d canonical faces, sorted by packed word.  The top
// level has exactly one record; level 0 records are permutation
// matrices.
struct FaceLattice {
    int n = 0;
    int top_dimension = 0;
    std::vector<std::vector<FaceRecord>> levels;  // indexed by dimension 0..top_dimension

    std::size_t total_records() const;
    std::size_t total_parent_pointers() const;
};

struct BuildOptions {
    // Abort with budget_exceeded_error once this many records exist.
    std::size_t memory_cap_records = std::size_t{1} << 28;
    // Exact orbit canonicalization instead of the score-based
    // approximation; only sensible for small n.
    bool exact_canonical = false;
};

// Phase one of the triangulation method: from the top face down to the
// vertices, one level per dimension, canonicalized, sorted,
// deduplicated, with parent multiplicities preserved.  top must be a
// nonzero closed face.
FaceLattice build_lattice(const BinaryMatrix& top, const BuildOptions& opts = {});

// Phase two: seed every vertex with volume 1 and accumulate upward
// through the parent pointers.  The result is the number of simplices
// in a standard triangulation of the top face, i.e. its relative
// volume.
BigInt accumulate_volume(const FaceLattice& lattice);

// build_lattice + accumulate_volume.
BigInt relative_volume(const BinaryMatrix& top, const BuildOptions& opts = {});

// Relative volume of B_n converted to Euclidean volume: the minimal
// lattice simplex of B_n has volume n^(n-1) / ((n-1)^2)!.
BigRational true_volume(int n, const BigInt& relvol);

// Census of the minimal simplices on B_4's vertex set: how many
// 10-subsets of the 24 permutation matrices span a simplex of lattice
// volume 1, and how many of those belong to at least one standard
// triangulation.  Only n = 4 is supported; the search space explodes
// beyond that.
struct SimplexCensus {
    BigInt total;
    BigInt in_standard;
};
SimplexCensus census_minimal_simplices(int n);

// True iff the given vertex set is a simplex of at least one standard
// triangulation of `face`: some vertex v of the simplex has a facet of
// `face` opposite it containing the rest, recursively.  n <= 4 only
// (the census's recursive membership test).
bool in_some_standard_triangulation(const BinaryMatrix& face,
                                    const std::vector<PermutationMatrix>& simplex);

}  // namespace birkhoff
