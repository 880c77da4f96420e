#pragma once

// Independent brute-force reference implementations used to validate
// the production algorithms.  Everything here is deliberately naive:
// exhaustive face enumeration, nested-loop matrix counting, plain
// determinants.  Nothing in this file shares logic with the candidate
// generation, canonicalization, or split-recursion code paths it
// checks.

#include <vector>

#include "birkhoff/bigint.hpp"
#include "birkhoff/binary_matrix.hpp"

namespace birkhoff::oracle {

// All n! permutation matrices of order n, lexicographic by row->column map.
std::vector<PermutationMatrix> all_permutations(int n);

// The permutation matrices contained in f (its vertices as a face).
std::vector<PermutationMatrix> face_vertices(const BinaryMatrix& f);

// Every face of `top`: all distinct unions of nonempty subsets of its
// vertices, found by closure under union with single vertices.
std::vector<BinaryMatrix> all_faces(const BinaryMatrix& top);

// Facets of `face` opposite vertex v, from the complete face list: the
// faces of dimension dim(face)-1 contained in face and not containing v.
std::vector<BinaryMatrix> facets_opposite(const BinaryMatrix& face, const PermutationMatrix& v);

// Relative volume by the textbook recursion over the complete face
// poset: volume of a vertex is 1, volume of a face is the sum over the
// facets opposite its (lexicographically first) vertex.  No candidate
// trick, no canonicalization, no parent lattice.
BigInt relative_volume(const BinaryMatrix& top);

// Number of nonnegative integer matrices with the given row and column
// sums, by filling cells one at a time.
BigInt contingency_count(const std::vector<int>& rows, const std::vector<int>& cols);

// Magic squares: contingency_count with constant line sums.
BigInt magic_count(int n, int t);

// Lattice volume of a full-dimensional simplex on vertices of B_n
// (d+1 permutation matrices, d = (n-1)^2): |det| of the vertex
// differences in the upper-left-block basis of the difference lattice.
long long simplex_lattice_volume(const std::vector<PermutationMatrix>& vertices);

// All simplices of the standard triangulation rooted at the
// deterministic vertex choice, as explicit vertex chains.  Uses the
// production choose_vertex/opposite_facets but no canonicalization or
// leveled lattice, so it independently checks the volume accumulation.
std::vector<std::vector<PermutationMatrix>> standard_triangulation(const BinaryMatrix& top);

}  // namespace birkhoff::oracle
