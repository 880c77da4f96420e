#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "birkhoff/triangulate.hpp"

namespace birkhoff {

namespace {

// All permutations of order n in lexicographic order.
std::vector<PermutationMatrix> all_permutations(int n) {
    std::vector<PermutationMatrix> out;
    std::array<int, 8> p{};
    std::iota(p.begin(), p.begin() + n, 0);
    do {
        std::array<std::uint8_t, 8> a{};
        for (int i = 0; i < n; ++i) a[i] = static_cast<std::uint8_t>(p[i]);
        out.emplace_back(n, a);
    } while (std::next_permutation(p.begin(), p.begin() + n));
    return out;
}

// Determinant of a d x d integer matrix by fraction-free (Bareiss)
// elimination.  Entries here are coordinates of permutation-matrix
// differences, so intermediates stay tiny (Hadamard-bounded).
long long bareiss_det(std::vector<long long>& a, int d) {
    long long sign = 1, den = 1;
    for (int k = 0; k + 1 < d; ++k) {
        if (a[k * d + k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < d; ++i)
                if (a[i * d + k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (int j = k; j < d; ++j) std::swap(a[k * d + j], a[piv * d + j]);
            sign = -sign;
        }
        for (int i = k + 1; i < d; ++i) {
            for (int j = k + 1; j < d; ++j)
                a[i * d + j] = (a[i * d + j] * a[k * d + k] - a[i * d + k] * a[k * d + j]) / den;
            a[i * d + k] = 0;
        }
        den = a[k * d + k];
    }
    return sign * a[(d - 1) * d + (d - 1)];
}

// Membership recursion with memoization shared across queries.  Vertex
// sets are masks over a fixed permutation indexing (n <= 4, so at most
// 24 bits); faces of B_4 fit 16 bits, so (face, mask) packs into one
// 64-bit key.
struct MembershipContext {
    int n;
    std::vector<PermutationMatrix> perms;
    std::vector<std::uint64_t> perm_words;
    std::unordered_map<std::uint64_t, bool> memo;
    std::unordered_map<std::uint64_t, std::vector<BinaryMatrix>> facets_memo;

    explicit MembershipContext(int order) : n(order), perms(all_permutations(order)) {
        perm_words.reserve(perms.size());
        for (const auto& p : perms) perm_words.push_back(p.matrix().word());
    }

    const std::vector<BinaryMatrix>& facets_opposite(const BinaryMatrix& face, int v) {
        std::uint64_t key = (face.word() << 5) | static_cast<std::uint64_t>(v);
        auto it = facets_memo.find(key);
        if (it != facets_memo.end()) return it->second;
        return facets_memo.emplace(key, opposite_facets(face, perms[v])).first->second;
    }

    bool is_member(std::uint32_t mask, const BinaryMatrix& face) {
        if (std::popcount(mask) == 1) return true;  // a vertex is its own triangulation
        std::uint64_t key = (face.word() << 24) | mask;
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        bool ok = false;
        for (std::uint32_t rest = mask; rest && !ok;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint32_t others = mask & ~(std::uint32_t{1} << v);
            for (const BinaryMatrix& g : facets_opposite(face, v)) {
                bool inside = true;
                for (std::uint32_t w = others; w && inside;) {
                    int idx = std::countr_zero(w);
                    w &= w - 1;
                    inside = (perm_words[idx] & ~g.word()) == 0;
                }
                if (inside && is_member(others, g)) {
                    ok = true;
                    break;
                }
            }
        }
        memo.emplace(key, ok);
        return ok;
    }
};

}  // namespace

bool in_some_standard_triangulation(const BinaryMatrix& face,
                                    const std::vector<PermutationMatrix>& simplex) {
    int n = face.order();
    if (n > 4)
        throw std::invalid_argument("in_some_standard_triangulation: supported for n <= 4 only");
    static thread_local std::unordered_map<int, MembershipContext> contexts;
    auto [it, inserted] = contexts.try_emplace(n, n);
    MembershipContext& ctx = it->second;

    std::uint32_t mask = 0;
    for (const auto& v : simplex) {
        if (!contains(face, v.matrix()))
            throw invalid_face_error("in_some_standard_triangulation: vertex not in face");
        std::uint64_t w = v.matrix().word();
        auto pos = std::find(ctx.perm_words.begin(), ctx.perm_words.end(), w);
        mask |= std::uint32_t{1} << (pos - ctx.perm_words.begin());
    }
    return ctx.is_member(mask, face);
}

SimplexCensus census_minimal_simplices(int n) {
    if (n != 4)
        throw std::invalid_argument(
            "census_minimal_simplices: only n = 4 is supported (combinatorial explosion)");

    MembershipContext ctx(n);
    const int nperms = static_cast<int>(ctx.perms.size());  // 24
    const int d = (n - 1) * (n - 1);                        // 9, simplex has d+1 vertices

    // Coordinates of each vertex in the difference-lattice basis: the
    // upper-left (n-1)x(n-1) block, flattened.
    std::vector<std::array<long long, 9>> coord(nperms);
    for (int p = 0; p < nperms; ++p) {
        BinaryMatrix m = ctx.perms[p].matrix();
        for (int i = 0; i < n - 1; ++i)
            for (int j = 0; j < n - 1; ++j) coord[p][i * (n - 1) + j] = m.get(i, j) ? 1 : 0;
    }

    SimplexCensus census{0, 0};
    BinaryMatrix top = BinaryMatrix::ones(n);
    std::vector<int> sel(d + 1);
    std::iota(sel.begin(), sel.end(), 0);
    std::vector<long long> a(static_cast<std::size_t>(d) * d);
    for (;;) {
        for (int i = 1; i <= d; ++i)
            for (int j = 0; j < d; ++j)
                a[static_cast<std::size_t>(i - 1) * d + j] =
                    coord[sel[i]][j] - coord[sel[0]][j];
        long long det = bareiss_det(a, d);
        if (det == 1 || det == -1) {
            census.total += 1;
            std::uint32_t mask = 0;
            for (int i = 0; i <= d; ++i) mask |= std::uint32_t{1} << sel[i];
            if (ctx.is_member(mask, top)) census.in_standard += 1;
        }
        // next (d+1)-combination of {0..nperms-1}
        int i = d;
        while (i >= 0 && sel[i] == nperms - 1 - (d - i)) --i;
        if (i < 0) break;
        ++sel[i];
        for (int j = i + 1; j <= d; ++j) sel[j] = sel[j - 1] + 1;
    }
    return census;
}

}  // namespace birkhoff
