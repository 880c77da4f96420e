#include "birkhoff/triangulate.hpp"

#include <algorithm>
#include <numeric>

namespace birkhoff {

ScorePair compute_scores(const BinaryMatrix& f) {
    int n = f.order();
    ScorePair s;
    s.n = n;
    for (int i = 0; i < n; ++i)
        s.row_scores[i] = static_cast<std::uint64_t>(std::popcount(f.row_mask(i)));
    for (int j = 0; j < n; ++j) {
        int c = 0;
        for (int i = 0; i < n; ++i) c += f.get(i, j);
        s.col_scores[j] = static_cast<std::uint64_t>(c);
    }
    // Two refinement rounds.  A line's new score pairs its old score
    // with the sum of the opposite-side scores at its 1-cells; the pair
    // is packed positionally, with the base sized to the largest
    // possible second component so the packing stays injective.  The
    // base depends only on the score multiset, so equivariance under
    // row/column permutation is preserved.
    for (int round = 0; round < 2; ++round) {
        std::uint64_t maxscore = 0;
        for (int i = 0; i < n; ++i) maxscore = std::max(maxscore, s.row_scores[i]);
        for (int j = 0; j < n; ++j) maxscore = std::max(maxscore, s.col_scores[j]);
        std::uint64_t base = static_cast<std::uint64_t>(n) * maxscore + 1;
        ScorePair next;
        next.n = n;
        for (int i = 0; i < n; ++i) {
            std::uint64_t acc = 0;
            for (int j = 0; j < n; ++j)
                if (f.get(i, j)) acc += s.col_scores[j];
            next.row_scores[i] = s.row_scores[i] * base + acc;
        }
        for (int j = 0; j < n; ++j) {
            std::uint64_t acc = 0;
            for (int i = 0; i < n; ++i)
                if (f.get(i, j)) acc += s.row_scores[i];
            next.col_scores[j] = s.col_scores[j] * base + acc;
        }
        s = next;
    }
    return s;
}

namespace {

// Standard form: columns stably sorted into weakly increasing column
// score, then rows into weakly increasing row score, tied rows ordered
// by their bit string read as an unsigned integer with column 0 as the
// most significant bit.
std::uint64_t standard_form_word(const BinaryMatrix& f) {
    int n = f.order();
    ScorePair s = compute_scores(f);

    std::array<int, 8> col_order;
    std::iota(col_order.begin(), col_order.begin() + n, 0);
    std::stable_sort(col_order.begin(), col_order.begin() + n,
                     [&](int a, int b) { return s.col_scores[a] < s.col_scores[b]; });

    std::array<std::uint64_t, 8> row_bits{};
    for (int i = 0; i < n; ++i) {
        std::uint64_t bits = 0;
        for (int j = 0; j < n; ++j)
            if (f.get(i, col_order[j])) bits |= std::uint64_t{1} << (n - 1 - j);
        row_bits[i] = bits;
    }

    std::array<int, 8> row_order;
    std::iota(row_order.begin(), row_order.begin() + n, 0);
    std::stable_sort(row_order.begin(), row_order.begin() + n, [&](int a, int b) {
        if (s.row_scores[a] != s.row_scores[b]) return s.row_scores[a] < s.row_scores[b];
        return row_bits[a] < row_bits[b];
    });

    std::uint64_t out = 0;
    for (int i = 0; i < n; ++i) {
        std::uint64_t bits = row_bits[row_order[i]];  // MSB = new column 0
        for (int j = 0; j < n; ++j)
            if ((bits >> (n - 1 - j)) & 1u) out |= std::uint64_t{1} << (i * n + j);
    }
    return out;
}

}  // namespace

BinaryMatrix canonicalize(const BinaryMatrix& f) {
    int n = f.order();
    std::uint64_t cur =
        std::min(standard_form_word(f), standard_form_word(transpose(f)));
    // cur is a standard form, so only its transpose can still improve;
    // the word strictly decreases, hence this terminates, and the
    // result is a fixpoint of the whole map.
    for (;;) {
        std::uint64_t t = standard_form_word(transpose(BinaryMatrix(n, cur)));
        if (t >= cur) return BinaryMatrix(n, cur);
        cur = t;
    }
}

BinaryMatrix exact_canonicalize(const BinaryMatrix& f) {
    int n = f.order();
    if (n > 6)
        throw std::invalid_argument("exact_canonicalize: n > 6 is impractical (n!^2 orbit scan)");
    const BinaryMatrix ft = transpose(f);
    std::uint64_t best = ~std::uint64_t{0};
    std::array<int, 8> rp{}, cp{};
    for (const BinaryMatrix* m : {&f, &ft}) {
        std::iota(rp.begin(), rp.begin() + n, 0);
        do {
            std::iota(cp.begin(), cp.begin() + n, 0);
            do {
                std::uint64_t w = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (m->get(rp[i], cp[j])) w |= std::uint64_t{1} << (i * n + j);
                best = std::min(best, w);
            } while (std::next_permutation(cp.begin(), cp.begin() + n));
        } while (std::next_permutation(rp.begin(), rp.begin() + n));
    }
    return BinaryMatrix(n, best);
}

PermutationMatrix choose_vertex(const BinaryMatrix& f) {
    auto v = find_permutation(f);
    if (!v) throw invalid_face_error("choose_vertex: matrix contains no permutation matrix");
    return *v;
}

std::vector<BinaryMatrix> opposite_facets(const BinaryMatrix& f, const PermutationMatrix& v) {
    int n = f.order();
    BinaryMatrix vm = v.matrix();
    if (!contains(f, vm)) throw invalid_face_error("opposite_facets: v is not a vertex of f");
    if (f == vm) return {};  // zero-dimensional face, no facets

    std::vector<BinaryMatrix> cands;
    cands.reserve(n);
    for (int i = 0; i < n; ++i) {
        BinaryMatrix g = f;
        g.set(i, v.column_of_row(i), false);
        std::uint64_t cand = g.word();
        for (int r = 0; r < n; ++r) {
            if (r == i) continue;
            int c = v.column_of_row(r);
            if (!find_permutation(g, r, c)) cand &= ~(std::uint64_t{1} << (r * n + c));
        }
        BinaryMatrix cm(n, cand);
        if (std::find(cands.begin(), cands.end(), cm) == cands.end()) cands.push_back(cm);
    }

    std::vector<BinaryMatrix> maximal;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < cands.size() && !dominated; ++j)
            if (i != j && contains(cands[j], cands[i]) && cands[i] != cands[j]) dominated = true;
        if (!dominated) maximal.push_back(cands[i]);
    }
    return maximal;
}

std::size_t FaceLattice::total_records() const {
    std::size_t r = 0;
    for (const auto& l : levels) r += l.size();
    return r;
}

std::size_t FaceLattice::total_parent_pointers() const {
    std::size_t r = 0;
    for (const auto& l : levels)
        for (const auto& rec : l)
            for (const auto& pm : rec.parents) r += pm.second;
    return r;
}

FaceLattice build_lattice(const BinaryMatrix& top, const BuildOptions& opts) {
    if (top.is_zero()) throw invalid_face_error("build_lattice: empty face");
    if (face_closure(top) != top)
        throw invalid_face_error("build_lattice: top is not closed (not a union of permutations)");

    auto canon = opts.exact_canonical ? &exact_canonicalize : &canonicalize;
    FaceLattice lat;
    lat.n = top.order();
    lat.top_dimension = dimension(top);
    lat.levels.resize(lat.top_dimension + 1);
    lat.levels[lat.top_dimension].push_back(FaceRecord{canon(top), {}});

    auto stats_so_far = [&](int down_to) {
        std::vector<std::pair<int, std::size_t>> st;
        for (int d = lat.top_dimension; d >= down_to; --d)
            st.emplace_back(d, lat.levels[d].size());
        return st;
    };

    std::size_t records = 1;
    for (int d = lat.top_dimension; d >= 1; --d) {
        const auto& level = lat.levels[d];
        std::vector<std::pair<std::uint64_t, std::uint32_t>> edges;  // (child word, parent index)
        for (std::uint32_t p = 0; p < level.size(); ++p) {
            const BinaryMatrix& face = level[p].face;
            PermutationMatrix v = choose_vertex(face);
            for (const BinaryMatrix& raw : opposite_facets(face, v))
                edges.emplace_back(canon(raw).word(), p);
        }
        std::sort(edges.begin(), edges.end());

        auto& next = lat.levels[d - 1];
        for (std::size_t k = 0; k < edges.size();) {
            std::uint64_t w = edges[k].first;
            FaceRecord rec{BinaryMatrix(lat.n, w), {}};
            while (k < edges.size() && edges[k].first == w) {
                std::uint32_t parent = edges[k].second;
                std::uint32_t mult = 0;
                while (k < edges.size() && edges[k].first == w && edges[k].second == parent) {
                    ++mult;
                    ++k;
                }
                rec.parents.emplace_back(parent, mult);
            }
            next.push_back(std::move(rec));
        }
        records += next.size();
        if (records > opts.memory_cap_records)
            throw budget_exceeded_error(
                "build_lattice: record budget exceeded (" + std::to_string(records) + " > " +
                    std::to_string(opts.memory_cap_records) + ")",
                stats_so_far(d - 1));
    }
    return lat;
}

BigInt accumulate_volume(const FaceLattice& lat) {
    std::vector<BigInt> below(lat.levels[0].size(), BigInt(1));
    for (int d = 1; d <= lat.top_dimension; ++d) {
        std::vector<BigInt> cur(lat.levels[d].size(), BigInt(0));
        const auto& children = lat.levels[d - 1];
        for (std::size_t c = 0; c < children.size(); ++c)
            for (const auto& [parent, mult] : children[c].parents)
                cur[parent] += below[c] * mult;
        below = std::move(cur);
    }
    return below.at(0);
}

BigInt relative_volume(const BinaryMatrix& top, const BuildOptions& opts) {
    return accumulate_volume(build_lattice(top, opts));
}

BigRational true_volume(int n, const BigInt& relvol) {
    if (n < 1 || n > 8) throw std::invalid_argument("true_volume: order must be in 1..8");
    unsigned d = static_cast<unsigned>((n - 1) * (n - 1));
    return BigRational(relvol * ipow(BigInt(n), static_cast<unsigned>(n - 1)), factorial(d));
}

}  // namespace birkhoff
