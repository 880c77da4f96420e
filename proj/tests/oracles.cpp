#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "birkhoff/triangulate.hpp"

namespace birkhoff::oracle {

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

std::vector<PermutationMatrix> face_vertices(const BinaryMatrix& f) {
    std::vector<PermutationMatrix> out;
    for (const auto& p : all_permutations(f.order()))
        if (contains(f, p.matrix())) out.push_back(p);
    return out;
}

std::vector<BinaryMatrix> all_faces(const BinaryMatrix& top) {
    int n = top.order();
    std::vector<std::uint64_t> vertex_words;
    for (const auto& p : face_vertices(top)) vertex_words.push_back(p.matrix().word());

    std::unordered_set<std::uint64_t> seen(vertex_words.begin(), vertex_words.end());
    std::vector<std::uint64_t> queue(seen.begin(), seen.end());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::uint64_t w = queue[head];
        for (std::uint64_t v : vertex_words) {
            std::uint64_t u = w | v;
            if (seen.insert(u).second) queue.push_back(u);
        }
    }
    std::sort(queue.begin(), queue.end());
    std::vector<BinaryMatrix> out;
    out.reserve(queue.size());
    for (std::uint64_t w : queue) out.emplace_back(n, w);
    return out;
}

std::vector<BinaryMatrix> facets_opposite(const BinaryMatrix& face, const PermutationMatrix& v) {
    int d = dimension(face);
    std::vector<BinaryMatrix> out;
    for (const BinaryMatrix& g : all_faces(face))
        if (dimension(g) == d - 1 && !contains(g, v.matrix())) out.push_back(g);
    return out;
}

BigInt relative_volume(const BinaryMatrix& top) {
    std::vector<BinaryMatrix> faces = all_faces(top);
    std::map<int, std::vector<BinaryMatrix>> by_dim;
    for (const BinaryMatrix& f : faces) by_dim[dimension(f)].push_back(f);

    std::unordered_map<std::uint64_t, BigInt> vol;
    for (const BinaryMatrix& f : by_dim[0]) vol[f.word()] = 1;
    for (auto& [d, list] : by_dim) {
        if (d == 0) continue;
        for (const BinaryMatrix& f : list) {
            std::uint64_t vword = face_vertices(f).front().matrix().word();
            BigInt acc = 0;
            for (const BinaryMatrix& g : by_dim.at(d - 1))
                if (contains(f, g) && (vword & ~g.word()) != 0) acc += vol.at(g.word());
            vol[f.word()] = acc;
        }
    }
    return vol.at(top.word());
}

BigInt contingency_count(const std::vector<int>& rows, const std::vector<int>& cols) {
    long long rsum = 0, csum = 0;
    for (int r : rows) rsum += r;
    for (int c : cols) csum += c;
    if (rsum != csum) return 0;

    std::vector<int> colbud = cols;
    BigInt count = 0;
    auto rec = [&](auto&& self, std::size_t i, std::size_t j, int rowleft) -> void {
        if (i == rows.size()) {
            count += 1;
            return;
        }
        if (j == cols.size()) {
            if (rowleft == 0) self(self, i + 1, 0, i + 1 < rows.size() ? rows[i + 1] : 0);
            return;
        }
        if (j + 1 == cols.size()) {
            // last cell of the row is forced
            if (rowleft <= colbud[j]) {
                colbud[j] -= rowleft;
                self(self, i, j + 1, 0);
                colbud[j] += rowleft;
            }
            return;
        }
        int hi = std::min(rowleft, colbud[j]);
        for (int v = 0; v <= hi; ++v) {
            colbud[j] -= v;
            self(self, i, j + 1, rowleft - v);
            colbud[j] += v;
        }
    };
    if (rows.empty()) return 1;
    rec(rec, 0, 0, rows[0]);
    return count;
}

BigInt magic_count(int n, int t) {
    return contingency_count(std::vector<int>(n, t), std::vector<int>(n, t));
}

namespace {

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

}  // namespace

long long simplex_lattice_volume(const std::vector<PermutationMatrix>& vertices) {
    int n = vertices.front().order();
    int d = (n - 1) * (n - 1);
    if (vertices.size() != static_cast<std::size_t>(d) + 1)
        throw std::invalid_argument("simplex_lattice_volume: need d+1 vertices");

    auto coords = [&](const PermutationMatrix& p, long long* out) {
        BinaryMatrix m = p.matrix();
        for (int i = 0; i < n - 1; ++i)
            for (int j = 0; j < n - 1; ++j) out[i * (n - 1) + j] = m.get(i, j) ? 1 : 0;
    };
    std::vector<long long> base(d), row(d), a(static_cast<std::size_t>(d) * d);
    coords(vertices[0], base.data());
    for (int i = 1; i <= d; ++i) {
        coords(vertices[i], row.data());
        for (int j = 0; j < d; ++j) a[static_cast<std::size_t>(i - 1) * d + j] = row[j] - base[j];
    }
    long long det = bareiss_det(a, d);
    return det < 0 ? -det : det;
}

namespace {

void collect_simplices(const BinaryMatrix& f, std::vector<PermutationMatrix>& chain,
                       std::vector<std::vector<PermutationMatrix>>& out) {
    PermutationMatrix v = choose_vertex(f);
    chain.push_back(v);
    if (f == v.matrix()) {
        out.push_back(chain);
    } else {
        for (const BinaryMatrix& g : opposite_facets(f, v)) collect_simplices(g, chain, out);
    }
    chain.pop_back();
}

}  // namespace

std::vector<std::vector<PermutationMatrix>> standard_triangulation(const BinaryMatrix& top) {
    std::vector<std::vector<PermutationMatrix>> out;
    std::vector<PermutationMatrix> chain;
    collect_simplices(top, chain, out);
    return out;
}

}  // namespace birkhoff::oracle
