#include "birkhoff/binary_matrix.hpp"

#include <bit>
#include <vector>

namespace birkhoff {

namespace {

void check_same_order(const BinaryMatrix& a, const BinaryMatrix& b, const char* op) {
    if (a.order() != b.order())
        throw std::invalid_argument(std::string(op) + ": matrix orders differ");
}

}  // namespace

BinaryMatrix BinaryMatrix::from_rows(std::initializer_list<std::string_view> rows) {
    std::string text;
    for (auto r : rows) {
        text.append(r);
        text.push_back('\n');
    }
    return parse_face(text);
}

bool contains(const BinaryMatrix& a, const BinaryMatrix& b) {
    check_same_order(a, b, "contains");
    return (b.word() & ~a.word()) == 0;
}

BinaryMatrix matrix_union(const BinaryMatrix& a, const BinaryMatrix& b) {
    check_same_order(a, b, "union");
    return BinaryMatrix(a.order(), a.word() | b.word());
}

BinaryMatrix transpose(const BinaryMatrix& f) {
    int n = f.order();
    std::uint64_t out = 0;
    std::uint64_t w = f.word();
    while (w) {
        int p = std::countr_zero(w);
        w &= w - 1;
        int i = p / n, j = p % n;
        out |= std::uint64_t{1} << (j * n + i);
    }
    return BinaryMatrix(n, out);
}

BinaryMatrix permute_rows(const BinaryMatrix& f, const std::array<int, 8>& perm) {
    int n = f.order();
    std::uint64_t out = 0;
    for (int i = 0; i < n; ++i)
        out |= f.row_mask(perm[i]) << (i * n);
    return BinaryMatrix(n, out);
}

BinaryMatrix permute_cols(const BinaryMatrix& f, const std::array<int, 8>& perm) {
    return transpose(permute_rows(transpose(f), perm));
}

namespace {

// Core backtracking search.  req_i < 0 means no required cell.
std::optional<PermutationMatrix> backtrack_permutation(const BinaryMatrix& g, int req_i,
                                                       int req_j) {
    int n = g.order();
    std::array<std::uint8_t, 8> perm{};
    // chosen[i]: mask of columns already tried at row i in the current branch
    std::array<std::uint64_t, 8> tried{};
    std::uint64_t used = 0;  // columns taken by rows < i
    int i = 0;
    while (i < n) {
        std::uint64_t avail = g.row_mask(i) & ~used & ~tried[i];
        if (i == req_i) avail &= std::uint64_t{1} << req_j;
        if (avail) {
            int j = std::countr_zero(avail);
            tried[i] |= std::uint64_t{1} << j;
            perm[i] = static_cast<std::uint8_t>(j);
            used |= std::uint64_t{1} << j;
            ++i;
        } else {
            tried[i] = 0;
            if (--i < 0) return std::nullopt;
            used &= ~(std::uint64_t{1} << perm[i]);
        }
    }
    return PermutationMatrix(n, perm);
}

}  // namespace

std::optional<PermutationMatrix> find_permutation(const BinaryMatrix& g) {
    return backtrack_permutation(g, -1, 0);
}

std::optional<PermutationMatrix> find_permutation(const BinaryMatrix& g, int req_i, int req_j) {
    if (!g.get(req_i, req_j)) return std::nullopt;
    return backtrack_permutation(g, req_i, req_j);
}

BinaryMatrix face_closure(const BinaryMatrix& g) {
    int n = g.order();
    std::uint64_t out = 0;
    std::uint64_t w = g.word();
    while (w) {
        int p = std::countr_zero(w);
        w &= w - 1;
        if (backtrack_permutation(g, p / n, p % n))
            out |= std::uint64_t{1} << p;
    }
    return BinaryMatrix(n, out);
}

int dimension(const BinaryMatrix& f) {
    int n = f.order();
    // union-find over 2n nodes: rows 0..n-1, columns n..2n-1
    std::array<int, 16> parent;
    for (int i = 0; i < 2 * n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    std::uint64_t w = f.word();
    int e = 0;
    while (w) {
        int p = std::countr_zero(w);
        w &= w - 1;
        ++e;
        int a = find(p / n), b = find(n + p % n);
        if (a != b) parent[a] = b;
    }
    int k = 0;
    for (int i = 0; i < 2 * n; ++i)
        if (find(i) == i) ++k;
    return e + k - 2 * n;
}

BinaryMatrix parse_face(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!(line.empty() && nl == std::string_view::npos)) lines.push_back(line);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    if (lines.empty()) throw std::invalid_argument("face: empty input");
    std::size_t n = lines[0].size();
    if (n < 1 || n > 8)
        throw std::invalid_argument("face: order must be in 1..8, got line width " +
                                    std::to_string(n));
    if (lines.size() != n)
        throw std::invalid_argument("face: expected " + std::to_string(n) + " lines, got " +
                                    std::to_string(lines.size()));
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (lines[i].size() != n)
            throw std::invalid_argument("face: ragged line " + std::to_string(i + 1));
        for (std::size_t j = 0; j < n; ++j) {
            char c = lines[i][j];
            if (c == '1')
                bits |= std::uint64_t{1} << (i * n + j);
            else if (c != '0')
                throw std::invalid_argument("face: invalid character '" + std::string(1, c) +
                                            "' at line " + std::to_string(i + 1));
        }
    }
    return BinaryMatrix(static_cast<int>(n), bits);
}

std::string format_face(const BinaryMatrix& f) {
    int n = f.order();
    std::string out;
    out.reserve(static_cast<std::size_t>(n) * (n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out.push_back(f.get(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

}  // namespace birkhoff
