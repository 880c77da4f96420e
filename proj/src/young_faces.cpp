#include "birkhoff/young_faces.hpp"

#include "birkhoff/triangulate.hpp"

namespace birkhoff {

BinaryMatrix staircase_face(int n) {
    if (n < 2 || n > 8) throw std::invalid_argument("staircase_face: order must be in 2..8");
    BinaryMatrix m = BinaryMatrix::zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n && j <= i + 1; ++j) m.set(i, j, true);
    return m;
}

BigInt catalan_product(int n) {
    if (n < 2) throw std::invalid_argument("catalan_product: n must be >= 2");
    BigInt prod = 1;
    for (int i = 0; i <= n - 2; ++i)
        prod *= binomial(2 * static_cast<unsigned>(i), static_cast<unsigned>(i)) / (i + 1);
    return prod;
}

bool verify_conjecture(int n) {
    return relative_volume(staircase_face(n)) == catalan_product(n);
}

}  // namespace birkhoff
