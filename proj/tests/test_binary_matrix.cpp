#include <random>

#include "doctest.h"

#include "birkhoff/binary_matrix.hpp"
#include "oracles.hpp"

using namespace birkhoff;

namespace {

BinaryMatrix random_matrix(int n, std::mt19937_64& rng) {
    std::uint64_t mask = BinaryMatrix::low_bits(n * n);
    return BinaryMatrix(n, rng() & mask);
}

std::array<int, 8> random_perm(int n, std::mt19937_64& rng) {
    std::array<int, 8> p{};
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(p[i], p[rng() % (i + 1)]);
    return p;
}

}  // namespace

TEST_CASE("construction rejects bad orders and stray bits") {
    CHECK_THROWS_AS(BinaryMatrix(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(BinaryMatrix(9, 0), std::invalid_argument);
    CHECK_THROWS_AS(BinaryMatrix(2, 0x10), std::invalid_argument);
    CHECK(BinaryMatrix::ones(8).popcount() == 64);
    CHECK(BinaryMatrix::ones(1).word() == 1);
}

TEST_CASE("contains") {
    BinaryMatrix ones = BinaryMatrix::ones(3);
    BinaryMatrix id = PermutationMatrix::identity(3).matrix();
    CHECK(contains(ones, id));
    CHECK_FALSE(contains(id, ones));
    CHECK(contains(BinaryMatrix::from_rows({"01", "11"}), BinaryMatrix::from_rows({"01", "10"})));
    CHECK_THROWS_AS(contains(ones, BinaryMatrix::ones(2)), std::invalid_argument);
}

TEST_CASE("union") {
    BinaryMatrix id = PermutationMatrix::identity(3).matrix();
    BinaryMatrix swap01 = BinaryMatrix::from_rows({"010", "100", "001"});
    CHECK(matrix_union(id, swap01) == BinaryMatrix::from_rows({"110", "110", "001"}));
    CHECK(matrix_union(id, id) == id);
    CHECK(matrix_union(BinaryMatrix::zero(3), id) == id);
    CHECK_THROWS_AS(matrix_union(id, BinaryMatrix::ones(2)), std::invalid_argument);
}

TEST_CASE("find_permutation uses first-fit order") {
    auto w = find_permutation(BinaryMatrix::ones(3));
    REQUIRE(w.has_value());
    CHECK(*w == PermutationMatrix::identity(3));

    BinaryMatrix g = BinaryMatrix::from_rows({"01", "11"});
    CHECK_FALSE(find_permutation(g, 1, 1).has_value());
    auto anti = find_permutation(g);
    REQUIRE(anti.has_value());
    CHECK(anti->matrix() == BinaryMatrix::from_rows({"01", "10"}));

    // required cell that is not even set
    CHECK_FALSE(find_permutation(g, 0, 0).has_value());
}

TEST_CASE("face_closure strips forced zeros") {
    CHECK(face_closure(BinaryMatrix::from_rows({"001", "111", "111"})) ==
          BinaryMatrix::from_rows({"001", "110", "110"}));
    BinaryMatrix p = BinaryMatrix::from_rows({"010", "001", "100"});
    CHECK(face_closure(p) == p);
    CHECK(face_closure(BinaryMatrix::from_rows({"01", "11"})) ==
          BinaryMatrix::from_rows({"01", "10"}));
    CHECK(face_closure(BinaryMatrix::from_rows({"10", "10"})).is_zero());
}

TEST_CASE("face_closure equals union of contained permutations, and is idempotent") {
    std::mt19937_64 rng(0xfacade);
    for (int n = 2; n <= 5; ++n) {
        auto perms = oracle::all_permutations(n);
        for (int rep = 0; rep < 200; ++rep) {
            BinaryMatrix g = random_matrix(n, rng);
            BinaryMatrix h = face_closure(g);
            CHECK(face_closure(h) == h);
            BinaryMatrix u = BinaryMatrix::zero(n);
            for (const auto& p : perms)
                if (contains(g, p.matrix())) u = matrix_union(u, p.matrix());
            CHECK(h == u);
        }
    }
}

TEST_CASE("find_permutation through a cell succeeds iff the closure keeps it") {
    std::mt19937_64 rng(0xc10);
    for (int n = 2; n <= 5; ++n) {
        for (int rep = 0; rep < 100; ++rep) {
            BinaryMatrix g = random_matrix(n, rng);
            BinaryMatrix h = face_closure(g);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    CHECK(find_permutation(g, i, j).has_value() == h.get(i, j));
        }
    }
}

TEST_CASE("dimension formula") {
    for (int n = 1; n <= 8; ++n)
        CHECK(dimension(BinaryMatrix::ones(n)) == (n - 1) * (n - 1));
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 8; ++n) {
        auto p = random_perm(n, rng);
        std::array<std::uint8_t, 8> a{};
        for (int i = 0; i < n; ++i) a[i] = static_cast<std::uint8_t>(p[i]);
        CHECK(dimension(PermutationMatrix(n, a).matrix()) == 0);
    }
    CHECK(dimension(BinaryMatrix::from_rows({"110", "111", "111"})) == 3);
}

TEST_CASE("transpose and line permutations") {
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 50; ++rep) {
        int n = 1 + static_cast<int>(rng() % 8);
        BinaryMatrix f = random_matrix(n, rng);
        CHECK(transpose(transpose(f)) == f);

        std::array<int, 8> id{0, 1, 2, 3, 4, 5, 6, 7};
        CHECK(permute_rows(f, id) == f);
        CHECK(permute_cols(f, id) == f);

        auto s = random_perm(n, rng);
        CHECK(transpose(permute_rows(f, s)) == permute_cols(transpose(f), s));
    }
    CHECK(permute_rows(BinaryMatrix::from_rows({"01", "10"}), {1, 0}) ==
          BinaryMatrix::from_rows({"10", "01"}));
}

TEST_CASE("union and contains form a lattice order") {
    std::mt19937_64 rng(0x1a771ce);
    for (int rep = 0; rep < 100; ++rep) {
        int n = 2 + static_cast<int>(rng() % 4);
        BinaryMatrix a = random_matrix(n, rng);
        BinaryMatrix b = random_matrix(n, rng);
        CHECK(matrix_union(a, b) == matrix_union(b, a));
        CHECK(contains(matrix_union(a, b), a));
        CHECK(contains(matrix_union(a, b), b));
        // closure is monotone under containment
        BinaryMatrix sub = BinaryMatrix(n, a.word() & b.word());
        CHECK(contains(face_closure(a), face_closure(sub)));
    }
}

TEST_CASE("face text parsing") {
    CHECK(parse_face("01\n11\n") == BinaryMatrix::from_rows({"01", "11"}));
    CHECK(parse_face("1\n").order() == 1);
    CHECK(parse_face("01\n11") == BinaryMatrix::from_rows({"01", "11"}));  // EOF-terminated
    CHECK_THROWS_AS(parse_face(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_face("01\n1\n"), std::invalid_argument);      // ragged
    CHECK_THROWS_AS(parse_face("01\n12\n"), std::invalid_argument);     // bad char
    CHECK_THROWS_AS(parse_face("01\n11\n00\n"), std::invalid_argument); // wrong line count
    CHECK_THROWS_AS(parse_face("111111111\n"), std::invalid_argument);  // n > 8
}

TEST_CASE("face text round-trip") {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 50; ++rep) {
        int n = 1 + static_cast<int>(rng() % 8);
        BinaryMatrix f = random_matrix(n, rng);
        CHECK(parse_face(format_face(f)) == f);
    }
}
