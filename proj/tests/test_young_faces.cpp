#include "doctest.h"

#include "birkhoff/triangulate.hpp"
#include "birkhoff/young_faces.hpp"
#include "oracles.hpp"

using namespace birkhoff;

TEST_CASE("staircase_face shape") {
    CHECK(staircase_face(2) == BinaryMatrix::ones(2));
    CHECK(staircase_face(3) == BinaryMatrix::from_rows({"110", "111", "111"}));
    CHECK(dimension(staircase_face(4)) == 6);
    for (int n = 2; n <= 8; ++n) CHECK(dimension(staircase_face(n)) == n * (n - 1) / 2);
    CHECK_THROWS_AS(staircase_face(1), std::invalid_argument);
    CHECK_THROWS_AS(staircase_face(9), std::invalid_argument);
}

TEST_CASE("staircase_face is closed and has 2^(n-1) vertices") {
    for (int n = 2; n <= 6; ++n) {
        BinaryMatrix f = staircase_face(n);
        CHECK(face_closure(f) == f);
        CHECK(oracle::face_vertices(f).size() == (std::size_t{1} << (n - 1)));
    }
}

TEST_CASE("catalan_product values") {
    CHECK(catalan_product(2) == 1);
    CHECK(catalan_product(3) == 1);
    CHECK(catalan_product(4) == 2);
    CHECK(catalan_product(5) == 10);
    CHECK(catalan_product(6) == 140);
    CHECK(catalan_product(7) == 5880);
    CHECK(catalan_product(8) == 776160);
    CHECK_THROWS_AS(catalan_product(1), std::invalid_argument);
}

TEST_CASE("staircase volumes match the Catalan product (triangulated)") {
    for (int n = 2; n <= 7; ++n) CHECK(verify_conjecture(n));
}

TEST_CASE("staircase volumes confirmed by the independent face-poset oracle") {
    for (int n = 2; n <= 4; ++n)
        CHECK(oracle::relative_volume(staircase_face(n)) == catalan_product(n));
}
