#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freegroup.hpp"
#include "geometric.hpp"

using namespace vkr;

TEST_CASE("free reduction") {
    Word w{R(1, 2), R(1, 2, -1)};
    CHECK(free_reduce(w).empty());
    Word w2{R(1, 2), L(3, 4), L(3, 4, -1), R(1, 2)};
    CHECK(free_reduce(w2) == Word{R(1, 2), R(1, 2)});
}

TEST_CASE("gersten row 2 holds under the chosen conventions") {
    // [R_jk, R_ij] = R_ik with [a,b] = a^-1 b^-1 a b, rightmost letter first
    Word w{R(2, 3, -1), R(1, 2, -1), R(2, 3), R(1, 2), R(1, 3, -1)};
    CHECK(apply_word(w, 4).is_identity());
}

TEST_CASE("W token is the row-4 composite") {
    Aut direct = Aut::of_token(W(1, 2), 3);
    Aut composite = apply_word({L(1, 2), L(2, 1, -1), R(1, 2)}, 3);
    CHECK(direct == composite);
    CHECK(apply_word({W(1, 2), W(1, 2), W(1, 2), W(1, 2)}, 3).is_identity());
}
