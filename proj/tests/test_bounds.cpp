#include "bpcc/bounds.hpp"

#include <string>

#include "bpcc/exact.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bpcc;

TEST_CASE("continuous bound is the weight ceiling") {
    CHECK(l_cont(support::plain_instance(10, {6, 6, 6})).value == 2);
    CHECK(l_cont(support::plain_instance(10, {5, 5})).value == 1);
    CHECK(l_cont(support::plain_instance(10, {10})).value == 1);
    CHECK(l_cont(support::plain_instance(10, {1})).value == 1);
    CHECK(l_cont(support::plain_instance(7, {7, 7, 1})).value == 3);
    CHECK(l_cont(support::plain_instance(10, {6})).method == Bound::Method::Cont);
}

TEST_CASE("threshold bound sees pairwise conflicts the ceiling misses") {
    // three items above half capacity cannot share bins at all
    const Instance inst = support::plain_instance(10, {6, 6, 6});
    CHECK(l_cont(inst).value == 2);
    CHECK(l_mt(inst).value == 3);
    CHECK(l_mt(inst).method == Bound::Method::MT);
}

TEST_CASE("threshold bound stays tight on easy cases") {
    CHECK(l_mt(support::plain_instance(10, {5, 5})).value == 1);
    CHECK(l_mt(support::plain_instance(10, {10})).value == 1);
    CHECK(l_mt(support::plain_instance(10, {9, 2})).value == 2);
    CHECK(l_mt(support::plain_instance(10, {5, 5, 5})).value == 2);
}

TEST_CASE("threshold bound handles odd capacities") {
    // 5+5 > 9, so the three items conflict pairwise
    CHECK(l_mt(support::plain_instance(9, {5, 5, 5})).value == 3);
    CHECK(l_mt(support::plain_instance(9, {5, 4})).value == 1);
}

TEST_CASE("light items do not dilute the threshold bound") {
    // the 1s water down the weight ceiling, but at threshold 5 they are
    // invisible and the conflict between the three 6s stands out
    const Instance inst = support::plain_instance(10, {6, 6, 6, 1, 1});
    CHECK(l_cont(inst).value == 2);
    CHECK(l_mt(inst).value == 3);
}

TEST_CASE("threshold bound dominates the continuous bound") {
    Rng rng(21);
    for (int round = 0; round < 500; ++round) {
        const int n = 1 + rng.below_int(30);
        const int p = 1 + rng.below_int(6);
        const long long b = 5 + static_cast<long long>(rng.below(96));
        const Instance inst = support::random_instance(rng, n, p, b);
        const long long cont = l_cont(inst).value;
        const long long mt = l_mt(inst).value;
        REQUIRE(mt >= cont);
        REQUIRE(cont >= 1);
    }
}

TEST_CASE("bounds never exceed a proven optimum") {
    Rng rng(22);
    for (int round = 0; round < 80; ++round) {
        const int n = 1 + rng.below_int(9);
        const int p = 1 + rng.below_int(4);
        const Instance inst = support::random_instance(rng, n, p, 12);
        const ExactResult r = solve_exact(inst);
        REQUIRE(r.proven);
        REQUIRE(r.objective >= l_mt(inst).value);
        REQUIRE(l_mt(inst).value >= l_cont(inst).value);
    }
}

TEST_CASE("method tags") {
    CHECK(std::string(method_tag(Bound::Method::Cont)) == "CONT");
    CHECK(std::string(method_tag(Bound::Method::MT)) == "MT");
}
