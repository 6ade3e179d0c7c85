/*
   Copyright 2026 The koszul authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include <koszul/symgrp.hpp>

using namespace koszul;

namespace {

Poly<Rat> P(const std::string& s, const RingPtr& r) { return parse_poly<Rat>(s, r); }

std::vector<Poly<Rat>> Ps(const std::vector<std::string>& ss, const RingPtr& r) {
    std::vector<Poly<Rat>> out;
    for (const auto& s : ss) out.push_back(P(s, r));
    return out;
}

}  // namespace

TEST_CASE("permutation utilities") {
    auto g3 = symmetric_group(3);
    REQUIRE(g3.size() == 6);
    CHECK(g3.front() == Perm({0, 1, 2}));

    Perm cycle = {1, 2, 0};
    CHECK(perm_sign(cycle) == 1);
    CHECK(perm_sign(Perm({1, 0, 2})) == -1);
    CHECK(perm_compose(cycle, perm_inverse(cycle)) == Perm({0, 1, 2}));

    int even = 0;
    for (const auto& s : g3)
        if (perm_sign(s) == 1) ++even;
    CHECK(even == 3);
}

TEST_CASE("group law holds for the induced variable permutations") {
    RingPtr r = make_ring({"x1", "x2", "x3"});
    auto a = natural_perm_action(r);
    for (const auto& s : a.elements)
        for (const auto& t : a.elements)
            CHECK(a.var_perm(perm_compose(s, t)) ==
                  perm_compose(a.var_perm(s), a.var_perm(t)));
}

TEST_CASE("swap action on the plane splits into trivial and sign lines") {
    RingPtr r = make_ring({"x1", "x2"});
    auto m = free_module<Rat>(r, {0});
    auto a = natural_perm_action(r);
    CHECK(isotypic_dimension(m, a, Character::trivial, 1) == 1);
    CHECK(isotypic_dimension(m, a, Character::sign, 1) == 1);
}

TEST_CASE("sign part of the natural three-dimensional representation vanishes") {
    RingPtr r = make_ring({"x1", "x2", "x3"});
    auto m = free_module<Rat>(r, {0});
    auto a = natural_perm_action(r);
    CHECK(isotypic_dimension(m, a, Character::sign, 1) == 0);
    CHECK(isotypic_dimension(m, a, Character::trivial, 1) == 1);
}

TEST_CASE("paired variables under the swap have a plane of invariants") {
    RingPtr r = make_ring({"x1", "y1", "x2", "y2"});
    auto m = free_module<Rat>(r, {0});
    auto a = make_perm_action(r, 2, {{0, 2}, {1, 3}});
    CHECK(isotypic_dimension(m, a, Character::trivial, 1) == 2);
    CHECK(isotypic_dimension(m, a, Character::sign, 1) == 2);
}

TEST_CASE("isotypic dimensions of the polynomial ring in two variables") {
    RingPtr r = make_ring({"x1", "x2"});
    auto m = free_module<Rat>(r, {0});
    auto a = natural_perm_action(r);
    CHECK(isotypic_dimension(m, a, Character::trivial, 2) == 2);
    CHECK(isotypic_dimension(m, a, Character::sign, 1) == 1);
    CHECK(isotypic_dimension(m, a, Character::sign, 2) == 1);
}

TEST_CASE("zero modules have no isotypic mass in any degree") {
    RingPtr r = make_ring({"x1", "x2"});
    auto zero = make_graded_module<Rat>(r, {0}, {vec_from_poly(P("1", r), 1, 0, {})});
    auto a = natural_perm_action(r);
    for (long q = 0; q <= 3; ++q) {
        CHECK(isotypic_dimension(zero, a, Character::trivial, q) == 0);
        CHECK(isotypic_dimension(zero, a, Character::sign, q) == 0);
    }
}

TEST_CASE("reynolds projectors are idempotent") {
    RingPtr r = make_ring({"x1", "x2", "x3"});
    auto m = quotient_ring_module<Rat>(r, Ps({"x1*x2 + x1*x3 + x2*x3"}, r));
    auto a = natural_perm_action(r);
    for (Character chi : {Character::trivial, Character::sign}) {
        auto p = reynolds_projector(m, 2, a, chi);
        CHECK(mat_eq(mat_mul(p, p), p));
    }
}

TEST_CASE("trivial plus sign exhausts a piece exactly when n is two") {
    RingPtr r2 = make_ring({"x1", "x2"});
    auto m2 = free_module<Rat>(r2, {0});
    auto a2 = natural_perm_action(r2);
    for (long q = 1; q <= 4; ++q) {
        long t = isotypic_dimension(m2, a2, Character::trivial, q);
        long s = isotypic_dimension(m2, a2, Character::sign, q);
        CHECK(t + s == hilbert_function(m2, q));
    }

    RingPtr r3 = make_ring({"x1", "x2", "x3"});
    auto m3 = free_module<Rat>(r3, {0});
    auto a3 = natural_perm_action(r3);
    long t = isotypic_dimension(m3, a3, Character::trivial, 1);
    long s = isotypic_dimension(m3, a3, Character::sign, 1);
    CHECK(t + s < hilbert_function(m3, 1));
}

TEST_CASE("non-stable relations are rejected with a witness") {
    RingPtr r = make_ring({"x1", "x2"});
    auto m = quotient_ring_module<Rat>(r, Ps({"x1"}, r));
    auto a = natural_perm_action(r);
    CHECK_THROWS_AS(isotypic_dimension(m, a, Character::trivial, 1), input_error);
}

TEST_CASE("action construction validates families") {
    RingPtr r = make_ring({"x1", "x2", "x3"});
    CHECK_THROWS_AS(make_perm_action(r, 2, {{0, 1, 2}}), input_error);
    CHECK_THROWS_AS(make_perm_action(r, 2, {{0, 7}}), input_error);
}

TEST_CASE("reynolds refuses fields whose characteristic divides the group order") {
    RingPtr r = make_ring({"x1", "x2"});
    auto m = free_module<Fp>(r, {0});
    auto a = natural_perm_action(r);
    CHECK_THROWS_AS(reynolds_projector(m, 1, a, Character::trivial, FieldSpec::prime(2)),
                    input_error);
    CHECK(isotypic_dimension(m, a, Character::trivial, 1, FieldSpec::prime(5)) == 1);
}
