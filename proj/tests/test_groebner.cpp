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

#include <algorithm>
#include <string>
#include <vector>

#include <koszul/groebner.hpp>

using namespace koszul;

namespace {

Poly<Rat> P(const std::string& s, const RingPtr& r) { return parse_poly<Rat>(s, r); }

std::vector<std::string> strings(const std::vector<Poly<Rat>>& fs) {
    std::vector<std::string> out;
    for (const auto& f : fs) out.push_back(poly_to_string(f));
    return out;
}

Vec<Rat> combine(const std::vector<Vec<Rat>>& gens, const std::vector<Poly<Rat>>& u,
                 const ModuleOrder& ord) {
    Vec<Rat> acc(gens.front().ring, gens.front().rank);
    for (std::size_t i = 0; i < gens.size(); ++i)
        acc = vec_add(acc, vec_mul_poly(gens[i], u[i], ord), ord);
    return acc;
}

// applies a syzygy (an element of S^m) to the generator list
Vec<Rat> apply_syzygy(const std::vector<Vec<Rat>>& gens, const Vec<Rat>& syz,
                      const ModuleOrder& ord) {
    std::vector<Poly<Rat>> u(gens.size(), Poly<Rat>(gens.front().ring));
    for (std::size_t i = 0; i < gens.size(); ++i) u[i] = vec_component(syz, i);
    return combine(gens, u, ord);
}

}  // namespace

TEST_CASE("reduced basis of a hand-checked ideal") {
    RingPtr r = make_ring({"x", "y"});
    auto gb = groebner_basis<Rat>({P("x^2", r), P("x*y + y^2", r)}, r);
    CHECK(strings(gb) == std::vector<std::string>{"x*y + y^2", "x^2", "y^3"});
}

TEST_CASE("basis is canonical across generator orderings") {
    RingPtr r = make_ring({"x", "y", "z"});
    std::vector<Poly<Rat>> gens = {P("x^2 - y*z", r), P("y^2 - x*z", r),
                                   P("z^2 - x*y", r)};
    auto a = groebner_basis<Rat>(gens, r);
    std::reverse(gens.begin(), gens.end());
    auto b = groebner_basis<Rat>(gens, r);
    CHECK(strings(a) == strings(b));
}

TEST_CASE("normal form against a basis") {
    RingPtr r = make_ring({"x", "y"});
    auto gb = groebner_basis<Rat>({P("x^2", r), P("x*y + y^2", r)}, r);
    CHECK(normal_form_poly(P("x^2*y + y^3", r), gb, r).is_zero());
    CHECK(normal_form_poly(P("x + y^2", r), gb, r) == P("x + y^2", r));
    CHECK(normal_form_poly(P("x*y", r), gb, r) == P("-y^2", r));
}

TEST_CASE("eliminating the parameter of the cuspidal curve") {
    RingPtr r = make_ring({"x", "y", "z"});
    auto out = eliminate_vars<Rat>(r, {P("y - x^2", r), P("z - x^3", r)}, {"x"});
    REQUIRE(out.gens.size() == 1);
    CHECK(poly_to_string(out.gens[0]) == "y^3 - z^2");
    CHECK(out.ring->nvars() == 2);
    CHECK_THROWS_AS(eliminate_vars<Rat>(r, {P("x", r)}, {"q"}), input_error);
    CHECK_THROWS_AS(eliminate_vars<Rat>(r, {P("x", r)}, {"x", "y", "z"}), input_error);
}

TEST_CASE("intersection of two point ideals") {
    RingPtr r = make_ring({"x", "y"});
    auto meet = intersect_two<Rat>(r, {P("x", r), P("y", r)},
                                   {P("x - 1", r), P("y", r)});
    auto gb = groebner_basis<Rat>(meet, r);
    CHECK(strings(gb) == std::vector<std::string>{"y", "x^2 - x"});
}

TEST_CASE("three point ideals meet in the expected quadrics") {
    RingPtr r = make_ring({"x", "y"});
    std::vector<std::vector<Poly<Rat>>> ideals = {
        {P("x", r), P("y", r)},
        {P("x - 1", r), P("y", r)},
        {P("x", r), P("y - 1", r)},
    };
    auto gb = intersect_many<Rat>(r, ideals);
    CHECK(strings(gb) == std::vector<std::string>{"y^2 - y", "x*y", "x^2 - x"});
}

TEST_CASE("relations between x and y as ideal generators") {
    RingPtr r = make_ring({"x", "y"});
    ModuleOrder ord;
    std::vector<Vec<Rat>> gens = {vec_from_poly(P("x", r), 1, 0, ord),
                                  vec_from_poly(P("y", r), 1, 0, ord)};
    auto k = kernel_and_gb(gens, 1, r, ord);
    REQUIRE(k.syzygies.size() == 1);
    CHECK(apply_syzygy(gens, k.syzygies[0], ord).is_zero());
    CHECK(vec_component(k.syzygies[0], 0) == P("-y", r));
    CHECK(vec_component(k.syzygies[0], 1) == P("x", r));
}

TEST_CASE("twisted cubic quadrics have two linear relations") {
    RingPtr r = make_ring({"x", "y", "z", "w"});
    ModuleOrder ord;
    std::vector<Vec<Rat>> gens = {
        vec_from_poly(P("x*z - y^2", r), 1, 0, ord),
        vec_from_poly(P("y*w - z^2", r), 1, 0, ord),
        vec_from_poly(P("x*w - y*z", r), 1, 0, ord),
    };
    auto k = kernel_and_gb(gens, 1, r, ord);
    CHECK(k.gb.size() == 3);
    // the relation module is minimally generated by two linear relations;
    // the raw kernel may carry extra basis elements on top of those
    REQUIRE(k.syzygies.size() >= 2);
    std::size_t linear = 0;
    for (const auto& s : k.syzygies) {
        CHECK(apply_syzygy(gens, s, ord).is_zero());
        bool lin = true;
        for (const auto& t : s.terms) lin = lin && mono_degree(*r, t.m) == 1;
        linear += lin;
    }
    CHECK(linear == 2);
}

TEST_CASE("membership with explicit representation") {
    RingPtr r = make_ring({"x", "y"});
    ModuleOrder ord;
    std::vector<Vec<Rat>> gens = {vec_from_poly(P("x^2 - y^2", r), 1, 0, ord),
                                  vec_from_poly(P("x*y", r), 1, 0, ord)};
    auto k = kernel_and_gb(gens, 1, r, ord);

    Vec<Rat> v = vec_from_poly(P("x^3", r), 1, 0, ord);
    std::vector<Poly<Rat>> u;
    REQUIRE(represent(k, v, u));
    CHECK(vec_eq(combine(gens, u, ord), v));
    CHECK(is_member(k, v));

    Vec<Rat> w = vec_from_poly(P("x", r), 1, 0, ord);
    CHECK(!represent(k, w, u));
    CHECK(!is_member(k, w));
}

TEST_CASE("module kernels in rank two") {
    RingPtr r = make_ring({"x", "y"});
    ModuleOrder ord;
    // columns of [x 0 y; 0 y x] as elements of S^2
    std::vector<Vec<Rat>> gens(3, Vec<Rat>(r, 2));
    gens[0] = vec_from_poly(P("x", r), 2, 0, ord);
    gens[1] = vec_from_poly(P("y", r), 2, 1, ord);
    gens[2] = vec_add(vec_from_poly(P("y", r), 2, 0, ord),
                      vec_from_poly(P("x", r), 2, 1, ord), ord);
    auto k = kernel_and_gb(gens, 2, r, ord);
    REQUIRE(k.syzygies.size() == 1);
    CHECK(apply_syzygy(gens, k.syzygies[0], ord).is_zero());
    CHECK(vec_component(k.syzygies[0], 0) == P("y^2", r));
    CHECK(vec_component(k.syzygies[0], 1) == P("x^2", r));
    CHECK(vec_component(k.syzygies[0], 2) == P("-x*y", r));
}

TEST_CASE("basis growth guard trips") {
    RingPtr r = make_ring({"x", "y"});
    GBOptions tight;
    tight.max_basis = 2;
    CHECK_THROWS_AS(groebner_basis<Rat>({P("x^2", r), P("x*y + y^2", r)}, r, tight),
                    resource_guard);
}
