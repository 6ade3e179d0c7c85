/*
 * Copyright 2026 The koszul authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <catch2/catch_amalgamated.hpp>

#include "koszul/polygraph.hpp"

using namespace koszul;

namespace {

Poly<Rat> P(const std::string& s, const RingPtr& r) { return parse_poly<Rat>(s, r); }

bool in_ideal(const std::string& s, const std::vector<Poly<Rat>>& gb, const RingPtr& r) {
    return normal_form_poly(P(s, r), gb, r).is_zero();
}

// Every stored relation must pair to zero against the generator images.
bool relations_annihilate_images(const SModulePresentation<Rat>& pres) {
    ModuleOrder ord = pres.module.ord;
    for (const auto& rel : pres.module.relations) {
        Vec<Rat> acc(pres.sring, pres.images.front().rank);
        for (std::size_t g = 0; g < pres.images.size(); ++g) {
            Poly<Rat> c = vec_component(rel, static_cast<std::uint32_t>(g));
            if (c.is_zero()) continue;
            for (const auto& ct : c.terms)
                for (const auto& it : pres.images[g].terms)
                    acc.terms.push_back({it.pos, mono_mul(ct.m, it.m), ct.c * it.c});
        }
        vec_normalize(acc, ord);
        if (!acc.is_zero()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("function indices enumerate all maps in odometer order") {
    auto s22 = make_polygraph_spec(2, 2);
    auto fs = function_indices(s22);
    REQUIRE(fs.size() == 4);
    CHECK(fs[0] == std::vector<long>{0, 0});
    CHECK(fs[1] == std::vector<long>{0, 1});
    CHECK(fs[2] == std::vector<long>{1, 0});
    CHECK(fs[3] == std::vector<long>{1, 1});

    auto s30 = make_polygraph_spec(3, 0);
    auto empty = function_indices(s30);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].empty());

    CHECK(function_indices(make_polygraph_spec(1, 2)).size() == 1);
}

TEST_CASE("spec construction guards sizes and names the variables") {
    CHECK_THROWS_AS(make_polygraph_spec(0, 1), input_error);
    CHECK_THROWS_AS(make_polygraph_spec(2, -1), input_error);
    CHECK_THROWS_AS(make_polygraph_spec(4, 1), resource_guard);
    CHECK_THROWS_AS(make_polygraph_spec(2, 3), resource_guard);
    CHECK(make_polygraph_spec(4, 1, true).components == 4);
    CHECK_THROWS_AS(make_polygraph_spec(3, 8, true), resource_guard);

    auto spec = make_polygraph_spec(2, 1);
    CHECK(spec.components == 2);
    REQUIRE(spec.ring->nvars() == 6);
    CHECK(spec.ring->vars[spec.x_index(0)] == "x1");
    CHECK(spec.ring->vars[spec.y_index(1)] == "y2");
    CHECK(spec.ring->vars[spec.a_index(0)] == "a1");
    CHECK(spec.ring->vars[spec.b_index(0)] == "b1");
}

TEST_CASE("intersection ideal for a single component is the graph ideal") {
    auto spec = make_polygraph_spec(1, 1);
    auto gb = polygraph_ideal<Rat>(spec);
    CHECK(in_ideal("a1 - x1", gb, spec.ring));
    CHECK(in_ideal("b1 - y1", gb, spec.ring));
    CHECK_FALSE(in_ideal("a1", gb, spec.ring));
    auto quot = quotient_ring_module<Rat>(spec.ring, gb);
    for (long q = 0; q <= 4; ++q) CHECK(hilbert_function(quot, q) == q + 1);
}

TEST_CASE("no functions means the zero ideal") {
    auto spec = make_polygraph_spec(2, 0);
    CHECK(polygraph_ideal<Rat>(spec).empty());
}

TEST_CASE("two-component intersection contains the expected products") {
    auto spec = make_polygraph_spec(2, 1);
    auto gb = polygraph_ideal<Rat>(spec);
    CHECK(gb.size() == 4);
    CHECK(in_ideal("a1^2 - a1*x1 - a1*x2 + x1*x2", gb, spec.ring));
    CHECK(in_ideal("a1*b1 - a1*y2 - b1*x1 + x1*y2", gb, spec.ring));
    CHECK_FALSE(in_ideal("a1 - x1", gb, spec.ring));
    CHECK_FALSE(in_ideal("x1 - x2", gb, spec.ring));

    auto quot = quotient_ring_module<Rat>(spec.ring, gb);
    long expected[] = {1, 6, 17, 36, 65};
    for (long q = 0; q <= 4; ++q) CHECK(hilbert_function(quot, q) == expected[q]);
}

TEST_CASE("component evaluation matches the quotient in low degrees") {
    for (auto [n, k] : {std::pair<long, long>{1, 1}, {2, 1}, {3, 1}, {2, 2}}) {
        auto spec = make_polygraph_spec(n, k);
        auto gb = polygraph_ideal<Rat>(spec);
        CHECK(embedding_hilbert_check<Rat>(spec, gb));
    }
}

TEST_CASE("single-point and zero-function polygraphs present freely") {
    for (auto [n, k] : {std::pair<long, long>{1, 1}, {1, 2}, {2, 0}, {3, 0}}) {
        auto pres = s_module_presentation<Rat>(make_polygraph_spec(n, k));
        CHECK(pres.gen_monomials.size() == 1);
        CHECK(pres.module.relations.empty());
        CHECK(pres.stabilized_at == 0);
        CHECK(pres.module.shifts == std::vector<long>{0});
    }
}

TEST_CASE("two points with one function need exactly the linear images") {
    auto spec = make_polygraph_spec(2, 1);
    auto pres = s_module_presentation<Rat>(spec);
    REQUIRE(pres.gen_monomials.size() == 3);
    CHECK(pres.stabilized_at == 1);
    CHECK(pres.module.shifts == std::vector<long>{0, 1, 1});
    REQUIRE(pres.module.relations.size() == 1);
    CHECK(*vec_graded_degree(pres.module.relations[0], pres.module.shifts) == 2);

    auto quot = quotient_ring_module<Rat>(spec.ring, polygraph_ideal<Rat>(spec));
    long expected[] = {1, 6, 17, 36, 65, 106};
    for (long q = 0; q <= 5; ++q) {
        CHECK(hilbert_function(pres.module, q) == expected[q]);
        CHECK(hilbert_function(quot, q) == expected[q]);
    }
    CHECK(relations_annihilate_images(pres));
}

TEST_CASE("three points with one function need quadratic images") {
    auto spec = make_polygraph_spec(3, 1);
    auto pres = s_module_presentation<Rat>(spec);
    CHECK(pres.gen_monomials.size() == 6);
    CHECK(pres.stabilized_at == 2);
    auto quot = quotient_ring_module<Rat>(spec.ring, polygraph_ideal<Rat>(spec));
    long expected[] = {1, 8, 36, 112, 278};
    for (long q = 0; q <= 4; ++q) {
        CHECK(hilbert_function(pres.module, q) == expected[q]);
        CHECK(hilbert_function(quot, q) == expected[q]);
    }
    CHECK(relations_annihilate_images(pres));
    for (const auto& rel : pres.module.relations)
        CHECK(vec_graded_degree(rel, pres.module.shifts).has_value());
}

TEST_CASE("coinvariant rings of the doubled variables have known top degrees") {
    CHECK(diagonal_coinvariant_top_degree(1) == 0);
    CHECK(diagonal_coinvariant_top_degree(2) == 1);
    CHECK(diagonal_coinvariant_top_degree(3) == 3);
}

TEST_CASE("free presentations have vanishing higher ext") {
    CHECK(equivariant_vanishing_check<Rat>(1, 1).verdict == "ext-zero");
    CHECK(equivariant_vanishing_check<Rat>(1, 2).verdict == "ext-zero");
    CHECK(equivariant_vanishing_check<Rat>(3, 0).verdict == "ext-zero");
    auto rep = equivariant_vanishing_check<Rat>(2, 0);
    CHECK(rep.ext_zero);
    CHECK(rep.witness_degree == ExtReport<Rat>::no_witness);
    CHECK(rep.n == 2);
    CHECK(rep.k == 0);
    CHECK(rep.j == 1);
}

TEST_CASE("two points one function: ext vanishes at the critical index") {
    auto pres = s_module_presentation<Rat>(make_polygraph_spec(2, 1));
    auto rep = ext_modules<Rat>(pres, 2);
    CHECK(rep.verdict == "ext-zero");
    CHECK(rep.ext_zero);
}

TEST_CASE("two points one function: first ext is nonzero with zero invariants") {
    auto pres = s_module_presentation<Rat>(make_polygraph_spec(2, 1));
    auto rep = ext_modules<Rat>(pres, 1);
    CHECK(rep.verdict == "invariants-zero");
    CHECK_FALSE(rep.ext_zero);
    REQUIRE(rep.gen_degrees.size() == 1);
    CHECK(rep.gen_degrees[0] == -2);
    CHECK(rep.window_lo == -2);
    CHECK(rep.window_hi == 0);
    REQUIRE(rep.invariant_dims.size() == 3);
    for (auto [q, d] : rep.invariant_dims) {
        CHECK(q >= -2);
        CHECK(q <= 0);
        CHECK(d == 0);
    }
    long expected[] = {1, 2, 3};
    for (long q = -2; q <= 0; ++q) CHECK(hilbert_function(rep.ext, q) == expected[q + 2]);
    CHECK(rep.witness_degree == ExtReport<Rat>::no_witness);
}

TEST_CASE("dual of the generators detects nonzero invariants with a witness") {
    auto pres = s_module_presentation<Rat>(make_polygraph_spec(2, 1));
    auto rep = ext_modules<Rat>(pres, 0);
    CHECK(rep.verdict == "invariants-nonzero");
    CHECK(rep.witness_degree == 0);
    CHECK(rep.gen_degrees.size() == 3);
    CHECK(rep.window_lo == 0);
    CHECK(rep.window_hi == 4);
    std::vector<std::pair<long, long>> expected = {{0, 1}, {1, 4}, {2, 10}, {3, 20}, {4, 35}};
    CHECK(rep.invariant_dims == expected);
}

TEST_CASE("ext dimensions do not depend on the chosen presentation") {
    auto spec = make_polygraph_spec(2, 1);
    auto lean = s_module_presentation<Rat>(spec);
    std::vector<Mono> monos = lean.gen_monomials;
    Mono extra(spec.ring->nvars(), 0);
    extra[spec.a_index(0)] = 2;
    monos.push_back(extra);
    auto fat = presentation_from_monomials<Rat>(spec, monos);
    REQUIRE(fat.gen_monomials.size() == 4);

    for (long j = 1; j <= 2; ++j) {
        auto a = ext_modules<Rat>(lean, j);
        auto b = ext_modules<Rat>(fat, j);
        CHECK(a.verdict == b.verdict);
        std::map<long, long> da(a.invariant_dims.begin(), a.invariant_dims.end());
        std::map<long, long> db(b.invariant_dims.begin(), b.invariant_dims.end());
        for (long q = std::max(a.window_lo, b.window_lo);
             q <= std::min(a.window_hi, b.window_hi); ++q)
            CHECK(da[q] == db[q]);
    }
}

TEST_CASE("three points one function: invariants of the critical ext vanish") {
    auto rep = equivariant_vanishing_check<Rat>(3, 1);
    CHECK(rep.verdict == "invariants-zero");
    CHECK_FALSE(rep.ext_zero);
    CHECK_FALSE(rep.gen_degrees.empty());
    CHECK(rep.window_lo == -4);
    CHECK(rep.window_hi == -1);
    for (auto [q, d] : rep.invariant_dims) CHECK(d == 0);
    bool ext_has_mass = false;
    for (long q = rep.window_lo; q <= rep.window_hi; ++q)
        if (hilbert_function(rep.ext, q) > 0) ext_has_mass = true;
    CHECK(ext_has_mass);
}

TEST_CASE("two points two functions: the critical ext vanishes outright") {
    auto spec = make_polygraph_spec(2, 2);
    auto pres = s_module_presentation<Rat>(spec);
    CHECK(pres.gen_monomials.size() == 15);
    CHECK(pres.stabilized_at == 2);
    CHECK(relations_annihilate_images(pres));
    auto rep = ext_modules<Rat>(pres, 3);
    CHECK(rep.verdict == "ext-zero");

    auto low = ext_modules<Rat>(pres, 1);
    bool any = false;
    for (auto [q, d] : low.invariant_dims)
        if (d > 0) any = true;
    if (low.ext_zero) {
        CHECK(low.verdict == "ext-zero");
    } else if (any) {
        CHECK(low.verdict == "invariants-nonzero");
        CHECK(low.witness_degree != ExtReport<Rat>::no_witness);
    } else {
        CHECK(low.verdict == "invariants-zero");
        CHECK(low.witness_degree == ExtReport<Rat>::no_witness);
    }
}

TEST_CASE("averaging refuses prime fields with characteristic at most n") {
    auto spec = make_polygraph_spec(2, 0);
    SModulePresentation<Fp> pres;
    pres.spec = spec;
    pres.sring = polygraph_sring(2);
    pres.module = free_module<Fp>(pres.sring, {0});
    CHECK_THROWS_AS(ext_modules<Fp>(pres, 1, {}, FieldSpec::prime(2)), input_error);
    CHECK_THROWS_AS(ext_modules<Fp>(pres, 1, {}, FieldSpec::prime(0)), input_error);
}

TEST_CASE("negative cohomological index is rejected") {
    auto pres = s_module_presentation<Rat>(make_polygraph_spec(1, 1));
    CHECK_THROWS_AS(ext_modules<Rat>(pres, -1), input_error);
}

TEST_CASE("large prime characteristic reproduces the rational verdicts") {
    auto rep21 = equivariant_vanishing_check<Fp>(2, 1, {}, FieldSpec::prime(7));
    CHECK(rep21.verdict == "ext-zero");
    CHECK(rep21.ext_zero);

    auto rep31 = equivariant_vanishing_check<Fp>(3, 1, {}, FieldSpec::prime(5));
    CHECK(rep31.verdict == "invariants-zero");
    CHECK_FALSE(rep31.ext_zero);
    for (auto [q, d] : rep31.invariant_dims) CHECK(d == 0);

    auto rational = s_module_presentation<Rat>(make_polygraph_spec(2, 1));
    auto modular = s_module_presentation<Fp>(make_polygraph_spec(2, 1), {}, 8,
                                             FieldSpec::prime(7));
    CHECK(modular.gen_monomials.size() == rational.gen_monomials.size());
    CHECK(modular.stabilized_at == rational.stabilized_at);

    CHECK_THROWS_AS(equivariant_vanishing_check<Fp>(2, 1, {}, FieldSpec::prime(2)),
                    input_error);
}
