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

#include <random>
#include <string>
#include <vector>

#include <koszul/koszul.hpp>

using namespace koszul;

namespace {

Poly<Rat> P(const std::string& s, const RingPtr& r) { return parse_poly<Rat>(s, r); }

std::vector<Poly<Rat>> Ps(const std::vector<std::string>& ss, const RingPtr& r) {
    std::vector<Poly<Rat>> out;
    for (const auto& s : ss) out.push_back(P(s, r));
    return out;
}

bool is_zero_matrix(const Matrix<Rat>& m) {
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (!is_zero(m.at(i, j))) return false;
    return true;
}

// A pseudo-random homogeneous presentation with small shifts and relation
// degrees; degenerate draws are discarded and retried.
GradedModule<Rat> random_module(std::mt19937_64& rng) {
    static const std::vector<std::vector<std::string>> var_sets = {
        {"x"}, {"x", "y"}, {"x", "y", "z"}};
    RingPtr r = make_ring(var_sets[rng() % 3]);
    std::size_t ngens = 1 + rng() % 3;
    std::vector<long> shifts;
    for (std::size_t i = 0; i < ngens; ++i) shifts.push_back(static_cast<long>(rng() % 3));
    std::size_t nrels = rng() % 4;
    std::vector<Vec<Rat>> rels;
    ModuleOrder ord;
    for (std::size_t k = 0; k < nrels; ++k) {
        long deg = 1 + static_cast<long>(rng() % 4);
        Vec<Rat> v(r, static_cast<std::uint32_t>(ngens));
        for (std::uint32_t pos = 0; pos < ngens; ++pos) {
            auto monos = monomials_of_degree(*r, deg - shifts[pos]);
            for (const auto& m : monos) {
                long c = static_cast<long>(rng() % 5) - 2;
                if (c == 0) continue;
                Vec<Rat> t(r, static_cast<std::uint32_t>(ngens));
                t.terms.push_back({pos, m, Rat(c)});
                v = vec_add(v, t, ord);
            }
        }
        if (!v.is_zero()) rels.push_back(std::move(v));
    }
    return make_graded_module<Rat>(r, std::move(shifts), std::move(rels));
}

}  // namespace

TEST_CASE("wedge subsets enumerate combinations in order") {
    auto s = wedge_subsets(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s.front() == std::vector<std::uint32_t>({0, 1}));
    CHECK(s.back() == std::vector<std::uint32_t>({2, 3}));
    CHECK(wedge_subsets(3, 0).size() == 1);
    CHECK(wedge_subsets(3, 4).empty());
    CHECK(wedge_subsets(3, -1).empty());
}

TEST_CASE("consecutive differentials compose to zero") {
    RingPtr r = make_ring({"x", "y", "z", "w"});
    auto cubic = quotient_ring_module<Rat>(
        r, Ps({"x*z - y^2", "y*w - z^2", "x*w - y*z"}, r));
    auto v = variable_basis<Rat>(r);
    for (long p = 1; p <= 3; ++p)
        for (long q = 0; q <= 2; ++q) {
            auto d_in = koszul_differential(cubic, v, p + 1, q);
            auto d_out = koszul_differential(cubic, v, p, q + 1);
            if (d_in.cols == 0 || d_out.rows == 0) continue;
            CHECK(is_zero_matrix(mat_mul(d_out.dense(), d_in.dense())));
        }
}

TEST_CASE("free modules have no higher koszul cohomology") {
    RingPtr r = make_ring({"x", "y", "z"});
    auto s = free_module<Rat>(r, {0});
    auto v = variable_basis<Rat>(r);
    CHECK(koszul_cohomology_dim(s, v, 0, 0) == 1);
    for (long p = 1; p <= 3; ++p)
        for (long q = 0; q <= 3; ++q)
            CHECK(koszul_cohomology_dim(s, v, p, q) == 0);
}

TEST_CASE("the irrelevant ideal in two variables") {
    RingPtr r = make_ring({"x", "y"});
    auto ideal = ideal_as_module<Rat>(r, Ps({"x", "y"}, r));
    auto v = variable_basis<Rat>(r);
    auto d11 = koszul_differential(ideal, v, 1, 1);
    CHECK(d11.rows == 3);
    CHECK(d11.cols == 4);
    CHECK(koszul_rank(d11) == 3);
    CHECK(koszul_cohomology_dim(ideal, v, 1, 1) == 1);
}

TEST_CASE("cubic sections of the projective line have three linear syzygies") {
    RingPtr r = make_ring({"z0", "z1", "z2", "z3"});
    auto cubic = quotient_ring_module<Rat>(
        r, Ps({"z0*z2 - z1^2", "z1*z3 - z2^2", "z0*z3 - z1*z2"}, r));
    auto v = variable_basis<Rat>(r);
    CHECK(koszul_cohomology_dim(cubic, v, 1, 1) == 3);
}

TEST_CASE("koszul cohomology matches betti numbers on fixtures") {
    ModuleOrder ord;
    GBOptions opts;

    RingPtr r2 = make_ring({"x", "y"});
    auto point = quotient_ring_module<Rat>(r2, Ps({"x", "y"}, r2));
    auto v2 = variable_basis<Rat>(r2);
    auto b2 = betti_table(point);
    for (long p = 0; p <= 2; ++p)
        for (long q = 0; q <= 2; ++q)
            CHECK(koszul_cohomology_dim(point, v2, p, q) == b2.at(p, q));

    RingPtr r4 = make_ring({"x", "y", "z", "w"});
    auto cubic = quotient_ring_module<Rat>(
        r4, Ps({"x*z - y^2", "y*w - z^2", "x*w - y*z"}, r4));
    auto v4 = variable_basis<Rat>(r4);
    auto b4 = betti_table(cubic);
    for (long p = 0; p <= 3; ++p)
        for (long q = 0; q <= 2; ++q)
            CHECK(koszul_cohomology_dim(cubic, v4, p, q) == b4.at(p, q));
}

TEST_CASE("koszul cohomology matches betti numbers on random modules") {
    std::mt19937_64 rng(20260822);
    for (int trial = 0; trial < 8; ++trial) {
        auto m = random_module(rng);
        auto v = variable_basis<Rat>(m.ring);
        auto betti = betti_table(m);
        long qmax = 1;
        for (const auto& [key, val] : betti.entries) qmax = std::max(qmax, key.second);
        for (long p = 0; p <= static_cast<long>(m.ring->nvars()); ++p)
            for (long q = -1; q <= qmax + 1; ++q)
                CHECK(koszul_cohomology_dim(m, v, p, q) == betti.at(p, q));
    }
}

TEST_CASE("differentials reject basis elements of the wrong degree") {
    RingPtr r = make_ring({"x", "y"});
    auto s = free_module<Rat>(r, {0});
    std::vector<Poly<Rat>> bad = {P("x", r), P("y^2", r)};
    CHECK_THROWS_AS(koszul_differential(s, bad, 1, 1), input_error);
    CHECK_THROWS_AS(koszul_cohomology_dim(s, bad, 1, 1), input_error);
}

TEST_CASE("certificate accepts the irrelevant ideal of the plane") {
    RingPtr r = make_ring({"x", "y"});
    auto n = free_module<Rat>(r, {0});
    std::vector<Vec<Rat>> gens = {vec_from_poly(P("x", r), 1, 0, n.ord),
                                  vec_from_poly(P("y", r), 1, 0, n.ord)};
    auto res = nonvanishing_certificate(n, gens, variable_basis<Rat>(r));
    CHECK(res.status == CertificateStatus::certified_nonzero);
    CHECK(res.ann_v_zero);
    CHECK(res.m0_proper);
    CHECK(res.m1_full);
    CHECK(res.r == 1);
    CHECK(res.k_dim == 1);
}

TEST_CASE("certificate rejects a submodule that is not proper in degree zero") {
    RingPtr r = make_ring({"x", "y"});
    auto n = free_module<Rat>(r, {0});
    std::vector<Vec<Rat>> gens = {vec_from_poly(P("1", r), 1, 0, n.ord)};
    auto res = nonvanishing_certificate(n, gens, variable_basis<Rat>(r));
    CHECK(res.status == CertificateStatus::hypotheses_fail);
    CHECK(res.ann_v_zero);
    CHECK_FALSE(res.m0_proper);
}

TEST_CASE("certificate rejects an ambient module with torsion against V") {
    RingPtr r = make_ring({"x", "y"});
    auto n = quotient_ring_module<Rat>(r, Ps({"x", "y"}, r));
    std::vector<Vec<Rat>> gens = {vec_from_poly(P("1", r), 1, 0, n.ord)};
    auto res = nonvanishing_certificate(n, gens, variable_basis<Rat>(r));
    CHECK(res.status == CertificateStatus::hypotheses_fail);
    CHECK_FALSE(res.ann_v_zero);
}

TEST_CASE("submodule repackaging reproduces the ideal presentation") {
    RingPtr r = make_ring({"x", "y"});
    auto n = free_module<Rat>(r, {0});
    std::vector<Vec<Rat>> gens = {vec_from_poly(P("x", r), 1, 0, n.ord),
                                  vec_from_poly(P("y", r), 1, 0, n.ord)};
    auto m = submodule_of(n, gens);
    CHECK(m.shifts == std::vector<long>({1, 1}));
    CHECK(m.relations.size() == 1);
    CHECK(hilbert_function(m, 1) == 2);
    CHECK(hilbert_function(m, 3) == 4);
}
