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

#include <json.hpp>
#include <koszul/io.hpp>

using namespace koszul;
using nlohmann::json;

namespace {

const std::string kQuotientXY =
    "# plane through the origin\n"
    "ring x, y\n"
    "shifts 0\n"
    "x\n"
    "y\n";

GradedModule<Rat> quotient_xy() {
    TextInput in = parse_input_text(kQuotientXY);
    return module_from_input<Rat>(in, ring_from_input(in));
}

}  // namespace

TEST_CASE("text input splits ring, shifts, and rows") {
    TextInput in = parse_input_text(
        "# header comment\n"
        "ring x, y, z_2   # trailing comment\n"
        "\n"
        "shifts 0, -1, 2\n"
        "x^2 - y*z_2, 0, y\n"
        "x, x, x\n");
    CHECK(in.vars == std::vector<std::string>{"x", "y", "z_2"});
    CHECK(in.has_shifts);
    CHECK(in.shifts == std::vector<long>{0, -1, 2});
    REQUIRE(in.rows.size() == 2);
    CHECK(in.rows[0] == std::vector<std::string>{"x^2 - y*z_2", "0", "y"});
    CHECK(in.rows[1] == std::vector<std::string>{"x", "x", "x"});
}

TEST_CASE("text input without shifts is a polynomial list") {
    TextInput in = parse_input_text("ring u, v\nu^2 - v^2\nu*v\n");
    CHECK(!in.has_shifts);
    REQUIRE(in.rows.size() == 2);
    RingPtr r = ring_from_input(in);
    auto gens = polys_from_input<Rat>(in, r);
    REQUIRE(gens.size() == 2);
    CHECK(poly_to_string(gens[0]) == "u^2 - v^2");
    CHECK(poly_to_string(gens[1]) == "u*v");
}

TEST_CASE("text input rejects malformed files") {
    CHECK_THROWS_AS(parse_input_text("x + y\n"), input_error);
    CHECK_THROWS_AS(parse_input_text(""), input_error);
    CHECK_THROWS_AS(parse_input_text("ring\n"), input_error);
    CHECK_THROWS_AS(parse_input_text("ring 2x\n"), input_error);
    CHECK_THROWS_AS(parse_input_text("ring x, x\n"), input_error);
    CHECK_THROWS_AS(parse_input_text("ring x\nshifts a\n"), input_error);
    CHECK_THROWS_AS(parse_input_text("ring x\nx, , x\n"), input_error);

    TextInput list = parse_input_text("ring x\nx^2\n");
    TextInput mod = parse_input_text("ring x\nshifts 0\nx^2\n");
    RingPtr r = ring_from_input(list);
    CHECK_THROWS_AS(module_from_input<Rat>(list, r), input_error);
    CHECK_THROWS_AS(polys_from_input<Rat>(mod, r), input_error);

    TextInput bad_row = parse_input_text("ring x\nshifts 0, 0\nx\n");
    CHECK_THROWS_AS(module_from_input<Rat>(bad_row, ring_from_input(bad_row)),
                    input_error);
}

TEST_CASE("a shifts line only counts at the top of the file") {
    TextInput in = parse_input_text("ring shifts_t\nshifts_t^2\nshifts_t\n");
    CHECK(!in.has_shifts);
    CHECK(in.rows.size() == 2);
}

TEST_CASE("module input round trips through its own writer") {
    GradedModule<Rat> m = quotient_xy();
    CHECK(m.rank() == 1);
    CHECK(m.relations.size() == 2);
    CHECK(hilbert_function(m, 0) == 1);
    CHECK(hilbert_function(m, 1) == 0);

    std::string text = module_to_text(m);
    CHECK(text == "ring x, y\nshifts 0\nx\ny\n");
    TextInput again = parse_input_text(text);
    GradedModule<Rat> m2 = module_from_input<Rat>(again, ring_from_input(again));
    CHECK(module_to_text(m2) == text);
}

TEST_CASE("multi generator module rows carry full vectors") {
    TextInput in = parse_input_text(
        "ring x, y\n"
        "shifts 0, 1\n"
        "y^2, x\n"
        "0, y\n");
    GradedModule<Rat> m = module_from_input<Rat>(in, ring_from_input(in));
    CHECK(m.rank() == 2);
    CHECK(m.relations.size() == 2);
    std::string text = module_to_text(m);
    CHECK(text ==
          "ring x, y\n"
          "shifts 0, 1\n"
          "y^2, x\n"
          "0, y\n");
    json j = json::parse(module_to_json(m));
    CHECK(j["ring"] == json({"x", "y"}));
    CHECK(j["shifts"] == json({0, 1}));
    CHECK(j["relations"] ==
          json::array({json::array({"y^2", "x"}), json::array({"0", "y"})}));
}

TEST_CASE("polynomial writers mirror between text and json") {
    TextInput in = parse_input_text("ring x, y\nx^2 - 1/2*y^2\n");
    RingPtr r = ring_from_input(in);
    auto gens = polys_from_input<Rat>(in, r);
    CHECK(polys_to_text(r, gens) == "ring x, y\nx^2 - 1/2*y^2\n");
    json j = json::parse(polys_to_json(r, gens));
    CHECK(j["ring"] == json({"x", "y"}));
    CHECK(j["gens"] == json({"x^2 - 1/2*y^2"}));
}

TEST_CASE("zero rows are dropped on ingestion") {
    TextInput in = parse_input_text("ring x\n0\nx\n");
    auto gens = polys_from_input<Rat>(in, ring_from_input(in));
    REQUIRE(gens.size() == 1);
    CHECK(poly_to_string(gens[0]) == "x");
}

TEST_CASE("betti writers freeze the Koszul column shape") {
    GradedModule<Rat> m = quotient_xy();
    FreeResolution<Rat> res = minimal_free_resolution(m);
    BettiTable t = betti_from_resolution(res);

    CHECK(betti_text(t) ==
          "        0  1  2\n"
          "total:  1  2  1\n"
          "    0:  1  2  1\n");
    CHECK(betti_csv(t) ==
          "row,0,1,2\n"
          "total,1,2,1\n"
          "0,1,2,1\n");
    json j = json::parse(betti_json(t));
    CHECK(j["columns"] == json({0, 1, 2}));
    CHECK(j["rows"] == json({0}));
    CHECK(j["total"] == json({1, 2, 1}));
    REQUIRE(j["entries"].size() == 3);
    CHECK(j["entries"][1]["p"] == 1);
    CHECK(j["entries"][1]["row"] == 0);
    CHECK(j["entries"][1]["count"] == 2);
}

TEST_CASE("betti text prints dots for empty cells") {
    RingPtr r = make_ring({"x0", "x1", "x2", "x3"});
    auto minors = std::vector<Poly<Rat>>{
        parse_poly<Rat>("x0*x2 - x1^2", r),
        parse_poly<Rat>("x0*x3 - x1*x2", r),
        parse_poly<Rat>("x1*x3 - x2^2", r),
    };
    GradedModule<Rat> m = quotient_ring_module<Rat>(r, minors);
    BettiTable t = betti_from_resolution(minimal_free_resolution(m));
    CHECK(betti_text(t) ==
          "        0  1  2\n"
          "total:  1  3  2\n"
          "    0:  1  .  .\n"
          "    1:  .  3  2\n");
    CHECK(betti_csv(t) ==
          "row,0,1,2\n"
          "total,1,3,2\n"
          "0,1,0,0\n"
          "1,0,3,2\n");
}

TEST_CASE("empty betti tables still print") {
    BettiTable t;
    CHECK(betti_text(t) == "total: 0\n");
    CHECK(betti_csv(t) == "row\n");
    json j = json::parse(betti_json(t));
    CHECK(j["entries"].empty());
    CHECK(j["total"].empty());
}

TEST_CASE("resolution writers expose shifts and columns") {
    GradedModule<Rat> m = quotient_xy();
    FreeResolution<Rat> res = minimal_free_resolution(m);
    std::string text = resolution_to_text(res);
    CHECK(text.find("step 0: shifts 0\n") != std::string::npos);
    CHECK(text.find("step 1: shifts 1, 1\n") != std::string::npos);
    CHECK(text.find("step 2: shifts 2\n") != std::string::npos);

    json j = json::parse(resolution_to_json(res));
    CHECK(j["ring"] == json({"x", "y"}));
    REQUIRE(j["steps"].size() == 3);
    CHECK(j["steps"][0]["shifts"] == json({0}));
    CHECK(j["steps"][0]["columns"].empty());
    CHECK(j["steps"][1]["shifts"] == json({1, 1}));
    CHECK(j["steps"][1]["columns"].size() == 2);
    CHECK(j["steps"][2]["shifts"] == json({2}));
    REQUIRE(j["steps"][2]["columns"].size() == 1);
    auto col = j["steps"][2]["columns"][0];
    REQUIRE(col.size() == 2);
    RingPtr r = res.ring;
    Poly<Rat> a = parse_poly<Rat>(col[0].get<std::string>(), r);
    Poly<Rat> b = parse_poly<Rat>(col[1].get<std::string>(), r);
    Poly<Rat> x = parse_poly<Rat>("x", r);
    Poly<Rat> y = parse_poly<Rat>("y", r);
    CHECK((a * x + b * y).is_zero());
}

TEST_CASE("json quoting escapes control and quote characters") {
    CHECK(json_quote("plain") == "\"plain\"");
    CHECK(json_quote("a\"b\\c") == "\"a\\\"b\\\\c\"");
    CHECK(json_quote("a\nb\tc") == "\"a\\nb\\tc\"");
    json j = json::parse("[" + json_quote(std::string("x\x01y", 3)) + "]");
    CHECK(j[0].get<std::string>() == std::string("x\x01y", 3));
}

TEST_CASE("rational strings parse exactly") {
    CHECK(rat_from_string("3/2") == Rat(3, 2));
    CHECK(rat_from_string("-7") == Rat(-7));
    CHECK(rat_from_string(" 4/6 ") == Rat(2, 3));
    CHECK(rat_from_string("0") == Rat(0));
    CHECK(rat_from_string("+5") == Rat(5));
    CHECK_THROWS_AS(rat_from_string(""), input_error);
    CHECK_THROWS_AS(rat_from_string("1/0"), input_error);
    CHECK_THROWS_AS(rat_from_string("1/-2"), input_error);
    CHECK_THROWS_AS(rat_from_string("1.5"), input_error);
    CHECK_THROWS_AS(rat_from_string("x"), input_error);
}

TEST_CASE("prime field ingestion reduces coefficients") {
    TextInput in = parse_input_text("ring x\n8*x + 7\n");
    RingPtr r = ring_from_input(in);
    auto gens = polys_from_input<Fp>(in, r, FieldSpec::prime(7));
    REQUIRE(gens.size() == 1);
    CHECK(poly_to_string(gens[0]) == "x");
    CHECK_THROWS_AS(polys_from_input<Fp>(in, r, FieldSpec::prime(0)),
                    input_error);

    TextInput all7 = parse_input_text("ring x\n7*x\n");
    CHECK(polys_from_input<Fp>(all7, r, FieldSpec::prime(7)).empty());
}

TEST_CASE("prime field groebner runs on ingested input") {
    TextInput in = parse_input_text("ring x, y\n2*x^2 + y^2\n3*x*y\n");
    RingPtr r = ring_from_input(in);
    auto gens = polys_from_input<Fp>(in, r, FieldSpec::prime(5));
    auto gb = groebner_basis(gens, r);
    Poly<Fp> probe = parse_poly<Fp>("y^3", r, FieldSpec::prime(5));
    CHECK(normal_form_poly(probe, gb, r).is_zero());
}
