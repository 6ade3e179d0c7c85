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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <koszul/geometry.hpp>
#include <koszul/gradedmod.hpp>
#include <koszul/groebner.hpp>
#include <koszul/io.hpp>
#include <koszul/koszul.hpp>
#include <koszul/polygraph.hpp>
#include <koszul/verify.hpp>

namespace {

using namespace koszul;
using ojson = nlohmann::ordered_json;

// One fully parsed invocation; identical specs must produce identical
// output bytes whatever the thread count.
struct JobSpec {
    std::string subcommand;
    FieldSpec field = FieldSpec::rationals();
    OrderKind order = OrderKind::grevlex;
    std::uint64_t seed = 20260822;
    int threads = 1;
    long max_basis = 20000;
    std::string format;  // resolved per subcommand when left empty
    std::string out;

    std::vector<std::string> inputs;
    std::vector<std::string> elim_vars;
    long max_length = -1;
    long b = 0, d = 0, p = 0, q = 0;
    bool has_b = false, has_d = false, has_input = false;
    long qmax = 3;
    long m = 0, pmax = -1, trials = 25;
    bool sampled = false;
    long g = 0, h0b = 0;
    long n = 0, k = 0, j = -1;
    bool override_guards = false;
    long nmax = 4;
    std::string level = "fast";
};

GBOptions gb_options(const JobSpec& job) {
    GBOptions opts;
    if (job.max_basis < 1) throw input_error("--max-basis must be positive");
    opts.max_basis = static_cast<std::size_t>(job.max_basis);
    return opts;
}

std::string resolved_format(const JobSpec& job) {
    if (!job.format.empty()) return job.format;
    return job.subcommand == "polygraph" ? "json" : "text";
}

std::string require_format(const JobSpec& job,
                           const std::vector<std::string>& allowed) {
    std::string f = resolved_format(job);
    for (const auto& a : allowed)
        if (f == a) return f;
    throw input_error("format \"" + f + "\" is not available for " +
                      job.subcommand);
}

// -------------------------------------------------------------- file input

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw input_error("cannot open input file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

ojson parse_json_text(const std::string& text, const std::string& what) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error("bad JSON in " + what + ": " + e.what());
    }
}

// The JSON mirror of the text format: ring, optional shifts, and either
// "gens" (a polynomial list) or "relations" (module rows).
TextInput input_from_json(const ojson& j) {
    TextInput in;
    if (!j.contains("ring") || !j["ring"].is_array())
        throw input_error("JSON input needs a \"ring\" array");
    for (const auto& v : j["ring"]) {
        if (!v.is_string()) throw input_error("ring entries must be strings");
        in.vars.push_back(v.get<std::string>());
    }
    if (j.contains("shifts")) {
        if (!j["shifts"].is_array())
            throw input_error("\"shifts\" must be an array of integers");
        in.has_shifts = true;
        for (const auto& v : j["shifts"]) {
            if (!v.is_number_integer())
                throw input_error("\"shifts\" must be an array of integers");
            in.shifts.push_back(v.get<long>());
        }
    }
    if (j.contains("gens")) {
        if (in.has_shifts)
            throw input_error("JSON input mixes \"gens\" with \"shifts\"");
        for (const auto& v : j["gens"]) {
            if (!v.is_string())
                throw input_error("\"gens\" entries must be strings");
            in.rows.push_back({v.get<std::string>()});
        }
    } else if (j.contains("relations")) {
        if (!in.has_shifts)
            throw input_error("JSON module input needs \"shifts\"");
        for (const auto& row : j["relations"]) {
            if (!row.is_array())
                throw input_error("\"relations\" entries must be arrays");
            std::vector<std::string> r;
            for (const auto& v : row) {
                if (!v.is_string())
                    throw input_error("relation entries must be strings");
                r.push_back(v.get<std::string>());
            }
            in.rows.push_back(std::move(r));
        }
    }
    return in;
}

TextInput load_input(const std::string& path) {
    std::string text = slurp(path);
    if (looks_like_json(text))
        return input_from_json(parse_json_text(text, path));
    return parse_input_text(text);
}

template <class C>
GradedModule<C> module_from_any(const TextInput& in, const RingPtr& ring,
                                const JobSpec& job) {
    if (in.has_shifts)
        return module_from_input<C>(in, ring, job.field, gb_options(job));
    auto gens = polys_from_input<C>(in, ring, job.field);
    return quotient_ring_module<C>(ring, gens, gb_options(job));
}

void emit(const JobSpec& job, const std::string& text) {
    if (job.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(job.out);
    if (!f) throw input_error("cannot open output file " + job.out);
    f << text;
}

// ------------------------------------------------------------ subcommands

template <class C>
std::string run_gb(const JobSpec& job) {
    std::string format = require_format(job, {"text", "json"});
    TextInput in = load_input(job.inputs.at(0));
    RingPtr r = ring_from_input(in, job.order);
    auto gens = polys_from_input<C>(in, r, job.field);
    auto gb = groebner_basis(gens, r, gb_options(job));
    return format == "json" ? polys_to_json(r, gb) + "\n" : polys_to_text(r, gb);
}

template <class C>
std::string run_eliminate(const JobSpec& job) {
    std::string format = require_format(job, {"text", "json"});
    TextInput in = load_input(job.inputs.at(0));
    RingPtr r = ring_from_input(in, job.order);
    auto gens = polys_from_input<C>(in, r, job.field);
    IdealInRing<C> down = eliminate_vars(r, gens, job.elim_vars, gb_options(job));
    return format == "json" ? polys_to_json(down.ring, down.gens) + "\n"
                            : polys_to_text(down.ring, down.gens);
}

template <class C>
std::string run_intersect(const JobSpec& job) {
    std::string format = require_format(job, {"text", "json"});
    TextInput a = load_input(job.inputs.at(0));
    TextInput b = load_input(job.inputs.at(1));
    if (a.vars != b.vars)
        throw input_error("intersect inputs must declare the same ring");
    RingPtr r = ring_from_input(a, job.order);
    auto ga = polys_from_input<C>(a, r, job.field);
    auto gb = polys_from_input<C>(b, r, job.field);
    auto meet = intersect_two(r, ga, gb, gb_options(job));
    return format == "json" ? polys_to_json(r, meet) + "\n"
                            : polys_to_text(r, meet);
}

template <class C>
std::string run_resolve(const JobSpec& job) {
    std::string format = require_format(job, {"text", "json"});
    TextInput in = load_input(job.inputs.at(0));
    RingPtr r = ring_from_input(in, job.order);
    GradedModule<C> m = module_from_any<C>(in, r, job);
    FreeResolution<C> res = minimal_free_resolution(
        m, job.max_length, gb_options(job), job.max_length >= 0);
    return format == "json" ? resolution_to_json(res) + "\n"
                            : resolution_to_text(res);
}

template <class C>
std::string run_betti(const JobSpec& job) {
    std::string format = require_format(job, {"text", "json", "csv"});
    TextInput in = load_input(job.inputs.at(0));
    RingPtr r = ring_from_input(in, job.order);
    GradedModule<C> m = module_from_any<C>(in, r, job);
    BettiTable t = betti_table(m, gb_options(job));
    if (format == "json") return betti_json(t) + "\n";
    if (format == "csv") return betti_csv(t);
    return betti_text(t);
}

template <class C>
std::string run_koszul(const JobSpec& job) {
    std::string format = require_format(job, {"text", "json", "csv"});
    long dim = 0;
    if (job.has_input) {
        TextInput in = load_input(job.inputs.at(0));
        RingPtr r = ring_from_input(in, job.order);
        GradedModule<C> m = module_from_any<C>(in, r, job);
        dim = koszul_cohomology_dim(m, variable_basis<C>(m.ring), job.p, job.q);
    } else {
        if (!job.has_b || !job.has_d)
            throw input_error(
                "koszul needs either an input module or both --b and --d");
        dim = koszul_of_sections<C>(job.b, job.d, job.p, job.q, gb_options(job));
    }
    if (format == "json") {
        ojson j;
        if (!job.has_input) {
            j["b"] = job.b;
            j["d"] = job.d;
        }
        j["p"] = job.p;
        j["q"] = job.q;
        j["dim"] = dim;
        return j.dump() + "\n";
    }
    if (format == "csv")
        return "p,q,dim\n" + std::to_string(job.p) + "," +
               std::to_string(job.q) + "," + std::to_string(dim) + "\n";
    return std::to_string(dim) + "\n";
}

template <class C>
std::string run_sections(const JobSpec& job) {
    std::string format = require_format(job, {"text", "json"});
    if (job.qmax < 0) throw input_error("--qmax must be nonnegative");
    SectionModule<C> sm = section_module<C>(job.b, job.d, job.qmax, gb_options(job));
    return format == "json" ? module_to_json(sm.module) + "\n"
                            : module_to_text(sm.module);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string run_ample(const JobSpec& job) {
    std::string format = require_format(job, {"text", "json", "csv"});
    if (!job.field.rational)
        throw input_error("ample runs over the rationals");
    if (job.m < 0) throw input_error("--m must be nonnegative");

    if (job.has_input) {
        std::string text = slurp(job.inputs.at(0));
        ojson spec = parse_json_text(text, job.inputs.at(0));
        RingPtr r = make_ring({"u", "v"});
        std::vector<Poly<Rat>> sections;
        for (const auto& mono : monomials_of_degree(*r, job.m)) {
            Poly<Rat> f(r);
            f.terms.push_back({mono, Rat(1)});
            sections.push_back(f);
        }
        auto coords = [](const ojson& arr, const std::string& what) {
            std::vector<Rat> out;
            if (!arr.is_array() || arr.empty())
                throw input_error(what + " must be a nonempty array");
            for (const auto& v : arr) {
                if (v.is_string())
                    out.push_back(rat_from_string(v.get<std::string>()));
                else if (v.is_number_integer())
                    out.push_back(Rat(v.get<long>()));
                else
                    throw input_error(what + " entries must be rational strings");
            }
            return out;
        };
        struct Row {
            std::string kind;
            long length;
            long rank;
            bool surjective;
        };
        std::vector<Row> rows;
        if (spec.contains("points")) {
            std::vector<std::vector<Rat>> pts;
            for (const auto& p : spec["points"]) {
                auto c = coords(p, "point");
                if (c.size() != 2)
                    throw input_error("points on the line need 2 coordinates");
                pts.push_back(std::move(c));
            }
            if (!pts.empty()) {
                auto ev = evaluation_at_points(sections, pts);
                rows.push_back({"points", ev.length,
                                static_cast<long>(ev.rank), ev.surjective});
            }
        }
        if (spec.contains("jets")) {
            for (const auto& jet : spec["jets"]) {
                if (!jet.contains("germ") || !jet.contains("length"))
                    throw input_error("each jet needs \"germ\" and \"length\"");
                std::vector<std::vector<Rat>> germ;
                for (const auto& series : jet["germ"])
                    germ.push_back(coords(series, "germ series"));
                if (germ.size() != 2)
                    throw input_error("jets on the line need 2 germ series");
                long len = jet["length"].get<long>();
                auto ev = evaluation_at_jet(sections, germ, len);
                rows.push_back({"jet", ev.length, static_cast<long>(ev.rank),
                                ev.surjective});
            }
        }
        if (rows.empty())
            throw input_error("evaluation input lists no points or jets");

        if (format == "json") {
            ojson out;
            out["m"] = job.m;
            out["evaluations"] = ojson::array();
            for (const auto& row : rows)
                out["evaluations"].push_back(ojson{{"kind", row.kind},
                                                   {"length", row.length},
                                                   {"rank", row.rank},
                                                   {"surjective", row.surjective}});
            return out.dump() + "\n";
        }
        if (format == "csv") {
            std::string s = "kind,length,rank,surjective\n";
            for (const auto& row : rows)
                s += row.kind + "," + std::to_string(row.length) + "," +
                     std::to_string(row.rank) + "," +
                     (row.surjective ? "1" : "0") + "\n";
            return s;
        }
        std::string s;
        for (const auto& row : rows)
            s += row.kind + ": length=" + std::to_string(row.length) +
                 " rank=" + std::to_string(row.rank) +
                 " surjective=" + yes_no(row.surjective) + "\n";
        return s;
    }

    if (job.m > 10)
        throw resource_guard("exhaustive order scan is capped at degree 10");
    long order = very_ampleness_order_p1(job.m);
    std::vector<AmplenessVerdict> profile;
    if (job.pmax >= 0)
        profile = job.sampled
                      ? very_ampleness_profile_p1_sampled(job.m, job.pmax,
                                                          job.seed, job.trials)
                      : very_ampleness_profile_p1(job.m, job.pmax);
    if (format == "json") {
        ojson out;
        out["m"] = job.m;
        out["order"] = order;
        if (job.pmax >= 0) {
            out["profile"] = ojson::array();
            for (const auto& v : profile)
                out["profile"].push_back(ojson{{"p", v.p},
                                               {"very_ample", v.very_ample},
                                               {"proved", v.proved}});
        }
        return out.dump() + "\n";
    }
    if (format == "csv") {
        std::string s = "p,very_ample,proved\n";
        for (const auto& v : profile)
            s += std::to_string(v.p) + "," + (v.very_ample ? "1" : "0") + "," +
                 (v.proved ? "1" : "0") + "\n";
        return s;
    }
    std::string s = "order: " + std::to_string(order) + "\n";
    for (const auto& v : profile)
        s += "p=" + std::to_string(v.p) + ": " +
             (v.very_ample ? "very-ample" : "not-very-ample") +
             (v.proved ? " proved" : " sampled") + "\n";
    return s;
}

std::string run_curve_bound(const JobSpec& job) {
    std::string format = require_format(job, {"text", "json"});
    if (!job.field.rational)
        throw input_error("curve-bound runs over the rationals");
    CurveNumerics num{job.g, job.d, job.b, job.p, job.h0b};
    CurveCriterion crit = curve_nonvanishing_criterion(num);
    if (format == "json") {
        ojson out;
        out["g"] = num.g;
        out["d"] = num.d;
        out["b"] = num.b;
        out["p"] = num.p;
        out["h0b"] = num.h0b;
        out["certified"] = crit.certified;
        out["degrees_ok"] = crit.degrees_ok;
        out["inequality_ok"] = crit.inequality_ok;
        out["count"] = to_string(crit.lhs);
        out["chi"] = to_string(crit.chi);
        out["chi_slope"] = to_string(crit.chi_slope);
        return out.dump() + "\n";
    }
    std::string s;
    s += "certified: " + yes_no(crit.certified) + "\n";
    s += "degrees: " + yes_no(crit.degrees_ok) + "\n";
    s += "inequality: " + yes_no(crit.inequality_ok) + "\n";
    s += "count: " + to_string(crit.lhs) + "\n";
    s += "chi: " + to_string(crit.chi) + "\n";
    s += "chi-slope: " + to_string(crit.chi_slope) + "\n";
    return s;
}

template <class C>
ojson ext_report_json(const ExtReport<C>& rep) {
    ojson out;
    out["n"] = rep.n;
    out["k"] = rep.k;
    out["j"] = rep.j;
    out["verdict"] = rep.verdict;
    out["ext_zero"] = rep.ext_zero;
    out["gen_degrees"] = rep.gen_degrees;
    if (!rep.ext_zero) {
        out["window"] = ojson::array({rep.window_lo, rep.window_hi});
        out["invariant_dims"] = ojson::array();
        for (const auto& [deg, dim] : rep.invariant_dims)
            out["invariant_dims"].push_back(ojson::array({deg, dim}));
    }
    if (rep.witness_degree == ExtReport<C>::no_witness)
        out["witness_degree"] = nullptr;
    else
        out["witness_degree"] = rep.witness_degree;
    return out;
}

template <class C>
std::string run_polygraph(const JobSpec& job) {
    std::string format = require_format(job, {"text", "json"});
    PolygraphSpec spec = make_polygraph_spec(job.n, job.k, job.override_guards);
    auto pres = s_module_presentation<C>(spec, gb_options(job), 8, job.field);
    long j = job.j >= 0 ? job.j : job.k + 1;
    ExtReport<C> rep = ext_modules(pres, j, gb_options(job), job.field);

    std::cerr << "polygraph n=" << rep.n << " k=" << rep.k << " j=" << rep.j
              << ": " << rep.verdict << "\n";
    if (format == "json") return ext_report_json(rep).dump() + "\n";

    std::string s;
    s += "n: " + std::to_string(rep.n) + "\n";
    s += "k: " + std::to_string(rep.k) + "\n";
    s += "j: " + std::to_string(rep.j) + "\n";
    s += "verdict: " + rep.verdict + "\n";
    if (!rep.ext_zero) {
        s += "window: [" + std::to_string(rep.window_lo) + ", " +
             std::to_string(rep.window_hi) + "]\n";
        for (const auto& [deg, dim] : rep.invariant_dims)
            s += "invariants in degree " + std::to_string(deg) + ": " +
                 std::to_string(dim) + "\n";
    }
    if (rep.witness_degree != ExtReport<C>::no_witness)
        s += "witness degree: " + std::to_string(rep.witness_degree) + "\n";
    return s;
}

std::string run_report(const JobSpec& job) {
    std::string format = require_format(job, {"text", "json", "csv"});
    if (job.nmax < 1 || job.pmax < 0)
        throw input_error("report needs --nmax >= 1 and --pmax >= 0");
    struct Row {
        DegreeBoundReport bound;
        GonalityReport gon;
    };
    std::vector<Row> rows;
    for (long n = 1; n <= job.nmax; ++n)
        for (long p = 0; p <= job.pmax; ++p)
            rows.push_back({adjoint_bundle_degree_bound(n, p),
                            gonality_bound_report(n, p, true)});
    if (format == "json") {
        ojson out = ojson::array();
        for (const auto& row : rows)
            out.push_back(ojson{{"n", row.bound.n},
                                {"p", row.bound.p},
                                {"bound", row.bound.bound},
                                {"gonality_bound", row.gon.gonality_bound},
                                {"hypotheses", row.bound.hypotheses}});
        return out.dump() + "\n";
    }
    if (format == "csv") {
        std::string s = "n,p,bound,gonality_bound\n";
        for (const auto& row : rows)
            s += std::to_string(row.bound.n) + "," + std::to_string(row.bound.p) +
                 "," + std::to_string(row.bound.bound) + "," +
                 std::to_string(row.gon.gonality_bound) + "\n";
        return s;
    }
    std::string s = "adjoint degree bounds (rows n, columns p)\n";
    s += "    ";
    for (long p = 0; p <= job.pmax; ++p)
        s += "  " + detail::pad_left(std::to_string(p), 3);
    s += "\n";
    std::size_t i = 0;
    for (long n = 1; n <= job.nmax; ++n) {
        s += detail::pad_left(std::to_string(n) + ":", 4);
        for (long p = 0; p <= job.pmax; ++p)
            s += "  " +
                 detail::pad_left(std::to_string(rows[i + static_cast<std::size_t>(p)]
                                                     .bound.bound),
                                  3);
        s += "\n";
        i += static_cast<std::size_t>(job.pmax + 1);
    }
    s += "gonality and irrationality bound under the vanishing: p + 2\n";
    return s;
}

std::string run_verify(const JobSpec& job, int* exit_code) {
    std::string format = require_format(job, {"text", "json", "csv"});
    VerifyOptions opts;
    opts.level = job.level;
    opts.seed = job.seed;
    opts.threads = job.threads;
    auto results = verify_suite(opts);
    long passed = 0;
    for (const auto& r : results)
        if (r.pass) ++passed;
    bool all = passed == static_cast<long>(results.size());
    *exit_code = all ? 0 : 1;

    if (format == "json") {
        ojson out = ojson::array();
        for (const auto& r : results)
            out.push_back(ojson{{"name", r.name},
                                {"pass", r.pass},
                                {"detail", r.detail}});
        return out.dump() + "\n";
    }
    if (format == "csv") {
        std::string s = "name,pass,detail\n";
        for (const auto& r : results)
            s += r.name + "," + (r.pass ? "1" : "0") + "," + r.detail + "\n";
        return s;
    }
    std::string s;
    for (const auto& r : results)
        s += std::string(r.pass ? "PASS" : "FAIL") + " " + r.name + " " +
             r.detail + "\n";
    s += "summary: " + std::to_string(passed) + "/" +
         std::to_string(results.size()) + " passed\n";
    return s;
}

// ------------------------------------------------------------- dispatching

template <class C>
std::string dispatch_field(const JobSpec& job) {
    if (job.subcommand == "gb") return run_gb<C>(job);
    if (job.subcommand == "eliminate") return run_eliminate<C>(job);
    if (job.subcommand == "intersect") return run_intersect<C>(job);
    if (job.subcommand == "resolve") return run_resolve<C>(job);
    if (job.subcommand == "betti") return run_betti<C>(job);
    if (job.subcommand == "koszul") return run_koszul<C>(job);
    if (job.subcommand == "sections") return run_sections<C>(job);
    if (job.subcommand == "polygraph") return run_polygraph<C>(job);
    throw internal_error("unhandled subcommand " + job.subcommand);
}

int run(const JobSpec& job) {
    int exit_code = 0;
    std::string output;
    if (job.subcommand == "ample") {
        output = run_ample(job);
    } else if (job.subcommand == "curve-bound") {
        output = run_curve_bound(job);
    } else if (job.subcommand == "report") {
        output = run_report(job);
    } else if (job.subcommand == "verify") {
        output = run_verify(job, &exit_code);
    } else {
        output = job.field.rational ? dispatch_field<Rat>(job)
                                    : dispatch_field<Fp>(job);
    }
    emit(job, output);
    return exit_code;
}

FieldSpec parse_field(const std::string& text) {
    if (text == "qq") return FieldSpec::rationals();
    if (text.rfind("fp:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty()) throw input_error("--field fp: needs a modulus");
        std::uint64_t p = 0;
        try {
            std::size_t used = 0;
            p = std::stoull(digits, &used);
            if (used != digits.size()) throw std::invalid_argument(digits);
        } catch (const std::exception&) {
            throw input_error("bad modulus in --field " + text);
        }
        if (p < 2) throw input_error("--field fp: needs a modulus of at least 2");
        return FieldSpec::prime(p);
    }
    throw input_error("--field must be qq or fp:P");
}

OrderKind parse_order(const std::string& text) {
    if (text == "grevlex") return OrderKind::grevlex;
    if (text == "lex") return OrderKind::lex;
    throw input_error("--order must be grevlex or lex");
}

}  // namespace

int main(int argc, char** argv) {
    JobSpec job;
    std::string field_text = "qq";
    std::string order_text = "grevlex";

    CLI::App app{"exact Koszul cohomology, syzygies, and ampleness checks"};
    app.require_subcommand(0, 1);
    app.fallthrough();
    app.add_option("--field", field_text, "coefficient field: qq or fp:P");
    app.add_option("--order", order_text, "monomial order: grevlex or lex");
    app.add_option("--seed", job.seed, "seed for every randomized strategy");
    app.add_option("--threads", job.threads, "worker cap for parallel sweeps");
    app.add_option("--max-basis", job.max_basis, "Groebner basis size guard");
    app.add_option("--format", job.format, "output format: text, json, or csv");
    app.add_option("--out", job.out, "write results to a file instead of stdout");

    auto* gb = app.add_subcommand("gb", "Groebner basis of an ideal");
    gb->add_option("input", job.inputs, "ideal file, or - for stdin")
        ->expected(1)
        ->required();

    auto* elim = app.add_subcommand("eliminate", "eliminate named variables");
    elim->add_option("input", job.inputs, "ideal file, or - for stdin")
        ->expected(1)
        ->required();
    elim->add_option("--vars", job.elim_vars, "comma separated variables to drop")
        ->delimiter(',')
        ->required();

    auto* meet = app.add_subcommand("intersect", "intersection of two ideals");
    meet->add_option("inputs", job.inputs, "two ideal files over one ring")
        ->expected(2)
        ->required();

    auto* resolve = app.add_subcommand("resolve", "minimal free resolution");
    resolve->add_option("input", job.inputs, "module or ideal file")
        ->expected(1)
        ->required();
    resolve->add_option("--max-length", job.max_length,
                        "truncate after this many steps");

    auto* betti = app.add_subcommand("betti", "graded Betti table");
    betti->add_option("input", job.inputs, "module or ideal file")
        ->expected(1)
        ->required();

    auto* koszul_cmd =
        app.add_subcommand("koszul", "Koszul cohomology dimension");
    auto* koszul_input =
        koszul_cmd->add_option("input", job.inputs, "module or ideal file");
    koszul_input->expected(1);
    auto* opt_b = koszul_cmd->add_option("--b", job.b, "twist degree on the line");
    auto* opt_d =
        koszul_cmd->add_option("--d", job.d, "polarization degree on the line");
    koszul_cmd->add_option("--p", job.p, "homological index")->required();
    koszul_cmd->add_option("--q", job.q, "internal degree")->required();

    auto* sections = app.add_subcommand(
        "sections", "section module of a twist on the line");
    sections->add_option("--b", job.b, "twist degree");
    sections->add_option("--d", job.d, "polarization degree")->required();
    sections->add_option("--qmax", job.qmax, "relations complete through here");

    auto* ample = app.add_subcommand(
        "ample", "very-ampleness order and evaluation maps on the line");
    ample->add_option("--m", job.m, "degree of the bundle")->required();
    ample->add_option("--pmax", job.pmax, "also profile orders up to here");
    ample->add_flag("--sampled", job.sampled,
                    "sample profiles instead of exhausting them");
    ample->add_option("--trials", job.trials, "samples per profile entry");
    auto* ample_input = ample->add_option(
        "--input", job.inputs, "JSON file of points and jets to evaluate at");
    ample_input->expected(1);

    auto* curve = app.add_subcommand(
        "curve-bound", "numeric nonvanishing certificate for curves");
    curve->add_option("--g", job.g, "genus")->required();
    curve->add_option("--d", job.d, "polarization degree")->required();
    curve->add_option("--b", job.b, "twist degree");
    curve->add_option("--p", job.p, "strand index")->required();
    curve->add_option("--h0b", job.h0b, "section count of the twist");

    auto* poly = app.add_subcommand(
        "polygraph", "equivariant ext vanishing for polygraph quotients");
    poly->add_option("--n", job.n, "number of points")->required();
    poly->add_option("--k", job.k, "number of components")->required();
    poly->add_option("--j", job.j, "cohomological degree, default k+1");
    poly->add_flag("--override-guards", job.override_guards,
                   "lift the size guards");

    auto* report = app.add_subcommand(
        "report", "effective degree bounds and gonality consequences");
    report->add_option("--nmax", job.nmax, "largest dimension");
    report->add_option("--pmax", job.pmax, "largest strand index");

    auto* verify = app.add_subcommand("verify", "run the correctness suite");
    verify->add_option("--level", job.level, "fast or full");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return 1;
    }

    try {
        job.subcommand = app.get_subcommands().front()->get_name();
        job.field = parse_field(field_text);
        job.order = parse_order(order_text);
        if (job.threads < 1) throw input_error("--threads must be positive");
        job.has_b = opt_b->count() > 0;
        job.has_d = opt_d->count() > 0;
        job.has_input = koszul_input->count() > 0 || ample_input->count() > 0;
        if (job.subcommand == "report" && report->count("--pmax") == 0)
            job.pmax = 4;
        return run(job);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const resource_guard& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
