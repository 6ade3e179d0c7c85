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

// Polygraph coordinate rings.  The ring lives in variables x_1..x_n,
// y_1..y_n, a_1..a_k, b_1..b_k and is cut out by the intersection over all
// functions f: {1..k} -> {1..n} of the ideals (a_i - x_{f(i)}, b_i - y_{f(i)}).
// This header builds that intersection, presents the quotient as a graded
// module over the small ring S = scalars[x_1..x_n, y_1..y_n] through its
// component embedding into S^(n^k), computes Ext^j_S of the presentation
// against S from a truncated minimal free resolution, and decides whether
// the symmetric-group-invariant part of that Ext module vanishes, degree by
// degree over a window wide enough to make the verdict a certificate.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gradedmod.hpp"
#include "groebner.hpp"
#include "matrix.hpp"
#include "symgrp.hpp"

namespace koszul {

// -------- specs and component enumeration --------

struct PolygraphSpec {
    long n = 1;
    long k = 0;
    long components = 1;  // n^k
    RingPtr ring;         // x_1..x_n, y_1..y_n, a_1..a_k, b_1..b_k

    std::size_t x_index(long i) const { return static_cast<std::size_t>(i); }
    std::size_t y_index(long i) const { return static_cast<std::size_t>(n + i); }
    std::size_t a_index(long i) const { return static_cast<std::size_t>(2 * n + i); }
    std::size_t b_index(long i) const { return static_cast<std::size_t>(2 * n + k + i); }
};

inline PolygraphSpec make_polygraph_spec(long n, long k, bool override_guards = false) {
    if (n < 1) throw input_error("polygraph needs n >= 1");
    if (k < 0) throw input_error("polygraph needs k >= 0");
    if (!override_guards && (n > 3 || k > 2))
        throw resource_guard("polygraph sizes beyond n = 3, k = 2 need the override flag");
    long components = 1;
    for (long i = 0; i < k; ++i) {
        components *= n;
        if (components > 4096)
            throw resource_guard("polygraph component count n^k exceeds 4096");
    }
    PolygraphSpec spec;
    spec.n = n;
    spec.k = k;
    spec.components = components;
    std::vector<std::string> names;
    for (long i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (long i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    for (long i = 1; i <= k; ++i) names.push_back("a" + std::to_string(i));
    for (long i = 1; i <= k; ++i) names.push_back("b" + std::to_string(i));
    spec.ring = make_ring(std::move(names));
    return spec;
}

// All functions {0..k-1} -> {0..n-1}, enumerated with the last slot moving
// fastest; for k = 0 the single empty function.
inline std::vector<std::vector<long>> function_indices(const PolygraphSpec& spec) {
    std::vector<std::vector<long>> out;
    out.reserve(static_cast<std::size_t>(spec.components));
    std::vector<long> f(static_cast<std::size_t>(spec.k), 0);
    for (;;) {
        out.push_back(f);
        long slot = spec.k - 1;
        while (slot >= 0 && f[static_cast<std::size_t>(slot)] == spec.n - 1) {
            f[static_cast<std::size_t>(slot)] = 0;
            --slot;
        }
        if (slot < 0) break;
        ++f[static_cast<std::size_t>(slot)];
    }
    return out;
}

// The small ring S the module presentation lives over.
inline RingPtr polygraph_sring(long n) {
    std::vector<std::string> names;
    for (long i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (long i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    return make_ring(std::move(names));
}

// Substitution images for one component: a_i -> x_{f(i)}, b_i -> y_{f(i)},
// with x and y fixed, as a full image list for poly_map on the big ring.
template <class C>
std::vector<Poly<C>> component_substitution(const PolygraphSpec& spec,
                                            const std::vector<long>& f) {
    std::vector<Poly<C>> images;
    images.reserve(spec.ring->nvars());
    for (long i = 0; i < 2 * spec.n; ++i)
        images.push_back(poly_var<C>(spec.ring, static_cast<std::size_t>(i)));
    for (long i = 0; i < spec.k; ++i)
        images.push_back(poly_var<C>(spec.ring, spec.x_index(f[static_cast<std::size_t>(i)])));
    for (long i = 0; i < spec.k; ++i)
        images.push_back(poly_var<C>(spec.ring, spec.y_index(f[static_cast<std::size_t>(i)])));
    return images;
}

// -------- the intersection ideal --------

// Groebner basis of the intersection over all components f of the ideals
// (a_i - x_{f(i)}, b_i - y_{f(i)}).  Rather than iterated pairwise
// intersection, one module computation does the whole job: p lies in the
// intersection exactly when p * (1,...,1) falls inside the submodule of
// R^(n^k) spanned by the componentwise generators, so the intersection is
// the coordinate-0 projection of the syzygies of the stacked module
// [all-ones; e_f * gen].  Stability of the result under every adjacent
// transposition of the x and y families is verified by normal forms.
template <class C>
std::vector<Poly<C>> polygraph_ideal(const PolygraphSpec& spec, const GBOptions& opts = {},
                                     const FieldSpec& field = FieldSpec::rationals()) {
    if (spec.k == 0) return {};
    const RingPtr& ring = spec.ring;
    ModuleOrder ord;
    auto fs = function_indices(spec);
    std::uint32_t rank = static_cast<std::uint32_t>(spec.components);

    std::vector<Vec<C>> stacked;
    Vec<C> ones(ring, rank);
    for (std::uint32_t pos = 0; pos < rank; ++pos)
        ones.terms.push_back({pos, mono_one(*ring), C(1)});
    vec_normalize(ones, ord);
    stacked.push_back(std::move(ones));
    for (std::uint32_t pos = 0; pos < rank; ++pos) {
        const auto& f = fs[pos];
        for (long i = 0; i < spec.k; ++i) {
            Poly<C> ga = poly_var<C>(ring, spec.a_index(i)) -
                         poly_var<C>(ring, spec.x_index(f[static_cast<std::size_t>(i)]));
            Poly<C> gb = poly_var<C>(ring, spec.b_index(i)) -
                         poly_var<C>(ring, spec.y_index(f[static_cast<std::size_t>(i)]));
            stacked.push_back(vec_from_poly(ga, rank, pos, ord));
            stacked.push_back(vec_from_poly(gb, rank, pos, ord));
        }
    }
    for (auto& v : stacked)
        for (auto& t : v.terms) t.c = in_field(t.c, field);

    auto kd = kernel_and_gb(stacked, rank, ring, ord, opts);
    std::vector<Poly<C>> cut;
    for (const auto& s : kd.syzygies) {
        Poly<C> p = vec_component(s, 0);
        if (!p.is_zero()) cut.push_back(std::move(p));
    }
    auto gb = groebner_basis(cut, ring, opts);

    for (long t = 0; t + 1 < spec.n; ++t) {
        std::vector<std::size_t> swap(ring->nvars());
        for (std::size_t v = 0; v < swap.size(); ++v) swap[v] = v;
        std::swap(swap[spec.x_index(t)], swap[spec.x_index(t + 1)]);
        std::swap(swap[spec.y_index(t)], swap[spec.y_index(t + 1)]);
        for (const auto& g : gb) {
            Poly<C> moved = poly_rename(g, ring, swap);
            if (!normal_form_poly(moved, gb, ring).is_zero())
                throw internal_error("polygraph ideal fails symmetric-group stability");
        }
    }
    return gb;
}

// -------- module presentation over the small ring --------

template <class C>
struct SModulePresentation {
    PolygraphSpec spec;
    RingPtr sring;
    std::vector<Mono> gen_monomials;  // a,b-monomials of the big ring
    std::vector<Vec<C>> images;       // their component vectors in S^(n^k)
    GradedModule<C> module;           // presented over sring
    long stabilized_at = 0;
};

namespace detail {

inline void ab_monomials_rec(const PolygraphSpec& spec, std::size_t slot, long left,
                             Mono& cur, std::vector<Mono>& out) {
    std::size_t base = spec.a_index(0);
    if (slot + 1 == static_cast<std::size_t>(2 * spec.k)) {
        cur[base + slot] = static_cast<std::uint32_t>(left);
        out.push_back(cur);
        cur[base + slot] = 0;
        return;
    }
    for (long e = left; e >= 0; --e) {
        cur[base + slot] = static_cast<std::uint32_t>(e);
        ab_monomials_rec(spec, slot + 1, left - e, cur, out);
    }
    cur[base + slot] = 0;
}

// a,b-monomials of total degree <= cap, by degree then enumeration order.
inline std::vector<Mono> ab_monomials_up_to(const PolygraphSpec& spec, long cap) {
    std::vector<Mono> out;
    std::size_t nv = spec.ring->nvars();
    if (spec.k == 0) {
        out.push_back(Mono(nv, 0));
        return out;
    }
    Mono cur(nv, 0);
    for (long d = 0; d <= cap; ++d) ab_monomials_rec(spec, 0, d, cur, out);
    return out;
}

}  // namespace detail

// Component vector of one a,b-monomial: in component f the monomial maps to
// a single small-ring monomial, exponent of x_t collecting the a_i with
// f(i) = t and likewise for y.
template <class C>
Vec<C> polygraph_image_vector(const PolygraphSpec& spec, const RingPtr& sring,
                              const Mono& mono, const std::vector<std::vector<long>>& fs,
                              const ModuleOrder& ord,
                              const FieldSpec& field = FieldSpec::rationals()) {
    Vec<C> v(sring, static_cast<std::uint32_t>(fs.size()));
    for (std::uint32_t pos = 0; pos < fs.size(); ++pos) {
        Mono m(sring->nvars(), 0);
        for (long i = 0; i < spec.k; ++i) {
            long t = fs[pos][static_cast<std::size_t>(i)];
            m[spec.x_index(t)] += mono[spec.a_index(i)];
            m[spec.y_index(t)] += mono[spec.b_index(i)];
        }
        v.terms.push_back({pos, std::move(m), in_field(C(1), field)});
    }
    vec_normalize(v, ord);
    return v;
}

// Presentation on a caller-chosen monomial list: images, their syzygies as
// relations, generator degrees from monomial degrees.  No span checking
// happens here; the list may deliberately be redundant.
template <class C>
SModulePresentation<C> presentation_from_monomials(const PolygraphSpec& spec,
                                                   const std::vector<Mono>& monos,
                                                   const GBOptions& opts = {},
                                                   const FieldSpec& field = FieldSpec::rationals()) {
    SModulePresentation<C> pres;
    pres.spec = spec;
    pres.sring = polygraph_sring(spec.n);
    ModuleOrder ord;
    auto fs = function_indices(spec);
    std::vector<long> shifts;
    long top = 0;
    for (const auto& m : monos) {
        pres.gen_monomials.push_back(m);
        pres.images.push_back(polygraph_image_vector<C>(spec, pres.sring, m, fs, ord, field));
        long d = mono_degree(*spec.ring, m);
        shifts.push_back(d);
        top = std::max(top, d);
    }
    auto kd = kernel_and_gb(pres.images, static_cast<std::uint32_t>(fs.size()), pres.sring,
                            ord, opts);
    pres.module = make_graded_module<C>(pres.sring, std::move(shifts), kd.syzygies, opts);
    pres.stabilized_at = top;
    return pres;
}

namespace detail {

// Dimension of the degree-q small-ring span of the image vectors.
template <class C>
long image_span_dimension(const RingPtr& sring, const std::vector<Vec<C>>& images,
                          const std::vector<long>& degrees, long q) {
    OnlineRank<C> elim;
    std::map<std::pair<std::uint32_t, Mono>, std::size_t> coord;
    for (std::size_t g = 0; g < images.size(); ++g) {
        long rest = q - degrees[g];
        if (rest < 0) continue;
        for (const auto& mu : monomials_of_degree(*sring, rest)) {
            std::vector<std::pair<std::size_t, C>> row;
            for (const auto& t : images[g].terms) {
                auto key = std::make_pair(t.pos, mono_mul(mu, t.m));
                auto it = coord.find(key);
                if (it == coord.end())
                    it = coord.emplace(std::move(key), coord.size()).first;
                row.emplace_back(it->second, t.c);
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            elim.absorb(std::move(row));
        }
    }
    return static_cast<long>(elim.rank);
}

}  // namespace detail

// Presentation of the polygraph quotient as a small-ring module.  Starting
// from the constant generator, the a,b-monomial degree cap grows until the
// small-ring span of the images matches the Hilbert function of the big-ring
// quotient through degree cap + 2; duplicate image vectors are dropped.
template <class C>
SModulePresentation<C> s_module_presentation(const PolygraphSpec& spec,
                                             const GBOptions& opts = {},
                                             long degree_cap = 8,
                                             const FieldSpec& field = FieldSpec::rationals()) {
    auto gb = polygraph_ideal<C>(spec, opts, field);
    auto quotient = quotient_ring_module<C>(spec.ring, gb, opts);
    RingPtr sring = polygraph_sring(spec.n);
    ModuleOrder ord;
    auto fs = function_indices(spec);

    for (long cap = 0; cap <= degree_cap; ++cap) {
        std::vector<Mono> monos;
        std::vector<Vec<C>> images;
        std::vector<long> degrees;
        std::map<std::vector<std::pair<std::uint32_t, Mono>>, bool> seen;
        for (const auto& m : detail::ab_monomials_up_to(spec, cap)) {
            Vec<C> v = polygraph_image_vector<C>(spec, sring, m, fs, ord, field);
            std::vector<std::pair<std::uint32_t, Mono>> key;
            for (const auto& t : v.terms) key.emplace_back(t.pos, t.m);
            if (!seen.emplace(std::move(key), true).second) continue;
            monos.push_back(m);
            degrees.push_back(mono_degree(*spec.ring, m));
            images.push_back(std::move(v));
        }
        bool stable = true;
        for (long q = 0; q <= cap + 2 && stable; ++q) {
            long want = hilbert_function(quotient, q);
            long got = detail::image_span_dimension<C>(sring, images, degrees, q);
            if (got > want) throw internal_error("image span exceeds the quotient ring");
            if (got < want) stable = false;
        }
        if (!stable) continue;
        auto pres = presentation_from_monomials<C>(spec, monos, opts, field);
        pres.stabilized_at = cap;
        return pres;
    }
    throw resource_guard("module presentation did not stabilize below the degree cap (" +
                         std::to_string(degree_cap) + ")");
}

// Low-degree injectivity witness for the component embedding: through
// degree q_max, the Hilbert function of the big-ring quotient must equal
// the rank of the matrix evaluating monomials in all components at once.
template <class C>
bool embedding_hilbert_check(const PolygraphSpec& spec, const std::vector<Poly<C>>& gb,
                             long q_max = 4, const GBOptions& opts = {},
                             const FieldSpec& field = FieldSpec::rationals()) {
    auto quotient = quotient_ring_module<C>(spec.ring, gb, opts);
    RingPtr sring = polygraph_sring(spec.n);
    auto fs = function_indices(spec);
    for (long q = 0; q <= q_max; ++q) {
        OnlineRank<C> elim;
        std::map<std::pair<std::uint32_t, Mono>, std::size_t> coord;
        for (const auto& mono : monomials_of_degree(*spec.ring, q)) {
            std::vector<std::pair<std::size_t, C>> row;
            for (std::uint32_t pos = 0; pos < fs.size(); ++pos) {
                Mono m(sring->nvars(), 0);
                for (long v = 0; v < 2 * spec.n; ++v)
                    m[static_cast<std::size_t>(v)] = mono[static_cast<std::size_t>(v)];
                for (long i = 0; i < spec.k; ++i) {
                    long t = fs[pos][static_cast<std::size_t>(i)];
                    m[spec.x_index(t)] += mono[spec.a_index(i)];
                    m[spec.y_index(t)] += mono[spec.b_index(i)];
                }
                auto key = std::make_pair(pos, std::move(m));
                auto it = coord.find(key);
                if (it == coord.end()) it = coord.emplace(std::move(key), coord.size()).first;
                row.emplace_back(it->second, in_field(C(1), field));
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            elim.absorb(std::move(row));
        }
        if (static_cast<long>(elim.rank) != hilbert_function(quotient, q)) return false;
    }
    return true;
}

// Top nonzero degree of the ring of x,y variables modulo the polarized
// power sums of total degree 1..n.  The quotient is generated in degree
// zero, so its Hilbert function has no internal zeros and the scan may stop
// at the first vanishing degree.
inline long diagonal_coinvariant_top_degree(long n, const GBOptions& opts = {}) {
    if (n < 1) throw input_error("coinvariant top degree needs n >= 1");
    RingPtr sring = polygraph_sring(n);
    std::vector<Poly<Rat>> gens;
    for (long r = 0; r <= n; ++r)
        for (long s = 0; r + s <= n; ++s) {
            if (r + s < 1) continue;
            Poly<Rat> sum(sring);
            for (long i = 0; i < n; ++i) {
                Mono m(sring->nvars(), 0);
                m[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(r);
                m[static_cast<std::size_t>(n + i)] = static_cast<std::uint32_t>(s);
                sum = sum + poly_term<Rat>(sring, std::move(m), Rat(1));
            }
            gens.push_back(std::move(sum));
        }
    auto quotient = quotient_ring_module<Rat>(sring, gens, opts);
    long top = 0;
    for (long q = 0; q <= 2 * n * n + 2; ++q) {
        if (hilbert_function(quotient, q) == 0) return top;
        top = q;
    }
    throw internal_error("coinvariant ring scan found no vanishing degree");
}

// -------- Ext and the invariant verdict --------

template <class C>
struct ExtReport {
    static constexpr long no_witness = std::numeric_limits<long>::min();

    long n = 0;
    long k = 0;
    long j = 0;
    bool ext_zero = false;
    GradedModule<C> ext;
    std::vector<long> gen_degrees;
    long window_lo = 0;
    long window_hi = 0;
    std::vector<std::pair<long, long>> invariant_dims;  // (degree, dimension)
    std::string verdict;
    long witness_degree = no_witness;  // meaningful only for invariants-nonzero
};

namespace detail {

// Column c of the level-p chain lift of sigma: the unique-up-to-homotopy u
// with d_p * u = C_{p-1} applied to the variable-renamed column of d_p.
template <class C>
std::vector<std::vector<Poly<C>>> lift_level(const std::vector<Vec<C>>& dp,
                                             std::uint32_t tgt_rank,
                                             const std::vector<std::vector<Poly<C>>>& prev,
                                             const KernelData<C>& kd, const Perm& var_perm,
                                             const ModuleOrder& ord) {
    std::vector<std::vector<Poly<C>>> out;
    out.reserve(dp.size());
    for (const auto& col : dp) {
        Vec<C> moved = act_on_vec(col, var_perm, ord);
        Vec<C> target(moved.ring, tgt_rank);
        std::vector<Poly<C>> comps(tgt_rank, Poly<C>(moved.ring));
        for (const auto& t : moved.terms) {
            Poly<C> piece = poly_term<C>(moved.ring, t.m, t.c);
            for (std::uint32_t r = 0; r < tgt_rank; ++r) {
                const Poly<C>& entry = prev[t.pos][r];
                if (!entry.is_zero()) comps[r] = comps[r] + entry * piece;
            }
        }
        for (std::uint32_t r = 0; r < tgt_rank; ++r)
            for (const auto& t : comps[r].terms) target.terms.push_back({r, t.m, t.c});
        vec_normalize(target, ord);
        std::vector<Poly<C>> u;
        if (!represent(kd, target, u))
            throw internal_error("chain lift left the image of the resolution map");
        out.push_back(std::move(u));
    }
    return out;
}

template <class C>
std::vector<std::vector<Poly<C>>> identity_lift(const RingPtr& ring, std::uint32_t rank) {
    std::vector<std::vector<Poly<C>>> cols(rank, std::vector<Poly<C>>(rank, Poly<C>(ring)));
    for (std::uint32_t r = 0; r < rank; ++r) cols[r][r] = poly_const<C>(ring, C(1));
    return cols;
}

}  // namespace detail

// Graded presentation of Ext^j over the small ring together with the
// per-degree dimensions of its invariant part and the resulting verdict.
// The dual of the truncated minimal free resolution gives kernel and image
// at homological spot j; kernel generators surviving membership in the
// image present Ext.  The group acts on cohomology classes through chain
// lifts of the variable permutations, the invariant dimension in each
// degree is the rank of the averaged action on that graded piece, and the
// scanned window [min generator degree, max(gen + rel + n, gen + top
// coinvariant degree)] is wide enough that all-zero scans certify that the
// invariant part vanishes in every degree.
template <class C>
ExtReport<C> ext_modules(const SModulePresentation<C>& pres, long j,
                         const GBOptions& opts = {},
                         const FieldSpec& field = FieldSpec::rationals()) {
    if (j < 0) throw input_error("cohomological degree must be nonnegative");
    if (!field.rational && field.p <= static_cast<std::uint64_t>(pres.spec.n))
        throw input_error("prime characteristic must exceed n to average over the group");

    ExtReport<C> report;
    report.n = pres.spec.n;
    report.k = pres.spec.k;
    report.j = j;

    const GradedModule<C>& m = pres.module;
    const ModuleOrder ord = m.ord;
    const RingPtr& sring = pres.sring;
    auto res = minimal_free_resolution(m, j + 1, opts, true);
    long length = static_cast<long>(res.maps.size());

    if (j > length) {
        report.ext_zero = true;
        report.verdict = "ext-zero";
        return report;
    }

    const std::vector<long>& fj = res.shifts[static_cast<std::size_t>(j)];
    std::uint32_t rank_j = static_cast<std::uint32_t>(fj.size());
    std::vector<long> dual_shifts;
    for (long s : fj) dual_shifts.push_back(-s);

    std::vector<Vec<C>> image_rows;
    if (j >= 1) {
        const auto& dj = res.maps[static_cast<std::size_t>(j - 1)];
        std::uint32_t rank_prev =
            static_cast<std::uint32_t>(res.shifts[static_cast<std::size_t>(j - 1)].size());
        for (std::uint32_t s = 0; s < rank_prev; ++s) {
            Vec<C> row(sring, rank_j);
            for (std::uint32_t r = 0; r < rank_j; ++r) {
                Poly<C> entry = vec_component(dj[r], s);
                for (const auto& t : entry.terms) row.terms.push_back({r, t.m, t.c});
            }
            vec_normalize(row, ord);
            if (!row.is_zero()) image_rows.push_back(std::move(row));
        }
    }

    std::vector<Vec<C>> kernel_gens;
    if (j < length) {
        const auto& dnext = res.maps[static_cast<std::size_t>(j)];
        std::uint32_t rank_next =
            static_cast<std::uint32_t>(res.shifts[static_cast<std::size_t>(j + 1)].size());
        std::vector<Vec<C>> rows;
        for (std::uint32_t r = 0; r < rank_j; ++r) {
            Vec<C> row(sring, rank_next);
            for (std::uint32_t c = 0; c < rank_next; ++c) {
                Poly<C> entry = vec_component(dnext[c], r);
                for (const auto& t : entry.terms) row.terms.push_back({c, t.m, t.c});
            }
            vec_normalize(row, ord);
            rows.push_back(std::move(row));
        }
        auto kd = kernel_and_gb(rows, rank_next, sring, ord, opts);
        kernel_gens = kd.syzygies;
    } else {
        for (std::uint32_t r = 0; r < rank_j; ++r) {
            Vec<C> unit(sring, rank_j);
            unit.terms.push_back({r, mono_one(*sring), in_field(C(1), field)});
            vec_normalize(unit, ord);
            kernel_gens.push_back(std::move(unit));
        }
    }

    std::vector<Vec<C>> surviving;
    if (!image_rows.empty()) {
        auto image_gb = buchberger(image_rows, ord, opts);
        for (auto& g : kernel_gens)
            if (!normal_form(g, image_gb, ord).is_zero()) surviving.push_back(std::move(g));
    } else {
        for (auto& g : kernel_gens)
            if (!g.is_zero()) surviving.push_back(std::move(g));
    }

    if (surviving.empty()) {
        report.ext_zero = true;
        report.verdict = "ext-zero";
        return report;
    }

    std::size_t nsurv = surviving.size();
    std::vector<Vec<C>> combined = surviving;
    for (const auto& r : image_rows) combined.push_back(r);
    auto kc = kernel_and_gb(combined, rank_j, sring, ord, opts);

    std::vector<long> ext_shifts;
    for (const auto& g : surviving) {
        auto d = vec_graded_degree(g, dual_shifts);
        if (!d || *d == deg_zero)
            throw internal_error("cohomology generator is not homogeneous");
        ext_shifts.push_back(*d);
    }
    std::vector<Vec<C>> ext_rels;
    for (const auto& s : kc.syzygies) {
        Vec<C> proj(sring, static_cast<std::uint32_t>(nsurv));
        for (const auto& t : s.terms)
            if (t.pos < nsurv) proj.terms.push_back(t);
        vec_normalize(proj, ord);
        if (!proj.is_zero()) ext_rels.push_back(std::move(proj));
    }
    report.ext = make_graded_module<C>(sring, ext_shifts, std::move(ext_rels), opts);
    report.gen_degrees = ext_shifts;

    PermAction action;
    {
        std::vector<std::size_t> xs, ys;
        for (long i = 0; i < pres.spec.n; ++i) {
            xs.push_back(static_cast<std::size_t>(i));
            ys.push_back(static_cast<std::size_t>(pres.spec.n + i));
        }
        action = make_perm_action(sring, pres.spec.n, {xs, ys});
    }
    const auto& sigmas = action.elements;
    std::map<Perm, std::size_t> sigma_index;
    for (std::size_t s = 0; s < sigmas.size(); ++s) sigma_index.emplace(sigmas[s], s);

    std::vector<KernelData<C>> level_kd;
    for (long p = 1; p <= j; ++p) {
        const auto& dp = res.maps[static_cast<std::size_t>(p - 1)];
        std::uint32_t tgt =
            static_cast<std::uint32_t>(res.shifts[static_cast<std::size_t>(p - 1)].size());
        level_kd.push_back(kernel_and_gb(dp, tgt, sring, ord, opts));
    }

    std::vector<std::vector<std::vector<Poly<C>>>> top_lift(sigmas.size());
    for (std::size_t s = 0; s < sigmas.size(); ++s) {
        Perm vp = action.var_perm(sigmas[s]);
        auto lift = detail::identity_lift<C>(sring, static_cast<std::uint32_t>(res.shifts[0].size()));
        for (long p = 1; p <= j; ++p) {
            const auto& dp = res.maps[static_cast<std::size_t>(p - 1)];
            std::uint32_t tgt =
                static_cast<std::uint32_t>(res.shifts[static_cast<std::size_t>(p - 1)].size());
            lift = detail::lift_level<C>(dp, tgt, lift, level_kd[static_cast<std::size_t>(p - 1)],
                                         vp, ord);
        }
        top_lift[s] = std::move(lift);
    }

    // Action matrix on presentation generators: row r, column g holds the
    // coefficient of generator r in sigma applied to generator g.
    std::vector<std::vector<std::vector<Poly<C>>>> gen_action(sigmas.size());
    for (std::size_t s = 0; s < sigmas.size(); ++s) {
        Perm vp = action.var_perm(sigmas[s]);
        std::vector<std::size_t> vp_rename(vp.begin(), vp.end());
        std::size_t inv = sigma_index.at(perm_inverse(sigmas[s]));
        const auto& cinv = top_lift[inv];
        gen_action[s].reserve(nsurv);
        for (std::size_t g = 0; g < nsurv; ++g) {
            std::vector<Poly<C>> phi(rank_j, Poly<C>(sring));
            for (const auto& t : surviving[g].terms)
                phi[t.pos] = phi[t.pos] + poly_term<C>(sring, t.m, t.c);
            Vec<C> acted(sring, rank_j);
            for (std::uint32_t r = 0; r < rank_j; ++r) {
                Poly<C> acc(sring);
                for (std::uint32_t q = 0; q < rank_j; ++q) {
                    const Poly<C>& centry = cinv[r][q];
                    if (!centry.is_zero() && !phi[q].is_zero())
                        acc = acc + centry * phi[q];
                }
                if (acc.is_zero()) continue;
                Poly<C> moved = poly_rename(acc, sring, vp_rename);
                for (const auto& t : moved.terms) acted.terms.push_back({r, t.m, t.c});
            }
            vec_normalize(acted, ord);
            std::vector<Poly<C>> u;
            if (!represent(kc, acted, u))
                throw internal_error("group action leaves the cohomology kernel");
            u.resize(nsurv, Poly<C>(sring));
            gen_action[s].push_back(std::move(u));
        }
    }

    long max_gen = *std::max_element(ext_shifts.begin(), ext_shifts.end());
    long min_gen = *std::min_element(ext_shifts.begin(), ext_shifts.end());
    long max_rel = 0;
    for (const auto& r : report.ext.relations) {
        auto d = vec_graded_degree(r, ext_shifts);
        if (d && *d != deg_zero) max_rel = std::max(max_rel, *d);
    }
    long top_coinv = diagonal_coinvariant_top_degree(pres.spec.n, opts);
    report.window_lo = min_gen;
    report.window_hi = std::max(max_gen + max_rel + pres.spec.n, max_gen + top_coinv);

    Int order(1);
    for (long i = 2; i <= pres.spec.n; ++i) order = order * Int(i);
    C inv_order = scalar_from_parts<C>(Int(1), order, field);

    for (long q = report.window_lo; q <= report.window_hi; ++q) {
        GradedPiece piece = graded_piece(report.ext, q);
        std::size_t dim = piece.dim();
        if (dim == 0) {
            report.invariant_dims.emplace_back(q, 0);
            continue;
        }
        PieceIndex index(piece);
        Matrix<C> averaged(dim, dim);
        for (std::size_t s = 0; s < sigmas.size(); ++s) {
            Perm vp = action.var_perm(sigmas[s]);
            for (std::size_t col = 0; col < dim; ++col) {
                const Mono& mu = piece.basis[col].first;
                std::uint32_t g = piece.basis[col].second;
                Mono moved(mu.size(), 0);
                for (std::size_t v = 0; v < mu.size(); ++v) moved[vp[v]] += mu[v];
                Poly<C> factor = poly_term<C>(sring, std::move(moved), C(1));
                Vec<C> acted(sring, static_cast<std::uint32_t>(nsurv));
                for (std::size_t r = 0; r < nsurv; ++r) {
                    const Poly<C>& coeff = gen_action[s][g][r];
                    if (coeff.is_zero()) continue;
                    Poly<C> prod = coeff * factor;
                    for (const auto& t : prod.terms)
                        acted.terms.push_back({static_cast<std::uint32_t>(r), t.m, t.c});
                }
                vec_normalize(acted, ord);
                std::vector<C> coords = piece_coords(report.ext, piece, index, acted);
                for (std::size_t row = 0; row < dim; ++row)
                    averaged.at(row, col) = averaged.at(row, col) + coords[row];
            }
        }
        for (std::size_t row = 0; row < dim; ++row)
            for (std::size_t col = 0; col < dim; ++col)
                averaged.at(row, col) = averaged.at(row, col) * inv_order;
        long inv_dim = static_cast<long>(mat_rank(averaged));
        report.invariant_dims.emplace_back(q, inv_dim);
        if (inv_dim > 0 && report.witness_degree == ExtReport<C>::no_witness)
            report.witness_degree = q;
    }

    report.verdict = report.witness_degree == ExtReport<C>::no_witness ? "invariants-zero"
                                                                       : "invariants-nonzero";
    return report;
}

// End-to-end check for one polygraph: present the quotient over the small
// ring and report on Ext^(k+1) and its invariants.
template <class C>
ExtReport<C> equivariant_vanishing_check(long n, long k, const GBOptions& opts = {},
                                         const FieldSpec& field = FieldSpec::rationals(),
                                         bool override_guards = false) {
    PolygraphSpec spec = make_polygraph_spec(n, k, override_guards);
    auto pres = s_module_presentation<C>(spec, opts, 8, field);
    return ext_modules<C>(pres, k + 1, opts, field);
}

}  // namespace koszul
