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

#ifndef KOSZUL_GEOMETRY_HPP
#define KOSZUL_GEOMETRY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gradedmod.hpp"
#include "koszul.hpp"

namespace koszul {

// -------- line bundles on the projective line --------

// Dimension of the space of global sections of O(m) on the line.
inline long h0_p1(long m) { return m >= 0 ? m + 1 : 0; }

// The module of sections of a twist O(b) collated along powers of the
// polarization O(d): pieces are binary forms of degree b + q*d, presented
// over the symmetric algebra on the degree-d forms (variables z0..zd with
// z_i standing for the monomial with t-exponent i).  Generators live in
// degree q0, the first symmetric degree whose piece is nonzero; relation
// columns are complete for pieces through degree q_max + 1.
template <class C>
struct SectionModule {
    long b = 0;
    long d = 0;
    long q0 = 0;
    long q_max = 0;
    GradedModule<C> module;
};

template <class C>
SectionModule<C> section_module(long b, long d, long q_max, const GBOptions& opts = {}) {
    if (d < 1) throw input_error("polarization degree must be at least 1");
    long q0 = 0;
    if (b < 0) q0 = (-b + d - 1) / d;
    if (q_max < q0) q_max = q0;
    const long base_deg = b + q0 * d;
    const long ngens = base_deg + 1;

    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(d) + 1);
    for (long i = 0; i <= d; ++i) names.push_back("z" + std::to_string(i));
    RingPtr ring = make_ring(std::move(names));

    const std::vector<long> shifts(static_cast<std::size_t>(ngens), q0);
    std::vector<Vec<C>> relations;
    std::vector<long> relation_degrees;
    const ModuleOrder ord;

    for (long q = q0 + 1; q <= q_max + 1; ++q) {
        const long e = q - q0;
        const auto monos = monomials_of_degree(*ring, e);
        const std::size_t ncols = monos.size() * static_cast<std::size_t>(ngens);

        // each column is a single binary monomial: z_i contributes i to the
        // t-exponent and generator j contributes j
        std::map<std::pair<std::uint32_t, Mono>, std::size_t> colindex;
        std::vector<long> texps(ncols);
        std::set<long> hit;
        std::size_t col = 0;
        for (const auto& mo : monos) {
            long t = 0;
            for (long i = 0; i <= d; ++i)
                t += static_cast<long>(mo[static_cast<std::size_t>(i)]) * i;
            for (long j = 0; j < ngens; ++j, ++col) {
                colindex.emplace(std::make_pair(static_cast<std::uint32_t>(j), mo), col);
                texps[col] = t + j;
                hit.insert(t + j);
            }
        }
        const std::size_t kernel_dim = ncols - hit.size();
        if (kernel_dim == 0) continue;

        // span of the earlier relations inside this piece
        OnlineRank<C> span;
        for (std::size_t r = 0; r < relations.size(); ++r) {
            const long gap = q - relation_degrees[r];
            if (gap < 0) continue;
            for (const auto& mu : monomials_of_degree(*ring, gap)) {
                std::map<std::size_t, C> coords;
                for (const auto& t : relations[r].terms) {
                    auto it = colindex.find(
                        std::make_pair(t.pos, mono_mul(mu, t.m)));
                    if (it == colindex.end())
                        throw internal_error("relation term leaves the expected piece");
                    coords[it->second] = coords[it->second] + t.c;
                }
                std::vector<std::pair<std::size_t, C>> row;
                for (auto& kv : coords)
                    if (!is_zero(kv.second)) row.emplace_back(kv.first, kv.second);
                span.absorb(std::move(row));
            }
        }
        if (span.rank == kernel_dim) continue;

        // canonical kernel basis: within each fiber of the t-exponent map,
        // every column minus the first
        std::map<long, std::size_t> first_col;
        for (std::size_t c2 = 0; c2 < ncols; ++c2) {
            auto it = first_col.find(texps[c2]);
            if (it == first_col.end()) {
                first_col.emplace(texps[c2], c2);
                continue;
            }
            const std::size_t c0 = it->second;
            if (!span.absorb({{c0, C(-1)}, {c2, C(1)}})) continue;
            Vec<C> rel(ring, static_cast<std::uint32_t>(ngens));
            for (const auto& kv : colindex) {
                if (kv.second == c2)
                    rel.terms.push_back({kv.first.first, kv.first.second, C(1)});
                else if (kv.second == c0)
                    rel.terms.push_back({kv.first.first, kv.first.second, C(-1)});
            }
            vec_normalize(rel, ord);
            relations.push_back(std::move(rel));
            relation_degrees.push_back(q);
        }
        if (span.rank != kernel_dim)
            throw internal_error("section relations fail to span the kernel");
    }

    SectionModule<C> out;
    out.b = b;
    out.d = d;
    out.q0 = q0;
    out.q_max = q_max;
    out.module = make_graded_module<C>(ring, shifts, std::move(relations), opts);
    return out;
}

// Koszul cohomology of the section module against V = the degree-d forms.
template <class C>
long koszul_of_sections(long b, long d, long p, long q, const GBOptions& opts = {}) {
    SectionModule<C> sm = section_module<C>(b, d, std::max(q, 0L), opts);
    return koszul_cohomology_dim(sm.module, variable_basis<C>(sm.module.ring), p, q);
}

// -------- evaluation maps onto finite subschemes --------

template <class C>
struct EvaluationMap {
    Matrix<C> matrix;
    long length = 0;
    std::size_t rank = 0;
    bool surjective = false;
};

template <class C>
C eval_poly_at(const Poly<C>& f, const std::vector<C>& point) {
    if (!f.ring || f.ring->nvars() != point.size())
        throw input_error("point coordinate count does not match the ring");
    C acc(0);
    for (const auto& t : f.terms) {
        C v = t.c;
        for (std::size_t i = 0; i < point.size(); ++i)
            for (std::uint32_t e = 0; e < t.m[i]; ++e) v = v * point[i];
        acc = acc + v;
    }
    return acc;
}

namespace detail {

template <class C>
long common_section_degree(const std::vector<Poly<C>>& sections) {
    long deg = -1;
    for (const auto& f : sections) {
        if (f.is_zero()) continue;
        auto fd = graded_degree(f);
        if (!fd) throw input_error("sections must be homogeneous");
        if (deg >= 0 && *fd != deg)
            throw input_error("sections must share one degree");
        deg = *fd;
    }
    return deg;
}

template <class C>
void finish_evaluation(EvaluationMap<C>& ev) {
    ev.rank = mat_rank(ev.matrix);
    ev.surjective = ev.rank == static_cast<std::size_t>(ev.length);
}

}  // namespace detail

// Evaluation of a section space at a reduced configuration of points with
// exact homogeneous coordinates; one row per point.
template <class C>
EvaluationMap<C> evaluation_at_points(const std::vector<Poly<C>>& sections,
                                      const std::vector<std::vector<C>>& points) {
    detail::common_section_degree(sections);
    EvaluationMap<C> ev;
    ev.length = static_cast<long>(points.size());
    ev.matrix = Matrix<C>(points.size(), sections.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool nonzero = false;
        for (const auto& c : points[i])
            if (!is_zero(c)) nonzero = true;
        if (!nonzero)
            throw input_error("evaluation point has all coordinates zero");
        for (std::size_t j = 0; j < sections.size(); ++j)
            ev.matrix.at(i, j) = eval_poly_at(sections[j], points[i]);
    }
    detail::finish_evaluation(ev);
    return ev;
}

// Evaluation of binary forms against the divisor cut out on the line by a
// nonzero homogeneous form; rows are the monomial basis of the length-deg
// quotient in the sections' degree.
template <class C>
EvaluationMap<C> evaluation_at_divisor(const std::vector<Poly<C>>& sections,
                                       const Poly<C>& divisor,
                                       const GBOptions& opts = {}) {
    if (!divisor.ring || divisor.ring->nvars() != 2)
        throw input_error("divisor evaluation expects a binary form");
    if (divisor.is_zero())
        throw input_error("divisor form must be nonzero");
    auto ddeg = graded_degree(divisor);
    if (!ddeg || *ddeg < 1)
        throw input_error("divisor form must be homogeneous of positive degree");
    for (const auto& f : sections)
        if (!f.is_zero() && (!f.ring || !f.ring->same_as(*divisor.ring)))
            throw input_error("sections and divisor must share one ring");
    const long w = detail::common_section_degree(sections);

    GradedModule<C> qm = quotient_ring_module<C>(divisor.ring, {divisor}, opts);
    GradedPiece piece = graded_piece(qm, std::max(w, 0L));
    PieceIndex index(piece);

    EvaluationMap<C> ev;
    ev.length = *ddeg;
    ev.matrix = Matrix<C>(piece.dim(), sections.size());
    for (std::size_t j = 0; j < sections.size(); ++j) {
        if (sections[j].is_zero()) continue;
        Vec<C> v = vec_from_poly(sections[j], 1, 0, qm.ord);
        auto coords = piece_coords(qm, piece, index, v);
        for (std::size_t i = 0; i < coords.size(); ++i) ev.matrix.at(i, j) = coords[i];
    }
    detail::finish_evaluation(ev);
    return ev;
}

namespace detail {

template <class C>
std::vector<C> series_mul(const std::vector<C>& a, const std::vector<C>& b,
                          std::size_t len) {
    std::vector<C> out(len, C(0));
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
            out[i + j] = out[i + j] + a[i] * b[j];
    }
    return out;
}

}  // namespace detail

// Evaluation against a curvilinear jet: the germ lists one truncated power
// series in the local parameter per ambient coordinate, and rows are the
// first `jet_length` series coefficients of each pulled-back section.
template <class C>
EvaluationMap<C> evaluation_at_jet(const std::vector<Poly<C>>& sections,
                                   const std::vector<std::vector<C>>& germ,
                                   long jet_length) {
    if (jet_length < 1) throw input_error("jet length must be at least 1");
    detail::common_section_degree(sections);
    const std::size_t len = static_cast<std::size_t>(jet_length);
    bool base_nonzero = false;
    for (const auto& g : germ)
        if (!g.empty() && !is_zero(g[0])) base_nonzero = true;
    if (!base_nonzero)
        throw input_error("jet base point has all coordinates zero");

    EvaluationMap<C> ev;
    ev.length = jet_length;
    ev.matrix = Matrix<C>(len, sections.size());
    for (std::size_t j = 0; j < sections.size(); ++j) {
        const Poly<C>& f = sections[j];
        if (f.is_zero()) continue;
        if (!f.ring || f.ring->nvars() != germ.size())
            throw input_error("germ coordinate count does not match the ring");
        std::vector<C> acc(len, C(0));
        for (const auto& t : f.terms) {
            std::vector<C> term(1, t.c);
            for (std::size_t i = 0; i < germ.size(); ++i)
                for (std::uint32_t e = 0; e < t.m[i]; ++e)
                    term = detail::series_mul(term, germ[i], len);
            for (std::size_t i = 0; i < term.size(); ++i) acc[i] = acc[i] + term[i];
        }
        for (std::size_t i = 0; i < len; ++i) ev.matrix.at(i, j) = acc[i];
    }
    detail::finish_evaluation(ev);
    return ev;
}

// -------- higher-order ampleness on the line --------

// Partitions of n into weakly decreasing positive parts, largest part first.
inline void partitions_rec(long n, long cap, std::vector<long>& cur,
                           std::vector<std::vector<long>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (long part = std::min(n, cap); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(n - part, part, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<long>> partitions_of(long n) {
    std::vector<std::vector<long>> out;
    if (n < 0) return out;
    std::vector<long> cur;
    partitions_rec(n, n == 0 ? 1 : n, cur, out);
    return out;
}

namespace detail {

// Surjectivity of H0(O(m)) onto the profile's jets: one block of rows per
// part, at pairwise distinct symbolic points u_t on the affine chart, with
// at most one part moved to the coordinate point at infinity.  Basis form
// s^(m-k) t^k contributes C(k,j) u^(k-j) to the j-th jet row at a finite
// point and an indicator of m-k = j at infinity.  Full symbolic rank
// certifies every placement at distinct points, because the confluent
// interpolation determinants it specializes to are nonzero whenever the
// nodes are distinct.
inline bool p1_profile_surjective(long m, const std::vector<long>& profile,
                                  long inf_part) {
    long ell = 0;
    for (long part : profile) ell += part;
    if (ell > m + 1) return false;

    std::size_t nfinite = profile.size() - (inf_part >= 0 ? 1 : 0);

    // rank over the function field dominates the rank at any specialization,
    // so full rank at the concrete distinct nodes u_t = t+1 already certifies
    // full symbolic rank; the symbolic elimination below only runs when the
    // specialization degenerates
    {
        Matrix<Rat> spec(static_cast<std::size_t>(ell),
                         static_cast<std::size_t>(m + 1));
        std::size_t row = 0;
        std::size_t finite_at = 0;
        for (std::size_t t = 0; t < profile.size(); ++t) {
            const bool at_inf = static_cast<long>(t) == inf_part;
            long node = 0;
            if (!at_inf) node = static_cast<long>(++finite_at);
            for (long j = 0; j < profile[t]; ++j, ++row)
                for (long k = 0; k <= m; ++k) {
                    if (at_inf) {
                        if (m - k == j) spec.at(row, static_cast<std::size_t>(k)) = Rat(1);
                        continue;
                    }
                    Int c = binomial(k, j);
                    if (c == 0) continue;
                    Rat v(c);
                    for (long e = 0; e < k - j; ++e) v *= node;
                    spec.at(row, static_cast<std::size_t>(k)) = v;
                }
        }
        if (mat_rank(spec) == static_cast<std::size_t>(ell)) return true;
    }
    std::vector<std::string> names;
    for (std::size_t t = 0; t < std::max<std::size_t>(nfinite, 1); ++t)
        names.push_back("u" + std::to_string(t + 1));
    RingPtr uring = make_ring(std::move(names));

    std::vector<std::vector<Poly<Rat>>> rows;
    std::size_t finite_seen = 0;
    for (std::size_t t = 0; t < profile.size(); ++t) {
        const bool at_inf = static_cast<long>(t) == inf_part;
        std::size_t uvar = 0;
        if (!at_inf) uvar = finite_seen++;
        for (long j = 0; j < profile[t]; ++j) {
            std::vector<Poly<Rat>> row;
            for (long k = 0; k <= m; ++k) {
                if (at_inf) {
                    row.push_back(m - k == j ? poly_const<Rat>(uring, Rat(1))
                                             : Poly<Rat>(uring));
                } else {
                    Int c = binomial(k, j);
                    if (c == 0) {
                        row.push_back(Poly<Rat>(uring));
                        continue;
                    }
                    Mono mo = mono_one(*uring);
                    mo[uvar] = static_cast<std::uint32_t>(k - j);
                    Poly<Rat> entry(uring);
                    entry.terms.push_back({mo, Rat(c)});
                    row.push_back(std::move(entry));
                }
            }
            rows.push_back(std::move(row));
        }
    }
    return rank_fraction_free(std::move(rows)) == static_cast<std::size_t>(ell);
}

}  // namespace detail

// Exhaustive test over every multiplicity profile of total length p+1: on
// the line each length-(p+1) subscheme is a divisor, so checking each
// profile at symbolically generic points together with the variants that
// put one part at infinity covers all subschemes.
inline bool p1_very_ample_exhaustive(long m, long p) {
    if (p < 0) throw input_error("ampleness order must be nonnegative");
    const long ell = p + 1;
    if (h0_p1(m) < ell) return false;
    for (const auto& profile : partitions_of(ell)) {
        if (!detail::p1_profile_surjective(m, profile, -1)) return false;
        for (std::size_t t = 0; t < profile.size(); ++t) {
            if (t > 0 && profile[t] == profile[t - 1]) continue;
            if (!detail::p1_profile_surjective(m, profile, static_cast<long>(t)))
                return false;
        }
    }
    return true;
}

struct AmplenessVerdict {
    long p = 0;
    bool very_ample = false;
    bool proved = false;
};

inline std::vector<AmplenessVerdict> very_ampleness_profile_p1(long m, long p_max) {
    std::vector<AmplenessVerdict> out;
    for (long p = 0; p <= p_max; ++p)
        out.push_back({p, p1_very_ample_exhaustive(m, p), true});
    return out;
}

// Sampled strategy: random multiplicity profiles at random distinct
// rational points (possibly one at infinity).  A failed trial is a
// disproof; passing all trials is evidence only, so verdicts are never
// marked proved.
inline std::vector<AmplenessVerdict> very_ampleness_profile_p1_sampled(
    long m, long p_max, std::uint64_t seed, long trials) {
    if (trials < 1) throw input_error("sampled strategy needs at least one trial");
    std::mt19937_64 rng(seed);
    std::vector<AmplenessVerdict> out;
    for (long p = 0; p <= p_max; ++p) {
        const long ell = p + 1;
        bool ok = h0_p1(m) >= ell;
        for (long trial = 0; ok && trial < trials; ++trial) {
            std::vector<long> profile;
            long rest = ell;
            while (rest > 0) {
                long part = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(rest));
                profile.push_back(part);
                rest -= part;
            }
            std::sort(profile.rbegin(), profile.rend());
            const bool use_inf = rng() % 4 == 0;
            std::set<long> nodes;
            while (nodes.size() < profile.size() - (use_inf ? 1 : 0))
                nodes.insert(static_cast<long>(rng() % 201) - 100);
            Matrix<Rat> mat(static_cast<std::size_t>(ell), static_cast<std::size_t>(m + 1));
            std::size_t row = 0;
            std::size_t t = 0;
            auto node_it = nodes.begin();
            for (long part : profile) {
                const bool at_inf = use_inf && t == 0;
                Rat a(0);
                if (!at_inf) a = Rat(*node_it++);
                for (long j = 0; j < part; ++j, ++row)
                    for (long k = 0; k <= m; ++k) {
                        if (at_inf) {
                            if (m - k == j) mat.at(row, static_cast<std::size_t>(k)) = Rat(1);
                            continue;
                        }
                        Int c = binomial(k, j);
                        if (c == 0) continue;
                        Rat v(c);
                        for (long e = 0; e < k - j; ++e) v *= a;
                        mat.at(row, static_cast<std::size_t>(k)) = v;
                    }
                ++t;
            }
            ok = mat_rank(mat) == static_cast<std::size_t>(ell);
        }
        out.push_back({p, ok, false});
    }
    return out;
}

// Largest p such that O(m) passes the exhaustive test for every order up
// to p; -1 when there are no sections at all.
inline long very_ampleness_order_p1(long m) {
    if (m < 0) return -1;
    long p = 0;
    if (!p1_very_ample_exhaustive(m, 0)) return -1;
    while (p1_very_ample_exhaustive(m, p + 1)) ++p;
    return p;
}

// -------- numeric curve criteria --------

struct CurveNumerics {
    long g = 0;
    long d = 0;
    long b = 0;
    long p = 0;
    long h0b = 0;
};

namespace detail {

inline void check_curve(const CurveNumerics& num) {
    if (num.g < 0) throw input_error("genus must be nonnegative");
    if (num.p < 0) throw input_error("strand index must be nonnegative");
    if (num.h0b < 0) throw input_error("section count must be nonnegative");
    if (num.d < 1) throw input_error("polarization degree must be positive");
}

}  // namespace detail

// Euler characteristic in the slope form C(d-g,p) * (-p*d/(d-g) + d + b).
inline Rat curve_chi_slope(const CurveNumerics& num) {
    detail::check_curve(num);
    if (num.d == num.g)
        throw input_error("slope formula needs degree different from genus");
    Rat slope = Rat(Int(-num.p) * num.d) / Rat(Int(num.d - num.g));
    return Rat(binomial(num.d - num.g, num.p)) * (slope + num.d + num.b);
}

// Independent Euler characteristic from the rank and degree of the kernel
// bundle of evaluation: chi = -d*C(d-g-1,p-1) + C(d-g,p)*(d+b+1-g).
// Valid in the nonspecial range d >= 2g+1.
inline Rat curve_chi_riemann_roch(const CurveNumerics& num) {
    detail::check_curve(num);
    if (num.d < 2 * num.g + 1)
        throw input_error("nonspecial range requires d >= 2g+1");
    Int v = Int(-num.d) * binomial(num.d - num.g - 1, num.p - 1) +
            binomial(num.d - num.g, num.p) * Int(num.d + num.b + 1 - num.g);
    return Rat(v);
}

struct CurveCriterion {
    bool certified = false;
    bool degrees_ok = false;
    bool inequality_ok = false;
    Rat lhs;
    Rat chi;
    Rat chi_slope;
};

// Numeric certificate for K_{p,1}(C, B, L) != 0 on every smooth curve with
// these invariants: both degree conditions d >= 2g+p+1 and d+b >= 2g+p+1,
// and the count C(d+1-g, p+1) * h0(B) strictly below the Euler
// characteristic.  Only the branches with h0(B) <= p are decidable by
// counting; larger h0(B) needs a choice of effective divisor.
inline CurveCriterion curve_nonvanishing_criterion(const CurveNumerics& num) {
    detail::check_curve(num);
    if (num.h0b > num.p)
        throw input_error(
            "out of numeric scope: criterion needs h0 of the twist at most p");
    CurveCriterion crit;
    crit.degrees_ok = num.d >= 2 * num.g + num.p + 1 &&
                      num.d + num.b >= 2 * num.g + num.p + 1;
    if (num.d >= 2 * num.g + 1) {
        crit.lhs = Rat(binomial(num.d + 1 - num.g, num.p + 1) * Int(num.h0b));
        crit.chi = curve_chi_riemann_roch(num);
        if (num.d != num.g) crit.chi_slope = curve_chi_slope(num);
        crit.inequality_ok = crit.lhs < crit.chi;
    }
    crit.certified = crit.degrees_ok && crit.inequality_ok;
    return crit;
}

// Whether some smooth curve of genus g carries a line bundle of degree b
// with exactly h0b sections: the nonspecial range forces the count, and
// the special range is cut out by the Riemann-Roch lower bound and the
// Clifford upper bound, both of which are attained on hyperelliptic
// curves.
inline bool h0_realizable(long g, long b, long h0b) {
    if (g < 0 || h0b < 0) return false;
    if (h0b == 0) return b < 0 || b + 1 - g <= 0;
    if (b < 0) return false;
    if (b > 2 * g - 2) return h0b == b + 1 - g;
    return h0b <= b / 2 + 1 && h0b >= std::max(1L, b + 1 - g);
}

struct CurveSweepRow {
    CurveNumerics num;
    bool certified = false;
    Rat chi;
    Rat chi_slope;
};

struct CurveSweepResult {
    long cases = 0;
    std::vector<CurveSweepRow> rows;
    std::vector<CurveNumerics> failures;
    bool discrepancy_ok = true;
};

// Sweep of the certificate over every realizable branch in a finite
// window: genus at most g_max, strand index at most p_max, degrees d in
// [2g+p+1, 2g+p+1+d_window], twists b in [2g+p+1-d, 2g+p+1-d+b_window],
// section counts h0b <= p realizable for (g, b).  Also locks the identity
// chi_rr - chi_slope = C(d-g, p) * (1-g) on every row.
inline CurveSweepResult curve_criterion_sweep(long g_max, long p_max, long d_window,
                                              long b_window, bool keep_rows = false) {
    CurveSweepResult out;
    for (long g = 0; g <= g_max; ++g)
        for (long p = 0; p <= p_max; ++p) {
            const long dmin = 2 * g + p + 1;
            for (long d = dmin; d <= dmin + d_window; ++d)
                for (long b = dmin - d; b <= dmin - d + b_window; ++b)
                    for (long h0b = 0; h0b <= p; ++h0b) {
                        if (!h0_realizable(g, b, h0b)) continue;
                        CurveNumerics num{g, d, b, p, h0b};
                        CurveCriterion crit = curve_nonvanishing_criterion(num);
                        ++out.cases;
                        if (!crit.certified) out.failures.push_back(num);
                        Rat gap = crit.chi - crit.chi_slope;
                        Rat expected = Rat(binomial(d - g, p) * Int(1 - g));
                        if (gap != expected) out.discrepancy_ok = false;
                        if (keep_rows)
                            out.rows.push_back({num, crit.certified, crit.chi,
                                                crit.chi_slope});
                    }
        }
    return out;
}

// -------- effective bounds --------

struct DegreeBoundReport {
    long n = 0;
    long p = 0;
    long bound = 0;
    std::string hypotheses;
};

// Minimal degree d = (n-1)(p+1) + p + 3 such that an adjoint bundle
// omega tensor A^d tensor P^(n-1) tensor N, with A very ample and N, P
// nef, satisfies property N_p on an n-fold; nefness of the abstract
// factors is restated as text, not decided.
inline DegreeBoundReport adjoint_bundle_degree_bound(long n, long p) {
    if (n < 1) throw input_error("dimension must be at least 1");
    if (p < 0) throw input_error("strand index must be nonnegative");
    DegreeBoundReport rep;
    rep.n = n;
    rep.p = p;
    rep.bound = (n - 1) * (p + 1) + p + 3;
    rep.hypotheses =
        "L = omega tensor A^" + std::to_string(rep.bound) +
        " tensor P^" + std::to_string(n - 1) +
        " tensor N on a smooth projective " + std::to_string(n) +
        "-fold, with A very ample and N, P nef (nefness not machine-checked)";
    return rep;
}

struct GonalityReport {
    long n = 0;
    long p = 0;
    bool vanishing = false;
    bool certified = false;
    long gonality_bound = 0;
    long irrationality_bound = 0;
    std::string statement;
};

// Consequence of the vanishing of the n-th strand at index h0-1-n-p: every
// covering family of curves and every dominant rational map to projective
// space has degree at least p+2.  Without the vanishing no claim is made.
inline GonalityReport gonality_bound_report(long n, long p, bool vanishing) {
    if (n < 1) throw input_error("dimension must be at least 1");
    if (p < 0) throw input_error("strand index must be nonnegative");
    GonalityReport rep;
    rep.n = n;
    rep.p = p;
    rep.vanishing = vanishing;
    if (vanishing) {
        rep.certified = true;
        rep.gonality_bound = p + 2;
        rep.irrationality_bound = p + 2;
        rep.statement = "covering gonality and degree of irrationality are at least " +
                        std::to_string(p + 2);
    } else {
        rep.statement = "no bound certified without the vanishing hypothesis";
    }
    return rep;
}

}  // namespace koszul

#endif  // KOSZUL_GEOMETRY_HPP
