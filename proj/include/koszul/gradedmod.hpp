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

#ifndef KOSZUL_GRADEDMOD_HPP
#define KOSZUL_GRADEDMOD_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "groebner.hpp"
#include "modvec.hpp"
#include "poly.hpp"
#include "ring.hpp"

namespace koszul {

// Finitely presented graded module: free generators with degree shifts and
// homogeneous relation columns.  Immutable once built, so the relation
// Groebner basis is computed exactly once.
template <class C>
struct GradedModule {
    RingPtr ring;
    std::vector<long> shifts;
    std::vector<Vec<C>> relations;
    ModuleOrder ord;
    std::vector<Vec<C>> rel_gb;

    std::uint32_t rank() const { return static_cast<std::uint32_t>(shifts.size()); }
};

template <class C>
GradedModule<C> make_graded_module(RingPtr ring, std::vector<long> shifts,
                                   std::vector<Vec<C>> relations,
                                   const GBOptions& opts = {}) {
    GradedModule<C> m;
    m.ring = std::move(ring);
    m.shifts = std::move(shifts);
    m.ord = ModuleOrder{};
    for (const auto& rel : relations) {
        if (rel.rank != m.shifts.size())
            throw input_error("relation rank does not match generator count");
        if (!vec_graded_degree(rel, m.shifts))
            throw input_error("inhomogeneous relation column");
    }
    m.relations = std::move(relations);
    m.rel_gb = buchberger(m.relations, m.ord, opts);
    return m;
}

template <class C>
GradedModule<C> free_module(RingPtr ring, std::vector<long> shifts) {
    return make_graded_module<C>(std::move(ring), std::move(shifts), {});
}

// The abstract module presented by a list of submodule generators of an
// ambient free module: generator degrees are read off, relations are their
// syzygies.  This is how ideals, section modules, and evaluation images
// all become first-class graded modules.
template <class C>
GradedModule<C> submodule_as_module(const RingPtr& ring, const std::vector<Vec<C>>& gens,
                                    const std::vector<long>& ambient_shifts,
                                    const GBOptions& opts = {}) {
    std::vector<long> shifts;
    for (const auto& g : gens) {
        auto d = vec_graded_degree(g, ambient_shifts);
        if (!d || *d == deg_zero)
            throw input_error("submodule generators must be homogeneous and nonzero");
        shifts.push_back(*d);
    }
    ModuleOrder ord;
    auto k = kernel_and_gb(gens, static_cast<std::uint32_t>(ambient_shifts.size()), ring,
                           ord, opts);
    return make_graded_module<C>(ring, std::move(shifts), k.syzygies, opts);
}

template <class C>
GradedModule<C> ideal_as_module(const RingPtr& ring, const std::vector<Poly<C>>& gens,
                                const GBOptions& opts = {}) {
    ModuleOrder ord;
    return submodule_as_module<C>(ring, wrap_ideal(gens, ring, ord), {0}, opts);
}

template <class C>
GradedModule<C> quotient_ring_module(const RingPtr& ring, const std::vector<Poly<C>>& ideal,
                                     const GBOptions& opts = {}) {
    ModuleOrder ord;
    return make_graded_module<C>(ring, {0}, wrap_ideal(ideal, ring, ord), opts);
}

// -------- graded pieces --------

// Basis of M_q: the standard monomials, i.e. monomial-times-generator
// terms not divisible by any relation lead term.
struct GradedPiece {
    long q = 0;
    std::vector<std::pair<Mono, std::uint32_t>> basis;

    std::size_t dim() const { return basis.size(); }
};

template <class C>
GradedPiece graded_piece(const GradedModule<C>& m, long q) {
    GradedPiece piece;
    piece.q = q;
    for (std::uint32_t i = 0; i < m.rank(); ++i) {
        auto monos = monomials_of_degree(*m.ring, q - m.shifts[i]);
        for (const auto& mono : monos) {
            bool standard = true;
            for (const auto& g : m.rel_gb) {
                const auto& lt = g.lead();
                if (lt.pos == i && mono_divides(lt.m, mono)) {
                    standard = false;
                    break;
                }
            }
            if (standard) piece.basis.emplace_back(mono, i);
        }
    }
    return piece;
}

template <class C>
long hilbert_function(const GradedModule<C>& m, long q) {
    return static_cast<long>(graded_piece(m, q).dim());
}

// Index for coordinate extraction against a piece basis.
struct PieceIndex {
    std::map<std::pair<std::uint32_t, Mono>, std::size_t> at;

    explicit PieceIndex(const GradedPiece& piece) {
        for (std::size_t i = 0; i < piece.basis.size(); ++i)
            at.emplace(std::make_pair(piece.basis[i].second, piece.basis[i].first), i);
    }
};

// Coordinates of a homogeneous vector in the degree-q piece basis; the
// vector is reduced to normal form first.
template <class C>
std::vector<C> piece_coords(const GradedModule<C>& m, const GradedPiece& piece,
                            const PieceIndex& index, const Vec<C>& v) {
    Vec<C> nf = normal_form(v, m.rel_gb, m.ord);
    std::vector<C> out(piece.dim(), C(0));
    for (const auto& t : nf.terms) {
        auto it = index.at.find(std::make_pair(t.pos, t.m));
        if (it == index.at.end())
            throw internal_error("normal form leaves the expected graded piece");
        out[it->second] = t.c;
    }
    return out;
}

// -------- minimal free resolutions --------

template <class C>
struct FreeResolution {
    RingPtr ring;
    // shifts[p] describes F_p; maps[p] holds the columns of F_{p+1} -> F_p,
    // so maps.size() == shifts.size() - 1 and the complex ends in zeros.
    std::vector<std::vector<long>> shifts;
    std::vector<std::vector<Vec<C>>> maps;

    std::size_t length() const { return maps.size(); }
};

namespace detail {

// Strikes every invertible (degree-zero) entry of the differential held in
// `cols` by a Schur complement step: clear the pivot row by column
// operations, push the induced basis change into the previous differential,
// then drop the pivot generator on both sides.  Zero columns are dropped as
// well.  On return no entry of `cols` has a constant term.
template <class C>
void minimalize_step(std::vector<long>& tgt_shifts, std::vector<Vec<C>>& cols,
                     std::vector<long>& src_shifts, std::vector<Vec<C>>* prev,
                     const ModuleOrder& ord) {
    const RingPtr ring = cols.empty() ? nullptr : cols.front().ring;
    for (;;) {
        std::size_t pc = cols.size();
        std::uint32_t pr = 0;
        for (std::size_t c = 0; c < cols.size() && pc == cols.size(); ++c)
            for (const auto& t : cols[c].terms)
                if (mono_degree(*ring, t.m) == 0) {
                    pc = c;
                    pr = t.pos;
                    break;
                }
        if (pc == cols.size()) break;

        Poly<C> u = vec_component(cols[pc], pr);
        C uinv = C(1) / u.terms.front().c;

        // clear the pivot row in the other columns
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (c == pc) continue;
            Poly<C> w = vec_component(cols[c], pr);
            if (w.is_zero()) continue;
            Poly<C> f = poly_scale(w, uinv);
            cols[c] = vec_sub(cols[c], vec_mul_poly(cols[pc], f, ord), ord);
        }
        // push the basis change of the target into the previous map
        if (prev) {
            for (const auto& t : cols[pc].terms) {
                if (t.pos == pr) continue;
                Poly<C> g(ring);
                g.terms.push_back({t.m, t.c * uinv});
                (*prev)[pr] = vec_add((*prev)[pr],
                                      vec_mul_poly((*prev)[t.pos], g, ord), ord);
            }
            if (!(*prev)[pr].is_zero())
                throw internal_error("pivot column of previous map fails to vanish");
            prev->erase(prev->begin() + static_cast<long>(pr));
        }
        // drop pivot column and pivot target generator
        cols.erase(cols.begin() + static_cast<long>(pc));
        src_shifts.erase(src_shifts.begin() + pc);
        tgt_shifts.erase(tgt_shifts.begin() + pr);
        for (auto& col : cols) {
            std::vector<MTerm<C>> keep;
            keep.reserve(col.terms.size());
            for (auto& t : col.terms) {
                if (t.pos == pr) continue;
                if (t.pos > pr) t.pos -= 1;
                keep.push_back(std::move(t));
            }
            col.terms = std::move(keep);
            col.rank -= 1;
            vec_normalize(col, ord);
        }
    }
    // drop columns that became identically zero
    for (std::size_t c = cols.size(); c-- > 0;) {
        if (!cols[c].is_zero()) continue;
        cols.erase(cols.begin() + static_cast<long>(c));
        src_shifts.erase(src_shifts.begin() + static_cast<long>(c));
    }
}

}  // namespace detail

// Iterated syzygies with minimalization at every homological step.  The
// result is the unique minimal free resolution; by the syzygy theorem it
// terminates within nvars steps, and max_length only guards against a
// caller-imposed budget being exceeded.  With allow_truncation the budget
// cuts the resolution off quietly instead; the recorded maps are still the
// initial segment of the minimal resolution, exact at every recorded spot.
template <class C>
FreeResolution<C> minimal_free_resolution(const GradedModule<C>& m, long max_length = -1,
                                          const GBOptions& opts = {},
                                          bool allow_truncation = false) {
    if (max_length < 0) max_length = static_cast<long>(m.ring->nvars()) + 1;
    FreeResolution<C> res;
    res.ring = m.ring;
    ModuleOrder ord = m.ord;

    std::vector<long> f0 = m.shifts;
    std::vector<Vec<C>> cols = m.relations;
    std::vector<long> src_shifts;
    for (const auto& c : cols) src_shifts.push_back(*vec_graded_degree(c, f0));
    detail::minimalize_step<C>(f0, cols, src_shifts, nullptr, ord);
    res.shifts.push_back(f0);
    if (cols.empty()) return res;

    for (;;) {
        res.shifts.push_back(src_shifts);
        res.maps.push_back(cols);
        auto k = kernel_and_gb(cols, static_cast<std::uint32_t>(res.shifts[res.maps.size() - 1].size()),
                               m.ring, ord, opts);
        std::vector<Vec<C>> next = k.syzygies;
        if (next.empty()) return res;
        if (static_cast<long>(res.maps.size()) >= max_length) {
            if (allow_truncation) return res;
            throw resource_guard("resolution exceeds the step budget (" +
                                 std::to_string(max_length) + ")");
        }
        std::vector<long> next_shifts;
        for (const auto& c : next)
            next_shifts.push_back(*vec_graded_degree(c, src_shifts));
        detail::minimalize_step<C>(src_shifts, next, next_shifts, &res.maps.back(), ord);
        // the target-side shifts may have shrunk; refresh the recorded copy
        res.shifts.back() = src_shifts;
        if (next.empty()) return res;
        cols = std::move(next);
        src_shifts = std::move(next_shifts);
    }
}

struct BettiTable {
    std::map<std::pair<long, long>, long> entries;  // (p, q) -> count

    long at(long p, long q) const {
        auto it = entries.find({p, q});
        return it == entries.end() ? 0 : it->second;
    }
};

template <class C>
BettiTable betti_from_resolution(const FreeResolution<C>& res) {
    BettiTable t;
    for (std::size_t p = 0; p < res.shifts.size(); ++p)
        for (long s : res.shifts[p]) t.entries[{static_cast<long>(p), s - static_cast<long>(p)}] += 1;
    return t;
}

template <class C>
BettiTable betti_table(const GradedModule<C>& m, const GBOptions& opts = {}) {
    return betti_from_resolution(minimal_free_resolution(m, -1, opts));
}

}  // namespace koszul

#endif  // KOSZUL_GRADEDMOD_HPP
