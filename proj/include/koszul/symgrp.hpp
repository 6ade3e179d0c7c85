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

#ifndef KOSZUL_SYMGRP_HPP
#define KOSZUL_SYMGRP_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gradedmod.hpp"
#include "groebner.hpp"
#include "matrix.hpp"

namespace koszul {

using Perm = std::vector<std::uint32_t>;

inline std::vector<Perm> symmetric_group(long n) {
    if (n < 1) throw input_error("symmetric group needs n >= 1");
    Perm id(n);
    std::iota(id.begin(), id.end(), 0u);
    std::vector<Perm> out;
    do out.push_back(id);
    while (std::next_permutation(id.begin(), id.end()));
    return out;
}

inline Perm perm_inverse(const Perm& p) {
    Perm inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<std::uint32_t>(i);
    return inv;
}

// (a o b)(i) = a(b(i))
inline Perm perm_compose(const Perm& a, const Perm& b) {
    Perm out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
    return out;
}

inline int perm_sign(const Perm& p) {
    int sign = 1;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) { seen[j] = true; ++len; }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

enum class Character { trivial, sign };

inline long character_value(Character chi, const Perm& sigma) {
    return chi == Character::trivial ? 1 : perm_sign(sigma);
}

// S_n acting on a polynomial ring by permuting variables inside each listed
// family in lockstep: sigma sends families[t][i] to families[t][sigma(i)].
// Variables outside every family are fixed.
struct PermAction {
    long n = 1;
    RingPtr ring;
    std::vector<std::vector<std::size_t>> families;
    std::vector<Perm> elements;

    Perm var_perm(const Perm& sigma) const {
        Perm vp(ring->nvars());
        std::iota(vp.begin(), vp.end(), 0u);
        for (const auto& fam : families)
            for (std::size_t i = 0; i < fam.size(); ++i)
                vp[fam[i]] = static_cast<std::uint32_t>(fam[sigma[i]]);
        return vp;
    }
};

inline PermAction make_perm_action(RingPtr ring, long n,
                                   std::vector<std::vector<std::size_t>> families) {
    PermAction a;
    a.n = n;
    a.ring = std::move(ring);
    for (const auto& fam : families) {
        if (fam.size() != static_cast<std::size_t>(n))
            throw input_error("action family size must equal n");
        for (std::size_t v : fam)
            if (v >= a.ring->nvars()) throw input_error("action family variable out of range");
    }
    a.families = std::move(families);
    a.elements = symmetric_group(n);
    return a;
}

// Action on all variables of the ring, for plain permutation modules.
inline PermAction natural_perm_action(RingPtr ring) {
    std::vector<std::size_t> all(ring->nvars());
    std::iota(all.begin(), all.end(), std::size_t{0});
    long n = static_cast<long>(all.size());
    return make_perm_action(std::move(ring), n, {all});
}

template <class C>
Vec<C> act_on_vec(const Vec<C>& v, const Perm& var_perm, const ModuleOrder& ord) {
    Vec<C> out(v.ring, v.rank);
    out.terms.reserve(v.terms.size());
    for (const auto& t : v.terms) {
        Mono m(t.m.size(), 0);
        for (std::size_t i = 0; i < t.m.size(); ++i) m[var_perm[i]] += t.m[i];
        out.terms.push_back({t.pos, std::move(m), t.c});
    }
    vec_normalize(out, ord);
    return out;
}

// Throws with a witness when some relation generator is not carried back
// into the relation submodule by a generator of the group.
template <class C>
void verify_action_preserves_relations(const GradedModule<C>& m, const PermAction& a) {
    if (!m.ring->same_as(*a.ring)) throw input_error("action ring mismatch");
    for (long i = 0; i + 1 < a.n; ++i) {
        Perm swap(a.n);
        std::iota(swap.begin(), swap.end(), 0u);
        std::swap(swap[i], swap[i + 1]);
        Perm vp = a.var_perm(swap);
        for (std::size_t r = 0; r < m.relations.size(); ++r) {
            Vec<C> moved = act_on_vec(m.relations[r], vp, m.ord);
            if (!normal_form(moved, m.rel_gb, m.ord).is_zero())
                throw input_error("group action does not preserve relations; witness: " +
                                  vec_to_string(m.relations[r]));
        }
    }
}

// Matrix of sigma on the graded piece, positions fixed, monomials permuted
// and reduced to normal form.
template <class C>
Matrix<C> piece_action_matrix(const GradedModule<C>& m, const GradedPiece& piece,
                              const PieceIndex& index, const Perm& var_perm) {
    Matrix<C> out(piece.dim(), piece.dim());
    for (std::size_t b = 0; b < piece.dim(); ++b) {
        const auto& [mono, pos] = piece.basis[b];
        Vec<C> v(m.ring, m.rank());
        v.terms.push_back({pos, mono, C(1)});
        Vec<C> moved = act_on_vec(v, var_perm, m.ord);
        std::vector<C> coords = piece_coords(m, piece, index, moved);
        for (std::size_t r = 0; r < coords.size(); ++r) out.at(r, b) = coords[r];
    }
    return out;
}

// (1/n!) sum over sigma of chi(sigma) rho(sigma) on the degree-q piece.
// Refuses fields whose characteristic divides n! through the scalar layer.
template <class C>
Matrix<C> reynolds_projector(const GradedModule<C>& m, long q, const PermAction& a,
                             Character chi,
                             const FieldSpec& field = FieldSpec::rationals()) {
    verify_action_preserves_relations(m, a);
    Int fact(1);
    for (long i = 2; i <= a.n; ++i) fact *= i;
    C scale = scalar_from_parts<C>(Int(1), fact, field);
    GradedPiece piece = graded_piece(m, q);
    PieceIndex index(piece);
    Matrix<C> acc(piece.dim(), piece.dim());
    for (const auto& sigma : a.elements) {
        Matrix<C> rho = piece_action_matrix(m, piece, index, a.var_perm(sigma));
        long cv = character_value(chi, sigma);
        for (std::size_t i = 0; i < rho.rows; ++i)
            for (std::size_t j = 0; j < rho.cols; ++j)
                acc.at(i, j) += cv > 0 ? rho.at(i, j) : -rho.at(i, j);
    }
    for (auto& e : acc.data) e = e * scale;
    return acc;
}

template <class C>
long isotypic_dimension(const GradedModule<C>& m, const PermAction& a, Character chi,
                        long q, const FieldSpec& field = FieldSpec::rationals()) {
    Matrix<C> p = reynolds_projector(m, q, a, chi, field);
    return static_cast<long>(mat_rank(p));
}

}  // namespace koszul

#endif  // KOSZUL_SYMGRP_HPP
