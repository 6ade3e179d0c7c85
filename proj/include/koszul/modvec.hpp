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

#ifndef KOSZUL_MODVEC_HPP
#define KOSZUL_MODVEC_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace koszul {

// Order on free-module terms (position, monomial).
//
//   pot = false: term over position, monomials compared by the ring order,
//                lower position wins ties.
//   pot = true:  position over term, lower position dominates.
//
// elim_positions > 0 splits the positions into a leading block [0, elim)
// that dominates the rest regardless of monomials; inside each block the
// pot/term rule applies.  A Groebner basis for such an order computes
// kernels: elements supported entirely in the trailing block are exactly
// the relations among the leading-block images.
struct ModuleOrder {
    bool pot = false;
    std::size_t elim_positions = 0;
};

template <class C>
struct MTerm {
    std::uint32_t pos = 0;
    Mono m;
    C c;
};

// Element of a free module S^rank: terms sorted strictly descending.
template <class C>
struct Vec {
    RingPtr ring;
    std::uint32_t rank = 0;
    std::vector<MTerm<C>> terms;

    Vec() = default;
    Vec(RingPtr r, std::uint32_t rk) : ring(std::move(r)), rank(rk) {}

    bool is_zero() const { return terms.empty(); }
    const MTerm<C>& lead() const {
        if (terms.empty()) throw internal_error("leading term of zero vector");
        return terms.front();
    }
};

inline int mterm_cmp(const RingDescriptor& ring, const ModuleOrder& ord,
                     std::uint32_t pa, const Mono& ma, std::uint32_t pb, const Mono& mb) {
    if (ord.elim_positions > 0) {
        bool ea = pa < ord.elim_positions, eb = pb < ord.elim_positions;
        if (ea != eb) return ea ? 1 : -1;
    }
    if (ord.pot) {
        if (pa != pb) return pa < pb ? 1 : -1;
        return mono_cmp(ring, ma, mb);
    }
    int c = mono_cmp(ring, ma, mb);
    if (c != 0) return c;
    if (pa != pb) return pa < pb ? 1 : -1;
    return 0;
}

template <class C>
void vec_normalize(Vec<C>& v, const ModuleOrder& ord) {
    std::sort(v.terms.begin(), v.terms.end(),
              [&](const MTerm<C>& a, const MTerm<C>& b) {
                  return mterm_cmp(*v.ring, ord, a.pos, a.m, b.pos, b.m) > 0;
              });
    std::vector<MTerm<C>> out;
    out.reserve(v.terms.size());
    for (auto& t : v.terms) {
        if (!out.empty() && out.back().pos == t.pos && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && koszul::is_zero(out.back().c)) out.pop_back();
    }
    v.terms = std::move(out);
}

template <class C>
Vec<C> vec_add(const Vec<C>& a, const Vec<C>& b, const ModuleOrder& ord) {
    Vec<C> r(a.ring, a.rank);
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = mterm_cmp(*a.ring, ord, a.terms[i].pos, a.terms[i].m,
                          b.terms[j].pos, b.terms[j].m);
        if (c > 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(b.terms[j++]);
        } else {
            C s = a.terms[i].c + b.terms[j].c;
            if (!koszul::is_zero(s)) r.terms.push_back({a.terms[i].pos, a.terms[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
}

template <class C>
Vec<C> vec_neg(const Vec<C>& a) {
    Vec<C> r(a.ring, a.rank);
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms) r.terms.push_back({t.pos, t.m, -t.c});
    return r;
}

template <class C>
Vec<C> vec_sub(const Vec<C>& a, const Vec<C>& b, const ModuleOrder& ord) {
    return vec_add(a, vec_neg(b), ord);
}

// v * (c * x^m); monomial multiplication preserves the term order within a
// fixed position block structure, so the sorted invariant survives.
template <class C>
Vec<C> vec_mul_term(const Vec<C>& v, const Mono& m, const C& c) {
    Vec<C> r(v.ring, v.rank);
    if (koszul::is_zero(c)) return r;
    r.terms.reserve(v.terms.size());
    for (const auto& t : v.terms) {
        C cc = t.c * c;
        if (!koszul::is_zero(cc)) r.terms.push_back({t.pos, mono_mul(t.m, m), std::move(cc)});
    }
    return r;
}

template <class C>
Vec<C> vec_scale(const Vec<C>& v, const C& c) {
    return vec_mul_term(v, mono_one(*v.ring), c);
}

template <class C>
Vec<C> vec_mul_poly(const Vec<C>& v, const Poly<C>& f, const ModuleOrder& ord) {
    Vec<C> r(v.ring, v.rank);
    for (const auto& t : f.terms) r = vec_add(r, vec_mul_term(v, t.m, t.c), ord);
    return r;
}

template <class C>
bool vec_eq(const Vec<C>& a, const Vec<C>& b) {
    if (a.rank != b.rank || a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        if (a.terms[i].pos != b.terms[i].pos || !(a.terms[i].m == b.terms[i].m) ||
            !(a.terms[i].c == b.terms[i].c))
            return false;
    return true;
}

// Basis vector e_pos scaled by a polynomial.
template <class C>
Vec<C> vec_from_poly(const Poly<C>& f, std::uint32_t rank, std::uint32_t pos,
                     const ModuleOrder& ord) {
    Vec<C> r(f.ring, rank);
    r.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) r.terms.push_back({pos, t.m, t.c});
    vec_normalize(r, ord);
    return r;
}

template <class C>
Poly<C> vec_component(const Vec<C>& v, std::uint32_t pos) {
    Poly<C> f(v.ring);
    for (const auto& t : v.terms)
        if (t.pos == pos) f.terms.push_back({t.m, t.c});
    f.normalize();
    return f;
}

// Degree of a homogeneous vector with respect to generator shifts: a term
// c * x^m * e_i has degree deg(m) + shifts[i].
template <class C>
std::optional<long> vec_graded_degree(const Vec<C>& v, const std::vector<long>& shifts) {
    if (v.terms.empty()) return deg_zero;
    long d = mono_degree(*v.ring, v.terms.front().m) +
             shifts.at(v.terms.front().pos);
    for (const auto& t : v.terms)
        if (mono_degree(*v.ring, t.m) + shifts.at(t.pos) != d) return std::nullopt;
    return d;
}

template <class C>
std::string vec_to_string(const Vec<C>& v) {
    if (v.terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (std::uint32_t p = 0; p < v.rank; ++p) {
        Poly<C> comp = vec_component(v, p);
        if (comp.is_zero()) continue;
        if (!first) s += " + ";
        s += "(" + poly_to_string(comp) + ")*e" + std::to_string(p + 1);
        first = false;
    }
    return s;
}

}  // namespace koszul

#endif  // KOSZUL_MODVEC_HPP
