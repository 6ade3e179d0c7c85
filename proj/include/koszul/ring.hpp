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

#ifndef KOSZUL_RING_HPP
#define KOSZUL_RING_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace koszul {

// A monomial is its exponent vector; the ambient ring fixes the length.
using Mono = std::vector<std::uint32_t>;

enum class OrderKind { grevlex, lex, block };

// Polynomial ring descriptor: named variables, positive weights, and a
// monomial order.  A block order splits the variables into a leading group
// of elim_count variables (compared first, by grevlex) and the rest; a
// Groebner basis for it intersects away the leading group.
struct RingDescriptor {
    std::vector<std::string> vars;
    std::vector<long> weights;
    OrderKind order = OrderKind::grevlex;
    std::size_t elim_count = 0;

    std::size_t nvars() const { return vars.size(); }

    static RingDescriptor make(std::vector<std::string> names,
                               OrderKind ord = OrderKind::grevlex,
                               std::size_t elim = 0,
                               std::vector<long> w = {}) {
        RingDescriptor r;
        r.vars = std::move(names);
        if (w.empty())
            r.weights.assign(r.vars.size(), 1);
        else
            r.weights = std::move(w);
        if (r.weights.size() != r.vars.size())
            throw input_error("weight list length does not match variable count");
        for (long wt : r.weights)
            if (wt < 1) throw input_error("variable weights must be positive");
        for (std::size_t i = 0; i < r.vars.size(); ++i)
            for (std::size_t j = i + 1; j < r.vars.size(); ++j)
                if (r.vars[i] == r.vars[j])
                    throw input_error("duplicate variable name: " + r.vars[i]);
        r.order = ord;
        r.elim_count = elim;
        if (elim > r.vars.size())
            throw input_error("elimination block larger than variable count");
        return r;
    }

    long var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<long>(i);
        return -1;
    }

    bool same_as(const RingDescriptor& o) const {
        return vars == o.vars && weights == o.weights && order == o.order &&
               elim_count == o.elim_count;
    }
};

using RingPtr = std::shared_ptr<const RingDescriptor>;

inline RingPtr make_ring(std::vector<std::string> names,
                         OrderKind ord = OrderKind::grevlex,
                         std::size_t elim = 0,
                         std::vector<long> w = {}) {
    return std::make_shared<const RingDescriptor>(
        RingDescriptor::make(std::move(names), ord, elim, std::move(w)));
}

inline Mono mono_one(const RingDescriptor& ring) { return Mono(ring.nvars(), 0); }

inline long mono_degree(const RingDescriptor& ring, const Mono& m) {
    long d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        d += ring.weights[i] * static_cast<long>(m[i]);
    return d;
}

inline bool mono_divides(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Mono mono_div(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] > a[i]) throw internal_error("monomial division is not exact");
        r[i] = a[i] - b[i];
    }
    return r;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline bool mono_coprime(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

namespace detail {

// Graded reverse lexicographic comparison on the variable range [lo, hi).
inline int grevlex_cmp_range(const RingDescriptor& ring, const Mono& a, const Mono& b,
                             std::size_t lo, std::size_t hi) {
    long da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += ring.weights[i] * static_cast<long>(a[i]);
        db += ring.weights[i] * static_cast<long>(b[i]);
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

inline int lex_cmp_range(const Mono& a, const Mono& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

}  // namespace detail

// Total order on monomials; returns -1, 0, or 1.
inline int mono_cmp(const RingDescriptor& ring, const Mono& a, const Mono& b) {
    switch (ring.order) {
        case OrderKind::grevlex:
            return detail::grevlex_cmp_range(ring, a, b, 0, ring.nvars());
        case OrderKind::lex:
            return detail::lex_cmp_range(a, b, 0, ring.nvars());
        case OrderKind::block: {
            int c = detail::grevlex_cmp_range(ring, a, b, 0, ring.elim_count);
            if (c != 0) return c;
            return detail::grevlex_cmp_range(ring, a, b, ring.elim_count, ring.nvars());
        }
    }
    return 0;
}

// All monomials of the given weighted degree, in descending ring order.
inline void monomials_of_degree_rec(const RingDescriptor& ring, long deg, std::size_t var,
                                    Mono& cur, std::vector<Mono>& out) {
    if (var + 1 == ring.nvars()) {
        long w = ring.weights[var];
        if (deg % w == 0) {
            cur[var] = static_cast<std::uint32_t>(deg / w);
            out.push_back(cur);
            cur[var] = 0;
        }
        return;
    }
    long w = ring.weights[var];
    for (long e = deg / w; e >= 0; --e) {
        cur[var] = static_cast<std::uint32_t>(e);
        monomials_of_degree_rec(ring, deg - e * w, var + 1, cur, out);
    }
    cur[var] = 0;
}

inline std::vector<Mono> monomials_of_degree(const RingDescriptor& ring, long deg) {
    std::vector<Mono> out;
    if (deg < 0) return out;
    Mono cur = mono_one(ring);
    monomials_of_degree_rec(ring, deg, 0, cur, out);
    std::sort(out.begin(), out.end(), [&ring](const Mono& x, const Mono& y) {
        return mono_cmp(ring, x, y) > 0;
    });
    return out;
}

}  // namespace koszul

#endif  // KOSZUL_RING_HPP
