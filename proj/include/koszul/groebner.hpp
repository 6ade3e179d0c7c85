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

#ifndef KOSZUL_GROEBNER_HPP
#define KOSZUL_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "modvec.hpp"
#include "poly.hpp"
#include "ring.hpp"
#include "scalar.hpp"

namespace koszul {

struct GBOptions {
    std::size_t max_basis = 20000;
};

// -------- ring maps --------

template <class C>
Poly<C> poly_pow(const Poly<C>& f, std::uint32_t e) {
    Poly<C> r = poly_const<C>(f.ring, C(1));
    Poly<C> base = f;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

// Substitutes images[i] for variable i; images live in the target ring.
template <class C>
Poly<C> poly_map(const Poly<C>& f, const RingPtr& target,
                 const std::vector<Poly<C>>& images) {
    if (images.size() != f.ring->nvars())
        throw internal_error("poly_map image count mismatch");
    Poly<C> out(target);
    for (const auto& t : f.terms) {
        Poly<C> acc = poly_const<C>(target, t.c);
        for (std::size_t i = 0; i < images.size(); ++i)
            if (t.m[i] > 0) acc = acc * poly_pow(images[i], t.m[i]);
        out = out + acc;
    }
    return out;
}

// Variable renaming: source variable i becomes target variable perm[i].
template <class C>
Poly<C> poly_rename(const Poly<C>& f, const RingPtr& target,
                    const std::vector<std::size_t>& perm) {
    Poly<C> out(target);
    out.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) {
        Mono m = mono_one(*target);
        for (std::size_t i = 0; i < f.ring->nvars(); ++i) m[perm[i]] += t.m[i];
        out.terms.push_back({std::move(m), t.c});
    }
    out.normalize();
    return out;
}

// -------- reduction --------

// Full normal form of v against basis: repeatedly rewrites the largest
// reducible term.  The reducer is the first basis element, in basis order,
// whose lead term divides; this makes the result independent of timing.
template <class C>
Vec<C> normal_form(const Vec<C>& v, const std::vector<Vec<C>>& basis,
                   const ModuleOrder& ord) {
    Vec<C> rem(v.ring, v.rank);
    Vec<C> work = v;
    while (!work.is_zero()) {
        const MTerm<C>& lt = work.lead();
        const Vec<C>* red = nullptr;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            const MTerm<C>& gl = g.lead();
            if (gl.pos == lt.pos && mono_divides(gl.m, lt.m)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            rem.terms.push_back(lt);
            work.terms.erase(work.terms.begin());
            continue;
        }
        const MTerm<C>& gl = red->lead();
        C f = lt.c / gl.c;
        work = vec_sub(work, vec_mul_term(*red, mono_div(lt.m, gl.m), f), ord);
    }
    return rem;
}

namespace detail {

template <class C>
long vec_sugar(const Vec<C>& v) {
    long d = 0;
    for (const auto& t : v.terms) d = std::max(d, mono_degree(*v.ring, t.m));
    return d;
}

template <class C>
struct GBElem {
    Vec<C> v;
    long sugar = 0;
};

// Buchberger on module vectors.  Pair selection: lowest sugar degree first,
// then lowest index pair.  Criteria: the coprime-lead-term shortcut (sound
// for ideals only, so gated on rank 1) and the classic chain criterion.
template <class C>
std::vector<GBElem<C>> buchberger_loop(std::vector<GBElem<C>> basis,
                                       const ModuleOrder& ord,
                                       const GBOptions& opts) {
    if (basis.empty()) return basis;
    const RingPtr ring = basis.front().v.ring;
    const std::uint32_t rank = basis.front().v.rank;

    // drop zero inputs, make monic
    {
        std::vector<GBElem<C>> keep;
        for (auto& e : basis) {
            if (e.v.is_zero()) continue;
            C inv = C(1) / e.v.lead().c;
            e.v = vec_scale(e.v, inv);
            keep.push_back(std::move(e));
        }
        basis = std::move(keep);
    }

    auto pair_sugar = [&](std::size_t i, std::size_t j) {
        const MTerm<C>& a = basis[i].v.lead();
        const MTerm<C>& b = basis[j].v.lead();
        Mono l = mono_lcm(a.m, b.m);
        long da = basis[i].sugar + mono_degree(*ring, l) - mono_degree(*ring, a.m);
        long db = basis[j].sugar + mono_degree(*ring, l) - mono_degree(*ring, b.m);
        return std::max(da, db);
    };

    std::set<std::tuple<long, std::size_t, std::size_t>> queue;
    std::set<std::pair<std::size_t, std::size_t>> done;
    auto push_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (basis[i].v.lead().pos != basis[j].v.lead().pos) continue;
            queue.insert({pair_sugar(i, j), i, j});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_with(j);

    while (!queue.empty()) {
        auto [sug, i, j] = *queue.begin();
        queue.erase(queue.begin());
        done.insert({i, j});

        const MTerm<C>& a = basis[i].v.lead();
        const MTerm<C>& b = basis[j].v.lead();
        if (rank == 1 && mono_coprime(a.m, b.m)) continue;
        Mono l = mono_lcm(a.m, b.m);
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            const MTerm<C>& c = basis[k].v.lead();
            if (c.pos != a.pos || !mono_divides(c.m, l)) continue;
            auto p1 = std::minmax(i, k), p2 = std::minmax(j, k);
            if (done.count({p1.first, p1.second}) && done.count({p2.first, p2.second}))
                chained = true;
        }
        if (chained) continue;

        Vec<C> s = vec_sub(vec_mul_term(basis[i].v, mono_div(l, a.m), C(1)),
                           vec_mul_term(basis[j].v, mono_div(l, b.m), C(1)), ord);
        std::vector<Vec<C>> plain;
        plain.reserve(basis.size());
        for (const auto& e : basis) plain.push_back(e.v);
        Vec<C> h = normal_form(s, plain, ord);
        if (h.is_zero()) continue;

        C inv = C(1) / h.lead().c;
        h = vec_scale(h, inv);
        basis.push_back({std::move(h), sug});
        if (basis.size() > opts.max_basis)
            throw resource_guard("basis size limit exceeded (" +
                                 std::to_string(opts.max_basis) + ")");
        push_pairs_with(basis.size() - 1);
    }
    return basis;
}

}  // namespace detail

// Reduced monic Groebner basis, sorted ascending by lead term.
template <class C>
std::vector<Vec<C>> buchberger(const std::vector<Vec<C>>& gens,
                               const ModuleOrder& ord, const GBOptions& opts = {}) {
    std::vector<detail::GBElem<C>> in;
    in.reserve(gens.size());
    for (const auto& g : gens) in.push_back({g, detail::vec_sugar(g)});
    auto full = detail::buchberger_loop(std::move(in), ord, opts);

    std::vector<Vec<C>> gb;
    gb.reserve(full.size());
    for (auto& e : full) gb.push_back(std::move(e.v));

    // keep only elements with minimal lead terms
    std::vector<bool> drop(gb.size(), false);
    for (std::size_t i = 0; i < gb.size(); ++i) {
        if (drop[i]) continue;
        for (std::size_t j = 0; j < gb.size(); ++j) {
            if (i == j || drop[j]) continue;
            const auto& li = gb[i].lead();
            const auto& lj = gb[j].lead();
            if (li.pos == lj.pos && mono_divides(lj.m, li.m) &&
                !(j > i && li.m == lj.m)) {
                drop[i] = true;
                break;
            }
        }
    }
    std::vector<Vec<C>> kept;
    for (std::size_t i = 0; i < gb.size(); ++i)
        if (!drop[i]) kept.push_back(std::move(gb[i]));

    // tail-reduce each element against the others
    std::vector<Vec<C>> reduced;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Vec<C>> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        Vec<C> h = normal_form(kept[i], others, ord);
        if (!h.is_zero()) {
            C inv = C(1) / h.lead().c;
            reduced.push_back(vec_scale(h, inv));
        }
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Vec<C>& x, const Vec<C>& y) {
        return mterm_cmp(*x.ring, ord, x.lead().pos, x.lead().m, y.lead().pos,
                         y.lead().m) < 0;
    });
    return reduced;
}

// -------- kernels and representations via the graph construction --------

// For generators g_1..g_m of a submodule of S^r, runs Buchberger on the
// graph vectors (g_i, e_i) in S^(r+m) under an order whose leading block is
// the first r positions.  The output packages three byproducts:
//   gb        a reduced Groebner basis of the submodule itself,
//   syzygies  generators of the relation module among g_1..g_m,
//   represent writes any member as an explicit combination of g_1..g_m.
template <class C>
struct KernelData {
    RingPtr ring;
    std::uint32_t rank = 0;
    std::uint32_t ngens = 0;
    ModuleOrder inner_ord;
    ModuleOrder graph_ord;
    std::vector<Vec<C>> graph;
    std::vector<Vec<C>> gb;
    std::vector<Vec<C>> syzygies;
};

template <class C>
KernelData<C> kernel_and_gb(const std::vector<Vec<C>>& gens, std::uint32_t rank,
                            const RingPtr& ring, const ModuleOrder& inner_ord,
                            const GBOptions& opts = {}) {
    if (inner_ord.elim_positions != 0)
        throw internal_error("graph construction needs a plain inner order");
    KernelData<C> out;
    out.ring = ring;
    out.rank = rank;
    out.ngens = static_cast<std::uint32_t>(gens.size());
    out.inner_ord = inner_ord;
    out.graph_ord = ModuleOrder{inner_ord.pot, rank};

    std::vector<Vec<C>> lifted;
    lifted.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].rank != rank) throw internal_error("generator rank mismatch");
        Vec<C> w(ring, rank + out.ngens);
        w.terms = gens[i].terms;
        w.terms.push_back({static_cast<std::uint32_t>(rank + i), mono_one(*ring), C(1)});
        vec_normalize(w, out.graph_ord);
        lifted.push_back(std::move(w));
    }
    out.graph = buchberger(lifted, out.graph_ord, opts);

    for (const auto& g : out.graph) {
        if (g.lead().pos < rank) {
            Vec<C> proj(ring, rank);
            for (const auto& t : g.terms)
                if (t.pos < rank) proj.terms.push_back(t);
            vec_normalize(proj, inner_ord);
            out.gb.push_back(std::move(proj));
        } else {
            Vec<C> syz(ring, out.ngens);
            for (const auto& t : g.terms)
                syz.terms.push_back({static_cast<std::uint32_t>(t.pos - rank), t.m, t.c});
            vec_normalize(syz, inner_ord);
            out.syzygies.push_back(std::move(syz));
        }
    }
    return out;
}

// If v lies in the submodule, fills u (length ngens) with v = sum u_j g_j
// and returns true.
template <class C>
bool represent(const KernelData<C>& k, const Vec<C>& v, std::vector<Poly<C>>& u) {
    Vec<C> lifted(k.ring, k.rank + k.ngens);
    lifted.terms = v.terms;
    vec_normalize(lifted, k.graph_ord);
    Vec<C> rem = normal_form(lifted, k.graph, k.graph_ord);
    for (const auto& t : rem.terms)
        if (t.pos < k.rank) return false;
    u.assign(k.ngens, Poly<C>(k.ring));
    for (const auto& t : rem.terms)
        u[t.pos - k.rank].terms.push_back({t.m, -t.c});
    for (auto& f : u) f.normalize();
    return true;
}

template <class C>
bool is_member(const KernelData<C>& k, const Vec<C>& v) {
    Vec<C> rem = normal_form(v, k.gb, k.inner_ord);
    return rem.is_zero();
}

// -------- ideal-level wrappers --------

template <class C>
std::vector<Vec<C>> wrap_ideal(const std::vector<Poly<C>>& gens, const RingPtr& ring,
                               const ModuleOrder& ord) {
    std::vector<Vec<C>> v;
    v.reserve(gens.size());
    for (const auto& f : gens) v.push_back(vec_from_poly(f, 1, 0, ord));
    (void)ring;
    return v;
}

template <class C>
std::vector<Poly<C>> groebner_basis(const std::vector<Poly<C>>& gens,
                                    const RingPtr& ring, const GBOptions& opts = {}) {
    ModuleOrder ord;
    auto gb = buchberger(wrap_ideal(gens, ring, ord), ord, opts);
    std::vector<Poly<C>> out;
    out.reserve(gb.size());
    for (const auto& v : gb) out.push_back(vec_component(v, 0));
    return out;
}

template <class C>
Poly<C> normal_form_poly(const Poly<C>& f, const std::vector<Poly<C>>& gb,
                         const RingPtr& ring) {
    ModuleOrder ord;
    Vec<C> v = vec_from_poly(f, 1, 0, ord);
    Vec<C> r = normal_form(v, wrap_ideal(gb, ring, ord), ord);
    return vec_component(r, 0);
}

template <class C>
struct IdealInRing {
    RingPtr ring;
    std::vector<Poly<C>> gens;
};

// Groebner basis of gens in a ring that puts the named variables first
// under a block order, then the subset not involving them, expressed in the
// ring on the remaining variables.
template <class C>
IdealInRing<C> eliminate_vars(const RingPtr& ring, const std::vector<Poly<C>>& gens,
                              const std::vector<std::string>& elim,
                              const GBOptions& opts = {}) {
    std::vector<bool> is_elim(ring->nvars(), false);
    for (const auto& name : elim) {
        long idx = ring->var_index(name);
        if (idx < 0) throw input_error("unknown variable: " + name);
        if (is_elim[idx]) throw input_error("variable listed twice: " + name);
        is_elim[idx] = true;
    }
    std::size_t ne = elim.size();
    if (ne == 0 || ne >= ring->nvars())
        throw input_error("eliminate needs a proper nonempty variable subset");

    std::vector<std::string> up_names;
    std::vector<long> up_weights;
    std::vector<std::size_t> perm(ring->nvars());
    std::vector<std::string> kept_names;
    std::vector<long> kept_weights;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        if (is_elim[i]) {
            perm[i] = up_names.size();
            up_names.push_back(ring->vars[i]);
            up_weights.push_back(ring->weights[i]);
        }
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        if (!is_elim[i]) {
            perm[i] = up_names.size();
            up_names.push_back(ring->vars[i]);
            up_weights.push_back(ring->weights[i]);
            kept_names.push_back(ring->vars[i]);
            kept_weights.push_back(ring->weights[i]);
        }
    RingPtr up = make_ring(up_names, OrderKind::block, ne, up_weights);
    RingPtr down = make_ring(kept_names,
                             ring->order == OrderKind::lex ? OrderKind::lex
                                                           : OrderKind::grevlex,
                             0, kept_weights);

    std::vector<Poly<C>> up_gens;
    up_gens.reserve(gens.size());
    for (const auto& f : gens) up_gens.push_back(poly_rename(f, up, perm));
    auto gb = groebner_basis(up_gens, up, opts);

    std::vector<std::size_t> down_perm(up->nvars(), 0);
    for (std::size_t i = ne; i < up->nvars(); ++i) down_perm[i] = i - ne;
    IdealInRing<C> out{down, {}};
    for (const auto& g : gb) {
        bool free_of_elim = true;
        for (std::size_t i = 0; i < ne && free_of_elim; ++i)
            if (g.lead().m[i] > 0) free_of_elim = false;
        if (free_of_elim) out.gens.push_back(poly_rename(g, down, down_perm));
    }
    return out;
}

// I cap J via the single-variable trick: eliminate t from t*I + (1-t)*J.
template <class C>
std::vector<Poly<C>> intersect_two(const RingPtr& ring, const std::vector<Poly<C>>& a,
                                   const std::vector<Poly<C>>& b,
                                   const GBOptions& opts = {}) {
    std::vector<std::string> names{"t#"};
    std::vector<long> weights{1};
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        names.push_back(ring->vars[i]);
        weights.push_back(ring->weights[i]);
    }
    RingPtr up = make_ring(names, OrderKind::block, 1, weights);
    std::vector<std::size_t> lift_perm(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) lift_perm[i] = i + 1;

    Poly<C> t = poly_var<C>(up, 0);
    Poly<C> one_minus_t = poly_const<C>(up, C(1)) - t;
    std::vector<Poly<C>> up_gens;
    for (const auto& f : a) up_gens.push_back(t * poly_rename(f, up, lift_perm));
    for (const auto& g : b) up_gens.push_back(one_minus_t * poly_rename(g, up, lift_perm));
    auto gb = groebner_basis(up_gens, up, opts);

    std::vector<std::size_t> down_perm(up->nvars(), 0);
    for (std::size_t i = 1; i < up->nvars(); ++i) down_perm[i] = i - 1;
    std::vector<Poly<C>> out;
    for (const auto& g : gb)
        if (g.lead().m[0] == 0) out.push_back(poly_rename(g, ring, down_perm));
    return out;
}

// Balanced fold, so the work stays on ideals of comparable size.
template <class C>
std::vector<Poly<C>> intersect_many(const RingPtr& ring,
                                    std::vector<std::vector<Poly<C>>> ideals,
                                    const GBOptions& opts = {}) {
    if (ideals.empty()) return {poly_const<C>(ring, C(1))};
    while (ideals.size() > 1) {
        std::vector<std::vector<Poly<C>>> next;
        for (std::size_t i = 0; i + 1 < ideals.size(); i += 2)
            next.push_back(intersect_two(ring, ideals[i], ideals[i + 1], opts));
        if (ideals.size() % 2 == 1) next.push_back(std::move(ideals.back()));
        ideals = std::move(next);
    }
    return groebner_basis(ideals.front(), ring, opts);
}

}  // namespace koszul

#endif  // KOSZUL_GROEBNER_HPP
