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

#ifndef KOSZUL_KOSZUL_HPP
#define KOSZUL_KOSZUL_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gradedmod.hpp"
#include "matrix.hpp"

namespace koszul {

// Strictly increasing index subsets of size p from {0..n-1}, in
// lexicographic order.
inline std::vector<std::vector<std::uint32_t>> wedge_subsets(std::uint32_t n, long p) {
    std::vector<std::vector<std::uint32_t>> out;
    if (p < 0 || p > static_cast<long>(n)) return out;
    std::vector<std::uint32_t> cur(p);
    for (long i = 0; i < p; ++i) cur[i] = static_cast<std::uint32_t>(i);
    for (;;) {
        out.push_back(cur);
        long i = p - 1;
        while (i >= 0 && cur[i] == n - static_cast<std::uint32_t>(p - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (long j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
    }
    if (p == 0) out.assign(1, {});
    return out;
}

// One graded strand map of the exterior complex on V tensored with M:
// wedge_p V (x) M_q  ->  wedge_{p-1} V (x) M_{q+1}, columns stored sparsely.
template <class C>
struct KoszulMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<std::pair<std::size_t, C>>> col_entries;

    Matrix<C> dense() const {
        Matrix<C> m(rows, cols);
        for (std::size_t c = 0; c < cols; ++c)
            for (const auto& [r, v] : col_entries[c]) m.at(r, c) = v;
        return m;
    }
};

namespace detail {

template <class C>
void check_linear_basis(const RingPtr& ring, const std::vector<Poly<C>>& vbasis) {
    for (const auto& v : vbasis) {
        if (!v.ring || !v.ring->same_as(*ring))
            throw input_error("wedge basis element lives in a different ring");
        auto d = graded_degree(v);
        if (!d || *d != 1)
            throw input_error("wedge basis elements must have degree one");
    }
}

// v * (basis element mono.e_pos) as a module vector
template <class C>
Vec<C> scale_basis_element(const Poly<C>& v, const Mono& m, std::uint32_t pos,
                           std::uint32_t rank, const ModuleOrder& ord) {
    Vec<C> out(v.ring, rank);
    out.terms.reserve(v.terms.size());
    for (const auto& t : v.terms) out.terms.push_back({pos, mono_mul(t.m, m), t.c});
    vec_normalize(out, ord);
    return out;
}

}  // namespace detail

template <class C>
KoszulMatrix<C> koszul_differential(const GradedModule<C>& m,
                                    const std::vector<Poly<C>>& vbasis, long p, long q) {
    detail::check_linear_basis(m.ring, vbasis);
    const std::uint32_t n = static_cast<std::uint32_t>(vbasis.size());
    auto src_sets = wedge_subsets(n, p);
    auto tgt_sets = wedge_subsets(n, p - 1);
    std::map<std::vector<std::uint32_t>, std::size_t> tgt_set_index;
    for (std::size_t i = 0; i < tgt_sets.size(); ++i) tgt_set_index[tgt_sets[i]] = i;

    GradedPiece src_piece = graded_piece(m, q);
    GradedPiece tgt_piece = graded_piece(m, q + 1);
    PieceIndex tgt_index(tgt_piece);

    KoszulMatrix<C> out;
    out.rows = tgt_sets.size() * tgt_piece.dim();
    out.cols = src_sets.size() * src_piece.dim();
    out.col_entries.resize(out.cols);

    for (std::size_t a = 0; a < src_sets.size(); ++a) {
        const auto& set = src_sets[a];
        for (std::size_t b = 0; b < src_piece.dim(); ++b) {
            const auto& [mono, pos] = src_piece.basis[b];
            std::map<std::size_t, C> column;
            for (std::size_t i = 0; i < set.size(); ++i) {
                std::vector<std::uint32_t> rest;
                rest.reserve(set.size() - 1);
                for (std::size_t j = 0; j < set.size(); ++j)
                    if (j != i) rest.push_back(set[j]);
                std::size_t block = tgt_set_index.at(rest) * tgt_piece.dim();
                Vec<C> image = detail::scale_basis_element(vbasis[set[i]], mono, pos,
                                                           m.rank(), m.ord);
                std::vector<C> coords = piece_coords(m, tgt_piece, tgt_index, image);
                const bool negate = i % 2 == 1;
                for (std::size_t r = 0; r < coords.size(); ++r) {
                    if (is_zero(coords[r])) continue;
                    C v = negate ? -coords[r] : coords[r];
                    auto [it, fresh] = column.emplace(block + r, v);
                    if (!fresh) it->second += v;
                }
            }
            auto& entries = out.col_entries[a * src_piece.dim() + b];
            for (auto& [r, v] : column)
                if (!is_zero(v)) entries.emplace_back(r, std::move(v));
        }
    }
    return out;
}

template <class C>
std::size_t koszul_rank(const KoszulMatrix<C>& km) {
    SparseRows<C> rows;
    rows.cols = km.rows;
    for (const auto& col : km.col_entries)
        if (!col.empty()) rows.add_row(col);
    return sparse_rank(rows);
}

// dim K_{p,q}(M;V) as middle cohomology: the dimension of the middle term
// minus the ranks of the outgoing and incoming differentials.
template <class C>
long koszul_cohomology_dim(const GradedModule<C>& m, const std::vector<Poly<C>>& vbasis,
                           long p, long q) {
    detail::check_linear_basis(m.ring, vbasis);
    const std::uint32_t n = static_cast<std::uint32_t>(vbasis.size());
    long middle = static_cast<long>(wedge_subsets(n, p).size()) *
                  hilbert_function(m, q);
    if (middle == 0) return 0;
    KoszulMatrix<C> out_map = koszul_differential(m, vbasis, p, q);
    KoszulMatrix<C> in_map = koszul_differential(m, vbasis, p + 1, q - 1);
    return middle - static_cast<long>(koszul_rank(out_map)) -
           static_cast<long>(koszul_rank(in_map));
}

template <class C>
std::vector<Poly<C>> variable_basis(const RingPtr& ring) {
    std::vector<Poly<C>> v;
    for (std::size_t i = 0; i < ring->nvars(); ++i) v.push_back(poly_var<C>(ring, i));
    return v;
}

// Full table of cohomology dimensions for 0 <= p <= pmax, qmin <= q <= qmax.
template <class C>
std::map<std::pair<long, long>, long> koszul_table(const GradedModule<C>& m,
                                                   const std::vector<Poly<C>>& vbasis,
                                                   long pmax, long qmin, long qmax) {
    std::map<std::pair<long, long>, long> out;
    for (long p = 0; p <= pmax; ++p)
        for (long q = qmin; q <= qmax; ++q)
            out[{p, q}] = koszul_cohomology_dim(m, vbasis, p, q);
    return out;
}

// -------- nonvanishing certificates --------

enum class CertificateStatus { certified_nonzero, hypotheses_fail };

struct CertificateResult {
    CertificateStatus status = CertificateStatus::hypotheses_fail;
    bool ann_v_zero = false;   // (0 : V) vanishes in degree 0 of N
    bool m0_proper = false;    // M_0 strictly smaller than N_0
    bool m1_full = false;      // M_1 equals N_1
    long r = 0;                // certificate concerns K_{r,1} with r+1 = dim V
    long k_dim = -1;           // dim K_{r,1}(M;V) when hypotheses hold
};

namespace detail {

// dimension of the degree-q slice of the span of the given elements of N
template <class C>
std::size_t span_dim_in_degree(const GradedModule<C>& n, const std::vector<Vec<C>>& gens,
                               const std::vector<long>& gen_degrees, long q,
                               const GradedPiece& piece, const PieceIndex& index) {
    SparseRows<C> rows;
    rows.cols = piece.dim();
    for (std::size_t j = 0; j < gens.size(); ++j) {
        for (const auto& mono : monomials_of_degree(*n.ring, q - gen_degrees[j])) {
            Vec<C> w = vec_mul_term(gens[j], mono, C(1));
            std::vector<C> coords = piece_coords(n, piece, index, w);
            std::vector<std::pair<std::size_t, C>> row;
            for (std::size_t r = 0; r < coords.size(); ++r)
                if (!is_zero(coords[r])) row.emplace_back(r, coords[r]);
            if (!row.empty()) rows.add_row(std::move(row));
        }
    }
    return sparse_rank(rows);
}

}  // namespace detail

// The submodule of N generated by the given cover vectors, repackaged as a
// stand-alone graded module: its relations are the syzygies of the
// generators taken together with the relations of N, projected to the
// generator coordinates.
template <class C>
GradedModule<C> submodule_of(const GradedModule<C>& n, const std::vector<Vec<C>>& gens,
                             const GBOptions& opts = {}) {
    std::vector<long> gen_shifts;
    for (const auto& g : gens) {
        if (g.rank != n.rank()) throw input_error("submodule generator rank mismatch");
        auto d = vec_graded_degree(g, n.shifts);
        if (!d || *d == deg_zero)
            throw input_error("submodule generators must be homogeneous and nonzero");
        gen_shifts.push_back(*d);
    }
    std::vector<Vec<C>> combined = gens;
    for (const auto& r : n.relations) combined.push_back(r);
    auto k = kernel_and_gb(combined, n.rank(), n.ring, n.ord, opts);
    std::vector<Vec<C>> rels;
    for (const auto& s : k.syzygies) {
        Vec<C> proj(n.ring, static_cast<std::uint32_t>(gens.size()));
        for (const auto& t : s.terms)
            if (t.pos < gens.size()) proj.terms.push_back(t);
        vec_normalize(proj, n.ord);
        if (!proj.is_zero()) rels.push_back(std::move(proj));
    }
    return make_graded_module<C>(n.ring, std::move(gen_shifts), std::move(rels), opts);
}

// Exact check of the three submodule hypotheses; when they hold, the
// certificate computes dim K_{r,1}(M;V) and insists on nonvanishing.
template <class C>
CertificateResult nonvanishing_certificate(const GradedModule<C>& n,
                                           const std::vector<Vec<C>>& m_gens,
                                           const std::vector<Poly<C>>& vbasis,
                                           const GBOptions& opts = {}) {
    detail::check_linear_basis(n.ring, vbasis);
    CertificateResult res;
    res.r = static_cast<long>(vbasis.size()) - 1;

    GradedPiece n0 = graded_piece(n, 0), n1 = graded_piece(n, 1);
    PieceIndex i0(n0), i1(n1);

    // (0 : V) in degree 0: stack the multiplication maps by every basis
    // element of V and ask for full column rank on N_0.
    {
        SparseRows<C> rows;  // transpose: one row per N_0 basis vector
        rows.cols = n1.dim() * vbasis.size();
        for (std::size_t b = 0; b < n0.dim(); ++b) {
            const auto& [mono, pos] = n0.basis[b];
            std::vector<std::pair<std::size_t, C>> row;
            for (std::size_t j = 0; j < vbasis.size(); ++j) {
                Vec<C> image = detail::scale_basis_element(vbasis[j], mono, pos,
                                                           n.rank(), n.ord);
                std::vector<C> coords = piece_coords(n, n1, i1, image);
                for (std::size_t r = 0; r < coords.size(); ++r)
                    if (!is_zero(coords[r])) row.emplace_back(j * n1.dim() + r, coords[r]);
            }
            if (!row.empty()) rows.add_row(std::move(row));
        }
        res.ann_v_zero = sparse_rank(rows) == n0.dim();
    }

    std::vector<long> gen_degrees;
    for (const auto& g : m_gens) {
        if (g.rank != n.rank()) throw input_error("submodule generator rank mismatch");
        auto d = vec_graded_degree(g, n.shifts);
        if (!d || *d == deg_zero)
            throw input_error("submodule generators must be homogeneous and nonzero");
        gen_degrees.push_back(*d);
    }
    res.m0_proper =
        detail::span_dim_in_degree(n, m_gens, gen_degrees, 0, n0, i0) < n0.dim();
    res.m1_full =
        detail::span_dim_in_degree(n, m_gens, gen_degrees, 1, n1, i1) == n1.dim();

    if (res.ann_v_zero && res.m0_proper && res.m1_full) {
        GradedModule<C> m = submodule_of(n, m_gens, opts);
        res.k_dim = koszul_cohomology_dim(m, vbasis, res.r, 1);
        if (res.k_dim < 1)
            throw internal_error("certificate hypotheses hold but K_{r,1} vanishes");
        res.status = CertificateStatus::certified_nonzero;
    } else {
        res.status = CertificateStatus::hypotheses_fail;
    }
    return res;
}

}  // namespace koszul

#endif  // KOSZUL_KOSZUL_HPP
