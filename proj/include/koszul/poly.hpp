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

#ifndef KOSZUL_POLY_HPP
#define KOSZUL_POLY_HPP

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ring.hpp"
#include "scalar.hpp"

namespace koszul {

// Sparse multivariate polynomial: terms sorted strictly descending in the
// ring's monomial order, no zero coefficients.
template <class C>
struct Poly {
    struct Term {
        Mono m;
        C c;
    };

    RingPtr ring;
    std::vector<Term> terms;

    Poly() = default;
    explicit Poly(RingPtr r) : ring(std::move(r)) {}

    bool is_zero() const { return terms.empty(); }
    const Term& lead() const {
        if (terms.empty()) throw internal_error("leading term of zero polynomial");
        return terms.front();
    }

    // Restores the invariant from an arbitrary term list.
    void normalize() {
        std::sort(terms.begin(), terms.end(), [this](const Term& a, const Term& b) {
            return mono_cmp(*ring, a.m, b.m) > 0;
        });
        std::vector<Term> out;
        out.reserve(terms.size());
        for (auto& t : terms) {
            if (!out.empty() && out.back().m == t.m)
                out.back().c += t.c;
            else
                out.push_back(std::move(t));
            if (!out.empty() && koszul::is_zero(out.back().c)) out.pop_back();
        }
        terms = std::move(out);
    }
};

template <class C>
void check_same_ring(const Poly<C>& f, const Poly<C>& g) {
    if (!f.ring || !g.ring || !f.ring->same_as(*g.ring))
        throw input_error("polynomial ring mismatch");
}

template <class C>
Poly<C> poly_zero(RingPtr ring) {
    return Poly<C>(std::move(ring));
}

template <class C>
Poly<C> poly_term(RingPtr ring, Mono m, C c) {
    Poly<C> p(std::move(ring));
    if (!koszul::is_zero(c)) p.terms.push_back({std::move(m), std::move(c)});
    return p;
}

template <class C>
Poly<C> poly_const(RingPtr ring, C c) {
    Mono one = mono_one(*ring);
    return poly_term<C>(std::move(ring), std::move(one), std::move(c));
}

template <class C>
Poly<C> poly_var(RingPtr ring, std::size_t i) {
    Mono m = mono_one(*ring);
    m.at(i) = 1;
    return poly_term<C>(std::move(ring), std::move(m), C(1));
}

// Merge-based addition keeps the sorted invariant without a resort.
template <class C>
Poly<C> operator+(const Poly<C>& f, const Poly<C>& g) {
    check_same_ring(f, g);
    Poly<C> r(f.ring);
    r.terms.reserve(f.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < f.terms.size() && j < g.terms.size()) {
        int c = mono_cmp(*f.ring, f.terms[i].m, g.terms[j].m);
        if (c > 0) {
            r.terms.push_back(f.terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(g.terms[j++]);
        } else {
            C s = f.terms[i].c + g.terms[j].c;
            if (!koszul::is_zero(s)) r.terms.push_back({f.terms[i].m, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < f.terms.size(); ++i) r.terms.push_back(f.terms[i]);
    for (; j < g.terms.size(); ++j) r.terms.push_back(g.terms[j]);
    return r;
}

template <class C>
Poly<C> operator-(const Poly<C>& f) {
    Poly<C> r(f.ring);
    r.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) r.terms.push_back({t.m, -t.c});
    return r;
}

template <class C>
Poly<C> operator-(const Poly<C>& f, const Poly<C>& g) {
    return f + (-g);
}

template <class C>
Poly<C> poly_scale(const Poly<C>& f, const C& c) {
    Poly<C> r(f.ring);
    if (koszul::is_zero(c)) return r;
    r.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) {
        C v = t.c * c;
        if (!koszul::is_zero(v)) r.terms.push_back({t.m, std::move(v)});
    }
    return r;
}

// f * (c * x^m), merged in sorted order (multiplying by a monomial preserves
// relative order of terms).
template <class C>
Poly<C> poly_mul_term(const Poly<C>& f, const Mono& m, const C& c) {
    Poly<C> r(f.ring);
    if (koszul::is_zero(c)) return r;
    r.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) {
        C v = t.c * c;
        if (!koszul::is_zero(v)) r.terms.push_back({mono_mul(t.m, m), std::move(v)});
    }
    return r;
}

template <class C>
Poly<C> operator*(const Poly<C>& f, const Poly<C>& g) {
    check_same_ring(f, g);
    Poly<C> r(f.ring);
    for (const auto& t : g.terms) r = r + poly_mul_term(f, t.m, t.c);
    return r;
}

template <class C>
bool operator==(const Poly<C>& f, const Poly<C>& g) {
    if (f.terms.size() != g.terms.size()) return false;
    for (std::size_t i = 0; i < f.terms.size(); ++i)
        if (!(f.terms[i].m == g.terms[i].m) || !(f.terms[i].c == g.terms[i].c))
            return false;
    return true;
}

// Weighted degree when homogeneous; nullopt marks an inhomogeneous value.
// The zero polynomial reports the minus-infinity sentinel via deg_zero.
constexpr long deg_zero = std::numeric_limits<long>::min();

template <class C>
std::optional<long> graded_degree(const Poly<C>& f) {
    if (f.terms.empty()) return deg_zero;
    long d = mono_degree(*f.ring, f.terms.front().m);
    for (const auto& t : f.terms)
        if (mono_degree(*f.ring, t.m) != d) return std::nullopt;
    return d;
}

template <class C>
bool is_homogeneous(const Poly<C>& f) {
    return graded_degree(f).has_value();
}

// Exact division by a single polynomial; throws if the remainder is nonzero.
// Used by fraction-free elimination, where divisibility is guaranteed.
template <class C>
Poly<C> poly_divexact(const Poly<C>& f, const Poly<C>& g) {
    check_same_ring(f, g);
    if (g.is_zero()) throw internal_error("exact division by zero polynomial");
    Poly<C> rem = f;
    Poly<C> quot(f.ring);
    while (!rem.is_zero()) {
        const auto& lt = rem.lead();
        if (!mono_divides(g.lead().m, lt.m))
            throw internal_error("exact polynomial division has a remainder");
        Mono m = mono_div(lt.m, g.lead().m);
        C c = lt.c / g.lead().c;
        quot.terms.push_back({m, c});
        rem = rem - poly_mul_term(g, m, c);
    }
    // quotient terms were appended in strictly descending order already
    return quot;
}

// ---------------------------------------------------------------- printing

template <class C>
std::string mono_to_string(const RingDescriptor& ring, const Mono& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.vars[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

template <class C>
std::string poly_to_string(const Poly<C>& f) {
    if (f.terms.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
        const auto& t = f.terms[i];
        std::string cs = to_string(t.c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        std::string ms = mono_to_string<C>(*f.ring, t.m);
        std::string body;
        if (ms.empty())
            body = cs;
        else if (cs == "1")
            body = ms;
        else
            body = cs + "*" + ms;
        if (i == 0)
            s += (neg ? "-" : "") + body;
        else
            s += (neg ? " - " : " + ") + body;
    }
    return s;
}

// ----------------------------------------------------------------- parsing
//
// Grammar:  poly   := ['+'|'-'] term (('+'|'-') term)*
//           term   := factor ('*' factor)*
//           factor := integer ['/' integer] | var ['^' integer]
// Variable names match [A-Za-z][A-Za-z0-9_]*.

namespace detail {

struct PolyLexer {
    const std::string& s;
    std::size_t pos = 0;
    explicit PolyLexer(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw input_error("expected integer at position " +
                                            std::to_string(start) + " in \"" + s + "\"");
        return Int(s.substr(start, pos - start));
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])))) {
            ++pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
        }
        if (pos == start) throw input_error("expected name at position " +
                                            std::to_string(start) + " in \"" + s + "\"");
        return s.substr(start, pos - start);
    }
};

}  // namespace detail

template <class C>
Poly<C> parse_poly(const std::string& text, RingPtr ring,
                   const FieldSpec& field = FieldSpec::rationals()) {
    detail::PolyLexer lx(text);
    Poly<C> result(ring);
    bool first = true;
    while (!lx.eof()) {
        C sign(1);
        if (lx.accept('+')) {
        } else if (lx.accept('-')) {
            sign = C(-1);
        } else if (!first) {
            throw input_error("expected '+' or '-' at position " +
                              std::to_string(lx.pos) + " in \"" + text + "\"");
        }
        first = false;

        C coeff = sign;
        if (!field.rational)
            coeff = coeff * scalar_from_parts<C>(Int(1), Int(1), field);
        Mono mono = mono_one(*ring);
        bool saw_factor = false;
        for (;;) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                Int num = lx.integer();
                Int den(1);
                if (lx.accept('/')) den = lx.integer();
                coeff = coeff * scalar_from_parts<C>(num, den, field);
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::string name = lx.identifier();
                long idx = ring->var_index(name);
                if (idx < 0) throw input_error("unknown variable \"" + name + "\"");
                unsigned long e = 1;
                if (lx.accept('^')) {
                    Int ei = lx.integer();
                    if (!ei.fits_ulong_p()) throw input_error("exponent too large");
                    e = ei.get_ui();
                }
                mono[static_cast<std::size_t>(idx)] += static_cast<std::uint32_t>(e);
            } else {
                throw input_error("unexpected character at position " +
                                  std::to_string(lx.pos) + " in \"" + text + "\"");
            }
            saw_factor = true;
            if (!lx.accept('*')) break;
        }
        if (!saw_factor) throw input_error("empty term in \"" + text + "\"");
        result = result + poly_term<C>(ring, std::move(mono), std::move(coeff));
    }
    return result;
}

}  // namespace koszul

#endif  // KOSZUL_POLY_HPP
