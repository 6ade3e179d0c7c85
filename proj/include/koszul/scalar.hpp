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

#ifndef KOSZUL_SCALAR_HPP
#define KOSZUL_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace koszul {

// Exceptions shared across the library.  The CLI maps them to exit codes:
// input_error -> 1, resource_guard -> 2, internal_error -> 3.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct resource_guard : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Exact rational scalar.  mpq_class keeps values in lowest terms with a
// positive denominator after every arithmetic operation, which is the
// canonical form required throughout.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den) {
    if (den == 0) throw input_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& a) { return sgn(a) == 0; }
inline bool is_one(const Rat& a) { return a == 1; }

inline std::string to_string(const Rat& a) {
    return a.get_str();
}

// Prime-field scalar with a runtime modulus.  An element constructed from a
// bare integer literal has p == 0 ("context-free") and adopts the modulus of
// the first contexted operand it meets; this lets generic code write C(1)
// without threading a field descriptor everywhere.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    Fp() = default;
    Fp(long x) : v(0), p(0) {
        neg_literal_ = x < 0;
        v = static_cast<std::uint64_t>(x < 0 ? -x : x);
    }
    Fp(std::uint64_t value, std::uint64_t modulus) : v(value), p(modulus) {
        if (modulus) v %= modulus;
    }

    bool literal() const { return p == 0; }

    Fp reduced(std::uint64_t modulus) const {
        if (p != 0) {
            if (p != modulus) throw internal_error("prime-field modulus mismatch");
            return *this;
        }
        std::uint64_t r = v % modulus;
        if (neg_literal_ && r != 0) r = modulus - r;
        return Fp(r, modulus);
    }

    bool neg_literal_ = false;
};

inline std::uint64_t fp_modulus(const Fp& a, const Fp& b) {
    if (a.p != 0 && b.p != 0 && a.p != b.p)
        throw internal_error("prime-field modulus mismatch");
    return a.p != 0 ? a.p : b.p;
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline Fp operator+(const Fp& a, const Fp& b) {
    std::uint64_t p = fp_modulus(a, b);
    if (p == 0) return Fp(static_cast<long>((a.neg_literal_ ? -(long)a.v : (long)a.v) +
                                            (b.neg_literal_ ? -(long)b.v : (long)b.v)));
    Fp x = a.reduced(p), y = b.reduced(p);
    std::uint64_t s = x.v + y.v;
    if (s >= p) s -= p;
    return Fp(s, p);
}

inline Fp operator-(const Fp& a) {
    if (a.p == 0) {
        Fp r = a;
        r.neg_literal_ = !r.neg_literal_;
        return r;
    }
    return Fp(a.v == 0 ? 0 : a.p - a.v, a.p);
}

inline Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }

inline Fp operator*(const Fp& a, const Fp& b) {
    std::uint64_t p = fp_modulus(a, b);
    if (p == 0) return Fp(static_cast<long>((a.neg_literal_ ? -(long)a.v : (long)a.v) *
                                            (b.neg_literal_ ? -(long)b.v : (long)b.v)));
    Fp x = a.reduced(p), y = b.reduced(p);
    return Fp(mulmod_u64(x.v, y.v, p), p);
}

inline Fp fp_inverse(const Fp& a) {
    if (a.p == 0) throw internal_error("inverse of context-free prime-field element");
    std::uint64_t r = a.reduced(a.p).v;
    if (r == 0) throw internal_error("division by zero in prime field");
    // extended Euclid on (r, p)
    std::int64_t t = 0, newt = 1;
    std::int64_t rr = static_cast<std::int64_t>(a.p), newr = static_cast<std::int64_t>(r);
    while (newr != 0) {
        std::int64_t q = rr / newr;
        std::int64_t tmp = t - q * newt; t = newt; newt = tmp;
        tmp = rr - q * newr; rr = newr; newr = tmp;
    }
    if (rr != 1) throw input_error("modulus is not prime");
    if (t < 0) t += static_cast<std::int64_t>(a.p);
    return Fp(static_cast<std::uint64_t>(t), a.p);
}

inline Fp operator/(const Fp& a, const Fp& b) {
    std::uint64_t p = fp_modulus(a, b);
    if (p == 0) throw internal_error("division of context-free prime-field elements");
    return a.reduced(p) * fp_inverse(b.reduced(p));
}

inline Fp& operator+=(Fp& a, const Fp& b) { a = a + b; return a; }
inline Fp& operator-=(Fp& a, const Fp& b) { a = a - b; return a; }
inline Fp& operator*=(Fp& a, const Fp& b) { a = a * b; return a; }
inline Fp& operator/=(Fp& a, const Fp& b) { a = a / b; return a; }

inline bool operator==(const Fp& a, const Fp& b) {
    std::uint64_t p = fp_modulus(a, b);
    if (p == 0) return a.v == b.v && (a.v == 0 || a.neg_literal_ == b.neg_literal_);
    return a.reduced(p).v == b.reduced(p).v;
}
inline bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

inline bool is_zero(const Fp& a) { return a.p == 0 ? a.v == 0 : a.reduced(a.p).v == 0; }
inline bool is_one(const Fp& a) {
    return a.p == 0 ? (a.v == 1 && !a.neg_literal_) : a.reduced(a.p).v == 1;
}

inline std::string to_string(const Fp& a) {
    if (a.p == 0 && a.neg_literal_ && a.v != 0)
        return "-" + std::to_string(a.v);
    return std::to_string(a.p ? a.reduced(a.p).v : a.v);
}

// Which field a job runs over; parsed from --field qq | fp:P.
struct FieldSpec {
    bool rational = true;
    std::uint64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec prime(std::uint64_t p) { return FieldSpec{false, p}; }
};

template <class C>
C scalar_from_parts(const Int& num, const Int& den, const FieldSpec& field);

template <>
inline Rat scalar_from_parts<Rat>(const Int& num, const Int& den, const FieldSpec&) {
    if (sgn(den) == 0) throw input_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

template <>
inline Fp scalar_from_parts<Fp>(const Int& num, const Int& den, const FieldSpec& field) {
    if (field.p < 2) throw input_error("prime field needs a modulus >= 2");
    Int p(static_cast<unsigned long>(field.p));
    Int n = num % p; if (sgn(n) < 0) n += p;
    Int d = den % p; if (sgn(d) < 0) d += p;
    Fp nv(n.get_ui(), field.p), dv(d.get_ui(), field.p);
    if (is_zero(dv)) throw input_error("denominator vanishes modulo p");
    return nv / dv;
}

// Attach field context to a coefficient built from integer literals, so
// that later arithmetic can invert it.  Identity over the rationals.
inline Rat in_field(const Rat& c, const FieldSpec&) { return c; }

inline Fp in_field(const Fp& c, const FieldSpec& field) {
    if (field.rational) return c;
    if (field.p < 2) throw input_error("prime field needs a modulus >= 2");
    return c.reduced(field.p);
}

// Exact binomial coefficient with the usual conventions for out-of-range k.
inline Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace koszul

#endif  // KOSZUL_SCALAR_HPP
