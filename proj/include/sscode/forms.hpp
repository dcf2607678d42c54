#ifndef SSCODE_FORMS_HPP
#define SSCODE_FORMS_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sscode/galois.hpp"

/// The inner products and weight functions on GF(q)^{2n} and GF(q^2)^n,
/// together with the weight-preserving isometry phi between them.
///
/// A symplectic vector is stored as (a | b) with both halves of length n
/// over GF(q); its weight counts positions i with (a_i, b_i) != (0, 0).
/// A quadratic vector lives in GF(q^2)^n with ordinary Hamming weight.

namespace sscode {

struct SymplecticVector {
    FieldPtr field;  // GF(q)
    std::vector<gf_t> v;  // length 2n

    unsigned n() const { return static_cast<unsigned>(v.size() / 2); }
};

struct QuadraticVector {
    ExtensionPairPtr ext;
    std::vector<gf_t> u;  // length n over GF(q^2)
};

/// <u|v>_s = tr_{q/p}(a'.b - a.b') for u = (a|b), v = (a'|b').
inline gf_t symplectic_product_raw(const Field& F, const gf_t* u, const gf_t* v, unsigned n) {
    gf_t s = 0;
    for (unsigned i = 0; i < n; ++i) {
        gf_t t = F.sub(F.mul(v[i], u[n + i]), F.mul(u[i], v[n + i]));
        s = F.add(s, t);
    }
    return F.trace_to_prime(s);
}

inline gf_t symplectic_product(const SymplecticVector& u, const SymplecticVector& v) {
    if (*u.field != *v.field) throw std::invalid_argument("symplectic product: field mismatch");
    if (u.v.size() != v.v.size()) throw std::invalid_argument("symplectic product: length mismatch");
    return symplectic_product_raw(*u.field, u.v.data(), v.v.data(), u.n());
}

inline unsigned swt_raw(const gf_t* v, unsigned n) {
    unsigned w = 0;
    for (unsigned i = 0; i < n; ++i)
        if (v[i] != 0 || v[n + i] != 0) ++w;
    return w;
}

inline unsigned swt(const SymplecticVector& v) { return swt_raw(v.v.data(), v.n()); }

inline unsigned hamming_weight(const std::vector<gf_t>& u) {
    unsigned w = 0;
    for (gf_t x : u)
        if (x != 0) ++w;
    return w;
}

inline unsigned wt(const QuadraticVector& u) { return hamming_weight(u.u); }

/// <x|y>_h = sum x_i^q y_i, valued in GF(q^2).
inline gf_t hermitian_product_raw(const ExtensionPair& E, const gf_t* x, const gf_t* y, unsigned n) {
    const Field& F = *E.ext();
    gf_t s = 0;
    for (unsigned i = 0; i < n; ++i) s = F.add(s, F.mul(E.conj(x[i]), y[i]));
    return s;
}

inline gf_t hermitian_product(const QuadraticVector& x, const QuadraticVector& y) {
    if (!(*x.ext == *y.ext)) throw std::invalid_argument("hermitian product: extension mismatch");
    if (x.u.size() != y.u.size()) throw std::invalid_argument("hermitian product: length mismatch");
    return hermitian_product_raw(*x.ext, x.u.data(), y.u.data(), static_cast<unsigned>(x.u.size()));
}

/// <u|v>_a = tr_{q/p}[(<u|v>_h - <v|u>_h) / (beta^2 - beta^{2q})], in GF(p).
inline gf_t trace_alternating_product_raw(const ExtensionPair& E, const gf_t* u, const gf_t* v, unsigned n) {
    const Field& F = *E.ext();
    gf_t h1 = hermitian_product_raw(E, u, v, n);
    gf_t h2 = hermitian_product_raw(E, v, u, n);
    gf_t g = F.mul(F.sub(h1, h2), E.alt_denominator_inv());
    return E.trace_down_to_prime(g);
}

inline gf_t trace_alternating_product(const QuadraticVector& u, const QuadraticVector& v) {
    if (!(*u.ext == *v.ext)) throw std::invalid_argument("trace-alternating product: extension mismatch");
    if (u.u.size() != v.u.size()) throw std::invalid_argument("trace-alternating product: length mismatch");
    return trace_alternating_product_raw(*u.ext, u.u.data(), v.u.data(), static_cast<unsigned>(u.u.size()));
}

/// phi(a|b)_i = a_i beta + b_i beta^q.  Weight-preserving isometric
/// isomorphism from (GF(q)^{2n}, <.|.>_s) onto (GF(q^2)^n, <.|.>_a).
inline QuadraticVector phi(const ExtensionPairPtr& E, const SymplecticVector& v) {
    if (*E->base() != *v.field) throw std::invalid_argument("phi: field mismatch");
    unsigned n = v.n();
    QuadraticVector out{E, std::vector<gf_t>(n)};
    for (unsigned i = 0; i < n; ++i) out.u[i] = E->pair_up(v.v[i], v.v[n + i]);
    return out;
}

inline SymplecticVector phi_inv(const QuadraticVector& u) {
    unsigned n = static_cast<unsigned>(u.u.size());
    SymplecticVector out{u.ext->base(), std::vector<gf_t>(2 * n)};
    for (unsigned i = 0; i < n; ++i) {
        auto [a, b] = u.ext->pair_down(u.u[i]);
        out.v[i] = a;
        out.v[n + i] = b;
    }
    return out;
}

}  // namespace sscode

#endif
