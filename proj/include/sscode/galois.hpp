#ifndef SSCODE_GALOIS_HPP
#define SSCODE_GALOIS_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "sscode/numeric.hpp"

/// Exact arithmetic in GF(p^m) for p in {2,3,5,7} and p^m <= 2401.
///
/// Elements are canonical integer encodings e = sum c_i * p^i of their
/// coefficient vector in the polynomial basis of GF(p)[x]/(modulus).
/// Every field precomputes log/antilog tables (multiplication), a full
/// addition table, negation, Frobenius x -> x^p and the trace to GF(p),
/// so all element operations are O(1) table lookups.  Fields are
/// immutable after construction and safe to share between threads.

namespace sscode {

using gf_t = std::uint16_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

namespace gfdetail {

/// Dense polynomials over GF(p) as coefficient vectors, little-endian.
/// Only used at field-construction time (irreducibility testing).
inline std::vector<gf_t> poly_mod(std::vector<gf_t> a, const std::vector<gf_t>& b, unsigned p) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    std::vector<gf_t> g = b;
    while (!g.empty() && g.back() == 0) g.pop_back();
    if (g.empty()) throw std::logic_error("poly_mod: division by zero polynomial");
    // inverse of leading coefficient mod p
    unsigned lead = g.back(), lead_inv = 0;
    for (unsigned t = 1; t < p; ++t)
        if (lead * t % p == 1) lead_inv = t;
    while (a.size() >= g.size()) {
        unsigned shift = a.size() - g.size();
        unsigned factor = a.back() * lead_inv % p;
        if (factor != 0) {
            for (std::size_t i = 0; i < g.size(); ++i) {
                unsigned v = a[shift + i] + p * p - factor * g[i] % p;
                a[shift + i] = static_cast<gf_t>(v % p);
            }
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

inline bool poly_is_irreducible(const std::vector<gf_t>& f, unsigned p) {
    unsigned m = static_cast<unsigned>(f.size()) - 1;
    if (m == 1) return true;
    // trial division against every monic divisor of degree 1..m/2
    for (unsigned d = 1; 2 * d <= m; ++d) {
        std::uint32_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint32_t e = 0; e < count; ++e) {
            std::vector<gf_t> g(d + 1, 0);
            std::uint32_t t = e;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = static_cast<gf_t>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace gfdetail

class Field {
  public:
    /// Constructs GF(p^m) with the given monic irreducible modulus
    /// (m+1 coefficients, little-endian).  Throws std::invalid_argument
    /// on an unsupported p, size overflow, or a reducible modulus.
    Field(unsigned p, unsigned m, std::vector<gf_t> modulus) : p_(p), m_(m), modulus_(std::move(modulus)) {
        if (p != 2 && p != 3 && p != 5 && p != 7)
            throw std::invalid_argument("field: characteristic must be a prime in {2,3,5,7}, got " + std::to_string(p));
        if (m < 1) throw std::invalid_argument("field: extension degree must be >= 1");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < m; ++i) {
            q *= p;
            if (q > 2401) throw std::invalid_argument("field: p^m exceeds the supported maximum of 2401");
        }
        q_ = static_cast<std::uint32_t>(q);
        if (modulus_.size() != m + 1)
            throw std::invalid_argument("field: modulus must have m+1 coefficients");
        for (gf_t c : modulus_)
            if (c >= p) throw std::invalid_argument("field: modulus coefficient out of range [0,p)");
        if (modulus_.back() != 1) throw std::invalid_argument("field: modulus must be monic");
        if (!gfdetail::poly_is_irreducible(modulus_, p))
            throw std::invalid_argument("field: modulus is reducible over GF(" + std::to_string(p) + ")");
        build_tables();
    }

    unsigned p() const { return p_; }
    unsigned m() const { return m_; }
    std::uint32_t q() const { return q_; }
    const std::vector<gf_t>& modulus() const { return modulus_; }

    bool operator==(const Field& o) const { return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    gf_t add(gf_t a, gf_t b) const { return add_[static_cast<std::size_t>(a) * q_ + b]; }
    gf_t sub(gf_t a, gf_t b) const { return add(a, neg_[b]); }
    gf_t neg(gf_t a) const { return neg_[a]; }
    gf_t mul(gf_t a, gf_t b) const {
        if (a == 0 || b == 0) return 0;
        return alog_[log_[a] + log_[b]];
    }
    gf_t inv(gf_t a) const {
        if (a == 0) throw std::domain_error("field: inversion of zero");
        return alog_[q_ - 1 - log_[a]];
    }
    gf_t pow(gf_t a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        std::uint64_t le = static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1));
        return alog_[le % (q_ - 1)];
    }
    /// Frobenius x -> x^p.
    gf_t frobenius(gf_t a) const { return frob_[a]; }
    /// x -> x^(p^k).
    gf_t frobenius_iter(gf_t a, unsigned k) const {
        for (unsigned i = 0; i < k; ++i) a = frob_[a];
        return a;
    }
    /// Trace to the prime field: sum of x^(p^i), i = 0..m-1.  Lands in GF(p).
    gf_t trace_to_prime(gf_t a) const { return trace_[a]; }

    /// Fixed generator of the multiplicative group (smallest encoding).
    gf_t generator() const { return gen_; }
    std::uint32_t log(gf_t a) const {
        if (a == 0) throw std::domain_error("field: log of zero");
        return log_[a];
    }
    gf_t antilog(std::uint32_t e) const { return alog_[e % (q_ - 1)]; }

    std::vector<gf_t> decode(gf_t e) const {
        std::vector<gf_t> c(m_);
        for (unsigned i = 0; i < m_; ++i) {
            c[i] = static_cast<gf_t>(e % p_);
            e = static_cast<gf_t>(e / p_);
        }
        return c;
    }
    gf_t encode(const std::vector<gf_t>& c) const {
        gf_t e = 0;
        for (unsigned i = m_; i-- > 0;) e = static_cast<gf_t>(e * p_ + c[i] % p_);
        return e;
    }

    std::string describe() const {
        std::string s = "GF(" + std::to_string(q_) + ") = GF(" + std::to_string(p_) + "^" + std::to_string(m_) + "), modulus ";
        for (std::size_t i = 0; i < modulus_.size(); ++i) s += (i ? "," : "") + std::to_string(modulus_[i]);
        return s;
    }

  private:
    void build_tables() {
        // element-wise digit addition mod p, then re-encode
        std::vector<std::vector<gf_t>> digits(q_);
        for (std::uint32_t e = 0; e < q_; ++e) digits[e] = decode(static_cast<gf_t>(e));
        add_.resize(static_cast<std::size_t>(q_) * q_);
        neg_.resize(q_);
        std::vector<gf_t> tmp(m_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            for (std::uint32_t b = 0; b < q_; ++b) {
                for (unsigned i = 0; i < m_; ++i) tmp[i] = static_cast<gf_t>((digits[a][i] + digits[b][i]) % p_);
                add_[static_cast<std::size_t>(a) * q_ + b] = encode(tmp);
            }
            for (unsigned i = 0; i < m_; ++i) tmp[i] = static_cast<gf_t>((p_ - digits[a][i]) % p_);
            neg_[a] = encode(tmp);
        }

        // polynomial multiplication mod modulus, used only to seed the log tables
        auto poly_mul = [&](gf_t a, gf_t b) -> gf_t {
            std::vector<gf_t> prod(2 * m_, 0);
            const auto& da = digits[a];
            const auto& db = digits[b];
            for (unsigned i = 0; i < m_; ++i) {
                if (da[i] == 0) continue;
                for (unsigned j = 0; j < m_; ++j)
                    prod[i + j] = static_cast<gf_t>((prod[i + j] + da[i] * db[j]) % p_);
            }
            for (unsigned d = 2 * m_ - 1; d >= m_ && d < 2 * m_; --d) {
                gf_t c = prod[d];
                if (c == 0) continue;
                prod[d] = 0;
                for (unsigned i = 0; i < m_; ++i) {
                    unsigned v = prod[d - m_ + i] + (p_ - 1) * c * modulus_[i];
                    prod[d - m_ + i] = static_cast<gf_t>(v % p_);
                }
            }
            std::vector<gf_t> low(prod.begin(), prod.begin() + m_);
            return encode(low);
        };

        // smallest-encoding generator of the cyclic group of order q-1
        log_.assign(q_, 0);
        alog_.assign(2 * (q_ - 1), 0);
        gen_ = 0;
        for (std::uint32_t g = 2; g < q_ || (q_ == 2 && g < 2); ++g) {
            std::uint32_t ord = 1;
            gf_t x = static_cast<gf_t>(g);
            while (x != 1) {
                x = poly_mul(x, static_cast<gf_t>(g));
                ++ord;
                if (ord > q_) throw std::logic_error("field: element order overflow");
            }
            if (ord == q_ - 1) {
                gen_ = static_cast<gf_t>(g);
                break;
            }
        }
        if (q_ == 2) gen_ = 1;
        if (gen_ == 0 && q_ > 2) throw std::logic_error("field: no generator found");
        gf_t x = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            alog_[i] = x;
            log_[x] = i;
            x = poly_mul(x, gen_);
        }
        if (x != 1) throw std::logic_error("field: generator order mismatch");
        for (std::uint32_t i = q_ - 1; i < 2 * (q_ - 1); ++i) alog_[i] = alog_[i - (q_ - 1)];

        frob_.resize(q_);
        trace_.resize(q_);
        for (std::uint32_t e = 0; e < q_; ++e) {
            frob_[e] = pow_nolog(static_cast<gf_t>(e), p_, poly_mul);
            gf_t t = 0, y = static_cast<gf_t>(e);
            for (unsigned i = 0; i < m_; ++i) {
                t = add(t, y);
                y = pow_nolog(y, p_, poly_mul);
            }
            trace_[e] = t;
        }
    }

    template <typename Mul>
    gf_t pow_nolog(gf_t a, std::uint64_t e, Mul&& mul) const {
        gf_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    unsigned p_, m_;
    std::uint32_t q_;
    std::vector<gf_t> modulus_;
    std::vector<gf_t> add_, neg_, frob_, trace_;
    std::vector<std::uint32_t> log_;
    std::vector<gf_t> alog_;
    gf_t gen_ = 0;
};

/// Builds GF(p^m).  When the modulus is omitted, picks the irreducible
/// monic polynomial of degree m with the smallest integer encoding
/// sum c_i p^i, so the representation is reproducible across runs.
inline FieldPtr field_make(unsigned p, unsigned m, std::vector<gf_t> modulus = {}) {
    if (!modulus.empty()) return std::make_shared<Field>(p, m, std::move(modulus));
    if (p != 2 && p != 3 && p != 5 && p != 7)
        throw std::invalid_argument("field: characteristic must be a prime in {2,3,5,7}, got " + std::to_string(p));
    std::uint64_t count = 1;
    for (unsigned i = 0; i < m; ++i) {
        count *= p;
        if (count > 2401) throw std::invalid_argument("field: p^m exceeds the supported maximum of 2401");
    }
    for (std::uint64_t e = 0; e < count; ++e) {
        std::vector<gf_t> f(m + 1, 0);
        std::uint64_t t = e;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = static_cast<gf_t>(t % p);
            t /= p;
        }
        f[m] = 1;
        if (gfdetail::poly_is_irreducible(f, p)) return std::make_shared<Field>(p, m, std::move(f));
    }
    throw std::logic_error("field: no irreducible polynomial found");  // unreachable
}

/// An element bound to its field; the convenience surface used by tests
/// and the CLI.  Hot loops work on raw encodings instead.
struct GFElement {
    FieldPtr field;
    gf_t enc = 0;

    GFElement() = default;
    GFElement(FieldPtr f, gf_t e) : field(std::move(f)), enc(e) {
        if (enc >= field->q()) throw std::invalid_argument("element: encoding out of range");
    }

    friend GFElement operator+(const GFElement& a, const GFElement& b) {
        check(a, b);
        return {a.field, a.field->add(a.enc, b.enc)};
    }
    friend GFElement operator-(const GFElement& a, const GFElement& b) {
        check(a, b);
        return {a.field, a.field->sub(a.enc, b.enc)};
    }
    friend GFElement operator*(const GFElement& a, const GFElement& b) {
        check(a, b);
        return {a.field, a.field->mul(a.enc, b.enc)};
    }
    GFElement inverse() const { return {field, field->inv(enc)}; }
    GFElement pow(std::uint64_t e) const { return {field, field->pow(enc, e)}; }
    GFElement frobenius() const { return {field, field->frobenius(enc)}; }
    bool operator==(const GFElement& o) const { return *field == *o.field && enc == o.enc; }

    static void check(const GFElement& a, const GFElement& b) {
        if (*a.field != *b.field) throw std::invalid_argument("element: operands from different fields");
    }
};

/// Embedding of GF(p^a) into GF(p^b) for a | b, realized by mapping the
/// polynomial generator of the small field to the smallest-encoding root
/// of its modulus inside the big field.
class SubfieldEmbedding {
  public:
    SubfieldEmbedding(FieldPtr small, FieldPtr big) : small_(std::move(small)), big_(std::move(big)) {
        if (small_->p() != big_->p() || big_->m() % small_->m() != 0)
            throw std::invalid_argument("embedding: not a subfield pair");
        gf_t root = 0;
        bool found = false;
        for (std::uint32_t x = 0; x < big_->q(); ++x) {
            gf_t acc = 0, xp = 1;
            for (unsigned i = 0; i <= small_->m(); ++i) {
                gf_t coeff = static_cast<gf_t>(small_->modulus()[i] % big_->p());
                acc = big_->add(acc, big_->mul(coeff, xp));
                xp = big_->mul(xp, static_cast<gf_t>(x));
            }
            if (acc == 0) {
                root = static_cast<gf_t>(x);
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("embedding: modulus has no root in the big field");
        fwd_.resize(small_->q());
        bwd_.assign(big_->q(), kNone);
        for (std::uint32_t e = 0; e < small_->q(); ++e) {
            auto c = small_->decode(static_cast<gf_t>(e));
            gf_t acc = 0, xp = 1;
            for (unsigned i = 0; i < small_->m(); ++i) {
                acc = big_->add(acc, big_->mul(c[i], xp));
                xp = big_->mul(xp, root);
            }
            fwd_[e] = acc;
            bwd_[acc] = static_cast<gf_t>(e);
        }
    }

    gf_t up(gf_t e) const { return fwd_[e]; }
    bool in_image(gf_t big_e) const { return bwd_[big_e] != kNone; }
    gf_t down(gf_t big_e) const {
        if (bwd_[big_e] == kNone) throw std::domain_error("embedding: element not in the subfield image");
        return bwd_[big_e];
    }
    const FieldPtr& small() const { return small_; }
    const FieldPtr& big() const { return big_; }

  private:
    static constexpr gf_t kNone = 0xFFFF;
    FieldPtr small_, big_;
    std::vector<gf_t> fwd_, bwd_;
};

/// GF(q) together with its canonical quadratic extension GF(q^2) and a
/// fixed element beta such that {beta, beta^q} is a normal basis of
/// GF(q^2) over GF(q).  Also carries the precomputed expansion tables
/// between GF(q)^2 and GF(q^2) in that basis.
class ExtensionPair {
  public:
    explicit ExtensionPair(FieldPtr base)
        : base_(std::move(base)),
          ext_(field_make(base_->p(), 2 * base_->m())),
          embed_(base_, ext_) {
        const std::uint32_t q = base_->q();
        // beta = smallest encoding with {beta, beta^q} GF(q)-independent,
        // i.e. beta != 0 and beta^(q-1) outside the image of GF(q)
        beta_ = 0;
        for (std::uint32_t b = 1; b < ext_->q(); ++b) {
            gf_t bq = ext_->frobenius_iter(static_cast<gf_t>(b), base_->m());
            gf_t ratio = ext_->mul(bq, ext_->inv(static_cast<gf_t>(b)));
            if (!embed_.in_image(ratio)) {
                beta_ = static_cast<gf_t>(b);
                beta_q_ = bq;
                break;
            }
        }
        if (beta_ == 0) throw std::logic_error("extension: no normal basis element found");
        if (ext_->frobenius_iter(beta_, 2 * base_->m()) != beta_)
            throw std::logic_error("extension: beta^(q^2) != beta");

        gf_t b2 = ext_->mul(beta_, beta_);
        gf_t bq2 = ext_->mul(beta_q_, beta_q_);
        gf_t denom = ext_->sub(b2, bq2);
        if (denom == 0) throw std::logic_error("extension: beta^2 == beta^(2q)");
        alt_denom_inv_ = ext_->inv(denom);

        // pair (a,b) in GF(q)^2  <->  a*beta + b*beta^q in GF(q^2)
        pair_to_ext_.assign(static_cast<std::size_t>(q) * q, 0);
        ext_to_pair_.assign(ext_->q(), 0);
        std::vector<bool> seen(ext_->q(), false);
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                gf_t u = ext_->add(ext_->mul(embed_.up(static_cast<gf_t>(a)), beta_),
                                   ext_->mul(embed_.up(static_cast<gf_t>(b)), beta_q_));
                pair_to_ext_[static_cast<std::size_t>(a) * q + b] = u;
                ext_to_pair_[u] = static_cast<std::uint32_t>(a * q + b);
                if (seen[u]) throw std::logic_error("extension: {beta, beta^q} not a basis");
                seen[u] = true;
            }
        }
    }

    const FieldPtr& base() const { return base_; }
    const FieldPtr& ext() const { return ext_; }
    const SubfieldEmbedding& embedding() const { return embed_; }
    gf_t beta() const { return beta_; }
    gf_t beta_q() const { return beta_q_; }
    gf_t alt_denominator_inv() const { return alt_denom_inv_; }

    /// x in GF(q^2) -> x^q.
    gf_t conj(gf_t x) const { return ext_->frobenius_iter(x, base_->m()); }
    gf_t pair_up(gf_t a, gf_t b) const { return pair_to_ext_[static_cast<std::size_t>(a) * base_->q() + b]; }
    std::pair<gf_t, gf_t> pair_down(gf_t u) const {
        std::uint32_t ab = ext_to_pair_[u];
        return {static_cast<gf_t>(ab / base_->q()), static_cast<gf_t>(ab % base_->q())};
    }
    /// Trace tr_{q/p} of an extension element that lies in the GF(q) image.
    gf_t trace_down_to_prime(gf_t x_in_image) const { return base_->trace_to_prime(embed_.down(x_in_image)); }

    bool operator==(const ExtensionPair& o) const { return *base_ == *o.base_ && *ext_ == *o.ext_ && beta_ == o.beta_; }

  private:
    FieldPtr base_, ext_;
    SubfieldEmbedding embed_;
    gf_t beta_ = 0, beta_q_ = 0, alt_denom_inv_ = 0;
};

using ExtensionPairPtr = std::shared_ptr<const ExtensionPair>;

/// Deterministically picks the normal-basis element beta for GF(q^2)/GF(q).
inline ExtensionPairPtr normal_basis_pick(FieldPtr base) {
    if (static_cast<std::uint64_t>(base->q()) * base->q() > 2401)
        throw std::invalid_argument("extension: q^2 exceeds the supported maximum of 2401");
    return std::make_shared<ExtensionPair>(std::move(base));
}

}  // namespace sscode

#endif
