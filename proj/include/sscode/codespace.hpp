#ifndef SSCODE_CODESPACE_HPP
#define SSCODE_CODESPACE_HPP

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sscode/forms.hpp"
#include "sscode/linalg.hpp"
#include "sscode/numeric.hpp"

/// Additive and linear codes as row spaces in canonical reduced
/// row-echelon form, with duals under a pluggable bilinear form.
///
/// Three ambients are supported: the symplectic ambient GF(q)^{2n}, the
/// plain ambient GF(q)^n and the quadratic ambient GF(q^2)^n.  A code is
/// either linear over the entry field of its ambient or additive, i.e.
/// GF(p)-linear only.  Additive codes are stored expanded over GF(p)
/// (each entry becomes a block of coefficient columns); linear codes are
/// stored natively.  Canonical RREF makes code equality matrix equality.

namespace sscode {

enum class AmbientKind { symplectic, plain, quadratic };
enum class Scalars { additive, linear, quadratic_linear };
enum class Form { euclidean, trace_symplectic, hermitian, trace_alternating };

inline const char* to_string(AmbientKind k) {
    switch (k) {
        case AmbientKind::symplectic: return "symplectic";
        case AmbientKind::plain: return "plain";
        case AmbientKind::quadratic: return "quadratic";
    }
    return "?";
}

inline const char* to_string(Scalars s) {
    switch (s) {
        case Scalars::additive: return "additive";
        case Scalars::linear: return "linear";
        case Scalars::quadratic_linear: return "quadratic-linear";
    }
    return "?";
}

inline const char* to_string(Form f) {
    switch (f) {
        case Form::euclidean: return "euclidean";
        case Form::trace_symplectic: return "trace-symplectic";
        case Form::hermitian: return "hermitian";
        case Form::trace_alternating: return "trace-alternating";
    }
    return "?";
}

struct Ambient {
    AmbientKind kind = AmbientKind::plain;
    FieldPtr base;            // GF(q); the entry field unless kind == quadratic
    ExtensionPairPtr ext;     // present iff kind == quadratic
    unsigned n = 0;           // block length (coordinate count)

    static Ambient symplectic(FieldPtr q, unsigned n) { return {AmbientKind::symplectic, std::move(q), nullptr, n}; }
    static Ambient plain(FieldPtr q, unsigned n) { return {AmbientKind::plain, std::move(q), nullptr, n}; }
    static Ambient quadratic(ExtensionPairPtr e, unsigned n) {
        Ambient a{AmbientKind::quadratic, e->base(), std::move(e), n};
        return a;
    }

    const FieldPtr& entry_field() const { return kind == AmbientKind::quadratic ? ext->ext() : base; }
    unsigned entry_len() const { return kind == AmbientKind::symplectic ? 2 * n : n; }
    /// entry-field coefficient count over GF(p)
    unsigned entry_degree() const { return entry_field()->m(); }
    unsigned expanded_width() const { return entry_len() * entry_degree(); }
    /// number of nonzero per-coordinate symbols (q^2 - 1 in the symplectic
    /// ambient, entry-field size - 1 otherwise)
    std::uint64_t coordinate_alphabet() const {
        std::uint64_t qe = entry_field()->q();
        return kind == AmbientKind::symplectic ? qe * qe : qe;
    }

    bool operator==(const Ambient& o) const {
        if (kind != o.kind || n != o.n || *base != *o.base) return false;
        if (kind == AmbientKind::quadratic && !(*ext == *o.ext)) return false;
        return true;
    }
    bool operator!=(const Ambient& o) const { return !(*this == o); }
};

namespace csdetail {

inline FieldPtr prime_field(const FieldPtr& f) {
    static thread_local std::vector<std::pair<unsigned, FieldPtr>> cache;
    for (auto& [p, fp] : cache)
        if (p == f->p()) return fp;
    FieldPtr fp = f->m() == 1 ? f : field_make(f->p(), 1);
    cache.emplace_back(f->p(), fp);
    return fp;
}

inline std::vector<gf_t> expand_vector(const Ambient& amb, const std::vector<gf_t>& v) {
    const Field& E = *amb.entry_field();
    unsigned deg = E.m();
    std::vector<gf_t> out;
    out.reserve(v.size() * deg);
    for (gf_t x : v) {
        auto d = E.decode(x);
        out.insert(out.end(), d.begin(), d.end());
    }
    return out;
}

inline std::vector<gf_t> collapse_vector(const Ambient& amb, const std::vector<gf_t>& v) {
    const Field& E = *amb.entry_field();
    unsigned deg = E.m();
    std::vector<gf_t> out(v.size() / deg);
    std::vector<gf_t> digits(deg);
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (unsigned j = 0; j < deg; ++j) digits[j] = v[i * deg + j];
        out[i] = E.encode(digits);
    }
    return out;
}

/// Gram matrix over GF(p) of the trace-symplectic form on the expanded
/// ambient GF(p)^{2nm}.
inline Matrix symplectic_gram(const Ambient& amb) {
    const Field& F = *amb.base;
    unsigned n = amb.n, m = F.m();
    FieldPtr fp = prime_field(amb.base);
    Matrix M(fp, 2 * n * m, 2 * n * m);
    // only positions (i, n+i) interact: <pi_a e_i | pi_b e_{n+i}>_s = tr(pi_a pi_b)
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned a = 0; a < m; ++a) {
            for (unsigned b = 0; b < m; ++b) {
                gf_t xa = 1, xb = 1;
                for (unsigned t = 0; t < a; ++t) xa = static_cast<gf_t>(xa * F.p());
                for (unsigned t = 0; t < b; ++t) xb = static_cast<gf_t>(xb * F.p());
                gf_t tr = F.trace_to_prime(F.mul(xa, xb));
                // u = (x^a at position i | 0), v = (0 | x^b at position i):
                // <u|v>_s = tr(0 - x^a x^b) = -tr(x^a x^b); antisymmetric partner +tr
                std::size_t row_u = static_cast<std::size_t>(i) * m + a;
                std::size_t col_v = static_cast<std::size_t>(n + i) * m + b;
                gf_t fpneg = static_cast<gf_t>((F.p() - tr % F.p()) % F.p());
                M.at(row_u, col_v) = fpneg;
                std::size_t row_v = static_cast<std::size_t>(n + i) * m + b;
                std::size_t col_u = static_cast<std::size_t>(i) * m + a;
                M.at(row_v, col_u) = static_cast<gf_t>(tr % F.p());
            }
        }
    }
    return M;
}

/// Gram matrix over GF(p) of the trace-alternating form on the expanded
/// ambient GF(p)^{2nm}; block diagonal with one 2m x 2m block per position.
inline Matrix alternating_gram(const Ambient& amb) {
    const ExtensionPair& E = *amb.ext;
    const Field& X = *E.ext();
    unsigned n = amb.n, d = X.m();
    FieldPtr fp = prime_field(amb.base);
    Matrix M(fp, static_cast<std::size_t>(n) * d, static_cast<std::size_t>(n) * d);
    std::vector<std::vector<gf_t>> block(d, std::vector<gf_t>(d));
    for (unsigned a = 0; a < d; ++a) {
        for (unsigned b = 0; b < d; ++b) {
            gf_t xa = 1, xb = 1;
            for (unsigned t = 0; t < a; ++t) xa = static_cast<gf_t>(xa * X.p());
            for (unsigned t = 0; t < b; ++t) xb = static_cast<gf_t>(xb * X.p());
            block[a][b] = trace_alternating_product_raw(E, &xa, &xb, 1);
        }
    }
    for (unsigned i = 0; i < n; ++i)
        for (unsigned a = 0; a < d; ++a)
            for (unsigned b = 0; b < d; ++b) M.at(static_cast<std::size_t>(i) * d + a, static_cast<std::size_t>(i) * d + b) = block[a][b];
    return M;
}

}  // namespace csdetail

class AdditiveCode {
  public:
    AdditiveCode() = default;

    /// Builds a code from generator rows given in entry-field encodings.
    AdditiveCode(Ambient amb, Scalars scalars, const std::vector<std::vector<gf_t>>& generator_rows)
        : amb_(std::move(amb)), scalars_(scalars) {
        validate_scalars();
        FieldPtr storage = storage_field();
        Matrix g(storage, 0, storage_width());
        for (const auto& r : generator_rows) {
            if (r.size() != amb_.entry_len()) throw std::invalid_argument("code: generator length mismatch");
            for (gf_t x : r)
                if (x >= amb_.entry_field()->q()) throw std::invalid_argument("code: entry encoding out of range");
            g.append_row(scalars_ == Scalars::additive ? csdetail::expand_vector(amb_, r) : r);
        }
        g.rref();
        gens_ = std::move(g);
    }

    /// Internal: adopts an already-storage-encoded matrix.
    static AdditiveCode from_storage(Ambient amb, Scalars scalars, Matrix storage_gens) {
        AdditiveCode c;
        c.amb_ = std::move(amb);
        c.scalars_ = scalars;
        c.validate_scalars();
        storage_gens.rref();
        c.gens_ = std::move(storage_gens);
        if (c.gens_.cols() != c.storage_width()) throw std::invalid_argument("code: storage width mismatch");
        return c;
    }

    static AdditiveCode zero(Ambient amb, Scalars scalars) { return AdditiveCode(std::move(amb), scalars, {}); }

    static AdditiveCode full_ambient(Ambient amb, Scalars scalars) {
        AdditiveCode c = zero(amb, scalars);
        c.gens_ = Matrix::identity(c.gens_.field(), c.storage_width());
        return c;
    }

    const Ambient& ambient() const { return amb_; }
    Scalars scalars() const { return scalars_; }
    const Matrix& generators() const { return gens_; }

    /// Dimension over the declared scalar field.
    std::size_t dim() const { return gens_.rows(); }
    bool is_zero() const { return gens_.rows() == 0; }

    /// log_p |C|
    std::size_t fp_dim() const { return gens_.rows() * storage_degree(); }
    BigInt size() const { return big_pow(amb_.base->p(), fp_dim()); }

    bool operator==(const AdditiveCode& o) const {
        return amb_ == o.amb_ && scalars_ == o.scalars_ && gens_ == o.gens_;
    }

    /// The same set of vectors as a GF(p)-additive code (canonical).
    AdditiveCode as_additive() const {
        if (scalars_ == Scalars::additive) return *this;
        const Field& S = *gens_.field();
        unsigned deg = S.m();
        // the GF(p)-span of { x^t * row : t < deg } equals the S-span of row
        Matrix ex(csdetail::prime_field(amb_.base), 0, amb_.expanded_width());
        for (std::size_t i = 0; i < gens_.rows(); ++i) {
            std::vector<gf_t> r = gens_.row_vec(i);
            gf_t mult = 1;
            for (unsigned t = 0; t < deg; ++t) {
                std::vector<gf_t> scaled(r.size());
                for (std::size_t j = 0; j < r.size(); ++j) scaled[j] = S.mul(r[j], mult);
                ex.append_row(csdetail::expand_vector(amb_, scaled));
                mult = static_cast<gf_t>(mult * S.p());  // encoding of x^(t+1)
            }
        }
        return from_storage(amb_, Scalars::additive, std::move(ex));
    }

    /// Canonical GF(p)-expanded generator matrix; equal matrices <=> equal sets.
    Matrix expanded_matrix() const { return as_additive().generators(); }

    bool same_set(const AdditiveCode& o) const {
        if (amb_ != o.amb_) return false;
        if (scalars_ == o.scalars_) return gens_ == o.gens_;
        return expanded_matrix() == o.expanded_matrix();
    }

    bool contains(const std::vector<gf_t>& entry_vec) const {
        if (entry_vec.size() != amb_.entry_len()) throw std::invalid_argument("code: vector length mismatch");
        if (scalars_ == Scalars::additive)
            return gens_.row_space_contains(csdetail::expand_vector(amb_, entry_vec));
        return gens_.row_space_contains(entry_vec);
    }

    bool contains_code(const AdditiveCode& o) const {
        for (std::size_t i = 0; i < o.gens_.rows(); ++i)
            if (!contains(o.entry_row(i))) return false;
        return true;
    }

    /// Row i of the generator matrix in entry-field encodings.
    std::vector<gf_t> entry_row(std::size_t i) const {
        auto r = gens_.row_vec(i);
        return scalars_ == Scalars::additive ? csdetail::collapse_vector(amb_, r) : r;
    }

    std::vector<std::vector<gf_t>> entry_rows() const {
        std::vector<std::vector<gf_t>> rs;
        rs.reserve(gens_.rows());
        for (std::size_t i = 0; i < gens_.rows(); ++i) rs.push_back(entry_row(i));
        return rs;
    }

    /// Generator basis of the Euclidean dual in storage coordinates; the
    /// parity-check matrix used by membership tests and weight searches.
    Matrix storage_parity() const { return gens_.nullspace(); }

    /// Storage-matrix columns belonging to coordinate c (0-based).
    std::vector<std::size_t> coordinate_columns(unsigned c) const {
        if (c >= amb_.n) throw std::out_of_range("code: coordinate out of range");
        unsigned deg = storage_degree_per_entry();
        std::vector<std::size_t> cols;
        if (amb_.kind == AmbientKind::symplectic) {
            for (unsigned t = 0; t < deg; ++t) cols.push_back(static_cast<std::size_t>(c) * deg + t);
            for (unsigned t = 0; t < deg; ++t) cols.push_back((static_cast<std::size_t>(amb_.n) + c) * deg + t);
        } else {
            for (unsigned t = 0; t < deg; ++t) cols.push_back(static_cast<std::size_t>(c) * deg + t);
        }
        return cols;
    }

    /// {c in C : c vanishes on every coordinate outside S}; S is 0-based.
    AdditiveCode shorten_to_support(const std::set<unsigned>& support) const {
        for (unsigned c : support)
            if (c >= amb_.n) throw std::out_of_range("shorten: coordinate out of range");
        std::vector<std::size_t> outside;
        for (unsigned c = 0; c < amb_.n; ++c) {
            if (support.count(c)) continue;
            auto cols = coordinate_columns(c);
            outside.insert(outside.end(), cols.begin(), cols.end());
        }
        Matrix restricted = gens_.select_columns(outside);
        Matrix lambda = restricted.transpose().nullspace();  // row combos vanishing outside S
        Matrix out = lambda.multiply(gens_);
        return from_storage(amb_, scalars_, std::move(out));
    }

    AdditiveCode dual(Form form) const {
        switch (form) {
            case Form::euclidean: {
                if (amb_.kind == AmbientKind::symplectic)
                    throw std::invalid_argument("dual: euclidean form undefined on the symplectic ambient");
                if (scalars_ == Scalars::additive)
                    throw std::invalid_argument("dual: euclidean form requires a linear code");
                return from_storage(amb_, scalars_, gens_.nullspace());
            }
            case Form::trace_symplectic: {
                if (amb_.kind != AmbientKind::symplectic)
                    throw std::invalid_argument("dual: trace-symplectic form requires the symplectic ambient");
                if (scalars_ == Scalars::linear) {
                    // for GF(q)-linear codes the trace-symplectic dual equals the
                    // plain symplectic-form dual, which is again GF(q)-linear
                    const Field& F = *amb_.base;
                    unsigned n = amb_.n;
                    Matrix g(gens_.field(), gens_.rows(), gens_.cols());
                    for (std::size_t i = 0; i < gens_.rows(); ++i)
                        for (unsigned j = 0; j < n; ++j) {
                            g.at(i, j) = gens_.at(i, n + j);
                            g.at(i, n + j) = F.neg(gens_.at(i, j));
                        }
                    return from_storage(amb_, scalars_, g.nullspace());
                }
                Matrix gram = csdetail::symplectic_gram(amb_);
                return from_storage(amb_, Scalars::additive, gens_.multiply(gram).nullspace());
            }
            case Form::hermitian: {
                if (amb_.kind != AmbientKind::quadratic)
                    throw std::invalid_argument("dual: hermitian form requires the quadratic ambient");
                if (scalars_ != Scalars::quadratic_linear)
                    throw std::invalid_argument("dual: hermitian form requires a linear code over GF(q^2)");
                return from_storage(amb_, scalars_, gens_.frobenius_iter(amb_.base->m()).nullspace());
            }
            case Form::trace_alternating: {
                if (amb_.kind != AmbientKind::quadratic)
                    throw std::invalid_argument("dual: trace-alternating form requires the quadratic ambient");
                if (scalars_ == Scalars::quadratic_linear)
                    return dual(Form::hermitian);  // coincides for linear codes
                Matrix gram = csdetail::alternating_gram(amb_);
                return from_storage(amb_, Scalars::additive, gens_.multiply(gram).nullspace());
            }
        }
        throw std::logic_error("dual: unknown form");
    }

    friend AdditiveCode intersect(const AdditiveCode& a, const AdditiveCode& b) {
        check_compatible(a, b);
        Matrix na = a.gens_.nullspace();
        Matrix nb = b.gens_.nullspace();
        return from_storage(a.amb_, a.scalars_, na.stacked(nb).nullspace());
    }

    friend AdditiveCode sum(const AdditiveCode& a, const AdditiveCode& b) {
        check_compatible(a, b);
        return from_storage(a.amb_, a.scalars_, a.gens_.stacked(b.gens_));
    }

  private:
    static void check_compatible(const AdditiveCode& a, const AdditiveCode& b) {
        if (a.amb_ != b.amb_) throw std::invalid_argument("codes: ambient mismatch");
        if (a.scalars_ != b.scalars_) throw std::invalid_argument("codes: scalar field mismatch");
    }

    void validate_scalars() const {
        if (scalars_ == Scalars::quadratic_linear && amb_.kind != AmbientKind::quadratic)
            throw std::invalid_argument("code: quadratic-linear scalars require the quadratic ambient");
        if (scalars_ == Scalars::linear && amb_.kind == AmbientKind::quadratic)
            throw std::invalid_argument("code: linear scalars in the quadratic ambient are spelled quadratic-linear");
    }

    FieldPtr storage_field() const {
        return scalars_ == Scalars::additive ? csdetail::prime_field(amb_.base) : amb_.entry_field();
    }
    unsigned storage_degree() const { return scalars_ == Scalars::additive ? 1 : amb_.entry_degree(); }
    unsigned storage_degree_per_entry() const { return scalars_ == Scalars::additive ? amb_.entry_degree() : 1; }
    std::size_t storage_width() const {
        return scalars_ == Scalars::additive ? amb_.expanded_width() : amb_.entry_len();
    }

    Ambient amb_;
    Scalars scalars_ = Scalars::additive;
    Matrix gens_;
};

/// C1 x C2 = {(a|b) : a in C1, b in C2} in the symplectic ambient;
/// inputs are linear codes in the plain ambient of the same field.
inline AdditiveCode product_code(const AdditiveCode& c1, const AdditiveCode& c2) {
    if (c1.ambient().kind != AmbientKind::plain || c2.ambient().kind != AmbientKind::plain)
        throw std::invalid_argument("product: inputs must live in the plain ambient");
    if (c1.ambient() != c2.ambient()) throw std::invalid_argument("product: ambient mismatch");
    if (c1.scalars() != Scalars::linear || c2.scalars() != Scalars::linear)
        throw std::invalid_argument("product: inputs must be linear");
    unsigned n = c1.ambient().n;
    std::vector<std::vector<gf_t>> rows;
    for (const auto& r : c1.entry_rows()) {
        std::vector<gf_t> v(2 * n, 0);
        for (unsigned j = 0; j < n; ++j) v[j] = r[j];
        rows.push_back(v);
    }
    for (const auto& r : c2.entry_rows()) {
        std::vector<gf_t> v(2 * n, 0);
        for (unsigned j = 0; j < n; ++j) v[n + j] = r[j];
        rows.push_back(v);
    }
    return AdditiveCode(Ambient::symplectic(c1.ambient().base, n), Scalars::linear, rows);
}

// ---------------------------------------------------------------------------
// Code file format (line oriented, '#' starts a comment):
//   field: p=<p> m=<m> modulus=<c0,c1,...>
//   length: <n>
//   ambient: symplectic|plain|quadratic
//   scalars: additive|linear|quadratic-linear
//   generators:
//   <one generator per line, space-separated entry encodings>
// The field line always describes the base field GF(q); in the quadratic
// ambient the entries are encodings in its canonical extension GF(q^2).
// ---------------------------------------------------------------------------

inline void write_code(std::ostream& os, const AdditiveCode& code) {
    const Field& F = *code.ambient().base;
    os << "field: p=" << F.p() << " m=" << F.m() << " modulus=";
    for (std::size_t i = 0; i < F.modulus().size(); ++i) os << (i ? "," : "") << F.modulus()[i];
    os << "\n";
    os << "length: " << code.ambient().n << "\n";
    os << "ambient: " << to_string(code.ambient().kind) << "\n";
    os << "scalars: " << to_string(code.scalars()) << "\n";
    os << "generators:\n";
    for (const auto& r : code.entry_rows()) {
        for (std::size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << r[j];
        os << "\n";
    }
}

inline std::string code_to_string(const AdditiveCode& code) {
    std::ostringstream os;
    write_code(os, code);
    return os.str();
}

inline AdditiveCode read_code(std::istream& is) {
    unsigned p = 0, m = 0, n = 0;
    std::vector<gf_t> modulus;
    std::string ambient_s, scalars_s;
    std::vector<std::vector<gf_t>> rows;
    bool in_generators = false;
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        if (in_generators) {
            std::istringstream ls(line);
            std::vector<gf_t> row;
            long v;
            while (ls >> v) row.push_back(static_cast<gf_t>(v));
            if (!row.empty()) rows.push_back(std::move(row));
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("code file: malformed line '" + line + "'");
        std::string key = line.substr(0, colon);
        std::string val = line.substr(colon + 1);
        std::size_t vb = val.find_first_not_of(" \t");
        val = vb == std::string::npos ? "" : val.substr(vb);
        if (key == "field") {
            std::istringstream vs(val);
            std::string tok;
            while (vs >> tok) {
                if (tok.rfind("p=", 0) == 0) p = static_cast<unsigned>(std::stoul(tok.substr(2)));
                else if (tok.rfind("m=", 0) == 0) m = static_cast<unsigned>(std::stoul(tok.substr(2)));
                else if (tok.rfind("modulus=", 0) == 0) {
                    std::istringstream ms(tok.substr(8));
                    std::string c;
                    while (std::getline(ms, c, ',')) modulus.push_back(static_cast<gf_t>(std::stoul(c)));
                }
            }
        } else if (key == "length") {
            n = static_cast<unsigned>(std::stoul(val));
        } else if (key == "ambient") {
            ambient_s = val;
        } else if (key == "scalars") {
            scalars_s = val;
        } else if (key == "generators") {
            in_generators = true;
        } else {
            throw std::invalid_argument("code file: unknown key '" + key + "'");
        }
    }
    if (p == 0 || m == 0 || n == 0 || ambient_s.empty() || scalars_s.empty())
        throw std::invalid_argument("code file: missing header line");
    FieldPtr base = field_make(p, m, modulus);
    Ambient amb;
    if (ambient_s == "symplectic") amb = Ambient::symplectic(base, n);
    else if (ambient_s == "plain") amb = Ambient::plain(base, n);
    else if (ambient_s == "quadratic") amb = Ambient::quadratic(normal_basis_pick(base), n);
    else throw std::invalid_argument("code file: unknown ambient '" + ambient_s + "'");
    Scalars sc;
    if (scalars_s == "additive") sc = Scalars::additive;
    else if (scalars_s == "linear") sc = Scalars::linear;
    else if (scalars_s == "quadratic-linear") sc = Scalars::quadratic_linear;
    else throw std::invalid_argument("code file: unknown scalars '" + scalars_s + "'");
    return AdditiveCode(amb, sc, rows);
}

inline AdditiveCode read_code_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open code file: " + path);
    return read_code(f);
}

inline void write_code_file(const std::string& path, const AdditiveCode& code) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write code file: " + path);
    write_code(f, code);
}

}  // namespace sscode

#endif
