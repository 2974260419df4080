#include "qpm/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qpm {

namespace {

using Elem = Field::Elem;
using Poly = std::vector<Elem>;  // constant term first

void ptrim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly pmul(const Field& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); j++)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    ptrim(r);
    return r;
}

// remainder of a modulo monic f
Poly pmod(const Field& F, Poly a, const Poly& f) {
    ptrim(a);
    size_t d = f.size() - 1;
    while (a.size() > d) {
        Elem lead = a.back();
        size_t shift = a.size() - 1 - d;
        if (lead != 0)
            for (size_t i = 0; i < d; i++)
                a[shift + i] = F.sub(a[shift + i], F.mul(lead, f[i]));
        a.pop_back();
        ptrim(a);
    }
    return a;
}

Poly ppowmod(const Field& F, Poly base, uint64_t e, const Poly& f) {
    Poly r{1};
    base = pmod(F, std::move(base), f);
    while (e) {
        if (e & 1) r = pmod(F, pmul(F, r, base), f);
        base = pmod(F, pmul(F, base, base), f);
        e >>= 1;
    }
    return r;
}

Poly pgcd(const Field& F, Poly a, Poly b) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // make b monic so pmod applies
        Elem lead = b.back();
        if (lead != 1) {
            Elem il = F.inv(lead);
            for (auto& c : b) c = F.mul(c, il);
        }
        Poly r = pmod(F, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<uint32_t> prime_divisors(uint32_t n) {
    std::vector<uint32_t> ps;
    for (uint32_t p = 2; p * p <= n; p++)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

bool is_irreducible(const Field& base, const Poly& f) {
    size_t m = f.size() - 1;
    if (m == 1) return true;
    uint32_t B = base.order();
    Poly xpoly{0, 1};
    // y_i = x^(B^i) mod f, via repeated B-th powers
    Poly y = xpoly;
    std::vector<Poly> frob(m + 1);
    for (size_t i = 1; i <= m; i++) {
        y = ppowmod(base, y, B, f);
        frob[i] = y;
    }
    if (frob[m] != xpoly) return false;
    for (uint32_t t : prime_divisors(static_cast<uint32_t>(m))) {
        Poly g = frob[m / t];
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = base.sub(g[1], 1);
        ptrim(g);
        Poly d = pgcd(base, f, g);
        if (d.size() > 1) return false;
    }
    return true;
}

constexpr uint32_t kMaxOrder = 1u << 16;

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; d++)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Field::Elem Field::mul_raw(Elem a, Elem b) const {
    if (base_ == nullptr) return static_cast<Elem>((uint64_t(a) * b) % p_);
    Poly da, db;
    uint32_t B = base_->order();
    for (Elem t = a; t; t /= B) da.push_back(t % B);
    for (Elem t = b; t; t /= B) db.push_back(t % B);
    Poly r = pmod(*base_, pmul(*base_, da, db), modulus_);
    Elem out = 0;
    for (size_t i = r.size(); i-- > 0;) out = out * B + r[i];
    return out;
}

void Field::build_tables() {
    char2_ = (p_ == 2);
    uint32_t n = order_ - 1;
    auto pow_raw = [&](Elem a, uint32_t e) {
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul_raw(r, a);
            a = mul_raw(a, a);
            e >>= 1;
        }
        return r;
    };
    std::vector<uint32_t> ps = prime_divisors(n);
    auto is_gen = [&](Elem g) {
        if (g == 0) return false;
        for (uint32_t t : ps)
            if (pow_raw(g, n / t) == 1) return false;
        return true;
    };
    gen_ = 0;
    if (n == 1) {
        gen_ = 1;
    } else {
        // prefer the class of x so that "a" names the defining root when primitive
        if (base_ != nullptr && is_gen(base_->order())) gen_ = base_->order();
        if (gen_ == 0)
            for (Elem g = 2; g < order_; g++)
                if (is_gen(g)) {
                    gen_ = g;
                    break;
                }
    }
    exp_.resize(n);
    log_.assign(order_, 0);
    Elem cur = 1;
    for (uint32_t i = 0; i < n; i++) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = mul_raw(cur, gen_);
    }
    glog_ = log_;
}

FieldPtr Field::prime(uint32_t p) {
    if (!is_prime_u32(p)) throw BadParams("characteristic must be prime");
    if (p >= kMaxOrder) throw BadParams("field order exceeds supported maximum");
    auto F = std::shared_ptr<Field>(new Field());
    F->p_ = p;
    F->order_ = p;
    F->build_tables();
    return F;
}

FieldPtr Field::extension(FieldPtr base, std::vector<Elem> modulus) {
    if (!base) throw BadParams("null base field");
    while (modulus.size() > 1 && modulus.back() == 0) modulus.pop_back();
    if (modulus.size() < 2) throw BadDegree("modulus must have degree >= 1");
    for (Elem c : modulus) base->check_elem(c);
    if (modulus.back() != 1) throw NotMonic("modulus must be monic");
    int m = static_cast<int>(modulus.size()) - 1;
    uint64_t ord = 1;
    for (int i = 0; i < m; i++) {
        ord *= base->order();
        if (ord > kMaxOrder) throw BadParams("field order exceeds supported maximum");
    }
    if (!is_irreducible(*base, modulus))
        throw NotIrreducible("modulus is reducible over the base field");
    auto F = std::shared_ptr<Field>(new Field());
    F->base_ = base;
    F->p_ = base->characteristic();
    F->deg_ = m;
    F->abs_deg_ = m * base->abs_degree();
    F->order_ = static_cast<uint32_t>(ord);
    F->modulus_ = std::move(modulus);
    F->build_tables();
    return F;
}

FieldPtr Field::gf(uint64_t q) {
    if (q < 2 || q > kMaxOrder) throw BadParams("unsupported field order");
    uint32_t p = 0;
    int e = 0;
    for (uint32_t c = 2; c * c <= q || c <= q; c++) {
        if (q % c == 0) {
            p = c;
            uint64_t t = q;
            while (t % c == 0) {
                t /= c;
                e++;
            }
            if (t != 1) throw BadParams("field order must be a prime power");
            break;
        }
        if (uint64_t(c) * c > q) break;
    }
    if (p == 0) {  // q itself prime
        p = static_cast<uint32_t>(q);
        e = 1;
    }
    FieldPtr P = prime(p);
    if (e == 1) return P;
    // first monic irreducible of degree e in packed-index order
    uint64_t count = 1;
    for (int i = 0; i < e; i++) count *= p;
    for (uint64_t c = 0; c < count; c++) {
        std::vector<Elem> f;
        uint64_t t = c;
        for (int i = 0; i < e; i++) {
            f.push_back(static_cast<Elem>(t % p));
            t /= p;
        }
        f.push_back(1);
        if (is_irreducible(*P, f)) return extension(P, std::move(f));
    }
    throw Error("no irreducible modulus found");  // unreachable
}

Field::Elem Field::x() const {
    if (base_ == nullptr) throw BadParams("prime field has no defining root");
    return base_->order();
}

Field::Elem Field::add(Elem a, Elem b) const {
    if (char2_) return a ^ b;
    if (base_ == nullptr) return (a + b) % p_;
    uint32_t B = base_->order();
    Elem out = 0, mult = 1;
    for (int i = 0; i < deg_; i++) {
        out += base_->add(a % B, b % B) * mult;
        a /= B;
        b /= B;
        mult *= B;
    }
    return out;
}

Field::Elem Field::neg(Elem a) const {
    if (char2_) return a;
    if (base_ == nullptr) return a == 0 ? 0 : p_ - a;
    uint32_t B = base_->order();
    Elem out = 0, mult = 1;
    for (int i = 0; i < deg_; i++) {
        out += base_->neg(a % B) * mult;
        a /= B;
        mult *= B;
    }
    return out;
}

Field::Elem Field::pow(Elem a, long e) const {
    if (a == 0) {
        if (e < 0) throw ZeroToNegativePower("0 raised to a negative power");
        return e == 0 ? 1 : 0;
    }
    long n = order_ - 1;
    long k = (long(log_[a]) * (e % n)) % n;
    if (k < 0) k += n;
    return exp_[k];
}

std::vector<Field::Elem> Field::digits(Elem a) const {
    check_elem(a);
    if (base_ == nullptr) return {a};
    uint32_t B = base_->order();
    std::vector<Elem> d(deg_);
    for (int i = 0; i < deg_; i++) {
        d[i] = a % B;
        a /= B;
    }
    return d;
}

Field::Elem Field::from_digits(const std::vector<Elem>& d) const {
    int m = base_ == nullptr ? 1 : deg_;
    if (static_cast<int>(d.size()) != m) throw BadDegree("wrong number of digits");
    if (base_ == nullptr) {
        check_elem(d[0]);
        return d[0];
    }
    uint32_t B = base_->order();
    Elem out = 0;
    for (size_t i = d.size(); i-- > 0;) {
        base_->check_elem(d[i]);
        out = out * B + d[i];
    }
    return out;
}

std::string Field::to_string(Elem a) const {
    check_elem(a);
    if (base_ == nullptr) return std::to_string(a);
    if (a == 0) return "0";
    if (a == 1) return "1";
    long k = log_[a];
    return k == 1 ? "a" : "a^" + std::to_string(k);
}

Field::Elem Field::parse(const std::string& raw) const {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw BadElementString("empty element string");
    if (s == "0") return 0;
    if (s == "1") return 1;
    if (s[0] == 'a') {
        if (base_ == nullptr) throw BadElementString("'a' has no meaning in a prime field");
        long k = 1;
        if (s.size() > 1) {
            if (s[1] != '^') throw BadElementString("bad element string: " + raw);
            try {
                k = std::stol(s.substr(2));
            } catch (...) {
                throw BadElementString("bad exponent in: " + raw);
            }
        }
        return pow(gen_, k);
    }
    // decimal: residue for prime fields, packed index otherwise
    uint64_t v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw BadElementString("bad element string: " + raw);
        v = v * 10 + (c - '0');
        if (v >= order_) throw BadElementString("element out of range: " + raw);
    }
    return static_cast<Elem>(v);
}

namespace {

std::string poly_to_string(const Field& base, const std::vector<Elem>& f) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || f[i] != 1) os << f[i];
        if (i > 0) {
            if (f[i] != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::vector<Elem> poly_from_string(const Field& base, const std::string& s) {
    std::vector<Elem> f;
    auto set = [&](size_t e, Elem c) {
        if (f.size() <= e) f.resize(e + 1, 0);
        f[e] = base.add(f[e], c);
    };
    size_t i = 0;
    while (i < s.size()) {
        size_t j = s.find('+', i);
        if (j == std::string::npos) j = s.size();
        std::string term = s.substr(i, j - i);
        i = j + 1;
        if (term.empty()) throw BadInput("empty term in polynomial: " + s);
        uint64_t coef = 1;
        size_t k = 0;
        if (std::isdigit(static_cast<unsigned char>(term[0]))) {
            coef = 0;
            while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k])))
                coef = coef * 10 + (term[k++] - '0');
            if (k < term.size() && term[k] == '*') k++;
        }
        if (coef >= base.order()) throw BadInput("coefficient out of range in: " + s);
        if (k == term.size()) {
            set(0, static_cast<Elem>(coef));
            continue;
        }
        if (term[k] != 'x') throw BadInput("bad term in polynomial: " + s);
        k++;
        uint64_t e = 1;
        if (k < term.size()) {
            if (term[k] != '^') throw BadInput("bad term in polynomial: " + s);
            k++;
            e = 0;
            while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k])))
                e = e * 10 + (term[k++] - '0');
            if (k != term.size() || e > 64) throw BadInput("bad exponent in: " + s);
        }
        set(static_cast<size_t>(e), static_cast<Elem>(coef));
    }
    return f;
}

}  // namespace

std::string Field::spec() const {
    if (base_ == nullptr) return "GF(" + std::to_string(p_) + ")";
    std::string head;
    if (base_->is_prime_field())
        head = "GF(" + std::to_string(p_) + "^" + std::to_string(deg_) + ")";
    else
        head = base_->spec() + "[x^" + std::to_string(deg_) + "]";
    return head + "/" + poly_to_string(*base_, modulus_);
}

FieldPtr Field::from_spec(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.rfind("GF(", 0) != 0) throw BadInput("field spec must start with GF(: " + raw);
    size_t close = s.find(')');
    if (close == std::string::npos) throw BadInput("unbalanced parens in field spec: " + raw);
    std::string inside = s.substr(3, close - 3);
    std::string rest = s.substr(close + 1);
    uint64_t p = 0, e = 1;
    size_t caret = inside.find('^');
    try {
        if (caret == std::string::npos) {
            p = std::stoull(inside);
        } else {
            p = std::stoull(inside.substr(0, caret));
            e = std::stoull(inside.substr(caret + 1));
        }
    } catch (...) {
        throw BadInput("bad field order in spec: " + raw);
    }
    if (e == 0 || e > 32) throw BadInput("bad extension degree in spec: " + raw);
    if (rest.empty()) {
        uint64_t q = 1;
        for (uint64_t i = 0; i < e; i++) q *= p;
        return gf(q);
    }
    if (rest[0] != '/') throw BadInput("expected '/' before modulus in: " + raw);
    FieldPtr P = prime(static_cast<uint32_t>(p));
    std::vector<Elem> f = poly_from_string(*P, rest.substr(1));
    if (f.size() != e + 1) throw BadDegree("modulus degree does not match field spec");
    return extension(P, std::move(f));
}

// ---------------------------------------------------------------- matrices

FMat fmat_identity(const FieldPtr& F, int n) {
    FMat I(n, std::vector<Field::Elem>(n, 0));
    for (int i = 0; i < n; i++) I[i][i] = 1;
    return I;
}

FMat fmat_mul(const FieldPtr& F, const FMat& A, const FMat& B) {
    if (A.empty() || B.empty()) return {};
    size_t n = A.size(), k = B.size(), m = B[0].size();
    FMat C(n, std::vector<Field::Elem>(m, 0));
    for (size_t i = 0; i < n; i++) {
        if (A[i].size() != k) throw BadParams("fmat_mul: shape mismatch");
        for (size_t l = 0; l < k; l++) {
            Field::Elem a = A[i][l];
            if (a == 0) continue;
            for (size_t j = 0; j < m; j++)
                C[i][j] = F->add(C[i][j], F->mul(a, B[l][j]));
        }
    }
    return C;
}

int fmat_rref(const FieldPtr& F, FMat& A) {
    if (A.empty()) return 0;
    size_t rows = A.size(), cols = A[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; c++) {
        size_t piv = r;
        while (piv < rows && A[piv][c] == 0) piv++;
        if (piv == rows) continue;
        std::swap(A[piv], A[r]);
        Field::Elem il = F->inv(A[r][c]);
        for (size_t j = c; j < cols; j++) A[r][j] = F->mul(A[r][j], il);
        for (size_t i = 0; i < rows; i++) {
            if (i == r || A[i][c] == 0) continue;
            Field::Elem f = A[i][c];
            for (size_t j = c; j < cols; j++)
                A[i][j] = F->sub(A[i][j], F->mul(f, A[r][j]));
        }
        r++;
    }
    return static_cast<int>(r);
}

int fmat_rank(const FieldPtr& F, FMat A) { return fmat_rref(F, A); }

FMat fmat_kernel(const FieldPtr& F, const FMat& A) {
    if (A.empty()) return {};
    size_t cols = A[0].size();
    FMat R = A;
    int rank = fmat_rref(F, R);
    std::vector<int> pivot_of_col(cols, -1);
    for (int i = 0; i < rank; i++) {
        size_t c = 0;
        while (c < cols && R[i][c] == 0) c++;
        pivot_of_col[c] = i;
    }
    FMat K;
    for (size_t c = 0; c < cols; c++) {
        if (pivot_of_col[c] != -1) continue;
        std::vector<Field::Elem> v(cols, 0);
        v[c] = 1;
        for (size_t j = 0; j < cols; j++)
            if (pivot_of_col[j] != -1) v[j] = F->neg(R[pivot_of_col[j]][c]);
        K.push_back(std::move(v));
    }
    return K;
}

FMat fmat_inverse(const FieldPtr& F, const FMat& A) {
    size_t n = A.size();
    FMat W(n, std::vector<Field::Elem>(2 * n, 0));
    for (size_t i = 0; i < n; i++) {
        if (A[i].size() != n) throw BadParams("fmat_inverse: not square");
        for (size_t j = 0; j < n; j++) W[i][j] = A[i][j];
        W[i][n + i] = 1;
    }
    fmat_rref(F, W);
    // the augmented matrix always has full row rank; invertibility means
    // the left block reduced to the identity
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++)
            if (W[i][j] != (i == j ? 1u : 0u))
                throw SingularMinor("fmat_inverse: singular matrix");
    FMat R(n, std::vector<Field::Elem>(n, 0));
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) R[i][j] = W[i][n + j];
    return R;
}

// ------------------------------------------------------------- GammaBasis

GammaBasis::GammaBasis(FieldPtr ext, std::vector<Field::Elem> elems)
    : ext_(std::move(ext)), elems_(std::move(elems)) {
    if (!ext_ || ext_->is_prime_field())
        throw BadParams("GammaBasis requires an extension field");
    base_ = ext_->base();
    int m = ext_->ext_degree();
    if (static_cast<int>(elems_.size()) != m)
        throw BadDegree("GammaBasis: need ext_degree() elements");
    FMat M(m);
    for (int i = 0; i < m; i++) M[i] = ext_->digits(elems_[i]);
    try {
        inv_ = fmat_inverse(base_, M);
    } catch (const SingularMinor&) {
        throw BadParams("GammaBasis: elements are not linearly independent");
    }
}

GammaBasis GammaBasis::polynomial(FieldPtr ext) {
    if (!ext || ext->is_prime_field())
        throw BadParams("GammaBasis requires an extension field");
    std::vector<Field::Elem> elems;
    for (int i = 0; i < ext->ext_degree(); i++)
        elems.push_back(ext->pow(ext->x(), i));
    return GammaBasis(std::move(ext), std::move(elems));
}

std::vector<Field::Elem> GammaBasis::coords(Field::Elem a) const {
    std::vector<Field::Elem> d = ext_->digits(a);
    int m = this->m();
    std::vector<Field::Elem> out(m, 0);
    for (int i = 0; i < m; i++) {
        if (d[i] == 0) continue;
        for (int j = 0; j < m; j++)
            out[j] = base_->add(out[j], base_->mul(d[i], inv_[i][j]));
    }
    return out;
}

FMat GammaBasis::expand(const std::vector<Field::Elem>& v) const {
    int m = this->m();
    FMat M(m, std::vector<Field::Elem>(v.size(), 0));
    for (size_t j = 0; j < v.size(); j++) {
        std::vector<Field::Elem> c = coords(v[j]);
        for (int i = 0; i < m; i++) M[i][j] = c[i];
    }
    return M;
}

}  // namespace qpm
