#include "fd2p/fields.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <string>

namespace fd2p {

namespace {

constexpr uint32_t kMaxDegree = 32;

// ---- polynomial helpers over F_p (dense, constant term first) ----

using Poly = std::vector<uint64_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
    }
    trim(r);
    return r;
}

// Remainder of a modulo the monic polynomial f.
Poly poly_mod(Poly a, const Poly& f, uint64_t p) {
    const size_t deg_f = f.size() - 1;
    trim(a);
    while (a.size() > deg_f) {
        const uint64_t lead = a.back();
        const size_t shift = a.size() - 1 - deg_f;
        if (lead != 0) {
            for (size_t j = 0; j < deg_f; ++j) {
                const uint64_t t = (lead * f[j]) % p;
                a[shift + j] = (a[shift + j] + p - t) % p;
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly poly_sub(Poly a, const Poly& b, uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic so poly_mod applies
        uint64_t lead = b.back();
        if (lead != 1) {
            // lead^{p-2} mod p
            uint64_t inv = 1, base = lead, e = p - 2;
            while (e) {
                if (e & 1) inv = (inv * base) % p;
                base = (base * base) % p;
                e >>= 1;
            }
            for (auto& c : b) c = (c * inv) % p;
        }
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// g^p mod f by square-and-multiply on the exponent p.
Poly poly_pow_p(const Poly& g, const Poly& f, uint64_t p) {
    Poly result{1};
    Poly base = g;
    uint64_t e = p;
    while (e) {
        if (e & 1) result = poly_mod(poly_mul(result, base, p), f, p);
        base = poly_mod(poly_mul(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

bool has_root(const Poly& f, uint64_t p) {
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t v = 0;
        for (size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
        if (v == 0) return true;
    }
    return false;
}

// Frobenius-power criterion: f (monic, degree n) is irreducible over F_p iff
// x^{p^n} = x mod f and gcd(x^{p^{n/q}} - x, f) = 1 for each prime q | n.
bool rabin_irreducible(const Poly& f, uint64_t p) {
    const uint32_t n = static_cast<uint32_t>(f.size() - 1);
    std::vector<uint32_t> prime_divisors;
    uint32_t m = n;
    for (uint32_t q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            prime_divisors.push_back(q);
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) prime_divisors.push_back(m);

    const Poly x{0, 1};
    Poly frob = x; // x^{p^k} mod f, k steps so far
    uint32_t k = 0;
    auto advance_to = [&](uint32_t target) {
        while (k < target) {
            frob = poly_pow_p(frob, f, p);
            ++k;
        }
    };
    // Divisor exponents in increasing order, then n itself.
    std::vector<uint32_t> steps;
    for (uint32_t q : prime_divisors) steps.push_back(n / q);
    std::sort(steps.begin(), steps.end());
    for (uint32_t s : steps) {
        advance_to(s);
        Poly g = poly_gcd(poly_sub(frob, x, p), f, p);
        if (!(g.size() == 1 && g[0] != 0)) return false;
    }
    advance_to(n);
    Poly diff = poly_sub(frob, x, p);
    return diff.empty();
}

} // namespace

bool is_prime(uint64_t m) {
    if (m < 2) return false;
    for (uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) return false;
    }
    return true;
}

bool is_irreducible(const std::vector<uint64_t>& poly, uint64_t p) {
    if (poly.size() < 2 || poly.back() != 1) return false;
    const uint32_t n = static_cast<uint32_t>(poly.size() - 1);
    if (n == 1) return true;
    if (n <= 3) return !has_root(poly, p);
    return rabin_irreducible(poly, p);
}

std::string poly_to_string(const std::vector<uint64_t>& poly) {
    std::string s = "[";
    for (size_t i = 0; i < poly.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(poly[i]);
    }
    return s + "]";
}

std::vector<uint64_t> poly_from_string(const std::string& s) {
    std::vector<uint64_t> out;
    std::string digits;
    for (char c : s) {
        if (c >= '0' && c <= '9') {
            digits += c;
        } else if (c == ',' || c == ']') {
            if (!digits.empty()) {
                out.push_back(std::stoull(digits));
                digits.clear();
            }
        } else if (c != '[' && c != ' ') {
            throw std::invalid_argument("poly_from_string: bad character in '" + s + "'");
        }
    }
    if (!digits.empty()) out.push_back(std::stoull(digits));
    if (out.empty()) throw std::invalid_argument("poly_from_string: empty polynomial");
    return out;
}

std::vector<uint64_t> find_irreducible(uint64_t p, uint32_t n) {
    if (!is_prime(p) || p < 3) {
        throw std::invalid_argument("find_irreducible: characteristic p > 2 required");
    }
    if (n < 1 || n > kMaxDegree) {
        throw std::invalid_argument("find_irreducible: degree out of range");
    }
    // Enumerate lower-coefficient tuples by increasing digit value
    // (c_0 least significant); an irreducible of every degree exists,
    // so the loop terminates.
    std::vector<uint64_t> candidate(n + 1, 0);
    candidate[n] = 1;
    for (uint64_t idx = 0;; ++idx) {
        uint64_t v = idx;
        for (uint32_t i = 0; i < n; ++i) {
            candidate[i] = v % p;
            v /= p;
        }
        if (v != 0) break; // exhausted; unreachable mathematically
        if (is_irreducible(candidate, p)) return candidate;
    }
    throw std::logic_error("find_irreducible: no irreducible polynomial found");
}

// ---- Field ----

Field::Field(uint64_t p, uint32_t n) : Field(p, n, find_irreducible(p, n)) {}

Field::Field(uint64_t p, uint32_t n, std::vector<uint64_t> modulus)
    : p_(p), n_(n), f_(std::move(modulus)) {
    validate();
    ppow_.resize(n_ + 1);
    ppow_[0] = 1;
    for (uint32_t i = 1; i <= n_; ++i) ppow_[i] = ppow_[i - 1] * p_;
    order_ = ppow_[n_];
}

void Field::validate() const {
    if (p_ < 3 || !is_prime(p_)) {
        throw std::invalid_argument("Field: characteristic p > 2 required (odd prime)");
    }
    if (p_ > (uint64_t{1} << 31)) {
        throw std::invalid_argument("Field: characteristic too large for this representation");
    }
    if (n_ < 1 || n_ > kMaxDegree) {
        throw std::invalid_argument("Field: extension degree out of range");
    }
    // p^n must fit comfortably in 64 bits for the digit encoding.
    long double size = 1.0L;
    for (uint32_t i = 0; i < n_; ++i) size *= static_cast<long double>(p_);
    if (size > 9.2e18L) {
        throw std::invalid_argument("Field: p^n too large for this representation");
    }
    if (f_.size() != static_cast<size_t>(n_) + 1 || f_.back() != 1) {
        throw std::invalid_argument("Field: modulus must be monic of degree n");
    }
    for (uint64_t c : f_) {
        if (c >= p_) throw std::invalid_argument("Field: modulus coefficient not reduced mod p");
    }
    if (!is_irreducible(f_, p_)) {
        throw std::invalid_argument("Field: modulus is reducible over F_p");
    }
}

FieldElement Field::alpha() const {
    if (n_ >= 2) return {this, p_};
    // n = 1: alpha is the root of the linear modulus, x = -f_0.
    return {this, (p_ - f_[0]) % p_};
}

FieldElement Field::from_int(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p_);
    if (r < 0) r += static_cast<int64_t>(p_);
    return {this, static_cast<uint64_t>(r)};
}

FieldElement Field::from_residues(const std::vector<uint64_t>& c) const {
    if (c.size() > n_) throw std::invalid_argument("from_residues: too many coefficients");
    uint64_t rep = 0;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) throw std::invalid_argument("from_residues: coefficient not reduced mod p");
        rep = rep * p_ + c[i];
    }
    return {this, rep};
}

FieldElement Field::element(uint64_t index) const {
    if (index >= order_) throw std::out_of_range("Field::element: index out of range");
    return {this, index};
}

uint64_t Field::add_rep(uint64_t a, uint64_t b) const {
    if (n_ == 1) {
        uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint64_t r = 0;
    for (uint32_t i = 0; i < n_; ++i) {
        uint64_t da = (a / ppow_[i]) % p_;
        uint64_t db = (b / ppow_[i]) % p_;
        uint64_t s = da + db;
        if (s >= p_) s -= p_;
        r += s * ppow_[i];
    }
    return r;
}

uint64_t Field::sub_rep(uint64_t a, uint64_t b) const {
    return add_rep(a, neg_rep(b));
}

uint64_t Field::neg_rep(uint64_t a) const {
    if (n_ == 1) return a == 0 ? 0 : p_ - a;
    uint64_t r = 0;
    for (uint32_t i = 0; i < n_; ++i) {
        uint64_t d = (a / ppow_[i]) % p_;
        r += (d == 0 ? 0 : p_ - d) * ppow_[i];
    }
    return r;
}

uint64_t Field::mul_rep(uint64_t a, uint64_t b) const {
    if (n_ == 1) return (a * b) % p_;
    std::array<uint64_t, 2 * kMaxDegree> t{};
    std::array<uint64_t, kMaxDegree> da{}, db{};
    for (uint32_t i = 0; i < n_; ++i) {
        da[i] = (a / ppow_[i]) % p_;
        db[i] = (b / ppow_[i]) % p_;
    }
    for (uint32_t i = 0; i < n_; ++i) {
        if (da[i] == 0) continue;
        for (uint32_t j = 0; j < n_; ++j) {
            t[i + j] = (t[i + j] + da[i] * db[j]) % p_;
        }
    }
    // reduce by the monic modulus from the top
    for (uint32_t k = 2 * n_ - 2; k >= n_; --k) {
        const uint64_t c = t[k];
        if (c != 0) {
            t[k] = 0;
            for (uint32_t j = 0; j < n_; ++j) {
                const uint64_t sub = (c * f_[j]) % p_;
                t[k - n_ + j] = (t[k - n_ + j] + p_ - sub) % p_;
            }
        }
    }
    uint64_t r = 0;
    for (uint32_t i = 0; i < n_; ++i) {
        r += t[i] * ppow_[i];
    }
    return r;
}

uint64_t Field::inv_rep(uint64_t a) const {
    if (a == 0) throw std::domain_error("field division by zero");
    return pow_rep(a, order_ - 2);
}

uint64_t Field::pow_rep(uint64_t a, uint64_t e) const {
    uint64_t result = 1;
    uint64_t base = a;
    while (e) {
        if (e & 1) result = mul_rep(result, base);
        base = mul_rep(base, base);
        e >>= 1;
    }
    return result;
}

// ---- FieldElement ----

std::vector<uint64_t> FieldElement::residues() const {
    const uint64_t p = field_->characteristic();
    std::vector<uint64_t> c(field_->degree());
    uint64_t v = rep_;
    for (auto& d : c) {
        d = v % p;
        v /= p;
    }
    return c;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(*field_, *o.field_);
    return {field_, field_->add_rep(rep_, o.rep_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(*field_, *o.field_);
    return {field_, field_->sub_rep(rep_, o.rep_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(*field_, *o.field_);
    return {field_, field_->mul_rep(rep_, o.rep_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same_field(*field_, *o.field_);
    return {field_, field_->mul_rep(rep_, field_->inv_rep(o.rep_))};
}

FieldElement FieldElement::operator-() const {
    return {field_, field_->neg_rep(rep_)};
}

FieldElement FieldElement::inverse() const {
    return {field_, field_->inv_rep(rep_)};
}

FieldElement FieldElement::pow(uint64_t e) const {
    return {field_, field_->pow_rep(rep_, e)};
}

bool FieldElement::operator==(const FieldElement& o) const {
    check_same_field(*field_, *o.field_);
    return rep_ == o.rep_;
}

} // namespace fd2p
