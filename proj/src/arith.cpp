#include "hz/arith.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace hz {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("division by zero");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw DomainError("not a rational number: " + s);
    }
}

bool is_integer(const Rat& x) { return x.get_den() == 1; }

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int mod_floor(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r < 0) r += abs(b);
    return r;
}

long gcd0(long x, long y) { return std::gcd(x, y); }

long mod_floor(long a, long m) {
    m = std::labs(m);
    long r = a % m;
    return r < 0 ? r + m : r;
}

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    for (auto& x : c_) x.canonicalize();
    trim();
}

QPoly QPoly::monomial(const Rat& c, std::size_t deg) {
    std::vector<Rat> v(deg + 1, Rat(0));
    v[deg] = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + o * Rat(-1); }

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const Rat& s) const {
    std::vector<Rat> v(c_);
    for (auto& x : v) x *= s;
    return QPoly(std::move(v));
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rat> r = a.c_;
    int db = b.degree();
    std::vector<Rat> q(std::max(0, a.degree() - db + 1), Rat(0));
    for (int d = a.degree(); d >= db; --d) {
        Rat f = r[d] / b.lead();
        if (f == 0) continue;
        q[d - db] = f;
        for (int i = 0; i <= db; ++i) r[d - db + i] -= f * b.c_[i];
    }
    quot = QPoly(std::move(q));
    rem = QPoly(std::move(r));
}

std::string QPoly::str(const char* var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Rat& c = c_[d];
        if (c == 0) continue;
        Rat m = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (d == 0 || m != 1) os << to_string(m);
        if (d > 0) os << var;
        if (d > 1) os << "^" << d;
        first = false;
    }
    return os.str();
}

static std::vector<int> divisors(int n) {
    std::vector<int> d;
    for (int i = 1; i <= n; ++i)
        if (n % i == 0) d.push_back(i);
    return d;
}

QPoly cyclotomic_poly(int n) {
    if (n < 1) throw DomainError("cyclotomic order must be positive");
    static std::mutex mu;
    static std::unordered_map<int, QPoly> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    QPoly num = QPoly::monomial(Rat(1), n) - QPoly::monomial(Rat(1), 0);
    QPoly den = QPoly::monomial(Rat(1), 0);
    for (int d : divisors(n))
        if (d < n) den = den * cyclotomic_poly(d);
    QPoly q, r;
    QPoly::divmod(num, den, q, r);
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(n, q);
    return q;
}

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

// ------------------------------------------------------------ Cyclotomic

static std::vector<Rat> pad(std::vector<Rat> v, std::size_t len) {
    v.resize(len, Rat(0));
    return v;
}

Cyclotomic::Cyclotomic(int order, std::vector<Rat> coeffs) : n_(order) {
    if (order < 1) throw DomainError("cyclotomic order must be positive");
    QPoly q, r;
    QPoly::divmod(QPoly(std::move(coeffs)), cyclotomic_poly(order), q, r);
    c_ = pad(r.coeffs(), euler_phi(order));
}

Cyclotomic::Cyclotomic(int order, const QPoly& residue) : n_(order) {
    QPoly q, r;
    QPoly::divmod(residue, cyclotomic_poly(order), q, r);
    c_ = pad(r.coeffs(), euler_phi(order));
}

Cyclotomic Cyclotomic::zero(int order) { return Cyclotomic(order, std::vector<Rat>{}); }

Cyclotomic Cyclotomic::constant(int order, const Rat& c) {
    return Cyclotomic(order, std::vector<Rat>{c});
}

Cyclotomic Cyclotomic::zeta_pow(int order, long k) {
    long e = mod_floor(k, order);
    return Cyclotomic(order, QPoly::monomial(Rat(1), static_cast<std::size_t>(e)));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
}

void Cyclotomic::check_same(const Cyclotomic& o) const {
    if (n_ != o.n_) throw DomainError("cyclotomic order mismatch");
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    check_same(o);
    Cyclotomic r(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + o * Rat(-1); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    check_same(o);
    return Cyclotomic(n_, as_poly() * o.as_poly());
}

Cyclotomic Cyclotomic::operator*(const Rat& s) const {
    Cyclotomic r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const { return *this * cyc_inverse(o); }

Cyclotomic cyc_inverse(const Cyclotomic& z) {
    if (z.is_zero()) throw DomainError("division by zero in cyclotomic field");
    // extended Euclid: s*z + t*Phi = g, g a nonzero constant since Phi is irreducible
    QPoly r0 = cyclotomic_poly(z.order()), r1(z.coeffs());
    QPoly s0, s1 = QPoly::monomial(Rat(1), 0);
    while (r1.degree() > 0) {
        QPoly q, r;
        QPoly::divmod(r0, r1, q, r);
        QPoly s = s0 - q * s1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    // r1 is a nonzero constant
    QPoly inv = s1 * (Rat(1) / r1.lead());
    return Cyclotomic(z.order(), inv.coeffs());
}

Rat rational_part(const Cyclotomic& z) {
    const auto& c = z.coeffs();
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) throw DomainError("cyclotomic element is not rational");
    return c.empty() ? Rat(0) : c[0];
}

// -------------------------------------------------------- HalfExpLaurent

HalfExpLaurent HalfExpLaurent::monomial(long exp2, const Rat& c, long min2exp) {
    HalfExpLaurent s(min2exp);
    s.add_term(exp2, c);
    return s;
}

Rat HalfExpLaurent::coeff(long exp2) const {
    if (exp2 < min2_) throw DomainError("coefficient requested below the exact window");
    auto it = t_.find(exp2);
    return it == t_.end() ? Rat(0) : it->second;
}

void HalfExpLaurent::add_term(long exp2, const Rat& c) {
    if (exp2 < min2_ || c == 0) return;
    Rat v(c);
    v.canonicalize();
    auto [it, fresh] = t_.emplace(exp2, v);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

HalfExpLaurent HalfExpLaurent::truncated(long min2exp) const {
    HalfExpLaurent s(std::max(min2exp, min2_));
    for (const auto& [e, c] : t_) s.add_term(e, c);
    return s;
}

HalfExpLaurent HalfExpLaurent::shifted(long d2) const {
    HalfExpLaurent s(min2_ + d2);
    for (const auto& [e, c] : t_) s.t_.emplace(e + d2, c);
    return s;
}

HalfExpLaurent HalfExpLaurent::operator+(const HalfExpLaurent& o) const {
    HalfExpLaurent s(std::max(min2_, o.min2_));
    for (const auto& [e, c] : t_) s.add_term(e, c);
    for (const auto& [e, c] : o.t_) s.add_term(e, c);
    return s;
}

HalfExpLaurent HalfExpLaurent::operator-(const HalfExpLaurent& o) const {
    return *this + o * Rat(-1);
}

HalfExpLaurent HalfExpLaurent::operator*(const Rat& s) const {
    HalfExpLaurent r(min2_);
    for (const auto& [e, c] : t_) r.add_term(e, c * s);
    return r;
}

HalfExpLaurent HalfExpLaurent::operator*(const HalfExpLaurent& o) const {
    // unknown terms of one factor lie below its cutoff; they can only reach
    // exponents below cutoff + partner's top exponent
    long cut = std::max(min2_ + o.max2exp(), o.min2_ + max2exp());
    HalfExpLaurent r(cut);
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_) {
            if (e1 + e2 < cut) break;
            r.add_term(e1 + e2, c1 * c2);
        }
    return r;
}

std::string HalfExpLaurent::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        Rat m = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool unit = (m == 1);
        if (!unit || e == 0) os << to_string(m);
        if (e != 0) {
            if (!unit) os << "*";
            os << "q";
            if (e != 2) {
                if (e % 2 == 0) os << "^" << e / 2;
                else os << "^(" << e << "/2)";
            }
        }
        first = false;
    }
    return os.str();
}

HalfExpLaurent laurent_mul(const HalfExpLaurent& a, const HalfExpLaurent& b) { return a * b; }

HalfExpLaurent geometric_factor(const Rat& c, int e, long min2exp) {
    if (c <= 0) throw DomainError("geometric step must be positive");
    if (e < 0) throw DomainError("geometric power must be nonnegative");
    Rat c2 = c * 2;
    if (!is_integer(c2)) throw DomainError("geometric step must be a half-integer");
    long step = c2.get_num().get_si();
    HalfExpLaurent s(min2exp);
    // coefficient of q^{-cj} is binom(j+e-1, e-1)
    Int binom = 1;
    for (long j = 0; -step * j >= min2exp; ++j) {
        if (e == 0) {
            s.add_term(0, Rat(1));
            break;
        }
        s.add_term(-step * j, Rat(binom));
        binom = binom * (j + e) / (j + 1);
    }
    return s;
}

// -------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    for (auto& x : c_) x.canonicalize();
    trim();
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + o * Rat(-1); }

RatPoly RatPoly::operator*(const Rat& s) const {
    std::vector<Rat> v(c_);
    for (auto& x : v) x *= s;
    return RatPoly(std::move(v));
}

std::string RatPoly::str() const { return QPoly(c_).str("T"); }

RatPoly RatPoly::interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    // Lagrange basis accumulated in coefficient form
    std::size_t n = xs.size();
    std::vector<Rat> acc(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> basis{Rat(1)};
        Rat den = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * xs[j];
            }
            basis = std::move(next);
            den *= xs[i] - xs[j];
        }
        for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * ys[i] / den;
    }
    return RatPoly(std::move(acc));
}

}  // namespace hz
