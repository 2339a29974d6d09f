/**
 * @file arith.hpp
 * @brief Exact arithmetic: rationals, cyclotomic fields, half-exponent
 * Laurent series and polynomials in one variable.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hz {

using Int = mpz_class;
using Rat = mpq_class;

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat make_rat(const Int& num, const Int& den);
std::string to_string(const Int& x);
std::string to_string(const Rat& x);
Rat parse_rat(const std::string& s);
bool is_integer(const Rat& x);
Int floor_div(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& b);

// gcd with gcd(x,0) = |x|
long gcd0(long x, long y);
long mod_floor(long a, long m);

/// Dense polynomial over Q, ascending coefficients, no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs);
    static QPoly monomial(const Rat& c, std::size_t deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& lead() const { return c_.back(); }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rat& s) const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    // Euclidean division, divisor nonzero
    static void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
    std::string str(const char* var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

QPoly cyclotomic_poly(int n);
int euler_phi(int n);

/// Element of Q(zeta_n), stored as a residue modulo Phi_n.
class Cyclotomic {
public:
    Cyclotomic(int order, std::vector<Rat> coeffs);
    static Cyclotomic zero(int order);
    static Cyclotomic constant(int order, const Rat& c);
    static Cyclotomic zeta_pow(int order, long k);

    int order() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator*(const Rat& s) const;
    Cyclotomic operator/(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    bool operator==(const Cyclotomic& o) const { return n_ == o.n_ && c_ == o.c_; }

private:
    Cyclotomic(int order, const QPoly& residue);
    QPoly as_poly() const { return QPoly(c_); }
    void check_same(const Cyclotomic& o) const;
    int n_;
    std::vector<Rat> c_;
};

Cyclotomic cyc_inverse(const Cyclotomic& z);
Rat rational_part(const Cyclotomic& z);

/// Truncated Laurent series in q with exponents in (1/2)Z.
/// Term q^e is stored under key 2e; coefficients below min2exp are unknown.
class HalfExpLaurent {
public:
    using Terms = std::map<long, Rat, std::greater<long>>;

    explicit HalfExpLaurent(long min2exp = 0) : min2_(min2exp) {}
    static HalfExpLaurent monomial(long exp2, const Rat& c, long min2exp);

    long min2exp() const { return min2_; }
    const Terms& terms() const { return t_; }
    bool empty() const { return t_.empty(); }
    Rat coeff(long exp2) const;
    long max2exp() const { return t_.empty() ? min2_ : t_.begin()->first; }

    void add_term(long exp2, const Rat& c);
    HalfExpLaurent truncated(long min2exp) const;
    HalfExpLaurent shifted(long d2) const;  // multiply by q^{d2/2}

    HalfExpLaurent operator+(const HalfExpLaurent& o) const;
    HalfExpLaurent operator-(const HalfExpLaurent& o) const;
    HalfExpLaurent operator*(const HalfExpLaurent& o) const;
    HalfExpLaurent operator*(const Rat& s) const;
    bool operator==(const HalfExpLaurent& o) const { return min2_ == o.min2_ && t_ == o.t_; }

    std::string str() const;

private:
    long min2_;
    Terms t_;
};

HalfExpLaurent laurent_mul(const HalfExpLaurent& a, const HalfExpLaurent& b);
// (1 - q^{-c})^{-e}; c given as a rational with 2c integral
HalfExpLaurent geometric_factor(const Rat& c, int e, long min2exp);

/// Polynomial in T with rational coefficients.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat eval(const Rat& x) const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const Rat& s) const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }
    std::string str() const;

    // unique polynomial of degree < xs.size() through the points
    static RatPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

private:
    void trim();
    std::vector<Rat> c_;
};

}  // namespace hz
