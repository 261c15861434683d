#pragma once

// Finite fields GF(p^k) with log/antilog tables, plus 3-vectors and 3x3
// symmetric matrices over them.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ascheme {

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Field elements are integers 0..q-1 whose base-p digits are the polynomial
/// coefficients (constant term in the lowest digit).
using Elem = std::uint32_t;

class Field {
public:
    /// GF(p^k) with the lexicographically least irreducible monic modulus
    /// (coefficients compared constant term first) and the least primitive
    /// element.
    Field(unsigned p, unsigned k);

    /// GF(q) for a prime power q.
    static Field of_order(unsigned q);

    unsigned characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    unsigned order() const { return q_; }
    /// Modulus coefficients, constant term first, length k+1 (monic).
    const std::vector<unsigned>& modulus() const { return modulus_; }
    Elem generator() const { return generator_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, long long e) const;
    Elem cube(Elem a) const { return mul(a, mul(a, a)); }

    /// Discrete log base the generator; a must be nonzero.
    unsigned log(Elem a) const;
    Elem exp(long long e) const;
    /// Multiplicative order of a nonzero element.
    unsigned mult_order(Elem a) const;

private:
    unsigned p_;
    unsigned k_;
    unsigned q_;
    std::vector<unsigned> modulus_;
    Elem generator_ = 0;
    std::vector<Elem> exp_;
    std::vector<unsigned> log_;
};

bool is_prime(unsigned long long n);
/// Returns (p, k) with q = p^k, or throws when q is not a prime power.
std::pair<unsigned, unsigned> prime_power(unsigned long long q);
std::vector<unsigned long long> prime_factors(unsigned long long n);

using Vec3 = std::array<Elem, 3>;

Vec3 vadd(const Field& f, const Vec3& u, const Vec3& v);
Vec3 vsub(const Field& f, const Vec3& u, const Vec3& v);
Vec3 vscale(const Field& f, Elem c, const Vec3& u);
Vec3 cross(const Field& f, const Vec3& u, const Vec3& v);
Elem dot(const Field& f, const Vec3& u, const Vec3& v);

/// Encodes a vector over GF(q) as u0 + q*u1 + q^2*u2 (and back).
unsigned encode(const Field& f, const Vec3& u);
Vec3 decode3(const Field& f, unsigned code);

/// Upper triangle of a symmetric 3x3 matrix: (m00, m01, m02, m11, m12, m22).
struct SymMat3 {
    std::array<Elem, 6> e{};

    Elem at(int r, int c) const;
    static SymMat3 from_code(const Field& f, unsigned code);
    unsigned code(const Field& f) const;
};

SymMat3 sym_sub(const Field& f, const SymMat3& a, const SymMat3& b);
SymMat3 sym_scale(const Field& f, Elem c, const SymMat3& a);

struct SymRank {
    int rank = 0;
    bool alternating = false; // zero diagonal and rank 2
};

SymRank sym_rank(const Field& f, const SymMat3& m);

} // namespace ascheme
