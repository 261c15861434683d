#pragma once

// Exact dense linear algebra over the integers and rationals, sized for
// intersection matrices of association schemes ((d+1) x (d+1), d small).

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ascheme {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

class LinAlgError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_ints(const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_integral() const;
    RatMatrix transposed() const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& s, const RatMatrix& m);

using RatVector = std::vector<Rational>;

RatVector operator*(const RatMatrix& m, const RatVector& x);

/// Integer polynomial, coefficients constant term first. The zero polynomial
/// has an empty coefficient list.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    /// prod (x - r) over the given roots.
    static IntPolynomial from_roots(const std::vector<long long>& roots);

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    BigInt operator()(const BigInt& x) const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// det(xI - m) for a square matrix with integral entries (Faddeev-LeVerrier,
/// every intermediate stays integral).
IntPolynomial char_poly(const RatMatrix& m);

struct IntegerRoots {
    std::vector<long long> roots; // ascending, with multiplicity
    int residual_degree = 0;      // degree of the part with no integer roots
};

/// All integer roots of a monic polynomial. When root_bound is given it must
/// bound the absolute value of every real root; otherwise a Fujiwara bound is
/// used.
IntegerRoots integer_roots(const IntPolynomial& p, std::optional<long long> root_bound = std::nullopt);

/// Right null space basis in reduced echelon form: each basis vector has a 1 in
/// its free column and 0 in every other free column.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Rank via fraction-free elimination.
std::size_t rank(const RatMatrix& m);

/// Determinant via Bareiss elimination.
Rational determinant(const RatMatrix& m);

RatMatrix mat_inverse(const RatMatrix& m);

std::string to_string(const Rational& r);

} // namespace ascheme
