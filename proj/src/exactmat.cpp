#include "ascheme/exactmat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>

namespace ascheme {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
    if (rows == 0 || cols == 0)
        throw LinAlgError("matrix dimensions must be positive");
}

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_ints(const std::vector<std::vector<long long>>& rows)
{
    if (rows.empty() || rows.front().empty())
        throw LinAlgError("matrix dimensions must be positive");
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols())
            throw LinAlgError("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

bool RatMatrix::is_integral() const
{
    return std::all_of(data_.begin(), data_.end(),
                       [](const Rational& x) { return denominator(x) == 1; });
}

RatMatrix RatMatrix::transposed() const
{
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b)
{
    if (a.cols() != b.rows())
        throw LinAlgError("dimension mismatch in product");
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw LinAlgError("dimension mismatch in sum");
    RatMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j) + b(i, j);
    return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw LinAlgError("dimension mismatch in difference");
    RatMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j) - b(i, j);
    return out;
}

RatMatrix operator*(const Rational& s, const RatMatrix& m)
{
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = s * m(i, j);
    return out;
}

RatVector operator*(const RatMatrix& m, const RatVector& x)
{
    if (m.cols() != x.size())
        throw LinAlgError("dimension mismatch in matrix-vector product");
    RatVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i] += m(i, j) * x[j];
    return out;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPolynomial IntPolynomial::from_roots(const std::vector<long long>& roots)
{
    std::vector<BigInt> c{1};
    for (long long r : roots) {
        std::vector<BigInt> next(c.size() + 1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= c[i] * r;
        }
        c = std::move(next);
    }
    return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::operator()(const BigInt& x) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix to_int_matrix(const RatMatrix& m)
{
    IntMatrix out(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (denominator(m(i, j)) != 1)
                throw LinAlgError("matrix entry is not integral");
            out[i][j] = numerator(m(i, j));
        }
    return out;
}

// Scales every row by the lcm of its denominators.
IntMatrix clear_denominators(const RatMatrix& m)
{
    IntMatrix out(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            l = boost::multiprecision::lcm(l, BigInt(denominator(m(i, j))));
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = numerator(m(i, j)) * (l / denominator(m(i, j)));
    }
    return out;
}

struct Echelon {
    IntMatrix rows;                  // row echelon form, fraction-free
    std::vector<std::size_t> pivots; // pivot column per nonzero row
    int swaps = 0;
};

// Bareiss fraction-free elimination to row echelon form. Every division is
// exact because intermediate entries are minors of the input.
Echelon bareiss(IntMatrix m)
{
    Echelon e;
    const std::size_t nr = m.size();
    const std::size_t nc = nr ? m[0].size() : 0;
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && m[p][c] == 0)
            ++p;
        if (p == nr)
            continue;
        if (p != r) {
            std::swap(m[p], m[r]);
            ++e.swaps;
        }
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = c + 1; j < nc; ++j) {
                BigInt num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                m[i][j] = num / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        e.pivots.push_back(c);
        ++r;
    }
    e.rows = std::move(m);
    return e;
}

} // namespace

IntPolynomial char_poly(const RatMatrix& m)
{
    if (!m.square())
        throw LinAlgError("char_poly: matrix is not square");
    const IntMatrix a = to_int_matrix(m);
    const std::size_t n = a.size();

    // c[n] = 1; M_k = A M_{k-1} + c[n-k+1] I; c[n-k] = -tr(A M_k) / k.
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    IntMatrix mk(n, std::vector<BigInt>(n));
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix next(n, std::vector<BigInt>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) {
                if (a[i][l] == 0)
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    next[i][j] += a[i][l] * mk[l][j];
            }
            next[i][i] += c[n - k + 1];
        }
        mk = std::move(next);
        BigInt tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                tr += a[i][l] * mk[l][i];
        c[n - k] = -tr / static_cast<long>(k);
    }
    return IntPolynomial(std::move(c));
}

namespace {

constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

std::uint64_t mod61(const BigInt& x)
{
    BigInt r = x % BigInt(kMersenne61);
    if (r < 0)
        r += kMersenne61;
    return r.convert_to<std::uint64_t>();
}

std::uint64_t mulmod61(std::uint64_t a, std::uint64_t b)
{
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kMersenne61);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t s = lo + hi;
    return s >= kMersenne61 ? s - kMersenne61 : s;
}

// Divides by (x - r) when r is a root; returns false otherwise.
bool deflate(std::vector<BigInt>& c, long long r)
{
    const std::size_t n = c.size() - 1;
    std::vector<BigInt> q(n);
    BigInt carry = 0;
    for (std::size_t i = n; i-- > 0;) {
        carry = c[i + 1] + carry * r;
        q[i] = carry;
    }
    if (c[0] + carry * r != 0)
        return false;
    c = std::move(q);
    return true;
}

long long fujiwara_bound(const std::vector<BigInt>& c)
{
    const std::size_t n = c.size() - 1;
    double best = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        double a = std::fabs(c[n - i].convert_to<double>());
        if (i == n)
            a /= 2;
        best = std::max(best, std::pow(a, 1.0 / static_cast<double>(i)));
    }
    double b = std::ceil(2 * best) + 1;
    return b > 9e15 ? static_cast<long long>(9e15) : static_cast<long long>(b);
}

} // namespace

IntegerRoots integer_roots(const IntPolynomial& p, std::optional<long long> root_bound)
{
    if (!p.is_monic())
        throw LinAlgError("integer_roots: polynomial must be monic and nonzero");
    IntegerRoots out;
    std::vector<BigInt> c = p.coeffs();

    while (c.size() > 1 && c[0] == 0) {
        out.roots.push_back(0);
        c.erase(c.begin());
    }
    if (c.size() > 1) {
        long long bound = root_bound ? *root_bound : fujiwara_bound(c);
        BigInt a0 = abs(c[0]);
        if (a0 < bound)
            bound = a0.convert_to<long long>();
        constexpr long long kScanLimit = 200'000'000;
        if (bound > kScanLimit)
            throw LinAlgError("integer_roots: root bound too large to scan");

        std::vector<std::uint64_t> residues;
        auto refresh = [&] {
            residues.clear();
            for (const auto& x : c)
                residues.push_back(mod61(x));
        };
        refresh();
        auto eval_mod = [&](long long r) {
            std::uint64_t x = r >= 0 ? static_cast<std::uint64_t>(r)
                                     : kMersenne61 - static_cast<std::uint64_t>(-r);
            std::uint64_t acc = 0;
            for (std::size_t i = residues.size(); i-- > 0;) {
                acc = mulmod61(acc, x) + residues[i];
                if (acc >= kMersenne61)
                    acc -= kMersenne61;
            }
            return acc;
        };
        for (long long mag = 1; mag <= bound && c.size() > 1; ++mag) {
            for (long long r : {-mag, mag}) {
                if (c.size() == 2) {
                    // monic linear remainder: x + c0
                    if (c[0] == -r) {
                        out.roots.push_back(r);
                        c.erase(c.begin());
                    }
                    continue;
                }
                if (c.size() > 1 && eval_mod(r) == 0) {
                    bool found = false;
                    while (c.size() > 1 && deflate(c, r)) {
                        out.roots.push_back(r);
                        found = true;
                    }
                    if (found)
                        refresh();
                }
            }
        }
    }
    out.residual_degree = static_cast<int>(c.size()) - 1;
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

std::vector<RatVector> kernel_basis(const RatMatrix& m)
{
    const std::size_t nc = m.cols();
    Echelon e = bareiss(clear_denominators(m));
    std::vector<bool> is_pivot(nc, false);
    for (auto c : e.pivots)
        is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f])
            continue;
        RatVector x(nc);
        x[f] = 1;
        for (std::size_t r = e.pivots.size(); r-- > 0;) {
            const std::size_t pc = e.pivots[r];
            Rational s = 0;
            for (std::size_t j = pc + 1; j < nc; ++j)
                if (e.rows[r][j] != 0)
                    s += Rational(e.rows[r][j]) * x[j];
            x[pc] = -s / Rational(e.rows[r][pc]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::size_t rank(const RatMatrix& m)
{
    return bareiss(clear_denominators(m)).pivots.size();
}

Rational determinant(const RatMatrix& m)
{
    if (!m.square())
        throw LinAlgError("determinant: matrix is not square");
    // Row scaling multiplies the determinant; undo it afterwards.
    Rational scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            l = boost::multiprecision::lcm(l, BigInt(denominator(m(i, j))));
        scale *= Rational(l);
    }
    Echelon e = bareiss(clear_denominators(m));
    if (e.pivots.size() < m.rows())
        return 0;
    Rational det = Rational(e.rows.back().back());
    if (e.swaps % 2)
        det = -det;
    return det / scale;
}

RatMatrix mat_inverse(const RatMatrix& m)
{
    if (!m.square())
        throw LinAlgError("mat_inverse: matrix is not square");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            throw LinAlgError("mat_inverse: matrix is singular");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        const Rational piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0)
                continue;
            const Rational f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::string to_string(const Rational& r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace ascheme
