#include "ascheme/gf.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ascheme {

bool is_prime(unsigned long long n)
{
    if (n < 2)
        return false;
    for (unsigned long long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<unsigned long long> prime_factors(unsigned long long n)
{
    std::vector<unsigned long long> out;
    for (unsigned long long d = 2; d * d <= n; ++d) {
        if (n % d)
            continue;
        out.push_back(d);
        while (n % d == 0)
            n /= d;
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

std::pair<unsigned, unsigned> prime_power(unsigned long long q)
{
    auto ps = prime_factors(q);
    if (q < 2 || ps.size() != 1)
        throw FieldError(std::to_string(q) + " is not a prime power");
    unsigned k = 0;
    for (unsigned long long x = q; x > 1; x /= ps[0])
        ++k;
    return {static_cast<unsigned>(ps[0]), k};
}

namespace {

using Poly = std::vector<unsigned>; // coefficients over GF(p), constant first

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, unsigned p)
{
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const unsigned lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = static_cast<unsigned>((a[shift + i] + 1ULL * (p - lead) * b[i]) % p);
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, unsigned p)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<unsigned>((r[i + j] + 1ULL * a[i] * b[j]) % p);
    return poly_mod(std::move(r), m, p);
}

// Monic polynomial of given degree from the lower coefficients in base p.
Poly monic_from_index(unsigned long long idx, unsigned deg, unsigned p)
{
    Poly a(deg + 1);
    for (unsigned i = 0; i < deg; ++i) {
        a[i] = static_cast<unsigned>(idx % p);
        idx /= p;
    }
    a[deg] = 1;
    return a;
}

bool irreducible(const Poly& f, unsigned p)
{
    const unsigned n = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; d <= n / 2; ++d) {
        unsigned long long count = 1;
        for (unsigned i = 0; i < d; ++i)
            count *= p;
        for (unsigned long long idx = 0; idx < count; ++idx)
            if (poly_mod(f, monic_from_index(idx, d, p), p).empty())
                return false;
    }
    return true;
}

Poly to_poly(Elem a, unsigned p, unsigned k)
{
    Poly r(k);
    for (unsigned i = 0; i < k; ++i) {
        r[i] = a % p;
        a /= p;
    }
    trim(r);
    return r;
}

Elem from_poly(const Poly& a, unsigned p)
{
    Elem r = 0;
    for (std::size_t i = a.size(); i-- > 0;)
        r = r * p + a[i];
    return r;
}

} // namespace

Field::Field(unsigned p, unsigned k) : p_(p), k_(k)
{
    if (!is_prime(p))
        throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (k == 0)
        throw FieldError("extension degree must be positive");
    unsigned long long q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > (1u << 20))
            throw FieldError("field order exceeds 2^20");
    }
    q_ = static_cast<unsigned>(q);

    // Lexicographic order with the constant term compared first: the
    // constant coefficient is the most significant digit of the search index.
    const unsigned long long count = q;
    for (unsigned long long idx = 0; idx < count; ++idx) {
        Poly cand(k + 1, 0);
        const unsigned long long x = idx;
        for (unsigned i = 0; i < k; ++i) {
            // digit i of idx, most significant first, lands on coefficient i
            unsigned long long place = 1;
            for (unsigned j = i + 1; j < k; ++j)
                place *= p;
            cand[i] = static_cast<unsigned>((x / place) % p);
        }
        cand[k] = 1;
        if (k == 1 || irreducible(cand, p)) {
            modulus_ = cand;
            break;
        }
    }

    const auto factors = prime_factors(q_ - 1);
    auto power = [&](const Poly& base, unsigned long long e) {
        Poly result{1};
        Poly b = base;
        while (e) {
            if (e & 1)
                result = poly_mulmod(result, b, modulus_, p_);
            b = poly_mulmod(b, b, modulus_, p_);
            e >>= 1;
        }
        return result;
    };
    for (Elem g = 1; g < q_; ++g) {
        const Poly gp = to_poly(g, p_, k_);
        bool primitive = true;
        for (auto r : factors)
            if (power(gp, (q_ - 1) / r) == Poly{1}) {
                primitive = false;
                break;
            }
        if (q_ == 2 || primitive) {
            generator_ = g;
            break;
        }
    }

    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    Poly cur{1};
    const Poly gp = to_poly(generator_, p_, k_);
    for (unsigned i = 0; i + 1 < q_; ++i) {
        const Elem e = from_poly(cur, p_);
        exp_[i] = e;
        log_[e] = i;
        cur = poly_mulmod(cur, gp, modulus_, p_);
    }
}

Field Field::of_order(unsigned q)
{
    auto [p, k] = prime_power(q);
    return Field(p, k);
}

Elem Field::add(Elem a, Elem b) const
{
    if (p_ == 2)
        return a ^ b;
    Elem r = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
        r += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return r;
}

Elem Field::neg(Elem a) const
{
    if (p_ == 2)
        return a;
    Elem r = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
        r += ((p_ - a % p_) % p_) * place;
        a /= p_;
        place *= p_;
    }
    return r;
}

Elem Field::mul(Elem a, Elem b) const
{
    if (a == 0 || b == 0)
        return 0;
    unsigned s = log_[a] + log_[b];
    if (s >= q_ - 1)
        s -= q_ - 1;
    return exp_[s];
}

Elem Field::inv(Elem a) const
{
    if (a == 0)
        throw FieldError("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, long long e) const
{
    if (a == 0) {
        if (e < 0)
            throw FieldError("inverse of zero");
        return e == 0 ? 1 : 0;
    }
    const long long n = q_ - 1;
    long long r = (static_cast<long long>(log_[a]) * (e % n)) % n;
    if (r < 0)
        r += n;
    return exp_[r];
}

unsigned Field::log(Elem a) const
{
    if (a == 0)
        throw FieldError("log of zero");
    return log_[a];
}

Elem Field::exp(long long e) const
{
    const long long n = q_ - 1;
    long long r = e % n;
    if (r < 0)
        r += n;
    return exp_[r];
}

unsigned Field::mult_order(Elem a) const
{
    if (a == 0)
        throw FieldError("order of zero");
    unsigned n = q_ - 1;
    unsigned l = log_[a];
    unsigned g = std::gcd(n, l);
    return n / g;
}

Vec3 vadd(const Field& f, const Vec3& u, const Vec3& v)
{
    return {f.add(u[0], v[0]), f.add(u[1], v[1]), f.add(u[2], v[2])};
}

Vec3 vsub(const Field& f, const Vec3& u, const Vec3& v)
{
    return {f.sub(u[0], v[0]), f.sub(u[1], v[1]), f.sub(u[2], v[2])};
}

Vec3 vscale(const Field& f, Elem c, const Vec3& u)
{
    return {f.mul(c, u[0]), f.mul(c, u[1]), f.mul(c, u[2])};
}

Vec3 cross(const Field& f, const Vec3& u, const Vec3& v)
{
    return {f.sub(f.mul(u[1], v[2]), f.mul(u[2], v[1])),
            f.sub(f.mul(u[2], v[0]), f.mul(u[0], v[2])),
            f.sub(f.mul(u[0], v[1]), f.mul(u[1], v[0]))};
}

Elem dot(const Field& f, const Vec3& u, const Vec3& v)
{
    return f.add(f.add(f.mul(u[0], v[0]), f.mul(u[1], v[1])), f.mul(u[2], v[2]));
}

unsigned encode(const Field& f, const Vec3& u)
{
    const unsigned q = f.order();
    return u[0] + q * (u[1] + q * u[2]);
}

Vec3 decode3(const Field& f, unsigned code)
{
    const unsigned q = f.order();
    return {code % q, (code / q) % q, code / (q * q)};
}

namespace {
constexpr int kSymIndex[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
}

Elem SymMat3::at(int r, int c) const
{
    return e[kSymIndex[r][c]];
}

SymMat3 SymMat3::from_code(const Field& f, unsigned code)
{
    SymMat3 m;
    for (auto& x : m.e) {
        x = code % f.order();
        code /= f.order();
    }
    return m;
}

unsigned SymMat3::code(const Field& f) const
{
    unsigned c = 0;
    for (std::size_t i = e.size(); i-- > 0;)
        c = c * f.order() + e[i];
    return c;
}

SymMat3 sym_sub(const Field& f, const SymMat3& a, const SymMat3& b)
{
    SymMat3 m;
    for (std::size_t i = 0; i < 6; ++i)
        m.e[i] = f.sub(a.e[i], b.e[i]);
    return m;
}

SymMat3 sym_scale(const Field& f, Elem c, const SymMat3& a)
{
    SymMat3 m;
    for (std::size_t i = 0; i < 6; ++i)
        m.e[i] = f.mul(c, a.e[i]);
    return m;
}

SymRank sym_rank(const Field& f, const SymMat3& m)
{
    std::array<std::array<Elem, 3>, 3> a{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            a[r][c] = m.at(r, c);

    int rank = 0;
    for (int col = 0; col < 3 && rank < 3; ++col) {
        int piv = rank;
        while (piv < 3 && a[piv][col] == 0)
            ++piv;
        if (piv == 3)
            continue;
        std::swap(a[piv], a[rank]);
        const Elem iv = f.inv(a[rank][col]);
        for (int r = 0; r < 3; ++r) {
            if (r == rank || a[r][col] == 0)
                continue;
            const Elem factor = f.mul(a[r][col], iv);
            for (int c = 0; c < 3; ++c)
                a[r][c] = f.sub(a[r][c], f.mul(factor, a[rank][c]));
        }
        ++rank;
    }
    const bool zero_diag = m.at(0, 0) == 0 && m.at(1, 1) == 0 && m.at(2, 2) == 0;
    return {rank, zero_diag && rank == 2};
}

} // namespace ascheme
