#include "ascheme/srg.hpp"

#include <cmath>
#include <sstream>

namespace ascheme {

std::optional<long long> exact_sqrt(long long v)
{
    if (v < 0)
        return std::nullopt;
    auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<long double>(v))));
    while (r * r > v)
        --r;
    while ((r + 1) * (r + 1) <= v)
        ++r;
    if (r * r != v)
        return std::nullopt;
    return r;
}

std::string SrgParams::str() const
{
    std::ostringstream os;
    os << "(" << v << "," << k << "," << lambda << "," << mu << ")";
    if (r && s)
        os << " eigenvalues " << k << "^1 " << *r << "^" << f << " " << *s << "^" << g;
    else
        os << " eigenvalues " << k << "^1 (-1+sqrt(" << v << "))/2^" << f << " (-1-sqrt(" << v << "))/2^" << g;
    return os.str();
}

std::string NotSrg::describe() const
{
    auto pair = [](const VertexPair& p) {
        return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
    };
    switch (reason) {
    case Reason::Irregular:
        return "irregular: vertices " + std::to_string(first.first) + " and " + std::to_string(second.first) +
               " have different degrees";
    case Reason::Complete:
        return "complete graph";
    case Reason::Empty:
        return "empty graph";
    case Reason::LambdaNotConstant:
        return "common neighbours not constant over edges " + pair(first) + " and " + pair(second);
    case Reason::MuNotConstant:
        return "common neighbours not constant over non-edges " + pair(first) + " and " + pair(second);
    case Reason::BadMultiplicity:
        return "eigenvalue multiplicities are not integral";
    }
    return "not strongly regular";
}

SrgResult srg_from_parameters(long long v, long long k, long long lambda, long long mu)
{
    SrgParams p{v, k, lambda, mu, std::nullopt, std::nullopt, 0, 0};
    const long long diff = lambda - mu;
    const long long disc = diff * diff + 4 * (k - mu);
    if (auto root = exact_sqrt(disc); root && *root > 0) {
        const long long r = (diff + *root) / 2;
        const long long s = (diff - *root) / 2;
        const long long fnum = -k - (v - 1) * s;
        const long long gnum = k + (v - 1) * r;
        if (fnum % (r - s) != 0 || gnum % (r - s) != 0)
            return NotSrg{NotSrg::Reason::BadMultiplicity};
        p.r = r;
        p.s = s;
        p.f = fnum / (r - s);
        p.g = gnum / (r - s);
        if (p.f <= 0 || p.g <= 0)
            return NotSrg{NotSrg::Reason::BadMultiplicity};
        return p;
    }
    // Irrational eigenvalues force f = g = (v-1)/2.
    if (2 * k + (v - 1) * diff != 0 || (v - 1) % 2 != 0)
        return NotSrg{NotSrg::Reason::BadMultiplicity};
    p.f = p.g = (v - 1) / 2;
    return p;
}

SrgResult srg_params(const Graph& g)
{
    const std::size_t v = g.order();
    const std::size_t k = g.degree(0);
    for (std::size_t x = 1; x < v; ++x)
        if (g.degree(x) != k)
            return NotSrg{NotSrg::Reason::Irregular, {0, 0}, {x, x}};
    if (k == 0)
        return NotSrg{NotSrg::Reason::Empty};
    if (k + 1 == v)
        return NotSrg{NotSrg::Reason::Complete};

    std::optional<std::pair<VertexPair, std::size_t>> lam, mu;
    for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = x + 1; y < v; ++y) {
            const std::size_t c = g.common(x, y);
            auto& ref = g.adjacent(x, y) ? lam : mu;
            if (!ref) {
                ref = {{x, y}, c};
            } else if (ref->second != c) {
                const auto reason = g.adjacent(x, y) ? NotSrg::Reason::LambdaNotConstant : NotSrg::Reason::MuNotConstant;
                return NotSrg{reason, ref->first, {x, y}};
            }
        }
    return srg_from_parameters(static_cast<long long>(v), static_cast<long long>(k),
                               static_cast<long long>(lam->second), static_cast<long long>(mu->second));
}

SrgResult relation_srg_params(const Scheme& s, int i)
{
    if (i < 1 || i > s.classes())
        throw SchemeError("relation index out of range");
    const long long v = static_cast<long long>(s.order());
    const long long k = s.valency(i);
    if (k == v - 1)
        return NotSrg{NotSrg::Reason::Complete};
    const long long lambda = s.p(i, i, i);
    std::optional<std::pair<int, long long>> mu;
    for (int h = 1; h <= s.classes(); ++h) {
        if (h == i)
            continue;
        const long long m = s.p(h, i, i);
        if (!mu)
            mu = {h, m};
        else if (mu->second != m)
            return NotSrg{NotSrg::Reason::MuNotConstant, s.representative(mu->first), s.representative(h)};
    }
    return srg_from_parameters(v, k, lambda, mu->second);
}

std::string SrgType::str() const
{
    std::ostringstream os;
    switch (kind) {
    case SrgKind::StrictLatinSquare:
        os << "strictly-LS(n=" << n << ",t=" << t << ")";
        break;
    case SrgKind::StrictNegativeLatinSquare:
        os << "strictly-NLS(n=" << n << ",t=" << t << ")";
        break;
    case SrgKind::Conference:
        os << "conference";
        break;
    case SrgKind::Untyped:
        os << "untyped";
        break;
    }
    return os.str();
}

namespace {

bool is_conference(const SrgParams& p)
{
    return 2 * p.k == p.v - 1 && 4 * p.lambda == p.v - 5 && 4 * p.mu == p.v - 1;
}

} // namespace

std::optional<SrgType> latin_square_parameters(const SrgParams& p, bool negative)
{
    if (!p.r || !p.s)
        return std::nullopt;
    const auto root = exact_sqrt(p.v);
    if (!root || *root < 2)
        return std::nullopt;
    const long long n = negative ? -*root : *root;
    if (p.k % (n - 1) != 0)
        return std::nullopt;
    const long long t = p.k / (n - 1);
    if (t == 0 || (t < 0) != negative)
        return std::nullopt;
    const bool match = (*p.r == n - t && *p.s == -t) || (*p.r == -t && *p.s == n - t);
    if (!match)
        return std::nullopt;
    return SrgType{negative ? SrgKind::StrictNegativeLatinSquare : SrgKind::StrictLatinSquare, n, t};
}

SrgType classify_type(const SrgParams& p)
{
    if (is_conference(p)) {
        const auto root = exact_sqrt(p.v);
        return SrgType{SrgKind::Conference, root ? *root : 0, root ? p.k / (*root - 1) : 0};
    }
    if (auto ls = latin_square_parameters(p, false))
        return *ls;
    if (auto nls = latin_square_parameters(p, true))
        return *nls;
    return SrgType{};
}

bool is_ls_inclusive(const SrgParams& p)
{
    return latin_square_parameters(p, false).has_value();
}

bool is_nls_inclusive(const SrgParams& p)
{
    return latin_square_parameters(p, true).has_value();
}

LatinSign lemma_type_from_eigenvalue(long long v, long long k, long long a)
{
    const auto root = exact_sqrt(v);
    if (!root)
        throw SrgError("vertex count " + std::to_string(v) + " is not a perfect square");
    const long long n = *root;
    const bool pos = k == -a * (n - 1);
    const bool neg = k == -a * (-n - 1);
    if (pos && !neg)
        return LatinSign::LatinSquare;
    if (neg && !pos)
        return LatinSign::NegativeLatinSquare;
    throw SrgError("k = -a(n-1) holds for neither sign of n (v=" + std::to_string(v) + ", k=" + std::to_string(k) +
                   ", a=" + std::to_string(a) + ")");
}

long long common_eigenspace_dim(long long n, long long t, long long k, long long r, long long s)
{
    const long long gap = r - s;
    if (gap == 0 || (gap > 0) != (n > 0))
        throw SrgError("r - s must have the same sign as n");
    const long long num = -t * (k + (n - 1) * s);
    if (num % gap != 0)
        throw SrgError("common eigenspace dimension " + std::to_string(num) + "/" + std::to_string(gap) +
                       " is not an integer");
    const long long dim = num / gap;
    if (dim < 0)
        throw SrgError("common eigenspace dimension " + std::to_string(dim) +
                       " is negative: the two graphs cannot commute");
    return dim;
}

} // namespace ascheme
