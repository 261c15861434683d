#include "ascheme/quotient.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ascheme {

namespace {

void check_class(const Scheme& s, int i, const char* what)
{
    if (i < 1 || i > s.classes())
        throw SchemeError(std::string(what) + " " + std::to_string(i) + " out of range 1.." + std::to_string(s.classes()));
}

} // namespace

Spread relation_spread(const Scheme& s, int spread_class)
{
    check_class(s, spread_class, "spread relation");
    auto sp = is_square_spread(relation_graph(s, spread_class));
    if (!sp)
        throw SpreadError("relation " + std::to_string(spread_class) + " is not a square spread");
    return *sp;
}

namespace {

QuotientReport quotient_over(const Scheme& s, const Spread& sp, const Spectrum& eig, int spread_class, int rel)
{
    const std::size_t n = sp.clique_count();
    QuotientReport rep;
    rep.relation = rel;
    rep.quotient = Graph(n);
    if (rel == spread_class) {
        rep.b = static_cast<long long>(n) - 1;
        rep.eigenvalues = {rep.b};
        return rep;
    }

    std::vector<long long> raw(n * n, 0);
    const auto& c = s.colors();
    for (std::size_t x = 0; x < s.order(); ++x) {
        const auto row = c.row(x);
        const auto a = static_cast<std::size_t>(sp.assignment[x]);
        for (std::size_t y = 0; y < s.order(); ++y)
            if (row[y] == rel)
                ++raw[a * n + static_cast<std::size_t>(sp.assignment[y])];
    }
    const long long nn = static_cast<long long>(n);
    RatMatrix B(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const long long e = raw[a * n + b];
            if (e % nn != 0)
                throw TheoremFalsified("quotient entry " + std::to_string(e) + "/" + std::to_string(n) +
                                       " is not an integer");
            const long long val = e / nn;
            B(a, b) = Rational(val);
            if (val == 0)
                continue;
            if (a == b)
                throw TheoremFalsified("relation " + std::to_string(rel) + " has edges inside a spread clique");
            if (rep.b == 0)
                rep.b = val;
            else if (rep.b != val)
                throw TheoremFalsified("quotient of relation " + std::to_string(rel) +
                                       " is not a multiple of a 01 matrix");
            if (a < b)
                rep.quotient.add_edge(a, b);
        }

    const auto roots = integer_roots(char_poly(B), s.valency(rel));
    if (roots.residual_degree != 0)
        throw TheoremFalsified("quotient of relation " + std::to_string(rel) + " has irrational eigenvalues");
    std::set<long long, std::greater<>> distinct;
    for (const auto& r : roots.roots)
        distinct.insert(static_cast<long long>(r));
    rep.eigenvalues.assign(distinct.begin(), distinct.end());

    // Valency transport and eigenvalue inheritance.
    const auto k_tilde = rep.quotient.regular_degree();
    if (!k_tilde || static_cast<long long>(*k_tilde) * rep.b != s.valency(rel))
        throw TheoremFalsified("valency of relation " + std::to_string(rel) + " is not b times the quotient valency");
    for (long long e : rep.eigenvalues) {
        bool found = false;
        for (std::size_t j = 0; j < eig.P.rows() && !found; ++j)
            found = eig.P(j, static_cast<std::size_t>(rel)) == Rational(e);
        if (!found)
            throw TheoremFalsified("quotient eigenvalue " + std::to_string(e) + " of relation " +
                                   std::to_string(rel) + " is not an eigenvalue of the relation");
    }
    return rep;
}

} // namespace

QuotientReport quotient_relation(const Scheme& s, int spread_class, int rel_class)
{
    check_class(s, rel_class, "relation");
    const Spread sp = relation_spread(s, spread_class);
    return quotient_over(s, sp, spectrum(s), spread_class, rel_class);
}

QuotientScheme quotient_scheme(const Scheme& s, int spread_class)
{
    const Spread sp = relation_spread(s, spread_class);
    const Spectrum eig = spectrum(s);
    std::vector<QuotientReport> reports(static_cast<std::size_t>(s.classes()) + 1);
    std::vector<int> class_map(static_cast<std::size_t>(s.classes()) + 1, 0);
    std::vector<Graph> graphs;
    for (int i = 1; i <= s.classes(); ++i) {
        reports[static_cast<std::size_t>(i)] = quotient_over(s, sp, eig, spread_class, i);
        if (i == spread_class)
            continue;
        const Graph& g = reports[static_cast<std::size_t>(i)].quotient;
        auto it = std::find(graphs.begin(), graphs.end(), g);
        if (it == graphs.end()) {
            graphs.push_back(g);
            class_map[static_cast<std::size_t>(i)] = static_cast<int>(graphs.size());
        } else {
            class_map[static_cast<std::size_t>(i)] = static_cast<int>(it - graphs.begin()) + 1;
        }
    }
    if (graphs.empty())
        throw SchemeError("the spread is the only relation; the quotient has a single vertex");
    ColorMatrix qc;
    try {
        qc = ColorMatrix::from_graphs(graphs);
    } catch (const SchemeError& e) {
        throw TheoremFalsified(std::string("quotient relations do not partition the pairs: ") + e.what());
    }
    auto verified = scheme_verify(qc);
    if (const auto* v = as_violation(verified))
        throw TheoremFalsified("quotient is not a scheme: " + v->describe());
    return QuotientScheme{std::get<Scheme>(std::move(verified)), std::move(class_map), std::move(reports)};
}

std::string PropositionReport::describe() const
{
    std::ostringstream os;
    os << "relation " << relation << ": b=" << b;
    if (params)
        os << " " << params->str() << " " << type->str();
    else
        os << " not strongly regular";
    if (params) {
        os << (quotient_complete ? "; complete quotient, Latin square type " : "; quotient not complete, not strictly NLS ")
           << (holds ? "confirmed" : "VIOLATED");
    }
    if (b_is_n)
        os << "; b=n: coclique extension " << (coclique_extension ? "yes" : "no") << ", eigenvalue 0 "
           << (zero_eigenvalue ? "yes" : "no") << ", complete multipartite " << (complete_multipartite ? "yes" : "no");
    if (b_is_one && params)
        os << "; b=1: disjoint union of cliques " << (disjoint_cliques ? "yes" : "no");
    return os.str();
}

namespace {

/// Non-adjacency (plus equality) is an equivalence relation.
bool is_complete_multipartite(const Graph& g)
{
    const Graph co = g.complement();
    for (std::size_t x = 0; x < g.order(); ++x) {
        const auto nb = co.neighbors(x);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!co.adjacent(nb[i], nb[j]))
                    return false;
    }
    return true;
}

bool is_disjoint_cliques(const Graph& g) { return is_complete_multipartite(g.complement()); }

} // namespace

std::vector<PropositionReport> proposition_reports(const Scheme& s, int spread_class)
{
    const auto qs = quotient_scheme(s, spread_class);
    const Spread sp = relation_spread(s, spread_class);
    const Spectrum eig = spectrum(s);
    const long long n = static_cast<long long>(sp.clique_count());
    const bool complete = qs.scheme.classes() == 1;

    std::vector<PropositionReport> out;
    for (int i = 1; i <= s.classes(); ++i) {
        PropositionReport r;
        r.relation = i;
        r.b = qs.reports[static_cast<std::size_t>(i)].b;
        r.quotient_complete = complete;
        auto sr = relation_srg_params(s, i);
        if (const auto* p = std::get_if<SrgParams>(&sr)) {
            r.params = *p;
            r.type = classify_type(*p);
            r.holds = complete ? is_ls_inclusive(*p) : r.type->kind != SrgKind::StrictNegativeLatinSquare;
        }
        if (i != spread_class) {
            const Graph g = relation_graph(s, i);
            r.b_is_n = r.b == n;
            r.b_is_one = r.b == 1;
            if (r.b_is_n) {
                const Graph& qg = qs.reports[static_cast<std::size_t>(i)].quotient;
                r.coclique_extension = true;
                for (std::size_t x = 0; x < s.order() && r.coclique_extension; ++x)
                    for (std::size_t y = 0; y < s.order(); ++y) {
                        const auto cx = static_cast<std::size_t>(sp.assignment[x]);
                        const auto cy = static_cast<std::size_t>(sp.assignment[y]);
                        const bool want = cx != cy && qg.adjacent(cx, cy);
                        if (g.adjacent(x, y) != want) {
                            r.coclique_extension = false;
                            break;
                        }
                    }
                for (std::size_t j = 0; j < eig.P.rows(); ++j)
                    r.zero_eigenvalue = r.zero_eigenvalue || eig.P(j, static_cast<std::size_t>(i)) == 0;
                r.complete_multipartite = is_complete_multipartite(g);
            }
            if (r.b_is_one)
                r.disjoint_cliques = is_disjoint_cliques(g);
        }
        out.push_back(std::move(r));
    }
    return out;
}

LatticeIdempotentReport lattice_idempotent_count(const Scheme& s, int l)
{
    check_class(s, l, "lattice relation");
    auto sr = relation_srg_params(s, l);
    const auto* p = std::get_if<SrgParams>(&sr);
    if (!p)
        throw SrgError("relation " + std::to_string(l) + " is not strongly regular");
    const auto n = exact_sqrt(p->v);
    if (!n || p->k != 2 * (*n - 1) || p->lambda != *n - 2 || p->mu != 2)
        throw SrgError("relation " + std::to_string(l) + " " + p->str() + " does not have lattice graph parameters");

    LatticeIdempotentReport rep;
    rep.n = *n;
    const Spectrum eig = spectrum(s);
    for (std::size_t j = 1; j < eig.P.rows(); ++j)
        if (eig.P(j, static_cast<std::size_t>(l)) == Rational(*n - 2))
            rep.rows.push_back(j);

    if (rep.rows.size() == 1) {
        const std::size_t j = rep.rows.front();
        const auto& c = s.colors();
        rep.identity_holds = true;
        for (std::size_t x = 0; x < s.order() && rep.identity_holds; ++x)
            for (std::size_t y = 0; y < s.order(); ++y) {
                const int cls = c(x, y);
                const Rational lhs = eig.Q(static_cast<std::size_t>(cls), j);
                const long long rhs = cls == 0 ? 2 * *n - 2 : cls == l ? *n - 2 : -2;
                if (lhs != Rational(rhs)) {
                    rep.identity_holds = false;
                    break;
                }
            }
    }

    for (int i = 1; i <= s.classes(); ++i) {
        if (i == l)
            continue;
        auto r = relation_srg_params(s, i);
        if (const auto* q = std::get_if<SrgParams>(&r); q && !is_ls_inclusive(*q))
            rep.non_latin.push_back(i);
    }
    return rep;
}

} // namespace ascheme
