// Acceptance run: one [PASS]/[FAIL] line per criterion, failures listed
// underneath. Exit status is the number of failed criteria.

#include "ascheme/quotient.hpp"

#include "support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace ascheme;
using testing::corpus_scheme;

namespace {

class Checks {
public:
    void expect(bool ok, const std::string& what)
    {
        ++count_;
        if (!ok)
            failures_.push_back(what);
    }
    bool ok() const { return failures_.empty(); }
    int count() const { return count_; }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    int count_ = 0;
    std::vector<std::string> failures_;
};

struct Criterion {
    std::string id;
    std::string title;
    double limit_seconds;
    std::function<void(Checks&)> body;
};

std::vector<long long> degrees(const Scheme& s)
{
    auto k = s.valencies();
    k.erase(k.begin());
    return k;
}

int count_kind(const Scheme& s, SrgKind kind)
{
    int n = 0;
    for (int i = 1; i <= s.classes(); ++i) {
        const auto r = relation_srg_params(s, i);
        if (const auto* p = std::get_if<SrgParams>(&r); p && classify_type(*p).kind == kind)
            ++n;
    }
    return n;
}

std::optional<std::size_t> row_index(const RatMatrix& P, const std::vector<long long>& row)
{
    for (std::size_t j = 0; j < P.rows(); ++j) {
        bool match = true;
        for (std::size_t c = 0; c < P.cols() && match; ++c)
            match = P(j, c) == row[c];
        if (match)
            return j;
    }
    return std::nullopt;
}

Scheme verified(const std::vector<Graph>& graphs)
{
    return expect_scheme(scheme_verify(ColorMatrix::from_graphs(graphs)));
}

// 1. Sylvester scheme.
void sylvester(Checks& c)
{
    const Scheme s = build_sylvester();
    const Spectrum sp = spectrum(s);
    c.expect(testing::same_rows(sp.P, {{1, 5, 20, 5, 5},
                                       {1, 2, -1, -1, -1},
                                       {1, -3, 4, -1, -1},
                                       {1, -1, -4, 5, -1},
                                       {1, -1, -4, -1, 5}}),
             "eigenmatrix differs from the expected 5x5 matrix");
    const Graph g = relation_graph(s, 1);
    c.expect(drg_array(g) == IntersectionArray{{5, 4, 2}, {1, 1, 4}}, "relation 1 array is not {5,4,2;1,1,4}");
    std::map<Rational, long long, std::greater<>> mult;
    for (std::size_t j = 0; j < sp.P.rows(); ++j)
        mult[sp.P(j, 1)] += sp.multiplicities[j];
    std::vector<long long> ms;
    for (const auto& [e, m] : mult)
        ms.push_back(m);
    c.expect(ms == std::vector<long long>{1, 16, 10, 9}, "relation 1 multiplicities are not (1,16,10,9)");
}

// 2. Bilinear forms and Brouwer-Pasechnik at q = 2.
void family_q2(Checks& c)
{
    const std::vector<std::vector<long long>> expected{{1, 7, 21, 35}, {1, 3, 1, -5}, {1, -5, 9, -5}, {1, -1, -3, 3}};
    const std::pair<const char*, Scheme> schemes[] = {{"bilinear", build_bilinear_forms(2).three},
                                                      {"brouwer-pasechnik", build_brouwer_pasechnik(2).scheme}};
    for (const auto& [name, s] : schemes) {
        const Spectrum sp = spectrum(s);
        c.expect(s.classes() == 3, std::string(name) + ": not 3 classes");
        c.expect(testing::same_rows(sp.P, expected), std::string(name) + ": eigenmatrix differs");
        const auto j = row_index(sp.P, {1, -1, -3, 3});
        c.expect(j && sp.multiplicities[*j] == 35, std::string(name) + ": row (1,-1,-3,3) does not have multiplicity 35");
    }
}

// 3. Spread family of the Brouwer-Pasechnik graph and its fissions.
void bp_fissions(Checks& c)
{
    const auto bp = build_brouwer_pasechnik(2);
    const Graph z3 = relation_graph(bp.scheme, 3);
    const auto s0 = find_spread(z3);
    c.expect(s0.status == SearchStatus::Found && s0.spread && s0.spread->is_square(), "no square spread in Z3");
    if (!s0.spread)
        return;
    const auto clique = find_clique(z3.minus(s0.spread->graph()), 8);
    c.expect(clique.status == SearchStatus::Found, "clique search of size 8 failed");
    if (clique.status != SearchStatus::Found)
        return;
    const auto family = bp_spread_family(Field::of_order(2), z3, clique.clique);
    c.expect(family.size() == 2, "spread family does not have 2 spreads");
    if (family.size() != 2)
        return;
    const Graph z1 = relation_graph(bp.scheme, 1), z2 = relation_graph(bp.scheme, 2);
    const Graph s0g = family[0].graph(), s1g = family[1].graph();
    const std::vector<std::vector<Graph>> fissions{
        {z1, z2, z3},
        {z1, z2, z3.minus(s0g), s0g},
        {z1, z2, z3.minus(s0g).minus(s1g), s0g, s1g},
    };
    for (const auto& graphs : fissions) {
        const int d = static_cast<int>(graphs.size());
        const auto r = scheme_verify(ColorMatrix::from_graphs(graphs));
        const auto* s = std::get_if<Scheme>(&r);
        c.expect(s != nullptr, std::to_string(d) + "-class fission is not a scheme");
        if (s)
            c.expect(count_kind(*s, SrgKind::StrictLatinSquare) == d - 2,
                     std::to_string(d) + "-class fission does not have " + std::to_string(d - 2) + " strictly-LS relations");
    }
}

// 4. The 5-class scheme on 64 vertices, its fusions and the spread removal.
void decaen_chain(Checks& c)
{
    const Scheme s = build_decaen_vandam();
    c.expect(testing::same_rows(spectrum(s).P, {{1, 9, 9, 9, 9, 27},
                                                {1, 5, -3, -3, -3, 3},
                                                {1, -3, 5, -3, -3, 3},
                                                {1, -3, -3, 5, -3, 3},
                                                {1, -3, -3, -3, 5, 3},
                                                {1, 1, 1, 1, 1, -5}}),
             "5-class eigenmatrix differs");

    const auto f4 = is_fusion_scheme(s, ClassPartition::parse("1|2|3,4|5", 5));
    c.expect(std::holds_alternative<Scheme>(f4), "fusion 1|2|3,4|5 is not a scheme");
    if (const auto* s4 = std::get_if<Scheme>(&f4)) {
        c.expect(testing::same_rows(spectrum(*s4).P,
                                    {{1, 9, 9, 18, 27}, {1, 5, -3, -6, 3}, {1, -3, 5, -6, 3}, {1, -3, -3, 2, 3}, {1, 1, 1, 2, -5}}),
                 "4-class eigenmatrix differs");
        c.expect(count_kind(*s4, SrgKind::StrictNegativeLatinSquare) == 2, "4-class fusion: not exactly two strictly-NLS");
        int untyped = 0;
        for (int i = 1; i <= s4->classes(); ++i) {
            const auto r = relation_srg_params(*s4, i);
            const auto* p = std::get_if<SrgParams>(&r);
            untyped += !p || classify_type(*p).kind == SrgKind::Untyped;
        }
        c.expect(untyped == 2, "4-class fusion: not exactly two untyped relations");
    }

    const auto f3 = is_fusion_scheme(s, ClassPartition::parse("1,2|3,4|5", 5));
    const auto* s3 = std::get_if<Scheme>(&f3);
    c.expect(s3 != nullptr, "fusion 1,2|3,4|5 is not a scheme");
    if (!s3)
        return;
    c.expect(amorphic_check(*s3).amorphic, "3-class fusion is not amorphic");
    for (int i = 1; i <= 3; ++i) {
        const auto r = relation_srg_params(*s3, i);
        const auto* p = std::get_if<SrgParams>(&r);
        c.expect(p && (is_ls_inclusive(*p) || is_nls_inclusive(*p)),
                 "3-class fusion relation " + std::to_string(i) + " is not LS or NLS");
    }

    const Graph r = relation_graph(*s3, 1);
    const auto found = find_spread(r);
    c.expect(found.spread.has_value(), "no spread in the valency-18 relation");
    if (!found.spread)
        return;
    const Graph residual = remove_spread(r, *found.spread).residual;
    const Scheme p64 = expect_scheme(scheme_verify(distance_coloring(residual)));
    const Spectrum sp = spectrum(p64);
    c.expect(testing::same_rows(sp.P, {{1, 15, 45, 3}, {1, 3, -3, -1}, {1, -1, -3, 3}, {1, -5, 5, -1}}),
             "P64 eigenmatrix differs");
    std::vector<long long> ms = sp.multiplicities;
    std::sort(ms.begin(), ms.end());
    const std::vector<long long> want{1, 15, 18, 30};
    c.expect(ms == want, "P64 multiplicities are not 1,30,15,18");
    for (auto [row, m] : {std::pair<std::vector<long long>, long long>{{1, 3, -3, -1}, 30},
                          {{1, -1, -3, 3}, 15},
                          {{1, -5, 5, -1}, 18}}) {
        const auto j = row_index(sp.P, row);
        c.expect(j && sp.multiplicities[*j] == m, "P64 multiplicity attached to the wrong row");
    }
}

// 5. Negative controls for the Latin square splitting check and common fission.
void negative_controls(Checks& c)
{
    const Scheme& dv3 = corpus_scheme("dv-3");
    const Scheme& p64 = corpus_scheme("p64");
    c.expect(p64.valency(2) == 45, "relation 2 of P64 does not have valency 45");
    const auto rep = theorem_main_check(p64, 2, {relation_graph(dv3, 2), relation_graph(dv3, 3)});
    c.expect(rep.latin_type.ok, "valency-45 relation not of Latin square type");
    c.expect(!rep.idempotent.ok, "precondition (ii) unexpectedly holds");
    c.expect(!rep.scheme, "a scheme was produced despite a failed precondition");

    const Scheme a = expect_scheme(is_fusion_scheme(build_cyclotomic(81, 4), ClassPartition::parse("1|2,4|3", 4)));
    const Scheme b = expect_scheme(is_fusion_scheme(build_cyclotomic(81, 10), ClassPartition::parse("1,3,5,7,9|2|4,6,8,10", 10)));
    std::vector<long long> ka = degrees(a), kb = degrees(b);
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    c.expect(ka == std::vector<long long>{20, 20, 40} && kb == std::vector<long long>{8, 32, 40}, "Paley-81 pair has wrong valencies");
    const auto fis = common_fission(a, b);
    c.expect(fis.status == CommonFissionReport::Status::NotScheme, "common fission of the Paley-81 pair is not rejected");
    c.expect(fis.violation.has_value(), "no violation witness for the Paley-81 common fission");
    c.expect(fis.half_valency, "k = (n^2-1)/2 is not flagged");
}

// 6. The 1024-vertex product scheme and the folded halved 12-cube.
void products(Checks& c)
{
    const Scheme s = build_polhill_product();
    c.expect(s.order() == 1024 && s.classes() == 4, "product is not a 4-class scheme on 1024 vertices");
    c.expect(testing::same_rows(spectrum(s).P, {{1, 231, 264, 264, 264},
                                                {1, -25, 8, 8, 8},
                                                {1, 7, -24, 8, 8},
                                                {1, 7, 8, -24, 8},
                                                {1, 7, 8, 8, -24}}),
             "product eigenmatrix differs");
    const auto verdict = amorphic_check(s);
    c.expect(verdict.amorphic, "product is not amorphic");
    c.expect(verdict.partitions_checked == 15, "amorphicity check did not visit 15 partitions");
    int full = 0;
    for (const auto& p : testing::all_partitions(4))
        full += std::holds_alternative<Scheme>(fuse_and_verify(s, p));
    c.expect(full == 15, "full verification of the 15 fusions disagrees");

    const auto ap = srg_params(relation_graph(s, 1).united(relation_graph(s, 2)));
    const auto* p = std::get_if<SrgParams>(&ap);
    c.expect(p && p->v == 1024 && p->k == 495 && p->lambda == 238 && p->mu == 240, "A1+A2 is not SRG(1024,495,238,240)");
    c.expect(p && classify_type(*p).kind == SrgKind::StrictNegativeLatinSquare, "A1+A2 is not strictly-NLS");

    const Scheme fh = build_folded_halved_cube();
    c.expect(testing::same_rows(spectrum(fh).P, {{1, 66, 495, 462}, {1, 26, 15, -42}, {1, 2, -17, 14}, {1, -6, 15, -10}}),
             "folded halved 12-cube eigenmatrix differs");
    const auto fp = relation_srg_params(fh, 2);
    c.expect(p && std::holds_alternative<SrgParams>(fp) && std::get<SrgParams>(fp) == *p,
             "distance-2 relation parameters differ from A1+A2");
}

// 7. Wreath family, quotients and the lattice idempotent.
void quotients(Checks& c)
{
    for (long long n : {4, 6}) {
        const std::string tag = "n=" + std::to_string(n) + ": ";
        const Scheme s = build_wreath(static_cast<std::size_t>(n / 2), build_knn_minus_matching(static_cast<std::size_t>(n)));
        c.expect(testing::same_rows(spectrum(s).P, {{1, (n / 2 - 1) * 2 * n, n - 1, n - 1, 1},
                                                    {1, -2 * n, n - 1, n - 1, 1},
                                                    {1, 0, 1, -1, -1},
                                                    {1, 0, -1, -1, 1},
                                                    {1, 0, 1 - n, n - 1, -1}}),
                 tag + "eigenmatrix differs from the parametrized matrix");
        const int spread_class = 3;
        const auto qs = quotient_scheme(s, spread_class);
        c.expect(qs.scheme.order() == static_cast<std::size_t>(n), tag + "quotient does not have n vertices");
        const auto reports = proposition_reports(s, spread_class);
        bool multipartite = false, matching = false, holds = true;
        for (const auto& r : reports) {
            holds = holds && r.holds;
            multipartite = multipartite || (r.b_is_n && r.coclique_extension && r.zero_eigenvalue && r.complete_multipartite);
            matching = matching || (r.b_is_one && r.disjoint_cliques);
        }
        c.expect(holds, tag + "a proposition report is violated");
        c.expect(multipartite, tag + "no b=n complete multipartite relation");
        c.expect(matching, tag + "no b=1 matching relation");
    }

    auto identity = [](const Scheme& s, const LatticeIdempotentReport& rep) {
        const Spectrum sp = spectrum(s);
        const auto [scaled, d] = testing::scaled_idempotent(s, sp, rep.rows.front());
        const Graph a = relation_graph(s, 1);
        for (std::size_t x = 0; x < s.order(); ++x)
            for (std::size_t y = 0; y < s.order(); ++y) {
                const long long rhs = x == y ? 2 * rep.n - 2 : a.adjacent(x, y) ? rep.n - 2 : -2;
                if (scaled[x][y] != d * rhs)
                    return false;
            }
        return true;
    };
    std::vector<std::pair<std::string, Scheme>> lattices;
    for (std::size_t n : {3, 4, 5, 8})
        lattices.emplace_back("H(2," + std::to_string(n) + ")", build_lattice_scheme(n));
    const Scheme latin = build_latin_square_scheme(field_mols(4, 1));
    lattices.emplace_back("Latin square of order 4", expect_scheme(is_fusion_scheme(latin, ClassPartition::parse("1,2|3|4", 4))));
    for (const auto& [name, s] : lattices) {
        const auto rep = lattice_idempotent_count(s, 1);
        c.expect(rep.count() == 1, name + ": lattice idempotent count is not 1");
        c.expect(rep.count() == 1 && identity(s, rep), name + ": n^2 E identity fails");
        c.expect(rep.non_latin.empty(), name + ": an SRG relation is not of Latin square type");
    }
}

// 8. Properties over the corpus.
void corpus_properties(Checks& c)
{
    for (const auto& [name, sp] : testing::corpus()) {
        const Scheme& s = *sp;
        const int d = s.classes();
        const auto v = static_cast<long long>(s.order());
        bool tensor_ok = true;
        for (int h = 0; h <= d; ++h)
            for (int i = 0; i <= d; ++i) {
                long long row = 0;
                for (int j = 0; j <= d; ++j) {
                    row += s.p(h, i, j);
                    tensor_ok = tensor_ok && s.p(h, i, j) == s.p(h, j, i);
                }
                tensor_ok = tensor_ok && row == s.valency(i);
            }
        c.expect(tensor_ok, name + ": row-sum or symmetry identity fails");
        if (s.order() <= 100) {
            const auto oracle = testing::naive_tensor(s.colors());
            c.expect(oracle && *oracle == s.tensor(), name + ": triple counts differ");
        }
        for (int i = 1; i <= d; ++i) {
            const auto r = relation_srg_params(s, i);
            const auto* p = std::get_if<SrgParams>(&r);
            if (!p)
                continue;
            c.expect(p->k * (p->k - 1 - p->lambda) == p->mu * (p->v - 1 - p->k), name + ": SRG identity fails");
            const auto t = classify_type(*p);
            if (t.kind == SrgKind::StrictLatinSquare && p->v - 1 - p->k > 0) {
                const auto comp = srg_from_parameters(p->v, p->v - 1 - p->k, p->v - 2 - 2 * p->k + p->mu,
                                                      p->v - 2 * p->k + p->lambda);
                const auto* cp = std::get_if<SrgParams>(&comp);
                const auto lt = cp ? latin_square_parameters(*cp, false) : std::nullopt;
                c.expect(lt && lt->n == t.n && lt->t == t.n + 1 - t.t, name + ": complement of LS(n,t) is not LS(n,n+1-t)");
            }
        }
        if (name == "c5")
            continue; // irrational eigenvalues
        const Spectrum eig = spectrum(s);
        const std::size_t n = static_cast<std::size_t>(d) + 1;
        c.expect(eig.P * eig.Q == Rational(v) * RatMatrix::identity(n), name + ": PQ != vI");
        long long total = 0;
        for (auto m : eig.multiplicities)
            total += m;
        c.expect(total == v, name + ": multiplicities do not sum to v");
    }
}

// 9. The commuting decomposition of K16.
void decomposition(Checks& c)
{
    const auto dec = testing::clebsch_decomposition();
    const auto rep = verify_commuting_decomposition({dec.clebsch, dec.spread, dec.rest});
    c.expect(rep.partition_ok, "the three graphs do not partition K16");
    c.expect(rep.commuting, "the three graphs do not commute");
    c.expect(!rep.is_scheme, "the decomposition is reported as a scheme");
    c.expect(rep.types.size() == 3, "types missing");
    if (rep.types.size() == 3) {
        c.expect(rep.types[0] && rep.types[0]->kind == SrgKind::StrictNegativeLatinSquare, "Clebsch graph is not strictly-NLS");
        c.expect(rep.types[1] && rep.types[1]->kind == SrgKind::StrictLatinSquare, "spread is not strictly-LS");
        c.expect(!rep.types[2] || rep.types[2]->kind == SrgKind::Untyped, "remainder is typed");
    }
    const auto joint = testing::joint_spectrum({dec.clebsch, dec.spread, dec.rest});
    std::set<std::vector<long long>> rows;
    for (const auto& [e, dim] : joint)
        rows.insert(e);
    const std::set<std::vector<long long>> expected{{5, 3, 7}, {1, 3, -5}, {1, -1, -1}, {-3, 3, -1}, {-3, -1, 3}};
    c.expect(rows == expected, "joint eigenvalues differ from the expected 5x4 matrix");
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {"AC1", "Sylvester scheme eigenmatrix and distance-regular array", 5, sylvester},
        {"AC2", "bilinear forms and Brouwer-Pasechnik schemes at q=2", 60, family_q2},
        {"AC3", "Brouwer-Pasechnik spread family and fissions", 60, bp_fissions},
        {"AC4", "5-class scheme on 64 vertices, fusions and spread removal", 60, decaen_chain},
        {"AC5", "negative controls for splitting and common fission", 120, negative_controls},
        {"AC6", "1024-vertex product scheme and folded halved 12-cube", 600, products},
        {"AC7", "wreath family quotients and the lattice idempotent", 120, quotients},
        {"AC8", "property suites over the corpus", 600, corpus_properties},
        {"AC9", "commuting decomposition of K16", 60, decomposition},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Checks checks;
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            cr.body(checks);
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= cr.limit_seconds;
        const bool pass = checks.ok() && error.empty() && in_time;
        failed += !pass;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (pass ? "[PASS] " : "[FAIL] ") << cr.id << " " << cr.title << " (" << checks.count() << " checks, "
             << secs << " s)";
        std::cout << line.str() << "\n";
        for (const auto& f : checks.failures())
            std::cout << "    " << f << "\n";
        if (!error.empty())
            std::cout << "    exception: " << error << "\n";
        if (!in_time)
            std::cout << "    exceeded the " << cr.limit_seconds << " s limit\n";
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
    return failed;
}
