#include "support.hpp"

#include <doctest.h>

using namespace ascheme;
using testing::corpus_scheme;

namespace {

SrgParams params(long long v, long long k, long long l, long long m)
{
    auto r = srg_from_parameters(v, k, l, m);
    REQUIRE(std::holds_alternative<SrgParams>(r));
    return std::get<SrgParams>(r);
}

SrgParams graph_params(const Graph& g)
{
    auto r = srg_params(g);
    REQUIRE(std::holds_alternative<SrgParams>(r));
    return std::get<SrgParams>(r);
}

} // namespace

TEST_CASE("srg_params examples")
{
    const Graph l24 = relation_graph(corpus_scheme("lattice-4"), 1);
    const auto p = graph_params(l24);
    CHECK(p.v == 16);
    CHECK(p.k == 6);
    CHECK(p.lambda == 2);
    CHECK(p.mu == 2);
    CHECK(testing::naive_srg(l24) == std::make_tuple(16LL, 6LL, 2LL, 2LL));

    const auto syl = srg_params(relation_graph(corpus_scheme("sylvester"), 1));
    REQUIRE(std::holds_alternative<NotSrg>(syl));
    CHECK(std::get<NotSrg>(syl).reason == NotSrg::Reason::MuNotConstant);
}

TEST_CASE("srg_params on the valency-495 relation of the folded halved 12-cube")
{
    const Scheme& s = corpus_scheme("folded-halved");
    const auto p = graph_params(relation_graph(s, 2));
    CHECK(p.v == 1024);
    CHECK(p.k == 495);
    CHECK(p.lambda == 238);
    CHECK(p.mu == 240);
    CHECK(p.r == 15);
    CHECK(p.s == -17);
    const Spectrum sp = spectrum(s);
    CHECK(testing::has_row(sp.P, {1, 26, 15, -42}));
    CHECK(testing::has_row(sp.P, {1, 2, -17, 14}));
}

TEST_CASE("srg_params flags degenerate graphs")
{
    Graph irregular(4);
    irregular.add_edge(0, 1);
    CHECK(std::get<NotSrg>(srg_params(irregular)).reason == NotSrg::Reason::Irregular);
    CHECK(std::get<NotSrg>(srg_params(testing::complete_graph(5))).reason == NotSrg::Reason::Complete);
    CHECK(std::get<NotSrg>(srg_params(Graph(5))).reason == NotSrg::Reason::Empty);
    // The 6-cycle: mu is not constant.
    CHECK(std::holds_alternative<NotSrg>(srg_params(testing::cycle_graph(6))));
    // C5 is the Paley graph on 5 vertices.
    const auto c5 = graph_params(testing::cycle_graph(5));
    CHECK(c5.lambda == 0);
    CHECK(c5.mu == 1);
    CHECK_FALSE(c5.r);
}

TEST_CASE("classify_type examples")
{
    const auto clebsch = classify_type(params(16, 5, 0, 2));
    CHECK(clebsch.kind == SrgKind::StrictNegativeLatinSquare);
    CHECK(clebsch.n == -4);
    CHECK(clebsch.t == -1);
    CHECK(classify_type(params(9, 4, 1, 2)).kind == SrgKind::Conference);
    const auto ls = classify_type(params(64, 21, 8, 6));
    CHECK(ls.kind == SrgKind::StrictLatinSquare);
    CHECK(ls.n == 8);
    CHECK(ls.t == 3);
    // Petersen graph: v not a square.
    CHECK(classify_type(params(10, 3, 0, 1)).kind == SrgKind::Untyped);
    // Clebsch complement (16,10,6,6): eigenvalues 2 and -2, NLS with n=-4, t=-2.
    const auto cc = classify_type(params(16, 10, 6, 6));
    CHECK(cc.kind == SrgKind::StrictNegativeLatinSquare);
    CHECK(cc.t == -2);
    CHECK(classify_type(params(16, 5, 0, 2)).str() == "strictly-NLS(n=-4,t=-1)");
}

TEST_CASE("inclusive type predicates treat square conference graphs as both")
{
    const auto paley9 = params(9, 4, 1, 2);
    CHECK(is_ls_inclusive(paley9));
    CHECK(is_nls_inclusive(paley9));
    const auto paley81 = params(81, 40, 19, 20);
    CHECK(is_ls_inclusive(paley81));
    CHECK(is_nls_inclusive(paley81));
    CHECK(is_ls_inclusive(params(64, 21, 8, 6)));
    CHECK_FALSE(is_nls_inclusive(params(64, 21, 8, 6)));
    // Paley(13): conference but not on a square number of vertices.
    const auto paley13 = std::get<SrgParams>(srg_params(relation_graph(build_cyclotomic(13, 2), 1)));
    CHECK(classify_type(paley13).kind == SrgKind::Conference);
    CHECK_FALSE(is_ls_inclusive(paley13));
}

TEST_CASE("lemma_type_from_eigenvalue")
{
    CHECK(lemma_type_from_eigenvalue(64, 21, -3) == LatinSign::LatinSquare);
    CHECK(lemma_type_from_eigenvalue(16, 5, 1) == LatinSign::NegativeLatinSquare);
    CHECK_THROWS_AS(lemma_type_from_eigenvalue(36, 10, 1), SrgError);
    CHECK_THROWS_AS(lemma_type_from_eigenvalue(10, 3, 1), SrgError);
}

TEST_CASE("common_eigenspace_dim")
{
    // Same type as A: k = -s(n-1).
    CHECK(common_eigenspace_dim(8, 2, 21, 5, -3) == 0);
    CHECK_THROWS_AS(common_eigenspace_dim(8, 2, 45, 5, -3), SrgError);
    CHECK(common_eigenspace_dim(8, 1, 14, 6, -2) == 0);
    // A spread of 8-cliques (k = 7, eigenvalues 7 and -1) is also of Latin square type.
    CHECK(common_eigenspace_dim(8, 2, 7, 7, -1) == 0);
    // A strictly-LS(8,4) graph (k = 28, eigenvalues 4 and -4).
    CHECK(common_eigenspace_dim(8, 2, 28, 4, -4) == 0);
    // Sign mismatch between r - s and n.
    CHECK_THROWS_AS(common_eigenspace_dim(-8, -2, 21, 5, -3), SrgError);
}

TEST_CASE("exact_sqrt")
{
    CHECK(exact_sqrt(0) == 0);
    CHECK(exact_sqrt(1024) == 32);
    CHECK_FALSE(exact_sqrt(1023));
    CHECK_FALSE(exact_sqrt(-4));
}

TEST_CASE("relation_srg_params agrees with srg_params")
{
    for (const auto& [name, s] : testing::corpus_upto(100)) {
        CAPTURE(name);
        for (int i = 1; i <= s->classes(); ++i) {
            const auto a = relation_srg_params(*s, i);
            const auto b = srg_params(relation_graph(*s, i));
            CHECK(a.index() == b.index());
            if (std::holds_alternative<SrgParams>(a) && std::holds_alternative<SrgParams>(b))
                CHECK(std::get<SrgParams>(a) == std::get<SrgParams>(b));
        }
    }
}
