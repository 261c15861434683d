// ascheme: build, verify and analyse symmetric association schemes.
//
// Exit codes: 0 success, 1 domain failure (violation, nothing found, budget
// exhausted), 2 usage or input error.

#include "ascheme/constructions.hpp"
#include "ascheme/fusion.hpp"
#include "ascheme/io.hpp"
#include "ascheme/quotient.hpp"
#include "ascheme/spreads.hpp"
#include "ascheme/srg.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

using namespace ascheme;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A domain failure whose message has already been printed.
struct DomainFailure {};

std::string join(const std::vector<long long>& xs, const char* sep = " ")
{
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << (i ? sep : "") << xs[i];
    return os.str();
}

long long search_budget(long long flag)
{
    if (flag > 0)
        return flag;
    if (const char* env = std::getenv("ASCHEME_BUDGET")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || v <= 0)
            throw UsageError("ASCHEME_BUDGET must be a positive integer");
        return v;
    }
    return kDefaultSearchBudget;
}

Scheme load_scheme(const std::string& path)
{
    auto r = scheme_verify(read_scheme(path));
    if (const auto* v = as_violation(r)) {
        std::cout << path << ": not an association scheme\n" << v->describe() << "\n";
        throw DomainFailure{};
    }
    return std::get<Scheme>(std::move(r));
}

void check_relation(const Scheme& s, int i)
{
    if (i < 1 || i > s.classes())
        throw UsageError("relation " + std::to_string(i) + " out of range 1.." + std::to_string(s.classes()));
}

void print_summary(const Scheme& s)
{
    const auto k = s.valencies();
    std::cout << "v=" << s.order() << " d=" << s.classes() << " valencies "
              << join(std::vector<long long>(k.begin() + 1, k.end())) << "\n";
}

void write_verified(const Scheme& s, const std::string& path)
{
    write_scheme(s.colors(), path);
    std::cout << "wrote " << path << ": ";
    print_summary(s);
}

// ---- build -------------------------------------------------------------

struct Params {
    std::map<std::string, std::string> kv;

    explicit Params(const std::vector<std::string>& args)
    {
        for (const auto& a : args) {
            const auto eq = a.find('=');
            if (eq == std::string::npos || eq == 0)
                throw UsageError("expected key=value, got '" + a + "'");
            kv[a.substr(0, eq)] = a.substr(eq + 1);
        }
    }

    long long integer(const std::string& key, std::optional<long long> fallback = std::nullopt)
    {
        auto it = kv.find(key);
        if (it == kv.end()) {
            if (!fallback)
                throw UsageError("missing parameter " + key + "=");
            return *fallback;
        }
        char* end = nullptr;
        const long long v = std::strtoll(it->second.c_str(), &end, 10);
        if (end == it->second.c_str() || *end != '\0')
            throw UsageError("parameter " + key + " must be an integer");
        used.insert(key);
        return v;
    }

    std::string text(const std::string& key)
    {
        auto it = kv.find(key);
        if (it == kv.end())
            throw UsageError("missing parameter " + key + "=");
        used.insert(key);
        return it->second;
    }

    void finish() const
    {
        for (const auto& [k, v] : kv)
            if (!used.count(k))
                throw UsageError("unknown parameter " + k + "=");
    }

    std::set<std::string> used;
};

std::vector<LatinSquare> read_latin_squares(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    std::vector<LatinSquare> squares(1);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::vector<int> row;
        int x;
        while (ls >> x)
            row.push_back(x);
        if (row.empty()) {
            if (!squares.back().empty())
                squares.emplace_back();
            continue;
        }
        squares.back().push_back(row);
    }
    if (squares.back().empty())
        squares.pop_back();
    if (squares.empty())
        throw UsageError("no Latin squares in '" + path + "'");
    return squares;
}

Scheme build_named(const std::string& name, Params& p)
{
    auto small = [](long long x, const char* what) {
        if (x < 1 || x > 1'000'000)
            throw UsageError(std::string(what) + " out of range");
        return static_cast<unsigned>(x);
    };
    const bool force = p.integer("force", 0) != 0;
    if (name == "sylvester")
        return build_sylvester();
    if (name == "bilinear") {
        auto bf = build_bilinear_forms(small(p.integer("q"), "q"), force);
        const long long classes = p.integer("classes", 3);
        if (classes != 3 && classes != 4)
            throw UsageError("classes must be 3 or 4");
        return classes == 3 ? bf.three : bf.four;
    }
    if (name == "brouwer-pasechnik")
        return build_brouwer_pasechnik(small(p.integer("q"), "q"), force).scheme;
    if (name == "hamming") {
        const long long D = p.integer("D"), q = p.integer("q");
        if (D < 1 || D > 64 || q < 2 || q > 65536)
            throw UsageError("hamming needs 1 <= D and 2 <= q with q^D <= 65536");
        return build_hamming(static_cast<int>(D), static_cast<int>(q));
    }
    if (name == "decaen-vandam")
        return build_decaen_vandam();
    if (name == "cyclotomic")
        return build_cyclotomic(small(p.integer("q"), "q"), small(p.integer("e"), "e"));
    if (name == "ag28")
        return build_ag28_scheme();
    if (name == "polhill")
        return build_polhill_product();
    if (name == "folded-halved-12")
        return build_folded_halved_cube();
    if (name == "wreath") {
        if (p.kv.count("outer") || p.kv.count("inner"))
            return build_wreath(load_scheme(p.text("outer")), load_scheme(p.text("inner")));
        const long long n = p.integer("n");
        if (n < 2 || n % 2 != 0 || n > 2000)
            throw UsageError("wreath n= must be even and at least 2");
        return build_wreath(static_cast<std::size_t>(n / 2), build_knn_minus_matching(static_cast<std::size_t>(n)));
    }
    if (name == "knn-matching") {
        const long long n = p.integer("n");
        if (n < 2 || n > 4000)
            throw UsageError("knn-matching needs 2 <= n");
        return build_knn_minus_matching(static_cast<std::size_t>(n));
    }
    if (name == "lattice") {
        const long long n = p.integer("n");
        if (n < 2 || n > 256)
            throw UsageError("lattice needs 2 <= n <= 256");
        return build_lattice_scheme(static_cast<std::size_t>(n));
    }
    if (name == "complete") {
        const long long v = p.integer("v");
        if (v < 2 || v > 20000)
            throw UsageError("complete needs 2 <= v");
        return build_complete(static_cast<std::size_t>(v));
    }
    if (name == "latin-squares") {
        if (p.kv.count("file"))
            return build_latin_square_scheme(read_latin_squares(p.text("file")));
        return build_latin_square_scheme(field_mols(small(p.integer("q"), "q"), small(p.integer("count", 1), "count")));
    }
    throw UsageError("unknown construction '" + name + "'");
}

int cmd_build(const std::string& name, const std::vector<std::string>& args, const std::string& out)
{
    Params p(args);
    Scheme s = [&] {
        try {
            return build_named(name, p);
        } catch (const ConstructionError& e) {
            throw UsageError(e.what());
        } catch (const FieldError& e) {
            throw UsageError(e.what());
        }
    }();
    p.finish();
    write_verified(s, out);
    return 0;
}

// ---- verify / eigen / classify ----------------------------------------

int cmd_verify(const std::string& path)
{
    const Scheme s = load_scheme(path);
    char digest[17];
    std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(tensor_digest(s)));
    std::cout << "association scheme ";
    print_summary(s);
    std::cout << "intersection tensor digest " << digest << "\n";
    return 0;
}

int cmd_eigen(const std::string& path, const std::string& out)
{
    const Scheme s = load_scheme(path);
    const Spectrum sp = spectrum(s);
    if (out.empty()) {
        std::cout << format_eigenmatrix(sp);
    } else {
        write_eigenmatrix(sp, out);
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

int cmd_classify(const std::string& path)
{
    const Scheme s = load_scheme(path);
    print_summary(s);
    bool all_ls = true, all_nls = true;
    int strict_ls = 0, strict_nls = 0;
    for (int i = 1; i <= s.classes(); ++i) {
        auto r = relation_srg_params(s, i);
        std::cout << "relation " << i << ": ";
        if (const auto* p = std::get_if<SrgParams>(&r)) {
            const auto t = classify_type(*p);
            std::cout << "SRG " << p->str() << " " << t.str() << "\n";
            all_ls = all_ls && is_ls_inclusive(*p);
            all_nls = all_nls && is_nls_inclusive(*p);
            strict_ls += t.kind == SrgKind::StrictLatinSquare;
            strict_nls += t.kind == SrgKind::StrictNegativeLatinSquare;
        } else {
            std::cout << "not SRG (" << std::get<NotSrg>(r).describe() << ")\n";
            all_ls = all_nls = false;
        }
    }
    std::cout << "strictly-LS relations: " << strict_ls << ", strictly-NLS relations: " << strict_nls << "\n";
    if (s.classes() >= 2 && (all_ls || all_nls))
        std::cout << "note: every relation is of " << (all_ls ? "Latin square" : "negative Latin square")
                  << " type; the scheme is eligible to be amorphic\n";
    return 0;
}

// ---- fuse / amorphic ---------------------------------------------------

int cmd_fuse(const std::string& path, const std::string& blocks, const std::string& out)
{
    const Scheme s = load_scheme(path);
    ClassPartition part = [&] {
        try {
            return ClassPartition::parse(blocks, s.classes());
        } catch (const SchemeError& e) {
            throw UsageError(e.what());
        }
    }();
    auto r = is_fusion_scheme(s, part);
    if (const auto* v = as_violation(r)) {
        std::cout << "fusion " << part.str() << " is not a scheme\n" << v->describe() << "\n";
        return 1;
    }
    std::cout << "fusion " << part.str() << " is a scheme\n";
    write_verified(std::get<Scheme>(r), out);
    return 0;
}

int cmd_amorphic(const std::string& path, bool force)
{
    const Scheme s = load_scheme(path);
    AmorphicVerdict verdict;
    try {
        verdict = amorphic_check(s, force);
    } catch (const AmorphicGuardError& e) {
        throw UsageError(e.what());
    }
    std::cout << "partitions checked: " << verdict.partitions_checked << "\n";
    if (verdict.amorphic) {
        std::cout << "amorphic";
        if (!verdict.common_type.empty())
            std::cout << " (relations of type " << verdict.common_type << ")";
        std::cout << "\n";
        return 0;
    }
    std::cout << "not amorphic: fusion " << verdict.failing->str() << " fails\n" << verdict.violation->describe() << "\n";
    return 1;
}

// ---- spreads and cliques ------------------------------------------------

/// Scheme with relation i replaced by `residual` and `extra` graphs appended,
/// or nullopt when the colouring is not a scheme.
std::optional<Scheme> refission(const Scheme& s, int i, const Graph& residual, const std::vector<Graph>& extra,
                                std::string& failure)
{
    std::vector<Graph> graphs;
    for (int j = 1; j <= s.classes(); ++j)
        if (j != i)
            graphs.push_back(relation_graph(s, j));
        else if (residual.edge_count() > 0)
            graphs.push_back(residual);
    for (const auto& g : extra)
        graphs.push_back(g);
    auto r = scheme_verify(ColorMatrix::from_graphs(graphs));
    if (const auto* v = as_violation(r)) {
        failure = v->describe();
        return std::nullopt;
    }
    return std::get<Scheme>(std::move(r));
}

int cmd_spread_find(const Scheme& s, int rel, std::optional<std::size_t> size, long long budget, const std::string& out)
{
    const Graph g = relation_graph(s, rel);
    const auto res = find_spread(g, size, budget);
    std::cout << "search nodes: " << res.nodes << "\n";
    if (res.spread) {
        std::cout << "spread of " << res.spread->clique_count() << " cliques of size " << res.spread->clique_size
                  << " in relation " << rel << "\n";
        if (!out.empty()) {
            write_spread(*res.spread, out);
            std::cout << "wrote " << out << "\n";
        } else {
            std::cout << format_spread(*res.spread);
        }
    }
    std::cout << to_string(res.status) << "\n";
    return res.status == SearchStatus::Found ? 0 : 1;
}

int cmd_spread_remove(const Scheme& s, int rel, const std::string& witness, const std::string& out)
{
    const Graph g = relation_graph(s, rel);
    const Spread sp = read_spread(witness, s.order());
    SpreadRemoval rem;
    try {
        rem = remove_spread(g, sp);
    } catch (const SpreadError& e) {
        std::cout << "cannot remove spread: " << e.what() << "\n";
        return 1;
    }
    std::cout << rem.note << "\n";
    if (rem.falsified) {
        std::cout << "THEOREM FALSIFIED\n";
        return 1;
    }
    std::string failure;
    auto kept = refission(s, rel, rem.residual, {sp.graph()}, failure);
    if (kept) {
        std::cout << "relation " << rel << " split into the residual and the spread (class " << kept->classes() << ")\n";
        write_verified(*kept, out);
        return 0;
    }
    std::cout << "keeping the other relations does not give a scheme: " << failure << "\n";
    if (rem.drg) {
        auto r = scheme_verify(distance_coloring(rem.residual));
        if (const auto* v = as_violation(r)) {
            std::cout << v->describe() << "\n";
            return 1;
        }
        std::cout << "writing the distance scheme of the residual graph " << rem.drg->str() << "\n";
        write_verified(std::get<Scheme>(r), out);
        return 0;
    }
    return 1;
}

int cmd_spread_family(const Scheme& s, int rel, unsigned q, const std::string& clique_path, const std::string& out,
                      const std::string& prefix)
{
    const Field f = Field::of_order(q);
    const Graph z3 = relation_graph(s, rel);
    std::vector<Spread> family;
    try {
        family = bp_spread_family(f, z3, read_clique(clique_path));
    } catch (const SpreadError& e) {
        std::cout << "spread family failed: " << e.what() << "\n";
        return 1;
    }
    std::cout << family.size() << " spreads, pairwise meeting in one vertex per clique pair\n";
    Graph residual = z3;
    std::vector<Graph> graphs;
    for (std::size_t k = 0; k < family.size(); ++k) {
        const Graph sg = family[k].graph();
        residual = residual.minus(sg);
        graphs.push_back(sg);
        auto r = srg_params(sg);
        std::cout << "spread " << k << ": ";
        if (const auto* p = std::get_if<SrgParams>(&r))
            std::cout << p->str() << " " << classify_type(*p).str() << "\n";
        else
            std::cout << std::get<NotSrg>(r).describe() << "\n";
        if (!prefix.empty()) {
            const std::string path = prefix + std::to_string(k) + ".txt";
            write_spread(family[k], path);
            std::cout << "wrote " << path << "\n";
        }
    }
    auto rr = srg_params(residual);
    if (const auto* p = std::get_if<SrgParams>(&rr))
        std::cout << "residual: " << p->str() << " " << classify_type(*p).str() << "\n";
    std::string failure;
    auto fission = refission(s, rel, residual, graphs, failure);
    if (!fission) {
        std::cout << "fission is not a scheme: " << failure << "\n";
        return 1;
    }
    write_verified(*fission, out);
    return 0;
}

int cmd_clique(const std::string& path, int rel, std::size_t size, long long budget, const std::string& out)
{
    const Scheme s = load_scheme(path);
    check_relation(s, rel);
    const auto res = find_clique(relation_graph(s, rel), size, budget);
    std::cout << "search nodes: " << res.nodes << "\n";
    if (res.status == SearchStatus::Found) {
        if (!out.empty()) {
            write_clique(res.clique, out);
            std::cout << "wrote " << out << "\n";
        } else {
            for (auto x : res.clique)
                std::cout << x << "\n";
        }
    }
    std::cout << to_string(res.status) << "\n";
    return res.status == SearchStatus::Found ? 0 : 1;
}

// ---- common fission / theorem check / quotient -------------------------

int cmd_common_fission(const std::string& a_path, const std::string& b_path, const std::string& split_text,
                       const std::string& out)
{
    const Scheme a = load_scheme(a_path);
    const Scheme b = load_scheme(b_path);
    if (a.order() != b.order())
        throw UsageError("schemes have different vertex counts (" + std::to_string(a.order()) + " and " +
                         std::to_string(b.order()) + ")");
    std::optional<FissionSplit> split;
    if (!split_text.empty()) {
        int x = 0, y = 0;
        char comma = 0;
        std::istringstream is(split_text);
        if (!(is >> x >> comma >> y) || comma != ',')
            throw UsageError("--split expects a,b");
        if (x < 1 || x > a.classes() || y < 1 || y > b.classes())
            throw UsageError("--split class out of range");
        split = FissionSplit{x, y};
    }
    const auto rep = common_fission(a, b, split);
    if (rep.split)
        std::cout << "unrefined relations: class " << rep.split->a_class << " of the first scheme, class "
                  << rep.split->b_class << " of the second\n";
    if (rep.half_valency)
        std::cout << "obstruction: the common 2-class scheme has k = (v-1)/2 = (n^2-1)/2\n";
    switch (rep.status) {
    case CommonFissionReport::Status::NotFissionPair:
        std::cout << "not a fission pair: " << rep.reason << "\n";
        return 1;
    case CommonFissionReport::Status::NotScheme:
        std::cout << rep.reason << "\n" << rep.violation->describe() << "\n";
        return 1;
    case CommonFissionReport::Status::Success:
        break;
    }
    std::cout << "common fission is a scheme; idempotents "
              << (rep.idempotents_match ? "are the union of both fissions" : "do NOT match the prediction") << "\n";
    if (!out.empty())
        write_verified(*rep.scheme, out);
    return 0;
}

int cmd_theorem_main(const std::string& path, int rel, const std::vector<std::string>& part_files, const std::string& out)
{
    const Scheme s = load_scheme(path);
    check_relation(s, rel);
    const Graph B = relation_graph(s, rel);
    std::vector<Graph> parts;
    Graph rest = B;
    for (const auto& f : part_files) {
        const Graph g = read_spread(f, s.order()).graph();
        if (!rest.contains(g))
            throw UsageError("part '" + f + "' is not inside the remaining edges of relation " + std::to_string(rel));
        rest = rest.minus(g);
        parts.push_back(g);
    }
    if (rest.edge_count() > 0)
        parts.push_back(rest);
    const auto rep = theorem_main_check(s, rel, parts);
    auto line = [](const char* label, const PreconditionResult& r) {
        std::cout << "(" << label << ") " << (r.ok ? "holds" : "FAILS") << ": " << r.note << "\n";
    };
    line("i", rep.latin_type);
    line("ii", rep.idempotent);
    line("iii", rep.not_half);
    line("iv", rep.parts_same_type);
    if (!rep.preconditions_hold()) {
        std::cout << "preconditions fail\n";
        return 1;
    }
    if (rep.violation) {
        std::cout << "preconditions hold but the fission is not a scheme: " << rep.violation->describe() << "\n"
                  << "THEOREM FALSIFIED\n";
        return 1;
    }
    std::cout << "fission verified\n";
    if (!out.empty())
        write_verified(*rep.scheme, out);
    return 0;
}

int cmd_quotient(const std::string& path, int rel, const std::string& out)
{
    const Scheme s = load_scheme(path);
    check_relation(s, rel);
    QuotientScheme qs = [&] {
        try {
            return quotient_scheme(s, rel);
        } catch (const SpreadError& e) {
            std::cout << e.what() << "\n";
            throw DomainFailure{};
        }
    }();
    std::cout << "quotient scheme: ";
    print_summary(qs.scheme);
    for (int i = 1; i <= s.classes(); ++i) {
        const auto& r = qs.reports[static_cast<std::size_t>(i)];
        std::cout << "relation " << i << " -> quotient class " << qs.class_map[static_cast<std::size_t>(i)]
                  << ", b=" << r.b << ", eigenvalues " << join(r.eigenvalues) << "\n";
    }
    bool ok = true;
    for (const auto& r : proposition_reports(s, rel)) {
        std::cout << r.describe() << "\n";
        ok = ok && r.holds;
    }
    if (!ok) {
        std::cout << "THEOREM FALSIFIED\n";
        return 1;
    }
    if (!out.empty())
        write_verified(qs.scheme, out);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Build, verify and analyse symmetric association schemes"};
    app.require_subcommand(1);
    int code = 0;
    long long budget_flag = 0;

    auto* build = app.add_subcommand("build", "Build a named scheme and write it as a scheme file");
    std::string build_name, build_out;
    std::vector<std::string> build_params;
    build->add_option("name", build_name, "sylvester | bilinear | brouwer-pasechnik | hamming | decaen-vandam | "
                                          "cyclotomic | ag28 | polhill | folded-halved-12 | wreath | knn-matching | "
                                          "lattice | latin-squares | complete")
        ->required();
    build->add_option("params", build_params, "key=value parameters");
    build->add_option("-o,--output", build_out, "output scheme file")->required();
    build->callback([&] { code = cmd_build(build_name, build_params, build_out); });

    auto* verify = app.add_subcommand("verify", "Verify the scheme axioms and print the tensor digest");
    std::string verify_path;
    verify->add_option("file", verify_path)->required();
    verify->callback([&] { code = cmd_verify(verify_path); });

    auto* eigen = app.add_subcommand("eigen", "Print or write the eigenmatrices P and Q");
    std::string eigen_path, eigen_out;
    eigen->add_option("file", eigen_path)->required();
    eigen->add_option("-o,--output", eigen_out);
    eigen->callback([&] { code = cmd_eigen(eigen_path, eigen_out); });

    auto* classify = app.add_subcommand("classify", "Classify every relation as a strongly regular graph");
    std::string classify_path;
    classify->add_option("file", classify_path)->required();
    classify->callback([&] { code = cmd_classify(classify_path); });

    auto* fuse_cmd = app.add_subcommand("fuse", "Fuse classes, e.g. --blocks \"1,2|3|4,5\"");
    std::string fuse_path, fuse_blocks, fuse_out;
    fuse_cmd->add_option("file", fuse_path)->required();
    fuse_cmd->add_option("--blocks", fuse_blocks)->required();
    fuse_cmd->add_option("-o,--output", fuse_out)->required();
    fuse_cmd->callback([&] { code = cmd_fuse(fuse_path, fuse_blocks, fuse_out); });

    auto* amorphic = app.add_subcommand("amorphic", "Check every fusion of the scheme");
    std::string amorphic_path;
    bool amorphic_force = false;
    amorphic->add_option("file", amorphic_path)->required();
    amorphic->add_flag("--force", amorphic_force, "allow more than 10 classes");
    amorphic->callback([&] { code = cmd_amorphic(amorphic_path, amorphic_force); });

    auto* spread = app.add_subcommand("spread", "Find, remove, or build spreads in a relation");
    std::string spread_path, spread_remove, spread_out, spread_clique, spread_prefix;
    int spread_rel = 0;
    bool spread_find = false;
    unsigned spread_family = 0;
    std::size_t spread_size = 0;
    spread->add_option("file", spread_path)->required();
    spread->add_option("--relation", spread_rel)->required();
    auto* opt_find = spread->add_flag("--find", spread_find, "search for a spread");
    auto* opt_remove = spread->add_option("--remove", spread_remove, "spread witness to remove");
    auto* opt_family = spread->add_option("--family", spread_family, "Brouwer-Pasechnik spread family over GF(q)");
    opt_find->excludes(opt_remove)->excludes(opt_family);
    opt_remove->excludes(opt_family);
    spread->add_option("--clique-size", spread_size, "clique size for --find");
    spread->add_option("--clique", spread_clique, "clique witness for --family");
    spread->add_option("--spreads-prefix", spread_prefix, "write the family's spreads to <prefix><k>.txt");
    spread->add_option("--budget", budget_flag, "search node budget");
    spread->add_option("-o,--output", spread_out);
    spread->callback([&] {
        const Scheme s = load_scheme(spread_path);
        check_relation(s, spread_rel);
        if (spread_find) {
            code = cmd_spread_find(s, spread_rel, spread_size ? std::optional<std::size_t>(spread_size) : std::nullopt,
                                   search_budget(budget_flag), spread_out);
        } else if (!spread_remove.empty()) {
            if (spread_out.empty())
                throw UsageError("--remove needs -o");
            code = cmd_spread_remove(s, spread_rel, spread_remove, spread_out);
        } else if (spread_family) {
            if (spread_out.empty() || spread_clique.empty())
                throw UsageError("--family needs --clique and -o");
            code = cmd_spread_family(s, spread_rel, spread_family, spread_clique, spread_out, spread_prefix);
        } else {
            throw UsageError("spread needs one of --find, --remove, --family");
        }
    });

    auto* clique = app.add_subcommand("clique", "Search for a clique in a relation");
    std::string clique_path, clique_out;
    int clique_rel = 0;
    std::size_t clique_size = 0;
    clique->add_option("file", clique_path)->required();
    clique->add_option("--relation", clique_rel)->required();
    clique->add_option("--size", clique_size)->required();
    clique->add_option("--budget", budget_flag, "search node budget");
    clique->add_option("-o,--output", clique_out);
    clique->callback([&] { code = cmd_clique(clique_path, clique_rel, clique_size, search_budget(budget_flag), clique_out); });

    auto* cf = app.add_subcommand("common-fission", "Combine two fissions of a common 2-class scheme");
    std::string cf_a, cf_b, cf_split, cf_out;
    cf->add_option("first", cf_a)->required();
    cf->add_option("second", cf_b)->required();
    cf->add_option("--split", cf_split, "a,b: unsplit class of the first scheme, its complement in the second");
    cf->add_option("-o,--output", cf_out);
    cf->callback([&] { code = cmd_common_fission(cf_a, cf_b, cf_split, cf_out); });

    auto* tm = app.add_subcommand("theorem-main", "Check the conditions for splitting a Latin square type relation");
    std::string tm_path, tm_out;
    int tm_rel = 0;
    std::vector<std::string> tm_parts;
    tm->add_option("file", tm_path)->required();
    tm->add_option("--relation", tm_rel)->required();
    tm->add_option("--parts", tm_parts, "spread witness files; the remaining edges form the last part");
    tm->add_option("-o,--output", tm_out);
    tm->callback([&] { code = cmd_theorem_main(tm_path, tm_rel, tm_parts, tm_out); });

    auto* quot = app.add_subcommand("quotient", "Quotient scheme over a square spread relation");
    std::string quot_path, quot_out;
    int quot_rel = 0;
    quot->add_option("file", quot_path)->required();
    quot->add_option("--spread-relation", quot_rel)->required();
    quot->add_option("-o,--output", quot_out);
    quot->callback([&] { code = cmd_quotient(quot_path, quot_rel, quot_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const DomainFailure&) {
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const TheoremFalsified& e) {
        std::cout << e.what() << "\nTHEOREM FALSIFIED\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}
