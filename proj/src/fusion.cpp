#include "ascheme/fusion.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ascheme {

ClassPartition::ClassPartition(int d, std::vector<std::vector<int>> blocks) : d_(d), blocks_(std::move(blocks))
{
    if (d < 1)
        throw SchemeError("partition needs at least one class");
    map_.assign(static_cast<std::size_t>(d) + 1, -1);
    map_[0] = 0;
    for (auto& b : blocks_) {
        if (b.empty())
            throw SchemeError("empty block in partition");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi)
        for (int c : blocks_[bi]) {
            if (c < 1 || c > d)
                throw SchemeError("class " + std::to_string(c) + " out of range 1.." + std::to_string(d));
            if (map_[static_cast<std::size_t>(c)] != -1)
                throw SchemeError("class " + std::to_string(c) + " appears twice in partition");
            map_[static_cast<std::size_t>(c)] = static_cast<int>(bi) + 1;
        }
    for (int c = 1; c <= d; ++c)
        if (map_[static_cast<std::size_t>(c)] == -1)
            throw SchemeError("class " + std::to_string(c) + " missing from partition");
}

ClassPartition ClassPartition::identity(int d)
{
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= d; ++i)
        blocks.push_back({i});
    return ClassPartition(d, std::move(blocks));
}

ClassPartition ClassPartition::parse(const std::string& text, int d)
{
    std::vector<std::vector<int>> blocks(1);
    std::string num;
    auto flush = [&] {
        if (num.empty())
            throw SchemeError("malformed partition '" + text + "'");
        blocks.back().push_back(std::stoi(num));
        num.clear();
    };
    for (char ch : text) {
        if (ch >= '0' && ch <= '9') {
            num += ch;
        } else if (ch == ',') {
            flush();
        } else if (ch == '|') {
            flush();
            blocks.emplace_back();
        } else if (ch != ' ') {
            throw SchemeError("unexpected character '" + std::string(1, ch) + "' in partition");
        }
    }
    flush();
    return ClassPartition(d, std::move(blocks));
}

ClassPartition ClassPartition::from_rgs(const std::vector<int>& rgs)
{
    std::vector<std::vector<int>> blocks;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
        const auto b = static_cast<std::size_t>(rgs[i]);
        if (b >= blocks.size())
            blocks.resize(b + 1);
        blocks[b].push_back(static_cast<int>(i) + 1);
    }
    return ClassPartition(static_cast<int>(rgs.size()), std::move(blocks));
}

std::string ClassPartition::str() const
{
    std::ostringstream os;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b)
            os << "|";
        for (std::size_t i = 0; i < blocks_[b].size(); ++i)
            os << (i ? "," : "") << blocks_[b][i];
    }
    return os.str();
}

namespace {

void check_partition(const Scheme& s, const ClassPartition& p)
{
    if (p.classes() != s.classes())
        throw SchemeError("partition covers " + std::to_string(p.classes()) + " classes, scheme has " +
                          std::to_string(s.classes()));
}

} // namespace

ColorMatrix fuse(const Scheme& s, const ClassPartition& p)
{
    check_partition(s, p);
    const auto& src = s.colors().cells();
    std::vector<std::uint8_t> cells(src.size());
    std::transform(src.begin(), src.end(), cells.begin(),
                   [&](std::uint8_t c) { return static_cast<std::uint8_t>(p.fused_class(c)); });
    return ColorMatrix(s.order(), p.size(), std::move(cells));
}

VerifyResult is_fusion_scheme(const Scheme& s, const ClassPartition& p)
{
    check_partition(s, p);
    const int e = p.size();
    const std::size_t n = static_cast<std::size_t>(e) + 1;
    std::vector<std::vector<int>> members(n);
    members[0] = {0};
    for (int b = 0; b < e; ++b)
        members[static_cast<std::size_t>(b) + 1] = p.blocks()[static_cast<std::size_t>(b)];

    std::vector<long long> fused(n * n * n, 0);
    auto sum = [&](int h, std::size_t I, std::size_t J) {
        long long t = 0;
        for (int i : members[I])
            for (int j : members[J])
                t += s.p(h, i, j);
        return t;
    };
    for (std::size_t H = 0; H < n; ++H)
        for (std::size_t I = 0; I < n; ++I)
            for (std::size_t J = 0; J < n; ++J) {
                const int h0 = members[H].front();
                const long long ref = sum(h0, I, J);
                for (std::size_t m = 1; m < members[H].size(); ++m) {
                    const int h = members[H][m];
                    const long long got = sum(h, I, J);
                    if (got != ref)
                        return Violation{static_cast<int>(I), static_cast<int>(J), static_cast<int>(H),
                                         s.representative(h0), s.representative(h), ref, got};
                }
                fused[(H * n + I) * n + J] = ref;
            }

    std::vector<VertexPair> reps(n);
    for (std::size_t H = 0; H < n; ++H) {
        reps[H] = s.representative(members[H].front());
        for (int h : members[H])
            reps[H] = std::min(reps[H], s.representative(h));
    }
    return Scheme(fuse(s, p), std::move(fused), std::move(reps));
}

VerifyResult fuse_and_verify(const Scheme& s, const ClassPartition& p)
{
    return scheme_verify(fuse(s, p));
}

AmorphicVerdict amorphic_check(const Scheme& s, bool force)
{
    const int d = s.classes();
    if (d > kAmorphicClassGuard && !force)
        throw AmorphicGuardError("amorphicity check over " + std::to_string(d) + " classes exceeds the guard of " +
                                 std::to_string(kAmorphicClassGuard) + "; force to override");
    AmorphicVerdict verdict;
    std::vector<int> rgs(static_cast<std::size_t>(d), 0);
    std::vector<int> prefix_max(static_cast<std::size_t>(d), 0);
    while (true) {
        ++verdict.partitions_checked;
        const auto part = ClassPartition::from_rgs(rgs);
        auto r = is_fusion_scheme(s, part);
        if (auto* v = as_violation(r)) {
            verdict.failing = part;
            verdict.violation = *v;
            return verdict;
        }
        // Next restricted growth string in lexicographic order.
        int i = d - 1;
        while (i > 0 && rgs[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)])
            --i;
        if (i <= 0)
            break;
        ++rgs[static_cast<std::size_t>(i)];
        prefix_max[static_cast<std::size_t>(i)] =
            std::max(prefix_max[static_cast<std::size_t>(i - 1)], rgs[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < d; ++j) {
            rgs[static_cast<std::size_t>(j)] = 0;
            prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(i)];
        }
    }
    verdict.amorphic = true;

    bool all_ls = true, all_nls = true;
    for (int i = 1; i <= d; ++i) {
        auto r = relation_srg_params(s, i);
        const auto* p = std::get_if<SrgParams>(&r);
        all_ls = all_ls && p && is_ls_inclusive(*p);
        all_nls = all_nls && p && is_nls_inclusive(*p);
    }
    if (all_ls && all_nls)
        verdict.common_type = "LS+NLS";
    else if (all_ls)
        verdict.common_type = "LS";
    else if (all_nls)
        verdict.common_type = "NLS";
    if (d >= 3 && verdict.common_type.empty())
        throw InternalConsistencyError("amorphic scheme with d >= 3 whose relations are not all of one Latin square type");
    return verdict;
}

namespace {

bool complementary(const ColorMatrix& a, int ca, const ColorMatrix& b, int cb)
{
    const std::size_t v = a.order();
    for (std::size_t x = 0; x < v; ++x)
        for (std::size_t y = x + 1; y < v; ++y)
            if ((a(x, y) == ca) == (b(x, y) == cb))
                return false;
    return true;
}

ClassPartition two_class_split(int d, int single)
{
    std::vector<int> rest;
    for (int i = 1; i <= d; ++i)
        if (i != single)
            rest.push_back(i);
    return ClassPartition(d, {rest, {single}});
}

std::vector<Rational> q_column(const Spectrum& sp, std::size_t j)
{
    std::vector<Rational> c;
    for (std::size_t i = 0; i < sp.Q.rows(); ++i)
        c.push_back(sp.Q(i, j));
    return c;
}

// Idempotent column of the 2-class fusion rewritten in the basis of a scheme
// whose class `single` takes the value at fused index `single_index` and
// whose other classes take the value at the other fused index.
std::vector<Rational> lift(const std::vector<Rational>& two_class_col, int d, int single, int single_index)
{
    std::vector<Rational> out(static_cast<std::size_t>(d) + 1);
    out[0] = two_class_col[0];
    for (int i = 1; i <= d; ++i)
        out[static_cast<std::size_t>(i)] =
            two_class_col[static_cast<std::size_t>(i == single ? single_index : 3 - single_index)];
    return out;
}

bool has_column(const Spectrum& sp, const std::vector<Rational>& col)
{
    for (std::size_t j = 0; j < sp.Q.cols(); ++j)
        if (q_column(sp, j) == col)
            return true;
    return false;
}

} // namespace

CommonFissionReport common_fission(const Scheme& a, const Scheme& b, std::optional<FissionSplit> split)
{
    CommonFissionReport rep;
    const std::size_t v = a.order();
    if (b.order() != v) {
        rep.reason = "schemes live on different vertex counts";
        return rep;
    }
    if (!split) {
        std::vector<FissionSplit> found;
        for (int ca = 1; ca <= a.classes(); ++ca)
            for (int cb = 1; cb <= b.classes(); ++cb)
                if (a.valency(ca) + b.valency(cb) == static_cast<long long>(v) - 1 &&
                    complementary(a.colors(), ca, b.colors(), cb))
                    found.push_back({ca, cb});
        if (found.empty()) {
            rep.reason = "no class of the first scheme is the complement of a class of the second";
            return rep;
        }
        if (found.size() > 1) {
            rep.reason = "ambiguous split; name the classes explicitly";
            return rep;
        }
        split = found.front();
    } else if (!complementary(a.colors(), split->a_class, b.colors(), split->b_class)) {
        rep.reason = "named classes are not complementary";
        return rep;
    }
    rep.split = split;
    const int ca = split->a_class, cb = split->b_class;

    const ClassPartition split_a = two_class_split(a.classes(), ca);
    const int b_index = split_a.fused_class(ca); // index of B in the 2-class fusion
    const auto fa = is_fusion_scheme(a, split_a);
    const auto fb = is_fusion_scheme(b, two_class_split(b.classes(), cb));
    if (as_violation(fa) || as_violation(fb)) {
        rep.reason = "the split does not fuse to a common 2-class scheme";
        return rep;
    }
    rep.half_valency = 2 * a.valency(ca) == static_cast<long long>(v) - 1;

    // Union colouring: classes of a other than B, then classes of b other than A.
    std::vector<int> a_map(static_cast<std::size_t>(a.classes()) + 1, 0), b_map(static_cast<std::size_t>(b.classes()) + 1, 0);
    int next = 1;
    for (int i = 1; i <= a.classes(); ++i)
        if (i != ca)
            a_map[static_cast<std::size_t>(i)] = next++;
    const int e = next - 1;
    for (int j = 1; j <= b.classes(); ++j)
        if (j != cb)
            b_map[static_cast<std::size_t>(j)] = next++;
    const int total = next - 1;
    const auto& ac = a.colors();
    const auto& bc = b.colors();
    ColorMatrix uc = ColorMatrix::from_function(v, total, [&](std::size_t x, std::size_t y) {
        const int c = ac(x, y);
        return c != ca ? a_map[static_cast<std::size_t>(c)] : b_map[static_cast<std::size_t>(bc(x, y))];
    });
    auto verified = scheme_verify(uc);
    if (auto* viol = as_violation(verified)) {
        rep.status = CommonFissionReport::Status::NotScheme;
        rep.violation = *viol;
        rep.reason = "common fission is not an association scheme";
        return rep;
    }
    rep.status = CommonFissionReport::Status::Success;
    rep.scheme = std::get<Scheme>(std::move(verified));

    // Predicted idempotents: those of a except the unsplit one shared with the
    // 2-class fusion, together with those of b except the one a leaves unsplit.
    const Spectrum sa = spectrum(a), sb = spectrum(b), su = spectrum(*rep.scheme);
    const Scheme two = std::get<Scheme>(fa);
    const Spectrum s2 = spectrum(two);
    std::set<std::vector<Rational>> actual;
    for (std::size_t j = 0; j < su.Q.cols(); ++j)
        actual.insert(q_column(su, j));
    for (std::size_t keep_a : {std::size_t{1}, std::size_t{2}}) {
        const std::size_t keep_b = 3 - keep_a;
        const auto in_a = lift(q_column(s2, keep_a), a.classes(), ca, b_index);
        const auto in_b = lift(q_column(s2, keep_b), b.classes(), cb, 3 - b_index);
        if (!has_column(sa, in_a) || !has_column(sb, in_b))
            continue;
        std::set<std::vector<Rational>> predicted;
        for (std::size_t j = 0; j < sa.Q.cols(); ++j) {
            const auto col = q_column(sa, j);
            if (j != 0 && col == in_a)
                continue;
            std::vector<Rational> u(static_cast<std::size_t>(total) + 1);
            u[0] = col[0];
            for (int i = 1; i <= a.classes(); ++i)
                if (i != ca)
                    u[static_cast<std::size_t>(a_map[static_cast<std::size_t>(i)])] = col[static_cast<std::size_t>(i)];
            for (int k = e + 1; k <= total; ++k)
                u[static_cast<std::size_t>(k)] = col[static_cast<std::size_t>(ca)];
            predicted.insert(u);
        }
        for (std::size_t j = 1; j < sb.Q.cols(); ++j) {
            const auto col = q_column(sb, j);
            if (col == in_b)
                continue;
            std::vector<Rational> u(static_cast<std::size_t>(total) + 1);
            u[0] = col[0];
            for (int k = 1; k <= e; ++k)
                u[static_cast<std::size_t>(k)] = col[static_cast<std::size_t>(cb)];
            for (int i = 1; i <= b.classes(); ++i)
                if (i != cb)
                    u[static_cast<std::size_t>(b_map[static_cast<std::size_t>(i)])] = col[static_cast<std::size_t>(i)];
            predicted.insert(u);
        }
        if (predicted == actual)
            rep.idempotents_match = true;
    }
    return rep;
}

TheoremMainReport theorem_main_check(const Scheme& s, int b_index, const std::vector<Graph>& parts)
{
    const Graph B = relation_graph(s, b_index);
    {
        Graph covered(B.order());
        for (const auto& g : parts) {
            if (!covered.disjoint_from(g))
                throw SchemeError("parts overlap");
            covered = covered.united(g);
        }
        if (!(covered == B))
            throw SchemeError("parts do not partition the edges of relation " + std::to_string(b_index));
    }

    TheoremMainReport rep;
    const long long v = static_cast<long long>(s.order());
    const long long k = s.valency(b_index);
    bool negative = false;

    // A conference graph on n^2 vertices has both signs; take the one the
    // parts agree with, Latin square type when they agree with neither.
    auto parts_match = [&](bool neg) {
        for (const auto& g : parts) {
            auto r = srg_params(g);
            const auto* p = std::get_if<SrgParams>(&r);
            if (!p || !(neg ? is_nls_inclusive(*p) : is_ls_inclusive(*p)))
                return false;
        }
        return true;
    };

    auto bp = relation_srg_params(s, b_index);
    if (const auto* p = std::get_if<SrgParams>(&bp)) {
        std::optional<SrgType> lt = latin_square_parameters(*p, false);
        const auto nlt = latin_square_parameters(*p, true);
        if (!lt || (nlt && !parts_match(false) && parts_match(true))) {
            lt = nlt;
            negative = true;
        }
        if (lt) {
            rep.latin_type = {true, classify_type(*p).str()};
            rep.n = lt->n;
            rep.t = lt->t;
        } else {
            rep.latin_type = {false, "relation " + std::to_string(b_index) + " " + p->str() + " is " +
                                         classify_type(*p).str()};
        }
    } else {
        rep.latin_type = {false, "relation is not strongly regular: " + std::get<NotSrg>(bp).describe()};
    }

    if (rep.latin_type.ok) {
        const Spectrum sp = spectrum(s);
        for (std::size_t j = 1; j < sp.P.rows(); ++j)
            if (sp.multiplicities[j] == k && sp.P(j, static_cast<std::size_t>(b_index)) == rep.n - rep.t) {
                rep.idempotent = {true, "idempotent row " + std::to_string(j) + " has multiplicity " + std::to_string(k) +
                                            " and eigenvalue " + std::to_string(rep.n - rep.t)};
                break;
            }
        if (!rep.idempotent.ok) {
            std::ostringstream os;
            os << "no idempotent has multiplicity " << k << " with eigenvalue " << rep.n - rep.t
               << " (multiplicities";
            for (auto m : sp.multiplicities)
                os << " " << m;
            os << ")";
            rep.idempotent.note = os.str();
        }
    } else {
        rep.idempotent.note = "not evaluated: relation is not of Latin square type";
    }

    rep.not_half.ok = 2 * k != v - 1;
    rep.not_half.note = rep.not_half.ok ? "k != (v-1)/2" : "k = (n^2-1)/2 = " + std::to_string(k);

    rep.parts_same_type.ok = rep.latin_type.ok;
    std::ostringstream notes;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto r = srg_params(parts[i]);
        notes << (i ? "; " : "") << "part " << i + 1 << ": ";
        if (const auto* p = std::get_if<SrgParams>(&r)) {
            const bool same = negative ? is_nls_inclusive(*p) : is_ls_inclusive(*p);
            notes << p->str() << " " << classify_type(*p).str();
            rep.parts_same_type.ok = rep.parts_same_type.ok && same;
        } else {
            notes << "not SRG (" << std::get<NotSrg>(r).describe() << ")";
            rep.parts_same_type.ok = false;
        }
    }
    rep.parts_same_type.note = notes.str();

    if (!rep.preconditions_hold())
        return rep;

    std::vector<Graph> graphs;
    for (int i = 1; i <= s.classes(); ++i)
        if (i != b_index)
            graphs.push_back(relation_graph(s, i));
    for (const auto& g : parts)
        graphs.push_back(g);
    auto verified = scheme_verify(ColorMatrix::from_graphs(graphs));
    if (auto* viol = as_violation(verified))
        rep.violation = *viol;
    else
        rep.scheme = std::get<Scheme>(std::move(verified));
    return rep;
}

DecompositionReport verify_commuting_decomposition(const std::vector<Graph>& graphs)
{
    DecompositionReport rep;
    if (graphs.empty()) {
        rep.partition_error = "no graphs";
        return rep;
    }
    const std::size_t v = graphs.front().order();
    for (const auto& g : graphs)
        if (g.order() != v) {
            rep.partition_error = "graphs have different orders";
            return rep;
        }
    for (std::size_t x = 0; x < v && rep.partition_error.empty(); ++x)
        for (std::size_t y = x + 1; y < v; ++y) {
            int hits = 0;
            for (const auto& g : graphs)
                hits += g.adjacent(x, y) ? 1 : 0;
            if (hits != 1) {
                rep.partition_error = hits == 0 ? "pair not covered" : "pair covered more than once";
                rep.partition_witness = VertexPair{x, y};
                break;
            }
        }
    rep.partition_ok = rep.partition_error.empty();

    rep.commuting = true;
    for (std::size_t a = 0; a < graphs.size() && rep.commuting; ++a)
        for (std::size_t b = a + 1; b < graphs.size() && rep.commuting; ++b)
            for (std::size_t x = 0; x < v && rep.commuting; ++x)
                for (std::size_t y = 0; y < v; ++y)
                    if (popcount_and(graphs[a].row(x), graphs[b].row(y)) !=
                        popcount_and(graphs[b].row(x), graphs[a].row(y))) {
                        rep.commuting = false;
                        rep.noncommuting = {static_cast<int>(a) + 1, static_cast<int>(b) + 1};
                        rep.noncommuting_witness = VertexPair{x, y};
                        break;
                    }

    for (const auto& g : graphs) {
        rep.params.push_back(srg_params(g));
        if (const auto* p = std::get_if<SrgParams>(&rep.params.back()))
            rep.types.push_back(classify_type(*p));
        else
            rep.types.push_back(std::nullopt);
    }

    if (rep.partition_ok) {
        auto verified = scheme_verify(ColorMatrix::from_graphs(graphs));
        if (auto* viol = as_violation(verified))
            rep.violation = *viol;
        else
            rep.is_scheme = true;
    }
    return rep;
}

} // namespace ascheme
