#include "ascheme/io.hpp"

#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace ascheme;
using testing::corpus_scheme;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir()
    {
        std::random_device rd;
        path = fs::temp_directory_path() / ("ascheme-io-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

ColorMatrix parse_text(const std::string& text)
{
    std::istringstream in(text);
    return parse_scheme(in, "t");
}

// Line and column of the ParseError raised by parsing text.
std::pair<std::size_t, std::size_t> error_at(const std::string& text)
{
    try {
        parse_text(text);
    } catch (const ParseError& e) {
        return {e.line(), e.column()};
    }
    FAIL("no parse error for: " << text);
    return {0, 0};
}

Rational parse_rational(const std::string& s)
{
    const auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash))) / Rational(std::stoll(s.substr(slash + 1)));
}

// Reads "# label" blocks of tab-separated entries.
std::map<std::string, std::vector<std::vector<std::string>>> read_blocks(const std::string& text)
{
    std::map<std::string, std::vector<std::vector<std::string>>> out;
    std::istringstream in(text);
    std::string line, label;
    while (std::getline(in, line)) {
        if (line.rfind("# ", 0) == 0) {
            label = line.substr(2);
            continue;
        }
        if (line.empty())
            continue;
        std::vector<std::string> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, '\t'))
            row.push_back(cell);
        out[label].push_back(row);
    }
    return out;
}

} // namespace

TEST_CASE("scheme files round trip")
{
    TempDir dir;
    for (const auto& [name, s] : testing::corpus_upto(256)) {
        CAPTURE(name);
        const std::string path = dir.file(name + ".txt");
        write_scheme(s->colors(), path);
        CHECK(read_scheme(path) == s->colors());
        CHECK(parse_text(format_scheme(s->colors())) == s->colors());
    }
}

TEST_CASE("scheme file format details")
{
    const ColorMatrix c5 = corpus_scheme("c5").colors();
    const std::string text = format_scheme(c5);
    CHECK(text.rfind("ASCHEME v=5 d=2\n0 1 2 2 1\n", 0) == 0);
    // Comments, blank lines and CRLF line ends are accepted.
    std::string noisy = "# made by hand\n\n";
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line))
        noisy += line + "\r\n# between rows\n";
    CHECK(parse_text(noisy) == c5);
}

TEST_CASE("scheme parse errors carry line and column")
{
    CHECK(error_at("") == std::make_pair(std::size_t{1}, std::size_t{1}));
    CHECK(error_at("SCHEME v=2 d=1\n0 1\n1 0\n") == std::make_pair(std::size_t{1}, std::size_t{1}));
    CHECK(error_at("ASCHEME v=x d=1\n").second == 9);
    CHECK(error_at("ASCHEME v=2 d=0\n").second == 13);
    CHECK(error_at("ASCHEME v=2 d=1 extra\n").second == 17);
    // Row too short: the column points past the end of the line.
    CHECK(error_at("ASCHEME v=3 d=1\n0 1 1\n1 0\n") == std::make_pair(std::size_t{3}, std::size_t{4}));
    // Row too long: the column points at the first surplus entry.
    CHECK(error_at("ASCHEME v=2 d=1\n0 1 1\n") == std::make_pair(std::size_t{2}, std::size_t{5}));
    CHECK(error_at("ASCHEME v=2 d=1\n0 x\n") == std::make_pair(std::size_t{2}, std::size_t{3}));
    CHECK(error_at("ASCHEME v=2 d=1\n0 2\n2 0\n") == std::make_pair(std::size_t{2}, std::size_t{3}));
    CHECK(error_at("ASCHEME v=2 d=1\n1 1\n1 0\n") == std::make_pair(std::size_t{2}, std::size_t{1}));
    CHECK(error_at("ASCHEME v=2 d=1\n0 0\n") == std::make_pair(std::size_t{2}, std::size_t{3}));
    CHECK(error_at("ASCHEME v=3 d=2\n0 1 2\n2 0 1\n2 1 0\n") == std::make_pair(std::size_t{3}, std::size_t{1}));
    CHECK(error_at("ASCHEME v=2 d=1\n0 1\n") == std::make_pair(std::size_t{3}, std::size_t{1}));
    CHECK(error_at("ASCHEME v=2 d=1\n0 1\n1 0\n0 1\n").first == 4);
    // d=2 but class 2 never occurs.
    CHECK_THROWS_AS(parse_text("ASCHEME v=2 d=2\n0 1\n1 0\n"), ParseError);
    try {
        parse_text("ASCHEME v=2 d=1\n0 x\n");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("t:2:3: ", 0) == 0);
    }
}

TEST_CASE("missing and unwritable files raise IoError")
{
    CHECK_THROWS_AS(read_scheme("/nonexistent/dir/scheme.txt"), IoError);
    CHECK_THROWS_AS(write_scheme(corpus_scheme("c5").colors(), "/nonexistent/dir/out.txt"), IoError);
    CHECK_THROWS_AS(read_clique("/nonexistent/clique.txt"), IoError);
}

TEST_CASE("eigenmatrix output parses back to P, Q and the multiplicities")
{
    for (const char* name : {"sylvester", "decaen-vandam", "wreath-6"}) {
        CAPTURE(name);
        const Spectrum sp = spectrum(corpus_scheme(name));
        auto blocks = read_blocks(format_eigenmatrix(sp));
        REQUIRE(blocks.count("P"));
        REQUIRE(blocks.count("Q"));
        REQUIRE(blocks.count("multiplicities"));
        for (const auto* label : {"P", "Q"}) {
            const RatMatrix& m = std::string(label) == "P" ? sp.P : sp.Q;
            const auto& rows = blocks[label];
            REQUIRE(rows.size() == m.rows());
            for (std::size_t r = 0; r < m.rows(); ++r) {
                REQUIRE(rows[r].size() == m.cols());
                for (std::size_t c = 0; c < m.cols(); ++c)
                    CHECK(parse_rational(rows[r][c]) == m(r, c));
            }
        }
        const auto& mult = blocks["multiplicities"];
        REQUIRE(mult.size() == 1);
        for (std::size_t j = 0; j < sp.multiplicities.size(); ++j)
            CHECK(std::stoll(mult[0][j]) == sp.multiplicities[j]);
    }
    // Sylvester: Q has non-integer entries, printed as a/b.
    const std::string text = format_eigenmatrix(spectrum(corpus_scheme("sylvester")));
    CHECK(text.find('/') != std::string::npos);
}

TEST_CASE("clique and spread witnesses round trip")
{
    TempDir dir;
    const std::vector<std::size_t> clique{5, 10, 19, 24, 33, 44, 54, 63};
    write_clique(clique, dir.file("clique.txt"));
    CHECK(read_clique(dir.file("clique.txt")) == clique);

    const auto spread = is_square_spread(relation_graph(corpus_scheme("sylvester"), 3));
    REQUIRE(spread);
    write_spread(*spread, dir.file("spread.txt"));
    CHECK(read_spread(dir.file("spread.txt"), 36) == *spread);
    CHECK(format_spread(*spread).rfind("# clique 0\n0\n1\n", 0) == 0);

    {
        std::ofstream bad(dir.file("bad.txt"));
        bad << "3\n# clique 0\n0\n";
    }
    CHECK_THROWS_AS(read_spread(dir.file("bad.txt"), 4), ParseError);
    {
        std::ofstream bad(dir.file("range.txt"));
        bad << "# clique 0\n0\n9\n";
    }
    CHECK_THROWS_AS(read_spread(dir.file("range.txt"), 4), ParseError);
    {
        std::ofstream bad(dir.file("uneven.txt"));
        bad << "# clique 0\n0\n1\n2\n# clique 1\n3\n";
    }
    CHECK_THROWS_AS(read_spread(dir.file("uneven.txt"), 4), ParseError);
    {
        std::ofstream bad(dir.file("neg.txt"));
        bad << "1\n-2\n";
    }
    CHECK_THROWS_AS(read_clique(dir.file("neg.txt")), ParseError);
}
