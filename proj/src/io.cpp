#include "ascheme/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace ascheme {

ParseError::ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line), column_(column)
{
}

namespace {

struct Token {
    long long value;
    std::size_t column;
};

std::vector<Token> tokens(const std::string& text, const std::string& source, std::size_t line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t' || text[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r')
            ++j;
        long long v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, v);
        if (ec != std::errc() || ptr != text.data() + j)
            throw ParseError(source, line, i + 1, "expected an integer, found '" + text.substr(i, j - i) + "'");
        out.push_back({v, i + 1});
        i = j;
    }
    return out;
}

bool parse_field(const std::string& word, const std::string& key, long long& out)
{
    if (word.rfind(key + "=", 0) != 0)
        return false;
    const char* b = word.data() + key.size() + 1;
    const char* e = word.data() + word.size();
    auto [ptr, ec] = std::from_chars(b, e, out);
    return ec == std::errc() && ptr == e && b != e;
}

std::ofstream open_out(const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    return out;
}

std::ifstream open_in(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    return in;
}

} // namespace

ColorMatrix parse_scheme(std::istream& in, const std::string& source)
{
    std::string text;
    std::size_t line = 0;
    bool header = false;
    long long v = 0, d = 0;
    std::vector<std::uint8_t> cells;
    std::size_t row = 0;
    while (std::getline(in, text)) {
        ++line;
        if (!text.empty() && text.back() == '\r')
            text.pop_back();
        if (!text.empty() && text[0] == '#')
            continue;
        if (!header) {
            if (text.find_first_not_of(" \t") == std::string::npos)
                continue;
            std::istringstream hs(text);
            std::string magic, vw, dw, extra;
            hs >> magic >> vw >> dw;
            if (magic != "ASCHEME")
                throw ParseError(source, line, 1, "expected header 'ASCHEME v=<int> d=<int>'");
            if (!parse_field(vw, "v", v) || v < 2)
                throw ParseError(source, line, text.find(vw) + 1, "bad vertex count '" + vw + "'");
            if (!parse_field(dw, "d", d) || d < 1 || d > 255)
                throw ParseError(source, line, text.find(dw) + 1, "bad class count '" + dw + "'");
            if (hs >> extra)
                throw ParseError(source, line, text.find(extra) + 1, "unexpected '" + extra + "' after header");
            if (v > 20000)
                throw ParseError(source, line, 1, "vertex count too large");
            header = true;
            cells.assign(static_cast<std::size_t>(v * v), 0);
            continue;
        }
        const auto toks = tokens(text, source, line);
        if (toks.empty())
            continue;
        if (row >= static_cast<std::size_t>(v))
            throw ParseError(source, line, 1, "more than " + std::to_string(v) + " rows");
        if (toks.size() != static_cast<std::size_t>(v))
            throw ParseError(source, line, toks.size() < static_cast<std::size_t>(v) ? text.size() + 1 : toks[static_cast<std::size_t>(v)].column,
                             "row " + std::to_string(row) + " has " + std::to_string(toks.size()) + " entries, expected " +
                                 std::to_string(v));
        const auto uv = static_cast<std::size_t>(v);
        for (std::size_t y = 0; y < uv; ++y) {
            const long long c = toks[y].value;
            const std::size_t col = toks[y].column;
            if (c < 0 || c > d)
                throw ParseError(source, line, col, "class " + std::to_string(c) + " out of range 0.." + std::to_string(d));
            if ((y == row) != (c == 0))
                throw ParseError(source, line, col,
                                 y == row ? "diagonal cell must be 0" : "off-diagonal cell (" + std::to_string(row) + "," +
                                                                           std::to_string(y) + ") must not be 0");
            if (y < row && cells[y * uv + row] != c)
                throw ParseError(source, line, col,
                                 "not symmetric: cell (" + std::to_string(row) + "," + std::to_string(y) + ") is " +
                                     std::to_string(c) + " but (" + std::to_string(y) + "," + std::to_string(row) + ") is " +
                                     std::to_string(cells[y * uv + row]));
            cells[row * uv + y] = static_cast<std::uint8_t>(c);
        }
        ++row;
    }
    if (!header)
        throw ParseError(source, line + 1, 1, "missing header");
    if (row != static_cast<std::size_t>(v))
        throw ParseError(source, line + 1, 1,
                         "truncated: found " + std::to_string(row) + " rows, expected " + std::to_string(v));
    try {
        return ColorMatrix(static_cast<std::size_t>(v), static_cast<int>(d), std::move(cells));
    } catch (const SchemeError& e) {
        throw ParseError(source, line, 1, e.what());
    }
}

ColorMatrix read_scheme(const std::string& path)
{
    auto in = open_in(path);
    return parse_scheme(in, path);
}

std::string format_scheme(const ColorMatrix& c)
{
    std::string out = "ASCHEME v=" + std::to_string(c.order()) + " d=" + std::to_string(c.classes()) + "\n";
    out.reserve(out.size() + c.order() * c.order() * 3);
    for (std::size_t x = 0; x < c.order(); ++x) {
        const auto r = c.row(x);
        for (std::size_t y = 0; y < c.order(); ++y) {
            if (y)
                out += ' ';
            out += std::to_string(r[y]);
        }
        out += '\n';
    }
    return out;
}

void write_text(const std::string& text, const std::string& path)
{
    auto out = open_out(path);
    out << text;
    if (!out)
        throw IoError("write to '" + path + "' failed");
}

void write_scheme(const ColorMatrix& c, const std::string& path) { write_text(format_scheme(c), path); }

std::string format_eigenmatrix(const Spectrum& s)
{
    std::ostringstream os;
    auto block = [&](const char* label, const RatMatrix& m) {
        os << "# " << label << "\n";
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t c = 0; c < m.cols(); ++c)
                os << (c ? "\t" : "") << to_string(m(r, c));
            os << "\n";
        }
    };
    block("P", s.P);
    os << "\n";
    block("Q", s.Q);
    os << "\n# multiplicities\n";
    for (std::size_t j = 0; j < s.multiplicities.size(); ++j)
        os << (j ? "\t" : "") << s.multiplicities[j];
    os << "\n";
    return os.str();
}

void write_eigenmatrix(const Spectrum& s, const std::string& path) { write_text(format_eigenmatrix(s), path); }

std::vector<std::size_t> read_clique(const std::string& path)
{
    auto in = open_in(path);
    std::vector<std::size_t> out;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (text.empty() || text[0] == '#')
            continue;
        for (const auto& t : tokens(text, path, line)) {
            if (t.value < 0)
                throw ParseError(path, line, t.column, "negative vertex index");
            out.push_back(static_cast<std::size_t>(t.value));
        }
    }
    return out;
}

void write_clique(const std::vector<std::size_t>& clique, const std::string& path)
{
    std::string text;
    for (auto x : clique)
        text += std::to_string(x) + "\n";
    write_text(text, path);
}

std::string format_spread(const Spread& s)
{
    std::string text;
    const auto cl = s.cliques();
    for (std::size_t i = 0; i < cl.size(); ++i) {
        text += "# clique " + std::to_string(i) + "\n";
        for (auto x : cl[i])
            text += std::to_string(x) + "\n";
    }
    return text;
}

void write_spread(const Spread& s, const std::string& path) { write_text(format_spread(s), path); }

Spread read_spread(const std::string& path, std::size_t v)
{
    auto in = open_in(path);
    std::vector<std::vector<std::size_t>> cliques;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (text.rfind("# clique", 0) == 0) {
            cliques.emplace_back();
            continue;
        }
        if (text.empty() || text[0] == '#')
            continue;
        if (cliques.empty())
            throw ParseError(path, line, 1, "vertex before the first '# clique' line");
        for (const auto& t : tokens(text, path, line)) {
            if (t.value < 0 || static_cast<std::size_t>(t.value) >= v)
                throw ParseError(path, line, t.column, "vertex index out of range");
            cliques.back().push_back(static_cast<std::size_t>(t.value));
        }
    }
    try {
        return Spread::from_cliques(v, cliques);
    } catch (const SpreadError& e) {
        throw ParseError(path, line, 1, e.what());
    }
}

} // namespace ascheme
