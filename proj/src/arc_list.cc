#include <digdom/arc_list.hh>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

using namespace digdom;

using std::size_t;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

ParseError::ParseError(size_t line, const string & message) :
    std::runtime_error("line " + to_string(line) + ": " + message),
    _line(line)
{
}

namespace
{
    auto tokens_of(string_view line) -> vector<string_view>
    {
        vector<string_view> result;
        size_t at = 0;
        while (at < line.size()) {
            while (at < line.size() && (line[at] == ' ' || line[at] == '\t' || line[at] == '\r'))
                ++at;
            size_t start = at;
            while (at < line.size() && ! (line[at] == ' ' || line[at] == '\t' || line[at] == '\r'))
                ++at;
            if (at > start)
                result.push_back(line.substr(start, at - start));
        }
        return result;
    }

    auto parse_index(string_view token, size_t line) -> size_t
    {
        size_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw ParseError(line, "expected a non-negative integer, got '" + string(token) + "'");
        return value;
    }
}

auto digdom::read_arc_list(std::istream & in) -> Digraph
{
    std::optional<size_t> n;
    vector<Arc> arcs;
    vector<size_t> arc_lines;
    string raw;
    size_t line_number = 0;
    while (std::getline(in, raw)) {
        ++line_number;
        string_view line = raw;
        if (auto hash = line.find('#'); hash != string_view::npos)
            line = line.substr(0, hash);
        auto tokens = tokens_of(line);
        if (tokens.empty())
            continue;

        if (! n) {
            if (tokens.size() != 2 || tokens[0] != "n")
                throw ParseError(line_number, "expected header 'n <N>'");
            n = parse_index(tokens[1], line_number);
            if (*n == 0)
                throw ParseError(line_number, "a digraph needs at least one vertex");
            if (*n > max_vertices)
                throw ParseError(line_number, "order " + to_string(*n) + " exceeds capacity " + to_string(max_vertices));
            continue;
        }

        if (tokens.size() != 2)
            throw ParseError(line_number, "expected an arc '<u> <v>'");
        auto u = parse_index(tokens[0], line_number), v = parse_index(tokens[1], line_number);
        if (u >= *n || v >= *n)
            throw ParseError(line_number, "arc " + to_string(u) + " " + to_string(v) + " is out of range for n = " + to_string(*n));
        if (u == v)
            throw ParseError(line_number, "arc " + to_string(u) + " " + to_string(v) + " is a self-loop");
        arcs.emplace_back(u, v);
    }

    if (! n)
        throw ParseError(std::max<size_t>(line_number, 1), "empty input: missing header 'n <N>'");
    return build_digraph(*n, arcs);
}

auto digdom::read_arc_list_file(const string & path) -> Digraph
{
    std::ifstream in(path);
    if (! in)
        throw std::runtime_error("cannot open '" + path + "'");
    try {
        return read_arc_list(in);
    }
    catch (const ParseError & e) {
        throw ParseError(e.line(), path + ": " + string(e.what()).substr(string(e.what()).find(": ") + 2));
    }
}

auto digdom::parse_arc_list(const string & text) -> Digraph
{
    std::istringstream in(text);
    return read_arc_list(in);
}

auto digdom::write_arc_list(std::ostream & out, const Digraph & d) -> void
{
    out << "n " << d.order() << '\n';
    for (auto [u, v] : d.arcs())
        out << u << ' ' << v << '\n';
}

auto digdom::format_arc_list(const Digraph & d) -> string
{
    std::ostringstream out;
    write_arc_list(out, d);
    return out.str();
}
