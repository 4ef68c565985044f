#ifndef DIGDOM_ARC_LIST_HH
#define DIGDOM_ARC_LIST_HH

#include <digdom/digraph.hh>

#include <iosfwd>
#include <string>

namespace digdom
{
    class ParseError : public std::runtime_error
    {
    public:
        ParseError(std::size_t line, const std::string & message);
        auto line() const -> std::size_t { return _line; }

    private:
        std::size_t _line;
    };

    /**
     * Arc-list text format: the first content line is `n <N>`, every further
     * content line is `<u> <v>` for the arc u -> v. `#` starts a comment and
     * blank lines are skipped. Indices are 0-based decimal.
     */
    auto read_arc_list(std::istream & in) -> Digraph;
    auto read_arc_list_file(const std::string & path) -> Digraph;
    auto parse_arc_list(const std::string & text) -> Digraph;

    auto write_arc_list(std::ostream & out, const Digraph & d) -> void;
    auto format_arc_list(const Digraph & d) -> std::string;
}

#endif
