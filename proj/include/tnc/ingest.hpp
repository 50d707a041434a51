#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "tnc/core.hpp"

namespace tnc {

/// Input rejected while reading a triplet file. `line` is 1-based and counts
/// every physical line, headers included (0 when not tied to a line).
struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& msg)
        : std::runtime_error(msg), line(line_) {}
};

enum class Delimiter { whitespace, tab, comma };
enum class ExtraColumns { ignore, error };

/// Column layout of a triplet file. `columns[0..2]` are the 0-based column
/// indices of the time, u and v fields; they must form a permutation of
/// {0, 1, 2}.
struct TripletFormat {
    Delimiter delimiter = Delimiter::whitespace;
    std::array<std::size_t, 3> columns = {0, 1, 2};
    std::size_t header_rows = 0;
    ExtraColumns extra_columns = ExtraColumns::ignore;

    bool columns_are_permutation() const;
};

/// Parses triplet text into a canonical LinkStream. Blank lines are skipped;
/// an empty source is a valid empty stream. Malformed lines raise ParseError
/// with the offending line number.
LinkStream parse_triplets(std::istream& in, const TripletFormat& fmt = {},
                          std::string source = "");

/// One line per event, in sorted order. parse_triplets(write_triplets(ls))
/// reproduces `ls` exactly.
void write_triplets(const LinkStream& ls, std::ostream& out, const TripletFormat& fmt = {});
std::string write_triplets(const LinkStream& ls, const TripletFormat& fmt = {});

}  // namespace tnc
