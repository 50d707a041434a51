#include "tnc/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace tnc {

namespace {

bool is_blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

std::vector<std::string> split_fields(const std::string& line, Delimiter delim) {
    std::vector<std::string> fields;
    if (delim == Delimiter::whitespace) {
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
            std::size_t start = pos;
            while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
            if (pos > start) fields.push_back(line.substr(start, pos - start));
        }
    } else {
        const char sep = delim == Delimiter::tab ? '\t' : ',';
        std::size_t start = 0;
        for (;;) {
            std::size_t end = line.find(sep, start);
            fields.push_back(line.substr(start, end == std::string::npos ? end : end - start));
            if (end == std::string::npos) break;
            start = end + 1;
        }
    }
    return fields;
}

Time parse_time_field(const std::string& field, std::size_t line_no) {
    Time value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(line_no,
                         "non-integer time at line " + std::to_string(line_no) + ": '" +
                             field + "'");
    return value;
}

}  // namespace

bool TripletFormat::columns_are_permutation() const {
    std::array<bool, 3> seen = {false, false, false};
    for (std::size_t c : columns) {
        if (c > 2 || seen[c]) return false;
        seen[c] = true;
    }
    return true;
}

LinkStream parse_triplets(std::istream& in, const TripletFormat& fmt, std::string source) {
    if (!fmt.columns_are_permutation())
        throw std::invalid_argument("triplet format columns must be a permutation of {0,1,2}");

    std::vector<RawTriple> triples;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no <= fmt.header_rows) continue;
        if (is_blank(line)) continue;

        std::vector<std::string> fields = split_fields(line, fmt.delimiter);
        if (fields.size() < 3 ||
            (fields.size() > 3 && fmt.extra_columns == ExtraColumns::error))
            throw ParseError(line_no, "wrong column count at line " + std::to_string(line_no) +
                                          " (expected 3, found " +
                                          std::to_string(fields.size()) + ")");

        const std::string& time_field = fields[fmt.columns[0]];
        const std::string& a = fields[fmt.columns[1]];
        const std::string& b = fields[fmt.columns[2]];
        if (a.empty() || b.empty())
            throw ParseError(line_no, "empty node field at line " + std::to_string(line_no));
        if (a == b)
            throw ParseError(line_no, "self-loop at line " + std::to_string(line_no) + ": (" +
                                          time_field + ", " + a + ", " + b + ")");
        triples.push_back(RawTriple{parse_time_field(time_field, line_no), a, b});
    }

    Provenance prov;
    prov.source = std::move(source);
    return canonicalize(triples, std::move(prov));
}

void write_triplets(const LinkStream& ls, std::ostream& out, const TripletFormat& fmt) {
    if (!fmt.columns_are_permutation())
        throw std::invalid_argument("triplet format columns must be a permutation of {0,1,2}");
    const char sep = fmt.delimiter == Delimiter::tab     ? '\t'
                     : fmt.delimiter == Delimiter::comma ? ','
                                                         : ' ';
    std::array<std::string, 3> slots;
    for (const Event& ev : ls.events()) {
        slots[fmt.columns[0]] = std::to_string(ev.time);
        slots[fmt.columns[1]] = ls.nodes().label_of(ev.u);
        slots[fmt.columns[2]] = ls.nodes().label_of(ev.v);
        out << slots[0] << sep << slots[1] << sep << slots[2] << '\n';
    }
}

std::string write_triplets(const LinkStream& ls, const TripletFormat& fmt) {
    std::ostringstream out;
    write_triplets(ls, out, fmt);
    return out.str();
}

}  // namespace tnc
