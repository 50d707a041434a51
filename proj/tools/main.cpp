#include <array>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tnc/codec.hpp"
#include "tnc/core.hpp"
#include "tnc/cost.hpp"
#include "tnc/generate.hpp"
#include "tnc/ingest.hpp"
#include "tnc/sweep.hpp"
#include "tnc/transform.hpp"

namespace {

// Exit codes: 0 success, 1 input/parse error, 2 infeasible parameters,
// 3 codec corruption.
constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitCodec = 3;

struct FormatOpts {
    std::string delimiter = "ws";
    std::string columns = "t,u,v";
    std::size_t header_rows = 0;
    std::string extra_columns = "ignore";
};

// --columns names the field order in the file, e.g. "u,v,t" for files whose
// third column is the timestamp.
std::string check_columns(const std::string& value) {
    std::array<bool, 3> seen{};
    std::stringstream ss(value);
    std::string tok;
    std::size_t count = 0;
    while (std::getline(ss, tok, ',')) {
        ++count;
        if (tok == "t")
            seen[0] = true;
        else if (tok == "u")
            seen[1] = true;
        else if (tok == "v")
            seen[2] = true;
        else
            return "--columns must be a permutation of t,u,v";
    }
    if (count != 3 || !seen[0] || !seen[1] || !seen[2])
        return "--columns must be a permutation of t,u,v";
    return {};
}

void add_format_flags(CLI::App* cmd, FormatOpts& fmt) {
    cmd->add_option("--delimiter", fmt.delimiter, "Field delimiter: ws, tab or comma")
        ->check(CLI::IsMember({"ws", "tab", "comma"}));
    cmd->add_option("--columns", fmt.columns,
                    "Field order in the file, a permutation of t,u,v")
        ->check(CLI::Validator(check_columns, "", "columns"));
    cmd->add_option("--header-rows", fmt.header_rows, "Header lines to skip");
    cmd->add_option("--extra-columns", fmt.extra_columns,
                    "Columns beyond the third: ignore or error")
        ->check(CLI::IsMember({"ignore", "error"}));
}

tnc::TripletFormat to_format(const FormatOpts& opts) {
    tnc::TripletFormat fmt;
    if (opts.delimiter == "tab")
        fmt.delimiter = tnc::Delimiter::tab;
    else if (opts.delimiter == "comma")
        fmt.delimiter = tnc::Delimiter::comma;
    std::stringstream ss(opts.columns);
    std::string tok;
    for (std::size_t pos = 0; std::getline(ss, tok, ','); ++pos) {
        if (tok == "t")
            fmt.columns[0] = pos;
        else if (tok == "u")
            fmt.columns[1] = pos;
        else
            fmt.columns[2] = pos;
    }
    fmt.header_rows = opts.header_rows;
    fmt.extra_columns = opts.extra_columns == "error" ? tnc::ExtraColumns::error
                                                      : tnc::ExtraColumns::ignore;
    return fmt;
}

tnc::LinkStream load_stream(const std::string& path, const tnc::TripletFormat& fmt) {
    if (path == "-") return tnc::parse_triplets(std::cin, fmt, "stdin");
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return tnc::parse_triplets(in, fmt, path);
}

std::vector<std::uint8_t> load_bytes(const std::string& path) {
    std::vector<std::uint8_t> bytes;
    if (path == "-") {
        char c;
        while (std::cin.get(c)) bytes.push_back(static_cast<std::uint8_t>(c));
        return bytes;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    char c;
    while (in.get(c)) bytes.push_back(static_cast<std::uint8_t>(c));
    return bytes;
}

// Runs `body(out)` against the --out target, "-" meaning standard output.
template <typename Body>
void with_output(const std::string& path, bool binary, Body&& body) {
    if (path == "-") {
        body(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    body(out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::optional<std::uint64_t> check_node_override(const tnc::LinkStream& ls,
                                                 std::optional<std::uint64_t> nodes) {
    if (nodes && *nodes < ls.node_count())
        throw std::invalid_argument("--nodes (" + std::to_string(*nodes) +
                                    ") is below the observed node count (" +
                                    std::to_string(ls.node_count()) + ")");
    return nodes;
}

// Native step when the stream defines one, else 1.
tnc::Time effective_step(const tnc::LinkStream& ls, std::optional<tnc::Time> step) {
    if (step) {
        if (*step < 1) throw std::invalid_argument("--step must be at least 1");
        return *step;
    }
    return ls.time_count() >= 2 ? tnc::infer_step(ls) : 1;
}

std::string fmt_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void print_stats(const tnc::StatsSummary& s, std::ostream& out) {
    const auto ratio = [](const std::optional<double>& v) {
        return v ? fmt_real(*v) : std::string("-");
    };
    out << "n            " << s.n << "\n"
        << "m            " << s.m << "\n"
        << "e            " << s.e << "\n"
        << "t            " << s.t << "\n"
        << "e/t          " << ratio(s.e_per_t) << "\n"
        << "e/m          " << ratio(s.e_per_m) << "\n"
        << "e/(m*t) %    " << ratio(s.e_per_m_per_t_pct) << "\n\n";
    const auto field = [](const std::optional<double>& v) {
        return v ? fmt_real(*v) : std::string();
    };
    out << "n,m,e,t,e_per_t,e_per_m,e_per_m_per_t_pct\n"
        << s.n << ',' << s.m << ',' << s.e << ',' << s.t << ',' << field(s.e_per_t)
        << ',' << field(s.e_per_m) << ',' << field(s.e_per_m_per_t_pct) << "\n";
}

void print_report(const tnc::CostReport& rep, tnc::Time step, std::ostream& out) {
    out << "n          " << rep.params.n << "\n"
        << "m          " << rep.params.m << "\n"
        << "e          " << rep.params.e << "\n"
        << "t          " << rep.params.t << "\n"
        << "i          " << rep.params.i << "\n"
        << "t_prime    " << rep.params.t_prime << "\n"
        << "step       " << step << "\n"
        << "cost_ls    " << fmt_real(rep.cost_ls) << "\n"
        << "cost_sn_m  " << fmt_real(rep.cost_sn_m) << " (" << to_string(rep.snm_variant)
        << ")\n"
        << "cost_sn_e  " << fmt_real(rep.cost_sn_e) << "\n"
        << "cost_ig    " << fmt_real(rep.cost_ig) << "\n"
        << "best: " << to_string(rep.best) << "\n";
}

struct Args {
    FormatOpts fmt;
    std::string input;
    std::string out = "-";
    std::optional<std::uint64_t> nodes;
    std::optional<tnc::Time> step;
    std::string snm_variant = "prose";
    std::string repr;
    std::vector<tnc::Time> scales;
    bool auto_scales = false;
    std::string kind;
    std::uint64_t gen_n = 0;
    std::uint64_t gen_m = 0;
    std::uint64_t gen_t = 0;
    std::uint64_t seed = 42;
};

tnc::SnmVariant variant_of(const Args& a) {
    return *tnc::snm_variant_from_string(a.snm_variant);
}

int run(const CLI::App& app, Args& a) {
    const tnc::TripletFormat fmt = to_format(a.fmt);

    if (app.got_subcommand("stats")) {
        const tnc::LinkStream ls = load_stream(a.input, fmt);
        tnc::StatsSummary s = tnc::stats(ls);
        if (check_node_override(ls, a.nodes)) s.n = *a.nodes;
        print_stats(s, std::cout);
        return kExitOk;
    }

    if (app.got_subcommand("recommend")) {
        const tnc::LinkStream ls = load_stream(a.input, fmt);
        const tnc::Time step = effective_step(ls, a.step);
        const tnc::CostReport rep =
            tnc::report(ls, step, variant_of(a), check_node_override(ls, a.nodes));
        print_report(rep, step, std::cout);
        return kExitOk;
    }

    if (app.got_subcommand("sweep")) {
        if (!a.auto_scales && a.scales.empty()) {
            std::cerr << "error: sweep needs --scales or --auto\n";
            return kExitParse;
        }
        const tnc::LinkStream ls = load_stream(a.input, fmt);
        std::vector<tnc::Time> scales = a.auto_scales ? tnc::default_scales(ls) : a.scales;
        std::vector<tnc::SweepRow> rows;
        if (!scales.empty())  // an empty stream has nothing to sweep
            rows = tnc::run_sweep(ls, std::move(scales), variant_of(a),
                                  check_node_override(ls, a.nodes));
        with_output(a.out, false, [&](std::ostream& out) { tnc::write_sweep_csv(rows, out); });
        return kExitOk;
    }

    if (app.got_subcommand("encode")) {
        const tnc::LinkStream ls = load_stream(a.input, fmt);
        const tnc::Repr tag = *tnc::repr_from_string(a.repr);
        const tnc::EncodedBlob blob = tnc::encode(ls, tag, effective_step(ls, a.step));
        const std::vector<std::uint8_t> bytes = tnc::serialize(blob);
        with_output(a.out, true, [&](std::ostream& out) {
            out.write(reinterpret_cast<const char*>(bytes.data()),
                      static_cast<std::streamsize>(bytes.size()));
        });
        std::cerr << "payload_bits: " << blob.payload_bit_length << "\n";
        return kExitOk;
    }

    if (app.got_subcommand("decode")) {
        const std::vector<std::uint8_t> bytes = load_bytes(a.input);
        const tnc::LinkStream ls = tnc::decode(tnc::deserialize(bytes));
        with_output(a.out, false, [&](std::ostream& out) { tnc::write_triplets(ls, out, fmt); });
        return kExitOk;
    }

    if (app.got_subcommand("generate")) {
        const tnc::LinkStream ls = a.kind == "stable"
                                       ? tnc::gen_stable(a.gen_n, a.gen_m, a.gen_t, a.seed)
                                       : tnc::gen_independent(a.gen_n, a.gen_m, a.gen_t, a.seed);
        with_output(a.out, false, [&](std::ostream& out) { tnc::write_triplets(ls, out, fmt); });
        return kExitOk;
    }

    return kExitParse;  // unreachable: require_subcommand guards this
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dynamic network encoding costs, representation choice and codecs"};
    app.require_subcommand(1);
    Args a;

    CLI::App* stats = app.add_subcommand("stats", "Summary counts and ratios of a triplet file");
    stats->add_option("input", a.input, "Triplet file, - for standard input")->required();
    add_format_flags(stats, a.fmt);
    stats->add_option("--nodes", a.nodes, "Declared node count (>= observed)");

    CLI::App* recommend =
        app.add_subcommand("recommend", "Encoding costs and the cheapest representation");
    recommend->add_option("input", a.input, "Triplet file, - for standard input")->required();
    add_format_flags(recommend, a.fmt);
    recommend->add_option("--step", a.step, "Interval grid step (default: inferred)");
    recommend->add_option("--snm-variant", a.snm_variant, "Snapshot-matrix cost form")
        ->check(CLI::IsMember({"prose", "printed"}));
    recommend->add_option("--nodes", a.nodes, "Declared node count (>= observed)");

    CLI::App* sweep = app.add_subcommand("sweep", "Costs across aggregation windows, as CSV");
    sweep->add_option("input", a.input, "Triplet file, - for standard input")->required();
    add_format_flags(sweep, a.fmt);
    CLI::Option* scales_opt =
        sweep->add_option("--scales", a.scales, "Comma-separated window list")->delimiter(',');
    CLI::Option* auto_opt =
        sweep->add_flag("--auto", a.auto_scales, "Doubling windows from the native step");
    scales_opt->excludes(auto_opt);
    auto_opt->excludes(scales_opt);
    sweep->add_option("--snm-variant", a.snm_variant, "Snapshot-matrix cost form")
        ->check(CLI::IsMember({"prose", "printed"}));
    sweep->add_option("--nodes", a.nodes, "Declared node count (>= observed)");
    sweep->add_option("--out", a.out, "CSV destination, - for standard output");

    CLI::App* encode = app.add_subcommand("encode", "Serialize under one representation");
    encode->add_option("input", a.input, "Triplet file, - for standard input")->required();
    add_format_flags(encode, a.fmt);
    encode->add_option("--repr", a.repr, "Representation: ls, sn_m, sn_e or ig")
        ->required()
        ->check(CLI::IsMember({"ls", "sn_m", "sn_e", "ig"}));
    encode->add_option("--step", a.step, "Interval grid step (default: inferred)");
    encode->add_option("--out", a.out, "Blob destination, - for standard output");

    CLI::App* decode = app.add_subcommand("decode", "Recover the triplet file from a blob");
    decode->add_option("input", a.input, "Blob file, - for standard input")->required();
    add_format_flags(decode, a.fmt);
    decode->add_option("--out", a.out, "Triplet destination, - for standard output");

    CLI::App* generate = app.add_subcommand("generate", "Synthesize a seeded random stream");
    generate->add_option("--kind", a.kind, "stable or independent")
        ->required()
        ->check(CLI::IsMember({"stable", "independent"}));
    generate->add_option("--n", a.gen_n, "Node count")->required();
    generate->add_option("--m", a.gen_m, "Edges (per snapshot for independent)")->required();
    generate->add_option("--t", a.gen_t, "Snapshot count")->required();
    generate->add_option("--seed", a.seed, "Generator seed");
    generate->add_option("--out", a.out, "Triplet destination, - for standard output");
    add_format_flags(generate, a.fmt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        return run(app, a);
    } catch (const tnc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const tnc::CodecError& e) {
        std::cerr << "error: " << e.what() << " [" << e.section << "]\n";
        return kExitCodec;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
