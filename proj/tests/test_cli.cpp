#include <doctest.h>

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

// End-to-end checks of the installed binary: every subcommand, the exit-code
// contract (0 ok, 1 parse, 2 infeasible, 3 codec) and the format flags. The
// binary path arrives via the TNC_CLI environment variable set by CTest.
namespace {

namespace fs = std::filesystem;

std::string cli_path() {
    const char* env = std::getenv("TNC_CLI");
    REQUIRE_MESSAGE(env != nullptr, "TNC_CLI must point at the tnc binary");
    return env;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::size_t line_count(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

// One directory per test case so scratch files never collide.
struct TempDir {
    fs::path path;

    TempDir() {
        static std::atomic<int> counter{0};
        path = fs::temp_directory_path() /
               ("tnc_cli_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter.fetch_add(1)));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::string& args, const TempDir& dir,
                  const std::string& stdin_path = "") {
    const fs::path out_path = dir.path / "cli_stdout";
    const fs::path err_path = dir.path / "cli_stderr";
    std::string cmd = "\"" + cli_path() + "\" " + args + " >\"" + out_path.string() +
                      "\" 2>\"" + err_path.string() + "\"";
    if (!stdin_path.empty()) cmd += " <\"" + stdin_path + "\"";
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read_file(out_path);
    r.err = read_file(err_path);
    return r;
}

const std::string kThreeEvents = "0 alice bob\n0 bob carol\n5 alice bob\n";

}  // namespace

TEST_CASE("cli: stats reports counts, ratios and the csv line") {
    TempDir dir;
    const fs::path input = dir.path / "in.txt";
    write_file(input, kThreeEvents);

    const CliResult r = run_cli("stats \"" + input.string() + "\"", dir);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "n            3"));
    CHECK(contains(r.out, "m            2"));
    CHECK(contains(r.out, "e            3"));
    CHECK(contains(r.out, "t            2"));
    CHECK(contains(r.out, "n,m,e,t,e_per_t,e_per_m,e_per_m_per_t_pct"));
    CHECK(contains(r.out, "3,2,3,2,1.500000,1.500000,75.000000"));
    CHECK(r.err.empty());
}

TEST_CASE("cli: stats reads standard input when the path is -") {
    TempDir dir;
    const fs::path input = dir.path / "in.txt";
    write_file(input, kThreeEvents);

    const CliResult r = run_cli("stats -", dir, input.string());
    CHECK(r.code == 0);
    CHECK(contains(r.out, "3,2,3,2,1.500000,1.500000,75.000000"));
}

TEST_CASE("cli: recommend prints the four costs and the winner") {
    TempDir dir;
    const fs::path input = dir.path / "in.txt";
    write_file(input, "7 a b\n");

    const CliResult r = run_cli("recommend \"" + input.string() + "\"", dir);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "step       1"));
    CHECK(contains(r.out, "cost_ls    2.000000"));
    CHECK(contains(r.out, "cost_sn_m  "));
    CHECK(contains(r.out, "(prose)"));
    CHECK(contains(r.out, "best: ls"));
}

TEST_CASE("cli: recommend rejects --nodes below the observed count") {
    TempDir dir;
    const fs::path input = dir.path / "in.txt";
    write_file(input, kThreeEvents);

    const CliResult r = run_cli("recommend \"" + input.string() + "\" --nodes 2", dir);
    CHECK(r.code == 2);
    CHECK(contains(r.err, "below the observed node count"));
}

TEST_CASE("cli: encode reports payload bits and decode restores the file") {
    TempDir dir;
    const fs::path input = dir.path / "in.txt";
    const fs::path blob = dir.path / "stream.blob";
    write_file(input, "0 a b\n");

    const CliResult enc = run_cli(
        "encode \"" + input.string() + "\" --repr ls --out \"" + blob.string() + "\"", dir);
    CHECK(enc.code == 0);
    CHECK(contains(enc.err, "payload_bits: 6"));
    CHECK(fs::file_size(blob) == 56);

    const fs::path back = dir.path / "back.txt";
    const CliResult dec =
        run_cli("decode \"" + blob.string() + "\" --out \"" + back.string() + "\"", dir);
    CHECK(dec.code == 0);
    CHECK(read_file(back) == "0 a b\n");
}

TEST_CASE("cli: every representation round-trips through blob files") {
    TempDir dir;
    const fs::path input = dir.path / "in.txt";
    write_file(input, kThreeEvents);

    for (const std::string repr : {"ls", "sn_m", "sn_e", "ig"}) {
        CAPTURE(repr);
        const fs::path blob = dir.path / (repr + ".blob");
        const CliResult enc = run_cli("encode \"" + input.string() + "\" --repr " + repr +
                                          " --out \"" + blob.string() + "\"",
                                      dir);
        CHECK(enc.code == 0);

        const CliResult dec = run_cli("decode \"" + blob.string() + "\"", dir);
        CHECK(dec.code == 0);
        CHECK(dec.out == kThreeEvents);
    }
}

TEST_CASE("cli: decode rejects a corrupted blob with the codec exit code") {
    TempDir dir;
    const fs::path input = dir.path / "in.txt";
    const fs::path blob = dir.path / "stream.blob";
    write_file(input, "0 a b\n");
    REQUIRE(run_cli("encode \"" + input.string() + "\" --repr ls --out \"" + blob.string() +
                        "\"",
                    dir)
                .code == 0);

    std::string bytes = read_file(blob);
    REQUIRE(!bytes.empty());
    bytes[0] = 'X';
    write_file(blob, bytes);

    const CliResult r = run_cli("decode \"" + blob.string() + "\"", dir);
    CHECK(r.code == 3);
    CHECK(contains(r.err, "[magic]"));
}

TEST_CASE("cli: malformed triplet input exits with the parse code") {
    TempDir dir;
    const fs::path input = dir.path / "in.txt";
    write_file(input, "x a b\n");

    const CliResult r = run_cli("stats \"" + input.string() + "\"", dir);
    CHECK(r.code == 1);
    CHECK(contains(r.err, "line 1"));
}

TEST_CASE("cli: unknown flags exit with the parse code") {
    TempDir dir;
    const fs::path input = dir.path / "in.txt";
    write_file(input, kThreeEvents);

    const CliResult r = run_cli("stats \"" + input.string() + "\" --bogus", dir);
    CHECK(r.code == 1);
}

TEST_CASE("cli: comma-delimited input with reordered columns parses") {
    TempDir dir;
    const fs::path input = dir.path / "in.csv";
    write_file(input, "alice,bob,5\nbob,carol,5\n");

    const CliResult r = run_cli(
        "stats \"" + input.string() + "\" --delimiter comma --columns u,v,t", dir);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "3,2,2,1,2.000000,1.000000,100.000000"));
}

TEST_CASE("cli: decode honors the output format flags") {
    TempDir dir;
    const fs::path input = dir.path / "in.txt";
    const fs::path blob = dir.path / "stream.blob";
    write_file(input, "0 a b\n5 a b\n");
    REQUIRE(run_cli("encode \"" + input.string() + "\" --repr ls --out \"" + blob.string() +
                        "\"",
                    dir)
                .code == 0);

    const CliResult r =
        run_cli("decode \"" + blob.string() + "\" --delimiter comma --columns u,v,t", dir);
    CHECK(r.code == 0);
    CHECK(r.out == "a,b,0\na,b,5\n");
}

TEST_CASE("cli: generate is deterministic and honors the declared sizes") {
    TempDir dir;
    const fs::path out1 = dir.path / "g1.txt";
    const fs::path out2 = dir.path / "g2.txt";
    const std::string args = "generate --kind stable --n 20 --m 30 --t 4 --seed 7 --out ";

    REQUIRE(run_cli(args + "\"" + out1.string() + "\"", dir).code == 0);
    REQUIRE(run_cli(args + "\"" + out2.string() + "\"", dir).code == 0);

    const std::string text = read_file(out1);
    CHECK(text == read_file(out2));
    CHECK(line_count(text) == 30 * 4);
}

TEST_CASE("cli: infeasible generator parameters exit with the infeasible code") {
    TempDir dir;
    const CliResult r = run_cli("generate --kind stable --n 3 --m 10 --t 2", dir);
    CHECK(r.code == 2);
    CHECK(contains(r.err, "cannot place"));
}

TEST_CASE("cli: sweep emits the documented csv") {
    TempDir dir;
    const fs::path input = dir.path / "in.txt";
    write_file(input, "0 a b\n1 a b\n2 a b\n3 a b\n");

    const CliResult manual = run_cli("sweep \"" + input.string() + "\" --scales 1,2,4", dir);
    CHECK(manual.code == 0);
    const std::vector<std::string> lines = [&] {
        std::vector<std::string> v;
        std::stringstream ss(manual.out);
        std::string line;
        while (std::getline(ss, line)) v.push_back(line);
        return v;
    }();
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "window,n,m,e,t,i,t_prime,cost_ls,cost_sn_m,cost_sn_e,cost_ig,best");
    CHECK(contains(lines[1], "1,2,1,4,4,1,2,"));
    CHECK(contains(lines[2], "2,2,1,2,2,1,2,"));
    CHECK(contains(lines[3], "4,2,1,1,1,1,2,"));

    const CliResult aut = run_cli("sweep \"" + input.string() + "\" --auto", dir);
    CHECK(aut.code == 0);
    CHECK(aut.out == manual.out);
}

TEST_CASE("cli: sweep without --scales or --auto is a usage error") {
    TempDir dir;
    const fs::path input = dir.path / "in.txt";
    write_file(input, kThreeEvents);

    const CliResult r = run_cli("sweep \"" + input.string() + "\"", dir);
    CHECK(r.code == 1);
    CHECK(contains(r.err, "sweep needs --scales or --auto"));
}

TEST_CASE("cli: sweep --out writes the csv to a file") {
    TempDir dir;
    const fs::path input = dir.path / "in.txt";
    const fs::path csv = dir.path / "rows.csv";
    write_file(input, kThreeEvents);

    const CliResult r = run_cli(
        "sweep \"" + input.string() + "\" --auto --out \"" + csv.string() + "\"", dir);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    const std::string text = read_file(csv);
    CHECK(contains(text, "window,n,m,e,t,i,t_prime,"));
    CHECK(line_count(text) >= 2);
}
