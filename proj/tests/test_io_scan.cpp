#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "psl/io.hpp"
#include "psl/scan.hpp"

using namespace psl;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "psl-io-tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    REQUIRE(out);
    out << text;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("format_double uses up to 15 significant digits, locale-free") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(1.0 / 6.0) == "0.166666666666667");
    CHECK(format_double(1e-5) == "1e-05");
    CHECK(format_double(0.694444444444444444, 6) == "0.694444");
}

TEST_CASE("distribution CSV round trip preserves 15 significant digits") {
    const fs::path p = temp_dir() / "dist.csv";
    const FiniteDistribution d = random_parent(7, 3);
    write_distribution_csv(d, p);
    const FiniteDistribution back = read_distribution(p);
    REQUIRE(back.size() == d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        CHECK(std::fabs(back[i] - d[i]) <= 1e-14 * std::fabs(d[i]));
}

TEST_CASE("distributions load from JSON arrays too") {
    const fs::path p = temp_dir() / "dist.json";
    spit(p, "[0.25, 0.75]");
    const FiniteDistribution d = read_distribution(p);
    CHECK(d[0] == 0.25);
    CHECK(d[1] == 0.75);

    spit(p, "[0.25, \"x\"]");
    CHECK_THROWS_AS(read_distribution(p), IoError);
    spit(p, "[0.25, 0.75");
    CHECK_THROWS_AS(read_distribution(p), IoError);
}

TEST_CASE("malformed distribution files are rejected") {
    const fs::path p = temp_dir() / "bad.csv";
    spit(p, "q\n0.5\n0.5\n");
    CHECK_THROWS_AS(read_distribution(p), IoError);
    spit(p, "p\n0.5\nnope\n");
    CHECK_THROWS_AS(read_distribution(p), IoError);
    spit(p, "p\n");
    CHECK_THROWS_AS(read_distribution(p), IoError);
    spit(p, "p\n0.5\n0.4\n");
    CHECK_THROWS_AS(read_distribution(p), InvalidDistribution);
    CHECK_THROWS_AS(read_distribution(temp_dir() / "does-not-exist.csv"), IoError);
}

TEST_CASE("readers reject arbitrary garbage with typed errors, never crash") {
    std::mt19937_64 rng(97);
    const fs::path p = temp_dir() / "garbage.bin";
    for (int rep = 0; rep < 60; ++rep) {
        std::string junk;
        const std::size_t len = rng() % 120;
        for (std::size_t i = 0; i < len; ++i) junk += static_cast<char>(rng() % 256);
        spit(p, junk);
        try {
            read_distribution(p);
        } catch (const Error&) {
            // IoError, InvalidDistribution, ... all acceptable
        }
        try {
            read_gtable(p);
        } catch (const Error&) {
        }
    }
}

TEST_CASE("g-table CSV round trip") {
    const fs::path p = temp_dir() / "g.csv";
    const GTable g({0.5, 0.75, 5.0 / 6.0});
    write_gtable_csv(g, p);
    const GTable back = read_gtable(p);
    REQUIRE(back.size() == 3);
    for (std::size_t j = 0; j < 3; ++j)
        CHECK(std::fabs(back[j] - g[j]) <= 1e-14 * std::fabs(g[j]));
    CHECK(lines_of(slurp(p)).front() == "g");
}

TEST_CASE("trace CSV lists one row per step") {
    const IterateResult res = iterate(katz_g(KatzParams(0.5, 0.0), 3), uniform_distribution(3));
    const fs::path p = temp_dir() / "trace.csv";
    write_trace_csv(res.trace, p);
    const auto lines = lines_of(slurp(p));
    REQUIRE(lines.size() == res.trace.steps.size() + 1);
    CHECK(lines.front() == "step,step_distance,rayleigh,v0,v1,v2");
    CHECK(split(lines[1], ',').size() == 6);
}

TEST_CASE("scan emits one classified row per grid point") {
    SUBCASE("single binomial point") {
        std::ostringstream out, warn;
        scan_to_stream({{0.5, 0.5, 1.0}, {0.0, 0.0, 1.0}, 3, {}}, out, warn);
        const auto lines = lines_of(out.str());
        REQUIRE(lines.size() == 2);
        CHECK(lines[0] == "alpha,beta,S,class,k,p,note");
        const auto f = split(lines[1], ',');
        REQUIRE(f.size() == 7);
        CHECK(f[0] == "0.5");
        CHECK(f[1] == "0");
        CHECK(f[2] == "3");
        CHECK(f[3] == "binomial");
        CHECK(f[4] == "2");
        CHECK(f[5] == "0.166666666666667");
        CHECK(f[6] == "");
        CHECK(warn.str().empty());
    }
    SUBCASE("single deterministic point leaves k and p empty") {
        std::ostringstream out, warn;
        scan_to_stream({{0.5, 0.5, 1.0}, {0.9, 0.9, 1.0}, 10, {}}, out, warn);
        const auto f = split(lines_of(out.str()).at(1), ',');
        CHECK(f[3] == "deterministic");
        CHECK(f[4] == "");
        CHECK(f[5] == "");
    }
    SUBCASE("points exactly on the diagonal carry the special-case note") {
        std::ostringstream out, warn;
        scan_to_stream({{0.3, 0.3, 1.0}, {0.3, 0.3, 1.0}, 5, {}}, out, warn);
        const auto f = split(lines_of(out.str()).at(1), ',');
        CHECK(f[3] == "deterministic");
        CHECK(f[6] == kEqualParamsNote);
    }
    SUBCASE("boundary points get class boundary with empty k and p") {
        std::ostringstream out, warn;
        scan_to_stream({{1.2, 1.2, 1.0}, {0.4, 0.4, 1.0}, 2, {}}, out, warn);
        const auto f = split(lines_of(out.str()).at(1), ',');
        CHECK(f[3] == "boundary");
        CHECK(f[4] == "");
        CHECK(f[5] == "");
        CHECK(f[6] == "");
    }
    SUBCASE("range empty after domain clipping yields a header-only file") {
        std::ostringstream out, warn;
        scan_to_stream({{-3.0, -1.0, 0.5}, {0.0, 0.5, 0.5}, 5, {}}, out, warn);
        CHECK(lines_of(out.str()).size() == 1);
    }
    SUBCASE("grid values outside the domain are clipped away") {
        std::ostringstream out, warn;
        // beta grid reaches 1.0, which is outside beta < 1
        scan_to_stream({{0.5, 0.5, 1.0}, {0.0, 1.0, 0.5}, 5, {}}, out, warn);
        const auto lines = lines_of(out.str());
        CHECK(lines.size() == 3);  // beta = 0 and 0.5 only
    }
}

TEST_CASE("scan output is byte-identical across runs") {
    const ScanConfig config{{0.0, 2.5, 0.5}, {-1.0, 0.75, 0.25}, 10, temp_dir() / "scan1.csv"};
    scan(config);
    ScanConfig again = config;
    again.output_path = temp_dir() / "scan2.csv";
    scan(again);
    CHECK(slurp(config.output_path) == slurp(again.output_path));
}

TEST_CASE("scan rows parse back to the classification of their point") {
    const fs::path p = temp_dir() / "scan_rt.csv";
    scan({{0.0, 2.5, 0.25}, {-1.0, 0.75, 0.25}, 10, p});
    const auto lines = lines_of(slurp(p));
    REQUIRE(lines.size() > 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = split(lines[i], ',');
        REQUIRE(f.size() == 7);
        const double a = std::strtod(f[0].c_str(), nullptr);
        const double b = std::strtod(f[1].c_str(), nullptr);
        const std::size_t S = std::strtoul(f[2].c_str(), nullptr, 10);
        const Classification c = classify(KatzParams(a, b), S);
        CHECK(to_string(c.kind) == f[3]);
        if (c.kind == LimitKind::Binomial) {
            CHECK(std::to_string(*c.k) == f[4]);
            const double p_back = std::strtod(f[5].c_str(), nullptr);
            CHECK(std::fabs(p_back - *c.p) <= 1e-14 * *c.p);
        } else {
            CHECK(f[4].empty());
            CHECK(f[5].empty());
        }
        CHECK(f[6] == ((a == b) ? kEqualParamsNote : ""));
    }
}

TEST_CASE("scan validates its config") {
    std::ostringstream out, warn;
    ScanConfig bad{{0.0, 1.0, -0.5}, {0.0, 0.5, 0.5}, 5, {}};
    CHECK_THROWS_AS(scan_to_stream(bad, out, warn), InvalidArgument);
    ScanConfig tiny{{0.0, 1.0, 0.5}, {0.0, 0.5, 0.5}, 1, {}};
    CHECK_THROWS_AS(scan_to_stream(tiny, out, warn), InvalidArgument);
    ScanConfig nopath{{0.0, 1.0, 0.5}, {0.0, 0.5, 0.5}, 5, "/nonexistent-dir/x/y.csv"};
    CHECK_THROWS_AS(scan(nopath), IoError);
}
