// psl: iterated partial summations of finite-support discrete distributions.
//
// Subcommands: iterate (run the summation to its limit), limit (closed-form
// prediction), classify (decision tree), scan (parameter-space CSV), verify
// (closed form vs power iteration agreement).

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>

#include <CLI11.hpp>

#include "psl/io.hpp"
#include "psl/scan.hpp"

namespace {

void require_support(std::size_t S, std::size_t min) {
    if (S < min)
        throw CLI::ValidationError("--S", "must be >= " + std::to_string(min));
}

psl::KatzParams parse_katz(const std::string& spec) {
    const auto comma = spec.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == spec.size())
        throw CLI::ValidationError("--katz", "expected two comma-separated values A,B");
    try {
        return psl::KatzParams::from_strings(spec.substr(0, comma), spec.substr(comma + 1));
    } catch (const psl::InvalidParams& e) {
        throw CLI::ValidationError("--katz", e.what());
    } catch (const std::exception&) {
        throw CLI::ValidationError("--katz", "could not parse '" + spec + "' as A,B");
    }
}

double parse_double_full(const std::string& text) {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);  // may throw invalid_argument
    if (pos != text.size()) throw std::invalid_argument("trailing characters");
    return v;
}

psl::Range parse_range(const std::string& name, const std::string& spec) {
    psl::Range r;
    const auto c1 = spec.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : spec.find(':', c1 + 1);
    try {
        if (c2 == std::string::npos) throw std::invalid_argument("missing ':'");
        r.start = parse_double_full(spec.substr(0, c1));
        r.stop = parse_double_full(spec.substr(c1 + 1, c2 - c1 - 1));
        r.step = parse_double_full(spec.substr(c2 + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError(name, "expected START:STOP:STEP, got '" + spec + "'");
    }
    return r;
}

// PSL_SEED, when set to a valid integer, overrides the seed of `random:` parents.
std::uint64_t effective_seed(std::uint64_t from_flag) {
    const char* env = std::getenv("PSL_SEED");
    if (env == nullptr) return from_flag;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
        std::cerr << "warning: ignoring non-integer PSL_SEED='" << env << "'\n";
        return from_flag;
    }
    return v;
}

psl::FiniteDistribution resolve_parent(const std::string& spec, std::size_t S) {
    if (spec == "uniform") return psl::uniform_distribution(S);
    if (spec.rfind("random:", 0) == 0) {
        char* end = nullptr;
        const std::string seed_text = spec.substr(7);
        const unsigned long long seed = std::strtoull(seed_text.c_str(), &end, 10);
        if (end == seed_text.c_str() || *end != '\0')
            throw CLI::ValidationError("--parent", "bad seed in '" + spec + "'");
        return psl::random_parent(S, effective_seed(seed));
    }
    psl::FiniteDistribution d = psl::read_distribution(spec);
    if (d.size() != S)
        throw psl::DimensionMismatch("parent file has " + std::to_string(d.size()) +
                                     " entries, expected S = " + std::to_string(S));
    return d;
}

std::string join_path(const std::vector<std::string>& path) {
    std::string out;
    for (const auto& label : path) {
        if (!out.empty()) out += " -> ";
        out += label;
    }
    return out;
}

void print_classification(const psl::Classification& c) {
    std::cout << "class: " << psl::to_string(c.kind) << '\n';
    std::cout << "path: " << join_path(c.path) << '\n';
    if (c.k) std::cout << "k: " << *c.k << '\n';
    if (c.p) std::cout << "p: " << psl::format_double(*c.p) << '\n';
    if (!c.provenance.empty()) std::cout << "note: " << c.provenance << '\n';
}

void print_pmf(const psl::FiniteDistribution& d, int precision) {
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i > 0) std::cout << ' ';
        std::cout << psl::format_double(d[i], precision);
    }
    std::cout << '\n';
}

// fixed decimals for the human-facing prediction summary
void print_pmf_fixed(const psl::FiniteDistribution& d, int decimals) {
    char buf[64];
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto res =
            std::to_chars(buf, buf + sizeof buf, d[i], std::chars_format::fixed, decimals);
        if (i > 0) std::cout << ' ';
        std::cout << std::string_view(buf, res.ptr - buf);
    }
    std::cout << '\n';
}

struct IterateOpts {
    std::string katz;
    std::string g_table;
    std::size_t S = 0;
    std::string parent = "uniform";
    int steps = psl::kDefaultMaxIter;
    double tol = psl::kDefaultTol;
    std::string trace_path;
};

void run_iterate(const IterateOpts& opt) {
    std::optional<psl::GTable> g;
    if (!opt.g_table.empty()) {
        g = psl::read_gtable(opt.g_table);
        if (opt.S != 0 && opt.S != g->size())
            throw psl::DimensionMismatch("--S disagrees with the g-table size");
    } else {
        if (opt.S == 0) throw CLI::ValidationError("--S", "required with --katz");
        g = psl::katz_g(parse_katz(opt.katz), opt.S);
    }
    const std::size_t S = g->size();
    const psl::FiniteDistribution parent = resolve_parent(opt.parent, S);

    try {
        psl::IterateResult res = psl::iterate(*g, parent, opt.tol, opt.steps);
        if (!opt.trace_path.empty()) psl::write_trace_csv(res.trace, opt.trace_path);
        print_pmf(res.limit, 15);
        std::cerr << "converged in " << res.trace.iterations_used
                  << " steps; rayleigh: " << psl::format_double(res.trace.steps.back().rayleigh)
                  << '\n';
    } catch (const psl::NoConvergence& e) {
        if (!opt.trace_path.empty()) psl::write_trace_csv(e.trace(), opt.trace_path);
        throw;
    }
}

struct KatzSOpts {
    std::string katz;
    std::size_t S = 0;
};

struct VerifyOpts {
    std::string katz;
    std::size_t S = 0;
    int seeds = 10;
};

void run_verify(const VerifyOpts& opt) {
    const psl::KatzParams params = parse_katz(opt.katz);
    const psl::GTable g = psl::katz_g(params, opt.S);
    const psl::DominantInfo dom = psl::dominant_index(g);
    const psl::FiniteDistribution closed =
        psl::normalize_l1(psl::closed_form_eigenvector(g, dom.k));

    double max_tv = 0.0;
    for (int s = 1; s <= opt.seeds; ++s) {
        const psl::FiniteDistribution parent = psl::random_parent(opt.S, static_cast<std::uint64_t>(s));
        const psl::FiniteDistribution iterated = psl::limit_via_power_method(g, parent);
        max_tv = std::max(max_tv, psl::tv_distance(closed, iterated));
    }
    std::cout << "k: " << dom.k << '\n';
    std::cout << "lambda: " << psl::format_double(dom.lambda) << '\n';
    std::cout << "seeds: " << opt.seeds << '\n';
    std::cout << "max_tv: " << psl::format_double(max_tv) << '\n';
}

struct ScanOpts {
    std::string alpha;
    std::string beta;
    std::size_t S = 0;
    std::string out;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"iterated partial summations of finite-support discrete distributions"};
    app.require_subcommand(1);

    int exit_override = 0;

    IterateOpts it;
    CLI::App* cmd_iterate = app.add_subcommand("iterate", "run the iterated summation");
    cmd_iterate->add_option("--katz", it.katz, "Katz parameters A,B");
    cmd_iterate->add_option("--g-table", it.g_table, "CSV file with column g");
    cmd_iterate->add_option("--S", it.S, "support size");
    cmd_iterate->add_option("--parent", it.parent, "PATH | uniform | random:SEED");
    cmd_iterate->add_option("--steps", it.steps, "iteration cap");
    cmd_iterate->add_option("--tol", it.tol, "successive-iterate distance tolerance");
    cmd_iterate->add_option("--trace", it.trace_path, "write per-step trace CSV here");
    cmd_iterate->callback([&] {
        if (it.katz.empty() == it.g_table.empty())
            throw CLI::ValidationError("iterate", "give exactly one of --katz or --g-table");
        run_iterate(it);
    });

    KatzSOpts lim;
    CLI::App* cmd_limit = app.add_subcommand("limit", "closed-form limit prediction");
    cmd_limit->add_option("--katz", lim.katz, "Katz parameters A,B")->required();
    cmd_limit->add_option("--S", lim.S, "support size")->required();
    cmd_limit->callback([&] {
        require_support(lim.S, 1);
        const psl::KatzParams params = parse_katz(lim.katz);
        const psl::Classification c = psl::classify(params, lim.S);
        print_classification(c);
        const psl::FiniteDistribution d = psl::predict_limit(params, lim.S);
        std::cout << "pmf: ";
        print_pmf_fixed(d, 6);
    });

    KatzSOpts cls;
    CLI::App* cmd_classify = app.add_subcommand("classify", "decision-tree classification");
    cmd_classify->add_option("--katz", cls.katz, "Katz parameters A,B")->required();
    cmd_classify->add_option("--S", cls.S, "support size")->required();
    cmd_classify->callback([&] {
        require_support(cls.S, 1);
        const psl::Classification c = psl::classify(parse_katz(cls.katz), cls.S);
        print_classification(c);
        if (c.kind == psl::LimitKind::Boundary) exit_override = 1;
    });

    ScanOpts sc;
    CLI::App* cmd_scan = app.add_subcommand("scan", "classify a parameter grid to CSV");
    cmd_scan->add_option("--alpha", sc.alpha, "alpha range START:STOP:STEP")->required();
    cmd_scan->add_option("--beta", sc.beta, "beta range START:STOP:STEP")->required();
    cmd_scan->add_option("--S", sc.S, "support size")->required();
    cmd_scan->add_option("--out", sc.out, "output CSV path")->required();
    cmd_scan->callback([&] {
        require_support(sc.S, 2);
        psl::ScanConfig config;
        config.alpha = parse_range("--alpha", sc.alpha);
        config.beta = parse_range("--beta", sc.beta);
        config.S = sc.S;
        config.output_path = sc.out;
        psl::scan(config);
    });

    VerifyOpts ver;
    CLI::App* cmd_verify = app.add_subcommand("verify", "closed form vs power iteration");
    cmd_verify->add_option("--katz", ver.katz, "Katz parameters A,B")->required();
    cmd_verify->add_option("--S", ver.S, "support size")->required();
    cmd_verify->add_option("--seeds", ver.seeds, "number of random parents");
    cmd_verify->callback([&] {
        require_support(ver.S, 1);
        run_verify(ver);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n'
                  << "run '" << (argc > 0 ? argv[0] : "psl") << " --help' for the grammar\n";
        return 2;
    } catch (const psl::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_override;
}
