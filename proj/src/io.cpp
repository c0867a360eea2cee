#include "psl/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace psl {

std::string format_double(double x, int precision) {
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, precision);
    return std::string(buf, res.ptr);
}

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

std::string trim(std::string s) {
    const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && is_space(s.back())) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && is_space(s[i])) ++i;
    return s.substr(i);
}

double parse_number(const std::string& token, const std::filesystem::path& path) {
    const char* begin = token.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || end != begin + token.size())
        throw IoError("bad number '" + token + "' in " + path.string());
    return v;
}

// Single-column CSV: a fixed header line, then one value per line.
std::vector<double> read_single_column(const std::string& text, const std::string& header,
                                       const std::filesystem::path& path) {
    std::istringstream lines(text);
    std::string line;
    if (!std::getline(lines, line) || trim(line) != header)
        throw IoError("expected header '" + header + "' in " + path.string());
    std::vector<double> values;
    while (std::getline(lines, line)) {
        line = trim(line);
        if (line.empty()) continue;
        values.push_back(parse_number(line, path));
    }
    if (values.empty()) throw IoError("no data rows in " + path.string());
    return values;
}

}  // namespace

FiniteDistribution read_distribution(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw IoError("bad JSON in " + path.string() + ": " + e.what());
        }
        if (!j.is_array()) throw IoError("expected a JSON array in " + path.string());
        std::vector<double> probs;
        probs.reserve(j.size());
        for (const auto& v : j) {
            if (!v.is_number()) throw IoError("non-numeric JSON entry in " + path.string());
            probs.push_back(v.get<double>());
        }
        return FiniteDistribution(std::move(probs));
    }
    return FiniteDistribution(read_single_column(text, "p", path));
}

void write_distribution_csv(const FiniteDistribution& d, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << "p\n";
    for (std::size_t i = 0; i < d.size(); ++i) out << format_double(d[i]) << '\n';
    if (!out.flush()) throw IoError("write failed for " + path.string());
}

GTable read_gtable(const std::filesystem::path& path) {
    return GTable(read_single_column(read_file(path), "g", path));
}

void write_gtable_csv(const GTable& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << "g\n";
    for (std::size_t j = 0; j < g.size(); ++j) out << format_double(g[j]) << '\n';
    if (!out.flush()) throw IoError("write failed for " + path.string());
}

void write_trace_csv(const IterationTrace& trace, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    const std::size_t S = trace.steps.empty() ? 0 : trace.steps.front().iterate.size();
    out << "step,step_distance,rayleigh";
    for (std::size_t i = 0; i < S; ++i) out << ",v" << i;
    out << '\n';
    for (const IterationStep& s : trace.steps) {
        out << s.step << ',' << format_double(s.step_distance) << ','
            << format_double(s.rayleigh);
        for (std::size_t i = 0; i < S; ++i) out << ',' << format_double(s.iterate[i]);
        out << '\n';
    }
    if (!out.flush()) throw IoError("write failed for " + path.string());
}

}  // namespace psl
