#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "mirrorwell/oracle.hpp"
#include "mirrorwell/polyparams.hpp"
#include "mirrorwell/potentials.hpp"
#include "mirrorwell/spectrum.hpp"
#include "mirrorwell/wavefun.hpp"

namespace mirrorwell::cli {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string fmt(const char* spec, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

OutputFormat parse_format(const std::string& name)
{
    if (name == "text") {
        return OutputFormat::Text;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    if (name == "svg") {
        return OutputFormat::Svg;
    }
    throw UsageError("unknown format: " + name);
}

// ---- tables -------------------------------------------------------------

std::vector<long long> hermite_coefficients(int n)
{
    std::vector<long long> prev{1};
    if (n == 0) {
        return prev;
    }
    std::vector<long long> cur{0, 2};
    for (int k = 1; k < n; ++k) {
        std::vector<long long> next(static_cast<std::size_t>(k + 2), 0);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            next[i + 1] += 2 * cur[i];
        }
        for (std::size_t i = 0; i < prev.size(); ++i) {
            next[i] -= 2LL * k * prev[i];
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::string power_of_d(std::size_t k)
{
    if (k == 0) {
        return "";
    }
    return k == 1 ? "d" : "d^" + std::to_string(k);
}

struct TableRow {
    std::string label;
    double d = 0.0;
    std::vector<EigenvalueRecord> records;  // E0e, E0o, E1e, E1o, ...
};

constexpr int kTableLevels = 7;

TableRow spectrum_row(WellKind kind, const std::string& label, double d)
{
    const int even_count = (kTableLevels + 1) / 2;
    const int odd_count = kTableLevels / 2;
    const SpectrumResult even = sector_eigenvalues(kind, ParitySector::Even, d, even_count);
    const SpectrumResult odd = sector_eigenvalues(kind, ParitySector::Odd, d, odd_count);
    if (!even.complete() || !odd.complete()) {
        const auto& diag = !even.complete() ? even.diagnostics : odd.diagnostics;
        throw std::runtime_error("table row d=" + label + ": " + diag.front());
    }
    TableRow row{label, d, {}};
    for (int k = 0; k < kTableLevels; ++k) {
        const auto& source = k % 2 == 0 ? even.records : odd.records;
        row.records.push_back(source[static_cast<std::size_t>(k / 2)]);
    }
    return row;
}

std::vector<TableRow> spectrum_rows(WellKind kind, bool parallel)
{
    static const std::vector<std::pair<std::string, double>> kDoubleRows = {
        {"0", 0.0},    {"1/10", 0.1}, {"1/4", 0.25}, {"1/2", 0.5}, {"3/4", 0.75},
        {"1", 1.0},    {"3/2", 1.5},  {"2", 2.0},    {"3", 3.0},   {"4", 4.0}};
    static const std::vector<std::pair<std::string, double>> kSingleRows = {
        {"1/10", 0.1}, {"1/4", 0.25}, {"1/2", 0.5}, {"3/4", 0.75},
        {"1", 1.0},    {"3/2", 1.5},  {"2", 2.0},   {"5/2", 2.5}};
    const auto& spec = kind == WellKind::Double ? kDoubleRows : kSingleRows;
    std::vector<TableRow> rows;
    if (parallel) {
        std::vector<std::future<TableRow>> pending;
        for (const auto& [label, d] : spec) {
            pending.push_back(std::async(std::launch::async, spectrum_row, kind, label, d));
        }
        for (auto& f : pending) {
            rows.push_back(f.get());
        }
    } else {
        for (const auto& [label, d] : spec) {
            rows.push_back(spectrum_row(kind, label, d));
        }
    }
    return rows;
}

json record_json(const EigenvalueRecord& r, const std::string& kind_name, bool has_sector)
{
    json j;
    j["kind"] = kind_name;
    j["sector"] = has_sector ? std::string(to_string(r.sector)) : std::string("none");
    j["index"] = r.index;
    j["d"] = r.d;
    j["energy"] = r.energy;
    j["residual"] = r.residual;
    j["method"] = std::string(to_string(r.method));
    return j;
}

std::string csv_record(const EigenvalueRecord& r, const std::string& kind_name, bool has_sector)
{
    std::string line = kind_name + ',';
    line += has_sector ? std::string(to_string(r.sector)) : std::string("none");
    line += ',' + std::to_string(r.index) + ',' + fmt("%.17g", r.d) + ',' +
            fmt("%.17g", r.energy) + ',' + fmt("%.17g", r.residual) + ',' +
            std::string(to_string(r.method)) + '\n';
    return line;
}

constexpr const char* kRecordCsvHeader = "kind,sector,index,d,energy,residual,method\n";

std::string render_spectrum_table(WellKind kind, OutputFormat format, bool parallel)
{
    const std::vector<TableRow> rows = spectrum_rows(kind, parallel);
    const std::string kind_name(to_string(kind));
    std::ostringstream out;
    if (format == OutputFormat::Json) {
        json j = json::array();
        for (const TableRow& row : rows) {
            json records = json::array();
            for (const auto& r : row.records) {
                records.push_back(record_json(r, kind_name, true));
            }
            j.push_back({{"label", row.label}, {"d", row.d}, {"records", records}});
        }
        out << j.dump(2) << '\n';
        return out.str();
    }
    if (format == OutputFormat::Csv) {
        out << "d,E0e,E0o,E1e,E1o,E2e,E2o,E3e\n";
        for (const TableRow& row : rows) {
            out << fmt("%.17g", row.d);
            for (const auto& r : row.records) {
                out << ',' << fmt("%.17g", r.energy);
            }
            out << '\n';
        }
        return out.str();
    }
    out << (kind == WellKind::Double ? "Double well min[(x+d)^2, (x-d)^2]"
                                     : "Single well max[(x+d)^2, (x-d)^2]")
        << ": 7 lowest eigenvalues\n";
    char line[256];
    std::snprintf(line, sizeof line, "%-6s%-10s%-10s%-10s%-10s%-10s%-10s%-10s\n", "d", "E0e",
                  "E0o", "E1e", "E1o", "E2e", "E2o", "E3e");
    out << line;
    for (const TableRow& row : rows) {
        std::snprintf(line, sizeof line, "%-6s", row.label.c_str());
        out << line;
        for (const auto& r : row.records) {
            std::snprintf(line, sizeof line, "%-10s", fmt("%#.6g", r.energy).c_str());
            out << line;
        }
        out << '\n';
    }
    return out.str();
}

std::string render_parameter_table(bool even, OutputFormat format)
{
    const int first = even ? 1 : 2;
    constexpr int kLast = 6;
    std::ostringstream out;
    if (format == OutputFormat::Json) {
        json j = json::array();
        for (int n = first; n <= kLast; ++n) {
            j.push_back({{"n", n},
                         {"polynomial", parameter_polynomial(n, even)},
                         {"params", even ? even_params(n) : odd_params(n)}});
        }
        out << j.dump(2) << '\n';
        return out.str();
    }
    if (format == OutputFormat::Csv) {
        out << "n,j,d\n";
        for (int n = first; n <= kLast; ++n) {
            const std::vector<double> params = even ? even_params(n) : odd_params(n);
            for (std::size_t j = 0; j < params.size(); ++j) {
                out << n << ',' << j + 1 << ',' << fmt("%.17g", params[j]) << '\n';
            }
        }
        return out.str();
    }
    out << (even ? "Even parameters: positive roots of -(H_n'(d) - d H_n(d))\n"
                 : "Odd parameters: positive roots of H_n(d)\n");
    char line[256];
    std::snprintf(line, sizeof line, "%-3s%-36s%s\n", "n", "polynomial", "d_j");
    out << line;
    for (int n = first; n <= kLast; ++n) {
        const std::vector<double> params = even ? even_params(n) : odd_params(n);
        std::string values;
        for (std::size_t j = 0; j < params.size(); ++j) {
            values += (j > 0 ? ", " : "") + fmt("%.6g", params[j]);
        }
        std::snprintf(line, sizeof line, "%-3d%-36s%s\n", n, parameter_polynomial(n, even).c_str(),
                      values.c_str());
        out << line;
    }
    return out.str();
}

// ---- shared plumbing ----------------------------------------------------

struct Options {
    int which = 0;
    std::string potential = "D";
    double d = 0.0;
    int count = 7;
    int degree = 1;
    std::string sector = "both";
    std::optional<double> energy;
    std::string index;
    std::string format = "text";
    bool csv = false;
    bool svg = false;
    std::string out_path;
    double tol = 1e-5;
    std::optional<double> e_max;
    std::optional<double> step;
    bool parallel = false;
    std::string range;
    int points = 801;
};

ScanConfig scan_config(const Options& o)
{
    ScanConfig config;
    if (const char* env = std::getenv("MIRRORWELL_PRECISION"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const double value = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(value > 0.0)) {
            throw UsageError(std::string("MIRRORWELL_PRECISION is not a positive number: ") + env);
        }
        config.refine_tol = value;
    }
    if (o.e_max) {
        config.e_max = *o.e_max;
    }
    if (o.step) {
        config.coarse_step = *o.step;
    }
    config.validate();
    return config;
}

WellKind connection_kind(const PotentialSpec& spec)
{
    if (spec.family == Family::DoubleMin) {
        return WellKind::Double;
    }
    if (spec.family == Family::SingleMax) {
        return WellKind::Single;
    }
    throw UsageError("this command needs potential D or S");
}

std::optional<ParitySector> parse_sector(const std::string& name)
{
    if (name == "even") {
        return ParitySector::Even;
    }
    if (name == "odd") {
        return ParitySector::Odd;
    }
    if (name == "both") {
        return std::nullopt;
    }
    throw UsageError("sector must be even, odd or both");
}

std::vector<double> parse_number_list(const std::string& text, const char* what)
{
    std::vector<double> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (item.empty() || end == item.c_str() || *end != '\0') {
            throw UsageError(std::string("malformed ") + what + ": " + text);
        }
        values.push_back(v);
    }
    return values;
}

// ---- commands -----------------------------------------------------------

std::string cmd_spectrum(const Options& o, std::ostream& err, int& status)
{
    const PotentialSpec spec = parse_potential(o.potential, o.d);
    const OutputFormat format = parse_format(o.format);
    if (format == OutputFormat::Svg) {
        throw UsageError("svg output is only available for wavefn");
    }
    const std::optional<ParitySector> sector = parse_sector(o.sector);
    const std::string name = potential_name(spec);

    std::vector<EigenvalueRecord> records;
    bool has_sector = true;
    if (spec.family == Family::DoubleMin || spec.family == Family::SingleMax) {
        const WellKind kind = connection_kind(spec);
        const ScanConfig config = scan_config(o);
        const SpectrumResult result = sector ? sector_eigenvalues(kind, *sector, o.d, o.count, config)
                                             : find_eigenvalues(kind, o.d, o.count, config);
        records = result.records;
        for (const std::string& line : result.diagnostics) {
            err << "mirrorwell: " << line << '\n';
            status = kExitNumerical;
        }
    } else {
        if (sector) {
            throw UsageError("--sector applies only to D and S");
        }
        if (o.count > kMaxOracleCount) {
            throw UsageError("at most 15 levels for finite-difference potentials");
        }
        const OracleResult result = fd_spectrum(spec, o.count);
        has_sector = is_mirror_symmetric(spec.family);
        for (std::size_t k = 0; k < result.eigenvalues.size(); ++k) {
            EigenvalueRecord r;
            r.sector = k % 2 == 0 ? ParitySector::Even : ParitySector::Odd;
            r.index = static_cast<int>(k);
            r.d = spec.d;
            r.energy = result.eigenvalues[k];
            r.bracket = {r.energy, r.energy};
            r.residual = result.est_error;
            r.method = Method::Oracle;
            records.push_back(r);
        }
    }

    std::ostringstream out;
    if (format == OutputFormat::Json) {
        json j = json::array();
        for (const auto& r : records) {
            j.push_back(record_json(r, name, has_sector));
        }
        out << j.dump(2) << '\n';
    } else if (format == OutputFormat::Csv) {
        out << kRecordCsvHeader;
        for (const auto& r : records) {
            out << csv_record(r, name, has_sector);
        }
    } else {
        out << "# " << name << " d=" << fmt("%.12g", o.d) << '\n';
        char line[160];
        std::snprintf(line, sizeof line, "%-4s%-7s%-4s%-22s%-12s%s\n", "n", "sector", "k",
                      "energy", "residual", "method");
        out << line;
        for (std::size_t n = 0; n < records.size(); ++n) {
            const auto& r = records[n];
            std::snprintf(line, sizeof line, "%-4zu%-7s%-4d%-22s%-12s%s\n", n,
                          has_sector ? std::string(to_string(r.sector)).c_str() : "-", r.index,
                          fmt("%.15g", r.energy).c_str(), fmt("%.2e", r.residual).c_str(),
                          std::string(to_string(r.method)).c_str());
            out << line;
        }
    }
    return out.str();
}

std::string cmd_poly(const Options& o)
{
    if (o.degree < 1 || o.degree > kMaxPolynomialDegree) {
        throw UsageError("degree must lie in [1, 100]");
    }
    const OutputFormat format = parse_format(o.format);
    const PolynomialParameterSet set = parameter_set(o.degree);
    std::ostringstream out;
    if (format == OutputFormat::Json) {
        json j{{"n", set.n},
               {"even", set.even_params},
               {"odd", set.odd_params},
               {"even_count", set.even_params.size()},
               {"odd_count", set.odd_params.size()},
               {"energy", 2 * set.n + 1}};
        out << j.dump(2) << '\n';
    } else if (format == OutputFormat::Csv) {
        out << "n,branch,j,d\n";
        for (auto [branch, list] : {std::pair{"even", &set.even_params}, {"odd", &set.odd_params}}) {
            for (std::size_t j = 0; j < list->size(); ++j) {
                out << set.n << ',' << branch << ',' << j + 1 << ',' << fmt("%.17g", (*list)[j])
                    << '\n';
            }
        }
    } else if (format == OutputFormat::Text) {
        out << "n = " << set.n << ", E = " << 2 * set.n + 1 << '\n';
        for (auto [branch, list] : {std::pair{"even", &set.even_params}, {"odd", &set.odd_params}}) {
            out << branch << " (" << list->size() << "):";
            for (double v : *list) {
                out << ' ' << fmt("%.6g", v);
            }
            out << '\n';
        }
    } else {
        throw UsageError("svg output is only available for wavefn");
    }
    return out.str();
}

std::string caption_for(const std::vector<SampledWavefunction>& states)
{
    std::string caption = "d=" + fmt("%.6g", states.front().d) + ", E=";
    for (std::size_t i = 0; i < states.size(); ++i) {
        caption += (i > 0 ? ", " : "") + fmt("%.4g", states[i].energy);
    }
    caption += ", ";
    caption += to_string(states.front().kind);
    return caption;
}

std::string cmd_wavefn(const Options& o, std::ostream& err)
{
    const PotentialSpec spec = parse_potential(o.potential, o.d);
    const WellKind kind = connection_kind(spec);
    OutputFormat format = parse_format(o.format);
    if (o.csv && o.svg) {
        throw UsageError("--csv and --svg are exclusive");
    }
    if (o.csv) {
        format = OutputFormat::Csv;
    } else if (o.svg) {
        format = OutputFormat::Svg;
    }

    double x_min = -(6.0 + o.d);
    double x_max = 6.0 + o.d;
    if (!o.range.empty()) {
        const std::vector<double> r = parse_number_list(o.range, "range");
        if (r.size() != 2) {
            throw UsageError("--range needs two numbers: min,max");
        }
        x_min = r[0];
        x_max = r[1];
    }

    struct Target {
        ParitySector sector;
        double energy;
    };
    std::vector<Target> targets;
    if (o.energy) {
        if (!o.index.empty()) {
            throw UsageError("give either -E or --index, not both");
        }
        const std::optional<ParitySector> sector = parse_sector(o.sector);
        if (!sector) {
            throw UsageError("-E needs --sector even or odd");
        }
        targets.push_back({*sector, *o.energy});
    } else {
        if (o.index.empty()) {
            throw UsageError("give -E with --sector, or --index");
        }
        std::vector<int> indices;
        for (double v : parse_number_list(o.index, "index list")) {
            if (v < 0.0 || v != std::floor(v) || v >= kMaxSpectrumCount) {
                throw UsageError("indices must be integers in [0, 20)");
            }
            indices.push_back(static_cast<int>(v));
        }
        const int needed = *std::max_element(indices.begin(), indices.end()) + 1;
        const SpectrumResult spectrum = find_eigenvalues(kind, o.d, needed, scan_config(o));
        if (!spectrum.complete()) {
            throw std::runtime_error("could not resolve the requested states: " +
                                     spectrum.diagnostics.front());
        }
        for (int i : indices) {
            const auto& r = spectrum.records[static_cast<std::size_t>(i)];
            targets.push_back({r.sector, r.energy});
        }
    }

    std::vector<SampledWavefunction> states;
    for (const Target& t : targets) {
        SampledWavefunction w =
            normalize(sample(kind, t.sector, o.d, t.energy, x_min, x_max, o.points));
        double peak = 0.0;
        for (double v : w.values) {
            peak = std::max(peak, std::abs(v));
        }
        const double gap = std::max(w.continuity_gap, w.derivative_gap);
        if (gap > 1e-6 * peak) {
            err << "mirrorwell: warning: E=" << fmt("%.12g", t.energy) << " " << to_string(t.sector)
                << " is not an eigenvalue at d=" << fmt("%.12g", o.d)
                << " (matching gap " << fmt("%.3g", gap / peak) << " of max|psi|)\n";
        }
        states.push_back(std::move(w));
    }

    std::ostringstream out;
    switch (format) {
    case OutputFormat::Svg:
        return to_svg(states, caption_for(states));
    case OutputFormat::Json: {
        json j = json::array();
        for (const auto& w : states) {
            j.push_back({{"kind", std::string(to_string(w.kind))},
                         {"sector", std::string(to_string(w.sector))},
                         {"d", w.d},
                         {"energy", w.energy},
                         {"norm", w.norm.value_or(0.0)},
                         {"continuity_gap", w.continuity_gap},
                         {"derivative_gap", w.derivative_gap},
                         {"x", w.xs},
                         {"psi", w.values}});
        }
        out << j.dump(2) << '\n';
        return out.str();
    }
    case OutputFormat::Text:
    case OutputFormat::Csv:
        if (states.size() == 1) {
            return to_csv(states.front());
        }
        out << 'x';
        for (std::size_t i = 0; i < states.size(); ++i) {
            out << ",psi_" << i;
        }
        out << '\n';
        for (std::size_t k = 0; k < states.front().xs.size(); ++k) {
            out << fmt("%.17g", states.front().xs[k]);
            for (const auto& w : states) {
                out << ',' << fmt("%.17g", w.values[k]);
            }
            out << '\n';
        }
        return out.str();
    }
    return out.str();
}

std::string cmd_verify(const Options& o, int& status)
{
    const PotentialSpec spec = parse_potential(o.potential, o.d);
    const WellKind kind = connection_kind(spec);
    if (o.count > kMaxOracleCount) {
        throw UsageError("verify compares at most 15 levels");
    }
    if (!(o.tol > 0.0)) {
        throw UsageError("--tol must be positive");
    }
    const SpectrumResult analytic = find_eigenvalues(kind, o.d, o.count, scan_config(o));
    if (!analytic.complete()) {
        throw std::runtime_error(analytic.diagnostics.front());
    }
    const OracleResult oracle = fd_spectrum(spec, o.count);

    std::ostringstream out;
    out << "# " << potential_name(spec) << " d=" << fmt("%.12g", o.d)
        << ": connection vs finite differences\n";
    char line[160];
    std::snprintf(line, sizeof line, "%-4s%-7s%-20s%-20s%s\n", "n", "sector", "connection",
                  "oracle", "|diff|");
    out << line;
    double worst = 0.0;
    for (std::size_t n = 0; n < analytic.records.size(); ++n) {
        const double e = analytic.records[n].energy;
        const double f = oracle.eigenvalues[n];
        const double diff = std::abs(e - f);
        worst = std::max(worst, diff);
        std::snprintf(line, sizeof line, "%-4zu%-7s%-20s%-20s%s\n", n,
                      std::string(to_string(analytic.records[n].sector)).c_str(),
                      fmt("%.12f", e).c_str(), fmt("%.12f", f).c_str(), fmt("%.2e", diff).c_str());
        out << line;
    }
    const bool pass = worst < o.tol;
    out << "max deviation " << fmt("%.3e", worst) << " (oracle estimate "
        << fmt("%.1e", oracle.est_error) << ", tolerance " << fmt("%.1e", o.tol) << "): "
        << (pass ? "PASS" : "FAIL") << '\n';
    if (!pass) {
        status = kExitNumerical;
    }
    return out.str();
}

void emit(const std::string& text, const Options& o, std::ostream& out)
{
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open output file: " + o.out_path);
    }
    file << text;
    if (!file) {
        throw std::runtime_error("failed writing " + o.out_path);
    }
}

}  // namespace

std::string parameter_polynomial(int n, bool even)
{
    if (n < 1 || n > 20) {
        throw std::invalid_argument("parameter_polynomial: n must lie in [1, 20]");
    }
    const std::vector<long long> h = hermite_coefficients(n);
    std::vector<long long> p;
    if (even) {
        // d H_n(d) - H_n'(d)
        p.assign(h.size() + 1, 0);
        for (std::size_t k = 0; k < h.size(); ++k) {
            p[k + 1] += h[k];
            if (k >= 1) {
                p[k - 1] -= static_cast<long long>(k) * h[k];
            }
        }
    } else {
        p = h;
    }
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
    std::size_t low = 0;
    while (p[low] == 0) {
        ++low;
    }
    long long g = 0;
    for (long long c : p) {
        g = std::gcd(g, c);
    }

    std::string inner;
    for (std::size_t k = low; k < p.size(); ++k) {
        const long long c = p[k] / g;
        if (c == 0) {
            continue;
        }
        const std::size_t power = k - low;
        const long long magnitude = c < 0 ? -c : c;
        if (inner.empty()) {
            inner += c < 0 ? "-" : "";
        } else {
            inner += c < 0 ? " - " : " + ";
        }
        if (magnitude != 1 || power == 0) {
            inner += std::to_string(magnitude);
        }
        inner += power_of_d(power);
    }
    const std::string prefix = (g != 1 ? std::to_string(g) : "") + power_of_d(low);
    const bool single_term = inner.find(' ') == std::string::npos;
    if (single_term) {
        return prefix + inner;
    }
    return prefix + "(" + inner + ")";
}

std::string render_table(int which, OutputFormat format, bool parallel)
{
    if (format == OutputFormat::Svg) {
        throw UsageError("svg output is only available for wavefn");
    }
    switch (which) {
    case 1:
        return render_parameter_table(true, format);
    case 2:
        return render_parameter_table(false, format);
    case 3:
        return render_spectrum_table(WellKind::Double, format, parallel);
    case 4:
        return render_spectrum_table(WellKind::Single, format, parallel);
    default:
        throw UsageError("table must be 1, 2, 3 or 4");
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact spectra and eigenfunctions of the mirror-symmetric harmonic double and "
                 "single wells",
                 "mirrorwell"};
    app.require_subcommand(1);

    auto add_potential = [&o](CLI::App* cmd) {
        cmd->add_option("-p,--potential", o.potential,
                        "D, S, L-D, L-S, KA, KA-D, KA-S, DR, DL, SR, SL, H+, H-");
        cmd->add_option("-d,--separation", o.d, "half separation d of the two centres");
    };
    auto add_format = [&o](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "text, csv or json")
            ->check(CLI::IsMember({"text", "csv", "json", "svg"}));
        cmd->add_option("--out", o.out_path, "write output to PATH");
    };
    auto add_scan = [&o](CLI::App* cmd) {
        cmd->add_option("--e-max", o.e_max, "upper end of the energy scan");
        cmd->add_option("--step", o.step, "coarse energy scan step");
    };

    CLI::App* tables = app.add_subcommand("tables", "regenerate a reference table");
    tables->add_option("which", o.which, "1 even parameters, 2 odd parameters, "
                                         "3 double-well levels, 4 single-well levels")
        ->required()
        ->check(CLI::Range(1, 4));
    tables->add_flag("--parallel", o.parallel, "compute rows concurrently");
    add_format(tables);

    CLI::App* spectrum = app.add_subcommand("spectrum", "lowest eigenvalues of a potential");
    add_potential(spectrum);
    spectrum->add_option("-n,--count", o.count, "number of levels")->check(CLI::Range(1, 20));
    spectrum->add_option("--sector", o.sector, "even, odd or both");
    add_scan(spectrum);
    add_format(spectrum);

    CLI::App* poly = app.add_subcommand("poly", "separations with polynomial-type eigenstates");
    poly->add_option("-n,--degree", o.degree, "Hermite degree n (energy 2n+1)")->required();
    add_format(poly);

    CLI::App* wavefn = app.add_subcommand("wavefn", "sample normalized eigenfunctions");
    add_potential(wavefn);
    wavefn->add_option("--sector", o.sector, "even or odd (with -E)");
    wavefn->add_option("-E,--energy", o.energy, "explicit energy");
    wavefn->add_option("--index", o.index, "comma separated overall level indices");
    wavefn->add_option("--range", o.range, "x range as min,max");
    wavefn->add_option("--points", o.points, "number of samples")->check(CLI::Range(2, 1000000));
    wavefn->add_flag("--csv", o.csv, "same as --format csv");
    wavefn->add_flag("--svg", o.svg, "same as --format svg");
    add_scan(wavefn);
    add_format(wavefn);

    CLI::App* verify = app.add_subcommand("verify", "compare against the finite-difference solver");
    add_potential(verify);
    verify->add_option("-n,--count", o.count, "number of levels")->check(CLI::Range(1, 15));
    verify->add_option("--tol", o.tol, "maximum allowed deviation");
    add_scan(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    int status = kExitSuccess;
    try {
        std::string text;
        if (*tables) {
            text = render_table(o.which, parse_format(o.format), o.parallel);
        } else if (*spectrum) {
            text = cmd_spectrum(o, err, status);
        } else if (*poly) {
            text = cmd_poly(o);
        } else if (*wavefn) {
            text = cmd_wavefn(o, err);
        } else if (*verify) {
            text = cmd_verify(o, status);
        }
        emit(text, o, out);
    } catch (const std::invalid_argument& e) {
        err << "mirrorwell: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "mirrorwell: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "mirrorwell: " << e.what() << '\n';
        return kExitNumerical;
    }
    return status;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("mirrorwell");
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mirrorwell::cli
