#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>

#include "mirrorwell/wavefun.hpp"

namespace mirrorwell {

namespace {

std::string format_g(double v, int digits)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string xml_escape(const std::string& text)
{
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

}  // namespace

std::string to_csv(const SampledWavefunction& w)
{
    if (w.xs.size() != w.values.size()) {
        throw std::invalid_argument("to_csv: xs and values differ in length");
    }
    std::string out = "x,psi\n";
    for (std::size_t i = 0; i < w.xs.size(); ++i) {
        out += format_g(w.xs[i], 17);
        out += ',';
        out += format_g(w.values[i], 17);
        out += '\n';
    }
    return out;
}

std::string to_svg(const std::vector<SampledWavefunction>& states, const std::string& caption)
{
    if (states.empty()) {
        throw std::invalid_argument("to_svg: no states");
    }
    constexpr double kWidth = 800.0;
    constexpr double kHeight = 500.0;
    constexpr double kMargin = 50.0;

    double x_lo = states.front().xs.front();
    double x_hi = states.front().xs.back();
    double y_abs = 0.0;
    for (const SampledWavefunction& w : states) {
        if (w.xs.empty() || w.xs.size() != w.values.size()) {
            throw std::invalid_argument("to_svg: empty or inconsistent sample");
        }
        x_lo = std::min(x_lo, w.xs.front());
        x_hi = std::max(x_hi, w.xs.back());
        for (double v : w.values) {
            y_abs = std::max(y_abs, std::abs(v));
        }
    }
    if (!(y_abs > 0.0)) {
        y_abs = 1.0;
    }
    y_abs *= 1.05;
    const double plot_w = kWidth - 2 * kMargin;
    const double plot_h = kHeight - 2 * kMargin;
    auto px = [&](double x) { return kMargin + (x - x_lo) / (x_hi - x_lo) * plot_w; };
    auto py = [&](double y) { return kMargin + (1.0 - (y + y_abs) / (2.0 * y_abs)) * plot_h; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<g stroke=\"black\" stroke-width=\"1\">\n";
    svg << "<line x1=\"" << kMargin << "\" y1=\"" << py(0.0) << "\" x2=\"" << kWidth - kMargin
        << "\" y2=\"" << py(0.0) << "\"/>\n";
    if (x_lo <= 0.0 && x_hi >= 0.0) {
        svg << "<line x1=\"" << px(0.0) << "\" y1=\"" << kMargin << "\" x2=\"" << px(0.0)
            << "\" y2=\"" << kHeight - kMargin << "\"/>\n";
    }
    svg << "</g>\n";
    svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (long t = static_cast<long>(std::ceil(x_lo)); t <= static_cast<long>(std::floor(x_hi)); ++t) {
        svg << "<text x=\"" << px(static_cast<double>(t)) << "\" y=\"" << py(0.0) + 15.0
            << "\" text-anchor=\"middle\">" << t << "</text>\n";
    }
    svg << "<text x=\"" << kWidth - kMargin + 5.0 << "\" y=\"" << py(0.0) + 4.0 << "\">x</text>\n";
    svg << "<text x=\"" << px(std::clamp(0.0, x_lo, x_hi)) + 5.0 << "\" y=\"" << kMargin - 5.0
        << "\">psi</text>\n";
    svg << "</g>\n";

    for (const SampledWavefunction& w : states) {
        const char* color = w.kind == WellKind::Double ? "blue" : "red";
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < w.xs.size(); ++i) {
            if (i > 0) {
                svg << ' ';
            }
            svg << format_g(px(w.xs[i]), 7) << ',' << format_g(py(w.values[i]), 7);
        }
        svg << "\"><title>" << to_string(w.kind) << ' ' << to_string(w.sector)
            << " E=" << format_g(w.energy, 6) << "</title></polyline>\n";
    }
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12.0
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">"
        << xml_escape(caption) << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace mirrorwell
