#include "rnndcor/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rnndcor/csvio.hpp"
#include "rnndcor/errors.hpp"

namespace rnndcor::svg {

namespace {

std::string px(double v) { return csvio::format_fixed(v, 2); }

std::string escape(const std::string &text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

// Linear ramp #f7fbff -> #08306b over [0, 1].
std::string ramp_color(double v) {
    v = std::clamp(v, 0.0, 1.0);
    const int r = static_cast<int>(std::lround(0xf7 + v * (0x08 - 0xf7)));
    const int g = static_cast<int>(std::lround(0xfb + v * (0x30 - 0xfb)));
    const int b = static_cast<int>(std::lround(0xff + v * (0x6b - 0xff)));
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return buf;
}

void open_svg(std::ostringstream &out, double width, double height) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
        << "width=\"" << px(width) << "\" height=\"" << px(height)
        << "\" viewBox=\"0 0 " << px(width) << " " << px(height) << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << px(width) << "\" height=\""
        << px(height) << "\" fill=\"white\"/>\n";
}

void caption_block(std::ostringstream &out, double x, double y,
                   const std::vector<std::string> &lines) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
        out << "<text x=\"" << px(x) << "\" y=\"" << px(y + 14.0 * double(i))
            << "\" font-family=\"monospace\" font-size=\"11\">"
            << escape(lines[i]) << "</text>\n";
    }
}

} // namespace

SvgChart render_bar_chart(const std::vector<double> &dcor_values,
                          const std::vector<double> &acf_values,
                          const std::vector<std::size_t> &acf_lags,
                          const std::vector<std::string> &caption_lines) {
    if (dcor_values.empty()) {
        throw ConfigError("refusing to render an empty profile");
    }
    if (!acf_values.empty() && (acf_values.size() != dcor_values.size() ||
                                acf_lags.size() != dcor_values.size())) {
        throw ConfigError("ACF companion length does not match the profile");
    }
    const std::size_t layers = dcor_values.size();
    const double margin_left = 50.0, margin_top = 30.0;
    const double plot_h = 220.0, group_w = 26.0, bar_w = 10.0;
    const double plot_w = group_w * static_cast<double>(layers);
    const double width = margin_left + plot_w + 30.0;
    const double caption_h = 16.0 * (static_cast<double>(caption_lines.size()) + 1.0);
    const double height = margin_top + plot_h + 60.0 + caption_h;
    const double base_y = margin_top + plot_h;

    std::ostringstream out;
    open_svg(out, width, height);
    // axis and 0/1 reference lines
    out << "<line x1=\"" << px(margin_left) << "\" y1=\"" << px(margin_top)
        << "\" x2=\"" << px(margin_left) << "\" y2=\"" << px(base_y)
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << px(margin_left) << "\" y1=\"" << px(base_y)
        << "\" x2=\"" << px(margin_left + plot_w) << "\" y2=\"" << px(base_y)
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"8\" y=\"" << px(margin_top + 4) << "\" font-size=\"10\">1.0</text>\n";
    out << "<text x=\"8\" y=\"" << px(base_y + 4) << "\" font-size=\"10\">0.0</text>\n";

    for (std::size_t t = 0; t < layers; ++t) {
        const double x0 = margin_left + group_w * static_cast<double>(t) + 3.0;
        const double v = std::clamp(dcor_values[t], 0.0, 1.0);
        const double hv = v * plot_h;
        out << "<rect class=\"dcor\" x=\"" << px(x0) << "\" y=\""
            << px(base_y - hv) << "\" width=\"" << px(bar_w) << "\" height=\""
            << px(hv) << "\" fill=\"#2166ac\" data-layer=\"" << (t + 1)
            << "\" data-value=\"" << csvio::format_double(dcor_values[t])
            << "\"/>\n";
        if (!acf_values.empty()) {
            // ACF can be negative; draw magnitude, keep the sign in data.
            const double a = std::clamp(std::abs(acf_values[t]), 0.0, 1.0);
            const double ha = a * plot_h;
            out << "<rect class=\"acf\" x=\"" << px(x0 + bar_w + 2.0)
                << "\" y=\"" << px(base_y - ha) << "\" width=\"" << px(bar_w)
                << "\" height=\"" << px(ha) << "\" fill=\"#b2182b\" data-lag=\""
                << acf_lags[t] << "\" data-value=\""
                << csvio::format_double(acf_values[t]) << "\"/>\n";
        }
        if (layers <= 25 || (t + 1) % 5 == 0 || t == 0) {
            out << "<text x=\"" << px(x0) << "\" y=\"" << px(base_y + 14.0)
                << "\" font-size=\"9\">" << (t + 1) << "</text>\n";
        }
    }
    out << "<text x=\"" << px(margin_left) << "\" y=\"" << px(base_y + 30.0)
        << "\" font-size=\"11\">layer (blue: distance correlation, red: ACF "
           "at lag T+1-layer)</text>\n";
    caption_block(out, margin_left, base_y + 48.0, caption_lines);
    out << "</svg>\n";
    return {out.str(), ChartKind::BarProfile};
}

SvgChart render_heatmap(const Matrix &grid, const std::string &row_label,
                        const std::string &col_label,
                        const std::vector<std::string> &caption_lines) {
    if (grid.rows() == 0 || grid.cols() == 0) {
        throw ConfigError("refusing to render an empty grid");
    }
    const double cell = std::clamp(320.0 / double(std::max(grid.rows(), grid.cols())),
                                   10.0, 34.0);
    const double margin_left = 60.0, margin_top = 40.0;
    const double plot_w = cell * static_cast<double>(grid.cols());
    const double plot_h = cell * static_cast<double>(grid.rows());
    const double legend_w = 70.0;
    const double width = margin_left + plot_w + legend_w + 40.0;
    const double caption_h = 16.0 * (static_cast<double>(caption_lines.size()) + 1.0);
    const double height = margin_top + plot_h + 50.0 + caption_h;

    std::ostringstream out;
    open_svg(out, width, height);
    out << "<text x=\"" << px(margin_left) << "\" y=\"20\" font-size=\"11\">"
        << escape(col_label) << " (columns)</text>\n";
    out << "<text x=\"6\" y=\"" << px(margin_top - 6) << "\" font-size=\"11\">"
        << escape(row_label) << " (rows)</text>\n";

    for (std::size_t v = 0; v < grid.rows(); ++v) {
        for (std::size_t m = 0; m < grid.cols(); ++m) {
            const double value = grid(v, m);
            out << "<rect class=\"cell\" x=\""
                << px(margin_left + cell * static_cast<double>(m)) << "\" y=\""
                << px(margin_top + cell * static_cast<double>(v))
                << "\" width=\"" << px(cell) << "\" height=\"" << px(cell)
                << "\" fill=\"" << ramp_color(value) << "\" data-row=\""
                << (v + 1) << "\" data-col=\"" << (m + 1) << "\" data-value=\""
                << csvio::format_double(value) << "\"/>\n";
        }
    }
    for (std::size_t v = 0; v < grid.rows(); ++v) {
        if (grid.rows() <= 25 || (v + 1) % 5 == 0 || v == 0) {
            out << "<text x=\"" << px(margin_left - 18.0) << "\" y=\""
                << px(margin_top + cell * (static_cast<double>(v) + 0.7))
                << "\" font-size=\"9\">" << (v + 1) << "</text>\n";
        }
    }
    for (std::size_t m = 0; m < grid.cols(); ++m) {
        if (grid.cols() <= 25 || (m + 1) % 5 == 0 || m == 0) {
            out << "<text x=\""
                << px(margin_left + cell * (static_cast<double>(m) + 0.2))
                << "\" y=\"" << px(margin_top + plot_h + 14.0)
                << "\" font-size=\"9\">" << (m + 1) << "</text>\n";
        }
    }

    // legend: vertical ramp with the fixed [0, 1] scale
    const double lx = margin_left + plot_w + 24.0;
    const int steps = 20;
    const double lh = plot_h / static_cast<double>(steps);
    for (int s = 0; s < steps; ++s) {
        const double v = 1.0 - (static_cast<double>(s) + 0.5) / steps;
        out << "<rect class=\"legend\" x=\"" << px(lx) << "\" y=\""
            << px(margin_top + lh * s) << "\" width=\"14\" height=\""
            << px(lh + 0.5) << "\" fill=\"" << ramp_color(v) << "\"/>\n";
    }
    out << "<text x=\"" << px(lx + 18.0) << "\" y=\"" << px(margin_top + 8.0)
        << "\" font-size=\"10\">1</text>\n";
    out << "<text x=\"" << px(lx + 18.0) << "\" y=\"" << px(margin_top + plot_h)
        << "\" font-size=\"10\">0</text>\n";

    caption_block(out, margin_left, margin_top + plot_h + 34.0, caption_lines);
    out << "</svg>\n";
    return {out.str(), ChartKind::Heatmap};
}

SvgChart render_forecast_overlay(const std::vector<double> &actual,
                                 const std::vector<double> &predicted,
                                 const std::vector<std::string> &caption_lines) {
    if (actual.empty() || actual.size() != predicted.size()) {
        throw ConfigError("forecast overlay needs equal, nonempty series");
    }
    double lo = actual[0], hi = actual[0];
    for (double v : actual) { lo = std::min(lo, v); hi = std::max(hi, v); }
    for (double v : predicted) { lo = std::min(lo, v); hi = std::max(hi, v); }
    if (hi == lo) hi = lo + 1.0;

    const double margin_left = 50.0, margin_top = 20.0;
    const double plot_w = 640.0, plot_h = 220.0;
    const double caption_h = 16.0 * (static_cast<double>(caption_lines.size()) + 1.0);
    const double width = margin_left + plot_w + 20.0;
    const double height = margin_top + plot_h + 40.0 + caption_h;
    const double dx = plot_w / static_cast<double>(actual.size() - 1 ? actual.size() - 1 : 1);

    auto ypos = [&](double v) {
        return margin_top + (hi - v) / (hi - lo) * plot_h;
    };
    auto polyline = [&](const std::vector<double> &vals, const char *cls,
                        const char *color) {
        std::ostringstream pts;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (i) pts << " ";
            pts << px(margin_left + dx * static_cast<double>(i)) << ","
                << px(ypos(vals[i]));
        }
        std::ostringstream el;
        el << "<polyline class=\"" << cls << "\" fill=\"none\" stroke=\""
           << color << "\" stroke-width=\"1\" points=\"" << pts.str()
           << "\"/>\n";
        return el.str();
    };

    std::ostringstream out;
    open_svg(out, width, height);
    out << "<text x=\"8\" y=\"" << px(margin_top + 4) << "\" font-size=\"10\">"
        << escape(csvio::format_fixed(hi, 3)) << "</text>\n";
    out << "<text x=\"8\" y=\"" << px(margin_top + plot_h)
        << "\" font-size=\"10\">" << escape(csvio::format_fixed(lo, 3))
        << "</text>\n";
    out << polyline(actual, "actual", "#444444");
    out << polyline(predicted, "predicted", "#b2182b");
    out << "<text x=\"" << px(margin_left) << "\" y=\""
        << px(margin_top + plot_h + 18.0)
        << "\" font-size=\"11\">grey: actual, red: forecast</text>\n";
    caption_block(out, margin_left, margin_top + plot_h + 36.0, caption_lines);
    out << "</svg>\n";
    return {out.str(), ChartKind::ForecastOverlay};
}

} // namespace rnndcor::svg
