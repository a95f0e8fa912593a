#ifndef RNNDCOR_SVG_HPP
#define RNNDCOR_SVG_HPP

#include <string>
#include <vector>

#include "rnndcor/matrix.hpp"

namespace rnndcor::svg {

enum class ChartKind { BarProfile, Heatmap, ForecastOverlay };

struct SvgChart {
    std::string xml;
    ChartKind kind;
};

/// Paired bars per layer: distance correlation next to the aligned ACF
/// value. Every bar carries a data-value attribute equal to the exported
/// CSV text for that number.
SvgChart render_bar_chart(const std::vector<double> &dcor_values,
                          const std::vector<double> &acf_values,
                          const std::vector<std::size_t> &acf_lags,
                          const std::vector<std::string> &caption_lines);

/// Cell colors come from a linear ramp between #f7fbff (0) and #08306b
/// (1); the legend shows the fixed [0, 1] bounds.
SvgChart render_heatmap(const Matrix &grid, const std::string &row_label,
                        const std::string &col_label,
                        const std::vector<std::string> &caption_lines);

SvgChart render_forecast_overlay(const std::vector<double> &actual,
                                 const std::vector<double> &predicted,
                                 const std::vector<std::string> &caption_lines);

} // namespace rnndcor::svg

#endif
