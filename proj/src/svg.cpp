/*
 * Copyright 2026 The corpus-lens Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "svg.hpp"

#include <algorithm>
#include <sstream>

namespace corpuslens::svg {

namespace {

constexpr int kWidth = 960;
constexpr int kHeight = 480;
constexpr int kMarginLeft = 60;
constexpr int kMarginRight = 160; // legend space
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 80;

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                          "#59a14f", "#edc948", "#b07aa1", "#9c755f"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (const char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

double max_value(const std::vector<Series>& series) {
    double best = 0.0;
    for (const auto& s : series)
        for (const double v : s.values) best = std::max(best, v);
    return best;
}

void open_document(std::ostringstream& out, const std::string& title) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
        << "\">\n";
    out << "  <rect width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\"/>\n";
    out << "  <text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << escape(title) << "</text>\n";
}

void draw_axes(std::ostringstream& out, double max, int plot_w, int plot_h) {
    const int x0 = kMarginLeft;
    const int y0 = kMarginTop;
    out << "  <line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\""
        << y0 + plot_h << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << x0 << "\" y1=\"" << y0 + plot_h << "\" x2=\"" << x0 + plot_w
        << "\" y2=\"" << y0 + plot_h << "\" stroke=\"black\"/>\n";
    for (int tick = 0; tick <= 4; ++tick) {
        const double frac = tick / 4.0;
        const double y = y0 + plot_h - frac * plot_h;
        out << "  <text x=\"" << x0 - 8 << "\" y=\"" << y + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << max * frac << "</text>\n";
    }
}

void draw_legend(std::ostringstream& out, const std::vector<Series>& series) {
    const int x = kWidth - kMarginRight + 16;
    int y = kMarginTop + 8;
    for (std::size_t s = 0; s < series.size(); ++s) {
        out << "  <rect x=\"" << x << "\" y=\"" << y - 10 << "\" width=\"12\" height=\"12\" "
            << "fill=\"" << kPalette[s % kPaletteSize] << "\"/>\n";
        out << "  <text x=\"" << x + 18 << "\" y=\"" << y
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(series[s].label)
            << "</text>\n";
        y += 20;
    }
}

void draw_category_labels(std::ostringstream& out, const std::vector<std::string>& labels,
                          int plot_w, int plot_h) {
    const double slot = static_cast<double>(plot_w) / static_cast<double>(labels.size());
    for (std::size_t c = 0; c < labels.size(); ++c) {
        const double cx = kMarginLeft + (c + 0.5) * slot;
        const double cy = kMarginTop + plot_h + 16;
        out << "  <text x=\"" << cx << "\" y=\"" << cy << "\" text-anchor=\"end\" "
            << "font-family=\"sans-serif\" font-size=\"11\" transform=\"rotate(-45 " << cx
            << ' ' << cy << ")\">" << escape(labels[c]) << "</text>\n";
    }
}

} // namespace

std::string grouped_bar_chart(const std::string& title,
                              const std::vector<std::string>& categories,
                              const std::vector<Series>& series) {
    const int plot_w = kWidth - kMarginLeft - kMarginRight;
    const int plot_h = kHeight - kMarginTop - kMarginBottom;
    const double max = max_value(series);
    const double scale = max > 0.0 ? plot_h / max : 0.0;

    std::ostringstream out;
    open_document(out, title);
    draw_axes(out, max, plot_w, plot_h);

    const double slot = static_cast<double>(plot_w) / std::max<std::size_t>(1, categories.size());
    const double bar_w = slot * 0.8 / std::max<std::size_t>(1, series.size());
    for (std::size_t s = 0; s < series.size(); ++s) {
        for (std::size_t c = 0; c < categories.size() && c < series[s].values.size(); ++c) {
            const double value = series[s].values[c];
            const double h = value * scale;
            const double x = kMarginLeft + c * slot + slot * 0.1 + s * bar_w;
            const double y = kMarginTop + plot_h - h;
            out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << bar_w
                << "\" height=\"" << h << "\" fill=\"" << kPalette[s % kPaletteSize]
                << "\" data-series=\"" << escape(series[s].label) << "\" data-category=\""
                << escape(categories[c]) << "\" data-value=\"" << value << "\"/>\n";
        }
    }

    draw_category_labels(out, categories, plot_w, plot_h);
    draw_legend(out, series);
    out << "</svg>\n";
    return std::move(out).str();
}

std::string line_chart(const std::string& title, const std::vector<std::string>& x_labels,
                       const std::vector<Series>& series) {
    const int plot_w = kWidth - kMarginLeft - kMarginRight;
    const int plot_h = kHeight - kMarginTop - kMarginBottom;
    const double max = max_value(series);
    const double scale = max > 0.0 ? plot_h / max : 0.0;
    const double step = x_labels.size() > 1
                            ? static_cast<double>(plot_w) / static_cast<double>(x_labels.size() - 1)
                            : 0.0;

    std::ostringstream out;
    open_document(out, title);
    draw_axes(out, max, plot_w, plot_h);

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % kPaletteSize];
        out << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" "
            << "data-series=\"" << escape(series[s].label) << "\" points=\"";
        for (std::size_t i = 0; i < series[s].values.size() && i < x_labels.size(); ++i) {
            const double x = kMarginLeft + i * step;
            const double y = kMarginTop + plot_h - series[s].values[i] * scale;
            if (i > 0) out << ' ';
            out << x << ',' << y;
        }
        out << "\"/>\n";
        for (std::size_t i = 0; i < series[s].values.size() && i < x_labels.size(); ++i) {
            const double x = kMarginLeft + i * step;
            const double y = kMarginTop + plot_h - series[s].values[i] * scale;
            out << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"2.5\" fill=\""
                << color << "\" data-series=\"" << escape(series[s].label)
                << "\" data-value=\"" << series[s].values[i] << "\"/>\n";
        }
    }

    draw_category_labels(out, x_labels, plot_w, plot_h);
    draw_legend(out, series);
    out << "</svg>\n";
    return std::move(out).str();
}

} // namespace corpuslens::svg
