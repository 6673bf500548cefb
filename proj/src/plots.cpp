#include "cournot/plots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>

namespace cournot {

namespace {

struct Curve {
    std::string label;
    std::string color;
    std::vector<double> x;
    std::vector<double> y;
};

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 50.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void write_chart(const std::filesystem::path& path, const std::string& title,
                 const std::vector<Curve>& curves, bool log_y) {
    double x_min = std::numeric_limits<double>::infinity();
    double x_max = -x_min;
    double y_min = x_min;
    double y_max = -x_min;
    for (const Curve& c : curves) {
        for (std::size_t k = 0; k < c.x.size(); ++k) {
            double y = c.y[k];
            if (log_y) {
                if (!(y > 0.0)) {
                    continue;
                }
                y = std::log10(y);
            }
            x_min = std::min(x_min, c.x[k]);
            x_max = std::max(x_max, c.x[k]);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    }
    if (!(x_max >= x_min) || !(y_max >= y_min)) {
        throw std::runtime_error("no finite data to plot");
    }
    if (x_max == x_min) {
        x_max = x_min + 1.0;
    }
    if (y_max == y_min) {
        y_max = y_min + 1.0;
    }

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto sx = [&](double x) { return kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    auto sy = [&](double y) { return kMarginTop + (y_max - y) / (y_max - y_min) * plot_h; };

    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"15\">" << title << "</text>\n";

    // axes + ticks
    out << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
    const int n_ticks = 5;
    for (int k = 0; k <= n_ticks; ++k) {
        const double fx = x_min + (x_max - x_min) * k / n_ticks;
        const double fy = y_min + (y_max - y_min) * k / n_ticks;
        out << "<line x1=\"" << sx(fx) << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\"" << sx(fx)
            << "\" y2=\"" << kMarginTop + plot_h + 5 << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << sx(fx) << "\" y=\"" << kMarginTop + plot_h + 20
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << num(fx)
            << "</text>\n";
        const std::string ylabel = log_y ? "1e" + num(fy) : num(fy);
        out << "<line x1=\"" << kMarginLeft - 5 << "\" y1=\"" << sy(fy) << "\" x2=\"" << kMarginLeft
            << "\" y2=\"" << sy(fy) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << sy(fy) + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << ylabel
            << "</text>\n";
    }

    double legend_y = kMarginTop + 14.0;
    for (const Curve& c : curves) {
        out << "<polyline fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"1.5\" points=\"";
        bool pen_down = false;
        for (std::size_t k = 0; k < c.x.size(); ++k) {
            double y = c.y[k];
            if (log_y) {
                if (!(y > 0.0)) {
                    continue;
                }
                y = std::log10(y);
            }
            out << (pen_down ? " " : "") << num(sx(c.x[k])) << ',' << num(sy(y));
            pen_down = true;
        }
        out << "\"/>\n";
        if (curves.size() > 1) {
            out << "<text x=\"" << kMarginLeft + plot_w - 8 << "\" y=\"" << legend_y
                << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
                << c.color << "\">" << c.label << "</text>\n";
            legend_y += 16.0;
        }
    }
    out << "</svg>\n";
    if (!out) {
        throw std::runtime_error("write failed for '" + path.string() + "'");
    }
}

Curve series_curve(const TimeSeries& series, const std::string& label, const std::string& color) {
    Curve c{label, color, {}, {}};
    const GridSpec& grid = series.grid();
    const int count = series.size();
    for (int tau = 0; tau < count; ++tau) {
        c.x.push_back(grid.t(tau));
        c.y.push_back(series[tau]);
    }
    return c;
}

} // namespace

std::vector<std::filesystem::path> emit_plots(const EquilibriumSolution& sol,
                                              const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> written;
    auto try_write = [&](const char* name, const std::string& title,
                         const std::vector<Curve>& curves, bool log_y) {
        const std::filesystem::path path = dir / name;
        try {
            write_chart(path, title, curves, log_y);
            written.push_back(path);
        } catch (const std::exception& e) {
            std::cerr << "warning: skipping plot " << path.string() << ": " << e.what() << '\n';
        }
    };

    try_write("price.svg", "Price", {series_curve(sol.price, "price", "#1f77b4")}, false);
    try_write("production.svg", "Aggregate production",
              {series_curve(sol.production, "production", "#d62728")}, false);

    {
        Curve mass{"mass", "#2ca02c", {}, {}};
        const GridSpec& grid = sol.density.grid();
        for (int tau = 0; tau <= grid.n_time; ++tau) {
            mass.x.push_back(grid.t(tau));
            mass.y.push_back(space_integral(sol.density.row(tau), grid));
        }
        try_write("mass.svg", "Total mass", {mass}, false);
    }

    if (sol.history.empty()) {
        std::cerr << "warning: no iteration history, skipping convergence plot\n";
    } else {
        Curve residual{"residual", "#1f77b4", {}, {}};
        Curve weighted{"weighted a_n", "#d62728", {}, {}};
        Curve exploit{"exploitability", "#2ca02c", {}, {}};
        for (const IterationDiagnostics& d : sol.history) {
            residual.x.push_back(d.n);
            residual.y.push_back(d.residual);
            weighted.x.push_back(d.n);
            weighted.y.push_back(d.weighted_an);
            if (d.exploitability) {
                exploit.x.push_back(d.n);
                exploit.y.push_back(*d.exploitability);
            }
        }
        try_write("convergence.svg", "Convergence (log scale)", {residual, weighted, exploit},
                  true);
    }
    return written;
}

} // namespace cournot
