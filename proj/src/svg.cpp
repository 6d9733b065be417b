#include "ncgas/svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <vector>

#include "ncgas/errors.hpp"
#include "ncgas/number_format.hpp"
#include "ncgas/sweep.hpp"

namespace ncgas {

namespace {

constexpr double kWidth = 960.0;
constexpr double kHeight = 440.0;
constexpr double kPanelWidth = 480.0;
constexpr double kMarginLeft = 78.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 48.0;
constexpr double kMarginBottom = 56.0;

constexpr std::array<std::string_view, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                   "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

struct CsvPoint {
    double tau, eps2b, eps2b_err, total, total_err;
};

struct Series {
    double rs;
    std::vector<CsvPoint> points;
};

std::string label(double v) {
    if (std::abs(v) < 1e-12) v = 0.0;
    std::array<char, 32> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 4);
    (void)ec;
    return std::string(buf.data(), end);
}

std::string px(double v) { return format_fixed(v, 2); }

std::vector<Series> parse_csv(std::string_view csv) {
    std::vector<Series> series;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (pos < csv.size()) {
        const auto nl = csv.find('\n', pos);
        if (nl == std::string_view::npos) throw ParseError(line_no + 1, "csv: missing final newline");
        const std::string_view line = csv.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (!saw_header) {
            if (line != kCsvHeader) throw ParseError(line_no, "csv: unexpected header");
            saw_header = true;
            continue;
        }
        std::array<double, 9> f{};
        std::size_t start = 0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            const auto comma = line.find(',', start);
            const bool last = i + 1 == f.size();
            if (last != (comma == std::string_view::npos)) throw ParseError(line_no, "csv: expected 9 fields");
            const auto field = line.substr(start, last ? line.npos : comma - start);
            const auto v = parse_double(field);
            if (!v || !std::isfinite(*v)) throw ParseError(line_no, "csv: bad number '" + std::string(field) + "'");
            f[i] = *v;
            start = comma + 1;
        }
        auto it = std::find_if(series.begin(), series.end(), [&](const Series& s) { return s.rs == f[0]; });
        if (it == series.end()) it = series.insert(series.end(), Series{f[0], {}});
        it->points.push_back({f[1], f[5], f[6], f[7], f[8]});
    }
    if (!saw_header) throw ParseError(1, "csv: empty document");
    if (series.empty()) throw ParseError(line_no, "csv: no data rows");
    return series;
}

struct Range {
    double lo, hi;
};

Range padded(double lo, double hi) {
    if (hi - lo <= 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)})) {
        const double pad = std::max(std::abs(lo) * 0.05, 1e-3);
        return {lo - pad, hi + pad};
    }
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
}

double nice_step(double span) {
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double r = raw / mag;
    const double nice = r < 1.5 ? 1.0 : r < 3.0 ? 2.0 : r < 7.0 ? 5.0 : 10.0;
    return nice * mag;
}

class Panel {
public:
    Panel(double x0, Range xr, Range yr) : x0_(x0), xr_(xr), yr_(yr) {}

    double x(double v) const {
        return x0_ + kMarginLeft + (v - xr_.lo) / (xr_.hi - xr_.lo) * (kPanelWidth - kMarginLeft - kMarginRight);
    }
    double y(double v) const {
        return kHeight - kMarginBottom - (v - yr_.lo) / (yr_.hi - yr_.lo) * (kHeight - kMarginTop - kMarginBottom);
    }

    void frame(std::string& out, std::string_view title, std::string_view ylabel) const {
        const double left = x0_ + kMarginLeft, right = x0_ + kPanelWidth - kMarginRight;
        const double top = kMarginTop, bottom = kHeight - kMarginBottom;
        out += "<g class=\"panel\">\n";
        out += "<rect x=\"" + px(left) + "\" y=\"" + px(top) + "\" width=\"" + px(right - left) + "\" height=\"" +
               px(bottom - top) + "\" fill=\"none\" stroke=\"#333\"/>\n";
        const double xs = nice_step(xr_.hi - xr_.lo);
        for (double i = std::ceil(xr_.lo / xs); i * xs <= xr_.hi; i += 1.0) {
            const double t = i * xs;
            out += "<line x1=\"" + px(x(t)) + "\" y1=\"" + px(bottom) + "\" x2=\"" + px(x(t)) + "\" y2=\"" +
                   px(bottom + 5) + "\" stroke=\"#333\"/>\n";
            out += "<text x=\"" + px(x(t)) + "\" y=\"" + px(bottom + 19) + "\" text-anchor=\"middle\">" + label(t) +
                   "</text>\n";
        }
        const double ys = nice_step(yr_.hi - yr_.lo);
        for (double i = std::ceil(yr_.lo / ys); i * ys <= yr_.hi; i += 1.0) {
            const double t = i * ys;
            out += "<line x1=\"" + px(left - 5) + "\" y1=\"" + px(y(t)) + "\" x2=\"" + px(right) + "\" y2=\"" +
                   px(y(t)) + "\" stroke=\"#ddd\"/>\n";
            out += "<text x=\"" + px(left - 8) + "\" y=\"" + px(y(t) + 4) + "\" text-anchor=\"end\">" + label(t) +
                   "</text>\n";
        }
        out += "<text x=\"" + px((left + right) / 2) + "\" y=\"" + px(top - 16) +
               "\" text-anchor=\"middle\" font-weight=\"bold\">" + std::string(title) + "</text>\n";
        out += "<text x=\"" + px((left + right) / 2) + "\" y=\"" + px(kHeight - 14) +
               "\" text-anchor=\"middle\">tau</text>\n";
        out += "<text x=\"" + px(x0_ + 18) + "\" y=\"" + px((top + bottom) / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 " +
               px(x0_ + 18) + " " + px((top + bottom) / 2) + ")\">" + std::string(ylabel) + "</text>\n";
        out += "</g>\n";
    }

private:
    double x0_;
    Range xr_, yr_;
};

void draw_series(std::string& out, const Panel& panel, const Series& s, std::string_view color, bool eps2b) {
    auto value = [&](const CsvPoint& p) { return eps2b ? p.eps2b : p.total; };
    auto error = [&](const CsvPoint& p) { return eps2b ? p.eps2b_err : p.total_err; };
    out += "<g class=\"series\" data-rs=\"" + label(s.rs) + "\" stroke=\"" + std::string(color) + "\" fill=\"" +
           std::string(color) + "\">\n";
    if (s.points.size() > 1) {
        out += "<polyline fill=\"none\" points=\"";
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            if (i) out += ' ';
            out += px(panel.x(s.points[i].tau)) + "," + px(panel.y(value(s.points[i])));
        }
        out += "\"/>\n";
    }
    for (const auto& p : s.points) {
        const double cx = panel.x(p.tau);
        const double lo = panel.y(value(p) - error(p));
        const double hi = panel.y(value(p) + error(p));
        out += "<line x1=\"" + px(cx) + "\" y1=\"" + px(lo) + "\" x2=\"" + px(cx) + "\" y2=\"" + px(hi) + "\"/>\n";
        out += "<line x1=\"" + px(cx - 3) + "\" y1=\"" + px(lo) + "\" x2=\"" + px(cx + 3) + "\" y2=\"" + px(lo) + "\"/>\n";
        out += "<line x1=\"" + px(cx - 3) + "\" y1=\"" + px(hi) + "\" x2=\"" + px(cx + 3) + "\" y2=\"" + px(hi) + "\"/>\n";
        out += "<circle cx=\"" + px(cx) + "\" cy=\"" + px(panel.y(value(p))) + "\" r=\"2.5\"/>\n";
    }
    out += "</g>\n";
}

} // namespace

std::string emit_svg(std::string_view csv) {
    const auto series = parse_csv(csv);

    double tau_lo = INFINITY, tau_hi = -INFINITY;
    double e_lo = INFINITY, e_hi = -INFINITY, t_lo = INFINITY, t_hi = -INFINITY;
    for (const auto& s : series) {
        for (const auto& p : s.points) {
            tau_lo = std::min(tau_lo, p.tau);
            tau_hi = std::max(tau_hi, p.tau);
            e_lo = std::min(e_lo, p.eps2b - p.eps2b_err);
            e_hi = std::max(e_hi, p.eps2b + p.eps2b_err);
            t_lo = std::min(t_lo, p.total - p.total_err);
            t_hi = std::max(t_hi, p.total + p.total_err);
        }
    }
    const Range xr = padded(tau_lo, tau_hi);
    const Panel left(0.0, xr, padded(e_lo, e_hi));
    const Panel right(kPanelWidth, xr, padded(t_lo, t_hi));

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(kWidth) + "\" height=\"" + px(kHeight) +
           "\" viewBox=\"0 0 " + px(kWidth) + " " + px(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    left.frame(out, "exchange term eps2b(tau)", "eps2b [Ry]");
    right.frame(out, "total energy per electron", "total [Ry]");
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto color = kPalette[i % kPalette.size()];
        draw_series(out, left, series[i], color, true);
        draw_series(out, right, series[i], color, false);
        const double ly = kMarginTop + 14.0 + 16.0 * static_cast<double>(i);
        out += "<text x=\"" + px(kWidth - kMarginRight - 8) + "\" y=\"" + px(ly) + "\" text-anchor=\"end\" fill=\"" +
               std::string(color) + "\">r_s = " + label(series[i].rs) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace ncgas
