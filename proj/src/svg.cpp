#include "tcarank/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace tcarank {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 560.0;
constexpr double kMargin = 56.0;

std::string num(double value) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4f", value);
    return buf;
}

std::string escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

std::string emit_svg(const std::vector<BiplotPoint>& points,
                     const std::string& x_caption,
                     const std::string& y_caption) {
    // Data range always includes the origin; degenerate ranges get padding.
    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
    for (const auto& p : points) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const double xpad = std::max(0.1 * (xmax - xmin), 0.05);
    const double ypad = std::max(0.1 * (ymax - ymin), 0.05);
    xmin -= xpad; xmax += xpad;
    ymin -= ypad; ymax += ypad;

    const auto sx = [&](double x) {
        return kMargin + (x - xmin) / (xmax - xmin) * (kWidth - 2 * kMargin);
    };
    const auto sy = [&](double y) {
        return kHeight - kMargin - (y - ymin) / (ymax - ymin) * (kHeight - 2 * kMargin);
    };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
           "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " +
           num(kHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // Axes through the origin.
    svg += "<line x1=\"" + num(kMargin) + "\" y1=\"" + num(sy(0.0)) + "\" x2=\"" +
           num(kWidth - kMargin) + "\" y2=\"" + num(sy(0.0)) +
           "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + num(sx(0.0)) + "\" y1=\"" + num(kMargin) + "\" x2=\"" +
           num(sx(0.0)) + "\" y2=\"" + num(kHeight - kMargin) +
           "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + num(kWidth / 2) + "\" y=\"" + num(kHeight - 14.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" +
           escape(x_caption) + "</text>\n";
    svg += "<text x=\"16\" y=\"" + num(kHeight / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" transform=\"rotate(-90 16 " +
           num(kHeight / 2) + ")\">" + escape(y_caption) + "</text>\n";

    for (const auto& p : points) {
        const double cx = sx(p.x);
        const double cy = sy(p.y);
        switch (p.kind) {
        case BiplotPoint::Kind::Voter:
            svg += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) +
                   "\" r=\"3\" fill=\"#1f5fbf\"/>\n";
            svg += "<text x=\"" + num(cx + 5.0) + "\" y=\"" + num(cy - 4.0) +
                   "\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#1f5fbf\">" +
                   escape(p.label) + "</text>\n";
            break;
        case BiplotPoint::Kind::Item:
            svg += "<text x=\"" + num(cx) + "\" y=\"" + num(cy) +
                   "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\" "
                   "font-weight=\"bold\" fill=\"#b02020\">" +
                   escape(p.label) + "</text>\n";
            break;
        case BiplotPoint::Kind::Nega:
            svg += "<rect x=\"" + num(cx - 4.0) + "\" y=\"" + num(cy - 4.0) +
                   "\" width=\"8\" height=\"8\" transform=\"rotate(45 " + num(cx) + " " +
                   num(cy) + ")\" fill=\"#107010\"/>\n";
            svg += "<text x=\"" + num(cx + 7.0) + "\" y=\"" + num(cy - 6.0) +
                   "\" font-family=\"sans-serif\" font-size=\"12\" font-weight=\"bold\" "
                   "fill=\"#107010\">" +
                   escape(p.label) + "</text>\n";
            break;
        }
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace tcarank
