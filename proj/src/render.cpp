#include "knets/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "knets/error.hpp"

namespace knets {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

double to_double(const Rational& r) {
    return numerator(r).convert_to<double>() / denominator(r).convert_to<double>();
}

const char* class_color(size_t i) {
    static const char* palette[] = {"#c0392b", "#2471a3", "#1e8449", "#af7ac5",
                                    "#b7950b", "#17a589", "#884ea0"};
    return palette[i % (sizeof(palette) / sizeof(palette[0]))];
}

struct Segment {
    double x1, y1, x2, y2;
    bool ok = false;
};

// Clip a*x + b*y + c = 0 to the rectangle.
Segment clip_line(double a, double b, double c, const RenderOptions& o) {
    std::vector<std::pair<double, double>> hits;
    const double eps = 1e-9;
    auto push = [&hits, &o, eps](double x, double y) {
        if (x < o.min_x - eps || x > o.max_x + eps || y < o.min_y - eps || y > o.max_y + eps)
            return;
        for (auto& [hx, hy] : hits)
            if (std::abs(hx - x) < eps && std::abs(hy - y) < eps) return;
        hits.emplace_back(x, y);
    };
    if (b != 0) {
        push(o.min_x, -(c + a * o.min_x) / b);
        push(o.max_x, -(c + a * o.max_x) / b);
    }
    if (a != 0) {
        push(-(c + b * o.min_y) / a, o.min_y);
        push(-(c + b * o.max_y) / a, o.max_y);
    }
    Segment s;
    if (hits.size() >= 2) {
        std::sort(hits.begin(), hits.end());
        s = {hits.front().first, hits.front().second, hits.back().first, hits.back().second, true};
    }
    return s;
}

} // namespace

std::string render_svg(const KNetConfig& config, const RenderOptions& o) {
    if (!config.field.is_rational_field())
        throw Error(ErrorCode::NonRealConfiguration,
                    "configuration lives over " + config.field.str() +
                        "; only rational coordinates are drawable");

    const double span_x = o.max_x - o.min_x, span_y = o.max_y - o.min_y;
    if (span_x <= 0 || span_y <= 0)
        throw Error(ErrorCode::InvalidArgument, "empty viewbox");
    const double width = o.width;
    const double height = width * span_y / span_x;
    auto sx = [&](double x) { return (x - o.min_x) / span_x * width; };
    auto sy = [&](double y) { return (o.max_y - y) / span_y * height; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    std::vector<std::string> legend;
    for (size_t ci = 0; ci < config.classes.size(); ++ci) {
        const auto& cls = config.classes[ci];
        svg << "<g stroke=\"" << class_color(ci) << "\" stroke-width=\"1.5\">\n";
        for (size_t li = 0; li < cls.size(); ++li) {
            const ProjLine& l = cls[li];
            std::string label = "class " + std::to_string(ci + 1) + " line " +
                                std::to_string(li + 1) + " " + l.str();
            double a = to_double(l[0].rational_value());
            double b = to_double(l[1].rational_value());
            double c = to_double(l[2].rational_value());
            if (a == 0 && b == 0) {
                legend.push_back(label + " (line at infinity)");
                continue;
            }
            Segment s = clip_line(a, b, c, o);
            if (!s.ok) {
                legend.push_back(label + " (outside viewbox)");
                continue;
            }
            svg << "  <line x1=\"" << fmt(sx(s.x1)) << "\" y1=\"" << fmt(sy(s.y1)) << "\" x2=\""
                << fmt(sx(s.x2)) << "\" y2=\"" << fmt(sy(s.y2)) << "\"><title>" << label
                << "</title></line>\n";
        }
        svg << "</g>\n";
    }

    svg << "<g fill=\"black\">\n";
    for (size_t pi = 0; pi < config.points.size(); ++pi) {
        const ProjPoint& p = config.points[pi];
        std::string label = "point " + std::to_string(pi + 1) + " " + p.str();
        if (p[2].is_zero()) {
            legend.push_back(label + " (at infinity)");
            continue;
        }
        double z = to_double(p[2].rational_value());
        double x = to_double(p[0].rational_value()) / z;
        double y = to_double(p[1].rational_value()) / z;
        if (x < o.min_x || x > o.max_x || y < o.min_y || y > o.max_y) {
            legend.push_back(label + " (outside viewbox)");
            continue;
        }
        svg << "  <circle cx=\"" << fmt(sx(x)) << "\" cy=\"" << fmt(sy(y))
            << "\" r=\"3\"><title>" << label << "</title></circle>\n";
    }
    svg << "</g>\n";

    if (!legend.empty()) {
        svg << "<g font-family=\"monospace\" font-size=\"10\" fill=\"#333\">\n";
        double y = 12;
        for (const auto& entry : legend) {
            svg << "  <text x=\"4\" y=\"" << fmt(y) << "\">" << entry << "</text>\n";
            y += 12;
        }
        svg << "</g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace knets
