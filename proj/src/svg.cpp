#include "atlas/plane_map.hpp"

#include <sstream>

namespace atlas {

// Coordinates are mapped onto a fixed-size canvas; y grows upwards in the
// map and downwards in SVG, so rows are flipped.
std::string render_svg(const Poset& P, const PlaneMap& mu,
                       const TightnessReport& report, int highlight) {
    const int n = P.size();
    std::ostringstream svg;
    if (n == 0) {
        svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"120\" height=\"120\" "
               "viewBox=\"0 0 120 120\"><rect width=\"120\" height=\"120\" "
               "fill=\"#ffffff\"/></svg>\n";
        return svg.str();
    }
    int64_t minx = mu.x(0), maxx = mu.x(0), miny = mu.y(0), maxy = mu.y(0);
    for (int e = 1; e < n; ++e) {
        minx = std::min(minx, mu.x(e));
        maxx = std::max(maxx, mu.x(e));
        miny = std::min(miny, mu.y(e));
        maxy = std::max(maxy, mu.y(e));
    }
    const int64_t margin = 40, span = 640;
    int64_t wx = std::max<int64_t>(1, maxx - minx);
    int64_t wy = std::max<int64_t>(1, maxy - miny);
    auto px = [&](int64_t x) { return margin + (x - minx) * span / wx; };
    auto py = [&](int64_t y) { return margin + (maxy - y) * span / wy; };
    const int64_t W = span + 2 * margin;

    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << W
        << "\" viewBox=\"0 0 " << W << " " << W << "\">\n";
    svg << "  <rect width=\"" << W << "\" height=\"" << W << "\" fill=\"#ffffff\"/>\n";
    if (highlight >= 0 && highlight < n) {
        svg << "  <rect x=\"" << px(mu.x(highlight)) << "\" y=\"" << margin / 2 << "\" width=\""
            << W - margin / 2 - px(mu.x(highlight)) << "\" height=\""
            << py(mu.y(highlight)) - margin / 2 << "\" fill=\"#d7e8f7\" opacity=\"0.6\"/>\n";
    }
    for (auto& [a, b] : P.hasse_edges()) {
        svg << "  <line x1=\"" << px(mu.x(a)) << "\" y1=\"" << py(mu.y(a)) << "\" x2=\""
            << px(mu.x(b)) << "\" y2=\"" << py(mu.y(b))
            << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    }
    for (int e = 0; e < n; ++e) {
        bool t = report.tight.test(e);
        svg << "  <circle cx=\"" << px(mu.x(e)) << "\" cy=\"" << py(mu.y(e))
            << "\" r=\"7\" fill=\"" << (t ? "#2b8a3e" : "#c92a2a")
            << "\" class=\"" << (t ? "tight" : "loose") << "\"/>\n";
        svg << "  <text x=\"" << px(mu.x(e)) + 10 << "\" y=\"" << py(mu.y(e)) - 8
            << "\" font-family=\"monospace\" font-size=\"14\">" << P.label(e) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace atlas
