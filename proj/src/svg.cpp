#include "qloz/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace qloz {

namespace {

constexpr double kUnit = 40.0;
constexpr double kRow = 0.8660254037844386;  // sqrt(3)/2

struct Mapper {
    double min_x = 0, max_y = 0;
    double x(double i, double j) const { return (i + j / 2 - min_x) * kUnit + 10.0; }
    double y(double j) const { return (max_y - j) * kRow * kUnit + 10.0; }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

void polygon(std::ostringstream& os, const Mapper& m,
             const std::vector<std::pair<double, double>>& pts, const std::string& fill,
             const std::string& stroke, double width) {
    os << "<polygon points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k) os << " ";
        os << fmt(m.x(pts[k].first, pts[k].second)) << "," << fmt(m.y(pts[k].second));
    }
    os << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\""
       << fmt(width) << "\"/>\n";
}

std::vector<std::pair<double, double>> cell_corners(const Cell& c) {
    double i = c.i, j = c.j;
    if (c.up) return {{i, j}, {i + 1, j}, {i, j + 1}};
    return {{i + 1, j}, {i + 1, j + 1}, {i, j + 1}};
}

std::vector<std::pair<double, double>> lozenge_corners(const Lozenge& l) {
    double i = l.up.i, j = l.up.j;
    switch (l.orient()) {
        case LozOrient::Right: return {{i, j}, {i + 1, j}, {i + 1, j + 1}, {i, j + 1}};
        case LozOrient::Left: return {{i + 1, j}, {i, j + 1}, {i - 1, j + 1}, {i, j}};
        case LozOrient::Vertical: return {{i, j}, {i + 1, j - 1}, {i + 1, j}, {i, j + 1}};
    }
    return {};
}

}  // namespace

std::string render_region_svg(const RegionSpec& spec,
                              const std::optional<std::vector<Lozenge>>& tiling) {
    RegionGeometry geo = region_geometry(spec);
    Region region = build_region(spec);

    const double rows = static_cast<double>(geo.sides[0] + geo.sides[5]);
    Mapper m;
    m.max_y = rows;
    // Westmost point of the hexagon frame is on the northwest line.
    m.min_x = std::min({0.0, -static_cast<double>(geo.sides[5]) + rows / 2.0,
                        -static_cast<double>(geo.sides[5])});
    double width = (geo.sides[4] + rows / 2.0 - m.min_x) * kUnit + 20.0;
    double height = rows * kRow * kUnit + 20.0;
    if (region.empty()) width = std::max(width, 40.0), height = std::max(height, 40.0);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
       << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (tiling) {
        for (const Lozenge& l : *tiling) {
            const char* fill = "#c6dbef";
            if (l.orient() == LozOrient::Right) fill = "#fdd0a2";
            if (l.orient() == LozOrient::Vertical) fill = "#c7e9c0";
            polygon(os, m, lozenge_corners(l), fill, "#555555", 1.0);
        }
    } else {
        for (const Cell& c : region.cells())
            polygon(os, m, cell_corners(c), "#f5f5ef", "#cccccc", 0.5);
    }

    std::vector<Cell> dents = geo.dent_cells;
    std::sort(dents.begin(), dents.end(), ScanLess{});
    for (const Cell& c : dents) polygon(os, m, cell_corners(c), "#9e9e9e", "#777777", 0.5);

    for (const auto& loop : boundary_loops(region)) {
        os << "<path d=\"";
        for (std::size_t k = 0; k < loop.size(); ++k) {
            os << (k ? "L" : "M") << fmt(m.x(loop[k].first, loop[k].second)) << ","
               << fmt(m.y(loop[k].second)) << " ";
        }
        os << "Z\" fill=\"none\" stroke=\"#222222\" stroke-width=\"2.00\"/>\n";
    }

    os << "</svg>\n";
    return os.str();
}

}  // namespace qloz
