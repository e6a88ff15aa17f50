#include "shicores/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "shicores/bijection.hpp"

namespace shicores {

namespace {

struct Point2 {
    double x = 0;
    double y = 0;
};

// Orthogonal projection of V (n = 3) onto the plane, with H_{alpha_2,0}
// horizontal and H_{alpha_1,0} at 60 degrees. The A_0 edge length sqrt(6)/3
// maps to 100 units.
const double kScale = 100.0 / (std::sqrt(6.0) / 3.0);

Point2 project(double v1, double v2, double v3)
{
    return {(2 * v1 - v2 - v3) / std::sqrt(6.0) * kScale, -(v2 - v3) / std::sqrt(2.0) * kScale};
}

Point2 project(const RationalPoint& p)
{
    const double d = static_cast<double>(p.denominator());
    const auto num = p.numerators();
    return project(num[0] / d, num[1] / d, num[2] / d);
}

std::string fmt(double v)
{
    if (std::abs(v) < 0.005) {
        v = 0.0;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Segment {
    Point2 a;
    Point2 b;
    bool shi = false;
};

// The line <v, alpha> = k clipped to {|<v, beta>| <= bound for all beta > 0}.
bool clip(FiniteRoot alpha, Int k, Int bound, Segment& out)
{
    // Work in V with the functional <., beta> written on a point
    // base + t * dir, where base lies on the line and dir is orthogonal to alpha.
    std::array<double, 3> a{0, 0, 0};
    a[alpha.i] = 1;
    a[alpha.j] = -1;
    std::array<double, 3> base{a[0] * k / 2.0, a[1] * k / 2.0, a[2] * k / 2.0};
    const int other = 3 - alpha.i - alpha.j;
    std::array<double, 3> dir{1, 1, 1};
    dir[other] = -2;

    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (const auto beta : positive_roots(3)) {
        const double c0 = base[beta.i] - base[beta.j];
        const double c1 = dir[beta.i] - dir[beta.j];
        if (std::abs(c1) < 1e-12) {
            if (std::abs(c0) > bound + 1e-9) {
                return false;
            }
            continue;
        }
        double t0 = (-bound - c0) / c1;
        double t1 = (bound - c0) / c1;
        if (t0 > t1) {
            std::swap(t0, t1);
        }
        lo = std::max(lo, t0);
        hi = std::min(hi, t1);
    }
    if (hi - lo < 1e-9) {
        return false;
    }
    auto at = [&](double t) {
        return project(base[0] + t * dir[0], base[1] + t * dir[1], base[2] + t * dir[2]);
    };
    out.a = at(lo);
    out.b = at(hi);
    return true;
}

} // namespace

std::string render_svg(int n, int m)
{
    if (n != 3) {
        throw std::invalid_argument("rendering supports only n = 3");
    }
    if (m < 1) {
        throw std::invalid_argument("m must be at least 1");
    }
    const Int bound = m + 2;

    std::vector<Segment> segments;
    for (const auto alpha : positive_roots(n)) {
        for (Int k = -bound; k <= bound; ++k) {
            Segment s;
            if (clip(alpha, k, bound, s)) {
                s.shi = -m < k && k <= m;
                segments.push_back(s);
            }
        }
    }

    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    for (const auto& s : segments) {
        for (const auto& p : {s.a, s.b}) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    const double margin = 20;
    min_x -= margin;
    min_y -= margin;
    const double width = max_x - min_x + margin;
    const double height = max_y - min_y + margin;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fmt(min_x) << ' ' << fmt(min_y)
       << ' ' << fmt(width) << ' ' << fmt(height) << "\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
       << "\">\n";
    os << "<title>dominant " << m << "-minimal alcoves of the " << m << "-Shi arrangement, n = 3</title>\n";
    os << "<rect x=\"" << fmt(min_x) << "\" y=\"" << fmt(min_y) << "\" width=\"" << fmt(width) << "\" height=\""
       << fmt(height) << "\" fill=\"white\"/>\n";

    const auto catalog = enumerate(n, m);
    os << "<g id=\"alcoves\">\n";
    for (const auto& e : catalog.entries) {
        const auto vertices = e.alcove().vertices();
        Point2 centre;
        os << "<polygon class=\"alcove\" fill=\"#f2c14e\" fill-opacity=\"0.6\" stroke=\"none\" points=\"";
        for (std::size_t k = 0; k < vertices.size(); ++k) {
            const auto p = project(vertices[k]);
            centre.x += p.x / 3;
            centre.y += p.y / 3;
            os << (k ? " " : "") << fmt(p.x) << ',' << fmt(p.y);
        }
        os << "\"/>\n";

        const std::string label = e.core.empty() ? "\xE2\x88\x85" : to_string(e.core);
        const double size = std::min(14.0, 52.0 / (0.6 * static_cast<double>(label.size())));
        os << "<text class=\"label\" x=\"" << fmt(centre.x) << "\" y=\"" << fmt(centre.y + size / 3)
           << "\" font-family=\"sans-serif\" font-size=\"" << fmt(size) << "\" text-anchor=\"middle\">" << label
           << "</text>\n";
    }
    os << "</g>\n";

    os << "<g id=\"hyperplanes\">\n";
    for (const auto& s : segments) {
        os << "<line x1=\"" << fmt(s.a.x) << "\" y1=\"" << fmt(s.a.y) << "\" x2=\"" << fmt(s.b.x) << "\" y2=\""
           << fmt(s.b.y) << "\" stroke=\"" << (s.shi ? "#c0392b" : "#b0b0b0") << "\" stroke-width=\""
           << (s.shi ? "2" : "1") << "\"/>\n";
    }
    os << "</g>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace shicores
