#include "cyldom/render.hpp"

#include <cmath>
#include <sstream>

namespace cyldom {

std::string render_text(const Pattern& p, const std::vector<int>& seam_rows) {
    std::string body = format_pattern(p);
    if (seam_rows.empty()) return body;
    std::istringstream in(body);
    std::ostringstream out;
    std::string line;
    std::string dashes(static_cast<size_t>(p.spec().n), '-');
    int row = 0;
    while (std::getline(in, line)) {
        out << line << '\n';
        ++row;
        for (int seam : seam_rows)
            if (seam == row && row < p.spec().m) out << '#' << dashes << '\n';
    }
    return out.str();
}

std::string render_svg(const Pattern& p, const std::vector<int>& seam_rows) {
    const int cell = 20;
    const int margin = 20;
    const int w = margin * 2 + (p.spec().n - 1) * cell;
    const int h = margin * 2 + (p.spec().m - 1) * cell;
    auto x_of = [&](int col) { return margin + (col - 1) * cell; };
    auto y_of = [&](int row) { return margin + (row - 1) * cell; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
        << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' ' << h
        << "\">\n";
    out << "<rect width=\"" << w << "\" height=\"" << h
        << "\" fill=\"white\"/>\n";
    for (int seam : seam_rows) {
        if (seam < 1 || seam >= p.spec().m) continue;
        int y = (y_of(seam) + y_of(seam + 1)) / 2;
        out << "<line x1=\"0\" y1=\"" << y << "\" x2=\"" << w << "\" y2=\"" << y
            << "\" stroke=\"#555\" stroke-dasharray=\"6,4\"/>\n";
    }
    for (int row = 1; row <= p.spec().m; ++row) {
        for (int col = 1; col <= p.spec().n; ++col) {
            Cell c{col, row};
            int x = x_of(col), y = y_of(row);
            if (p.star() && *p.star() == c) {
                // five-pointed star
                out << "<path d=\"";
                for (int i = 0; i < 10; ++i) {
                    double ang = -90.0 + i * 36.0;
                    double rad = ang * 3.14159265358979 / 180.0;
                    double r = i % 2 == 0 ? 9.0 : 3.8;
                    double px = x + r * std::cos(rad);
                    double py = y + r * std::sin(rad);
                    out << (i == 0 ? 'M' : 'L') << px << ' ' << py << ' ';
                }
                out << "Z\" fill=\"black\"/>\n";
            } else if (p.contains(c)) {
                out << "<circle cx=\"" << x << "\" cy=\"" << y
                    << "\" r=\"6\" fill=\"black\"/>\n";
            } else {
                out << "<circle cx=\"" << x << "\" cy=\"" << y
                    << "\" r=\"2\" fill=\"#888\"/>\n";
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace cyldom
