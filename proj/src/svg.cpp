#include "dragonbound/svg.hpp"

#include <algorithm>
#include <sstream>

#include "dragonbound/derive.hpp"
#include "dragonbound/geometry.hpp"
#include "dragonbound/verify.hpp"

namespace dragonbound {

namespace {

struct Box {
    std::int64_t minx = 0, miny = 0, maxx = 0, maxy = 0;
    void grow(const LatticePath& p) {
        for (const GridPoint& v : p.vertices) {
            minx = std::min(minx, v.x);
            maxx = std::max(maxx, v.x);
            miny = std::min(miny, v.y);
            maxy = std::max(maxy, v.y);
        }
    }
};

void polyline(std::ostringstream& out, const LatticePath& p, const Box& box, int scale,
              const char* color) {
    out << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
        << std::max(1, scale / 4) << "\" points=\"";
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (i) out << ' ';
        // Flip y so North points up.
        out << (p.vertices[i].x - box.minx) * scale << ','
            << (box.maxy - p.vertices[i].y) * scale;
    }
    out << "\"/>\n";
}

}  // namespace

std::string render_svg(const FoldingSystem& sys, unsigned level, const SvgOptions& opts,
                       std::uint64_t cap) {
    const FoldWord fold = expand_fold(sys, FoldLetter::MoveA, level, cap);
    const LatticePath fold_path = render_fold(fold);

    LatticePath left_path, right_path;
    if (opts.with_boundary) {
        const BoundarySystem tau = derive_boundary_system(sys);
        const auto headings = boundary_start_headings(Heading::East);
        const DirWord left = expand_boundary(
            tau, DirWord::finished({Dir::TurnRight}, {Parity::Even}), level, cap);
        const DirWord right = expand_boundary(
            tau, DirWord::finished({Dir::TurnLeft}, {Parity::Even}), level, cap);
        left_path = render_boundary(left, {0, 0}, headings.left_curve);
        right_path = render_boundary(right, {0, 0}, headings.right_curve);
    }

    Box box;
    box.grow(fold_path);
    if (opts.with_boundary) {
        box.grow(left_path);
        box.grow(right_path);
    }
    box.minx -= 1;
    box.miny -= 1;
    box.maxx += 1;
    box.maxy += 1;

    const int scale = std::max(1, opts.scale);
    const std::int64_t width = (box.maxx - box.minx) * scale;
    const std::int64_t height = (box.maxy - box.miny) * scale;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    polyline(out, fold_path, box, scale, "black");
    if (opts.with_boundary) {
        polyline(out, left_path, box, scale, "red");
        polyline(out, right_path, box, scale, "blue");
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace dragonbound
