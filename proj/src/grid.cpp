#include "ddc/grid.hpp"

#include <stdexcept>

namespace ddc {

std::string_view to_string(GridKind kind) {
    return kind == GridKind::Square ? "square" : "hexagonal";
}

GridKind parse_grid_kind(std::string_view text) {
    if (text == "square") return GridKind::Square;
    if (text == "hexagonal") return GridKind::Hexagonal;
    throw std::invalid_argument("unknown grid kind '" + std::string(text) + "'");
}

// xi(x, y) = (x + y/sqrt3, 2y/sqrt3) sends lambda(1,0) + mu(-1/2, sqrt3/2) to (lambda, mu),
// so on axial coordinates it only changes the grid tag.
GridPoint xi_map(const GridPoint& p) {
    if (p.kind != GridKind::Hexagonal) throw std::invalid_argument("xi_map expects a hexagonal point");
    return GridPoint::square(p.a, p.b);
}

GridPoint xi_inverse(const GridPoint& p) {
    if (p.kind != GridKind::Square) throw std::invalid_argument("xi_inverse expects a square point");
    return GridPoint::hex(p.a, p.b);
}

namespace {
void require_same_kind(const GridPoint& p, const GridPoint& q) {
    if (p.kind != q.kind) throw std::invalid_argument("points lie on different grids");
}
}  // namespace

std::int64_t squared_euclidean(const GridPoint& p, const GridPoint& q) {
    require_same_kind(p, q);
    return squared_norm(q.coords() - p.coords(), p.kind);
}

std::int64_t manhattan_distance(const GridPoint& p, const GridPoint& q) {
    if (p.kind != GridKind::Square || q.kind != GridKind::Square)
        throw std::invalid_argument("Manhattan distance is defined on the square grid only");
    return manhattan_norm(q.coords() - p.coords());
}

std::int64_t hexagonal_distance(const GridPoint& p, const GridPoint& q) {
    if (p.kind != GridKind::Hexagonal || q.kind != GridKind::Hexagonal)
        throw std::invalid_argument("hexagonal distance is defined on the hexagonal grid only");
    return hexagonal_norm(q.coords() - p.coords());
}

std::string to_string(const GridPoint& p) {
    return std::string(p.kind == GridKind::Square ? "square(" : "hex(") + std::to_string(p.a) + "," +
           std::to_string(p.b) + ")";
}

}  // namespace ddc
