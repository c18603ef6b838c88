#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "penta/core.hpp"

namespace penta::render {

// One matrix cell in the upper half of the (r+s+t)^2 adjacency matrix;
// 1-based global indices, row < col. Vertex order R(1..r), S(r+1..r+s),
// T(r+s+1..r+s+t).
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

// Five cells per cycle, cycles in canonical sorted order (the order used
// for symbols and colors). Refuses unverified input.
std::vector<std::array<Cell, 5>> gam_cells(const Decomposition& dec);

// Character grid of the upper half: one symbol per cycle (A..Z then a..z,
// cycling), '.' for intra-part cells above the diagonal, part boundaries
// drawn, legend below. Deterministic bytes.
std::string render_text(const Decomposition& dec);

// SVG 1.1, one rect per cell, distinct color per cycle index, legend.
// Deterministic bytes for a fixed input.
std::string render_svg_string(const Decomposition& dec);
void render_svg(const Decomposition& dec, const std::filesystem::path& path);

}  // namespace penta::render
