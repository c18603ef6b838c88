#include "penta/render.hpp"

#include <fstream>

namespace penta::render {

namespace {

int global_index(const Triplet& tr, const Vertex& v) {
    switch (v.part) {
        case Part::R: return v.index;
        case Part::S: return tr.r + v.index;
        default: return tr.r + tr.s + v.index;
    }
}

char symbol_for(size_t cycle_idx) {
    static const char* alphabet =
        "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
    return alphabet[cycle_idx % 52];
}

// Integer HSV -> RGB (h in degrees, s/v in 0..255); avoids float formatting.
void hsv_to_rgb(int h, int s, int v, int& r, int& g, int& b) {
    int region = (h / 60) % 6;
    int rem = h % 60;
    int p = v * (255 - s) / 255;
    int q = v * (255 * 60 - s * rem) / (255 * 60);
    int t = v * (255 * 60 - s * (60 - rem)) / (255 * 60);
    switch (region) {
        case 0: r = v; g = t; b = p; break;
        case 1: r = q; g = v; b = p; break;
        case 2: r = p; g = v; b = t; break;
        case 3: r = p; g = q; b = v; break;
        case 4: r = t; g = p; b = v; break;
        default: r = v; g = p; b = q; break;
    }
}

std::string color_for(size_t cycle_idx) {
    // Golden-angle hue stepping keeps neighbors distinguishable.
    int h = static_cast<int>((cycle_idx * 137) % 360);
    int r, g, b;
    hsv_to_rgb(h, 190, cycle_idx % 2 ? 235 : 180, r, g, b);
    static const char* digits = "0123456789abcdef";
    std::string out = "#";
    for (int c : {r, g, b}) {
        out += digits[(c >> 4) & 0xF];
        out += digits[c & 0xF];
    }
    return out;
}

}  // namespace

std::vector<std::array<Cell, 5>> gam_cells(const Decomposition& dec) {
    if (!dec.verified())
        throw Error("validation", "rendering requires a verified decomposition");
    std::vector<std::array<Cell, 5>> out;
    for (const FiveCycle& cy : dec.canonical_cycles()) {
        std::array<Cell, 5> cells;
        int i = 0;
        for (const Edge& e : cy.edges()) {
            int a = global_index(dec.triplet, e.a);
            int b = global_index(dec.triplet, e.b);
            cells[i++] = Cell{std::min(a, b), std::max(a, b)};
        }
        out.push_back(cells);
    }
    return out;
}

std::string render_text(const Decomposition& dec) {
    auto cells = gam_cells(dec);
    const Triplet& tr = dec.triplet;
    int N = tr.r + tr.s + tr.t;

    std::vector<std::string> grid(N + 1, std::string(N + 1, ' '));
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            bool same_part = (i <= tr.r && j <= tr.r) ||
                             (i > tr.r && i <= tr.r + tr.s && j > tr.r && j <= tr.r + tr.s) ||
                             (i > tr.r + tr.s && j > tr.r + tr.s);
            if (same_part) grid[i][j] = '.';
        }
    for (size_t c = 0; c < cells.size(); ++c)
        for (const Cell& cell : cells[c]) grid[cell.row][cell.col] = symbol_for(c);

    std::string out = "K " + std::to_string(tr.r) + " " + std::to_string(tr.s) + " " +
                      std::to_string(tr.t) + "  cycles=" + std::to_string(cells.size()) +
                      " edges=" + std::to_string(dec.triplet.edge_count()) + "\n";
    auto boundary_after = [&](int x) { return x == tr.r || x == tr.r + tr.s; };
    int line_width = 0;
    for (int i = 1; i <= N; ++i) {
        std::string line;
        for (int j = 1; j <= N; ++j) {
            line += grid[i][j];
            if (j < N) line += boundary_after(j) ? " | " : " ";
        }
        line_width = std::max(line_width, static_cast<int>(line.size()));
        out += line + "\n";
        if (boundary_after(i) && i < N) {
            out += std::string(static_cast<size_t>(line_width), '-') + "\n";
        }
    }
    out += "\n";
    auto canon = dec.canonical_cycles();
    for (size_t c = 0; c < canon.size(); ++c) {
        out += std::string(1, symbol_for(c)) + " #" + std::to_string(c + 1) + " " +
               canon[c].str() + "\n";
    }
    return out;
}

std::string render_svg_string(const Decomposition& dec) {
    auto cells = gam_cells(dec);
    const Triplet& tr = dec.triplet;
    int N = tr.r + tr.s + tr.t;
    const int cs = 16;      // cell size
    const int margin = 24;
    auto canon = dec.canonical_cycles();
    int legend_w = 360;
    int grid_px = N * cs;
    int legend_h = static_cast<int>(canon.size()) * 16 + 20;
    int width = margin * 2 + grid_px + legend_w;
    int height = margin * 2 + std::max(grid_px, legend_h);

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" +
         std::to_string(height) + "\" fill=\"#ffffff\"/>\n";

    auto px = [&](int col) { return margin + (col - 1) * cs; };
    auto py = [&](int row) { return margin + (row - 1) * cs; };

    // Upper-half background: intra-part cells hatched dark, inter-part light.
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            bool same_part = (i <= tr.r && j <= tr.r) ||
                             (i > tr.r && i <= tr.r + tr.s && j > tr.r && j <= tr.r + tr.s) ||
                             (i > tr.r + tr.s && j > tr.r + tr.s);
            s += "<rect x=\"" + std::to_string(px(j)) + "\" y=\"" + std::to_string(py(i)) +
                 "\" width=\"" + std::to_string(cs) + "\" height=\"" + std::to_string(cs) +
                 "\" fill=\"" + (same_part ? "#d9d9d9" : "#f5f5f5") +
                 "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
        }
    for (size_t c = 0; c < cells.size(); ++c) {
        std::string color = color_for(c);
        for (const Cell& cell : cells[c]) {
            s += "<rect x=\"" + std::to_string(px(cell.col)) + "\" y=\"" +
                 std::to_string(py(cell.row)) + "\" width=\"" + std::to_string(cs) +
                 "\" height=\"" + std::to_string(cs) + "\" fill=\"" + color +
                 "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        }
    }
    // Part boundaries.
    for (int b : {tr.r, tr.r + tr.s}) {
        int x = margin + b * cs;
        s += "<line x1=\"" + std::to_string(x) + "\" y1=\"" + std::to_string(margin) +
             "\" x2=\"" + std::to_string(x) + "\" y2=\"" + std::to_string(margin + grid_px) +
             "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
        int y = margin + b * cs;
        s += "<line x1=\"" + std::to_string(margin) + "\" y1=\"" + std::to_string(y) +
             "\" x2=\"" + std::to_string(margin + grid_px) + "\" y2=\"" + std::to_string(y) +
             "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    }

    int lx = margin + grid_px + 20;
    int ly = margin;
    s += "<text x=\"" + std::to_string(lx) + "\" y=\"" + std::to_string(ly) +
         "\" font-family=\"monospace\" font-size=\"13\">" + dec.triplet.str() + ", " +
         std::to_string(canon.size()) + " cycles</text>\n";
    for (size_t c = 0; c < canon.size(); ++c) {
        int y = ly + 18 + static_cast<int>(c) * 16;
        s += "<rect x=\"" + std::to_string(lx) + "\" y=\"" + std::to_string(y - 10) +
             "\" width=\"12\" height=\"12\" fill=\"" + color_for(c) +
             "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
        s += "<text x=\"" + std::to_string(lx + 18) + "\" y=\"" + std::to_string(y) +
             "\" font-family=\"monospace\" font-size=\"12\">#" + std::to_string(c + 1) + " " +
             canon[c].str() + "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

void render_svg(const Decomposition& dec, const std::filesystem::path& path) {
    std::string body = render_svg_string(dec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("io", "cannot write " + path.string());
    out << body;
    if (!out) throw Error("io", "write failed for " + path.string());
}

}  // namespace penta::render
