#include "glint/glyphs.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace glint::glyphs {

namespace {

constexpr double kStroke = 0.16;  // stroke width in cap-height units
constexpr double kTracking = 0.20;

// Glyph primitives live in a y-up box: y in [0,1] spans the cap height.
struct Prim {
    enum Kind { RectP, SegP, ArcP } kind;
    // RectP: x0,y0,x1,y1
    // SegP:  x0,y0,x1,y1 (butt-capped stroke)
    // ArcP:  cx,cy,rx,ry, a0,a1 (degrees CCW from +x; ring of stroke width)
    double a, b, c, d, e = 0, f = 0;
};

struct Glyph {
    double width;
    std::vector<Prim> prims;
};

Prim R(double x0, double y0, double x1, double y1) { return {Prim::RectP, x0, y0, x1, y1}; }
Prim S(double x0, double y0, double x1, double y1) { return {Prim::SegP, x0, y0, x1, y1}; }
Prim A(double cx, double cy, double rx, double ry, double a0, double a1) {
    return {Prim::ArcP, cx, cy, rx, ry, a0, a1};
}

const std::map<char, Glyph>& font() {
    static const std::map<char, Glyph> table = {
        {' ', {0.50, {}}},
        {'A', {0.76, {S(0.38, 1.00, 0.05, 0.00), S(0.38, 1.00, 0.71, 0.00),
                      S(0.17, 0.30, 0.59, 0.30), R(0.30, 0.86, 0.46, 1.00)}}},
        {'B', {0.68, {R(0.00, 0.00, 0.16, 1.00), R(0.16, 0.84, 0.36, 1.00),
                      R(0.16, 0.46, 0.36, 0.62), R(0.16, 0.00, 0.36, 0.16),
                      A(0.36, 0.73, 0.19, 0.19, -90, 90), A(0.36, 0.31, 0.23, 0.23, -90, 90)}}},
        {'C', {0.70, {A(0.35, 0.50, 0.27, 0.42, 50, 310)}}},
        {'D', {0.66, {R(0.00, 0.00, 0.16, 1.00), R(0.16, 0.84, 0.30, 1.00),
                      R(0.16, 0.00, 0.30, 0.16), A(0.30, 0.50, 0.26, 0.42, -90, 90)}}},
        {'E', {0.60, {R(0.00, 0.00, 0.16, 1.00), R(0.16, 0.84, 0.60, 1.00),
                      R(0.16, 0.46, 0.52, 0.62), R(0.16, 0.00, 0.60, 0.16)}}},
        {'F', {0.60, {R(0.00, 0.00, 0.16, 1.00), R(0.16, 0.84, 0.60, 1.00),
                      R(0.16, 0.46, 0.50, 0.62)}}},
        {'G', {0.72, {A(0.35, 0.50, 0.27, 0.42, 50, 310), R(0.40, 0.36, 0.72, 0.52),
                      R(0.56, 0.10, 0.72, 0.52)}}},
        {'H', {0.72, {R(0.00, 0.00, 0.16, 1.00), R(0.56, 0.00, 0.72, 1.00),
                      R(0.16, 0.42, 0.56, 0.58)}}},
        {'I', {0.16, {R(0.00, 0.00, 0.16, 1.00)}}},
        {'J', {0.52, {R(0.36, 0.30, 0.52, 1.00), A(0.26, 0.30, 0.18, 0.22, 180, 360)}}},
        {'K', {0.70, {R(0.00, 0.00, 0.16, 1.00), S(0.14, 0.52, 0.62, 1.00),
                      S(0.27, 0.62, 0.68, 0.00)}}},
        {'L', {0.56, {R(0.00, 0.00, 0.16, 1.00), R(0.16, 0.00, 0.56, 0.16)}}},
        {'M', {0.88, {R(0.00, 0.00, 0.16, 1.00), R(0.72, 0.00, 0.88, 1.00),
                      S(0.08, 1.00, 0.44, 0.30), S(0.80, 1.00, 0.44, 0.30)}}},
        {'N', {0.74, {R(0.00, 0.00, 0.16, 1.00), R(0.58, 0.00, 0.74, 1.00),
                      S(0.08, 1.00, 0.66, 0.00)}}},
        {'O', {0.74, {A(0.37, 0.50, 0.29, 0.42, 0, 360)}}},
        {'P', {0.64, {R(0.00, 0.00, 0.16, 1.00), R(0.16, 0.84, 0.34, 1.00),
                      R(0.16, 0.42, 0.34, 0.58), A(0.34, 0.71, 0.22, 0.21, -90, 90)}}},
        {'Q', {0.74, {A(0.37, 0.50, 0.29, 0.42, 0, 360), S(0.44, 0.30, 0.70, 0.00)}}},
        {'R', {0.68, {R(0.00, 0.00, 0.16, 1.00), R(0.16, 0.84, 0.34, 1.00),
                      R(0.16, 0.42, 0.34, 0.58), A(0.34, 0.71, 0.22, 0.21, -90, 90),
                      S(0.30, 0.46, 0.66, 0.00)}}},
        {'S', {0.64, {A(0.34, 0.73, 0.24, 0.19, -45, 195), A(0.30, 0.27, 0.24, 0.19, 135, 380),
                      S(0.18, 0.55, 0.46, 0.45)}}},
        {'T', {0.68, {R(0.00, 0.84, 0.68, 1.00), R(0.26, 0.00, 0.42, 0.84)}}},
        {'U', {0.72, {R(0.00, 0.30, 0.16, 1.00), R(0.56, 0.30, 0.72, 1.00),
                      A(0.36, 0.30, 0.28, 0.22, 180, 360)}}},
        {'V', {0.74, {S(0.06, 1.00, 0.37, 0.00), S(0.68, 1.00, 0.37, 0.00)}}},
        {'W', {1.02, {S(0.05, 1.00, 0.27, 0.00), S(0.49, 1.00, 0.27, 0.00),
                      S(0.53, 1.00, 0.75, 0.00), S(0.97, 1.00, 0.75, 0.00)}}},
        {'X', {0.72, {S(0.04, 1.00, 0.68, 0.00), S(0.68, 1.00, 0.04, 0.00)}}},
        {'Y', {0.72, {S(0.04, 1.00, 0.36, 0.52), S(0.68, 1.00, 0.36, 0.52),
                      R(0.28, 0.00, 0.44, 0.56)}}},
        {'Z', {0.64, {R(0.00, 0.84, 0.64, 1.00), R(0.00, 0.00, 0.64, 0.16),
                      S(0.56, 0.88, 0.08, 0.12)}}},
        {'0', {0.70, {A(0.35, 0.50, 0.27, 0.42, 0, 360)}}},
        {'1', {0.44, {R(0.24, 0.00, 0.40, 1.00), S(0.06, 0.76, 0.28, 0.97)}}},
        {'2', {0.64, {A(0.32, 0.74, 0.24, 0.18, 160, 355), S(0.54, 0.66, 0.06, 0.16),
                      R(0.00, 0.00, 0.64, 0.16)}}},
        {'3', {0.64, {A(0.30, 0.73, 0.235, 0.19, -90, 120), A(0.30, 0.27, 0.235, 0.19, 240, 450)}}},
        {'4', {0.64, {R(0.40, 0.00, 0.56, 1.00), S(0.46, 0.96, 0.02, 0.32),
                      R(0.00, 0.26, 0.64, 0.40)}}},
        {'5', {0.62, {R(0.00, 0.84, 0.60, 1.00), R(0.00, 0.55, 0.16, 1.00),
                      A(0.26, 0.31, 0.26, 0.23, -120, 90)}}},
        {'6', {0.66, {A(0.33, 0.30, 0.25, 0.22, 0, 360), A(0.33, 0.50, 0.25, 0.42, 90, 200)}}},
        {'7', {0.64, {R(0.00, 0.84, 0.64, 1.00), S(0.56, 0.86, 0.18, 0.00)}}},
        {'8', {0.64, {A(0.32, 0.73, 0.21, 0.19, 0, 360), A(0.32, 0.27, 0.24, 0.19, 0, 360)}}},
        {'9', {0.66, {A(0.33, 0.70, 0.25, 0.22, 0, 360), A(0.33, 0.50, 0.25, 0.42, 270, 380)}}},
    };
    return table;
}

inline char fold(char c) { return static_cast<char>(std::toupper(static_cast<unsigned char>(c))); }

inline bool in_rect(const Prim& p, double x, double y) {
    return x >= p.a && x <= p.c && y >= p.b && y <= p.d;
}

inline bool in_seg(const Prim& p, double x, double y) {
    const double vx = p.c - p.a, vy = p.d - p.b;
    const double len2 = vx * vx + vy * vy;
    if (len2 <= 0) return false;
    const double t = ((x - p.a) * vx + (y - p.b) * vy) / len2;
    if (t < 0.0 || t > 1.0) return false;
    const double px = p.a + t * vx, py = p.b + t * vy;
    const double dx = x - px, dy = y - py;
    return dx * dx + dy * dy <= (kStroke / 2) * (kStroke / 2);
}

inline bool in_arc(const Prim& p, double x, double y) {
    const double rx = std::abs(p.c), ry = std::abs(p.d);
    if (rx <= 0 || ry <= 0) return false;
    const double nx = (x - p.a) / rx, ny = (y - p.b) / ry;
    const double rho = std::sqrt(nx * nx + ny * ny);
    // approximately constant physical stroke width
    if (std::abs(rho - 1.0) * std::min(rx, ry) > kStroke / 2) return false;
    double ang = std::atan2(ny, nx) * 180.0 / 3.14159265358979323846;
    double a0 = p.e, a1 = p.f;
    if (a1 - a0 >= 360.0) return true;
    double rel = std::fmod(ang - a0, 360.0);
    if (rel < 0) rel += 360.0;
    return rel <= a1 - a0;
}

bool inked(const Glyph& g, double x, double y) {
    for (const auto& p : g.prims) {
        switch (p.kind) {
            case Prim::RectP: if (in_rect(p, x, y)) return true; break;
            case Prim::SegP:  if (in_seg(p, x, y)) return true; break;
            case Prim::ArcP:  if (in_arc(p, x, y)) return true; break;
        }
    }
    return false;
}

} // namespace

bool supported(char c) { return font().count(fold(c)) > 0; }

double advance(char c) {
    const auto it = font().find(fold(c));
    if (it == font().end()) throw std::invalid_argument(std::string("unsupported glyph: '") + c + "'");
    return it->second.width + kTracking;
}

double text_advance(const std::string& content) {
    double adv = 0.0;
    for (char c : content) adv += advance(c);
    return adv > 0 ? adv - kTracking : 0.0;  // no trailing gap
}

Image render_text(const std::string& content, double cap_height_px, const RenderOptions& opt) {
    if (cap_height_px <= 0) throw std::invalid_argument("render_text: cap height must be positive");
    for (char c : content)
        if (!supported(c))
            throw std::invalid_argument(std::string("unsupported glyph: '") + c + "'");

    const double cap = cap_height_px;
    const double block_w = text_advance(content) * cap;
    int w = opt.canvas_w > 0 ? opt.canvas_w
                             : static_cast<int>(std::ceil(block_w + 2 * opt.margin_px));
    int h = opt.canvas_h > 0 ? opt.canvas_h
                             : static_cast<int>(std::ceil(cap + 2 * opt.margin_px));
    w = std::max(w, 1);
    h = std::max(h, 1);
    Image img(w, h, opt.background);

    // pen positions per glyph, in px
    struct Placed { const Glyph* g; double x; };
    std::vector<Placed> placed;
    double pen = opt.margin_px;
    for (char c : content) {
        const Glyph& g = font().at(fold(c));
        placed.push_back({&g, pen});
        pen += (g.width + kTracking) * cap;
    }

    const double base_y = opt.margin_px + cap;  // image-space baseline (y grows downward)
    const int ss = std::max(1, opt.supersample);
    const double inv_ss = 1.0 / ss;

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            int hits = 0;
            for (int sy = 0; sy < ss; ++sy) {
                const double py = y + (sy + 0.5) * inv_ss - opt.offset_y;
                const double gy = (base_y - py) / cap;  // y-up glyph space
                if (gy < -0.3 || gy > 1.3) continue;
                for (int sx = 0; sx < ss; ++sx) {
                    const double px = x + (sx + 0.5) * inv_ss - opt.offset_x;
                    for (const auto& pl : placed) {
                        const double gx = (px - pl.x) / cap;
                        if (gx < -0.2 || gx > pl.g->width + 0.2) continue;
                        if (inked(*pl.g, gx, gy)) {
                            ++hits;
                            break;
                        }
                    }
                }
            }
            if (hits > 0) {
                const double cov = static_cast<double>(hits) / (ss * ss);
                img.at(x, y) = opt.background + cov * (opt.ink - opt.background);
            }
        }
    }
    return img;
}

bool ink_bbox(const Image& img, double background, int& x0, int& y0, int& w, int& h) {
    int min_x = img.width, min_y = img.height, max_x = -1, max_y = -1;
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x)
            if (std::abs(img.at(x, y) - background) > 0.5 / 255.0) {
                min_x = std::min(min_x, x);
                min_y = std::min(min_y, y);
                max_x = std::max(max_x, x);
                max_y = std::max(max_y, y);
            }
    if (max_x < 0) return false;
    x0 = min_x;
    y0 = min_y;
    w = max_x - min_x + 1;
    h = max_y - min_y + 1;
    return true;
}

} // namespace glint::glyphs
