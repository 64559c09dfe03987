#pragma once

#include <string>

#include "glint/image.hpp"

namespace glint::glyphs {

/// True if the character has a glyph (A-Z, 0-9, space; lowercase is folded).
bool supported(char c);

/// Advance width of one glyph in cap-height units (includes tracking).
double advance(char c);

/// Total advance of a string in cap-height units.
double text_advance(const std::string& content);

struct RenderOptions {
    double ink = 0.0;        // glyph gray level
    double background = 1.0; // canvas gray level
    double margin_px = 4.0;  // border around the text block
    double offset_x = 0.0;   // sub-pixel ink shift, px
    double offset_y = 0.0;
    int canvas_w = 0;        // 0 = fit to content
    int canvas_h = 0;
    int supersample = 4;     // AA grid per axis
};

/// Rasterize capital-letter text at the given cap height (may be fractional).
/// Deterministic; throws std::invalid_argument naming any unsupported glyph.
Image render_text(const std::string& content, double cap_height_px, const RenderOptions& opt = {});

/// Ink bounding box (pixels with coverage above threshold). Returns false if
/// there is no ink.
bool ink_bbox(const Image& img, double background, int& x0, int& y0, int& w, int& h);

} // namespace glint::glyphs
