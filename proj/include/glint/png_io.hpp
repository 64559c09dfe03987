#pragma once

#include <string>

#include "glint/image.hpp"
#include "glint/simulate.hpp"

namespace glint::io {

/// 8-bit grayscale PNG. Reading converts RGB(A)/16-bit sources to gray.
void write_png(const std::string& path, const Image& img);
Image read_png(const std::string& path);

/// Frame stacks are numbered PNGs plus a JSON sidecar with fps, seed,
/// ground-truth offsets, and flags.
void save_stack(const std::string& dir, const sim::FrameStack& stack);
sim::FrameStack load_stack(const std::string& dir);

} // namespace glint::io
