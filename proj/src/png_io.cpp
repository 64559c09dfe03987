#include "glint/png_io.hpp"

#include <png.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <stdexcept>

#include <json.hpp>

namespace glint::io {

namespace {
struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;
} // namespace

void write_png(const std::string& path, const Image& img) {
    if (img.empty()) throw std::invalid_argument("write_png: empty image");
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw std::runtime_error("write_png: cannot open " + path);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw std::runtime_error("write_png: init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw std::runtime_error("write_png: init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw std::runtime_error("write_png: failure writing " + path);
    }
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, img.width, img.height, 8, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    const auto bytes = to_u8(img);
    for (int y = 0; y < img.height; ++y)
        png_write_row(png, const_cast<png_bytep>(bytes.data() + static_cast<size_t>(y) * img.width));
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

Image read_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw std::runtime_error("read_png: cannot open " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw std::runtime_error("read_png: init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw std::runtime_error("read_png: init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw std::runtime_error("read_png: failure reading " + path);
    }
    png_init_io(png, fp.get());
    png_read_info(png, info);

    png_set_strip_16(png);
    png_set_strip_alpha(png);
    png_set_palette_to_rgb(png);
    png_set_expand_gray_1_2_4_to_8(png);
    if ((png_get_color_type(png, info) & PNG_COLOR_MASK_COLOR) != 0)
        png_set_rgb_to_gray(png, PNG_ERROR_ACTION_NONE, -1, -1);
    png_read_update_info(png, info);

    const int w = static_cast<int>(png_get_image_width(png, info));
    const int h = static_cast<int>(png_get_image_height(png, info));
    std::vector<uint8_t> bytes(static_cast<size_t>(w) * h);
    for (int y = 0; y < h; ++y)
        png_read_row(png, bytes.data() + static_cast<size_t>(y) * w, nullptr);
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return from_u8(bytes, w, h);
}

void save_stack(const std::string& dir, const sim::FrameStack& stack) {
    stack.validate();
    std::filesystem::create_directories(dir);
    char name[32];
    for (size_t i = 0; i < stack.frames.size(); ++i) {
        std::snprintf(name, sizeof(name), "frame_%04zu.png", i);
        write_png((std::filesystem::path(dir) / name).string(), stack.frames[i]);
    }
    nlohmann::json meta;
    meta["frame_count"] = stack.frames.size();
    meta["frame_rate"] = stack.frame_rate;
    meta["seed"] = stack.seed;
    meta["cap_height_px"] = stack.cap_height_px;
    meta["unresolvable"] = stack.unresolvable;
    meta["exposure_time_s"] = stack.exposure.exposure_time_s;
    meta["gain"] = stack.exposure.gain;
    meta["saturated"] = stack.exposure.saturated;
    auto offs = nlohmann::json::array();
    for (const auto& [dx, dy] : stack.true_offsets) offs.push_back({dx, dy});
    meta["true_offsets"] = offs;
    std::ofstream out(std::filesystem::path(dir) / "stack.json");
    out << meta.dump(2) << "\n";
}

sim::FrameStack load_stack(const std::string& dir) {
    std::ifstream in(std::filesystem::path(dir) / "stack.json");
    if (!in) throw std::runtime_error("load_stack: missing sidecar in " + dir);
    nlohmann::json meta = nlohmann::json::parse(in);

    sim::FrameStack stack;
    stack.frame_rate = meta.value("frame_rate", 30.0);
    stack.seed = meta.value("seed", uint64_t{0});
    stack.cap_height_px = meta.value("cap_height_px", 0.0);
    stack.unresolvable = meta.value("unresolvable", false);
    stack.exposure.exposure_time_s = meta.value("exposure_time_s", 1.0 / 60.0);
    stack.exposure.gain = meta.value("gain", 1.0);
    stack.exposure.saturated = meta.value("saturated", false);
    if (meta.contains("true_offsets"))
        for (const auto& o : meta["true_offsets"])
            stack.true_offsets.emplace_back(o[0].get<double>(), o[1].get<double>());

    const size_t n = meta.at("frame_count").get<size_t>();
    char name[32];
    for (size_t i = 0; i < n; ++i) {
        std::snprintf(name, sizeof(name), "frame_%04zu.png", i);
        stack.frames.push_back(read_png((std::filesystem::path(dir) / name).string()));
    }
    stack.validate();
    return stack;
}

} // namespace glint::io
