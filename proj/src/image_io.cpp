#include "gapfill/image_io.hpp"

#include <png.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <stdexcept>
#include <vector>

namespace gapfill {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::runtime_error(path + ": " + what);
}

// ---- PGM (P5) ----

// Skips whitespace and '#' comment lines, then reads a non-negative integer.
int pgm_read_int(std::istream& in, const std::string& path) {
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (!std::isspace(c)) {
            break;
        }
        c = in.get();
    }
    if (c == EOF || !std::isdigit(c)) fail(path, "malformed PGM header");
    long v = 0;
    while (c != EOF && std::isdigit(c)) {
        v = v * 10 + (c - '0');
        if (v > 1 << 30) fail(path, "malformed PGM header");
        c = in.get();
    }
    if (c != EOF) in.unget();
    return static_cast<int>(v);
}

GrayImage read_pgm(std::istream& in, const std::string& path) {
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (magic[0] != 'P' || magic[1] != '5') fail(path, "not a P5 PGM file");
    int w = pgm_read_int(in, path);
    int h = pgm_read_int(in, path);
    int maxval = pgm_read_int(in, path);
    if (maxval != 255) fail(path, "unsupported PGM maxval " + std::to_string(maxval) +
                                      " (only 8-bit, maxval 255)");
    in.get();  // single whitespace byte before raster data
    if (w <= 0 || h <= 0) fail(path, "invalid PGM dimensions");
    std::vector<uint8_t> bytes(static_cast<size_t>(w) * h);
    in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (in.gcount() != static_cast<std::streamsize>(bytes.size()))
        fail(path, "truncated PGM raster");
    GrayImage img(w, h);
    for (size_t i = 0; i < bytes.size(); ++i) img.data[i] = bytes[i] / 255.0;
    return img;
}

void write_pgm(const std::string& path, int w, int h, const std::vector<uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(path, "cannot open for writing");
    out << "P5\n" << w << " " << h << "\n255\n";
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) fail(path, "write error");
}

// ---- PNG via libpng ----

struct PngReadCtx {
    png_structp png = nullptr;
    png_infop info = nullptr;
    FILE* fp = nullptr;
    ~PngReadCtx() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
        if (fp) std::fclose(fp);
    }
};

GrayImage read_png(const std::string& path) {
    PngReadCtx ctx;
    ctx.fp = std::fopen(path.c_str(), "rb");
    if (!ctx.fp) fail(path, "cannot open");
    ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!ctx.png) fail(path, "libpng init failed");
    ctx.info = png_create_info_struct(ctx.png);
    if (!ctx.info) fail(path, "libpng init failed");
    if (setjmp(png_jmpbuf(ctx.png))) fail(path, "PNG decode error");

    png_init_io(ctx.png, ctx.fp);
    png_read_info(ctx.png, ctx.info);

    int bit_depth = png_get_bit_depth(ctx.png, ctx.info);
    if (bit_depth > 8)
        fail(path, "unsupported PNG bit depth " + std::to_string(bit_depth));
    int color_type = png_get_color_type(ctx.png, ctx.info);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(ctx.png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
        png_set_expand_gray_1_2_4_to_8(ctx.png);
    if (png_get_valid(ctx.png, ctx.info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(ctx.png);
    png_set_interlace_handling(ctx.png);
    png_read_update_info(ctx.png, ctx.info);

    int w = static_cast<int>(png_get_image_width(ctx.png, ctx.info));
    int h = static_cast<int>(png_get_image_height(ctx.png, ctx.info));
    int channels = png_get_channels(ctx.png, ctx.info);
    size_t rowbytes = png_get_rowbytes(ctx.png, ctx.info);

    std::vector<uint8_t> raster(rowbytes * h);
    std::vector<png_bytep> rows(h);
    for (int y = 0; y < h; ++y) rows[y] = raster.data() + rowbytes * y;
    png_read_image(ctx.png, rows.data());
    png_read_end(ctx.png, nullptr);

    GrayImage img(w, h);
    for (int y = 0; y < h; ++y) {
        const uint8_t* row = rows[y];
        for (int x = 0; x < w; ++x) {
            const uint8_t* p = row + static_cast<size_t>(x) * channels;
            double v;
            switch (channels) {
                case 1: v = p[0]; break;
                case 2: v = p[0]; break;  // gray + alpha: alpha ignored
                default: v = (p[0] + p[1] + p[2]) / 3.0; break;  // rgb(a) average
            }
            img.px(x, y) = v / 255.0;
        }
    }
    return img;
}

struct PngWriteCtx {
    png_structp png = nullptr;
    png_infop info = nullptr;
    FILE* fp = nullptr;
    ~PngWriteCtx() {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
        if (fp) std::fclose(fp);
    }
};

void write_png(const std::string& path, int w, int h, const std::vector<uint8_t>& bytes) {
    PngWriteCtx ctx;
    ctx.fp = std::fopen(path.c_str(), "wb");
    if (!ctx.fp) fail(path, "cannot open for writing");
    ctx.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!ctx.png) fail(path, "libpng init failed");
    ctx.info = png_create_info_struct(ctx.png);
    if (!ctx.info) fail(path, "libpng init failed");
    if (setjmp(png_jmpbuf(ctx.png))) fail(path, "PNG encode error");

    png_init_io(ctx.png, ctx.fp);
    png_set_IHDR(ctx.png, ctx.info, w, h, 8, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(ctx.png, ctx.info);
    for (int y = 0; y < h; ++y)
        png_write_row(ctx.png, const_cast<png_bytep>(bytes.data() + static_cast<size_t>(y) * w));
    png_write_end(ctx.png, nullptr);
}

bool has_png_suffix(const std::string& path) {
    if (path.size() < 4) return false;
    std::string ext = path.substr(path.size() - 4);
    for (char& c : ext) c = static_cast<char>(std::tolower(c));
    return ext == ".png";
}

void write_bytes(const std::string& path, int w, int h, const std::vector<uint8_t>& bytes) {
    if (has_png_suffix(path))
        write_png(path, w, h, bytes);
    else
        write_pgm(path, w, h, bytes);
}

}  // namespace

GrayImage read_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open");
    char sig[2] = {0, 0};
    in.read(sig, 2);
    in.seekg(0);
    if (sig[0] == 'P' && sig[1] == '5') return read_pgm(in, path);
    if (static_cast<uint8_t>(sig[0]) == 0x89 && sig[1] == 'P') {
        in.close();
        return read_png(path);
    }
    fail(path, "unrecognized image format (expected P5 PGM or PNG)");
}

BinaryImage read_binary_image(const std::string& path) {
    GrayImage g = read_image(path);
    BinaryImage b(g.width, g.height);
    for (size_t i = 0; i < g.data.size(); ++i) b.data[i] = g.data[i] > 0.5 ? 1 : 0;
    return b;
}

void write_image(const std::string& path, const GrayImage& img) {
    std::vector<uint8_t> bytes(img.data.size());
    for (size_t i = 0; i < bytes.size(); ++i)
        bytes[i] = static_cast<uint8_t>(quantize_byte(img.data[i]));
    write_bytes(path, img.width, img.height, bytes);
}

void write_image(const std::string& path, const BinaryImage& img) {
    std::vector<uint8_t> bytes(img.data.size());
    for (size_t i = 0; i < bytes.size(); ++i) bytes[i] = img.data[i] ? 255 : 0;
    write_bytes(path, img.width, img.height, bytes);
}

}  // namespace gapfill
