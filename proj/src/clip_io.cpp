#include "vidaug/clip_io.hpp"

#include <fnmatch.h>
#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include "vidaug/error.hpp"

namespace vidaug {

namespace {

constexpr char kMagic[4] = {'C', 'L', 'I', 'P'};
constexpr std::uint8_t kVersion = 1;
constexpr std::uint8_t kDtypeU8 = 0;
constexpr std::size_t kHeaderSize = 22;

void put_u32le(std::uint8_t* p, std::uint32_t v) {
  p[0] = static_cast<std::uint8_t>(v);
  p[1] = static_cast<std::uint8_t>(v >> 8);
  p[2] = static_cast<std::uint8_t>(v >> 16);
  p[3] = static_cast<std::uint8_t>(v >> 24);
}

std::uint32_t get_u32le(const std::uint8_t* p) {
  return std::uint32_t(p[0]) | std::uint32_t(p[1]) << 8 | std::uint32_t(p[2]) << 16 |
         std::uint32_t(p[3]) << 24;
}

struct DecodedImage {
  int h = 0, w = 0, c = 0;
  std::vector<std::uint8_t> pixels;
};

DecodedImage decode_png(const std::filesystem::path& path) {
  std::FILE* fp = std::fopen(path.c_str(), "rb");
  if (!fp) {
    throw IoError("cannot open " + path.string());
  }
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                           nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    if (png) png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    throw IoError("libpng initialization failed");
  }
  DecodedImage img;
  std::vector<png_bytep> rows;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    throw FormatError("failed to decode PNG " + path.string());
  }
  png_init_io(png, fp);
  png_read_info(png, info);

  // Normalize everything to 8-bit gray or RGB.
  png_set_palette_to_rgb(png);
  png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) {
    png_set_tRNS_to_alpha(png);
  }
  png_set_strip_16(png);
  png_set_strip_alpha(png);
  png_read_update_info(png, info);

  img.w = static_cast<int>(png_get_image_width(png, info));
  img.h = static_cast<int>(png_get_image_height(png, info));
  img.c = static_cast<int>(png_get_channels(png, info));
  if (img.c != 1 && img.c != 3) {
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    throw FormatError("unsupported channel count in " + path.string());
  }
  img.pixels.resize(static_cast<std::size_t>(img.h) * img.w * img.c);
  rows.resize(static_cast<std::size_t>(img.h));
  for (int y = 0; y < img.h; ++y) {
    rows[static_cast<std::size_t>(y)] =
        img.pixels.data() + static_cast<std::size_t>(y) * img.w * img.c;
  }
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  std::fclose(fp);
  return img;
}

DecodedImage decode_pnm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::string magic;
  in >> magic;
  if (magic != "P5" && magic != "P6") {
    throw FormatError("unsupported PNM magic '" + magic + "' in " + path.string());
  }
  auto next_value = [&]() -> long {
    // Skips whitespace and '#' comments between header fields.
    for (;;) {
      const int ch = in.peek();
      if (ch == '#') {
        std::string line;
        std::getline(in, line);
      } else if (std::isspace(ch)) {
        in.get();
      } else {
        break;
      }
    }
    long v = -1;
    in >> v;
    return v;
  };
  const long w = next_value();
  const long h = next_value();
  const long maxval = next_value();
  if (!in || w < 1 || h < 1 || maxval != 255) {
    throw FormatError("bad PNM header in " + path.string());
  }
  in.get();  // single whitespace after maxval
  DecodedImage img;
  img.w = static_cast<int>(w);
  img.h = static_cast<int>(h);
  img.c = magic == "P6" ? 3 : 1;
  img.pixels.resize(static_cast<std::size_t>(img.h) * img.w * img.c);
  in.read(reinterpret_cast<char*>(img.pixels.data()),
          static_cast<std::streamsize>(img.pixels.size()));
  if (in.gcount() != static_cast<std::streamsize>(img.pixels.size())) {
    throw FormatError("truncated PNM payload in " + path.string());
  }
  return img;
}

DecodedImage decode_image(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (ext == ".png") {
    return decode_png(path);
  }
  if (ext == ".ppm" || ext == ".pgm" || ext == ".pnm") {
    return decode_pnm(path);
  }
  throw FormatError("unsupported image type " + path.string());
}

bool is_digit(char ch) { return ch >= '0' && ch <= '9'; }

}  // namespace

void write_clip(const Clip& clip, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  std::uint8_t header[kHeaderSize];
  std::memcpy(header, kMagic, 4);
  header[4] = kVersion;
  header[5] = kDtypeU8;
  put_u32le(header + 6, static_cast<std::uint32_t>(clip.t));
  put_u32le(header + 10, static_cast<std::uint32_t>(clip.h));
  put_u32le(header + 14, static_cast<std::uint32_t>(clip.w));
  put_u32le(header + 18, static_cast<std::uint32_t>(clip.c));
  out.write(reinterpret_cast<const char*>(header), kHeaderSize);
  out.write(reinterpret_cast<const char*>(clip.data.data()),
            static_cast<std::streamsize>(clip.data.size()));
  if (!out) {
    throw IoError("short write to " + path.string());
  }
}

Clip read_clip(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  std::uint8_t header[kHeaderSize];
  in.read(reinterpret_cast<char*>(header), kHeaderSize);
  if (in.gcount() != static_cast<std::streamsize>(kHeaderSize)) {
    throw FormatError("truncated header in " + path.string());
  }
  if (std::memcmp(header, kMagic, 4) != 0) {
    throw FormatError("bad magic in " + path.string() + ": expected \"CLIP\"");
  }
  if (header[4] != kVersion) {
    throw FormatError("unknown version " + std::to_string(header[4]) + " in " +
                      path.string());
  }
  if (header[5] != kDtypeU8) {
    throw FormatError("unknown dtype " + std::to_string(header[5]) + " in " +
                      path.string());
  }
  const std::uint32_t t = get_u32le(header + 6);
  const std::uint32_t h = get_u32le(header + 10);
  const std::uint32_t w = get_u32le(header + 14);
  const std::uint32_t c = get_u32le(header + 18);
  if (t == 0 || h == 0 || w == 0 || c == 0) {
    throw FormatError("zero dimension in header of " + path.string());
  }
  if (c != 1 && c != 3) {
    throw FormatError("invalid channel count " + std::to_string(c) + " in " +
                      path.string());
  }
  // Reject dim products beyond 32 bits before any payload allocation.
  const std::uint64_t total = std::uint64_t(t) * h * w * c;
  if (total > std::numeric_limits<std::uint32_t>::max()) {
    throw FormatError("size overflow in header of " + path.string() + ": t*h*w*c = " +
                      std::to_string(total) + " exceeds 32 bits");
  }
  std::error_code ec;
  const auto file_size = std::filesystem::file_size(path, ec);
  if (ec) {
    throw IoError("cannot stat " + path.string());
  }
  if (file_size != kHeaderSize + total) {
    throw FormatError("truncated payload in " + path.string() + ": header promises " +
                      std::to_string(total) + " bytes, file carries " +
                      std::to_string(file_size - std::min<std::uint64_t>(file_size,
                                                                         kHeaderSize)));
  }
  std::vector<std::uint8_t> payload(static_cast<std::size_t>(total));
  in.read(reinterpret_cast<char*>(payload.data()), static_cast<std::streamsize>(total));
  if (in.gcount() != static_cast<std::streamsize>(total)) {
    throw FormatError("truncated payload in " + path.string());
  }
  return Clip(static_cast<int>(t), static_cast<int>(h), static_cast<int>(w),
              static_cast<int>(c), std::move(payload));
}

void write_label(const LabelDist& label, const std::filesystem::path& path) {
  nlohmann::json weights = nlohmann::json::object();
  for (const auto& [cls, w] : label.weights()) {
    weights[std::to_string(cls)] = w;
  }
  nlohmann::json j;
  j["num_classes"] = label.num_classes();
  j["weights"] = std::move(weights);
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << j.dump(2) << '\n';
}

LabelDist read_label(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("bad label sidecar " + path.string() + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("num_classes") || !j.contains("weights") ||
      !j["weights"].is_object()) {
    throw FormatError("bad label sidecar " + path.string() +
                      ": expected num_classes and weights");
  }
  const int num_classes = j["num_classes"].get<int>();
  std::map<int, double> weights;
  double sum = 0.0;
  for (const auto& [key, value] : j["weights"].items()) {
    std::size_t pos = 0;
    int cls = -1;
    try {
      cls = std::stoi(key, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != key.size() || cls < 0 || cls >= num_classes) {
      throw FormatError("bad class key \"" + key + "\" in " + path.string());
    }
    const double w = value.get<double>();
    weights[cls] = w;
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-6) {
    throw FormatError("label weights in " + path.string() + " sum to " +
                      std::to_string(sum) + ", expected 1");
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    // Within read tolerance but outside the in-memory invariant: renormalize.
    for (auto& [cls, w] : weights) {
      w /= sum;
    }
  }
  try {
    return LabelDist(num_classes, std::move(weights));
  } catch (const ValueError& e) {
    throw FormatError("bad label sidecar " + path.string() + ": " + e.what());
  }
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ia = i, jb = j;
      while (ia < a.size() && is_digit(a[ia])) ++ia;
      while (jb < b.size() && is_digit(b[jb])) ++jb;
      std::string_view da = a.substr(i, ia - i);
      std::string_view db = b.substr(j, jb - j);
      const std::string_view sa = da.substr(std::min(da.find_first_not_of('0'), da.size() - 1));
      const std::string_view sb = db.substr(std::min(db.find_first_not_of('0'), db.size() - 1));
      if (sa.size() != sb.size()) {
        return sa.size() < sb.size();
      }
      if (sa != sb) {
        return sa < sb;
      }
      i = ia;
      j = jb;
      continue;
    }
    if (a[i] != b[j]) {
      return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
    }
    ++i;
    ++j;
  }
  return a.size() - i < b.size() - j;
}

Clip import_frames(const std::filesystem::path& dir, std::string_view pattern) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw IoError(dir.string() + " is not a directory");
  }
  std::vector<std::string> names;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) {
      continue;
    }
    const std::string name = entry.path().filename().string();
    if (fnmatch(std::string(pattern).c_str(), name.c_str(), 0) == 0) {
      names.push_back(name);
    }
  }
  if (names.empty()) {
    throw FormatError("no frames matching \"" + std::string(pattern) + "\" in " +
                      dir.string());
  }
  std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
    return natural_less(a, b);
  });
  std::vector<std::uint8_t> payload;
  int h = 0, w = 0, c = 0;
  for (std::size_t i = 0; i < names.size(); ++i) {
    DecodedImage img = decode_image(dir / names[i]);
    if (i == 0) {
      h = img.h;
      w = img.w;
      c = img.c;
      payload.reserve(names.size() * img.pixels.size());
    } else if (img.h != h || img.w != w || img.c != c) {
      throw FormatError("inconsistent frames: " + names[i] + " is " +
                        std::to_string(img.h) + "x" + std::to_string(img.w) + "x" +
                        std::to_string(img.c) + ", expected " + std::to_string(h) + "x" +
                        std::to_string(w) + "x" + std::to_string(c));
    }
    payload.insert(payload.end(), img.pixels.begin(), img.pixels.end());
  }
  return Clip(static_cast<int>(names.size()), h, w, c, std::move(payload));
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open manifest " + path.string());
  }
  std::vector<ManifestEntry> entries;
  std::string line;
  std::size_t lineno = 0;
  const auto base = path.parent_path();
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) {
      continue;
    }
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw FormatError("manifest line " + std::to_string(lineno) +
                        " has no tab separator");
    }
    ManifestEntry entry;
    std::filesystem::path clip_path = line.substr(0, tab);
    entry.clip_path = clip_path.is_absolute() ? clip_path : base / clip_path;
    try {
      std::size_t pos = 0;
      entry.class_index = std::stoi(line.substr(tab + 1), &pos);
      if (pos != line.size() - tab - 1 || entry.class_index < 0) {
        throw std::invalid_argument("");
      }
    } catch (const std::exception&) {
      throw FormatError("bad class index on manifest line " + std::to_string(lineno));
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

nlohmann::json config_to_json(const PipelineConfig& cfg) {
  nlohmann::json j;
  j["seed"] = cfg.seed;
  j["num_classes"] = cfg.num_classes;
  j["crop_size"] = cfg.crop_size;
  j["jitter_range"] = {cfg.jitter_lo, cfg.jitter_hi};
  j["hflip_prob"] = cfg.hflip_prob;
  j["mix_prob"] = cfg.mix_prob;
  if (cfg.randaug) {
    j["randaug"] = {{"n", cfg.randaug->n},
                    {"mode", std::string(range_mode_name(cfg.randaug->mode))},
                    {"m", cfg.randaug->m}};
  }
  if (cfg.mix) {
    j["mix"] = {{"method", std::string(mix_method_name(cfg.mix->method))},
                {"alpha", cfg.mix->alpha}};
  }
  return j;
}

PipelineConfig config_from_json(const nlohmann::json& j) {
  PipelineConfig cfg;
  try {
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("num_classes")) cfg.num_classes = j["num_classes"].get<int>();
    if (j.contains("crop_size")) cfg.crop_size = j["crop_size"].get<int>();
    if (j.contains("jitter_range")) {
      cfg.jitter_lo = j["jitter_range"].at(0).get<int>();
      cfg.jitter_hi = j["jitter_range"].at(1).get<int>();
    }
    if (j.contains("hflip_prob")) cfg.hflip_prob = j["hflip_prob"].get<double>();
    if (j.contains("mix_prob")) cfg.mix_prob = j["mix_prob"].get<double>();
    if (j.contains("randaug") && !j["randaug"].is_null()) {
      RandAugConfig ra;
      ra.n = j["randaug"].at("n").get<int>();
      const auto mode_name = j["randaug"].at("mode").get<std::string>();
      const auto mode = range_mode_from_name(mode_name);
      if (!mode) {
        throw FormatError("unknown randaug mode \"" + mode_name + "\"");
      }
      ra.mode = *mode;
      ra.m = j["randaug"].at("m").get<double>();
      cfg.randaug = ra;
    }
    if (j.contains("mix") && !j["mix"].is_null()) {
      MixSpec mix;
      const auto method_name = j["mix"].at("method").get<std::string>();
      const auto method = mix_method_from_name(method_name);
      if (!method) {
        throw FormatError("unknown mix method \"" + method_name + "\"");
      }
      mix.method = *method;
      mix.alpha = j["mix"].at("alpha").get<double>();
      cfg.mix = mix;
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad pipeline config: ") + e.what());
  }
  try {
    cfg.validate();
  } catch (const ValueError& e) {
    throw FormatError(std::string("bad pipeline config: ") + e.what());
  }
  return cfg;
}

PipelineConfig read_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open config " + path.string());
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("bad config JSON " + path.string() + ": " + e.what());
  }
  return config_from_json(j);
}

}  // namespace vidaug
