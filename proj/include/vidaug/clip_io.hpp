#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vidaug/clip.hpp"
#include "vidaug/label.hpp"
#include "vidaug/pipeline.hpp"

namespace vidaug {

// Clip container layout (22-byte header, little-endian):
//
//   offset  size  field
//   0       4     magic "CLIP"
//   4       1     version, must be 1
//   5       1     dtype, must be 0 (unsigned 8-bit)
//   6       4     t    (u32)
//   10      4     h    (u32)
//   14      4     w    (u32)
//   18      4     c    (u32)
//   22      t*h*w*c payload, frame-major row-major channel-interleaved
//
// Readers validate the header before touching the payload: bad magic,
// unknown version/dtype, zero dims, a t*h*w*c product overflowing 32 bits,
// or a payload shorter than the header promises all raise FormatError
// naming the offending field, without allocating the payload.
void write_clip(const Clip& clip, const std::filesystem::path& path);
Clip read_clip(const std::filesystem::path& path);

// Label sidecar JSON: {"num_classes": N, "weights": {"<class>": w, ...}}.
// Weights are written with full round-trip precision; on read they must sum
// to 1 within 1e-6 and keys must parse as integers below num_classes.
void write_label(const LabelDist& label, const std::filesystem::path& path);
LabelDist read_label(const std::filesystem::path& path);

// Loads all frames matching a glob pattern (PNG or PPM/PGM) from a
// directory, ordered by natural-numeric filename sort, into one clip.
// Grayscale images give c = 1, RGB c = 3; mixing dims or color modes
// raises FormatError naming the first offender.
Clip import_frames(const std::filesystem::path& dir, std::string_view pattern);

// Filename order used by import_frames: digit runs compare numerically,
// other characters byte-wise ("frame_2" < "frame_10").
bool natural_less(std::string_view a, std::string_view b);

struct ManifestEntry {
  std::filesystem::path clip_path;
  int class_index = 0;
};

// One "clip-path<TAB>class-index" line per entry.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

nlohmann::json config_to_json(const PipelineConfig& cfg);
PipelineConfig config_from_json(const nlohmann::json& j);
PipelineConfig read_config(const std::filesystem::path& path);

}  // namespace vidaug
