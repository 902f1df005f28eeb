#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vidaug/clip_io.hpp"
#include "vidaug/erase.hpp"
#include "vidaug/error.hpp"
#include "vidaug/mix.hpp"
#include "vidaug/pipeline.hpp"
#include "vidaug/randaug.hpp"

namespace {

using namespace vidaug;

constexpr const char* kApplyOps =
    "randaugment-t, randaugment, cutout, framecutout, cubecutout";
constexpr const char* kMixMethods =
    "mixup, fademixup, cutmix, framecutmix, cubecutmix, cutmixup, framecutmixup "
    "(alias framemixup), cubecutmixup (alias cubemixup)";

struct ApplyArgs {
  std::string op;
  std::string in_path;
  std::string out_path;
  std::uint64_t seed = 0;
  std::uint64_t clip_id = 0;
  int n = 1;
  double m = 5.0;
  std::string mode = "spatial";
  double m1 = -1.0;
  double m2 = -1.0;
  int box_h = 80;
  int box_w = 80;
  int frames = 16;
  bool contiguous = false;
};

int run_apply(const ApplyArgs& args) {
  const Clip in = read_clip(args.in_path);
  RngStream rng = rng_derive(args.seed, args.clip_id, 0);
  Clip out;
  if (args.op == "randaugment-t") {
    double m1 = args.m1, m2 = args.m2;
    if (m1 < 0.0 || m2 < 0.0) {
      const auto mode = range_mode_from_name(args.mode);
      if (!mode) {
        throw ValueError("unknown mode \"" + args.mode +
                         "\": valid modes are spatial, temporal, temporal+, mix");
      }
      std::tie(m1, m2) = sample_magnitude_range(*mode, args.m, rng);
    }
    out = randaugment_t(in, args.n, m1, m2, rng);
  } else if (args.op == "randaugment") {
    out = randaugment(in, args.n, args.m, rng);
  } else if (args.op == "cutout") {
    out = cutout(in, args.box_h, args.box_w, rng).clip;
  } else if (args.op == "framecutout") {
    out = frame_cutout(in, args.frames, rng, args.contiguous).clip;
  } else if (args.op == "cubecutout") {
    out = cube_cutout(in, args.box_h, args.box_w, args.frames, rng).clip;
  } else {
    throw ValueError("unknown op \"" + args.op + "\": valid ops are " + kApplyOps);
  }
  write_clip(out, args.out_path);
  return 0;
}

struct MixArgs {
  std::string method;
  double alpha = 2.0;
  std::uint64_t seed = 0;
  std::uint64_t clip_id = 0;
  std::string a_path;
  std::string b_path;
  int label_a = 0;
  int label_b = 0;
  int num_classes = 101;
  std::string out_path;
  std::string out_label_path;
};

int run_mix(const MixArgs& args) {
  const auto method = mix_method_from_name(args.method);
  if (!method) {
    throw ValueError("unknown method \"" + args.method + "\": valid methods are " +
                     kMixMethods);
  }
  const Clip a = read_clip(args.a_path);
  const Clip b = read_clip(args.b_path);
  const LabelDist la = LabelDist::one_hot(args.num_classes, args.label_a);
  const LabelDist lb = LabelDist::one_hot(args.num_classes, args.label_b);
  RngStream rng = rng_derive(args.seed, args.clip_id, 0);
  const MixResult res = apply_mix(*method, a, b, la, lb, args.alpha, rng);
  write_clip(res.clip, args.out_path);
  if (!args.out_label_path.empty()) {
    write_label(res.label, args.out_label_path);
  }
  return 0;
}

struct PipelineArgs {
  std::string config_path;
  std::string list_path;
  std::string out_dir;
  int workers = 1;
};

int run_pipeline(const PipelineArgs& args) {
  const PipelineConfig cfg = read_config(args.config_path);
  const std::vector<ManifestEntry> entries = read_manifest(args.list_path);
  if (entries.empty()) {
    throw ValueError("manifest " + args.list_path + " lists no clips");
  }
  if (args.workers < 1) {
    throw ValueError("worker count must be >= 1");
  }
  std::filesystem::create_directories(args.out_dir);

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto process = [&](std::size_t i) {
    const ManifestEntry& entry = entries[i];
    Sample a{read_clip(entry.clip_path),
             LabelDist::one_hot(cfg.num_classes, entry.class_index)};
    std::optional<Sample> b;
    if (cfg.mix) {
      const ManifestEntry& partner = entries[(i + 1) % entries.size()];
      b = Sample{read_clip(partner.clip_path),
                 LabelDist::one_hot(cfg.num_classes, partner.class_index)};
    }
    const MixResult res = augment_sample(a, b, cfg, cfg.seed, i);
    char stem[32];
    std::snprintf(stem, sizeof stem, "aug_%06zu", i);
    const auto out_base = std::filesystem::path(args.out_dir) / stem;
    write_clip(res.clip, out_base.string() + ".clip");
    write_label(res.label, out_base.string() + ".label.json");
  };

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= entries.size() || failed.load()) {
        return;
      }
      try {
        process(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) {
          first_error = std::current_exception();
        }
        failed.store(true);
        return;
      }
    }
  };

  if (args.workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(args.workers));
    for (int i = 0; i < args.workers; ++i) {
      pool.emplace_back(worker);
    }
    for (auto& th : pool) {
      th.join();
    }
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }
  return 0;
}

struct InspectArgs {
  std::string in_path;
  std::string label_path;
};

int run_inspect(const InspectArgs& args) {
  const Clip clip = read_clip(args.in_path);
  nlohmann::json j;
  j["t"] = clip.t;
  j["h"] = clip.h;
  j["w"] = clip.w;
  j["c"] = clip.c;
  j["version"] = 1;
  j["dtype"] = "u8";
  if (!args.label_path.empty()) {
    const LabelDist label = read_label(args.label_path);
    nlohmann::json weights = nlohmann::json::object();
    for (const auto& [cls, w] : label.weights()) {
      weights[std::to_string(cls)] = w;
    }
    j["label"] = {{"num_classes", label.num_classes()}, {"weights", std::move(weights)}};
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

struct ImportArgs {
  std::string dir;
  std::string pattern = "*";
  std::string out_path;
};

int run_import(const ImportArgs& args) {
  write_clip(import_frames(args.dir, args.pattern), args.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic temporal video augmentation"};
  app.require_subcommand(1);

  ApplyArgs apply_args;
  auto* apply = app.add_subcommand("apply", "Augment one clip (randaug / erase ops)");
  apply->add_option("--op", apply_args.op, std::string("one of: ") + kApplyOps)
      ->required();
  apply->add_option("--in", apply_args.in_path, "input .clip")->required();
  apply->add_option("--out", apply_args.out_path, "output .clip")->required();
  apply->add_option("--seed", apply_args.seed, "RNG seed");
  apply->add_option("--clip-id", apply_args.clip_id, "stream id of this clip");
  apply->add_option("--n", apply_args.n, "ops to apply in sequence");
  apply->add_option("--m", apply_args.m, "base magnitude in [0,10]");
  apply->add_option("--mode", apply_args.mode,
                    "magnitude range mode: spatial, temporal, temporal+, mix");
  apply->add_option("--m1", apply_args.m1, "explicit first-frame magnitude");
  apply->add_option("--m2", apply_args.m2, "explicit last-frame magnitude");
  apply->add_option("--box-h", apply_args.box_h, "erase box height");
  apply->add_option("--box-w", apply_args.box_w, "erase box width");
  apply->add_option("--frames", apply_args.frames, "frames to erase");
  apply->add_flag("--contiguous", apply_args.contiguous,
                  "erase a contiguous frame run");

  MixArgs mix_args;
  auto* mix = app.add_subcommand("mix", "Mix two clips into one sample");
  mix->add_option("--method", mix_args.method, std::string("one of: ") + kMixMethods)
      ->required();
  mix->add_option("--alpha", mix_args.alpha, "Beta shape for the mixing draw");
  mix->add_option("--seed", mix_args.seed, "RNG seed");
  mix->add_option("--clip-id", mix_args.clip_id, "stream id");
  mix->add_option("--a", mix_args.a_path, "clip A")->required();
  mix->add_option("--b", mix_args.b_path, "clip B")->required();
  mix->add_option("--label-a", mix_args.label_a, "class index of A")->required();
  mix->add_option("--label-b", mix_args.label_b, "class index of B")->required();
  mix->add_option("--num-classes", mix_args.num_classes, "label space size");
  mix->add_option("--out", mix_args.out_path, "output .clip")->required();
  mix->add_option("--out-label", mix_args.out_label_path, "output label sidecar");

  PipelineArgs pipeline_args;
  auto* pipeline = app.add_subcommand("pipeline", "Run the full pipeline over a manifest");
  pipeline->add_option("--config", pipeline_args.config_path, "pipeline JSON config")
      ->required();
  pipeline->add_option("--in-list", pipeline_args.list_path,
                       "manifest: clip-path<TAB>class-index per line")
      ->required();
  pipeline->add_option("--out-dir", pipeline_args.out_dir, "output directory")
      ->required();
  pipeline->add_option("--workers", pipeline_args.workers, "parallel workers");

  InspectArgs inspect_args;
  auto* inspect = app.add_subcommand("inspect", "Print clip header (and label) as JSON");
  inspect->add_option("--in", inspect_args.in_path, "clip to inspect")->required();
  inspect->add_option("--label", inspect_args.label_path, "label sidecar to include");

  ImportArgs import_args;
  auto* import_cmd = app.add_subcommand("import", "Build a clip from frame images");
  import_cmd->add_option("--dir", import_args.dir, "directory of PNG/PPM frames")
      ->required();
  import_cmd->add_option("--pattern", import_args.pattern, "filename glob");
  import_cmd->add_option("--out", import_args.out_path, "output .clip")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (apply->parsed()) return run_apply(apply_args);
    if (mix->parsed()) return run_mix(mix_args);
    if (pipeline->parsed()) return run_pipeline(pipeline_args);
    if (inspect->parsed()) return run_inspect(inspect_args);
    if (import_cmd->parsed()) return run_import(import_args);
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 2;
  } catch (const ValueError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
