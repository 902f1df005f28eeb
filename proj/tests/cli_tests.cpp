// Exercises the CLI binary end to end: argv[1] = CLI path, argv[2] = work dir.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vidaug/clip_io.hpp"

#include "subprocess.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;
using namespace vidaug;
using namespace vidaug::testutil;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: cli_tests <vidaug-binary> <work-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path work = argv[2];
  fs::remove_all(work);
  fs::create_directories(work);

  const Clip a = random_clip(8, 24, 24, 3, 1);
  const Clip b = random_clip(8, 24, 24, 3, 2);
  write_clip(a, work / "a.clip");
  write_clip(b, work / "b.clip");

  {  // inspect reports the exact header
    const auto res = run_command({cli, "inspect", "--in", (work / "a.clip").string()});
    check(res.exit_code == 0, "inspect exits 0: " + res.output);
    const auto j = nlohmann::json::parse(res.output, nullptr, false);
    check(!j.is_discarded() && j["t"] == 8 && j["h"] == 24 && j["w"] == 24 &&
              j["c"] == 3,
          "inspect prints the written dims: " + res.output);
  }

  {  // mix determinism: byte-identical clip and sidecar across reruns
    const auto mix_args = std::vector<std::string>{
        cli,        "mix",          "--method", "fademixup",
        "--alpha",  "2.0",          "--seed",   "1234",
        "--a",      (work / "a.clip").string(),
        "--b",      (work / "b.clip").string(),
        "--label-a", "3",           "--label-b", "9",
        "--num-classes", "101"};
    auto run1 = mix_args;
    run1.insert(run1.end(), {"--out", (work / "m1.clip").string(), "--out-label",
                             (work / "m1.json").string()});
    auto run2 = mix_args;
    run2.insert(run2.end(), {"--out", (work / "m2.clip").string(), "--out-label",
                             (work / "m2.json").string()});
    check(run_command(run1).exit_code == 0, "mix run 1 exits 0");
    check(run_command(run2).exit_code == 0, "mix run 2 exits 0");
    check(same_bytes(work / "m1.clip", work / "m2.clip"), "mix clips byte-identical");
    check(same_bytes(work / "m1.json", work / "m2.json"), "mix sidecars byte-identical");
    const auto label = read_label(work / "m1.json");
    check(label.weights().size() == 2, "mixed sidecar has two classes");
  }

  {  // apply randaugment-t keeps dims and succeeds
    const auto res = run_command({cli, "apply", "--op", "randaugment-t", "--mode",
                                  "temporal+", "--m", "5", "--n", "2", "--seed", "7",
                                  "--in", (work / "a.clip").string(), "--out",
                                  (work / "ra.clip").string()});
    check(res.exit_code == 0, "apply randaugment-t exits 0: " + res.output);
    const Clip out = read_clip(work / "ra.clip");
    check(out.t == a.t && out.h == a.h && out.w == a.w && out.c == a.c,
          "randaugment-t output keeps dims");
  }

  {  // apply erase ops
    const auto res = run_command({cli, "apply", "--op", "framecutout", "--frames", "4",
                                  "--seed", "3", "--in", (work / "a.clip").string(),
                                  "--out", (work / "fc.clip").string()});
    check(res.exit_code == 0, "apply framecutout exits 0: " + res.output);
    const Clip out = read_clip(work / "fc.clip");
    int zero_frames = 0;
    for (int f = 0; f < out.t; ++f) {
      bool all_zero = true;
      for (std::int64_t i = 0; i < out.frame_samples(); ++i) {
        all_zero &= out.frame_data(f)[i] == 0;
      }
      zero_frames += all_zero;
    }
    check(zero_frames == 4, "framecutout zeroes the requested frames");
  }

  {  // unknown names produce usage errors listing the valid set
    const auto bad_op = run_command({cli, "apply", "--op", "sparkle", "--in",
                                     (work / "a.clip").string(), "--out",
                                     (work / "x.clip").string()});
    check(bad_op.exit_code == 1, "unknown op exits 1");
    check(bad_op.output.find("randaugment-t") != std::string::npos,
          "unknown op lists valid ops: " + bad_op.output);
    const auto bad_method = run_command(
        {cli, "mix", "--method", "blendo", "--a", (work / "a.clip").string(), "--b",
         (work / "b.clip").string(), "--label-a", "0", "--label-b", "1", "--out",
         (work / "x.clip").string()});
    check(bad_method.exit_code == 1, "unknown method exits 1");
    check(bad_method.output.find("fademixup") != std::string::npos,
          "unknown method lists valid methods: " + bad_method.output);
    const auto bad_flag = run_command({cli, "apply", "--no-such-flag"});
    check(bad_flag.exit_code == 1, "bad flag exits 1");
  }

  {  // format errors exit 2
    std::ofstream(work / "garbage.clip", std::ios::binary) << "CLIqxxxxxxxxxxxxxxxxxx";
    const auto res =
        run_command({cli, "inspect", "--in", (work / "garbage.clip").string()});
    check(res.exit_code == 2, "bad magic exits 2");
    check(res.output.find("magic") != std::string::npos,
          "bad magic names the field: " + res.output);
    const auto missing =
        run_command({cli, "inspect", "--in", (work / "missing.clip").string()});
    check(missing.exit_code == 2, "missing file exits 2");
  }

  {  // import: natural order, grayscale PPM frames
    const auto frames = work / "frames";
    fs::create_directories(frames);
    for (int i = 1; i <= 12; ++i) {
      std::ofstream out(frames / ("f_" + std::to_string(i) + ".pgm"),
                        std::ios::binary);
      out << "P5\n2 2\n255\n";
      const std::uint8_t px[4] = {static_cast<std::uint8_t>(i), 0, 0, 0};
      out.write(reinterpret_cast<const char*>(px), 4);
    }
    const auto res = run_command({cli, "import", "--dir", frames.string(), "--pattern",
                                  "f_*.pgm", "--out", (work / "imported.clip").string()});
    check(res.exit_code == 0, "import exits 0: " + res.output);
    const Clip imported = read_clip(work / "imported.clip");
    check(imported.t == 12 && imported.c == 1, "import shapes the clip");
    bool ordered = true;
    for (int i = 0; i < 12; ++i) {
      ordered &= imported.frame_data(i)[0] == i + 1;
    }
    check(ordered, "import orders frames naturally");
  }

  {  // pipeline over a small manifest: deterministic across runs and workers
    PipelineConfig cfg;
    cfg.crop_size = 16;
    cfg.jitter_lo = 16;
    cfg.jitter_hi = 20;
    cfg.seed = 42;
    cfg.num_classes = 10;
    cfg.randaug = RandAugConfig{1, RangeMode::TemporalPlus, 5.0};
    cfg.mix = MixSpec{MixMethod::FrameCutMixup, 2.0};
    std::ofstream(work / "cfg.json") << config_to_json(cfg).dump(2);
    std::ofstream manifest(work / "list.tsv");
    for (int i = 0; i < 6; ++i) {
      const auto name = "in_" + std::to_string(i) + ".clip";
      write_clip(random_clip(4, 20, 22, 3, 100 + static_cast<std::uint64_t>(i)),
                 work / name);
      manifest << name << '\t' << i % 10 << '\n';
    }
    manifest.close();
    auto run_pipeline = [&](const std::string& out_dir, const std::string& workers) {
      return run_command({cli, "pipeline", "--config", (work / "cfg.json").string(),
                          "--in-list", (work / "list.tsv").string(), "--out-dir",
                          (work / out_dir).string(), "--workers", workers});
    };
    check(run_pipeline("out1", "1").exit_code == 0, "pipeline w1 exits 0");
    check(run_pipeline("out2", "1").exit_code == 0, "pipeline rerun exits 0");
    check(run_pipeline("out3", "3").exit_code == 0, "pipeline w3 exits 0");
    check(same_tree(work / "out1", work / "out2"), "pipeline reruns byte-identical");
    check(same_tree(work / "out1", work / "out3"),
          "pipeline workers don't change bytes");
    check(fs::exists(work / "out1" / "aug_000005.clip") &&
              fs::exists(work / "out1" / "aug_000005.label.json"),
          "pipeline writes clip and sidecar per entry");
  }

  if (failures == 0) {
    std::cout << "cli_tests: all checks passed\n";
    return 0;
  }
  std::cerr << "cli_tests: " << failures << " check(s) failed\n";
  return 1;
}
