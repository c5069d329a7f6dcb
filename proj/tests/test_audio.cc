// tests/test_audio.cc

// Copyright 2026  JSQA Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <fstream>

#include "jsqa/audio.h"
#include "jsqa/corpus.h"
#include "jsqa/errors.h"
#include "jsqa/resample.h"
#include "jsqa/wav_io.h"
#include "test_util.h"

using namespace jsqa;
using jsqa::testing::TempDir;

namespace {

// Hand-built WAV bytes for encodings our writer does not produce.
void write_raw_wav(const std::string& path, uint16_t format_tag,
                   uint16_t channels, uint32_t rate, uint16_t bits,
                   const std::vector<uint8_t>& payload) {
  std::vector<uint8_t> out;
  auto u32 = [&](uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
  };
  auto u16 = [&](uint16_t v) {
    out.push_back(static_cast<uint8_t>(v & 0xFF));
    out.push_back(static_cast<uint8_t>(v >> 8));
  };
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  u32(static_cast<uint32_t>(36 + payload.size()));
  out.insert(out.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
  u32(16);
  u16(format_tag);
  u16(channels);
  u32(rate);
  u32(rate * channels * bits / 8);
  u16(static_cast<uint16_t>(channels * bits / 8));
  u16(bits);
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  u32(static_cast<uint32_t>(payload.size()));
  out.insert(out.end(), payload.begin(), payload.end());
  std::ofstream f(path, std::ios::binary);
  f.write(reinterpret_cast<const char*>(out.data()),
          static_cast<std::streamsize>(out.size()));
}

}  // namespace

TEST_CASE("silence roundtrips as zeros") {
  TempDir dir("wav_silence");
  AudioClip clip;
  clip.sample_rate = 16000;
  clip.samples.assign(16000, 0.0);
  save_audio(clip, dir.file("silence.wav"));
  const AudioClip loaded = load_audio(dir.file("silence.wav"));
  CHECK(loaded.sample_rate == 16000);
  REQUIRE(loaded.samples.size() == 16000);
  for (double s : loaded.samples) CHECK(s == 0.0);
}

TEST_CASE("full-scale 16-bit values map into [-1, 1]") {
  TempDir dir("wav_fullscale");
  std::vector<uint8_t> payload;
  auto put = [&](int16_t v) {
    payload.push_back(static_cast<uint8_t>(v & 0xFF));
    payload.push_back(static_cast<uint8_t>((v >> 8) & 0xFF));
  };
  for (int i = 0; i < 64; ++i) put(i % 2 == 0 ? 32767 : -32768);
  write_raw_wav(dir.file("square.wav"), 1, 1, 16000, 16, payload);
  const AudioClip clip = load_audio(dir.file("square.wav"));
  for (double s : clip.samples) {
    CHECK(s <= 1.0);
    CHECK(s >= -1.0);
  }
  CHECK(clip.samples[1] == -1.0);
}

TEST_CASE("random clip roundtrip stays within the quantization bound") {
  TempDir dir("wav_roundtrip");
  Rng rng(99);
  AudioClip clip;
  clip.sample_rate = 16000;
  clip.samples.resize(4096);
  for (auto& s : clip.samples) s = 2.0 * rng.uniform() - 1.0;
  save_audio(clip, dir.file("r.wav"));
  const AudioClip loaded = load_audio(dir.file("r.wav"));
  REQUIRE(loaded.samples.size() == clip.samples.size());
  double max_err = 0.0;
  for (size_t i = 0; i < clip.samples.size(); ++i) {
    max_err = std::max(max_err, std::abs(clip.samples[i] - loaded.samples[i]));
  }
  CHECK(max_err <= 2.0 / 65536.0);

  // 16-bit content reloads bit-exactly once quantized.
  save_audio(loaded, dir.file("r2.wav"));
  const AudioClip again = load_audio(dir.file("r2.wav"));
  REQUIRE(again.samples.size() == loaded.samples.size());
  for (size_t i = 0; i < loaded.samples.size(); ++i) {
    CHECK(again.samples[i] == loaded.samples[i]);
  }
}

TEST_CASE("saving out-of-range samples clips and reports") {
  TempDir dir("wav_clip");
  AudioClip clip;
  clip.sample_rate = 16000;
  clip.samples = {0.0, 1.5, -2.0, 0.25};
  const size_t clipped = save_audio(clip, dir.file("c.wav"));
  CHECK(clipped == 2);
  const AudioClip loaded = load_audio(dir.file("c.wav"));
  CHECK(loaded.samples[1] == doctest::Approx(32767.0 / 32768.0));
  CHECK(loaded.samples[2] == -1.0);
}

TEST_CASE("32-bit float WAV reads back values") {
  TempDir dir("wav_float");
  std::vector<uint8_t> payload;
  const float values[] = {0.5f, -0.25f, 0.125f};
  for (float v : values) {
    uint8_t b[4];
    std::memcpy(b, &v, 4);
    payload.insert(payload.end(), b, b + 4);
  }
  write_raw_wav(dir.file("f32.wav"), 3, 1, 22050, 32, payload);
  const AudioClip clip = load_audio(dir.file("f32.wav"));
  CHECK(clip.sample_rate == 22050);
  REQUIRE(clip.samples.size() == 3);
  CHECK(clip.samples[0] == 0.5);
  CHECK(clip.samples[1] == -0.25);
}

TEST_CASE("stereo content collapses per downmix policy") {
  TempDir dir("wav_stereo");
  std::vector<uint8_t> payload;
  auto put = [&](int16_t v) {
    payload.push_back(static_cast<uint8_t>(v & 0xFF));
    payload.push_back(static_cast<uint8_t>((v >> 8) & 0xFF));
  };
  // L = 8192, R = -8192 in every frame
  for (int i = 0; i < 16; ++i) {
    put(8192);
    put(-8192);
  }
  write_raw_wav(dir.file("st.wav"), 1, 2, 16000, 16, payload);
  const AudioClip averaged = load_audio(dir.file("st.wav"), Downmix::kAverage);
  for (double s : averaged.samples) CHECK(s == 0.0);
  const AudioClip first = load_audio(dir.file("st.wav"), Downmix::kFirstChannel);
  for (double s : first.samples) CHECK(s == doctest::Approx(0.25));
}

TEST_CASE("load errors are distinguishable") {
  TempDir dir("wav_errors");
  try {
    load_audio(dir.file("missing.wav"));
    FAIL("expected AudioIoError");
  } catch (const AudioIoError& e) {
    CHECK(e.reason() == AudioIoError::Reason::kOpenFailed);
  }

  {
    std::ofstream f(dir.file("garbage.wav"), std::ios::binary);
    f << "this is not a wav file at all";
  }
  try {
    load_audio(dir.file("garbage.wav"));
    FAIL("expected AudioIoError");
  } catch (const AudioIoError& e) {
    CHECK(e.reason() == AudioIoError::Reason::kBadFormat);
  }

  // 8-bit PCM: refused as unsupported, not malformed.
  write_raw_wav(dir.file("8bit.wav"), 1, 1, 16000, 8,
                std::vector<uint8_t>(32, 128));
  try {
    load_audio(dir.file("8bit.wav"));
    FAIL("expected AudioIoError");
  } catch (const AudioIoError& e) {
    CHECK(e.reason() == AudioIoError::Reason::kUnsupportedEncoding);
  }
}

TEST_CASE("signal_power basics") {
  AudioClip zeros;
  zeros.sample_rate = 16000;
  zeros.samples.assign(100, 0.0);
  CHECK(signal_power(zeros) == 0.0);

  AudioClip half;
  half.sample_rate = 16000;
  half.samples.assign(64, 0.5);
  CHECK(signal_power(half) == doctest::Approx(0.25));

  // Unit sine over whole periods: power 1/2.
  const AudioClip sine = jsqa::testing::make_sine(100.0, 16000, 16000, 1.0);
  CHECK(signal_power(sine) == doctest::Approx(0.5).epsilon(1e-6));

  AudioClip empty;
  empty.sample_rate = 16000;
  CHECK_THROWS_AS(signal_power(empty), DataError);
}

TEST_CASE("signal_power scales quadratically") {
  const AudioClip clip = jsqa::testing::make_voiced(16000, 5000, 7);
  const double base = signal_power(clip);
  for (double alpha : {0.1, 0.5, 2.0, 13.25}) {
    AudioClip scaled = clip;
    for (auto& s : scaled.samples) s *= alpha;
    CHECK(signal_power(scaled) ==
          doctest::Approx(alpha * alpha * base).epsilon(1e-9));
  }
}

TEST_CASE("resample_to_16k is identity at 16 kHz") {
  const AudioClip clip = jsqa::testing::make_voiced(16000, 3000, 3);
  const AudioClip out = resample_to_16k(clip);
  CHECK(out.sample_rate == 16000);
  REQUIRE(out.samples.size() == clip.samples.size());
  for (size_t i = 0; i < clip.samples.size(); ++i) {
    CHECK(out.samples[i] == clip.samples[i]);
  }
}

TEST_CASE("resample_to_16k preserves duration within one sample") {
  const AudioClip clip = jsqa::testing::make_noise(48000, 48000, 11);
  const AudioClip out = resample_to_16k(clip);
  CHECK(out.sample_rate == 16000);
  CHECK(std::abs(static_cast<int64_t>(out.samples.size()) - 16000) <= 1);

  const AudioClip odd = jsqa::testing::make_noise(44100, 22050, 12);
  const AudioClip out2 = resample_to_16k(odd);
  CHECK(std::abs(static_cast<int64_t>(out2.samples.size()) - 8000) <= 1);
}

TEST_CASE("resampled sine correlates with the analytic target") {
  // 1 kHz at 48 kHz resampled to 16 kHz vs a directly synthesized 16 kHz sine.
  const AudioClip src = jsqa::testing::make_sine(1000.0, 48000, 48000, 0.7);
  const AudioClip out = resample_to_16k(src);
  const AudioClip ref = jsqa::testing::make_sine(1000.0, 16000, 16000, 0.7);
  const size_t n = std::min(out.samples.size(), ref.samples.size());
  // trim the edges where the kernel is half outside the signal
  const size_t lo = 200;
  const size_t hi = n - 200;
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (size_t i = lo; i < hi; ++i) {
    dot += out.samples[i] * ref.samples[i];
    na += out.samples[i] * out.samples[i];
    nb += ref.samples[i] * ref.samples[i];
  }
  const double correlation = dot / std::sqrt(na * nb);
  CHECK(correlation > 0.999);
}

TEST_CASE("resample rejects rates below 8 kHz") {
  const AudioClip clip = jsqa::testing::make_noise(4000, 4000, 5);
  CHECK_THROWS_AS(resample_to_16k(clip), DataError);
}

TEST_CASE("crop_or_pad covers its policies") {
  const AudioClip clip = jsqa::testing::make_voiced(16000, 1000, 21);

  Rng rng(5);
  SUBCASE("short input gets suffix zeros under every policy") {
    for (auto policy : {CropPolicy::kRandomCrop, CropPolicy::kCenterCrop,
                        CropPolicy::kZeroPad}) {
      const AudioClip out = crop_or_pad(clip, 1500, policy, rng);
      REQUIRE(out.samples.size() == 1500);
      for (size_t i = 0; i < 1000; ++i) CHECK(out.samples[i] == clip.samples[i]);
      for (size_t i = 1000; i < 1500; ++i) CHECK(out.samples[i] == 0.0);
    }
  }

  SUBCASE("exact length is identity") {
    for (auto policy : {CropPolicy::kRandomCrop, CropPolicy::kCenterCrop,
                        CropPolicy::kZeroPad}) {
      const AudioClip out = crop_or_pad(clip, 1000, policy, rng);
      CHECK(out.samples == clip.samples);
    }
  }

  SUBCASE("random crop is deterministic per seed") {
    Rng rng_a(42);
    Rng rng_b(42);
    const AudioClip a = crop_or_pad(clip, 300, CropPolicy::kRandomCrop, rng_a);
    const AudioClip b = crop_or_pad(clip, 300, CropPolicy::kRandomCrop, rng_b);
    CHECK(a.samples == b.samples);
  }

  SUBCASE("center crop takes the middle") {
    const AudioClip out = crop_or_pad(clip, 500, CropPolicy::kCenterCrop, rng);
    REQUIRE(out.samples.size() == 500);
    for (size_t i = 0; i < 500; ++i) {
      CHECK(out.samples[i] == clip.samples[i + 250]);
    }
  }
}

TEST_CASE("model input contract is enforced") {
  AudioClip ok = jsqa::testing::make_voiced(16000, 100, 1);
  CHECK_NOTHROW(validate_model_input(ok));

  AudioClip wrong_rate = ok;
  wrong_rate.sample_rate = 44100;
  CHECK_THROWS_AS(validate_model_input(wrong_rate), DataError);

  AudioClip with_nan = ok;
  with_nan.samples[3] = std::nan("");
  CHECK_THROWS_AS(validate_model_input(with_nan), DataError);

  AudioClip empty;
  empty.sample_rate = 16000;
  CHECK_THROWS_AS(validate_model_input(empty), DataError);
}

TEST_CASE("corpus scans recursively in sorted order and filters") {
  TempDir dir("corpus");
  std::filesystem::create_directories(dir.path() / "sub");
  save_audio(jsqa::testing::make_voiced(16000, 2000, 1), dir.file("b.wav"));
  save_audio(jsqa::testing::make_voiced(16000, 500, 2), dir.file("a.wav"));
  save_audio(jsqa::testing::make_voiced(16000, 2000, 3),
             (dir.path() / "sub" / "c.wav").string());
  {  // silent file: power below the usable floor
    AudioClip silent;
    silent.sample_rate = 16000;
    silent.samples.assign(2000, 0.0);
    save_audio(silent, dir.file("silent.wav"));
  }

  Corpus corpus(dir.path().string());
  REQUIRE(corpus.ids().size() == 4);
  CHECK(corpus.ids()[0] == "a.wav");
  CHECK(corpus.ids()[1] == "b.wav");
  CHECK(corpus.ids()[2] == "silent.wav");
  CHECK(corpus.ids()[3] == "sub/c.wav");

  // length filter drops a.wav; power filter drops silent.wav
  const auto eligible = corpus.eligible_ids(1000);
  REQUIRE(eligible.size() == 2);
  CHECK(eligible[0] == "b.wav");
  CHECK(eligible[1] == "sub/c.wav");

  CHECK_THROWS_AS(corpus.get("missing.wav"), DataError);
}
