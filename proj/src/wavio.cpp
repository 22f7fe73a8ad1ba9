// Copyright (c) 2026 The mftts Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mftts/wavio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "mftts/error.hpp"

namespace mftts {

namespace {

uint32_t rd_u32(const char* p) {
  uint32_t v;
  std::memcpy(&v, p, 4);
  return v;
}
uint16_t rd_u16(const char* p) {
  uint16_t v;
  std::memcpy(&v, p, 2);
  return v;
}

void wr_u32(std::string& s, uint32_t v) { s.append(reinterpret_cast<char*>(&v), 4); }
void wr_u16(std::string& s, uint16_t v) { s.append(reinterpret_cast<char*>(&v), 2); }

}  // namespace

AudioClip read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open wav: " + path);
  std::string buf((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
  if (buf.size() < 44 || buf.compare(0, 4, "RIFF") != 0 ||
      buf.compare(8, 4, "WAVE") != 0) {
    throw Error(ErrorCode::CorruptFile, "not a RIFF/WAVE file: " + path);
  }

  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  size_t data_off = 0, data_len = 0;
  size_t pos = 12;
  while (pos + 8 <= buf.size()) {
    std::string id = buf.substr(pos, 4);
    uint32_t len = rd_u32(buf.data() + pos + 4);
    size_t body = pos + 8;
    if (body + len > buf.size()) {
      throw Error(ErrorCode::CorruptFile, "truncated chunk in " + path);
    }
    if (id == "fmt ") {
      if (len < 16) throw Error(ErrorCode::CorruptFile, "short fmt chunk");
      format = rd_u16(buf.data() + body);
      channels = rd_u16(buf.data() + body + 2);
      rate = rd_u32(buf.data() + body + 4);
      bits = rd_u16(buf.data() + body + 14);
    } else if (id == "data") {
      data_off = body;
      data_len = len;
    }
    pos = body + len + (len & 1);  // chunks are word-aligned
  }
  if (data_off == 0) throw Error(ErrorCode::CorruptFile, "no data chunk in " + path);
  if (format != 1 || bits != 16) {
    throw Error(ErrorCode::ConfigError,
                "expected 16-bit PCM, got format=" + std::to_string(format) +
                    " bits=" + std::to_string(bits) + " in " + path);
  }
  if (channels != 1) {
    throw Error(ErrorCode::ConfigError,
                "expected mono, got " + std::to_string(channels) +
                    " channels in " + path);
  }
  if (int(rate) != kSampleRate) {
    throw Error(ErrorCode::ConfigError,
                "expected " + std::to_string(kSampleRate) + " Hz, got " +
                    std::to_string(rate) + " in " + path);
  }

  AudioClip clip;
  clip.rate = int(rate);
  size_t n = data_len / 2;
  clip.samples.resize(n);
  for (size_t i = 0; i < n; ++i) {
    int16_t s;
    std::memcpy(&s, buf.data() + data_off + 2 * i, 2);
    clip.samples[i] = double(s) / 32768.0;
  }
  return clip;
}

void write_wav(const AudioClip& clip, const std::string& path) {
  std::string buf;
  uint32_t n = uint32_t(clip.samples.size());
  buf.reserve(44 + 2 * n);
  buf += "RIFF";
  wr_u32(buf, 36 + 2 * n);
  buf += "WAVE";
  buf += "fmt ";
  wr_u32(buf, 16);
  wr_u16(buf, 1);  // PCM
  wr_u16(buf, 1);  // mono
  wr_u32(buf, uint32_t(clip.rate));
  wr_u32(buf, uint32_t(clip.rate) * 2);  // byte rate
  wr_u16(buf, 2);                        // block align
  wr_u16(buf, 16);                       // bits
  buf += "data";
  wr_u32(buf, 2 * n);
  for (uint32_t i = 0; i < n; ++i) {
    double v = std::clamp(clip.samples[i], -1.0, 1.0);
    int16_t s = int16_t(std::lrint(v * 32767.0));
    buf.append(reinterpret_cast<char*>(&s), 2);
  }

  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot open for write: " + tmp);
    out.write(buf.data(), std::streamsize(buf.size()));
    if (!out) throw Error(ErrorCode::IoError, "short write: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw Error(ErrorCode::IoError, "rename failed: " + path);
  }
}

AudioClip trim_silence(const AudioClip& clip, double threshold_db) {
  double threshold = std::pow(10.0, threshold_db / 20.0);
  size_t begin = 0, end = clip.samples.size();
  while (begin < end && std::abs(clip.samples[begin]) < threshold) ++begin;
  while (end > begin && std::abs(clip.samples[end - 1]) < threshold) --end;
  AudioClip out;
  out.rate = clip.rate;
  out.samples.assign(clip.samples.begin() + std::ptrdiff_t(begin),
                     clip.samples.begin() + std::ptrdiff_t(end));
  return out;
}

}  // namespace mftts
