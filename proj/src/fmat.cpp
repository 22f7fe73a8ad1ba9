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

#include "mftts/fmat.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "mftts/error.hpp"

namespace mftts {

namespace {

constexpr char kMagic[4] = {'F', 'M', 'A', 'T'};
constexpr uint8_t kVersion = 1;

void put_u32(std::string& out, uint32_t v) {
  out.push_back(char(v & 0xff));
  out.push_back(char((v >> 8) & 0xff));
  out.push_back(char((v >> 16) & 0xff));
  out.push_back(char((v >> 24) & 0xff));
}

uint32_t get_u32(const std::string& buf, size_t off) {
  return uint32_t(uint8_t(buf[off])) | uint32_t(uint8_t(buf[off + 1])) << 8 |
         uint32_t(uint8_t(buf[off + 2])) << 16 |
         uint32_t(uint8_t(buf[off + 3])) << 24;
}

}  // namespace

FeatureMatrix make_fmat(uint32_t rows, uint32_t cols, float fill) {
  FeatureMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.data.assign(size_t(rows) * cols, fill);
  return m;
}

void write_fmat(const FeatureMatrix& m, const std::string& path) {
  if (m.data.size() != size_t(m.rows) * m.cols) {
    throw Error(ErrorCode::ShapeError,
                "fmat data length does not match rows*cols for " + path);
  }
  for (size_t i = 0; i < m.data.size(); ++i) {
    if (!std::isfinite(m.data[i])) {
      throw Error(ErrorCode::NonFiniteValue,
                  "non-finite value at flat index " + std::to_string(i) +
                      " while writing " + path);
    }
  }

  std::string buf;
  buf.reserve(13 + m.data.size() * 4 + 64);
  buf.append(kMagic, 4);
  buf.push_back(char(kVersion));
  put_u32(buf, m.rows);
  put_u32(buf, m.cols);
  // float32 little-endian; memcpy is fine on all targets we build for.
  size_t data_off = buf.size();
  buf.resize(buf.size() + m.data.size() * 4);
  std::memcpy(buf.data() + data_off, m.data.data(), m.data.size() * 4);

  std::string meta_block;
  for (const auto& [k, v] : m.meta) {
    meta_block += k;
    meta_block += '=';
    meta_block += v;
    meta_block += '\n';
  }
  put_u32(buf, uint32_t(meta_block.size()));
  buf += meta_block;

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

FeatureMatrix read_fmat(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open: " + path);
  std::string buf((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());

  if (buf.size() < 13 || std::memcmp(buf.data(), kMagic, 4) != 0) {
    throw Error(ErrorCode::CorruptFile, "bad magic in " + path);
  }
  if (uint8_t(buf[4]) != kVersion) {
    throw Error(ErrorCode::CorruptFile,
                "unsupported fmat version " + std::to_string(uint8_t(buf[4])) +
                    " in " + path);
  }
  FeatureMatrix m;
  m.rows = get_u32(buf, 5);
  m.cols = get_u32(buf, 9);
  size_t n = size_t(m.rows) * m.cols;
  size_t need = 13 + n * 4 + 4;
  if (buf.size() < need) {
    throw Error(ErrorCode::CorruptFile, "truncated fmat: " + path);
  }
  m.data.resize(n);
  std::memcpy(m.data.data(), buf.data() + 13, n * 4);

  uint32_t meta_len = get_u32(buf, 13 + n * 4);
  if (buf.size() < need + meta_len) {
    throw Error(ErrorCode::CorruptFile, "truncated fmat metadata: " + path);
  }
  std::string meta_block = buf.substr(13 + n * 4 + 4, meta_len);
  size_t pos = 0;
  while (pos < meta_block.size()) {
    size_t nl = meta_block.find('\n', pos);
    if (nl == std::string::npos) nl = meta_block.size();
    std::string line = meta_block.substr(pos, nl - pos);
    pos = nl + 1;
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::CorruptFile, "bad metadata line in " + path);
    }
    m.meta[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return m;
}

}  // namespace mftts
