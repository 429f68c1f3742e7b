#include "viewsel/vxg_format.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>

namespace viewsel {

namespace detail {

void put_u32le(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int shift = 0; shift < 32; shift += 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

std::uint32_t get_u32le(std::span<const std::uint8_t> bytes, std::size_t offset) {
  std::uint32_t v = 0;
  for (int k = 0; k < 4; ++k) v |= static_cast<std::uint32_t>(bytes[offset + k]) << (8 * k);
  return v;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("short write to " + path.string());
}

}  // namespace detail

namespace {

constexpr std::size_t kHeaderSize = 8 + 3 * 4 + 1;
// Refuse headers that would need more than 2^31 voxels.
constexpr std::size_t kMaxVoxels = std::size_t{1} << 31;

}  // namespace

std::vector<std::uint8_t> encode_vxg(const VoxelGrid& grid, VxgEncoding encoding) {
  const auto& d = grid.dims();
  std::vector<std::uint8_t> out(std::begin(kVxgMagic), std::end(kVxgMagic));
  detail::put_u32le(out, d.x);
  detail::put_u32le(out, d.y);
  detail::put_u32le(out, d.z);
  out.push_back(static_cast<std::uint8_t>(encoding));

  const auto values = grid.values();
  if (encoding == VxgEncoding::float32) {
    out.reserve(out.size() + values.size() * 4);
    for (float v : values) detail::put_u32le(out, std::bit_cast<std::uint32_t>(v));
  } else {
    std::vector<std::uint8_t> packed((values.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] >= 0.5f) packed[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
    }
    out.insert(out.end(), packed.begin(), packed.end());
  }
  return out;
}

VxgReadResult decode_vxg(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderSize) throw FormatError("vxg: truncated header", bytes.size());
  if (std::memcmp(bytes.data(), kVxgMagic, sizeof(kVxgMagic)) != 0) {
    throw FormatError("vxg: bad magic, expected VXGRID01", 0);
  }
  const GridDims dims{detail::get_u32le(bytes, 8), detail::get_u32le(bytes, 12),
                      detail::get_u32le(bytes, 16)};
  if (dims.x == 0 || dims.y == 0 || dims.z == 0) {
    throw FormatError("vxg: zero dimension " + dims.str(), 8);
  }
  const std::size_t count = dims.count();
  if (count > kMaxVoxels) throw FormatError("vxg: grid too large " + dims.str(), 8);

  const std::uint8_t flag = bytes[20];
  std::size_t offset = kHeaderSize;
  std::vector<float> values(count);
  std::size_t clamped = 0;

  if (flag == static_cast<std::uint8_t>(VxgEncoding::float32)) {
    if (bytes.size() != kHeaderSize + count * 4) {
      throw FormatError("vxg: payload size does not match dims " + dims.str(),
                        std::min(bytes.size(), kHeaderSize + count * 4));
    }
    for (std::size_t i = 0; i < count; ++i, offset += 4) {
      float v = std::bit_cast<float>(detail::get_u32le(bytes, offset));
      if (!std::isfinite(v)) throw FormatError("vxg: non-finite voxel value", offset);
      if (v < 0.0f || v > 1.0f) {
        v = std::clamp(v, 0.0f, 1.0f);
        ++clamped;
      }
      values[i] = v;
    }
  } else if (flag == static_cast<std::uint8_t>(VxgEncoding::bitpacked)) {
    const std::size_t packed = (count + 7) / 8;
    if (bytes.size() != kHeaderSize + packed) {
      throw FormatError("vxg: payload size does not match dims " + dims.str(),
                        std::min(bytes.size(), kHeaderSize + packed));
    }
    for (std::size_t i = 0; i < count; ++i) {
      values[i] = ((bytes[offset + i / 8] >> (i % 8)) & 1u) ? 1.0f : 0.0f;
    }
  } else {
    throw FormatError("vxg: unknown encoding flag " + std::to_string(flag), 20);
  }
  return {VoxelGrid(dims, std::move(values)), clamped};
}

void write_vxg(const std::filesystem::path& path, const VoxelGrid& grid, VxgEncoding encoding) {
  detail::write_file(path, encode_vxg(grid, encoding));
}

VxgReadResult read_vxg(const std::filesystem::path& path) {
  return decode_vxg(detail::read_file(path));
}

}  // namespace viewsel
