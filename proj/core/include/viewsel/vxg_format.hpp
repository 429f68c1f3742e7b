#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "viewsel/format_error.hpp"
#include "viewsel/voxel_grid.hpp"

namespace viewsel {

// .vxg layout:
//   "VXGRID01" | u32le dims_x | u32le dims_y | u32le dims_z | u8 encoding | payload
// encoding 0: dims.count() float32 little-endian values, x-fastest.
// encoding 1: bit-packed occupancy, bit i at byte i/8, LSB first; final byte zero-padded.

enum class VxgEncoding : std::uint8_t { float32 = 0, bitpacked = 1 };

inline constexpr char kVxgMagic[8] = {'V', 'X', 'G', 'R', 'I', 'D', '0', '1'};

struct VxgReadResult {
  VoxelGrid grid;
  /// Values that were outside [0,1] and clamped into range.
  std::size_t clamped = 0;
};

[[nodiscard]] std::vector<std::uint8_t> encode_vxg(const VoxelGrid& grid, VxgEncoding encoding);

/// Bit-packed encoding stores voxels with value >= 0.5 as set.
[[nodiscard]] VxgReadResult decode_vxg(std::span<const std::uint8_t> bytes);

void write_vxg(const std::filesystem::path& path, const VoxelGrid& grid,
               VxgEncoding encoding = VxgEncoding::float32);
[[nodiscard]] VxgReadResult read_vxg(const std::filesystem::path& path);

// Shared by the .vxg and .sil codecs.
namespace detail {
void put_u32le(std::vector<std::uint8_t>& out, std::uint32_t v);
std::uint32_t get_u32le(std::span<const std::uint8_t> bytes, std::size_t offset);
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
}  // namespace detail

}  // namespace viewsel
