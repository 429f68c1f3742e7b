#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "viewsel/format_error.hpp"
#include "viewsel/synthesis.hpp"

namespace viewsel {

// .sil layout: "SILIMG01" | u32le dims_y | u32le dims_z | bit-packed pixels,
// y-fastest, bit i at byte i/8 LSB first, final byte zero-padded.

inline constexpr char kSilMagic[8] = {'S', 'I', 'L', 'I', 'M', 'G', '0', '1'};

[[nodiscard]] std::vector<std::uint8_t> encode_sil(const SilhouetteImage& image);
[[nodiscard]] SilhouetteImage decode_sil(std::span<const std::uint8_t> bytes);

void write_sil(const std::filesystem::path& path, const SilhouetteImage& image);
[[nodiscard]] SilhouetteImage read_sil(const std::filesystem::path& path);

}  // namespace viewsel
