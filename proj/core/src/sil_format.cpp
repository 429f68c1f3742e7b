#include "viewsel/sil_format.hpp"

#include <cstring>
#include <iterator>

#include "viewsel/vxg_format.hpp"

namespace viewsel {

namespace {
constexpr std::size_t kHeaderSize = 8 + 2 * 4;
constexpr std::size_t kMaxPixels = std::size_t{1} << 31;
}  // namespace

std::vector<std::uint8_t> encode_sil(const SilhouetteImage& image) {
  std::vector<std::uint8_t> out(std::begin(kSilMagic), std::end(kSilMagic));
  detail::put_u32le(out, image.dims_y());
  detail::put_u32le(out, image.dims_z());
  std::vector<std::uint8_t> packed((image.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image.test(i)) packed[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
  }
  out.insert(out.end(), packed.begin(), packed.end());
  return out;
}

SilhouetteImage decode_sil(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderSize) throw FormatError("sil: truncated header", bytes.size());
  if (std::memcmp(bytes.data(), kSilMagic, sizeof(kSilMagic)) != 0) {
    throw FormatError("sil: bad magic, expected SILIMG01", 0);
  }
  const std::uint32_t dy = detail::get_u32le(bytes, 8);
  const std::uint32_t dz = detail::get_u32le(bytes, 12);
  if (dy == 0 || dz == 0) throw FormatError("sil: zero dimension", 8);
  const std::size_t count = static_cast<std::size_t>(dy) * dz;
  if (count > kMaxPixels) throw FormatError("sil: image too large", 8);
  const std::size_t packed = (count + 7) / 8;
  if (bytes.size() != kHeaderSize + packed) {
    throw FormatError("sil: payload size does not match dims",
                      std::min(bytes.size(), kHeaderSize + packed));
  }
  SilhouetteImage image(dy, dz);
  for (std::size_t i = 0; i < count; ++i) {
    if ((bytes[kHeaderSize + i / 8] >> (i % 8)) & 1u) image.set(i);
  }
  return image;
}

void write_sil(const std::filesystem::path& path, const SilhouetteImage& image) {
  detail::write_file(path, encode_sil(image));
}

SilhouetteImage read_sil(const std::filesystem::path& path) {
  return decode_sil(detail::read_file(path));
}

}  // namespace viewsel
