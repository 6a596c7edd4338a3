#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <span>
#include <vector>

#include "quasitone/render/synth.hpp"

namespace quasitone::render {

inline constexpr std::size_t kWavHeaderBytes = 44;

/// Canonical 44-byte RIFF/WAVE: PCM (format tag 1), little-endian, 16-bit
/// signed, mono, at config.sample_rate. Throws IoFailure on a bad stream and
/// InvalidArgument on non-finite samples.
void write_wav(std::span<const double> samples, const RenderConfig& config, std::ostream& out);
void write_wav(std::span<const double> samples, const RenderConfig& config,
               const std::filesystem::path& destination);

/// One quantized sample per line, as text.
void write_raw_samples(std::span<const double> samples, std::ostream& out);

/// Fields of a decoded canonical WAV header.
struct WavHeader {
  std::uint32_t riff_size = 0;
  std::uint16_t format_tag = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint32_t byte_rate = 0;
  std::uint16_t block_align = 0;
  std::uint16_t bits_per_sample = 0;
  std::uint32_t data_size = 0;
};

/// Decodes a canonical 44-byte header; throws InvalidArgument if malformed.
WavHeader read_wav_header(std::span<const std::uint8_t> bytes);

}  // namespace quasitone::render
