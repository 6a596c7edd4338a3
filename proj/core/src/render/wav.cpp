#include "quasitone/render/wav.hpp"

#include <array>
#include <fstream>

#include "quasitone/errors.hpp"

namespace quasitone::render {

namespace {

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int shift = 0; shift < 32; shift += 8) {
    out.push_back(static_cast<std::uint8_t>((v >> shift) & 0xff));
  }
}

std::uint16_t get_u16(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] | (b[at + 1] << 8));
}

std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) | (static_cast<std::uint32_t>(b[at + 1]) << 8) |
         (static_cast<std::uint32_t>(b[at + 2]) << 16) |
         (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

bool tag_is(std::span<const std::uint8_t> b, std::size_t at, const char (&tag)[5]) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (b[at + i] != static_cast<std::uint8_t>(tag[i])) return false;
  }
  return true;
}

void put_tag(std::vector<std::uint8_t>& out, const char (&tag)[5]) {
  out.insert(out.end(), tag, tag + 4);
}

}  // namespace

void write_wav(std::span<const double> samples, const RenderConfig& config, std::ostream& out) {
  config.validate();
  std::vector<std::int16_t> pcm = quantize(samples);
  const std::uint32_t bytes_per_sample = config.bit_depth / 8;
  const std::uint32_t block_align = config.channels * bytes_per_sample;
  const std::uint64_t data_size = static_cast<std::uint64_t>(pcm.size()) * block_align;
  if (data_size + kWavHeaderBytes - 8 > 0xffffffffu) {
    throw BufferTooLarge("sample data does not fit a RIFF file");
  }

  std::vector<std::uint8_t> bytes;
  bytes.reserve(kWavHeaderBytes + data_size);
  put_tag(bytes, "RIFF");
  put_u32(bytes, static_cast<std::uint32_t>(36 + data_size));
  put_tag(bytes, "WAVE");
  put_tag(bytes, "fmt ");
  put_u32(bytes, 16);
  put_u16(bytes, 1);
  put_u16(bytes, config.channels);
  put_u32(bytes, config.sample_rate);
  put_u32(bytes, config.sample_rate * block_align);
  put_u16(bytes, static_cast<std::uint16_t>(block_align));
  put_u16(bytes, config.bit_depth);
  put_tag(bytes, "data");
  put_u32(bytes, static_cast<std::uint32_t>(data_size));
  for (std::int16_t s : pcm) {
    put_u16(bytes, static_cast<std::uint16_t>(s));
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw IoFailure("failed to write WAV data");
  }
}

void write_wav(std::span<const double> samples, const RenderConfig& config,
               const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoFailure("cannot open " + destination.string() + " for writing");
  }
  write_wav(samples, config, out);
  out.close();
  if (!out) {
    throw IoFailure("failed to finish writing " + destination.string());
  }
}

void write_raw_samples(std::span<const double> samples, std::ostream& out) {
  for (std::int16_t s : quantize(samples)) {
    out << s << '\n';
  }
  if (!out) {
    throw IoFailure("failed to write raw samples");
  }
}

WavHeader read_wav_header(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kWavHeaderBytes || !tag_is(bytes, 0, "RIFF") || !tag_is(bytes, 8, "WAVE") ||
      !tag_is(bytes, 12, "fmt ") || get_u32(bytes, 16) != 16 || !tag_is(bytes, 36, "data")) {
    throw InvalidArgument("not a canonical 44-byte WAV header");
  }
  WavHeader h;
  h.riff_size = get_u32(bytes, 4);
  h.format_tag = get_u16(bytes, 20);
  h.channels = get_u16(bytes, 22);
  h.sample_rate = get_u32(bytes, 24);
  h.byte_rate = get_u32(bytes, 28);
  h.block_align = get_u16(bytes, 32);
  h.bits_per_sample = get_u16(bytes, 34);
  h.data_size = get_u32(bytes, 40);
  return h;
}

}  // namespace quasitone::render
