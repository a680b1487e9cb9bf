#pragma once

#include <string>

#include "subjam/dsp.hpp"

namespace subjam::wav {

/// Reads a PCM 16-bit little-endian mono WAV file. Samples are normalized
/// to +/-1.0 full scale. Throws std::runtime_error on malformed input or
/// unsupported encodings.
dsp::SampleBuffer read_pcm16_mono(const std::string& path);

/// Writes a PCM 16-bit little-endian mono WAV file. Samples are clamped to
/// [-1, 1] before quantization.
void write_pcm16_mono(const std::string& path, const dsp::SampleBuffer& buffer);

}  // namespace subjam::wav
