#pragma once

#include <string>

#include "subjam/dsp.hpp"

namespace subjam::iq_io {

/// Writes interleaved 32-bit little-endian floats (I then Q), no header.
/// A sidecar text file at path + ".txt" records sample_rate_hz and
/// center_freq_hz, one "key value" pair per line.
void write_f32(const std::string& path, const dsp::IQBuffer& buffer);

/// Reads an IQ dump written by write_f32, using the sidecar for metadata.
dsp::IQBuffer read_f32(const std::string& path);

}  // namespace subjam::iq_io
