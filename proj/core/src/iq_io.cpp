#include "subjam/iq_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace subjam::iq_io {

namespace {
// x86-64 / aarch64 are little-endian; floats are written natively.
static_assert(sizeof(float) == 4);
}

void write_f32(const std::string& path, const dsp::IQBuffer& buffer) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("iq: cannot write " + path);
    std::vector<float> interleaved;
    interleaved.reserve(buffer.samples.size() * 2);
    for (const auto& s : buffer.samples) {
        interleaved.push_back(static_cast<float>(s.real()));
        interleaved.push_back(static_cast<float>(s.imag()));
    }
    f.write(reinterpret_cast<const char*>(interleaved.data()),
            static_cast<std::streamsize>(interleaved.size() * sizeof(float)));

    std::ofstream side(path + ".txt");
    if (!side) throw std::runtime_error("iq: cannot write sidecar for " + path);
    char line[64];
    std::snprintf(line, sizeof(line), "sample_rate_hz %.6g\n", buffer.sample_rate_hz);
    side << line;
    std::snprintf(line, sizeof(line), "center_freq_hz %.6g\n", buffer.center_freq_hz);
    side << line;
}

dsp::IQBuffer read_f32(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("iq: cannot open " + path);
    std::vector<char> raw((std::istreambuf_iterator<char>(f)),
                          std::istreambuf_iterator<char>());
    if (raw.size() % 8 != 0)
        throw std::runtime_error("iq: file size not a multiple of one IQ pair: " + path);

    dsp::IQBuffer out;
    const float* p = reinterpret_cast<const float*>(raw.data());
    const std::size_t n = raw.size() / 8;
    out.samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.samples.emplace_back(p[2 * i], p[2 * i + 1]);

    std::ifstream side(path + ".txt");
    if (!side) throw std::runtime_error("iq: missing sidecar for " + path);
    std::string key;
    double value = 0.0;
    while (side >> key >> value) {
        if (key == "sample_rate_hz") out.sample_rate_hz = value;
        else if (key == "center_freq_hz") out.center_freq_hz = value;
    }
    if (!(out.sample_rate_hz > 0.0))
        throw std::runtime_error("iq: sidecar missing sample_rate_hz: " + path);
    return out;
}

}  // namespace subjam::iq_io
