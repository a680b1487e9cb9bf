#include "subjam/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace subjam::wav {

namespace {

uint32_t read_u32(const uint8_t* p) {
    return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
           (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t read_u16(const uint8_t* p) {
    return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    out.push_back(static_cast<uint8_t>(v & 0xff));
    out.push_back(static_cast<uint8_t>((v >> 8) & 0xff));
    out.push_back(static_cast<uint8_t>((v >> 16) & 0xff));
    out.push_back(static_cast<uint8_t>((v >> 24) & 0xff));
}

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
    out.push_back(static_cast<uint8_t>(v & 0xff));
    out.push_back(static_cast<uint8_t>((v >> 8) & 0xff));
}

void put_tag(std::vector<uint8_t>& out, const char* tag) {
    out.insert(out.end(), tag, tag + 4);
}

}  // namespace

dsp::SampleBuffer read_pcm16_mono(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("wav: cannot open " + path);

    std::vector<uint8_t> raw((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
    if (raw.size() < 44 || std::memcmp(raw.data(), "RIFF", 4) != 0 ||
        std::memcmp(raw.data() + 8, "WAVE", 4) != 0)
        throw std::runtime_error("wav: not a RIFF/WAVE file: " + path);

    uint16_t channels = 0, bits = 0, format = 0;
    uint32_t sample_rate = 0;
    const uint8_t* data = nullptr;
    uint32_t data_len = 0;

    std::size_t pos = 12;
    while (pos + 8 <= raw.size()) {
        const uint32_t chunk_len = read_u32(raw.data() + pos + 4);
        const uint8_t* body = raw.data() + pos + 8;
        if (pos + 8 + chunk_len > raw.size())
            throw std::runtime_error("wav: truncated chunk in " + path);
        if (std::memcmp(raw.data() + pos, "fmt ", 4) == 0) {
            if (chunk_len < 16) throw std::runtime_error("wav: short fmt chunk");
            format = read_u16(body);
            channels = read_u16(body + 2);
            sample_rate = read_u32(body + 4);
            bits = read_u16(body + 14);
        } else if (std::memcmp(raw.data() + pos, "data", 4) == 0) {
            data = body;
            data_len = chunk_len;
        }
        pos += 8 + chunk_len + (chunk_len & 1);  // chunks are word-aligned
    }

    if (format != 1 || bits != 16)
        throw std::runtime_error("wav: only PCM16 supported: " + path);
    if (channels != 1)
        throw std::runtime_error("wav: only mono supported: " + path);
    if (data == nullptr || sample_rate == 0)
        throw std::runtime_error("wav: missing fmt/data chunk: " + path);

    dsp::SampleBuffer out;
    out.sample_rate_hz = static_cast<double>(sample_rate);
    const std::size_t n = data_len / 2;
    out.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int16_t v = static_cast<int16_t>(data[2 * i] | (data[2 * i + 1] << 8));
        out.samples[i] = static_cast<double>(v) / 32768.0;
    }
    return out;
}

void write_pcm16_mono(const std::string& path, const dsp::SampleBuffer& buffer) {
    if (!(buffer.sample_rate_hz > 0.0))
        throw std::runtime_error("wav: sample rate must be > 0");

    const uint32_t n = static_cast<uint32_t>(buffer.samples.size());
    const uint32_t data_len = n * 2;
    const uint32_t rate = static_cast<uint32_t>(std::llround(buffer.sample_rate_hz));

    std::vector<uint8_t> out;
    out.reserve(44 + data_len);
    put_tag(out, "RIFF");
    put_u32(out, 36 + data_len);
    put_tag(out, "WAVE");
    put_tag(out, "fmt ");
    put_u32(out, 16);
    put_u16(out, 1);            // PCM
    put_u16(out, 1);            // mono
    put_u32(out, rate);
    put_u32(out, rate * 2);     // byte rate
    put_u16(out, 2);            // block align
    put_u16(out, 16);           // bits
    put_tag(out, "data");
    put_u32(out, data_len);
    for (double s : buffer.samples) {
        const double clamped = std::clamp(s, -1.0, 1.0);
        const int16_t v = static_cast<int16_t>(
            std::clamp(std::lround(clamped * 32768.0), -32768L, 32767L));
        put_u16(out, static_cast<uint16_t>(v));
    }

    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("wav: cannot write " + path);
    f.write(reinterpret_cast<const char*>(out.data()),
            static_cast<std::streamsize>(out.size()));
}

}  // namespace subjam::wav
