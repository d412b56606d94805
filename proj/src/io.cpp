#include "odat/io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace odat {
namespace {

uint32_t rd_u32(const unsigned char* p) {
    return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
           (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

uint16_t rd_u16(const unsigned char* p) {
    return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

void wr_u32(std::string& s, uint32_t v) {
    s.push_back(static_cast<char>(v & 0xff));
    s.push_back(static_cast<char>((v >> 8) & 0xff));
    s.push_back(static_cast<char>((v >> 16) & 0xff));
    s.push_back(static_cast<char>((v >> 24) & 0xff));
}

void wr_u16(std::string& s, uint16_t v) {
    s.push_back(static_cast<char>(v & 0xff));
    s.push_back(static_cast<char>((v >> 8) & 0xff));
}

}  // namespace

Wav read_wav(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("wav: cannot open " + path);
    std::string raw((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    const unsigned char* p = reinterpret_cast<const unsigned char*>(raw.data());
    size_t len = raw.size();
    if (len < 12 || std::memcmp(p, "RIFF", 4) != 0 || std::memcmp(p + 8, "WAVE", 4) != 0)
        throw IoError("wav: " + path + " is not a RIFF/WAVE file");

    Wav out;
    bool have_fmt = false;
    size_t pos = 12;
    while (pos + 8 <= len) {
        uint32_t chunk_len = rd_u32(p + pos + 4);
        const unsigned char* body = p + pos + 8;
        if (pos + 8 + chunk_len > len)
            throw IoError("wav: truncated chunk at byte " + std::to_string(pos));
        if (std::memcmp(p + pos, "fmt ", 4) == 0) {
            if (chunk_len < 16) throw IoError("wav: fmt chunk too short");
            uint16_t format = rd_u16(body);
            uint16_t channels = rd_u16(body + 2);
            uint32_t rate = rd_u32(body + 4);
            uint16_t bits = rd_u16(body + 14);
            if (format != 1) throw IoError("wav: only PCM supported, got format " + std::to_string(format));
            if (channels != 1) throw IoError("wav: only mono supported, got " + std::to_string(channels) + " channels");
            if (bits != 16) throw IoError("wav: only 16-bit supported, got " + std::to_string(bits));
            out.fs = rate;
            have_fmt = true;
        } else if (std::memcmp(p + pos, "data", 4) == 0) {
            if (!have_fmt) throw IoError("wav: data chunk before fmt chunk");
            size_t count = chunk_len / 2;
            out.samples.resize(count);
            for (size_t i = 0; i < count; ++i) {
                int16_t v = static_cast<int16_t>(rd_u16(body + 2 * i));
                out.samples[i] = v / 32768.0;
            }
            return out;
        }
        pos += 8 + chunk_len + (chunk_len & 1);  // chunks are word-aligned
    }
    throw IoError("wav: " + path + (have_fmt ? " has no data chunk" : " has no fmt chunk"));
}

void write_wav(const std::string& path, const Wav& wav) {
    if (wav.fs <= 0.0) throw ConfigError("wav: sample rate must be positive");
    uint32_t rate = static_cast<uint32_t>(std::lround(wav.fs));
    uint32_t data_len = static_cast<uint32_t>(wav.samples.size() * 2);

    std::string s;
    s.reserve(44 + data_len);
    s += "RIFF";
    wr_u32(s, 36 + data_len);
    s += "WAVEfmt ";
    wr_u32(s, 16);
    wr_u16(s, 1);   // PCM
    wr_u16(s, 1);   // mono
    wr_u32(s, rate);
    wr_u32(s, rate * 2);
    wr_u16(s, 2);
    wr_u16(s, 16);
    s += "data";
    wr_u32(s, data_len);
    for (double x : wav.samples) {
        double scaled = std::rint(x * 32768.0);
        if (scaled > 32767.0) scaled = 32767.0;
        if (scaled < -32768.0) scaled = -32768.0;
        wr_u16(s, static_cast<uint16_t>(static_cast<int16_t>(scaled)));
    }
    atomic_write(path, s);
}

std::vector<double> read_csv_column(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("csv: cannot open " + path);
    std::vector<double> out;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        size_t used = 0;
        double v;
        try {
            v = std::stod(line, &used);
        } catch (const std::exception&) {
            throw IoError("csv: " + path + ":" + std::to_string(lineno) + ": not a number: " + line);
        }
        while (used < line.size() && (line[used] == ' ' || line[used] == '\t')) ++used;
        if (used != line.size())
            throw IoError("csv: " + path + ":" + std::to_string(lineno) + ": trailing junk: " + line);
        out.push_back(v);
    }
    return out;
}

void atomic_write(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(target.parent_path(), ec);
        if (ec) throw IoError("write: cannot create directory " + target.parent_path().string());
    }
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("write: cannot open " + tmp.string());
        f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        f.flush();
        if (!f) throw IoError("write: failed writing " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("write: cannot rename into place: " + path);
    }
}

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_e17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17e", x);
    return buf;
}

}  // namespace odat
