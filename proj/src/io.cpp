// Filesystem plumbing and deterministic serialization for run artifacts.
#include "io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "errors.hpp"

namespace tpns {

namespace fs = std::filesystem;

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw IoError("cannot create directory: " + dir);
}

bool dir_exists(const std::string& dir) {
    std::error_code ec;
    return fs::is_directory(dir, ec);
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path);
    out.write(content.data(), (std::streamsize)content.size());
    if (!out) throw IoError("write failed: " + path);
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::string s((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed: " + path);
    return s;
}

std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_json_file(const std::string& path, const ojson& j) {
    write_text(path, j.dump(2) + "\n");
}

void dump_field(const std::string& base, const Grid& g, const Field& f) {
    std::ofstream out(base + ".bin", std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + base + ".bin");
    for (const cd& z : f.data) {
        const double re = z.real();
        const double im = z.imag();
        out.write(reinterpret_cast<const char*>(&re), sizeof(double));
        out.write(reinterpret_cast<const char*>(&im), sizeof(double));
    }
    if (!out) throw IoError("write failed: " + base + ".bin");
    out.close();

    ojson side;
    side["representation"] =
        f.repr == Repr::spectral ? "spectral" : "physical";
    side["components"] = f.comps;
    side["n_temporal"] = g.par.n_temporal;
    side["n_spatial"] = g.par.n_spatial;
    side["box_half_length"] = g.par.box_half_length;
    side["period"] = g.par.period;
    side["lambda"] = g.par.lambda;
    write_json_file(base + ".json", side);
}

} // namespace tpns
