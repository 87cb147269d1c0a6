#include "udgc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "udgc/localsim.hpp"

namespace udgc {
namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return f;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return f;
}

void finish_out(std::ofstream& f, const std::string& path) {
    f.flush();
    if (!f.good()) throw std::runtime_error("write failed: " + path);
}

}  // namespace

WeightedPointSet load_points(const std::string& path) {
    std::ifstream f = open_in(path);
    WeightedPointSet ps;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream is(line);
        double x, y;
        int64_t mult = 1;
        if (!(is >> x >> y)) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected 'x y [multiplicity]'");
        }
        is >> mult;
        WeightedPoint p;
        p.id = static_cast<int>(ps.points.size());
        p.pos = {x, y};
        p.multiplicity = mult;
        ps.points.push_back(p);
    }
    return ps;
}

void save_points(const WeightedPointSet& ps, const std::string& path) {
    std::ofstream f = open_out(path);
    char buf[96];
    for (const WeightedPoint& p : ps.points) {
        if (p.multiplicity == 1) {
            std::snprintf(buf, sizeof buf, "%.17g %.17g", p.pos.x, p.pos.y);
            f << buf << '\n';
        } else {
            std::snprintf(buf, sizeof buf, "%.17g %.17g %lld", p.pos.x, p.pos.y,
                          static_cast<long long>(p.multiplicity));
            f << buf << '\n';
        }
    }
    finish_out(f, path);
}

Coloring load_coloring(const std::string& path) {
    std::ifstream f = open_in(path);
    Coloring c;
    int id, color;
    while (f >> id >> color) {
        c.color[id] = color;
        c.palette_size = std::max(c.palette_size, color + 1);
    }
    return c;
}

void save_coloring(const Coloring& c, const std::string& path) {
    std::ofstream f = open_out(path);
    for (const auto& [id, color] : c.color) f << id << ' ' << color << '\n';
    finish_out(f, path);
}

FractionalColoring load_fractional(const std::string& path) {
    std::ifstream f = open_in(path);
    FractionalColoring c;
    if (!(f >> c.p >> c.q)) throw std::runtime_error(path + ": missing 'p q' header");
    int id;
    while (f >> id) {
        std::string rest;
        if (!(f >> rest)) throw std::runtime_error(path + ": truncated set line");
        std::vector<int64_t>& set = c.sets[id];
        std::istringstream is(rest);
        std::string tok;
        while (std::getline(is, tok, ',')) set.push_back(std::stoll(tok));
    }
    return c;
}

void save_fractional(const FractionalColoring& c, const std::string& path) {
    std::ofstream f = open_out(path);
    f << c.p << ' ' << c.q << '\n';
    for (const auto& [id, set] : c.sets) {
        f << id << ' ';
        for (size_t i = 0; i < set.size(); ++i) {
            if (i) f << ',';
            f << set[i];
        }
        f << '\n';
    }
    finish_out(f, path);
}

bool looks_fractional(const std::string& path) {
    std::ifstream f = open_in(path);
    std::string first;
    if (!std::getline(f, first)) return false;
    // a fractional file starts "p q" and some later line contains a comma;
    // a plain coloring never contains one
    if (first.find(',') != std::string::npos) return true;
    std::string line;
    while (std::getline(f, line)) {
        if (line.find(',') != std::string::npos) return true;
    }
    return false;
}

// ---- generators ---------------------------------------------------------

WeightedPointSet gen_uniform_box(int n, double width, double height, uint64_t seed) {
    if (n < 0 || !(width > 0.0) || !(height > 0.0)) {
        throw std::invalid_argument("gen_uniform_box: bad parameters");
    }
    Rng rng(seed, 0xB0DBA5Eu);
    WeightedPointSet ps;
    for (int i = 0; i < n; ++i) {
        WeightedPoint p;
        p.id = i;
        p.pos = {rng.uniform01() * width, rng.uniform01() * height};
        p.multiplicity = 1;
        ps.points.push_back(p);
    }
    return ps;
}

WeightedPointSet gen_grid(double step, double width, double height) {
    if (!(step > 0.0) || !(width >= 0.0) || !(height >= 0.0)) {
        throw std::invalid_argument("gen_grid: bad parameters");
    }
    WeightedPointSet ps;
    int id = 0;
    const int nx = static_cast<int>(std::floor(width / step));
    const int ny = static_cast<int>(std::floor(height / step));
    for (int i = 0; i <= nx; ++i) {
        for (int j = 0; j <= ny; ++j) {
            ps.points.push_back({id++, {i * step, j * step}, 1});
        }
    }
    return ps;
}

WeightedPointSet gen_strip(int n, double length, uint64_t seed) {
    if (n < 0 || !(length > 0.0)) {
        throw std::invalid_argument("gen_strip: bad parameters");
    }
    Rng rng(seed, 0x57121Eu);
    WeightedPointSet ps;
    const double h = std::sqrt(3.0) / 2.0;
    for (int i = 0; i < n; ++i) {
        WeightedPoint p;
        p.id = i;
        p.pos = {rng.uniform01() * length, rng.uniform01() * h};
        p.multiplicity = 1;
        ps.points.push_back(p);
    }
    return ps;
}

}  // namespace udgc
