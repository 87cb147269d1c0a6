// Point / coloring file formats and seeded instance generators.
#pragma once

#include <cstdint>
#include <string>

#include "udgc/coloring.hpp"
#include "udgc/udg.hpp"

namespace udgc {

// Point file: '#' comment lines, then "x y [multiplicity]" per line; ids are
// assigned 0-based in file order. Writing uses 17 significant digits so the
// round trip is lossless.
WeightedPointSet load_points(const std::string& path);
void save_points(const WeightedPointSet& ps, const std::string& path);

// Coloring file: "id color" per line.
// Fractional file: header "p q", then "id c1,c2,...,cq" per line.
Coloring load_coloring(const std::string& path);
void save_coloring(const Coloring& c, const std::string& path);
FractionalColoring load_fractional(const std::string& path);
void save_fractional(const FractionalColoring& c, const std::string& path);
bool looks_fractional(const std::string& path);  // header sniff

// Generators (deterministic; byte-identical across platforms).
WeightedPointSet gen_uniform_box(int n, double width, double height,
                                 uint64_t seed);
WeightedPointSet gen_grid(double step, double width, double height);
// Strip instance: uniform in [0, length) x [0, sqrt(3)/2).
WeightedPointSet gen_strip(int n, double length, uint64_t seed);

}  // namespace udgc
