#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "udgc/io.hpp"

using namespace udgc;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("io_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
    void write(const std::string& content) const {
        std::ofstream f(path);
        f << content;
    }
};

}  // namespace

TEST_CASE("points round trip losslessly, multiplicity column optional") {
    WeightedPointSet ps;
    ps.points.push_back({0, {0.1, -2.5}, 1});
    ps.points.push_back({1, {1.0 / 3.0, 7.25e-13}, 4});
    ps.points.push_back({2, {-0.0, 1e17}, 1});

    TempFile f("pts_roundtrip.pts");
    save_points(ps, f.path);
    const auto back = load_points(f.path);
    REQUIRE(back.size() == 3);
    for (int i = 0; i < 3; ++i) {
        REQUIRE(back.points[i].id == i);
        REQUIRE(back.points[i].pos.x == ps.points[i].pos.x);  // bit-exact
        REQUIRE(back.points[i].pos.y == ps.points[i].pos.y);
        REQUIRE(back.points[i].multiplicity == ps.points[i].multiplicity);
    }

    // the written file omits the column when multiplicity is 1
    std::ifstream in(f.path);
    std::string l0, l1;
    std::getline(in, l0);
    std::getline(in, l1);
    CHECK(l0.find(' ') == l0.rfind(' '));   // two fields
    CHECK(l1.find(' ') != l1.rfind(' '));   // three fields
    CHECK(l1.substr(l1.rfind(' ') + 1) == "4");
}

TEST_CASE("load_points accepts comments and blanks, rejects junk") {
    TempFile f("pts_parse.pts");
    f.write("# header comment\n\n   \t\n0.5 0.25\n  # indented comment\n1 2 3\n");
    const auto ps = load_points(f.path);
    REQUIRE(ps.size() == 2);
    CHECK(ps.points[0].pos.x == 0.5);
    CHECK(ps.points[0].multiplicity == 1);
    CHECK(ps.points[1].multiplicity == 3);

    TempFile bad("pts_bad.pts");
    bad.write("0.5 0.25\noops\n");
    CHECK_THROWS_WITH_AS(load_points(bad.path),
                         doctest::Contains(":2: expected"), std::runtime_error);
    CHECK_THROWS_AS(load_points("no_such_file.pts"), std::runtime_error);
}

TEST_CASE("coloring round trip") {
    Coloring c;
    c.color = {{0, 3}, {1, 0}, {5, 2}};
    c.palette_size = 4;
    TempFile f("coloring.txt");
    save_coloring(c, f.path);
    const auto back = load_coloring(f.path);
    CHECK(back.color == c.color);
    CHECK(back.palette_size == 4);  // reconstructed as max color + 1
}

TEST_CASE("fractional round trip and header errors") {
    FractionalColoring c;
    c.p = 60;
    c.q = 3;
    c.sets = {{0, {0, 21, 40}}, {1, {1, 22, 41}}, {2, {5, 6, 7}}};
    TempFile f("fractional.txt");
    save_fractional(c, f.path);
    const auto back = load_fractional(f.path);
    CHECK(back.p == 60);
    CHECK(back.q == 3);
    CHECK(back.sets == c.sets);

    std::ifstream in(f.path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "60 3");

    TempFile empty("fractional_empty.txt");
    empty.write("");
    CHECK_THROWS_AS(load_fractional(empty.path), std::runtime_error);
}

TEST_CASE("looks_fractional sniffs the set separator") {
    TempFile plain("sniff_plain.txt");
    plain.write("0 3\n1 0\n");
    CHECK_FALSE(looks_fractional(plain.path));

    TempFile frac("sniff_frac.txt");
    frac.write("60 3\n0 0,21,40\n");
    CHECK(looks_fractional(frac.path));

    TempFile empty("sniff_empty.txt");
    empty.write("");
    CHECK_FALSE(looks_fractional(empty.path));
}

TEST_CASE("generators are deterministic and in range") {
    SUBCASE("uniform box") {
        const auto a = gen_uniform_box(200, 12.5, 3.5, 42);
        const auto b = gen_uniform_box(200, 12.5, 3.5, 42);
        const auto c = gen_uniform_box(200, 12.5, 3.5, 43);
        REQUIRE(a.size() == 200);
        bool all_same = true, any_diff = false;
        for (int i = 0; i < 200; ++i) {
            REQUIRE(a.points[i].id == i);
            REQUIRE(a.points[i].multiplicity == 1);
            REQUIRE(a.points[i].pos.x >= 0.0);
            REQUIRE(a.points[i].pos.x < 12.5);
            REQUIRE(a.points[i].pos.y >= 0.0);
            REQUIRE(a.points[i].pos.y < 3.5);
            all_same = all_same && a.points[i].pos.x == b.points[i].pos.x &&
                       a.points[i].pos.y == b.points[i].pos.y;
            any_diff = any_diff || a.points[i].pos.x != c.points[i].pos.x;
        }
        CHECK(all_same);
        CHECK(any_diff);
        CHECK(gen_uniform_box(0, 1, 1, 0).size() == 0);
        CHECK_THROWS_AS(gen_uniform_box(-1, 1, 1, 0), std::invalid_argument);
        CHECK_THROWS_AS(gen_uniform_box(5, 0.0, 1, 0), std::invalid_argument);
    }
    SUBCASE("strip") {
        const double h = std::sqrt(3.0) / 2.0;
        const auto s = gen_strip(300, 25.0, 7);
        REQUIRE(s.size() == 300);
        for (const auto& wp : s.points) {
            REQUIRE(wp.pos.x >= 0.0);
            REQUIRE(wp.pos.x < 25.0);
            REQUIRE(wp.pos.y >= 0.0);
            REQUIRE(wp.pos.y < h);
        }
        const auto s2 = gen_strip(300, 25.0, 7);
        CHECK(s2.points[299].pos.x == s.points[299].pos.x);
        CHECK_THROWS_AS(gen_strip(1, 0.0, 0), std::invalid_argument);
    }
    SUBCASE("grid") {
        const auto g = gen_grid(0.5, 2.0, 1.0);
        REQUIRE(g.size() == 5 * 3);  // 0..4 x 0..2 inclusive
        CHECK(g.points[0].pos.x == 0.0);
        CHECK(g.points.back().pos.x == 2.0);
        CHECK(g.points.back().pos.y == 1.0);
        CHECK_THROWS_AS(gen_grid(0.0, 1, 1), std::invalid_argument);
    }
}

TEST_CASE("save_points fails loudly on unwritable paths") {
    WeightedPointSet ps;
    ps.points.push_back({0, {0, 0}, 1});
    CHECK_THROWS_AS(save_points(ps, "no_such_dir/x.pts"), std::runtime_error);
    Coloring c;
    c.color = {{0, 0}};
    CHECK_THROWS_AS(save_coloring(c, "no_such_dir/x.txt"), std::runtime_error);
}
