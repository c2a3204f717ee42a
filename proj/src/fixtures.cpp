#include "coxkit/fixtures.hpp"

#include <map>
#include <stdexcept>

namespace coxkit {

namespace {

Fan point_fan() {
    Fan f;
    f.rank = 0;
    f.max_cones = {{}};
    f.name = "point";
    return f;
}

Fan p1() {
    Fan f;
    f.rank = 1;
    f.rays = {{1}, {-1}};
    f.max_cones = {{0}, {1}};
    f.name = "P1";
    return f;
}

Fan p2() {
    Fan f;
    f.rank = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, -1}};
    f.max_cones = {{0, 1}, {1, 2}, {0, 2}};
    f.name = "P2";
    return f;
}

Fan p3() {
    Fan f;
    f.rank = 3;
    f.rays = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}};
    f.max_cones = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    f.name = "P3";
    return f;
}

Fan named(Fan f, const std::string& name) {
    f.name = name;
    return f;
}

std::map<std::string, Fan> build_all() {
    std::map<std::string, Fan> fans;
    fans["point"] = point_fan();
    fans["p1"] = p1();
    fans["p2"] = p2();
    fans["p3"] = p3();
    fans["p1xp1"] = named(product_fan(p1(), p1()), "P1xP1");
    for (long long a = 0; a <= 3; ++a)
        fans["f" + std::to_string(a)] = hirzebruch(a);

    // Del Pezzo surfaces: P2 blown up at 1..3 torus-fixed points.
    const Fan dp1 = named(star_subdivide(p2(), {0, 1}), "dP1");
    const Fan dp2 = named(star_subdivide(dp1, {1, 2}), "dP2");
    const Fan dp3 = named(star_subdivide(dp2, {0, 2}), "dP3");
    fans["dp1"] = dp1;
    fans["dp2"] = dp2;
    fans["dp3"] = dp3;

    // Blow-ups of P3 at torus-fixed centers.
    fans["p3bl1"] = named(star_subdivide(p3(), {0, 1, 2}), "P3.bl-point");
    fans["p3bl2"] =
        named(star_subdivide(star_subdivide(p3(), {1, 2, 3}), {0, 2, 3}), "P3.bl-2points");
    fans["p3blline"] = named(star_subdivide(p3(), {0, 1}), "P3.bl-line");

    fans["p2xp1"] = named(product_fan(p2(), p1()), "P2xP1");
    fans["p1xp1xp1"] = named(product_fan(product_fan(p1(), p1()), p1()), "P1xP1xP1");
    fans["dp1xp1"] = named(product_fan(dp1, p1()), "dP1xP1");
    fans["dp2xp1"] = named(product_fan(dp2, p1()), "dP2xP1");
    fans["dp3xp1"] = named(product_fan(dp3, p1()), "dP3xP1");
    return fans;
}

const std::map<std::string, Fan>& all() {
    static const std::map<std::string, Fan> fans = build_all();
    return fans;
}

}  // namespace

Fan hirzebruch(long long a) {
    if (a < 0) throw std::invalid_argument("Hirzebruch parameter must be >= 0");
    Fan f;
    f.rank = 2;
    f.rays = {{-1, a}, {0, 1}, {1, 0}, {0, -1}};
    f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    f.name = "F" + std::to_string(a);
    return f;
}

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fan] : all()) {
            (void)fan;
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

bool has_fixture(const std::string& name) { return all().count(name) > 0; }

Fan fixture(const std::string& name) {
    const auto it = all().find(name);
    if (it == all().end()) throw std::out_of_range("unknown fixture '" + name + "'");
    return it->second;
}

}  // namespace coxkit
