#include "coxkit/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "coxkit/matrix.hpp"
#include "json.hpp"

namespace coxkit {

namespace {

std::string join_indices(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << "}";
    return os.str();
}

bool is_primitive(const std::vector<long long>& ray) {
    long long g = 0;
    for (long long x : ray) g = std::gcd(g, x);
    return g == 1;
}

long long binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    long long r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * static_cast<long long>(n - i) / static_cast<long long>(i + 1);
    return r;
}

}  // namespace

void Fan::normalize() {
    for (auto& cone : max_cones) std::sort(cone.begin(), cone.end());
}

std::vector<std::string> validate(const Fan& fan) {
    std::vector<std::string> bad;
    Fan f = fan;
    f.normalize();
    const std::size_t n = f.rank;

    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        if (f.rays[i].size() != n) {
            bad.push_back("ray " + std::to_string(i) + " has wrong length");
            continue;
        }
        if (!is_primitive(f.rays[i])) bad.push_back("ray " + std::to_string(i) + " not primitive");
        for (std::size_t j = 0; j < i; ++j)
            if (f.rays[j] == f.rays[i])
                bad.push_back("ray " + std::to_string(i) + " duplicates ray " + std::to_string(j));
    }

    if (n == 0) {
        if (!f.rays.empty()) bad.push_back("rank-0 fan must have no rays");
        if (f.max_cones.size() != 1 || !f.max_cones[0].empty())
            bad.push_back("rank-0 fan must consist of the single zero cone");
        return bad;
    }

    if (f.max_cones.empty()) bad.push_back("fan has no maximal cones");

    bool cones_well_formed = true;
    for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
        const auto& cone = f.max_cones[c];
        bool ok = cone.size() == n;
        if (!ok) bad.push_back("max cone " + std::to_string(c) + " does not have " + std::to_string(n) + " rays");
        for (std::size_t k = 0; ok && k < cone.size(); ++k) {
            if (cone[k] < 0 || static_cast<std::size_t>(cone[k]) >= f.rays.size() ||
                f.rays[cone[k]].size() != n) {
                bad.push_back("max cone " + std::to_string(c) + " has invalid ray index");
                ok = false;
            } else if (k > 0 && cone[k] == cone[k - 1]) {
                bad.push_back("max cone " + std::to_string(c) + " repeats a ray");
                ok = false;
            }
        }
        if (!ok) {
            cones_well_formed = false;
            continue;
        }
        for (std::size_t d = 0; d < c; ++d)
            if (f.max_cones[d] == cone)
                bad.push_back("max cone " + std::to_string(c) + " duplicates max cone " + std::to_string(d));
        RationalMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t k = 0; k < n; ++k) m.at(r, k) = f.rays[cone[r]][k];
        const Rational det = m.determinant();
        if (det != 1 && det != -1)
            bad.push_back("max cone " + std::to_string(c) + " is not smooth (determinant " +
                          to_string(det) + ")");
    }
    if (!cones_well_formed) return bad;

    std::vector<char> used(f.rays.size(), 0);
    for (const auto& cone : f.max_cones)
        for (int idx : cone) used[idx] = 1;
    for (std::size_t r = 0; r < used.size(); ++r)
        if (!used[r]) bad.push_back("ray " + std::to_string(r) + " is not in any max cone");

    // Completeness proxy: every ridge in exactly two max cones, and the
    // max-cone adjacency graph connected.
    std::map<std::vector<int>, std::vector<std::size_t>> ridges;
    for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
        const auto& cone = f.max_cones[c];
        for (std::size_t skip = 0; skip < cone.size(); ++skip) {
            std::vector<int> ridge;
            for (std::size_t k = 0; k < cone.size(); ++k)
                if (k != skip) ridge.push_back(cone[k]);
            ridges[ridge].push_back(c);
        }
    }
    for (const auto& [ridge, owners] : ridges)
        if (owners.size() != 2)
            bad.push_back("ridge " + join_indices(ridge) + " in " + std::to_string(owners.size()) +
                          " max cone(s), expected 2");

    if (!f.max_cones.empty()) {
        std::vector<char> seen(f.max_cones.size(), 0);
        std::queue<std::size_t> todo;
        todo.push(0);
        seen[0] = 1;
        while (!todo.empty()) {
            const std::size_t c = todo.front();
            todo.pop();
            for (const auto& [ridge, owners] : ridges)
                if (owners.size() == 2 && (owners[0] == c || owners[1] == c)) {
                    const std::size_t other = owners[0] == c ? owners[1] : owners[0];
                    if (!seen[other]) {
                        seen[other] = 1;
                        todo.push(other);
                    }
                }
        }
        if (!std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; }))
            bad.push_back("max-cone adjacency graph is not connected");
    }

    return bad;
}

void require_valid(const Fan& fan) {
    const auto bad = validate(fan);
    if (bad.empty()) return;
    std::string msg = "invalid fan";
    if (!fan.name.empty()) msg += " '" + fan.name + "'";
    msg += ":";
    for (const auto& b : bad) msg += " " + b + ";";
    throw InvalidFanError(msg);
}

std::vector<std::set<std::vector<int>>> faces_by_dimension(const Fan& fan) {
    Fan f = fan;
    f.normalize();
    std::vector<std::set<std::vector<int>>> faces(f.rank + 1);
    for (const auto& cone : f.max_cones) {
        const std::size_t n = cone.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            std::vector<int> face;
            for (std::size_t k = 0; k < n; ++k)
                if (mask & (std::size_t{1} << k)) face.push_back(cone[k]);
            faces[face.size()].insert(face);
        }
    }
    return faces;
}

ConeCounts cone_counts(const Fan& fan) {
    require_valid(fan);
    const auto faces = faces_by_dimension(fan);
    ConeCounts cc;
    for (const auto& level : faces) cc.counts.push_back(level.size());
    return cc;
}

std::vector<std::size_t> betti(const Fan& fan) {
    const ConeCounts cc = cone_counts(fan);
    const std::size_t n = fan.rank;
    std::vector<std::size_t> b(n + 1, 0);
    for (std::size_t k = 0; k <= n; ++k) {
        long long acc = 0;
        for (std::size_t i = k; i <= n; ++i) {
            const long long term = binomial(i, k) * static_cast<long long>(cc.counts[n - i]);
            acc += ((i - k) % 2 == 0) ? term : -term;
        }
        if (acc < 0)
            throw DualityError("negative Betti number b_" + std::to_string(k) + " = " + std::to_string(acc));
        b[k] = static_cast<std::size_t>(acc);
    }
    for (std::size_t k = 0; k <= n; ++k)
        if (b[k] != b[n - k])
            throw DualityError("Betti numbers are not palindromic: b_" + std::to_string(k) + " = " +
                               std::to_string(b[k]) + " but b_" + std::to_string(n - k) + " = " +
                               std::to_string(b[n - k]));
    return b;
}

Fan star_subdivide(const Fan& fan, std::vector<int> cone) {
    require_valid(fan);
    std::sort(cone.begin(), cone.end());
    if (cone.size() < 2) throw NotAFaceError("star subdivision needs a cone with at least 2 rays");
    for (std::size_t k = 0; k < cone.size(); ++k) {
        if (cone[k] < 0 || static_cast<std::size_t>(cone[k]) >= fan.rays.size())
            throw NotAFaceError("cone index out of range");
        if (k > 0 && cone[k] == cone[k - 1]) throw NotAFaceError("cone repeats a ray");
    }

    Fan f = fan;
    f.normalize();
    const auto contains = [&](const std::vector<int>& outer) {
        return std::includes(outer.begin(), outer.end(), cone.begin(), cone.end());
    };
    if (std::none_of(f.max_cones.begin(), f.max_cones.end(), contains))
        throw NotAFaceError("cone " + join_indices(cone) + " is not a face of the fan");

    std::vector<long long> fresh(f.rank, 0);
    for (int idx : cone)
        for (std::size_t k = 0; k < f.rank; ++k) fresh[k] += f.rays[idx][k];
    long long g = 0;
    for (long long x : fresh) g = std::gcd(g, x);
    if (g > 1)
        for (auto& x : fresh) x /= g;

    Fan out;
    out.rank = f.rank;
    out.rays = f.rays;
    out.rays.push_back(fresh);
    const int fresh_index = static_cast<int>(out.rays.size()) - 1;
    out.name = f.name.empty() ? "" : f.name + ".bl" + join_indices(cone);

    for (const auto& mc : f.max_cones) {
        if (!contains(mc)) {
            out.max_cones.push_back(mc);
            continue;
        }
        for (int replaced : cone) {
            std::vector<int> piece;
            for (int idx : mc)
                if (idx != replaced) piece.push_back(idx);
            piece.push_back(fresh_index);
            std::sort(piece.begin(), piece.end());
            out.max_cones.push_back(piece);
        }
    }
    require_valid(out);
    return out;
}

Fan product_fan(const Fan& x, const Fan& y) {
    require_valid(x);
    require_valid(y);
    Fan p;
    p.rank = x.rank + y.rank;
    for (const auto& r : x.rays) {
        std::vector<long long> e(p.rank, 0);
        std::copy(r.begin(), r.end(), e.begin());
        p.rays.push_back(e);
    }
    for (const auto& r : y.rays) {
        std::vector<long long> e(p.rank, 0);
        std::copy(r.begin(), r.end(), e.begin() + static_cast<long>(x.rank));
        p.rays.push_back(e);
    }
    const int offset = static_cast<int>(x.rays.size());
    for (const auto& cx : x.max_cones)
        for (const auto& cy : y.max_cones) {
            std::vector<int> cone = cx;
            for (int idx : cy) cone.push_back(idx + offset);
            std::sort(cone.begin(), cone.end());
            p.max_cones.push_back(cone);
        }
    if (!x.name.empty() && !y.name.empty()) p.name = x.name + " x " + y.name;
    require_valid(p);
    return p;
}

Fan canonical_form(const Fan& fan) {
    Fan f = fan;
    f.normalize();
    std::vector<std::size_t> order(f.rays.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return f.rays[a] < f.rays[b]; });
    std::vector<int> relabel(f.rays.size());
    Fan out;
    out.rank = f.rank;
    out.name = f.name;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        relabel[order[pos]] = static_cast<int>(pos);
        out.rays.push_back(f.rays[order[pos]]);
    }
    for (const auto& cone : f.max_cones) {
        std::vector<int> c;
        for (int idx : cone) c.push_back(relabel[idx]);
        std::sort(c.begin(), c.end());
        out.max_cones.push_back(c);
    }
    std::sort(out.max_cones.begin(), out.max_cones.end());
    return out;
}

bool fans_equal(const Fan& a, const Fan& b) {
    const Fan ca = canonical_form(a);
    const Fan cb = canonical_form(b);
    return ca.rank == cb.rank && ca.rays == cb.rays && ca.max_cones == cb.max_cones;
}

Fan fan_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("fan JSON must be an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "name" && key != "rank" && key != "rays" && key != "max_cones")
            throw std::invalid_argument("unknown key '" + key + "' in fan JSON");
    }
    for (const char* key : {"rank", "rays", "max_cones"})
        if (!j.contains(key)) throw std::invalid_argument(std::string("fan JSON missing '") + key + "'");
    if (!j["rank"].is_number_unsigned()) throw std::invalid_argument("'rank' must be a non-negative integer");
    Fan f;
    f.rank = j["rank"].get<std::size_t>();
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw std::invalid_argument("'name' must be a string");
        f.name = j["name"].get<std::string>();
    }
    if (!j["rays"].is_array()) throw std::invalid_argument("'rays' must be an array");
    for (const auto& ray : j["rays"]) {
        if (!ray.is_array()) throw std::invalid_argument("each ray must be an array of integers");
        std::vector<long long> v;
        for (const auto& e : ray) {
            if (!e.is_number_integer()) throw std::invalid_argument("ray entries must be integers");
            v.push_back(e.get<long long>());
        }
        f.rays.push_back(v);
    }
    if (!j["max_cones"].is_array()) throw std::invalid_argument("'max_cones' must be an array");
    for (const auto& cone : j["max_cones"]) {
        if (!cone.is_array()) throw std::invalid_argument("each max cone must be an array of ray indices");
        std::vector<int> v;
        for (const auto& e : cone) {
            if (!e.is_number_integer()) throw std::invalid_argument("cone entries must be integers");
            v.push_back(e.get<int>());
        }
        f.max_cones.push_back(v);
    }
    f.normalize();
    return f;
}

namespace {

template <typename T>
void write_list_of_lists(std::ostringstream& os, const std::vector<std::vector<T>>& lists) {
    os << "[";
    for (std::size_t i = 0; i < lists.size(); ++i) {
        if (i) os << ", ";
        os << "[";
        for (std::size_t j = 0; j < lists[i].size(); ++j) {
            if (j) os << ", ";
            os << lists[i][j];
        }
        os << "]";
    }
    os << "]";
}

}  // namespace

std::string fan_to_json(const Fan& fan, int indent) {
    const std::string pad(indent > 0 ? indent : 0, ' ');
    const char* sep = indent > 0 ? "\n" : " ";
    std::ostringstream os;
    os << "{" << sep;
    if (!fan.name.empty())
        os << pad << "\"name\": " << nlohmann::json(fan.name).dump() << "," << sep;
    os << pad << "\"rank\": " << fan.rank << "," << sep;
    os << pad << "\"rays\": ";
    write_list_of_lists(os, fan.rays);
    os << "," << sep;
    os << pad << "\"max_cones\": ";
    write_list_of_lists(os, fan.max_cones);
    os << sep << "}";
    return os.str();
}

}  // namespace coxkit
