#include "kli/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kli/errors.hpp"
#include "kli/hopf.hpp"

namespace kli::io {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    for (;;) {
        const auto pos = s.find(sep);
        out.push_back(trim(s.substr(0, pos)));
        if (pos == std::string_view::npos) return out;
        s.remove_prefix(pos + 1);
    }
}

json quaternion_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

Quaternion quaternion_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw ParseError("expected a 4-element quaternion array");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

}  // namespace

std::string format_real(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

double parse_real(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw ParseError("'" + std::string(text) + "' is not a finite real number");
    }
    return v;
}

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> out;
    for (const auto field : split(text, ',')) out.push_back(parse_real(field));
    return out;
}

Quaternion parse_quaternion(std::string_view text) {
    const auto v = parse_real_list(text);
    if (v.size() != 4) {
        throw ParseError("quaternion '" + std::string(text) + "' must have 4 components w,x,y,z");
    }
    return {v[0], v[1], v[2], v[3]};
}

std::vector<QuaternionPair> read_pairs(std::istream& in) {
    std::vector<QuaternionPair> pairs;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        const auto body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        try {
            const auto v = parse_real_list(body);
            if (v.size() != 8) {
                throw ParseError("expected 8 values pw,px,py,pz,rw,rx,ry,rz, got " + std::to_string(v.size()));
            }
            pairs.push_back({UnitQuaternion::from(v[0], v[1], v[2], v[3]),
                             UnitQuaternion::from(v[4], v[5], v[6], v[7])});
        } catch (const InputError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return pairs;
}

std::vector<QuaternionPair> read_pairs(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open pair file " + path.string());
    return read_pairs(in);
}

void write_curve_csv(std::ostream& out, const InterpolationCurve& curve, bool hopf) {
    out << (hopf ? "t,w,x,y,z,hx,hy,hz\n" : "t,w,x,y,z\n");
    for (const auto& s : curve.samples) {
        out << format_real(s.t) << ',' << format_real(s.q.w()) << ',' << format_real(s.q.x()) << ','
            << format_real(s.q.y()) << ',' << format_real(s.q.z());
        if (hopf) {
            const auto h = hopf_project(s.q);
            out << ',' << format_real(h.x) << ',' << format_real(h.y) << ',' << format_real(h.z);
        }
        out << '\n';
    }
}

void write_curve_json(std::ostream& out, const InterpolationCurve& curve, bool hopf,
                      const std::optional<KliConfig>& cfg, std::string_view method) {
    json samples = json::array();
    for (const auto& s : curve.samples) {
        json row = {{"t", s.t}, {"w", s.q.w()}, {"x", s.q.x()}, {"y", s.q.y()}, {"z", s.q.z()}};
        if (hopf) {
            const auto h = hopf_project(s.q);
            row["hx"] = h.x;
            row["hy"] = h.y;
            row["hz"] = h.z;
        }
        samples.push_back(std::move(row));
    }
    json doc = {
        {"method", std::string(method)},
        {"converged_time", curve.converged_time},
        {"target", quaternion_json(curve.target)},
        {"samples", std::move(samples)},
    };
    if (cfg) {
        doc["config"] = {
            {"epsilon", cfg->epsilon()},  {"delta", cfg->delta()}, {"step", cfg->step_h()},
            {"t_max", cfg->t_max()},      {"shortest_path", cfg->shortest_path()},
        };
    }
    out << doc.dump(2) << '\n';
}

InterpolationCurve read_curve_json(std::istream& in) {
    try {
        const json doc = json::parse(in);
        InterpolationCurve curve;
        curve.converged_time = doc.at("converged_time").get<double>();
        curve.target = UnitQuaternion::from(quaternion_from_json(doc.at("target")));
        for (const auto& row : doc.at("samples")) {
            curve.samples.push_back(
                {row.at("t").get<double>(),
                 UnitQuaternion::from(row.at("w").get<double>(), row.at("x").get<double>(),
                                      row.at("y").get<double>(), row.at("z").get<double>())});
        }
        return curve;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed curve JSON: ") + e.what());
    }
}

void write_frames_csv(std::ostream& out, const std::vector<Frame>& frames) {
    out << "t,point,x,y,z\n";
    for (const auto& f : frames) {
        for (std::size_t i = 0; i < f.points.size(); ++i) {
            const auto& v = f.points[i];
            out << format_real(f.t) << ',' << std::to_string(i) << ',' << format_real(v.x) << ',' << format_real(v.y) << ','
                << format_real(v.z) << '\n';
        }
    }
}

void write_frames_json(std::ostream& out, const std::vector<Frame>& frames) {
    json doc = json::array();
    for (const auto& f : frames) {
        json points = json::array();
        for (const auto& v : f.points) points.push_back({v.x, v.y, v.z});
        doc.push_back({{"t", f.t}, {"q", quaternion_json(f.q)}, {"points", std::move(points)}});
    }
    out << doc.dump(2) << '\n';
}

void write_comparison_json(std::ostream& out, const std::vector<PathComparison>& comparisons) {
    auto one = [](const PathComparison& c) {
        return json{{"max_deviation", c.max_deviation},
                    {"endpoint_error", c.endpoint_error},
                    {"converged_time", c.converged_time},
                    {"sample_count", c.sample_count}};
    };
    json doc;
    if (comparisons.size() == 1) {
        doc = one(comparisons.front());
    } else {
        doc = json::array();
        for (const auto& c : comparisons) doc.push_back(one(c));
    }
    out << doc.dump(2) << '\n';
}

}  // namespace kli::io
