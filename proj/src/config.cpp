#include "swarmseg/config.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace swarmseg {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return {};
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError(path + ": cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

double parse_real(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad numeric value for " + key + ": '" + value + "'");
    }
}

long long parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer value for " + key + ": '" + value + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad seed value for " + key + ": '" + value + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

Colormap parse_colormap(const std::string& value) {
    // "pos:r,g,b; pos:r,g,b; ..."
    Colormap cmap;
    for (const std::string& piece : split(value, ';')) {
        if (piece.empty())
            continue;
        const std::size_t colon = piece.find(':');
        if (colon == std::string::npos)
            throw ConfigError("config: colormap anchor missing ':' in '" + piece + "'");
        Colormap::Anchor a;
        a.pos = parse_real("colormap", trim(piece.substr(0, colon)));
        const std::vector<std::string> rgb = split(piece.substr(colon + 1), ',');
        if (rgb.size() != 3)
            throw ConfigError("config: colormap anchor needs r,g,b in '" + piece + "'");
        for (int c = 0; c < 3; ++c) {
            const long long v = parse_int("colormap", rgb[c]);
            if (v < 0 || v > 255)
                throw ConfigError("config: colormap channel out of range in '" + piece + "'");
            a.rgb[c] = static_cast<std::uint8_t>(v);
        }
        cmap.anchors.push_back(a);
    }
    if (cmap.anchors.size() < 2)
        throw ConfigError("config: colormap needs at least two anchors");
    return cmap;
}

std::vector<VoidSpec> parse_voids(const std::string& value) {
    std::vector<VoidSpec> voids;
    for (const std::string& piece : split(value, ';')) {
        if (piece.empty())
            continue;
        const std::vector<std::string> nums = split(piece, ',');
        if (nums.size() != 4)
            throw ConfigError("config: void needs cx,cy,rx,ry in '" + piece + "'");
        voids.push_back({parse_real("voids", nums[0]), parse_real("voids", nums[1]),
                         parse_real("voids", nums[2]), parse_real("voids", nums[3])});
    }
    return voids;
}

std::string fmt_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

EmitFlags parse_emit_flags(const std::string& value) {
    EmitFlags flags{false, false, false, false};
    for (const std::string& piece : split(value, ',')) {
        if (piece == "all")
            flags = EmitFlags{true, true, true, true};
        else if (piece == "none")
            flags = EmitFlags{false, false, false, false};
        else if (piece == "mask")
            flags.mask = true;
        else if (piece == "overlay")
            flags.overlay = true;
        else if (piece == "composite")
            flags.composite = true;
        else if (piece == "saliency")
            flags.saliency = true;
        else
            throw ConfigError("config: unknown emit flag '" + piece + "'");
    }
    return flags;
}

std::vector<std::pair<std::string, std::string>> parse_kv_text(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> entries;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#')
            continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(line_no) + " has no '='");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config: line " + std::to_string(line_no) + " has empty key");
        entries.emplace_back(key, value);
    }
    return entries;
}

AnalysisConfig parse_analysis_config(const std::string& path) {
    AnalysisConfig cfg;
    for (const auto& [key, value] : parse_kv_text(read_file(path))) {
        if (key == "input")
            cfg.inputs.push_back(value);
        else if (key == "out")
            cfg.out_dir = value;
        else if (key == "pso.swarm_size")
            cfg.pso.swarm_size = static_cast<int>(parse_int(key, value));
        else if (key == "pso.iterations")
            cfg.pso.max_iterations = static_cast<int>(parse_int(key, value));
        else if (key == "pso.bound_lo")
            cfg.pso.bound_lo = parse_real(key, value);
        else if (key == "pso.bound_hi")
            cfg.pso.bound_hi = parse_real(key, value);
        else if (key == "pso.inertia")
            cfg.pso.inertia = parse_real(key, value);
        else if (key == "pso.cognitive")
            cfg.pso.cognitive = parse_real(key, value);
        else if (key == "pso.social")
            cfg.pso.social = parse_real(key, value);
        else if (key == "pso.velocity_clamp_fraction")
            cfg.pso.velocity_clamp_fraction = parse_real(key, value);
        else if (key == "pso.seed")
            cfg.pso.seed = parse_u64(key, value);
        else if (key == "canny.sigma")
            cfg.fitness.canny.sigma = parse_real(key, value);
        else if (key == "canny.low")
            cfg.fitness.canny.low = parse_real(key, value);
        else if (key == "canny.high")
            cfg.fitness.canny.high = parse_real(key, value);
        else if (key == "fitness.penalty_low")
            cfg.fitness.penalty_low = parse_real(key, value);
        else if (key == "fitness.penalty_high")
            cfg.fitness.penalty_high = parse_real(key, value);
        else if (key == "fitness.penalty_value")
            cfg.fitness.penalty_value =
                value == "auto" ? std::optional<double>{} : std::optional<double>{parse_real(key, value)};
        else if (key == "attention.floor")
            cfg.attention.floor = parse_real(key, value);
        else if (key == "attention.decay")
            cfg.attention.decay = parse_real(key, value);
        else if (key == "attention.patch_size")
            cfg.attention.patch_size = static_cast<int>(parse_int(key, value));
        else if (key == "attention.softmax_scale")
            cfg.attention.softmax_scale = value == "auto" ? 0.0 : parse_real(key, value);
        else if (key == "band.width")
            cfg.band_width = parse_real(key, value);
        else if (key == "holes.min_area")
            cfg.min_hole_area = static_cast<int>(parse_int(key, value));
        else if (key == "render.overlay_alpha")
            cfg.overlay_alpha = parse_real(key, value);
        else if (key == "colormap")
            cfg.colormap = parse_colormap(value);
        else if (key == "emit")
            cfg.emit = parse_emit_flags(value);
        else
            throw ConfigError("config: unknown key '" + key + "'");
    }
    return cfg;
}

PhantomSpec parse_phantom_spec(const std::string& path) {
    PhantomSpec spec;
    for (const auto& [key, value] : parse_kv_text(read_file(path))) {
        if (key == "phantom.width")
            spec.width = static_cast<int>(parse_int(key, value));
        else if (key == "phantom.height")
            spec.height = static_cast<int>(parse_int(key, value));
        else if (key == "phantom.background_mean")
            spec.background_mean = parse_real(key, value);
        else if (key == "phantom.background_std")
            spec.background_std = parse_real(key, value);
        else if (key == "phantom.deposit_mean")
            spec.deposit_mean = parse_real(key, value);
        else if (key == "phantom.deposit_std")
            spec.deposit_std = parse_real(key, value);
        else if (key == "phantom.u_depth")
            spec.u_depth = parse_real(key, value);
        else if (key == "phantom.u_width")
            spec.u_width = parse_real(key, value);
        else if (key == "phantom.voids")
            spec.voids = parse_voids(value);
        else if (key == "phantom.seed")
            spec.seed = parse_u64(key, value);
        else
            throw ConfigError("config: unknown key '" + key + "'");
    }
    return spec;
}

std::string serialize_config(const AnalysisConfig& cfg) {
    std::ostringstream out;
    for (const std::string& input : cfg.inputs)
        out << "input = " << input << "\n";
    out << "out = " << cfg.out_dir << "\n";
    out << "pso.swarm_size = " << cfg.pso.swarm_size << "\n";
    out << "pso.iterations = " << cfg.pso.max_iterations << "\n";
    out << "pso.bound_lo = " << fmt_real(cfg.pso.bound_lo) << "\n";
    out << "pso.bound_hi = " << fmt_real(cfg.pso.bound_hi) << "\n";
    out << "pso.inertia = " << fmt_real(cfg.pso.inertia) << "\n";
    out << "pso.cognitive = " << fmt_real(cfg.pso.cognitive) << "\n";
    out << "pso.social = " << fmt_real(cfg.pso.social) << "\n";
    out << "pso.velocity_clamp_fraction = " << fmt_real(cfg.pso.velocity_clamp_fraction) << "\n";
    out << "pso.seed = " << cfg.pso.seed << "\n";
    out << "canny.sigma = " << fmt_real(cfg.fitness.canny.sigma) << "\n";
    out << "canny.low = " << fmt_real(cfg.fitness.canny.low) << "\n";
    out << "canny.high = " << fmt_real(cfg.fitness.canny.high) << "\n";
    out << "fitness.penalty_low = " << fmt_real(cfg.fitness.penalty_low) << "\n";
    out << "fitness.penalty_high = " << fmt_real(cfg.fitness.penalty_high) << "\n";
    out << "fitness.penalty_value = "
        << (cfg.fitness.penalty_value ? fmt_real(*cfg.fitness.penalty_value) : "auto") << "\n";
    out << "attention.floor = " << fmt_real(cfg.attention.floor) << "\n";
    out << "attention.decay = " << fmt_real(cfg.attention.decay) << "\n";
    out << "attention.patch_size = " << cfg.attention.patch_size << "\n";
    out << "attention.softmax_scale = "
        << (cfg.attention.softmax_scale > 0.0 ? fmt_real(cfg.attention.softmax_scale) : "auto")
        << "\n";
    out << "band.width = " << fmt_real(cfg.band_width) << "\n";
    out << "holes.min_area = " << cfg.min_hole_area << "\n";
    out << "render.overlay_alpha = " << fmt_real(cfg.overlay_alpha) << "\n";
    out << "colormap = ";
    for (std::size_t i = 0; i < cfg.colormap.anchors.size(); ++i) {
        const auto& a = cfg.colormap.anchors[i];
        if (i)
            out << "; ";
        out << fmt_real(a.pos) << ':' << static_cast<int>(a.rgb[0]) << ','
            << static_cast<int>(a.rgb[1]) << ',' << static_cast<int>(a.rgb[2]);
    }
    out << "\n";
    out << "emit = ";
    if (cfg.emit.mask && cfg.emit.overlay && cfg.emit.composite && cfg.emit.saliency) {
        out << "all";
    } else {
        bool first = true;
        auto add = [&](bool on, const char* name) {
            if (!on)
                return;
            if (!first)
                out << ',';
            out << name;
            first = false;
        };
        add(cfg.emit.mask, "mask");
        add(cfg.emit.overlay, "overlay");
        add(cfg.emit.composite, "composite");
        add(cfg.emit.saliency, "saliency");
        if (first)
            out << "none";
    }
    out << "\n";
    return out.str();
}

std::string config_digest(const AnalysisConfig& cfg) {
    const std::string text = serialize_config(cfg);
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

} // namespace swarmseg
