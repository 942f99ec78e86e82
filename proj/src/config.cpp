#include "psido/harness.hpp"

#include "psido/errors.hpp"

#include <charconv>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace psido {

namespace {

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

} // namespace

double parse_number(const std::string& text, const std::string& what)
{
    const std::string t = trim(text);
    double value = 0.0;
    const auto* end = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(t.data(), end, value);
    if (t.empty() || ec != std::errc{} || ptr != end) {
        throw ConfigError(what + ": cannot parse '" + text + "' as a number");
    }
    return value;
}

std::vector<double> parse_list(const std::string& text)
{
    std::vector<double> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!trim(item).empty()) {
            out.push_back(parse_number(item, "list"));
        }
    }
    return out;
}

Interval parse_interval(const std::string& text)
{
    const std::vector<double> v = parse_list(text);
    if (v.size() != 2) {
        throw ConfigError("expected an interval 'a,b', got '" + text + "'");
    }
    return {v[0], v[1]};
}

KeyValues parse_key_values(std::istream& in)
{
    KeyValues kv;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
        }
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

KeyValues load_key_values(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file " + path.string());
    }
    return parse_key_values(in);
}

ExperimentSpec spec_from_key_values(const KeyValues& kv)
{
    static const std::set<std::string> known{
        "potential", "state", "xdomain", "kdomain", "grid", "scheme", "L_y", "N_mu", "L_k", "N_xi", "P",
        "N_nu", "f_xdomain", "quad_order", "quad_ppu", "hbar", "sweep", "values", "oracle", "format", "note"};
    for (const auto& [key, value] : kv) {
        if (known.count(key) == 0) {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    const auto get = [&](const std::string& key) -> const std::string* {
        const auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };

    ExperimentSpec spec;
    if (const auto* v = get("potential")) {
        spec.potential = *v;
    }
    if (const auto* v = get("state")) {
        spec.state = *v;
    }
    if (const auto* v = get("xdomain")) {
        spec.x_domain = parse_interval(*v);
    }
    if (const auto* v = get("kdomain")) {
        spec.k_domain = parse_interval(*v);
    }
    if (const auto* v = get("grid")) {
        const std::vector<double> g = parse_list(*v);
        if (g.size() != 2 || g[0] < 2 || g[1] < 2) {
            throw ConfigError("grid must be NX,NK with both >= 2");
        }
        spec.nx = static_cast<std::size_t>(g[0]);
        spec.nk = static_cast<std::size_t>(g[1]);
    }

    QuadratureSpec quad;
    if (const auto* v = get("quad_order")) {
        quad.order = static_cast<int>(parse_number(*v, "quad_order"));
    }
    if (const auto* v = get("quad_ppu")) {
        quad.panels_per_unit = parse_number(*v, "quad_ppu");
    }
    const std::string tag = get("scheme") ? *get("scheme") : "y";
    switch (parse_scheme_kind(tag)) {
    case SchemeKind::y: spec.scheme.scheme = YConfig{40.0, 40, quad}; break;
    case SchemeKind::k: spec.scheme.scheme = KConfig{4.0 * std::numbers::pi, 40, quad}; break;
    case SchemeKind::m: spec.scheme.scheme = MConfig{0}; break;
    case SchemeKind::f: spec.scheme.scheme = FConfig{30, spec.x_domain, quad}; break;
    }
    for (const char* key : {"L_y", "N_mu", "L_k", "N_xi", "P", "N_nu"}) {
        if (const auto* v = get(key)) {
            spec.scheme = with_parameter(spec.scheme, key, parse_number(*v, key));
        }
    }
    if (const auto* v = get("f_xdomain")) {
        auto* f = std::get_if<FConfig>(&spec.scheme.scheme);
        if (f == nullptr) {
            throw ConfigError("f_xdomain only applies to the f scheme");
        }
        f->x_domain = parse_interval(*v);
    }
    if (const auto* v = get("hbar")) {
        spec.scheme.hbar = parse_number(*v, "hbar");
    }
    if (const auto* v = get("sweep")) {
        spec.sweep_param = *v;
    }
    if (const auto* v = get("values")) {
        spec.sweep_values = parse_list(*v);
    }
    if (const auto* v = get("oracle")) {
        spec.oracle = parse_oracle(*v);
    } else if (spec.potential == "dwell" || spec.potential == "double_well") {
        spec.oracle = OracleKind::moyal;
    } else if ((spec.potential != "gauss" && spec.potential != "gauss_barrier")
               || (spec.state != "gauss" && spec.state != "gauss_packet")) {
        spec.oracle = OracleKind::brute_force;
    }
    if (const auto* v = get("format")) {
        spec.format = *v;
    }
    if (const auto* v = get("note")) {
        spec.note = *v;
    }
    validate(spec);
    return spec;
}

} // namespace psido
