#include "psido/harness.hpp"

#include "psido/errors.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace psido {

namespace {

constexpr const char* csv_header = "param,eps_inf,estimator,realness_defect,wall_time_s";

std::string cell(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5e", v);
    return buf;
}

std::string cell(const std::optional<double>& v)
{
    return v ? cell(*v) : std::string{};
}

void comment_lines(std::ostream& out, const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        out << "# " << line << '\n';
    }
}

void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out, const std::string& note)
{
    comment_lines(out, note);
    out << csv_header << '\n';
    for (const SweepRow& r : rows) {
        if (r.error) {
            comment_lines(out, "error at param=" + cell(r.param) + ": " + *r.error);
        }
        out << cell(r.param) << ',' << cell(r.eps_inf) << ',' << cell(r.estimator) << ','
            << cell(r.realness_defect) << ',' << cell(r.wall_time_s) << '\n';
    }
}

nlohmann::json optional_json(const std::optional<double>& v)
{
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

void emit_json(const std::vector<SweepRow>& rows, std::ostream& out, const std::string& note)
{
    nlohmann::json array = nlohmann::json::array();
    for (const SweepRow& r : rows) {
        nlohmann::json row{
            {"param", r.param},
            {"eps_inf", optional_json(r.eps_inf)},
            {"estimator", optional_json(r.estimator)},
            {"realness_defect", r.realness_defect},
            {"wall_time_s", r.wall_time_s},
        };
        if (r.error) {
            row["error"] = *r.error;
        }
        array.push_back(std::move(row));
    }
    if (note.empty()) {
        out << array.dump(2) << '\n';
    } else {
        out << nlohmann::json{{"note", note}, {"rows", array}}.dump(2) << '\n';
    }
}

std::optional<double> parse_cell(const std::string& text)
{
    if (text.empty()) {
        return std::nullopt;
    }
    return parse_number(text, "CSV cell");
}

} // namespace

void emit(const std::vector<SweepRow>& rows, const std::string& format, std::ostream& out, const std::string& note)
{
    if (format == "csv") {
        emit_csv(rows, out, note);
    } else if (format == "json") {
        emit_json(rows, out, note);
    } else {
        throw ConfigError("unknown output format '" + format + "' (csv, json)");
    }
    if (!out) {
        throw IoError("failed writing sweep output");
    }
}

void emit(const std::vector<SweepRow>& rows, const std::string& format, const std::filesystem::path& path,
          const std::string& note)
{
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    emit(rows, format, out, note);
}

std::vector<SweepRow> parse_csv(std::istream& in)
{
    std::vector<SweepRow> rows;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!header_seen) {
            if (line != csv_header) {
                throw IoError("unexpected CSV header: " + line);
            }
            header_seen = true;
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream row(line);
        std::string c;
        while (std::getline(row, c, ',')) {
            cells.push_back(c);
        }
        if (line.back() == ',') {
            cells.emplace_back();
        }
        if (cells.size() != 5) {
            throw IoError("expected 5 CSV cells: " + line);
        }
        SweepRow r;
        r.param = parse_number(cells[0], "param");
        r.eps_inf = parse_cell(cells[1]);
        r.estimator = parse_cell(cells[2]);
        r.realness_defect = parse_number(cells[3], "realness_defect");
        r.wall_time_s = parse_number(cells[4], "wall_time_s");
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace psido
