#include "output.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "wentzell/cli.hpp"
#include "wentzell/format.hpp"

namespace wentzell::cli::detail {

std::string num(double v) { return format_number(v, 12); }

std::string num(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

Json json_num(double v) {
    if (!std::isfinite(v)) return nullptr;
    return round_significant(v, 12);
}

Json json_num(const std::optional<double>& v) { return v ? json_num(*v) : Json(nullptr); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += csv_field(fields[i]);
    }
    return line + "\n";
}

void check_output_path(const std::string& path) {
    if (path.empty()) return;
    namespace fs = std::filesystem;
    const fs::path p(path);
    if (fs::is_directory(p)) throw ConfigError("--out: '" + path + "' is a directory");
    const fs::path parent = p.has_parent_path() ? p.parent_path() : fs::path(".");
    if (!fs::is_directory(parent)) throw ConfigError("--out: directory '" + parent.string() + "' does not exist");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        out.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
    file << text;
    if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace wentzell::cli::detail
