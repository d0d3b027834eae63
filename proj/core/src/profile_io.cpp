#include "weingarten/profile_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace weingarten {

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        require(static_cast<bool>(out), ErrorCode::IoError, "cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        require(static_cast<bool>(out), ErrorCode::IoError, "write to " + tmp.string() + " failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        fail(ErrorCode::IoError, "cannot move " + tmp.string() + " to " + path.string());
    }
}

std::string profile_to_csv(const RadialSolution& sol) {
    std::string out = "r,u,du\n";
    for (std::size_t i = 0; i < sol.size(); ++i) {
        out += format_double(sol.r[i]);
        out += ',';
        out += format_double(sol.u[i]);
        out += ',';
        out += format_double(sol.du[i]);
        out += '\n';
    }
    return out;
}

void write_profile_csv(const RadialSolution& sol, const std::filesystem::path& path) {
    write_file_atomic(path, profile_to_csv(sol));
}

namespace {

double parse_field(std::string_view field, std::size_t line_no) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty() || !std::isfinite(value)) {
        fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad number '" + std::string(field) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) {
        s.remove_suffix(1);
    }
    while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
    }
    return s;
}

} // namespace

RadialSolution profile_from_csv(std::string_view text, const WeingartenParams& params, const Phi& phi) {
    RadialSolution sol;
    sol.params = params;
    sol.phi = phi;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        const auto line = trim(text.substr(0, eol));
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        ++line_no;
        if (line.empty()) {
            continue;
        }
        if (!header_seen) {
            if (line != "r,u,du") {
                fail(ErrorCode::ParseError, "expected header 'r,u,du', got '" + std::string(line) + "'");
            }
            header_seen = true;
            continue;
        }
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
        if (c2 == std::string_view::npos || line.find(',', c2 + 1) != std::string_view::npos) {
            fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected three fields");
        }
        sol.r.push_back(parse_field(line.substr(0, c1), line_no));
        sol.u.push_back(parse_field(line.substr(c1 + 1, c2 - c1 - 1), line_no));
        sol.du.push_back(parse_field(line.substr(c2 + 1), line_no));
    }
    require(header_seen, ErrorCode::ParseError, "empty profile file");
    require(!sol.r.empty(), ErrorCode::ParseError, "profile file has no data rows");
    if (sol.r.front() == 0.0 && sol.u.front() == 0.0 && sol.du.front() == 0.0) {
        sol.provenance = Provenance::FixedPoint;
    } else if (sol.r.front() == 0.0) {
        sol.provenance = Provenance::Continued;
    } else {
        sol.provenance = Provenance::ClosedForm;
    }
    sol.validate();
    return sol;
}

RadialSolution read_profile_csv(const std::filesystem::path& path, const WeingartenParams& params, const Phi& phi) {
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), ErrorCode::IoError, "cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return profile_from_csv(buffer.str(), params, phi);
}

} // namespace weingarten
