// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT

#include "belltet/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace belltet::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open for writing: " + tmp);
        }
        out.write(content.data(),
                  static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::remove(tmp.c_str());
            throw std::runtime_error("write failed: " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("rename failed: " + path);
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open for reading: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string states_csv(const std::vector<BellDiagonalState>& states) {
    std::string out = "c1,c2,c3\n";
    for (const BellDiagonalState& s : states) {
        out += format_double(s.c1);
        out += ',';
        out += format_double(s.c2);
        out += ',';
        out += format_double(s.c3);
        out += '\n';
    }
    return out;
}

std::string trajectory_csv(const Trajectory& trajectory) {
    std::string out = "t,c1,c2,c3,c_l1,c_re,discord,geo_discord\n";
    for (const TrajectorySample& sample : trajectory.samples) {
        out += format_double(sample.t);
        out += ',';
        out += format_double(sample.state.c1);
        out += ',';
        out += format_double(sample.state.c2);
        out += ',';
        out += format_double(sample.state.c3);
        out += ',';
        out += format_double(sample.measures.c_l1);
        out += ',';
        out += format_double(sample.measures.c_re);
        out += ',';
        out += format_double(sample.measures.discord);
        out += ',';
        out += format_double(sample.measures.geo_discord);
        out += '\n';
    }
    return out;
}

std::string sequence_csv(const SortedSequenceReport& report) {
    std::string out = "index,value_a,value_b\n";
    for (std::size_t i = 0; i < report.values_a.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += format_double(report.values_a[i]);
        out += ',';
        out += format_double(report.values_b[i]);
        out += '\n';
    }
    return out;
}

std::string contour_csv(const std::vector<Polyline>& polylines) {
    std::string out = "polyline_id,c1,c2,c3\n";
    for (std::size_t id = 0; id < polylines.size(); ++id) {
        const Polyline& line = polylines[id];
        const std::string prefix = std::to_string(id) + ',';
        for (const auto& p : line.points) {
            out += prefix;
            out += format_double(p[0]);
            out += ',';
            out += format_double(p[1]);
            out += ',';
            out += format_double(p[2]);
            out += '\n';
        }
        if (line.closed && !line.points.empty()) {
            const auto& p = line.points.front();
            out += prefix;
            out += format_double(p[0]);
            out += ',';
            out += format_double(p[1]);
            out += ',';
            out += format_double(p[2]);
            out += '\n';
        }
    }
    return out;
}

std::string mesh_obj(const IsosurfaceMesh& mesh) {
    std::string out;
    out.reserve(32 * (mesh.vertices.size() + mesh.triangles.size()));
    for (const auto& v : mesh.vertices) {
        out += "v ";
        out += format_double(v[0]);
        out += ' ';
        out += format_double(v[1]);
        out += ' ';
        out += format_double(v[2]);
        out += '\n';
    }
    for (const auto& t : mesh.triangles) {
        out += "f ";
        out += std::to_string(t[0] + 1);
        out += ' ';
        out += std::to_string(t[1] + 1);
        out += ' ';
        out += std::to_string(t[2] + 1);
        out += '\n';
    }
    return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) {
            eol = text.size();
        }
        std::vector<std::string> cells;
        std::size_t cell = pos;
        for (std::size_t i = pos; i <= eol; ++i) {
            if (i == eol || text[i] == ',') {
                cells.emplace_back(text.substr(cell, i - cell));
                cell = i + 1;
            }
        }
        rows.push_back(std::move(cells));
        pos = eol + 1;
    }
    return rows;
}

}  // namespace belltet::io
