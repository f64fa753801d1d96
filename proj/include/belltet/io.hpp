// Copyright 2026 the belltet authors
// SPDX-License-Identifier: MIT
//
// Text serialization: CSV builders, Wavefront-style mesh text, and atomic
// file writes.  All numeric cells are printed with 17 significant digits so
// the doubles round-trip losslessly; every document ends with a newline.

#ifndef BELLTET_IO_HPP
#define BELLTET_IO_HPP

#include <string>
#include <vector>

#include "belltet/channels.hpp"
#include "belltet/levelset.hpp"
#include "belltet/ordering.hpp"
#include "belltet/state.hpp"

namespace belltet::io {

// %.17g.
std::string format_double(double v);

// Writes content to path via a temp file in the same directory plus rename,
// so a failed run never leaves a partial file.  Throws std::runtime_error.
void write_text_file(const std::string& path, const std::string& content);

std::string read_text_file(const std::string& path);

// Header c1,c2,c3; one row per state.
std::string states_csv(const std::vector<BellDiagonalState>& states);

// Header t,c1,c2,c3,c_l1,c_re,discord,geo_discord; one row per sample.
std::string trajectory_csv(const Trajectory& trajectory);

// Header index,value_a,value_b; rows follow the report's sorted order.
std::string sequence_csv(const SortedSequenceReport& report);

// Header polyline_id,c1,c2,c3; closed polylines repeat their first point at
// the end so a plot of consecutive rows draws the loop shut.
std::string contour_csv(const std::vector<Polyline>& polylines);

// "v x y z" lines then "f i j k" lines with 1-based vertex indices.
std::string mesh_obj(const IsosurfaceMesh& mesh);

// Splits lines on commas.  No quoting: none of the writers above emit quotes.
// A trailing newline does not produce an empty row.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

}  // namespace belltet::io

#endif  // BELLTET_IO_HPP
