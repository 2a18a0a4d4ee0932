#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "lcf/mesh.hpp"

namespace lcf {

/// Neutral mesh format: sections NODES, ELEMENTS, DISPLACEMENTS, whitespace
/// separated, '#' starts a comment. Throws ParseError with the line number.
Mesh parse_mesh(std::istream& in, const std::string& source_name = "<stream>");
Mesh read_mesh(const std::filesystem::path& path);

void write_mesh(std::ostream& out, const Mesh& mesh);
void write_mesh(const std::filesystem::path& path, const Mesh& mesh);

}  // namespace lcf
