#include "lcf/mesh_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "lcf/error.hpp"

namespace lcf {
namespace {

enum class Section { None, Nodes, Elements, Displacements };

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

template <typename T>
T read_field(std::istringstream& fields, const std::string& source, std::size_t line,
             const char* what) {
  T value{};
  if (!(fields >> value)) throw ParseError(source, line, std::string("expected ") + what);
  return value;
}

void expect_end(std::istringstream& fields, const std::string& source, std::size_t line) {
  std::string extra;
  if (fields >> extra) throw ParseError(source, line, "unexpected trailing token '" + extra + "'");
}

}  // namespace

Mesh parse_mesh(std::istream& in, const std::string& source) {
  std::vector<Node> nodes;
  std::vector<Element> elements;
  std::vector<std::pair<NodeId, Point3>> displacements;
  std::vector<std::size_t> displacement_lines;
  Section section = Section::None;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream fields(strip_comment(raw));
    std::string first;
    if (!(fields >> first)) continue;
    if (first == "NODES" || first == "ELEMENTS" || first == "DISPLACEMENTS") {
      expect_end(fields, source, line_no);
      section = first == "NODES"      ? Section::Nodes
                : first == "ELEMENTS" ? Section::Elements
                                      : Section::Displacements;
      continue;
    }
    fields.clear();
    fields.seekg(0);
    switch (section) {
      case Section::None:
        throw ParseError(source, line_no, "data before any section header");
      case Section::Nodes: {
        Node n;
        n.id = read_field<NodeId>(fields, source, line_no, "node id");
        for (int d = 0; d < 3; ++d) n.coords(d) = read_field<double>(fields, source, line_no, "coordinate");
        expect_end(fields, source, line_no);
        nodes.push_back(n);
        break;
      }
      case Section::Elements: {
        Element e;
        e.id = read_field<ElementId>(fields, source, line_no, "element id");
        const auto tag = read_field<std::string>(fields, source, line_no, "element kind");
        if (tag == "HEX20")
          e.kind = ElementKind::Hex20;
        else if (tag == "TET10")
          e.kind = ElementKind::Tet10;
        else
          throw ParseError(source, line_no, "unknown element kind '" + tag + "'");
        for (std::size_t k = 0; k < node_count(e.kind); ++k)
          e.node_ids.push_back(read_field<NodeId>(fields, source, line_no, "node id"));
        expect_end(fields, source, line_no);
        elements.push_back(std::move(e));
        break;
      }
      case Section::Displacements: {
        const auto id = read_field<NodeId>(fields, source, line_no, "node id");
        Point3 u;
        for (int d = 0; d < 3; ++d) u(d) = read_field<double>(fields, source, line_no, "displacement");
        expect_end(fields, source, line_no);
        displacements.emplace_back(id, u);
        displacement_lines.push_back(line_no);
        break;
      }
    }
  }
  std::unordered_map<NodeId, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i].id, i);
  for (std::size_t i = 0; i < displacements.size(); ++i) {
    auto it = index.find(displacements[i].first);
    if (it == index.end())
      throw ParseError(source, displacement_lines[i],
                       "displacement for unknown node " + std::to_string(displacements[i].first));
    nodes[it->second].displacement = displacements[i].second;
  }
  try {
    return Mesh(std::move(nodes), std::move(elements));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(source, 0, e.what());
  }
}

Mesh read_mesh(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return parse_mesh(in, path.string());
}

void write_mesh(std::ostream& out, const Mesh& mesh) {
  out << "NODES\n";
  for (const Node& n : mesh.nodes())
    fmt::print(out, "{} {:.17g} {:.17g} {:.17g}\n", n.id, n.coords.x(), n.coords.y(), n.coords.z());
  out << "ELEMENTS\n";
  for (const Element& e : mesh.elements()) {
    fmt::print(out, "{} {}", e.id, kind_name(e.kind));
    for (NodeId id : e.node_ids) fmt::print(out, " {}", id);
    out << '\n';
  }
  out << "DISPLACEMENTS\n";
  for (const Node& n : mesh.nodes())
    fmt::print(out, "{} {:.17g} {:.17g} {:.17g}\n", n.id, n.displacement.x(), n.displacement.y(),
               n.displacement.z());
}

void write_mesh(const std::filesystem::path& path, const Mesh& mesh) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_mesh(out, mesh);
}

}  // namespace lcf
