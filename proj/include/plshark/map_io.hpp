#pragma once

#include "plshark/pl_map.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace plshark {

// On-disk form of a PLMap plus optional metadata.  The text format is
// line-oriented:
//
//   plmap v1
//   name: tent                      (optional)
//   provenance: free-form text      (optional, repeatable)
//   domain: [0, 1]
//   nodes:
//   - [0, 0]
//   - [1/2, 1]
//   - [1, 0]
//
// '#' starts a comment.  Every number is a canonical rational; unreduced
// fractions and non-monotone node lists are rejected with a line-numbered
// ParseError.  parse(serialize(doc)) reproduces the map node-for-node.
struct MapDocument {
    PLMap map;
    std::string name;                      // empty = absent
    std::vector<std::string> provenance;   // free-form metadata lines
};

MapDocument parse_map_document(std::istream& in);
MapDocument parse_map_document(const std::string& text);

std::string serialize(const MapDocument& doc);

MapDocument load_map_file(const std::string& path);   // Error if unreadable
void save_map_file(const std::string& path, const MapDocument& doc);

} // namespace plshark
