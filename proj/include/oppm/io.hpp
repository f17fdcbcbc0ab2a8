// SPDX-License-Identifier: Apache-2.0

#ifndef OPPM_IO_HPP
#define OPPM_IO_HPP

// Plain-text formats. All labels are signed decimal 64-bit integers.
//
//   sequence:  one line of whitespace-separated integers (may be empty)
//   tree:      "tree N", then N-1 lines "parent child label"; node 0 is root
//   dag:       "dag V E", then E lines "source target label"
//
// Parse failures throw ParseError carrying the source name and line.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "oppm/dag.hpp"
#include "oppm/tree_text.hpp"
#include "oppm/types.hpp"

namespace oppm::io {

Sequence parse_sequence(std::istream& in, const std::string& source);
TextTree parse_tree(std::istream& in, const std::string& source);
TextDag parse_dag(std::istream& in, const std::string& source);

Sequence parse_sequence_file(const std::filesystem::path& path);
TextTree parse_tree_file(const std::filesystem::path& path);
TextDag parse_dag_file(const std::filesystem::path& path);

void write_sequence(std::ostream& out, const Sequence& s);
void write_tree(std::ostream& out, const TextTree& tree);
void write_dag(std::ostream& out, const TextDag& dag);

}  // namespace oppm::io

#endif  // OPPM_IO_HPP
