#ifndef TCARANK_IO_HPP
#define TCARANK_IO_HPP

#include <string>
#include <string_view>

#include "tcarank/errors.hpp"
#include "tcarank/ranks.hpp"

namespace tcarank {

// Orderings format: header "ordering,weight", then rows like
// "A>B>[C,D],166". Items are taken in order of first appearance.
RankDataset parse_orderings(std::string_view text);

// Ranks format: header of item labels (optionally ending in "__weight"),
// then one rank per item, 1 = most preferred; equal ranks are ties.
RankDataset parse_ranks(std::string_view text);

// Inverse of parse_orderings; parse(serialize(ds)) == ds.
std::string serialize_orderings(const RankDataset& ds);

std::string read_file(const std::string& path);

// Writes via a temp file in the same directory plus rename.
void write_file_atomic(const std::string& path, std::string_view content);

} // namespace tcarank

#endif
