#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fmpart/hypergraph.hpp"

namespace fmpart {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class NetlistFormat { Net, NetD, Hgr, Auto };

/// Parsed netlist plus the external cell names.
struct NetlistDocument {
  std::size_t declared_pin_count = 0;
  std::size_t declared_net_count = 0;
  std::size_t declared_module_count = 0;
  std::size_t pad_offset = 0;
  std::size_t cell_count = 0;
  std::vector<std::vector<CellId>> nets;
  std::vector<std::string> names;  // indexed by cell id
  std::size_t duplicate_pins = 0;  // same cell listed twice on one net, dropped

  Hypergraph hypergraph() const { return Hypergraph::build(nets, cell_count); }
  /// Throws std::out_of_range for an unknown name.
  CellId id_of(std::string_view name) const;
};

/// ISPD98/99 IBM netlist. Line 1 is ignored; lines 2-5 hold the pin, net
/// and module counts and the pad offset; then one `<name> <s|l>` line per
/// pin (`<name> <s|l> <I|O|B>` for NetD). `s` opens a net. Module `a<k>`
/// is cell k, pad `p<k>` is cell pad_offset + k.
NetlistDocument parse_ibm_net(std::string_view text, NetlistFormat dialect);

/// First line `<net_count> <cell_count>`, then one line of 1-based cell ids
/// per net. Cell i is named by its 1-based id.
NetlistDocument parse_hgr(std::string_view text);

/// Canonical .hgr text for `h`; parse_hgr(write_hgr(h)) reproduces h.
std::string write_hgr(const Hypergraph& h);

/// One `<name> <0|1>` line per cell in id order; B1 is 0.
/// Throws std::invalid_argument when sizes disagree, std::runtime_error on
/// a failed write.
void write_partition(const NetlistDocument& doc, std::span<const Block> sides, std::ostream& out);

/// Inverse of write_partition; every cell must appear exactly once.
std::vector<Block> read_partition(const NetlistDocument& doc, std::string_view text);

/// Resolve Auto from the file extension (.hgr, .net, .netD) and, failing
/// that, from the content.
NetlistFormat detect_format(const std::filesystem::path& path, std::string_view text);

/// Read and parse a netlist file. Throws std::runtime_error if unreadable.
NetlistDocument load_netlist(const std::filesystem::path& path, NetlistFormat format = NetlistFormat::Auto);

}  // namespace fmpart
