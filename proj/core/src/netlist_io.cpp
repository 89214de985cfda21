#include "fmpart/netlist_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace fmpart {

namespace {

/// Splits text into lines (LF or CRLF) and lines into blank/tab separated tokens.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  /// Next line's tokens; false at end of input. Blank lines yield no tokens.
  bool next(std::vector<std::string_view>& tokens) {
    tokens.clear();
    if (pos_ >= text_.size()) return false;
    std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) end = text_.size();
    std::string_view line = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    return true;
  }

  /// Skips blank lines.
  bool next_nonempty(std::vector<std::string_view>& tokens) {
    while (next(tokens)) {
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::size_t line() const noexcept { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

std::size_t to_count(std::string_view tok, std::size_t line) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a nonnegative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

std::string pad_name(std::size_t id, std::size_t pad_offset) {
  return id <= pad_offset ? "a" + std::to_string(id) : "p" + std::to_string(id - pad_offset);
}

void push_unique(std::vector<CellId>& net, CellId c, std::size_t& duplicates) {
  if (std::find(net.begin(), net.end(), c) != net.end()) {
    ++duplicates;
    return;
  }
  net.push_back(c);
}

}  // namespace

CellId NetlistDocument::id_of(std::string_view name) const {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::out_of_range("unknown cell name '" + std::string(name) + "'");
  return static_cast<CellId>(it - names.begin());
}

NetlistDocument parse_ibm_net(std::string_view text, NetlistFormat dialect) {
  if (dialect != NetlistFormat::Net && dialect != NetlistFormat::NetD) {
    throw std::invalid_argument("parse_ibm_net needs the net or netD dialect");
  }
  NetlistDocument doc;
  LineReader in(text);
  std::vector<std::string_view> tok;

  std::size_t header[5] = {};
  for (std::size_t& field : header) {
    if (!in.next_nonempty(tok)) throw ParseError(in.line(), "truncated header");
    if (tok.size() != 1) throw ParseError(in.line(), "header lines hold a single integer");
    field = to_count(tok[0], in.line());
  }
  doc.declared_pin_count = header[1];
  doc.declared_net_count = header[2];
  doc.declared_module_count = header[3];
  doc.pad_offset = header[4];
  doc.cell_count = doc.declared_module_count;
  doc.names.resize(doc.cell_count);
  std::vector<unsigned char> named(doc.cell_count, 0);

  std::size_t pin_lines = 0;
  while (in.next_nonempty(tok)) {
    const std::size_t line = in.line();
    const bool netd = dialect == NetlistFormat::NetD;
    // Plain .net files in the wild sometimes carry a trailing numeric column.
    const bool shape_ok = netd ? tok.size() == 3 : (tok.size() == 2 || tok.size() == 3);
    if (!shape_ok) throw ParseError(line, "malformed pin line");

    const std::string_view name = tok[0];
    if (name.size() < 2 || (name[0] != 'a' && name[0] != 'p')) {
      throw ParseError(line, "cell name must be a<k> or p<k>, got '" + std::string(name) + "'");
    }
    const std::size_t k = to_count(name.substr(1), line);
    const std::size_t id = name[0] == 'a' ? k : doc.pad_offset + k;
    if (id >= doc.cell_count) {
      throw ParseError(line, "cell '" + std::string(name) + "' beyond declared module count");
    }
    if (!named[id]) {
      doc.names[id] = std::string(name);
      named[id] = 1;
    } else if (doc.names[id] != name) {
      throw ParseError(line, "'" + std::string(name) + "' and '" + doc.names[id] + "' map to the same cell");
    }

    const std::string_view mark = tok[1];
    if (mark == "s") {
      doc.nets.emplace_back();
    } else if (mark == "l") {
      if (doc.nets.empty()) throw ParseError(line, "first pin line must be 's'-marked");
    } else {
      throw ParseError(line, "pin marker must be 's' or 'l', got '" + std::string(mark) + "'");
    }

    if (netd) {
      const std::string_view dir = tok[2];
      if (dir != "I" && dir != "O" && dir != "B") {
        throw ParseError(line, "unknown pin direction '" + std::string(dir) + "'");
      }
    } else if (tok.size() == 3) {
      to_count(tok[2], line);
    }

    push_unique(doc.nets.back(), static_cast<CellId>(id), doc.duplicate_pins);
    ++pin_lines;
  }

  if (pin_lines != doc.declared_pin_count) {
    throw ParseError(0, "header declares " + std::to_string(doc.declared_pin_count) + " pins, found " +
                            std::to_string(pin_lines));
  }
  if (doc.nets.size() != doc.declared_net_count) {
    throw ParseError(0, "header declares " + std::to_string(doc.declared_net_count) + " nets, found " +
                            std::to_string(doc.nets.size()));
  }
  for (std::size_t id = 0; id < doc.cell_count; ++id) {
    if (!named[id]) doc.names[id] = pad_name(id, doc.pad_offset);
  }
  return doc;
}

NetlistDocument parse_hgr(std::string_view text) {
  NetlistDocument doc;
  LineReader in(text);
  std::vector<std::string_view> tok;
  if (!in.next_nonempty(tok)) throw ParseError(in.line(), "missing header");
  if (tok.size() != 2) throw ParseError(in.line(), "header must be '<net_count> <cell_count>'");
  const std::size_t net_count = to_count(tok[0], in.line());
  doc.cell_count = to_count(tok[1], in.line());

  std::size_t pins = 0;
  while (in.next_nonempty(tok)) {
    const std::size_t line = in.line();
    if (doc.nets.size() == net_count) throw ParseError(line, "more nets than the header declares");
    std::vector<CellId> net;
    for (std::string_view t : tok) {
      const std::size_t id = to_count(t, line);
      if (id == 0 || id > doc.cell_count) {
        throw ParseError(line, "cell id " + std::to_string(id) + " outside 1.." + std::to_string(doc.cell_count));
      }
      push_unique(net, static_cast<CellId>(id - 1), doc.duplicate_pins);
    }
    pins += tok.size();
    doc.nets.push_back(std::move(net));
  }
  if (doc.nets.size() != net_count) {
    throw ParseError(0, "header declares " + std::to_string(net_count) + " nets, found " +
                            std::to_string(doc.nets.size()));
  }
  doc.declared_net_count = net_count;
  doc.declared_pin_count = pins;
  doc.declared_module_count = doc.cell_count;
  doc.names.reserve(doc.cell_count);
  for (std::size_t i = 0; i < doc.cell_count; ++i) doc.names.push_back(std::to_string(i + 1));
  return doc;
}

std::string write_hgr(const Hypergraph& h) {
  std::ostringstream out;
  out << h.net_count() << ' ' << h.cell_count() << '\n';
  for (NetId n = 0; n < h.net_count(); ++n) {
    const auto pins = h.pins(n);
    for (std::size_t i = 0; i < pins.size(); ++i) out << (i ? " " : "") << pins[i] + 1;
    out << '\n';
  }
  return out.str();
}

void write_partition(const NetlistDocument& doc, std::span<const Block> sides, std::ostream& out) {
  if (sides.size() != doc.cell_count) {
    throw std::invalid_argument("partition size does not match the netlist");
  }
  for (std::size_t c = 0; c < sides.size(); ++c) {
    out << doc.names[c] << ' ' << (sides[c] == Block::B1 ? '0' : '1') << '\n';
  }
  if (!out) throw std::runtime_error("failed writing partition");
}

std::vector<Block> read_partition(const NetlistDocument& doc, std::string_view text) {
  std::unordered_map<std::string_view, CellId> lookup;
  lookup.reserve(doc.names.size());
  for (CellId c = 0; c < doc.names.size(); ++c) lookup.emplace(doc.names[c], c);

  std::vector<Block> sides(doc.cell_count, Block::B1);
  std::vector<unsigned char> seen(doc.cell_count, 0);
  std::size_t count = 0;
  LineReader in(text);
  std::vector<std::string_view> tok;
  while (in.next_nonempty(tok)) {
    if (tok.size() != 2 || (tok[1] != "0" && tok[1] != "1")) {
      throw ParseError(in.line(), "expected '<name> <0|1>'");
    }
    const auto it = lookup.find(tok[0]);
    if (it == lookup.end()) throw ParseError(in.line(), "unknown cell '" + std::string(tok[0]) + "'");
    if (seen[it->second]) throw ParseError(in.line(), "cell '" + std::string(tok[0]) + "' listed twice");
    seen[it->second] = 1;
    sides[it->second] = tok[1] == "0" ? Block::B1 : Block::B2;
    ++count;
  }
  if (count != doc.cell_count) throw ParseError(0, "partition does not list every cell");
  return sides;
}

NetlistFormat detect_format(const std::filesystem::path& path, std::string_view text) {
  const std::string ext = path.extension().string();
  if (ext == ".hgr") return NetlistFormat::Hgr;
  if (ext == ".netD" || ext == ".netd") return NetlistFormat::NetD;
  if (ext == ".net") return NetlistFormat::Net;

  LineReader in(text);
  std::vector<std::string_view> tok;
  if (!in.next_nonempty(tok)) return NetlistFormat::Hgr;
  if (tok.size() == 2) return NetlistFormat::Hgr;
  for (int i = 0; i < 4; ++i) {
    if (!in.next_nonempty(tok)) return NetlistFormat::Net;
  }
  if (in.next_nonempty(tok) && tok.size() == 3 && (tok[2] == "I" || tok[2] == "O" || tok[2] == "B")) {
    return NetlistFormat::NetD;
  }
  return NetlistFormat::Net;
}

NetlistDocument load_netlist(const std::filesystem::path& path, NetlistFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (format == NetlistFormat::Auto) format = detect_format(path, text);
  if (format == NetlistFormat::Hgr) return parse_hgr(text);
  return parse_ibm_net(text, format);
}

}  // namespace fmpart
