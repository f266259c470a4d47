#include "render.hpp"

#include <algorithm>
#include <sstream>

namespace segalbar {

namespace {

constexpr int spacing = 4;

void put(std::string& line, int col, const std::string& text) {
  if (static_cast<int>(line.size()) < col + static_cast<int>(text.size()))
    line.resize(col + text.size(), ' ');
  for (size_t k = 0; k < text.size(); ++k) line[col + k] = text[k];
}

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

// source row on top, edges run downward; rows are centered against each other
std::string ascii_picture(const std::string& notation, int src, int tgt,
                          const std::vector<int>& img) {
  int src_width = src > 0 ? (src - 1) * spacing : 0;
  int tgt_width = tgt > 0 ? (tgt - 1) * spacing : 0;
  int src_off = (std::max(src_width, tgt_width) - src_width) / 2;
  int tgt_off = (std::max(src_width, tgt_width) - tgt_width) / 2;

  std::string src_idx, src_row, edge_row, tgt_row, tgt_idx;
  for (int i = 0; i < src; ++i) {
    put(src_idx, src_off + i * spacing, std::to_string(i));
    put(src_row, src_off + i * spacing, img[i] == undef ? "o" : "*");
  }
  for (int j = 0; j < tgt; ++j) {
    put(tgt_idx, tgt_off + j * spacing, std::to_string(j));
    put(tgt_row, tgt_off + j * spacing, "*");
  }
  for (int i = 0; i < src; ++i) {
    if (img[i] == undef) continue;
    int cs = src_off + i * spacing;
    int ct = tgt_off + img[i] * spacing;
    put(edge_row, (cs + ct) / 2, ct == cs ? "|" : ct > cs ? "\\" : "/");
  }

  std::string out = notation + "\n";
  for (const auto& row : {src_idx, src_row, edge_row, tgt_row, tgt_idx}) {
    std::string line = rstrip(row);
    if (!line.empty()) out += line + "\n";
  }
  return out;
}

std::string dot_picture(int src, int tgt, const std::vector<int>& img) {
  std::ostringstream out;
  out << "digraph map {\n  rankdir=TB;\n";
  if (src > 0) {
    out << "  { rank=same;";
    for (int i = 0; i < src; ++i) {
      out << " s" << i << " [label=\"" << i << "\"";
      if (img[i] == undef) out << " style=dashed";
      out << "];";
    }
    out << " }\n";
  }
  if (tgt > 0) {
    out << "  { rank=same;";
    for (int j = 0; j < tgt; ++j) out << " t" << j << " [label=\"" << j << "\"];";
    out << " }\n";
  }
  for (int i = 0; i < src; ++i)
    if (img[i] != undef) out << "  s" << i << " -> t" << img[i] << ";\n";
  out << "}\n";
  return out.str();
}

std::string render(const std::string& notation, int src, int tgt, const std::vector<int>& img,
                   render_style style) {
  return style == render_style::ascii ? ascii_picture(notation, src, tgt, img)
                                      : dot_picture(src, tgt, img);
}

std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width;
  for (const auto& row : rows)
    for (size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.resize(c + 1, 0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
    }
    out += rstrip(line) + "\n";
  }
  return out;
}

std::string verdict(const SegalLevel& l, segal_mode mode) {
  if (l.pass) return mode == segal_mode::strict ? "StrictPass" : "BijectivePass";
  return "Fail: " + l.witness;
}

}  // namespace

std::string render_arrow(const TotalMap& f, render_style style) {
  return render(format_map(f), f.src, f.tgt, f.img, style);
}

std::string render_arrow(const PartialMap& f, render_style style) {
  return render(format_map(f), f.src, f.tgt, f.img, style);
}

std::string render_arrow(const IntervalMap& f, render_style style) {
  return render(format_map(f), f.src, f.tgt, f.img, style);
}

std::string render_arrow(const AnyMap& f, render_style style) {
  return std::visit([&](const auto& m) { return render_arrow(m, style); }, f);
}

std::string render_summary(const SSet& x) {
  validate_shape(x);
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"level", "size", "faces", "degeneracies"});
  for (int n = 0; n <= x.trunc; ++n)
    rows.push_back({std::to_string(n), std::to_string(x.level_size(n)),
                    std::to_string(x.faces[n].size()), std::to_string(x.degens[n].size())});
  return table(rows);
}

std::string render_summary(const SSet& x, const SegalReport& report) {
  validate_shape(x);
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"level", "size", "faces", "degeneracies", "verdict"});
  for (int n = 0; n <= x.trunc; ++n)
    rows.push_back({std::to_string(n), std::to_string(x.level_size(n)),
                    std::to_string(x.faces[n].size()), std::to_string(x.degens[n].size()),
                    verdict(report.levels[n], report.mode)});
  return table(rows);
}

std::string render_summary(const BiSSet& x) {
  validate_bisset_shape(x);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head = {"m\\n"};
  for (int n = 0; n <= x.htrunc; ++n) head.push_back(std::to_string(n));
  rows.push_back(head);
  for (int m = 0; m <= x.vtrunc; ++m) {
    std::vector<std::string> row = {std::to_string(m)};
    for (int n = 0; n <= x.htrunc; ++n) row.push_back(std::to_string(x.level_size(n, m)));
    rows.push_back(row);
  }
  return "grid sizes:\n" + table(rows);
}

std::string render_summary(const BiSSet& x, const DoubleSegalReport& report) {
  std::string out = render_summary(x);
  for (const auto& part : report.parts) {
    out += part.name + ":\n";
    for (const auto& l : part.report.levels)
      out += "  level " + std::to_string(l.level) + ": " + verdict(l, part.report.mode) + "\n";
  }
  return out;
}

}  // namespace segalbar
