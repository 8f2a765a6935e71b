#include "qfock/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qfock::io {

namespace {

// The zero glyph of the text tables, chosen to match the printed layout.
const std::string kDot = "·";

[[noreturn]] void bad(const std::string& what, const std::string& text) {
  throw std::invalid_argument(what + ": \"" + text + "\"");
}

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Splits "x,y,z" at top bracket level; empty input gives no pieces.
std::vector<std::string> split_level(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

long parse_long(const std::string& s) {
  std::string t = strip(s);
  if (t.empty()) bad("expected an integer", s);
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(t, &pos);
  } catch (const std::exception&) {
    bad("expected an integer", s);
  }
  if (pos != t.size()) bad("trailing characters after integer", s);
  return v;
}

// Unwraps "[...]" and returns the inside, or fails.
std::string unwrap(const std::string& text) {
  std::string t = strip(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    bad("expected a bracketed list", text);
  return t.substr(1, t.size() - 2);
}

}  // namespace

json laurent_to_json(const Laurent& f) {
  json j = json::array();
  for (const auto& [e, c] : f.to_pairs()) j.push_back({e, c});
  return j;
}

Laurent laurent_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial is not an array");
  std::vector<std::pair<long, long long>> ps;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2)
      throw std::invalid_argument("polynomial term is not an [e, c] pair");
    ps.emplace_back(item[0].get<long>(), item[1].get<long long>());
  }
  return Laurent::from_pairs(ps);
}

std::string laurent_compact(const Laurent& f, char var) {
  Laurent g = (var == 'p') ? f.in_p() : f;
  auto ps = g.to_pairs();
  if (ps.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : ps) {
    long long mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += (c < 0) ? '-' : '+';
    }
    if (e == 0 || mag != 1) out += std::to_string(mag);
    if (e != 0) {
      out += var;
      if (e != 1) out += '^' + std::to_string(e);
    }
  }
  return out;
}

Laurent laurent_from_compact(const std::string& s, char var) {
  std::string t = strip(s);
  if (t.empty()) bad("empty polynomial", s);
  if (t == "0") return Laurent();
  std::map<long, long long> acc;
  size_t i = 0;
  bool first = true;
  while (i < t.size()) {
    long long sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      sign = (t[i] == '-') ? -1 : 1;
      ++i;
    } else if (!first) {
      bad("missing sign between terms", s);
    }
    first = false;
    long long mag = 0;
    bool saw_digits = false;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
      mag = mag * 10 + (t[i] - '0');
      saw_digits = true;
      ++i;
    }
    long e = 0;
    bool saw_var = false;
    if (i < t.size() && t[i] == var) {
      saw_var = true;
      e = 1;
      ++i;
      if (i < t.size() && t[i] == '^') {
        ++i;
        long esign = 1;
        if (i < t.size() && t[i] == '-') {
          esign = -1;
          ++i;
        }
        if (i >= t.size() || !std::isdigit(static_cast<unsigned char>(t[i])))
          bad("malformed exponent", s);
        e = 0;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])))
          e = e * 10 + (t[i++] - '0');
        e *= esign;
      }
    }
    if (!saw_digits && !saw_var) bad("malformed term", s);
    acc[e] += sign * (saw_digits ? mag : 1);
  }
  std::vector<std::pair<long, long long>> ps;
  for (const auto& [e, c] : acc)
    if (c != 0) ps.emplace_back(e, c);
  Laurent g = Laurent::from_pairs(ps);
  return (var == 'p') ? g.in_p() : g;
}

Partition partition_from_string(const std::string& text) {
  std::vector<long> parts;
  for (const std::string& piece : split_level(unwrap(text)))
    parts.push_back(parse_long(piece));
  return Partition(parts);
}

Multipartition multipartition_from_string(const std::string& text) {
  std::vector<Partition> comps;
  for (const std::string& piece : split_level(unwrap(text)))
    comps.push_back(partition_from_string(piece));
  if (comps.empty()) bad("a multipartition needs at least one component", text);
  return Multipartition(comps);
}

Charges charges_from_string(const std::string& text) {
  std::string t = strip(text);
  if (!t.empty() && t.front() == '[') t = unwrap(t);
  Charges s;
  for (const std::string& piece : split_level(t)) s.push_back(parse_long(piece));
  if (s.empty()) bad("a charge needs at least one entry", text);
  return s;
}

std::string charges_to_string(const Charges& s) {
  std::string out = "[";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "]";
}

json fock_to_json(const FockVector& v) {
  json terms = json::array();
  for (const auto& [lambda, c] : v.terms)
    terms.push_back({{"partition", lambda.parts()},
                     {"coeff", laurent_to_json(c)}});
  return {{"n", v.n}, {"l", v.l}, {"s", v.s}, {"terms", terms}};
}

FockVector fock_from_json(const json& j) {
  FockVector v(j.at("n").get<long>(), j.at("l").get<long>(),
               j.at("s").get<long>());
  for (const auto& term : j.at("terms")) {
    Partition key(term.at("partition").get<std::vector<long>>());
    v.add(key, laurent_from_json(term.at("coeff")));
  }
  return v;
}

namespace {

json mp_to_json(const Multipartition& mp) {
  json j = json::array();
  for (const Partition& comp : mp.comps) j.push_back(comp.parts());
  return j;
}

// "2L0 - a0 - 2a1": the block weight as fundamental weights minus simple
// roots, with multiplicities coalesced.
std::string weight_header(const TransitionBlock& b) {
  std::vector<long> lam(b.n, 0);
  for (long sj : b.s) ++lam[imod(sj, b.n)];
  std::string out;
  for (long i = 0; i < b.n; ++i) {
    if (lam[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (lam[i] != 1) out += std::to_string(lam[i]);
    out += "L" + std::to_string(i);
  }
  for (size_t i = 0; i < b.weight.size(); ++i) {
    if (b.weight[i] == 0) continue;
    out += " - ";
    if (b.weight[i] != 1) out += std::to_string(b.weight[i]);
    out += "a" + std::to_string(i);
  }
  return out;
}

size_t display_width(const std::string& cell) {
  return cell == kDot ? 1 : cell.size();
}

}  // namespace

json canon_to_json(const std::string& basis,
                   const std::vector<TransitionBlock>& blocks) {
  json jblocks = json::array();
  json params;
  for (const TransitionBlock& b : blocks) {
    if (params.is_null())
      params = {{"n", b.n},
                {"l", b.l},
                {"charge", b.s},
                {"size", b.k},
                {"basis", basis}};
    json rows = json::array();
    for (const TransitionRow& r : b.rows)
      rows.push_back({{"multipartition", mp_to_json(r.mp)},
                      {"partition", r.underlying.parts()},
                      {"crystal", r.in_crystal}});
    json cols = json::array();
    for (const auto& col : b.cols) {
      json jc = json::array();
      for (const Laurent& f : col) jc.push_back(laurent_to_json(f));
      cols.push_back(jc);
    }
    jblocks.push_back({{"weight_alpha", b.weight},
                       {"rows", rows},
                       {"columns", cols}});
  }
  return {{"params", params}, {"blocks", jblocks}};
}

std::string canon_to_text(const std::string& basis,
                          const std::vector<TransitionBlock>& blocks,
                          char var) {
  std::ostringstream out;
  bool headed = false;
  for (const TransitionBlock& b : blocks) {
    if (!headed) {
      out << "k = " << b.k << "  (basis " << basis << ")\n";
      headed = true;
    }
    out << "\nwt = " << weight_header(b) << "\n";
    size_t nrows = b.rows.size();
    std::vector<std::string> mps(nrows), ups(nrows);
    size_t mpw = 0, upw = 0;
    for (size_t r = 0; r < nrows; ++r) {
      mps[r] = b.rows[r].mp.str();
      ups[r] = b.rows[r].underlying.str();
      mpw = std::max(mpw, mps[r].size());
      upw = std::max(upw, ups[r].size());
    }
    // cells[r][c] with rows outermost; the matrix data is stored by columns.
    std::vector<std::vector<std::string>> cells(
        nrows, std::vector<std::string>(b.cols.size()));
    std::vector<size_t> colw(b.cols.size(), 0);
    for (size_t c = 0; c < b.cols.size(); ++c)
      for (size_t r = 0; r < nrows; ++r) {
        const Laurent& f = b.cols[c][r];
        cells[r][c] = f.is_zero() ? kDot : laurent_compact(f, var);
        colw[c] = std::max(colw[c], display_width(cells[r][c]));
      }
    for (size_t r = 0; r < nrows; ++r) {
      out << (b.rows[r].in_crystal ? "* " : "  ");
      out << mps[r] << std::string(mpw - mps[r].size(), ' ') << " | ";
      out << ups[r] << std::string(upw - ups[r].size(), ' ') << " |";
      for (size_t c = 0; c < cells[r].size(); ++c) {
        out << ' ' << cells[r][c];
        if (c + 1 < cells[r].size())
          out << std::string(colw[c] - display_width(cells[r][c]), ' ');
      }
      out << "\n";
    }
  }
  return out.str();
}

std::vector<ParsedTable> parse_canon_text(const std::string& text, char var) {
  std::vector<ParsedTable> tables;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = strip(line);
    if (t.empty() || t.rfind("k =", 0) == 0) continue;
    if (t.rfind("wt =", 0) == 0) {
      ParsedTable table;
      // Only the alpha part is block data; the Lambda part is constant.
      std::string rest = t.substr(4);
      size_t pos = 0;
      std::map<long, long> alphas;
      while ((pos = rest.find('a', pos)) != std::string::npos) {
        size_t numb = pos;
        while (numb > 0 &&
               std::isdigit(static_cast<unsigned char>(rest[numb - 1])))
          --numb;
        long mult = (numb == pos) ? 1 : std::stol(rest.substr(numb, pos - numb));
        size_t iend = pos + 1;
        while (iend < rest.size() &&
               std::isdigit(static_cast<unsigned char>(rest[iend])))
          ++iend;
        if (iend == pos + 1) bad("malformed weight header", line);
        alphas[std::stol(rest.substr(pos + 1, iend - pos - 1))] = mult;
        pos = iend;
      }
      long top = alphas.empty() ? -1 : alphas.rbegin()->first;
      table.weight.assign(top + 1, 0);
      for (const auto& [i, m] : alphas) table.weight[i] = m;
      tables.push_back(std::move(table));
      continue;
    }
    size_t bar1 = t.find('|');
    size_t bar2 = (bar1 == std::string::npos) ? bar1 : t.find('|', bar1 + 1);
    if (bar2 == std::string::npos) bad("unrecognized table line", line);
    if (tables.empty()) bad("row before any weight header", line);
    ParsedRow row;
    std::string label = strip(t.substr(0, bar1));
    if (!label.empty() && label.front() == '*') {
      row.crystal = true;
      label = strip(label.substr(1));
    }
    row.mp = label;
    row.underlying = strip(t.substr(bar1 + 1, bar2 - bar1 - 1));
    std::istringstream cellstream(t.substr(bar2 + 1));
    std::string cell;
    while (cellstream >> cell)
      row.entries.push_back(cell == kDot ? Laurent()
                                         : laurent_from_compact(cell, var));
    tables.back().rows.push_back(std::move(row));
  }
  return tables;
}

}  // namespace qfock::io
