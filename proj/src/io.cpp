#include "locgame/io.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace locgame {

namespace {

// Reads logical lines, skipping blanks and '#' comments except directives.
struct LineReader {
  std::istream& is;
  std::string pending;
  bool has_pending = false;

  explicit LineReader(std::istream& s) : is(s) {}

  bool next(std::string& out) {
    if (has_pending) {
      out = pending;
      has_pending = false;
      return true;
    }
    std::string line;
    while (std::getline(is, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::string trimmed = line;
      size_t a = trimmed.find_first_not_of(" \t");
      if (a == std::string::npos) continue;
      if (trimmed[a] == '#') {
        if (trimmed.compare(a, 5, "#cols") == 0) {
          out = "#cols";
          return true;
        }
        continue;  // comment / format line
      }
      out = line;
      return true;
    }
    return false;
  }

  void push_back(const std::string& line) {
    pending = line;
    has_pending = true;
  }
};

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

VertexSet read_counted(std::istringstream& iss, const char* what) {
  size_t n;
  if (!(iss >> n)) throw Error(Errc::bad_format, std::string("expected a count for ") + what);
  VertexSet s(n);
  for (size_t i = 0; i < n; ++i)
    if (!(iss >> s[i])) throw Error(Errc::bad_format, std::string("truncated ") + what);
  return s;
}

void write_counted(std::ostream& os, const VertexSet& s) {
  os << s.size();
  for (int v : s) os << ' ' << v;
}

Design design_from_columns(LineReader& reader) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (reader.next(line)) {
    if (line == "#cols") continue;
    rows.push_back(tokens_of(line));
  }
  if (rows.empty()) throw Error(Errc::bad_format, "column design without rows");

  // Whole-row digit strings (the printed column layout) split into
  // single-character labels.
  bool single = true;
  for (const auto& r : rows)
    if (r.size() != 1) single = false;
  if (single && rows.front().front().size() > 1) {
    size_t width = rows.front().front().size();
    std::vector<std::vector<std::string>> split;
    for (const auto& r : rows) {
      if (r.front().size() != width)
        throw Error(Errc::bad_format, "column rows differ in length");
      std::vector<std::string> cells;
      for (char c : r.front()) cells.emplace_back(1, c);
      split.push_back(cells);
    }
    rows = split;
  }
  size_t b = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != b) throw Error(Errc::bad_format, "column rows differ in length");

  std::map<std::string, int> label_ids;
  std::vector<int> order;
  auto id_of = [&](const std::string& label) {
    auto it = label_ids.find(label);
    if (it != label_ids.end()) return it->second;
    int id = static_cast<int>(label_ids.size());
    label_ids.emplace(label, id);
    return id;
  };
  Design d;
  d.blocks.assign(b, {});
  for (const auto& row : rows)
    for (size_t col = 0; col < b; ++col) d.blocks[col].push_back(id_of(row[col]));
  d.v = static_cast<int>(label_ids.size());
  normalize_design(d);
  check_design_shape(d);
  return d;
}

}  // namespace

void write_design(std::ostream& os, const Design& d) {
  os << kFormatLine << '\n';
  os << d.v << ' ' << d.b() << '\n';
  for (const auto& blk : d.blocks) {
    for (size_t i = 0; i < blk.size(); ++i) os << (i ? " " : "") << blk[i];
    os << '\n';
  }
}

Design read_design(std::istream& is) {
  LineReader reader(is);
  std::string line;
  if (!reader.next(line)) throw Error(Errc::bad_format, "empty design file");
  if (line == "#cols") return design_from_columns(reader);

  auto head = tokens_of(line);
  if (head.size() != 2) throw Error(Errc::bad_format, "expected header 'v b'");
  Design d;
  d.v = std::stoi(head[0]);
  int b = std::stoi(head[1]);
  for (int i = 0; i < b; ++i) {
    if (!reader.next(line)) throw Error(Errc::bad_format, "missing block line");
    VertexSet blk;
    for (const auto& tok : tokens_of(line)) blk.push_back(std::stoi(tok));
    d.blocks.push_back(blk);
  }
  normalize_design(d);
  check_design_shape(d);
  return d;
}

void write_graph(std::ostream& os, const Graph& g) {
  os << kFormatLine << '\n';
  os << "graph " << g.n() << '\n';
  for (int v = 0; v < g.n(); ++v) {
    char tag = g.side(v) == Side::point ? 'P' : (g.side(v) == Side::block ? 'B' : 'V');
    os << v << ' ' << tag;
    for (int w : g.neighbors(v)) os << ' ' << w;
    os << '\n';
  }
}

Graph read_graph(std::istream& is) {
  LineReader reader(is);
  std::string line;
  if (!reader.next(line)) throw Error(Errc::bad_format, "empty graph file");
  auto head = tokens_of(line);
  if (head.size() != 2 || head[0] != "graph")
    throw Error(Errc::bad_format, "expected header 'graph n'");
  int n = std::stoi(head[1]);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    if (!reader.next(line)) throw Error(Errc::bad_format, "missing vertex line");
    auto toks = tokens_of(line);
    if (toks.size() < 2) throw Error(Errc::bad_format, "vertex line too short");
    int id = std::stoi(toks[0]);
    for (size_t j = 2; j < toks.size(); ++j) {
      int w = std::stoi(toks[j]);
      if (id < w) edges.emplace_back(id, w);
      else edges.emplace_back(w, id);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(n, edges);
}

Graph read_graph_or_design(std::istream& is, std::string* kind) {
  std::stringstream buffer;
  buffer << is.rdbuf();
  std::string content = buffer.str();
  {
    std::istringstream probe(content);
    LineReader reader(probe);
    std::string line;
    if (!reader.next(line)) throw Error(Errc::bad_format, "empty input");
    auto toks = tokens_of(line);
    bool is_graph = !toks.empty() && toks[0] == "graph";
    std::istringstream again(content);
    if (is_graph) {
      if (kind) *kind = "graph";
      return read_graph(again);
    }
    if (kind) *kind = "design";
    return Graph::incidence(read_design(again));
  }
}

void write_transcript(std::ostream& os, const GameTranscript& t) {
  os << kFormatLine << '\n';
  os << "transcript\n";
  os << "initial ";
  write_counted(os, t.initial);
  os << '\n';
  for (size_t i = 0; i < t.rounds.size(); ++i) {
    const Round& r = t.rounds[i];
    os << "round " << (i + 1) << " probes ";
    write_counted(os, r.placement);
    os << " observed ";
    write_counted(os, r.observed);
    os << " cell ";
    write_counted(os, r.cell);
    os << '\n';
  }
}

GameTranscript read_transcript(std::istream& is) {
  LineReader reader(is);
  std::string line;
  if (!reader.next(line) || tokens_of(line) != std::vector<std::string>{"transcript"})
    throw Error(Errc::bad_format, "expected 'transcript'");
  GameTranscript t;
  bool have_initial = false;
  while (reader.next(line)) {
    std::istringstream iss(line);
    std::string tag;
    iss >> tag;
    if (tag == "initial") {
      t.initial = read_counted(iss, "initial");
      have_initial = true;
    } else if (tag == "round") {
      int idx;
      std::string word;
      iss >> idx >> word;
      Round r;
      r.placement = read_counted(iss, "probes");
      iss >> word;
      r.observed = read_counted(iss, "observed");
      iss >> word;
      r.cell = read_counted(iss, "cell");
      t.rounds.push_back(r);
    } else {
      throw Error(Errc::bad_format, "unexpected transcript line: " + line);
    }
  }
  if (!have_initial) throw Error(Errc::bad_format, "transcript without initial set");
  return t;
}

void write_certificate(std::ostream& os, const Certificate& c) {
  os << kFormatLine << '\n';
  os << "certificate " << (c.kind == Certificate::Kind::cops ? "cops" : "robber") << '\n';
  os << "graph " << c.graph_id << '\n';
  os << "k " << c.k << '\n';
  if (c.kind == Certificate::Kind::cops) {
    os << "bound " << c.round_bound << '\n';
    os << "moves " << c.cop_moves.size() << '\n';
    for (const auto& [state, move] : c.cop_moves) {
      os << "m ";
      write_counted(os, state);
      os << ' ';
      write_counted(os, move);
      os << '\n';
    }
  } else {
    os << "states " << c.robber_states.size() << '\n';
    for (const auto& state : c.robber_states) {
      os << "s ";
      write_counted(os, state);
      os << '\n';
    }
  }
}

Certificate read_certificate(std::istream& is) {
  LineReader reader(is);
  std::string line;
  if (!reader.next(line)) throw Error(Errc::bad_format, "empty certificate");
  auto head = tokens_of(line);
  if (head.size() != 2 || head[0] != "certificate")
    throw Error(Errc::bad_format, "expected 'certificate cops|robber'");
  Certificate c;
  c.kind = head[1] == "cops" ? Certificate::Kind::cops : Certificate::Kind::robber;
  while (reader.next(line)) {
    std::istringstream iss(line);
    std::string tag;
    iss >> tag;
    if (tag == "graph") {
      iss >> c.graph_id;
    } else if (tag == "k") {
      iss >> c.k;
    } else if (tag == "bound") {
      iss >> c.round_bound;
    } else if (tag == "moves" || tag == "states") {
      // counts are advisory; records follow
    } else if (tag == "m") {
      VertexSet state = read_counted(iss, "state");
      VertexSet move = read_counted(iss, "move");
      c.cop_moves.emplace_back(std::move(state), std::move(move));
    } else if (tag == "s") {
      c.robber_states.push_back(read_counted(iss, "state"));
    } else {
      throw Error(Errc::bad_format, "unexpected certificate line: " + line);
    }
  }
  return c;
}

std::string render_bounds_text(const BoundReport& report) {
  std::ostringstream os;
  os << kFormatLine << '\n';
  os << "design " << report.design_id << ' ' << report.params.str()
     << (report.params.symmetric ? " symmetric" : "")
     << (report.params.simple ? "" : " non-simple") << '\n';
  for (const auto& e : report.entries) {
    os << (e.kind == BoundEntry::Kind::lower ? "LOWER" : "UPPER") << ' ' << e.value << ' '
       << e.theorem;
    if (e.kind == BoundEntry::Kind::upper) {
      os << ' ' << (e.verdict.empty() ? "UNVERIFIED" : e.verdict);
      if (e.verdict == "PROVEN") os << " rounds<=" << e.rounds;
      os << " cops=" << e.cops;
    }
    if (!e.note.empty()) os << " (" << e.note << ")";
    os << '\n';
  }
  auto lo = report.best_lower();
  auto hi = report.best_proven_upper();
  os << "summary lower=" << (lo ? std::to_string(*lo) : "-")
     << " upper=" << (hi ? std::to_string(*hi) : "-");
  if (lo && hi && *lo == *hi) os << " exact=" << *lo;
  os << '\n';
  return os.str();
}

std::string render_bounds_json(const BoundReport& report) {
  nlohmann::ordered_json j;
  j["format"] = "locgame-format 1";
  j["design"] = report.design_id;
  j["params"] = {{"v", report.params.v}, {"b", report.params.b}, {"r", report.params.r},
                 {"k", report.params.k}, {"lambda", report.params.lambda},
                 {"symmetric", report.params.symmetric}, {"simple", report.params.simple}};
  auto rows = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json row;
    row["design"] = report.design_id;
    row["kind"] = e.kind == BoundEntry::Kind::lower ? "LOWER" : "UPPER";
    row["value"] = e.value;
    row["theorem"] = e.theorem;
    row["verdict"] = e.verdict;
    row["rounds"] = e.rounds;
    if (e.kind == BoundEntry::Kind::upper) row["cops"] = e.cops;
    if (!e.note.empty()) row["note"] = e.note;
    rows.push_back(row);
  }
  j["bounds"] = rows;
  return j.dump(2) + "\n";
}

std::string render_solve_text(const SolveResult& r) {
  std::ostringstream os;
  os << kFormatLine << '\n';
  os << "solve " << r.graph_id << " k=" << r.k << " status=";
  switch (r.status) {
    case SolveStatus::cops_win: os << "COPS_WIN rounds=" << r.round_bound; break;
    case SolveStatus::robber_wins: os << "ROBBER_WINS"; break;
    case SolveStatus::unknown: os << "UNKNOWN"; break;
  }
  os << " states=" << r.states;
  if (!r.note.empty()) os << " note=\"" << r.note << "\"";
  os << '\n';
  return os.str();
}

std::string render_solve_json(const SolveResult& r) {
  nlohmann::ordered_json j;
  j["format"] = "locgame-format 1";
  j["graph"] = r.graph_id;
  j["k"] = r.k;
  j["status"] = r.status == SolveStatus::cops_win
                    ? "COPS_WIN"
                    : (r.status == SolveStatus::robber_wins ? "ROBBER_WINS" : "UNKNOWN");
  j["rounds"] = r.round_bound;
  j["states"] = r.states;
  j["note"] = r.note;
  return j.dump(2) + "\n";
}

}  // namespace locgame
