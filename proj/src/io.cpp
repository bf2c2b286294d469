#include "fast/io.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>

namespace fast {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

namespace {

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

int parse_header_n(const std::string& header) {
  std::istringstream in(header);
  std::string magic, version, field;
  if (!(in >> magic >> version >> field) || magic != "FAST" || version != "v1" ||
      field.rfind("n=", 0) != 0)
    throw ParseError("malformed header, expected \"FAST v1 n=<n>\"", 1, 1);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(field.substr(2), &used);
    if (used != field.size() - 2) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ParseError("malformed header, vertex count is not a number", 1,
                     static_cast<int>(header.find(field)) + 1);
  }
  if (n < 1) throw ParseError("malformed header, vertex count must be positive", 1,
                              static_cast<int>(header.find(field)) + 1);
  // any further tokens are annotations and are ignored
  return n;
}

}  // namespace

Tournament parse_instance(std::istream& in) {
  const std::vector<std::string> lines = read_lines(in);
  if (lines.empty()) throw ParseError("empty instance", 1, 1);
  const int n = parse_header_n(lines[0]);

  if (static_cast<int>(lines.size()) < n + 1)
    throw ParseError("matrix has too few rows", static_cast<int>(lines.size()) + 1, 1);
  for (std::size_t extra = n + 1; extra < lines.size(); ++extra)
    if (!lines[extra].empty())
      throw ParseError("trailing content after the matrix", static_cast<int>(extra) + 1, 1);

  Tournament t(n);
  for (int i = 0; i < n; ++i) {
    const std::string& row = lines[i + 1];
    const int line_no = i + 2;
    if (static_cast<int>(row.size()) != n)
      throw ParseError("matrix row has wrong length", line_no,
                       static_cast<int>(row.size()) + 1);
    for (int j = 0; j < n; ++j)
      if (row[j] != '0' && row[j] != '1')
        throw ParseError("stray character in matrix row", line_no, j + 1);
    if (row[i] != '0') throw ParseError("diagonal entry must be 0", line_no, i + 1);
    for (int j = 0; j < i; ++j) {
      const bool ij = row[j] == '1';
      const bool ji = lines[j + 1][i] == '1';
      if (ij == ji)
        throw ParseError("antisymmetry violated for pair {" + std::to_string(j) + "," +
                             std::to_string(i) + "}",
                         line_no, j + 1);
      if (ij)
        t.orient(i, j);
      else
        t.orient(j, i);
    }
  }
  return t;
}

Tournament parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Tournament load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file " + path.string(), 0, 0);
  return parse_instance(in);
}

std::string emit_instance(const Tournament& t, const std::string& annotation) {
  assert(annotation.find('\n') == std::string::npos);
  std::string out = "FAST v1 n=" + std::to_string(t.size());
  if (!annotation.empty()) out += " " + annotation;
  out += '\n';
  for (Vertex u = 0; u < t.size(); ++u) {
    for (Vertex v = 0; v < t.size(); ++v) out += (u != v && t.has_arc(u, v)) ? '1' : '0';
    out += '\n';
  }
  return out;
}

Solution make_solution(const SolveResult& result) {
  Solution s;
  s.opt_size = result.opt_size;
  s.order = result.order.vertices();
  s.fas = result.fas;
  s.provenance.push_back(kSolverVersion);
  for (const TrialRecord& trial : result.trials) {
    std::ostringstream line;
    line << "trial k=" << trial.k << " outcome=" << to_string(trial.outcome) << " t=" << trial.t
         << " d=" << trial.d << " bad=" << trial.bad_count
         << " max_candidate=" << trial.max_candidate << " dp_states=" << trial.dp_states;
    s.provenance.push_back(line.str());
  }
  return s;
}

std::string emit_solution(const Solution& s) {
  std::ostringstream out;
  out << "FAST solution v1\n";
  out << "opt_size " << s.opt_size << "\n";
  out << "order";
  for (Vertex v : s.order) out << ' ' << v;
  out << "\n";
  out << "fas " << s.fas.size() << "\n";
  for (const auto& [u, v] : s.fas) out << u << ' ' << v << "\n";
  for (const std::string& line : s.provenance) out << "provenance " << line << "\n";
  return out.str();
}

Solution parse_solution(std::istream& in) {
  const std::vector<std::string> lines = read_lines(in);
  std::size_t at = 0;
  auto next_line = [&]() -> const std::string& {
    if (at >= lines.size())
      throw ParseError("unexpected end of solution file", static_cast<int>(lines.size()) + 1, 1);
    return lines[at++];
  };

  if (next_line() != "FAST solution v1")
    throw ParseError("malformed solution header", 1, 1);

  Solution s;
  {
    std::istringstream line(next_line());
    std::string tag;
    if (!(line >> tag >> s.opt_size) || tag != "opt_size")
      throw ParseError("expected \"opt_size <value>\"", static_cast<int>(at), 1);
  }
  {
    std::istringstream line(next_line());
    std::string tag;
    if (!(line >> tag) || tag != "order")
      throw ParseError("expected \"order <ids>\"", static_cast<int>(at), 1);
    Vertex v;
    while (line >> v) s.order.push_back(v);
    if (!line.eof()) throw ParseError("stray character in order line", static_cast<int>(at), 1);
  }
  long long fas_count = 0;
  {
    std::istringstream line(next_line());
    std::string tag;
    if (!(line >> tag >> fas_count) || tag != "fas" || fas_count < 0)
      throw ParseError("expected \"fas <count>\"", static_cast<int>(at), 1);
  }
  for (long long i = 0; i < fas_count; ++i) {
    std::istringstream line(next_line());
    Vertex u, v;
    if (!(line >> u >> v)) throw ParseError("malformed fas arc line", static_cast<int>(at), 1);
    s.fas.emplace_back(u, v);
  }
  while (at < lines.size()) {
    const std::string& line = lines[at++];
    if (line.empty()) continue;
    if (line.rfind("provenance", 0) != 0)
      throw ParseError("trailing content after the fas block", static_cast<int>(at), 1);
    s.provenance.push_back(line.size() > 11 ? line.substr(11) : "");
  }
  return s;
}

Solution parse_solution(const std::string& text) {
  std::istringstream in(text);
  return parse_solution(in);
}

Solution load_solution(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open solution file " + path.string(), 0, 0);
  return parse_solution(in);
}

bool verify_solution(const Tournament& t, const Solution& s, std::string* reason) {
  auto fail = [reason](const char* why) {
    if (reason) *reason = why;
    return false;
  };
  if (static_cast<int>(s.order.size()) != t.size()) return fail("order length mismatch");
  std::optional<LinearOrder> order;
  try {
    order.emplace(s.order);
  } catch (const std::invalid_argument&) {
    return fail("order is not a permutation");
  }
  ArcSet expected = backward_arcs(t, *order);
  ArcSet given = s.fas;
  std::sort(given.begin(), given.end());
  std::sort(expected.begin(), expected.end());
  if (given != expected) return fail("fas differs from the backward arcs of order");
  if (s.opt_size != static_cast<long long>(expected.size())) return fail("opt_size mismatch");
  if (!verify_fas(t, s.fas)) return fail("fas does not break all cycles");
  return true;
}

RankingProfile parse_rankings(std::istream& in) {
  const std::vector<std::string> lines = read_lines(in);
  if (lines.empty()) throw ParseError("empty rankings file", 1, 1);

  int voters = 0;
  RankingProfile profile;
  {
    std::istringstream line(lines[0]);
    if (!(line >> voters >> profile.alternatives) || voters < 1 || profile.alternatives < 1)
      throw ParseError("expected \"<voters> <alternatives>\" header", 1, 1);
  }
  if (voters % 2 == 0) throw ParseError("voter count must be odd", 1, 1);
  if (static_cast<int>(lines.size()) < voters + 1)
    throw ParseError("missing ranking rows", static_cast<int>(lines.size()) + 1, 1);

  for (int i = 0; i < voters; ++i) {
    std::istringstream line(lines[i + 1]);
    std::vector<Vertex> ranking;
    Vertex v;
    while (line >> v) ranking.push_back(v);
    if (static_cast<int>(ranking.size()) != profile.alternatives)
      throw ParseError("ranking row has wrong length", i + 2, 1);
    profile.rankings.push_back(std::move(ranking));
  }
  return profile;
}

RankingProfile parse_rankings(const std::string& text) {
  std::istringstream in(text);
  return parse_rankings(in);
}

RankingProfile load_rankings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open rankings file " + path.string(), 0, 0);
  return parse_rankings(in);
}

Tournament majority_tournament(const RankingProfile& profile) {
  const int n = profile.alternatives;
  const int m = static_cast<int>(profile.rankings.size());
  if (m < 1 || m % 2 == 0)
    throw std::invalid_argument("majority_tournament requires an odd number of voters");

  std::vector<std::vector<int>> prefers(n, std::vector<int>(n, 0));
  std::vector<int> position(n);
  for (const auto& ranking : profile.rankings) {
    if (static_cast<int>(ranking.size()) != n)
      throw std::invalid_argument("ranking length mismatch");
    std::fill(position.begin(), position.end(), -1);
    for (int i = 0; i < n; ++i) {
      const Vertex v = ranking[i];
      if (v < 0 || v >= n || position[v] != -1)
        throw std::invalid_argument("ranking is not a permutation");
      position[v] = i;
    }
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        if (u != v && position[u] < position[v]) ++prefers[u][v];
  }

  Tournament t(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (prefers[u][v] > m / 2)
        t.orient(u, v);
      else
        t.orient(v, u);
    }
  return t;
}

}  // namespace fast
