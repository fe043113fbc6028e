#include "zenokit/io.hpp"

#include <charconv>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace zenokit {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      out.emplace_back(text.substr(start));
      break;
    }
    out.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  // A final newline ends the last line rather than opening a new one.
  if (out.size() > 1 && out.back().empty() && text.ends_with('\n')) out.pop_back();
  return out;
}

const std::regex& identifier() {
  static const std::regex re(R"([A-Za-z0-9_.@/']+)");
  return re;
}

bool is_identifier(const std::string& s) { return std::regex_match(s, identifier()); }

template <typename Int>
Int parse_int(const std::string& s, std::size_t line, const std::string& what) {
  Int v{};
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || p != end) throw ParseError(line, "invalid " + what + " '" + s + "'");
  return v;
}

Relation parse_relation(const std::string& op) {
  if (op == "<") return Relation::Less;
  if (op == "<=") return Relation::LessEq;
  if (op == "==") return Relation::Equal;
  if (op == ">=") return Relation::GreaterEq;
  return Relation::Greater;
}

}  // namespace

// -- Timed automata ----------------------------------------------------------

TimedAutomaton parse_ta(std::string_view text) {
  static const std::regex atom_re(R"(\s*([A-Za-z0-9_.@/']+)\s*(<=|<|==|>=|>)\s*([0-9]+)\s*)");
  static const std::regex reset_re(R"(\s*reset\s*\{([^}]*)\}\s*)");

  TimedAutomaton ta;
  std::map<std::string, StateId> states;
  std::map<std::string, ClockIndex> clocks;
  std::set<std::string> labels;
  bool have_initial = false;

  const auto lines = split_lines(text);
  for (std::size_t ln = 1; ln <= lines.size(); ++ln) {
    const std::string line = strip_comment(lines[ln - 1]);
    if (line.empty()) continue;
    const auto w = words(line);
    const std::string& kw = w[0];

    if (kw == "clocks") {
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (!is_identifier(w[i])) throw ParseError(ln, "invalid clock name '" + w[i] + "'");
        if (clocks.count(w[i])) throw ParseError(ln, "duplicate clock '" + w[i] + "'");
        ta.clock_names.push_back(w[i]);
        clocks[w[i]] = ta.num_clocks();
      }
    } else if (kw == "state") {
      if (w.size() < 2 || w.size() > 3 || (w.size() == 3 && w[2] != "init"))
        throw ParseError(ln, "expected 'state <name> [init]'");
      if (!is_identifier(w[1])) throw ParseError(ln, "invalid state name '" + w[1] + "'");
      if (states.count(w[1])) throw ParseError(ln, "duplicate state '" + w[1] + "'");
      states[w[1]] = static_cast<StateId>(ta.state_names.size());
      ta.state_names.push_back(w[1]);
      if (w.size() == 3) {
        if (have_initial) throw ParseError(ln, "second initial state '" + w[1] + "'");
        have_initial = true;
        ta.initial = states[w[1]];
      }
    } else if (kw == "trans") {
      const std::string rest = trim(std::string_view(line).substr(5));
      const auto colon = rest.find(':');
      if (colon == std::string::npos) throw ParseError(ln, "expected 'trans <label>: <src> -> <dst>'");
      Transition t;
      t.label = trim(std::string_view(rest).substr(0, colon));
      if (!is_identifier(t.label)) throw ParseError(ln, "invalid transition label '" + t.label + "'");
      if (!labels.insert(t.label).second) throw ParseError(ln, "duplicate transition label '" + t.label + "'");

      std::vector<std::string> parts;
      std::string body = rest.substr(colon + 1);
      for (std::size_t pos = 0;;) {
        const auto semi = body.find(';', pos);
        parts.push_back(trim(std::string_view(body).substr(pos, semi == std::string::npos ? semi : semi - pos)));
        if (semi == std::string::npos) break;
        pos = semi + 1;
      }
      if (parts.size() > 3) throw ParseError(ln, "too many ';'-separated clauses");

      const auto arrow = parts[0].find("->");
      if (arrow == std::string::npos) throw ParseError(ln, "expected '<src> -> <dst>'");
      const std::string src = trim(std::string_view(parts[0]).substr(0, arrow));
      const std::string dst = trim(std::string_view(parts[0]).substr(arrow + 2));
      for (const auto* s : {&src, &dst}) {
        if (!states.count(*s)) throw ParseError(ln, "undeclared state '" + *s + "'");
      }
      t.source = states[src];
      t.target = states[dst];

      if (parts.size() >= 2 && !parts[1].empty() && parts[1] != "true") {
        std::string guard = parts[1];
        for (std::size_t pos = 0;;) {
          const auto amp = guard.find("&&", pos);
          const std::string atom = guard.substr(pos, amp == std::string::npos ? amp : amp - pos);
          std::smatch m;
          if (!std::regex_match(atom, m, atom_re)) throw ParseError(ln, "syntax error in guard atom '" + trim(atom) + "'");
          if (!clocks.count(m[1])) throw ParseError(ln, "undeclared clock '" + m[1].str() + "' in guard");
          const auto c = parse_int<std::int64_t>(m[3], ln, "constant");
          if (c > kMaxConstant) throw ParseError(ln, "constant " + m[3].str() + " exceeds 2^20");
          t.guard.atoms.push_back({clocks[m[1]], parse_relation(m[2]), c});
          if (amp == std::string::npos) break;
          pos = amp + 2;
        }
      }
      if (parts.size() == 3) {
        std::smatch m;
        if (!std::regex_match(parts[2], m, reset_re)) throw ParseError(ln, "expected 'reset{<clocks>}'");
        std::string list = m[1];
        for (char& ch : list)
          if (ch == ',') ch = ' ';
        for (const auto& x : words(list)) {
          if (!clocks.count(x)) throw ParseError(ln, "undeclared clock '" + x + "' in reset");
          t.resets.insert(clocks[x]);
        }
      }
      ta.transitions.push_back(std::move(t));
    } else {
      throw ParseError(ln, "unknown keyword '" + kw + "'");
    }
  }
  if (ta.state_names.empty()) throw ParseError(lines.size(), "no states declared");
  if (!have_initial) throw ParseError(lines.size(), "no initial state (mark one with 'init')");
  if (ta.num_clocks() > kMaxClocks)
    throw ParseError(lines.size(), "too many clocks (limit " + std::to_string(kMaxClocks) + ")");
  require_valid(ta);
  return ta;
}

std::string serialize_ta(const TimedAutomaton& ta) {
  std::ostringstream os;
  os << "clocks";
  for (const auto& c : ta.clock_names) os << ' ' << c;
  os << '\n';
  for (std::size_t q = 0; q < ta.state_names.size(); ++q)
    os << "state " << ta.state_names[q] << (q == ta.initial ? " init" : "") << '\n';
  for (const auto& t : ta.transitions) {
    os << "trans " << t.label << ": " << ta.state_names[t.source] << " -> " << ta.state_names[t.target] << " ; ";
    if (t.guard.is_true()) os << "true";
    for (std::size_t i = 0; i < t.guard.atoms.size(); ++i) {
      const auto& a = t.guard.atoms[i];
      os << (i ? " && " : "") << ta.clock_name(a.clock) << to_string(a.relation) << a.constant;
    }
    os << " ; reset{";
    bool first = true;
    for (ClockIndex x : t.resets.members()) {
      os << (first ? "" : ",") << ta.clock_name(x);
      first = false;
    }
    os << "}\n";
  }
  return os.str();
}

// -- DIMACS ------------------------------------------------------------------

Formula parse_cnf(std::string_view text) {
  Formula phi;
  bool header = false;
  std::size_t declared_clauses = 0;
  std::vector<Literal> pending;
  std::size_t pending_line = 0;

  const auto lines = split_lines(text);
  for (std::size_t ln = 1; ln <= lines.size(); ++ln) {
    const std::string line = trim(lines[ln - 1]);
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == '%') break;
    const auto w = words(line);
    if (w[0] == "p") {
      if (header) throw ParseError(ln, "second problem line");
      if (w.size() != 4 || w[1] != "cnf") throw ParseError(ln, "expected 'p cnf <vars> <clauses>'");
      phi.num_vars = parse_int<int>(w[2], ln, "variable count");
      declared_clauses = parse_int<std::size_t>(w[3], ln, "clause count");
      if (phi.num_vars < 0) throw ParseError(ln, "negative variable count");
      header = true;
      continue;
    }
    if (!header) throw ParseError(ln, "clause before the 'p cnf' header");
    for (const auto& tok : w) {
      const int lit = parse_int<int>(tok, ln, "literal");
      if (pending.empty()) pending_line = ln;
      if (lit == 0) {
        if (pending.size() != 3)
          throw ParseError(pending_line, "clause has " + std::to_string(pending.size()) + " literals, expected 3");
        phi.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      const int var = lit < 0 ? -lit : lit;
      if (var > phi.num_vars)
        throw ParseError(ln, "variable " + std::to_string(var) + " exceeds declared count " + std::to_string(phi.num_vars));
      pending.push_back({var, lit > 0});
    }
  }
  if (!header) throw ParseError(lines.size(), "missing 'p cnf' header");
  if (!pending.empty()) throw ParseError(pending_line, "clause not terminated by 0");
  if (phi.clauses.size() != declared_clauses)
    throw ParseError(lines.size(), "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                                       std::to_string(phi.clauses.size()));
  return phi;
}

// -- LBA ---------------------------------------------------------------------

Lba parse_lba(std::string_view text) {
  Lba b;
  b.k = 0;
  std::map<std::string, std::size_t> states;
  std::map<std::pair<std::size_t, int>, std::size_t> seen;
  bool have_initial = false, have_accepting = false;
  struct Pending {
    std::size_t line;
    std::string src, dst;
    int read, write, move;
  };
  std::vector<Pending> pending;

  const auto lines = split_lines(text);
  for (std::size_t ln = 1; ln <= lines.size(); ++ln) {
    const std::string line = strip_comment(lines[ln - 1]);
    if (line.empty()) continue;
    const auto w = words(line);
    if (w[0] == "alphabet") {
      if (w.size() != 2) throw ParseError(ln, "expected 'alphabet <k>'");
      if (b.k != 0) throw ParseError(ln, "second alphabet line");
      b.k = parse_int<int>(w[1], ln, "alphabet size");
      if (b.k < 2) throw ParseError(ln, "alphabet size must be at least 2");
    } else if (w[0] == "state") {
      if (w.size() != 3 || (w[2] != "init" && w[2] != "accept" && w[2] != "plain"))
        throw ParseError(ln, "expected 'state <name> init|accept|plain'");
      static const std::regex name_re("[A-Za-z0-9_]+");
      if (!std::regex_match(w[1], name_re)) throw ParseError(ln, "invalid state name '" + w[1] + "'");
      if (states.count(w[1])) throw ParseError(ln, "duplicate state '" + w[1] + "'");
      states[w[1]] = b.states.size();
      b.states.push_back(w[1]);
      if (w[2] == "init") {
        if (have_initial) throw ParseError(ln, "second initial state");
        have_initial = true;
        b.initial = states[w[1]];
      } else if (w[2] == "accept") {
        if (have_accepting) throw ParseError(ln, "second accepting state");
        have_accepting = true;
        b.accepting = states[w[1]];
      }
    } else if (w[0] == "trans") {
      if (w.size() != 7 || w[3] != "->") throw ParseError(ln, "expected 'trans <q> <gamma> -> <q'> <gamma'> L|R|S'");
      int move = 0;
      if (w[6] == "L")
        move = -1;
      else if (w[6] == "R")
        move = 1;
      else if (w[6] != "S")
        throw ParseError(ln, "move must be L, R or S");
      pending.push_back({ln, w[1], w[4], parse_int<int>(w[2], ln, "symbol"), parse_int<int>(w[5], ln, "symbol"), move});
    } else {
      throw ParseError(ln, "unknown keyword '" + w[0] + "'");
    }
  }
  if (b.k == 0) throw ParseError(lines.size(), "missing 'alphabet' line");
  if (!have_initial) throw ParseError(lines.size(), "no initial state");
  if (!have_accepting) throw ParseError(lines.size(), "no accepting state");

  for (const auto& p : pending) {
    for (const auto* s : {&p.src, &p.dst})
      if (!states.count(*s)) throw ParseError(p.line, "undeclared state '" + *s + "'");
    for (int s : {p.read, p.write})
      if (s < 1 || s >= b.k) throw ParseError(p.line, "symbol " + std::to_string(s) + " not in 1.." + std::to_string(b.k - 1));
    const std::size_t src = states[p.src];
    if (src == b.accepting) throw ParseError(p.line, "transition leaves the accepting state '" + p.src + "'");
    if (!seen.emplace(std::make_pair(src, p.read), p.line).second)
      throw ParseError(p.line, "nondeterministic: state '" + p.src + "' already has a transition reading " +
                                   std::to_string(p.read));
    b.transitions.push_back({src, p.read, p.write, p.move, states[p.dst]});
  }
  require_valid(b);
  return b;
}

std::vector<int> parse_word(std::string_view text) {
  const std::string s = trim(text);
  std::vector<int> out;
  if (s.find(',') != std::string::npos) {
    std::string tmp = s;
    for (char& c : tmp)
      if (c == ',') c = ' ';
    for (const auto& w : words(tmp)) out.push_back(parse_int<int>(w, 1, "word symbol"));
  } else {
    for (char c : s) {
      if (c < '0' || c > '9') throw ParseError(1, std::string("invalid word symbol '") + c + "'");
      out.push_back(c - '0');
    }
  }
  return out;
}

}  // namespace zenokit
