#include "pelab/machine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace pelab::tm {

OriginalTM classical_cycle_tm(int num_symbols) {
  if (num_symbols < 2) throw std::domain_error("classical_cycle_tm: need >= 2 symbols");
  OriginalTM m;
  m.num_states = 1;
  m.num_symbols = num_symbols;
  m.quantum = false;
  m.delta.assign(1, std::vector<std::vector<TmBranch>>(std::size_t(num_symbols)));
  for (int a = 0; a < num_symbols; ++a)
    m.delta[0][std::size_t(a)] = {TmBranch{0, (a + 1) % num_symbols, 1, {1.0, 0.0}}};
  return m;
}

OriginalTM quantum_hadamard_tm() {
  OriginalTM m;
  m.num_states = 1;
  m.num_symbols = 2;
  m.quantum = true;
  m.delta.assign(1, std::vector<std::vector<TmBranch>>(2));
  double r = 1.0 / std::sqrt(2.0);
  m.delta[0][0] = {TmBranch{0, 0, 1, {r, 0}}, TmBranch{0, 1, 1, {r, 0}}};
  m.delta[0][1] = {TmBranch{0, 0, 1, {r, 0}}, TmBranch{0, 1, 1, {-r, 0}}};
  return m;
}

int MachineLayout::track_dim(int track) const {
  if (track == 0) return 8;
  if (track <= k) return 6;
  if (track == state_track()) return 4 + (original.quantum ? 2 : 1) * original.num_states;
  return 4 + original.num_symbols;
}

std::int64_t MachineLayout::site_dim() const {
  std::int64_t d = 1;
  for (int t = 0; t < tracks(); ++t) d *= track_dim(t);
  return d;
}

Config initial_config(const MachineLayout& layout, const std::vector<int>& input) {
  if (layout.k < 1 || layout.k > 2)
    throw std::domain_error("initial_config: k must be 1 or 2 (see module docs)");
  if (int(input.size()) != layout.n) throw std::domain_error("initial_config: input length != n");
  for (int a : input)
    if (a < 0 || a >= layout.original.num_symbols)
      throw std::domain_error("initial_config: input symbol out of range");
  int T = layout.tracks(), n = layout.n;
  Config c(std::size_t(layout.sites()) * std::size_t(T), char(G_BLANK));
  for (int t = 0; t < T; ++t) {
    cfg_set(layout, c, 0, t, G_LEND);
    cfg_set(layout, c, n + 1, t, G_REND);
  }
  cfg_set(layout, c, 1, 0, G_AR);
  for (int j = 1; j <= layout.k; ++j) cfg_set(layout, c, 1, j, G_AR);
  cfg_set(layout, c, 1, layout.state_track(), layout.state_glyph(0));
  for (int i = 1; i <= n; ++i)
    cfg_set(layout, c, i, layout.tape_track(), layout.tape_glyph(input[std::size_t(i - 1)]));
  return c;
}

std::vector<Violation> validate(const MachineLayout& layout, const Config& config) {
  std::vector<Violation> out;
  int T = layout.tracks(), n = layout.n;
  if (config.size() != std::size_t(layout.sites()) * std::size_t(T)) {
    out.push_back({0, 0, "configuration has the wrong size"});
    return out;
  }
  for (int t = 0; t < T; ++t) {
    if (cfg_get(layout, config, 0, t) != G_LEND)
      out.push_back({0, t, "left endpoint missing"});
    if (cfg_get(layout, config, n + 1, t) != G_REND)
      out.push_back({n + 1, t, "right endpoint missing"});
  }
  auto is_marker = [&](int t, std::uint8_t g) {
    if (t == 0) return g == G_AR || g == G_AL || g == G_CR || g == G_CL;
    if (t <= layout.k) return g == G_AR || g == G_AL;
    return layout.is_state(g) || layout.is_primed(g);
  };
  for (int t = 0; t < T; ++t) {
    if (t == layout.tape_track()) {
      for (int i = 1; i <= n; ++i) {
        std::uint8_t g = cfg_get(layout, config, i, t);
        int a = int(g) - G_FIRST_STATE;
        if (a < 0 || a >= layout.original.num_symbols)
          out.push_back({i, t, "tape cell holds a non-tape glyph"});
      }
      continue;
    }
    // expect used* marker blank*
    int i = 1;
    while (i <= n && cfg_get(layout, config, i, t) == G_USED) ++i;
    if (i > n || !is_marker(t, cfg_get(layout, config, i, t))) {
      out.push_back({i > n ? n : i, t, "no marker on track"});
      continue;
    }
    int marker_site = i;
    ++i;
    while (i <= n && cfg_get(layout, config, i, t) == G_BLANK) ++i;
    if (i <= n) {
      std::uint8_t g = cfg_get(layout, config, i, t);
      if (is_marker(t, g))
        out.push_back({i, t, "second marker (first at site " + std::to_string(marker_site) + ")"});
      else
        out.push_back({i, t, "glyph out of place after the marker"});
    }
    // also reject glyphs outside the track alphabet anywhere
    for (int s = 1; s <= n; ++s) {
      std::uint8_t g = cfg_get(layout, config, s, t);
      if (int(g) >= layout.track_dim(t)) out.push_back({s, t, "glyph outside track alphabet"});
    }
  }
  return out;
}

// --- simulation-track attachment -------------------------------------------

std::vector<TmCase> tm_cases(const MachineLayout& layout, RuleKind kind, int c0) {
  std::vector<TmCase> cases;
  if (kind == RuleKind::none) {
    cases.push_back(TmCase{{}, {TmCaseBranch{{}, {1.0, 0.0}}}});
    return cases;
  }
  int st = layout.state_track(), tp = layout.tape_track();
  const OriginalTM& tmx = layout.original;
  auto id_case = [&](std::vector<TmCaseConstraint> dom) {
    cases.push_back(TmCase{std::move(dom), {TmCaseBranch{{}, {1.0, 0.0}}}});
  };
  id_case({{st, 0, G_USED}, {st, 1, G_USED}});
  id_case({{st, 0, G_BLANK}, {st, 1, G_BLANK}});

  if (kind == RuleKind::right) {
    for (int q = 0; q < tmx.num_states; ++q) {
      std::uint8_t qg = layout.state_glyph(q);
      // marker under the departing head
      if (tmx.quantum && c0 == 1) {
        // leftmost cell: apply delta as the head leaves, priming right movers
        for (int a = 0; a < tmx.num_symbols; ++a) {
          std::vector<TmCaseConstraint> dom = {
              {st, 0, qg}, {st, 1, G_BLANK}, {tp, 0, layout.tape_glyph(a)}};
          const auto& brs = tmx.branches(q, a);
          if (brs.empty()) { id_case(std::move(dom)); continue; }
          TmCase c{std::move(dom), {}};
          for (const auto& b : brs) {
            if (b.dir == 0)
              throw std::domain_error("tm_cases: original TM moves left off the tape at cell 1");
            c.branches.push_back(TmCaseBranch{
                {{st, 0, layout.primed_glyph(b.q2)}, {tp, 0, layout.tape_glyph(b.write)}}, b.amp});
          }
          cases.push_back(std::move(c));
        }
      } else {
        id_case({{st, 0, qg}, {st, 1, G_BLANK}});
      }
      // marker at the destination: the head meets it moving right
      for (int a = 0; a < tmx.num_symbols; ++a) {
        std::vector<TmCaseConstraint> dom = {
            {st, 0, G_USED}, {st, 1, qg}, {tp, 1, layout.tape_glyph(a)}};
        const auto& brs = tmx.branches(q, a);
        if (tmx.quantum) {
          if (brs.empty()) { id_case(std::move(dom)); continue; }
          TmCase c{std::move(dom), {}};
          for (const auto& b : brs) {
            if (b.dir == 0)
              c.branches.push_back(TmCaseBranch{{{st, 0, layout.state_glyph(b.q2)},
                                                 {st, 1, G_BLANK},
                                                 {tp, 1, layout.tape_glyph(b.write)}},
                                                b.amp});
            else
              c.branches.push_back(TmCaseBranch{
                  {{st, 1, layout.primed_glyph(b.q2)}, {tp, 1, layout.tape_glyph(b.write)}},
                  b.amp});
          }
          cases.push_back(std::move(c));
        } else {
          if (brs.size() == 1 && brs[0].dir == 0) {
            cases.push_back(TmCase{std::move(dom),
                                   {TmCaseBranch{{{st, 0, layout.state_glyph(brs[0].q2)},
                                                  {st, 1, G_BLANK},
                                                  {tp, 1, layout.tape_glyph(brs[0].write)}},
                                                 {1.0, 0.0}}}});
          } else {
            id_case(std::move(dom));
          }
        }
      }
    }
    if (tmx.quantum) {
      for (int q = 0; q < tmx.num_states; ++q) {
        id_case({{st, 0, G_USED}, {st, 1, layout.primed_glyph(q)}});  // frozen primed marker
        id_case({{st, 0, layout.primed_glyph(q)}, {st, 1, G_BLANK}}); // leaving a fresh primed cell
      }
    }
    return cases;
  }

  // kind == left: head moved window cell 1 -> cell 0
  for (int q = 0; q < tmx.num_states; ++q) {
    std::uint8_t qg = layout.state_glyph(q);
    id_case({{st, 0, G_USED}, {st, 1, qg}});  // head leaves a shared cell leftward
    for (int a = 0; a < tmx.num_symbols; ++a) {
      std::vector<TmCaseConstraint> dom = {
          {st, 0, qg}, {st, 1, G_BLANK}, {tp, 0, layout.tape_glyph(a)}};
      const auto& brs = tmx.branches(q, a);
      if (!tmx.quantum && brs.size() == 1 && brs[0].dir == 1) {
        cases.push_back(TmCase{std::move(dom),
                               {TmCaseBranch{{{st, 0, G_USED},
                                              {st, 1, layout.state_glyph(brs[0].q2)},
                                              {tp, 0, layout.tape_glyph(brs[0].write)}},
                                             {1.0, 0.0}}}});
      } else {
        id_case(std::move(dom));  // quantum unprimed markers only react to rightward passes
      }
    }
  }
  if (tmx.quantum) {
    for (int q = 0; q < tmx.num_states; ++q) {
      // resolution: the primed marker swaps rightward past the leftward head
      cases.push_back(TmCase{{{st, 0, layout.primed_glyph(q)}, {st, 1, G_BLANK}},
                             {TmCaseBranch{{{st, 0, G_USED}, {st, 1, layout.state_glyph(q)}},
                                           {1.0, 0.0}}}});
      id_case({{st, 0, G_USED}, {st, 1, layout.primed_glyph(q)}});
    }
  }
  return cases;
}

namespace {

bool case_matches(const MachineLayout& l, const Config& c, int window, const TmCase& tc) {
  for (const auto& d : tc.domain)
    if (cfg_get(l, c, window + d.cell, d.track) != d.glyph) return false;
  return true;
}

std::vector<std::pair<Config, std::complex<double>>> attach_tm(const MachineLayout& layout,
                                                               const Config& base, RuleKind kind,
                                                               int window) {
  auto cases = tm_cases(layout, kind, window);
  for (const auto& tc : cases) {
    if (!case_matches(layout, base, window, tc)) continue;
    std::vector<std::pair<Config, std::complex<double>>> out;
    for (const auto& br : tc.branches) {
      Config next = base;
      for (const auto& w : br.writes) cfg_set(layout, next, window + w.cell, w.track, w.glyph);
      out.emplace_back(std::move(next), br.amp);
    }
    return out;
  }
  throw std::logic_error("attach_tm: no simulation-track case matched (invalid configuration?)");
}

// moving marker on clock track j entered `to` from `from`; resolve triggers
void cascade(const MachineLayout& l, Config& c, int j, int from, int to) {
  if (j > l.k) return;
  if (to > from) {  // rightward move
    if (cfg_get(l, c, to, j) == G_AL) {
      cfg_set(l, c, to, j, G_BLANK);
      cfg_set(l, c, from, j, G_AL);
      cascade(l, c, j + 1, to, from);
    } else if (from == 1 && cfg_get(l, c, 1, j) == G_AL) {
      cfg_set(l, c, 1, j, G_AR);  // boundary flip as the mover departs cell 1
    }
  } else {  // leftward move
    if (cfg_get(l, c, to, j) == G_AR) {
      cfg_set(l, c, to, j, G_USED);
      cfg_set(l, c, from, j, G_AR);
      cascade(l, c, j + 1, to, from);
    }
  }
}

struct ClockStep {
  Config next;       // clock tracks updated, simulation tracks untouched
  int window = 0;    // left site of the changed pair
  RuleKind kind = RuleKind::none;
  bool halted = false;
};

ClockStep clock_step(const MachineLayout& l, const Config& c) {
  ClockStep r;
  int n = l.n;
  int h = 0;
  std::uint8_t g = 0;
  for (int s = 1; s <= n; ++s) {
    std::uint8_t v = cfg_get(l, c, s, 0);
    if (v == G_AR || v == G_AL || v == G_CR || v == G_CL) { h = s; g = v; break; }
  }
  if (h == 0) throw std::domain_error("step: no head on track 0");
  r.next = c;
  if (g == G_AR) {
    if (h < n) {
      cfg_set(l, r.next, h, 0, G_USED);
      cfg_set(l, r.next, h + 1, 0, G_AR);
      r.window = h;
    } else {
      cfg_set(l, r.next, n, 0, G_AL);
      r.window = n;
    }
    return r;
  }
  if (g == G_AL) {
    if (h > 1) {
      cfg_set(l, r.next, h, 0, G_BLANK);
      cfg_set(l, r.next, h - 1, 0, G_AL);
      r.window = h - 1;
    } else {
      cfg_set(l, r.next, 1, 0, G_CR);
      r.window = 0;
    }
    return r;
  }
  if (g == G_CR) {
    if (h == n) {
      if (cfg_get(l, c, n, l.k) == G_AR) { r.halted = true; return r; }
      cfg_set(l, r.next, n, 0, G_CL);
      for (int j = 1; j <= l.k - 1; ++j) {
        if (cfg_get(l, r.next, n, j) == G_AR) cfg_set(l, r.next, n, j, G_AL);
        else break;
      }
      r.window = n;
      return r;
    }
    cfg_set(l, r.next, h, 0, G_USED);
    cfg_set(l, r.next, h + 1, 0, G_CR);
    cascade(l, r.next, 1, h, h + 1);
    r.window = h;
    r.kind = RuleKind::right;
    return r;
  }
  // g == G_CL
  if (h == 1) {
    cfg_set(l, r.next, 1, 0, G_CR);
    r.window = 0;
    return r;
  }
  cfg_set(l, r.next, h, 0, G_BLANK);
  cfg_set(l, r.next, h - 1, 0, G_CL);
  cascade(l, r.next, 1, h, h - 1);
  r.window = h - 1;
  r.kind = RuleKind::left;
  return r;
}

std::string clock_substring(const MachineLayout& l, const Config& c) {
  std::string s;
  s.reserve(std::size_t(l.n) * std::size_t(l.k + 1));
  for (int j = 0; j <= l.k; ++j)
    for (int i = 1; i <= l.n; ++i) s.push_back(char(cfg_get(l, c, i, j)));
  return s;
}

}  // namespace

std::vector<std::pair<Config, std::complex<double>>> step_intrinsic(const MachineLayout& layout,
                                                                    const Config& config) {
  ClockStep cs = clock_step(layout, config);
  if (cs.halted) return {};
  return attach_tm(layout, cs.next, cs.kind, cs.window);
}

std::string Rule::signature() const {
  std::string s = std::to_string(window) + "|" + std::to_string(int(kind)) + "|";
  s.append(before.begin(), before.end());
  s.push_back('>');
  s.append(after.begin(), after.end());
  return s;
}

std::pair<RuleSet, Config> build_clock_machine(int n, int k, const OriginalTM& original,
                                               const std::vector<int>& input) {
  MachineLayout layout{n, k, original};
  Config init = initial_config(layout, input);

  // the clock is independent of the simulated machine; run it with all
  // simulation transitions disabled and collect the local rewrites
  MachineLayout frozen = layout;
  for (auto& per_state : frozen.original.delta)
    for (auto& brs : per_state) brs.clear();

  RuleSet rs;
  rs.layout = layout;
  std::map<std::string, std::size_t> seen;
  Config cur = initial_config(frozen, input);
  rs.clock_trace.push_back(clock_substring(frozen, cur));
  for (;;) {
    ClockStep cs = clock_step(frozen, cur);
    if (cs.halted) break;
    Rule rule;
    rule.window = cs.window;
    rule.kind = cs.kind;
    for (int j = 0; j <= k; ++j)
      for (int cell = 0; cell < 2; ++cell) {
        rule.before.push_back(cfg_get(frozen, cur, cs.window + cell, j));
        rule.after.push_back(cfg_get(frozen, cs.next, cs.window + cell, j));
      }
    auto sig = rule.signature();
    if (!seen.count(sig)) {
      seen[sig] = rs.rules.size();
      rs.rules.push_back(rule);
    }
    cur = cs.next;
    rs.clock_trace.push_back(clock_substring(frozen, cur));
  }
  // nondeterminism guard: no two rules may share (window, before)
  std::map<std::string, std::string> fwd;
  for (const auto& r : rs.rules) {
    std::string key = std::to_string(r.window) + "|" + std::string(r.before.begin(), r.before.end());
    std::string val(r.after.begin(), r.after.end());
    auto it = fwd.find(key);
    if (it != fwd.end() && it->second != val)
      throw std::logic_error("build_clock_machine: nondeterministic rule table");
    fwd[key] = val;
  }
  return {rs, init};
}

std::vector<std::pair<Config, std::complex<double>>> step_rule(const RuleSet& rs,
                                                               const Config& config) {
  const MachineLayout& l = rs.layout;
  const Rule* match = nullptr;
  for (const auto& r : rs.rules) {
    bool ok = true;
    std::size_t idx = 0;
    for (int j = 0; j <= l.k && ok; ++j)
      for (int cell = 0; cell < 2 && ok; ++cell, ++idx)
        if (cfg_get(l, config, r.window + cell, j) != r.before[idx]) ok = false;
    if (!ok) continue;
    if (match) throw std::logic_error("step_rule: two rules match one configuration");
    match = &r;
  }
  if (!match) return {};
  Config base = config;
  std::size_t idx = 0;
  for (int j = 0; j <= l.k; ++j)
    for (int cell = 0; cell < 2; ++cell, ++idx)
      cfg_set(l, base, match->window + cell, j, match->after[idx]);
  return attach_tm(l, base, match->kind, match->window);
}

StepResult step(const RuleSet& rs, const Superposition& s) {
  StepResult out;
  for (const auto& [cfg, amp] : s) {
    auto branches = step_rule(rs, cfg);
    if (branches.empty()) { out.halted = true; continue; }
    for (auto& [next, a] : branches) out.next[next] += amp * a;
  }
  return out;
}

std::vector<Superposition> run_history(const RuleSet& rs, const Config& init, long t_max) {
  std::vector<Superposition> hist;
  Superposition cur;
  cur[init] = {1.0, 0.0};
  hist.push_back(cur);
  for (long t = 0; t < t_max; ++t) {
    StepResult r = step(rs, cur);
    if (r.halted) break;
    cur = std::move(r.next);
    hist.push_back(cur);
  }
  return hist;
}

long clock_value(const RuleSet& rs, const Config& config) {
  std::string key = clock_substring(rs.layout, config);
  for (std::size_t t = 0; t < rs.clock_trace.size(); ++t)
    if (rs.clock_trace[t] == key) return long(t);
  throw NotFoundError("clock_value: clock configuration not on the trace");
}

long halting_time(int n, int k, const OriginalTM& original) {
  auto [rs, init] = build_clock_machine(n, k, original, std::vector<int>(std::size_t(n), 0));
  return rs.total_steps();
}

RuntimeFit predicted_runtime(int k, int n_lo, int n_hi, const OriginalTM& original) {
  RuntimeFit fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (int n = n_lo; n <= n_hi; ++n) {
    long t = halting_time(n, k, original);
    fit.counts.emplace_back(n, t);
    double x = std::log(double(n)), y = std::log(double(t));
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++m;
  }
  fit.exponent = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return fit;
}

std::string render_track(const MachineLayout& layout, const Config& config, int track) {
  std::string s;
  for (int i = 1; i <= layout.n; ++i) {
    std::uint8_t g = cfg_get(layout, config, i, track);
    char ch = '?';
    if (g == G_BLANK) ch = '.';
    else if (g == G_USED) ch = '#';
    else if (track == 0 && g == G_CR) ch = 'R';
    else if (track == 0 && g == G_CL) ch = 'L';
    else if (track <= layout.k && g == G_AR) ch = 'r';
    else if (track <= layout.k && g == G_AL) ch = 'l';
    else if (track == 0 && g == G_AR) ch = 'r';
    else if (track == 0 && g == G_AL) ch = 'l';
    else if (track == layout.state_track() && layout.is_state(g)) ch = char('A' + (g - G_FIRST_STATE));
    else if (track == layout.state_track() && layout.is_primed(g))
      ch = char('a' + (g - G_FIRST_STATE - layout.original.num_states));
    else if (track == layout.tape_track()) ch = char('0' + (g - G_FIRST_STATE));
    s.push_back(ch);
  }
  return s;
}

}  // namespace pelab::tm
