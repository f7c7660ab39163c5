#pragma once

// Command dispatch for the fantor executable. Every command renders a
// deterministic report, as text or (with json = true) as a JSON object
// carrying the same fields.
//
// Exit status: 0 on success, 1 when the input is not a valid fan (or cannot
// be parsed), 2 when the fan is valid but outside the hypotheses of the
// requested computation.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fantor/corpus.hpp"
#include "fantor/error.hpp"
#include "fantor/fan.hpp"
#include "fantor/fan_io.hpp"
#include "fantor/ktheory.hpp"
#include "fantor/limits.hpp"
#include "fantor/simplicial.hpp"

namespace fantor::cli {

using nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::optional<std::string> kq;     // higher-tor
  std::optional<std::string> cone;   // blowup, orbit
  std::optional<std::string> coeff;  // homology, links
};

struct RunResult {
  int exit_code = 0;
  std::string output;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"validate", "homology", "links", "check-flat",
                                              "check-limits", "check-safe", "tor", "higher-tor",
                                              "e1", "blowup", "orbit", "selftest"};
  return names;
}

namespace detail {

inline std::string yes_no(bool b) { return b ? "YES" : "NO"; }

inline std::string degree_label(long i) { return std::to_string(i); }

inline ordered_json face_json(const Fan& fan, const Face& f) {
  ordered_json rays = ordered_json::array();
  for (auto i : f) {
    ordered_json v = ordered_json::array();
    for (const auto& x : fan.rays()[i]) v.push_back(x.str());
    rays.push_back(v);
  }
  return rays;
}

inline ordered_json defects_json(const Fan& fan, const std::vector<LinkDefect>& ds) {
  ordered_json a = ordered_json::array();
  for (const auto& d : ds)
    a.push_back({{"face", face_json(fan, d.face)}, {"degree", d.degree}, {"group", d.group.to_string()}});
  return a;
}

inline void defect_lines(std::ostringstream& os, const Fan& fan, const std::vector<LinkDefect>& ds,
                         const std::string& what) {
  for (const auto& d : ds)
    os << "  offender: " << (d.face.empty() ? what : "lk " + fan.describe(d.face)) << " H~_" << d.degree
       << " = " << d.group.to_string() << "\n";
}

inline AbelianGroupInv coefficient_group(const Options& o) {
  return o.coeff ? AbelianGroupInv::parse(*o.coeff) : AbelianGroupInv::free(1);
}

struct Output {
  std::ostringstream text;
  ordered_json doc = ordered_json::object();
  int code = 0;
};

inline void cmd_validate(const Fan& fan, Output& out) {
  out.doc["valid"] = true;
  out.doc["name"] = fan.name();
  out.doc["rank"] = fan.rank();
  ordered_json rays = ordered_json::array();
  for (const auto& r : fan.rays()) rays.push_back(vector_to_string(r));
  out.doc["rays"] = rays;
  ordered_json cones = ordered_json::array();
  for (const auto& m : fan.max_cones()) cones.push_back(m);
  out.doc["maximal_cones"] = cones;
  out.doc["cone_count"] = fan.cones().size();
  out.doc["complete"] = is_complete(fan);

  auto& t = out.text;
  t << "fan: " << (fan.name().empty() ? "(unnamed)" : fan.name()) << "\n";
  t << "rank: " << fan.rank() << "\n";
  t << "rays:\n";
  for (std::size_t i = 0; i < fan.rays().size(); ++i) t << "  " << i << ": " << vector_to_string(fan.rays()[i]) << "\n";
  t << "maximal cones:\n";
  for (const auto& m : fan.max_cones()) t << "  " << index_set_to_string(m) << " = " << fan.describe(m) << "\n";
  t << "cones: " << fan.cones().size() << "\n";
  t << "complete: " << yes_no(is_complete(fan)) << "\n";
  t << "valid: YES\n";
}

inline void cmd_homology(const Fan& fan, const Options& o, Output& out) {
  const auto cx = complex_of_fan(fan);
  const auto g = coefficient_group(o);
  const auto h = reduced_homology(cx, g);
  const auto co = reduced_cohomology(cx, g);
  out.text << "complex: " << cx.vertex_count() << " vertices, dimension " << cx.dimension() << "\n";
  out.text << "coefficients: " << g.to_string() << "\n";
  ordered_json hj = ordered_json::object(), cj = ordered_json::object();
  for (long i = -1; i <= cx.dimension(); ++i) {
    out.text << "H~_" << i << " = " << degree(h, i).to_string() << "\n";
    hj[degree_label(i)] = degree(h, i).to_string();
  }
  for (long i = -1; i <= cx.dimension(); ++i) {
    out.text << "H~^" << i << " = " << degree(co, i).to_string() << "\n";
    cj[degree_label(i)] = degree(co, i).to_string();
  }
  out.doc = {{"vertices", cx.vertex_count()}, {"dimension", cx.dimension()},
             {"coefficients", g.to_string()}, {"homology", hj}, {"cohomology", cj}};
}

inline void cmd_links(const Fan& fan, const Options& o, Output& out) {
  const auto cx = complex_of_fan(fan);
  const auto g = coefficient_group(o);
  ordered_json arr = ordered_json::array();
  for (const auto& f : cx.faces()) {
    if (f.empty()) continue;
    const auto lk = link(cx, f);
    const auto h = reduced_homology(lk, g);
    out.text << "lk " << fan.describe(f) << ": dim " << lk.dimension();
    ordered_json hj = ordered_json::object();
    for (long i = -1; i <= lk.dimension(); ++i) {
      out.text << (i == -1 ? "; " : ", ") << "H~_" << i << " = " << degree(h, i).to_string();
      hj[degree_label(i)] = degree(h, i).to_string();
    }
    out.text << "\n";
    arr.push_back({{"face", face_json(fan, f)}, {"dimension", lk.dimension()}, {"homology", hj}});
  }
  out.doc = {{"coefficients", g.to_string()}, {"links", arr}};
}

inline void cmd_check_flat(const Fan& fan, Output& out) {
  const auto r = flatness_report(fan);
  auto& t = out.text;
  t << "pure: " << yes_no(r.pure) << "\n";
  t << "link conditions: " << yes_no(r.link_conditions_ok) << "\n";
  defect_lines(t, fan, r.link_offenders, "S");
  t << "global condition: " << yes_no(r.global_ok) << "\n";
  defect_lines(t, fan, r.global_offenders, "S");
  t << "flat: " << yes_no(r.flat) << "; Merkurjev spectral sequence "
    << (r.merkurjev_degenerates ? "degenerates" : "does not degenerate") << "\n";
  out.doc = {{"pure", r.pure},
             {"link_conditions_ok", r.link_conditions_ok},
             {"link_offenders", defects_json(fan, r.link_offenders)},
             {"global_ok", r.global_ok},
             {"global_offenders", defects_json(fan, r.global_offenders)},
             {"flat", r.flat},
             {"merkurjev_degenerates", r.merkurjev_degenerates}};
}

inline void cmd_check_limits(const Fan& fan, Output& out) {
  const auto r = polyhedral::enough_limits(fan);
  ordered_json witness = ordered_json::array();
  out.text << "enough limits: " << yes_no(r.enough_limits) << "\n";
  if (r.enough_limits) {
    out.text << "witness:\n";
    for (const auto& c : r.witness) {
      out.text << "  tau " << fan.describe(c.tau) << " -> sigma " << fan.describe(c.sigma) << "\n";
      witness.push_back({{"tau", face_json(fan, c.tau)}, {"sigma", face_json(fan, c.sigma)}});
    }
  } else {
    out.text << "certificate: exhausted search over " << r.constraining_terms << " constraining terms ("
             << r.nodes_visited << " nodes visited)\n";
  }
  out.doc = {{"enough_limits", r.enough_limits},
             {"witness", witness},
             {"constraining_terms", r.constraining_terms},
             {"nodes_visited", r.nodes_visited}};
}

inline void cmd_check_safe(const Fan& fan, Output& out) {
  const auto r = subdivision_safe(fan);
  out.text << "subdivision safe: " << yes_no(r.safe) << "\n";
  defect_lines(out.text, fan, r.offenders, "S");
  out.doc = {{"safe", r.safe}, {"offenders", defects_json(fan, r.offenders)}};
}

inline void render_table(const TorTable& t, Output& out) {
  ordered_json tj = ordered_json::object();
  for (const auto& [p, g] : t.entries) {
    out.text << "Tor_" << p << " = " << g.to_string() << "\n";
    tj[std::to_string(p)] = g.to_string();
  }
  out.doc["n"] = t.n;
  out.doc["tor"] = tj;
}

inline void cmd_tor(const Fan& fan, Output& out) { render_table(tor_table(fan), out); }

inline void cmd_higher_tor(const Fan& fan, const Options& o, Output& out) {
  if (!o.kq) throw Error(Errc::ParseError, "higher-tor needs --kq <group>");
  const auto kq = AbelianGroupInv::parse(*o.kq);
  const auto t = higher_tor_table(fan, kq);
  out.text << "K_q = " << kq.to_string() << "\n";
  out.doc["kq"] = kq.to_string();
  render_table(t, out);
}

inline void cmd_e1(const Fan& fan, Output& out) {
  const auto page = merkurjev_e1_page(fan);
  ordered_json entries = ordered_json::array();
  for (const auto& [pq, g] : page.entries) {
    out.text << "E1^{" << pq.first << "," << pq.second << "} = " << g.to_string() << "\n";
    entries.push_back({{"p", pq.first}, {"q", pq.second}, {"group", g.to_string()}});
  }
  out.text << "tor0 rank bound: " << page.tor0_rank_bound << "\n";
  out.doc = {{"n", page.n}, {"entries", entries}, {"tor0_rank_bound", page.tor0_rank_bound}};
}

inline RaySet cone_option(const Fan& fan, const Options& o) {
  if (!o.cone) throw Error(Errc::ParseError, "this command needs --cone <rays>");
  return fan.cone_from_vectors(io::parse_cone_argument(*o.cone));
}

inline void cmd_blowup(const Fan& fan, const Options& o, Output& out) {
  const RaySet sigma = cone_option(fan, o);
  const auto r = blowup_tor_delta(fan, sigma);
  out.text << "cone: " << fan.describe(sigma) << "\n";
  out.text << "orbit closure: rank " << r.orbit_fan.rank() << ", " << r.orbit_fan.max_cones().size()
           << " maximal cones\n";
  ordered_json dj = ordered_json::object();
  for (const auto& [i, g] : r.delta) {
    out.text << "delta_" << i << " = " << g.to_string() << "\n";
    dj[std::to_string(i)] = g.to_string();
  }
  out.text << "invariant: " << yes_no(r.invariant) << "\n";
  out.doc = {{"cone", face_json(fan, sigma)},
             {"orbit_fan", io::fan_to_json(r.orbit_fan.data())},
             {"delta", dj},
             {"invariant", r.invariant}};
}

inline void cmd_orbit(const Fan& fan, const Options& o, Output& out) {
  const RaySet sigma = cone_option(fan, o);
  const Fan y = orbit_closure_fan(fan, sigma);
  out.text << io::format_fan_file(y.data());
  out.doc = io::fan_to_json(y.data());
}

}  // namespace detail

RunResult selftest(bool json);

/// Runs one command on already parsed fan data.
inline RunResult run(const std::string& command, const std::optional<FanData>& data, const Options& opts = {}) {
  if (command == "selftest") return selftest(opts.json);
  detail::Output out;
  auto finish = [&](int code) {
    RunResult r;
    r.exit_code = code;
    r.output = opts.json ? out.doc.dump(2) + "\n" : out.text.str();
    return r;
  };
  if (!data) {
    out.text << "error: command '" << command << "' needs a fan file\n";
    out.doc = {{"error", "missing fan file"}};
    return finish(1);
  }

  std::optional<Fan> fan;
  try {
    fan = validate_fan(*data);
  } catch (const Error& e) {
    out.text << "valid: NO (" << e.what() << ")\n";
    out.doc = {{"valid", false}, {"error", errc_name(e.code())}, {"message", e.what()}};
    return finish(1);
  }

  try {
    if (command == "validate") detail::cmd_validate(*fan, out);
    else if (command == "homology") detail::cmd_homology(*fan, opts, out);
    else if (command == "links") detail::cmd_links(*fan, opts, out);
    else if (command == "check-flat") detail::cmd_check_flat(*fan, out);
    else if (command == "check-limits") detail::cmd_check_limits(*fan, out);
    else if (command == "check-safe") detail::cmd_check_safe(*fan, out);
    else if (command == "tor") detail::cmd_tor(*fan, out);
    else if (command == "higher-tor") detail::cmd_higher_tor(*fan, opts, out);
    else if (command == "e1") detail::cmd_e1(*fan, out);
    else if (command == "blowup") detail::cmd_blowup(*fan, opts, out);
    else if (command == "orbit") detail::cmd_orbit(*fan, opts, out);
    else {
      out.text << "error: unknown command '" << command << "'\n";
      out.doc = {{"error", "unknown command"}};
      return finish(1);
    }
  } catch (const Error& e) {
    out.text.str("");
    out.doc = {{"error", errc_name(e.code())}, {"message", e.what()}};
    if (e.code() == Errc::HypothesesNotMet) {
      out.text << "hypotheses not met: " << e.what() << "\n";
      return finish(2);
    }
    out.text << "error: " << e.what() << "\n";
    return finish(1);
  }
  return finish(0);
}

/// Parses fan file text and runs the command; parse failures exit with 1.
inline RunResult run_on_text(const std::string& command, const std::string& text, const Options& opts = {}) {
  FanData data;
  try {
    data = io::parse_fan_file(text);
  } catch (const Error& e) {
    RunResult r;
    r.exit_code = 1;
    if (opts.json)
      r.output = ordered_json({{"valid", false}, {"error", errc_name(e.code())}, {"message", e.what()}}).dump(2) + "\n";
    else
      r.output = std::string("valid: NO (") + e.what() + ")\n";
    return r;
  }
  return run(command, data, opts);
}

namespace detail {

struct GoldenCase {
  std::string fan;
  std::string command;
  Options options;
  int exit_code;
  std::vector<std::string> expected_lines;
};

// Expected values come from hand computation on the bundled fans.
inline std::vector<GoldenCase> golden_cases() {
  Options none;
  Options kq3;
  kq3.kq = "Z/3";
  Options blow_e1e2;
  blow_e1e2.cone = "1,0,0,0;0,1,0,0";
  Options orbit_e1;
  orbit_e1.cone = "1,0";
  Options blow_full3;
  blow_full3.cone = "1,0,0;0,1,0;0,0,1";
  return {
      {"affine_plane", "validate", none, 0, {"valid: YES", "complete: NO"}},
      {"affine_plane", "homology", none, 0, {"H~_-1 = 0", "H~_0 = 0", "H~_1 = 0"}},
      {"affine_plane", "check-flat", none, 0, {"flat: YES; Merkurjev spectral sequence degenerates"}},
      {"affine_plane", "check-limits", none, 0, {"enough limits: YES"}},
      {"affine_plane", "tor", none, 0, {"Tor_1 = 0", "Tor_2 = 0"}},
      {"affine_plane", "orbit", orbit_e1, 0, {"  \"dim\": 1,", "  \"rays\": [[1]],"}},
      {"projective_line", "validate", none, 0, {"complete: YES"}},
      {"projective_line", "homology", none, 0, {"H~_0 = Z"}},
      {"projective_line", "e1", none, 0,
       {"E1^{1,-1} = Z^2", "E1^{2,-2} = Z", "E1^{2,-1} = Z", "tor0 rank bound: 3"}},
      {"projective_line", "tor", none, 0, {"Tor_1 = 0"}},
      {"projective_plane", "validate", none, 0, {"complete: YES"}},
      {"projective_plane", "homology", none, 0, {"H~_0 = 0", "H~_1 = Z"}},
      {"projective_plane", "check-flat", none, 0, {"flat: YES; Merkurjev spectral sequence degenerates"}},
      {"projective_plane", "check-limits", none, 0, {"enough limits: YES"}},
      {"projective_plane", "tor", none, 0, {"Tor_1 = 0", "Tor_2 = 0"}},
      {"p1_x_p1", "validate", none, 0, {"complete: YES"}},
      {"p1_x_p1", "check-limits", none, 0, {"enough limits: YES"}},
      {"p1_x_p1", "tor", none, 0, {"Tor_1 = 0", "Tor_2 = 0"}},
      {"p1_x_p1_x_p1", "validate", none, 0, {"complete: YES"}},
      {"p1_x_p1_x_p1", "check-flat", none, 0, {"flat: YES; Merkurjev spectral sequence degenerates"}},
      {"p1_x_p1_x_p1", "check-limits", none, 0, {"enough limits: YES"}},
      {"p1_x_p1_x_p1", "tor", none, 0, {"Tor_1 = 0", "Tor_2 = 0", "Tor_3 = 0"}},
      {"p1_x_p1_x_p1", "blowup", blow_full3, 0, {"delta_1 = 0", "invariant: YES"}},
      {"two_opposite_quadrants", "homology", none, 0, {"H~_0 = Z", "H~_1 = 0"}},
      {"two_opposite_quadrants", "check-flat", none, 0,
       {"global condition: NO", "flat: NO; Merkurjev spectral sequence does not degenerate"}},
      {"two_opposite_quadrants", "check-safe", none, 0, {"subdivision safe: YES"}},
      {"two_opposite_quadrants", "tor", none, 0, {"Tor_1 = Z", "Tor_2 = 0"}},
      {"two_opposite_quadrants", "higher-tor", kq3, 0, {"Tor_1 = Z/3", "Tor_2 = 0"}},
      {"two_opposite_quadrants", "e1", none, 0, {"E1^{3,-4} = Z"}},
      {"octant_example", "validate", none, 0, {"complete: NO", "valid: YES"}},
      {"octant_example", "check-limits", none, 0, {"enough limits: NO"}},
      {"octant_example", "check-flat", none, 0, {"flat: YES; Merkurjev spectral sequence degenerates"}},
      {"octant_example", "check-safe", none, 0, {"subdivision safe: YES"}},
      {"octant_example", "tor", none, 0, {"Tor_1 = 0", "Tor_2 = 0", "Tor_3 = 0"}},
      {"rank4_blowup_example", "check-safe", none, 0, {"subdivision safe: NO"}},
      {"rank4_blowup_example", "tor", none, 2, {}},
      {"rank4_blowup_example", "blowup", blow_e1e2, 0, {"delta_1 = Z", "invariant: NO"}},
      {"split_link_example", "check-safe", none, 0, {"subdivision safe: NO"}},
      {"split_link_example", "tor", none, 2, {}},
      {"split_link_example", "e1", none, 2, {}},
  };
}

}  // namespace detail

inline RunResult selftest(bool json) {
  std::ostringstream os;
  ordered_json results = ordered_json::array();
  std::size_t passed = 0;
  const auto cases = detail::golden_cases();
  for (const auto& c : cases) {
    RunResult r = run(c.command, corpus::by_name(c.fan), c.options);
    bool ok = r.exit_code == c.exit_code;
    std::string missing;
    for (const auto& line : c.expected_lines) {
      const bool found = ("\n" + r.output).find("\n" + line + "\n") != std::string::npos;
      if (!found && missing.empty()) missing = line;
      ok = ok && found;
    }
    // determinism: a second run must be byte-identical
    ok = ok && run(c.command, corpus::by_name(c.fan), c.options).output == r.output;
    if (ok) ++passed;
    os << (ok ? "PASS " : "FAIL ") << c.fan << " " << c.command;
    if (!ok) os << " (exit " << r.exit_code << ", expected " << c.exit_code
                << (missing.empty() ? "" : "; missing \"" + missing + "\"") << ")";
    os << "\n";
    results.push_back({{"fan", c.fan}, {"command", c.command}, {"passed", ok}});
  }
  // every command on every bundled fan: valid output, stable exit code
  std::size_t total = cases.size();
  for (const auto& data : corpus::all()) {
    const Fan fan = validate_fan(data);
    Options o;
    o.kq = "Z/2";
    for (const auto& m : fan.max_cones()) {
      if (m.size() < 2) continue;
      std::string c;
      for (std::size_t k = 0; k < 2; ++k) {
        if (k) c += ";";
        const auto& r = fan.rays()[m[k]];
        for (std::size_t j = 0; j < r.size(); ++j) c += (j ? "," : "") + r[j].str();
      }
      o.cone = c;
      break;
    }
    for (const auto& cmd : commands()) {
      if (cmd == "selftest" || ((cmd == "blowup" || cmd == "orbit") && !o.cone)) continue;
      ++total;
      RunResult r = run(cmd, data, o);
      RunResult j = run(cmd, data, Options{true, o.kq, o.cone, o.coeff});
      bool ok = (r.exit_code == 0 || r.exit_code == 2) && r.exit_code == j.exit_code &&
                run(cmd, data, o).output == r.output && !ordered_json::parse(j.output).is_null();
      if (ok) ++passed;
      os << (ok ? "PASS " : "FAIL ") << data.name << " " << cmd << " (sweep, exit " << r.exit_code << ")\n";
      results.push_back({{"fan", data.name}, {"command", cmd}, {"sweep", true}, {"passed", ok}});
    }
  }
  os << "selftest: " << passed << "/" << total << " passed\n";
  RunResult out;
  out.exit_code = passed == total ? 0 : 1;
  out.output = json ? ordered_json({{"passed", passed}, {"total", total}, {"cases", results}}).dump(2) + "\n"
                    : os.str();
  return out;
}

}  // namespace fantor::cli
