#include "mulrep/report.hpp"

#include <sstream>

#include <json.hpp>

namespace mulrep {

namespace {

using ojson = nlohmann::ordered_json;

std::string tuple_text(const std::vector<std::uint64_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

std::string set_text(const std::vector<std::uint64_t>& t) {
  std::string s = "{";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + "}";
}

std::string t_text(const std::optional<std::uint64_t>& t) { return t ? std::to_string(*t) : "inf"; }

ojson t_json(const std::optional<std::uint64_t>& t) { return t ? ojson(*t) : ojson("inf"); }

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

constexpr const char* kWindowNote = "window evidence: exact extrema over a finite window, not a liminf/limsup";

}  // namespace

std::optional<Format> parse_format(const std::string& text) {
  if (text == "text") return Format::text;
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  return std::nullopt;
}

std::string render_witness(const RepWitness& w, Format f) {
  if (f == Format::json) {
    ojson j;
    j["n"] = w.n;
    j["count"] = w.count;
    j["tuples"] = w.tuples;
    j["truncated"] = w.truncated;
    return dump(j);
  }
  if (f == Format::csv) return "n,count\n" + std::to_string(w.n) + "," + std::to_string(w.count) + "\n";
  std::ostringstream out;
  out << "n = " << w.n << "\ncount = " << w.count << "\n";
  for (const auto& t : w.tuples) out << "  " << tuple_text(t) << "\n";
  if (w.truncated) out << "  ... (" << w.count - w.tuples.size() << " more not listed)\n";
  return out.str();
}

std::string render_window(const WindowStats& s, Format f) {
  if (f == Format::json) {
    ojson j;
    j["lo"] = s.lo;
    j["hi"] = s.hi;
    j["min_count"] = s.min_count;
    j["argmin"] = s.argmin;
    j["max_count"] = s.max_count;
    j["argmax"] = s.argmax;
    j["note"] = kWindowNote;
    return dump(j);
  }
  if (f == Format::csv)
    return "lo,hi,min_count,argmin,max_count,argmax\n" + std::to_string(s.lo) + "," + std::to_string(s.hi) + "," +
           std::to_string(s.min_count) + "," + std::to_string(s.argmin) + "," + std::to_string(s.max_count) + "," +
           std::to_string(s.argmax) + "\n";
  std::ostringstream out;
  out << "window [" << s.lo << ", " << s.hi << "]\n"
      << "min_count = " << s.min_count << " (argmin " << s.argmin << ")\n"
      << "max_count = " << s.max_count << " (argmax " << s.argmax << ")\n"
      << "(" << kWindowNote << ")\n";
  return out.str();
}

std::string render_scan(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& rows, Format f) {
  if (f == Format::json) {
    ojson j = ojson::array();
    for (const auto& [n, c] : rows) j.push_back({{"n", n}, {"count", c}});
    return dump(j);
  }
  std::ostringstream out;
  out << (f == Format::csv ? "n,count\n" : "");
  for (const auto& [n, c] : rows) out << n << (f == Format::csv ? "," : " ") << c << "\n";
  return out.str();
}

std::string render_verify(const VerifyReport& r, Format f) {
  if (f == Format::csv) {
    std::ostringstream out;
    out << "n,closed_form,brute_force,match\n";
    for (const auto& row : r.rows)
      out << row.n << "," << row.closed_form << "," << row.brute_force << "," << (row.match ? "true" : "false") << "\n";
    return out.str();
  }
  if (f == Format::json) {
    ojson j;
    j["construction"] = r.construction;
    j["claimed"] = {{"s", r.claimed.s}, {"t", t_json(r.claimed.t)}};
    j["scan_bound"] = r.scan_bound;
    j["mismatches"] = r.mismatches;
    j["window"] = {{"lo", r.window.lo},         {"hi", r.window.hi},
                   {"min_count", r.window.min_count}, {"argmin", r.window.argmin},
                   {"max_count", r.window.max_count}, {"argmax", r.window.argmax}};
    j["bounds"] = ojson::array();
    for (const auto& b : r.bounds)
      j["bounds"].push_back({{"check", b.description},
                             {"checked", b.checked},
                             {"violations", b.violations},
                             {"first_violation", b.first_violation}});
    if (!r.evidence_label.empty()) {
      j["evidence_label"] = r.evidence_label;
      j["evidence"] = ojson::array();
      for (const auto& e : r.evidence) j["evidence"].push_back({{"n", e.n}, {"count", e.count}});
      j["evidence_strictly_increasing"] = r.evidence_strictly_increasing;
    }
    j["passed"] = r.passed();
    return dump(j);
  }
  std::ostringstream out;
  out << "construction: " << r.construction << "\n"
      << "claimed (liminf, limsup): (" << r.claimed.s << ", " << t_text(r.claimed.t) << ")\n"
      << "closed form vs enumeration, n = 1.." << r.scan_bound << ": "
      << (r.mismatches ? std::to_string(r.mismatches) + " mismatches" : std::string("all agree")) << "\n";
  if (r.mismatches) {
    int shown = 0;
    for (const auto& row : r.rows)
      if (!row.match && shown++ < 10)
        out << "  n=" << row.n << " closed_form=" << row.closed_form << " brute_force=" << row.brute_force << "\n";
  }
  out << "window [" << r.window.lo << ", " << r.window.hi << "]: min " << r.window.min_count << " at "
      << r.window.argmin << ", max " << r.window.max_count << " at " << r.window.argmax << " (" << kWindowNote << ")\n";
  for (const auto& b : r.bounds) {
    out << "check: " << b.description << ": " << b.checked << " checked, ";
    if (b.violations)
      out << b.violations << " violations (first at n=" << b.first_violation << ")\n";
    else
      out << "ok\n";
  }
  if (!r.evidence_label.empty()) {
    out << r.evidence_label << "\n";
    for (const auto& e : r.evidence) out << "  g(" << e.n << ") = " << e.count << "\n";
    out << "  strictly increasing: " << (r.evidence_strictly_increasing ? "yes" : "no") << "\n";
  }
  out << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_mh_table(unsigned h, const std::vector<MhRow>& rows, Format f) {
  if (f == Format::json) {
    ojson j;
    j["h"] = h;
    j["rows"] = ojson::array();
    for (const auto& r : rows) j["rows"].push_back({{"s", r.s}, {"t", t_json(r.t)}, {"construction", r.construction}});
    return dump(j);
  }
  std::ostringstream out;
  if (f == Format::csv) {
    out << "s,t,construction\n";
    for (const auto& r : rows) out << r.s << "," << t_text(r.t) << ",\"" << r.construction << "\"\n";
    return out.str();
  }
  out << "M(" << h << ") rows:\n";
  for (const auto& r : rows) out << "  (" << r.s << ", " << t_text(r.t) << ")  " << r.construction << "\n";
  return out.str();
}

std::string render_search(const SearchOutcome& o, Format f) {
  if (f == Format::json) {
    ojson j;
    j["strategy"] = strategy_name(o.strategy);
    j["target"] = o.target;
    j["found"] = o.witness.has_value();
    if (o.witness) {
      j["n"] = o.witness->n;
      j["count"] = o.witness->count;
      j["tuples"] = o.witness->tuples;
      j["truncated"] = o.witness->truncated;
    }
    j["candidates_tried"] = o.candidates_tried;
    j["max_count_seen"] = o.max_count_seen;
    j["argmax"] = o.argmax;
    j["guarantee"] = o.guarantee();
    return dump(j);
  }
  if (f == Format::csv) {
    std::ostringstream out;
    out << "found,n,count,candidates_tried,max_count_seen,argmax\n"
        << (o.witness ? "true," + std::to_string(o.witness->n) + "," + std::to_string(o.witness->count)
                      : std::string("false,,"))
        << "," << o.candidates_tried << "," << o.max_count_seen << "," << o.argmax << "\n";
    return out.str();
  }
  std::ostringstream out;
  out << "strategy: " << strategy_name(o.strategy) << ", target: " << o.target << "\n";
  if (o.witness)
    out << "found: n = " << o.witness->n << " with count " << o.witness->count << "\n"
        << "guarantee: " << o.guarantee() << "\n";
  else
    out << "none\n";
  out << "candidates tried: " << o.candidates_tried << "\nmax count seen: " << o.max_count_seen << " at n = " << o.argmax
      << "\n";
  return out.str();
}

std::string render_partitions(std::uint64_t q, const std::vector<std::vector<PrimeSet>>& tuples, Format f) {
  if (f == Format::json) {
    ojson j;
    j["q"] = q;
    j["count"] = tuples.size();
    j["tuples"] = ojson::array();
    for (const auto& t : tuples) {
      ojson row = ojson::array();
      for (const auto& s : t) row.push_back(s.primes());
      j["tuples"].push_back(row);
    }
    return dump(j);
  }
  std::ostringstream out;
  if (f == Format::csv) {
    out << "index,blocks,factors\n";
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      std::string blocks, factors;
      for (std::size_t b = 0; b < tuples[i].size(); ++b) {
        blocks += (b ? " " : "") + tuples[i][b].to_string();
        factors += (b ? " " : "") + std::to_string(tuples[i][b].product());
      }
      out << i << ",\"" << blocks << "\",\"" << factors << "\"\n";
    }
    return out.str();
  }
  out << "q = " << q << ", " << tuples.size() << " ordered partitions of its prime set\n";
  for (const auto& t : tuples) {
    std::string blocks, factors;
    for (std::size_t b = 0; b < t.size(); ++b) {
      blocks += (b ? ", " : "") + t[b].to_string();
      factors += (b ? "," : "") + std::to_string(t[b].product());
    }
    out << "  (" << blocks << ")  ->  (" << factors << ")\n";
  }
  return out.str();
}

std::string render_correspondence(std::uint64_t q, const PrimeSet& primes, const CorrespondenceResult& r, Format f) {
  if (f == Format::json) {
    ojson j;
    j["q"] = q;
    j["phi"] = primes.primes();
    j["omega"] = primes.size();
    j["system_count"] = r.system_count;
    j["cover_count"] = r.cover_count;
    j["equal"] = r.equal;
    return dump(j);
  }
  if (f == Format::csv)
    return "q,omega,system_count,cover_count,equal\n" + std::to_string(q) + "," + std::to_string(primes.size()) + "," +
           std::to_string(r.system_count) + "," + std::to_string(r.cover_count) + "," + (r.equal ? "true" : "false") +
           "\n";
  std::ostringstream out;
  out << "q = " << q << ", phi(q) = " << primes.to_string() << ", omega = " << primes.size() << "\n"
      << "g_B(q) = " << r.system_count << "\n"
      << "ordered covers of phi(q) = " << r.cover_count << "\n"
      << (r.equal ? "equal" : "MISMATCH") << "\n";
  return out.str();
}

std::string render_subset(const std::optional<std::vector<std::uint64_t>>& subset, Format f) {
  if (f == Format::json) {
    ojson j;
    j["found"] = subset.has_value();
    if (subset) j["subset"] = *subset;
    return dump(j);
  }
  if (f == Format::csv) {
    std::string s = "found,subset\n";
    if (!subset) return s + "false,\n";
    std::string items;
    for (std::size_t i = 0; i < subset->size(); ++i) items += (i ? " " : "") + std::to_string((*subset)[i]);
    return s + "true," + items + "\n";
  }
  return subset ? set_text(*subset) + "\n" : std::string("none\n");
}

std::string render_chain(const std::optional<HomogeneousChain>& chain, Format f) {
  if (f == Format::json) {
    ojson j;
    j["found"] = chain.has_value();
    if (chain) {
      j["levels"] = ojson::array();
      for (std::size_t k = 0; k < chain->subsets.size(); ++k) {
        ojson level{{"k", k}, {"subset", chain->subsets[k]}, {"epsilon", chain->epsilons[k]}};
        if (k < chain->epsilon_tuples.size()) level["epsilon_tuple"] = chain->epsilon_tuples[k];
        j["levels"].push_back(level);
      }
    }
    return dump(j);
  }
  if (!chain) return f == Format::csv ? "k,subset,epsilon\n" : "none\n";
  std::ostringstream out;
  if (f == Format::csv) out << "k,subset,epsilon\n";
  for (std::size_t k = 0; k < chain->subsets.size(); ++k) {
    std::string eps = std::to_string(chain->epsilons[k]);
    if (k < chain->epsilon_tuples.size()) {
      eps = "";
      for (std::size_t i = 0; i < chain->epsilon_tuples[k].size(); ++i)
        eps += (i ? " " : "") + std::to_string(chain->epsilon_tuples[k][i]);
      if (f == Format::text) eps = "(" + eps + ")";
    }
    if (f == Format::csv) {
      std::string items;
      for (std::size_t i = 0; i < chain->subsets[k].size(); ++i)
        items += (i ? " " : "") + std::to_string(chain->subsets[k][i]);
      out << k << "," << items << "," << eps << "\n";
    } else {
      out << "X_" << k << " = " << set_text(chain->subsets[k]) << "  epsilon_" << k << " = " << eps << "\n";
    }
  }
  return out.str();
}

}  // namespace mulrep
