#include "core/commands.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "core/catalog.hpp"
#include "core/error.hpp"
#include "core/fourfold.hpp"
#include "core/identity.hpp"

namespace hsf {

namespace {

using json = nlohmann::ordered_json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

json report_json(const VerificationReport& rep) {
  json j;
  j["check"] = rep.check;
  j["num_roots"] = rep.num_roots;
  j["trunc_degree"] = rep.trunc_degree;
  j["passed"] = rep.passed;
  if (rep.first_discrepancy) {
    const Discrepancy& d = *rep.first_discrepancy;
    j["first_discrepancy"] = {{"degree", d.degree},
                              {"monomial", d.monomial},
                              {"lhs", rational_str(d.lhs)},
                              {"rhs", rational_str(d.rhs)}};
  }
  return j;
}

json invariants_json(const FourfoldFixedInvariants& inv) {
  json j;
  j["t"] = inv.t;
  j["k2"] = inv.surface.k2;
  j["chi"] = inv.surface.chi;
  j["euler"] = inv.surface.euler;
  j["signature"] = inv.surface.signature;
  j["ahat"] = rational_str(inv.surface.ahat);
  j["moduli_dim"] = inv.moduli_dim;
  return j;
}

std::string invariants_csv_row(const FourfoldFixedInvariants& inv) {
  std::ostringstream os;
  os << inv.t << ',' << inv.surface.k2 << ',' << inv.surface.chi << ','
     << inv.surface.euler << ',' << inv.surface.signature << ','
     << inv.moduli_dim;
  return os.str();
}

json entry_json(const CatalogEntry& e) {
  json j;
  j["family"] = family_name(e.family);
  json params = json::object();
  for (const auto& [name, value] : e.parameters) params[name] = value;
  j["parameters"] = params;
  json inv = invariants_json(e.invariants);
  for (auto& [key, value] : inv.items()) j[key] = value;
  if (!e.components.empty()) {
    json comps = json::array();
    for (const auto& c : e.components) {
      json cj;
      cj["label"] = c.label;
      if (c.k2) cj["k2"] = *c.k2;
      if (c.chi) cj["chi"] = *c.chi;
      comps.push_back(cj);
    }
    j["components"] = comps;
  }
  return j;
}

json coverage_json(const CoverageReport& cov) {
  json j;
  j["realized"] = cov.realized;
  j["missing"] = cov.missing;
  j["surplus"] = cov.surplus;
  j["complete"] = cov.complete;
  return j;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw Error(ErrorCode::argument, "unknown format '" + name + "'");
}

CommandOutcome cmd_verify(std::vector<int> roots, int degree, Format fmt) {
  if (degree < 0)
    throw Error(ErrorCode::argument, "degree must be >= 0");
  if (roots.empty())
    throw Error(ErrorCode::argument, "need at least one root count");
  for (int m : roots)
    if (m < 1) throw Error(ErrorCode::argument, "root counts must be >= 1");
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

  std::vector<VerificationReport> reports;
  reports.push_back(verify_per_root(degree));
  for (int m : roots) {
    reports.push_back(verify_product(m, degree));
    reports.push_back(verify_top_degree(m));
  }

  CommandOutcome out;
  for (const auto& rep : reports)
    if (!rep.passed) out.verify_failed = true;

  switch (fmt) {
    case Format::json: {
      json j;
      j["command"] = "verify";
      j["parameters"] = {{"roots", roots}, {"degree", degree}};
      json results = json::array();
      for (const auto& rep : reports) results.push_back(report_json(rep));
      j["results"] = results;
      out.output = dump(j);
      break;
    }
    case Format::csv: {
      std::ostringstream os;
      os << "check,num_roots,trunc_degree,passed,discrepancy_degree,"
            "discrepancy_monomial,lhs,rhs\n";
      for (const auto& rep : reports) {
        os << rep.check << ',' << rep.num_roots << ',' << rep.trunc_degree
           << ',' << (rep.passed ? "true" : "false") << ',';
        if (rep.first_discrepancy) {
          const Discrepancy& d = *rep.first_discrepancy;
          os << d.degree << ',' << d.monomial << ',' << rational_str(d.lhs)
             << ',' << rational_str(d.rhs);
        } else {
          os << ",,,";
        }
        os << '\n';
      }
      out.output = os.str();
      break;
    }
    case Format::text: {
      std::ostringstream os;
      for (const auto& rep : reports) {
        os << (rep.passed ? "PASS" : "FAIL") << ' ' << rep.check
           << " (roots=" << rep.num_roots << ", degree=" << rep.trunc_degree
           << ")";
        if (rep.first_discrepancy) {
          const Discrepancy& d = *rep.first_discrepancy;
          os << ": first discrepancy at degree " << d.degree << ", monomial "
             << d.monomial << ", lhs=" << rational_str(d.lhs)
             << ", rhs=" << rational_str(d.rhs);
        }
        os << '\n';
      }
      out.output = os.str();
      break;
    }
  }
  return out;
}

CommandOutcome cmd_table(Format fmt) {
  std::vector<CorollaryRow> rows = corollary_table();
  CommandOutcome out;
  switch (fmt) {
    case Format::json: {
      json j;
      j["command"] = "table";
      j["parameters"] = json::object();
      json results = json::array();
      for (const auto& row : rows)
        results.push_back(
            {{"k2", row.k2}, {"chi", row.chi}, {"traces", row.traces}});
      j["results"] = results;
      out.output = dump(j);
      break;
    }
    case Format::csv: {
      std::ostringstream os;
      os << "k2,chi,traces\n";
      for (const auto& row : rows)
        os << row.k2 << ',' << row.chi << ',' << join_ints(row.traces, ';')
           << '\n';
      out.output = os.str();
      break;
    }
    case Format::text: {
      std::ostringstream os;
      os << "K^2    chi   traces\n";
      for (const auto& row : rows) {
        std::string k2 = std::to_string(row.k2);
        std::string chi = std::to_string(row.chi);
        os << k2 << std::string(7 - k2.size(), ' ') << chi
           << std::string(6 - chi.size(), ' ') << join_ints(row.traces, ',')
           << '\n';
      }
      out.output = os.str();
      break;
    }
  }
  return out;
}

CommandOutcome cmd_invariants(int t, Format fmt) {
  FourfoldFixedInvariants inv = invariants_from_trace(t);
  CommandOutcome out;
  switch (fmt) {
    case Format::json: {
      json j;
      j["command"] = "invariants";
      j["parameters"] = {{"t", t}};
      j["results"] = invariants_json(inv);
      out.output = dump(j);
      break;
    }
    case Format::csv:
      out.output = "t,k2,chi,euler,signature,moduli_dim\n" +
                   invariants_csv_row(inv) + "\n";
      break;
    case Format::text: {
      std::ostringstream os;
      os << "t          = " << inv.t << '\n'
         << "K^2        = " << inv.surface.k2 << '\n'
         << "chi(O)     = " << inv.surface.chi << '\n'
         << "e          = " << inv.surface.euler << '\n'
         << "signature  = " << inv.surface.signature << '\n'
         << "A-hat      = " << rational_str(inv.surface.ahat) << '\n'
         << "moduli dim = " << inv.moduli_dim << '\n';
      out.output = os.str();
      break;
    }
  }
  return out;
}

CommandOutcome cmd_catalog(const std::optional<std::string>& family,
                           Format fmt) {
  std::vector<CatalogEntry> entries;
  bool with_coverage = !family.has_value();
  if (family) {
    std::optional<Family> f = family_from_name(*family);
    if (!f)
      throw Error(ErrorCode::unknown_family,
                  "unknown family '" + *family + "'");
    switch (*f) {
      case Family::hilbert_square:
        // Sweep of curve Euler numbers giving an admissible trace.
        for (int e = -20; e <= 20; e += 2) entries.push_back(hilbert_square(e));
        break;
      case Family::sextic_double_plane:
        for (int s = 0; s <= 10; ++s) entries.push_back(sextic_double_plane(s));
        break;
      case Family::nikulin_curves:
        for (int r = 1; r <= 10; ++r) entries.push_back(nikulin_curves(r));
        break;
      case Family::epw_double_sextic:
        entries.push_back(epw_double_sextic());
        break;
      case Family::bitangent_surface:
        entries.push_back(bitangent_surface());
        break;
      case Family::cubic_fourfold_fano:
        entries.push_back(cubic_fourfold_fano());
        break;
    }
  } else {
    entries = full_catalog();
  }

  CommandOutcome out;
  switch (fmt) {
    case Format::json: {
      json j;
      j["command"] = "catalog";
      j["parameters"] = json::object();
      if (family) j["parameters"]["family"] = *family;
      json results;
      json jentries = json::array();
      for (const auto& e : entries) jentries.push_back(entry_json(e));
      results["entries"] = jentries;
      if (with_coverage) results["coverage"] = coverage_json(trace_coverage());
      j["results"] = results;
      out.output = dump(j);
      break;
    }
    case Format::csv: {
      std::ostringstream os;
      os << "family,param,t,k2,chi,euler,signature,moduli_dim\n";
      for (const auto& e : entries) {
        os << family_name(e.family) << ',';
        if (!e.parameters.empty()) os << e.parameters.front().second;
        os << ',' << invariants_csv_row(e.invariants) << '\n';
      }
      out.output = os.str();
      break;
    }
    case Format::text: {
      std::ostringstream os;
      for (const auto& e : entries) {
        os << family_name(e.family);
        for (const auto& [name, value] : e.parameters)
          os << " " << name << "=" << value;
        os << ": t=" << e.t << " K^2=" << e.invariants.surface.k2
           << " chi=" << e.invariants.surface.chi
           << " e=" << e.invariants.surface.euler
           << " moduli=" << e.invariants.moduli_dim;
        if (!e.components.empty()) {
          os << " components=[";
          for (size_t i = 0; i < e.components.size(); ++i) {
            const auto& c = e.components[i];
            if (i) os << "; ";
            os << c.label;
            if (c.k2 && c.chi) os << "(" << *c.k2 << "," << *c.chi << ")";
          }
          os << "]";
        }
        os << '\n';
      }
      if (with_coverage) {
        CoverageReport cov = trace_coverage();
        os << "coverage: " << (cov.complete ? "complete" : "incomplete")
           << " (" << cov.realized.size() << " traces realized";
        if (!cov.missing.empty())
          os << ", missing " << join_ints(cov.missing, ',');
        os << ")\n";
      }
      out.output = os.str();
      break;
    }
  }
  return out;
}

}  // namespace hsf
