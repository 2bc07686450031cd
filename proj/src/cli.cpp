#include "adg/cli.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "adg/delta.hpp"
#include "adg/ffgraph.hpp"
#include "adg/isomorph.hpp"

namespace adg {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string chain_names(const std::vector<IsoStep>& chain, const char* sep) {
  std::string out;
  for (const auto& s : chain) {
    if (!out.empty()) out += sep;
    out += s.name();
  }
  return out;
}

std::string json_chain(const std::vector<IsoStep>& chain) {
  std::string out = "[";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += ",";
    out += "\"" + chain[i].name() + "\"";
  }
  return out + "]";
}

std::string json_pair_fields(const MonomialPair& p) {
  std::ostringstream os;
  os << "\"s\":" << p.s << ",\"t\":" << p.t << ",\"u\":" << p.u << ",\"v\":" << p.v;
  return os.str();
}

std::string json_vertices(const std::vector<Vertex>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    const auto& v = vs[i];
    out += std::string("{\"partite\":\"") +
           (v.partite == Partite::Point ? "point" : "line") +
           "\",\"c1\":" + fmt_double(v.c1) + ",\"c2\":" + fmt_double(v.c2) +
           ",\"c3\":" + fmt_double(v.c3) + "}";
  }
  return out + "]";
}

std::string csv_canonical(const GirthResult& r) {
  if (!r.canonical) return "";
  return "k=" + std::to_string(r.canonical->k) + ";n=" + std::to_string(r.canonical->n);
}

std::string json_verification(const VerifyReport& rep) {
  std::ostringstream os;
  os << "{\"cycle_length\":" << rep.cycle_length
     << ",\"max_residual\":" << fmt_double(rep.max_residual)
     << ",\"min_separation\":" << fmt_double(rep.min_separation)
     << ",\"pass\":" << (rep.pass ? "true" : "false") << "}";
  return os.str();
}

}  // namespace

std::string classify_record(const MonomialPair& p, const RunConfig& cfg) {
  const GirthResult r = classify(p, cfg.max_exp);
  std::vector<IsoStep> chain;
  if (r.girth == 8)
    chain = canonical_chain_girth8(p);
  else if (r.normalized)
    chain = r.normalized->chain;

  if (cfg.format == OutFormat::Csv) {
    std::ostringstream os;
    os << "s,t,u,v,girth,case,canonical,chain\n"
       << p.s << "," << p.t << "," << p.u << "," << p.v << "," << r.girth << ","
       << to_string(r.label) << "," << csv_canonical(r) << ","
       << chain_names(chain, "|") << "\n";
    return os.str();
  }

  std::ostringstream os;
  os << "{" << json_pair_fields(p) << ",\"girth\":" << r.girth << ",\"case\":\""
     << to_string(r.label) << "\"";
  if (r.normalized) {
    const auto& nf = *r.normalized;
    os << ",\"normalized\":{\"j\":" << nf.j << ",\"k\":" << nf.k
       << ",\"m\":" << nf.m << ",\"n\":" << nf.n
       << ",\"chain\":" << json_chain(nf.chain) << "}";
  }
  if (r.canonical)
    os << ",\"canonical\":{\"k\":" << r.canonical->k << ",\"n\":" << r.canonical->n
       << ",\"chain\":" << json_chain(chain) << "}";
  os << "}\n";
  return os.str();
}

std::string table_csv(int max_exp) {
  if (max_exp < 1 || max_exp > kMaxExponentDefault)
    throw std::invalid_argument("table: max_exp out of range");
  std::ostringstream os;
  os << "s,t,u,v,girth,case,canonical\n";
  for (int s = 1; s <= max_exp; ++s)
    for (int t = 1; t <= max_exp; ++t)
      for (int u = 1; u <= max_exp; ++u)
        for (int v = 1; v <= max_exp; ++v) {
          const MonomialPair p{s, t, u, v};
          const GirthResult r = classify(p);
          os << s << "," << t << "," << u << "," << v << "," << r.girth << ","
             << to_string(r.label) << "," << csv_canonical(r) << "\n";
        }
  return os.str();
}

namespace {

struct WitnessBuild {
  CycleWitness w;
  std::string method;
  std::vector<IsoStep> chain;
  bool has_root = false;
  double root = 0.0, z = 0.0;
};

WitnessBuild build_witness(const MonomialPair& p, const RunConfig& cfg) {
  const GirthResult r = classify(p, cfg.max_exp);
  WitnessBuild b;
  switch (r.girth) {
    case 4:
      b.w = witness_girth4(p);
      b.method = "direct4";
      break;
    case 6:
      if (r.normalized) {
        const auto plan = plan_girth6_mixed(p, cfg.root_tol);
        b.w = witness_girth6_mixed(p, cfg.root_tol);
        b.method = "prop" + std::to_string(plan.prop);
        b.chain = plan.nf.chain;
        b.has_root = true;
        b.root = plan.root;
        b.z = plan.z;
      } else {
        b.w = witness_girth6_same_parity(p);
        b.method = "direct6";
      }
      break;
    default:
      b.w = witness_girth8(p);
      b.method = "direct8";
      b.chain = canonical_chain_girth8(p);
      break;
  }
  return b;
}

}  // namespace

std::string witness_record(const MonomialPair& p, const RunConfig& cfg) {
  const GirthResult r = classify(p, cfg.max_exp);
  const WitnessBuild b = build_witness(p, cfg);
  const VerifyReport rep = verify_witness(b.w, cfg.residual_tol);

  // cycle type = first coordinates in list order
  std::string ta = "[", tx = "[";
  for (std::size_t i = 0; i < b.w.vertices.size(); ++i) {
    const auto& v = b.w.vertices[i];
    auto& dst = v.partite == Partite::Point ? ta : tx;
    if (dst.size() > 1) dst += ",";
    dst += fmt_double(v.c1);
  }
  ta += "]";
  tx += "]";

  std::ostringstream os;
  os << "{" << json_pair_fields(p) << ",\"girth\":" << r.girth << ",\"case\":\""
     << to_string(r.label) << "\",\"method\":\"" << b.method << "\""
     << ",\"cycle_type\":{\"a\":" << ta << ",\"x\":" << tx << "}";
  if (b.has_root)
    os << ",\"root\":" << fmt_double(b.root) << ",\"z\":" << fmt_double(b.z);
  os << ",\"chain\":" << json_chain(b.chain)
     << ",\"vertices\":" << json_vertices(b.w.vertices)
     << ",\"max_residual\":" << fmt_double(b.w.max_residual)
     << ",\"verification\":" << json_verification(rep) << "}\n";
  return os.str();
}

std::string certify8_record(const MonomialPair& p, int trials, const RunConfig& cfg) {
  const GirthResult r = classify(p, cfg.max_exp);
  if (r.girth != 8)
    throw std::invalid_argument("certify8: pair is not girth eight");

  const CertificateReport cert = certify_no_6cycle(p, trials, cfg.seed);
  const CycleWitness w = witness_girth8(p);
  const VerifyReport wrep = verify_witness(w, cfg.residual_tol);
  const bool obstruction = has_real_4cycle_obstruction(f2_of(p)) ||
                           has_real_4cycle_obstruction(f3_of(p));
  const bool pass = cert.pass && wrep.pass && obstruction;

  std::ostringstream os;
  os << "{" << json_pair_fields(p) << ",\"girth\":8,\"case\":\""
     << to_string(r.label) << "\",\"canonical\":{\"k\":" << cert.canonical.k
     << ",\"n\":" << cert.canonical.n << "}"
     << ",\"trials\":" << trials << ",\"seed\":" << cfg.seed
     << ",\"monotonicity\":{\"samples\":" << cert.monotonic_samples
     << ",\"violations\":" << cert.monotonic_violations << "}"
     << ",\"positivity\":{\"samples\":" << cert.positivity_samples
     << ",\"violations\":" << cert.positivity_violations
     << ",\"err_H_at_root\":" << fmt_double(cert.max_err_H_at_root)
     << ",\"err_H_at_zero\":" << fmt_double(cert.max_err_H_at_zero) << "}"
     << ",\"determinant\":{\"samples\":" << cert.determinant_samples
     << ",\"violations\":" << cert.determinant_violations
     << ",\"min_abs\":" << fmt_double(cert.min_abs_determinant) << "}"
     << ",\"no_4cycle_obstruction\":" << (obstruction ? "true" : "false")
     << ",\"witness\":" << json_verification(wrep)
     << ",\"pass\":" << (pass ? "true" : "false") << "}\n";
  return os.str();
}

namespace {

struct OracleRow {
  int girth = 0;
  bool d2 = false, d3 = false;
  bool have_d3 = false;
  bool agree = true;
};

OracleRow oracle_row(int q, const MonomialPair& p) {
  OracleRow row;
  const auto g = bfs_girth(build_graph(q, p));
  row.girth = g.value_or(0);
  row.d2 = bruteforce_delta_cycles(q, p, 2);
  row.have_d3 = q <= 9;
  if (row.have_d3) row.d3 = bruteforce_delta_cycles(q, p, 3);
  row.agree = ((row.girth == 4) == row.d2);
  if (row.have_d3) row.agree = row.agree && ((row.girth == 6) == (!row.d2 && row.d3));
  return row;
}

}  // namespace

std::string oracle_csv(int q, int max_exp, bool* all_agree) {
  if (!is_prime(q)) throw std::invalid_argument("oracle: q must be prime");
  if (max_exp < 1 || max_exp > kMaxExponentDefault)
    throw std::invalid_argument("oracle: max_exp out of range");
  bool agree = true;
  std::ostringstream os;
  os << "q,s,t,u,v,bfs_girth,delta2,delta3,agree\n";
  for (int s = 1; s <= max_exp; ++s)
    for (int t = 1; t <= max_exp; ++t)
      for (int u = 1; u <= max_exp; ++u)
        for (int v = 1; v <= max_exp; ++v) {
          const MonomialPair p{s, t, u, v};
          const OracleRow row = oracle_row(q, p);
          agree = agree && row.agree;
          os << q << "," << s << "," << t << "," << u << "," << v << ","
             << (row.girth ? std::to_string(row.girth) : std::string("acyclic"))
             << "," << (row.d2 ? 1 : 0) << ","
             << (row.have_d3 ? std::to_string(row.d3 ? 1 : 0) : std::string())
             << "," << (row.agree ? 1 : 0) << "\n";
        }
  if (all_agree) *all_agree = agree;
  return os.str();
}

std::string curve_csv(int prop, int j, int k, int m, int n,
                      double lo, double hi, int steps) {
  if (steps < 1) throw std::invalid_argument("curve: steps must be >= 1");
  if (!(lo < hi)) throw std::invalid_argument("curve: need lo < hi");
  ScalarEquation eq;
  switch (prop) {
    case 4: eq = ScalarEquation::prop4(k, n); break;
    case 5: eq = ScalarEquation::prop5(j, k, m, n); break;
    case 6: eq = ScalarEquation::prop6(j, k, m, n); break;
    default: throw std::invalid_argument("curve: prop must be 4, 5 or 6");
  }

  std::ostringstream os;
  os << "x,D,sign_change\n";
  double prev = 0.0;
  bool have_prev = false;
  for (int i = 0; i <= steps; ++i) {
    const double x = i == steps ? hi : lo + (hi - lo) * i / steps;
    const double d = eq(x);
    const bool flip = have_prev && std::isfinite(prev) && std::isfinite(d) &&
                      (d < 0.0) != (prev < 0.0);
    os << fmt_double(x) << "," << fmt_double(d) << "," << (flip ? 1 : 0) << "\n";
    prev = d;
    have_prev = true;
  }
  return os.str();
}

CycleWitness witness_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  CycleWitness w;
  w.pair = MonomialPair::checked(doc.at("s").get<int>(), doc.at("t").get<int>(),
                                 doc.at("u").get<int>(), doc.at("v").get<int>());
  for (const auto& jv : doc.at("vertices")) {
    Vertex v;
    const std::string part = jv.at("partite").get<std::string>();
    if (part == "point")
      v.partite = Partite::Point;
    else if (part == "line")
      v.partite = Partite::Line;
    else
      throw std::invalid_argument("witness JSON: bad partite value");
    v.c1 = jv.at("c1").get<double>();
    v.c2 = jv.at("c2").get<double>();
    v.c3 = jv.at("c3").get<double>();
    w.vertices.push_back(v);
  }
  if (doc.contains("max_residual")) w.max_residual = doc["max_residual"].get<double>();
  return w;
}

std::string verify_record(const CycleWitness& w, const RunConfig& cfg, bool* pass_out) {
  const VerifyReport rep = verify_witness(w, cfg.residual_tol);
  if (pass_out) *pass_out = rep.pass;
  std::ostringstream os;
  os << "{" << json_pair_fields(w.pair)
     << ",\"verification\":" << json_verification(rep);
  if (!rep.detail.empty()) os << ",\"detail\":\"" << rep.detail << "\"";
  os << "}\n";
  return os.str();
}

}  // namespace adg
