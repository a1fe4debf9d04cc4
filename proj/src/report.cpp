#include "bmgroups/report.hpp"

#include <sstream>

#include "bmgroups/invariants.hpp"

namespace bmg {

AnalysisReport analyze(BMDatum const& datum, int h3_bound) {
  auto const tm = build_transition_matrices(datum);
  auto const h = check_h_conditions(tm, h3_bound);
  auto const k = k_groups(datum, tm);
  auto const inv = conjecture_checks(datum, k.C, k.identity_class_order);

  AnalysisReport r;
  r.m = datum.m();
  r.n = datum.n();
  r.alpha = datum.alpha();
  r.beta = datum.beta();
  r.rho = datum.rho();
  r.h_conditions = {h.h0,
                    h.h1a,
                    h.h1b,
                    h.h2,
                    h.h3(),
                    h3_bound,
                    h.h3_witnesses.size() + h.h3_failures.size(),
                    h.h3_failures,
                    h.degree_sums_ok};
  r.C = k.C;
  r.K0 = k.K0;
  r.K1 = k.K1;
  r.H1 = inv.H1;
  r.identity_class_order = k.identity_class_order.get_si();
  r.bound_check = to_string(k.bound_check);
  r.chi = inv.chi;
  r.h2_rank = inv.h2_rank;
  r.rank_conjecture_holds = inv.rank_conjecture_holds;
  r.identity_order_equals_rho = inv.identity_order_equals_rho;
  return r;
}

nlohmann::ordered_json group_json(AbelianGroup const& G) {
  nlohmann::ordered_json j;
  j["rank"] = G.rank();
  auto& t = j["torsion"] = nlohmann::ordered_json::array();
  for (auto const& d : G.invariant_factors()) {
    t.push_back(d.get_str());
  }
  j["invariant_factors"] = G.to_string();
  j["primary"] = G.table_notation();
  return j;
}

AbelianGroup group_from_json(nlohmann::ordered_json const& j) {
  std::vector<Integer> factors;
  for (auto const& d : j.at("torsion")) {
    factors.emplace_back(d.get<std::string>());
  }
  AbelianGroup G(j.at("rank").get<std::size_t>(), factors);
  if (G.to_string() != j.at("invariant_factors").get<std::string>()
      || G.table_notation() != j.at("primary").get<std::string>()) {
    throw std::invalid_argument("group renderings disagree with rank/torsion");
  }
  return G;
}

nlohmann::ordered_json to_json(AnalysisReport const& r) {
  nlohmann::ordered_json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["alpha"] = r.alpha;
  j["beta"] = r.beta;
  j["rho"] = r.rho;
  auto& h = j["h_conditions"];
  h["h0"] = r.h_conditions.h0;
  h["h1a"] = r.h_conditions.h1a;
  h["h1b"] = r.h_conditions.h1b;
  h["h2"] = r.h_conditions.h2;
  h["h3"] = r.h_conditions.h3;
  h["h3_bound"] = r.h_conditions.h3_bound;
  h["h3_periods_checked"] = r.h_conditions.h3_periods_checked;
  h["h3_failures"] = nlohmann::ordered_json::array();
  for (auto [x, y] : r.h_conditions.h3_failures) {
    h["h3_failures"].push_back({x, y});
  }
  h["degree_sums_ok"] = r.h_conditions.degree_sums_ok;
  j["C"] = group_json(r.C);
  j["K0"] = group_json(r.K0);
  j["K1"] = group_json(r.K1);
  j["H1"] = group_json(r.H1);
  j["identity_class_order"] = r.identity_class_order;
  j["bound_check"] = r.bound_check;
  j["chi"] = r.chi;
  j["h2_rank"] = r.h2_rank;
  j["rank_conjecture_holds"] = r.rank_conjecture_holds;
  j["identity_order_equals_rho"] = r.identity_order_equals_rho;
  return j;
}

AnalysisReport report_from_json(nlohmann::ordered_json const& j) {
  AnalysisReport r;
  r.m = j.at("m").get<int>();
  r.n = j.at("n").get<int>();
  r.alpha = j.at("alpha").get<int>();
  r.beta = j.at("beta").get<int>();
  r.rho = j.at("rho").get<long>();
  auto const& h = j.at("h_conditions");
  r.h_conditions.h0 = h.at("h0").get<bool>();
  r.h_conditions.h1a = h.at("h1a").get<bool>();
  r.h_conditions.h1b = h.at("h1b").get<bool>();
  r.h_conditions.h2 = h.at("h2").get<bool>();
  r.h_conditions.h3 = h.at("h3").get<bool>();
  r.h_conditions.h3_bound = h.at("h3_bound").get<int>();
  r.h_conditions.h3_periods_checked = h.at("h3_periods_checked").get<std::size_t>();
  for (auto const& p : h.at("h3_failures")) {
    r.h_conditions.h3_failures.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  }
  r.h_conditions.degree_sums_ok = h.at("degree_sums_ok").get<bool>();
  r.C = group_from_json(j.at("C"));
  r.K0 = group_from_json(j.at("K0"));
  r.K1 = group_from_json(j.at("K1"));
  r.H1 = group_from_json(j.at("H1"));
  r.identity_class_order = j.at("identity_class_order").get<long>();
  r.bound_check = j.at("bound_check").get<std::string>();
  r.chi = j.at("chi").get<long>();
  r.h2_rank = j.at("h2_rank").get<long>();
  r.rank_conjecture_holds = j.at("rank_conjecture_holds").get<bool>();
  r.identity_order_equals_rho = j.at("identity_order_equals_rho").get<bool>();
  return r;
}

std::string to_text(AnalysisReport const& r) {
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  auto group = [](AbelianGroup const& G) { return G.to_string() + "   " + G.table_notation(); };
  auto const& h = r.h_conditions;
  std::ostringstream out;
  out << "degrees            m=" << r.m << " n=" << r.n << " (alpha=" << r.alpha
      << ", beta=" << r.beta << ")\n";
  out << "H0 H1a H1b H2      " << yes(h.h0) << ' ' << yes(h.h1a) << ' ' << yes(h.h1b) << ' '
      << yes(h.h2) << '\n';
  out << "H3 (|p_i| <= " << h.h3_bound << ")    " << yes(h.h3) << ", " << h.h3_periods_checked
      << " periods, " << h.h3_failures.size() << " failures\n";
  out << "degree sums        " << yes(h.degree_sums_ok) << '\n';
  out << "C                  " << group(r.C) << '\n';
  out << "K0 = K1            " << group(r.K0) << '\n';
  out << "H1                 " << group(r.H1) << '\n';
  out << "chi                " << r.chi << '\n';
  out << "rank H2            " << r.h2_rank << '\n';
  out << "rho                " << r.rho << '\n';
  out << "order of [1]       " << r.identity_class_order << " (" << r.bound_check << ")\n";
  out << "rank C = rank H2   " << yes(r.rank_conjecture_holds) << '\n';
  out << "order [1] = rho    " << yes(r.identity_order_equals_rho) << '\n';
  return out.str();
}

}  // namespace bmg
