#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bayesvote/axioms.hpp"
#include "bayesvote/experiments.hpp"
#include "bayesvote/io.hpp"
#include "bayesvote/models.hpp"
#include "bayesvote/oracle.hpp"

namespace py = pybind11;
using namespace bayesvote;

namespace {

Profile profile_from_rankings(const std::vector<std::vector<int>>& rankings,
                              const std::vector<Count>& counts) {
  if (rankings.empty()) throw std::invalid_argument("at least one vote required");
  Profile p(AlternativeSet(static_cast<int>(rankings[0].size())), VoteKind::linear);
  for (size_t i = 0; i < rankings.size(); ++i)
    p.add(LinearOrder(rankings[i]), counts.empty() ? 1 : counts.at(i));
  return p;
}

std::vector<int> winner_list(const WinnerSet& w) { return w.alternatives; }

}  // namespace

PYBIND11_MODULE(_bayesvote, m) {
  m.doc() = "Voting rules as Bayesian estimators: Kemeny, fb1, fb2, and g";

  py::class_<LinearOrder>(m, "LinearOrder")
      .def(py::init<std::vector<int>>())
      .def_readonly("ranking", &LinearOrder::ranking)
      .def("__repr__", [](const LinearOrder& v) {
        std::ostringstream out;
        out << "LinearOrder([";
        for (size_t i = 0; i < v.ranking.size(); ++i)
          out << (i ? ", " : "") << v.ranking[i];
        out << "])";
        return out.str();
      });

  py::class_<Tournament>(m, "Tournament")
      .def(py::init<int, std::vector<uint8_t>>())
      .def("m", &Tournament::m)
      .def("wins", &Tournament::wins)
      .def("as_linear_order", &Tournament::as_linear_order);

  py::class_<Profile>(m, "Profile")
      .def_static("from_rankings", &profile_from_rankings, py::arg("rankings"),
                  py::arg("counts") = std::vector<Count>{})
      .def_static("from_text",
                  [](const std::string& text) {
                    std::istringstream in(text);
                    return io::read_profile(in);
                  })
      .def("to_text", [](const Profile& p) { return io::write_profile(p); })
      .def("total", &Profile::total)
      .def("m", &Profile::m);

  m.def("kendall",
        [](const std::vector<int>& x, const std::vector<int>& y) {
          return kendall(LinearOrder(x), LinearOrder(y));
        });

  m.def("wmg_matrix", [](const Profile& p) {
    const auto g = wmg(p);
    return g.w;
  });

  m.def("mcgarvey_profile", [](const std::vector<std::vector<Count>>& w) {
    WeightedMajorityGraph g(static_cast<int>(w.size()));
    g.w = w;
    return mcgarvey(g);
  });

  m.def("kemeny_winners", [](const Profile& p) { return winner_list(kemeny_winners(p)); });
  m.def("fb1_winners", [](const Profile& p, double phi) {
    return winner_list(winners(fb1_log_scores(p, phi)));
  });
  m.def("fb2_winners", [](const Profile& p, double phi) {
    return winner_list(winners(fb2_risks(p, phi)));
  });
  m.def("g_winners", [](const Profile& p) { return winner_list(winners(g_scores(p))); });

  m.def("fb2_risk_values", [](const Profile& p, double phi) {
    return fb2_risks(p, phi).values;
  });
  m.def("fb1_top_posteriors", &fb1_top_posteriors);
  m.def("g_score_values", [](const Profile& p) { return g_scores(p).values; });
  m.def("kemeny_forced_top_values", [](const Profile& p) {
    return kemeny_forced_top_scores(p).values;
  });

  m.def("sample_mallows",
        [](const std::vector<int>& w, double phi, Count n, uint64_t seed) {
          RandomState rng(seed);
          return sample_mallows(LinearOrder(w), phi, n, rng);
        });
  m.def("sample_condorcet",
        [](const Tournament& w, double phi, Count n, const std::string& kind,
           uint64_t seed) {
          RandomState rng(seed);
          return sample_condorcet(
              w, phi, n, kind == "linear" ? VoteKind::linear : VoteKind::tournament,
              rng);
        });

  m.def("p_star_profile", &p_star_profile);
  m.def("closed_form_ratio", [](const std::string& kind, int m, int k, double phi) {
    RatioKind rk;
    if (kind == "fb1_condorcet") rk = RatioKind::fb1_condorcet;
    else if (kind == "fb2_condorcet") rk = RatioKind::fb2_condorcet;
    else if (kind == "fb1_consistency") rk = RatioKind::fb1_consistency;
    else if (kind == "fb2_consistency") rk = RatioKind::fb2_consistency;
    else throw std::invalid_argument("unknown ratio kind '" + kind + "'");
    return closed_form_ratio(rk, m, k, phi);
  });
}
