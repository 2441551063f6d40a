#include "report.hpp"

namespace hypgrp::report {

  json ratio(Ratio const& r) {
    return {{"num", r.num}, {"den", r.den}, {"value", r.value()}};
  }

  json ball(CayleyBall const& b, TrivialityOracle const& o) {
    json elements = json::array();
    for (Word const& w : b.elements) {
      elements.push_back(o.format(w));
    }
    return {{"center", o.format(b.center)},
            {"radius", b.radius},
            {"size", b.size()},
            {"elements", std::move(elements)},
            {"distances", b.distances},
            {"adjacency", b.adjacency}};
  }

  json product(RelatorProduct const& p, TrivialityOracle const& o) {
    json factors = json::array();
    for (Factor const& f : p.factors) {
      factors.push_back({{"conjugator", o.format(f.conjugator)},
                         {"relator", f.relator},
                         {"exponent", f.exponent}});
    }
    return factors;
  }

  json stats(SearchStats const& s) {
    return {{"nodes", s.nodes},
            {"sequences", s.sequences},
            {"pruned_sequences", s.pruned_sequences},
            {"levels", s.levels}};
  }

  json certificate(AreaCertificate const& c, TrivialityOracle const& o) {
    auto const cost = product_cost(o.presentation(), c.witness);
    return {{"area", c.value},
            {"exact", c.exact},
            {"witness", product(c.witness, o)},
            {"conjugator_length", cost.conjugator_length},
            {"relator_cost", cost.relator_cost},
            {"search", stats(c.stats)}};
  }

  json scan(ScanReport const& r, TrivialityOracle const& o) {
    json entries = json::array();
    for (ScanEntry const& e : r.entries) {
      entries.push_back({{"word", o.format(e.word)},
                         {"length", e.length},
                         {"area", e.area},
                         {"exact", e.exact},
                         {"ratio", ratio(e.ratio)},
                         {"witness", product(e.witness, o)},
                         {"search", stats(e.stats)}});
    }
    json undecided = json::array();
    for (Word const& w : r.undecided) {
      undecided.push_back(o.format(w));
    }
    return {{"entries", std::move(entries)},
            {"undecided", std::move(undecided)},
            {"candidates", r.candidates},
            {"vacuous", r.vacuous()},
            {"sup_ratio", r.sup_ratio ? ratio(*r.sup_ratio) : json(nullptr)},
            {"all_exact", r.all_exact}};
  }

  json comparability(Comparability const& c, TrivialityOracle const& o) {
    return {{"lambda1", ratio(c.lambda1)},
            {"lambda2", ratio(c.lambda2)},
            {"pairs", c.pairs},
            {"lambda1_witness", o.format(c.lambda1_witness)},
            {"lambda2_witness", o.format(c.lambda2_witness)}};
  }

  json invariance(LeftInvarianceReport const& r, TrivialityOracle const& o) {
    json entries = json::array();
    for (auto const& e : r.entries) {
      entries.push_back({{"phi", o.format(e.phi)},
                         {"psi", o.format(e.psi)},
                         {"before", e.before},
                         {"after", e.after}});
    }
    return {{"delta", o.format(r.delta)},
            {"checks", r.entries.size()},
            {"violations", r.violations},
            {"entries", std::move(entries)}};
  }

  json quasimetric(QuasimetricConstant const& q) {
    return {{"constant", q.value},
            {"degenerate", q.degenerate},
            {"witness", {q.x, q.y, q.z}}};
  }

  json covers(CoverReport const& c) {
    json per = json::array();
    for (RadiusCover const& r : c.per_radius) {
      per.push_back({{"radius", r.radius},
                     {"count", r.count},
                     {"center", r.center},
                     {"cover", r.cover}});
    }
    return {{"radii", c.radii}, {"per_radius", std::move(per)},
            {"constant", c.constant}};
  }

  json measure(MeasureDoubling const& m) {
    return {{"constant", m.c2}, {"center", m.x}, {"radius", m.radius}};
  }

  json fit(DimensionFit const& f) {
    return {{"radii", f.radii},
            {"counts", f.counts},
            {"slope", f.slope},
            {"intercept", f.intercept},
            {"residual", f.residual}};
  }

  json boundary(BoundaryApprox const& b) {
    return {{"rank", b.rank},
            {"depth", b.depth},
            {"points", b.points.size()},
            {"expected_points", boundary_point_count(b.rank, b.depth)}};
  }

}  // namespace hypgrp::report
