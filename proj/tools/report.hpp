#pragma once

// JSON views of library results, shared by the command-line tool.

#include <json.hpp>

#include "hypgrp/boundary.hpp"
#include "hypgrp/cayley.hpp"
#include "hypgrp/isoperimetry.hpp"
#include "hypgrp/quasimetric.hpp"

namespace hypgrp::report {

  using nlohmann::json;

  json ratio(Ratio const& r);
  json ball(CayleyBall const& b, TrivialityOracle const& o);
  json product(RelatorProduct const& p, TrivialityOracle const& o);
  json stats(SearchStats const& s);
  json certificate(AreaCertificate const& c, TrivialityOracle const& o);
  json scan(ScanReport const& r, TrivialityOracle const& o);
  json comparability(Comparability const& c, TrivialityOracle const& o);
  json invariance(LeftInvarianceReport const& r, TrivialityOracle const& o);
  json quasimetric(QuasimetricConstant const& q);
  json covers(CoverReport const& c);
  json measure(MeasureDoubling const& m);
  json fit(DimensionFit const& f);
  json boundary(BoundaryApprox const& b);

}  // namespace hypgrp::report
