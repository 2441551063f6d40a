#pragma once

namespace hypgrp {

  inline constexpr char const* kVersion       = "1.0.0";
  inline constexpr int         kSchemaVersion = 1;

}  // namespace hypgrp
