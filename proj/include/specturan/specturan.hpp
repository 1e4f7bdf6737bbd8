#pragma once

// Umbrella header for the toolkit (everything except the CLI front end,
// which needs vendored third-party headers).

#include "canonical.hpp"
#include "chvatal_hanson.hpp"
#include "constructions.hpp"
#include "detection.hpp"
#include "enumeration.hpp"
#include "flower_spec.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "search.hpp"
#include "spectral.hpp"
#include "stability.hpp"
