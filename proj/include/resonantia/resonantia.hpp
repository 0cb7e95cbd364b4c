#pragma once

#include "canonical.hpp"
#include "cuts.hpp"
#include "graph.hpp"
#include "harness.hpp"
#include "io.hpp"
#include "matching.hpp"
#include "patterns.hpp"
#include "resonance.hpp"
#include "spiral.hpp"
