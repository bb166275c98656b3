#pragma once

// Umbrella header: diversity-constrained densest-subgraph library.

#include "ddsg/bench.hpp"
#include "ddsg/dalvks.hpp"
#include "ddsg/ddsp.hpp"
#include "ddsg/dense_lp.hpp"
#include "ddsg/errors.hpp"
#include "ddsg/fixtures.hpp"
#include "ddsg/generate.hpp"
#include "ddsg/graph.hpp"
#include "ddsg/io.hpp"
#include "ddsg/lp.hpp"
#include "ddsg/oracle.hpp"
#include "ddsg/peeling.hpp"
#include "ddsg/ratio.hpp"
#include "ddsg/report.hpp"
